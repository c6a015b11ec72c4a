//! Test-only oracles and instance generators.
//!
//! Everything here is deliberately independent of the library's fast paths:
//! the oracles work on plain `Vec<i8>` sign vectors, and the arrangement
//! generator cross-checks its sample points against an exact chamber
//! enumeration by Fourier–Motzkin elimination.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};
use std::path::PathBuf;

use coms_core::arrangement::{Arrangement, Hyperplane, Number, Point};
use coms_core::{GroundSet, Sign, SignSystem, SignVector};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

pub fn fixture(name: &str) -> String {
    std::fs::read_to_string(data_path(name)).unwrap()
}

pub fn sv(values: &[i8]) -> SignVector {
    SignVector::from_i8s(values).unwrap()
}

// ---------------------------------------------------------------------------
// Oracles on raw i8 vectors
// ---------------------------------------------------------------------------

fn raw(x: &SignVector) -> Vec<i8> {
    x.to_i8s()
}

fn compose(x: &[i8], y: &[i8]) -> Vec<i8> {
    x.iter()
        .zip(y)
        .map(|(&a, &b)| if a != 0 { a } else { b })
        .collect()
}

fn negate(x: &[i8]) -> Vec<i8> {
    x.iter().map(|&a| -a).collect()
}

fn below(x: &[i8], y: &[i8]) -> bool {
    x != y && x.iter().zip(y).all(|(&a, &b)| a == 0 || a == b)
}

/// Literal `{X ∈ {-1,0,1}^E : ∀T, X ∘ (±T) ∈ 𝒯}` over all 3^|E| candidates.
pub fn naive_reconstruct(topes: &[SignVector], negate_topes: bool) -> BTreeSet<SignVector> {
    let topes: Vec<Vec<i8>> = topes.iter().map(raw).collect();
    let members: HashSet<Vec<i8>> = topes.iter().cloned().collect();
    let n = topes[0].len();
    let mut out = BTreeSet::new();
    for index in 0..3usize.pow(n as u32) {
        let mut rest = index;
        let x: Vec<i8> = (0..n)
            .map(|_| {
                let d = (rest % 3) as i8 - 1;
                rest /= 3;
                d
            })
            .collect();
        let ok = topes.iter().all(|t| {
            let other = if negate_topes { negate(t) } else { t.clone() };
            members.contains(&compose(&x, &other))
        });
        if ok {
            out.insert(sv(&x));
        }
    }
    out
}

/// `(covered, covering)` pairs by the O(|𝓛|³) definition of covering.
pub fn naive_hasse(system: &SignSystem) -> Vec<(usize, usize)> {
    let xs: Vec<Vec<i8>> = system.iter().map(raw).collect();
    let mut edges = Vec::new();
    for (i, x) in xs.iter().enumerate() {
        for (j, y) in xs.iter().enumerate() {
            if below(x, y) && !xs.iter().any(|z| below(x, z) && below(z, y)) {
                edges.push((i, j));
            }
        }
    }
    edges.sort_unstable();
    edges
}

/// Longest covering chain ending at each element, by memoised recursion.
pub fn naive_heights(system: &SignSystem) -> Vec<usize> {
    let edges = naive_hasse(system);
    let n = system.len();
    let mut memo: Vec<Option<usize>> = vec![None; n];
    fn go(v: usize, edges: &[(usize, usize)], memo: &mut Vec<Option<usize>>) -> usize {
        if let Some(h) = memo[v] {
            return h;
        }
        let h = edges
            .iter()
            .filter(|&&(_, y)| y == v)
            .map(|&(x, _)| go(x, edges, memo) + 1)
            .max()
            .unwrap_or(0);
        memo[v] = Some(h);
        h
    }
    (0..n).map(|v| go(v, &edges, &mut memo)).collect()
}

/// Direct re-evaluation of the FS axiom.
pub fn naive_fs(system: &SignSystem) -> bool {
    let xs: HashSet<Vec<i8>> = system.iter().map(raw).collect();
    xs.iter()
        .all(|x| xs.iter().all(|y| xs.contains(&compose(x, &negate(y)))))
}

pub fn naive_c(system: &SignSystem) -> bool {
    let xs: HashSet<Vec<i8>> = system.iter().map(raw).collect();
    xs.iter()
        .all(|x| xs.iter().all(|y| xs.contains(&compose(x, y))))
}

pub fn naive_sym(system: &SignSystem) -> bool {
    let xs: HashSet<Vec<i8>> = system.iter().map(raw).collect();
    xs.iter().all(|x| xs.contains(&negate(x)))
}

pub fn naive_z(system: &SignSystem) -> bool {
    system.iter().any(|x| x.iter().all(Sign::is_zero))
}

pub fn naive_se(system: &SignSystem) -> bool {
    let xs: Vec<Vec<i8>> = system.iter().map(raw).collect();
    for x in &xs {
        for y in &xs {
            let sep: Vec<usize> = (0..x.len())
                .filter(|&e| x[e] != 0 && x[e] == -y[e])
                .collect();
            let xy = compose(x, y);
            for &e in &sep {
                let found = xs
                    .iter()
                    .any(|z| z[e] == 0 && (0..x.len()).all(|f| sep.contains(&f) || z[f] == xy[f]));
                if !found {
                    return false;
                }
            }
        }
    }
    true
}

pub fn naive_is_com(system: &SignSystem) -> bool {
    naive_fs(system) && naive_se(system)
}

// ---------------------------------------------------------------------------
// Exact rational helpers
// ---------------------------------------------------------------------------

pub type Q = BigRational;

pub fn q(p: i64, d: i64) -> Q {
    Q::new(BigInt::from(p), BigInt::from(d))
}

fn dot(a: &[Q], x: &[Q]) -> Q {
    a.iter().zip(x).fold(Q::zero(), |acc, (u, v)| acc + u * v)
}

/// Solves the square system `rows · x = rhs`; `None` if singular.
fn solve(mut rows: Vec<Vec<Q>>, mut rhs: Vec<Q>) -> Option<Vec<Q>> {
    let n = rows.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !rows[r][col].is_zero())?;
        rows.swap(col, pivot);
        rhs.swap(col, pivot);
        let pivot_row = rows[col].clone();
        let pivot_rhs = rhs[col].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let factor = &row[col] / &pivot_row[col];
                for (entry, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                    *entry -= &factor * p;
                }
                rhs[r] -= &factor * &pivot_rhs;
            }
        }
    }
    Some((0..n).map(|i| &rhs[i] / &rows[i][i]).collect())
}

fn rank(rows: &[Vec<Q>]) -> usize {
    let mut m: Vec<Vec<Q>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = &row[c] / &pivot[c];
                for (entry, p) in row.iter_mut().zip(&pivot).skip(c) {
                    *entry -= &f * p;
                }
            }
        }
        r += 1;
    }
    r
}

/// Strict feasibility of `{x : a_i · x > b_i}` by Fourier–Motzkin elimination.
pub fn strictly_feasible(mut constraints: Vec<(Vec<Q>, Q)>, dimension: usize) -> bool {
    for j in 0..dimension {
        let (mut pos, mut neg, mut keep) = (Vec::new(), Vec::new(), Vec::new());
        for c in constraints {
            if c.0[j].is_positive() {
                pos.push(c);
            } else if c.0[j].is_negative() {
                neg.push(c);
            } else {
                keep.push(c);
            }
        }
        for (ap, bp) in &pos {
            for (an, bn) in &neg {
                let wp = -an[j].clone();
                let wn = ap[j].clone();
                let a: Vec<Q> = ap.iter().zip(an).map(|(u, v)| u * &wp + v * &wn).collect();
                keep.push((a, bp * &wp + bn * &wn));
            }
        }
        constraints = keep;
    }
    constraints.iter().all(|(_, b)| b.is_negative())
}

// ---------------------------------------------------------------------------
// Random arrangements
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct Plane {
    pub normal: Vec<Q>,
    pub offset: Q,
}

impl Plane {
    fn value(&self, x: &[Q]) -> Q {
        dot(&self.normal, x) - &self.offset
    }
}

#[derive(Debug, Clone)]
pub struct Instance {
    pub arrangement: Arrangement,
    pub points: Vec<Point>,
    /// Chamber sign vectors inside the apartment, from exact elimination.
    pub chambers: BTreeSet<SignVector>,
    /// Hyperplanes fixing the apartment, with their required side.
    pub apartment: Vec<(usize, Sign)>,
    pub central: bool,
}

pub struct GeneratorConfig {
    pub dimension: usize,
    pub hyperplanes: usize,
    pub central: bool,
    /// Number of hyperplanes used to cut out an apartment (0 = whole space).
    pub apartment_walls: usize,
}

fn random_plane<R: Rng>(rng: &mut R, n: usize, central: bool) -> Plane {
    loop {
        let normal: Vec<Q> = (0..n).map(|_| q(rng.gen_range(-3..=3), 1)).collect();
        if normal.iter().all(Zero::is_zero) {
            continue;
        }
        let offset = if central {
            Q::zero()
        } else {
            q(rng.gen_range(-6..=6), rng.gen_range(1..=3))
        };
        return Plane { normal, offset };
    }
}

fn sign_of(value: &Q) -> Sign {
    if value.is_zero() {
        Sign::Zero
    } else if value.is_positive() {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

fn sign_vector(planes: &[Plane], x: &[Q]) -> SignVector {
    planes.iter().map(|p| sign_of(&p.value(x))).collect()
}

/// All chamber sign vectors of the arrangement, by testing each of the 2^m
/// sign patterns for strict feasibility.
pub fn exact_chambers(planes: &[Plane], dimension: usize) -> BTreeSet<SignVector> {
    let m = planes.len();
    (0..1usize << m)
        .filter_map(|bits| {
            let signs: Vec<Sign> = (0..m)
                .map(|i| {
                    if bits >> i & 1 == 1 {
                        Sign::Plus
                    } else {
                        Sign::Minus
                    }
                })
                .collect();
            let constraints = planes
                .iter()
                .zip(&signs)
                .map(|(p, s)| {
                    if *s == Sign::Plus {
                        (p.normal.clone(), p.offset.clone())
                    } else {
                        (p.normal.iter().map(|a| -a).collect(), -p.offset.clone())
                    }
                })
                .collect();
            strictly_feasible(constraints, dimension).then(|| SignVector::new(signs))
        })
        .collect()
}

fn vertices(planes: &[Plane], n: usize) -> Vec<Vec<Q>> {
    let mut out: Vec<Vec<Q>> = Vec::new();
    let m = planes.len();
    let mut choose = |idx: &[usize]| {
        let rows = idx.iter().map(|&i| planes[i].normal.clone()).collect();
        let rhs = idx.iter().map(|&i| planes[i].offset.clone()).collect();
        if let Some(v) = solve(rows, rhs) {
            if !out.contains(&v) {
                out.push(v);
            }
        }
    };
    match n {
        1 => (0..m).for_each(|a| choose(&[a])),
        2 => {
            for a in 0..m {
                for b in a + 1..m {
                    choose(&[a, b]);
                }
            }
        }
        3 => {
            for a in 0..m {
                for b in a + 1..m {
                    for c in b + 1..m {
                        choose(&[a, b, c]);
                    }
                }
            }
        }
        _ => unimplemented!("generator supports dimensions 1 to 3"),
    }
    out
}

fn directions<R: Rng>(rng: &mut R, n: usize, extra: usize) -> Vec<Vec<Q>> {
    let mut dirs = Vec::new();
    let span = 2i64;
    let total = (2 * span + 1).pow(n as u32);
    for index in 0..total {
        let mut rest = index;
        let d: Vec<i64> = (0..n)
            .map(|_| {
                let v = rest % (2 * span + 1) - span;
                rest /= 2 * span + 1;
                v
            })
            .collect();
        if d.iter().any(|&v| v != 0) {
            dirs.push(d.into_iter().map(|v| q(v, 1)).collect());
        }
    }
    for _ in 0..extra {
        dirs.push(
            (0..n)
                .map(|_| q(rng.gen_range(-9..=9), rng.gen_range(1..=4)))
                .collect(),
        );
    }
    dirs
}

/// Points `v + δ·d` around every vertex, with `δ` small enough that no
/// hyperplane missing `v` is crossed. Only points off every hyperplane are kept.
fn perturbed_points(planes: &[Plane], verts: &[Vec<Q>], dirs: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let mut pts = Vec::new();
    for v in verts {
        let clearance = planes
            .iter()
            .map(|p| p.value(v).abs())
            .filter(|c| !c.is_zero())
            .min()
            .unwrap_or_else(Q::one);
        for d in dirs {
            let reach = planes
                .iter()
                .map(|p| dot(&p.normal, d).abs())
                .max()
                .unwrap_or_else(Q::zero);
            if reach.is_zero() {
                continue;
            }
            let delta = &clearance / (reach * q(2, 1));
            let x: Vec<Q> = v.iter().zip(d).map(|(a, b)| a + &delta * b).collect();
            if planes.iter().all(|p| !p.value(&x).is_zero()) {
                pts.push(x);
            }
        }
    }
    pts
}

fn to_arrangement(planes: &[Plane]) -> Arrangement {
    let hyperplanes = planes
        .iter()
        .enumerate()
        .map(|(i, p)| {
            Hyperplane::new(
                format!("h{}", i + 1),
                p.normal.iter().cloned().map(Number::Exact).collect(),
                Number::Exact(p.offset.clone()),
            )
            .unwrap()
        })
        .collect();
    Arrangement::new(planes[0].normal.len(), hyperplanes).unwrap()
}

/// Draws an essential arrangement and samples one point per chamber of an
/// apartment. Returns `None` when the draw is degenerate or the perturbation
/// points miss a chamber that exact elimination finds.
pub fn try_generate<R: Rng>(rng: &mut R, config: &GeneratorConfig) -> Option<Instance> {
    let n = config.dimension;
    let planes: Vec<Plane> = (0..config.hyperplanes)
        .map(|_| random_plane(rng, n, config.central))
        .collect();
    let normals: Vec<Vec<Q>> = planes.iter().map(|p| p.normal.clone()).collect();
    if rank(&normals) < n {
        return None;
    }
    let verts = vertices(&planes, n);
    let dirs = directions(rng, n, 40);
    let candidates = perturbed_points(&planes, &verts, &dirs);

    let mut all_chambers = exact_chambers(&planes, n);
    let walls = config.apartment_walls.min(planes.len());
    let chosen = all_chambers
        .iter()
        .nth(rng.gen_range(0..all_chambers.len()))?;
    let apartment: Vec<(usize, Sign)> = (0..walls).map(|i| (i, chosen[i])).collect();
    let inside = |x: &SignVector| apartment.iter().all(|&(i, s)| x[i] == s);
    all_chambers.retain(|c| inside(c));

    let mut seen = BTreeSet::new();
    let mut points = Vec::new();
    for x in candidates {
        let s = sign_vector(&planes, &x);
        if inside(&s) && seen.insert(s) {
            points.push(Point::new(x.into_iter().map(Number::Exact).collect()));
        }
    }
    if seen != all_chambers {
        return None;
    }
    Some(Instance {
        arrangement: to_arrangement(&planes),
        points,
        chambers: all_chambers,
        apartment,
        central: config.central,
    })
}

/// Keeps drawing until `count` instances are produced; panics if the
/// rejection rate is unreasonable.
pub fn generate_many<R: Rng>(rng: &mut R, count: usize, central: bool) -> Vec<Instance> {
    let mut out = Vec::with_capacity(count);
    let mut attempts = 0;
    while out.len() < count {
        attempts += 1;
        assert!(attempts < count * 20, "generator rejected too many draws");
        let dimension = if rng.gen_bool(0.5) { 2 } else { 3 };
        let hyperplanes = rng.gen_range(dimension..=6);
        let apartment_walls = if central || rng.gen_bool(0.5) {
            0
        } else {
            rng.gen_range(1..=2)
        };
        let config = GeneratorConfig {
            dimension,
            hyperplanes,
            central,
            apartment_walls,
        };
        if let Some(instance) = try_generate(rng, &config) {
            out.push(instance);
        }
    }
    out
}

pub fn ground(n: usize) -> GroundSet {
    GroundSet::numbered(n)
}
