//! The covector poset `(𝓛, ≼)`: Hasse diagram, ranks and the f-polynomial.
//!
//! Two rank notions are tracked. The *height* of `X` is the length of the
//! longest covering chain ending at `X`. The *rank* is the cover-graded rank
//! function (`rank(Y) = rank(X) + 1` whenever `X ⋖ Y`), shifted so that its
//! minimum on each connected component of the Hasse diagram is 0. For the
//! face poset of an apartment the graded rank is the face dimension, even
//! when a component has minimal faces of different dimensions. When the
//! diagram admits no graded rank function, the rank falls back to the height.
//!
//! The f-polynomial sums `x^(rank 𝓛 − rank X)` over all covectors.

use std::collections::{BTreeMap, VecDeque};
use std::fmt::{self, Write as _};

use rayon::prelude::*;

use crate::error::{ComError, Result};
use crate::sign::SignVector;
use crate::system::SignSystem;

#[derive(Debug, Clone)]
pub struct CovectorPoset {
    system: SignSystem,
    /// `(covered, covering)` index pairs, sorted.
    hasse: Vec<(usize, usize)>,
    height: Vec<usize>,
    rank: Vec<usize>,
    graded: bool,
    system_rank: usize,
}

impl CovectorPoset {
    pub fn build(system: &SignSystem) -> Result<Self> {
        if system.is_empty() {
            return Err(ComError::EmptySystem);
        }
        let elements = system.covectors();
        let n = elements.len();
        let support: Vec<usize> = elements.iter().map(SignVector::support_size).collect();

        let covers_of: Vec<Vec<usize>> = (0..n)
            .into_par_iter()
            .map(|y| {
                let below: Vec<usize> = (0..n)
                    .filter(|&x| support[x] < support[y] && elements[x].leq_unchecked(&elements[y]))
                    .collect();
                below
                    .iter()
                    .copied()
                    .filter(|&x| {
                        !below.iter().any(|&z| {
                            support[z] > support[x] && elements[x].leq_unchecked(&elements[z])
                        })
                    })
                    .collect()
            })
            .collect();

        let mut hasse: Vec<(usize, usize)> = covers_of
            .iter()
            .enumerate()
            .flat_map(|(y, xs)| xs.iter().map(move |&x| (x, y)))
            .collect();
        hasse.sort_unstable();

        // Strict ≺ increases support size, so ascending support is a topological order.
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| support[i]);
        let mut height = vec![0usize; n];
        for &y in &order {
            height[y] = covers_of[y]
                .iter()
                .map(|&x| height[x] + 1)
                .max()
                .unwrap_or(0);
        }

        let graded_rank = graded_rank(n, &hasse);
        let graded = graded_rank.is_some();
        let rank = graded_rank.unwrap_or_else(|| height.clone());
        let system_rank = rank.iter().copied().max().unwrap_or(0);

        Ok(CovectorPoset {
            system: system.clone(),
            hasse,
            height,
            rank,
            graded,
            system_rank,
        })
    }

    pub fn system(&self) -> &SignSystem {
        &self.system
    }

    pub fn elements(&self) -> &[SignVector] {
        self.system.covectors()
    }

    pub fn len(&self) -> usize {
        self.system.len()
    }

    pub fn is_empty(&self) -> bool {
        self.system.is_empty()
    }

    pub fn hasse(&self) -> &[(usize, usize)] {
        &self.hasse
    }

    pub fn index_of(&self, x: &SignVector) -> Option<usize> {
        self.system.covectors().binary_search(x).ok()
    }

    /// True when every covering step raises a single rank function by one.
    pub fn is_graded(&self) -> bool {
        self.graded
    }

    pub fn ranks(&self) -> &[usize] {
        &self.rank
    }

    pub fn rank_at(&self, index: usize) -> usize {
        self.rank[index]
    }

    pub fn height_at(&self, index: usize) -> usize {
        self.height[index]
    }

    pub fn rank_of(&self, x: &SignVector) -> Result<usize> {
        self.lookup(x).map(|i| self.rank[i])
    }

    /// Longest covering chain ending at `x`.
    pub fn height_of(&self, x: &SignVector) -> Result<usize> {
        self.lookup(x).map(|i| self.height[i])
    }

    fn lookup(&self, x: &SignVector) -> Result<usize> {
        self.index_of(x)
            .ok_or_else(|| ComError::UnknownElement(x.to_string()))
    }

    pub fn system_rank(&self) -> usize {
        self.system_rank
    }

    pub fn f_polynomial(&self) -> FPolynomial {
        let mut coefficients = vec![0u64; self.system_rank + 1];
        for &r in &self.rank {
            coefficients[self.system_rank - r] += 1;
        }
        FPolynomial { coefficients }
    }

    /// Graphviz rendering, covered elements below covering ones.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph covectors {\n  rankdir=BT;\n");
        for (i, x) in self.elements().iter().enumerate() {
            let _ = writeln!(
                out,
                "  n{i} [label=\"{x}\", tooltip=\"rank {}\"];",
                self.rank[i]
            );
        }
        for &(x, y) in &self.hasse {
            let _ = writeln!(out, "  n{x} -> n{y};");
        }
        out.push_str("}\n");
        out
    }
}

pub fn build_poset(system: &SignSystem) -> Result<CovectorPoset> {
    CovectorPoset::build(system)
}

/// Cover-graded rank normalised to minimum 0 per component, if one exists.
fn graded_rank(n: usize, hasse: &[(usize, usize)]) -> Option<Vec<usize>> {
    let mut adjacent: Vec<Vec<(usize, i64)>> = vec![Vec::new(); n];
    for &(x, y) in hasse {
        adjacent[x].push((y, 1));
        adjacent[y].push((x, -1));
    }
    let mut level: Vec<Option<i64>> = vec![None; n];
    let mut rank = vec![0usize; n];
    let mut queue = VecDeque::new();
    for start in 0..n {
        if level[start].is_some() {
            continue;
        }
        level[start] = Some(0);
        queue.push_back(start);
        let mut component = vec![start];
        while let Some(u) = queue.pop_front() {
            let lu = level[u]?;
            for &(v, step) in &adjacent[u] {
                match level[v] {
                    Some(lv) if lv != lu + step => return None,
                    Some(_) => {}
                    None => {
                        level[v] = Some(lu + step);
                        component.push(v);
                        queue.push_back(v);
                    }
                }
            }
        }
        let floor = component
            .iter()
            .filter_map(|&i| level[i])
            .min()
            .unwrap_or(0);
        for i in component {
            rank[i] = (level[i]? - floor) as usize;
        }
    }
    Some(rank)
}

/// `f(x) = Σ_k c_k x^k`, stored by exponent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FPolynomial {
    coefficients: Vec<u64>,
}

impl FPolynomial {
    pub fn from_coefficients(mut coefficients: Vec<u64>) -> Self {
        while coefficients.len() > 1 && coefficients.last() == Some(&0) {
            coefficients.pop();
        }
        FPolynomial { coefficients }
    }

    /// Coefficient of `x^exponent`.
    pub fn coefficient(&self, exponent: usize) -> u64 {
        self.coefficients.get(exponent).copied().unwrap_or(0)
    }

    pub fn coefficients(&self) -> &[u64] {
        &self.coefficients
    }

    /// Nonzero coefficients keyed by exponent.
    pub fn terms(&self) -> BTreeMap<usize, u64> {
        self.coefficients
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| (k, c))
            .collect()
    }

    pub fn degree(&self) -> usize {
        self.coefficients.iter().rposition(|&c| c != 0).unwrap_or(0)
    }

    pub fn evaluate(&self, x: u64) -> u64 {
        self.coefficients
            .iter()
            .rev()
            .fold(0, |acc, &c| acc * x + c)
    }

    /// Descending degree, e.g. `3*x^2 + 11*x + 9`.
    pub fn render(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for FPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .terms()
            .into_iter()
            .rev()
            .map(|(k, c)| {
                let power = match k {
                    0 => String::new(),
                    1 => "x".to_string(),
                    _ => format!("x^{k}"),
                };
                match (c, k) {
                    (_, 0) => c.to_string(),
                    (1, _) => power,
                    _ => format!("{c}*{power}"),
                }
            })
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

pub fn f_polynomial(system: &SignSystem) -> Result<FPolynomial> {
    Ok(CovectorPoset::build(system)?.f_polynomial())
}

pub fn render_polynomial(polynomial: &FPolynomial) -> String {
    polynomial.render()
}
