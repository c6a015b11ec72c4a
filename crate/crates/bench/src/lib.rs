//! Workloads shared by the criterion benchmarks.

use coms_core::arrangement::{
    apartment_to_com, ApartmentOptions, Arrangement, Hyperplane, Number, Point,
};
use coms_core::format::parse_arrangement;
use coms_core::{topes_of, SignSystem, TopeSet};

const FIVE_LINES: &str = include_str!("../../core/tests/data/five_lines.json");

pub fn five_lines() -> (Arrangement, Vec<Point>) {
    let input = parse_arrangement(FIVE_LINES).expect("bundled fixture parses");
    (input.arrangement, input.points)
}

/// `k` vertical and `k` horizontal lines at 0..k, one point in each of the
/// `(k + 1)^2` chambers.
pub fn grid(k: usize) -> (Arrangement, Vec<Point>) {
    let mut planes = Vec::with_capacity(2 * k);
    for axis in 0..2 {
        for c in 0..k {
            let mut coeffs = vec![Number::from(0); 2];
            coeffs[axis] = Number::from(1);
            let label = format!("{}{c}", if axis == 0 { 'x' } else { 'y' });
            planes.push(Hyperplane::new(label, coeffs, Number::from(c as i64)).unwrap());
        }
    }
    let centre = |i: usize| -> Number { format!("{}/2", 2 * i as i64 - 1).parse().unwrap() };
    let points = (0..=k)
        .flat_map(|i| (0..=k).map(move |j| (i, j)))
        .map(|(i, j)| Point::new(vec![centre(i), centre(j)]))
        .collect();
    (Arrangement::new(2, planes).unwrap(), points)
}

/// The coordinate hyperplanes and the diagonal planes x_i = x_j in R^3,
/// sampled at one point per chamber.
pub fn braid3() -> (Arrangement, Vec<Point>) {
    let mut planes = Vec::new();
    for i in 0..3 {
        let mut coeffs = vec![Number::from(0); 3];
        coeffs[i] = Number::from(1);
        planes.push(Hyperplane::new(format!("x{i}"), coeffs, Number::from(0)).unwrap());
    }
    for i in 0..3 {
        for j in i + 1..3 {
            let mut coeffs = vec![Number::from(0); 3];
            coeffs[i] = Number::from(1);
            coeffs[j] = Number::from(-1);
            planes.push(Hyperplane::new(format!("d{i}{j}"), coeffs, Number::from(0)).unwrap());
        }
    }
    let arrangement = Arrangement::new(3, planes).unwrap();
    // Distinct absolute values 1, 2, 3 in every order and sign pattern cover
    // every chamber; repeats are skipped.
    let mut points = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for perm in [
        [1, 2, 3],
        [1, 3, 2],
        [2, 1, 3],
        [2, 3, 1],
        [3, 1, 2],
        [3, 2, 1],
    ] {
        for signs in 0..8 {
            let coords: Vec<i64> = (0..3)
                .map(|i| {
                    if signs >> i & 1 == 1 {
                        -perm[i]
                    } else {
                        perm[i]
                    }
                })
                .collect();
            let p = Point::new(coords.iter().map(|&c| Number::from(c)).collect());
            if seen.insert(arrangement.sign_vector(&p, 0.0).unwrap()) {
                points.push(p);
            }
        }
    }
    (arrangement, points)
}

pub fn covectors(workload: &(Arrangement, Vec<Point>)) -> SignSystem {
    apartment_to_com(&workload.0, &workload.1, ApartmentOptions::default()).unwrap()
}

pub fn topes(workload: &(Arrangement, Vec<Point>)) -> TopeSet {
    topes_of(&covectors(workload)).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use coms_core::{is_com, is_om};

    #[test]
    fn workloads_are_complete() {
        let g = covectors(&grid(3));
        assert_eq!(topes(&grid(3)).len(), 16);
        // Faces of a 3x3 grid: 16 cells, 24 edges, 9 vertices.
        assert_eq!(g.len(), 49);
        assert!(is_com(&g));

        let b = covectors(&braid3());
        assert_eq!(topes(&braid3()).len(), 24);
        assert!(is_om(&b).unwrap());
        assert_eq!(covectors(&five_lines()).len(), 23);
    }
}
