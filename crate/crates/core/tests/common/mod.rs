#![allow(dead_code)]

use strong_atoms::{Group, Int};

/// Invariant factors of every abelian group of order at most 8.
pub const FINITE_UP_TO_8: &[&[i64]] = &[&[], &[2], &[3], &[4], &[2, 2], &[5], &[6], &[7], &[8], &[2, 4], &[2, 2, 2]];

pub fn finite_group(torsion: &[i64]) -> Group {
    Group::new(0, torsion.iter().map(|&d| Int::from(d)).collect()).unwrap()
}

/// Coordinates of every element, in the order `Group::elements` uses.
pub fn element_coords(torsion: &[i64]) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for &d in torsion {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i64>| {
                (0..d).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

/// Indices selected by a bitmask.
pub fn mask_indices(mask: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|i| mask & (1 << i) != 0).collect()
}
