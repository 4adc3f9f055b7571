//! Smith normal form over the integers.
//!
//! `U · A · V = D` with `U`, `V` unimodular and `D` diagonal, its nonzero
//! entries positive and forming a divisibility chain `d₁ | d₂ | …`, zeros last.

use super::matrix::Matrix;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm<T> {
    pub u: Matrix<T>,
    pub d: Matrix<T>,
    pub v: Matrix<T>,
    pub rank: usize,
}

impl<T: Scalar> SmithForm<T> {
    /// The nonzero diagonal entries `d₁ | d₂ | … | d_rank`.
    pub fn invariant_factors(&self) -> Vec<T> {
        (0..self.rank).map(|i| self.d[(i, i)].clone()).collect()
    }
}

pub fn smith_normal_form<T: Scalar>(a: &Matrix<T>) -> SmithForm<T> {
    let (m, n) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = Matrix::identity(m);
    let mut v = Matrix::identity(n);
    let mut rank = 0;

    for t in 0..m.min(n) {
        let Some(first) = min_abs_entry(&d, t) else {
            break;
        };
        move_to_pivot(&mut d, &mut u, &mut v, t, first);
        loop {
            let p = d[(t, t)].clone();
            let mut clean = true;
            for i in t + 1..m {
                let q = d[(i, t)].div_floor(&p);
                if !q.is_zero() {
                    let k = -q;
                    d.add_row_multiple(i, t, &k);
                    u.add_row_multiple(i, t, &k);
                }
                clean &= d[(i, t)].is_zero();
            }
            for j in t + 1..n {
                let q = d[(t, j)].div_floor(&p);
                if !q.is_zero() {
                    let k = -q;
                    d.add_col_multiple(j, t, &k);
                    v.add_col_multiple(j, t, &k);
                }
                clean &= d[(t, j)].is_zero();
            }
            if !clean {
                // a nonzero remainder is strictly smaller than the pivot
                let next = min_abs_entry(&d, t).expect("pivot row is nonzero");
                move_to_pivot(&mut d, &mut u, &mut v, t, next);
                continue;
            }
            let offender = (t + 1..m).find(|&i| (t + 1..n).any(|j| !d[(i, j)].is_multiple_of(&p)));
            match offender {
                Some(i) => {
                    let one = T::one();
                    d.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
        rank += 1;
    }
    SmithForm { u, d, v, rank }
}

fn min_abs_entry<T: Scalar>(d: &Matrix<T>, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), T)> = None;
    for i in t..d.rows() {
        for j in t..d.cols() {
            let x = &d[(i, j)];
            if x.is_zero() {
                continue;
            }
            let ax = x.abs();
            if best.as_ref().is_none_or(|(_, b)| ax < *b) {
                best = Some(((i, j), ax));
            }
        }
    }
    best.map(|(pos, _)| pos)
}

fn move_to_pivot<T: Scalar>(
    d: &mut Matrix<T>,
    u: &mut Matrix<T>,
    v: &mut Matrix<T>,
    t: usize,
    (i, j): (usize, usize),
) {
    d.swap_rows(t, i);
    u.swap_rows(t, i);
    d.swap_cols(t, j);
    v.swap_cols(t, j);
}

/// Row-style Hermite normal form of the lattice spanned by `vectors`.
///
/// Returns the nonzero rows: an echelon basis with positive pivots and every
/// entry above a pivot reduced into `[0, pivot)`. Two generating sets of the
/// same lattice yield identical output.
pub fn hermite_rows<T: Scalar>(vectors: &[Vec<T>], dim: usize) -> Vec<Vec<T>> {
    let mut rows: Vec<Vec<T>> = vectors.to_vec();
    let mut pivot_row = 0;
    for col in 0..dim {
        if pivot_row >= rows.len() {
            break;
        }
        loop {
            // smallest nonzero |entry| in this column among remaining rows
            let best = (pivot_row..rows.len())
                .filter(|&r| !rows[r][col].is_zero())
                .min_by(|&a, &b| rows[a][col].abs().cmp(&rows[b][col].abs()));
            let Some(best) = best else { break };
            rows.swap(pivot_row, best);
            let mut done = true;
            for r in pivot_row + 1..rows.len() {
                if rows[r][col].is_zero() {
                    continue;
                }
                let q = rows[r][col].div_floor(&rows[pivot_row][col]);
                sub_multiple(&mut rows, r, pivot_row, &q);
                done &= rows[r][col].is_zero();
            }
            if done {
                break;
            }
        }
        if rows[pivot_row][col].is_zero() {
            continue;
        }
        if rows[pivot_row][col].is_negative() {
            for x in rows[pivot_row].iter_mut() {
                *x = -x.clone();
            }
        }
        for r in 0..pivot_row {
            let q = rows[r][col].div_floor(&rows[pivot_row][col]);
            if !q.is_zero() {
                sub_multiple(&mut rows, r, pivot_row, &q);
            }
        }
        pivot_row += 1;
    }
    rows.truncate(pivot_row);
    rows.retain(|r| r.iter().any(|x| !x.is_zero()));
    rows
}

fn sub_multiple<T: Scalar>(rows: &mut [Vec<T>], dst: usize, src: usize, q: &T) {
    for j in 0..rows[dst].len() {
        let s = rows[src][j].clone();
        rows[dst][j] = rows[dst][j].clone() - q.clone() * s;
    }
}
