//! Hermite and Smith normal forms over the integers.
//!
//! Matrices are stored as lists of rows and lattices are always row spans.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type IntVec = Vec<BigInt>;

#[cfg(test)]
pub(crate) fn int_vec(values: &[i64]) -> IntVec {
    values.iter().map(|&v| BigInt::from(v)).collect()
}

fn sub_multiple(target: &mut [BigInt], source: &[BigInt], q: &BigInt) {
    if q.is_zero() {
        return;
    }
    for (t, s) in target.iter_mut().zip(source) {
        *t -= q * s;
    }
}

/// Row-style Hermite normal form of the row span of `rows`.
///
/// The result lists a basis of the lattice in echelon form: pivot columns strictly
/// increase, every pivot is positive, and every entry above a pivot lies in
/// `[0, pivot)`. Zero rows are dropped, so the number of rows is the rank.
pub fn hermite_normal_form(rows: &[IntVec], ncols: usize) -> Vec<IntVec> {
    let mut a: Vec<IntVec> = rows
        .iter()
        .map(|r| {
            assert_eq!(r.len(), ncols, "row length mismatch");
            r.clone()
        })
        .collect();
    let mut cur = 0;
    for c in 0..ncols {
        if cur == a.len() {
            break;
        }
        loop {
            let best = (cur..a.len())
                .filter(|&i| !a[i][c].is_zero())
                .min_by(|&i, &j| a[i][c].abs().cmp(&a[j][c].abs()));
            let Some(best) = best else { break };
            a.swap(cur, best);
            let mut cleared = true;
            for i in cur + 1..a.len() {
                if !a[i][c].is_zero() {
                    let q = a[i][c].div_floor(&a[cur][c]);
                    let pivot_row = a[cur].clone();
                    sub_multiple(&mut a[i], &pivot_row, &q);
                    if !a[i][c].is_zero() {
                        cleared = false;
                    }
                }
            }
            if cleared {
                break;
            }
        }
        if a[cur][c].is_zero() {
            continue;
        }
        if a[cur][c].is_negative() {
            for x in a[cur].iter_mut() {
                *x = -&*x;
            }
        }
        let pivot_row = a[cur].clone();
        for i in 0..cur {
            let q = a[i][c].div_floor(&pivot_row[c]);
            sub_multiple(&mut a[i], &pivot_row, &q);
        }
        cur += 1;
    }
    a.truncate(cur);
    a
}

/// Column of the first nonzero entry of an echelon row.
pub(crate) fn pivot_column(row: &[BigInt]) -> Option<usize> {
    row.iter().position(|x| !x.is_zero())
}

/// Coefficients `c` with `c · basis = v`, for a basis in Hermite normal form.
/// Returns `None` when `v` is not in the row lattice.
pub fn solve_in_echelon_basis(basis: &[IntVec], v: &[BigInt]) -> Option<IntVec> {
    let mut w: IntVec = v.to_vec();
    let mut coeffs = Vec::with_capacity(basis.len());
    let mut next_col = 0;
    for row in basis {
        let p = pivot_column(row).expect("zero row in echelon basis");
        if w[next_col..p].iter().any(|x| !x.is_zero()) {
            return None;
        }
        let (q, r) = w[p].div_rem(&row[p]);
        if !r.is_zero() {
            return None;
        }
        sub_multiple(&mut w, row, &q);
        coeffs.push(q);
        next_col = p + 1;
    }
    if w.iter().any(|x| !x.is_zero()) {
        return None;
    }
    Some(coeffs)
}

/// Smith normal form `U·A·V = S` keeping the right transform `V`.
#[derive(Debug, Clone)]
pub struct Smith {
    /// Diagonal of `S`, length `min(rows, cols)`, non-negative, in divisibility order
    /// with zeros last.
    pub diagonal: Vec<BigInt>,
    /// The unimodular `cols × cols` matrix `V`.
    pub right: Vec<IntVec>,
}

pub fn smith_normal_form(rows: &[IntVec], ncols: usize) -> Smith {
    let mut a: Vec<IntVec> = rows.to_vec();
    let k = a.len();
    let m = ncols;
    let mut v: Vec<IntVec> = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect();

    let swap_cols = |a: &mut Vec<IntVec>, v: &mut Vec<IntVec>, x: usize, y: usize| {
        for row in a.iter_mut() {
            row.swap(x, y);
        }
        for row in v.iter_mut() {
            row.swap(x, y);
        }
    };
    // col_j -= q * col_t
    let col_sub = |a: &mut Vec<IntVec>, v: &mut Vec<IntVec>, j: usize, t: usize, q: &BigInt| {
        for row in a.iter_mut() {
            let d = q * &row[t];
            row[j] -= d;
        }
        for row in v.iter_mut() {
            let d = q * &row[t];
            row[j] -= d;
        }
    };

    let steps = k.min(m);
    let mut diagonal = Vec::with_capacity(steps);
    for t in 0..steps {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..k {
                for j in t..m {
                    if a[i][j].is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else { break };
            a.swap(t, bi);
            if bj != t {
                swap_cols(&mut a, &mut v, t, bj);
            }
            let mut clean = true;
            for i in t + 1..k {
                if !a[i][t].is_zero() {
                    let q = a[i][t].div_floor(&a[t][t]);
                    let pivot_row = a[t].clone();
                    sub_multiple(&mut a[i], &pivot_row, &q);
                    clean &= a[i][t].is_zero();
                }
            }
            for j in t + 1..m {
                if !a[t][j].is_zero() {
                    let q = a[t][j].div_floor(&a[t][t]);
                    col_sub(&mut a, &mut v, j, t, &q);
                    clean &= a[t][j].is_zero();
                }
            }
            if !clean {
                continue;
            }
            let offender = (t + 1..k).find(|&i| {
                (t + 1..m).any(|j| !a[i][j].is_multiple_of(&a[t][t]))
            });
            match offender {
                Some(i) => {
                    let row_i = a[i].clone();
                    for (x, y) in a[t].iter_mut().zip(&row_i) {
                        *x += y;
                    }
                }
                None => break,
            }
        }
        if a[t][t].is_negative() {
            for x in a[t].iter_mut() {
                *x = -&*x;
            }
        }
        diagonal.push(a[t][t].clone());
    }
    Smith { diagonal, right: v }
}

/// Row vector times matrix.
pub(crate) fn vec_mat(x: &[BigInt], m: &[IntVec]) -> IntVec {
    let ncols = m.first().map_or(0, |r| r.len());
    let mut out = vec![BigInt::zero(); ncols];
    for (xi, row) in x.iter().zip(m) {
        if xi.is_zero() {
            continue;
        }
        for (o, e) in out.iter_mut().zip(row) {
            *o += xi * e;
        }
    }
    out
}

pub(crate) fn lcm_all<'a>(values: impl IntoIterator<Item = &'a BigInt>) -> BigInt {
    values.into_iter().fold(BigInt::one(), |acc, x| acc.lcm(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<IntVec> {
        rows.iter().map(|r| int_vec(r)).collect()
    }

    #[test]
    fn hnf_of_simple_lattice() {
        let h = hermite_normal_form(&m(&[&[1, 1], &[1, 0]]), 2);
        assert_eq!(h, m(&[&[1, 0], &[0, 1]]));
        let h = hermite_normal_form(&m(&[&[2, 4], &[0, 6], &[2, 10]]), 2);
        assert_eq!(h, m(&[&[2, 4], &[0, 6]]));
        let h = hermite_normal_form(&m(&[&[-3, 1]]), 2);
        assert_eq!(h, m(&[&[3, -1]]));
    }

    #[test]
    fn hnf_reduces_above_pivot() {
        let h = hermite_normal_form(&m(&[&[1, 5], &[0, 3]]), 2);
        assert_eq!(h, m(&[&[1, 2], &[0, 3]]));
        let h = hermite_normal_form(&m(&[&[1, -1], &[0, 3]]), 2);
        assert_eq!(h, m(&[&[1, 2], &[0, 3]]));
    }

    #[test]
    fn hnf_empty_and_zero() {
        assert!(hermite_normal_form(&[], 3).is_empty());
        assert!(hermite_normal_form(&m(&[&[0, 0]]), 2).is_empty());
    }

    #[test]
    fn solve_in_basis() {
        let b = hermite_normal_form(&m(&[&[2, 0], &[0, 3]]), 2);
        assert_eq!(solve_in_echelon_basis(&b, &int_vec(&[4, 9])), Some(int_vec(&[2, 3])));
        assert_eq!(solve_in_echelon_basis(&b, &int_vec(&[1, 0])), None);
        let b = hermite_normal_form(&m(&[&[0, 1]]), 2);
        assert_eq!(solve_in_echelon_basis(&b, &int_vec(&[1, 1])), None);
    }

    #[test]
    fn smith_of_diagonal() {
        let s = smith_normal_form(&m(&[&[4, 0], &[0, 6]]), 2);
        assert_eq!(s.diagonal, int_vec(&[2, 12]));
        let s = smith_normal_form(&m(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]), 3);
        assert_eq!(s.diagonal, int_vec(&[2, 6, 12]));
    }

    #[test]
    fn smith_right_transform_is_consistent() {
        // A·V must have the same row lattice as S.
        let a = m(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
        let s = smith_normal_form(&a, 3);
        let av: Vec<IntVec> = a.iter().map(|r| vec_mat(r, &s.right)).collect();
        let diag: Vec<IntVec> = (0..3)
            .map(|i| {
                (0..3)
                    .map(|j| if i == j { s.diagonal[i].clone() } else { BigInt::zero() })
                    .collect()
            })
            .collect();
        assert_eq!(hermite_normal_form(&av, 3), hermite_normal_form(&diag, 3));
    }

    #[test]
    fn smith_rank_deficient() {
        let s = smith_normal_form(&m(&[&[1, 2], &[2, 4]]), 2);
        assert_eq!(s.diagonal, int_vec(&[1, 0]));
        let s = smith_normal_form(&m(&[&[3, 0, 0]]), 3);
        assert_eq!(s.diagonal, int_vec(&[3]));
    }
}
