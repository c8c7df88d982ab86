//! Exact rational linear algebra: ranks and strict-positivity feasibility.
//!
//! The feasibility question asked throughout is whether a homogeneous system
//! `A·x = 0` has a solution with every coordinate `≥ 1` (equivalently a strictly
//! positive kernel vector). Two independent exact solvers answer it.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type QVec = Vec<BigRational>;

/// Reduced row echelon form; returns the pivot columns.
fn row_reduce(rows: &mut Vec<QVec>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

pub fn rank(rows: &[QVec]) -> usize {
    let Some(ncols) = rows.first().map(Vec::len) else {
        return 0;
    };
    let mut m = rows.to_vec();
    row_reduce(&mut m, ncols).len()
}

/// The unique solution of a square system given as augmented rows `[A | b]`, or
/// `None` if `A` is singular.
pub(crate) fn solve_unique(mut rows: Vec<QVec>, nvars: usize) -> Option<QVec> {
    if rows.len() != nvars {
        return None;
    }
    let pivots = row_reduce(&mut rows, nvars);
    if pivots.len() != nvars {
        return None;
    }
    Some(rows.into_iter().map(|r| r[nvars].clone()).collect())
}

/// Does `A·x = 0` admit `x ≥ 1` componentwise? Fourier–Motzkin for at most four
/// equations, simplex otherwise.
pub fn strictly_positive_kernel(a: &[QVec], nvars: usize) -> bool {
    if a.len() <= 4 {
        fourier_motzkin_feasible(a, nvars)
    } else {
        simplex_feasible(a, nvars)
    }
}

/// Inequality `coeffs · y ≥ rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Ineq {
    coeffs: QVec,
    rhs: BigRational,
}

impl Ineq {
    fn normalized(mut self) -> Self {
        let scale = self
            .coeffs
            .iter()
            .chain(std::iter::once(&self.rhs))
            .find(|x| !x.is_zero())
            .map(|x| x.abs().recip());
        if let Some(s) = scale {
            for x in self.coeffs.iter_mut() {
                *x *= &s;
            }
            self.rhs *= &s;
        }
        self
    }
}

pub fn fourier_motzkin_feasible(a: &[QVec], nvars: usize) -> bool {
    let mut eqs: Vec<QVec> = a.to_vec();
    let pivots = row_reduce(&mut eqs, nvars);
    let free: Vec<usize> = (0..nvars).filter(|c| !pivots.contains(c)).collect();

    // Express every variable as a linear form in the free variables.
    let mut forms: Vec<QVec> = vec![vec![BigRational::zero(); free.len()]; nvars];
    for (k, &v) in free.iter().enumerate() {
        forms[v][k] = BigRational::one();
    }
    for (row, &p) in eqs.iter().zip(&pivots) {
        for (k, &v) in free.iter().enumerate() {
            forms[p][k] = -row[v].clone();
        }
    }
    let mut ineqs: Vec<Ineq> = forms
        .into_iter()
        .map(|coeffs| {
            Ineq {
                coeffs,
                rhs: BigRational::one(),
            }
            .normalized()
        })
        .collect();

    for k in 0..free.len() {
        let (mut pos, mut neg, mut keep) = (Vec::new(), Vec::new(), Vec::new());
        for q in ineqs {
            if q.coeffs[k].is_positive() {
                pos.push(q);
            } else if q.coeffs[k].is_negative() {
                neg.push(q);
            } else {
                keep.push(q);
            }
        }
        for p in &pos {
            for n in &neg {
                let (fp, fn_) = (-n.coeffs[k].clone(), p.coeffs[k].clone());
                let coeffs = p
                    .coeffs
                    .iter()
                    .zip(&n.coeffs)
                    .map(|(x, y)| x * &fp + y * &fn_)
                    .collect();
                let combined = Ineq {
                    coeffs,
                    rhs: &p.rhs * &fp + &n.rhs * &fn_,
                }
                .normalized();
                if !keep.contains(&combined) {
                    keep.push(combined);
                }
            }
        }
        ineqs = keep;
    }
    ineqs.iter().all(|q| !q.rhs.is_positive())
}

/// Phase-one simplex with Bland's rule on `A·z = -A·1`, `z ≥ 0`.
pub fn simplex_feasible(a: &[QVec], nvars: usize) -> bool {
    let m = a.len();
    if m == 0 {
        return true;
    }
    let width = nvars + m + 1;
    let rhs_col = width - 1;
    let mut t: Vec<QVec> = Vec::with_capacity(m);
    for (i, row) in a.iter().enumerate() {
        let mut r = vec![BigRational::zero(); width];
        let b: BigRational = -row.iter().cloned().sum::<BigRational>();
        let flip = b.is_negative();
        for j in 0..nvars {
            r[j] = if flip { -row[j].clone() } else { row[j].clone() };
        }
        r[nvars + i] = BigRational::one();
        r[rhs_col] = if flip { -b } else { b };
        t.push(r);
    }
    let mut basis: Vec<usize> = (nvars..nvars + m).collect();

    loop {
        // Reduced costs of the phase-one objective (sum of artificials).
        let entering = (0..nvars + m).find(|&j| {
            if basis.contains(&j) {
                return false;
            }
            let cost = if j >= nvars { BigRational::one() } else { BigRational::zero() };
            let dual: BigRational = t
                .iter()
                .zip(&basis)
                .filter(|(_, &b)| b >= nvars)
                .map(|(row, _)| row[j].clone())
                .sum();
            (cost - dual).is_negative()
        });
        let Some(j) = entering else { break };
        let mut leave: Option<usize> = None;
        for i in 0..m {
            if !t[i][j].is_positive() {
                continue;
            }
            let ratio = &t[i][rhs_col] / &t[i][j];
            leave = match leave {
                None => Some(i),
                Some(l) => {
                    let best = &t[l][rhs_col] / &t[l][j];
                    if ratio < best || (ratio == best && basis[i] < basis[l]) {
                        Some(i)
                    } else {
                        Some(l)
                    }
                }
            };
        }
        let Some(l) = leave else { break };
        let inv = t[l][j].recip();
        for x in t[l].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = t[l].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i != l && !row[j].is_zero() {
                let f = row[j].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        basis[l] = j;
    }
    t.iter()
        .zip(&basis)
        .filter(|(_, &b)| b >= nvars)
        .all(|(row, _)| row[rhs_col].is_zero())
}
