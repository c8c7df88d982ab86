//! Hilbert bases of homogeneous linear Diophantine systems with congruences.
//!
//! The solution monoid `{x ∈ N^m : A·x = 0, cⱼ·x ≡ 0 mod nⱼ}` is computed by the
//! Contejean–Devie completion procedure. Each congruence `c·x ≡ 0 mod n` becomes the
//! equation `c̄·x − n·y = 0` with `c̄ = c mod n` and one natural slack `y`; the slacks
//! are projected away afterwards and the projected set is re-minimized. Reducing the
//! coefficients into `[0, n)` makes `c̄·x ≥ 0`, so the negative part of the slack
//! would always vanish and is not introduced.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// Completion budget for the solver.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverBudget {
    /// Maximum number of candidate vectors generated during completion.
    pub max_steps: u64,
}

impl SolverBudget {
    pub const DEFAULT_STEPS: u64 = 1_000_000;

    pub fn new(max_steps: u64) -> Self {
        SolverBudget { max_steps }
    }
}

impl Default for SolverBudget {
    fn default() -> Self {
        SolverBudget {
            max_steps: Self::DEFAULT_STEPS,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiophantineSystem {
    num_vars: usize,
    equations: Vec<Vec<i64>>,
    congruences: Vec<(Vec<i64>, i64)>,
}

impl DiophantineSystem {
    pub fn new(
        num_vars: usize,
        equations: Vec<Vec<i64>>,
        congruences: Vec<(Vec<i64>, i64)>,
    ) -> Result<Self> {
        if num_vars == 0 {
            return Err(Error::invalid("a Diophantine system needs at least one variable"));
        }
        for row in equations.iter().chain(congruences.iter().map(|(r, _)| r)) {
            if row.len() != num_vars {
                return Err(Error::invalid(format!(
                    "row of length {} in a system with {num_vars} variables",
                    row.len()
                )));
            }
        }
        if let Some((_, n)) = congruences.iter().find(|(_, n)| *n < 2) {
            return Err(Error::invalid(format!("congruence modulus {n} must be at least 2")));
        }
        Ok(DiophantineSystem {
            num_vars,
            equations,
            congruences,
        })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn equations(&self) -> &[Vec<i64>] {
        &self.equations
    }

    pub fn congruences(&self) -> &[(Vec<i64>, i64)] {
        &self.congruences
    }

    pub fn is_solution(&self, x: &[u64]) -> bool {
        let dot = |row: &[i64]| -> i128 {
            row.iter()
                .zip(x)
                .map(|(&a, &b)| i128::from(a) * i128::from(b))
                .sum()
        };
        x.len() == self.num_vars
            && self.equations.iter().all(|r| dot(r) == 0)
            && self
                .congruences
                .iter()
                .all(|(r, n)| dot(r).rem_euclid(i128::from(*n)) == 0)
    }
}

fn dominates(big: &[u32], small: &[u32]) -> bool {
    big.iter().zip(small).all(|(b, s)| b >= s)
}

/// Minimal nonzero solutions of `A·x = 0` over `N^m`.
fn contejean_devie(columns: &[Vec<i128>], budget: &SolverBudget) -> Result<Vec<Vec<u32>>> {
    let m = columns.len();
    let rows = columns.first().map_or(0, Vec::len);
    let dot = |u: &[i128], v: &[i128]| -> i128 { u.iter().zip(v).map(|(a, b)| a * b).sum() };

    let mut basis: Vec<Vec<u32>> = Vec::new();
    let mut frontier: BTreeSet<(Vec<u32>, Vec<i128>)> = (0..m)
        .map(|j| {
            let mut e = vec![0u32; m];
            e[j] = 1;
            (e, columns[j].clone())
        })
        .collect();
    let mut steps: u64 = 0;

    while !frontier.is_empty() {
        let mut pending = Vec::with_capacity(frontier.len());
        for (p, residual) in frontier {
            if residual.iter().all(|&x| x == 0) {
                basis.push(p);
            } else {
                pending.push((p, residual));
            }
        }
        let mut next = BTreeSet::new();
        for (p, residual) in &pending {
            for (j, col) in columns.iter().enumerate() {
                if dot(residual, col) >= 0 {
                    continue;
                }
                let mut q = p.clone();
                q[j] += 1;
                if basis.iter().any(|b| dominates(&q, b)) {
                    continue;
                }
                steps += 1;
                if steps > budget.max_steps {
                    return Err(Error::ResourceLimit {
                        what: "Hilbert basis completion".to_string(),
                        budget: budget.max_steps,
                    });
                }
                let r: Vec<i128> = (0..rows).map(|i| residual[i] + col[i]).collect();
                next.insert((q, r));
            }
        }
        frontier = next;
    }
    Ok(basis)
}

/// The Hilbert basis of the solution monoid, sorted lexicographically.
pub fn hilbert_basis(sys: &DiophantineSystem, budget: &SolverBudget) -> Result<Vec<Vec<u64>>> {
    let m = sys.num_vars;
    let c = sys.congruences.len();
    let total = m + c;
    let nrows = sys.equations.len() + c;
    let mut columns = vec![vec![0i128; nrows]; total];
    for (i, row) in sys.equations.iter().enumerate() {
        for (j, &a) in row.iter().enumerate() {
            columns[j][i] = i128::from(a);
        }
    }
    for (k, (row, n)) in sys.congruences.iter().enumerate() {
        let i = sys.equations.len() + k;
        for (j, &a) in row.iter().enumerate() {
            columns[j][i] = i128::from(a).rem_euclid(i128::from(*n));
        }
        columns[m + k][i] = -i128::from(*n);
    }

    let full = contejean_devie(&columns, budget)?;
    let projected: BTreeSet<Vec<u32>> = full
        .into_iter()
        .map(|mut v| {
            v.truncate(m);
            v
        })
        .filter(|v| v.iter().any(|&x| x > 0))
        .collect();
    let minimal: Vec<Vec<u64>> = projected
        .iter()
        .filter(|g| {
            !projected
                .iter()
                .any(|h| h != *g && dominates(g, h))
        })
        .map(|g| g.iter().map(|&x| u64::from(x)).collect())
        .collect();
    debug_assert!(minimal.iter().all(|x| sys.is_solution(x)));
    Ok(minimal)
}
