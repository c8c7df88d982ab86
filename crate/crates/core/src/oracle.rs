//! Brute-force reference computations.
//!
//! Nothing here calls the Hermite/Smith machinery, the LP solvers or the Hilbert
//! basis completion; every answer comes from direct enumeration plus a private
//! rational elimination.

use std::collections::{BTreeSet, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

use crate::abelian_group::{AbelianGroup, GroupElement};
use crate::diophantine::DiophantineSystem;
use crate::error::{Error, Result};
use crate::graded_ring::{GradedRing, Monomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub exponent_bound: u64,
    pub coset_bound: u64,
    pub step_bound: u64,
}

impl SearchBudget {
    pub fn new(exponent_bound: u64, coset_bound: u64, step_bound: u64) -> Result<Self> {
        if exponent_bound == 0 || coset_bound == 0 || step_bound == 0 {
            return Err(Error::invalid("search bounds must be positive"));
        }
        Ok(SearchBudget {
            exponent_bound,
            coset_bound,
            step_bound,
        })
    }

    pub fn with_exponent_bound(self, exponent_bound: u64) -> Self {
        SearchBudget {
            exponent_bound,
            ..self
        }
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            exponent_bound: 4,
            coset_bound: 100_000,
            step_bound: 5_000_000,
        }
    }
}

/// Calls `visit` on every vector of `[0, bound]^len` in lexicographic order.
fn for_each_in_box(len: usize, bound: u64, mut visit: impl FnMut(&[u64])) {
    let mut v = vec![0u64; len];
    loop {
        visit(&v);
        let mut i = len;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if v[i] < bound {
                v[i] += 1;
                break;
            }
            v[i] = 0;
        }
    }
}

fn q(x: &BigInt) -> BigRational {
    BigRational::from_integer(x.clone())
}

/// Rank by plain Gaussian elimination over `Q`.
fn rational_rank(rows: &[Vec<BigRational>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..ncols {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for i in rank + 1..m.len() {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] / &m[rank][c];
            for j in c..ncols {
                let t = &f * &m[rank][j];
                m[i][j] -= t;
            }
        }
        rank += 1;
    }
    rank
}

/// Inverse of a square rational matrix by Gauss–Jordan; `None` if singular.
fn rational_inverse(a: &[Vec<BigRational>]) -> Option<Vec<Vec<BigRational>>> {
    let n = a.len();
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| q(&BigInt::from(u8::from(i == j)))));
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !m[i][c].is_zero())?;
        m.swap(c, p);
        let inv = m[c][c].recip();
        for x in m[c].iter_mut() {
            *x *= &inv;
        }
        let pivot = m[c].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != c && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Integer rows of the lifted lattice: generator lifts plus torsion relations.
fn lifted_rows(group: &AbelianGroup, gens: &[GroupElement]) -> Result<Vec<Vec<BigInt>>> {
    let mut rows = Vec::new();
    for g in gens {
        group.check_member(g)?;
        rows.push(g.coordinates());
    }
    let m = group.lift_dim();
    for (j, n) in group.invariant_factors().iter().enumerate() {
        let mut row = vec![BigInt::zero(); m];
        row[group.rank() + j] = n.clone();
        rows.push(row);
    }
    Ok(rows)
}

/// A full-rank sublattice `L0` spanned by some of the rows, if one exists.
struct CosetKey {
    inverse: Vec<Vec<BigRational>>,
}

impl CosetKey {
    fn choose(rows: &[Vec<BigInt>], dim: usize) -> Option<CosetKey> {
        let mut chosen: Vec<Vec<BigRational>> = Vec::new();
        for r in rows {
            let mut trial = chosen.clone();
            trial.push(r.iter().map(q).collect());
            if rational_rank(&trial) == trial.len() {
                chosen = trial;
            }
            if chosen.len() == dim {
                break;
            }
        }
        if chosen.len() < dim {
            return None;
        }
        Some(CosetKey {
            inverse: rational_inverse(&chosen)?,
        })
    }

    /// Class of `v` in `Z^m / L0`: fractional parts of its `L0`-coordinates.
    fn key(&self, v: &[BigInt]) -> Vec<BigRational> {
        let n = self.inverse.len();
        (0..n)
            .map(|j| {
                let c: BigRational = v
                    .iter()
                    .zip(&self.inverse)
                    .map(|(x, row)| q(x) * &row[j])
                    .sum();
                let fl = c.floor();
                c - fl
            })
            .collect()
    }
}

/// Breadth-first closure of `{0}` under adding the given steps, modulo `L0`.
fn closure(
    key: &CosetKey,
    dim: usize,
    steps: &[Vec<BigInt>],
    budget: &SearchBudget,
) -> Option<BTreeSet<Vec<BigRational>>> {
    let start = vec![BigInt::zero(); dim];
    let mut seen = BTreeSet::from([key.key(&start)]);
    let mut queue = VecDeque::from([start]);
    let mut work = 0u64;
    while let Some(v) = queue.pop_front() {
        for s in steps {
            work += 1;
            if work > budget.step_bound {
                return None;
            }
            let w: Vec<BigInt> = v.iter().zip(s).map(|(a, b)| a + b).collect();
            if seen.insert(key.key(&w)) {
                if seen.len() as u64 > budget.coset_bound {
                    return None;
                }
                queue.push_back(w);
            }
        }
    }
    Some(seen)
}

/// `[D : ⟨gens⟩]` by coset enumeration. `None` when the search cannot close, which
/// covers every infinite index.
pub fn brute_subgroup_index(
    group: &AbelianGroup,
    gens: &[GroupElement],
    budget: &SearchBudget,
) -> Result<Option<BigInt>> {
    let dim = group.lift_dim();
    if dim == 0 {
        return Ok(Some(BigInt::from(1)));
    }
    let rows = lifted_rows(group, gens)?;
    let Some(key) = CosetKey::choose(&rows, dim) else {
        return Ok(None);
    };
    let units: Vec<Vec<BigInt>> = (0..dim)
        .map(|i| (0..dim).map(|j| BigInt::from(u8::from(i == j))).collect())
        .collect();
    let Some(all) = closure(&key, dim, &units, budget) else {
        return Ok(None);
    };
    let Some(sub) = closure(&key, dim, &rows, budget) else {
        return Ok(None);
    };
    let (total, part) = (BigInt::from(all.len()), BigInt::from(sub.len()));
    debug_assert!(total.is_multiple_of(&part));
    Ok(Some(total / part))
}

/// Membership of `d` in `⟨gens⟩`. Exact for finite-index subgroups; otherwise a
/// bounded search for integer coefficients, `None` if nothing is found.
pub fn brute_contains(
    group: &AbelianGroup,
    gens: &[GroupElement],
    d: &GroupElement,
    budget: &SearchBudget,
) -> Result<Option<bool>> {
    group.check_member(d)?;
    let dim = group.lift_dim();
    if dim == 0 {
        return Ok(Some(true));
    }
    let rows = lifted_rows(group, gens)?;
    let target = d.coordinates();
    if let Some(key) = CosetKey::choose(&rows, dim) {
        return Ok(closure(&key, dim, &rows, budget).map(|sub| sub.contains(&key.key(&target))));
    }
    let qrows: Vec<Vec<BigRational>> = rows.iter().map(|r| r.iter().map(q).collect()).collect();
    let mut with_target = qrows.clone();
    with_target.push(target.iter().map(q).collect());
    if rational_rank(&with_target) > rational_rank(&qrows) {
        return Ok(Some(false));
    }
    let b = budget.exponent_bound as i64;
    let mut found = false;
    let mut work = 0u64;
    for_each_in_box(rows.len(), 2 * budget.exponent_bound, |c| {
        work += 1;
        if found || work > budget.step_bound {
            return;
        }
        let mut sum = vec![BigInt::zero(); dim];
        for (coef, row) in c.iter().zip(&rows) {
            let coef = BigInt::from(*coef as i64 - b);
            for (s, x) in sum.iter_mut().zip(row) {
                *s += &coef * x;
            }
        }
        found = sum == target;
    });
    Ok(found.then_some(true))
}

/// All `(a, k)` in the box with `deg(x^a) = k·deg(f)`, sorted.
pub fn brute_degree_zero(
    ring: &GradedRing,
    f: &Monomial,
    bound: u64,
) -> Result<Vec<(Vec<u64>, u64)>> {
    ring.check_monomial(f)?;
    let group = ring.group();
    let df = ring.degree_of_monomial(f)?;
    let n = ring.nvars();
    let mut out = Vec::new();
    for_each_in_box(n + 1, bound, |v| {
        let mut deg = group.zero();
        for (e, d) in v[..n].iter().zip(ring.degrees()) {
            deg = group.add(&deg, &group.scale(d, &BigInt::from(*e)));
        }
        if deg == group.scale(&df, &BigInt::from(v[n])) {
            out.push((v[..n].to_vec(), v[n]));
        }
    });
    out.sort();
    Ok(out)
}

/// Nonzero solutions in the box that dominate no other nonzero solution. For a
/// homogeneous system `v − u` is a solution whenever `u ≤ v` are, so these are
/// exactly the elements that are not sums of two nonzero solutions.
pub fn brute_minimal_solutions(sys: &DiophantineSystem, budget: &SearchBudget) -> Vec<Vec<u64>> {
    let mut solutions = Vec::new();
    for_each_in_box(sys.num_vars(), budget.exponent_bound, |v| {
        if v.iter().any(|&x| x > 0) && sys.is_solution(v) {
            solutions.push(v.to_vec());
        }
    });
    let minimal: Vec<Vec<u64>> = solutions
        .iter()
        .filter(|v| {
            !solutions
                .iter()
                .any(|u| u != *v && u.iter().zip(v.iter()).all(|(a, b)| a <= b))
        })
        .cloned()
        .collect();
    minimal
}

/// Relevance from the units of `S_f`: the degrees of `x^a / f^k` with `a` supported
/// on the variables of `f` generate `D^f`, and `f` is relevant iff they span a
/// rank-`r` subgroup.
pub fn brute_is_relevant(ring: &GradedRing, f: &Monomial, budget: &SearchBudget) -> Result<bool> {
    ring.check_monomial(f)?;
    let group = ring.group();
    let df = ring.degree_of_monomial(f)?;
    let support = f.support();
    let mut degrees: BTreeSet<Vec<BigRational>> = BTreeSet::new();
    let bound = budget.exponent_bound.max(1);
    for_each_in_box(support.len() + 1, bound, |v| {
        let mut deg = group.neg(&group.scale(&df, &BigInt::from(v[support.len()])));
        for (e, &i) in v.iter().zip(&support) {
            deg = group.add(&deg, &group.scale(&ring.degrees()[i], &BigInt::from(*e)));
        }
        degrees.insert(deg.free().iter().map(q).collect());
    });
    let rows: Vec<Vec<BigRational>> = degrees.into_iter().collect();
    Ok(rational_rank(&rows) == group.rank())
}

/// Order of `d` in `D / ⟨gens⟩` by repeated addition; `None` past the step bound.
pub fn brute_order_mod(
    group: &AbelianGroup,
    gens: &[GroupElement],
    d: &GroupElement,
    budget: &SearchBudget,
) -> Result<Option<u64>> {
    let mut acc = d.clone();
    for k in 1..=budget.coset_bound {
        match brute_contains(group, gens, &acc, budget)? {
            Some(true) => return Ok(Some(k)),
            Some(false) => {}
            None => return Ok(None),
        }
        acc = group.add(&acc, d);
    }
    Ok(None)
}
