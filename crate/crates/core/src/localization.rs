//! Degree-zero localizations `S_(f)`, Veronese subrings and chart dimensions.
//!
//! Degree-zero fractions `x^a / f^k` correspond to natural solutions `(a, k)` of
//! `deg(x^a) − k·deg(f) = 0` in `D`: free coordinates give equations, torsion
//! coordinates give congruences. The Hilbert basis of that system generates `S_(f)`
//! as a monoid algebra.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::abelian_group::{GroupElement, Index, Subgroup};
use crate::diophantine::{hilbert_basis, DiophantineSystem, SolverBudget};
use crate::error::{Error, Result};
use crate::graded_ring::{sort_monomials, GradedRing, Monomial};
use crate::lp;
use crate::relevance;

/// A fraction of monomials with no common variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReducedFraction {
    numerator: Monomial,
    denominator: Monomial,
}

impl ReducedFraction {
    /// Cancels the monomial gcd.
    pub fn new(numerator: &Monomial, denominator: &Monomial) -> Self {
        let g = numerator.gcd(denominator);
        ReducedFraction {
            numerator: g.quotient_of(numerator).expect("gcd divides"),
            denominator: g.quotient_of(denominator).expect("gcd divides"),
        }
    }

    pub fn numerator(&self) -> &Monomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &Monomial {
        &self.denominator
    }

    pub fn is_unit(&self) -> bool {
        self.numerator.is_unit() && self.denominator.is_unit()
    }

    pub fn render(&self, ring: &GradedRing) -> String {
        let part = |m: &Monomial| {
            let s = ring.render_monomial(m);
            if s.contains('*') {
                format!("({s})")
            } else {
                s
            }
        };
        if self.denominator.is_unit() {
            ring.render_monomial(&self.numerator)
        } else {
            format!("{}/{}", part(&self.numerator), part(&self.denominator))
        }
    }

    pub fn display<'a>(&'a self, ring: &'a GradedRing) -> impl fmt::Display + 'a {
        struct D<'a>(&'a ReducedFraction, &'a GradedRing);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0.render(self.1))
            }
        }
        D(self, ring)
    }
}

/// Canonical list order: by numerator, then denominator, graded-lex largest first.
pub fn sort_fractions(list: &mut [ReducedFraction]) {
    list.sort_by(|a, b| b.cmp(a));
}

/// A Hilbert-basis solution `(a, k)` standing for `x^a / f^k`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct DegreeZeroSolution {
    pub exponents: Vec<u64>,
    pub power: u64,
}

/// Generators of `S_(f)` together with the solutions they came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeZeroChart {
    pub f: Monomial,
    /// Solutions `(a, k)` behind the fractions: the Hilbert basis of the degree-zero
    /// system when completed, one solution per generator otherwise.
    pub solutions: Vec<DegreeZeroSolution>,
    /// Reduced non-unit fractions, deduplicated, with products of other fractions
    /// removed, in canonical order.
    pub fractions: Vec<ReducedFraction>,
    /// For each fraction, the indices of the solutions reducing to it.
    pub sources: Vec<Vec<usize>>,
    /// Set when `f` is not relevant; the result then need not describe a chart.
    pub irrelevant_warning: bool,
}

fn to_i64(x: &BigInt, what: &str) -> Result<i64> {
    x.to_i64()
        .ok_or_else(|| Error::invalid(format!("{what} {x} does not fit the Diophantine solver")))
}

fn to_u32(x: u64) -> Result<u32> {
    u32::try_from(x).map_err(|_| Error::invalid(format!("exponent {x} is too large")))
}

/// The system `deg(x^a) − k·deg(f) = 0` over `(a, k) ∈ N^{n+1}`.
pub fn degree_zero_system(ring: &GradedRing, f: &Monomial) -> Result<DiophantineSystem> {
    let group = ring.group();
    let df = ring.degree_of_monomial(f)?;
    let n = ring.nvars();
    let mut equations = Vec::with_capacity(group.rank());
    for i in 0..group.rank() {
        let mut row = Vec::with_capacity(n + 1);
        for d in ring.degrees() {
            row.push(to_i64(&d.free()[i], "degree entry")?);
        }
        row.push(-to_i64(&df.free()[i], "degree entry")?);
        equations.push(row);
    }
    let mut congruences = Vec::with_capacity(group.torsion_len());
    for (j, modulus) in group.invariant_factors().iter().enumerate() {
        let mut row = Vec::with_capacity(n + 1);
        for d in ring.degrees() {
            row.push(to_i64(&d.torsion()[j], "torsion residue")?);
        }
        row.push(-to_i64(&df.torsion()[j], "torsion residue")?);
        congruences.push((row, to_i64(modulus, "torsion order")?));
    }
    DiophantineSystem::new(n + 1, equations, congruences)
}

/// Computes `S_(f)`.
///
/// When the degrees of the variables of `f` are linearly independent and span a
/// finite-index subgroup (every monomic relevant `f`), the degree-zero monoid is
/// `N^{n−r}` intersected with a finite-index lattice and its Hilbert basis is read
/// off the fundamental parallelepiped. Otherwise the `(a, k)` system is completed.
pub fn degree_zero_chart(
    ring: &GradedRing,
    f: &Monomial,
    budget: &SolverBudget,
) -> Result<DegreeZeroChart> {
    ring.check_monomial(f)?;
    let support = f.support();
    if support.len() == ring.rank() && relevance::degree_rank(ring, &support) == ring.rank() {
        chart_from_parallelepiped(ring, f, budget)
    } else {
        degree_zero_chart_by_completion(ring, f, budget)
    }
}

/// Computes `S_(f)` from the Hilbert basis of the `(a, k)` system, whatever `f` is.
pub fn degree_zero_chart_by_completion(
    ring: &GradedRing,
    f: &Monomial,
    budget: &SolverBudget,
) -> Result<DegreeZeroChart> {
    let irrelevant_warning = !relevance::support_group(ring, f)?.index().is_finite();
    let sys = degree_zero_system(ring, f)?;
    let solutions: Vec<DegreeZeroSolution> = hilbert_basis(&sys, budget)?
        .into_iter()
        .map(|mut v| {
            let power = v.pop().expect("n + 1 coordinates");
            DegreeZeroSolution {
                exponents: v,
                power,
            }
        })
        .collect();

    let mut merged: BTreeMap<ReducedFraction, Vec<usize>> = BTreeMap::new();
    for (idx, s) in solutions.iter().enumerate() {
        let num = Monomial::new(s.exponents.iter().map(|&e| to_u32(e)).collect::<Result<_>>()?);
        let den = f.pow(to_u32(s.power)?);
        let fr = ReducedFraction::new(&num, &den);
        if !fr.is_unit() {
            merged.entry(fr).or_default().push(idx);
        }
    }
    let images: Vec<ReducedFraction> = merged.keys().cloned().collect();
    // Without units the irreducible elements are the unique minimal generators.
    let support = f.support();
    let pointed = relevance::degree_rank(ring, &support) == support.len();
    let mut fractions: Vec<ReducedFraction> = images
        .iter()
        .filter(|v| !pointed || !images.iter().any(|w| w != *v && factors_through(f, v, w)))
        .cloned()
        .collect();
    sort_fractions(&mut fractions);
    let sources = fractions.iter().map(|fr| merged[fr].clone()).collect();
    Ok(DegreeZeroChart {
        f: f.clone(),
        solutions,
        fractions,
        sources,
        irrelevant_warning,
    })
}

fn to_u64(x: &BigInt) -> Result<u64> {
    x.to_u64()
        .ok_or_else(|| Error::Internal(format!("{x} is not a small natural number")))
}

/// The degree-zero monoid for `f` with `r` variables of independent degrees.
///
/// Writing `O` for the other variables, `x^w · ∏_{i ∈ supp f} x_i^{u_i}` has degree
/// zero for a unique integral `u` exactly when `deg(x^w) ∈ D^f`. So the monoid is
/// `{w ∈ N^O : deg(x^w) ∈ D^f}`, whose Hilbert basis lies in the box `w_j ≤ N_j`,
/// `N_j` the order of `deg x_j` in `D/D^f`.
fn chart_from_parallelepiped(
    ring: &GradedRing,
    f: &Monomial,
    budget: &SolverBudget,
) -> Result<DegreeZeroChart> {
    let group = ring.group();
    let n = ring.nvars();
    let support = f.support();
    let others: Vec<usize> = (0..n).filter(|i| f.exponents()[*i] == 0).collect();
    let hf = relevance::support_group(ring, f)?;
    let q = hf.quotient_coordinates();
    let moduli = q
        .moduli()
        .iter()
        .map(|s| to_i64(s, "quotient order"))
        .collect::<Result<Vec<i64>>>()?;
    let class = |d: &GroupElement| -> Result<Vec<i64>> {
        let img = q.image(&group.lift(d));
        if img[moduli.len()..].iter().any(|x| !x.is_zero()) {
            return Err(Error::Internal("D^f has infinite index".into()));
        }
        moduli
            .iter()
            .zip(&img)
            .map(|(s, x)| to_i64(&x.mod_floor(&BigInt::from(*s)), "residue"))
            .collect()
    };
    let gens: Vec<Vec<i64>> = others
        .iter()
        .map(|&j| class(&ring.degrees()[j]))
        .collect::<Result<_>>()?;
    let orders: Vec<u64> = others
        .iter()
        .map(|&j| match q.order(&group.lift(&ring.degrees()[j])) {
            Index::Finite(k) => to_u64(&k),
            Index::Infinite => Err(Error::Internal("D^f has infinite index".into())),
        })
        .collect::<Result<_>>()?;

    let add = |acc: &mut [i64], g: &[i64], times: u64| {
        for ((a, x), s) in acc.iter_mut().zip(g).zip(&moduli) {
            *a = (*a + x * (times as i64 % s)).rem_euclid(*s);
        }
    };
    let d = others.len();
    let mut candidates: Vec<Vec<u64>> = Vec::new();
    if d > 0 {
        let last = d - 1;
        let mut table: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
        let mut c = vec![0i64; moduli.len()];
        for k in 0..orders[last] {
            table.insert(c.clone(), k);
            add(&mut c, &gens[last], 1);
        }
        let mut w = vec![0u64; d];
        let mut steps = 0u64;
        loop {
            steps += 1;
            if steps > budget.max_steps {
                return Err(Error::ResourceLimit {
                    what: "degree-zero parallelepiped enumeration".to_string(),
                    budget: budget.max_steps,
                });
            }
            let mut need = vec![0i64; moduli.len()];
            for j in 0..last {
                add(&mut need, &gens[j], w[j]);
            }
            for (x, s) in need.iter_mut().zip(&moduli) {
                *x = (-*x).rem_euclid(*s);
            }
            if let Some(&k) = table.get(&need) {
                w[last] = k;
                if w.iter().any(|&x| x > 0) {
                    candidates.push(w.clone());
                }
                w[last] = 0;
            }
            // Odometer over the first d − 1 coordinates.
            let Some(j) = (0..last).rev().find(|&j| w[j] + 1 < orders[j]) else {
                break;
            };
            w[j] += 1;
            w[j + 1..last].iter_mut().for_each(|x| *x = 0);
        }
        for (j, &nj) in orders.iter().enumerate() {
            let mut e = vec![0u64; d];
            e[j] = nj;
            candidates.push(e);
        }
    }
    candidates.sort_by_key(|v| (v.iter().sum::<u64>(), v.clone()));
    let mut basis: Vec<Vec<u64>> = Vec::new();
    for v in candidates {
        if !basis.iter().any(|b| b.iter().zip(&v).all(|(x, y)| x <= y)) {
            basis.push(v);
        }
    }

    let mut entries: Vec<(ReducedFraction, DegreeZeroSolution)> = Vec::with_capacity(basis.len());
    for w in &basis {
        let mut t = group.zero();
        for (&j, &e) in others.iter().zip(w) {
            t = group.add(&t, &group.scale(&ring.degrees()[j], &BigInt::from(e)));
        }
        let r = support.len();
        let rows: Vec<Vec<BigRational>> = (0..group.rank())
            .map(|c| {
                let mut row: Vec<BigRational> = support
                    .iter()
                    .map(|&i| BigRational::from_integer(ring.degrees()[i].free()[c].clone()))
                    .collect();
                row.push(BigRational::from_integer(-t.free()[c].clone()));
                row
            })
            .collect();
        let u = lp::solve_unique(rows, r)
            .ok_or_else(|| Error::Internal("support degrees are dependent".into()))?;
        let mut num = vec![0u32; n];
        let mut den = vec![0u32; n];
        for (&j, &e) in others.iter().zip(w) {
            num[j] = to_u32(e)?;
        }
        for (&i, ui) in support.iter().zip(&u) {
            if !ui.is_integer() {
                return Err(Error::Internal(format!("non-integral exponent {ui}")));
            }
            let v = ui.to_integer();
            if v.is_negative() {
                den[i] = to_u32(to_u64(&-v)?)?;
            } else {
                num[i] = to_u32(to_u64(&v)?)?;
            }
        }
        let fr = ReducedFraction {
            numerator: Monomial::new(num.clone()),
            denominator: Monomial::new(den.clone()),
        };
        if ring.degree_of_monomial(&fr.numerator)? != ring.degree_of_monomial(&fr.denominator)? {
            return Err(Error::Internal(format!(
                "fraction {} does not have degree zero",
                fr.render(ring)
            )));
        }
        let power = support
            .iter()
            .map(|&i| u64::from(den[i]).div_ceil(u64::from(f.exponents()[i])))
            .max()
            .unwrap_or(0);
        let exponents = (0..n)
            .map(|i| u64::from(num[i]) + power * u64::from(f.exponents()[i]) - u64::from(den[i]))
            .collect();
        entries.push((fr, DegreeZeroSolution { exponents, power }));
    }
    entries.sort_by(|a, b| b.0.cmp(&a.0));
    let (fractions, solutions): (Vec<_>, Vec<_>) = entries.into_iter().unzip();
    Ok(DegreeZeroChart {
        f: f.clone(),
        sources: (0..solutions.len()).map(|i| vec![i]).collect(),
        solutions,
        fractions,
        irrelevant_warning: false,
    })
}

/// Whether `v / w` is again a degree-zero fraction over `f`, i.e. `v` is `w` times a
/// nonzero element of the monoid. Both have degree zero, so only the exponents off
/// the support of `f` need checking: there `v` must dominate `w`.
fn factors_through(f: &Monomial, v: &ReducedFraction, w: &ReducedFraction) -> bool {
    let signed = |fr: &ReducedFraction, i: usize| {
        i64::from(fr.numerator.exponents()[i]) - i64::from(fr.denominator.exponents()[i])
    };
    (0..f.nvars())
        .filter(|&i| f.exponents()[i] == 0)
        .all(|i| signed(v, i) >= signed(w, i))
}

/// Monoid-algebra generators of `S_(f)` as reduced fractions.
pub fn degree_zero_generators(
    ring: &GradedRing,
    f: &Monomial,
    budget: &SolverBudget,
) -> Result<Vec<ReducedFraction>> {
    Ok(degree_zero_chart(ring, f, budget)?.fractions)
}

/// Minimal monomial generators of the Veronese subring `S_H = ⊕_{d ∈ H} S_d`.
pub fn veronese_generators(
    ring: &GradedRing,
    h: &Subgroup,
    budget: &SolverBudget,
) -> Result<Vec<Monomial>> {
    if h.ambient() != ring.group() {
        return Err(Error::invalid(format!(
            "subgroup of {} used with a ring graded by {}",
            h.ambient(),
            ring.group()
        )));
    }
    let q = h.quotient_coordinates();
    let images: Vec<Vec<BigInt>> = ring
        .degrees()
        .iter()
        .map(|d| q.image(&ring.group().lift(d)))
        .collect();
    let mut equations = Vec::new();
    let mut congruences = Vec::new();
    for i in 0..q.dim() {
        match q.moduli().get(i) {
            Some(s) if s.is_one() => {}
            Some(s) => {
                let row = images
                    .iter()
                    .map(|w| to_i64(&w[i].mod_floor(s), "coordinate"))
                    .collect::<Result<Vec<_>>>()?;
                congruences.push((row, to_i64(s, "modulus")?));
            }
            None => {
                let row = images
                    .iter()
                    .map(|w| to_i64(&w[i], "coordinate"))
                    .collect::<Result<Vec<_>>>()?;
                equations.push(row);
            }
        }
    }
    let sys = DiophantineSystem::new(ring.nvars(), equations, congruences)?;
    let mut gens = hilbert_basis(&sys, budget)?
        .into_iter()
        .map(|v| Ok(Monomial::new(v.into_iter().map(to_u32).collect::<Result<_>>()?)))
        .collect::<Result<Vec<_>>>()?;
    sort_monomials(&mut gens);
    Ok(gens)
}

/// Rank of the lattice spanned by `a − k·e_f` over the degree-zero Hilbert basis.
/// Equals `n − r` for relevant `f` under an effective grading; a mismatch is an
/// internal error.
pub fn chart_dimension(ring: &GradedRing, f: &Monomial, budget: &SolverBudget) -> Result<usize> {
    ring.require_effective()?;
    let chart = degree_zero_chart(ring, f, budget)?;
    if chart.irrelevant_warning {
        return Err(Error::Domain(format!(
            "{} is not relevant; it defines no chart",
            ring.render_monomial(f)
        )));
    }
    let dim = lattice_rank(f, &chart.solutions);
    let expected = ring.nvars() - ring.rank();
    if dim != expected {
        return Err(Error::Internal(format!(
            "chart {} has dimension {dim}, expected n - r = {expected}",
            ring.render_monomial(f)
        )));
    }
    Ok(dim)
}

pub(crate) fn lattice_rank(f: &Monomial, solutions: &[DegreeZeroSolution]) -> usize {
    let rows: Vec<Vec<BigRational>> = solutions
        .iter()
        .map(|s| {
            s.exponents
                .iter()
                .zip(f.exponents())
                .map(|(&a, &e)| {
                    let v = BigInt::from(a) - BigInt::from(s.power) * BigInt::from(e);
                    BigRational::from_integer(v)
                })
                .collect()
        })
        .collect();
    lp::rank(&rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded_ring::fixtures::*;
    use proptest::prelude::*;

    fn gens(ring: &GradedRing, f: &[u32]) -> Vec<String> {
        degree_zero_generators(ring, &mono(ring, f), &SolverBudget::default())
            .unwrap()
            .iter()
            .map(|fr| fr.render(ring))
            .collect()
    }

    #[test]
    fn doubled_origin_charts() {
        let r = double_origin();
        assert_eq!(gens(&r, &[1, 1, 0]), ["z/(x*y)"]);
        assert_eq!(gens(&r, &[1, 0, 1]), ["(x*y)/z"]);
        assert_eq!(gens(&r, &[0, 1, 1]), ["(x*y)/z"]);
    }

    #[test]
    fn projective_line_chart() {
        let r = ring(1, &[], &[("x0", &[1]), ("x1", &[1])]);
        assert_eq!(gens(&r, &[1, 0]), ["x1/x0"]);
    }

    #[test]
    fn chart_records_provenance_and_warning() {
        let r = double_origin();
        let b = SolverBudget::default();
        let c = degree_zero_chart_by_completion(&r, &mono(&r, &[1, 0, 1]), &b).unwrap();
        assert_eq!(c.solutions.len(), 2);
        assert_eq!(c.sources, vec![vec![1]]);
        let c = degree_zero_chart(&r, &mono(&r, &[1, 0, 1]), &b).unwrap();
        assert_eq!(c.solutions, [DegreeZeroSolution { exponents: vec![2, 1, 0], power: 1 }]);
        assert_eq!(c.sources, vec![vec![0]]);
        assert!(!c.irrelevant_warning);
        let c = degree_zero_chart(&r, &mono(&r, &[1, 0, 0]), &SolverBudget::default()).unwrap();
        assert!(c.irrelevant_warning);
        assert!(c.fractions.is_empty());
    }

    #[test]
    fn every_fraction_has_degree_zero() {
        let t = torsion_ring();
        for f in [[1, 0, 0], [0, 0, 1], [1, 1, 1]] {
            let c = degree_zero_chart(&t, &mono(&t, &f), &SolverBudget::default()).unwrap();
            for fr in &c.fractions {
                assert_eq!(
                    t.degree_of_monomial(fr.numerator()).unwrap(),
                    t.degree_of_monomial(fr.denominator()).unwrap()
                );
                assert!(fr.numerator().gcd(fr.denominator()).is_unit());
            }
        }
    }

    #[test]
    fn veronese_examples() {
        let budget = SolverBudget::default();
        let r = ring(1, &[], &[("x", &[1]), ("y", &[1])]);
        let two_z = Subgroup::from_generators(r.group(), &[r.group().element_from_ints(&[2]).unwrap()]).unwrap();
        let v: Vec<_> = veronese_generators(&r, &two_z, &budget)
            .unwrap()
            .iter()
            .map(|m| r.render_monomial(m))
            .collect();
        assert_eq!(v, ["x^2", "x*y", "y^2"]);
        let whole = Subgroup::whole(r.group());
        let v: Vec<_> = veronese_generators(&r, &whole, &budget)
            .unwrap()
            .iter()
            .map(|m| r.render_monomial(m))
            .collect();
        assert_eq!(v, ["x", "y"]);

        let t = torsion_ring();
        let free = Subgroup::free_part(t.group());
        let v: Vec<_> = veronese_generators(&t, &free, &budget)
            .unwrap()
            .iter()
            .map(|m| t.render_monomial(m))
            .collect();
        assert_eq!(v, ["y^2", "y*z", "z^2", "x"]);

        let other = Subgroup::whole(&crate::AbelianGroup::free(3));
        assert!(veronese_generators(&t, &other, &budget).is_err());
    }

    #[test]
    fn chart_dimension_examples() {
        let budget = SolverBudget::default();
        let r = double_origin();
        assert_eq!(chart_dimension(&r, &mono(&r, &[1, 1, 0]), &budget).unwrap(), 1);
        let r = ring(2, &[], &[("x", &[1, 0]), ("y", &[0, 1])]);
        assert_eq!(chart_dimension(&r, &mono(&r, &[1, 1]), &budget).unwrap(), 0);
        let r = ring(1, &[], &[("x0", &[1]), ("x1", &[1])]);
        assert_eq!(chart_dimension(&r, &mono(&r, &[1, 0]), &budget).unwrap(), 1);
        let r = double_origin();
        assert!(matches!(
            chart_dimension(&r, &mono(&r, &[0, 0, 1]), &budget),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn integrality_witness() {
        for r in [double_origin(), torsion_ring(), four_var()] {
            let free = Subgroup::free_part(r.group());
            for (i, d) in r.degrees().iter().enumerate() {
                let n = free.integrality_exponent(d).unwrap();
                let n = n.finite().expect("free part has finite index").to_u32().unwrap();
                let power = Monomial::var(r.nvars(), i).pow(n);
                assert!(free.contains(&r.degree_of_monomial(&power).unwrap()));
            }
        }
    }

    #[test]
    fn non_pointed_chart_keeps_inverse_pairs() {
        let r = double_origin();
        assert_eq!(gens(&r, &[1, 1, 1]), ["(x*y)/z", "z/(x*y)"]);
    }

    fn arb_ring() -> impl Strategy<Value = GradedRing> {
        (1usize..=2, proptest::option::of(2i64..=3), 2usize..=4)
            .prop_flat_map(|(rank, tors, extra)| {
                let width = rank + usize::from(tors.is_some());
                let n = rank + extra - 1;
                (
                    Just((rank, tors)),
                    proptest::collection::vec(proptest::collection::vec(0i64..=2, width), n),
                )
            })
            .prop_map(|((rank, tors), degs)| {
                let names: Vec<String> = (0..degs.len()).map(|i| format!("x{i}")).collect();
                let vars: Vec<(&str, &[i64])> =
                    names.iter().map(String::as_str).zip(degs.iter().map(Vec::as_slice)).collect();
                let torsion: Vec<i64> = tors.into_iter().collect();
                ring(rank, &torsion, &vars)
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn parallelepiped_agrees_with_completion(r in arb_ring()) {
            prop_assume!(r.effective());
            let b = SolverBudget::default();
            for f in relevance::monomic_generators(&r).unwrap() {
                let fast = degree_zero_chart(&r, &f, &b).unwrap();
                let Ok(slow) = degree_zero_chart_by_completion(&r, &f, &SolverBudget::new(20_000)) else {
                    continue;
                };
                prop_assert_eq!(&fast.fractions, &slow.fractions, "f = {}", r.render_monomial(&f));
                prop_assert_eq!(lattice_rank(&f, &fast.solutions), r.nvars() - r.rank());
            }
        }
    }
}
