//! Relevance of homogeneous elements and the monomial generators of the irrelevant ideal.
//!
//! For a monomial `f` the homogeneous divisors of powers of `f` are, up to scalars,
//! the monomials in the variables dividing `f`. Hence the support group `D^f` and the
//! weight cone `C_D(f)` only depend on the degrees of those variables.

use crate::abelian_group::{GroupElement, Index, Subgroup};
use crate::error::{Error, Result};
use crate::graded_ring::{free_part_q, sort_monomials, Cone, GradedRing, Monomial, Polynomial};
use crate::lp;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelevanceReport {
    pub monomial: Monomial,
    pub degree: GroupElement,
    /// Degrees of the variables dividing the monomial.
    pub support_degrees: Vec<GroupElement>,
    /// `D^f`, generated by `support_degrees`.
    pub support_group: Subgroup,
    /// `[D : D^f]`.
    pub index: Index,
    /// `C_D(f)`.
    pub cone: Cone,
    pub cone_full_dim: bool,
    pub deg_in_interior: bool,
    pub relevant: bool,
    pub strongly_relevant: bool,
}

fn support_degrees(ring: &GradedRing, m: &Monomial) -> Vec<GroupElement> {
    m.support()
        .into_iter()
        .map(|i| ring.degrees()[i].clone())
        .collect()
}

/// Rank of the subgroup generated by the degrees of the given variables.
pub(crate) fn degree_rank(ring: &GradedRing, vars: &[usize]) -> usize {
    let rows: Vec<_> = vars.iter().map(|&i| free_part_q(&ring.degrees()[i])).collect();
    lp::rank(&rows)
}

pub fn support_group(ring: &GradedRing, m: &Monomial) -> Result<Subgroup> {
    ring.check_monomial(m)?;
    Subgroup::from_generators(ring.group(), &support_degrees(ring, m))
}

/// Computes the three relevance criteria independently: finite index of `D^f`,
/// full-dimensionality of `C_D(f)`, and `deg f` in the interior of `C_D(f)`.
pub fn relevance_report(ring: &GradedRing, m: &Monomial) -> Result<RelevanceReport> {
    ring.require_effective()?;
    ring.check_monomial(m)?;
    let degree = ring.degree_of_monomial(m)?;
    let support_degrees = support_degrees(ring, m);
    let support_group = Subgroup::from_generators(ring.group(), &support_degrees)?;
    let index = support_group.index();
    let cone = Cone::from_degrees(ring.group(), &support_degrees);
    let cone_full_dim = cone.is_full_dimensional();
    let deg_in_interior = cone.interior_contains(&free_part_q(&degree));

    let relevant = index.is_finite();
    if relevant != cone_full_dim || relevant != deg_in_interior {
        return Err(Error::Internal(format!(
            "relevance criteria disagree for {}: finite index {relevant}, \
             full-dimensional cone {cone_full_dim}, interior degree {deg_in_interior}",
            ring.render_monomial(m)
        )));
    }
    let strongly_relevant = support_group.equals_ambient();
    Ok(RelevanceReport {
        monomial: m.clone(),
        degree,
        support_degrees,
        support_group,
        index,
        cone,
        cone_full_dim,
        deg_in_interior,
        relevant,
        strongly_relevant,
    })
}

pub fn is_relevant(ring: &GradedRing, m: &Monomial) -> Result<bool> {
    Ok(relevance_report(ring, m)?.relevant)
}

/// A nonzero homogeneous polynomial is relevant iff every term has a subset of its
/// support variables of size `≥ r` whose degrees span a rank-`r` subgroup.
pub fn is_relevant_polynomial(ring: &GradedRing, p: &Polynomial) -> Result<bool> {
    ring.require_effective()?;
    if p.is_zero() {
        return Err(Error::invalid("the zero polynomial is not homogeneous of any degree"));
    }
    ring.homogeneous_degree(p)?;
    let r = ring.rank();
    Ok(p.monomials()
        .all(|m| degree_rank(ring, &m.support()) == r))
}

/// Lexicographic `k`-subsets of `0..n`.
pub(crate) fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

/// `Gen^D(S)`: squarefree products of `r` variables whose degrees have rank `r`,
/// in canonical order. For finite `D` this is the unit monomial alone.
pub fn monomic_generators(ring: &GradedRing) -> Result<Vec<Monomial>> {
    ring.require_effective()?;
    let n = ring.nvars();
    let r = ring.rank();
    let mut gens: Vec<Monomial> = subsets(n, r)
        .into_iter()
        .filter(|vars| degree_rank(ring, vars) == r)
        .map(|vars| Monomial::squarefree(n, &vars))
        .collect();
    sort_monomials(&mut gens);
    Ok(gens)
}

pub fn in_irrelevant_ideal(ring: &GradedRing, m: &Monomial) -> Result<bool> {
    ring.check_monomial(m)?;
    Ok(monomic_generators(ring)?.iter().any(|g| g.divides(m)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded_ring::fixtures::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use num_traits::One;

    fn names(ring: &GradedRing, ms: &[Monomial]) -> Vec<String> {
        ms.iter().map(|m| ring.render_monomial(m)).collect()
    }

    #[test]
    fn support_group_examples() {
        let r = double_origin();
        let g = support_group(&r, &mono(&r, &[1, 1, 0])).unwrap();
        assert_eq!(g, Subgroup::whole(r.group()));
        let g = support_group(&r, &mono(&r, &[1, 0, 0])).unwrap();
        assert_eq!(g.index(), Index::Infinite);
        assert!(g.contains(&r.group().element_from_ints(&[3, 0]).unwrap()));
        let g = support_group(&r, &mono(&r, &[1, 0, 1])).unwrap();
        assert!(g.equals_ambient());
        let g = support_group(&r, &Monomial::unit(3)).unwrap();
        assert_eq!(g, Subgroup::zero(r.group()));
    }

    #[test]
    fn relevance_report_examples() {
        let r = double_origin();
        let rep = relevance_report(&r, &mono(&r, &[1, 1, 0])).unwrap();
        assert!(rep.relevant && rep.strongly_relevant);
        assert_eq!(rep.index, Index::Finite(1.into()));

        let rep = relevance_report(&r, &mono(&r, &[1, 0, 0])).unwrap();
        assert!(!rep.relevant && !rep.cone_full_dim && !rep.deg_in_interior);
        assert_eq!(rep.cone.dimension(), 1);

        let t = torsion_ring();
        let rep = relevance_report(&t, &mono(&t, &[0, 1, 0])).unwrap();
        assert!(!rep.relevant);
        assert_eq!(rep.index, Index::Infinite);

        let rep = relevance_report(&t, &mono(&t, &[1, 0, 0])).unwrap();
        assert!(rep.relevant && !rep.strongly_relevant);
        assert_eq!(rep.index, Index::Finite(2.into()));
    }

    #[test]
    fn relevance_requires_effective_grading() {
        let r = ring(2, &[], &[("x", &[1, 0]), ("y", &[1, 0])]);
        let err = relevance_report(&r, &mono(&r, &[1, 1])).unwrap_err();
        assert!(matches!(err, Error::Precondition(_)));
        assert!(monomic_generators(&r).is_err());
    }

    #[test]
    fn relevant_polynomials() {
        let r = double_origin();
        let p = |e: &[u32]| Polynomial::from_monomial(mono(&r, e));
        // x(xy + z) = x^2 y + x z
        let f = p(&[2, 1, 0]).add(&p(&[1, 0, 1]));
        assert!(is_relevant_polynomial(&r, &f).unwrap());
        let g = p(&[1, 1, 0]).add(&p(&[0, 0, 1]));
        assert!(!is_relevant_polynomial(&r, &g).unwrap());
        assert!(is_relevant_polynomial(&r, &p(&[1, 1, 0])).unwrap());
        let nonhom = p(&[1, 0, 0]).add(&p(&[0, 1, 0]));
        let err = is_relevant_polynomial(&r, &nonhom).unwrap_err();
        assert!(err.to_string().contains("(1,0)") && err.to_string().contains("(0,1)"));
        assert!(is_relevant_polynomial(&r, &Polynomial::zero(3)).is_err());
        let scaled = Polynomial::term(mono(&r, &[1, 1, 0]), BigRational::new(BigInt::from(3), BigInt::one()));
        assert!(is_relevant_polynomial(&r, &scaled).unwrap());
    }

    #[test]
    fn monomic_generator_examples() {
        let r = double_origin();
        assert_eq!(names(&r, &monomic_generators(&r).unwrap()), ["x*y", "x*z", "y*z"]);

        let r = four_var();
        let mut got = names(&r, &monomic_generators(&r).unwrap());
        got.sort();
        assert_eq!(got, ["x*w", "x*z", "y*w", "y*z", "z*w"]);

        let t = torsion_ring();
        assert_eq!(names(&t, &monomic_generators(&t).unwrap()), ["x", "z"]);

        let p3 = ring(1, &[], &[("x0", &[1]), ("x1", &[1]), ("x2", &[1]), ("x3", &[1])]);
        assert_eq!(names(&p3, &monomic_generators(&p3).unwrap()), ["x0", "x1", "x2", "x3"]);

        let finite = ring(0, &[3], &[("x", &[1]), ("y", &[2])]);
        assert_eq!(names(&finite, &monomic_generators(&finite).unwrap()), ["1"]);
    }

    #[test]
    fn irrelevant_ideal_membership() {
        let r = double_origin();
        assert!(in_irrelevant_ideal(&r, &mono(&r, &[2, 1, 1])).unwrap());
        assert!(!in_irrelevant_ideal(&r, &mono(&r, &[3, 0, 0])).unwrap());
        assert!(!in_irrelevant_ideal(&r, &Monomial::unit(3)).unwrap());
        let finite = ring(0, &[3], &[("x", &[1])]);
        assert!(in_irrelevant_ideal(&finite, &Monomial::unit(1)).unwrap());
    }

    #[test]
    fn subsets_enumeration() {
        assert_eq!(subsets(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(subsets(2, 0), vec![Vec::<usize>::new()]);
        assert!(subsets(2, 3).is_empty());
    }
}
