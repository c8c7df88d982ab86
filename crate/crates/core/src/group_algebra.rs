//! The group algebra `Q[D]` with its Hopf structure.
//!
//! Basis elements are the characters `χ^d`; `Δ(χ^d) = χ^d ⊗ χ^d`, `ε(χ^d) = 1` and
//! the antipode sends `χ^d` to `χ^{−d}`.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::abelian_group::{AbelianGroup, GroupElement};
use crate::error::{Error, Result};

pub type Tensor2 = BTreeMap<(GroupElement, GroupElement), BigRational>;
pub type Tensor3 = BTreeMap<(GroupElement, GroupElement, GroupElement), BigRational>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    group: AbelianGroup,
    coefficients: BTreeMap<GroupElement, BigRational>,
}

fn accumulate<K: Ord>(map: &mut BTreeMap<K, BigRational>, key: K, c: BigRational) {
    let entry = map.entry(key).or_insert_with(BigRational::zero);
    *entry += c;
}

fn prune<K: Ord>(map: &mut BTreeMap<K, BigRational>) {
    map.retain(|_, c| !c.is_zero());
}

impl GroupAlgebraElement {
    pub fn zero(group: &AbelianGroup) -> Self {
        GroupAlgebraElement {
            group: group.clone(),
            coefficients: BTreeMap::new(),
        }
    }

    /// `χ^d`.
    pub fn basis(group: &AbelianGroup, d: &GroupElement) -> Result<Self> {
        group.check_member(d)?;
        Ok(GroupAlgebraElement {
            group: group.clone(),
            coefficients: BTreeMap::from([(d.clone(), BigRational::one())]),
        })
    }

    pub fn from_terms(
        group: &AbelianGroup,
        terms: impl IntoIterator<Item = (GroupElement, BigRational)>,
    ) -> Result<Self> {
        let mut coefficients = BTreeMap::new();
        for (d, c) in terms {
            group.check_member(&d)?;
            accumulate(&mut coefficients, d, c);
        }
        prune(&mut coefficients);
        Ok(GroupAlgebraElement {
            group: group.clone(),
            coefficients,
        })
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn coefficients(&self) -> &BTreeMap<GroupElement, BigRational> {
        &self.coefficients
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    fn same_group(&self, other: &Self) -> Result<()> {
        if self.group == other.group {
            Ok(())
        } else {
            Err(Error::invalid(format!(
                "group algebra elements over {} and {}",
                self.group, other.group
            )))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_group(other)?;
        let mut coefficients = self.coefficients.clone();
        for (d, c) in &other.coefficients {
            accumulate(&mut coefficients, d.clone(), c.clone());
        }
        prune(&mut coefficients);
        Ok(GroupAlgebraElement {
            group: self.group.clone(),
            coefficients,
        })
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        let mut out = self.clone();
        for c in out.coefficients.values_mut() {
            *c *= s;
        }
        prune(&mut out.coefficients);
        out
    }

    /// Convolution: `χ^d · χ^e = χ^{d+e}`.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.same_group(other)?;
        let mut coefficients = BTreeMap::new();
        for (d, a) in &self.coefficients {
            for (e, b) in &other.coefficients {
                accumulate(&mut coefficients, self.group.add(d, e), a * b);
            }
        }
        prune(&mut coefficients);
        Ok(GroupAlgebraElement {
            group: self.group.clone(),
            coefficients,
        })
    }

    pub fn comultiply(&self) -> Tensor2 {
        self.coefficients
            .iter()
            .map(|(d, c)| ((d.clone(), d.clone()), c.clone()))
            .collect()
    }

    pub fn counit(&self) -> BigRational {
        self.coefficients.values().cloned().sum()
    }

    pub fn antipode(&self) -> Self {
        GroupAlgebraElement {
            group: self.group.clone(),
            coefficients: self
                .coefficients
                .iter()
                .map(|(d, c)| (self.group.neg(d), c.clone()))
                .collect(),
        }
    }

    /// `a ⊗ a`.
    pub fn tensor_square(&self) -> Tensor2 {
        let mut out = Tensor2::new();
        for (d, a) in &self.coefficients {
            for (e, b) in &self.coefficients {
                accumulate(&mut out, (d.clone(), e.clone()), a * b);
            }
        }
        prune(&mut out);
        out
    }

    /// `Δ(a) = a ⊗ a` with `a ≠ 0`, decided on coefficients: `aᵢaⱼ = 0` for `i ≠ j`
    /// and `aᵢ² = aᵢ`. Over `Q` this leaves exactly the basis characters.
    pub fn is_group_like(&self) -> bool {
        let coeffs: Vec<&BigRational> = self.coefficients.values().collect();
        if coeffs.is_empty() {
            return false;
        }
        let squares = coeffs.iter().all(|&a| a * a == *a);
        let orthogonal = coeffs
            .iter()
            .enumerate()
            .all(|(i, &a)| coeffs[i + 1..].iter().all(|&b| (a * b).is_zero()));
        squares && orthogonal
    }
}

/// `(Δ ⊗ id) ∘ Δ`.
pub fn coassoc_left(t: &Tensor2) -> Tensor3 {
    t.iter()
        .map(|((d, e), c)| ((d.clone(), d.clone(), e.clone()), c.clone()))
        .collect()
}

/// `(id ⊗ Δ) ∘ Δ`.
pub fn coassoc_right(t: &Tensor2) -> Tensor3 {
    t.iter()
        .map(|((d, e), c)| ((d.clone(), e.clone(), e.clone()), c.clone()))
        .collect()
}

/// `(ε ⊗ id)` applied to a two-fold tensor.
pub fn counit_left(group: &AbelianGroup, t: &Tensor2) -> GroupAlgebraElement {
    let mut coefficients = BTreeMap::new();
    for ((_, e), c) in t {
        accumulate(&mut coefficients, e.clone(), c.clone());
    }
    prune(&mut coefficients);
    GroupAlgebraElement {
        group: group.clone(),
        coefficients,
    }
}

impl fmt::Display for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coefficients.is_empty() {
            return f.write_str("0");
        }
        for (i, (d, c)) in self.coefficients.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if c.is_one() {
                write!(f, "chi{d}")?;
            } else {
                write!(f, "{c}*chi{d}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lp;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn z2() -> AbelianGroup {
        AbelianGroup::canonicalize(0, &[BigInt::from(2)]).unwrap()
    }

    fn chi(g: &AbelianGroup, d: &[i64]) -> GroupAlgebraElement {
        GroupAlgebraElement::basis(g, &g.element_from_ints(d).unwrap()).unwrap()
    }

    #[test]
    fn multiplication_examples() {
        let g = AbelianGroup::free(2);
        let prod = chi(&g, &[1, 0]).multiply(&chi(&g, &[0, 2])).unwrap();
        assert_eq!(prod, chi(&g, &[1, 2]));
        let s = chi(&g, &[1, 0]).add(&chi(&g, &[0, 1])).unwrap();
        assert_eq!(s.multiply(&chi(&g, &[0, 0])).unwrap(), s);
        let t = z2();
        assert_eq!(chi(&t, &[1]).multiply(&chi(&t, &[1])).unwrap(), chi(&t, &[0]));
        assert!(chi(&g, &[1, 0]).multiply(&chi(&t, &[1])).is_err());
    }

    #[test]
    fn comultiplication_examples() {
        let g = AbelianGroup::free(1);
        let d = g.element_from_ints(&[3]).unwrap();
        let e = g.element_from_ints(&[-1]).unwrap();
        let a = chi(&g, &[3]);
        assert_eq!(a.comultiply(), Tensor2::from([((d.clone(), d.clone()), q(1))]));
        assert_eq!(
            a.scale(&q(2)).comultiply(),
            Tensor2::from([((d.clone(), d.clone()), q(2))])
        );
        let s = a.add(&chi(&g, &[-1])).unwrap();
        assert_eq!(
            s.comultiply(),
            Tensor2::from([((d.clone(), d), q(1)), ((e.clone(), e), q(1))])
        );
    }

    #[test]
    fn group_like_examples() {
        let g = AbelianGroup::free(2);
        let a = chi(&g, &[1, -1]);
        assert!(a.is_group_like());
        assert!(!a.scale(&q(2)).is_group_like());
        let s = a.add(&chi(&g, &[0, 1])).unwrap();
        assert!(!s.is_group_like());
        assert_ne!(s.comultiply(), s.tensor_square());
        assert!(!GroupAlgebraElement::zero(&g).is_group_like());
    }

    #[test]
    fn basis_characters_are_independent() {
        let g = AbelianGroup::free(1);
        let elems: Vec<GroupElement> = (-2..=2).map(|i| g.element_from_ints(&[i]).unwrap()).collect();
        let rows: Vec<Vec<BigRational>> = elems
            .iter()
            .map(|d| {
                let x = GroupAlgebraElement::basis(&g, d).unwrap();
                elems
                    .iter()
                    .map(|e| x.coefficients().get(e).cloned().unwrap_or_else(BigRational::zero))
                    .collect()
            })
            .collect();
        assert_eq!(lp::rank(&rows), elems.len());
    }

    fn arb_element() -> impl Strategy<Value = GroupAlgebraElement> {
        let g = AbelianGroup::canonicalize(1, &[BigInt::from(3)]).unwrap();
        proptest::collection::vec(((-3i64..=3, 0i64..3), -3i64..=3), 0..=4).prop_map(move |terms| {
            let terms = terms
                .into_iter()
                .map(|((a, b), c)| (g.element_from_ints(&[a, b]).unwrap(), q(c)));
            GroupAlgebraElement::from_terms(&g, terms).unwrap()
        })
    }

    proptest! {
        #[test]
        fn hopf_axioms(a in arb_element()) {
            let delta = a.comultiply();
            prop_assert_eq!(coassoc_left(&delta), coassoc_right(&delta));
            prop_assert_eq!(counit_left(a.group(), &delta), a.clone());
            for d in a.coefficients().keys() {
                let x = GroupAlgebraElement::basis(a.group(), d).unwrap();
                let prod = x.multiply(&x.antipode()).unwrap();
                prop_assert_eq!(prod, GroupAlgebraElement::basis(a.group(), &a.group().zero()).unwrap());
            }
        }

        #[test]
        fn group_like_matches_tensor_square(a in arb_element()) {
            prop_assert_eq!(a.is_group_like(), !a.is_zero() && a.comultiply() == a.tensor_square());
        }
    }
}
