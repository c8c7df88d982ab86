//! Polynomial rings `k[T₁,…,Tₙ]` graded by a finitely generated abelian group.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::abelian_group::{AbelianGroup, GroupElement, Subgroup};
use crate::error::{Error, Result};
use crate::lp::{self, QVec};

/// Exponent vector of a monomial.
///
/// Ordered graded-lexicographically: higher total degree is larger, ties broken
/// lexicographically with `T₁ > T₂ > … > Tₙ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial { exponents }
    }

    pub fn unit(nvars: usize) -> Self {
        Monomial {
            exponents: vec![0; nvars],
        }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::unit(nvars);
        m.exponents[i] = 1;
        m
    }

    /// Product of the variables with the given indices.
    pub fn squarefree(nvars: usize, vars: &[usize]) -> Self {
        let mut m = Self::unit(nvars);
        for &i in vars {
            m.exponents[i] = 1;
        }
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn nvars(&self) -> usize {
        self.exponents.len()
    }

    pub fn total_degree(&self) -> u64 {
        self.exponents.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_unit(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    /// Indices of the variables dividing the monomial.
    pub fn support(&self) -> Vec<usize> {
        (0..self.exponents.len())
            .filter(|&i| self.exponents[i] > 0)
            .collect()
    }

    pub fn radical(&self) -> Self {
        Self::squarefree(self.nvars(), &self.support())
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial {
            exponents: self.exponents.iter().map(|a| a * k).collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        self.divides(other).then(|| Monomial {
            exponents: other
                .exponents
                .iter()
                .zip(&self.exponents)
                .map(|(b, a)| b - a)
                .collect(),
        })
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| *a.min(b))
                .collect(),
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.exponents.cmp(&other.exponents))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sort monomials into canonical list order (graded-lex, largest first).
pub fn sort_monomials(list: &mut [Monomial]) {
    list.sort_by(|a, b| b.cmp(a));
}

/// A polynomial with exact rational coefficients; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        Self::term(Monomial::unit(nvars), c)
    }

    pub fn term(m: Monomial, c: BigRational) -> Self {
        let nvars = m.nvars();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { nvars, terms }
    }

    pub fn from_monomial(m: Monomial) -> Self {
        Self::term(m, BigRational::one())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical display order (graded-lex, largest first).
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter().rev()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys().rev()
    }

    /// The monomial itself when the polynomial is a single term with coefficient 1.
    pub fn as_monomial(&self) -> Option<&Monomial> {
        match self.terms.iter().next() {
            Some((m, c)) if self.terms.len() == 1 && c.is_one() => Some(m),
            _ => None,
        }
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut out = Polynomial::constant(self.nvars, BigRational::one());
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }
}

/// A rational polyhedral cone in `Q^r`, given by generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cone {
    ambient_dim: usize,
    generators: Vec<QVec>,
}

impl Cone {
    /// Zero generators are dropped.
    pub fn new(ambient_dim: usize, generators: Vec<QVec>) -> Self {
        let generators = generators
            .into_iter()
            .filter(|g| {
                assert_eq!(g.len(), ambient_dim);
                g.iter().any(|x| !x.is_zero())
            })
            .collect();
        Cone {
            ambient_dim,
            generators,
        }
    }

    /// Cone spanned by the free parts of group elements.
    pub fn from_degrees(group: &AbelianGroup, degrees: &[GroupElement]) -> Self {
        let gens = degrees.iter().map(free_part_q).collect();
        Self::new(group.rank(), gens)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn generators(&self) -> &[QVec] {
        &self.generators
    }

    pub fn dimension(&self) -> usize {
        lp::rank(&self.generators)
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dimension() == self.ambient_dim
    }

    /// Whether `point` lies in the interior of the cone inside `Q^r`; always false for
    /// lower-dimensional cones. Decided exactly as feasibility of
    /// `Σ λᵢ gᵢ = t·point` with all `λᵢ ≥ 1` and `t ≥ 1`.
    pub fn interior_contains(&self, point: &[BigRational]) -> bool {
        if !self.is_full_dimensional() {
            return false;
        }
        let nvars = self.generators.len() + 1;
        let rows: Vec<QVec> = (0..self.ambient_dim)
            .map(|i| {
                let mut row: QVec = self.generators.iter().map(|g| g[i].clone()).collect();
                row.push(-point[i].clone());
                row
            })
            .collect();
        lp::strictly_positive_kernel(&rows, nvars)
    }
}

pub(crate) fn free_part_q(d: &GroupElement) -> QVec {
    d.free()
        .iter()
        .map(|x| BigRational::from_integer(x.clone()))
        .collect()
}

fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// `S = k[T₁,…,Tₙ]` with `deg Tᵢ = dᵢ ∈ D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedRing {
    group: AbelianGroup,
    var_names: Vec<String>,
    degrees: Vec<GroupElement>,
    effective: bool,
}

impl GradedRing {
    pub fn new(
        group: AbelianGroup,
        var_names: Vec<String>,
        degrees: Vec<GroupElement>,
    ) -> Result<Self> {
        if var_names.is_empty() {
            return Err(Error::invalid("a graded ring needs at least one variable"));
        }
        if var_names.len() != degrees.len() {
            return Err(Error::invalid(format!(
                "{} variable names but {} degrees",
                var_names.len(),
                degrees.len()
            )));
        }
        let mut seen = BTreeSet::new();
        for name in &var_names {
            if !is_identifier(name) {
                return Err(Error::invalid(format!("`{name}` is not a valid variable name")));
            }
            if !seen.insert(name.as_str()) {
                return Err(Error::invalid(format!("duplicate variable `{name}`")));
            }
        }
        for (name, d) in var_names.iter().zip(&degrees) {
            if !group.is_member(d) {
                return Err(Error::invalid(format!(
                    "degree {d} of `{name}` is not an element of {group}"
                )));
            }
        }
        let effective = Subgroup::from_generators(&group, &degrees)?.equals_ambient();
        Ok(GradedRing {
            group,
            var_names,
            degrees,
            effective,
        })
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn nvars(&self) -> usize {
        self.var_names.len()
    }

    pub fn rank(&self) -> usize {
        self.group.rank()
    }

    pub fn var_names(&self) -> &[String] {
        &self.var_names
    }

    pub fn degrees(&self) -> &[GroupElement] {
        &self.degrees
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.var_names.iter().position(|n| n == name)
    }

    /// Cached result of [`is_effective`](Self::is_effective).
    pub fn effective(&self) -> bool {
        self.effective
    }

    pub(crate) fn require_effective(&self) -> Result<()> {
        if self.effective {
            Ok(())
        } else {
            Err(Error::Precondition(format!(
                "the grading by {} is not effective; effectivize the ring first",
                self.group
            )))
        }
    }

    pub fn check_monomial(&self, m: &Monomial) -> Result<()> {
        if m.nvars() != self.nvars() {
            return Err(Error::invalid(format!(
                "monomial has {} exponents, ring has {} variables",
                m.nvars(),
                self.nvars()
            )));
        }
        Ok(())
    }

    pub fn degree_of_monomial(&self, m: &Monomial) -> Result<GroupElement> {
        self.check_monomial(m)?;
        Ok(self.degree_of_exponents(m.exponents()))
    }

    pub(crate) fn degree_of_exponents(&self, exps: &[u32]) -> GroupElement {
        exps.iter()
            .zip(&self.degrees)
            .filter(|(e, _)| **e > 0)
            .fold(self.group.zero(), |acc, (e, d)| {
                self.group.add(&acc, &self.group.scale(d, &BigInt::from(*e)))
            })
    }

    pub fn homogeneous_components(
        &self,
        p: &Polynomial,
    ) -> Result<BTreeMap<GroupElement, Polynomial>> {
        if p.nvars() != self.nvars() {
            return Err(Error::invalid("polynomial is over a different number of variables"));
        }
        let mut out: BTreeMap<GroupElement, Polynomial> = BTreeMap::new();
        for (m, c) in p.terms() {
            let d = self.degree_of_exponents(m.exponents());
            out.entry(d)
                .or_insert_with(|| Polynomial::zero(self.nvars()))
                .add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    /// The degree of a nonzero homogeneous polynomial; an error naming the
    /// offending degrees otherwise.
    pub fn homogeneous_degree(&self, p: &Polynomial) -> Result<GroupElement> {
        let comps = self.homogeneous_components(p)?;
        match comps.len() {
            0 => Err(Error::invalid("the zero polynomial has no degree")),
            1 => Ok(comps.into_keys().next().expect("one component")),
            _ => Err(Error::invalid(format!(
                "polynomial is not homogeneous: it has components in degrees {}",
                comps
                    .keys()
                    .map(|d| d.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            ))),
        }
    }

    /// `(effective, effectivized)`: the effectivized ring is graded by the subgroup
    /// generated by the variable degrees, in canonical coordinates.
    pub fn is_effective(&self) -> (bool, GradedRing) {
        if self.effective {
            return (true, self.clone());
        }
        let h = Subgroup::from_generators(&self.group, &self.degrees)
            .expect("degrees are members of the group");
        let coords = h.coordinates();
        let degrees = self
            .degrees
            .iter()
            .map(|d| coords.express(d).expect("each degree lies in the generated subgroup"))
            .collect();
        let ring = GradedRing::new(coords.group().clone(), self.var_names.clone(), degrees)
            .expect("re-coordinatized ring is valid");
        debug_assert!(ring.effective);
        (false, ring)
    }

    pub fn effectivize(&self) -> GradedRing {
        self.is_effective().1
    }

    /// The weight cone σ(S): spanned by the free parts of the variable degrees.
    pub fn weight_cone(&self) -> Cone {
        Cone::from_degrees(&self.group, &self.degrees)
    }

    pub fn render_monomial(&self, m: &Monomial) -> String {
        let factors: Vec<String> = m
            .exponents()
            .iter()
            .zip(&self.var_names)
            .filter(|(e, _)| **e > 0)
            .map(|(e, name)| {
                if *e == 1 {
                    name.clone()
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect();
        if factors.is_empty() {
            "1".to_string()
        } else {
            factors.join("*")
        }
    }

    pub fn render_polynomial(&self, p: &Polynomial) -> String {
        if p.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in p.terms().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mono = self.render_monomial(m);
            if m.is_unit() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{abs}*{mono}"));
            }
        }
        out
    }

    pub fn display_monomial<'a>(&'a self, m: &'a Monomial) -> impl fmt::Display + 'a {
        struct D<'a>(&'a GradedRing, &'a Monomial);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0.render_monomial(self.1))
            }
        }
        D(self, m)
    }
}
