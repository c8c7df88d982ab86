//! Finitely generated abelian groups `Z^r ⊕ Z/n₁ ⊕ … ⊕ Z/n_t` and their subgroups.
//!
//! Every subgroup question is answered on the lift to `Z^{r+t}`: a subgroup
//! `H ≤ D` corresponds to the lattice spanned by lifts of its generators together
//! with the relation rows `nⱼ·e_{r+j}`, kept in Hermite normal form.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::intmat::{
    hermite_normal_form, lcm_all, smith_normal_form, solve_in_echelon_basis, vec_mat, IntVec,
};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AbelianGroup {
    rank: usize,
    invariant_factors: Vec<BigInt>,
}

/// An element of an [`AbelianGroup`]; torsion residues are least non-negative representatives.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    free: Vec<BigInt>,
    torsion: Vec<BigInt>,
}

impl GroupElement {
    pub fn free(&self) -> &[BigInt] {
        &self.free
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn is_zero(&self) -> bool {
        self.free.iter().chain(&self.torsion).all(Zero::is_zero)
    }

    /// Concatenated coordinates, free part first.
    pub fn coordinates(&self) -> IntVec {
        self.free.iter().chain(&self.torsion).cloned().collect()
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[BigInt]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        if self.torsion.is_empty() {
            write!(f, "({})", join(&self.free))
        } else {
            write!(f, "({};{})", join(&self.free), join(&self.torsion))
        }
    }
}

/// Subgroup index `[D:H]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Index {
    Finite(BigInt),
    Infinite,
}

impl Index {
    pub fn is_finite(&self) -> bool {
        matches!(self, Index::Finite(_))
    }

    pub fn finite(&self) -> Option<&BigInt> {
        match self {
            Index::Finite(n) => Some(n),
            Index::Infinite => None,
        }
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Index::Finite(n) => write!(f, "{n}"),
            Index::Infinite => f.write_str("infinite"),
        }
    }
}

impl Serialize for Index {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Index::Finite(n) => match n.to_u64() {
                Some(v) => s.serialize_u64(v),
                None => s.serialize_str(&n.to_string()),
            },
            Index::Infinite => s.serialize_str("infinite"),
        }
    }
}

/// `G = Spec(k[D])` written as `G_m^{gm_count} × ∏ μ_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSchemeDecomposition {
    pub gm_count: usize,
    pub mu_orders: Vec<BigInt>,
    pub connected: bool,
}

impl fmt::Display for GroupSchemeDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.gm_count {
            0 => {}
            1 => parts.push("G_m".to_string()),
            n => parts.push(format!("G_m^{n}")),
        }
        parts.extend(self.mu_orders.iter().map(|n| format!("mu_{n}")));
        if parts.is_empty() {
            parts.push("trivial".to_string());
        }
        write!(f, "{}", parts.join(" x "))
    }
}

fn is_divisibility_chain(orders: &[BigInt]) -> bool {
    orders.windows(2).all(|w| w[1].is_multiple_of(&w[0]))
}

impl AbelianGroup {
    pub fn free(rank: usize) -> Self {
        AbelianGroup {
            rank,
            invariant_factors: Vec::new(),
        }
    }

    /// The group `Z^rank ⊕ ⊕ Z/nⱼ` in invariant-factor form.
    pub fn canonicalize(rank: usize, torsion_orders: &[BigInt]) -> Result<Self> {
        Ok(Self::from_presentation(rank, torsion_orders)?.0)
    }

    /// Like [`canonicalize`](Self::canonicalize), also returning the coordinate change
    /// from `Z^rank ⊕ ⊕ Z/nⱼ` (in the given order) to the canonical group.
    pub fn from_presentation(
        rank: usize,
        torsion_orders: &[BigInt],
    ) -> Result<(Self, CoordinateChange)> {
        if let Some(bad) = torsion_orders.iter().find(|n| **n <= BigInt::one()) {
            return Err(Error::invalid(format!(
                "torsion order {bad} must be at least 2"
            )));
        }
        let t = torsion_orders.len();
        if is_divisibility_chain(torsion_orders) {
            let group = AbelianGroup {
                rank,
                invariant_factors: torsion_orders.to_vec(),
            };
            return Ok((group.clone(), CoordinateChange::identity(group)));
        }
        let relations: Vec<IntVec> = (0..t)
            .map(|j| {
                (0..t)
                    .map(|i| if i == j { torsion_orders[j].clone() } else { BigInt::zero() })
                    .collect()
            })
            .collect();
        let torsion_change = CoordinateChange::quotient_by_relations(t, &relations);
        debug_assert_eq!(torsion_change.target.rank, 0);
        let group = AbelianGroup {
            rank,
            invariant_factors: torsion_change.target.invariant_factors.clone(),
        };
        // Block-diagonal map: identity on the free part.
        let dim = rank + t;
        let mut matrix = vec![vec![BigInt::zero(); rank + torsion_change.matrix[0].len()]; dim];
        for (i, row) in matrix.iter_mut().enumerate().take(rank) {
            row[i] = BigInt::one();
        }
        for i in 0..t {
            for (j, v) in torsion_change.matrix[i].iter().enumerate() {
                matrix[rank + i][rank + j] = v.clone();
            }
        }
        let change = CoordinateChange {
            source_dim: dim,
            matrix,
            free_cols: (0..rank).collect(),
            torsion_cols: torsion_change.torsion_cols.iter().map(|c| c + rank).collect(),
            target: group.clone(),
        };
        Ok((group, change))
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    pub fn torsion_len(&self) -> usize {
        self.invariant_factors.len()
    }

    /// Dimension `r + t` of the lift.
    pub fn lift_dim(&self) -> usize {
        self.rank + self.invariant_factors.len()
    }

    pub fn is_finite(&self) -> bool {
        self.rank == 0
    }

    pub fn is_torsion_free(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> BigInt {
        self.invariant_factors.iter().product()
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement {
            free: vec![BigInt::zero(); self.rank],
            torsion: vec![BigInt::zero(); self.torsion_len()],
        }
    }

    pub fn element(&self, free: Vec<BigInt>, torsion: Vec<BigInt>) -> Result<GroupElement> {
        if free.len() != self.rank || torsion.len() != self.torsion_len() {
            return Err(Error::invalid(format!(
                "element has {} free and {} torsion coordinates, group {} expects {} and {}",
                free.len(),
                torsion.len(),
                self,
                self.rank,
                self.torsion_len()
            )));
        }
        let torsion = torsion
            .iter()
            .zip(&self.invariant_factors)
            .map(|(x, n)| x.mod_floor(n))
            .collect();
        Ok(GroupElement { free, torsion })
    }

    /// Element from concatenated coordinates (free part first); torsion is reduced.
    pub fn element_from_coords(&self, coords: &[BigInt]) -> Result<GroupElement> {
        if coords.len() != self.lift_dim() {
            return Err(Error::invalid(format!(
                "expected {} coordinates for {}, got {}",
                self.lift_dim(),
                self,
                coords.len()
            )));
        }
        self.element(coords[..self.rank].to_vec(), coords[self.rank..].to_vec())
    }

    pub fn element_from_ints(&self, coords: &[i64]) -> Result<GroupElement> {
        let v: IntVec = coords.iter().map(|&x| BigInt::from(x)).collect();
        self.element_from_coords(&v)
    }

    pub fn basis_element(&self, i: usize) -> GroupElement {
        let mut v = vec![BigInt::zero(); self.lift_dim()];
        v[i] = BigInt::one();
        self.from_lift(&v)
    }

    pub fn is_member(&self, d: &GroupElement) -> bool {
        d.free.len() == self.rank
            && d.torsion.len() == self.torsion_len()
            && d
                .torsion
                .iter()
                .zip(&self.invariant_factors)
                .all(|(x, n)| !x.is_negative() && x < n)
    }

    pub(crate) fn check_member(&self, d: &GroupElement) -> Result<()> {
        if self.is_member(d) {
            Ok(())
        } else {
            Err(Error::invalid(format!("{d} is not an element of {self}")))
        }
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        GroupElement {
            free: a.free.iter().zip(&b.free).map(|(x, y)| x + y).collect(),
            torsion: a
                .torsion
                .iter()
                .zip(&b.torsion)
                .zip(&self.invariant_factors)
                .map(|((x, y), n)| (x + y).mod_floor(n))
                .collect(),
        }
    }

    pub fn neg(&self, a: &GroupElement) -> GroupElement {
        GroupElement {
            free: a.free.iter().map(|x| -x).collect(),
            torsion: a
                .torsion
                .iter()
                .zip(&self.invariant_factors)
                .map(|(x, n)| (-x).mod_floor(n))
                .collect(),
        }
    }

    pub fn sub(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, a: &GroupElement, k: &BigInt) -> GroupElement {
        GroupElement {
            free: a.free.iter().map(|x| x * k).collect(),
            torsion: a
                .torsion
                .iter()
                .zip(&self.invariant_factors)
                .map(|(x, n)| (x * k).mod_floor(n))
                .collect(),
        }
    }

    pub fn lift(&self, d: &GroupElement) -> IntVec {
        d.coordinates()
    }

    pub fn from_lift(&self, v: &[BigInt]) -> GroupElement {
        self.element_from_coords(v)
            .expect("lift vector has the group's lift dimension")
    }

    /// The rows `nⱼ·e_{r+j}` of the lift.
    pub fn relation_rows(&self) -> Vec<IntVec> {
        let dim = self.lift_dim();
        self.invariant_factors
            .iter()
            .enumerate()
            .map(|(j, n)| {
                let mut row = vec![BigInt::zero(); dim];
                row[self.rank + j] = n.clone();
                row
            })
            .collect()
    }

    pub fn group_scheme_decomposition(&self) -> GroupSchemeDecomposition {
        GroupSchemeDecomposition {
            gm_count: self.rank,
            mu_orders: self.invariant_factors.clone(),
            connected: self.invariant_factors.is_empty(),
        }
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.invariant_factors.iter().map(|n| format!("Z/{n}")));
        if parts.is_empty() {
            parts.push("0".to_string());
        }
        write!(f, "{}", parts.join(" x "))
    }
}

/// An isomorphism from a presentation `Z^k / (relations)` onto a canonical group.
///
/// Source coordinates are multiplied by `matrix`; the chosen columns become the free
/// and torsion coordinates of `target`, and unit-order columns are discarded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoordinateChange {
    source_dim: usize,
    matrix: Vec<IntVec>,
    free_cols: Vec<usize>,
    torsion_cols: Vec<usize>,
    target: AbelianGroup,
}

impl CoordinateChange {
    fn identity(group: AbelianGroup) -> Self {
        let dim = group.lift_dim();
        CoordinateChange {
            source_dim: dim,
            matrix: (0..dim)
                .map(|i| {
                    (0..dim)
                        .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                        .collect()
                })
                .collect(),
            free_cols: (0..group.rank).collect(),
            torsion_cols: (group.rank..dim).collect(),
            target: group,
        }
    }

    fn quotient_by_relations(k: usize, relations: &[IntVec]) -> Self {
        let smith = smith_normal_form(relations, k);
        let mut free_cols = Vec::new();
        let mut torsion_cols = Vec::new();
        let mut factors = Vec::new();
        for i in 0..k {
            let s = smith.diagonal.get(i).cloned().unwrap_or_else(BigInt::zero);
            if s.is_zero() {
                free_cols.push(i);
            } else if !s.is_one() {
                torsion_cols.push(i);
                factors.push(s);
            }
        }
        CoordinateChange {
            source_dim: k,
            matrix: smith.right,
            target: AbelianGroup {
                rank: free_cols.len(),
                invariant_factors: factors,
            },
            free_cols,
            torsion_cols,
        }
    }

    pub fn target(&self) -> &AbelianGroup {
        &self.target
    }

    pub fn apply(&self, coords: &[BigInt]) -> GroupElement {
        assert_eq!(coords.len(), self.source_dim);
        if self.source_dim == 0 {
            return self.target.zero();
        }
        let w = vec_mat(coords, &self.matrix);
        let free = self.free_cols.iter().map(|&c| w[c].clone()).collect();
        let torsion = self.torsion_cols.iter().map(|&c| w[c].clone()).collect();
        self.target
            .element(free, torsion)
            .expect("coordinate change targets its own group")
    }
}

/// A subgroup `H ≤ D` stored as the Hermite normal form of its lifted lattice.
///
/// Two generating sets of the same subgroup give equal values.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subgroup {
    ambient: AbelianGroup,
    lattice: Vec<IntVec>,
}

impl Subgroup {
    pub fn from_generators(ambient: &AbelianGroup, gens: &[GroupElement]) -> Result<Self> {
        for g in gens {
            ambient.check_member(g)?;
        }
        let mut rows: Vec<IntVec> = gens.iter().map(|g| ambient.lift(g)).collect();
        rows.extend(ambient.relation_rows());
        Ok(Subgroup {
            lattice: hermite_normal_form(&rows, ambient.lift_dim()),
            ambient: ambient.clone(),
        })
    }

    pub fn zero(ambient: &AbelianGroup) -> Self {
        Self::from_generators(ambient, &[]).expect("no generators to validate")
    }

    pub fn whole(ambient: &AbelianGroup) -> Self {
        let gens: Vec<_> = (0..ambient.lift_dim())
            .map(|i| ambient.basis_element(i))
            .collect();
        Self::from_generators(ambient, &gens).expect("basis elements are members")
    }

    /// The free part `Z^r ⊕ 0` for the canonical splitting of `D`.
    pub fn free_part(ambient: &AbelianGroup) -> Self {
        let gens: Vec<_> = (0..ambient.rank())
            .map(|i| ambient.basis_element(i))
            .collect();
        Self::from_generators(ambient, &gens).expect("basis elements are members")
    }

    pub fn ambient(&self) -> &AbelianGroup {
        &self.ambient
    }

    /// Hermite normal form basis of the lifted lattice in `Z^{r+t}`.
    pub fn lattice(&self) -> &[IntVec] {
        &self.lattice
    }

    /// Rank of the subgroup (rank of the lattice minus the torsion relations).
    pub fn rank(&self) -> usize {
        self.lattice.len() - self.ambient.torsion_len()
    }

    pub fn index(&self) -> Index {
        if self.lattice.len() < self.ambient.lift_dim() {
            return Index::Infinite;
        }
        // Full-rank echelon form is upper triangular; the index is the determinant.
        let det = self
            .lattice
            .iter()
            .enumerate()
            .map(|(i, row)| row[i].clone())
            .product();
        Index::Finite(det)
    }

    pub fn contains(&self, d: &GroupElement) -> bool {
        self.ambient.is_member(d)
            && solve_in_echelon_basis(&self.lattice, &self.ambient.lift(d)).is_some()
    }

    pub fn equals_ambient(&self) -> bool {
        self.index() == Index::Finite(BigInt::one())
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.ambient == other.ambient
            && self
                .lattice
                .iter()
                .all(|row| solve_in_echelon_basis(&other.lattice, row).is_some())
    }

    /// Coordinates on `D/H` read off the Smith form of the lattice.
    pub fn quotient_coordinates(&self) -> QuotientCoordinates {
        let m = self.ambient.lift_dim();
        let smith = smith_normal_form(&self.lattice, m);
        QuotientCoordinates {
            right: smith.right,
            moduli: smith.diagonal,
            dim: m,
        }
    }

    /// Smallest `N ≥ 1` with `N·d ∈ H`, or infinite when no multiple lies in `H`.
    pub fn integrality_exponent(&self, d: &GroupElement) -> Result<Index> {
        self.ambient.check_member(d)?;
        Ok(self.quotient_coordinates().order(&self.ambient.lift(d)))
    }

    /// Re-coordinatize `H` as a canonical abelian group.
    pub fn coordinates(&self) -> SubgroupCoordinates {
        let k = self.lattice.len();
        let relations: Vec<IntVec> = self
            .ambient
            .relation_rows()
            .iter()
            .map(|row| {
                solve_in_echelon_basis(&self.lattice, row)
                    .expect("relation rows always lie in the lattice")
            })
            .collect();
        let change = if k == 0 {
            CoordinateChange::identity(AbelianGroup::free(0))
        } else {
            CoordinateChange::quotient_by_relations(k, &relations)
        };
        SubgroupCoordinates {
            subgroup: self.clone(),
            change,
        }
    }
}

/// Coordinates `v ↦ v·V` on `Z^{r+t}` in which the lattice of a subgroup becomes
/// `⊕ sᵢZ ⊕ 0`; the first `moduli.len()` coordinates are read modulo `sᵢ`, the rest
/// must vanish on the subgroup.
#[derive(Debug, Clone)]
pub struct QuotientCoordinates {
    right: Vec<IntVec>,
    moduli: Vec<BigInt>,
    dim: usize,
}

impl QuotientCoordinates {
    pub fn image(&self, v: &[BigInt]) -> IntVec {
        if self.dim == 0 {
            return Vec::new();
        }
        vec_mat(v, &self.right)
    }

    pub fn moduli(&self) -> &[BigInt] {
        &self.moduli
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        let w = self.image(v);
        w.iter().enumerate().all(|(i, x)| match self.moduli.get(i) {
            Some(s) => x.is_multiple_of(s),
            None => x.is_zero(),
        })
    }

    /// Order of the class of `v` in `Z^{r+t}/L`.
    pub fn order(&self, v: &[BigInt]) -> Index {
        let w = self.image(v);
        if w[self.moduli.len()..].iter().any(|x| !x.is_zero()) {
            return Index::Infinite;
        }
        let parts: Vec<BigInt> = w
            .iter()
            .zip(&self.moduli)
            .map(|(x, s)| s / x.gcd(s))
            .collect();
        Index::Finite(lcm_all(&parts))
    }
}

/// An isomorphism from a subgroup `H ≤ D` onto a canonical group.
#[derive(Debug, Clone)]
pub struct SubgroupCoordinates {
    subgroup: Subgroup,
    change: CoordinateChange,
}

impl SubgroupCoordinates {
    pub fn group(&self) -> &AbelianGroup {
        self.change.target()
    }

    /// Coordinates of `d ∈ H` in [`group`](Self::group).
    pub fn express(&self, d: &GroupElement) -> Result<GroupElement> {
        let lift = self.subgroup.ambient.lift(d);
        let coeffs = solve_in_echelon_basis(&self.subgroup.lattice, &lift)
            .filter(|_| self.subgroup.ambient.is_member(d))
            .ok_or_else(|| Error::invalid(format!("{d} does not lie in the subgroup")))?;
        Ok(self.change.apply(&coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn z_times_z2() -> AbelianGroup {
        AbelianGroup::canonicalize(1, &big(&[2])).unwrap()
    }

    #[test]
    fn canonicalize_examples() {
        let g = AbelianGroup::canonicalize(2, &[]).unwrap();
        assert_eq!((g.rank(), g.invariant_factors()), (2, &[][..]));
        let g = AbelianGroup::canonicalize(1, &big(&[2])).unwrap();
        assert_eq!(g.invariant_factors(), &big(&[2])[..]);
        let g = AbelianGroup::canonicalize(0, &big(&[4, 6])).unwrap();
        assert_eq!(g.invariant_factors(), &big(&[2, 12])[..]);
        let g = AbelianGroup::canonicalize(0, &big(&[2, 3])).unwrap();
        assert_eq!(g.invariant_factors(), &big(&[6])[..]);
    }

    #[test]
    fn canonicalize_rejects_small_orders() {
        assert!(matches!(
            AbelianGroup::canonicalize(1, &big(&[1])),
            Err(Error::InvalidInput(_))
        ));
        assert!(AbelianGroup::canonicalize(0, &big(&[0])).is_err());
        assert!(AbelianGroup::canonicalize(0, &big(&[-3])).is_err());
    }

    #[test]
    fn presentation_change_preserves_order() {
        // Z/4 x Z/6 -> Z/2 x Z/12: the image of (1,1) has order lcm(4,6) = 12.
        let (g, change) = AbelianGroup::from_presentation(0, &big(&[4, 6])).unwrap();
        let d = change.apply(&big(&[1, 1]));
        let h = Subgroup::zero(&g);
        assert_eq!(h.integrality_exponent(&d).unwrap(), Index::Finite(12.into()));
        let d = change.apply(&big(&[2, 0]));
        assert_eq!(h.integrality_exponent(&d).unwrap(), Index::Finite(2.into()));
    }

    #[test]
    fn element_arithmetic_reduces_torsion() {
        let g = z_times_z2();
        let a = g.element_from_ints(&[1, 1]).unwrap();
        let two_a = g.add(&a, &a);
        assert_eq!(two_a, g.element_from_ints(&[2, 0]).unwrap());
        assert_eq!(g.neg(&a), g.element_from_ints(&[-1, 1]).unwrap());
        assert_eq!(g.element_from_ints(&[0, -3]).unwrap().torsion(), &big(&[1])[..]);
        assert!(g.element_from_ints(&[1]).is_err());
    }

    #[test]
    fn subgroup_examples() {
        let z2 = AbelianGroup::free(2);
        let e = |v: &[i64]| z2.element_from_ints(v).unwrap();
        let h = Subgroup::from_generators(&z2, &[e(&[1, 0]), e(&[1, 1])]).unwrap();
        assert_eq!(h, Subgroup::whole(&z2));
        assert_eq!(h.index(), Index::Finite(1.into()));
        assert!(h.equals_ambient());

        let h = Subgroup::from_generators(&z2, &[]).unwrap();
        assert!(h.lattice().is_empty());
        assert_eq!(h.index(), Index::Infinite);

        let h = Subgroup::from_generators(&z2, &[e(&[1, 0])]).unwrap();
        assert_eq!(h.index(), Index::Infinite);

        let g = z_times_z2();
        let h = Subgroup::from_generators(&g, &[g.element_from_ints(&[1, 0]).unwrap()]).unwrap();
        assert_eq!(h.lattice(), &[big(&[1, 0]), big(&[0, 2])][..]);
        assert_eq!(h.index(), Index::Finite(2.into()));
        assert!(!h.equals_ambient());
    }

    #[test]
    fn subgroup_dimension_mismatch() {
        let z2 = AbelianGroup::free(2);
        let bad = AbelianGroup::free(3).element_from_ints(&[1, 0, 0]).unwrap();
        assert!(Subgroup::from_generators(&z2, &[bad]).is_err());
    }

    #[test]
    fn contains_examples() {
        let z2 = AbelianGroup::free(2);
        let e = |v: &[i64]| z2.element_from_ints(v).unwrap();
        let h = Subgroup::from_generators(&z2, &[e(&[2, 0]), e(&[0, 1])]).unwrap();
        assert!(!h.contains(&e(&[1, 0])));
        assert!(h.contains(&e(&[4, 7])));

        let g = z_times_z2();
        let h = Subgroup::from_generators(&g, &[g.element_from_ints(&[1, 1]).unwrap()]).unwrap();
        assert!(h.contains(&g.element_from_ints(&[2, 0]).unwrap()));
        assert!(!h.contains(&g.element_from_ints(&[1, 0]).unwrap()));
    }

    #[test]
    fn trivial_group_subgroup_is_everything() {
        let g = AbelianGroup::free(0);
        let h = Subgroup::from_generators(&g, &[]).unwrap();
        assert!(h.equals_ambient());
    }

    #[test]
    fn integrality_exponent_examples() {
        let z = AbelianGroup::free(1);
        let h = Subgroup::from_generators(&z, &[z.element_from_ints(&[2]).unwrap()]).unwrap();
        let one = z.element_from_ints(&[1]).unwrap();
        assert_eq!(h.integrality_exponent(&one).unwrap(), Index::Finite(2.into()));
        let four = z.element_from_ints(&[4]).unwrap();
        assert_eq!(h.integrality_exponent(&four).unwrap(), Index::Finite(1.into()));

        let g = z_times_z2();
        let h = Subgroup::from_generators(&g, &[g.element_from_ints(&[1, 0]).unwrap()]).unwrap();
        let d = g.element_from_ints(&[0, 1]).unwrap();
        assert_eq!(h.integrality_exponent(&d).unwrap(), Index::Finite(2.into()));

        let z2 = AbelianGroup::free(2);
        let h = Subgroup::from_generators(&z2, &[z2.element_from_ints(&[1, 0]).unwrap()]).unwrap();
        let d = z2.element_from_ints(&[0, 1]).unwrap();
        assert_eq!(h.integrality_exponent(&d).unwrap(), Index::Infinite);
    }

    #[test]
    fn decomposition_examples() {
        let d = AbelianGroup::free(2).group_scheme_decomposition();
        assert_eq!((d.gm_count, d.mu_orders.is_empty(), d.connected), (2, true, true));
        let d = z_times_z2().group_scheme_decomposition();
        assert_eq!((d.gm_count, d.mu_orders.clone(), d.connected), (1, big(&[2]), false));
        let d = AbelianGroup::free(0).group_scheme_decomposition();
        assert_eq!((d.gm_count, d.connected), (0, true));
        assert_eq!(d.to_string(), "trivial");
    }

    #[test]
    fn subgroup_coordinates_of_embedded_grading() {
        // <(1,0)> in Z^2 is Z.
        let z2 = AbelianGroup::free(2);
        let d = z2.element_from_ints(&[1, 0]).unwrap();
        let h = Subgroup::from_generators(&z2, std::slice::from_ref(&d)).unwrap();
        let coords = h.coordinates();
        assert_eq!(coords.group(), &AbelianGroup::free(1));
        let image = coords.express(&d).unwrap();
        assert_eq!(image.free()[0].abs(), BigInt::one());
        assert!(coords.express(&z2.element_from_ints(&[0, 1]).unwrap()).is_err());

        // <(1;1)> in Z x Z/2 is Z; <(0;1)> is Z/2.
        let g = z_times_z2();
        let h = Subgroup::from_generators(&g, &[g.element_from_ints(&[0, 1]).unwrap()]).unwrap();
        assert_eq!(h.coordinates().group(), &AbelianGroup::canonicalize(0, &big(&[2])).unwrap());
        let h = Subgroup::from_generators(&g, &[g.element_from_ints(&[1, 1]).unwrap()]).unwrap();
        assert_eq!(h.coordinates().group(), &AbelianGroup::free(1));
    }

    fn arb_group() -> impl Strategy<Value = AbelianGroup> {
        (0usize..3, proptest::collection::vec(2i64..5, 0..2)).prop_map(|(r, t)| {
            AbelianGroup::canonicalize(r, &big(&t)).unwrap()
        })
    }

    fn arb_elements(g: &AbelianGroup, n: std::ops::Range<usize>) -> impl Strategy<Value = Vec<GroupElement>> {
        let g = g.clone();
        proptest::collection::vec(
            proptest::collection::vec(-4i64..5, g.lift_dim()),
            n,
        )
        .prop_map(move |vs| vs.iter().map(|v| g.element_from_ints(v).unwrap()).collect())
    }

    proptest! {
        #[test]
        fn normal_form_is_unique(
            (g, gens, mix) in arb_group().prop_flat_map(|g| {
                let gens = arb_elements(&g, 1..4);
                (Just(g), gens, proptest::collection::vec(-2i64..3, 9))
            })
        ) {
            let h1 = Subgroup::from_generators(&g, &gens).unwrap();
            // Unimodular row operations: add integer multiples of other generators,
            // then append a redundant combination and a relation multiple.
            let mut alt = gens.clone();
            for i in 1..alt.len() {
                let k = BigInt::from(mix[i % mix.len()]);
                let term = g.scale(&alt[i - 1], &k);
                alt[i] = g.add(&alt[i], &term);
            }
            alt.reverse();
            let combo = alt.iter().enumerate().fold(g.zero(), |acc, (i, x)| {
                g.add(&acc, &g.scale(x, &BigInt::from(mix[(i + 3) % mix.len()])))
            });
            alt.push(combo);
            alt.push(g.zero());
            let h2 = Subgroup::from_generators(&g, &alt).unwrap();
            prop_assert_eq!(h1, h2);
        }

        #[test]
        fn integrality_exponent_divides_index(
            (g, gens, d) in arb_group().prop_flat_map(|g| {
                let gens = arb_elements(&g, 0..4);
                let d = arb_elements(&g, 1..2);
                (Just(g), gens, d)
            })
        ) {
            let h = Subgroup::from_generators(&g, &gens).unwrap();
            let n = h.integrality_exponent(&d[0]).unwrap();
            if let Index::Finite(m) = h.index() {
                let n = n.finite().expect("finite index forces finite exponent").clone();
                prop_assert!(m.is_multiple_of(&n));
                prop_assert!(h.contains(&g.scale(&d[0], &n)));
            }
            if let Index::Finite(n) = &n {
                prop_assert!(h.contains(&g.scale(&d[0], n)));
                for k in 1..n.to_i64().unwrap() {
                    prop_assert!(!h.contains(&g.scale(&d[0], &BigInt::from(k))));
                }
            }
        }

        #[test]
        fn hnf_and_smith_membership_agree(
            (g, gens, ds) in arb_group().prop_flat_map(|g| {
                let gens = arb_elements(&g, 0..4);
                let ds = arb_elements(&g, 1..6);
                (Just(g), gens, ds)
            })
        ) {
            let h = Subgroup::from_generators(&g, &gens).unwrap();
            let q = h.quotient_coordinates();
            for d in &ds {
                prop_assert_eq!(h.contains(d), q.contains(&g.lift(d)));
            }
        }

        #[test]
        fn subgroup_coordinates_are_injective_homomorphisms(
            (g, gens, coeffs) in arb_group().prop_flat_map(|g| {
                let gens = arb_elements(&g, 1..4);
                (Just(g), gens, proptest::collection::vec(-3i64..4, 8))
            })
        ) {
            let h = Subgroup::from_generators(&g, &gens).unwrap();
            let c = h.coordinates();
            let x = &gens[0];
            let y = gens.iter().zip(&coeffs).fold(g.zero(), |acc, (e, k)| {
                g.add(&acc, &g.scale(e, &BigInt::from(*k)))
            });
            let cx = c.express(x).unwrap();
            let cy = c.express(&y).unwrap();
            let sum = c.express(&g.add(x, &y)).unwrap();
            prop_assert_eq!(c.group().add(&cx, &cy), sum);
            prop_assert_eq!(cy.is_zero(), y.is_zero());
        }
    }
}
