//! Ring specification files.
//!
//! ```json
//! {"rank":1,"torsion":[2],"vars":[{"name":"x","deg":[1,0]},{"name":"y","deg":[0,1]}]}
//! ```
//!
//! Degree vectors list the free coordinates followed by one residue per torsion
//! modulus. Moduli need not form a divisibility chain; the group is brought to
//! invariant-factor form on load and the degrees are rewritten accordingly.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::abelian_group::AbelianGroup;
use crate::error::{Error, Result};
use crate::graded_ring::GradedRing;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingSpec {
    pub rank: usize,
    #[serde(default)]
    pub torsion: Vec<i64>,
    pub vars: Vec<VarSpec>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VarSpec {
    pub name: String,
    pub deg: Vec<i64>,
}

impl RingSpec {
    pub fn parse(text: &str) -> Result<RingSpec> {
        serde_json::from_str(text).map_err(|e| Error::Syntax {
            message: strip_position(&e.to_string()),
            line: e.line(),
            column: e.column(),
        })
    }

    pub fn to_ring(&self) -> Result<GradedRing> {
        if self.vars.is_empty() {
            return Err(Error::InvalidInput("vars: a ring needs at least one variable".into()));
        }
        for (j, n) in self.torsion.iter().enumerate() {
            if *n < 2 {
                return Err(Error::InvalidInput(format!(
                    "torsion[{j}]: modulus {n} must be at least 2"
                )));
            }
        }
        let width = self.rank + self.torsion.len();
        for (i, v) in self.vars.iter().enumerate() {
            if v.deg.len() != width {
                return Err(Error::InvalidInput(format!(
                    "vars[{i}] (`{}`): degree has {} entries, expected {width} (rank {} + {} torsion)",
                    v.name,
                    v.deg.len(),
                    self.rank,
                    self.torsion.len()
                )));
            }
            if let Some(first) = self.vars[..i].iter().position(|w| w.name == v.name) {
                return Err(Error::InvalidInput(format!(
                    "vars[{i}]: duplicate variable `{}` (first declared at vars[{first}])",
                    v.name
                )));
            }
        }
        let orders: Vec<BigInt> = self.torsion.iter().map(|&n| BigInt::from(n)).collect();
        let (group, change) = AbelianGroup::from_presentation(self.rank, &orders)?;
        let degrees = self
            .vars
            .iter()
            .map(|v| {
                let coords: Vec<BigInt> = v.deg.iter().map(|&x| BigInt::from(x)).collect();
                change.apply(&coords)
            })
            .collect();
        let names = self.vars.iter().map(|v| v.name.clone()).collect();
        GradedRing::new(group, names, degrees).map_err(|e| match e {
            Error::InvalidInput(m) => Error::InvalidInput(format!("vars: {m}")),
            other => other,
        })
    }

    /// The spec of a ring in its canonical coordinates.
    pub fn from_ring(ring: &GradedRing) -> Result<RingSpec> {
        let small = |x: &BigInt| {
            x.to_i64()
                .ok_or_else(|| Error::invalid(format!("entry {x} does not fit a spec file")))
        };
        Ok(RingSpec {
            rank: ring.rank(),
            torsion: ring
                .group()
                .invariant_factors()
                .iter()
                .map(small)
                .collect::<Result<_>>()?,
            vars: ring
                .var_names()
                .iter()
                .zip(ring.degrees())
                .map(|(name, d)| {
                    Ok(VarSpec {
                        name: name.clone(),
                        deg: d.coordinates().iter().map(small).collect::<Result<_>>()?,
                    })
                })
                .collect::<Result<_>>()?,
        })
    }

    pub fn render(&self) -> String {
        serde_json::to_string(self).expect("spec serializes")
    }
}

/// serde_json appends " at line L column C"; the position is reported separately.
fn strip_position(msg: &str) -> String {
    match msg.rfind(" at line ") {
        Some(i) => msg[..i].to_string(),
        None => msg.to_string(),
    }
}

pub fn parse_ring_spec(text: &str) -> Result<GradedRing> {
    RingSpec::parse(text)?.to_ring()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded_ring::fixtures::*;
    use proptest::prelude::*;

    const DOUBLE_ORIGIN: &str = r#"{"rank":2,"torsion":[],"vars":[{"name":"x","deg":[1,0]},{"name":"y","deg":[0,1]},{"name":"z","deg":[1,1]}]}"#;
    const TORSION: &str = r#"{"rank":1,"torsion":[2],"vars":[{"name":"x","deg":[1,0]},{"name":"y","deg":[0,1]},{"name":"z","deg":[1,1]}]}"#;

    #[test]
    fn parses_example_rings() {
        assert_eq!(parse_ring_spec(DOUBLE_ORIGIN).unwrap(), double_origin());
        assert_eq!(parse_ring_spec(TORSION).unwrap(), torsion_ring());
    }

    #[test]
    fn reduces_torsion_residues() {
        let text = r#"{"rank":1,"torsion":[2],"vars":[{"name":"x","deg":[1,4]},{"name":"y","deg":[0,-1]},{"name":"z","deg":[1,3]}]}"#;
        assert_eq!(parse_ring_spec(text).unwrap(), torsion_ring());
    }

    #[test]
    fn canonicalizes_non_chain_torsion() {
        let text = r#"{"rank":0,"torsion":[2,3],"vars":[{"name":"x","deg":[1,0]},{"name":"y","deg":[0,1]}]}"#;
        let r = parse_ring_spec(text).unwrap();
        assert_eq!(r.group().to_string(), "Z/6");
        assert!(r.effective());
    }

    #[test]
    fn errors() {
        let err = parse_ring_spec(r#"{"rank":1,"torsion":[],"vars":[]}"#).unwrap_err();
        assert!(matches!(err, Error::InvalidInput(_)));
        let err = parse_ring_spec("{\"rank\":1,\n \"vars\":[{\"name\":\"x\",\"deg\":[1]},]}").unwrap_err();
        assert!(matches!(err, Error::Syntax { line: 2, .. }), "{err:?}");
        let err = parse_ring_spec(
            r#"{"rank":1,"vars":[{"name":"x","deg":[1]},{"name":"x","deg":[2]}]}"#,
        )
        .unwrap_err();
        assert!(err.to_string().contains("vars[1]") && err.to_string().contains("duplicate"));
        let err = parse_ring_spec(r#"{"rank":2,"vars":[{"name":"x","deg":[1]}]}"#).unwrap_err();
        assert!(err.to_string().contains("vars[0]"));
        let err = parse_ring_spec(r#"{"rank":1,"torsion":[1],"vars":[{"name":"x","deg":[1,0]}]}"#).unwrap_err();
        assert!(err.to_string().contains("torsion[0]"));
        assert!(parse_ring_spec(r#"{"rank":1,"vars":[{"name":"2x","deg":[1]}]}"#).is_err());
    }

    fn arb_spec() -> impl Strategy<Value = RingSpec> {
        (0usize..3, prop_oneof![Just(vec![]), Just(vec![2]), Just(vec![2, 4]), Just(vec![3])])
            .prop_flat_map(|(rank, torsion)| {
                let width = rank + torsion.len();
                let tor = torsion.clone();
                proptest::collection::vec(proptest::collection::vec(-3i64..=3, width), 1..5)
                    .prop_map(move |degs| RingSpec {
                        rank,
                        torsion: tor.clone(),
                        vars: degs
                            .into_iter()
                            .enumerate()
                            .map(|(i, mut deg)| {
                                for (j, n) in tor.iter().enumerate() {
                                    deg[rank + j] = deg[rank + j].rem_euclid(*n);
                                }
                                VarSpec { name: format!("t{i}"), deg }
                            })
                            .collect(),
                    })
            })
    }

    proptest! {
        #[test]
        fn spec_round_trip(spec in arb_spec()) {
            let ring = spec.to_ring().unwrap();
            let again = RingSpec::from_ring(&ring).unwrap();
            prop_assert_eq!(&again, &spec);
            prop_assert_eq!(RingSpec::parse(&again.render()).unwrap().to_ring().unwrap(), ring);
        }
    }
}
