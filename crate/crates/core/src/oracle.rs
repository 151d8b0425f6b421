//! Brute-force dimension counts by exponent-set enumeration.
//!
//! Every quotient of monomial modules over a monomial curve ring has a basis
//! of monomials, so its dimension is the number of exponents in the ambient
//! set not covered by the submodule's exponents. A submodule generated by
//! monomials `t^a` over a ring with value semigroup `G` has exponent set
//! `a + G`, so each count here is `|ambient \ union(offset_i + base_i)|`,
//! enumerated integer by integer.
//!
//! Nothing in this module calls into [`crate::invariants`] except
//! [`cross_check`], which compares the two.

use crate::exponent_set::ExponentSet;
use crate::invariants::{self, InvariantError};
use crate::model::ConsistentPlaneMap;
use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("no cofinite shifted set; the quotient is infinite-dimensional")]
    NoCofiniteShift,
    #[error("containment `{0}` fails")]
    ContainmentViolation(&'static str),
}

impl OracleError {
    pub fn name(&self) -> &'static str {
        match self {
            OracleError::NoCofiniteShift => "NoCofiniteShift",
            OracleError::ContainmentViolation(_) => "ContainmentViolation",
        }
    }
}

/// An ambient exponent set together with shifted sets covering part of it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftedCover {
    pub ambient: ExponentSet,
    pub shifts: Vec<(u32, ExponentSet)>,
}

impl ShiftedCover {
    pub fn new(ambient: ExponentSet) -> Self {
        ShiftedCover {
            ambient,
            shifts: Vec::new(),
        }
    }

    pub fn with_shift(mut self, offset: u32, base: ExponentSet) -> Self {
        self.shifts.push((offset, base));
        self
    }

    /// Smallest `offset + tail_start` over cofinite bases. Every integer at
    /// or above it is covered.
    pub fn bound(&self) -> Result<u32, OracleError> {
        self.shifts
            .iter()
            .filter_map(|(offset, base)| base.tail_start().map(|t| offset + t))
            .min()
            .ok_or(OracleError::NoCofiniteShift)
    }

    #[inline]
    pub fn covers(&self, x: u32) -> bool {
        self.shifts
            .iter()
            .any(|(offset, base)| x >= *offset && base.contains(x - offset))
    }

    /// Ambient members that escape the cover, enumerated up to
    /// `bound() + padding`.
    pub fn survivors_padded(&self, padding: u32) -> Result<Vec<u32>, OracleError> {
        let end = self.bound()? + padding;
        Ok((0..end)
            .filter(|&x| self.ambient.contains(x) && !self.covers(x))
            .collect())
    }

    pub fn survivors(&self) -> Result<Vec<u32>, OracleError> {
        self.survivors_padded(0)
    }

    /// `|ambient \ union(offset_i + base_i)|`.
    pub fn quotient_dim(&self) -> Result<u32, OracleError> {
        self.quotient_dim_padded(0)
    }

    pub fn quotient_dim_padded(&self, padding: u32) -> Result<u32, OracleError> {
        let end = self.bound()? + padding;
        Ok((0..end)
            .filter(|&x| self.ambient.contains(x) && !self.covers(x))
            .count() as u32)
    }

    /// Whether every shifted set lies inside the ambient set, as it must
    /// when the cover is an ideal or submodule of the ambient ring.
    pub fn shifts_within_ambient(&self) -> bool {
        self.shifts
            .iter()
            .all(|(offset, base)| base.shift(*offset).is_subset(&self.ambient))
    }
}

/// Exponent sets attached to a map, built once per oracle evaluation.
struct Exponents {
    source: ExponentSet,
    image: ExponentSet,
    l1: u32,
    k: u32,
    mu_x: u32,
    /// Exponents of `dg/du o f` and `dg/dv o f`: `l1 l2 - l1`, `l1 l2 - l2`.
    jg_offsets: [u32; 2],
    /// Exponent of the generator of the conductor-type ideal, `mu_Y - mu_X`.
    lambda: u32,
}

impl Exponents {
    fn of(m: &ConsistentPlaneMap) -> Self {
        let source_sg = m.curve().semigroup();
        let image_sg = m.image().semigroup();
        let product = m.l1() * m.l2();
        Exponents {
            source: source_sg.to_exponent_set(),
            image: image_sg.to_exponent_set(),
            l1: m.l1(),
            k: m.k(),
            mu_x: source_sg.conductor(),
            jg_offsets: [product - m.l1(), product - m.l2()],
            // Both conductors come from the membership tables, not from the
            // closed formulas.
            lambda: image_sg.conductor() - source_sg.conductor(),
        }
    }

    fn jg_cover(&self, ambient: ExponentSet, base: &ExponentSet) -> ShiftedCover {
        let [a, b] = self.jg_offsets;
        ShiftedCover::new(ambient)
            .with_shift(a, base.clone())
            .with_shift(b, base.clone())
    }

    /// Exponents of `J_g O_X`.
    fn jg_source(&self) -> ExponentSet {
        let [a, b] = self.jg_offsets;
        self.source.shift(a).union(&self.source.shift(b))
    }

    /// Exponents of the ideal generated by `t^lambda` in the source ring.
    fn conductor_ideal(&self) -> ExponentSet {
        self.source.shift(self.lambda)
    }

    fn delta_cover(&self) -> ShiftedCover {
        ShiftedCover::new(self.source.clone()).with_shift(0, self.image.clone())
    }

    /// Pairs `(r, r + k)` with both coordinates in `Gamma_X`, projected to
    /// `r`, covered by the Euler field exponents `l1 + Gamma_X` and the
    /// isolated determinantal field exponent `l1 + mu_X - 1`.
    fn kernel_cover(&self) -> ShiftedCover {
        let pairs = self.source.intersection(&self.source.unshift(self.k));
        ShiftedCover::new(pairs)
            .with_shift(self.l1, self.source.clone())
            .with_shift(self.l1 + self.mu_x - 1, ExponentSet::finite([0]))
    }

    fn jacobian_cover(&self) -> ShiftedCover {
        let j1 = self.l1 + self.mu_x - 1;
        ShiftedCover::new(self.source.clone())
            .with_shift(j1, self.source.clone())
            .with_shift(j1 + self.k, self.source.clone())
    }

    fn jg_quotient_cover(&self) -> ShiftedCover {
        self.jg_cover(self.jg_source(), &self.image)
    }

    /// The ideal `C` over the source ring and over the image ring.
    fn conductor_covers(&self) -> (ShiftedCover, ShiftedCover) {
        let shifted = |ambient: &ExponentSet| {
            ShiftedCover::new(ambient.clone()).with_shift(self.lambda, self.source.clone())
        };
        (shifted(&self.source), shifted(&self.image))
    }

    fn mu_y_cover(&self) -> ShiftedCover {
        self.jg_cover(self.image.clone(), &self.image)
    }
}

/// Covers built by the oracles. Each always contains a semigroup base, which
/// is cofinite, so counting cannot fail.
fn count(cover: &ShiftedCover, padding: u32) -> u32 {
    cover
        .quotient_dim_padded(padding)
        .expect("oracle covers always include a cofinite semigroup base")
}

/// Oracle evaluator. `padding` extends every enumeration past its computed
/// bound; any padding must leave all counts unchanged.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Oracle {
    pub padding: u32,
}

/// The two sides of the exact sequence
/// `0 -> J_gO_X/J_gO_Y -> C/J_gO_Y -> C/J_gO_X -> 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactSequenceCounts {
    /// `dim C / J_g O_Y`.
    pub middle: u32,
    /// `dim C / J_g O_X`.
    pub right: u32,
}

impl Oracle {
    pub fn padded(padding: u32) -> Self {
        Oracle { padding }
    }

    /// `|Gamma_X \ Gamma_Y|`.
    pub fn delta_map(&self, m: &ConsistentPlaneMap) -> u32 {
        count(&Exponents::of(m).delta_cover(), self.padding)
    }

    /// Admissible pairs `(r, r + k)` in `Gamma_X x Gamma_X` not hit by the
    /// vector fields tangent to `X`.
    pub fn ker_ev(&self, m: &ConsistentPlaneMap) -> u32 {
        count(&Exponents::of(m).kernel_cover(), self.padding)
    }

    /// Whether the field exponents lie among the admissible pairs.
    pub fn kernel_cover_contained(m: &ConsistentPlaneMap) -> bool {
        Exponents::of(m).kernel_cover().shifts_within_ambient()
    }

    /// `|Gamma_X \ ((l1 + mu_X - 1 + Gamma_X) u (l2 + mu_X - 1 + Gamma_X))|`.
    pub fn jacobian_quotient(&self, m: &ConsistentPlaneMap) -> u32 {
        count(&Exponents::of(m).jacobian_cover(), self.padding)
    }

    /// `|E_X \ E_Y|` with `E_G = (l1 l2 - l1 + G) u (l1 l2 - l2 + G)`.
    pub fn jg_quotient(&self, m: &ConsistentPlaneMap) -> Result<u32, OracleError> {
        let cover = Exponents::of(m).jg_quotient_cover();
        if !cover.shifts_within_ambient() {
            return Err(OracleError::ContainmentViolation("J_g O_Y within J_g O_X"));
        }
        Ok(count(&cover, self.padding))
    }

    /// Colengths of `C = t^(mu_Y - mu_X) O_X` in `O_X` and in `O_Y`. Fails
    /// if `C` is not contained in `O_Y`.
    pub fn conductor_ideal(&self, m: &ConsistentPlaneMap) -> Result<(u32, u32), OracleError> {
        let (over_source, over_image) = Exponents::of(m).conductor_covers();
        if !over_image.shifts_within_ambient() {
            return Err(OracleError::ContainmentViolation("C within O_Y"));
        }
        Ok((
            count(&over_source, self.padding),
            count(&over_image, self.padding),
        ))
    }

    /// `|Gamma_Y \ E_Y|`, the Tjurina number of the image curve.
    pub fn mu_y(&self, m: &ConsistentPlaneMap) -> u32 {
        count(&Exponents::of(m).mu_y_cover(), self.padding)
    }

    pub fn exact_sequence(&self, m: &ConsistentPlaneMap) -> ExactSequenceCounts {
        self.exact_sequence_of(&Exponents::of(m))
    }

    fn exact_sequence_of(&self, e: &Exponents) -> ExactSequenceCounts {
        let c = e.conductor_ideal();
        ExactSequenceCounts {
            middle: count(&e.jg_cover(c.clone(), &e.image), self.padding),
            right: count(&e.jg_cover(c, &e.source), self.padding),
        }
    }

    /// Compares every oracle count with its closed-formula counterpart.
    pub fn cross_check(&self, m: &ConsistentPlaneMap) -> CheckReport {
        let e = Exponents::of(m);
        let delta_f = invariants::delta_map(m) as i64;
        let mu_y = m.image().milnor() as i64;

        let kernel_cover = e.kernel_cover();
        let jg_cover = e.jg_quotient_cover();
        let (over_source, over_image) = e.conductor_covers();
        let jac = count(&e.jacobian_cover(), self.padding);
        let jg = count(&jg_cover, self.padding);
        let seq = self.exact_sequence_of(&e);

        let (formula_cx, formula_cy) = invariants::conductor_ideal_dims(m);
        let seq_consistent = seq.middle == jg + seq.right && seq.right == jac;
        let identities = vec![
            IdentityCheck::new("delta_f", delta_f, count(&e.delta_cover(), self.padding)),
            IdentityCheck::new(
                "ker_ev_dim",
                signed(invariants::ker_ev_dim(m)),
                count(&kernel_cover, self.padding),
            ),
            IdentityCheck::new(
                "jac_quot_dim",
                invariants::jacobian_quotient_dim(m) as i64,
                jac,
            ),
            IdentityCheck::new("jg_quot_dim", signed(invariants::jg_quotient_dim(m)), jg),
            IdentityCheck::new(
                "cond_ideal_x",
                formula_cx as i64,
                count(&over_source, self.padding),
            ),
            IdentityCheck::new(
                "cond_ideal_y",
                formula_cy as i64,
                count(&over_image, self.padding),
            ),
            IdentityCheck::new("mu_y", mu_y, count(&e.mu_y_cover(), self.padding)),
            IdentityCheck {
                pass: seq_consistent && seq.middle as i64 == mu_y - delta_f,
                ..IdentityCheck::new("exact_sequence", mu_y - delta_f, seq.middle)
            },
        ];

        let containments = vec![
            ContainmentCheck {
                name: "Gamma_Y within Gamma_X",
                holds: e.image.is_subset(&e.source),
            },
            ContainmentCheck {
                name: "Gamma_Theta within Gamma_k",
                holds: kernel_cover.shifts_within_ambient(),
            },
            ContainmentCheck {
                name: "C within O_Y",
                holds: over_image.shifts_within_ambient(),
            },
            ContainmentCheck {
                name: "J_g O_X within C",
                holds: e.jg_source().is_subset(&e.conductor_ideal()),
            },
            ContainmentCheck {
                name: "J_g O_Y within J_g O_X",
                holds: jg_cover.shifts_within_ambient(),
            },
        ];
        CheckReport {
            identities,
            containments,
        }
    }
}

fn signed(r: Result<u32, InvariantError>) -> i64 {
    match r {
        Ok(v) => v as i64,
        Err(InvariantError::NegativeDimension { value, .. }) => value,
        Err(InvariantError::IdentityViolation { left, .. }) => left,
    }
}

pub fn oracle_delta_map(m: &ConsistentPlaneMap) -> u32 {
    Oracle::default().delta_map(m)
}

pub fn oracle_ker_ev(m: &ConsistentPlaneMap) -> u32 {
    Oracle::default().ker_ev(m)
}

pub fn oracle_jacobian_quotient(m: &ConsistentPlaneMap) -> u32 {
    Oracle::default().jacobian_quotient(m)
}

pub fn oracle_jg_quotient(m: &ConsistentPlaneMap) -> Result<u32, OracleError> {
    Oracle::default().jg_quotient(m)
}

pub fn oracle_conductor_ideal(m: &ConsistentPlaneMap) -> Result<(u32, u32), OracleError> {
    Oracle::default().conductor_ideal(m)
}

pub fn oracle_mu_y(m: &ConsistentPlaneMap) -> u32 {
    Oracle::default().mu_y(m)
}

pub fn cross_check(m: &ConsistentPlaneMap) -> CheckReport {
    Oracle::default().cross_check(m)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub formula: i64,
    pub oracle: i64,
    pub pass: bool,
}

impl IdentityCheck {
    fn new(name: &'static str, formula: i64, oracle: u32) -> Self {
        IdentityCheck {
            name,
            formula,
            oracle: oracle as i64,
            pass: formula == oracle as i64,
        }
    }
}

impl Serialize for IdentityCheck {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("IdentityCheck", 3)?;
        s.serialize_field("formula", &self.formula)?;
        s.serialize_field("oracle", &self.oracle)?;
        s.serialize_field("pass", &self.pass)?;
        s.end()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContainmentCheck {
    pub name: &'static str,
    pub holds: bool,
}

/// Per-identity comparison of oracle and formula values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub identities: Vec<IdentityCheck>,
    pub containments: Vec<ContainmentCheck>,
}

impl CheckReport {
    pub fn passed(&self) -> usize {
        self.identities.iter().filter(|c| c.pass).count()
    }

    pub fn all_pass(&self) -> bool {
        self.passed() == self.identities.len() && self.containments.iter().all(|c| c.holds)
    }

    pub fn get(&self, name: &str) -> Option<&IdentityCheck> {
        self.identities.iter().find(|c| c.name == name)
    }
}

/// Serializes as `{name: {formula, oracle, pass}}` in check order.
impl Serialize for CheckReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.identities.len()))?;
        for check in &self.identities {
            map.serialize_entry(check.name, check)?;
        }
        map.end()
    }
}
