//! Closed-formula invariants of a consistent plane map.
//!
//! All quantities are exact integers computed from `(weights, l1, l2)`
//! alone. [`full_report`] evaluates every formula and checks the identities
//! that tie them together; a violated identity is returned as an error
//! rather than silently corrected.

use crate::model::{ConsistentPlaneMap, MonomialCurve};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("{quantity} evaluates to {value}, which is negative")]
    NegativeDimension { quantity: &'static str, value: i64 },
    #[error("identity `{identity}` violated: {left} != {right}")]
    IdentityViolation {
        identity: &'static str,
        left: i64,
        right: i64,
    },
}

impl InvariantError {
    pub fn name(&self) -> &'static str {
        match self {
            InvariantError::NegativeDimension { .. } => "NegativeDimension",
            InvariantError::IdentityViolation { .. } => "IdentityViolation",
        }
    }
}

fn nonnegative(quantity: &'static str, value: i64) -> Result<u32, InvariantError> {
    u32::try_from(value).map_err(|_| InvariantError::NegativeDimension { quantity, value })
}

fn identity(name: &'static str, left: i64, right: i64) -> Result<(), InvariantError> {
    if left == right {
        Ok(())
    } else {
        Err(InvariantError::IdentityViolation {
            identity: name,
            left,
            right,
        })
    }
}

/// `delta(f) = delta_Y - delta_X`, the colength of the image ring in the
/// source ring.
pub fn delta_map(m: &ConsistentPlaneMap) -> u32 {
    m.image().delta() - m.curve().delta()
}

/// Image Milnor number `(mu_Y + mu_X) / 2`.
pub fn image_milnor(m: &ConsistentPlaneMap) -> u32 {
    (m.image().milnor() + m.curve().milnor()) / 2
}

/// A_e-codimension of `f` alone, which equals `delta(f)`.
pub fn ae_codim(m: &ConsistentPlaneMap) -> u32 {
    delta_map(m)
}

/// A_e-codimension of the pair `(X, f)`: `codim(f) + tau_X`, with the
/// Tjurina number equal to the Milnor number for a weighted-homogeneous
/// source.
pub fn ae_codim_pair(m: &ConsistentPlaneMap) -> u32 {
    ae_codim(m) + m.curve().milnor()
}

/// Number of `r` in `0..mu_X` with both `r` and `r + k` in the source
/// semigroup.
pub fn s_count(m: &ConsistentPlaneMap) -> u32 {
    let gamma = m.curve().semigroup();
    let k = m.k();
    (0..m.curve().milnor())
        .filter(|&r| gamma.contains_nat(r) && gamma.contains_nat(r + k))
        .count() as u32
}

/// Dimension of the kernel of the evaluation map: `l1 - delta_X + s - 1`.
pub fn ker_ev_dim(m: &ConsistentPlaneMap) -> Result<u32, InvariantError> {
    let value = m.l1() as i64 - m.curve().delta() as i64 + s_count(m) as i64 - 1;
    nonnegative("ker_ev_dim", value)
}

/// `dim O_X / <J1, J2> = l1 + delta_X + s - 1`.
pub fn jacobian_quotient_dim(m: &ConsistentPlaneMap) -> u32 {
    m.l1() + m.curve().delta() + s_count(m) - 1
}

/// `dim J_g O_X / J_g O_Y`, obtained from the surjectivity of the evaluation
/// map as `codim(f) - dim ker(ev)`.
pub fn jg_quotient_dim(m: &ConsistentPlaneMap) -> Result<u32, InvariantError> {
    let value = ae_codim(m) as i64 - ker_ev_dim(m)? as i64;
    nonnegative("jg_quot_dim", value)
}

/// Colengths of the conductor-type ideal generated by `t^(mu_Y - mu_X)` in
/// the source ring and in the image ring: `(2 delta(f), delta(f))`.
pub fn conductor_ideal_dims(m: &ConsistentPlaneMap) -> (u32, u32) {
    let d = delta_map(m);
    (2 * d, d)
}

/// A_e-codimension of the monomial parametrization: `(n - 1) delta_X`.
pub fn param_codim(c: &MonomialCurve) -> u32 {
    (c.ambient_dim() - 1) * c.delta()
}

/// Whether the codimension decomposition through the parametrization could
/// be checked. It divides by `n - 1`, so it does not apply to `n = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Decomposition {
    Holds,
    NotApplicable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Composite {
    /// `mu_I(f o alpha)`, equal to `delta_Y` for a plane parametrization.
    pub mu_i: u32,
    /// `A_e-codim(f o alpha)`, also `delta_Y`.
    pub codim: u32,
    pub decomposition: Decomposition,
}

/// Invariants of the composite `f o alpha`, a parametrization of the image
/// curve, with the decompositions `mu_I(f) = delta_X + mu_I(f o alpha)` and
/// `codim(f) = codim(f o alpha) - codim(alpha) / (n - 1)` checked.
pub fn composite_invariants(m: &ConsistentPlaneMap) -> Result<Composite, InvariantError> {
    let delta_y = m.image().delta();
    let composite = Composite {
        mu_i: delta_y,
        codim: delta_y,
        decomposition: Decomposition::NotApplicable,
    };
    identity(
        "mu_i = delta_x + composite_mu_i",
        image_milnor(m) as i64,
        m.curve().delta() as i64 + composite.mu_i as i64,
    )?;
    let n = m.curve().ambient_dim() as i64;
    if n < 2 {
        return Ok(composite);
    }
    let param = param_codim(m.curve()) as i64;
    identity("param_codim divisible by n - 1", param % (n - 1), 0)?;
    identity(
        "ae_codim_f = composite_codim - param_codim / (n - 1)",
        ae_codim(m) as i64,
        composite.codim as i64 - param / (n - 1),
    )?;
    Ok(Composite {
        decomposition: Decomposition::Holds,
        ..composite
    })
}

/// Every closed-formula invariant of a map, with the identities between them
/// verified at construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub weights: Vec<u32>,
    pub l1: u32,
    pub l2: u32,
    pub n: u32,
    pub mu_x: u32,
    pub delta_x: u32,
    pub mu_y: u32,
    pub delta_y: u32,
    pub k: u32,
    pub delta_f: u32,
    pub mu_i: u32,
    pub ae_codim_f: u32,
    pub ae_codim_pair: u32,
    #[serde(rename = "s")]
    pub s_count: u32,
    pub ker_ev_dim: u32,
    #[serde(rename = "jac_quot_dim")]
    pub jacobian_quotient_dim: u32,
    #[serde(rename = "jg_quot_dim")]
    pub jg_quotient_dim: u32,
    #[serde(rename = "cond_ideal_x")]
    pub conductor_ideal_dim_x: u32,
    #[serde(rename = "cond_ideal_y")]
    pub conductor_ideal_dim_y: u32,
    #[serde(skip)]
    pub tau_x: u32,
    pub param_codim: u32,
    pub composite_mu_i: u32,
    pub composite_codim: u32,
    #[serde(skip)]
    pub decomposition: Decomposition,
}

pub fn full_report(m: &ConsistentPlaneMap) -> Result<InvariantReport, InvariantError> {
    let curve = m.curve();
    let image = m.image();
    let composite = composite_invariants(m)?;
    let (cond_x, cond_y) = conductor_ideal_dims(m);
    let r = InvariantReport {
        weights: curve.weights().to_vec(),
        l1: m.l1(),
        l2: m.l2(),
        n: curve.ambient_dim(),
        mu_x: curve.milnor(),
        delta_x: curve.delta(),
        mu_y: image.milnor(),
        delta_y: image.delta(),
        k: m.k(),
        delta_f: delta_map(m),
        mu_i: image_milnor(m),
        ae_codim_f: ae_codim(m),
        ae_codim_pair: ae_codim_pair(m),
        s_count: s_count(m),
        ker_ev_dim: ker_ev_dim(m)?,
        jacobian_quotient_dim: jacobian_quotient_dim(m),
        jg_quotient_dim: jg_quotient_dim(m)?,
        conductor_ideal_dim_x: cond_x,
        conductor_ideal_dim_y: cond_y,
        tau_x: curve.milnor(),
        param_codim: param_codim(curve),
        composite_mu_i: composite.mu_i,
        composite_codim: composite.codim,
        decomposition: composite.decomposition,
    };
    r.check_identities(m)?;
    Ok(r)
}

impl InvariantReport {
    fn check_identities(&self, m: &ConsistentPlaneMap) -> Result<(), InvariantError> {
        let v = |x: u32| x as i64;
        let image_sg = m.image().semigroup();
        identity(
            "delta_y = genus(<l1,l2>)",
            v(self.delta_y),
            v(image_sg.genus()),
        )?;
        identity(
            "mu_y = conductor(<l1,l2>)",
            v(self.mu_y),
            v(image_sg.conductor()),
        )?;
        identity("mu_x = 2 delta_x", v(self.mu_x), 2 * v(self.delta_x))?;
        identity(
            "mu_y - mu_x = 2 delta_f",
            v(self.mu_y) - v(self.mu_x),
            2 * v(self.delta_f),
        )?;
        identity(
            "2 mu_i = mu_x + mu_y",
            2 * v(self.mu_i),
            v(self.mu_x) + v(self.mu_y),
        )?;
        identity(
            "mu_i = mu_x + delta_f",
            v(self.mu_i),
            v(self.mu_x) + v(self.delta_f),
        )?;
        identity(
            "mu_i = mu_y - delta_f",
            v(self.mu_i),
            v(self.mu_y) - v(self.delta_f),
        )?;
        identity("ae_codim_pair = mu_i", v(self.ae_codim_pair), v(self.mu_i))?;
        identity(
            "ae_codim_pair = ae_codim_f + tau_x",
            v(self.ae_codim_pair),
            v(self.ae_codim_f) + v(self.tau_x),
        )?;
        identity(
            "jac_quot_dim - ker_ev_dim = mu_x",
            v(self.jacobian_quotient_dim) - v(self.ker_ev_dim),
            v(self.mu_x),
        )?;
        identity(
            "ae_codim_f = ker_ev_dim + jg_quot_dim",
            v(self.ae_codim_f),
            v(self.ker_ev_dim) + v(self.jg_quotient_dim),
        )?;
        identity(
            "ae_codim_f = jac_quot_dim - mu_x + jg_quot_dim",
            v(self.ae_codim_f),
            v(self.jacobian_quotient_dim) - v(self.mu_x) + v(self.jg_quotient_dim),
        )?;
        identity(
            "cond_ideal_x - cond_ideal_y = delta_f",
            v(self.conductor_ideal_dim_x) - v(self.conductor_ideal_dim_y),
            v(self.delta_f),
        )?;
        identity(
            "mu_i = delta_x + delta_y",
            v(self.mu_i),
            v(self.delta_x) + v(self.delta_y),
        )?;
        Ok(())
    }
}
