//! Monomial source curves, consistent degree-one maps to the plane, and
//! their image curves.
//!
//! Only exponent data is modeled. The nonzero coefficients of the
//! parametrization and of the map components never affect a dimension count,
//! so they are fixed implicitly to the generic case.

use crate::semigroup::{gcd, is_ci_presentable, NumericalSemigroup, SemigroupError};
use thiserror::Error;

/// Bound on `(l1 - 1)(l2 - 1)`, the conductor of the image semigroup.
pub const MAX_IMAGE_CONDUCTOR: u64 = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error("semigroup <{weights:?}> is not symmetric (conductor {conductor}, genus {genus}); the curve cannot be a complete intersection")]
    NotGorenstein {
        weights: Vec<u32>,
        conductor: u32,
        genus: u32,
    },
    #[error("weights {0:?} do not present a complete-intersection semigroup")]
    NotCompleteIntersection(Vec<u32>),
    #[error("degree {degree} is not in the semigroup <{weights:?}>")]
    NotConsistent { weights: Vec<u32>, degree: u32 },
    #[error("gcd({l1}, {l2}) = {gcd}; the map is not of degree one onto its image")]
    NotDegreeOne { l1: u32, l2: u32, gcd: u32 },
    #[error("expected {expected} equation degrees for {weights} weights, got {got}")]
    DegreeCountMismatch {
        weights: usize,
        expected: usize,
        got: usize,
    },
    #[error("product of equation degrees {degrees} differs from product of weights {weights}")]
    NotIrreducible { degrees: u128, weights: u128 },
    #[error("equation degrees give a negative Milnor number {0}")]
    NegativeMilnor(i64),
    #[error("equation degrees give Milnor number {from_degrees}, conductor is {conductor}")]
    MilnorMismatch { from_degrees: u32, conductor: u32 },
    #[error("image conductor ({l1}-1)({l2}-1) exceeds {MAX_IMAGE_CONDUCTOR}")]
    TooLarge { l1: u32, l2: u32 },
}

impl ModelError {
    /// Stable identifier used in diagnostics.
    pub fn name(&self) -> &'static str {
        match self {
            ModelError::Semigroup(e) => e.name(),
            ModelError::NotGorenstein { .. } => "NotGorenstein",
            ModelError::NotCompleteIntersection(_) => "NotCompleteIntersection",
            ModelError::NotConsistent { .. } => "NotConsistent",
            ModelError::NotDegreeOne { .. } => "NotDegreeOne",
            ModelError::DegreeCountMismatch { .. } => "DegreeCountMismatch",
            ModelError::NotIrreducible { .. } => "NotIrreducible",
            ModelError::NegativeMilnor(_) => "NegativeMilnor",
            ModelError::MilnorMismatch { .. } => "MilnorMismatch",
            ModelError::TooLarge { .. } => "TooLarge",
        }
    }
}

/// An irreducible weighted-homogeneous curve `t -> (t^w1, ..., t^wn)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialCurve {
    semigroup: NumericalSemigroup,
}

impl MonomialCurve {
    /// Accepts any weight list with gcd 1 whose semigroup is symmetric.
    pub fn new(weights: &[u32]) -> Result<Self, ModelError> {
        let semigroup = NumericalSemigroup::from_generators(weights)?;
        if !semigroup.is_symmetric() {
            return Err(ModelError::NotGorenstein {
                weights: weights.to_vec(),
                conductor: semigroup.conductor(),
                genus: semigroup.genus(),
            });
        }
        Ok(MonomialCurve { semigroup })
    }

    /// Like [`MonomialCurve::new`], additionally requiring a
    /// complete-intersection presentation.
    pub fn new_strict(weights: &[u32]) -> Result<Self, ModelError> {
        let curve = Self::new(weights)?;
        if !is_ci_presentable(weights)? {
            return Err(ModelError::NotCompleteIntersection(weights.to_vec()));
        }
        Ok(curve)
    }

    pub fn weights(&self) -> &[u32] {
        self.semigroup.generators()
    }

    pub fn semigroup(&self) -> &NumericalSemigroup {
        &self.semigroup
    }

    pub fn ambient_dim(&self) -> u32 {
        self.weights().len() as u32
    }

    pub fn delta(&self) -> u32 {
        self.semigroup.genus()
    }

    /// Milnor number, the conductor of the value semigroup.
    pub fn milnor(&self) -> u32 {
        self.semigroup.conductor()
    }

    pub fn is_smooth(&self) -> bool {
        self.milnor() == 0
    }

    /// Cross-checks a list of defining-equation degrees against the
    /// conductor and returns the common Milnor number.
    pub fn check_equation_degrees(&self, degrees: &[u32]) -> Result<u32, ModelError> {
        let from_degrees = milnor_from_equation_degrees(self.weights(), degrees)?;
        if from_degrees != self.milnor() {
            return Err(ModelError::MilnorMismatch {
                from_degrees,
                conductor: self.milnor(),
            });
        }
        Ok(from_degrees)
    }
}

/// Milnor number of an irreducible weighted-homogeneous complete
/// intersection curve of type `(w1..wn; d1..d_{n-1})`:
/// `sum(d) - sum(w) + 1`, valid when `prod(d) = prod(w)`.
pub fn milnor_from_equation_degrees(weights: &[u32], degrees: &[u32]) -> Result<u32, ModelError> {
    let expected = weights.len().saturating_sub(1);
    if weights.is_empty() || degrees.len() != expected {
        return Err(ModelError::DegreeCountMismatch {
            weights: weights.len(),
            expected,
            got: degrees.len(),
        });
    }
    let prod = |xs: &[u32]| {
        xs.iter()
            .try_fold(1u128, |acc, &x| acc.checked_mul(x as u128))
            .unwrap_or(u128::MAX)
    };
    let (pd, pw) = (prod(degrees), prod(weights));
    if pd != pw {
        return Err(ModelError::NotIrreducible {
            degrees: pd,
            weights: pw,
        });
    }
    let sum = |xs: &[u32]| xs.iter().map(|&x| x as i64).sum::<i64>();
    let mu = sum(degrees) - sum(weights) + 1;
    u32::try_from(mu).map_err(|_| ModelError::NegativeMilnor(mu))
}

/// The plane image curve `u^l2 - v^l1 = 0`, parametrized by `(t^l1, t^l2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImageCurve {
    semigroup: NumericalSemigroup,
    delta: u32,
}

impl ImageCurve {
    fn new(l1: u32, l2: u32) -> Result<Self, ModelError> {
        let semigroup = NumericalSemigroup::from_generators(&[l1, l2])?;
        Ok(ImageCurve {
            semigroup,
            delta: (l1 - 1) * (l2 - 1) / 2,
        })
    }

    pub fn semigroup(&self) -> &NumericalSemigroup {
        &self.semigroup
    }

    /// `(l1 - 1)(l2 - 1) / 2`.
    pub fn delta(&self) -> u32 {
        self.delta
    }

    pub fn milnor(&self) -> u32 {
        2 * self.delta
    }

    /// Weighted degree `l1 * l2` of the defining equation.
    pub fn equation_degree(&self) -> u32 {
        let g = self.semigroup.generators();
        g[0] * g[1]
    }
}

/// A finite, degree-one map `(X,0) -> (C^2,0)` whose components are weighted
/// homogeneous of degrees `l1 <= l2` for the weights of `X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConsistentPlaneMap {
    curve: MonomialCurve,
    l1: u32,
    l2: u32,
    image: ImageCurve,
}

impl ConsistentPlaneMap {
    /// Validates a pair of weighted degrees. The pair is sorted first, so
    /// argument order does not matter.
    pub fn new(curve: MonomialCurve, a: u32, b: u32) -> Result<Self, ModelError> {
        let (l1, l2) = if a <= b { (a, b) } else { (b, a) };
        match gcd(l1, l2) {
            1 => {}
            g => return Err(ModelError::NotDegreeOne { l1, l2, gcd: g }),
        }
        for degree in [l1, l2] {
            if degree == 0 || !curve.semigroup().contains_nat(degree) {
                return Err(ModelError::NotConsistent {
                    weights: curve.weights().to_vec(),
                    degree,
                });
            }
        }
        if (l1 as u64 - 1) * (l2 as u64 - 1) > MAX_IMAGE_CONDUCTOR {
            return Err(ModelError::TooLarge { l1, l2 });
        }
        let image = ImageCurve::new(l1, l2)?;
        Ok(ConsistentPlaneMap {
            curve,
            l1,
            l2,
            image,
        })
    }

    pub fn curve(&self) -> &MonomialCurve {
        &self.curve
    }

    pub fn image(&self) -> &ImageCurve {
        &self.image
    }

    pub fn l1(&self) -> u32 {
        self.l1
    }

    pub fn l2(&self) -> u32 {
        self.l2
    }

    /// `l2 - l1`.
    pub fn k(&self) -> u32 {
        self.l2 - self.l1
    }

    /// Whether the image semigroup equals the source semigroup.
    pub fn is_birational_onto_source(&self) -> bool {
        self.image.semigroup().gaps() == self.curve.semigroup().gaps()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cusp_curve() {
        let c = MonomialCurve::new(&[3, 2]).unwrap();
        assert_eq!((c.milnor(), c.delta(), c.ambient_dim()), (2, 1, 2));
        assert!(!c.is_smooth());
        assert_eq!(c.weights(), &[3, 2]);
    }

    #[test]
    fn space_curve_with_redundant_weight() {
        let c = MonomialCurve::new(&[2, 3, 5]).unwrap();
        assert_eq!((c.milnor(), c.delta(), c.ambient_dim()), (2, 1, 3));
        assert_eq!(c.check_equation_degrees(&[6, 5]), Ok(2));
        assert_eq!(
            c.check_equation_degrees(&[10, 3]),
            Err(ModelError::MilnorMismatch {
                from_degrees: 4,
                conductor: 2
            })
        );
    }

    #[test]
    fn non_gorenstein_rejected() {
        let err = MonomialCurve::new(&[3, 4, 5]).unwrap_err();
        assert_eq!(err.name(), "NotGorenstein");
        assert_eq!(
            MonomialCurve::new(&[4, 6]).unwrap_err().name(),
            "NotCoprime"
        );
    }

    #[test]
    fn strict_mode() {
        assert!(MonomialCurve::new_strict(&[2, 3, 5]).is_ok());
        assert!(MonomialCurve::new_strict(&[4, 5, 6]).is_ok());
        // symmetric but not a complete intersection
        assert!(MonomialCurve::new(&[5, 6, 7, 8]).is_ok());
        assert_eq!(
            MonomialCurve::new_strict(&[5, 6, 7, 8]).unwrap_err().name(),
            "NotCompleteIntersection"
        );
    }

    #[test]
    fn smooth_curve() {
        let c = MonomialCurve::new(&[1]).unwrap();
        assert!(c.is_smooth());
        assert_eq!((c.milnor(), c.delta(), c.ambient_dim()), (0, 0, 1));
        let m = ConsistentPlaneMap::new(c, 1, 1).unwrap();
        assert_eq!((m.l1(), m.l2(), m.k()), (1, 1, 0));
        assert_eq!(m.image().delta(), 0);
    }

    #[test]
    fn milnor_from_degrees() {
        assert_eq!(milnor_from_equation_degrees(&[3, 2], &[6]), Ok(2));
        assert_eq!(milnor_from_equation_degrees(&[2, 3, 5], &[6, 5]), Ok(2));
        assert_eq!(milnor_from_equation_degrees(&[1], &[]), Ok(0));
        assert_eq!(
            milnor_from_equation_degrees(&[2, 3, 5], &[6])
                .unwrap_err()
                .name(),
            "DegreeCountMismatch"
        );
        assert_eq!(
            milnor_from_equation_degrees(&[3, 2], &[5])
                .unwrap_err()
                .name(),
            "NotIrreducible"
        );
    }

    #[test]
    fn example_maps() {
        let m = ConsistentPlaneMap::new(MonomialCurve::new(&[3, 2]).unwrap(), 3, 4).unwrap();
        assert_eq!(m.k(), 1);
        assert_eq!(m.image().semigroup().generators(), &[3, 4]);
        assert_eq!((m.image().delta(), m.image().milnor()), (3, 6));
        assert_eq!(m.image().equation_degree(), 12);

        let m = ConsistentPlaneMap::new(MonomialCurve::new(&[2, 3, 5]).unwrap(), 2, 11).unwrap();
        assert_eq!(m.k(), 9);
        assert_eq!((m.image().delta(), m.image().milnor()), (5, 10));
    }

    #[test]
    fn map_validation_errors() {
        let c45 = MonomialCurve::new(&[4, 5]).unwrap();
        assert_eq!(
            ConsistentPlaneMap::new(c45.clone(), 4, 6),
            Err(ModelError::NotDegreeOne {
                l1: 4,
                l2: 6,
                gcd: 2
            })
        );
        assert_eq!(
            ConsistentPlaneMap::new(c45.clone(), 4, 7),
            Err(ModelError::NotConsistent {
                weights: vec![4, 5],
                degree: 7
            })
        );
        let c23 = MonomialCurve::new(&[2, 3]).unwrap();
        assert_eq!(
            ConsistentPlaneMap::new(c23.clone(), 2, 4)
                .unwrap_err()
                .name(),
            "NotDegreeOne"
        );
        assert_eq!(
            ConsistentPlaneMap::new(c23, 1, 3).unwrap_err().name(),
            "NotConsistent"
        );
    }

    #[test]
    fn normalization() {
        let c = MonomialCurve::new(&[4, 5]).unwrap();
        assert_eq!(
            ConsistentPlaneMap::new(c.clone(), 9, 4),
            ConsistentPlaneMap::new(c, 4, 9)
        );
    }
}
