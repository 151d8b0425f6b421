//! Shared fixtures for the benchmarks.

use monocurve_core::{ConsistentPlaneMap, MonomialCurve};

/// A map with a large image conductor, to make oracle enumeration visible.
pub fn large_map() -> ConsistentPlaneMap {
    ConsistentPlaneMap::new(MonomialCurve::new(&[7, 12]).unwrap(), 35, 36).unwrap()
}

/// The first worked example: the cusp sent to a (3,4) curve.
pub fn cusp_map() -> ConsistentPlaneMap {
    ConsistentPlaneMap::new(MonomialCurve::new(&[3, 2]).unwrap(), 3, 4).unwrap()
}
