//! Finite and cofinite sets of natural numbers.
//!
//! Every exponent set arising from a monomial ring or ideal is either finite
//! or cofinite. A set is stored as a membership mask over `0..horizon` plus
//! the constant membership of everything at or beyond the horizon. The mask
//! is kept canonical (its last entry differs from the tail membership), so
//! two sets are equal exactly when their representations are; for a
//! cofinite set the horizon is the minimal tail start.

use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    Finite,
    Cofinite,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExponentSet {
    mask: Vec<bool>,
    kind: Kind,
}

/// Cardinality of a set difference.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Count {
    Finite(u32),
    Infinite,
}

impl Count {
    pub fn finite(self) -> Option<u32> {
        match self {
            Count::Finite(n) => Some(n),
            Count::Infinite => None,
        }
    }
}

impl fmt::Display for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Count::Finite(n) => write!(f, "{n}"),
            Count::Infinite => f.write_str("infinite"),
        }
    }
}

impl ExponentSet {
    fn from_mask(mut mask: Vec<bool>, kind: Kind) -> Self {
        let tail = kind == Kind::Cofinite;
        while mask.last() == Some(&tail) {
            mask.pop();
        }
        ExponentSet { mask, kind }
    }

    pub fn finite(elements: impl IntoIterator<Item = u32>) -> Self {
        let mut mask = Vec::new();
        for x in elements {
            let i = x as usize;
            if i >= mask.len() {
                mask.resize(i + 1, false);
            }
            mask[i] = true;
        }
        Self::from_mask(mask, Kind::Finite)
    }

    /// Builds a cofinite set from members below `tail_start` (members at or
    /// above the tail are ignored) and canonicalizes it.
    pub fn cofinite(present: impl IntoIterator<Item = u32>, tail_start: u32) -> Self {
        let mut mask = vec![false; tail_start as usize];
        for x in present {
            if x < tail_start {
                mask[x as usize] = true;
            }
        }
        Self::from_mask(mask, Kind::Cofinite)
    }

    /// Builds a set from a membership predicate on `0..horizon`.
    pub fn from_predicate(horizon: u32, kind: Kind, member: impl Fn(u32) -> bool) -> Self {
        Self::from_mask((0..horizon).map(member).collect(), kind)
    }

    /// The set of all naturals.
    pub fn naturals() -> Self {
        Self::from_mask(Vec::new(), Kind::Cofinite)
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn is_cofinite(&self) -> bool {
        self.kind == Kind::Cofinite
    }

    /// Start of the infinite tail, if any.
    pub fn tail_start(&self) -> Option<u32> {
        self.is_cofinite().then(|| self.horizon())
    }

    /// First value from which membership is constant: one past the largest
    /// element of a finite set, or the tail start of a cofinite one.
    pub fn horizon(&self) -> u32 {
        self.mask.len() as u32
    }

    #[inline]
    pub fn contains(&self, m: u32) -> bool {
        match self.mask.get(m as usize) {
            Some(&b) => b,
            None => self.is_cofinite(),
        }
    }

    /// Members below the horizon, in increasing order.
    pub fn present(&self) -> impl Iterator<Item = u32> + '_ {
        self.mask
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(i, _)| i as u32)
    }

    /// Adds `d` to every element.
    pub fn shift(&self, d: u32) -> Self {
        let mut mask = vec![false; d as usize];
        mask.extend_from_slice(&self.mask);
        // A shifted naturals set has an empty mask and a nonzero tail start.
        Self::from_mask(mask, self.kind)
    }

    /// `{ x : x + d in self }`, the preimage of a shift by `d`.
    pub fn unshift(&self, d: u32) -> Self {
        let mask = self.mask.get(d as usize..).unwrap_or(&[]).to_vec();
        Self::from_mask(mask, self.kind)
    }

    /// Members strictly below `bound`, in increasing order.
    pub fn elements_below(&self, bound: u32) -> impl Iterator<Item = u32> + '_ {
        (0..bound).filter(move |&x| self.contains(x))
    }

    fn combine(&self, other: &Self, keep: impl Fn(bool, bool) -> bool) -> Self {
        let horizon = self.horizon().max(other.horizon());
        let kind = if keep(self.is_cofinite(), other.is_cofinite()) {
            Kind::Cofinite
        } else {
            Kind::Finite
        };
        Self::from_predicate(horizon, kind, |x| keep(self.contains(x), other.contains(x)))
    }

    pub fn union(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a || b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a && b)
    }

    /// `self \ other`.
    pub fn difference(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a && !b)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        if self.is_cofinite() && !other.is_cofinite() {
            return false;
        }
        let horizon = self.horizon().max(other.horizon());
        (0..horizon).all(|x| !self.contains(x) || other.contains(x))
    }

    /// Number of elements, or `Infinite` for a cofinite set.
    pub fn len(&self) -> Count {
        match self.kind {
            Kind::Finite => Count::Finite(self.present().count() as u32),
            Kind::Cofinite => Count::Infinite,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.kind == Kind::Finite && self.mask.is_empty()
    }
}

impl fmt::Debug for ExponentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let present: Vec<u32> = self.present().collect();
        match self.kind {
            Kind::Finite => write!(f, "Finite({present:?})"),
            Kind::Cofinite => write!(f, "Cofinite({present:?}, tail_start: {})", self.horizon()),
        }
    }
}

/// `|ambient \ covered|`, or `Infinite` when a cofinite ambient is not
/// eventually covered.
pub fn count_complement(ambient: &ExponentSet, covered: &ExponentSet) -> Count {
    ambient.difference(covered).len()
}
