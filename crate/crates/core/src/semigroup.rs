//! Numerical semigroups given by generator lists.
//!
//! A [`NumericalSemigroup`] keeps the generator list exactly as supplied
//! (duplicates and redundant generators included, since the list length is
//! the embedding dimension of the monomial curve) together with a dense
//! membership table covering `0..conductor + max(generators)`. Every integer
//! at or beyond the end of the table is a member.

use crate::exponent_set::ExponentSet;
use thiserror::Error;

/// Upper bound on the size of a membership table. Generator lists whose
/// conductor would exceed this are rejected instead of exhausting memory.
pub const MAX_TABLE_LEN: usize = 1 << 26;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemigroupError {
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("generator list contains 0")]
    ZeroGenerator,
    #[error("generators have gcd {gcd}, expected 1")]
    NotCoprime { gcd: u32 },
    #[error("{0} is not a member of the semigroup")]
    NotAMember(u32),
    #[error("membership table would exceed {limit} entries")]
    TooLarge { limit: usize },
}

impl SemigroupError {
    /// Stable identifier used in diagnostics.
    pub fn name(&self) -> &'static str {
        match self {
            SemigroupError::EmptyGenerators => "EmptyGenerators",
            SemigroupError::ZeroGenerator => "ZeroGenerator",
            SemigroupError::NotCoprime { .. } => "NotCoprime",
            SemigroupError::NotAMember(_) => "NotAMember",
            SemigroupError::TooLarge { .. } => "TooLarge",
        }
    }
}

pub fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn gcd_all(values: &[u32]) -> u32 {
    values.iter().fold(0, |acc, &v| gcd(acc, v))
}

fn check_generators(gens: &[u32]) -> Result<(), SemigroupError> {
    if gens.is_empty() {
        return Err(SemigroupError::EmptyGenerators);
    }
    if gens.contains(&0) {
        return Err(SemigroupError::ZeroGenerator);
    }
    match gcd_all(gens) {
        1 => Ok(()),
        g => Err(SemigroupError::NotCoprime { gcd: g }),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericalSemigroup {
    generators: Vec<u32>,
    table: Vec<bool>,
    conductor: u32,
    gaps: Vec<u32>,
}

impl NumericalSemigroup {
    /// Builds `<gens>` by forward dynamic programming.
    ///
    /// The table is grown until a run of `min(gens)` consecutive members
    /// appears; the start of that run is the conductor. The table is then
    /// extended to `conductor + max(gens)`.
    pub fn from_generators(gens: &[u32]) -> Result<Self, SemigroupError> {
        check_generators(gens)?;
        let min = *gens.iter().min().expect("nonempty") as usize;
        let max = *gens.iter().max().expect("nonempty") as usize;

        let mut table: Vec<bool> = Vec::new();
        let mut run = 0usize;
        let conductor = loop {
            let x = table.len();
            if x >= MAX_TABLE_LEN {
                return Err(SemigroupError::TooLarge {
                    limit: MAX_TABLE_LEN,
                });
            }
            let member = x == 0
                || gens
                    .iter()
                    .any(|&g| g as usize <= x && table[x - g as usize]);
            table.push(member);
            run = if member { run + 1 } else { 0 };
            if run >= min {
                break x + 1 - run;
            }
        };
        if conductor + max > MAX_TABLE_LEN {
            return Err(SemigroupError::TooLarge {
                limit: MAX_TABLE_LEN,
            });
        }
        table.resize(conductor + max, true);

        let gaps = (0..conductor)
            .filter(|&x| !table[x])
            .map(|x| x as u32)
            .collect();
        Ok(NumericalSemigroup {
            generators: gens.to_vec(),
            table,
            conductor: conductor as u32,
            gaps,
        })
    }

    /// The semigroup of all natural numbers, `<1>`.
    pub fn naturals() -> Self {
        Self::from_generators(&[1]).expect("<1> is valid")
    }

    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    pub fn contains(&self, m: i64) -> bool {
        if m < 0 {
            return false;
        }
        match usize::try_from(m) {
            Ok(i) if i < self.table.len() => self.table[i],
            _ => true,
        }
    }

    /// Membership for a natural number.
    #[inline]
    pub fn contains_nat(&self, m: u32) -> bool {
        self.table.get(m as usize).copied().unwrap_or(true)
    }

    /// Largest gap; `-1` for the naturals.
    pub fn frobenius(&self) -> i64 {
        self.conductor as i64 - 1
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn gaps(&self) -> &[u32] {
        &self.gaps
    }

    pub fn genus(&self) -> u32 {
        self.gaps.len() as u32
    }

    /// Length of the dense membership table, `conductor + max(generators)`.
    pub fn table_len(&self) -> u32 {
        self.table.len() as u32
    }

    /// Members below the conductor, in increasing order.
    pub fn small_elements(&self) -> impl Iterator<Item = u32> + '_ {
        (0..self.conductor).filter(|&x| self.table[x as usize])
    }

    pub fn is_symmetric(&self) -> bool {
        2 * self.genus() == self.conductor
    }

    /// Smallest member in each residue class modulo `m`, indexed by residue.
    pub fn apery_set(&self, m: u32) -> Result<Vec<u32>, SemigroupError> {
        if m == 0 || !self.contains_nat(m) {
            return Err(SemigroupError::NotAMember(m));
        }
        let mut apery: Vec<Option<u32>> = vec![None; m as usize];
        let mut found = 0;
        let mut x = 0u32;
        while found < m {
            let slot = &mut apery[(x % m) as usize];
            if slot.is_none() && self.contains_nat(x) {
                *slot = Some(x);
                found += 1;
            }
            x += 1;
        }
        Ok(apery.into_iter().map(|a| a.expect("filled")).collect())
    }

    /// Cofinite exponent set with tail starting at the conductor.
    pub fn to_exponent_set(&self) -> ExponentSet {
        ExponentSet::cofinite(self.small_elements(), self.conductor)
    }
}

/// Whether `target` is a nonnegative integer combination of `gens`. No
/// coprimality is assumed.
fn representable(target: u32, gens: &[u32]) -> bool {
    let target = target as usize;
    let mut reach = vec![false; target + 1];
    reach[0] = true;
    for x in 1..=target {
        reach[x] = gens
            .iter()
            .any(|&g| g != 0 && g as usize <= x && reach[x - g as usize]);
    }
    reach[target]
}

/// Whether the generator list presents a complete-intersection monomial
/// curve, decided by the gluing criterion.
///
/// Redundant generators are dropped first (each is a trivial gluing, a graph
/// equation `x_j - monomial`). A minimal list of length one qualifies; a
/// longer minimal list qualifies iff it splits into parts `A`, `B` with
/// `d_A = gcd(A)`, `d_B = gcd(B)` coprime, `d_B` in `<A/d_A>`, `d_A` in
/// `<B/d_B>`, and both reduced parts qualify recursively.
pub fn is_ci_presentable(gens: &[u32]) -> Result<bool, SemigroupError> {
    check_generators(gens)?;
    Ok(ci_minimal(minimal_generators(gens)))
}

/// Drops duplicates and generators representable by the remaining ones.
fn minimal_generators(gens: &[u32]) -> Vec<u32> {
    let mut sorted = gens.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let mut minimal: Vec<u32> = Vec::with_capacity(sorted.len());
    for g in sorted {
        // Anything representable by smaller generators is redundant; larger
        // ones cannot contribute to a smaller target.
        if !representable(g, &minimal) {
            minimal.push(g);
        }
    }
    minimal
}

fn ci_minimal(gens: Vec<u32>) -> bool {
    let n = gens.len();
    if n == 1 {
        return gens[0] == 1;
    }
    // Fix gens[0] in A so each unordered split is tried once.
    for mask in 0u64..(1u64 << (n - 1)) {
        let (mut a, mut b) = (vec![gens[0]], Vec::new());
        for (i, &g) in gens.iter().enumerate().skip(1) {
            if mask & (1 << (i - 1)) != 0 {
                a.push(g);
            } else {
                b.push(g);
            }
        }
        if b.is_empty() {
            continue;
        }
        let (da, db) = (gcd_all(&a), gcd_all(&b));
        if gcd(da, db) != 1 {
            continue;
        }
        let a_red: Vec<u32> = a.iter().map(|g| g / da).collect();
        let b_red: Vec<u32> = b.iter().map(|g| g / db).collect();
        if representable(db, &a_red)
            && representable(da, &b_red)
            && ci_minimal(minimal_generators(&a_red))
            && ci_minimal(minimal_generators(&b_red))
        {
            return true;
        }
    }
    false
}
