//! Numerical semigroups and their classical invariants.
//!
//! A numerical semigroup is a cofinite subset of the nonnegative integers
//! that contains 0 and is closed under addition. This module provides:
//!
//! - [`GeneratorSpec`]: a finite generator set, optionally with an adjoined
//!   tail `t` (every integer `>= t` is thrown in), written `"5,13@20"`
//! - [`NumericalSemigroup`]: the semigroup itself, stored as a dense
//!   membership table over `[0, c+m)`
//! - [`AperyVector`]: the Apéry set with respect to the multiplicity
//! - [`InvariantRecord`]: all scalar invariants of one semigroup
//!
//! Every invariant is read off the membership table; the table is built once
//! and the semigroup is immutable afterwards (caches fill at most once).

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::bits::BitVec;
use crate::metrics;

/// Hard cap on membership-table slots. Construction fails with
/// [`SpecError::TooLarge`] instead of attempting a giant allocation.
pub const MAX_TABLE_SLOTS: u64 = 1 << 28;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpecError {
    #[error("empty generator spec: needs generators or an adjoined tail")]
    Empty,
    #[error("generators must be positive")]
    ZeroGenerator,
    #[error("gcd of generators is {gcd} > 1 and no tail is adjoined: the complement is infinite")]
    NotNumerical { gcd: u64 },
    #[error("membership table would need about {needed} slots (cap {cap})")]
    TooLarge { needed: u64, cap: u64 },
    #[error("invalid gap set: {0}")]
    InvalidGaps(String),
    #[error("cannot parse generator spec: {0}")]
    Parse(String),
}

/// A finite set of generators plus an optional adjoined tail threshold.
///
/// `GeneratorSpec { generators: {5,13}, adjoin_from: Some(20) }` describes
/// the smallest numerical semigroup containing 5, 13 and every integer
/// `>= 20`. Without a tail the generators must have gcd 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneratorSpec {
    generators: Vec<u64>,
    adjoin_from: Option<u64>,
}

impl GeneratorSpec {
    /// Build a spec, sorting and deduplicating the generators.
    pub fn new(
        generators: impl IntoIterator<Item = u64>,
        adjoin_from: Option<u64>,
    ) -> Result<Self, SpecError> {
        let mut generators: Vec<u64> = generators.into_iter().collect();
        if generators.iter().any(|&g| g == 0) {
            return Err(SpecError::ZeroGenerator);
        }
        generators.sort_unstable();
        generators.dedup();
        if generators.is_empty() && adjoin_from.is_none() {
            return Err(SpecError::Empty);
        }
        Ok(GeneratorSpec {
            generators,
            adjoin_from,
        })
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn adjoin_from(&self) -> Option<u64> {
        self.adjoin_from
    }
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        if let Some(t) = self.adjoin_from {
            write!(f, "@{t}")?;
        }
        Ok(())
    }
}

impl FromStr for GeneratorSpec {
    type Err = SpecError;

    /// Parses the textual format `INT(,INT)*(@INT)?`, e.g. `"5,13@20"`.
    fn from_str(s: &str) -> Result<Self, SpecError> {
        let s = s.trim();
        let (gens_part, tail) = match s.split_once('@') {
            Some((g, t)) => {
                let t = t
                    .parse::<u64>()
                    .map_err(|_| SpecError::Parse(format!("bad tail threshold {t:?}")))?;
                (g, Some(t))
            }
            None => (s, None),
        };
        if gens_part.is_empty() {
            return Err(SpecError::Parse("no generators".into()));
        }
        let mut gens = Vec::new();
        for tok in gens_part.split(',') {
            let g = tok
                .parse::<u64>()
                .map_err(|_| SpecError::Parse(format!("bad generator {tok:?}")))?;
            gens.push(g);
        }
        GeneratorSpec::new(gens, tail)
    }
}

/// All scalar invariants of one numerical semigroup.
///
/// Serializes to a flat JSON object with exactly the field names
/// `m, F, c, g, L, e, t, q, rho, ratio, W, E`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantRecord {
    /// Multiplicity: least positive element.
    #[serde(rename = "m")]
    pub multiplicity: u64,
    /// Frobenius number: largest gap (-1 for the full semigroup).
    #[serde(rename = "F")]
    pub frobenius: i64,
    /// Conductor `F + 1`.
    #[serde(rename = "c")]
    pub conductor: u64,
    /// Genus: number of gaps.
    #[serde(rename = "g")]
    pub genus: u64,
    /// Number of left elements (elements below the conductor).
    #[serde(rename = "L")]
    pub left_count: u64,
    /// Embedding dimension: number of minimal generators.
    #[serde(rename = "e")]
    pub embedding_dimension: u64,
    /// Type: number of pseudo-Frobenius numbers.
    #[serde(rename = "t")]
    pub semigroup_type: u64,
    /// Depth `q = ceil(c/m)`.
    #[serde(rename = "q")]
    pub depth: u64,
    /// `rho = q*m - c`, the slack of the last block.
    pub rho: u64,
    /// Second smallest minimal generator; absent when `e < 2`.
    pub ratio: Option<u64>,
    /// Wilf number `W = e*L - c`.
    #[serde(rename = "W")]
    pub wilf: i64,
    /// Eliahou number `E = |P∩L|*L - q*|D| + q*m - c`.
    #[serde(rename = "E")]
    pub eliahou: i64,
}

/// Apéry set with respect to the multiplicity: entry `i` is the least
/// element congruent to `i` mod `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AperyVector {
    entries: Vec<u64>,
}

impl AperyVector {
    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false // always has entry 0
    }

    pub fn max(&self) -> u64 {
        *self.entries.iter().max().expect("nonempty")
    }

    pub fn sum(&self) -> u64 {
        self.entries.iter().sum()
    }
}

/// A numerical semigroup, stored as a membership table over `[0, c+m)`.
///
/// Everything at or above the conductor `c` is an element, so the table
/// covers all the structure there is. Invariant caches (primitives, Apéry
/// set, pseudo-Frobenius numbers) fill on first use and never change; the
/// value is observationally immutable and safe to share across threads.
#[derive(Clone)]
pub struct NumericalSemigroup {
    table: BitVec,
    multiplicity: u64,
    frobenius: i64,
    conductor: u64,
    genus: u64,
    primitives: OnceLock<Vec<u64>>,
    apery: OnceLock<AperyVector>,
    pseudo_frobenius: OnceLock<Vec<u64>>,
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.table == other.table
    }
}

impl Eq for NumericalSemigroup {}

impl std::hash::Hash for NumericalSemigroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.table.hash(state);
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("NumericalSemigroup")
            .field("m", &self.multiplicity)
            .field("F", &self.frobenius)
            .field("c", &self.conductor)
            .field("g", &self.genus)
            .finish()
    }
}

/// Additive closure of `gens` on `[0, bound)` as a bit table.
fn closure_table(gens: &[u64], bound: usize) -> BitVec {
    let mut t = BitVec::zeros(bound);
    if bound == 0 {
        return t;
    }
    t.set(0, true);
    for n in 1..bound {
        for &g in gens {
            let g = g as usize;
            if g <= n && t.get(n - g) {
                t.set(n, true);
                break;
            }
        }
    }
    t
}

fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

impl NumericalSemigroup {
    /// The full semigroup of all nonnegative integers.
    pub fn natural() -> Self {
        let mut table = BitVec::zeros(1);
        table.set(0, true);
        NumericalSemigroup {
            table,
            multiplicity: 1,
            frobenius: -1,
            conductor: 0,
            genus: 0,
            primitives: OnceLock::new(),
            apery: OnceLock::new(),
            pseudo_frobenius: OnceLock::new(),
        }
    }

    /// The least semigroup containing the spec's generators and, if a tail
    /// threshold `t` is present, every integer `>= t`.
    pub fn from_spec(spec: &GeneratorSpec) -> Result<Self, SpecError> {
        let gens = spec.generators();
        match spec.adjoin_from() {
            Some(t) => Self::build_with_tail(gens, t),
            None => {
                if gens.is_empty() {
                    return Err(SpecError::Empty);
                }
                let g = gens.iter().fold(0, |acc, &x| gcd(acc, x));
                if g != 1 {
                    return Err(SpecError::NotNumerical { gcd: g });
                }
                Self::build_closure(gens)
            }
        }
    }

    /// Semigroup generated by `gens` (gcd must be 1).
    pub fn generated_by(gens: &[u64]) -> Result<Self, SpecError> {
        Self::from_spec(&GeneratorSpec::new(gens.iter().copied(), None)?)
    }

    /// Semigroup `<gens>_t`: generated by `gens` together with all `n >= t`.
    pub fn with_tail(gens: &[u64], t: u64) -> Result<Self, SpecError> {
        Self::from_spec(&GeneratorSpec::new(gens.iter().copied(), Some(t))?)
    }

    fn build_with_tail(gens: &[u64], t: u64) -> Result<Self, SpecError> {
        if t >= MAX_TABLE_SLOTS {
            return Err(SpecError::TooLarge {
                needed: t,
                cap: MAX_TABLE_SLOTS,
            });
        }
        let t = t as usize;
        let closure = closure_table(gens, t);
        let frobenius = (0..t).rev().find(|&n| !closure.get(n));
        let Some(f) = frobenius else {
            // no gap below t: the tail closes everything
            return Ok(Self::natural());
        };
        let c = f + 1;
        let m = (1..t)
            .find(|&n| closure.get(n))
            .map_or(t, |n| n.min(t));
        debug_assert!(m >= 1 && c >= m);
        let len = c + m;
        let mut table = BitVec::zeros(len);
        for n in 0..len {
            if n >= t || (n < t && closure.get(n)) {
                table.set(n, true);
            }
        }
        Ok(Self::assemble(table, m as u64, f as i64))
    }

    fn build_closure(gens: &[u64]) -> Result<Self, SpecError> {
        let m = gens[0] as usize; // sorted, so the least generator
        if m == 1 {
            return Ok(Self::natural());
        }
        let mut bound: usize = 64;
        loop {
            if bound as u64 > MAX_TABLE_SLOTS {
                return Err(SpecError::TooLarge {
                    needed: bound as u64,
                    cap: MAX_TABLE_SLOTS,
                });
            }
            let closure = closure_table(gens, bound);
            // once m consecutive slots are filled, everything above is too
            if bound > m && (bound - m..bound).all(|n| closure.get(n)) {
                let f = (0..bound)
                    .rev()
                    .find(|&n| !closure.get(n))
                    .expect("m >= 2 means 1 is a gap");
                let c = f + 1;
                let len = c + m;
                let mut table = BitVec::zeros(len);
                for n in 0..len {
                    if closure.get(n) {
                        table.set(n, true);
                    }
                }
                return Ok(Self::assemble(table, m as u64, f as i64));
            }
            bound *= 2;
        }
    }

    /// Build from an explicit gap set; errors unless its complement really
    /// is closed under addition.
    pub fn from_gaps(gaps: &[u64]) -> Result<Self, SpecError> {
        let mut gaps: Vec<u64> = gaps.to_vec();
        gaps.sort_unstable();
        gaps.dedup();
        if gaps.is_empty() {
            return Ok(Self::natural());
        }
        if gaps[0] == 0 {
            return Err(SpecError::InvalidGaps("0 is always an element".into()));
        }
        let f = *gaps.last().expect("nonempty");
        if f + 1 >= MAX_TABLE_SLOTS {
            return Err(SpecError::TooLarge {
                needed: f + 1,
                cap: MAX_TABLE_SLOTS,
            });
        }
        let c = (f + 1) as usize;
        let gapset: HashSet<u64> = gaps.iter().copied().collect();
        let m = (1..=f + 1)
            .find(|n| !gapset.contains(n))
            .expect("f+1 is never a gap") as usize;
        let len = c + m;
        let mut table = BitVec::zeros(len);
        for n in 0..len {
            if n >= c || !gapset.contains(&(n as u64)) {
                table.set(n, true);
            }
        }
        // closure check: sums of member pairs must stay members
        let members: Vec<usize> = (1..len).filter(|&n| table.get(n)).collect();
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i..] {
                let s = a + b;
                if s >= len {
                    break;
                }
                if !table.get(s) {
                    return Err(SpecError::InvalidGaps(format!(
                        "{a} and {b} are elements but {s} is a gap"
                    )));
                }
            }
        }
        Ok(Self::assemble(table, m as u64, f as i64))
    }

    /// Internal: wrap a finished table. Caller guarantees closure; the table
    /// must span exactly `[0, c+m)`.
    pub(crate) fn from_table_trusted(table: BitVec) -> Self {
        let len = table.len();
        let frobenius = (0..len).rev().find(|&n| !table.get(n));
        match frobenius {
            None => Self::natural(),
            Some(f) => {
                let m = (1..len).find(|&n| table.get(n)).expect("cofinite") as u64;
                debug_assert_eq!(len, f + 1 + m as usize, "table must span [0, c+m)");
                Self::assemble(table, m, f as i64)
            }
        }
    }

    fn assemble(table: BitVec, multiplicity: u64, frobenius: i64) -> Self {
        let conductor = (frobenius + 1) as u64;
        let genus = (conductor as usize - table.count_ones_below(conductor as usize)) as u64;
        let s = NumericalSemigroup {
            table,
            multiplicity,
            frobenius,
            conductor,
            genus,
            primitives: OnceLock::new(),
            apery: OnceLock::new(),
            pseudo_frobenius: OnceLock::new(),
        };
        debug_assert!(s.table.get(0));
        debug_assert!(s.table.len() == (s.conductor + s.multiplicity) as usize);
        s
    }

    pub fn is_natural(&self) -> bool {
        self.conductor == 0
    }

    /// Least positive element.
    pub fn multiplicity(&self) -> u64 {
        self.multiplicity
    }

    /// Largest gap; `-1` for the full semigroup.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Number of gaps.
    pub fn genus(&self) -> u64 {
        self.genus
    }

    /// Number of elements below the conductor; `g + |L| = c`.
    pub fn left_count(&self) -> u64 {
        self.conductor - self.genus
    }

    /// Depth `q = ceil(c/m)`.
    pub fn depth(&self) -> u64 {
        self.conductor.div_ceil(self.multiplicity)
    }

    /// `rho = q*m - c`; `0 <= rho < m`.
    pub fn rho(&self) -> u64 {
        self.depth() * self.multiplicity - self.conductor
    }

    /// Membership test; negative integers are never elements and anything
    /// at or above the conductor always is.
    pub fn contains(&self, n: i64) -> bool {
        if n < 0 {
            return false;
        }
        let n = n as u64;
        if n >= self.conductor {
            return true;
        }
        self.table.get(n as usize)
    }

    /// The gaps, ascending.
    pub fn gaps(&self) -> Vec<u64> {
        (0..self.conductor as usize)
            .filter(|&n| !self.table.get(n))
            .map(|n| n as u64)
            .collect()
    }

    /// Apéry set with respect to the multiplicity, cached.
    pub fn apery_set(&self) -> &AperyVector {
        self.apery.get_or_init(|| {
            let m = self.multiplicity as usize;
            let mut entries = vec![u64::MAX; m];
            let mut remaining = m;
            for n in 0..self.table.len() {
                if self.table.get(n) {
                    let r = n % m;
                    if entries[r] == u64::MAX {
                        entries[r] = n as u64;
                        remaining -= 1;
                        if remaining == 0 {
                            break;
                        }
                    }
                }
            }
            debug_assert_eq!(remaining, 0);
            AperyVector { entries }
        })
    }

    /// Minimal generators (primitive elements), ascending, cached.
    ///
    /// An element is primitive when it is not the sum of two smaller nonzero
    /// elements. Apart from the multiplicity itself every primitive lies in
    /// the Apéry set, and a non-decomposable Apéry element can only decompose
    /// as a sum of two nonzero Apéry elements, so the scan stays `O(m^2)`.
    pub fn minimal_generators(&self) -> &[u64] {
        self.primitives.get_or_init(|| {
            if self.is_natural() {
                return vec![1];
            }
            let ap = self.apery_set().entries();
            let apset: HashSet<u64> = ap.iter().copied().collect();
            let mut prims = vec![self.multiplicity];
            for &w in ap {
                if w == 0 {
                    continue;
                }
                let decomposable = ap
                    .iter()
                    .any(|&a| a != 0 && a < w && apset.contains(&(w - a)));
                if !decomposable {
                    prims.push(w);
                }
            }
            prims.sort_unstable();
            prims
        })
    }

    /// Embedding dimension `e = |P|`.
    pub fn embedding_dimension(&self) -> u64 {
        self.minimal_generators().len() as u64
    }

    /// Second smallest minimal generator, when there is one.
    pub fn ratio(&self) -> Option<u64> {
        self.minimal_generators().get(1).copied()
    }

    /// Pseudo-Frobenius numbers: gaps `x` with `x + s` an element for every
    /// nonzero element `s`. Quantifying over the primitives is enough since
    /// every nonzero element is a sum of primitives. Empty for the full
    /// semigroup (it has no gaps).
    pub fn pseudo_frobenius(&self) -> &[u64] {
        self.pseudo_frobenius.get_or_init(|| {
            if self.is_natural() {
                return Vec::new();
            }
            let prims = self.minimal_generators();
            (1..self.conductor)
                .filter(|&x| !self.table.get(x as usize))
                .filter(|&x| prims.iter().all(|&p| self.contains((x + p) as i64)))
                .collect()
        })
    }

    /// Type `t = |PF|`; the full semigroup gets the edge convention `t = 1`
    /// so that `2g = F + t` keeps holding.
    pub fn semigroup_type(&self) -> u64 {
        if self.is_natural() {
            1
        } else {
            self.pseudo_frobenius().len() as u64
        }
    }

    /// Injective key: the sorted gap set as little-endian `u32` bytes.
    /// Equal semigroups give equal keys; the full semigroup gives the
    /// empty key.
    pub fn canonical_key(&self) -> Vec<u8> {
        let mut key = Vec::with_capacity(4 * self.genus as usize);
        for gap in self.gaps() {
            key.extend_from_slice(&(gap as u32).to_le_bytes());
        }
        key
    }

    /// All scalar invariants in one record; `W` and `E` come from the
    /// metrics module.
    pub fn invariant_record(&self) -> InvariantRecord {
        InvariantRecord {
            multiplicity: self.multiplicity,
            frobenius: self.frobenius,
            conductor: self.conductor,
            genus: self.genus,
            left_count: self.left_count(),
            embedding_dimension: self.embedding_dimension(),
            semigroup_type: self.semigroup_type(),
            depth: self.depth(),
            rho: self.rho(),
            ratio: self.ratio(),
            wilf: metrics::wilf_number(self),
            eliahou: metrics::eliahou_number(self),
        }
    }

    /// A canonical generator spec for this semigroup: its minimal
    /// generators, no tail.
    pub fn to_spec(&self) -> GeneratorSpec {
        GeneratorSpec::new(self.minimal_generators().iter().copied(), None)
            .expect("minimal generators are valid")
    }
}
