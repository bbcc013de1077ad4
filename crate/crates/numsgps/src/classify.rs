//! Structural classification predicates and the named property classes
//! used to compare sufficient conditions for Wilf's conjecture.
//!
//! The property lattice compares classes like "`c <= 3m`" (ℳ) and
//! "`3e >= m`" (𝒟) by *quasi-generalization*: P quasi-generalizes Q when
//! only finitely many semigroups satisfy Q but not P. [`quasi_compare`]
//! measures `Q \ P` exhaustively up to a genus bound; its verdicts always
//! carry the bound and never claim the asymptotic relation.

use rayon::prelude::*;
use serde::Serialize;

use crate::explore::{self, ExploreError, TreeNode};
use crate::metrics;
use crate::semigroup::NumericalSemigroup;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClassifyError {
    #[error("{x} is not a minimal generator")]
    NotPrimitive { x: u64 },
    #[error("the criterion needs embedding dimension >= 3, got {e}")]
    TooFewGenerators { e: u64 },
    #[error("the two primitives must be distinct")]
    EqualPrimitives,
}

/// Symmetry-related classification of one semigroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClassificationRecord {
    /// `g = c/2`.
    pub symmetric: bool,
    /// `g = (c+1)/2`.
    pub pseudo_symmetric: bool,
    /// Symmetric or pseudo-symmetric.
    pub irreducible: bool,
    /// `2g = F + t`: the genus is the mean of Frobenius number and type.
    pub almost_symmetric: bool,
    /// `e = m`.
    pub max_embedding_dimension: bool,
}

pub fn classify(s: &NumericalSemigroup) -> ClassificationRecord {
    let c = s.conductor();
    let g = s.genus();
    let symmetric = 2 * g == c;
    let pseudo_symmetric = 2 * g == c + 1;
    let almost_symmetric = 2 * g as i64 == s.frobenius() + s.semigroup_type() as i64;
    ClassificationRecord {
        symmetric,
        pseudo_symmetric,
        irreducible: symmetric || pseudo_symmetric,
        almost_symmetric,
        max_embedding_dimension: s.embedding_dimension() == s.multiplicity(),
    }
}

/// The named property classes, each a total predicate on semigroups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum PropertyId {
    /// Trivially true.
    #[serde(rename = "S")]
    All,
    /// `W >= 0`.
    #[serde(rename = "W")]
    Wilf,
    /// `E >= 0`.
    #[serde(rename = "E")]
    Eliahou,
    /// `e <= 3`.
    #[serde(rename = "D3")]
    EmbDim3,
    /// `3e >= m`.
    #[serde(rename = "D")]
    LargeEmbDim,
    /// `c <= 3m`.
    #[serde(rename = "M")]
    SmallConductor,
    /// `g <= 60`.
    #[serde(rename = "G60")]
    Genus60,
    /// The large-multiplicity criterion at `rho' = ceil(m/e)`:
    /// `rho' > 3`, `m >= threshold(rho')`, `gcd(m, rad(rho')) = 1`.
    #[serde(rename = "P4")]
    Moscariello,
    /// `r > (c+m)/3` and `m <= (8/25)e^2 + (1/5)e - 5/4` (exact rational).
    #[serde(rename = "SPIRITO")]
    Spirito,
    /// Some pair of distinct primitives `p, q` has every sum of two
    /// primitives landing in `(p+S) ∪ (q+S)`.
    #[serde(rename = "KW")]
    KunzWaldi,
}

pub const ALL_PROPERTIES: [PropertyId; 10] = [
    PropertyId::All,
    PropertyId::Wilf,
    PropertyId::Eliahou,
    PropertyId::EmbDim3,
    PropertyId::LargeEmbDim,
    PropertyId::SmallConductor,
    PropertyId::Genus60,
    PropertyId::Moscariello,
    PropertyId::Spirito,
    PropertyId::KunzWaldi,
];

impl PropertyId {
    pub fn name(&self) -> &'static str {
        match self {
            PropertyId::All => "S",
            PropertyId::Wilf => "W",
            PropertyId::Eliahou => "E",
            PropertyId::EmbDim3 => "D3",
            PropertyId::LargeEmbDim => "D",
            PropertyId::SmallConductor => "M",
            PropertyId::Genus60 => "G60",
            PropertyId::Moscariello => "P4",
            PropertyId::Spirito => "SPIRITO",
            PropertyId::KunzWaldi => "KW",
        }
    }
}

impl std::fmt::Display for PropertyId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for PropertyId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_uppercase().as_str() {
            "S" => Ok(PropertyId::All),
            "W" => Ok(PropertyId::Wilf),
            "E" => Ok(PropertyId::Eliahou),
            "D3" => Ok(PropertyId::EmbDim3),
            "D" => Ok(PropertyId::LargeEmbDim),
            "M" => Ok(PropertyId::SmallConductor),
            "G60" => Ok(PropertyId::Genus60),
            "P4" => Ok(PropertyId::Moscariello),
            "SPIRITO" => Ok(PropertyId::Spirito),
            "KW" => Ok(PropertyId::KunzWaldi),
            other => Err(format!(
                "unknown property {other:?}; expected one of S, W, E, D3, D, M, G60, P4, SPIRITO, KW"
            )),
        }
    }
}

/// The scalars a property predicate needs; buildable from either a full
/// semigroup or a tree node.
#[derive(Debug, Clone, Copy)]
struct PropertyView {
    multiplicity: u64,
    conductor: u64,
    genus: u64,
    embedding_dimension: u64,
    ratio: Option<u64>,
    wilf: i64,
    eliahou: i64,
}

impl PropertyView {
    fn of_semigroup(s: &NumericalSemigroup) -> Self {
        PropertyView {
            multiplicity: s.multiplicity(),
            conductor: s.conductor(),
            genus: s.genus(),
            embedding_dimension: s.embedding_dimension(),
            ratio: s.ratio(),
            wilf: metrics::wilf_number(s),
            eliahou: metrics::eliahou_number(s),
        }
    }

    fn of_node(node: &TreeNode) -> Self {
        let s = node.summary();
        PropertyView {
            multiplicity: s.multiplicity,
            conductor: s.conductor,
            genus: s.genus,
            embedding_dimension: s.embedding_dimension,
            ratio: s.ratio,
            wilf: s.wilf,
            eliahou: s.eliahou,
        }
    }
}

/// Product of the distinct prime factors.
fn radical(n: u64) -> u64 {
    let mut n = n;
    let mut rad = 1u64;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            rad *= p;
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        rad *= n;
    }
    rad
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

/// Multiplicity threshold of the large-multiplicity criterion, in the form
/// the source endorses: `rho(3rho^2-rho-4)(3rho^2-rho-2)(rho-2)/8`
/// (1680 at `rho = 4`). Always an integer.
pub fn moscariello_threshold(rho: u64) -> u128 {
    let r = rho as u128;
    r * (3 * r * r - r - 4) * (3 * r * r - r - 2) * (r - 2) / 8
}

/// The alternative reading with `8(rho-2)` in the denominator (420 at
/// `rho = 4`), rounded up to the next integer where the division is not
/// exact. Kept for reference; [`moscariello_threshold`] is what
/// [`property`] uses.
pub fn moscariello_threshold_alt(rho: u64) -> u128 {
    let r = rho as u128;
    let num = r * (3 * r * r - r - 4) * (3 * r * r - r - 2);
    let den = 8 * (r - 2);
    num.div_ceil(den)
}

fn eval_view(id: PropertyId, v: &PropertyView) -> bool {
    match id {
        PropertyId::All => true,
        PropertyId::Wilf => v.wilf >= 0,
        PropertyId::Eliahou => v.eliahou >= 0,
        PropertyId::EmbDim3 => v.embedding_dimension <= 3,
        PropertyId::LargeEmbDim => 3 * v.embedding_dimension >= v.multiplicity,
        PropertyId::SmallConductor => v.conductor <= 3 * v.multiplicity,
        PropertyId::Genus60 => v.genus <= 60,
        PropertyId::Moscariello => {
            let rho = v.multiplicity.div_ceil(v.embedding_dimension);
            rho > 3
                && v.multiplicity as u128 >= moscariello_threshold(rho)
                && gcd(v.multiplicity, radical(rho)) == 1
        }
        PropertyId::Spirito => match v.ratio {
            None => false,
            Some(r) => {
                let e = v.embedding_dimension as u128;
                3 * r > v.conductor + v.multiplicity
                    && 100 * v.multiplicity as u128 + 125 <= 32 * e * e + 20 * e
            }
        },
        PropertyId::KunzWaldi => unreachable!("KunzWaldi needs the full semigroup"),
    }
}

/// Evaluate a property predicate exactly.
pub fn property(s: &NumericalSemigroup, id: PropertyId) -> bool {
    if id == PropertyId::KunzWaldi {
        return matches!(kunz_waldi_exists(s), Ok(Some(_)));
    }
    eval_view(id, &PropertyView::of_semigroup(s))
}

fn eval_node(id: PropertyId, node: &TreeNode) -> bool {
    if id == PropertyId::KunzWaldi {
        return matches!(kunz_waldi_exists(&node.to_semigroup()), Ok(Some(_)));
    }
    eval_view(id, &PropertyView::of_node(node))
}

/// Kunz–Waldi criterion for a fixed pair of distinct primitives `p, q`:
/// true iff `g + h ∈ (p+S) ∪ (q+S)` for all primitives `g, h` (repetition
/// allowed). A true outcome forces `t <= e - 1`, hence Wilf.
pub fn kunz_waldi(s: &NumericalSemigroup, p: u64, q: u64) -> Result<bool, ClassifyError> {
    let e = s.embedding_dimension();
    if e < 3 {
        return Err(ClassifyError::TooFewGenerators { e });
    }
    if p == q {
        return Err(ClassifyError::EqualPrimitives);
    }
    let prims = s.minimal_generators();
    for x in [p, q] {
        if !prims.contains(&x) {
            return Err(ClassifyError::NotPrimitive { x });
        }
    }
    let holds = prims.iter().all(|&a| {
        prims.iter().all(|&b| {
            let sum = (a + b) as i64;
            s.contains(sum - p as i64) || s.contains(sum - q as i64)
        })
    });
    if holds {
        debug_assert!(s.semigroup_type() <= e - 1);
    }
    Ok(holds)
}

/// Scan all pairs of distinct primitives in ascending order and return the
/// first pair satisfying the Kunz–Waldi criterion, if any.
pub fn kunz_waldi_exists(s: &NumericalSemigroup) -> Result<Option<(u64, u64)>, ClassifyError> {
    let e = s.embedding_dimension();
    if e < 3 {
        return Err(ClassifyError::TooFewGenerators { e });
    }
    let prims = s.minimal_generators().to_vec();
    for i in 0..prims.len() {
        for j in i + 1..prims.len() {
            if kunz_waldi(s, prims[i], prims[j])? {
                return Ok(Some((prims[i], prims[j])));
            }
        }
    }
    Ok(None)
}

/// Verdict of the Wilf-number-zero shape check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum WilfZeroVerdict {
    /// `W != 0`: the question does not apply.
    #[serde(rename = "not_applicable")]
    NotApplicable,
    /// `W = 0` and the semigroup has one of the two known shapes:
    /// embedding dimension 2, or maximal embedding dimension with
    /// generators `{m, km+1, ..., km+m-1}`.
    #[serde(rename = "conforms")]
    Conforms,
    /// `W = 0` in any other shape: a negative answer to the open question.
    #[serde(rename = "counterexample")]
    Counterexample,
}

/// Check whether a Wilf-number-zero semigroup has one of the two known
/// shapes. Accepts `k >= 1` in the arithmetic shape: `<m, m+1, ..., 2m-1>`
/// also has `W = 0` and maximal embedding dimension.
pub fn wilf_zero_form_check(s: &NumericalSemigroup) -> WilfZeroVerdict {
    if metrics::wilf_number(s) != 0 {
        return WilfZeroVerdict::NotApplicable;
    }
    let e = s.embedding_dimension();
    let m = s.multiplicity();
    if e == 2 {
        return WilfZeroVerdict::Conforms;
    }
    if e == m {
        if m == 1 {
            return WilfZeroVerdict::Conforms; // the full semigroup
        }
        let p = s.minimal_generators();
        let head = p[1];
        if head % m == 1 {
            let k = head / m;
            if (1..m).all(|i| p[i as usize] == k * m + i) {
                return WilfZeroVerdict::Conforms;
            }
        }
    }
    WilfZeroVerdict::Counterexample
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CompareVerdict {
    /// `Q \ P` is empty at the bound.
    #[serde(rename = "P-generalizes-Q-at-bound")]
    PGeneralizesQAtBound,
    /// Both `Q \ P` and `P \ Q` are nonempty at the bound.
    #[serde(rename = "incomparable-at-bound")]
    IncomparableAtBound,
    /// `Q \ P` is nonempty (and `P \ Q` empty) at the bound.
    #[serde(rename = "Q-minus-P-nonempty")]
    QMinusPNonempty,
}

impl std::fmt::Display for CompareVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            CompareVerdict::PGeneralizesQAtBound => "P-generalizes-Q-at-bound",
            CompareVerdict::IncomparableAtBound => "incomparable-at-bound",
            CompareVerdict::QMinusPNonempty => "Q-minus-P-nonempty",
        })
    }
}

/// Result of one empirical quasi-generalization comparison.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompareReport {
    #[serde(rename = "P")]
    pub p: PropertyId,
    #[serde(rename = "Q")]
    pub q: PropertyId,
    pub bound: u32,
    /// `|{S : g(S) <= bound, S satisfies Q but not P}|`, exact.
    pub count: u64,
    /// Up to 10 witnesses of `Q \ P`, smallest genus first.
    pub witnesses: Vec<String>,
    pub verdict: CompareVerdict,
}

const MAX_WITNESSES: usize = 10;

#[derive(Clone)]
struct CmpAcc {
    q_not_p: u64,
    p_not_q: u64,
    // (genus, canonical key, spec string); kept pruned to the 10 smallest
    witnesses: Vec<(u64, Vec<u8>, String)>,
}

impl CmpAcc {
    fn new() -> Self {
        CmpAcc {
            q_not_p: 0,
            p_not_q: 0,
            witnesses: Vec::new(),
        }
    }

    fn prune(&mut self) {
        self.witnesses.sort();
        self.witnesses.truncate(MAX_WITNESSES);
    }

    fn visit(&mut self, p: PropertyId, q: PropertyId, node: &TreeNode) {
        let has_p = eval_node(p, node);
        let has_q = eval_node(q, node);
        if has_q && !has_p {
            self.q_not_p += 1;
            self.witnesses.push((
                node.genus() as u64,
                node.to_semigroup().canonical_key(),
                node.spec_string(),
            ));
            if self.witnesses.len() > 4 * MAX_WITNESSES {
                self.prune();
            }
        }
        if has_p && !has_q {
            self.p_not_q += 1;
        }
    }

    fn merge(mut self, other: CmpAcc) -> CmpAcc {
        self.q_not_p += other.q_not_p;
        self.p_not_q += other.p_not_q;
        self.witnesses.extend(other.witnesses);
        self.prune();
        self
    }
}

/// Count and witness `Q \ P` over every semigroup of genus `<= bound`.
/// Purely empirical: the verdict is labeled "at bound" and says nothing
/// about the infinite classes.
pub fn quasi_compare(
    p: PropertyId,
    q: PropertyId,
    bound: u32,
) -> Result<CompareReport, ExploreError> {
    if bound > explore::MAX_TREE_GENUS {
        return Err(ExploreError::BoundTooLarge {
            bound: bound as u64,
            max: explore::MAX_TREE_GENUS as u64,
        });
    }
    let estimated = explore::estimated_nodes(bound);
    if estimated > explore::DEFAULT_NODE_BUDGET {
        return Err(ExploreError::ResourceLimit {
            estimated,
            budget: explore::DEFAULT_NODE_BUDGET,
        });
    }

    fn dfs(node: &TreeNode, p: PropertyId, q: PropertyId, bound: u32, acc: &mut CmpAcc) {
        acc.visit(p, q, node);
        if node.genus() < bound {
            node.for_each_child(|child| dfs(&child, p, q, bound, acc));
        }
    }

    let split = explore::DEFAULT_BFS_DEPTH.min(bound);
    let mut acc = CmpAcc::new();
    let mut level = vec![TreeNode::root()];
    for _ in 0..split {
        let mut next = Vec::new();
        for node in &level {
            acc.visit(p, q, node);
            node.for_each_child(|c| next.push(c));
        }
        level = next;
    }
    let sub = level
        .into_par_iter()
        .map(|node| {
            let mut local = CmpAcc::new();
            dfs(&node, p, q, bound, &mut local);
            local
        })
        .reduce(CmpAcc::new, CmpAcc::merge);
    acc = acc.merge(sub);
    acc.prune();

    let verdict = if acc.q_not_p == 0 {
        CompareVerdict::PGeneralizesQAtBound
    } else if acc.p_not_q > 0 {
        CompareVerdict::IncomparableAtBound
    } else {
        CompareVerdict::QMinusPNonempty
    };
    Ok(CompareReport {
        p,
        q,
        bound,
        count: acc.q_not_p,
        witnesses: acc.witnesses.into_iter().map(|(_, _, spec)| spec).collect(),
        verdict,
    })
}
