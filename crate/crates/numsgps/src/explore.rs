//! Exhaustive enumeration of numerical semigroups by genus.
//!
//! The genus tree has the full semigroup at its root; the children of a
//! semigroup `S` are the semigroups `S \ {x}` for each minimal generator
//! `x > F(S)`. Every numerical semigroup of genus `g` shows up exactly once
//! at depth `g`, so walking the tree to a depth bound visits each one once.
//!
//! Nodes are flat 256-bit membership bitsets (enough for genus 84, far past
//! desk scale: the table of a genus-`g` semigroup fits in `3g + 4` slots
//! because `F <= 2g - 1` and `m <= g + 1`). The walk is a sequential
//! breadth-first phase down to a shallow depth followed by one independent
//! depth-first task per frontier node, merged by exact counter addition, so
//! the statistics are identical no matter how many threads run.
//!
//! [`oracle_enumerate`] recounts small genera by brute force over candidate
//! gap sets, sharing no code with the tree walk; agreement between the two
//! is the correctness anchor for everything built on the enumeration.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::semigroup::{InvariantRecord, NumericalSemigroup};

const WORDS: usize = 4;
/// Bits per node; supports genus up to [`MAX_TREE_GENUS`].
pub const CAPACITY: u32 = 256;
/// Largest genus the fixed node layout can represent (`3g + 4 <= 256`).
pub const MAX_TREE_GENUS: u32 = 84;

pub const DEFAULT_BFS_DEPTH: u32 = 14;
pub const DEFAULT_EXPENSIVE_CEILING: u32 = 20;
pub const DEFAULT_NODE_BUDGET: u64 = 4_000_000_000;

/// Genus cap for the brute-force oracle; candidate gap sets grow like
/// `C(2g, g)` and become unreasonable beyond this.
pub const MAX_ORACLE_GENUS: u32 = 15;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExploreError {
    #[error("estimated {estimated} nodes exceeds the node budget {budget}")]
    ResourceLimit { estimated: u64, budget: u64 },
    #[error("bound {bound} exceeds the supported maximum {max}")]
    BoundTooLarge { bound: u64, max: u64 },
}

type Bits = [u64; WORDS];

#[inline]
fn bit(bits: &Bits, i: u32) -> bool {
    bits[(i / 64) as usize] >> (i % 64) & 1 == 1
}

#[inline]
fn clear_bit(bits: &mut Bits, i: u32) {
    bits[(i / 64) as usize] &= !(1u64 << (i % 64));
}

#[inline]
fn popcount(bits: &Bits) -> u32 {
    bits.iter().map(|w| w.count_ones()).sum()
}

/// Mask with bits `[0, n)` set; `n <= 256`.
#[inline]
fn mask_below(n: u32) -> Bits {
    let mut m = [0u64; WORDS];
    let full = (n / 64) as usize;
    for w in m.iter_mut().take(full) {
        *w = !0;
    }
    if full < WORDS && n % 64 > 0 {
        m[full] = (1u64 << (n % 64)) - 1;
    }
    m
}

#[inline]
fn and(a: &Bits, b: &Bits) -> Bits {
    [a[0] & b[0], a[1] & b[1], a[2] & b[2], a[3] & b[3]]
}

/// Shift left by `k` (toward higher indices), dropping overflow.
#[inline]
fn shl(bits: &Bits, k: u32) -> Bits {
    let mut out = [0u64; WORDS];
    let ws = (k / 64) as usize;
    let bs = k % 64;
    for i in 0..WORDS {
        let j = i + ws;
        if j >= WORDS {
            break;
        }
        out[j] |= bits[i] << bs;
        if bs > 0 && j + 1 < WORDS {
            out[j + 1] |= bits[i] >> (64 - bs);
        }
    }
    out
}

#[inline]
fn next_set_bit(bits: &Bits, from: u32) -> Option<u32> {
    let mut wi = (from / 64) as usize;
    if wi >= WORDS {
        return None;
    }
    let mut w = bits[wi] & (!0u64).checked_shl(from % 64).unwrap_or(0);
    loop {
        if w != 0 {
            return Some(wi as u32 * 64 + w.trailing_zeros());
        }
        wi += 1;
        if wi >= WORDS {
            return None;
        }
        w = bits[wi];
    }
}

fn iter_ones(bits: Bits) -> impl Iterator<Item = u32> {
    (0..WORDS).flat_map(move |wi| {
        let mut w = bits[wi];
        std::iter::from_fn(move || {
            if w == 0 {
                return None;
            }
            let b = w.trailing_zeros();
            w &= w - 1;
            Some(wi as u32 * 64 + b)
        })
    })
}

/// Cheap scalar invariants of a tree node, read straight off the bitsets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NodeSummary {
    pub multiplicity: u64,
    pub conductor: u64,
    pub genus: u64,
    pub left_count: u64,
    pub embedding_dimension: u64,
    /// Primitives below the conductor (`|P ∩ L|`).
    pub left_primitives: u64,
    /// Primitives inside the threshold interval (`|P_R|`).
    pub right_primitives: u64,
    pub depth: u64,
    pub rho: u64,
    pub wilf: i64,
    pub eliahou: i64,
    pub ratio: Option<u64>,
}

/// One node of the genus tree: a semigroup, its primitives, and its depth.
///
/// The membership bitset covers `[0, 256)`; every index at or above the
/// conductor is set. The frontier (primitives above the Frobenius number)
/// is exactly the set of generators whose removal yields the children.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TreeNode {
    members: Bits,
    prims: Bits,
    frobenius: i32,
    multiplicity: u32,
    genus: u32,
}

impl TreeNode {
    /// The root: the full semigroup, genus 0.
    pub fn root() -> Self {
        let mut prims = [0u64; WORDS];
        prims[0] = 1 << 1;
        TreeNode {
            members: [!0u64; WORDS],
            prims,
            frobenius: -1,
            multiplicity: 1,
            genus: 0,
        }
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn frobenius(&self) -> i32 {
        self.frobenius
    }

    pub fn conductor(&self) -> u64 {
        (self.frobenius + 1) as u64
    }

    pub fn multiplicity(&self) -> u64 {
        self.multiplicity as u64
    }

    /// Minimal generators of the node's semigroup, ascending.
    pub fn minimal_generators(&self) -> Vec<u64> {
        iter_ones(self.prims).map(u64::from).collect()
    }

    /// The removable generators: primitives above the Frobenius number.
    /// Removing any of them gives a valid child of genus `g + 1`.
    pub fn frontier(&self) -> Vec<u64> {
        let c = self.conductor() as u32;
        iter_ones(and(&self.prims, &not_below(c))).map(u64::from).collect()
    }

    /// Gaps of the node's semigroup, ascending.
    pub fn gaps(&self) -> Vec<u64> {
        let c = self.conductor() as u32;
        (0..c).filter(|&n| !bit(&self.members, n)).map(u64::from).collect()
    }

    /// Generator-spec string: the minimal generators, comma separated.
    pub fn spec_string(&self) -> String {
        let gens: Vec<String> = self.minimal_generators().iter().map(u64::to_string).collect();
        gens.join(",")
    }

    /// Materialize the full semigroup value (for the expensive invariants).
    pub fn to_semigroup(&self) -> NumericalSemigroup {
        NumericalSemigroup::from_gaps(&self.gaps()).expect("tree nodes are valid semigroups")
    }

    /// All scalar invariants that the bitsets alone determine.
    pub fn summary(&self) -> NodeSummary {
        let m = self.multiplicity as u64;
        let c = self.conductor();
        let g = self.genus as u64;
        let l = c - g;
        let e = popcount(&self.prims) as u64;
        // the threshold interval [c, c+m) misses the primitive 1 of the
        // root, so mask by it rather than by "above F"
        let threshold = and(
            &mask_below((c + m) as u32),
            &not_below(c as u32),
        );
        let pr = popcount(&and(&self.prims, &threshold)) as u64;
        let pl = popcount(&and(&self.prims, &mask_below(c as u32))) as u64;
        let q = if m == 0 { 0 } else { c.div_ceil(m) };
        let rho = q * m - c;
        let wilf = (e * l) as i64 - c as i64;
        let eliahou = (pl * l) as i64 - (q * (m - pr)) as i64 + (q * m) as i64 - c as i64;
        let ratio = {
            let first = next_set_bit(&self.prims, 0);
            first.and_then(|f| next_set_bit(&self.prims, f + 1)).map(u64::from)
        };
        NodeSummary {
            multiplicity: m,
            conductor: c,
            genus: g,
            left_count: l,
            embedding_dimension: e,
            left_primitives: pl,
            right_primitives: pr,
            depth: q,
            rho,
            wilf,
            eliahou,
            ratio,
        }
    }

    /// Child obtained by removing the frontier generator `x`.
    fn child(&self, x: u32) -> TreeNode {
        debug_assert!(bit(&self.prims, x) && x as i32 > self.frobenius);
        let mut members = self.members;
        clear_bit(&mut members, x);
        let mult = if x == self.multiplicity {
            next_set_bit(&members, x + 1).expect("capacity exceeded")
        } else {
            self.multiplicity
        };
        // Old primitives stay primitive (removing an element cannot create
        // a decomposition); new primitives are elements whose only
        // decompositions went through x, and those all lie in (x, x+m']:
        // anything above x+m' splits as m' + (rest) with rest > x, and
        // everything above x is a member.
        let lo = x + 1;
        let hi = (x + mult).min(CAPACITY - 1);
        let window = and(&mask_below(hi + 1), &not_below(lo));
        let mut decomp = [0u64; WORDS];
        if mult <= x {
            let sources = and(&members, &and(&mask_below(x + 1), &not_below(mult)));
            for a in iter_ones(sources) {
                let shifted = shl(&members, a);
                for i in 0..WORDS {
                    decomp[i] |= shifted[i] & window[i];
                }
            }
        }
        let mut prims = self.prims;
        clear_bit(&mut prims, x);
        for i in 0..WORDS {
            prims[i] |= window[i] & !decomp[i];
        }
        TreeNode {
            members,
            prims,
            frobenius: x as i32,
            multiplicity: mult,
            genus: self.genus + 1,
        }
    }

    /// Visit each child in ascending order of the removed generator.
    pub fn for_each_child(&self, mut f: impl FnMut(TreeNode)) {
        let c = self.conductor() as u32;
        for x in iter_ones(and(&self.prims, &not_below(c))) {
            f(self.child(x));
        }
    }

    /// Children, ascending by removed generator.
    pub fn children(&self) -> Vec<TreeNode> {
        let mut out = Vec::new();
        self.for_each_child(|c| out.push(c));
        out
    }
}

/// Mask with bits `[n, 256)` set.
#[inline]
fn not_below(n: u32) -> Bits {
    let below = mask_below(n);
    [!below[0], !below[1], !below[2], !below[3]]
}

/// Which verifications the walk performs on every visited semigroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Checks {
    /// Collect semigroups with `W < 0` (Wilf counterexamples).
    pub wilf: bool,
    /// Collect semigroups with `E < 0` (these exist; first at genus 43).
    pub eliahou: bool,
    /// Verify `c <= (t+1)|L|` (type bound); expensive, ceiling-gated.
    pub froberg: bool,
    /// Verify that `W = 0` only happens in the two known shapes;
    /// expensive, ceiling-gated.
    pub wilf_zero_form: bool,
    /// Verify `E >= 0` whenever `c <= 3m`.
    pub eliahou_m: bool,
    /// Verify `W - E = |P_R| * (|L| - q)` and cross-check the node's fast
    /// W/E against the table-based computation below the ceiling.
    pub identity: bool,
}

impl Checks {
    pub fn none() -> Self {
        Self::default()
    }

    pub fn all() -> Self {
        Checks {
            wilf: true,
            eliahou: true,
            froberg: true,
            wilf_zero_form: true,
            eliahou_m: true,
            identity: true,
        }
    }
}

/// Per-genus counters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GenusRow {
    /// Number of numerical semigroups of this genus.
    #[serde(rename = "N")]
    pub total: u64,
    /// How many satisfy `c <= 3m`.
    #[serde(rename = "t")]
    pub small_conductor: u64,
    /// How many satisfy `3e >= m`.
    #[serde(rename = "p")]
    pub large_embdim: u64,
    /// How many have nonnegative Eliahou number.
    #[serde(rename = "eE")]
    pub eliahou_nonneg: u64,
    /// Minimum Wilf number seen at this genus.
    #[serde(rename = "minW")]
    pub min_wilf: i64,
}

impl GenusRow {
    fn empty() -> Self {
        GenusRow {
            total: 0,
            small_conductor: 0,
            large_embdim: 0,
            eliahou_nonneg: 0,
            min_wilf: i64::MAX,
        }
    }

    fn absorb(&mut self, other: &GenusRow) {
        self.total += other.total;
        self.small_conductor += other.small_conductor;
        self.large_embdim += other.large_embdim;
        self.eliahou_nonneg += other.eliahou_nonneg;
        self.min_wilf = self.min_wilf.min(other.min_wilf);
    }
}

/// Complete statistics of one exhaustive walk. Counters are exact, so the
/// result is identical for every thread count; witness lists are sorted
/// before the value is returned.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExplorationStats {
    /// Indexed by genus, `0..=max_genus`.
    pub per_genus: Vec<GenusRow>,
    /// Generator specs of semigroups with negative Wilf number.
    pub wilf_violations: Vec<String>,
    /// Generator specs of semigroups with negative Eliahou number.
    pub eliahou_negatives: Vec<String>,
    /// Descriptions of failed theorem checks (empty unless mathematics
    /// breaks or the implementation is wrong).
    pub check_failures: Vec<String>,
}

impl ExplorationStats {
    fn new(max_genus: u32) -> Self {
        ExplorationStats {
            per_genus: vec![GenusRow::empty(); max_genus as usize + 1],
            wilf_violations: Vec::new(),
            eliahou_negatives: Vec::new(),
            check_failures: Vec::new(),
        }
    }

    /// Total nodes visited.
    pub fn total(&self) -> u64 {
        self.per_genus.iter().map(|r| r.total).sum()
    }

    /// Minimum Wilf number over the whole walk.
    pub fn min_wilf(&self) -> i64 {
        self.per_genus.iter().map(|r| r.min_wilf).min().unwrap_or(i64::MAX)
    }

    /// True when any enabled verification recorded a finding.
    pub fn has_findings(&self) -> bool {
        !self.wilf_violations.is_empty()
            || !self.eliahou_negatives.is_empty()
            || !self.check_failures.is_empty()
    }

    fn merge(mut self, other: ExplorationStats) -> ExplorationStats {
        for (row, o) in self.per_genus.iter_mut().zip(&other.per_genus) {
            row.absorb(o);
        }
        self.wilf_violations.extend(other.wilf_violations);
        self.eliahou_negatives.extend(other.eliahou_negatives);
        self.check_failures.extend(other.check_failures);
        self
    }

    fn finalize(&mut self) {
        self.wilf_violations.sort_unstable();
        self.eliahou_negatives.sort_unstable();
        self.check_failures.sort_unstable();
    }
}

#[derive(Debug, Clone)]
pub struct EnumerateOptions {
    pub max_genus: u32,
    pub checks: Checks,
    /// Worker threads; `None` uses the global rayon pool.
    pub threads: Option<usize>,
    /// Depth of the sequential breadth-first phase.
    pub bfs_depth: u32,
    /// Expensive checks (type bound, Wilf-zero shape, table cross-check)
    /// run only at genus `<=` this.
    pub expensive_ceiling: u32,
    /// Refuse to start when the estimated node count exceeds this.
    pub node_budget: u64,
}

impl EnumerateOptions {
    pub fn new(max_genus: u32) -> Self {
        EnumerateOptions {
            max_genus,
            checks: Checks::none(),
            threads: None,
            bfs_depth: DEFAULT_BFS_DEPTH,
            expensive_ceiling: DEFAULT_EXPENSIVE_CEILING,
            node_budget: DEFAULT_NODE_BUDGET,
        }
    }

    pub fn with_checks(mut self, checks: Checks) -> Self {
        self.checks = checks;
        self
    }

    pub fn with_threads(mut self, threads: Option<usize>) -> Self {
        self.threads = threads;
        self
    }
}

/// Rough node-count estimate: the census grows by a factor of about 1.62
/// per genus.
pub fn estimated_nodes(max_genus: u32) -> u64 {
    let mut level = 1.0f64;
    let mut total = 0.0f64;
    for _ in 0..=max_genus {
        total += level;
        level *= 1.62;
    }
    total.min(u64::MAX as f64) as u64
}

struct WalkContext {
    max_genus: u32,
    checks: Checks,
    expensive_ceiling: u32,
}

fn record(node: &TreeNode, ctx: &WalkContext, stats: &mut ExplorationStats) {
    let s = node.summary();
    let row = &mut stats.per_genus[node.genus() as usize];
    row.total += 1;
    if s.conductor <= 3 * s.multiplicity {
        row.small_conductor += 1;
    }
    if 3 * s.embedding_dimension >= s.multiplicity {
        row.large_embdim += 1;
    }
    if s.eliahou >= 0 {
        row.eliahou_nonneg += 1;
    }
    row.min_wilf = row.min_wilf.min(s.wilf);

    let checks = &ctx.checks;
    if checks.wilf && s.wilf < 0 {
        stats.wilf_violations.push(node.spec_string());
    }
    if checks.eliahou && s.eliahou < 0 {
        stats.eliahou_negatives.push(node.spec_string());
    }
    if checks.eliahou_m && s.conductor <= 3 * s.multiplicity && s.eliahou < 0 {
        stats.check_failures.push(format!(
            "eliahou-m: c <= 3m but E = {} for {}",
            s.eliahou,
            node.spec_string()
        ));
    }
    if checks.identity {
        let lhs = s.wilf - s.eliahou;
        let rhs = s.right_primitives as i64 * (s.left_count as i64 - s.depth as i64);
        if lhs != rhs {
            stats.check_failures.push(format!(
                "identity: W - E = {lhs} but |P_R|(|L|-q) = {rhs} for {}",
                node.spec_string()
            ));
        }
    }

    let expensive = node.genus() <= ctx.expensive_ceiling
        && (checks.froberg || checks.wilf_zero_form || checks.identity);
    if expensive {
        let sg = node.to_semigroup();
        if checks.identity {
            let w = crate::metrics::wilf_number(&sg);
            let e = crate::metrics::eliahou_number(&sg);
            if w != s.wilf || e != s.eliahou {
                stats.check_failures.push(format!(
                    "identity: node W/E = {}/{} but table W/E = {}/{} for {}",
                    s.wilf,
                    s.eliahou,
                    w,
                    e,
                    node.spec_string()
                ));
            }
        }
        if checks.froberg {
            let t = sg.semigroup_type();
            if s.conductor > (t + 1) * s.left_count {
                stats.check_failures.push(format!(
                    "froberg: c > (t+1)|L| for {}",
                    node.spec_string()
                ));
            }
        }
        if checks.wilf_zero_form {
            use crate::classify::WilfZeroVerdict;
            if crate::classify::wilf_zero_form_check(&sg) == WilfZeroVerdict::Counterexample {
                stats.check_failures.push(format!(
                    "wilf-zero-form: W = 0 outside the known shapes for {}",
                    node.spec_string()
                ));
            }
        }
    }
}

fn dfs(node: &TreeNode, ctx: &WalkContext, stats: &mut ExplorationStats) {
    record(node, ctx, stats);
    if node.genus() < ctx.max_genus {
        node.for_each_child(|child| dfs(&child, ctx, stats));
    }
}

fn run_walk(opts: &EnumerateOptions) -> ExplorationStats {
    let ctx = WalkContext {
        max_genus: opts.max_genus,
        checks: opts.checks,
        expensive_ceiling: opts.expensive_ceiling,
    };
    let mut stats = ExplorationStats::new(opts.max_genus);
    let split = opts.bfs_depth.min(opts.max_genus);
    let mut level = vec![TreeNode::root()];
    for _ in 0..split {
        let mut next = Vec::new();
        for node in &level {
            record(node, &ctx, &mut stats);
            node.for_each_child(|c| next.push(c));
        }
        level = next;
    }
    let sub = level
        .into_par_iter()
        .map(|node| {
            let mut local = ExplorationStats::new(opts.max_genus);
            dfs(&node, &ctx, &mut local);
            local
        })
        .reduce(|| ExplorationStats::new(opts.max_genus), ExplorationStats::merge);
    stats = stats.merge(sub);
    stats.finalize();
    stats
}

/// Visit every numerical semigroup of genus `<= max_genus` exactly once,
/// tallying per-genus statistics and running the enabled checks.
///
/// Deterministic: two runs with different thread counts return identical
/// statistics.
pub fn enumerate(opts: &EnumerateOptions) -> Result<ExplorationStats, ExploreError> {
    if opts.max_genus > MAX_TREE_GENUS {
        return Err(ExploreError::BoundTooLarge {
            bound: opts.max_genus as u64,
            max: MAX_TREE_GENUS as u64,
        });
    }
    let estimated = estimated_nodes(opts.max_genus);
    if estimated > opts.node_budget {
        return Err(ExploreError::ResourceLimit {
            estimated,
            budget: opts.node_budget,
        });
    }
    match opts.threads {
        None => Ok(run_walk(opts)),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .expect("failed to build thread pool");
            Ok(pool.install(|| run_walk(opts)))
        }
    }
}

/// Count numerical semigroups by genus without the tree: enumerate gap-set
/// candidates inside `{1, ..., 2g}`, keep those whose complement is closed
/// under addition, and deduplicate by canonical key.
///
/// Slow by design; refuses genus above [`MAX_ORACLE_GENUS`].
pub fn oracle_enumerate(max_genus: u32) -> Result<Vec<u64>, ExploreError> {
    if max_genus > MAX_ORACLE_GENUS {
        return Err(ExploreError::BoundTooLarge {
            bound: max_genus as u64,
            max: MAX_ORACLE_GENUS as u64,
        });
    }
    let mut counts = vec![0u64; max_genus as usize + 1];
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    counts[0] = 1; // the full semigroup has the empty gap set
    for g in 1..=max_genus {
        let width = 2 * g;
        let full = (1u64 << (width + 1)) - 1; // membership bits 0..=2g
        let mut gapmask = (1u64 << g) - 1;
        let limit = 1u64 << width;
        while gapmask < limit {
            // value v (1-based) is a gap iff bit v-1 of gapmask
            let mem = !(gapmask << 1) & full;
            let mut ok = true;
            for a in 1..=g as u64 {
                if mem >> a & 1 == 1 && (mem << a) & full & !mem != 0 {
                    ok = false;
                    break;
                }
            }
            if ok {
                let mut key = Vec::with_capacity(4 * g as usize);
                for v in 0..width as u64 {
                    if gapmask >> v & 1 == 1 {
                        key.extend_from_slice(&((v + 1) as u32).to_le_bytes());
                    }
                }
                if seen.insert(key) {
                    counts[g as usize] += 1;
                }
            }
            // Gosper's hack: next mask with the same popcount
            let c = gapmask & gapmask.wrapping_neg();
            let r = gapmask + c;
            gapmask = (((r ^ gapmask) >> 2) / c) | r;
        }
    }
    Ok(counts)
}

/// Count semigroups by conductor: `f[n]` = number with conductor exactly
/// `n`, for `0 <= n <= max_c`. Conductors increase strictly along tree
/// edges, so branches past `max_c` are pruned.
pub fn count_by_conductor(max_c: u32) -> Result<Vec<u64>, ExploreError> {
    if max_c as u64 > MAX_TREE_GENUS as u64 + 1 {
        return Err(ExploreError::BoundTooLarge {
            bound: max_c as u64,
            max: MAX_TREE_GENUS as u64 + 1,
        });
    }
    let mut f = vec![0u64; max_c as usize + 1];
    let mut visited: u64 = 0;
    let mut stack = vec![TreeNode::root()];
    while let Some(node) = stack.pop() {
        visited += 1;
        if visited > DEFAULT_NODE_BUDGET {
            return Err(ExploreError::ResourceLimit {
                estimated: visited,
                budget: DEFAULT_NODE_BUDGET,
            });
        }
        f[node.conductor() as usize] += 1;
        node.for_each_child(|child| {
            if child.conductor() <= max_c as u64 {
                stack.push(child);
            }
        });
    }
    Ok(f)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Metric {
    Wilf,
    Eliahou,
}

/// A semigroup whose chosen metric is negative, with its full record.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NegativeWitness {
    pub spec: String,
    pub record: InvariantRecord,
}

/// All semigroups of genus `<= max_genus` whose Wilf or Eliahou number is
/// negative, with their invariant records, sorted by genus then spec.
pub fn find_negative(metric: Metric, max_genus: u32) -> Result<Vec<NegativeWitness>, ExploreError> {
    let checks = match metric {
        Metric::Wilf => Checks {
            wilf: true,
            ..Checks::none()
        },
        Metric::Eliahou => Checks {
            eliahou: true,
            ..Checks::none()
        },
    };
    let stats = enumerate(&EnumerateOptions::new(max_genus).with_checks(checks))?;
    let specs = match metric {
        Metric::Wilf => stats.wilf_violations,
        Metric::Eliahou => stats.eliahou_negatives,
    };
    let mut out: Vec<NegativeWitness> = specs
        .into_iter()
        .map(|spec| {
            let parsed: crate::semigroup::GeneratorSpec =
                spec.parse().expect("witness specs are well-formed");
            let s = NumericalSemigroup::from_spec(&parsed).expect("witness specs construct");
            NegativeWitness {
                spec,
                record: s.invariant_record(),
            }
        })
        .collect();
    out.sort_by(|a, b| (a.record.genus, &a.spec).cmp(&(b.record.genus, &b.spec)));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_is_natural() {
        let root = TreeNode::root();
        assert_eq!(root.genus(), 0);
        assert_eq!(root.conductor(), 0);
        assert_eq!(root.multiplicity(), 1);
        assert_eq!(root.minimal_generators(), vec![1]);
        assert!(root.to_semigroup().is_natural());
    }

    #[test]
    fn children_examples() {
        let root = TreeNode::root();
        let kids = root.children();
        assert_eq!(kids.len(), 1);
        assert_eq!(kids[0].minimal_generators(), vec![2, 3]);

        // <2,3> -> remove 2 gives <3,4,5>, remove 3 gives <2,5>
        let kids2 = kids[0].children();
        assert_eq!(kids2.len(), 2);
        assert_eq!(kids2[0].minimal_generators(), vec![3, 4, 5]);
        assert_eq!(kids2[1].minimal_generators(), vec![2, 5]);

        // <3,4,5> has three children: F = 2 and all generators exceed it
        assert_eq!(kids2[0].children().len(), 3);
    }

    #[test]
    fn node_summary_matches_table_computation() {
        // dual route: bitset arithmetic vs the full membership table
        let mut stack = vec![TreeNode::root()];
        let mut count = 0;
        while let Some(node) = stack.pop() {
            let s = node.summary();
            let sg = node.to_semigroup();
            let r = sg.invariant_record();
            assert_eq!(s.multiplicity, r.multiplicity);
            assert_eq!(s.conductor, r.conductor);
            assert_eq!(s.genus, r.genus);
            assert_eq!(s.left_count, r.left_count);
            assert_eq!(s.embedding_dimension, r.embedding_dimension);
            assert_eq!(s.depth, r.depth);
            assert_eq!(s.rho, r.rho);
            assert_eq!(s.wilf, r.wilf);
            assert_eq!(s.eliahou, r.eliahou);
            assert_eq!(s.ratio, r.ratio);
            assert_eq!(
                node.minimal_generators(),
                sg.minimal_generators().to_vec()
            );
            count += 1;
            if node.genus() < 9 {
                node.for_each_child(|c| stack.push(c));
            }
        }
        assert_eq!(count, 1 + 1 + 2 + 4 + 7 + 12 + 23 + 39 + 67 + 118);
    }

    #[test]
    fn enumerate_small_counts() {
        let stats = enumerate(&EnumerateOptions::new(8)).unwrap();
        let n: Vec<u64> = stats.per_genus.iter().map(|r| r.total).collect();
        assert_eq!(n, vec![1, 1, 2, 4, 7, 12, 23, 39, 67]);
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(oracle_enumerate(0).unwrap(), vec![1]);
        assert_eq!(oracle_enumerate(3).unwrap(), vec![1, 1, 2, 4]);
        assert!(oracle_enumerate(16).is_err());
    }

    #[test]
    fn oracle_agrees_with_tree_to_ten() {
        let oracle = oracle_enumerate(10).unwrap();
        let stats = enumerate(&EnumerateOptions::new(10)).unwrap();
        let tree: Vec<u64> = stats.per_genus.iter().map(|r| r.total).collect();
        assert_eq!(oracle, tree);
    }

    #[test]
    fn children_counts_tile_the_next_level() {
        // sum of child counts at depth g equals N(g+1); keys stay unique
        let mut level = vec![TreeNode::root()];
        let mut seen: HashSet<Vec<u8>> = HashSet::new();
        for _ in 0..8 {
            let mut next = Vec::new();
            for node in &level {
                assert!(seen.insert(node.to_semigroup().canonical_key()));
                node.for_each_child(|c| next.push(c));
            }
            level = next;
        }
        assert_eq!(level.len(), 67); // N(8)
    }

    #[test]
    fn conductor_counts() {
        let f = count_by_conductor(8).unwrap();
        assert_eq!(f[0], 1);
        assert_eq!(f[1], 0);
        assert_eq!(f[2], 1);
        assert_eq!(f[3], 1);
        assert_eq!(f[4], 2);
    }

    #[test]
    fn determinism_across_thread_counts() {
        let base = enumerate(&EnumerateOptions::new(12).with_checks(Checks::all())).unwrap();
        for threads in [1, 2, 3] {
            let opts = EnumerateOptions::new(12)
                .with_checks(Checks::all())
                .with_threads(Some(threads));
            assert_eq!(enumerate(&opts).unwrap(), base);
        }
    }

    #[test]
    fn checks_stay_clean_at_small_genus() {
        let stats = enumerate(&EnumerateOptions::new(14).with_checks(Checks::all())).unwrap();
        assert!(stats.wilf_violations.is_empty());
        assert!(stats.eliahou_negatives.is_empty());
        assert!(stats.check_failures.is_empty(), "{:?}", stats.check_failures);
        assert_eq!(stats.min_wilf(), 0);
    }

    #[test]
    fn resource_guards() {
        assert!(matches!(
            enumerate(&EnumerateOptions::new(85)),
            Err(ExploreError::BoundTooLarge { .. })
        ));
        let mut opts = EnumerateOptions::new(40);
        opts.node_budget = 1000;
        assert!(matches!(
            enumerate(&opts),
            Err(ExploreError::ResourceLimit { .. })
        ));
    }

    #[test]
    fn find_negative_none_small() {
        assert!(find_negative(Metric::Wilf, 12).unwrap().is_empty());
        assert!(find_negative(Metric::Eliahou, 12).unwrap().is_empty());
    }
}
