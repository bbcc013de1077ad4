//! Constructors for the parametrized semigroup families that are known to
//! satisfy Wilf's conjecture, plus the B₃-set machinery used by the
//! Eliahou–Fromentin construction.
//!
//! - [`generalized_arithmetic`]: `<m, hm+d, hm+2d, ..., hm+ld>`
//! - [`med_family`]: `<m>_km = <m, km+1, ..., km+m-1>`, maximal embedding
//!   dimension, Wilf number exactly 0
//! - [`dilation`]: `D(S,a) = {0} ∪ {s+a : s ∈ S, s > 0}` for `a ∈ S`
//! - [`delgado_sp`]: `S(p) = <μ,γ,γ+1>_pμ`, Wilf with negative Eliahou
//!   number for every even `p >= 4`
//! - [`eliahou_fromentin`]: `<{m} ∪ A>_4m` for a B₃ set `A`
//! - [`is_bh_set`] / [`find_b3_subset`]: Bₕ-set checking in `Z/m`
//! - [`y_family`]: the witness family with `c <= 3m` but small embedding
//!   dimension

use std::collections::HashMap;

use crate::bits::BitVec;
use crate::semigroup::{NumericalSemigroup, SpecError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FamilyError {
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("{a} is not an element of the semigroup")]
    NotInSemigroup { a: u64 },
    #[error("range violation: {0}")]
    RangeViolation(String),
    #[error("the set does not induce a B3 set in Z/{modulus}: {collision}", modulus = .0.modulus, collision = .0.describe_collision())]
    NotB3(BhWitness),
    #[error("need |A| = n-1 with n >= 3, got |A| = {len}")]
    TooSmall { len: usize },
    #[error(transparent)]
    Spec(#[from] SpecError),
}

/// Outcome of a Bₕ-set check, with a collision witness on failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BhWitness {
    pub set: Vec<i64>,
    pub h: u32,
    pub modulus: u64,
    pub verdict: bool,
    /// Two size-`h` tuples with equal sum mod `modulus` that are not
    /// permutations of each other; present exactly when `verdict` is false.
    pub collision: Option<(Vec<i64>, Vec<i64>)>,
}

impl BhWitness {
    fn describe_collision(&self) -> String {
        match &self.collision {
            Some((a, b)) => format!("{a:?} and {b:?} have equal sums"),
            None => "no collision".to_string(),
        }
    }
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

/// `<m, hm+d, hm+2d, ..., hm+ld>` for `m >= 2`, `gcd(m,d) = 1`,
/// `1 <= l <= m-2`. Every such semigroup is Wilf.
pub fn generalized_arithmetic(
    m: u64,
    h: u64,
    d: u64,
    l: u64,
) -> Result<NumericalSemigroup, FamilyError> {
    if m < 2 {
        return Err(FamilyError::BadParameters(format!("m = {m} < 2")));
    }
    if h < 1 || d < 1 {
        return Err(FamilyError::BadParameters("h and d must be positive".into()));
    }
    if !(1..=m - 2).contains(&l) {
        return Err(FamilyError::BadParameters(format!(
            "need 1 <= l <= m-2, got l = {l} with m = {m}"
        )));
    }
    if gcd(m, d) != 1 {
        return Err(FamilyError::BadParameters(format!(
            "gcd({m},{d}) = {} != 1",
            gcd(m, d)
        )));
    }
    let base = h
        .checked_mul(m)
        .ok_or_else(|| FamilyError::BadParameters("h*m overflows".into()))?;
    let mut gens = vec![m];
    for i in 1..=l {
        let g = base
            .checked_add(i * d)
            .ok_or_else(|| FamilyError::BadParameters("hm + id overflows".into()))?;
        gens.push(g);
    }
    Ok(NumericalSemigroup::generated_by(&gens)?)
}

/// `<m>_km = <m, km+1, ..., km+m-1>`: multiples of `m` plus everything from
/// `km` on. Maximal embedding dimension, Wilf number exactly 0.
pub fn med_family(m: u64, k: u64) -> Result<NumericalSemigroup, FamilyError> {
    if m < 2 {
        return Err(FamilyError::BadParameters(format!("m = {m} < 2")));
    }
    if k < 1 {
        return Err(FamilyError::BadParameters("k must be positive".into()));
    }
    let t = k
        .checked_mul(m)
        .ok_or_else(|| FamilyError::BadParameters("k*m overflows".into()))?;
    Ok(NumericalSemigroup::with_tail(&[m], t)?)
}

/// Dilation `D(S,a) = {0} ∪ {s+a : s ∈ S, s > 0}`; needs `a ∈ S` for the
/// result to be closed under addition. Multiplicity always shifts by `a`;
/// so does the conductor except when `S` is the full semigroup.
pub fn dilation(s: &NumericalSemigroup, a: u64) -> Result<NumericalSemigroup, FamilyError> {
    if !s.contains(a as i64) {
        return Err(FamilyError::NotInSemigroup { a });
    }
    if a == 0 {
        return Ok(s.clone());
    }
    let (new_c, new_m) = if s.is_natural() {
        (a + 1, a + 1)
    } else {
        (s.conductor() + a, s.multiplicity() + a)
    };
    let len = new_c + new_m;
    if len > crate::semigroup::MAX_TABLE_SLOTS {
        return Err(FamilyError::Spec(SpecError::TooLarge {
            needed: len,
            cap: crate::semigroup::MAX_TABLE_SLOTS,
        }));
    }
    let len = len as usize;
    let mut table = BitVec::zeros(len);
    table.set(0, true);
    for n in (a as usize + 1)..len {
        if s.contains((n as u64 - a) as i64) {
            table.set(n, true);
        }
    }
    Ok(NumericalSemigroup::from_table_trusted(table))
}

/// `S(p) = <μ, γ, γ+1>_pμ` with `μ = p²/4 + 2p + 2` and
/// `γ = 2μ - (p/2 + 4)`, for even `p >= 2`. These are Wilf semigroups; for
/// `p >= 4` their Eliahou numbers are negative.
pub fn delgado_sp(p: u64) -> Result<NumericalSemigroup, FamilyError> {
    if p < 2 || p % 2 != 0 {
        return Err(FamilyError::BadParameters(format!(
            "p must be even and >= 2, got {p}"
        )));
    }
    let half = p / 2;
    let mu = half
        .checked_mul(half)
        .and_then(|x| x.checked_add(2 * p))
        .and_then(|x| x.checked_add(2))
        .ok_or_else(|| FamilyError::BadParameters("mu overflows".into()))?;
    let gamma = 2 * mu - (half + 4);
    let tail = p
        .checked_mul(mu)
        .ok_or_else(|| FamilyError::BadParameters("p*mu overflows".into()))?;
    Ok(NumericalSemigroup::with_tail(&[mu, gamma, gamma + 1], tail)?)
}

/// Checks whether `a_set` induces a Bₕ set in `Z/modulus`: residues must be
/// pairwise distinct and any two size-`h` multisets with equal sum mod
/// `modulus` must be equal. On failure the witness carries a collision.
pub fn is_bh_set(a_set: &[i64], h: u32, modulus: u64) -> BhWitness {
    assert!(h >= 1, "h must be positive");
    assert!(modulus >= 1, "modulus must be positive");
    let mut set: Vec<i64> = a_set.to_vec();
    set.sort_unstable();
    set.dedup();
    assert!(!set.is_empty(), "the set must be nonempty");

    let residue = |x: i64| x.rem_euclid(modulus as i64) as u64;

    // duplicate residues collide already at tuples (x,...,x) vs (y,x,...,x)
    let mut seen: HashMap<u64, i64> = HashMap::new();
    for &x in &set {
        if let Some(&y) = seen.get(&residue(x)) {
            let t1 = vec![x; h as usize];
            let mut t2 = vec![x; h as usize];
            t2[0] = y;
            return BhWitness {
                set,
                h,
                modulus,
                verdict: false,
                collision: Some((t1, t2)),
            };
        }
        seen.insert(residue(x), x);
    }

    // enumerate multisets of size h as non-decreasing index tuples
    let n = set.len();
    let mut idx = vec![0usize; h as usize];
    let mut sums: HashMap<u64, Vec<usize>> = HashMap::new();
    loop {
        let sum = idx
            .iter()
            .fold(0u64, |acc, &i| (acc + residue(set[i])) % modulus);
        if let Some(prev) = sums.get(&sum) {
            let t1: Vec<i64> = prev.iter().map(|&i| set[i]).collect();
            let t2: Vec<i64> = idx.iter().map(|&i| set[i]).collect();
            return BhWitness {
                set,
                h,
                modulus,
                verdict: false,
                collision: Some((t1, t2)),
            };
        }
        sums.insert(sum, idx.clone());

        // advance to the next non-decreasing tuple
        let mut pos = h as usize;
        loop {
            if pos == 0 {
                return BhWitness {
                    set,
                    h,
                    modulus,
                    verdict: true,
                    collision: None,
                };
            }
            pos -= 1;
            if idx[pos] + 1 < n {
                let v = idx[pos] + 1;
                for slot in idx.iter_mut().skip(pos) {
                    *slot = v;
                }
                break;
            }
        }
    }
}

/// Interval `{ceil((3m+1)/2), ..., floor((5m-1)/3)}` searched by the B₃
/// subset finder.
fn b3_interval(m: u64) -> (u64, u64) {
    ((3 * m + 1).div_ceil(2), (5 * m - 1) / 3)
}

/// Lexicographically least `(n-1)`-subset of the admissible interval that
/// induces a B₃ set in `Z/m`, or `None` when no such subset exists.
pub fn find_b3_subset(m: u64, n: u64) -> Option<Vec<u64>> {
    if n < 3 || m == 0 {
        return None;
    }
    let (lo, hi) = b3_interval(m);
    if lo > hi {
        return None;
    }
    let pool: Vec<u64> = (lo..=hi).collect();
    let want = (n - 1) as usize;
    if pool.len() < want {
        return None;
    }

    fn backtrack(pool: &[u64], start: usize, want: usize, chosen: &mut Vec<u64>, m: u64) -> bool {
        if chosen.len() == want {
            let as_i64: Vec<i64> = chosen.iter().map(|&x| x as i64).collect();
            return is_bh_set(&as_i64, 3, m).verdict;
        }
        for i in start..pool.len() {
            if pool.len() - i < want - chosen.len() {
                break;
            }
            chosen.push(pool[i]);
            if backtrack(pool, i + 1, want, chosen, m) {
                return true;
            }
            chosen.pop();
        }
        false
    }

    let mut chosen: Vec<u64> = Vec::with_capacity(want);
    if backtrack(&pool, 0, want, &mut chosen, m) {
        Some(chosen)
    } else {
        None
    }
}

/// `<{m} ∪ A>_4m` where `A` is an `(n-1)`-element subset of `{a,...,b}`
/// with `(3m+1)/2 <= a < b <= (5m-1)/3` inducing a B₃ set in `Z/m`. The
/// result has depth 4 and Wilf number at least 9.
pub fn eliahou_fromentin(m: u64, a_set: &[u64]) -> Result<NumericalSemigroup, FamilyError> {
    let mut a: Vec<u64> = a_set.to_vec();
    a.sort_unstable();
    a.dedup();
    if a.len() < 2 {
        return Err(FamilyError::TooSmall { len: a.len() });
    }
    let (lo, hi) = b3_interval(m);
    let amin = a[0];
    let amax = *a.last().expect("nonempty");
    if amin < lo || amax > hi {
        return Err(FamilyError::RangeViolation(format!(
            "A must lie inside [{lo}, {hi}] = [ceil((3m+1)/2), floor((5m-1)/3)], got [{amin}, {amax}]"
        )));
    }
    let as_i64: Vec<i64> = a.iter().map(|&x| x as i64).collect();
    let witness = is_bh_set(&as_i64, 3, m);
    if !witness.verdict {
        return Err(FamilyError::NotB3(witness));
    }
    let mut gens = vec![m];
    gens.extend_from_slice(&a);
    let s = NumericalSemigroup::with_tail(&gens, 4 * m)?;
    debug_assert_eq!(s.depth(), 4);
    debug_assert!(crate::metrics::wilf_number(&s) >= 9);
    Ok(s)
}

/// `<Y>` for `Y = {m, m+1, m+2, m+3} ∪ {7k+m : 0 <= k <= floor(m/7)}`,
/// defined for `m >= 7`. Satisfies `c <= 3m`; for `m > 27` the embedding
/// dimension drops below `m/3`.
pub fn y_family(m: u64) -> Result<NumericalSemigroup, FamilyError> {
    if m < 7 {
        return Err(FamilyError::BadParameters(format!("m = {m} < 7")));
    }
    let mut gens = vec![m, m + 1, m + 2, m + 3];
    for k in 0..=m / 7 {
        gens.push(7 * k + m);
    }
    let s = NumericalSemigroup::generated_by(&gens)?;
    debug_assert!(s.conductor() <= 3 * m);
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metrics::{eliahou_number, wilf_number};

    #[test]
    fn generalized_arithmetic_examples() {
        let s = generalized_arithmetic(20, 2, 9, 8).unwrap();
        assert_eq!(
            s.minimal_generators(),
            &[20, 49, 58, 67, 76, 85, 94, 103, 112]
        );
        let s = generalized_arithmetic(3, 2, 1, 1).unwrap();
        assert_eq!(s.minimal_generators(), &[3, 7]);
        let s = generalized_arithmetic(5, 1, 1, 3).unwrap();
        assert_eq!(s.minimal_generators(), &[5, 6, 7, 8]);
    }

    #[test]
    fn generalized_arithmetic_rejects() {
        assert!(generalized_arithmetic(1, 1, 1, 1).is_err());
        assert!(generalized_arithmetic(6, 2, 3, 2).is_err()); // gcd(6,3) = 3
        assert!(generalized_arithmetic(5, 2, 1, 4).is_err()); // l > m-2
        assert!(generalized_arithmetic(5, 2, 1, 0).is_err());
    }

    #[test]
    fn med_examples() {
        let s = med_family(3, 2).unwrap();
        assert_eq!(s.minimal_generators(), &[3, 7, 8]);
        assert_eq!(wilf_number(&s), 0);
        let s = med_family(2, 1).unwrap();
        assert_eq!(s.minimal_generators(), &[2, 3]);
        let s = med_family(5, 3).unwrap();
        assert_eq!(s.minimal_generators(), &[5, 16, 17, 18, 19]);
        assert_eq!(s.left_count(), 3);
        assert_eq!(wilf_number(&s), 0);
    }

    #[test]
    fn med_is_med_and_wilf_zero() {
        for m in 2..=12 {
            for k in 1..=4 {
                let s = med_family(m, k).unwrap();
                assert_eq!(s.embedding_dimension(), m, "m={m} k={k}");
                assert_eq!(wilf_number(&s), 0, "m={m} k={k}");
            }
        }
    }

    #[test]
    fn dilation_examples() {
        let s35 = NumericalSemigroup::generated_by(&[3, 5]).unwrap();
        assert_eq!(dilation(&s35, 0).unwrap(), s35);
        let d = dilation(&s35, 3).unwrap();
        assert_eq!(d.multiplicity(), 6);
        assert_eq!(d.conductor(), 11);
        assert_eq!(wilf_number(&d), 9);
        assert_eq!(d.minimal_generators(), &[6, 8, 9, 11, 13]);
        let n = NumericalSemigroup::natural();
        let d = dilation(&n, 1).unwrap();
        assert_eq!(d.minimal_generators(), &[2, 3]);
    }

    #[test]
    fn dilation_requires_membership() {
        let s35 = NumericalSemigroup::generated_by(&[3, 5]).unwrap();
        assert_eq!(dilation(&s35, 4), Err(FamilyError::NotInSemigroup { a: 4 }));
    }

    #[test]
    fn dilation_shifts_invariants() {
        let s = NumericalSemigroup::with_tail(&[5, 13], 20).unwrap();
        for a in [5, 10, 13, 20, 33] {
            let d = dilation(&s, a).unwrap();
            assert_eq!(d.multiplicity(), s.multiplicity() + a);
            assert_eq!(d.conductor(), s.conductor() + a);
            assert!(wilf_number(&d) >= 0);
        }
    }

    #[test]
    fn delgado_examples() {
        let s4 = delgado_sp(4).unwrap();
        let direct = NumericalSemigroup::with_tail(&[14, 22, 23], 56).unwrap();
        assert_eq!(s4, direct);
        assert_eq!(eliahou_number(&s4), -1);
        assert_eq!(wilf_number(&s4), 35);

        let s2 = delgado_sp(2).unwrap();
        assert_eq!(s2, NumericalSemigroup::with_tail(&[7, 9, 10], 14).unwrap());

        let s6 = delgado_sp(6).unwrap();
        assert_eq!(
            s6,
            NumericalSemigroup::with_tail(&[23, 39, 40], 138).unwrap()
        );

        assert!(delgado_sp(3).is_err());
        assert!(delgado_sp(0).is_err());
    }

    #[test]
    fn delgado_sweep_is_wilf() {
        for p in (2..=20u64).step_by(2) {
            let s = delgado_sp(p).unwrap();
            assert!(wilf_number(&s) > 0, "p = {p}");
            if p >= 4 {
                assert!(eliahou_number(&s) < 0, "p = {p}");
            }
        }
    }

    #[test]
    fn bh_set_examples() {
        assert!(is_bh_set(&[22, 23], 3, 14).verdict);
        let w = is_bh_set(&[0, 1, 2], 3, 6);
        assert!(!w.verdict);
        let (t1, t2) = w.collision.unwrap();
        let sum = |t: &[i64]| t.iter().map(|x| x.rem_euclid(6)).sum::<i64>() % 6;
        assert_eq!(sum(&t1), sum(&t2));
        let mut s1 = t1.clone();
        let mut s2 = t2.clone();
        s1.sort_unstable();
        s2.sort_unstable();
        assert_ne!(s1, s2, "collision tuples must not be permutations");
        assert!(is_bh_set(&[5], 3, 100).verdict);
    }

    #[test]
    fn bh_set_duplicate_residue() {
        let w = is_bh_set(&[3, 17], 3, 14);
        assert!(!w.verdict);
        assert!(w.collision.is_some());
    }

    #[test]
    fn find_b3_examples() {
        assert_eq!(find_b3_subset(14, 3), Some(vec![22, 23]));
        assert_eq!(find_b3_subset(4, 3), None);
        let a = find_b3_subset(100, 3).unwrap();
        assert!(a.iter().all(|&x| (151..=166).contains(&x)));
        let as_i64: Vec<i64> = a.iter().map(|&x| x as i64).collect();
        assert!(is_bh_set(&as_i64, 3, 100).verdict);
    }

    #[test]
    fn eliahou_fromentin_examples() {
        let s = eliahou_fromentin(14, &[22, 23]).unwrap();
        assert_eq!(s, delgado_sp(4).unwrap());
        assert_eq!(s.depth(), 4);
        assert!(wilf_number(&s) >= 9);

        assert!(matches!(
            eliahou_fromentin(14, &[20, 23]),
            Err(FamilyError::RangeViolation(_))
        ));
        assert!(matches!(
            eliahou_fromentin(14, &[22, 23, 24]),
            Err(FamilyError::RangeViolation(_))
        ));
        assert!(matches!(
            eliahou_fromentin(14, &[22]),
            Err(FamilyError::TooSmall { len: 1 })
        ));
    }

    #[test]
    fn y_family_examples() {
        let s = y_family(7).unwrap();
        assert_eq!(s.minimal_generators(), &[7, 8, 9, 10]);
        assert!(y_family(6).is_err());

        let s28 = y_family(28).unwrap();
        assert!(s28.conductor() <= 84);
        assert_eq!(s28.embedding_dimension(), 7);
        assert!(3 * s28.embedding_dimension() < 28);

        let s80 = y_family(80).unwrap();
        assert!(3 * s80.embedding_dimension() < 80);
        assert!(s80.conductor() <= 240);
    }

    #[test]
    fn constructor_outputs_are_wilf_small_sweep() {
        for m in 2..=20u64 {
            for d in 1..=6u64 {
                if gcd(m, d) != 1 {
                    continue;
                }
                for h in 1..=3u64 {
                    for l in 1..m.saturating_sub(1) {
                        let s = generalized_arithmetic(m, h, d, l).unwrap();
                        assert!(
                            wilf_number(&s) >= 0,
                            "ga({m},{h},{d},{l}) has negative Wilf number"
                        );
                    }
                }
            }
        }
        for m in 7..=40 {
            assert!(wilf_number(&y_family(m).unwrap()) >= 0, "y({m})");
        }
    }
}
