//! Acceptance suite: one test per criterion, each printing a PASS line
//! with its elapsed time (visible with `--nocapture`).
//!
//! Run with `cargo test -p wilf-cli --test acceptance`. The genus-43
//! stretch run is `#[ignore]`d; enable it with `-- --ignored` (it takes
//! a long time on one machine).

use std::process::Command;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use numsgps::classify::{self, PropertyId, WilfZeroVerdict};
use numsgps::explore::{self, Checks, EnumerateOptions, TreeNode};
use numsgps::families;
use numsgps::metrics;
use numsgps::render::{emit_svg, emit_tikz, grid_model, Palette, RenderOptions};
use numsgps::semigroup::NumericalSemigroup;

fn wilf_bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_wilf"))
}

fn sgp(s: &str) -> NumericalSemigroup {
    NumericalSemigroup::from_spec(&s.parse().unwrap()).unwrap()
}

fn pass(criterion: &str, started: Instant) {
    println!("acceptance {criterion}: PASS ({:.3?})", started.elapsed());
}

#[test]
fn criterion_01_figure1_semigroup() {
    let t0 = Instant::now();
    let s = sgp("5,13@20");
    assert_eq!(s.minimal_generators(), &[5, 13, 21, 22, 24]);
    let r = s.invariant_record();
    assert_eq!(r.wilf, 10);
    assert_eq!(r.eliahou, 4);
    assert_eq!(r.depth, 4);
    let lib_elapsed = t0.elapsed();

    // and through the CLI surface
    let out = wilf_bin().args(["info", "--gens", "5,13@20"]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("minimal generators: 5,13,21,22,24"));
    let out = wilf_bin()
        .args(["info", "--gens", "5,13@20", "--json"])
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_str(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(v["W"], 10);
    assert_eq!(v["E"], 4);
    assert_eq!(v["q"], 4);
    println!("criterion 1 library time: {lib_elapsed:.3?}");
    pass("1 (figure-1 semigroup)", t0);
}

#[test]
fn criterion_02_figure2_semigroup() {
    let t0 = Instant::now();
    let s = sgp("12,19,20,22,23,26,27,28,29");
    assert_eq!(s.conductor(), 38);
    assert_eq!(s.pseudo_frobenius(), &[16, 30, 33, 37]);
    assert_eq!(s.semigroup_type(), 4);
    pass("2 (figure-2 semigroup)", t0);
}

#[test]
fn criterion_03_s4_chain() {
    let t0 = Instant::now();
    let s4 = families::delgado_sp(4).unwrap();
    assert_eq!(s4, sgp("14,22,23@56"));
    assert_eq!(s4.left_count(), 13);
    assert_eq!(metrics::eliahou_number(&s4), -1);
    let w = metrics::wilf_number(&s4);
    assert_eq!(w, 35);
    assert!(w >= 9);
    pass("3 (S(4) chain)", t0);
}

#[test]
fn criterion_04_sylvester_random_pairs() {
    let t0 = Instant::now();
    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 { a } else { gcd(b, a % b) }
    }
    let mut rng = StdRng::seed_from_u64(0x5EED_5717);
    let mut tested = 0;
    while tested < 200 {
        let a: u64 = rng.gen_range(2..=500);
        let b: u64 = rng.gen_range(2..=500);
        if gcd(a, b) != 1 {
            continue;
        }
        let s = NumericalSemigroup::generated_by(&[a, b]).unwrap();
        assert_eq!(
            s.frobenius(),
            (a * b - a - b) as i64,
            "F(<{a},{b}>) != ab-a-b"
        );
        assert_eq!(metrics::wilf_number(&s), 0, "W(<{a},{b}>) != 0");
        tested += 1;
    }
    pass("4 (Sylvester, 200 random coprime pairs)", t0);
}

#[test]
fn criterion_05_med_family_wilf_zero() {
    let t0 = Instant::now();
    for m in 2..=50 {
        for k in 1..=10 {
            let s = families::med_family(m, k).unwrap();
            assert_eq!(metrics::wilf_number(&s), 0, "W(<{m}>_{}m) != 0", k);
            assert_eq!(s.embedding_dimension(), m);
        }
    }
    pass("5 (MED family W = 0, m <= 50, k <= 10)", t0);
}

#[test]
fn criterion_06_oracle_equivalence() {
    let t0 = Instant::now();
    let oracle = explore::oracle_enumerate(12).unwrap();
    let stats = explore::enumerate(&EnumerateOptions::new(12)).unwrap();
    let tree: Vec<u64> = stats.per_genus.iter().map(|r| r.total).collect();
    assert_eq!(oracle, tree, "gap-set brute force disagrees with the tree");
    pass("6 (oracle equivalence, genus <= 12)", t0);
}

#[test]
fn criterion_07_no_wilf_violations_to_genus_30() {
    let t0 = Instant::now();
    let checks = Checks {
        wilf: true,
        ..Checks::none()
    };
    let stats = explore::enumerate(&EnumerateOptions::new(30).with_checks(checks)).unwrap();
    assert!(
        stats.wilf_violations.is_empty(),
        "Wilf violations found: {:?}",
        stats.wilf_violations
    );
    assert!(stats.min_wilf() >= 0);
    // qualitative trend toward the density-one limit of c <= 3m
    let t30 = stats.per_genus[30].small_conductor as u128;
    let n30 = stats.per_genus[30].total as u128;
    let t10 = stats.per_genus[10].small_conductor as u128;
    let n10 = stats.per_genus[10].total as u128;
    assert!(
        t30 * n10 > t10 * n30,
        "t(30)/N(30) = {t30}/{n30} should exceed t(10)/N(10) = {t10}/{n10}"
    );
    pass("7 (zero Wilf violations to genus 30, trend check)", t0);
}

/// Stretch run: genus 43 reaches the first semigroups with negative
/// Eliahou number. Long-running; excluded from the default suite.
#[test]
#[ignore = "long-running stretch verification (genus 43)"]
fn criterion_07_stretch_genus_43() {
    let t0 = Instant::now();
    let checks = Checks {
        wilf: true,
        eliahou: true,
        ..Checks::none()
    };
    let stats = explore::enumerate(&EnumerateOptions::new(43).with_checks(checks)).unwrap();
    assert!(stats.wilf_violations.is_empty());
    assert!(
        stats
            .eliahou_negatives
            .contains(&"14,22,23,57,61,62,63".to_string()),
        "S(4) must appear among the negative-Eliahou semigroups: {:?}",
        stats.eliahou_negatives
    );
    pass("7-stretch (genus 43: S(4) found, zero Wilf violations)", t0);
}

#[test]
fn criterion_08_proposition_sweep_genus_20() {
    let t0 = Instant::now();

    fn dfs(node: &TreeNode, bound: u32, visit: &mut impl FnMut(&TreeNode)) {
        visit(node);
        if node.genus() < bound {
            node.for_each_child(|c| dfs(&c, bound, visit));
        }
    }

    let mut visited = 0u64;
    dfs(&TreeNode::root(), 20, &mut |node| {
        visited += 1;
        let s = node.summary();
        let spec = || node.spec_string();
        let sg = node.to_semigroup();
        let record = classify::classify(&sg);
        let t = sg.semigroup_type();

        // (a) embedding dimension <= 3 implies Wilf
        if s.embedding_dimension <= 3 {
            assert!(s.wilf >= 0, "(a) fails for {}", spec());
        }
        // (b) irreducible implies Wilf
        if record.irreducible {
            assert!(s.wilf >= 0, "(b) fails for {}", spec());
        }
        // (c) almost symmetric implies Wilf
        if record.almost_symmetric {
            assert!(s.wilf >= 0, "(c) fails for {}", spec());
        }
        // (d) 3e >= m implies Wilf
        if 3 * s.embedding_dimension >= s.multiplicity {
            assert!(s.wilf >= 0, "(d) fails for {}", spec());
        }
        // (e) c <= 3m implies nonnegative Eliahou number
        if s.conductor <= 3 * s.multiplicity {
            assert!(s.eliahou >= 0, "(e) fails for {}", spec());
        }
        // (f) |L| <= 12 implies nonnegative Eliahou number
        if s.left_count <= 12 {
            assert!(s.eliahou >= 0, "(f) fails for {}", spec());
        }
        // (g) type bound c <= (t+1)|L|
        assert!(s.conductor <= (t + 1) * s.left_count, "(g) fails for {}", spec());
        // (h) W - E = |P_R| (|L| - q)
        assert_eq!(
            s.wilf - s.eliahou,
            s.right_primitives as i64 * (s.left_count as i64 - s.depth as i64),
            "(h) fails for {}",
            spec()
        );
        // (i) W = 0 only in the known shapes
        if s.wilf == 0 {
            assert_ne!(
                classify::wilf_zero_form_check(&sg),
                WilfZeroVerdict::Counterexample,
                "(i) fails for {}",
                spec()
            );
        }
    });
    assert_eq!(visited, 93_142); // sum of N(g), g <= 20
    pass("8 (proposition sweep, genus <= 20, 9 propositions)", t0);
}

#[test]
fn criterion_09_quasi_generalization_witnesses() {
    let t0 = Instant::now();
    // <m>_km with k > 3: maximal embedding dimension (property D) but
    // conductor km > 3m (not M)
    for (m, k) in [(2u64, 4u64), (5, 4), (7, 6), (11, 10)] {
        let s = families::med_family(m, k).unwrap();
        assert!(classify::property(&s, PropertyId::LargeEmbDim), "D fails for <{m}>_{k}m");
        assert!(
            !classify::property(&s, PropertyId::SmallConductor),
            "M unexpectedly holds for <{m}>_{k}m"
        );
    }
    // y(m) for m > 27: c <= 3m (property M) but 3e < m (not D)
    for m in [28u64, 35, 80] {
        let s = families::y_family(m).unwrap();
        assert!(classify::property(&s, PropertyId::SmallConductor), "M fails for y({m})");
        assert!(
            !classify::property(&s, PropertyId::LargeEmbDim),
            "D unexpectedly holds for y({m})"
        );
    }
    pass("9 (quasi-generalization witnesses)", t0);
}

#[test]
fn criterion_10_three_fold_sumset_covers() {
    let t0 = Instant::now();
    const LIMIT: usize = 10_001;
    // X = {0,1,2,3} plus all multiples of 7
    let mut x = vec![false; LIMIT];
    for v in 0..=3 {
        x[v] = true;
    }
    let mut v = 0;
    while v < LIMIT {
        x[v] = true;
        v += 7;
    }
    let xs: Vec<usize> = (0..LIMIT).filter(|&i| x[i]).collect();
    let mut xx = vec![false; LIMIT];
    for &a in &xs {
        for &b in &xs {
            if a + b >= LIMIT {
                break;
            }
            xx[a + b] = true;
        }
    }
    let mut xxx = vec![false; LIMIT];
    for s in (0..LIMIT).filter(|&i| xx[i]) {
        for &c in &xs {
            if s + c >= LIMIT {
                break;
            }
            xxx[s + c] = true;
        }
    }
    for n in 0..=10_000 {
        assert!(xxx[n], "{n} is not a sum of three elements of X");
    }
    pass("10 (X+X+X covers [0, 10^4])", t0);
}

#[test]
fn criterion_11_rendering_golden() {
    let t0 = Instant::now();
    let s = sgp("5,13@20");
    let grid = grid_model(&s, RenderOptions::default());
    assert_eq!((grid.rows(), grid.cols()), (5, 5));
    let top: Vec<i64> = (0..5).map(|j| grid.cell(0, j).value).collect();
    assert_eq!(top, vec![20, 21, 22, 23, 24]);

    let svg = emit_svg(&grid, &Palette::default());
    let tikz = emit_tikz(&grid, &Palette::default());
    // identical across repeated runs
    assert_eq!(svg, emit_svg(&grid, &Palette::default()));
    assert_eq!(tikz, emit_tikz(&grid, &Palette::default()));
    // identical across threads
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..4)
            .map(|_| {
                scope.spawn(|| {
                    let g = grid_model(&sgp("5,13@20"), RenderOptions::default());
                    (emit_svg(&g, &Palette::default()), emit_tikz(&g, &Palette::default()))
                })
            })
            .collect();
        for h in handles {
            let (s2, t2) = h.join().unwrap();
            assert_eq!(s2, svg);
            assert_eq!(t2, tikz);
        }
    });
    // and identical to the committed golden bytes
    assert_eq!(svg, include_str!("../../numsgps/tests/golden/figure1.svg"));
    assert_eq!(tikz, include_str!("../../numsgps/tests/golden/figure1.tikz"));
    pass("11 (rendering golden files)", t0);
}

#[test]
fn criterion_12_determinism_across_thread_counts() {
    let t0 = Instant::now();
    let checks = Checks {
        wilf: true,
        eliahou: true,
        ..Checks::none()
    };
    let base = explore::enumerate(
        &EnumerateOptions::new(25)
            .with_checks(checks)
            .with_threads(Some(1)),
    )
    .unwrap();
    for threads in [4, 8] {
        let stats = explore::enumerate(
            &EnumerateOptions::new(25)
                .with_checks(checks)
                .with_threads(Some(threads)),
        )
        .unwrap();
        assert_eq!(stats, base, "statistics differ with {threads} threads");
    }
    pass("12 (determinism across 1, 4, 8 threads)", t0);
}
