//! Acceptance suite: one test per release criterion, each printing a single
//! pass/fail line (run with `--nocapture` to see them live).

use motifcensus_cli::engine;
use motifcensus_cli::io::load_edge_list;
use motifcensus_core::canon::{enumerate_classes, graph_from_bits, Canonicalizer};
use motifcensus_core::census::{census_directed, census_undirected, Context};
use motifcensus_core::graph::DirectedGraph;
use motifcensus_core::nullmodel::{member_rng, randomize};
use motifcensus_core::oracle::{audit_divisor, oracle_directed, oracle_undirected};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::Instant;

fn verdict(criterion: &str, pass: bool, detail: &str) {
    println!(
        "ACCEPTANCE {criterion}: {} ({detail})",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "{criterion} failed: {detail}");
}

fn labels(n: u32) -> Vec<String> {
    (0..n).map(|i| format!("v{i}")).collect()
}

fn random_digraph(rng: &mut StdRng, n: u32, m: usize, bi_frac: f64) -> DirectedGraph {
    let mut pairs = Vec::with_capacity(2 * m);
    for _ in 0..m {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v {
            continue;
        }
        pairs.push((u, v));
        if rng.gen_bool(bi_frac) {
            pairs.push((v, u));
        }
    }
    DirectedGraph::from_pairs(labels(n), pairs).0
}

fn data_file(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

#[test]
fn criterion_1_class_enumeration() {
    let start = Instant::now();
    let mut ok = true;
    let mut detail = String::new();
    for (k, directed, expect) in [
        (3usize, true, 13usize),
        (4, true, 199),
        (5, true, 9364),
        (3, false, 2),
        (4, false, 6),
        (5, false, 21),
    ] {
        let got = enumerate_classes(k, directed).len();
        if got != expect {
            ok = false;
            detail.push_str(&format!("k={k} directed={directed}: {got}!={expect}; "));
        }
    }
    let elapsed = start.elapsed();
    ok &= elapsed.as_secs() < 60;
    detail.push_str(&format!(
        "13/199/9364 directed, 2/6/21 undirected in {:.2} s",
        elapsed.as_secs_f64()
    ));
    verdict("1 class-enumeration", ok, &detail);
}

#[test]
fn criterion_2_oracle_equivalence() {
    let start = Instant::now();
    let mut checked = [0u32; 3];
    for (ki, &(k, max_n)) in [(3usize, 40u32), (4, 40), (5, 25)].iter().enumerate() {
        let ctx = Context::new(k, true);
        let uctx = Context::new(k, false);
        let mut case = 0u64;
        for &bi_frac in &[0.0, 0.3, 1.0] {
            for &density in &[1.0f64, 2.5, 6.0] {
                for _ in 0..6 {
                    let mut rng = StdRng::seed_from_u64(0xacce_0000 + k as u64 * 1000 + case);
                    case += 1;
                    let n = rng.gen_range(5..=max_n);
                    let m = ((n as f64) * density) as usize;
                    let g = random_digraph(&mut rng, n, m, bi_frac);
                    let fast = census_directed(&g, &ctx).unwrap();
                    let slow = oracle_directed(&g, k, &ctx.classes, 50_000_000).unwrap();
                    assert_eq!(fast.counts(), slow.hist.counts(), "k={k} case {case}");
                    let s = g.skeleton();
                    let ufast = census_undirected(&s, &uctx).unwrap();
                    let uslow = oracle_undirected(&s, k, &uctx.classes, 50_000_000).unwrap();
                    assert_eq!(ufast.counts(), uslow.hist.counts(), "k={k} case {case} undirected");
                    checked[ki] += 1;
                }
            }
        }
    }
    let elapsed = start.elapsed();
    let ok = checked.iter().all(|&c| c >= 50) && elapsed.as_secs() < 600;
    verdict(
        "2 oracle-equivalence",
        ok,
        &format!(
            "{}/{}/{} graphs for k=3/4/5, all exact, in {:.1} s",
            checked[0],
            checked[1],
            checked[2],
            elapsed.as_secs_f64()
        ),
    );
}

#[test]
fn criterion_3_self_census_identity() {
    let mut total = 0usize;
    for k in 3..=5usize {
        let ctx = Context::new(k, true);
        for class in 0..ctx.classes.len() as u16 {
            let g = graph_from_bits(k, ctx.classes.code_bits(class));
            let hist = census_directed(&g, &ctx).unwrap();
            assert_eq!(hist.get(class), 1, "k={k} class {class}");
            assert_eq!(hist.total(), 1, "k={k} class {class} has extras");
            total += 1;
        }
    }
    verdict(
        "3 self-census-identity",
        total == 13 + 199 + 9364,
        &format!("{total} representatives each count exactly themselves"),
    );
}

#[test]
fn criterion_4_divisor_audit() {
    let mut audited = 0usize;
    for k in 3..=5usize {
        for directed in [true, false] {
            let ctx = Context::new(k, directed);
            for class in 0..ctx.classes.len() as u16 {
                assert_eq!(
                    audit_divisor(&ctx, class).unwrap(),
                    ctx.classes.divisor(class) as u64,
                    "k={k} directed={directed} class {class}"
                );
                audited += 1;
            }
        }
    }
    // k=4 divisors are determined by the skeleton and take the known values
    let directed4 = enumerate_classes(4, true);
    let undirected4 = enumerate_classes(4, false);
    let mut canon = Canonicalizer::new(4);
    let mut skeleton_divisors: Vec<u32> = (0..undirected4.len() as u16)
        .map(|c| undirected4.divisor(c))
        .collect();
    skeleton_divisors.sort_unstable();
    assert_eq!(skeleton_divisors, vec![1, 3, 3, 4, 5, 6]);
    for class in 0..directed4.len() as u16 {
        let bits = directed4.code_bits(class);
        let mut skel = 0u32;
        for i in 0..4 {
            for j in 0..4 {
                if i != j && bits >> (i * 4 + j) & 1 == 1 {
                    skel |= 1 << (i * 4 + j) | 1 << (j * 4 + i);
                }
            }
        }
        let sclass = undirected4.class_of(canon.canon(skel)).unwrap();
        assert_eq!(
            directed4.divisor(class),
            undirected4.divisor(sclass),
            "directed class {class} divisor differs from its skeleton's"
        );
    }
    verdict(
        "4 divisor-audit",
        audited == 13 + 199 + 9364 + 2 + 6 + 21,
        &format!("{audited} classes audited; k=4 skeleton divisors are (1,3,3,4,5,6)"),
    );
}

#[test]
fn criterion_5_null_model_preservation() {
    let mut graphs = 0u32;
    for case in 0..20u64 {
        let mut rng = StdRng::seed_from_u64(0x5a5a + case);
        let n = rng.gen_range(10..60);
        let m = (n as usize) * rng.gen_range(1..5);
        let g = random_digraph(&mut rng, n, m, [0.0, 0.3, 1.0][case as usize % 3]);
        let r = randomize(&g, 3, &mut member_rng(case, 0));
        assert_eq!(r.vertex_count(), g.vertex_count(), "case {case}");
        assert_eq!(r.edge_count(), g.edge_count(), "case {case}");
        for v in 0..g.vertex_count() {
            assert_eq!(r.degree_triple(v), g.degree_triple(v), "case {case} vertex {v}");
        }
        graphs += 1;
    }
    verdict(
        "5 null-model-preservation",
        graphs == 20,
        "20 graphs keep every (bi, out, in) degree triple and (n, m)",
    );
}

#[test]
fn criterion_6_performance_anchors() {
    // coli-scale bundled graph
    let (coli, rep) = load_edge_list(&data_file("ecoli_like.txt"), false).unwrap();
    assert_eq!((rep.n, rep.m), (418, 519));
    let ctx3 = Context::new(3, true);
    let start = Instant::now();
    let h3 = engine::census_directed_parallel(&coli, &ctx3, 1).unwrap();
    let coli3 = start.elapsed();
    let ctx5 = Context::new(5, true);
    let start = Instant::now();
    let h5 = engine::census_directed_parallel(&coli, &ctx5, 1).unwrap();
    let coli5 = start.elapsed();

    // dictionary-scale graph generated in place (~12.9k vertices, ~109k edges)
    let mut rng = StdRng::seed_from_u64(0xf01d0c);
    let big = random_digraph(&mut rng, 12_905, 95_500, 0.15);
    let start = Instant::now();
    let hb = engine::census_directed_parallel(&big, &ctx3, 1).unwrap();
    let big3 = start.elapsed();

    let ok = coli3.as_millis() < 50 && coli5.as_secs_f64() < 10.0 && big3.as_secs_f64() < 5.0;
    verdict(
        "6 performance-anchors",
        ok,
        &format!(
            "coli-scale k=3 {:.2} ms (<50), k=5 {:.2} s (<10); {}v/{}e k=3 {:.2} s (<5); totals {}/{}/{}",
            coli3.as_secs_f64() * 1e3,
            coli5.as_secs_f64(),
            big.vertex_count(),
            big.edge_count(),
            big3.as_secs_f64(),
            h3.total(),
            h5.total(),
            hb.total()
        ),
    );
}

#[test]
fn criterion_7_determinism() {
    let bin = env!("CARGO_BIN_EXE_motifcensus");
    let input = data_file("ecoli_like.txt");
    let run = |args: &[&str]| {
        let out = Command::new(bin).args(args).arg(&input).output().unwrap();
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
        out.stdout
    };
    let mut ok = true;
    for k in ["3", "4"] {
        let count1 = run(&["count", "-k", k, "--workers", "1"]);
        let count1b = run(&["count", "-k", k, "--workers", "1"]);
        let count8 = run(&["count", "-k", k, "--workers", "8"]);
        ok &= count1 == count1b && count1 == count8;
        let sig = &["significance", "-k", k, "--seed", "42", "--ensemble", "8"];
        let s1 = run(&[sig.as_slice(), &["--workers", "1"]].concat());
        let s1b = run(&[sig.as_slice(), &["--workers", "1"]].concat());
        let s8 = run(&[sig.as_slice(), &["--workers", "8"]].concat());
        ok &= s1 == s1b && s1 == s8;
    }
    verdict(
        "7 determinism",
        ok,
        "count and significance outputs byte-identical across reruns and workers 1 vs 8",
    );
}

#[test]
fn criterion_8_scaling_sanity() {
    // fixed density, m doubling across three sizes; time the k=4 census
    let ctx = Context::new(4, true);
    let mut times = Vec::new();
    for (idx, &n) in [900u32, 1800, 3600].iter().enumerate() {
        let m = (n as usize) * 4;
        let mut rng = StdRng::seed_from_u64(0x5ca1e + idx as u64);
        let g = random_digraph(&mut rng, n, m, 0.2);
        // warm once, then take the best of 3 to damp scheduler noise
        engine::census_directed_parallel(&g, &ctx, 1).unwrap();
        let best = (0..3)
            .map(|_| {
                let start = Instant::now();
                engine::census_directed_parallel(&g, &ctx, 1).unwrap();
                start.elapsed().as_secs_f64()
            })
            .fold(f64::MAX, f64::min);
        times.push(best);
    }
    let r1 = times[1] / times[0];
    let r2 = times[2] / times[1];
    let ok = r1 <= 5.0 && r2 <= 5.0;
    verdict(
        "8 scaling-sanity",
        ok,
        &format!(
            "k=4 census times {:.1}/{:.1}/{:.1} ms; doubling ratios {r1:.2}x and {r2:.2}x (<=5x)",
            times[0] * 1e3,
            times[1] * 1e3,
            times[2] * 1e3
        ),
    );
}
