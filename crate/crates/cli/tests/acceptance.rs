//! Acceptance suite: one test per release criterion, each ending in a
//! single PASS line (visible with --nocapture). Everything here is exact —
//! integer or rational arithmetic, no tolerances — and every random input
//! is seeded.

use etabound::dominating::{connected_dominating_pair, verify_dominating_pair};
use etabound::enumerate::{all_graph_codes, code_to_graph};
use etabound::exact::{
    chromatic_number, clique_number, hadwiger_number, has_clique_minor, independence_number,
    independence_number_brute, verify_minor_embedding, Limits,
};
use etabound::generate;
use etabound::graph6::{parse_graph6, write_graph6};
use etabound::peeling::{
    bound_ceiling, guaranteed_bound, peel_independent_set, verify_certificate, BaseSolver,
    BoundParams,
};
use etabound::{Graph, Rational};
use rayon::prelude::*;
use std::path::Path;
use std::process::{Command, Output};
use std::sync::OnceLock;

/// Connected graphs up to isomorphism, indexed by vertex count. Built once;
/// the class counts pin the enumerator against the published census.
static CONNECTED: OnceLock<Vec<Vec<u64>>> = OnceLock::new();

const ALL_COUNTS: [usize; 9] = [1, 2, 4, 11, 34, 156, 1044, 12346, 274668];
const CONNECTED_COUNTS: [usize; 9] = [1, 1, 2, 6, 21, 112, 853, 11117, 261080];

fn connected_codes() -> &'static Vec<Vec<u64>> {
    CONNECTED.get_or_init(|| {
        let mut per_n = vec![Vec::new()];
        for n in 1..=9usize {
            let all = all_graph_codes(n);
            assert_eq!(all.len(), ALL_COUNTS[n - 1], "graph class count for n = {n}");
            let connected: Vec<u64> = all
                .into_par_iter()
                .filter(|&code| code_to_graph(n, code).is_connected())
                .collect();
            assert_eq!(
                connected.len(),
                CONNECTED_COUNTS[n - 1],
                "connected class count for n = {n}"
            );
            per_n.push(connected);
        }
        per_n
    })
}

fn limits() -> Limits {
    Limits::default()
}

/// The named n <= 12 instances criterion 6 peels in addition to the
/// exhaustive corpus: known tight and structurally awkward cases.
fn named_graphs() -> Vec<Graph> {
    let wheel6 = {
        let mut edges: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        edges.extend((0..6).map(|i| (i, 6)));
        Graph::from_edges(7, &edges).unwrap()
    };
    let grid3x4 = {
        let mut edges = Vec::new();
        for r in 0..3usize {
            for c in 0..4usize {
                let v = 4 * r + c;
                if c + 1 < 4 {
                    edges.push((v, v + 1));
                }
                if r + 1 < 3 {
                    edges.push((v, v + 4));
                }
            }
        }
        Graph::from_edges(12, &edges).unwrap()
    };
    vec![
        generate::petersen(),
        // subdivided K4: 2-degenerate yet carrying a K4 minor
        parse_graph6("Dlk").unwrap(),
        wheel6,
        grid3x4,
        generate::complete(11),
        generate::complete(12),
        generate::cycle(12).unwrap(),
    ]
}

/// Seeded G(n, p) instances on 9..=12 vertices (connected ones kept).
fn sampled_graphs() -> Vec<Graph> {
    let mut graphs = Vec::new();
    for n in 9..=12usize {
        for (pi, p) in [0.2, 0.35, 0.5, 0.7].into_iter().enumerate() {
            for seed in 0..10u64 {
                let g = generate::gnp(n, p, 1000 * n as u64 + 100 * pi as u64 + seed).unwrap();
                if g.is_connected() {
                    graphs.push(g);
                }
            }
        }
    }
    graphs
}

fn cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_etabound"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write_corpus(path: &Path, graphs: &[Graph]) {
    let mut text = String::new();
    for g in graphs {
        text.push_str(&write_graph6(g).unwrap());
        text.push('\n');
    }
    std::fs::write(path, text).unwrap();
}

#[test]
fn criterion_1_dominating_pairs_verify_for_every_start() {
    let corpus = connected_codes();
    for n in 1..=9usize {
        let bad: usize = corpus[n]
            .par_iter()
            .map(|&code| {
                let g = code_to_graph(n, code);
                (0..n)
                    .filter(|&start| {
                        match connected_dominating_pair(&g, Some(start)) {
                            Ok(pair) => !verify_dominating_pair(&g, &pair),
                            Err(_) => true,
                        }
                    })
                    .count()
            })
            .sum();
        assert_eq!(bad, 0, "invalid dominating pairs at n = {n}");
    }
    println!(
        "ACCEPTANCE criterion 1 (dominating pair verifies on every connected graph n <= 9, every start): PASS"
    );
}

#[test]
fn criterion_2_deleting_the_dominating_set_drops_eta() {
    let corpus = connected_codes();
    let limits = limits();
    for n in 1..=9usize {
        let violations: usize = corpus[n]
            .par_iter()
            .filter(|&&code| {
                let g = code_to_graph(n, code);
                let pair = connected_dominating_pair(&g, None).expect("connected, nonempty");
                let (eta_full, _) = hadwiger_number(&g, &limits).unwrap();
                let (rest, _) = g.delete_vertices(&pair.dominating);
                let (eta_rest, _) = hadwiger_number(&rest, &limits).unwrap();
                eta_rest + 1 > eta_full
            })
            .count();
        assert_eq!(violations, 0, "eta failed to drop at n = {n}");
    }
    println!(
        "ACCEPTANCE criterion 2 (eta(G minus D) <= eta(G) - 1 on every connected graph n <= 9): PASS"
    );
}

#[test]
fn criterion_3_strongest_bound_exact_on_small_graphs_and_tight_on_complete() {
    let corpus = connected_codes();
    let limits = limits();
    for n in 1..=8usize {
        let failures: usize = corpus[n]
            .par_iter()
            .filter(|&&code| {
                let g = code_to_graph(n, code);
                let (eta, _) = hadwiger_number(&g, &limits).unwrap();
                if eta < 5 {
                    return false;
                }
                let (alpha, _) = independence_number(&g, &limits).unwrap();
                (2 * alpha as i64 - 1) * (2 * eta as i64 - 5) < 2 * n as i64 - 5
            })
            .count();
        assert_eq!(failures, 0, "bound failed at n = {n}");
    }
    for n in 5..=8usize {
        let g = generate::complete(n);
        let (alpha, _) = independence_number(&g, &limits).unwrap();
        let (eta, _) = hadwiger_number(&g, &limits).unwrap();
        let slack = (2 * alpha as i64 - 1) * (2 * eta as i64 - 5) - (2 * n as i64 - 5);
        assert_eq!(slack, 0, "K{n} should be tight");
    }
    println!(
        "ACCEPTANCE criterion 3 ((2 alpha - 1)(2 eta - 5) >= 2n - 5 for eta >= 5, n <= 8; slack 0 on K5..K8): PASS"
    );
}

#[test]
fn criterion_4_threshold_three_bound_exact_on_small_graphs() {
    let corpus = connected_codes();
    let limits = limits();
    for n in 1..=8usize {
        let failures: usize = corpus[n]
            .par_iter()
            .filter(|&&code| {
                let g = code_to_graph(n, code);
                let (eta, _) = hadwiger_number(&g, &limits).unwrap();
                if eta < 3 {
                    return false;
                }
                let (alpha, _) = independence_number(&g, &limits).unwrap();
                (2 * eta as i64 - 3) * (2 * alpha as i64 - 1) < 2 * n as i64 - 3
            })
            .count();
        assert_eq!(failures, 0, "bound failed at n = {n}");
    }
    println!(
        "ACCEPTANCE criterion 4 ((2 eta - 3)(2 alpha - 1) >= 2n - 3 for eta >= 3, n <= 8): PASS"
    );
}

#[test]
fn criterion_5_small_hadwiger_forces_large_independence() {
    let corpus = connected_codes();
    let limits = limits();
    for n in 1..=8usize {
        let failures: usize = corpus[n]
            .par_iter()
            .filter(|&&code| {
                let g = code_to_graph(n, code);
                let (eta, _) = hadwiger_number(&g, &limits).unwrap();
                if eta > 6 {
                    return false;
                }
                let (alpha, _) = independence_number(&g, &limits).unwrap();
                7 * alpha <= n
            })
            .count();
        assert_eq!(failures, 0, "alpha > n/7 failed at n = {n}");
    }
    println!("ACCEPTANCE criterion 5 (eta <= 6 implies alpha > n/7 on all connected n <= 8): PASS");
}

#[test]
fn criterion_6_peeling_meets_the_guarantee_with_no_exit_four() {
    let limits = limits();
    let params = BoundParams::new(3, Rational::from_integer(3)).unwrap();
    let corpus = connected_codes();
    let mut graphs: Vec<Graph> = Vec::new();
    for n in 1..=8usize {
        graphs.extend(corpus[n].iter().map(|&code| code_to_graph(n, code)));
    }
    graphs.extend(named_graphs());
    graphs.extend(sampled_graphs());

    let violations: Vec<String> = graphs
        .par_iter()
        .filter_map(|g| {
            let (eta, _) = hadwiger_number(g, &limits).unwrap();
            if eta < 3 {
                return None;
            }
            let (set, cert) =
                peel_independent_set(g, &params, BaseSolver::ThreeColor, &limits).unwrap();
            let bound = bound_ceiling(guaranteed_bound(g.n(), eta, &params).unwrap());
            if (set.len() as i64) >= bound && verify_certificate(g, &cert, &set) {
                None
            } else {
                Some(write_graph6(g).unwrap())
            }
        })
        .collect();
    assert!(violations.is_empty(), "peeling fell below the bound on {violations:?}");

    // Same corpus through the binary: exit 4 must never appear.
    let dir = tempfile::tempdir().unwrap();
    let corpus_path = dir.path().join("corpus12.g6");
    write_corpus(&corpus_path, &graphs);
    let result = cli(&["peel", "--in", corpus_path.to_str().unwrap(), "--t", "3"]);
    assert_eq!(result.status.code(), Some(0), "CLI peel over the corpus");

    println!(
        "ACCEPTANCE criterion 6 (peel at t = 3 returns at least ceil((2n-3)/(4 eta - 6) + 1/2) on the connected corpus up to n = 12; exit 4 never observed): PASS"
    );
}

#[test]
fn criterion_7_oracles_cross_validate() {
    let limits = limits();
    let cases: Vec<(usize, f64, u64)> = (0..1000u64)
        .map(|i| {
            let n = 4 + (i as usize % 7);
            let p = [0.2, 0.35, 0.5, 0.65, 0.8][i as usize % 5];
            (n, p, i)
        })
        .collect();
    let disagreements: usize = cases
        .par_iter()
        .filter(|&&(n, p, seed)| {
            let g = generate::gnp(n, p, seed).unwrap();
            let (fast, witness) = independence_number(&g, &limits).unwrap();
            let (brute, _) = independence_number_brute(&g, &limits).unwrap();
            if fast != brute || witness.len() != fast || !g.is_independent_set(&witness) {
                return true;
            }
            let (_, embedding) = hadwiger_number(&g, &limits).unwrap();
            !verify_minor_embedding(&g, &embedding)
        })
        .count();
    assert_eq!(disagreements, 0);

    // fixture values, each re-derived by the slow path before being trusted
    let petersen = generate::petersen();
    assert_eq!(independence_number_brute(&petersen, &limits).unwrap().0, 4);
    assert_eq!(chromatic_number(&petersen, &limits).unwrap().0, 3);
    assert_eq!(clique_number(&petersen, &limits).unwrap().0, 2);
    let (eta, embedding) = hadwiger_number(&petersen, &limits).unwrap();
    assert_eq!(eta, 5);
    assert!(verify_minor_embedding(&petersen, &embedding));
    assert!(has_clique_minor(&petersen, 6, &limits).unwrap().is_none());

    println!(
        "ACCEPTANCE criterion 7 (brute force and branch-and-bound agree on 1000 seeded graphs; minor certificates verify; Petersen fixtures re-derived): PASS"
    );
}

#[test]
fn criterion_8_strongest_bound_dominates_the_older_ones() {
    type R = Rational;
    for eta in 5i64..=10 {
        let n_low = (2 * eta * eta + 4) / 5;
        for n in n_low..=100 {
            let t5 = (R::new(2 * n - 5, 2 * eta - 5) + 1) / 2;
            let two = (R::new(n, eta) + 1) / 2;
            let four = (R::new(2 * n, eta) + 3) / 4;
            let five = R::new(n, 2 * eta) + 1;
            assert!(t5 >= two, "eta = {eta}, n = {n}: below (n/eta + 1)/2");
            assert!(t5 >= four, "eta = {eta}, n = {n}: below (2n/eta + 3)/4");
            assert!(t5 >= five, "eta = {eta}, n = {n}: below n/(2 eta) + 1");
        }
    }
    println!(
        "ACCEPTANCE criterion 8 (for 5 <= eta <= 10, n >= ceil(2 eta^2 / 5): the eta >= 5 bound dominates the three older bounds, exact rationals): PASS"
    );
}

#[test]
fn criterion_9_roundtrip_everywhere_and_byte_identical_cli_runs() {
    let corpus = connected_codes();
    for n in 1..=9usize {
        let bad: usize = corpus[n]
            .par_iter()
            .filter(|&&code| {
                let g = code_to_graph(n, code);
                match write_graph6(&g) {
                    Ok(enc) => parse_graph6(&enc).map(|h| h != g).unwrap_or(true),
                    Err(_) => true,
                }
            })
            .count();
        assert_eq!(bad, 0, "graph6 round-trip failed at n = {n}");
    }

    let dir = tempfile::tempdir().unwrap();
    let first = dir.path().join("first.jsonl");
    let second = dir.path().join("second.jsonl");
    for (path_a, path_b, args) in [
        (
            &first,
            &second,
            vec!["verify", "--exhaustive-n", "6", "--checks", "all"],
        ),
        (
            &first,
            &second,
            vec![
                "search", "--family", "gnp", "--n-min", "8", "--n-max", "9", "--p", "0.5",
                "--samples", "3", "--budget", "300", "--seed", "42", "--top", "6",
            ],
        ),
    ] {
        let mut args_a = args.clone();
        args_a.extend(["--out", path_a.to_str().unwrap()]);
        let mut args_b = args.clone();
        args_b.extend(["--out", path_b.to_str().unwrap()]);
        let out_a = cli(&args_a);
        let out_b = cli(&args_b);
        assert_eq!(out_a.status.code(), Some(0));
        assert_eq!(out_b.status.code(), Some(0));
        assert_eq!(out_a.stdout, out_b.stdout, "stdout differed: {args:?}");
        assert_eq!(
            std::fs::read(path_a).unwrap(),
            std::fs::read(path_b).unwrap(),
            "machine output differed: {args:?}"
        );
    }

    println!(
        "ACCEPTANCE criterion 9 (graph6 round-trip on every corpus graph; seeded CLI runs byte-identical): PASS"
    );
}
