//! Acceptance gate: one line per criterion, `[PASS]` or `[FAIL]`, with
//! elapsed time against the criterion's limit. Run with `--nocapture` to see
//! the table.

use std::collections::HashSet;
use std::io::Write;
use std::process::{Command, Stdio};
use std::time::{Duration, Instant};

use gdiff_core::canon::{canonical_form, census, enumerate_connected, labeled_connected};
use gdiff_core::codec::{parse_graph6, write_graph6};
use gdiff_core::families::{generate, random_connected};
use gdiff_core::harness::{run_census, run_instances, CheckReport, CheckStatus, PropId};
use gdiff_core::solvers::{
    differential_exact, differential_of_r, lambda_invariant, mu_invariant, roman_domination_number, RMode,
};
use gdiff_core::{build_r, FamilySpec, Graph, SearchOptions, VertexSet};

mod common;
use common::{bits, brute_canonical, naive_differential};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn opts() -> SearchOptions {
    SearchOptions::default()
}

fn fam(spec: FamilySpec) -> Graph {
    generate(&spec).unwrap()
}

fn diff_r(g: &Graph, mode: RMode) -> Result<i64, String> {
    let rg = build_r(g).map_err(|e| e.to_string())?;
    differential_of_r(&rg, mode, &opts()).map(|r| r.value).map_err(|e| e.to_string())
}

fn binom2(n: i64) -> i64 {
    n * (n - 1) / 2
}

fn bipartite_pairs(max_sum: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for p in 1..max_sum {
        for q in p + 1..=max_sum - p {
            out.push((p, q));
        }
    }
    out
}

fn no_fail_or_skip(reports: &[CheckReport]) -> Result<(), String> {
    if let Some(r) = reports
        .iter()
        .find(|r| matches!(r.status, CheckStatus::Fail | CheckStatus::Skipped))
    {
        return Err(format!("{} {} on {}: {}", r.prop, r.status, r.instance_g6, r.note));
    }
    Ok(())
}

fn count(reports: &[CheckReport], status: CheckStatus) -> usize {
    reports.iter().filter(|r| r.status == status).count()
}

fn ac01() -> Outcome {
    for n in 3..=6 {
        let g = fam(FamilySpec::Complete(n));
        let want = binom2(n as i64) - n as i64 + 3;
        let got = diff_r(&g, RMode::VRestricted)?;
        ensure!(got == want, "K_{n}: V-restricted {got}, expected {want}");
        if n <= 4 {
            let full = diff_r(&g, RMode::Full)?;
            ensure!(full == want, "K_{n}: full search {full}, expected {want}");
        }
    }
    Ok("K_3..K_6 restricted, K_3 and K_4 full".into())
}

fn ac02() -> Outcome {
    for n in 4..=7 {
        let got = diff_r(&fam(FamilySpec::Wheel(n)), RMode::VRestricted)?;
        ensure!(got == 2 * n as i64 - 3, "W_{n}: {got}, expected {}", 2 * n - 3);
    }
    Ok("W_4..W_7".into())
}

fn ac03() -> Outcome {
    let pairs = bipartite_pairs(9);
    for &(p, q) in &pairs {
        let got = diff_r(&fam(FamilySpec::CompleteBipartite(p, q)), RMode::VRestricted)?;
        let want = (q * (p + 1) - p) as i64;
        ensure!(got == want, "K_{{{p},{q}}}: {got}, expected {want}");
    }
    Ok(format!("{} pairs with p < q, p + q <= 9", pairs.len()))
}

fn ac04() -> Outcome {
    let o = opts().enumerating();
    for (p, q) in [(1, 3), (2, 3), (2, 4), (3, 4), (2, 5)] {
        let rg = build_r(&fam(FamilySpec::CompleteBipartite(p, q))).unwrap();
        let res = differential_of_r(&rg, RMode::Full, &o).map_err(|e| e.to_string())?;
        let sets = res.all_sets.unwrap();
        // The generator numbers the smaller part first.
        let part: VertexSet = (0..p).collect();
        ensure!(sets == vec![part], "K_{{{p},{q}}}: maximisers {sets:?}, expected [{part}]");
    }
    Ok("unique maximiser equals the smaller part in all 5 cases".into())
}

fn family_instances() -> Vec<Graph> {
    let mut out: Vec<Graph> = (3..=6).map(|n| fam(FamilySpec::Complete(n))).collect();
    out.extend((4..=7).map(|n| fam(FamilySpec::Wheel(n))));
    out.extend(bipartite_pairs(9).into_iter().map(|(p, q)| fam(FamilySpec::CompleteBipartite(p, q))));
    out
}

fn ac05() -> Outcome {
    let run = run_census(6, &[PropId::P11], &opts(), 4).map_err(|e| e.to_string())?;
    no_fail_or_skip(&run.reports)?;
    let pass = count(&run.reports, CheckStatus::Pass);
    ensure!(pass == 141, "census: {pass} of 141 passed");
    let fams = run_instances(&family_instances(), &[PropId::P11], &opts(), 4).map_err(|e| e.to_string())?;
    no_fail_or_skip(&fams)?;
    ensure!(count(&fams, CheckStatus::Pass) == fams.len(), "some family instance was vacuous");
    Ok(format!("141 census graphs and {} family graphs", fams.len()))
}

fn ac06() -> Outcome {
    let run = run_census(6, &[PropId::P15], &opts(), 4).map_err(|e| e.to_string())?;
    no_fail_or_skip(&run.reports)?;
    let pass = count(&run.reports, CheckStatus::Pass);
    ensure!(pass == 141, "{pass} of 141 passed");
    Ok("141 census graphs".into())
}

fn ac07() -> Outcome {
    let cases = [
        (FamilySpec::CompleteBipartite(2, 4), 10, 10, None),
        (FamilySpec::KPrime(2), 10, 8, Some(2)),
        (FamilySpec::CompleteBipartite(3, 6), 21, 21, None),
        (FamilySpec::KPrime(3), 21, 18, Some(3)),
    ];
    for (spec, want_diff, want_lambda, want_mu) in cases {
        let g = fam(spec);
        let d = diff_r(&g, RMode::VRestricted)?;
        let lambda = lambda_invariant(&g, &opts()).map_err(|e| e.to_string())?;
        let (mu, _) = mu_invariant(&g, &opts()).map_err(|e| e.to_string())?;
        ensure!(d == want_diff, "{spec:?}: diff(R) = {d}, expected {want_diff}");
        ensure!(lambda == want_lambda, "{spec:?}: lambda = {lambda}, expected {want_lambda}");
        match want_mu {
            None => ensure!(d == lambda, "{spec:?}: lower bound not tight"),
            Some(m) => {
                ensure!(mu == m, "{spec:?}: mu = {mu}, expected {m}");
                let upper = lambda + (g.order() as i64 - mu as i64) / 2;
                ensure!(d == upper, "{spec:?}: upper bound {upper} not tight");
            }
        }
    }
    Ok("K_{2,4}, K'_{2,4}, K_{3,6}, K'_{3,6}".into())
}

fn ac08() -> Outcome {
    let graphs = census(3, 6).unwrap();
    let mut violations = Vec::new();
    for g in &graphs {
        let d = differential_exact(g, None, &opts()).unwrap().value;
        let gr = roman_domination_number(g, &opts()).unwrap().gamma_r as i64;
        if d + gr != g.order() as i64 {
            violations.push(write_graph6(g));
        }
    }
    ensure!(violations.is_empty(), "violations: {violations:?}");
    Ok(format!("{} census graphs, zero violations", graphs.len()))
}

fn ac09() -> Outcome {
    let (mut stars, mut near) = (0, 0);
    for g in census(3, 6).unwrap() {
        let n = g.order();
        let m = (n + g.size()) as i64;
        let d = diff_r(&g, RMode::VRestricted)?;
        let form = canonical_form(&g).unwrap();
        let star = form == canonical_form(&fam(FamilySpec::Star(n))).unwrap();
        let plus = form == canonical_form(&fam(FamilySpec::StarPlusEdge(n))).unwrap();
        let name = write_graph6(&g);
        ensure!((d == m - 2) == star, "{name}: diff(R) = {d}, |V(R)| = {m}, star = {star}");
        ensure!((d == m - 3) == plus, "{name}: diff(R) = {d}, |V(R)| = {m}, star plus edge = {plus}");
        stars += star as usize;
        near += plus as usize;
    }
    ensure!(stars == 4 && near == 4, "found {stars} stars and {near} stars plus an edge");
    let run = run_census(6, &[PropId::P07, PropId::P08], &opts(), 0).map_err(|e| e.to_string())?;
    no_fail_or_skip(&run.reports)?;
    Ok("4 stars at |V(R)|-2, 4 stars plus an edge at |V(R)|-3; n-2 characterisation holds".into())
}

fn ac10() -> Outcome {
    let props = [
        PropId::P01,
        PropId::P02,
        PropId::P03,
        PropId::P04,
        PropId::P05,
        PropId::P12,
        PropId::P13,
        PropId::P14,
    ];
    let run = run_census(5, &props, &opts(), 0).map_err(|e| e.to_string())?;
    no_fail_or_skip(&run.reports)?;
    let o = opts().enumerating();
    for seed in 0..500u64 {
        let g = random_connected(1 + (seed % 6) as usize, 0.45, 1_000 + seed).unwrap();
        let res = differential_exact(&g, None, &o).unwrap();
        let (value, sets) = naive_differential(&g, g.vertices().bits());
        ensure!(
            res.value == value && bits(res.all_sets.as_ref().unwrap()) == sets,
            "pruned and naive disagree on {}",
            write_graph6(&g)
        );
    }
    Ok(format!(
        "{} pass, {} vacuous on 29 graphs; 500 random graphs agree with the naive scan",
        count(&run.reports, CheckStatus::Pass),
        count(&run.reports, CheckStatus::Vacuous)
    ))
}

fn ac11() -> Outcome {
    for (n, want) in [(3, 2), (4, 6), (5, 21), (6, 112)] {
        let reps = enumerate_connected(n, true).unwrap();
        ensure!(reps.len() == want, "n = {n}: {} classes, expected {want}", reps.len());
        let brute: HashSet<_> = labeled_connected(n).unwrap().map(|g| brute_canonical(&g)).collect();
        let ours: HashSet<_> = reps.iter().map(brute_canonical).collect();
        ensure!(brute == ours, "n = {n}: representatives differ from brute-force classes");
    }
    Ok("2, 6, 21, 112".into())
}

fn malformed_graph6() -> Vec<String> {
    let mut inputs: Vec<String> = [
        "Bx", "A", "C", "Bww", "B\x7f", "~", "~??", ">>graph6<<", "B{", "Dé", "D?", "~??~", "~?@?",
        "~~??????", ":Bw", "&Bw", "Bw Bw", "\x01", "Gab",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    // Well-formed 65-vertex graph, one vertex past capacity.
    inputs.push(format!("~?@@{}", "?".repeat(347)));
    inputs
}

fn ac12() -> Outcome {
    let graphs = census(1, 6).unwrap();
    for g in &graphs {
        let text = write_graph6(g);
        let back = parse_graph6(&text).map_err(|e| format!("{text}: {e}"))?;
        ensure!(&back == g && write_graph6(&back) == text, "{text} does not round-trip");
    }
    let inputs = malformed_graph6();
    ensure!(inputs.len() == 20, "{} malformed inputs", inputs.len());
    for input in &inputs {
        let mut child = Command::new(env!("CARGO_BIN_EXE_gdiff"))
            .args(["compute", "--input", "-"])
            .stdin(Stdio::piped())
            .stdout(Stdio::null())
            .stderr(Stdio::null())
            .spawn()
            .map_err(|e| e.to_string())?;
        child
            .stdin
            .take()
            .unwrap()
            .write_all(format!("{input}\n").as_bytes())
            .map_err(|e| e.to_string())?;
        let code = child.wait().map_err(|e| e.to_string())?.code();
        ensure!(code == Some(2), "{input:?} exited with {code:?}");
    }
    Ok(format!("{} graphs round-trip; 20 malformed inputs exit 2", graphs.len()))
}

fn set_mask(v: &serde_json::Value) -> u64 {
    v.as_array().unwrap().iter().fold(0, |m, x| m | 1 << x.as_u64().unwrap())
}

fn ac13() -> Outcome {
    let fixture: serde_json::Value = serde_json::from_str(include_str!("../fixtures/p18_p7.json")).unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_gdiff"))
        .args(["verify", "--family", "path:7", "--props", "P18", "--json"])
        .output()
        .map_err(|e| e.to_string())?;
    ensure!(out.status.code() == Some(1), "verify exited with {:?}", out.status.code());
    let fresh: serde_json::Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    ensure!(fresh["reports"] == fixture["reports"], "regenerated report differs from the fixture");

    let report = &fixture["reports"][0];
    ensure!(report["prop"] == "P18" && report["status"] == "fail", "unexpected verdict {report}");
    // Certificate: the listed sets are every differential set of P_7, none
    // of them attains diff(R(P_7)), and the last set does.
    let g = fam(FamilySpec::Path(7));
    let rg = build_r(&g).unwrap();
    let (dg, g_sets) = naive_differential(&g, g.vertices().bits());
    let (dr, r_sets) = naive_differential(rg.total(), rg.total().vertices().bits());
    let listed: Vec<u64> = report["witness_sets"].as_array().unwrap().iter().map(set_mask).collect();
    let (common, full_witness) = listed.split_at(listed.len() - 1);
    ensure!(common == g_sets.as_slice(), "listed sets are not all differential sets of P_7");
    ensure!(r_sets.contains(&full_witness[0]), "last witness does not attain diff(R(P_7))");
    ensure!(g_sets.iter().all(|s| !r_sets.contains(s)), "a common differential set exists");
    Ok(format!(
        "no common set: diff(P_7) = {dg} by {} sets, diff(R(P_7)) = {dr} by {} set(s)",
        g_sets.len(),
        r_sets.len()
    ))
}

struct Criterion {
    id: &'static str,
    title: &'static str,
    limit: Option<Duration>,
    run: fn() -> Outcome,
}

fn secs(s: u64) -> Option<Duration> {
    Some(Duration::from_secs(s))
}

#[test]
fn acceptance_criteria() {
    let criteria = [
        Criterion { id: "AC01", title: "diff(R(K_n)) = C(n,2) - n + 3", limit: secs(10), run: ac01 },
        Criterion { id: "AC02", title: "diff(R(W_n)) = 2n - 3", limit: secs(10), run: ac02 },
        Criterion { id: "AC03", title: "diff(R(K_{p,q})) = q(p+1) - p", limit: secs(30), run: ac03 },
        Criterion { id: "AC04", title: "unique maximiser of R(K_{p,q})", limit: secs(120), run: ac04 },
        Criterion { id: "AC05", title: "tau(G) = gamma(R(G))", limit: secs(300), run: ac05 },
        Criterion { id: "AC06", title: "lambda <= diff(R) <= lambda + (n-mu)/2", limit: secs(600), run: ac06 },
        Criterion { id: "AC07", title: "tightness of both bounds", limit: secs(300), run: ac07 },
        Criterion { id: "AC08", title: "diff(G) + gamma_R(G) = n", limit: None, run: ac08 },
        Criterion { id: "AC09", title: "star characterisations", limit: None, run: ac09 },
        Criterion { id: "AC10", title: "property suites and naive cross-check", limit: None, run: ac10 },
        Criterion { id: "AC11", title: "census counts", limit: None, run: ac11 },
        Criterion { id: "AC12", title: "graph6 round trip and rejection", limit: None, run: ac12 },
        Criterion { id: "AC13", title: "common differential set of P_7 and R(P_7)", limit: None, run: ac13 },
    ];
    let mut failed = Vec::new();
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(d) => match c.limit {
                Some(limit) if elapsed > limit => (false, format!("{d}; over the {}s limit", limit.as_secs())),
                _ => (true, d),
            },
            Err(e) => (false, e),
        };
        println!(
            "[{}] {} {} ({:.2}s): {}",
            if ok { "PASS" } else { "FAIL" },
            c.id,
            c.title,
            elapsed.as_secs_f64(),
            detail
        );
        if !ok {
            failed.push(c.id);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
