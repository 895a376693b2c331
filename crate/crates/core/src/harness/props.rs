use std::collections::BTreeSet;

use super::{Instance, PropId, Verdict};
use crate::canon::{canonical_form, CANON_LIMIT};
use crate::error::Result;
use crate::families::{
    as_k_r_2r, as_kprime, complete_bipartite_parts, generate, is_complete, is_path, is_star,
    is_star_plus_edge, is_wheel, FamilySpec,
};
use crate::graph::Graph;
use crate::solvers::{
    domination_number, independence_number, roman_domination_number, vertex_cover_number,
};
use crate::vset::VertexSet;

pub(crate) fn evaluate(id: PropId, inst: &Instance<'_>) -> Result<Verdict> {
    match id {
        PropId::P01 => p01_structure(inst),
        PropId::P02 => p02_gamma_inside_v(inst),
        PropId::P03 => p03_same_size(inst),
        PropId::P04 => p04_dominating_differential(inst),
        PropId::P05 => p05_min_degree_two(inst),
        PropId::P06 => p06_cardinality(inst),
        PropId::P07 => p07_max_degree(inst),
        PropId::P08 => p08_star_characterizations(inst),
        PropId::P09 => p09_bipartite_uniqueness(inst),
        PropId::P10 => p10_exact_values(inst),
        PropId::P11 => p11_cover_duality(inst),
        PropId::P12 => p12_cover_differential(inst),
        PropId::P13 => p13_boundary_dependence(inst),
        PropId::P14 => p14_exterior_bound(inst),
        PropId::P15 => p15_main_bounds(inst),
        PropId::P16 => p16_tightness(inst),
        PropId::P17 => p17_roman_identity(inst),
        PropId::P18 => p18_path_audit(inst),
    }
}

/// Connected with at least three vertices; `None` when the hypothesis holds.
fn standing(inst: &Instance<'_>) -> Option<Verdict> {
    if inst.n() < 3 {
        Some(Verdict::vacuous("hypothesis: order >= 3"))
    } else if !inst.g.is_connected() {
        Some(Verdict::vacuous("hypothesis: connected"))
    } else {
        None
    }
}

fn min_degree_two(inst: &Instance<'_>) -> Option<Verdict> {
    standing(inst).or_else(|| {
        let d = inst.g.min_degree().unwrap_or(0);
        (d < 2).then(|| Verdict::vacuous(format!("hypothesis: delta >= 2 (delta = {d})")))
    })
}

fn cards(sets: &[VertexSet]) -> BTreeSet<usize> {
    sets.iter().map(|s| s.len()).collect()
}

fn fmt_cards(c: &BTreeSet<usize>) -> String {
    let v: Vec<String> = c.iter().map(usize::to_string).collect();
    format!("{{{}}}", v.join(","))
}

fn all_sets(res: &crate::solvers::DifferentialResult) -> &[VertexSet] {
    res.all_sets.as_deref().unwrap_or(&[])
}

fn p01_structure(inst: &Instance<'_>) -> Result<Verdict> {
    let rg = inst.r()?;
    let violations = rg.validate();
    Ok(Verdict::check(
        violations.is_empty(),
        Vec::new(),
        if violations.is_empty() {
            format!(
                "|V(R)|={} |E(R)|={} all six structural items hold",
                rg.total().order(),
                rg.total().size()
            )
        } else {
            format!("violated: {}", violations.join(", "))
        },
    ))
}

fn p02_gamma_inside_v(inst: &Instance<'_>) -> Result<Verdict> {
    if let Some(v) = standing(inst) {
        return Ok(v);
    }
    let rg = inst.r()?;
    let dom = domination_number(rg.total(), true, &inst.opts)?;
    let all = dom.all_min.unwrap_or_default();
    let inside = all.iter().copied().find(|s| s.is_subset(rg.v_part()));
    Ok(match inside {
        Some(s) => Verdict::pass(
            vec![s],
            format!("gamma(R)={}; {} minimum dominating sets, one inside V", dom.gamma, all.len()),
        ),
        None => Verdict::fail(
            all.clone(),
            format!("gamma(R)={}; none of the {} minimum dominating sets lies in V", dom.gamma, all.len()),
        ),
    })
}

fn p03_same_size(inst: &Instance<'_>) -> Result<Verdict> {
    if let Some(v) = standing(inst) {
        return Ok(v);
    }
    let full = inst.r_diff_full()?;
    let vr = inst.r_diff_v()?;
    if full.value != vr.value {
        return Ok(Verdict::fail(
            vec![full.witness, vr.witness],
            format!("full search {} differs from V-restricted {}", full.value, vr.value),
        ));
    }
    let v_cards = cards(all_sets(vr));
    let missing = all_sets(full).iter().copied().find(|d| !v_cards.contains(&d.len()));
    Ok(match missing {
        Some(d) => Verdict::fail(
            vec![d],
            format!(
                "differential set of size {} has no counterpart in V (V sizes {})",
                d.len(),
                fmt_cards(&v_cards)
            ),
        ),
        None => Verdict::pass(
            vec![vr.witness],
            format!(
                "diff(R)={}; {} maximizers in V(R) with sizes {}, V sizes {}",
                full.value,
                all_sets(full).len(),
                fmt_cards(&cards(all_sets(full))),
                fmt_cards(&v_cards)
            ),
        ),
    })
}

fn p04_dominating_differential(inst: &Instance<'_>) -> Result<Verdict> {
    if let Some(v) = standing(inst) {
        return Ok(v);
    }
    let vr = inst.r_diff_v()?;
    let sets = all_sets(vr);
    let found = sets.iter().copied().find(|&s| inst.g.is_dominating(s).unwrap_or(false));
    Ok(match found {
        Some(s) => Verdict::pass(vec![s], format!("diff(R)={}; dominating differential set found", vr.value)),
        None => Verdict::fail(sets.to_vec(), "no differential set of R(G) inside V dominates G"),
    })
}

fn p05_min_degree_two(inst: &Instance<'_>) -> Result<Verdict> {
    if let Some(v) = min_degree_two(inst) {
        return Ok(v);
    }
    let vr = inst.r_diff_v()?;
    let sets = all_sets(vr);
    let bad = sets.iter().copied().find(|&s| !inst.g.is_dominating(s).unwrap_or(false));
    Ok(match bad {
        Some(s) => Verdict::fail(vec![s], "differential set of R(G) inside V does not dominate G"),
        None => Verdict::pass(
            vec![vr.witness],
            format!("all {} differential sets inside V dominate G", sets.len()),
        ),
    })
}

/// Universal reading: every differential set of `R(G)` is at least as large
/// as every differential set of `G`.
fn p06_cardinality(inst: &Instance<'_>) -> Result<Verdict> {
    if let Some(v) = min_degree_two(inst) {
        return Ok(v);
    }
    let gd = inst.g_diff()?;
    let full = inst.r_diff_full()?;
    let x = all_sets(gd).iter().copied().max_by_key(|s| s.len()).expect("non-empty");
    let y = all_sets(full).iter().copied().min_by_key(|s| s.len()).expect("non-empty");
    let note = format!(
        "max |X| = {} over {} sets of G, min |Y| = {} over {} sets of R(G)",
        x.len(),
        all_sets(gd).len(),
        y.len(),
        all_sets(full).len()
    );
    Ok(Verdict::check(y.len() >= x.len(), vec![x, y], note))
}

fn p07_max_degree(inst: &Instance<'_>) -> Result<Verdict> {
    if let Some(v) = standing(inst) {
        return Ok(v);
    }
    let n = inst.n() as i64;
    let delta = inst.g.max_degree().unwrap_or(0) as i64;
    let gd = inst.g_diff()?;
    let d = gd.value;
    let a = (delta == n - 1) == (d == n - 2);
    let b = (delta == n - 2) == (d == n - 3);
    let c = delta != n - 3 || d == n - 4;
    let failed: Vec<&str> = [(a, "(a)"), (b, "(b)"), (c, "(c)")]
        .iter()
        .filter(|(ok, _)| !ok)
        .map(|&(_, name)| name)
        .collect();
    let note = format!(
        "n={n} Delta={delta} diff={d}{}",
        if failed.is_empty() {
            String::new()
        } else {
            format!("; violated {}", failed.join(" "))
        }
    );
    Ok(Verdict::check(failed.is_empty(), vec![gd.witness], note))
}

fn isomorphic_to_family(g: &Graph, spec: FamilySpec, recognize: fn(&Graph) -> bool) -> Result<bool> {
    if g.order() <= CANON_LIMIT {
        if spec.validate().is_err() {
            return Ok(false);
        }
        Ok(canonical_form(g)? == canonical_form(&generate(&spec)?)?)
    } else {
        Ok(recognize(g))
    }
}

fn p08_star_characterizations(inst: &Instance<'_>) -> Result<Verdict> {
    if let Some(v) = standing(inst) {
        return Ok(v);
    }
    let n = inst.n();
    let big = inst.r()?.total().order() as i64;
    let vr = inst.r_diff_v()?;
    let star = isomorphic_to_family(inst.g, FamilySpec::Star(n), is_star)?;
    let plus = isomorphic_to_family(inst.g, FamilySpec::StarPlusEdge(n), is_star_plus_edge)?;
    let i = (vr.value == big - 2) == star;
    let ii = (vr.value == big - 3) == plus;
    let note = format!(
        "|V(R)|={big} diff(R)={} star={star} star_plus_edge={plus}{}{}",
        vr.value,
        if i { "" } else { "; violated (i)" },
        if ii { "" } else { "; violated (ii)" }
    );
    Ok(Verdict::check(i && ii, vec![vr.witness], note))
}

/// Forward direction only: the statement is not a characterization.
fn p09_bipartite_uniqueness(inst: &Instance<'_>) -> Result<Verdict> {
    let Some((p_part, q_part)) = complete_bipartite_parts(inst.g) else {
        return Ok(Verdict::vacuous("hypothesis: complete bipartite"));
    };
    let (p, q) = (p_part.len(), q_part.len());
    if p == q || p + q < 4 {
        return Ok(Verdict::vacuous(format!("hypothesis: p < q and p + q >= 4 (p={p}, q={q})")));
    }
    let full = inst.r_diff_full()?;
    let sets = all_sets(full);
    let mut note = format!("K_{{{p},{q}}}: diff(R)={}; {} differential set(s) in V(R)", full.value, sets.len());
    if p >= 3 {
        let gd = inst.g_diff()?;
        let sizes = cards(all_sets(gd));
        note.push_str(&format!(
            "; differential sets of K_{{{p},{q}}} itself have sizes {} (all of size 2: {})",
            fmt_cards(&sizes),
            sizes.len() == 1 && sizes.contains(&2)
        ));
    }
    Ok(Verdict::check(sets == [p_part], sets.to_vec(), note))
}

fn p10_exact_values(inst: &Instance<'_>) -> Result<Verdict> {
    let n = inst.n();
    let g = inst.g;
    if n < 4 {
        return Ok(Verdict::vacuous("hypothesis: order >= 4"));
    }
    let complete = is_complete(g);
    let wheel = is_wheel(g);
    let bip = complete_bipartite_parts(g);
    if !complete && !wheel && bip.is_none() {
        return Ok(Verdict::vacuous("hypothesis: K_n, W_n or K_{p,q}"));
    }
    let rg = inst.r()?;
    let value = inst.r_diff_v()?.value;
    let n_i = n as i64;
    let mut parts = Vec::new();
    let mut bad = Vec::new();
    let mut ok = true;
    let mut expect = |name: String, want: i64| {
        let hit = value == want;
        ok &= hit;
        parts.push(format!("{name}: expected {want}, got {value}"));
    };
    if complete {
        expect(format!("K_{n}"), n_i * (n_i - 1) / 2 - n_i + 3);
    }
    if wheel {
        expect(format!("W_{n}"), 2 * n_i - 3);
    }
    if let Some((pp, qq)) = bip {
        let (p, q) = (pp.len() as i64, qq.len() as i64);
        expect(format!("K_{{{p},{q}}}"), q * (p + 1) - p);
    }
    if complete {
        // Case table for |S| = n-3 .. n; all sets of one size are equivalent.
        let base = n_i * (n_i - 1) / 2 - n_i;
        for k in n - 3..=n {
            let s = VertexSet::full(k);
            let want = match n - k {
                3 | 2 => base + 3,
                1 => base + 2,
                _ => base,
            };
            let got = rg.total().set_differential(s)?;
            if got != want {
                ok = false;
                bad.push(s);
                parts.push(format!("|S|={k}: expected {want}, got {got}"));
            }
        }
        if bad.is_empty() {
            parts.push("case table for |S| = n-3..n holds".into());
        }
    }
    Ok(Verdict::check(ok, bad, parts.join("; ")))
}

fn p11_cover_duality(inst: &Instance<'_>) -> Result<Verdict> {
    if let Some(v) = standing(inst) {
        return Ok(v);
    }
    let tau = vertex_cover_number(inst.g, &inst.opts)?;
    let dom = domination_number(inst.r()?.total(), false, &inst.opts)?;
    Ok(Verdict::check(
        tau.tau == dom.gamma,
        vec![tau.witness, dom.witness],
        format!("tau(G)={} gamma(R(G))={}", tau.tau, dom.gamma),
    ))
}

fn p12_cover_differential(inst: &Instance<'_>) -> Result<Verdict> {
    if let Some(v) = standing(inst) {
        return Ok(v);
    }
    let gd = inst.g_diff()?;
    let covers: Vec<VertexSet> = all_sets(gd)
        .iter()
        .copied()
        .filter(|&s| inst.g.is_vertex_cover(s).unwrap_or(false))
        .collect();
    if covers.is_empty() {
        return Ok(Verdict::vacuous("no differential set of G is a vertex cover"));
    }
    let rg = inst.r()?;
    let target = inst.r_diff_v()?.value;
    for &s in &covers {
        let got = rg.total().set_differential(s)?;
        if got != target {
            return Ok(Verdict::fail(
                vec![s],
                format!("vertex-cover differential set scores {got} in R(G), diff(R)={target}"),
            ));
        }
    }
    Ok(Verdict::pass(
        covers.clone(),
        format!("{} vertex-cover differential set(s), each scores diff(R)={target}", covers.len()),
    ))
}

/// Maximal means no vertex of `V` can be added while staying a differential
/// set of `R(G)`.
fn p13_boundary_dependence(inst: &Instance<'_>) -> Result<Verdict> {
    if let Some(v) = standing(inst) {
        return Ok(v);
    }
    let g = inst.g;
    let vr = inst.r_diff_v()?;
    let sets = all_sets(vr);
    let members: BTreeSet<VertexSet> = sets.iter().copied().collect();
    let top = vr.max_card.unwrap_or(0);
    let mut maximal = 0;
    for &s in sets {
        let b = g.boundary(s)?;
        if !g.is_k_dependent(b, 2)? {
            return Ok(Verdict::fail(vec![s, b], "<B_G(S)> is not 2-dependent"));
        }
        let is_maximal = (g.vertices() - s).iter().all(|v| !members.contains(&s.with(v)));
        if s.len() == top && !is_maximal {
            return Ok(Verdict::fail(vec![s], "maximum-cardinality differential set is not maximal"));
        }
        if is_maximal {
            maximal += 1;
            if !g.is_k_dependent(b, 1)? {
                return Ok(Verdict::fail(vec![s, b], "maximal S with <B_G(S)> not 1-dependent"));
            }
        }
    }
    Ok(Verdict::pass(
        vec![vr.witness],
        format!("{} differential sets inside V, {maximal} maximal", sets.len()),
    ))
}

fn p14_exterior_bound(inst: &Instance<'_>) -> Result<Verdict> {
    if let Some(v) = standing(inst) {
        return Ok(v);
    }
    let rg = inst.r()?;
    let vr = inst.r_diff_v()?;
    let mu = vr.max_card.unwrap_or(0);
    let n = inst.n();
    let maxima = vr.maximum_sets();
    for &s in &maxima {
        let c = rg.total().exterior(s)?;
        if 2 * c.len() > n - mu {
            return Ok(Verdict::fail(
                vec![s, c],
                format!("|C_R(S)|={} exceeds (n - mu)/2 = ({n} - {mu})/2", c.len()),
            ));
        }
    }
    Ok(Verdict::pass(maxima.clone(), format!("mu={mu}; {} maximum set(s) checked", maxima.len())))
}

fn p15_main_bounds(inst: &Instance<'_>) -> Result<Verdict> {
    if let Some(v) = standing(inst) {
        return Ok(v);
    }
    let g = inst.g;
    let alpha = independence_number(g, &inst.opts)?;
    let lambda = g.size() as i64 - g.order() as i64 + 2 * alpha.alpha as i64;
    let vr = inst.r_diff_v()?;
    let mu = vr.max_card.unwrap_or(0);
    let upper = lambda + ((inst.n() - mu) / 2) as i64;
    let d = vr.value;
    let gamma = domination_number(g, false, &inst.opts)?.gamma;
    let relation = match mu.cmp(&gamma) {
        std::cmp::Ordering::Less => "<",
        std::cmp::Ordering::Equal => "=",
        std::cmp::Ordering::Greater => ">",
    };
    let note = format!(
        "lambda={lambda} diff(R)={d} upper={upper} mu={mu}{}{} (observed mu {relation} gamma={gamma})",
        if d == lambda { " lower tight" } else { "" },
        if d == upper { " upper tight" } else { "" },
    );
    let witness = mu_witness(vr);
    Ok(Verdict::check(lambda <= d && d <= upper, witness, note))
}

fn mu_witness(vr: &crate::solvers::DifferentialResult) -> Vec<VertexSet> {
    vr.maximum_sets().into_iter().min().into_iter().collect()
}

fn p16_tightness(inst: &Instance<'_>) -> Result<Verdict> {
    let g = inst.g;
    let plain = as_k_r_2r(g).filter(|&r| r >= 2);
    let prime = as_kprime(g);
    if plain.is_none() && prime.is_none() {
        return Ok(Verdict::vacuous("hypothesis: K_{r,2r} or K'_{r,2r} with r >= 2"));
    }
    let alpha = independence_number(g, &inst.opts)?.alpha as i64;
    let lambda = g.size() as i64 - g.order() as i64 + 2 * alpha;
    let vr = inst.r_diff_v()?;
    let mu = vr.max_card.unwrap_or(0);
    let d = vr.value;
    let (ok, note) = match (plain, prime) {
        (Some(r), _) => (d == lambda, format!("K_{{{r},{}}}: diff(R)={d} lambda={lambda}", 2 * r)),
        (None, Some((r, _))) => {
            let want = lambda + ((3 * r - mu) / 2) as i64;
            (
                d == want,
                format!("K'_{{{r},{}}}: diff(R)={d} lambda={lambda} mu={mu} expected {want}", 2 * r),
            )
        }
        (None, None) => unreachable!(),
    };
    Ok(Verdict::check(ok, mu_witness(vr), note))
}

fn p17_roman_identity(inst: &Instance<'_>) -> Result<Verdict> {
    if inst.n() == 0 {
        return Ok(Verdict::vacuous("hypothesis: order >= 1"));
    }
    let roman = roman_domination_number(inst.g, &inst.opts)?;
    let d = inst.g_diff()?.value;
    let n = inst.n() as i64;
    let twos: VertexSet = (0..inst.n()).filter(|&v| roman.labeling[v] == 2).collect();
    let ones: VertexSet = (0..inst.n()).filter(|&v| roman.labeling[v] == 1).collect();
    Ok(Verdict::check(
        d + roman.gamma_r as i64 == n,
        vec![twos, ones],
        format!("diff={d} gamma_R={} n={n}", roman.gamma_r),
    ))
}

/// Exhaustive search for a set that is a differential set of both `P_7` and
/// `R(P_7)`. Status `pass` means such a set exists.
fn p18_path_audit(inst: &Instance<'_>) -> Result<Verdict> {
    if inst.n() != 7 || !is_path(inst.g) {
        return Ok(Verdict::vacuous("hypothesis: G is P_7"));
    }
    let rg = inst.r()?;
    let gd = inst.g_diff()?;
    let full = inst.r_diff_full()?;
    let mut scored = Vec::new();
    let mut common = Vec::new();
    for &s in all_sets(gd) {
        let in_r = rg.total().set_differential(s)?;
        scored.push(format!("{s}->{in_r}"));
        if in_r == full.value {
            common.push(s);
        }
    }
    let certificate = format!(
        "diff(G)={} with {} differential sets; diff(R(G))={} attained by {} set(s), e.g. {}; scores in R(G): {}",
        gd.value,
        all_sets(gd).len(),
        full.value,
        all_sets(full).len(),
        full.witness,
        scored.join(" ")
    );
    Ok(if common.is_empty() {
        let mut sets = all_sets(gd).to_vec();
        sets.push(full.witness);
        Verdict::fail(sets, format!("no common differential set exists; {certificate}"))
    } else {
        Verdict::pass(common, format!("common differential set found; {certificate}"))
    })
}

#[cfg(test)]
mod tests {
    use super::super::{run_proposition, run_propositions, CheckStatus};
    use super::*;
    use crate::solvers::SearchOptions;

    fn fam(spec: FamilySpec) -> Graph {
        generate(&spec).unwrap()
    }

    fn status(id: PropId, g: &Graph) -> CheckStatus {
        run_proposition(id, g, &SearchOptions::default()).status
    }

    #[test]
    fn documented_examples() {
        let k23 = fam(FamilySpec::CompleteBipartite(2, 3));
        let r = run_proposition(PropId::P11, &k23, &SearchOptions::default());
        assert_eq!(r.status, CheckStatus::Pass);
        assert!(r.note.contains("tau(G)=2 gamma(R(G))=2"));
        let r = run_proposition(PropId::P15, &fam(FamilySpec::CompleteBipartite(2, 4)), &SearchOptions::default());
        assert_eq!(r.status, CheckStatus::Pass);
        assert!(r.note.contains("lambda=10 diff(R)=10") && r.note.contains("lower tight"));
        let r = run_proposition(PropId::P10, &fam(FamilySpec::Wheel(6)), &SearchOptions::default());
        assert_eq!(r.status, CheckStatus::Pass);
        assert!(r.note.contains("W_6: expected 9, got 9"));
    }

    #[test]
    fn vacuous_when_hypothesis_fails() {
        let p5 = fam(FamilySpec::Path(5));
        assert_eq!(status(PropId::P05, &p5), CheckStatus::Vacuous);
        assert_eq!(status(PropId::P06, &p5), CheckStatus::Vacuous);
        assert_eq!(status(PropId::P09, &p5), CheckStatus::Vacuous);
        assert_eq!(status(PropId::P16, &p5), CheckStatus::Vacuous);
        let disjoint = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(status(PropId::P11, &disjoint), CheckStatus::Vacuous);
        assert_eq!(status(PropId::P01, &disjoint), CheckStatus::Pass);
    }

    #[test]
    fn family_checks_pass() {
        let opts = SearchOptions::default();
        for spec in [
            FamilySpec::Complete(5),
            FamilySpec::Wheel(5),
            FamilySpec::CompleteBipartite(2, 4),
            FamilySpec::KPrime(2),
            FamilySpec::Cycle(6),
            FamilySpec::StarPlusEdge(5),
        ] {
            let g = fam(spec);
            let ids: Vec<PropId> = PropId::ALL.iter().copied().filter(|&p| p != PropId::P18).collect();
            for r in run_propositions(&ids, &g, &opts) {
                assert_ne!(r.status, CheckStatus::Fail, "{spec} {} {}", r.prop, r.note);
                assert_ne!(r.status, CheckStatus::Skipped, "{spec} {} {}", r.prop, r.note);
            }
        }
    }

    #[test]
    fn path_seven_has_no_common_differential_set() {
        let r = run_proposition(PropId::P18, &fam(FamilySpec::Path(7)), &SearchOptions::default());
        assert_eq!(r.status, CheckStatus::Fail);
        assert_eq!(
            r.witness_sets[..3],
            [vec![1, 4], vec![1, 5], vec![2, 5]]
        );
        assert!(r.note.contains("diff(R(G))=7"));
    }

    #[test]
    fn budget_exhaustion_is_a_skip() {
        let r = run_proposition(PropId::P03, &fam(FamilySpec::Complete(6)), &SearchOptions::default().with_budget(10));
        assert_eq!(r.status, CheckStatus::Skipped);
        assert!(r.budget_exhausted);
    }
}
