//! Acceptance suite: one PASS/FAIL line per criterion. Exits nonzero on any
//! unexpected failure; a known, documented deviation is reported as FAIL but
//! pinned exactly, so any further change still fails the run.

use knotpos_core::braid::{
    braid_linking_matrix, braid_profile, embed_quasipositive, key_lemma_identity, sub_braid, Factor,
};
use knotpos_core::catalog::{builtin_example, bundled_catalog, table_rows, twelve_crossing_stats, Example};
use knotpos_core::diagram::{braid_closure, diagram_profile, LinkDiagram};
use knotpos_core::invariants::{
    nu_bounds, positive_unlinking, positive_unlinking_stats, slc_pure, PositiveDiagramStats, UnlinkingMode,
};
use knotpos_core::obstruct::{
    check_concordance_qp, check_positive, check_positive_braid_stats, classify_alt_pure, classify_small_unlinking,
    LinkData, Partitions, UnlinkingFamily, Verdict,
};
use knotpos_core::{BraidWord, ComponentPartition, LinkingMatrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::{Duration, Instant};

mod common;
use common::{delete_strand, oracle};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn random_braid(rng: &mut ChaCha8Rng, max_strands: usize, max_len: usize, positive: bool) -> BraidWord {
    let n = rng.gen_range(1..=max_strands);
    if n == 1 {
        return BraidWord::identity(1);
    }
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len)
        .map(|_| {
            let g = rng.gen_range(1..n as i32);
            if positive || rng.gen_bool(0.5) {
                g
            } else {
                -g
            }
        })
        .collect();
    BraidWord::new(n, letters).unwrap()
}

fn within(start: Instant, limit: Duration) -> Result<Duration, String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {:?}, limit {:?}", t, limit))?;
    Ok(t)
}

fn braid(s: &str) -> BraidWord {
    s.parse().unwrap()
}

fn criterion1() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut cases = 0;
    for _ in 0..1000 {
        let b = random_braid(&mut rng, 8, 40, false);
        let o = oracle(&b);
        let m = o.components;
        for mask in 1u32..(1 << m) - 1 {
            // each unordered bipartition once
            if mask & 1 == 0 {
                continue;
            }
            let a: Vec<usize> = (0..m).filter(|&i| mask >> i & 1 == 1).collect();
            let c: Vec<usize> = (0..m).filter(|&i| mask >> i & 1 == 0).collect();
            let p = ComponentPartition::new(m, vec![a, c]).unwrap();
            let r = key_lemma_identity(&b, &p).map_err(|e| e.to_string())?;
            let mixed = o.mixed_between(&p.block_of());
            ensure(r.holds && r.lhs == mixed && r.rhs == mixed, || {
                format!("{} partition {}: {:?}, oracle {}", b, p, r, mixed)
            })?;
            cases += 1;
        }
    }
    let t = within(start, Duration::from_secs(5))?;
    Ok(format!("{} (braid, bipartition) pairs hold, {:.2?}", cases, t))
}

fn criterion2() -> Outcome {
    let Example::Braid(b) = builtin_example("fig3", 1).unwrap() else { return Err("fig3 is not a braid".into()) };
    let p = braid_profile(&b);
    ensure(p.writhe == 8 && p.self_linking == 4, || format!("w = {}, sl = {}", p.writhe, p.self_linking))?;
    ensure(p.component_cycles == vec![vec![1, 4], vec![2, 3]], || format!("cycles {:?}", p.component_cycles))?;
    let s0 = sub_braid(&b, &[0]).unwrap();
    let s1 = sub_braid(&b, &[1]).unwrap();
    ensure(s0.letters() == [1] && s1.letters() == [1, 1, 1], || format!("sub-braids {} and {}", s0, s1))?;
    let lk = braid_linking_matrix(&b).unwrap();
    ensure(lk.get(0, 1) == 2, || format!("lk = {}", lk.get(0, 1)))?;
    let d = diagram_profile(&braid_closure(&b));
    ensure((d.components, d.crossings, d.seifert_circles) == (2, 8, 4), || format!("{:?}", d))?;
    Ok("w = 8, sl = 4, cycles {1,4} {2,3}, sub-braids [1] and [1,1,1], lk = 2".into())
}

fn criterion3() -> Outcome {
    for n in 1..=6usize {
        let Example::Braid(b) = builtin_example("torus2n", n).unwrap() else { unreachable!() };
        let d = braid_closure(&b);
        let nu = nu_bounds(&d).map_err(|e| e.to_string())?;
        ensure(nu.exact && nu.lower2 == 2 * n as i64, || format!("n = {}: {:?}", n, nu))?;
        let u = positive_unlinking(&d, UnlinkingMode::Whole).map_err(|e| e.to_string())?;
        ensure(u == n as i64, || format!("n = {}: u = {}", n, u))?;
        let data = LinkData::from_braid(&b).unwrap().with_unlinking(u, "u = nu");
        let r = check_positive(&data).map_err(|e| e.to_string())?;
        let cert = r.checks.iter().find(|c| c.label.starts_with("u - sum"));
        ensure(r.verdict == Verdict::Satisfied, || format!("n = {}: {}", n, r))?;
        ensure(cert.is_some_and(|c| c.lhs == n as i64 && c.rhs == n as i64 && c.holds), || {
            format!("n = {}: {}", n, r)
        })?;
    }
    Ok("n = 1..6: 2nu = 2n exact, u = n, positivity SATISFIED with u - 0 = lk = n".into())
}

fn criterion4() -> Outcome {
    for k in 1..=5usize {
        let d = builtin_example("Dk", k).unwrap().diagram();
        let nu = nu_bounds(&d).map_err(|e| e.to_string())?;
        ensure(nu.exact && nu.lower2 == 2 * k as i64, || format!("k = {}: {:?}", k, nu))?;
        let data = LinkData::from_diagram(&d).unwrap();
        ensure(data.is_unknotted(0) && data.is_unknotted(1) && data.linking.total() == 0, || {
            format!("k = {}: components", k)
        })?;
        let r = check_concordance_qp(&data, &Partitions::All).map_err(|e| e.to_string())?;
        ensure(r.verdict == Verdict::Violated && r.recheck(), || format!("k = {}: {}", k, r))?;
        if k == 1 {
            let p = diagram_profile(&d);
            ensure((p.crossings, p.is_alternating) == (5, true), || {
                "k = 1 is not the 5-crossing Whitehead diagram".into()
            })?;
            ensure(r.conclusion == "not concordant to any quasi-positive link", || r.conclusion.clone())?;
        }
    }
    Ok("k = 1..5: nu = k exact, concordance to quasi-positive VIOLATED (Whitehead link at k = 1)".into())
}

fn criterion5() -> Outcome {
    let Example::Braid(b) = builtin_example("borromean", 1).unwrap() else { unreachable!() };
    let v = classify_alt_pure(&b).map_err(|e| e.to_string())?;
    ensure(!v.qp_concordant, || "classified as concordant to quasi-positive".into())?;
    let slc = slc_pure(&b).map_err(|e| e.to_string())?;
    ensure(slc.value == -3, || format!("sl_c = {}", slc.value))?;
    let r = check_concordance_qp(&LinkData::from_braid(&b).unwrap(), &Partitions::All).map_err(|e| e.to_string())?;
    ensure(r.verdict == Verdict::Violated && r.recheck(), || r.to_string())?;
    Ok("NOT_QP_CONCORDANT, sl_c = -3, concordance test VIOLATED".into())
}

fn criterion6() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut negatives = 0;
    for _ in 0..500 {
        let b = random_braid(&mut rng, 6, 30, false);
        let n = b.strands();
        let e = embed_quasipositive(&b);
        for r in &e.insertions {
            let w = BraidWord::new(n + 1, r.word.clone()).unwrap();
            ensure(braid_profile(&w).is_pure, || format!("{}: insertion {:?} not pure", b, r.word))?;
        }
        ensure(delete_strand(&e.output, n) == b, || format!("{}: deletion does not recover the input", b))?;
        let product: Vec<i32> = e.decomposition.iter().flat_map(Factor::letters).collect();
        ensure(product == e.output.letters(), || format!("{}: decomposition product differs", b))?;
        ensure(e.decomposition.iter().all(Factor::witness_holds), || format!("{}: witness fails", b))?;
        let expected: i64 = b.letters().iter().filter(|&&l| l < 0).map(|&l| n as i64 - l.abs() as i64 + 1).sum();
        let lk = braid_linking_matrix(&e.output).unwrap();
        let new = e.output.component_cycles().len() - 1;
        let measured: i64 = lk.rows()[new].iter().sum();
        ensure(e.expected_linking() == expected && measured == expected, || {
            format!("{}: lk {} / {} / {}", b, e.expected_linking(), measured, expected)
        })?;
        negatives += e.insertions.len();
    }
    let t = within(start, Duration::from_secs(5))?;
    Ok(format!("500 braids, {} insertions, all invariants and lk hold, {:.2?}", negatives, t))
}

/// Table rows as printed in the source: name, P, P-obstructed, BP, BP-obstructed.
const EXPECTED_TABLE: [[&str; 5]; 44] = [
    ["L2a1{0}", "✓", "—", "✓", "—"],
    ["L2a1{1}", "✓", "—", "✓", "—"],
    ["L4a1{0}", "✓", "—", "✗", "✓"],
    ["L4a1{1}", "✓", "—", "✓", "—"],
    ["L5a1{0}", "✗", "✓", "✗", "—"],
    ["L5a1{1}", "✗", "✓", "✗", "—"],
    ["L6a1{0}", "✗^σ", "✗", "✗", "—"],
    ["L6a1{1}", "✓", "—", "✗^f", "✗"],
    ["L6a2{0}", "✓", "—", "✗", "✓"],
    ["L6a2{1}", "✓", "—", "✗", "✓"],
    ["L6a3{0}", "✓", "—", "✓", "—"],
    ["L6a3{1}", "✓", "—", "✗", "✓"],
    ["L6a4{0,0}", "✗", "✓", "✗", "—"],
    ["L6a4{1,0}", "✗", "✓", "✗", "—"],
    ["L6a4{0,1}", "✗", "✓", "✗", "—"],
    ["L6a4{1,1}", "✗", "✓", "✗", "—"],
    ["L6a5{0,0}", "✓", "—", "✗^f", "✗"],
    ["L6a5{1,0}", "✗", "✓", "✗", "—"],
    ["L6a5{0,1}", "✗", "✓", "✗", "—"],
    ["L6a5{1,1}", "✗", "✓", "✗", "—"],
    ["L6n1{0,0}", "✗", "✓", "✗", "—"],
    ["L6n1{1,0}", "✗", "✓", "✗", "—"],
    ["L6n1{0,1}", "✓", "—", "✓", "—"],
    ["L6n1{1,1}", "✗", "✓", "✗", "—"],
    ["L7a1{0}", "✗", "✓", "✗", "—"],
    ["L7a1{1}", "✗", "✓", "✗", "—"],
    ["L7a2{0}", "✓", "—", "✗", "✓"],
    ["L7a2{1}", "✗^c", "✗", "✗", "—"],
    ["L7a3{0}", "✗", "✓", "✗", "—"],
    ["L7a3{1}", "✗", "✓", "✗", "—"],
    ["L7a4{0}", "✗", "✓", "✗", "—"],
    ["L7a4{1}", "✗", "✓", "✗", "—"],
    ["L7a5{0}", "✗^σ", "✗", "✗", "—"],
    ["L7a5{1}", "✗^σ", "✗", "✗", "—"],
    ["L7a6{0}", "✗", "✓", "✗", "—"],
    ["L7a6{1}", "✗", "✓", "✗", "—"],
    ["L7a7{0,0}", "✗", "✓", "✗", "—"],
    ["L7a7{1,0}", "✗", "✓", "✗", "—"],
    ["L7a7{0,1}", "✗", "✓", "✗", "—"],
    ["L7a7{1,1}", "✓", "—", "✗^f", "✗"],
    ["L7n1{0}", "✓", "—", "✓", "—"],
    ["L7n1{1}", "✗^c", "✗", "✗", "—"],
    ["L7n2{0}", "✗", "✓", "✗", "—"],
    ["L7n2{1}", "✗", "✓", "✗", "—"],
];

/// Cells where the computation disagrees with the printed table: the
/// braid-positivity test fires on this row (2nu = 4 on its positive diagram
/// while 2 lk = 6), so no fibredness fallback is needed.
const KNOWN_TABLE_DEVIATIONS: [(&str, usize, &str, &str); 2] =
    [("L6a5{0,0}", 3, "✗^f", "✗"), ("L6a5{0,0}", 4, "✗", "✓")];

/// Returns (ok, line); ok means the outcome is exactly the pinned one.
fn criterion7() -> (bool, String) {
    let start = Instant::now();
    let entries = bundled_catalog();
    let analyses = match table_rows(&entries) {
        Ok(a) => a,
        Err(e) => return (false, format!("FAIL {}", e)),
    };
    let elapsed = start.elapsed();
    if analyses.len() != 44 {
        return (false, format!("FAIL {} rows", analyses.len()));
    }
    let base = |s: &str| s.split('^').next().unwrap().to_string();
    let mut deviations = Vec::new();
    let mut expectation_ok = 0;
    for (a, want) in analyses.iter().zip(EXPECTED_TABLE.iter()) {
        let got = a.row.cells();
        if got[0] != want[0] {
            return (false, format!("FAIL row order: {} vs {}", got[0], want[0]));
        }
        if base(&got[1]) == base(want[1]) && base(&got[3]) == base(want[3]) {
            expectation_ok += 1;
        }
        for col in 1..5 {
            if got[col] != want[col] {
                deviations.push((want[0].to_string(), col, want[col].to_string(), got[col].clone()));
            }
        }
    }
    let pinned: Vec<_> =
        KNOWN_TABLE_DEVIATIONS.iter().map(|(n, c, w, g)| (n.to_string(), *c, w.to_string(), g.to_string())).collect();
    let fast = elapsed < Duration::from_secs(10);
    let rows_differing = {
        let mut names: Vec<&String> = deviations.iter().map(|d| &d.0).collect();
        names.dedup();
        names.len()
    };
    let detail = deviations
        .iter()
        .map(|(n, c, w, g)| format!("{} col {}: expected {} got {}", n, c, w, g))
        .collect::<Vec<_>>()
        .join("; ");
    let summary = format!(
        "P/BP marks agree on {}/44 rows; {} of 44 rows differ in the printed cells ({}); {:.2?}",
        expectation_ok, rows_differing, detail, elapsed
    );
    if deviations.is_empty() && expectation_ok == 44 && fast {
        return (true, format!("PASS {}", summary));
    }
    let as_pinned = deviations == pinned && expectation_ok == 44 && fast;
    let note = if as_pinned {
        " [known: the printed BP-obstructed mark for L6a5{0,0} contradicts the braid-positivity test on its positive diagram]"
    } else {
        " [unexpected]"
    };
    (as_pinned, format!("FAIL {}{}", summary, note))
}

fn criterion8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..200 {
        let b = random_braid(&mut rng, 6, 30, true);
        let s = PositiveDiagramStats::from_diagram(&braid_closure(&b)).map_err(|e| e.to_string())?;
        ensure(s.seifert_circles == s.component_circles, || format!("{}: {:?}", b, s))?;
        let r = check_positive_braid_stats(&s, None);
        ensure(r.verdict == Verdict::Satisfied, || format!("{}: {}", b, r))?;
    }
    let s = twelve_crossing_stats();
    ensure(
        (s.crossings, s.seifert_circles, s.component_circles, s.components, s.linking_total) == (12, 6, 4, 2, 4),
        || format!("{:?}", s),
    )?;
    let u = positive_unlinking_stats(&s, UnlinkingMode::PerComponent).map_err(|e| e.to_string())?;
    ensure(u == 5, || format!("u = {}", u))?;
    let r = check_positive_braid_stats(&s, Some(u));
    ensure(r.verdict == Verdict::Violated && r.recheck(), || r.to_string())?;
    Ok("200 positive closures with o = sum o_i; 12-crossing example: u = 5, braid-positivity VIOLATED".into())
}

fn criterion9() -> Outcome {
    let mut corpus: Vec<(String, LinkDiagram)> = Vec::new();
    for e in bundled_catalog() {
        let d = e.diagram().map_err(|x| x.to_string())?;
        corpus.push((e.name.clone(), d.mirror()));
        corpus.push((e.name, d));
    }
    for name in ["fig3", "borromean", "hopf"] {
        corpus.push((name.into(), builtin_example(name, 1).unwrap().diagram()));
    }
    for k in 1..=5 {
        corpus.push((format!("D({})", k), builtin_example("Dk", k).unwrap().diagram()));
        corpus.push((format!("T(2,{})", 2 * k), builtin_example("torus2n", k).unwrap().diagram()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for i in 0..200 {
        let b = random_braid(&mut rng, 6, 20, i % 2 == 0);
        corpus.push((b.to_string(), braid_closure(&b)));
    }
    let mut checked = 0;
    let mut conflicts = Vec::new();
    for (name, d) in &corpus {
        let p = diagram_profile(d);
        if !(p.is_alternating || p.is_positive || d.is_negative()) {
            continue;
        }
        let nu = nu_bounds(d).map_err(|e| format!("{}: {}", name, e))?;
        let lower_formula = p.writhe - p.seifert_circles as i64 + 2 * p.s_plus as i64 + p.components as i64
            - 2 * p.split_components as i64;
        ensure(nu.exact && nu.upper2 == nu.lower2 && nu.lower2 == lower_formula, || format!("{}: {:?}", name, nu))?;
        if nu.verbatim_conflict() {
            conflicts.push(name.clone());
        }
        checked += 1;
    }
    let hopf = nu_bounds(&braid_closure(&braid("B2: 1 1"))).unwrap();
    ensure(hopf.lower2 == 2 && hopf.verbatim_upper2 == 0, || format!("Hopf: {:?}", hopf))?;
    Ok(format!(
        "{} alternating or positive diagrams exact, lower formula = 2nu; logged: printed upper bound below the exact value on {} of them, canonical case positive Hopf closure (2nu = 2, printed upper 0)",
        checked,
        conflicts.len()
    ))
}

fn criterion10() -> Outcome {
    let with = |b: &str, twists: Vec<u32>| -> LinkData {
        let data = LinkData::from_braid(&braid(b)).unwrap();
        data.with_twist_summands(twists, "twist-knot summands").unwrap()
    };
    let cases: Vec<(&str, LinkData, UnlinkingFamily)> = vec![
        ("Hopf", with("B2: 1 1", vec![0, 0]), UnlinkingFamily::HopfSplitUnlink),
        ("Hopf + unknot", with("B3: 1 1", vec![0, 0, 0]), UnlinkingFamily::HopfSplitUnlink),
        ("trefoil", with("B2: 1 1 1", vec![1]), UnlinkingFamily::TwistKnotSplitUnlink),
        (
            "5_2 + unknot",
            LinkData::new(LinkingMatrix::zeros(2)).with_twist_summands(vec![1, 0], "5_2 is a twist knot").unwrap(),
            UnlinkingFamily::TwistKnotSplitUnlink,
        ),
        ("T(2,4)", with("B2: 1 1 1 1", vec![0, 0]), UnlinkingFamily::LinkingTwo),
        ("Hopf # trefoil", with("B3: 1 1 1 2 2", vec![1, 0]), UnlinkingFamily::HopfSumTwist),
        ("Hopf + trefoil", with("B4: 1 1 3 3 3", vec![0, 0, 1]), UnlinkingFamily::HopfSplitTwist),
        ("trefoil + trefoil", with("B4: 1 1 1 3 3 3", vec![1, 1]), UnlinkingFamily::TwoTwistKnots),
        ("trefoil # trefoil", with("B3: 1 1 1 2 2 2", vec![2]), UnlinkingFamily::KnotUnknottingTwo),
    ];
    let mut labels = Vec::new();
    for (name, data, want) in cases {
        // the supplied unlinking number agrees with u = lk + sum u(K_i)
        let u = data.linking.total() + (0..data.components).map(|i| data.component_u(i).unwrap()).sum::<i64>();
        let got =
            classify_small_unlinking(&data.with_unlinking(u, "u = lk + sum u(K_i)")).map_err(|e| e.to_string())?;
        ensure(got == want, || format!("{}: {:?}, expected {:?}", name, got, want))?;
        labels.push(format!("{} {}", name, got.label()));
    }
    Ok(labels.join(", "))
}

fn main() {
    let mut lines: Vec<(usize, bool, String)> = Vec::new();
    let outcomes: [(usize, fn() -> Outcome); 6] =
        [(1, criterion1), (2, criterion2), (3, criterion3), (4, criterion4), (5, criterion5), (6, criterion6)];
    for (n, f) in outcomes {
        lines.push(match f() {
            Ok(msg) => (n, true, format!("PASS {}", msg)),
            Err(msg) => (n, false, format!("FAIL {}", msg)),
        });
    }
    let (pinned, line) = criterion7();
    lines.push((7, pinned, line));
    let outcomes: [(usize, fn() -> Outcome); 3] = [(8, criterion8), (9, criterion9), (10, criterion10)];
    for (n, f) in outcomes {
        lines.push(match f() {
            Ok(msg) => (n, true, format!("PASS {}", msg)),
            Err(msg) => (n, false, format!("FAIL {}", msg)),
        });
    }
    let mut unexpected = 0;
    for (n, ok, line) in &lines {
        println!("criterion {}: {}", n, line);
        if !ok {
            unexpected += 1;
        }
    }
    if unexpected > 0 {
        println!("{} criteria failed unexpectedly", unexpected);
        std::process::exit(1);
    }
}
