use super::{Check, LinkData, ObstructionReport, Relation, TestId};
use crate::error::{Error, Result};
use crate::invariants::PositiveDiagramStats;
use crate::linking::ComponentPartition;

/// Which partitions `check_concordance_qp` tries.
#[derive(Debug, Clone)]
pub enum Partitions {
    /// Every partition into at least two blocks (up to 10 components).
    All,
    Explicit(Vec<ComponentPartition>),
}

const MAX_ENUMERATED_COMPONENTS: usize = 10;

fn whole_nu(data: &LinkData) -> Result<&crate::invariants::NuInterval> {
    data.nu_of(&data.whole()).ok_or_else(|| Error::MissingInput("bounds on nu(L)".into()))
}

fn inputs(data: &LinkData, keys: &[&str]) -> Vec<String> {
    keys.iter().filter_map(|k| data.provenance.get(*k).map(|v| format!("{}: {}", k, v))).collect()
}

/// Concordance to a quasi-positive link forces, for every partition into
/// sub-links L_i, nu(L) - sum nu(L_i) <= sum_{i<j} lk(L_i, L_j), as well as
/// 2nu - l = -chi4 and sl_c = 2nu - l.
pub fn check_concordance_qp(data: &LinkData, partitions: &Partitions) -> Result<ObstructionReport> {
    let n = data.components;
    let nu = whole_nu(data)?;
    let parts = match partitions {
        Partitions::All if n > MAX_ENUMERATED_COMPONENTS => {
            return Err(Error::BadParameter(format!(
                "{} components: pass explicit partitions beyond {}",
                n, MAX_ENUMERATED_COMPONENTS
            )))
        }
        Partitions::All => ComponentPartition::all(n).into_iter().filter(|p| p.len() > 1).collect(),
        Partitions::Explicit(v) => v.clone(),
    };
    let mut checks = Vec::new();
    let mut missing = Vec::new();
    for p in &parts {
        if p.components() != n {
            return Err(Error::InvalidPartition(format!("partition {} does not cover {} components", p, n)));
        }
        let mut upper_sum = 0;
        let mut all_exact = nu.exact;
        let mut certified = true;
        for b in p.blocks() {
            match data.nu_of(b).and_then(|v| v.certified_upper2().map(|u| (u, v.exact))) {
                Some((u, exact)) => {
                    upper_sum += u;
                    all_exact &= exact;
                }
                None => certified = false,
            }
        }
        if !certified {
            missing.push(format!("certified upper bounds on nu for the blocks of {}", p));
            continue;
        }
        let check = Check::condition(
            format!("partition {}: 2nu(L) - sum 2nu(L_i) <= 2 lk between blocks", p),
            nu.lower2 - upper_sum,
            Relation::Le,
            2 * data.linking.between_blocks(p),
        );
        if check.holds && !all_exact {
            missing.push(format!("exact nu for partition {}", p));
        } else {
            checks.push(check);
        }
    }
    let l = n as i64;
    match data.chi4 {
        Some(chi4) => match nu.value2() {
            Some(v) => checks.push(Check::condition("2nu - l = -chi4", v - l, Relation::Eq, -chi4)),
            None => {
                let low = Check::condition("2nu - l <= -chi4", nu.lower2 - l, Relation::Le, -chi4);
                let high =
                    nu.certified_upper2().map(|u| Check::condition("2nu - l >= -chi4", u - l, Relation::Ge, -chi4));
                match (low.holds, high) {
                    (false, _) => checks.push(low),
                    (true, Some(h)) if !h.holds => checks.push(h),
                    _ => missing.push("exact nu(L) for the chi4 test".into()),
                }
            }
        },
        None => missing.push("chi4".into()),
    }
    if let Some((slc, _)) = data.slc_bound() {
        let check = Check::condition("sl_c upper bound >= 2nu - l", slc, Relation::Ge, nu.lower2 - l);
        if !check.holds || nu.exact {
            checks.push(check);
        }
    }
    let mut provenance = inputs(data, &["nu", "linking", "chi4", "slc_upper"]);
    if data.slc_upper.is_none() {
        if let Some((_, src)) = data.slc_bound() {
            provenance.push(format!("slc_upper: {}", src));
        }
    }
    Ok(ObstructionReport::conclude(TestId::ConcordanceQp, checks, missing, provenance))
}

/// Quasi-positivity with nu(L) - sum nu(L_i) = sum lk(L_i, L_j) forces
/// 2nu(L_i) - l_i = sl_max(L_i) for every block.
pub fn check_qp(data: &LinkData, partition: &ComponentPartition) -> Result<ObstructionReport> {
    if partition.components() != data.components {
        return Err(Error::InvalidPartition(format!(
            "partition {} does not cover {} components",
            partition, data.components
        )));
    }
    let nu = whole_nu(data)?;
    let mut checks = Vec::new();
    let mut missing = Vec::new();
    let provenance = inputs(data, &["nu", "linking"]);
    let mut block_values = Vec::new();
    for b in partition.blocks() {
        match data.nu_of(b).and_then(|v| v.value2()) {
            Some(v) => block_values.push(v),
            None => missing.push(format!("exact nu for block {:?}", b.iter().map(|c| c + 1).collect::<Vec<_>>())),
        }
    }
    let Some(total) = nu.value2() else {
        missing.insert(0, "exact nu(L)".into());
        return Ok(ObstructionReport::conclude(TestId::Qp, checks, missing, provenance));
    };
    if !missing.is_empty() {
        return Ok(ObstructionReport::conclude(TestId::Qp, checks, missing, provenance));
    }
    let hypothesis = Check::hypothesis(
        format!("partition {}: 2nu(L) - sum 2nu(L_i) = 2 lk between blocks", partition),
        total - block_values.iter().sum::<i64>(),
        Relation::Eq,
        2 * data.linking.between_blocks(partition),
    );
    let applies = hypothesis.holds;
    checks.push(hypothesis);
    if applies {
        for (b, v) in partition.blocks().iter().zip(&block_values) {
            let label: Vec<usize> = b.iter().map(|c| c + 1).collect();
            match data.sl_max_bound(b) {
                Some(s) => checks.push(Check::condition(
                    format!("block {:?}: sl_max upper bound >= 2nu - l", label),
                    s,
                    Relation::Ge,
                    v - b.len() as i64,
                )),
                None => missing.push(format!("sl_max upper bound for block {:?}", label)),
            }
        }
    }
    Ok(ObstructionReport::conclude(TestId::Qp, checks, missing, provenance))
}

/// Positivity forces lk = wsp = ssp = u - sum u(K_i), with every linking number non-negative.
pub fn check_positive(data: &LinkData) -> Result<ObstructionReport> {
    let lk = data.linking.total();
    let mut checks = Vec::new();
    let mut missing = Vec::new();
    if let Some(min) = data.linking.min_entry() {
        checks.push(Check::condition("smallest linking number >= 0", min, Relation::Ge, 0));
    }
    match data.completely_split {
        Some(false) if data.components > 1 => {
            checks.push(Check::condition("not completely split: lk = wsp >= 1", lk, Relation::Ge, 1))
        }
        Some(true) => checks.push(Check::condition("completely split: lk = wsp = 0", lk, Relation::Eq, 0)),
        _ => {}
    }
    let mut equations = 0;
    match data.wsp {
        Some(w) => {
            checks.push(Check::condition("wsp = lk", w, Relation::Eq, lk));
            equations += 1;
        }
        None => missing.push("wsp".into()),
    }
    match data.ssp {
        Some(s) => {
            checks.push(Check::condition("ssp = lk", s, Relation::Eq, lk));
            equations += 1;
        }
        None => missing.push("ssp".into()),
    }
    if let (Some(w), Some(s)) = (data.wsp, data.ssp) {
        checks.push(Check::condition("wsp = ssp", w, Relation::Eq, s));
    }
    let component_sum: Option<i64> = (0..data.components).map(|i| data.component_u(i)).sum();
    match (data.unlinking, component_sum) {
        (Some(u), Some(sum)) => {
            checks.push(Check::condition("u - sum u(K_i) = lk", u - sum, Relation::Eq, lk));
            equations += 1;
        }
        (None, _) => missing.push("unlinking number".into()),
        (_, None) => missing.push("component unknotting numbers".into()),
    }
    if checks.is_empty() {
        return Err(Error::MissingInput("nothing to check for positivity".into()));
    }
    let provenance = inputs(
        data,
        &["linking", "completely_split", "wsp", "ssp", "unlinking", "component_unknotting", "twist_summands"],
    );
    let mut report = ObstructionReport::conclude(TestId::Positive, checks, missing, provenance);
    // satisfied as soon as one of the equations could be tested
    if report.verdict == super::Verdict::Inconclusive && equations > 0 {
        report = ObstructionReport::with_verdict(
            TestId::Positive,
            super::Verdict::Satisfied,
            report.checks,
            report.missing,
            report.provenance,
        );
    }
    Ok(report)
}

/// Positive-braid links satisfy o(D) = sum o(D_i) on any positive diagram,
/// nu(L) - sum nu(K_i) = lk, and u = nu.
pub fn check_positive_braid_stats(stats: &PositiveDiagramStats, unlinking: Option<i64>) -> ObstructionReport {
    let mut checks = vec![
        Check::condition("o(D) = sum o(D_i)", stats.seifert_circles, Relation::Eq, stats.component_circles),
        Check::condition(
            "2nu(L) - sum 2nu(K_i) = 2 lk",
            stats.nu2() - stats.component_nu2(),
            Relation::Eq,
            2 * stats.linking_total,
        ),
    ];
    if let Some(u) = unlinking {
        checks.push(Check::condition("2u = 2nu", 2 * u, Relation::Eq, stats.nu2()));
    }
    let provenance = vec![format!("diagram statistics: {}", stats.source)];
    ObstructionReport::conclude(TestId::PositiveBraid, checks, Vec::new(), provenance)
}

pub fn check_positive_braid(data: &LinkData) -> Result<ObstructionReport> {
    let d = data.diagram.as_ref().ok_or_else(|| Error::MissingInput("positive diagram".into()))?;
    let stats = PositiveDiagramStats::from_diagram(d)?;
    let mut report = check_positive_braid_stats(&stats, data.unlinking);
    report.provenance.extend(inputs(data, &["unlinking"]));
    Ok(report)
}
