//! Property suites run over seeded instances.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::cohomology::{enumerate_cocycles, h1, verify_exact_sequence, CohomologySet};
use crate::error::{Error, Result};
use crate::exec::{self, Settings};
use crate::forms::{
    cardinality_bound_check, classify_forms, fiber_surjection_check, twisted_form_check, NormalRestriction,
    CARDINALITY_NOTE,
};
use crate::group::Subgroup;
use crate::oracle::{abelian_h1_oracle, brute_h1, brute_z1, instance_generator, Instance};
use crate::torsors::classify_torsors;
use crate::twisting::{fiber_analysis, induced_f_big, transport_twist, twist_bijection, twisted_kernel_size};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Exactness,
    Twisting,
    Forms,
    Torsors,
    Fibers,
    Cardinality,
}

impl Suite {
    pub const ALL: [Suite; 6] =
        [Suite::Exactness, Suite::Twisting, Suite::Forms, Suite::Torsors, Suite::Fibers, Suite::Cardinality];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Exactness => "exactness",
            Suite::Twisting => "twisting",
            Suite::Forms => "forms",
            Suite::Torsors => "torsors",
            Suite::Fibers => "fibers",
            Suite::Cardinality => "cardinality",
        }
    }

    /// Largest `(|G|, |GG|)` the suite runs on.
    pub fn bounds(self) -> (usize, usize) {
        match self {
            Suite::Forms => (8, usize::MAX),
            Suite::Torsors => (6, 4),
            _ => (usize::MAX, usize::MAX),
        }
    }

    fn accepts(self, inst: &Instance) -> bool {
        let (g, gg) = self.bounds();
        inst.action.target().order() <= g && inst.action.acting().order() <= gg
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Format(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    pub seed: u64,
    pub count: usize,
    pub max_g: usize,
    pub max_gg: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { seed: 0, count: 50, max_g: 8, max_gg: 6 }
    }
}

/// One check on one instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseResult {
    pub check: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subgroup: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu: Option<usize>,
    pub pass: bool,
    pub detail: String,
}

impl CaseResult {
    fn new(check: &'static str, subgroup: Option<&Subgroup>, mu: Option<usize>, outcome: Result<(bool, String)>) -> Self {
        let (pass, detail) = match outcome {
            Ok(x) => x,
            Err(e) => (false, e.to_string()),
        };
        CaseResult { check, subgroup: subgroup.map(|n| n.members().to_vec()), mu, pass, detail }
    }
}

/// A failing instance, with enough data to rebuild it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub instance: String,
    pub acting: &'static str,
    pub target: &'static str,
    pub images: Vec<Vec<usize>>,
    pub failures: Vec<CaseResult>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CardinalityRow {
    pub instance: String,
    pub subgroup: Vec<usize>,
    pub h1_size: usize,
    pub quotient_h1_size: usize,
    pub fiber_sizes: Vec<usize>,
    pub n_mu_sizes: Vec<usize>,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub instances: usize,
    /// Instances outside the suite's size bounds or the brute-force cap.
    pub skipped: usize,
    pub checks: usize,
    pub failures: usize,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<CardinalityRow>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<&'static str>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub count: usize,
    pub max_g: usize,
    pub max_gg: usize,
    pub suites: Vec<SuiteReport>,
    pub pass: bool,
}

enum Outcome {
    Ran(Vec<CaseResult>, Vec<CardinalityRow>),
    Skipped,
}

fn run_case(suite: Suite, inst: &Instance, settings: &Settings) -> Outcome {
    if !suite.accepts(inst) {
        return Outcome::Skipped;
    }
    match check_instance(suite, inst, settings) {
        Ok(x) => Outcome::Ran(x.0, x.1),
        Err(Error::SizeLimitExceeded { .. }) => Outcome::Skipped,
        Err(e) => Outcome::Ran(vec![CaseResult::new("setup", None, None, Err(e))], Vec::new()),
    }
}

fn ok(pass: bool, detail: impl Into<String>) -> Result<(bool, String)> {
    Ok((pass, detail.into()))
}

/// All checks of one suite on one instance. Errors from the shared setup
/// (building `H^1`) are returned; errors inside a check become failures.
pub fn check_instance(suite: Suite, inst: &Instance, settings: &Settings) -> Result<(Vec<CaseResult>, Vec<CardinalityRow>)> {
    let a = &inst.action;
    let mut out = Vec::new();
    let mut rows = Vec::new();
    match suite {
        Suite::Exactness => {
            for n in &inst.subgroups {
                let r = verify_exact_sequence(a, n, settings).map(|r| {
                    let nodes = if n.is_normal() { 5 } else { 4 };
                    (r.all_pass() && r.exactness.len() == nodes, format!("{:?}", r.terms))
                });
                out.push(CaseResult::new("exact sequence", Some(n), None, r));
            }
        }
        Suite::Twisting => {
            let h = h1(a, settings)?;
            for (mu, class) in h.classes().iter().enumerate() {
                let r = twist_bijection(a, h.representative(mu)).and_then(|bij| {
                    let th = h1(bij.twisted().action(), settings)?;
                    let f = induced_f_big(&bij, &th, &h)?;
                    ok(th.z1_size() == h.z1_size() && f.apply(CohomologySet::BASEPOINT) == mu, "F_Phi bijective")
                });
                out.push(CaseResult::new("F_Phi", None, Some(mu), r));
                let last = *class.members.last().unwrap();
                let r = transport_twist(a, &h.cocycles()[last], h.representative(mu), h.witness(last), settings)
                    .and_then(|t| ok(t.is_isomorphism(), "C_b transport"));
                out.push(CaseResult::new("transport", None, Some(mu), r));
            }
        }
        Suite::Fibers => {
            let h = h1(a, settings)?;
            for n in inst.normal_subgroups() {
                let r = fiber_analysis(a, n, settings).and_then(|rep| {
                    for (c, entry) in rep.classes.iter().enumerate() {
                        for &m in &h.classes()[c].members {
                            let k = twisted_kernel_size(a, n, &h.cocycles()[m], settings)?;
                            if k != entry.twisted_kernel_size {
                                return ok(false, format!("kernel size depends on representative of class {c}"));
                            }
                        }
                    }
                    ok(rep.all_ok(), format!("{} fibers", rep.projection.image().len()))
                });
                out.push(CaseResult::new("fiber bijection", Some(n), None, r));
                let restriction = NormalRestriction::new(a, n, settings);
                for mu in 0..h.len() {
                    let r = fiber_surjection_check(a, n, &h, mu, settings).and_then(|r| ok(r.pass, "onto fiber"));
                    out.push(CaseResult::new("fiber surjection", Some(n), Some(mu), r));
                    let r = match &restriction {
                        Ok(res) => twisted_form_check(a, res, &h, mu, settings)
                            .and_then(|t| ok(t.pass, format!("{} = {}", t.twisted_size, t.form_size))),
                        Err(e) => Err(e.clone()),
                    };
                    out.push(CaseResult::new("twisted vs form", Some(n), Some(mu), r));
                }
            }
        }
        Suite::Forms => {
            let c = classify_forms(a, settings)?;
            let round = c
                .forms
                .iter()
                .enumerate()
                .all(|(i, f)| f.beta_cocycle(&c.aut).ok().and_then(|x| c.aut_h1.class_of_values(x.values())) == Some(i));
            let pass = c.matching_ok && round && c.census.len() == c.aut_h1.len() && c.forms.len() == c.aut_h1.len();
            out.push(CaseResult::new(
                "form classes",
                None,
                None,
                ok(pass, format!("{} classes, census {}", c.aut_h1.len(), c.census.len())),
            ));
        }
        Suite::Torsors => {
            let c = classify_torsors(a, settings)?;
            out.push(CaseResult::new(
                "torsor census",
                None,
                None,
                ok(c.matches, format!("{} torsors, |H1| = {}", c.torsor_classes, c.h1_size)),
            ));
        }
        Suite::Cardinality => {
            for n in inst.normal_subgroups() {
                match cardinality_bound_check(a, n, settings) {
                    Ok(r) => {
                        rows.push(CardinalityRow {
                            instance: inst.label(),
                            subgroup: n.members().to_vec(),
                            h1_size: r.h1_size,
                            quotient_h1_size: r.quotient_h1_size,
                            fiber_sizes: r.fiber_sizes.clone(),
                            n_mu_sizes: r.n_mu_sizes.clone(),
                            pass: r.pass(),
                        });
                        out.push(CaseResult::new("decomposition", Some(n), None, ok(r.pass(), "")));
                    }
                    Err(e) => out.push(CaseResult::new("decomposition", Some(n), None, Err(e))),
                }
            }
        }
    }
    Ok((out, rows))
}

/// Engine against the brute-force oracles on one instance: equal `Z^1`,
/// equal partitions, and the abelian quotient count when it applies.
pub fn check_oracle(inst: &Instance, settings: &Settings) -> Result<bool> {
    let a = &inst.action;
    let engine = enumerate_cocycles(a, settings)?;
    let brute = brute_z1(a, settings)?;
    if engine.iter().map(|c| c.values().to_vec()).collect::<Vec<_>>() != brute {
        return Ok(false);
    }
    let h = CohomologySet::from_cocycles(a, engine, settings)?;
    let (_, labels) = brute_h1(a, settings)?;
    if !same_partition(&labels, &(0..h.z1_size()).map(|i| h.class_of(i)).collect::<Vec<_>>()) {
        return Ok(false);
    }
    if a.target().is_abelian() {
        let o = abelian_h1_oracle(a, settings)?;
        if o.classes != h.len() || !same_partition(&o.class_of, &labels) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn same_partition(x: &[usize], y: &[usize]) -> bool {
    x.len() == y.len() && (0..x.len()).all(|i| (0..x.len()).all(|j| (x[i] == x[j]) == (y[i] == y[j])))
}

fn run_suite(suite: Suite, instances: &[Instance], settings: &Settings) -> SuiteReport {
    let outcomes = exec::map(settings.exec, instances, |inst| run_case(suite, inst, settings));
    let mut skipped = 0;
    let mut checks = 0;
    let mut failures = 0;
    let mut table = Vec::new();
    let mut worst: Option<(&Instance, Vec<CaseResult>)> = None;
    for (inst, outcome) in instances.iter().zip(outcomes) {
        match outcome {
            Outcome::Skipped => skipped += 1,
            Outcome::Ran(cases, rows) => {
                checks += cases.len();
                table.extend(rows);
                let failed: Vec<CaseResult> = cases.into_iter().filter(|c| !c.pass).collect();
                failures += failed.len();
                if !failed.is_empty() && worst.as_ref().is_none_or(|(w, _)| inst.weight() < w.weight()) {
                    worst = Some((inst, failed));
                }
            }
        }
    }
    let counterexample = worst.map(|(inst, failures)| Counterexample {
        instance: inst.label(),
        acting: inst.acting_name,
        target: inst.target_name,
        images: inst.action.images().to_vec(),
        failures,
    });
    SuiteReport {
        suite: suite.name(),
        instances: instances.len(),
        skipped,
        checks,
        failures,
        pass: failures == 0,
        counterexample,
        table: (suite == Suite::Cardinality).then_some(table),
        note: (suite == Suite::Cardinality).then_some(CARDINALITY_NOTE),
    }
}

/// Generates instances from `config` and runs the given suites on them.
pub fn verify(suites: &[Suite], config: &VerifyConfig, settings: &Settings) -> Result<VerifyReport> {
    let instances = instance_generator(config.seed, config.max_gg, config.max_g, config.count, settings)?;
    let reports: Vec<SuiteReport> = suites.iter().map(|&s| run_suite(s, &instances, settings)).collect();
    Ok(VerifyReport {
        seed: config.seed,
        count: config.count,
        max_g: config.max_g,
        max_gg: config.max_gg,
        pass: reports.iter().all(|r| r.pass),
        suites: reports,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("all".parse::<Suite>().is_err());
    }

    #[test]
    fn small_run_passes() {
        let cfg = VerifyConfig { seed: 3, count: 6, max_g: 6, max_gg: 4 };
        let r = verify(&Suite::ALL, &cfg, &Settings::default()).unwrap();
        for s in &r.suites {
            assert!(s.pass, "{s:?}");
        }
        assert!(r.suites.iter().all(|s| s.checks > 0 || s.skipped == cfg.count));
    }

    #[test]
    fn sequential_and_parallel_reports_agree() {
        let cfg = VerifyConfig { seed: 5, count: 4, max_g: 6, max_gg: 4 };
        let a = verify(&[Suite::Exactness, Suite::Cardinality], &cfg, &Settings::default()).unwrap();
        let b = verify(&[Suite::Exactness, Suite::Cardinality], &cfg, &Settings::sequential()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn oracle_agreement_on_a_few_instances() {
        for inst in instance_generator(9, 4, 8, 8, &Settings::default()).unwrap() {
            assert!(check_oracle(&inst, &Settings::default()).unwrap(), "{}", inst.label());
        }
    }
}
