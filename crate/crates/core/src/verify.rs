//! Cross-checks between independently computed quantities, runnable from the CLI.

use std::fmt;

use num_bigint::BigUint;
use rand::Rng;

use crate::error::Result;
use crate::generate::{connected_4regular_multigraphs, random_4regular, rng};
use crate::graph::LabelledGraph;
use crate::isotropic::{e_of_graph, DEFAULT_EULERIAN_CAP};
use crate::mu::{in_class_mu, in_class_mu_all_cycles, k_index};
use crate::orbit::{enumerate_orbit, DEFAULT_ORBIT_CAP};
use crate::quantum::{apply_lc_unitary, check_stabilizer, graph_state, overlap, TOLERANCE};
use crate::reduction::{count_tours, Caps, Method};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Quantum,
    Oracles,
    All,
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub suite: Suite,
    pub max_n: usize,
    pub seed: u64,
    /// Deliberately corrupts one side of the `e = l·k` comparison.
    pub inject_fault: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub cases: u64,
    /// First failing case, if any.
    pub failure: Option<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "PASS {} ({} cases)", self.name, self.cases),
            Some(why) => write!(f, "FAIL {} ({} cases): {why}", self.name, self.cases),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct VerifyReport {
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }
}

struct Check {
    name: &'static str,
    cases: u64,
    failure: Option<String>,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            cases: 0,
            failure: None,
        }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(describe());
        }
    }

    fn finish(self) -> CheckResult {
        CheckResult {
            name: self.name,
            cases: self.cases,
            failure: self.failure,
        }
    }
}

fn graphs_up_to(max_n: usize) -> impl Iterator<Item = LabelledGraph> {
    (1..=max_n).flat_map(LabelledGraph::all_on)
}

pub fn run(opts: &VerifyOptions) -> Result<VerifyReport> {
    let mut report = VerifyReport::default();
    if matches!(opts.suite, Suite::Oracles | Suite::All) {
        oracle_checks(opts, &mut report.checks)?;
    }
    if matches!(opts.suite, Suite::Quantum | Suite::All) {
        quantum_checks(opts, &mut report.checks)?;
    }
    Ok(report)
}

fn oracle_checks(opts: &VerifyOptions, out: &mut Vec<CheckResult>) -> Result<()> {
    let max_n = opts.max_n.min(6);

    let mut main_eq = Check::new("e(G) = l(G) * k(G) on all graphs");
    let mut invariance = Check::new("k and e constant on LC orbits");
    for g in graphs_up_to(max_n.min(5)) {
        let orbit = enumerate_orbit(&g, true, DEFAULT_ORBIT_CAP)?;
        let e = e_of_graph(&g, DEFAULT_EULERIAN_CAP)?;
        let mut k = k_index(&g);
        if opts.inject_fault {
            k += 1u32;
        }
        main_eq.record(BigUint::from(e) == &k * orbit.size, || {
            format!("{g:?}: e = {e}, l = {}, k = {k}", orbit.size)
        });
        let members = orbit.members.unwrap_or_default();
        let k0 = k_index(&g);
        let constant = members.iter().all(|m| k_index(m) == k0);
        invariance.record(constant, || format!("k varies on the orbit of {g:?}"));
    }
    out.push(main_eq.finish());
    out.push(invariance.finish());

    let mut triple = Check::new("tours = Eulerian vectors = l*k on 4-regular multigraphs");
    let mut instances = Vec::new();
    for k in 1..=max_n.min(4) {
        instances.extend(connected_4regular_multigraphs(k));
    }
    let mut r = rng(opts.seed);
    for _ in 0..20 {
        let k = r.gen_range(1..=max_n.max(1));
        instances.push(random_4regular(k, &mut r));
    }
    for f in &instances {
        let report = count_tours(f, "verify", Method::Both, Caps::default())?;
        triple.record(report.consistent(), || {
            format!("{}counts {:?}", f.to_text(), report.counts())
        });
    }
    out.push(triple.finish());

    let mut mu = Check::new("class-mu basis check = all-cycles check");
    for g in graphs_up_to(max_n) {
        if g.edge_count() + g.components().len() > g.n() + 10 {
            continue;
        }
        let basis = in_class_mu(&g).is_ok();
        let all = in_class_mu_all_cycles(&g)?;
        mu.record(basis == all, || {
            format!("{g:?}: basis {basis}, all cycles {all}")
        });
    }
    out.push(mu.finish());
    Ok(())
}

fn quantum_checks(opts: &VerifyOptions, out: &mut Vec<CheckResult>) -> Result<()> {
    let max_n = opts.max_n.min(6);

    let mut stab = Check::new("stabilizer generators fix |G>");
    for g in graphs_up_to(max_n) {
        let ok = check_stabilizer(&g)?;
        stab.record(ok, || format!("{g:?}"));
    }
    out.push(stab.finish());

    let mut lcu = Check::new("U_v|G> = |tau_v(G)> up to phase on orbit edges");
    for g in graphs_up_to(max_n.min(5)) {
        for v in 0..g.n() {
            let lhs = apply_lc_unitary(&g, v)?;
            let rhs = graph_state(&g.local_complement(v)?)?;
            lcu.record(rhs.eq_up_to_phase(&lhs, TOLERANCE), || {
                format!("{g:?} at vertex {v}")
            });
        }
    }
    out.push(lcu.finish());

    let mut distinct = Check::new("|<G|G'>| < 1 for distinct graphs; overlap routes agree");
    for n in 1..=max_n.min(4) {
        let all: Vec<LabelledGraph> = LabelledGraph::all_on(n).collect();
        for (i, a) in all.iter().enumerate() {
            for b in &all[i..] {
                let o = overlap(a, b)?;
                let size = o.direct.norm();
                let ok = o.routes_agree(TOLERANCE)
                    && if a == b {
                        (size - 1.0).abs() <= TOLERANCE
                    } else {
                        size < 1.0 - TOLERANCE
                    };
                distinct.record(ok, || format!("{a:?} vs {b:?}: {:?}", o));
            }
        }
    }
    out.push(distinct.finish());
    Ok(())
}
