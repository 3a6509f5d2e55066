//! Counting Eulerian tours of a 4-regular multigraph through `l(G) · k(G)`
//! of an alternance graph, with optional brute-force cross-checks.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::euler::{
    alternance_graph, count_eulerian_tours, double_occurrence_word, find_eulerian_tour,
    DoubleOccurrenceWord, MultiGraph4, Tour, DEFAULT_TOUR_CAP,
};
use crate::formats::to_graph6;
use crate::graph::LabelledGraph;
use crate::isotropic::{e_of_graph, DEFAULT_EULERIAN_CAP};
use crate::mu::k_index;
use crate::orbit::{orbit_size, DEFAULT_ORBIT_CAP};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    /// Tour, alternance graph, orbit size times index.
    Reduction,
    /// Enumerate transition systems and count Eulerian vectors.
    Brute,
    Both,
}

#[derive(Clone, Copy, Debug)]
pub struct Caps {
    pub orbit: u64,
    pub brute_vertices: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            orbit: DEFAULT_ORBIT_CAP,
            brute_vertices: DEFAULT_TOUR_CAP.min(DEFAULT_EULERIAN_CAP),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ReductionReport {
    pub input: String,
    pub vertices: usize,
    pub edges: usize,
    pub tour: Tour,
    pub word: DoubleOccurrenceWord,
    pub alternance: LabelledGraph,
    pub orbit_size: Option<u64>,
    pub k: Option<BigUint>,
    pub tours_brute: Option<u64>,
    pub eulerian_vectors: Option<u64>,
    pub timings: Vec<(&'static str, Duration)>,
}

impl ReductionReport {
    pub fn product(&self) -> Option<BigUint> {
        Some(BigUint::from(self.orbit_size?) * self.k.as_ref()?)
    }

    /// Every computed count, labelled.
    pub fn counts(&self) -> Vec<(&'static str, BigUint)> {
        let mut out = Vec::new();
        if let Some(p) = self.product() {
            out.push(("l*k", p));
        }
        if let Some(t) = self.tours_brute {
            out.push(("transition-system tours", t.into()));
        }
        if let Some(e) = self.eulerian_vectors {
            out.push(("Eulerian vectors", e.into()));
        }
        out
    }

    /// True when all computed counts coincide.
    pub fn consistent(&self) -> bool {
        let counts = self.counts();
        counts.windows(2).all(|w| w[0].1 == w[1].1)
    }

    /// The agreed tour count, if any count was computed and all agree.
    pub fn tour_count(&self) -> Option<BigUint> {
        if self.consistent() {
            self.counts().into_iter().next().map(|(_, c)| c)
        } else {
            None
        }
    }

    /// Structured `key: value` report. Timings are included only on request
    /// so that repeated runs produce identical bytes.
    pub fn to_kv(&self, with_timings: bool) -> String {
        let mut s = String::new();
        let opt = |x: Option<String>| x.unwrap_or_else(|| "-".into());
        let _ = writeln!(s, "schema: {SCHEMA_VERSION}");
        let _ = writeln!(s, "command: count-tours");
        let _ = writeln!(s, "input: {}", self.input);
        let _ = writeln!(s, "vertices: {}", self.vertices);
        let _ = writeln!(s, "edges: {}", self.edges);
        let _ = writeln!(s, "tour: {}", self.tour);
        let _ = writeln!(s, "word: {}", self.word);
        let _ = writeln!(s, "alternance_graph6: {}", to_graph6(&self.alternance));
        let _ = writeln!(s, "l: {}", opt(self.orbit_size.map(|x| x.to_string())));
        let _ = writeln!(s, "k: {}", opt(self.k.as_ref().map(|x| x.to_string())));
        let _ = writeln!(
            s,
            "l_times_k: {}",
            opt(self.product().map(|x| x.to_string()))
        );
        let _ = writeln!(
            s,
            "tours_brute: {}",
            opt(self.tours_brute.map(|x| x.to_string()))
        );
        let _ = writeln!(
            s,
            "eulerian_vectors: {}",
            opt(self.eulerian_vectors.map(|x| x.to_string()))
        );
        let _ = writeln!(
            s,
            "status: {}",
            if self.consistent() { "OK" } else { "FAILED" }
        );
        if with_timings {
            for (stage, d) in &self.timings {
                let _ = writeln!(s, "time_{stage}_us: {}", d.as_micros());
            }
        }
        s
    }
}

fn timed<T>(
    timings: &mut Vec<(&'static str, Duration)>,
    stage: &'static str,
    f: impl FnOnce() -> T,
) -> T {
    let start = Instant::now();
    let out = f();
    timings.push((stage, start.elapsed()));
    out
}

/// Runs the reduction on `f`. The tour, word and alternance graph are always
/// produced; `method` selects which counts are computed.
pub fn count_tours(
    f: &MultiGraph4,
    input: &str,
    method: Method,
    caps: Caps,
) -> Result<ReductionReport> {
    if !f.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut timings = Vec::new();
    let tour = timed(&mut timings, "tour", || find_eulerian_tour(f))?;
    let word = double_occurrence_word(f, &tour)?;
    let alternance = timed(&mut timings, "alternance", || alternance_graph(&word));

    let (mut orbit, mut k, mut tours_brute, mut eulerian_vectors) = (None, None, None, None);
    if matches!(method, Method::Reduction | Method::Both) {
        orbit = Some(timed(&mut timings, "orbit", || {
            orbit_size(&alternance, caps.orbit)
        })?);
        k = Some(timed(&mut timings, "k_index", || k_index(&alternance)));
    }
    if matches!(method, Method::Brute | Method::Both) {
        tours_brute = Some(timed(&mut timings, "transition_systems", || {
            count_eulerian_tours(f, caps.brute_vertices)
        })?);
        eulerian_vectors = Some(timed(&mut timings, "eulerian_vectors", || {
            e_of_graph(&alternance, caps.brute_vertices)
        })?);
    }
    Ok(ReductionReport {
        input: input.to_string(),
        vertices: f.vertex_count(),
        edges: f.edges().len(),
        tour,
        word,
        alternance,
        orbit_size: orbit,
        k,
        tours_brute,
        eulerian_vectors,
        timings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn micro_instances_agree() {
        let dl = MultiGraph4::new(1, vec![(0, 0), (0, 0)]).unwrap();
        let r = count_tours(&dl, "double loop", Method::Both, Caps::default()).unwrap();
        assert_eq!(r.tour_count(), Some(BigUint::from(2u32)));

        let quad = MultiGraph4::new(2, vec![(0, 1); 4]).unwrap();
        let r = count_tours(&quad, "quad", Method::Both, Caps::default()).unwrap();
        assert_eq!(r.orbit_size, Some(1));
        assert_eq!(r.k, Some(BigUint::from(6u32)));
        assert_eq!(r.tour_count(), Some(BigUint::from(6u32)));
        assert!(r.to_kv(false).contains("status: OK"));
    }

    #[test]
    fn kv_report_is_deterministic_without_timings() {
        let quad = MultiGraph4::new(2, vec![(0, 1); 4]).unwrap();
        let a = count_tours(&quad, "q", Method::Both, Caps::default()).unwrap();
        let b = count_tours(&quad, "q", Method::Both, Caps::default()).unwrap();
        assert_eq!(a.to_kv(false), b.to_kv(false));
        assert!(a.to_kv(true).contains("time_k_index_us"));
        assert!(a.to_kv(false).starts_with("schema: 1\n"));
    }

    #[test]
    fn mismatch_marks_failure() {
        let quad = MultiGraph4::new(2, vec![(0, 1); 4]).unwrap();
        let mut r = count_tours(&quad, "q", Method::Both, Caps::default()).unwrap();
        r.tours_brute = Some(5);
        assert!(!r.consistent());
        assert!(r.to_kv(false).contains("status: FAILED"));
    }
}
