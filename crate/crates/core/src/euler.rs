//! 4-regular multigraphs, transition systems, Eulerian decompositions and
//! tours, double-occurrence words and alternance graphs.
//!
//! Half-edge `h` belongs to edge `h / 2`; `2e` sits at the first endpoint of
//! edge `e` and `2e + 1` at the second. Each vertex lists its four half-edges
//! in edge-insertion order; that list is the ordering `T` used to encode
//! transitions as GF(4) elements.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::formats::parse_numbers;
use crate::gf4::{GF4Vector, GF4};
use crate::graph::LabelledGraph;
use crate::isotropic::{complete_vector_from_index, is_complete};

/// Largest vertex count for which transition systems are enumerated by default.
pub const DEFAULT_TOUR_CAP: usize = 13;

/// Partner slot under each pairing choice 1, w, w^2:
/// 1 -> (0 1)(2 3), w -> (0 2)(1 3), w^2 -> (0 3)(1 2).
const PARTNER: [[usize; 4]; 3] = [[1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]];

fn choice_index(x: GF4) -> usize {
    match x {
        GF4::One => 0,
        GF4::W => 1,
        GF4::W2 => 2,
        GF4::Zero => unreachable!("transitions are encoded by nonzero elements"),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiGraph4 {
    k: usize,
    edges: Vec<(usize, usize)>,
    slots: Vec<[usize; 4]>,
    slot_of: Vec<usize>,
}

impl MultiGraph4 {
    /// Builds a multigraph from an edge list; `(v, v)` is a loop.
    /// Fails unless every vertex has degree exactly 4.
    pub fn new(k: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut incident: Vec<Vec<usize>> = vec![Vec::with_capacity(4); k];
        for (e, &(u, v)) in edges.iter().enumerate() {
            for (side, x) in [(0, u), (1, v)] {
                if x >= k {
                    return Err(Error::VertexOutOfRange { vertex: x, n: k });
                }
                incident[x].push(2 * e + side);
            }
        }
        let offending: Vec<(usize, usize)> = incident
            .iter()
            .enumerate()
            .filter(|(_, hs)| hs.len() != 4)
            .map(|(v, hs)| (v, hs.len()))
            .collect();
        if !offending.is_empty() {
            return Err(Error::NotFourRegular { offending });
        }
        let mut slot_of = vec![0; 2 * edges.len()];
        let slots = incident
            .into_iter()
            .map(|hs| {
                for (s, &h) in hs.iter().enumerate() {
                    slot_of[h] = s;
                }
                [hs[0], hs[1], hs[2], hs[3]]
            })
            .collect();
        Ok(Self {
            k,
            edges,
            slots,
            slot_of,
        })
    }

    /// Parses `k m` followed by `m` lines `u v`; blank lines and `#` comments are ignored.
    pub fn parse(s: &str) -> Result<Self> {
        let mut lines = s
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .enumerate()
            .filter(|(_, l)| !l.is_empty());
        let (_, header) = lines
            .next()
            .ok_or_else(|| Error::Parse("multigraph: missing `k m` header".into()))?;
        let [k, m] = parse_numbers(header, 0)?[..] else {
            return Err(Error::Parse(format!(
                "multigraph: header must be `k m`, got `{header}`"
            )));
        };
        let mut edges = Vec::with_capacity(m);
        for (lineno, line) in lines {
            let [u, v] = parse_numbers(line, lineno)?[..] else {
                return Err(Error::Parse(format!(
                    "multigraph line {}: expected `u v`, got `{line}`",
                    lineno + 1
                )));
            };
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(Error::Parse(format!(
                "multigraph: header announces {m} edges, found {}",
                edges.len()
            )));
        }
        Self::new(k, edges)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.k, self.edges.len());
        for (u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub fn vertex_count(&self) -> usize {
        self.k
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Half-edges at `v` in `T` order.
    pub fn slots(&self, v: usize) -> [usize; 4] {
        self.slots[v]
    }

    #[inline]
    pub fn vertex_of(&self, h: usize) -> usize {
        let (u, v) = self.edges[h / 2];
        if h.is_multiple_of(2) {
            u
        } else {
            v
        }
    }

    pub fn is_connected(&self) -> bool {
        if self.k == 0 {
            return true;
        }
        let mut seen = vec![false; self.k];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(x) = stack.pop() {
            for h in self.slots[x] {
                let y = self.vertex_of(h ^ 1);
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    fn check_vector(&self, v: &GF4Vector) -> Result<()> {
        if v.len() != self.k {
            return Err(Error::LengthMismatch {
                expected: self.k,
                found: v.len(),
            });
        }
        if !is_complete(v) {
            return Err(Error::InvalidInput(format!(
                "transition vector {v} has a zero entry"
            )));
        }
        Ok(())
    }

    /// Departure half-edge that follows the arrival half-edge `arrived` under `choice`.
    #[inline]
    fn transition(&self, choices: &[usize], arrived: usize) -> usize {
        let x = self.vertex_of(arrived);
        self.slots[x][PARTNER[choices[x]][self.slot_of[arrived]]]
    }

    fn trails(&self, choices: &[usize]) -> Vec<Tour> {
        let mut used = vec![false; self.edges.len()];
        let mut out = Vec::new();
        for e in 0..self.edges.len() {
            if used[e] {
                continue;
            }
            let start = 2 * e;
            let mut tour = Tour::default();
            let mut depart = start;
            loop {
                used[depart / 2] = true;
                tour.vertices.push(self.vertex_of(depart));
                tour.half_edges.push(depart);
                depart = self.transition(choices, depart ^ 1);
                if depart == start {
                    break;
                }
            }
            out.push(tour);
        }
        out
    }

    fn count_trails(&self, choices: &[usize], used: &mut [bool]) -> usize {
        used.fill(false);
        let mut trails = 0;
        for e in 0..self.edges.len() {
            if used[e] {
                continue;
            }
            trails += 1;
            let start = 2 * e;
            let mut depart = start;
            loop {
                used[depart / 2] = true;
                depart = self.transition(choices, depart ^ 1);
                if depart == start {
                    break;
                }
            }
        }
        trails
    }

    /// Transition vector realised by a closed trail that passes through every vertex twice.
    pub fn transition_vector(&self, tour: &Tour) -> Result<GF4Vector> {
        self.validate_tour(tour)?;
        let mut choice: Vec<Option<usize>> = vec![None; self.k];
        let len = tour.half_edges.len();
        for i in 0..len {
            let arrived = tour.half_edges[(i + len - 1) % len] ^ 1;
            let depart = tour.half_edges[i];
            let x = self.vertex_of(depart);
            let (a, b) = (self.slot_of[arrived], self.slot_of[depart]);
            let c = (0..3).find(|&c| PARTNER[c][a] == b).ok_or_else(|| {
                Error::InvalidInput("tour re-enters through the half-edge it arrived on".into())
            })?;
            if choice[x].is_some_and(|prev| prev != c) {
                return Err(Error::InvalidInput(format!(
                    "tour uses inconsistent transitions at vertex {x}"
                )));
            }
            choice[x] = Some(c);
        }
        Ok(GF4Vector(
            choice
                .into_iter()
                .map(|c| GF4::NONZERO[c.expect("every vertex visited")])
                .collect(),
        ))
    }

    /// Checks that `tour` is a closed trail using every edge exactly once.
    pub fn validate_tour(&self, tour: &Tour) -> Result<()> {
        let len = tour.half_edges.len();
        if len != self.edges.len() || tour.vertices.len() != len {
            return Err(Error::InvalidInput(format!(
                "tour has {len} steps but the multigraph has {} edges",
                self.edges.len()
            )));
        }
        let mut seen = vec![false; self.edges.len()];
        for i in 0..len {
            let h = tour.half_edges[i];
            if h >= 2 * self.edges.len() || std::mem::replace(&mut seen[h / 2], true) {
                return Err(Error::InvalidInput(format!(
                    "tour repeats or misnames edge at step {i}"
                )));
            }
            if self.vertex_of(h) != tour.vertices[i]
                || self.vertex_of(h ^ 1) != tour.vertices[(i + 1) % len]
            {
                return Err(Error::InvalidInput(format!(
                    "tour step {i} does not follow edge e{}",
                    h / 2
                )));
            }
        }
        Ok(())
    }
}

/// Closed trail: step `i` leaves `vertices[i]` along half-edge `half_edges[i]`
/// and arrives at `vertices[i + 1]` (cyclically).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Tour {
    pub vertices: Vec<usize>,
    pub half_edges: Vec<usize>,
}

impl Tour {
    pub fn len(&self) -> usize {
        self.half_edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.half_edges.is_empty()
    }

    pub fn edges(&self) -> impl Iterator<Item = usize> + '_ {
        self.half_edges.iter().map(|h| h / 2)
    }
}

impl fmt::Display for Tour {
    /// `v0 e<id> v1 e<id> ... v0`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (v, h) in self.vertices.iter().zip(&self.half_edges) {
            write!(f, "{v} e{} ", h / 2)?;
        }
        match self.vertices.first() {
            Some(v) => write!(f, "{v}"),
            None => Ok(()),
        }
    }
}

/// Partition of the edge set into closed trails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerianDecomposition {
    pub tours: Vec<Tour>,
}

impl EulerianDecomposition {
    pub fn is_single_tour(&self) -> bool {
        self.tours.len() == 1
    }
}

/// `D_T(v)`: follow the pairings chosen by `v` until every trail closes.
pub fn decomposition_from_vector(f: &MultiGraph4, v: &GF4Vector) -> Result<EulerianDecomposition> {
    f.check_vector(v)?;
    let choices: Vec<usize> = v.0.iter().map(|&x| choice_index(x)).collect();
    Ok(EulerianDecomposition {
        tours: f.trails(&choices),
    })
}

/// Number of transition systems whose decomposition is a single closed trail.
/// Disconnected multigraphs have none.
pub fn count_eulerian_tours(f: &MultiGraph4, cap: usize) -> Result<u64> {
    let k = f.vertex_count();
    if k > cap {
        return Err(Error::CapExceeded {
            what: "transition-system enumeration size k",
            cap: cap as u64,
        });
    }
    if !f.is_connected() {
        return Ok(0);
    }
    let total = 3usize.pow(k as u32);
    let count = (0..total)
        .into_par_iter()
        .with_min_len(1 << 12)
        .map_init(
            || (vec![0usize; k], vec![false; f.edges.len()]),
            |(choices, used), idx| {
                let mut idx = idx as u64;
                for c in choices.iter_mut() {
                    *c = (idx % 3) as usize;
                    idx /= 3;
                }
                (f.count_trails(choices, used) == 1) as u64
            },
        )
        .sum();
    Ok(count)
}

/// Single-trail decompositions together with their transition vectors.
pub fn all_eulerian_tours(f: &MultiGraph4, cap: usize) -> Result<Vec<(GF4Vector, Tour)>> {
    let k = f.vertex_count();
    if k > cap {
        return Err(Error::CapExceeded {
            what: "transition-system enumeration size k",
            cap: cap as u64,
        });
    }
    let mut out = Vec::new();
    for idx in 0..3u64.pow(k as u32) {
        let v = complete_vector_from_index(k, idx);
        let mut d = decomposition_from_vector(f, &v)?;
        if d.is_single_tour() {
            out.push((v, d.tours.pop().expect("one tour")));
        }
    }
    Ok(out)
}

/// Eulerian tour by Hierholzer's algorithm, starting at vertex 0 and always
/// taking the unused half-edge of lowest `T` position.
pub fn find_eulerian_tour(f: &MultiGraph4) -> Result<Tour> {
    if !f.is_connected() {
        return Err(Error::Disconnected);
    }
    if f.k == 0 {
        return Ok(Tour::default());
    }
    let mut used = vec![false; f.edges.len()];
    let mut next_slot = vec![0usize; f.k];
    // (vertex, half-edge that arrived here)
    let mut stack: Vec<(usize, Option<usize>)> = vec![(0, None)];
    let mut circuit: Vec<(usize, Option<usize>)> = Vec::with_capacity(f.edges.len() + 1);
    while let Some(&(x, _)) = stack.last() {
        while next_slot[x] < 4 && used[f.slots[x][next_slot[x]] / 2] {
            next_slot[x] += 1;
        }
        if next_slot[x] < 4 {
            let h = f.slots[x][next_slot[x]];
            used[h / 2] = true;
            stack.push((f.vertex_of(h ^ 1), Some(h ^ 1)));
        } else {
            circuit.push(stack.pop().expect("non-empty"));
        }
    }
    circuit.reverse();
    // circuit = [(start, None), (x1, arr1), ..., (start, arr_m)]
    let mut tour = Tour::default();
    for pair in circuit.windows(2) {
        let (x, _) = pair[0];
        let arrived = pair[1].1.expect("every later entry arrived along an edge");
        tour.vertices.push(x);
        tour.half_edges.push(arrived ^ 1);
    }
    debug_assert!(f.validate_tour(&tour).is_ok());
    Ok(tour)
}

/// Word in which each of the symbols `0..k` occurs exactly twice.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DoubleOccurrenceWord {
    symbols: Vec<usize>,
}

impl DoubleOccurrenceWord {
    pub fn new(symbols: Vec<usize>) -> Result<Self> {
        if !symbols.len().is_multiple_of(2) {
            return Err(Error::InvalidInput(format!(
                "double-occurrence word has odd length {}",
                symbols.len()
            )));
        }
        let k = symbols.len() / 2;
        let mut counts = vec![0usize; k];
        for &s in &symbols {
            if s >= k {
                return Err(Error::InvalidInput(format!(
                    "symbol {s} out of range for a word over {k} symbols"
                )));
            }
            counts[s] += 1;
        }
        if let Some(s) = counts.iter().position(|&c| c != 2) {
            return Err(Error::InvalidInput(format!(
                "symbol {s} occurs {} times, expected 2",
                counts[s]
            )));
        }
        Ok(Self { symbols })
    }

    /// Parses whitespace-separated tokens, numbering symbols by first appearance.
    pub fn from_tokens(s: &str) -> Result<Self> {
        let mut ids: HashMap<&str, usize> = HashMap::new();
        let symbols = s
            .split_whitespace()
            .map(|t| {
                let next = ids.len();
                *ids.entry(t).or_insert(next)
            })
            .collect();
        Self::new(symbols)
    }

    pub fn symbols(&self) -> &[usize] {
        &self.symbols
    }

    pub fn symbol_count(&self) -> usize {
        self.symbols.len() / 2
    }
}

impl fmt::Display for DoubleOccurrenceWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.symbols.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", s.join(" "))
    }
}

/// `m(U)`: the vertex sequence of an Eulerian tour.
pub fn double_occurrence_word(f: &MultiGraph4, tour: &Tour) -> Result<DoubleOccurrenceWord> {
    f.validate_tour(tour)?;
    DoubleOccurrenceWord::new(tour.vertices.clone())
}

/// Graph on the word's symbols with `u ~ v` iff they interleave as `u..v..u..v`.
pub fn alternance_graph(w: &DoubleOccurrenceWord) -> LabelledGraph {
    let k = w.symbol_count();
    let mut first = vec![usize::MAX; k];
    let mut second = vec![usize::MAX; k];
    for (i, &s) in w.symbols.iter().enumerate() {
        if first[s] == usize::MAX {
            first[s] = i;
        } else {
            second[s] = i;
        }
    }
    let mut g = LabelledGraph::empty(k);
    for u in 0..k {
        for v in u + 1..k {
            let inside = |p: usize| first[u] < p && p < second[u];
            if inside(first[v]) != inside(second[v]) {
                g.set_edge(u, v, true).expect("distinct in-range vertices");
            }
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    fn double_loop() -> MultiGraph4 {
        MultiGraph4::new(1, vec![(0, 0), (0, 0)]).unwrap()
    }

    fn quad_pair() -> MultiGraph4 {
        MultiGraph4::new(2, vec![(0, 1); 4]).unwrap()
    }

    fn v(s: &str) -> GF4Vector {
        s.parse().unwrap()
    }

    #[test]
    fn degree_validation() {
        let err = MultiGraph4::new(2, vec![(0, 1); 5]).unwrap_err();
        assert_eq!(
            err,
            Error::NotFourRegular {
                offending: vec![(0, 5), (1, 5)]
            }
        );
        assert!(MultiGraph4::new(1, vec![(0, 1)]).is_err());
        assert!(MultiGraph4::parse("2 4\n0 1\n0 1\n0 1\n0 1\n").is_ok());
        assert!(MultiGraph4::parse("2 3\n0 1\n0 1\n0 1\n0 1\n").is_err());
        assert!(MultiGraph4::parse("2\n0 1\n").is_err());
    }

    #[test]
    fn decompositions_of_double_loop() {
        let f = double_loop();
        assert_eq!(
            decomposition_from_vector(&f, &v("1")).unwrap().tours.len(),
            2
        );
        let d = decomposition_from_vector(&f, &v("w")).unwrap();
        assert_eq!(d.tours.len(), 1);
        assert_eq!(d.tours[0].len(), 2);
        assert!(decomposition_from_vector(&f, &v("0")).is_err());
        assert!(decomposition_from_vector(&f, &v("11")).is_err());
    }

    #[test]
    fn tour_counts() {
        assert_eq!(
            count_eulerian_tours(&double_loop(), DEFAULT_TOUR_CAP).unwrap(),
            2
        );
        assert_eq!(
            count_eulerian_tours(&quad_pair(), DEFAULT_TOUR_CAP).unwrap(),
            6
        );
        let split = MultiGraph4::new(2, vec![(0, 0), (0, 0), (1, 1), (1, 1)]).unwrap();
        assert!(!split.is_connected());
        assert_eq!(count_eulerian_tours(&split, DEFAULT_TOUR_CAP).unwrap(), 0);
        assert!(count_eulerian_tours(&quad_pair(), 1).is_err());
    }

    #[test]
    fn hierholzer_tours() {
        let t = find_eulerian_tour(&double_loop()).unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t.vertices, vec![0, 0]);
        let t = find_eulerian_tour(&quad_pair()).unwrap();
        assert_eq!(t.vertices, vec![0, 1, 0, 1]);
        assert_eq!(t.to_string(), "0 e0 1 e1 0 e2 1 e3 0");
        let split = MultiGraph4::new(2, vec![(0, 0), (0, 0), (1, 1), (1, 1)]).unwrap();
        assert_eq!(find_eulerian_tour(&split), Err(Error::Disconnected));
    }

    #[test]
    fn words_and_alternance() {
        let f = quad_pair();
        let t = find_eulerian_tour(&f).unwrap();
        let w = double_occurrence_word(&f, &t).unwrap();
        assert_eq!(w.symbols(), &[0, 1, 0, 1]);
        assert_eq!(alternance_graph(&w), LabelledGraph::complete(2));

        let dl = double_loop();
        let w = double_occurrence_word(&dl, &find_eulerian_tour(&dl).unwrap()).unwrap();
        assert_eq!(w.symbols(), &[0, 0]);
        assert_eq!(alternance_graph(&w), LabelledGraph::empty(1));

        let uv = DoubleOccurrenceWord::from_tokens("u v u v").unwrap();
        assert_eq!(alternance_graph(&uv), LabelledGraph::complete(2));
        let nested = DoubleOccurrenceWord::from_tokens("u u v v").unwrap();
        assert_eq!(alternance_graph(&nested), LabelledGraph::empty(2));
        let abc = DoubleOccurrenceWord::from_tokens("a b c a b c").unwrap();
        assert_eq!(alternance_graph(&abc), LabelledGraph::complete(3));
        assert!(DoubleOccurrenceWord::from_tokens("a b a").is_err());
        assert!(DoubleOccurrenceWord::from_tokens("a a a a").is_err());
    }

    #[test]
    fn tour_validation_rejects_bad_trails() {
        let f = quad_pair();
        let mut t = find_eulerian_tour(&f).unwrap();
        t.half_edges.swap(0, 1);
        assert!(double_occurrence_word(&f, &t).is_err());
        let short = Tour {
            vertices: vec![0, 1],
            half_edges: vec![0, 3],
        };
        assert!(f.validate_tour(&short).is_err());
    }

    #[test]
    fn transition_vector_reproduces_tour() {
        for f in [double_loop(), quad_pair()] {
            let t = find_eulerian_tour(&f).unwrap();
            let v = f.transition_vector(&t).unwrap();
            let d = decomposition_from_vector(&f, &v).unwrap();
            assert!(d.is_single_tour());
            let mut a: Vec<usize> = d.tours[0].edges().collect();
            let mut b: Vec<usize> = t.edges().collect();
            a.sort();
            b.sort();
            assert_eq!(a, b);
        }
    }
}
