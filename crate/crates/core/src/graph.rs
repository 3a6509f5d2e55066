//! Labelled simple graphs on the vertex set `0..n` and local complementation.

use std::fmt;

use crate::bits::{words_for, BitVec};
use crate::error::{Error, Result};

/// Simple undirected graph whose vertices are the integers `0..n`.
///
/// Labels are significant: two graphs are equal iff their adjacency
/// matrices agree bit for bit.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LabelledGraph {
    n: usize,
    stride: usize,
    adj: Vec<u64>,
}

impl LabelledGraph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let stride = words_for(n);
        Self {
            n,
            stride,
            adj: vec![0; n * stride],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.set_edge_unchecked(u, v, true);
            }
        }
        g
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        let mut g = Self::empty(n);
        for v in 1..n {
            g.set_edge_unchecked(v - 1, v, true);
        }
        g
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::InvalidInput(format!(
                    "self-loop at vertex {u} in a simple graph"
                )));
            }
            g.set_edge_unchecked(u, v, true);
        }
        Ok(g)
    }

    /// Builds a graph from the bits of `mask` over the pairs `(u, v)`, `u < v`,
    /// in graph6 column order: (0,1), (0,2), (1,2), (0,3), ...
    pub fn from_pair_mask(n: usize, mask: u64) -> Self {
        let mut g = Self::empty(n);
        let mut bit = 0;
        for v in 1..n {
            for u in 0..v {
                if mask >> bit & 1 == 1 {
                    g.set_edge_unchecked(u, v, true);
                }
                bit += 1;
            }
        }
        g
    }

    /// Every labelled graph on `n` vertices (2^(n(n-1)/2) of them).
    pub fn all_on(n: usize) -> impl Iterator<Item = LabelledGraph> {
        let pairs = n * n.saturating_sub(1) / 2;
        assert!(pairs < 64, "too many graphs to enumerate");
        (0..1u64 << pairs).map(move |m| Self::from_pair_mask(n, m))
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    #[inline]
    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.stride..(v + 1) * self.stride]
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        assert!(u < self.n && v < self.n);
        self.row(u)[v / 64] >> (v % 64) & 1 == 1
    }

    fn set_edge_unchecked(&mut self, u: usize, v: usize, on: bool) {
        debug_assert!(u != v);
        for (a, b) in [(u, v), (v, u)] {
            let w = &mut self.adj[a * self.stride + b / 64];
            if on {
                *w |= 1 << (b % 64);
            } else {
                *w &= !(1 << (b % 64));
            }
        }
    }

    pub fn set_edge(&mut self, u: usize, v: usize, on: bool) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::InvalidInput(
                "simple graphs have no self-loops".into(),
            ));
        }
        self.set_edge_unchecked(u, v, on);
        Ok(())
    }

    pub fn toggle_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let on = !self.adjacent(u, v);
        self.set_edge(u, v, on)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let n = self.n;
        self.row(v).iter().enumerate().flat_map(move |(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b)
            })
            .take_while(move |&u| u < n)
        })
    }

    /// Indicator vector of `N(v)`.
    pub fn neighborhood(&self, v: usize) -> Result<BitVec> {
        self.check_vertex(v)?;
        Ok(self.neighborhood_unchecked(v))
    }

    pub(crate) fn neighborhood_unchecked(&self, v: usize) -> BitVec {
        BitVec::from_words(self.n, self.row(v).to_vec())
    }

    /// Symmetric difference of the neighbourhoods of the vertices in `set`.
    pub fn neighborhood_symdiff(&self, set: &[usize]) -> Result<BitVec> {
        let mut acc = BitVec::zeros(self.n);
        for &v in set {
            self.check_vertex(v)?;
            acc.xor_assign(&self.neighborhood_unchecked(v));
        }
        Ok(acc)
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            out.extend(self.neighbors(u).filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    pub fn complement(&self) -> LabelledGraph {
        let mut g = Self::empty(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.adjacent(u, v) {
                    g.set_edge_unchecked(u, v, true);
                }
            }
        }
        g
    }

    /// Local complementation at `v`: toggles every pair of distinct neighbours of `v`.
    pub fn local_complement(&self, v: usize) -> Result<LabelledGraph> {
        self.check_vertex(v)?;
        let mut g = self.clone();
        g.local_complement_in_place(v);
        Ok(g)
    }

    pub(crate) fn local_complement_in_place(&mut self, v: usize) {
        let stride = self.stride;
        let nv: Vec<u64> = self.row(v).to_vec();
        for u in self.neighbors(v).collect::<Vec<_>>() {
            let row = &mut self.adj[u * stride..(u + 1) * stride];
            for (a, b) in row.iter_mut().zip(&nv) {
                *a ^= b;
            }
            // u is in N(v) but must not gain a loop
            row[u / 64] ^= 1 << (u % 64);
        }
    }

    /// Vertex sets of the connected components, each sorted, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Subgraph induced on `vertices`, relabelled to `0..vertices.len()` in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> LabelledGraph {
        let mut g = Self::empty(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.adjacent(u, v) {
                    g.set_edge_unchecked(i, j, true);
                }
            }
        }
        g
    }

    /// Upper-triangle adjacency bits in graph6 column order.
    pub fn pair_bits(&self) -> impl Iterator<Item = bool> + '_ {
        (1..self.n).flat_map(move |v| (0..v).map(move |u| self.adjacent(u, v)))
    }
}

impl fmt::Debug for LabelledGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LabelledGraph(n={}, edges={:?})", self.n, self.edges())
    }
}
