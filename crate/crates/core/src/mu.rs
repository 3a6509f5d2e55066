//! The index `k(G)`: bineighbourhood vectors, cycle bases, class-μ membership
//! and the size of the orthogonal complement of the bineighbourhood space.
//!
//! `k` is multiplicative over connected components; the μ correction applies
//! to each component separately.

use std::collections::VecDeque;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::bits::{BitVec, EchelonBasis};
use crate::error::{Error, Result};
use crate::graph::LabelledGraph;

/// Indicator vector of a vertex subset.
pub type BinVector = BitVec;

pub type Edge = (usize, usize);

/// GF(2) subspace of `Z_2^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinSubspace {
    basis: EchelonBasis,
}

impl BinSubspace {
    pub fn zero(n: usize) -> Self {
        Self {
            basis: EchelonBasis::new(n),
        }
    }

    pub fn span<'a>(n: usize, vectors: impl IntoIterator<Item = &'a BinVector>) -> Self {
        let mut s = Self::zero(n);
        s.basis.extend(vectors);
        s
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.ambient_len()
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim()
    }

    pub fn insert(&mut self, v: &BinVector) -> bool {
        self.basis.insert(v)
    }

    pub fn contains(&self, v: &BinVector) -> bool {
        self.basis.contains(v)
    }

    pub fn basis(&self) -> &[BinVector] {
        self.basis.rows()
    }

    /// `|S^⊥| = 2^(n - dim S)`.
    pub fn orthogonal_complement_size(&self) -> BigUint {
        BigUint::one() << (self.ambient_dim() - self.dim())
    }
}

fn normalize(g: &LabelledGraph, (u, v): Edge) -> Result<Edge> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::InvalidInput(format!(
            "pair ({u}, {v}) is a loop, not an edge of the graph or its complement"
        )));
    }
    Ok((u.min(v), u.max(v)))
}

/// `ν(uv)`: indicator of `N(u) ∩ N(v)`.
pub fn bineighborhood(g: &LabelledGraph, u: usize, v: usize) -> Result<BinVector> {
    let (u, v) = normalize(g, (u, v))?;
    Ok(nu_unchecked(g, u, v))
}

#[inline]
fn nu_unchecked(g: &LabelledGraph, u: usize, v: usize) -> BinVector {
    let words = g.row(u).iter().zip(g.row(v)).map(|(a, b)| a & b).collect();
    BitVec::from_words(g.n(), words)
}

/// `ν(E') = Σ ν(e)` over GF(2).
pub fn nu_of_edgeset(g: &LabelledGraph, edges: &[Edge]) -> Result<BinVector> {
    let mut acc = BitVec::zeros(g.n());
    for &e in edges {
        let (u, v) = normalize(g, e)?;
        acc.xor_assign(&nu_unchecked(g, u, v));
    }
    Ok(acc)
}

/// Fundamental cycles of a BFS spanning forest, one per non-tree edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleBasis {
    pub cycles: Vec<Vec<Edge>>,
}

impl CycleBasis {
    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }
}

/// Cycle basis from a BFS forest rooted at the least vertex of each component.
pub fn cycle_basis(g: &LabelledGraph) -> CycleBasis {
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    let mut seen = vec![false; n];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    let mut cycles = Vec::new();
    for (u, v) in g.edges() {
        if parent[v] == u || parent[u] == v {
            continue;
        }
        let mut cycle = vec![(u, v)];
        let (mut a, mut b) = (u, v);
        while a != b {
            if depth[a] >= depth[b] {
                let p = parent[a];
                cycle.push((a.min(p), a.max(p)));
                a = p;
            } else {
                let p = parent[b];
                cycle.push((b.min(p), b.max(p)));
                b = p;
            }
        }
        cycles.push(cycle);
    }
    CycleBasis { cycles }
}

/// Which condition of class μ fails, with the offending object.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MuViolation {
    /// Condition 1: a vertex of even degree.
    EvenDegree { vertex: usize, degree: usize },
    /// Condition 2: a non-edge whose common neighbourhood has odd size.
    OddBineighborhood { pair: Edge, size: usize },
    /// Condition 3: a basis cycle with `|ν(C)| ≢ |C| (mod 2)`.
    CycleParity {
        cycle: Vec<Edge>,
        nu_size: usize,
        length: usize,
    },
}

impl MuViolation {
    pub fn condition(&self) -> u8 {
        match self {
            MuViolation::EvenDegree { .. } => 1,
            MuViolation::OddBineighborhood { .. } => 2,
            MuViolation::CycleParity { .. } => 3,
        }
    }
}

impl fmt::Display for MuViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MuViolation::EvenDegree { vertex, degree } => {
                write!(f, "condition 1: vertex {vertex} has even degree {degree}")
            }
            MuViolation::OddBineighborhood { pair, size } => write!(
                f,
                "condition 2: non-edge {}-{} has {size} common neighbours",
                pair.0, pair.1
            ),
            MuViolation::CycleParity {
                cycle,
                nu_size,
                length,
            } => {
                let edges: Vec<String> = cycle.iter().map(|(u, v)| format!("{u}-{v}")).collect();
                write!(
                    f,
                    "condition 3: cycle [{}] has |C| = {length} but |nu(C)| = {nu_size}",
                    edges.join(" ")
                )
            }
        }
    }
}

/// Result of a class-μ test: `Ok(())` for members, otherwise the first violation found.
pub type MuCheck = std::result::Result<(), MuViolation>;

fn odd_degrees(g: &LabelledGraph) -> MuCheck {
    for v in 0..g.n() {
        let degree = g.degree(v);
        if degree.is_multiple_of(2) {
            return Err(MuViolation::EvenDegree { vertex: v, degree });
        }
    }
    Ok(())
}

fn even_nonedge_bineighborhoods(g: &LabelledGraph) -> MuCheck {
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if g.adjacent(u, v) {
                continue;
            }
            let size = nu_unchecked(g, u, v).count_ones();
            if size % 2 == 1 {
                return Err(MuViolation::OddBineighborhood { pair: (u, v), size });
            }
        }
    }
    Ok(())
}

/// Class-μ membership, checking condition 3 only on the cycles of [`cycle_basis`].
pub fn in_class_mu(g: &LabelledGraph) -> MuCheck {
    odd_degrees(g)?;
    even_nonedge_bineighborhoods(g)?;
    for cycle in cycle_basis(g).cycles {
        let nu_size = nu_of_edgeset(g, &cycle)
            .expect("cycle edges are valid pairs")
            .count_ones();
        if nu_size % 2 != cycle.len() % 2 {
            return Err(MuViolation::CycleParity {
                nu_size,
                length: cycle.len(),
                cycle,
            });
        }
    }
    Ok(())
}

/// Class-μ membership with condition 3 checked on every element of the cycle
/// space, enumerated directly as even-degree edge subsets in Gray-code order.
/// Exponential in the edge count; a reference for [`in_class_mu`].
pub fn in_class_mu_all_cycles(g: &LabelledGraph) -> Result<bool> {
    let edges = g.edges();
    if edges.len() > 30 || g.n() > 64 {
        return Err(Error::CapExceeded {
            what: "edge count for all-cycles enumeration",
            cap: 30,
        });
    }
    if odd_degrees(g).is_err() || even_nonedge_bineighborhoods(g).is_err() {
        return Ok(false);
    }
    let endpoint_mask: Vec<u64> = edges.iter().map(|&(u, v)| 1 << u | 1 << v).collect();
    let nus: Vec<u64> = edges
        .iter()
        .map(|&(u, v)| nu_unchecked(g, u, v).words().first().copied().unwrap_or(0))
        .collect();
    let (mut odd_vertices, mut nu, mut size) = (0u64, 0u64, 0u32);
    for step in 1u64..1 << edges.len() {
        let e = step.trailing_zeros() as usize;
        odd_vertices ^= endpoint_mask[e];
        nu ^= nus[e];
        // Gray code flips edge e; track whether it entered or left the subset
        let gray = step ^ (step >> 1);
        if gray >> e & 1 == 1 {
            size += 1;
        } else {
            size -= 1;
        }
        if odd_vertices == 0 && nu.count_ones() % 2 != size % 2 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `ν(G)`: span of `ν(e)` over non-edges and of `ν(C)` over basis cycles.
pub fn nu_space(g: &LabelledGraph) -> BinSubspace {
    let n = g.n();
    let mut s = BinSubspace::zero(n);
    'nonedges: for u in 0..n {
        for v in u + 1..n {
            if s.is_full() {
                break 'nonedges;
            }
            if !g.adjacent(u, v) {
                s.insert(&nu_unchecked(g, u, v));
            }
        }
    }
    for cycle in cycle_basis(g).cycles {
        if s.is_full() {
            break;
        }
        s.insert(&nu_of_edgeset(g, &cycle).expect("cycle edges are valid pairs"));
    }
    s
}

/// Per-component data behind [`k_index`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentIndex {
    pub vertices: Vec<usize>,
    pub nu_dim: usize,
    pub mu: MuCheck,
    pub k: BigUint,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KIndex {
    pub k: BigUint,
    pub components: Vec<ComponentIndex>,
}

impl KIndex {
    /// True when the whole graph satisfies the three class-μ conditions.
    pub fn whole_graph_in_mu(&self) -> bool {
        self.components.iter().all(|c| c.mu.is_ok())
    }
}

/// `k` of a connected graph: `|ν(G)^⊥|`, plus 2 for members of class μ.
fn k_connected(g: &LabelledGraph) -> (usize, MuCheck, BigUint) {
    let nu = nu_space(g);
    let mu = in_class_mu(g);
    let mut k = nu.orthogonal_complement_size();
    if mu.is_ok() {
        k += 2u32;
    }
    (nu.dim(), mu, k)
}

pub fn k_index_report(g: &LabelledGraph) -> KIndex {
    let components: Vec<ComponentIndex> = g
        .components()
        .into_iter()
        .map(|vertices| {
            let sub = g.induced_subgraph(&vertices);
            let (nu_dim, mu, k) = k_connected(&sub);
            let mu = mu.map_err(|violation| relabel(violation, &vertices));
            ComponentIndex {
                vertices,
                nu_dim,
                mu,
                k,
            }
        })
        .collect();
    let k = components.iter().map(|c| &c.k).product();
    KIndex { k, components }
}

/// The index `k(G)` with `l(G) = e(G) / k(G)`. Polynomial time.
pub fn k_index(g: &LabelledGraph) -> BigUint {
    k_index_report(g).k
}

fn relabel(violation: MuViolation, vertices: &[usize]) -> MuViolation {
    let map = |(u, v): Edge| {
        let (a, b) = (vertices[u], vertices[v]);
        (a.min(b), a.max(b))
    };
    match violation {
        MuViolation::EvenDegree { vertex, degree } => MuViolation::EvenDegree {
            vertex: vertices[vertex],
            degree,
        },
        MuViolation::OddBineighborhood { pair, size } => MuViolation::OddBineighborhood {
            pair: map(pair),
            size,
        },
        MuViolation::CycleParity {
            cycle,
            nu_size,
            length,
        } => MuViolation::CycleParity {
            cycle: cycle.into_iter().map(map).collect(),
            nu_size,
            length,
        },
    }
}
