//! Isotropic systems over GF(4), graphic presentations and Eulerian vectors.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gf4::{GF4Subspace, GF4Vector, GF4};
use crate::graph::LabelledGraph;

/// Largest `n` for which Eulerian vectors are enumerated by default (3^13 candidates).
pub const DEFAULT_EULERIAN_CAP: usize = 13;

/// Totally isotropic subspace of GF(4)^n of binary dimension `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsotropicSystem {
    space: GF4Subspace,
}

impl IsotropicSystem {
    /// Validates self-orthogonality and dimension.
    pub fn new(space: GF4Subspace) -> Result<Self> {
        let n = space.n();
        if space.dim() != n {
            return Err(Error::Construction(format!(
                "dimension check failed: binary dimension {} but n = {n}",
                space.dim()
            )));
        }
        let basis = space.basis();
        for (i, a) in basis.iter().enumerate() {
            for b in &basis[i..] {
                if a.trace_inner(b)? {
                    return Err(Error::Construction(format!(
                        "isotropy check failed: <{a}, {b}> = 1"
                    )));
                }
            }
        }
        Ok(Self { space })
    }

    pub fn from_vectors(n: usize, vectors: &[GF4Vector]) -> Result<Self> {
        Self::new(GF4Subspace::span(n, vectors)?)
    }

    pub fn n(&self) -> usize {
        self.space.n()
    }

    pub fn space(&self) -> &GF4Subspace {
        &self.space
    }

    pub fn contains(&self, v: &GF4Vector) -> Result<bool> {
        self.space.contains(v)
    }

    /// One basis vector per line, rendered over `{0, 1, w, W}`.
    pub fn to_text(&self) -> String {
        self.space
            .basis()
            .iter()
            .map(|b| format!("{b}\n"))
            .collect()
    }

    /// Inverse of [`to_text`](Self::to_text). `n` is taken from the line length.
    pub fn from_text(s: &str) -> Result<Self> {
        let vectors = s
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(str::parse)
            .collect::<Result<Vec<GF4Vector>>>()?;
        let n = vectors.first().map_or(0, GF4Vector::len);
        Self::from_vectors(n, &vectors)
    }
}

impl fmt::Display for IsotropicSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let basis: Vec<String> = self.space.basis().iter().map(|b| b.to_string()).collect();
        write!(f, "<{}>", basis.join(", "))
    }
}

pub fn is_complete(v: &GF4Vector) -> bool {
    v.0.iter().all(|x| !x.is_zero())
}

pub fn are_supplementary(v: &GF4Vector, w: &GF4Vector) -> Result<bool> {
    if v.len() != w.len() {
        return Err(Error::LengthMismatch {
            expected: v.len(),
            found: w.len(),
        });
    }
    Ok(is_complete(v) && is_complete(w) && v.0.iter().zip(&w.0).all(|(a, b)| a != b))
}

/// A graph together with two supplementary vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphicPresentation {
    graph: LabelledGraph,
    v: GF4Vector,
    w: GF4Vector,
}

impl GraphicPresentation {
    pub fn new(graph: LabelledGraph, v: GF4Vector, w: GF4Vector) -> Result<Self> {
        if v.len() != graph.n() {
            return Err(Error::LengthMismatch {
                expected: graph.n(),
                found: v.len(),
            });
        }
        if !are_supplementary(&v, &w)? {
            return Err(Error::Construction(format!(
                "presentation vectors {v} and {w} are not supplementary"
            )));
        }
        Ok(Self { graph, v, w })
    }

    /// `v = (w^2, ..., w^2)`, `w = (1, ..., 1)`.
    pub fn canonical(graph: LabelledGraph) -> Self {
        let n = graph.n();
        Self {
            graph,
            v: GF4Vector::constant(n, GF4::W2),
            w: GF4Vector::constant(n, GF4::One),
        }
    }

    pub fn graph(&self) -> &LabelledGraph {
        &self.graph
    }

    pub fn v(&self) -> &GF4Vector {
        &self.v
    }

    pub fn w(&self) -> &GF4Vector {
        &self.w
    }

    /// `v[N(u)] + w[{u}]` for each vertex `u`.
    pub fn generators(&self) -> Vec<GF4Vector> {
        (0..self.graph.n())
            .map(|u| {
                let mut g = self.v.restrict_mask(&self.graph.neighborhood_unchecked(u));
                g.0[u] = g.0[u] + self.w.0[u];
                g
            })
            .collect()
    }
}

pub fn from_graphic_presentation(p: &GraphicPresentation) -> Result<IsotropicSystem> {
    IsotropicSystem::from_vectors(p.graph.n(), &p.generators())
}

/// The canonical system of `g`; its alpha-image is the stabilizer group of the graph state.
pub fn canonical_system(g: &LabelledGraph) -> IsotropicSystem {
    from_graphic_presentation(&GraphicPresentation::canonical(g.clone()))
        .expect("canonical presentations always generate isotropic systems")
}

/// `V_v = { v[X] : X ⊆ [n] }`, a binary subspace of dimension `n` for complete `v`.
pub fn restriction_space(v: &GF4Vector) -> GF4Subspace {
    let n = v.len();
    let units: Vec<GF4Vector> = (0..n)
        .map(|i| v.restrict(&[i]).expect("index in range"))
        .collect();
    GF4Subspace::span(n, &units).expect("lengths agree")
}

/// Binary dimension of `V_v ∩ S`.
pub fn rank(s: &IsotropicSystem, v: &GF4Vector) -> Result<usize> {
    if v.len() != s.n() {
        return Err(Error::LengthMismatch {
            expected: s.n(),
            found: v.len(),
        });
    }
    if !is_complete(v) {
        return Err(Error::InvalidInput(format!(
            "rank is defined for complete vectors only; {v} has a zero entry"
        )));
    }
    Ok(restriction_space(v).intersect(s.space())?.dim())
}

pub fn is_eulerian_vector(s: &IsotropicSystem, v: &GF4Vector) -> bool {
    v.len() == s.n() && is_complete(v) && rank(s, v) == Ok(0)
}

/// Decodes a mixed-radix index into a complete vector (digit 0,1,2 -> 1,w,w^2).
pub fn complete_vector_from_index(n: usize, mut index: u64) -> GF4Vector {
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        out.push(GF4::NONZERO[(index % 3) as usize]);
        index /= 3;
    }
    GF4Vector(out)
}

/// Counts the Eulerian vectors of `s` by enumerating all `3^n` complete vectors.
///
/// `x ∈ {0, v_i}` iff `<x, v_i> = 0`, so `V_v ∩ S = {0}` iff the `n × n`
/// binary matrix `M[j][i] = <b_j[i], v_i>` over a basis `b` of `S` is
/// nonsingular. Each candidate costs one small elimination.
pub fn count_eulerian_vectors(s: &IsotropicSystem, cap: usize) -> Result<u64> {
    let n = s.n();
    if n > cap {
        return Err(Error::CapExceeded {
            what: "Eulerian-vector enumeration size n",
            cap: cap as u64,
        });
    }
    if n > 40 {
        return Err(Error::CapExceeded {
            what: "Eulerian-vector enumeration size n",
            cap: 40,
        });
    }
    let basis = s.space().basis();
    let total = 3usize.pow(n as u32);
    let count = (0..total)
        .into_par_iter()
        .with_min_len(1 << 12)
        .filter(|&idx| {
            let v = complete_vector_from_index(n, idx as u64);
            let rows: Vec<u64> = basis
                .iter()
                .map(|b| {
                    b.0.iter()
                        .zip(&v.0)
                        .enumerate()
                        .fold(0u64, |acc, (i, (&x, &vi))| {
                            acc | (x.trace_inner(vi) as u64) << i
                        })
                })
                .collect();
            full_rank(rows)
        })
        .count();
    Ok(count as u64)
}

/// Rank test for a square binary matrix given as bit rows.
fn full_rank(mut rows: Vec<u64>) -> bool {
    let n = rows.len();
    for col in 0..n {
        let bit = 1u64 << col;
        let Some(p) = (col..n).find(|&r| rows[r] & bit != 0) else {
            return false;
        };
        rows.swap(col, p);
        let pivot = rows[col];
        for r in rows.iter_mut().skip(col + 1) {
            if *r & bit != 0 {
                *r ^= pivot;
            }
        }
    }
    true
}

/// `e(G)`: number of Eulerian vectors of the canonical system of `g`.
pub fn e_of_graph(g: &LabelledGraph, cap: usize) -> Result<u64> {
    count_eulerian_vectors(&canonical_system(g), cap)
}
