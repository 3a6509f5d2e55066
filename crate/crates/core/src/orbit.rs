//! Local-complementation orbits by breadth-first closure.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::formats::to_graph6;
use crate::graph::LabelledGraph;

pub const DEFAULT_ORBIT_CAP: u64 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitReport {
    pub size: u64,
    /// Members in breadth-first visit order, when requested.
    pub members: Option<Vec<LabelledGraph>>,
    /// Member with the lexicographically least graph6 encoding.
    pub representative: LabelledGraph,
}

/// One member of an orbit together with the step that first reached it.
#[derive(Clone, Debug)]
pub struct OrbitNode {
    pub graph: LabelledGraph,
    /// `(index of parent node, vertex complemented at)`; `None` for the root.
    pub parent: Option<(usize, usize)>,
}

/// Visits the orbit of `root` in BFS order (vertices tried in increasing
/// order). `visit` may return `false` to stop early.
fn bfs(
    root: &LabelledGraph,
    cap: u64,
    mut visit: impl FnMut(&LabelledGraph, Option<(usize, usize)>, usize) -> bool,
) -> Result<u64> {
    let mut index: HashMap<LabelledGraph, usize> = HashMap::new();
    let mut queue: VecDeque<(LabelledGraph, usize)> = VecDeque::new();
    index.insert(root.clone(), 0);
    if !visit(root, None, 0) {
        return Ok(1);
    }
    queue.push_back((root.clone(), 0));
    while let Some((g, gi)) = queue.pop_front() {
        for v in 0..g.n() {
            if g.degree(v) < 2 {
                continue;
            }
            let mut h = g.clone();
            h.local_complement_in_place(v);
            if index.contains_key(&h) {
                continue;
            }
            let hi = index.len();
            if hi as u64 >= cap {
                return Err(Error::CapExceeded {
                    what: "LC-orbit size",
                    cap,
                });
            }
            index.insert(h.clone(), hi);
            if !visit(&h, Some((gi, v)), hi) {
                return Ok(index.len() as u64);
            }
            queue.push_back((h, hi));
        }
    }
    Ok(index.len() as u64)
}

/// Enumerates the labelled graphs locally equivalent to `g` (including `g`).
pub fn enumerate_orbit(g: &LabelledGraph, list_members: bool, cap: u64) -> Result<OrbitReport> {
    let mut members = Vec::new();
    let mut best: Option<(String, LabelledGraph)> = None;
    let size = bfs(g, cap, |h, _, _| {
        let key = to_graph6(h);
        if best.as_ref().is_none_or(|(k, _)| key < *k) {
            best = Some((key, h.clone()));
        }
        if list_members {
            members.push(h.clone());
        }
        true
    })?;
    Ok(OrbitReport {
        size,
        members: list_members.then_some(members),
        representative: best.expect("root is always visited").1,
    })
}

/// Orbit size only.
pub fn orbit_size(g: &LabelledGraph, cap: u64) -> Result<u64> {
    bfs(g, cap, |_, _, _| true)
}

/// BFS spanning tree of the orbit; `nodes[0]` is `g`.
pub fn orbit_tree(g: &LabelledGraph, cap: u64) -> Result<Vec<OrbitNode>> {
    let mut nodes = Vec::new();
    bfs(g, cap, |h, parent, _| {
        nodes.push(OrbitNode {
            graph: h.clone(),
            parent,
        });
        true
    })?;
    Ok(nodes)
}

/// Sequence of vertices whose local complementations lead from the tree root to `nodes[i]`.
pub fn path_from_root(nodes: &[OrbitNode], mut i: usize) -> Vec<usize> {
    let mut path = Vec::new();
    while let Some((p, v)) = nodes[i].parent {
        path.push(v);
        i = p;
    }
    path.reverse();
    path
}

/// Decides local equivalence by searching the orbit of `g1` for `g2`.
pub fn lc_equivalent(g1: &LabelledGraph, g2: &LabelledGraph, cap: u64) -> Result<bool> {
    if g1.n() != g2.n() {
        return Ok(false);
    }
    let mut found = false;
    bfs(g1, cap, |h, _, _| {
        found = h == g2;
        !found
    })?;
    Ok(found)
}
