//! Seeded random instances and exhaustive small families.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::euler::MultiGraph4;
use crate::graph::LabelledGraph;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi `G(n, p)`.
pub fn random_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> LabelledGraph {
    let mut g = LabelledGraph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.set_edge(u, v, true).expect("valid pair");
            }
        }
    }
    g
}

/// Connected 4-regular multigraph from the configuration model: `4k` stubs
/// paired uniformly at random, retried until connected. Loops and parallel
/// edges are kept.
pub fn random_4regular<R: Rng>(k: usize, rng: &mut R) -> MultiGraph4 {
    assert!(k > 0);
    let mut stubs: Vec<usize> = (0..k).flat_map(|v| [v; 4]).collect();
    loop {
        stubs.shuffle(rng);
        let edges = stubs.chunks(2).map(|p| (p[0], p[1])).collect();
        let f = MultiGraph4::new(k, edges).expect("every vertex has four stubs");
        if f.is_connected() {
            return f;
        }
    }
}

/// Every connected 4-regular multigraph on vertices `0..k` (`k ≤ 4`), one per
/// assignment of loop counts and edge multiplicities. Edges are listed in
/// lexicographic order of their endpoint pairs.
pub fn connected_4regular_multigraphs(k: usize) -> Vec<MultiGraph4> {
    assert!(k <= 4, "exhaustive generation is limited to k <= 4");
    let pairs: Vec<(usize, usize)> = (0..k).flat_map(|u| (u..k).map(move |v| (u, v))).collect();
    let mut out = Vec::new();
    let mut mult = vec![0usize; pairs.len()];
    fn rec(
        i: usize,
        k: usize,
        pairs: &[(usize, usize)],
        mult: &mut Vec<usize>,
        deg: &mut Vec<usize>,
        out: &mut Vec<MultiGraph4>,
    ) {
        if i == pairs.len() {
            if deg.iter().all(|&d| d == 4) {
                let edges = pairs
                    .iter()
                    .zip(mult.iter())
                    .flat_map(|(&p, &m)| std::iter::repeat_n(p, m))
                    .collect();
                let f = MultiGraph4::new(k, edges).expect("degrees checked");
                if f.is_connected() {
                    out.push(f);
                }
            }
            return;
        }
        let (u, v) = pairs[i];
        for m in 0..=4 {
            let add = if u == v { 2 * m } else { m };
            if deg[u] + add > 4 || deg[v] + add > 4 {
                break;
            }
            deg[u] += add;
            if u != v {
                deg[v] += add;
            }
            mult[i] = m;
            rec(i + 1, k, pairs, mult, deg, out);
            deg[u] -= add;
            if u != v {
                deg[v] -= add;
            }
        }
        mult[i] = 0;
    }
    rec(0, k, &pairs, &mut mult, &mut vec![0; k], &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exhaustive_counts() {
        assert_eq!(connected_4regular_multigraphs(1).len(), 1);
        // quadruple edge, or double edge with a loop at each end
        assert_eq!(connected_4regular_multigraphs(2).len(), 2);
        for k in 1..=4 {
            for f in connected_4regular_multigraphs(k) {
                assert!(f.is_connected());
                assert_eq!(f.edges().len(), 2 * k);
            }
        }
    }

    #[test]
    fn random_instances_are_seeded() {
        let a = random_4regular(6, &mut rng(3));
        let b = random_4regular(6, &mut rng(3));
        assert_eq!(a, b);
        assert!(a.is_connected());
        let g = random_graph(20, 0.5, &mut rng(1));
        assert_eq!(g, random_graph(20, 0.5, &mut rng(1)));
    }
}
