//! Brute-force reference computations, written against raw adjacency masks
//! so they share no code paths with the library routines they check.

#![allow(dead_code)]

use lcorbit::LabelledGraph;

pub fn masks(g: &LabelledGraph) -> Vec<u32> {
    (0..g.n())
        .map(|v| g.neighbors(v).fold(0u32, |m, u| m | 1 << u))
        .collect()
}

/// GF(4) element as 2 bits: 1 = 0b01, w = 0b10, w^2 = 0b11; addition is XOR.
const ONE: u8 = 1;
const W2: u8 = 3;

/// Number of Eulerian vectors of the canonical system of `g`, by listing all
/// `2^n` elements `v[N_X] + w[X]` and testing each complete vector against them.
pub fn eulerian_count_by_listing(g: &LabelledGraph) -> u64 {
    let n = g.n();
    let adj = masks(g);
    let elements: Vec<Vec<u8>> = (1u32..1 << n)
        .map(|x| {
            let nx = (0..n)
                .filter(|&u| x >> u & 1 == 1)
                .fold(0u32, |acc, u| acc ^ adj[u]);
            (0..n)
                .map(|i| {
                    let mut e = 0u8;
                    if x >> i & 1 == 1 {
                        e ^= ONE;
                    }
                    if nx >> i & 1 == 1 {
                        e ^= W2;
                    }
                    e
                })
                .collect()
        })
        .collect();
    let mut count = 0;
    let total = 3u64.pow(n as u32);
    for idx in 0..total {
        let mut c = Vec::with_capacity(n);
        let mut r = idx;
        for _ in 0..n {
            c.push((r % 3) as u8 + 1);
            r /= 3;
        }
        let hits = elements
            .iter()
            .any(|el| el.iter().zip(&c).all(|(&x, &ci)| x == 0 || x == ci));
        if !hits {
            count += 1;
        }
    }
    count
}

/// Class-μ membership with condition 3 checked over every even-degree edge subset.
pub fn mu_all_cycles(g: &LabelledGraph) -> bool {
    let n = g.n();
    let adj = masks(g);
    if (0..n).any(|v| adj[v].count_ones().is_multiple_of(2)) {
        return false;
    }
    for u in 0..n {
        for v in u + 1..n {
            if adj[u] >> v & 1 == 0 && (adj[u] & adj[v]).count_ones() % 2 == 1 {
                return false;
            }
        }
    }
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| adj[u] >> v & 1 == 1)
        .collect();
    assert!(edges.len() <= 20);
    for subset in 1u32..1 << edges.len() {
        let mut parity = 0u32;
        let mut nu = 0u32;
        for (i, &(u, v)) in edges.iter().enumerate() {
            if subset >> i & 1 == 1 {
                parity ^= 1 << u | 1 << v;
                nu ^= adj[u] & adj[v];
            }
        }
        if parity == 0 && nu.count_ones() % 2 != subset.count_ones() % 2 {
            return false;
        }
    }
    true
}

/// Dimension of the cycle space: `|E| - |V| + components`.
pub fn cycle_space_dim(g: &LabelledGraph) -> usize {
    g.edge_count() + g.components().len() - g.n()
}
