//! Independent brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::HashMap;

use fasnu::Digraph;

/// Minimum number of backward arcs over all n! orderings (Heap's algorithm).
pub fn tau_all_orderings(d: &Digraph) -> usize {
    let n = d.n();
    let arcs = d.arcs();
    let mut perm: Vec<usize> = (0..n).collect();
    let count = |perm: &[usize]| {
        let mut pos = vec![0; n];
        for (i, &v) in perm.iter().enumerate() {
            pos[v] = i;
        }
        arcs.iter().filter(|&&(u, v)| pos[u] > pos[v]).count()
    };
    let mut best = count(&perm);
    let mut c = vec![0; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            best = best.min(count(&perm));
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    best
}

fn arc_bit(n: usize, u: usize, v: usize) -> u128 {
    1u128 << (u * n + v)
}

/// Arc mask of a closed vertex sequence; `n ≤ 11`.
pub fn cycle_mask(n: usize, c: &[usize]) -> u128 {
    (0..c.len()).fold(0, |m, i| m | arc_bit(n, c[i], c[(i + 1) % c.len()]))
}

/// Size of a largest pairwise-disjoint subfamily, by include/exclude over
/// the family in order with memoisation on (index, used arcs).
pub fn max_disjoint_family(masks: &[u128]) -> usize {
    fn go(masks: &[u128], i: usize, used: u128, memo: &mut HashMap<(usize, u128), usize>) -> usize {
        if i == masks.len() {
            return 0;
        }
        if let Some(&r) = memo.get(&(i, used)) {
            return r;
        }
        let mut best = go(masks, i + 1, used, memo);
        if masks[i] & used == 0 {
            best = best.max(1 + go(masks, i + 1, used | masks[i], memo));
        }
        memo.insert((i, used), best);
        best
    }
    go(masks, 0, 0, &mut HashMap::new())
}

/// All simple cycles through `v0`, as vertex sequences starting at `v0`.
pub fn cycles_through(d: &Digraph, v0: usize) -> Vec<Vec<usize>> {
    fn go(d: &Digraph, v0: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let last = *path.last().unwrap();
        for w in 0..d.n() {
            if !d.has_arc(last, w) {
                continue;
            }
            if w == v0 {
                out.push(path.clone());
            } else if !path.contains(&w) {
                path.push(w);
                go(d, v0, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(d, v0, &mut vec![v0], &mut out);
    out
}

pub fn max_cycles_through_bruteforce(d: &Digraph, v0: usize) -> usize {
    let masks: Vec<u128> = cycles_through(d, v0).iter().map(|c| cycle_mask(d.n(), c)).collect();
    max_disjoint_family(&masks)
}

/// All 3-cycles `v x y` through `v`, by a triple loop.
pub fn triangles_through(d: &Digraph, v: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for x in 0..d.n() {
        for y in 0..d.n() {
            if x != y && x != v && y != v && d.has_arc(v, x) && d.has_arc(x, y) && d.has_arc(y, v) {
                out.push([v, x, y]);
            }
        }
    }
    out
}

pub fn max_triangles_bruteforce(d: &Digraph, v: usize) -> usize {
    let masks: Vec<u128> = triangles_through(d, v).iter().map(|t| cycle_mask(d.n(), t)).collect();
    max_disjoint_family(&masks)
}

/// Second out-neighborhood by a direct two-hop double loop.
pub fn two_hop(d: &Digraph, v: usize) -> Vec<usize> {
    let n = d.n();
    (0..n)
        .filter(|&w| w != v && !d.has_arc(v, w))
        .filter(|&w| (0..n).any(|u| d.has_arc(v, u) && d.has_arc(u, w)))
        .collect()
}

pub fn mask_to_vec(m: u64) -> Vec<usize> {
    (0..64).filter(|&i| m >> i & 1 == 1).collect()
}

/// Uniform-ish permutation from a seed, by a small LCG-driven shuffle.
pub fn seeded_permutation(n: usize, seed: u64) -> Vec<usize> {
    let mut state = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
    let mut p: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        let j = ((state >> 33) as usize) % (i + 1);
        p.swap(i, j);
    }
    p
}
