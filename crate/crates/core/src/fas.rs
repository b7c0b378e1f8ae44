//! Exact minimum feedback arc sets.
//!
//! A set of arcs is a minimum feedback arc set exactly when it is the set of
//! backward arcs of some ordering with the fewest backward arcs, so τ is found
//! by dynamic programming over vertex prefixes: with `f(∅) = 0`,
//! `f(S ∪ {v}) = min f(S) + |N⁺(v) ∩ S|` (appending `v` after the prefix `S`
//! turns its arcs into `S` backward) and `τ = f(V)`.

use std::collections::{BTreeSet, HashMap};

use crate::bits::{bit, low_mask, Bits};
use crate::digraph::{ArcSet, Digraph, Vertex, VertexOrdering};
use crate::error::{Error, Result};

pub const DEFAULT_FAS_CAP: usize = 24;
pub const ENUMERATION_CAP: usize = 16;
const HARD_CAP: usize = 30;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FasResult {
    pub tau: usize,
    pub ordering: VertexOrdering,
    pub fas: ArcSet,
}

/// Exact solver with a configurable vertex cap; the prefix table has `2^n`
/// entries of two bytes.
#[derive(Clone, Copy, Debug)]
pub struct FasSolver {
    cap: usize,
}

impl Default for FasSolver {
    fn default() -> Self {
        Self { cap: DEFAULT_FAS_CAP }
    }
}

impl FasSolver {
    pub fn with_cap(cap: usize) -> Self {
        Self { cap: cap.min(HARD_CAP) }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn solve(&self, d: &Digraph) -> Result<FasResult> {
        let n = d.n();
        if n > self.cap {
            return Err(Error::CapExceeded { what: "exact feedback arc set", n, cap: self.cap });
        }
        let f = prefix_costs(d.rows());
        let mut set = low_mask(n);
        let mut rev = Vec::with_capacity(n);
        while set != 0 {
            let v = Bits(set)
                .find(|&v| {
                    let rest = set & !bit(v);
                    f[rest as usize] + cost(d.rows(), v, rest) == f[set as usize]
                })
                .expect("prefix table has an optimal predecessor");
            rev.push(v);
            set &= !bit(v);
        }
        rev.reverse();
        let ordering = VertexOrdering::new(rev)?;
        let fas = d.backward_arcs(&ordering)?;
        Ok(FasResult { tau: f[low_mask(n) as usize] as usize, ordering, fas })
    }
}

#[inline]
fn cost(rows: &[u64], v: Vertex, prefix: u64) -> u16 {
    (rows[v] & prefix).count_ones() as u16
}

/// `f[S]` = fewest backward arcs among orderings of the subgraph induced by `S`.
pub(crate) fn prefix_costs(rows: &[u64]) -> Vec<u16> {
    let n = rows.len();
    debug_assert!(n <= HARD_CAP);
    let size = 1usize << n;
    let mut f = vec![0u16; size];
    for set in 1..size {
        let s = set as u64;
        let mut best = u16::MAX;
        for v in Bits(s) {
            let rest = s & !bit(v);
            let c = f[rest as usize] + cost(rows, v, rest);
            if c < best {
                best = c;
            }
        }
        f[set] = best;
    }
    f
}

/// τ of the subgraph induced by `within`, given full-width rows.
pub(crate) fn tau_of_induced(rows: &[u64], within: u64) -> usize {
    let verts: Vec<Vertex> = Bits(within).collect();
    let compact: Vec<u64> = verts
        .iter()
        .map(|&u| {
            verts
                .iter()
                .enumerate()
                .filter(|(_, &w)| rows[u] & bit(w) != 0)
                .fold(0u64, |acc, (i, _)| acc | bit(i))
        })
        .collect();
    *prefix_costs(&compact).last().unwrap() as usize
}

/// τ(D), the size of a minimum feedback arc set, with an optimal ordering.
pub fn tau_exact(d: &Digraph) -> Result<FasResult> {
    FasSolver::default().solve(d)
}

/// Distinct backward-arc sets of optimal orderings, at most `limit` of them,
/// sorted by their lexicographic arc lists. Each is a minimum feedback arc set.
pub fn enumerate_min_fas(d: &Digraph, limit: usize) -> Result<Vec<ArcSet>> {
    let n = d.n();
    if n > ENUMERATION_CAP {
        return Err(Error::CapExceeded { what: "minimum FAS enumeration", n, cap: ENUMERATION_CAP });
    }
    if limit == 0 {
        return Ok(Vec::new());
    }
    let f = prefix_costs(d.rows());
    let mut memo: HashMap<u64, Vec<[u16; ENUMERATION_CAP]>> = HashMap::new();
    let found = backward_sets(d.rows(), &f, low_mask(n), limit, &mut memo);
    let mut sets: Vec<ArcSet> = found
        .iter()
        .map(|rows| {
            rows.iter()
                .enumerate()
                .flat_map(|(u, &r)| Bits(r as u64).map(move |v| (u, v)))
                .collect()
        })
        .collect();
    sets.sort();
    Ok(sets)
}

// Truncating a subproblem to `limit` sets is safe: appending a fixed vertex
// maps distinct prefix sets to distinct sets.
fn backward_sets(
    rows: &[u64],
    f: &[u16],
    set: u64,
    limit: usize,
    memo: &mut HashMap<u64, Vec<[u16; ENUMERATION_CAP]>>,
) -> Vec<[u16; ENUMERATION_CAP]> {
    if set == 0 {
        return vec![[0; ENUMERATION_CAP]];
    }
    if let Some(v) = memo.get(&set) {
        return v.clone();
    }
    let mut acc: BTreeSet<[u16; ENUMERATION_CAP]> = BTreeSet::new();
    'outer: for v in Bits(set) {
        let rest = set & !bit(v);
        if f[rest as usize] + cost(rows, v, rest) != f[set as usize] {
            continue;
        }
        for mut b in backward_sets(rows, f, rest, limit, memo) {
            b[v] = (rows[v] & rest) as u16;
            acc.insert(b);
            if acc.len() >= limit {
                break 'outer;
            }
        }
    }
    let out: Vec<_> = acc.into_iter().collect();
    memo.insert(set, out.clone());
    out
}

/// ½·δ⁺·(δ⁺+1), a lower bound on τ for every digraph.
pub fn mindeg_lower_bound(d: &Digraph) -> usize {
    let k = d.min_out_degree();
    k * (k + 1) / 2
}

/// Outcome of checking the hypothesis of Isaak's question for a given arc set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsaakCheck {
    pub size: usize,
    pub tau: usize,
    pub induced_acyclic: bool,
    /// Hamiltonian path of the arc-induced subgraph, in original vertex ids.
    pub path: Option<Vec<Vertex>>,
}

impl IsaakCheck {
    pub fn holds(&self) -> bool {
        self.size == self.tau && self.induced_acyclic && self.path.is_some()
    }
}

/// Checks that `fas` is a minimum feedback arc set whose arcs form an acyclic
/// digraph with a hamiltonian path. The path only has to cover the vertices
/// incident to `fas`, not all of V.
pub fn isaak_check(d: &Digraph, fas: &ArcSet) -> Result<IsaakCheck> {
    let sub = d.arc_subgraph(fas)?;
    let tau = tau_exact(d)?.tau;
    let (induced_acyclic, path) = match sub {
        None => (true, Some(Vec::new())),
        Some((g, map)) => {
            let acyclic = g.is_acyclic();
            let path = if acyclic { g.hamiltonian_path()? } else { None };
            (acyclic, path.map(|p| p.into_iter().map(|i| map[i]).collect()))
        }
    };
    Ok(IsaakCheck { size: fas.len(), tau, induced_acyclic, path })
}

pub fn isaak_hypothesis_holds(d: &Digraph, fas: &ArcSet) -> Result<bool> {
    Ok(isaak_check(d, fas)?.holds())
}
