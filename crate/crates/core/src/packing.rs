//! Arc-disjoint cycle packings: the exact maximum ν(D) by branch and bound,
//! a brute-force oracle for tiny graphs, packing validation, and 3-cycles
//! through a fixed vertex.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::bits::{bit, Bits};
use crate::digraph::{strong_components, Arc, ArcSet, Digraph, Vertex};
use crate::error::{Error, Result};
use crate::fas::{tau_of_induced, DEFAULT_FAS_CAP};

pub type Cycle = Vec<Vertex>;

/// Arcs of a cycle given as its vertex sequence, closing back to the start.
pub fn cycle_arcs(c: &[Vertex]) -> impl Iterator<Item = Arc> + '_ {
    (0..c.len()).map(move |i| (c[i], c[(i + 1) % c.len()]))
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CyclePacking {
    pub cycles: Vec<Cycle>,
}

impl CyclePacking {
    pub fn new(cycles: Vec<Cycle>) -> Self {
        Self { cycles }
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    /// Union of the arcs of all cycles.
    pub fn arcs(&self) -> ArcSet {
        self.cycles.iter().flat_map(|c| cycle_arcs(c)).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum PackingViolation {
    #[error("cycle {index} has fewer than two vertices")]
    TooShort { index: usize },
    #[error("cycle {index} repeats or leaves the vertex range at {vertex}")]
    BadVertex { index: usize, vertex: Vertex },
    #[error("cycle {index} uses ({},{}) which is not an arc", .arc.0, .arc.1)]
    MissingArc { index: usize, arc: Arc },
    #[error("cycle {index} reuses arc ({},{})", .arc.0, .arc.1)]
    ReusedArc { index: usize, arc: Arc },
}

/// Checks that every cycle is a simple directed cycle of `d` and that no arc
/// is used twice. Reports the first violation found.
pub fn validate_packing(d: &Digraph, p: &CyclePacking) -> Result<(), PackingViolation> {
    let mut used = vec![0u64; d.n()];
    for (index, c) in p.cycles.iter().enumerate() {
        if c.len() < 2 {
            return Err(PackingViolation::TooShort { index });
        }
        let mut seen = 0u64;
        for &x in c {
            if x >= d.n() || seen & bit(x) != 0 {
                return Err(PackingViolation::BadVertex { index, vertex: x });
            }
            seen |= bit(x);
        }
        for (u, v) in cycle_arcs(c) {
            if !d.has_arc(u, v) {
                return Err(PackingViolation::MissingArc { index, arc: (u, v) });
            }
            if used[u] & bit(v) != 0 {
                return Err(PackingViolation::ReusedArc { index, arc: (u, v) });
            }
            used[u] |= bit(v);
        }
    }
    Ok(())
}

pub fn is_valid_packing(d: &Digraph, p: &CyclePacking) -> bool {
    validate_packing(d, p).is_ok()
}

/// Effort limits for [`nu_exact`]; whichever runs out first stops the search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: u64,
    pub max_time: Duration,
}

pub const BUDGET_NODES_ENV: &str = "FASNU_BUDGET_NODES";
pub const BUDGET_SECS_ENV: &str = "FASNU_BUDGET_SECS";

impl Default for Budget {
    fn default() -> Self {
        Self { max_nodes: 100_000_000, max_time: Duration::from_secs(30 * 60) }
    }
}

impl Budget {
    pub fn unlimited() -> Self {
        Self { max_nodes: u64::MAX, max_time: Duration::MAX }
    }

    /// Defaults, overridden by `FASNU_BUDGET_NODES` / `FASNU_BUDGET_SECS` when set.
    pub fn from_env() -> Self {
        let mut b = Self::default();
        if let Some(n) = std::env::var(BUDGET_NODES_ENV).ok().and_then(|s| s.trim().parse().ok()) {
            b.max_nodes = n;
        }
        if let Some(s) = std::env::var(BUDGET_SECS_ENV).ok().and_then(|s| s.trim().parse::<f64>().ok()) {
            b.max_time = Duration::from_secs_f64(s.max(0.0));
        }
        b
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveReport {
    pub value: usize,
    pub certificate: CyclePacking,
    /// True when the search finished, so `value` is ν(D); otherwise it is a lower bound.
    pub optimal: bool,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

/// Branch and bound for ν(D).
///
/// Each node branches on the lexicographically smallest arc `e` lying on a
/// cycle: either `e` is unused, or exactly one cycle through `e` is packed.
/// Cycles through `e` are tried shortest first. Nodes are pruned with
/// `⌊Σ_v min(d⁺(v), d⁻(v)) / g⌋` over arcs on cycles (`g` = 3 for oriented
/// residuals, 2 otherwise) and, near the root, with τ of each strong component.
#[derive(Clone, Copy, Debug)]
pub struct NuSolver {
    pub budget: Budget,
    /// Depth up to which the τ bound is evaluated.
    pub tau_bound_depth: usize,
}

impl Default for NuSolver {
    fn default() -> Self {
        Self { budget: Budget::default(), tau_bound_depth: 2 }
    }
}

impl NuSolver {
    pub fn new(budget: Budget) -> Self {
        Self { budget, ..Self::default() }
    }

    pub fn solve(&self, d: &Digraph) -> SolveReport {
        let start = Instant::now();
        let greedy = greedy_packing(d);
        let mut search = Search {
            rows: d.rows().to_vec(),
            stack: Vec::new(),
            best: greedy.len(),
            best_cycles: greedy,
            nodes: 0,
            budget: self.budget,
            start,
            aborted: false,
            tau_depth: self.tau_bound_depth,
            refuted: HashMap::new(),
        };
        search.node(0);
        SolveReport {
            value: search.best,
            certificate: CyclePacking::new(search.best_cycles),
            optimal: !search.aborted,
            nodes_explored: search.nodes,
            elapsed: start.elapsed(),
        }
    }
}

pub fn nu_exact(d: &Digraph, budget: Budget) -> SolveReport {
    NuSolver::new(budget).solve(d)
}

struct Search {
    rows: Vec<u64>,
    stack: Vec<Cycle>,
    best: usize,
    best_cycles: Vec<Cycle>,
    nodes: u64,
    budget: Budget,
    start: Instant,
    aborted: bool,
    tau_depth: usize,
    /// Residual graphs already searched to completion, with the proven upper
    /// bound on their packing number.
    refuted: HashMap<Vec<u64>, usize>,
}

const REFUTED_LIMIT: usize = 1 << 21;

impl Search {
    fn out_of_budget(&mut self) -> bool {
        if self.nodes >= self.budget.max_nodes
            || (self.nodes.is_multiple_of(1024) && self.start.elapsed() >= self.budget.max_time)
        {
            self.aborted = true;
        }
        self.aborted
    }

    fn node(&mut self, depth: usize) {
        if self.aborted || self.out_of_budget() {
            return;
        }
        self.nodes += 1;
        let value = self.stack.len();

        // Arcs between different strong components lie on no cycle.
        let n = self.rows.len();
        let mut inn = vec![0u64; n];
        for (u, &row) in self.rows.iter().enumerate() {
            for v in Bits(row) {
                inn[v] |= bit(u);
            }
        }
        let comps = strong_components(&self.rows, &inn, crate::bits::low_mask(n));
        let mut cyc = vec![0u64; n];
        let mut cyc_in = vec![0u64; n];
        for &c in &comps {
            for u in Bits(c) {
                cyc[u] = self.rows[u] & c;
                cyc_in[u] = inn[u] & c;
            }
        }
        if cyc.iter().all(|&r| r == 0) {
            if value > self.best {
                self.best = value;
                self.best_cycles = self.stack.clone();
            }
            return;
        }
        if let Some(&bound) = self.refuted.get(&cyc) {
            if value + bound <= self.best {
                return;
            }
        }

        let digon = (0..n).any(|u| cyc[u] & cyc_in[u] != 0);
        let girth = if digon { 2 } else { 3 };
        let degree_sum: usize = (0..n)
            .map(|u| cyc[u].count_ones().min(cyc_in[u].count_ones()) as usize)
            .sum();
        let mut bound = degree_sum / girth;
        if value + bound <= self.best {
            return;
        }
        if depth <= self.tau_depth {
            let tau: Option<usize> = comps
                .iter()
                .filter(|c| c.count_ones() > 1)
                .map(|&c| (c.count_ones() as usize <= DEFAULT_FAS_CAP).then(|| tau_of_induced(&cyc, c)))
                .sum();
            if let Some(t) = tau {
                bound = bound.min(t);
                if value + bound <= self.best {
                    return;
                }
            }
        }

        let saved = std::mem::replace(&mut self.rows, cyc.clone());
        let u = (0..n).find(|&u| cyc[u] != 0).unwrap();
        let v = cyc[u].trailing_zeros() as usize;

        'lengths: for len in 1..n {
            for path in paths_of_length(&self.rows, v, u, len) {
                let cycle: Cycle = std::iter::once(u).chain(path).collect();
                for (x, y) in cycle_arcs(&cycle) {
                    self.rows[x] &= !bit(y);
                }
                self.stack.push(cycle);
                self.node(depth + 1);
                let cycle = self.stack.pop().unwrap();
                for (x, y) in cycle_arcs(&cycle) {
                    self.rows[x] |= bit(y);
                }
                if self.aborted || value + bound <= self.best {
                    break 'lengths;
                }
            }
        }
        if !self.aborted && value + bound > self.best {
            self.rows[u] &= !bit(v);
            self.node(depth + 1);
            self.rows[u] |= bit(v);
        }
        self.rows = saved;

        // Finished without aborting: nothing in this residual beats best - value.
        if !self.aborted && self.refuted.len() < REFUTED_LIMIT {
            self.refuted.insert(cyc, self.best - value);
        }
    }
}

/// All simple paths `from -> ... -> to` with exactly `len` arcs, in
/// lexicographic order, returned without the final vertex `to`.
fn paths_of_length(rows: &[u64], from: Vertex, to: Vertex, len: usize) -> Vec<Vec<Vertex>> {
    fn go(rows: &[u64], to: Vertex, left: usize, path: &mut Vec<Vertex>, used: u64, out: &mut Vec<Vec<Vertex>>) {
        let last = *path.last().unwrap();
        if left == 1 {
            if rows[last] & bit(to) != 0 {
                out.push(path.clone());
            }
            return;
        }
        for w in Bits(rows[last] & !used & !bit(to)) {
            path.push(w);
            go(rows, to, left - 1, path, used | bit(w), out);
            path.pop();
        }
    }
    let mut out = Vec::new();
    let mut path = vec![from];
    go(rows, to, len, &mut path, bit(from) | bit(to), &mut out);
    out
}

/// Shortest cycle through arc `(u, v)` in `rows`, by breadth-first search from `v`.
fn shortest_cycle_through(rows: &[u64], u: Vertex, v: Vertex) -> Option<Cycle> {
    let n = rows.len();
    let mut parent = vec![usize::MAX; n];
    let mut seen = bit(v);
    let mut frontier = vec![v];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &x in &frontier {
            if x == u {
                let mut path = vec![u];
                let mut y = u;
                while y != v {
                    y = parent[y];
                    path.push(y);
                }
                path.reverse();
                // path is v .. u; the cycle starts at u
                let mut cycle = vec![u];
                cycle.extend_from_slice(&path[..path.len() - 1]);
                return Some(cycle);
            }
            for w in Bits(rows[x] & !seen) {
                seen |= bit(w);
                parent[w] = x;
                next.push(w);
            }
        }
        frontier = next;
    }
    None
}

/// Repeatedly removes a globally shortest cycle until the graph is acyclic.
pub fn greedy_packing(d: &Digraph) -> Vec<Cycle> {
    let mut rows = d.rows().to_vec();
    let mut out = Vec::new();
    loop {
        let mut best: Option<Cycle> = None;
        for u in 0..rows.len() {
            for v in Bits(rows[u]) {
                if let Some(c) = shortest_cycle_through(&rows, u, v) {
                    if best.as_ref().is_none_or(|b| c.len() < b.len()) {
                        best = Some(c);
                    }
                }
            }
            if best.as_ref().is_some_and(|b| b.len() == 2) {
                break;
            }
        }
        match best {
            None => return out,
            Some(c) => {
                for (x, y) in cycle_arcs(&c) {
                    rows[x] &= !bit(y);
                }
                out.push(c);
            }
        }
    }
}

pub const BRUTEFORCE_CAP: usize = 7;

/// Every simple cycle, each listed once starting from its smallest vertex.
pub fn simple_cycles(d: &Digraph) -> Vec<Cycle> {
    fn go(d: &Digraph, start: Vertex, path: &mut Vec<Vertex>, used: u64, out: &mut Vec<Cycle>) {
        let last = *path.last().unwrap();
        for w in Bits(d.out_row(last)) {
            if w == start && path.len() >= 2 {
                out.push(path.clone());
            } else if w > start && used & bit(w) == 0 {
                path.push(w);
                go(d, start, path, used | bit(w), out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    for s in 0..d.n() {
        go(d, s, &mut vec![s], bit(s), &mut out);
    }
    out
}

/// ν(D) by listing all simple cycles and exhaustively searching arc-disjoint
/// subfamilies (memoised on the set of unused arcs). Only for `n ≤ 7`.
pub fn nu_bruteforce(d: &Digraph) -> Result<usize> {
    let n = d.n();
    if n > BRUTEFORCE_CAP {
        return Err(Error::CapExceeded { what: "brute-force packing", n, cap: BRUTEFORCE_CAP });
    }
    let masks: Vec<u64> = simple_cycles(d)
        .iter()
        .map(|c| cycle_arcs(c).fold(0u64, |m, (u, v)| m | bit(u * n + v)))
        .collect();
    let all = masks.iter().fold(0, |a, m| a | m);
    Ok(max_disjoint(&masks, all, &mut HashMap::new()))
}

/// Largest number of pairwise disjoint masks inside `avail`.
pub(crate) fn max_disjoint(masks: &[u64], avail: u64, memo: &mut HashMap<u64, usize>) -> usize {
    if let Some(&r) = memo.get(&avail) {
        return r;
    }
    let live: Vec<u64> = masks.iter().copied().filter(|m| m & !avail == 0).collect();
    let result = match live.first() {
        None => 0,
        Some(&first) => {
            // any packing either avoids this arc or uses exactly one family through it
            let a = first & first.wrapping_neg();
            let mut best = max_disjoint(&live, avail & !a, memo);
            for &m in live.iter().filter(|&&m| m & a != 0) {
                best = best.max(1 + max_disjoint(&live, avail & !m, memo));
            }
            best
        }
    };
    memo.insert(avail, result);
    result
}

/// Number of 3-cycles through `v`: arcs from N⁺(v) to N⁻(v).
pub fn count_triangles_through(d: &Digraph, v: Vertex) -> Result<usize> {
    d.check_vertex(v)?;
    let inn = d.in_row(v);
    Ok(d.out_neighbors(v).map(|x| (d.out_row(x) & inn).count_ones() as usize).sum())
}

/// Maximum number of arc-disjoint 3-cycles through `v`.
///
/// A 3-cycle `v x y` uses `(v,x)`, `(x,y)` and `(y,v)`, so a family is
/// arc-disjoint exactly when its `(x, y)` pairs form a matching between
/// N⁺(v) and N⁻(v) along arcs `x -> y`.
pub fn max_triangles_through(d: &Digraph, v: Vertex) -> Result<(usize, CyclePacking)> {
    d.check_vertex(v)?;
    let left: Vec<Vertex> = d.out_neighbors(v).collect();
    let right_mask = d.in_row(v);
    let adj: Vec<u64> = left.iter().map(|&x| d.out_row(x) & right_mask).collect();
    let mate = bipartite_matching(&adj, d.n());
    let cycles: Vec<Cycle> = (0..d.n())
        .filter_map(|y| mate[y].map(|i| vec![v, left[i], y]))
        .collect();
    Ok((cycles.len(), CyclePacking::new(cycles)))
}

/// Kuhn's augmenting-path matching. `adj[i]` is the right-side neighbor mask
/// of left vertex `i`; returns for each right vertex its matched left index.
fn bipartite_matching(adj: &[u64], right_size: usize) -> Vec<Option<usize>> {
    fn augment(i: usize, adj: &[u64], mate: &mut [Option<usize>], visited: &mut u64) -> bool {
        for y in Bits(adj[i] & !*visited) {
            *visited |= bit(y);
            if mate[y].is_none_or(|j| augment(j, adj, mate, visited)) {
                mate[y] = Some(i);
                return true;
            }
        }
        false
    }
    let mut mate = vec![None; right_size];
    for i in 0..adj.len() {
        let mut visited = 0u64;
        augment(i, adj, &mut mate, &mut visited);
    }
    mate
}

/// Whether some vertex of minimum out-degree lies on δ⁺(T) arc-disjoint 3-cycles.
pub fn florek_conjecture_check(t: &Digraph) -> Result<bool> {
    if !t.is_tournament() {
        return Err(Error::NotTournament);
    }
    let k = t.min_out_degree();
    for v in (0..t.n()).filter(|&v| t.out_degree(v) == k) {
        if max_triangles_through(t, v)?.0 >= k {
            return Ok(true);
        }
    }
    Ok(false)
}
