//! Arc-disjoint cycles through a fixed vertex as a unit-capacity max flow.
//!
//! `v0` is split into a source keeping its out-arcs and a sink receiving its
//! in-arcs. Integral flows of value `k` decompose into `k` arc-disjoint cycles
//! through `v0`, and a minimum cut is a smallest arc set meeting every such
//! cycle.

use crate::digraph::{ArcSet, Digraph, Vertex};
use crate::error::{Error, Result};
use crate::packing::{Cycle, CyclePacking};

struct Edge {
    to: usize,
    cap: u8,
}

struct UnitNetwork {
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
    source: usize,
    sink: usize,
}

impl UnitNetwork {
    fn split_at(d: &Digraph, v0: Vertex) -> Self {
        let n = d.n();
        let mut net = Self { edges: Vec::new(), adj: vec![Vec::new(); n + 1], source: v0, sink: n };
        for (x, y) in d.arcs() {
            let to = if y == v0 { n } else { y };
            let e = net.edges.len();
            net.edges.push(Edge { to, cap: 1 });
            net.edges.push(Edge { to: x, cap: 0 });
            net.adj[x].push(e);
            net.adj[to].push(e + 1);
        }
        net
    }

    fn augment(&mut self, x: usize, seen: &mut [bool]) -> bool {
        if x == self.sink {
            return true;
        }
        seen[x] = true;
        for i in 0..self.adj[x].len() {
            let e = self.adj[x][i];
            let to = self.edges[e].to;
            if self.edges[e].cap > 0 && !seen[to] && self.augment(to, seen) {
                self.edges[e].cap -= 1;
                self.edges[e ^ 1].cap += 1;
                return true;
            }
        }
        false
    }

    fn max_flow(&mut self) -> usize {
        let mut flow = 0;
        loop {
            let mut seen = vec![false; self.adj.len()];
            if !self.augment(self.source, &mut seen) {
                return flow;
            }
            flow += 1;
        }
    }

    fn carries_flow(&self, e: usize) -> bool {
        e.is_multiple_of(2) && self.edges[e].cap == 0
    }

    /// Peels one cycle per unit of flow, always following the smallest-index
    /// flow arc and cutting out any closed loop met along the way.
    fn decompose(&self, v0: Vertex) -> Vec<Cycle> {
        let mut used = vec![false; self.edges.len()];
        let mut out_flow: Vec<Vec<usize>> = self
            .adj
            .iter()
            .map(|es| es.iter().copied().filter(|&e| self.carries_flow(e)).collect())
            .collect();
        for es in &mut out_flow {
            es.sort_by_key(|&e| self.edges[e].to);
        }
        let mut cycles = Vec::new();
        while let Some(&first) = out_flow[self.source].iter().find(|&&e| !used[e]) {
            used[first] = true;
            let mut path = vec![v0];
            let mut cur = self.edges[first].to;
            while cur != self.sink {
                if let Some(pos) = path.iter().position(|&p| p == cur) {
                    path.truncate(pos);
                }
                path.push(cur);
                let e = *out_flow[cur]
                    .iter()
                    .find(|&&e| !used[e])
                    .expect("flow conservation");
                used[e] = true;
                cur = self.edges[e].to;
            }
            cycles.push(path);
        }
        cycles
    }

    fn source_side(&self) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        let mut stack = vec![self.source];
        seen[self.source] = true;
        while let Some(x) = stack.pop() {
            for &e in &self.adj[x] {
                let to = self.edges[e].to;
                if self.edges[e].cap > 0 && !seen[to] {
                    seen[to] = true;
                    stack.push(to);
                }
            }
        }
        seen
    }
}

/// Maximum number of arc-disjoint cycles through `v0`, with the cycles.
pub fn max_cycles_through(d: &Digraph, v0: Vertex) -> Result<(usize, CyclePacking)> {
    d.check_vertex(v0)?;
    let mut net = UnitNetwork::split_at(d, v0);
    let k = net.max_flow();
    let cycles = net.decompose(v0);
    debug_assert_eq!(cycles.len(), k);
    Ok((k, CyclePacking::new(cycles)))
}

/// A minimum set of arcs meeting every cycle through `v0`.
pub fn min_arc_cover_through(d: &Digraph, v0: Vertex) -> Result<ArcSet> {
    d.check_vertex(v0)?;
    let mut net = UnitNetwork::split_at(d, v0);
    net.max_flow();
    let side = net.source_side();
    let n = d.n();
    let mut cut = ArcSet::new();
    for (x, es) in net.adj.iter().enumerate() {
        for &e in es.iter().filter(|&&e| e % 2 == 0) {
            let to = net.edges[e].to;
            if side[x] && !side[to] {
                cut.insert((x, if to == n { v0 } else { to }));
            }
        }
    }
    Ok(cut)
}

/// Quantities in the hypothesis about a vertex joined to all others.
/// `None` for `a` or `b` stands for +∞ (empty out- or in-neighborhood).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Theorem21Params {
    pub v0: Vertex,
    /// Minimum out-degree over N⁺(v0).
    pub a: Option<usize>,
    /// Minimum out-degree over N⁻(v0).
    pub b: Option<usize>,
    /// d⁺(v0).
    pub d: usize,
}

/// Returns the parameters when `v0` is adjacent to every other vertex and
/// `d⁺(v0) ≤ min(a, (a+b+1)/2)`, compared as `2·d⁺(v0) ≤ a+b+1`.
pub fn theorem21_applies(g: &Digraph, v0: Vertex) -> Result<Option<Theorem21Params>> {
    g.check_vertex(v0)?;
    if !g.is_oriented() {
        return Err(Error::NotOriented);
    }
    if !g.is_adjacent_to_all(v0) {
        return Ok(None);
    }
    let a = g.out_neighbors(v0).map(|v| g.out_degree(v)).min();
    let b = g.in_neighbors(v0).map(|v| g.out_degree(v)).min();
    let d = g.out_degree(v0);
    let ok = match (a, b) {
        (None, _) => true,
        (Some(a), None) => d <= a,
        (Some(a), Some(b)) => d <= a && 2 * d <= a + b + 1,
    };
    Ok(ok.then_some(Theorem21Params { v0, a, b, d }))
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Theorem21Report {
    /// Every eligible vertex with its parameters and the number of
    /// arc-disjoint cycles found through it.
    pub checked: Vec<(Theorem21Params, usize)>,
    pub violations: Vec<Vertex>,
}

/// At every eligible vertex, checks that it lies on d⁺(v0) arc-disjoint cycles.
pub fn verify_theorem21(g: &Digraph) -> Result<Theorem21Report> {
    if !g.is_oriented() {
        return Err(Error::NotOriented);
    }
    let mut report = Theorem21Report::default();
    for v0 in 0..g.n() {
        if let Some(p) = theorem21_applies(g, v0)? {
            let (k, _) = max_cycles_through(g, v0)?;
            if k < p.d {
                report.violations.push(v0);
            }
            report.checked.push((p, k));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::packing::is_valid_packing;

    fn c3() -> Digraph {
        Digraph::from_arcs(3, [(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    #[test]
    fn three_cycle() {
        let (k, p) = max_cycles_through(&c3(), 0).unwrap();
        assert_eq!(k, 1);
        assert_eq!(p.cycles, vec![vec![0, 1, 2]]);
        let cut = min_arc_cover_through(&c3(), 0).unwrap();
        assert_eq!(cut.len(), 1);
        assert!(c3().without_arcs(cut.iter()).is_acyclic());
    }

    #[test]
    fn transitive_has_none() {
        let t = Digraph::transitive_tournament(6).unwrap();
        for v in 0..6 {
            assert_eq!(max_cycles_through(&t, v).unwrap().0, 0);
            assert!(min_arc_cover_through(&t, v).unwrap().is_empty());
        }
    }

    #[test]
    fn loops_in_flow_are_cut_out() {
        // Two routes from 1 back to 0; flow may run through the 2-3-4 loop.
        let g = Digraph::from_arcs(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 2), (4, 0), (2, 0)]).unwrap();
        let (k, p) = max_cycles_through(&g, 0).unwrap();
        assert_eq!(k, 1);
        assert!(is_valid_packing(&g, &p));
        assert!(p.cycles.iter().all(|c| c[0] == 0));
    }

    #[test]
    fn hypothesis_cases() {
        let p = theorem21_applies(&c3(), 0).unwrap().unwrap();
        assert_eq!(p, Theorem21Params { v0: 0, a: Some(1), b: Some(1), d: 1 });
        let t = Digraph::transitive_tournament(5).unwrap();
        assert_eq!(theorem21_applies(&t, 0).unwrap(), None);
        // the sink has d⁺ = 0 and qualifies vacuously
        assert_eq!(theorem21_applies(&t, 4).unwrap().unwrap().d, 0);
        let digon = Digraph::from_arcs(2, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(theorem21_applies(&digon, 0), Err(Error::NotOriented));
        let path = Digraph::from_arcs(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(theorem21_applies(&path, 0).unwrap(), None);
    }

    #[test]
    fn verify_three_cycle() {
        let r = verify_theorem21(&c3()).unwrap();
        assert_eq!(r.checked.len(), 3);
        assert!(r.violations.is_empty());
    }
}
