//! Loop-free digraphs on at most 64 vertices with one `u64` out-adjacency row
//! per vertex, plus vertex orderings and explicit arc sets.

use std::collections::BTreeSet;
use std::fmt;

use crate::bits::{bit, low_mask, Bits};
use crate::error::{Error, Result};

pub type Vertex = usize;
pub type Arc = (Vertex, Vertex);

pub const MAX_VERTICES: usize = 64;

/// Largest order accepted by [`Digraph::hamiltonian_path`].
pub const HAMILTONIAN_PATH_CAP: usize = 24;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    out: Vec<u64>,
}

impl Digraph {
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::VertexCount { n, max: MAX_VERTICES });
        }
        Ok(Self { n, out: vec![0; n] })
    }

    /// Builds a digraph with exactly the given arcs. Self-loops, duplicates and
    /// out-of-range endpoints are rejected with the offending pair.
    pub fn from_arcs<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = Arc>,
    {
        let mut g = Self::empty(n)?;
        for (u, v) in arcs {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if g.out[u] & bit(v) != 0 {
                return Err(Error::DuplicateArc(u, v));
            }
            g.out[u] |= bit(v);
        }
        Ok(g)
    }

    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::VertexCount { n, max: MAX_VERTICES });
        }
        for (u, &row) in rows.iter().enumerate() {
            if row & bit(u) != 0 {
                return Err(Error::SelfLoop(u));
            }
            if row & !low_mask(n) != 0 {
                let v = (row & !low_mask(n)).trailing_zeros() as usize;
                return Err(Error::VertexOutOfRange { u, v, n });
            }
        }
        Ok(Self { n, out: rows })
    }

    /// The transitive tournament with arcs `i -> j` for all `i < j`.
    pub fn transitive_tournament(n: usize) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for u in 0..n {
            g.out[u] = low_mask(n) & !low_mask(u + 1);
        }
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.out
    }

    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        low_mask(self.n)
    }

    #[inline]
    pub fn out_row(&self, v: Vertex) -> u64 {
        self.out[v]
    }

    pub fn in_row(&self, v: Vertex) -> u64 {
        self.out
            .iter()
            .enumerate()
            .filter(|(_, &row)| row & bit(v) != 0)
            .fold(0, |acc, (u, _)| acc | bit(u))
    }

    pub fn in_rows(&self) -> Vec<u64> {
        let mut inn = vec![0u64; self.n];
        for (u, &row) in self.out.iter().enumerate() {
            for v in Bits(row) {
                inn[v] |= bit(u);
            }
        }
        inn
    }

    #[inline]
    pub fn has_arc(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && v < self.n && self.out[u] & bit(v) != 0
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(|r| r.count_ones() as usize).sum()
    }

    /// All arcs in lexicographic order.
    pub fn arcs(&self) -> Vec<Arc> {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, &row)| Bits(row).map(move |v| (u, v)))
            .collect()
    }

    pub fn out_neighbors(&self, v: Vertex) -> Bits {
        Bits(self.out[v])
    }

    pub fn in_neighbors(&self, v: Vertex) -> Bits {
        Bits(self.in_row(v))
    }

    #[inline]
    pub fn out_degree(&self, v: Vertex) -> usize {
        self.out[v].count_ones() as usize
    }

    pub fn in_degree(&self, v: Vertex) -> usize {
        self.in_row(v).count_ones() as usize
    }

    /// δ⁺, the minimum out-degree.
    pub fn min_out_degree(&self) -> usize {
        (0..self.n).map(|v| self.out_degree(v)).min().unwrap_or(0)
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::NoSuchVertex { v, n: self.n })
        }
    }

    /// No pair of opposite arcs.
    pub fn is_oriented(&self) -> bool {
        let inn = self.in_rows();
        self.out.iter().zip(&inn).all(|(o, i)| o & i == 0)
    }

    pub fn is_tournament(&self) -> bool {
        let inn = self.in_rows();
        let all = self.vertex_mask();
        (0..self.n).all(|v| self.out[v] & inn[v] == 0 && (self.out[v] | inn[v]) == all & !bit(v))
    }

    /// `u` is joined to every other vertex by at least one arc.
    pub fn is_adjacent_to_all(&self, v: Vertex) -> bool {
        let others = self.vertex_mask() & !bit(v);
        (self.out[v] | self.in_row(v)) == others
    }

    pub fn without_arcs<'a, I>(&self, arcs: I) -> Self
    where
        I: IntoIterator<Item = &'a Arc>,
    {
        let mut g = self.clone();
        for &(u, v) in arcs {
            if u < self.n {
                g.out[u] &= !bit(v);
            }
        }
        g
    }

    /// Image of the digraph under `v -> perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Result<Self> {
        check_permutation(perm, self.n)?;
        let mut out = vec![0u64; self.n];
        for (u, &row) in self.out.iter().enumerate() {
            for v in Bits(row) {
                out[perm[u]] |= bit(perm[v]);
            }
        }
        Ok(Self { n: self.n, out })
    }

    /// Arcs that point from a later to an earlier vertex of `order`.
    pub fn backward_arcs(&self, order: &VertexOrdering) -> Result<ArcSet> {
        if order.len() != self.n {
            return Err(Error::NotAPermutation(self.n));
        }
        let pos = order.positions();
        Ok(self
            .arcs()
            .into_iter()
            .filter(|&(u, v)| pos[u] > pos[v])
            .collect())
    }

    /// A topological ordering if the digraph is acyclic. Among available
    /// sources the smallest id is taken first.
    pub fn topological_order(&self) -> Option<VertexOrdering> {
        let mut remaining = self.vertex_mask();
        let inn = self.in_rows();
        let mut perm = Vec::with_capacity(self.n);
        while remaining != 0 {
            let source = Bits(remaining).find(|&v| inn[v] & remaining == 0)?;
            perm.push(source);
            remaining &= !bit(source);
        }
        Some(VertexOrdering { perm })
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }

    /// Union of out-neighborhoods of the out-neighbors of `v`, minus N⁺(v) and `v`.
    pub fn second_out_neighborhood(&self, v: Vertex) -> u64 {
        let first = self.out[v];
        let reach = Bits(first).fold(0u64, |acc, u| acc | self.out[u]);
        reach & !first & !bit(v)
    }

    /// Vertices reachable from `v` (including `v`) following arcs of `rows`.
    fn reach(rows: &[u64], v: Vertex, within: u64) -> u64 {
        let mut seen = bit(v);
        let mut frontier = bit(v);
        while frontier != 0 {
            let next = Bits(frontier).fold(0, |acc, u| acc | rows[u]) & within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    pub fn is_strongly_connected(&self) -> bool {
        let all = self.vertex_mask();
        Self::reach(&self.out, 0, all) == all && Self::reach(&self.in_rows(), 0, all) == all
    }

    /// Strongly connected components as vertex masks, ordered by smallest member.
    pub fn strong_components(&self) -> Vec<u64> {
        strong_components(&self.out, &self.in_rows(), self.vertex_mask())
    }

    /// Degree-balanced and strongly connected.
    pub fn is_eulerian(&self) -> bool {
        (0..self.n).all(|v| self.out_degree(v) == self.in_degree(v)) && self.is_strongly_connected()
    }

    /// A directed path through every vertex, found by subset dynamic programming.
    pub fn hamiltonian_path(&self) -> Result<Option<Vec<Vertex>>> {
        let n = self.n;
        if n > HAMILTONIAN_PATH_CAP {
            return Err(Error::CapExceeded {
                what: "hamiltonian path search",
                n,
                cap: HAMILTONIAN_PATH_CAP,
            });
        }
        let inn = self.in_rows();
        let full = low_mask(n) as usize;
        // ends[S] = vertices v such that some path covering exactly S ends at v
        let mut ends = vec![0u32; full + 1];
        for v in 0..n {
            ends[1 << v] = 1 << v;
        }
        for set in 1..=full {
            let e = ends[set];
            if e == 0 {
                continue;
            }
            let mut ext = 0u64;
            for v in Bits(e as u64) {
                ext |= self.out[v];
            }
            for w in Bits(ext & !(set as u64)) {
                if inn[w] & e as u64 != 0 {
                    ends[set | 1 << w] |= 1 << w;
                }
            }
        }
        if ends[full] == 0 {
            return Ok(None);
        }
        let mut path = Vec::with_capacity(n);
        let mut set = full;
        let mut last = ends[full].trailing_zeros() as usize;
        loop {
            path.push(last);
            set &= !(1 << last);
            if set == 0 {
                break;
            }
            let prev = (ends[set] as u64) & inn[last];
            last = prev.trailing_zeros() as usize;
        }
        path.reverse();
        Ok(Some(path))
    }

    /// The subgraph formed by `arcs` on the vertices they touch, together with
    /// the map from its vertex ids back to ours. `None` for an empty arc set.
    pub fn arc_subgraph(&self, arcs: &ArcSet) -> Result<Option<(Digraph, Vec<Vertex>)>> {
        for &(u, v) in arcs.iter() {
            if !self.has_arc(u, v) {
                return Err(Error::NotAnArc(u, v));
            }
        }
        if arcs.is_empty() {
            return Ok(None);
        }
        let touched: BTreeSet<Vertex> = arcs.iter().flat_map(|&(u, v)| [u, v]).collect();
        let map: Vec<Vertex> = touched.into_iter().collect();
        let mut index = [usize::MAX; MAX_VERTICES];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let sub = Digraph::from_arcs(map.len(), arcs.iter().map(|&(u, v)| (index[u], index[v])))?;
        Ok(Some((sub, map)))
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Digraph")
            .field("n", &self.n)
            .field("arcs", &self.arcs())
            .finish()
    }
}

/// Strong components of the subgraph on `within`, via forward/backward reachability.
pub(crate) fn strong_components(out: &[u64], inn: &[u64], within: u64) -> Vec<u64> {
    let mut left = within;
    let mut comps = Vec::new();
    while left != 0 {
        let v = left.trailing_zeros() as usize;
        let comp = Digraph::reach(out, v, left) & Digraph::reach(inn, v, left);
        comps.push(comp);
        left &= !comp;
    }
    comps
}

fn check_permutation(perm: &[Vertex], n: usize) -> Result<()> {
    if perm.len() != n {
        return Err(Error::NotAPermutation(n));
    }
    let mut seen = 0u64;
    for &v in perm {
        if v >= n || seen & bit(v) != 0 {
            return Err(Error::NotAPermutation(n));
        }
        seen |= bit(v);
    }
    Ok(())
}

/// A permutation of `0..n`, listing vertices from first to last.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexOrdering {
    perm: Vec<Vertex>,
}

impl VertexOrdering {
    pub fn new(perm: Vec<Vertex>) -> Result<Self> {
        check_permutation(&perm, perm.len())?;
        Ok(Self { perm })
    }

    pub fn identity(n: usize) -> Self {
        Self { perm: (0..n).collect() }
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.perm
    }

    /// `positions()[v]` is the index of `v` in the ordering.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.perm.len()];
        for (i, &v) in self.perm.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }
}

/// An explicit set of arcs, iterated in lexicographic order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArcSet(BTreeSet<Arc>);

impl ArcSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, arc: &Arc) -> bool {
        self.0.contains(arc)
    }

    pub fn insert(&mut self, arc: Arc) -> bool {
        self.0.insert(arc)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Arc> + '_ {
        self.0.iter()
    }

    pub fn to_vec(&self) -> Vec<Arc> {
        self.0.iter().copied().collect()
    }
}

impl FromIterator<Arc> for ArcSet {
    fn from_iter<I: IntoIterator<Item = Arc>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a ArcSet {
    type Item = &'a Arc;
    type IntoIter = std::collections::btree_set::Iter<'a, Arc>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}
