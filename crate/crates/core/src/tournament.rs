//! Isomorphism classes of small tournaments.
//!
//! A tournament on positions `0..n` is encoded by one bit per pair `i < j`,
//! set when the arc points from `j` back to `i`. Pairs are taken column by
//! column, `(0,1), (0,2), (1,2), (0,3), …`, and the first pair is the most
//! significant bit. The canonical code is the smallest such value over all
//! relabelings, found by a search over permutations that discards any partial
//! labeling whose prefix already exceeds the best code.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::bits::{bit, low_mask, Bits};
use crate::digraph::{Digraph, Vertex};
use crate::error::{Error, Result};
use crate::fas::tau_exact;
use crate::packing::{florek_conjecture_check, nu_exact, Budget};

pub const CANONICAL_CAP: usize = 11;
pub const ENUMERATION_CAP: usize = 7;
pub const AUTOMORPHISM_CAP: usize = 7;
pub const SWEEP_CAP: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode {
    n: u8,
    bits: u64,
}

const fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

impl CanonicalCode {
    pub fn order(&self) -> usize {
        self.n as usize
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// The labeled tournament whose code (under the identity labeling) is `self`.
    pub fn tournament(&self) -> Digraph {
        from_code_bits(self.order(), self.bits)
    }
}

impl fmt::Display for CanonicalCode {
    /// `<n>:<hex>` with the hex zero-padded to the code length.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = pair_count(self.order()).div_ceil(4).max(1);
        write!(f, "{}:{:0width$x}", self.n, self.bits, width = width)
    }
}

impl FromStr for CanonicalCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::Parse { line: 0, msg: format!("{msg}: `{s}`") };
        let (n, hex) = s.split_once(':').ok_or_else(|| bad("expected <n>:<hex>"))?;
        let n: usize = n.parse().map_err(|_| bad("bad order"))?;
        if n == 0 || n > CANONICAL_CAP {
            return Err(bad("order out of range"));
        }
        let bits = u64::from_str_radix(hex, 16).map_err(|_| bad("bad hex"))?;
        if bits >> pair_count(n) != 0 {
            return Err(bad("code too long for order"));
        }
        Ok(Self { n: n as u8, bits })
    }
}

fn from_code_bits(n: usize, bits: u64) -> Digraph {
    let len = pair_count(n);
    let mut rows = vec![0u64; n];
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if bits >> (len - 1 - idx) & 1 == 1 {
                rows[j] |= bit(i);
            } else {
                rows[i] |= bit(j);
            }
            idx += 1;
        }
    }
    Digraph::from_rows(rows).expect("code bits describe a tournament")
}

struct CanonSearch<'a> {
    rows: &'a [u64],
    n: usize,
    len: usize,
    perm: Vec<Vertex>,
    best: Option<u64>,
    best_perm: Vec<Vertex>,
    ties: usize,
}

impl CanonSearch<'_> {
    fn go(&mut self, used: u64, prefix: u64, prefix_len: usize) {
        let p = self.perm.len();
        if p == self.n {
            match self.best {
                Some(b) if prefix > b => {}
                Some(b) if prefix == b => self.ties += 1,
                _ => {
                    self.best = Some(prefix);
                    self.best_perm = self.perm.clone();
                    self.ties = 1;
                }
            }
            return;
        }
        for w in Bits(low_mask(self.n) & !used) {
            let mut next = prefix;
            for &earlier in &self.perm {
                next = next << 1 | (self.rows[w] >> earlier & 1);
            }
            let next_len = prefix_len + p;
            if let Some(b) = self.best {
                if next > b >> (self.len - next_len) {
                    continue;
                }
            }
            self.perm.push(w);
            self.go(used | bit(w), next, next_len);
            self.perm.pop();
        }
    }
}

/// Canonical code of a tournament together with a relabeling attaining it
/// (`perm[position] = vertex`) and the number of relabelings that do.
pub fn canonical_form(t: &Digraph) -> Result<(CanonicalCode, Vec<Vertex>, usize)> {
    let n = t.n();
    if n > CANONICAL_CAP {
        return Err(Error::CapExceeded { what: "canonical code", n, cap: CANONICAL_CAP });
    }
    if !t.is_tournament() {
        return Err(Error::NotTournament);
    }
    let mut s = CanonSearch {
        rows: t.rows(),
        n,
        len: pair_count(n),
        perm: Vec::with_capacity(n),
        best: None,
        best_perm: Vec::new(),
        ties: 0,
    };
    s.go(0, 0, 0);
    let code = CanonicalCode { n: n as u8, bits: s.best.unwrap() };
    Ok((code, s.best_perm, s.ties))
}

pub fn canonical_code(t: &Digraph) -> Result<CanonicalCode> {
    Ok(canonical_form(t)?.0)
}

/// Number of vertex permutations mapping `t` onto itself, by backtracking
/// over partial maps that preserve every arc among the vertices mapped so far.
pub fn aut_group_size(t: &Digraph) -> Result<u64> {
    let n = t.n();
    if n > AUTOMORPHISM_CAP {
        return Err(Error::CapExceeded { what: "automorphism count", n, cap: AUTOMORPHISM_CAP });
    }
    if !t.is_tournament() {
        return Err(Error::NotTournament);
    }
    Ok(count_isomorphisms(t, t, &mut Vec::new(), 0))
}

fn count_isomorphisms(a: &Digraph, b: &Digraph, image: &mut Vec<Vertex>, used: u64) -> u64 {
    let u = image.len();
    if u == a.n() {
        return 1;
    }
    let mut total = 0;
    for w in Bits(low_mask(b.n()) & !used) {
        if a.out_degree(u) != b.out_degree(w) {
            continue;
        }
        let consistent = image
            .iter()
            .enumerate()
            .all(|(x, &y)| a.has_arc(x, u) == b.has_arc(y, w) && a.has_arc(u, x) == b.has_arc(w, y));
        if consistent {
            image.push(w);
            total += count_isomorphisms(a, b, image, used | bit(w));
            image.pop();
        }
    }
    total
}

/// Direct isomorphism test for digraphs of equal order.
pub fn is_isomorphic(a: &Digraph, b: &Digraph) -> bool {
    a.n() == b.n() && a.arc_count() == b.arc_count() && find_isomorphism(a, b, &mut Vec::new(), 0)
}

fn find_isomorphism(a: &Digraph, b: &Digraph, image: &mut Vec<Vertex>, used: u64) -> bool {
    let u = image.len();
    if u == a.n() {
        return true;
    }
    for w in Bits(low_mask(b.n()) & !used) {
        if a.out_degree(u) != b.out_degree(w) || a.in_degree(u) != b.in_degree(w) {
            continue;
        }
        let consistent = image
            .iter()
            .enumerate()
            .all(|(x, &y)| a.has_arc(x, u) == b.has_arc(y, w) && a.has_arc(u, x) == b.has_arc(w, y));
        if consistent {
            image.push(w);
            if find_isomorphism(a, b, image, used | bit(w)) {
                return true;
            }
            image.pop();
        }
    }
    false
}

/// Canonical codes of all isomorphism classes of order `n`, in increasing
/// order, grown one vertex at a time from the classes of order `n - 1`.
pub fn enumerate_codes(n: usize) -> Result<Vec<CanonicalCode>> {
    if n == 0 || n > ENUMERATION_CAP {
        return Err(Error::VertexCount { n, max: ENUMERATION_CAP });
    }
    let mut level: BTreeSet<CanonicalCode> = BTreeSet::new();
    level.insert(CanonicalCode { n: 1, bits: 0 });
    for k in 1..n {
        let mut next = BTreeSet::new();
        for code in &level {
            let base = code.tournament();
            for pattern in 0..1u64 << k {
                let mut rows = base.rows().to_vec();
                rows.push(0);
                for i in 0..k {
                    if pattern >> i & 1 == 1 {
                        rows[k] |= bit(i);
                    } else {
                        rows[i] |= bit(k);
                    }
                }
                let t = Digraph::from_rows(rows)?;
                next.insert(canonical_code(&t)?);
            }
        }
        level = next;
    }
    Ok(level.into_iter().collect())
}

/// One representative (the canonically labeled one) per isomorphism class.
pub fn enumerate_tournaments(n: usize) -> Result<Vec<Digraph>> {
    Ok(enumerate_codes(n)?.iter().map(CanonicalCode::tournament).collect())
}

pub const FULL_SCAN_CAP: usize = 6;

/// Same classes as [`enumerate_codes`], by canonicalizing every labeled tournament.
pub fn enumerate_codes_full_scan(n: usize) -> Result<Vec<CanonicalCode>> {
    if n == 0 || n > FULL_SCAN_CAP {
        return Err(Error::VertexCount { n, max: FULL_SCAN_CAP });
    }
    let mut set = BTreeSet::new();
    for bits in 0..1u64 << pair_count(n) {
        set.insert(canonical_code(&from_code_bits(n, bits))?);
    }
    Ok(set.into_iter().collect())
}

/// Per-order totals for an exhaustive sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderSummary {
    pub n: usize,
    pub classes: usize,
    /// Σ n!/|Aut| over the classes.
    pub labeled_sum: u64,
    /// 2^(n(n-1)/2), the number of labeled tournaments.
    pub labeled_total: u64,
}

impl OrderSummary {
    pub fn identity_holds(&self) -> bool {
        self.labeled_sum == self.labeled_total
    }
}

pub fn order_summary(n: usize, codes: &[CanonicalCode]) -> Result<OrderSummary> {
    let fact: u64 = (1..=n as u64).product();
    let mut labeled_sum = 0;
    for c in codes {
        labeled_sum += fact / aut_group_size(&c.tournament())?;
    }
    Ok(OrderSummary {
        n,
        classes: codes.len(),
        labeled_sum,
        labeled_total: 1u64 << pair_count(n),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepReport {
    pub orders: Vec<OrderSummary>,
    /// Classes where ν ≠ τ.
    pub violations: Vec<CanonicalCode>,
}

impl SweepReport {
    pub fn classes_checked(&self) -> usize {
        self.orders.iter().map(|o| o.classes).sum()
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.orders.iter().all(OrderSummary::identity_holds)
    }
}

/// Checks ν = τ on every tournament class of order `1..=n`.
pub fn verify_nu_eq_tau_upto(n: usize) -> Result<SweepReport> {
    if n == 0 || n > SWEEP_CAP {
        return Err(Error::VertexCount { n, max: SWEEP_CAP });
    }
    let mut orders = Vec::new();
    let mut violations = Vec::new();
    for k in 1..=n {
        let codes = enumerate_codes(k)?;
        for c in &codes {
            let t = c.tournament();
            let nu = nu_exact(&t, Budget::unlimited()).value;
            if nu != tau_exact(&t)?.tau {
                violations.push(*c);
            }
        }
        orders.push(order_summary(k, &codes)?);
    }
    Ok(SweepReport { orders, violations })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Predicate {
    NuLtTau,
    FlorekConjectureFails,
    SeymourFails,
}

impl Predicate {
    pub const ALL: [Predicate; 3] = [Self::NuLtTau, Self::FlorekConjectureFails, Self::SeymourFails];

    pub fn name(&self) -> &'static str {
        match self {
            Self::NuLtTau => "nu_lt_tau",
            Self::FlorekConjectureFails => "florek_conjecture_fails",
            Self::SeymourFails => "seymour_fails",
        }
    }

    pub fn holds(&self, t: &Digraph) -> Result<bool> {
        Ok(match self {
            Self::NuLtTau => nu_exact(t, Budget::unlimited()).value < tau_exact(t)?.tau,
            Self::FlorekConjectureFails => !florek_conjecture_check(t)?,
            Self::SeymourFails => seymour_vertex(t).is_none(),
        })
    }
}

impl FromStr for Predicate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::UnknownPredicate(s.to_owned()))
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A vertex whose second out-neighborhood is at least as large as its first.
pub fn seymour_vertex(d: &Digraph) -> Option<Vertex> {
    (0..d.n()).find(|&v| d.out_degree(v) <= d.second_out_neighborhood(v).count_ones() as usize)
}

/// Codes of all classes of order `n` satisfying `predicate`.
pub fn search_counterexamples(n: usize, predicate: Predicate) -> Result<Vec<CanonicalCode>> {
    let mut out = Vec::new();
    for c in enumerate_codes(n)? {
        if predicate.holds(&c.tournament())? {
            out.push(c);
        }
    }
    Ok(out)
}
