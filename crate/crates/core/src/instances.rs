//! Named tournaments and seeded random instances.
//!
//! The paper-derived tournaments are given by their backward arcs under the
//! alphabetical ordering `a, b, c, …` (vertex `a` is 0); every other pair is
//! oriented from the alphabetically earlier vertex to the later one.

use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::digraph::{Arc, Digraph, Vertex, VertexOrdering};
use crate::error::{Error, Result};
use crate::packing::CyclePacking;

/// Letter of vertex `v` (`a` for 0).
pub fn letter(v: Vertex) -> char {
    (b'a' + v as u8) as char
}

fn idx(c: char) -> Vertex {
    (c as u8 - b'a') as Vertex
}

/// Parses two-letter arc names such as `"ca"` (the arc c -> a).
fn named_arcs(names: &[&str]) -> Vec<Arc> {
    names
        .iter()
        .map(|s| {
            let mut cs = s.chars();
            (idx(cs.next().unwrap()), idx(cs.next().unwrap()))
        })
        .collect()
}

/// The tournament on `n` vertices whose backward arcs under `0, 1, …, n-1`
/// are exactly `backward` (each given as a later -> earlier pair).
pub fn tournament_from_backward(n: usize, backward: &[Arc]) -> Result<Digraph> {
    let mut rows = Digraph::transitive_tournament(n)?.rows().to_vec();
    for &(u, v) in backward {
        if u <= v || u >= n {
            return Err(Error::VertexOutOfRange { u, v, n });
        }
        rows[v] &= !(1 << u);
        rows[u] |= 1 << v;
    }
    Digraph::from_rows(rows)
}

pub const T_BACKWARD: [&str; 12] = ["ca", "ec", "ge", "ig", "ki", "mk", "ga", "ic", "ke", "mg", "ia", "me"];

/// The 13-vertex tournament T with backward arcs [`T_BACKWARD`] under α = a..m.
pub fn paper_t() -> Digraph {
    tournament_from_backward(13, &named_arcs(&T_BACKWARD)).unwrap()
}

/// T with the pairs cm, ck, ak reversed to mc, kc, ka.
pub fn paper_t_prime() -> Digraph {
    let mut arcs = named_arcs(&T_BACKWARD);
    arcs.extend(named_arcs(&["mc", "kc", "ka"]));
    tournament_from_backward(13, &arcs).unwrap()
}

pub const T7_BACKWARD: [&str; 5] = ["ca", "ec", "gd", "fb", "fa"];

pub fn paper_t7() -> Digraph {
    tournament_from_backward(7, &named_arcs(&T7_BACKWARD)).unwrap()
}

/// Backward arcs of T₁₁ under β = a..k: {h,i,j} -> {a,b,c}, k -> {a..e}, and ca, gd, jh.
pub fn t11_backward() -> Vec<Arc> {
    let mut arcs = Vec::new();
    for u in ['h', 'i', 'j'] {
        for v in ['a', 'b', 'c'] {
            arcs.push((idx(u), idx(v)));
        }
    }
    for v in ['a', 'b', 'c', 'd', 'e'] {
        arcs.push((idx('k'), idx(v)));
    }
    arcs.extend(named_arcs(&["ca", "gd", "jh"]));
    arcs
}

pub fn paper_t11() -> Digraph {
    tournament_from_backward(11, &t11_backward()).unwrap()
}

pub const FAMILY_C: [&str; 11] = ["abc", "cde", "efg", "ghi", "ijk", "klm", "adg", "cfi", "ehk", "gjm", "aei"];

/// The eleven arc-disjoint 3-cycles of T listed alongside it.
pub fn family_c() -> CyclePacking {
    CyclePacking::new(FAMILY_C.iter().map(|s| s.chars().map(idx).collect()).collect())
}

pub fn alpha() -> VertexOrdering {
    VertexOrdering::identity(13)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Builtin {
    PaperT,
    PaperTprime,
    PaperT7,
    PaperT11,
    Transitive(usize),
}

impl Builtin {
    pub fn graph(&self) -> Result<Digraph> {
        Ok(match self {
            Self::PaperT => paper_t(),
            Self::PaperTprime => paper_t_prime(),
            Self::PaperT7 => paper_t7(),
            Self::PaperT11 => paper_t11(),
            Self::Transitive(n) => Digraph::transitive_tournament(*n)?,
        })
    }

    /// Whether vertices display as letters.
    pub fn lettered(&self) -> bool {
        !matches!(self, Self::Transitive(_))
    }
}

impl FromStr for Builtin {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "paper-T" => Ok(Self::PaperT),
            "paper-Tprime" => Ok(Self::PaperTprime),
            "paper-T7" => Ok(Self::PaperT7),
            "paper-T11" => Ok(Self::PaperT11),
            _ => s
                .strip_prefix("transitive-")
                .and_then(|n| n.parse().ok())
                .map(Self::Transitive)
                .ok_or_else(|| Error::UnknownBuiltin(s.to_owned())),
        }
    }
}

pub const BUILTIN_NAMES: [&str; 5] = ["paper-T", "paper-Tprime", "paper-T7", "paper-T11", "transitive-N"];

/// Each unordered pair gets an arc with probability `p`, in a uniformly
/// random direction.
pub fn random_oriented(n: usize, p: f64, seed: u64) -> Digraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = vec![0u64; n];
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                if rng.gen_bool(0.5) {
                    rows[i] |= 1 << j;
                } else {
                    rows[j] |= 1 << i;
                }
            }
        }
    }
    Digraph::from_rows(rows).unwrap()
}

pub fn random_tournament(n: usize, seed: u64) -> Digraph {
    random_oriented(n, 1.0, seed)
}

/// Each ordered pair independently becomes an arc with probability `p`, so
/// 2-cycles may occur.
pub fn random_digraph(n: usize, p: f64, seed: u64) -> Digraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = vec![0u64; n];
    for (u, row) in rows.iter_mut().enumerate() {
        for v in 0..n {
            if u != v && rng.gen_bool(p) {
                *row |= 1 << v;
            }
        }
    }
    Digraph::from_rows(rows).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn paper_t_shape() {
        let t = paper_t();
        assert!(t.is_tournament());
        assert_eq!(t.arc_count(), 78);
        let back = t.backward_arcs(&alpha()).unwrap();
        assert_eq!(back, named_arcs(&T_BACKWARD).into_iter().collect());
    }

    #[test]
    fn t_prime_shape() {
        let tp = paper_t_prime();
        assert!(tp.is_tournament());
        assert_eq!(tp.arc_count(), 78);
        assert_eq!(tp.backward_arcs(&alpha()).unwrap().len(), 15);
        let t = paper_t();
        let changed: Vec<_> = t.arcs().into_iter().filter(|&(u, v)| !tp.has_arc(u, v)).collect();
        assert_eq!(changed, named_arcs(&["ak", "ck", "cm"]));
    }

    #[test]
    fn t7_and_t11_shape() {
        let t7 = paper_t7();
        assert!(t7.is_tournament());
        assert_eq!(t7.arc_count(), 21);
        assert_eq!(
            t7.backward_arcs(&VertexOrdering::identity(7)).unwrap(),
            named_arcs(&T7_BACKWARD).into_iter().collect()
        );
        let t11 = paper_t11();
        assert!(t11.is_tournament());
        assert_eq!(t11.backward_arcs(&VertexOrdering::identity(11)).unwrap().len(), 17);
        assert!((0..11).all(|v| t11.out_degree(v) == 5));
    }

    #[test]
    fn builtin_names() {
        assert_eq!("paper-T".parse::<Builtin>().unwrap(), Builtin::PaperT);
        assert_eq!("transitive-9".parse::<Builtin>().unwrap(), Builtin::Transitive(9));
        assert!("transitive-x".parse::<Builtin>().is_err());
        assert!("nope".parse::<Builtin>().is_err());
        assert!(Builtin::Transitive(0).graph().is_err());
    }

    #[test]
    fn random_generators() {
        assert_eq!(random_oriented(8, 0.0, 1).arc_count(), 0);
        for s in 0..20 {
            assert!(random_tournament(5, s).is_tournament());
            assert!(random_oriented(9, 0.5, s).is_oriented());
        }
        assert_eq!(random_oriented(10, 0.4, 77), random_oriented(10, 0.4, 77));
        assert_eq!(random_digraph(10, 0.4, 77), random_digraph(10, 0.4, 77));
        assert_ne!(random_tournament(10, 1), random_tournament(10, 2));
    }
}
