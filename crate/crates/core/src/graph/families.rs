//! Named graph families.
//!
//! A [`Family`] is parsed from whitespace-separated tokens, e.g.
//! `paley 13`, `hamming 3 3`, `line-graph heawood`, `clique-ext paley 5 3`
//! or `complement-kmm-km 2`. Underscores and hyphens in names are
//! interchangeable.

use std::fmt;

use super::Graph;
use crate::error::FamilyError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Empty(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Cycle(usize),
    Path(usize),
    Petersen,
    /// Vertices `Z_q`, adjacent iff the difference is a nonzero square.
    Paley(u64),
    /// Words of length `d` over a `q`-letter alphabet, first letter most
    /// significant; adjacent iff they differ in one position.
    Hamming(u32, usize),
    /// Points then lines of the Fano plane, both as the nonzero vectors
    /// `1..=7` of GF(2)^3; incident iff orthogonal.
    Heawood,
    /// `K_{m,m} □ K_m`.
    KmmKm(usize),
    LineGraph(Box<Family>),
    Complement(Box<Family>),
    CliqueExtension(Box<Family>, usize),
}

fn bad(family: &str, reason: impl Into<String>) -> FamilyError {
    FamilyError::BadParams {
        family: family.to_string(),
        reason: reason.into(),
    }
}

fn is_prime(q: u64) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| q % d != 0)
}

impl Family {
    /// Parses a complete token list; trailing tokens are an error.
    pub fn parse<S: AsRef<str>>(tokens: &[S]) -> Result<Family, FamilyError> {
        let tokens: Vec<&str> = tokens.iter().map(AsRef::as_ref).collect();
        let (family, rest) = Self::parse_prefix(&tokens)?;
        if let Some(extra) = rest.first() {
            return Err(bad(&family.to_string(), format!("unexpected trailing argument `{extra}`")));
        }
        Ok(family)
    }

    fn parse_prefix<'a, 'b>(tokens: &'b [&'a str]) -> Result<(Family, &'b [&'a str]), FamilyError> {
        let Some((&head, rest)) = tokens.split_first() else {
            return Err(FamilyError::Unknown(String::new()));
        };
        let name = head.to_ascii_lowercase().replace('_', "-");
        let num = |rest: &'b [&'a str], what: &str| -> Result<(usize, &'b [&'a str]), FamilyError> {
            let (tok, rest) = rest
                .split_first()
                .ok_or_else(|| bad(&name, format!("missing {what}")))?;
            let value = tok
                .parse::<usize>()
                .map_err(|_| bad(&name, format!("{what} `{tok}` is not a nonnegative integer")))?;
            Ok((value, rest))
        };
        let family = match name.as_str() {
            "empty" => {
                let (n, rest) = num(rest, "vertex count")?;
                return Ok((Family::Empty(n), rest));
            }
            "complete" => {
                let (n, rest) = num(rest, "vertex count")?;
                return Ok((Family::Complete(n), rest));
            }
            "complete-bipartite" => {
                let (a, rest) = num(rest, "part size")?;
                let (b, rest) = num(rest, "part size")?;
                return Ok((Family::CompleteBipartite(a, b), rest));
            }
            "cycle" => {
                let (n, rest) = num(rest, "vertex count")?;
                return Ok((Family::Cycle(n), rest));
            }
            "path" => {
                let (n, rest) = num(rest, "vertex count")?;
                return Ok((Family::Path(n), rest));
            }
            "paley" => {
                let (q, rest) = num(rest, "order")?;
                return Ok((Family::Paley(q as u64), rest));
            }
            "hamming" => {
                let (d, rest) = num(rest, "word length")?;
                let (q, rest) = num(rest, "alphabet size")?;
                let d = u32::try_from(d).map_err(|_| bad("hamming", "word length too large"))?;
                return Ok((Family::Hamming(d, q), rest));
            }
            "kmm-km" => {
                let (m, rest) = num(rest, "m")?;
                return Ok((Family::KmmKm(m), rest));
            }
            "complement-kmm-km" => {
                let (m, rest) = num(rest, "m")?;
                return Ok((Family::Complement(Box::new(Family::KmmKm(m))), rest));
            }
            "petersen" => Family::Petersen,
            "heawood" => Family::Heawood,
            "line-graph" | "line-graph-of" => {
                let (inner, rest) = Self::parse_prefix(rest)?;
                return Ok((Family::LineGraph(Box::new(inner)), rest));
            }
            "complement" => {
                let (inner, rest) = Self::parse_prefix(rest)?;
                return Ok((Family::Complement(Box::new(inner)), rest));
            }
            "clique-ext" | "clique-extension" => {
                let (inner, rest) = Self::parse_prefix(rest)?;
                let (s, rest) = num(rest, "clique size")?;
                return Ok((Family::CliqueExtension(Box::new(inner), s), rest));
            }
            _ => return Err(FamilyError::Unknown(head.to_string())),
        };
        Ok((family, rest))
    }

    pub fn build(&self) -> Result<Graph, FamilyError> {
        match *self {
            Family::Empty(n) => Ok(Graph::empty(n)),
            Family::Complete(n) => Ok(Graph::from_fn(n, |_, _| true)),
            Family::CompleteBipartite(a, b) => Ok(Graph::from_fn(a + b, |u, v| (u < a) != (v < a))),
            Family::Cycle(n) => {
                if n < 3 {
                    return Err(bad("cycle", "needs at least 3 vertices"));
                }
                Ok(Graph::from_fn(n, |u, v| v - u == 1 || v - u == n - 1))
            }
            Family::Path(n) => Ok(Graph::from_fn(n, |u, v| v - u == 1)),
            Family::Petersen => {
                let pairs: Vec<(usize, usize)> =
                    (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).collect();
                Ok(Graph::from_fn(10, |u, v| {
                    let (a, b) = (pairs[u], pairs[v]);
                    a.0 != b.0 && a.0 != b.1 && a.1 != b.0 && a.1 != b.1
                }))
            }
            Family::Paley(q) => {
                if !is_prime(q) {
                    return Err(bad("paley", format!("order {q} is not prime")));
                }
                if q % 4 != 1 {
                    return Err(bad("paley", format!("order {q} is not 1 mod 4")));
                }
                let mut square = vec![false; q as usize];
                for x in 1..q {
                    square[(x * x % q) as usize] = true;
                }
                Ok(Graph::from_fn(q as usize, |u, v| square[v - u]))
            }
            Family::Hamming(d, q) => {
                if d == 0 || q < 2 {
                    return Err(bad("hamming", "needs word length >= 1 and alphabet size >= 2"));
                }
                let n = q
                    .checked_pow(d)
                    .filter(|&n| n <= 1 << 16)
                    .ok_or_else(|| bad("hamming", "too many vertices"))?;
                Ok(Graph::from_fn(n, |mut u, mut v| {
                    let mut differ = 0;
                    for _ in 0..d {
                        differ += (u % q != v % q) as u32;
                        u /= q;
                        v /= q;
                    }
                    differ == 1
                }))
            }
            Family::Heawood => Ok(Graph::from_fn(14, |u, v| {
                if (u < 7) == (v < 7) {
                    return false;
                }
                let (point, line) = (u + 1, v - 7 + 1);
                (point & line).count_ones() % 2 == 0
            })),
            Family::KmmKm(m) => {
                let kmm = Family::CompleteBipartite(m, m).build()?;
                let km = Family::Complete(m).build()?;
                Ok(kmm.cartesian_product(&km))
            }
            Family::LineGraph(ref inner) => Ok(inner.build()?.line_graph()),
            Family::Complement(ref inner) => Ok(inner.build()?.complement()),
            Family::CliqueExtension(ref inner, s) => inner.build()?.clique_extension(s),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Empty(n) => write!(f, "empty {n}"),
            Family::Complete(n) => write!(f, "complete {n}"),
            Family::CompleteBipartite(a, b) => write!(f, "complete-bipartite {a} {b}"),
            Family::Cycle(n) => write!(f, "cycle {n}"),
            Family::Path(n) => write!(f, "path {n}"),
            Family::Petersen => write!(f, "petersen"),
            Family::Paley(q) => write!(f, "paley {q}"),
            Family::Hamming(d, q) => write!(f, "hamming {d} {q}"),
            Family::Heawood => write!(f, "heawood"),
            Family::KmmKm(m) => write!(f, "kmm-km {m}"),
            Family::LineGraph(inner) => write!(f, "line-graph {inner}"),
            Family::Complement(inner) => write!(f, "complement {inner}"),
            Family::CliqueExtension(inner, s) => write!(f, "clique-ext {inner} {s}"),
        }
    }
}

/// Parses and builds in one step.
pub fn construct_family<S: AsRef<str>>(tokens: &[S]) -> Result<Graph, FamilyError> {
    Family::parse(tokens)?.build()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(spec: &str) -> Graph {
        construct_family(&spec.split_whitespace().collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn paley_five_is_five_cycle() {
        assert_eq!(build("paley 5"), build("cycle 5"));
    }

    #[test]
    fn petersen_is_cubic_and_connected() {
        let g = build("petersen");
        assert_eq!((g.n(), g.edge_count()), (10, 15));
        assert_eq!(g.is_regular(), Some(3));
        assert!(g.is_connected());
    }

    #[test]
    fn hamming_counts() {
        let g = build("hamming 3 3");
        assert_eq!(g.n(), 27);
        assert_eq!(g.is_regular(), Some(6));
        let q2 = build("hamming 3 2");
        assert_eq!(q2.is_regular(), Some(3));
        assert_eq!(q2.edge_count(), 12);
    }

    #[test]
    fn heawood_and_its_line_graph() {
        let h = build("heawood");
        assert_eq!((h.n(), h.edge_count()), (14, 21));
        assert_eq!(h.is_regular(), Some(3));
        assert!(h.is_connected());
        let l = build("line-graph heawood");
        assert_eq!(l.n(), 21);
        assert_eq!(l.is_regular(), Some(4));
        assert_eq!(l, build("line_graph_of heawood"));
    }

    #[test]
    fn complement_of_kmm_km() {
        let g = build("complement-kmm-km 2");
        assert_eq!(g.n(), 8);
        assert_eq!(g.is_regular(), Some(4));
        assert_eq!(g, build("complement kmm-km 2"));
        // 2m(m-1) for m = 3
        assert_eq!(build("complement-kmm-km 3").is_regular(), Some(12));
    }

    #[test]
    fn clique_extension_of_paley() {
        let g = build("clique-ext paley 5 3");
        assert_eq!(g.n(), 15);
        assert_eq!(g.is_regular(), Some(8));
    }

    #[test]
    fn parameter_errors() {
        let err = |s: &str| construct_family(&s.split_whitespace().collect::<Vec<_>>()).unwrap_err();
        assert!(matches!(err("paley 7"), FamilyError::BadParams { .. }));
        assert!(matches!(err("paley 9"), FamilyError::BadParams { .. }));
        assert!(matches!(err("hamming 0 3"), FamilyError::BadParams { .. }));
        assert!(matches!(err("hamming 2 1"), FamilyError::BadParams { .. }));
        assert!(matches!(err("dodecahedron"), FamilyError::Unknown(_)));
        assert!(matches!(err("complete"), FamilyError::BadParams { .. }));
        assert!(matches!(err("complete 3 4"), FamilyError::BadParams { .. }));
        assert!(matches!(err("clique-ext petersen 0"), FamilyError::BadParams { .. }));
    }

    #[test]
    fn display_round_trips() {
        for spec in ["clique-ext paley 13 3", "complement kmm-km 3", "line-graph heawood", "hamming 2 4"] {
            let f = Family::parse(&spec.split_whitespace().collect::<Vec<_>>()).unwrap();
            assert_eq!(f.to_string(), spec);
        }
    }
}
