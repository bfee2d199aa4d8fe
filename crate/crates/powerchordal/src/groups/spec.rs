//! The group-construction mini-language.
//!
//! Grammar (one spec per string, ASCII, no internal whitespace required):
//!
//! ```text
//! spec     := "cyclic:" N
//!           | "ab:" N ("x" N)*
//!           | "sym:" N
//!           | "alt:" N
//!           | "dih:" spec             (sub-spec must build an abelian group)
//!           | "q:" N                  (N = 4n, the generalized quaternion order)
//!           | "sl:" K "," Q
//!           | "psl:" K "," Q
//!           | "sd:" P ["^" M] "," Q ["^" N] "," K
//!           | "prod(" spec "," spec ")"
//!           | "sporadic:" NAME "@" FILE
//! ```
//!
//! `sd:P^M,Q^N,K` is the semidirect product `C_{P^M} ⋊ C_{Q^N}` where the
//! generator of the right factor acts on the left by `a ↦ a^K`. Omitting
//! `^M` means exponent 1. In `prod(...)`, the comma separating the two
//! sub-specs is the first comma at parenthesis depth zero.

use crate::{Error, Result};
use std::fmt;

/// Parse tree of the construction mini-language.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    /// `cyclic:N`
    Cyclic(u64),
    /// `ab:N1xN2x...` — direct product of cyclic groups.
    Abelian(Vec<u64>),
    /// `sym:N`
    Sym(u32),
    /// `alt:N`
    Alt(u32),
    /// `dih:<spec>` — generalized dihedral over an abelian group.
    Dihedral(Box<GroupSpec>),
    /// `q:4N` — generalized quaternion of the given total order.
    Quaternion(u64),
    /// `sl:K,Q`
    SpecialLinear(u32, u64),
    /// `psl:K,Q`
    ProjSpecialLinear(u32, u64),
    /// `sd:P^M,Q^N,K`
    Semidirect { p: u64, m: u32, q: u64, n: u32, k: u64 },
    /// `prod(a,b)`
    Product(Box<GroupSpec>, Box<GroupSpec>),
    /// `sporadic:NAME@FILE`
    Sporadic { name: String, file: String },
}

impl GroupSpec {
    pub fn parse(text: &str) -> Result<GroupSpec> {
        let s = text.trim();
        let bad = |msg: &str| Error::Parse(format!("group spec `{s}`: {msg}"));

        if let Some(rest) = s.strip_prefix("prod(") {
            let inner = rest
                .strip_suffix(')')
                .ok_or_else(|| bad("missing closing parenthesis"))?;
            let cut = top_level_comma(inner).ok_or_else(|| bad("prod needs two components"))?;
            let left = GroupSpec::parse(&inner[..cut])?;
            let right = GroupSpec::parse(&inner[cut + 1..])?;
            return Ok(GroupSpec::Product(Box::new(left), Box::new(right)));
        }

        let (head, rest) = s
            .split_once(':')
            .ok_or_else(|| bad("expected `name:arguments`"))?;
        match head {
            "cyclic" => Ok(GroupSpec::Cyclic(parse_u64(rest, s, "N")?)),
            "ab" => {
                let mut parts = Vec::new();
                for piece in rest.split('x') {
                    parts.push(parse_u64(piece, s, "factor order")?);
                }
                if parts.is_empty() {
                    return Err(bad("ab: needs at least one factor"));
                }
                Ok(GroupSpec::Abelian(parts))
            }
            "sym" => Ok(GroupSpec::Sym(parse_u32(rest, s, "N")?)),
            "alt" => Ok(GroupSpec::Alt(parse_u32(rest, s, "N")?)),
            "dih" => Ok(GroupSpec::Dihedral(Box::new(GroupSpec::parse(rest)?))),
            "q" => Ok(GroupSpec::Quaternion(parse_u64(rest, s, "order")?)),
            "sl" | "psl" => {
                let (k, q) = rest
                    .split_once(',')
                    .ok_or_else(|| bad("expected K,Q"))?;
                let k = parse_u32(k, s, "dimension")?;
                let q = parse_u64(q, s, "field order")?;
                if head == "sl" {
                    Ok(GroupSpec::SpecialLinear(k, q))
                } else {
                    Ok(GroupSpec::ProjSpecialLinear(k, q))
                }
            }
            "sd" => {
                let parts: Vec<&str> = rest.split(',').collect();
                if parts.len() != 3 {
                    return Err(bad("expected sd:P^M,Q^N,K"));
                }
                let (p, m) = parse_prime_power_part(parts[0], s)?;
                let (q, n) = parse_prime_power_part(parts[1], s)?;
                let k = parse_u64(parts[2], s, "action exponent")?;
                Ok(GroupSpec::Semidirect { p, m, q, n, k })
            }
            "sporadic" => {
                let (name, file) = rest
                    .split_once('@')
                    .ok_or_else(|| bad("expected sporadic:NAME@FILE"))?;
                if name.is_empty() || file.is_empty() {
                    return Err(bad("empty sporadic name or file"));
                }
                Ok(GroupSpec::Sporadic {
                    name: name.to_string(),
                    file: file.to_string(),
                })
            }
            other => Err(bad(&format!("unknown constructor `{other}`"))),
        }
    }

    /// Short display name used in output (graph titles, corpus reports).
    pub fn display_name(&self) -> String {
        match self {
            GroupSpec::Cyclic(n) => format!("C{n}"),
            GroupSpec::Abelian(parts) => parts
                .iter()
                .map(|n| format!("C{n}"))
                .collect::<Vec<_>>()
                .join("x"),
            GroupSpec::Sym(n) => format!("Sym({n})"),
            GroupSpec::Alt(n) => format!("Alt({n})"),
            GroupSpec::Dihedral(a) => format!("Dih({})", a.display_name()),
            GroupSpec::Quaternion(n) => format!("Q{n}"),
            GroupSpec::SpecialLinear(k, q) => format!("SL({k},{q})"),
            GroupSpec::ProjSpecialLinear(k, q) => format!("PSL({k},{q})"),
            GroupSpec::Semidirect { p, m, q, n, k } => {
                format!("C{}:C{}(k={k})", p.pow(*m), q.pow(*n))
            }
            GroupSpec::Product(a, b) => {
                format!("({} x {})", a.display_name(), b.display_name())
            }
            GroupSpec::Sporadic { name, .. } => name.clone(),
        }
    }
}

impl fmt::Display for GroupSpec {
    /// Canonical spec text; parses back to the same tree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "cyclic:{n}"),
            GroupSpec::Abelian(parts) => {
                let body = parts
                    .iter()
                    .map(|n| n.to_string())
                    .collect::<Vec<_>>()
                    .join("x");
                write!(f, "ab:{body}")
            }
            GroupSpec::Sym(n) => write!(f, "sym:{n}"),
            GroupSpec::Alt(n) => write!(f, "alt:{n}"),
            GroupSpec::Dihedral(a) => write!(f, "dih:{a}"),
            GroupSpec::Quaternion(n) => write!(f, "q:{n}"),
            GroupSpec::SpecialLinear(k, q) => write!(f, "sl:{k},{q}"),
            GroupSpec::ProjSpecialLinear(k, q) => write!(f, "psl:{k},{q}"),
            GroupSpec::Semidirect { p, m, q, n, k } => write!(f, "sd:{p}^{m},{q}^{n},{k}"),
            GroupSpec::Product(a, b) => write!(f, "prod({a},{b})"),
            GroupSpec::Sporadic { name, file } => write!(f, "sporadic:{name}@{file}"),
        }
    }
}

/// Index of the first comma at parenthesis depth zero.
fn top_level_comma(s: &str) -> Option<usize> {
    let mut depth = 0usize;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => return Some(i),
            _ => {}
        }
    }
    None
}

fn parse_u64(s: &str, whole: &str, what: &str) -> Result<u64> {
    s.trim()
        .parse::<u64>()
        .map_err(|_| Error::Parse(format!("group spec `{whole}`: bad {what} `{s}`")))
}

fn parse_u32(s: &str, whole: &str, what: &str) -> Result<u32> {
    s.trim()
        .parse::<u32>()
        .map_err(|_| Error::Parse(format!("group spec `{whole}`: bad {what} `{s}`")))
}

/// `P^M` or bare `P` (meaning exponent 1).
fn parse_prime_power_part(s: &str, whole: &str) -> Result<(u64, u32)> {
    match s.split_once('^') {
        Some((base, exp)) => Ok((
            parse_u64(base, whole, "prime")?,
            parse_u32(exp, whole, "exponent")?,
        )),
        None => Ok((parse_u64(s, whole, "prime")?, 1)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn roundtrip(text: &str) -> GroupSpec {
        let spec = GroupSpec::parse(text).unwrap();
        let printed = spec.to_string();
        assert_eq!(GroupSpec::parse(&printed).unwrap(), spec, "{text}");
        spec
    }

    #[test]
    fn parses_all_constructors() {
        assert_eq!(roundtrip("cyclic:12"), GroupSpec::Cyclic(12));
        assert_eq!(roundtrip("ab:6x6"), GroupSpec::Abelian(vec![6, 6]));
        assert_eq!(roundtrip("sym:6"), GroupSpec::Sym(6));
        assert_eq!(roundtrip("alt:7"), GroupSpec::Alt(7));
        assert_eq!(
            roundtrip("dih:cyclic:9"),
            GroupSpec::Dihedral(Box::new(GroupSpec::Cyclic(9)))
        );
        assert_eq!(roundtrip("q:8"), GroupSpec::Quaternion(8));
        assert_eq!(roundtrip("sl:3,4"), GroupSpec::SpecialLinear(3, 4));
        assert_eq!(roundtrip("psl:2,7"), GroupSpec::ProjSpecialLinear(2, 7));
        assert_eq!(
            roundtrip("sd:5^1,2^2,2"),
            GroupSpec::Semidirect { p: 5, m: 1, q: 2, n: 2, k: 2 }
        );
        assert_eq!(
            roundtrip("sd:7,3,2"),
            GroupSpec::Semidirect { p: 7, m: 1, q: 3, n: 1, k: 2 }
        );
        assert_eq!(
            roundtrip("prod(cyclic:3,q:8)"),
            GroupSpec::Product(
                Box::new(GroupSpec::Cyclic(3)),
                Box::new(GroupSpec::Quaternion(8))
            )
        );
        assert_eq!(
            roundtrip("sporadic:M11@data/m11.gens"),
            GroupSpec::Sporadic { name: "M11".into(), file: "data/m11.gens".into() }
        );
    }

    #[test]
    fn nested_products_split_at_top_level() {
        let spec = roundtrip("prod(prod(cyclic:2,cyclic:3),sym:3)");
        match spec {
            GroupSpec::Product(l, _) => {
                assert_eq!(
                    *l,
                    GroupSpec::Product(
                        Box::new(GroupSpec::Cyclic(2)),
                        Box::new(GroupSpec::Cyclic(3))
                    )
                );
            }
            other => panic!("wrong parse: {other:?}"),
        }
    }

    #[test]
    fn dih_takes_a_sub_spec() {
        let spec = roundtrip("dih:ab:2x4");
        assert_eq!(
            spec,
            GroupSpec::Dihedral(Box::new(GroupSpec::Abelian(vec![2, 4])))
        );
    }

    #[test]
    fn rejects_malformed() {
        for bad in [
            "", "cyclic", "cyclic:x", "nope:3", "sl:3", "prod(cyclic:2)",
            "prod(cyclic:2,cyclic:3", "sd:3,2", "sporadic:M11", "ab:",
        ] {
            assert!(GroupSpec::parse(bad).is_err(), "should reject `{bad}`");
        }
    }

    #[test]
    fn display_names() {
        assert_eq!(GroupSpec::parse("cyclic:12").unwrap().display_name(), "C12");
        assert_eq!(GroupSpec::parse("ab:6x6").unwrap().display_name(), "C6xC6");
        assert_eq!(
            GroupSpec::parse("prod(cyclic:7,alt:5)").unwrap().display_name(),
            "(C7 x Alt(5))"
        );
        assert_eq!(
            GroupSpec::parse("sd:3,2,2").unwrap().display_name(),
            "C3:C2(k=2)"
        );
    }
}
