//! Classification predicates for power-graph chordality: the simple-group
//! classification, the nilpotent-group criterion, generalized dihedral and
//! generalized quaternion groups, the direct-product decision, and the
//! socle-shape restriction.
//!
//! The predicates here answer from structure alone — they never enumerate a
//! group unless handed one — so they cover families far beyond any
//! enumeration cap. Brute-force graph computations are used only to
//! cross-validate desk-scale members in tests.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::groups::FiniteGroup;
use crate::numtheory::{self, FactoredInt};
use crate::{Error, Result};

// ---------------------------------------------------------------------------
// Verdicts
// ---------------------------------------------------------------------------

/// How a verdict was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Basis {
    /// A structural predicate evaluated without building the power graph.
    #[serde(rename = "predicate")]
    Predicate,
    /// Explicit power-graph construction and chordality decision.
    #[serde(rename = "brute-force")]
    BruteForce,
    /// One of the criteria fired.
    #[serde(rename = "criterion")]
    Criterion,
}

/// A chordality verdict with its provenance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    /// Whether the power graph is chordal.
    pub chordal: bool,
    /// How the answer was derived.
    pub basis: Basis,
    /// Supporting detail: matched case label, structural shape, criterion
    /// name, or hole description.
    pub certificate: Option<String>,
}

impl Verdict {
    fn predicate(chordal: bool, certificate: String) -> Verdict {
        Verdict {
            chordal,
            basis: Basis::Predicate,
            certificate: Some(certificate),
        }
    }
}

// ---------------------------------------------------------------------------
// Simple group identifiers
// ---------------------------------------------------------------------------

/// Name of a finite simple group, following the classification's families.
///
/// Text grammar (case-insensitive in the family tag):
/// `cyclic:p`, `alt:n`, `psl:n,q`, `psp:n,q`, `psu:n,q`, `pomega:n,q` /
/// `pomega:+n,q` / `pomega:-n,q`, `sz:q`, `ree:q`, `g2:q`, `f4:q`, `2f4:q`,
/// `tits`, `3d4:q`, `e6:q`, `2e6:q`, `e7:q`, `e8:q`, `sporadic:M11`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SimpleGroupId {
    /// Cyclic group of prime order.
    CyclicPrime(u64),
    /// Alternating group `Alt(n)`, `n ≥ 5`.
    Alt(u32),
    /// Projective special linear group `PSL_n(q)`.
    Psl(u32, u64),
    /// Suzuki group `Sz(q)`, `q = 2^(2n+1) ≥ 8`.
    Sz(u64),
    /// Projective symplectic group `PSp_n(q)`, `n` even, `n ≥ 4`.
    Psp(u32, u64),
    /// Projective special unitary group `PSU_n(q)`, `n ≥ 3`.
    Psu(u32, u64),
    /// Orthogonal group `PΩ_n(q)` (`sign = 0`, `n` odd ≥ 7) or
    /// `PΩ^±_n(q)` (`sign = ±1`, `n` even ≥ 8).
    POmega {
        /// Dimension.
        dim: u32,
        /// `0` for odd dimension, `+1`/`-1` for the even-dimensional forms.
        sign: i8,
        /// Field size.
        q: u64,
    },
    /// Exceptional group `G_2(q)`, `q ≥ 3`.
    G2(u64),
    /// Small Ree group `²G_2(q)`, `q = 3^(2n+1) ≥ 27`.
    Ree(u64),
    /// Exceptional group `F_4(q)`.
    F4(u64),
    /// Large Ree group `²F_4(q)`, `q = 2^(2n+1) ≥ 8`.
    TwistedF4(u64),
    /// The Tits group `²F_4(2)'`.
    Tits,
    /// Triality group `³D_4(q)`.
    D4Triality(u64),
    /// Exceptional group `E_6(q)`.
    E6(u64),
    /// Twisted exceptional group `²E_6(q)`.
    TwistedE6(u64),
    /// Exceptional group `E_7(q)`.
    E7(u64),
    /// Exceptional group `E_8(q)`.
    E8(u64),
    /// One of the 26 sporadic groups, by canonical name.
    Sporadic(String),
}

/// The 26 sporadic group names in canonical spelling.
pub const SPORADIC_NAMES: [&str; 26] = [
    "M11", "M12", "M22", "M23", "M24", "J1", "J2", "J3", "J4", "Co1", "Co2", "Co3", "Fi22",
    "Fi23", "Fi24'", "HS", "McL", "He", "Ru", "Suz", "ON", "HN", "Ly", "Th", "B", "M",
];

impl fmt::Display for SimpleGroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SimpleGroupId::CyclicPrime(p) => write!(f, "cyclic:{p}"),
            SimpleGroupId::Alt(n) => write!(f, "alt:{n}"),
            SimpleGroupId::Psl(n, q) => write!(f, "psl:{n},{q}"),
            SimpleGroupId::Sz(q) => write!(f, "sz:{q}"),
            SimpleGroupId::Psp(n, q) => write!(f, "psp:{n},{q}"),
            SimpleGroupId::Psu(n, q) => write!(f, "psu:{n},{q}"),
            SimpleGroupId::POmega { dim, sign, q } => match sign {
                0 => write!(f, "pomega:{dim},{q}"),
                s if *s > 0 => write!(f, "pomega:+{dim},{q}"),
                _ => write!(f, "pomega:-{dim},{q}"),
            },
            SimpleGroupId::G2(q) => write!(f, "g2:{q}"),
            SimpleGroupId::Ree(q) => write!(f, "ree:{q}"),
            SimpleGroupId::F4(q) => write!(f, "f4:{q}"),
            SimpleGroupId::TwistedF4(q) => write!(f, "2f4:{q}"),
            SimpleGroupId::Tits => write!(f, "tits"),
            SimpleGroupId::D4Triality(q) => write!(f, "3d4:{q}"),
            SimpleGroupId::E6(q) => write!(f, "e6:{q}"),
            SimpleGroupId::TwistedE6(q) => write!(f, "2e6:{q}"),
            SimpleGroupId::E7(q) => write!(f, "e7:{q}"),
            SimpleGroupId::E8(q) => write!(f, "e8:{q}"),
            SimpleGroupId::Sporadic(name) => write!(f, "sporadic:{name}"),
        }
    }
}

fn parse_u64(s: &str, what: &str) -> Result<u64> {
    s.trim()
        .parse::<u64>()
        .map_err(|_| Error::Parse(format!("{what}: expected a number, got {s:?}")))
}

fn parse_pair(rest: &str, what: &str) -> Result<(u32, u64)> {
    let (a, b) = rest
        .split_once(',')
        .ok_or_else(|| Error::Parse(format!("{what}: expected n,q")))?;
    let n = parse_u64(a, what)?;
    let n = u32::try_from(n).map_err(|_| Error::Parse(format!("{what}: degree too large")))?;
    Ok((n, parse_u64(b, what)?))
}

impl FromStr for SimpleGroupId {
    type Err = Error;

    fn from_str(text: &str) -> Result<SimpleGroupId> {
        let text = text.trim();
        if text.eq_ignore_ascii_case("tits") {
            return Ok(SimpleGroupId::Tits);
        }
        let (tag, rest) = text
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("simple group id {text:?}: expected tag:params")))?;
        let tag = tag.to_ascii_lowercase();
        match tag.as_str() {
            "cyclic" => Ok(SimpleGroupId::CyclicPrime(parse_u64(rest, "cyclic")?)),
            "alt" => Ok(SimpleGroupId::Alt(
                parse_u64(rest, "alt")?
                    .try_into()
                    .map_err(|_| Error::Parse("alt: degree too large".into()))?,
            )),
            "psl" => parse_pair(rest, "psl").map(|(n, q)| SimpleGroupId::Psl(n, q)),
            "psp" => parse_pair(rest, "psp").map(|(n, q)| SimpleGroupId::Psp(n, q)),
            "psu" => parse_pair(rest, "psu").map(|(n, q)| SimpleGroupId::Psu(n, q)),
            "pomega" => {
                let (sign, rest2) = match rest.as_bytes().first() {
                    Some(b'+') => (1i8, &rest[1..]),
                    Some(b'-') => (-1i8, &rest[1..]),
                    _ => (0i8, rest),
                };
                let (dim, q) = parse_pair(rest2, "pomega")?;
                Ok(SimpleGroupId::POmega { dim, sign, q })
            }
            "sz" => Ok(SimpleGroupId::Sz(parse_u64(rest, "sz")?)),
            "ree" => Ok(SimpleGroupId::Ree(parse_u64(rest, "ree")?)),
            "g2" => Ok(SimpleGroupId::G2(parse_u64(rest, "g2")?)),
            "f4" => Ok(SimpleGroupId::F4(parse_u64(rest, "f4")?)),
            "2f4" => Ok(SimpleGroupId::TwistedF4(parse_u64(rest, "2f4")?)),
            "3d4" => Ok(SimpleGroupId::D4Triality(parse_u64(rest, "3d4")?)),
            "e6" => Ok(SimpleGroupId::E6(parse_u64(rest, "e6")?)),
            "2e6" => Ok(SimpleGroupId::TwistedE6(parse_u64(rest, "2e6")?)),
            "e7" => Ok(SimpleGroupId::E7(parse_u64(rest, "e7")?)),
            "e8" => Ok(SimpleGroupId::E8(parse_u64(rest, "e8")?)),
            "sporadic" => {
                let wanted = rest.trim();
                let canonical = SPORADIC_NAMES
                    .iter()
                    .find(|name| {
                        name.eq_ignore_ascii_case(wanted)
                            || name.trim_end_matches('\'').eq_ignore_ascii_case(wanted)
                    })
                    .ok_or_else(|| {
                        Error::Parse(format!("sporadic: unknown group name {wanted:?}"))
                    })?;
                Ok(SimpleGroupId::Sporadic((*canonical).to_string()))
            }
            other => Err(Error::Parse(format!("unknown simple group family {other:?}"))),
        }
    }
}

/// `q = b^e` with `b` prime and `e` odd `≥ 3` (the Suzuki/Ree parameter
/// shape), returning the exponent's `(e-1)/2`.
fn odd_power_exponent(q: u64, base: u64) -> Option<u32> {
    let (b, e) = numtheory::as_prime_power(q)?;
    if b == base && e >= 3 && e % 2 == 1 {
        Some((e - 1) / 2)
    } else {
        None
    }
}

fn is_prime_power(q: u64) -> bool {
    numtheory::as_prime_power(q).is_some()
}

/// Validate family parameters, rejecting non-simple degenerate members
/// (e.g. `psl:2,3`, `psu:3,2`, `g2:2`).
fn validate_id(id: &SimpleGroupId) -> Result<()> {
    let fail = |msg: String| Err(Error::InvalidParam(msg));
    match id {
        SimpleGroupId::CyclicPrime(p) => {
            if !numtheory::is_prime(*p) {
                return fail(format!("cyclic:{p} is simple only for prime order"));
            }
        }
        SimpleGroupId::Alt(n) => {
            if *n < 5 {
                return fail(format!("alt:{n} is not simple; degree must be ≥ 5"));
            }
        }
        SimpleGroupId::Psl(n, q) => {
            if *n < 2 || !is_prime_power(*q) {
                return fail(format!("psl:{n},{q}: need n ≥ 2 and q a prime power"));
            }
            if *n == 2 && (*q == 2 || *q == 3) {
                return fail(format!("psl:2,{q} is solvable, not simple"));
            }
        }
        SimpleGroupId::Sz(q) => {
            if odd_power_exponent(*q, 2).is_none() {
                return fail(format!("sz:{q}: need q = 2^(2n+1) ≥ 8"));
            }
        }
        SimpleGroupId::Psp(n, q) => {
            if *n < 4 || *n % 2 != 0 || !is_prime_power(*q) {
                return fail(format!("psp:{n},{q}: need even n ≥ 4 and q a prime power"));
            }
            if *n == 4 && *q == 2 {
                return fail("psp:4,2 is not simple (its derived subgroup is alt:6)".into());
            }
        }
        SimpleGroupId::Psu(n, q) => {
            if *n < 3 || !is_prime_power(*q) {
                return fail(format!("psu:{n},{q}: need n ≥ 3 and q a prime power"));
            }
            if *n == 3 && *q == 2 {
                return fail("psu:3,2 is not simple".into());
            }
        }
        SimpleGroupId::POmega { dim, sign, q } => {
            let ok = is_prime_power(*q)
                && match sign {
                    0 => *dim >= 7 && *dim % 2 == 1,
                    _ => *dim >= 8 && *dim % 2 == 0,
                };
            if !ok {
                return fail(format!(
                    "pomega: need odd dim ≥ 7 (no sign) or even dim ≥ 8 (±), q a prime power; \
                     got dim {dim}, sign {sign}, q {q}"
                ));
            }
        }
        SimpleGroupId::G2(q) => {
            if !is_prime_power(*q) || *q < 3 {
                return fail(format!("g2:{q}: need q ≥ 3 (g2:2 is not simple)"));
            }
        }
        SimpleGroupId::Ree(q) => {
            if odd_power_exponent(*q, 3).is_none() {
                return fail(format!("ree:{q}: need q = 3^(2n+1) ≥ 27"));
            }
        }
        SimpleGroupId::F4(q)
        | SimpleGroupId::D4Triality(q)
        | SimpleGroupId::E6(q)
        | SimpleGroupId::TwistedE6(q)
        | SimpleGroupId::E7(q)
        | SimpleGroupId::E8(q) => {
            if !is_prime_power(*q) {
                return fail(format!("{id}: q must be a prime power"));
            }
        }
        SimpleGroupId::TwistedF4(q) => {
            if odd_power_exponent(*q, 2).is_none() {
                return fail(format!("2f4:{q}: need q = 2^(2n+1) ≥ 8 (2f4:2 is not simple)"));
            }
        }
        SimpleGroupId::Tits => {}
        SimpleGroupId::Sporadic(name) => {
            if !SPORADIC_NAMES.contains(&name.as_str()) {
                return fail(format!("unknown sporadic group {name:?}"));
            }
        }
    }
    Ok(())
}

/// Apply the exceptional isomorphisms so each group has one canonical name:
/// `psl:2,4 ≅ psl:2,5 ≅ alt:5`, `psl:2,9 ≅ alt:6`, `psl:4,2 ≅ alt:8`,
/// `psl:3,2 ≅ psl:2,7`.
pub fn normalize_id(id: &SimpleGroupId) -> SimpleGroupId {
    match id {
        SimpleGroupId::Psl(2, 4) | SimpleGroupId::Psl(2, 5) => SimpleGroupId::Alt(5),
        SimpleGroupId::Psl(2, 9) => SimpleGroupId::Alt(6),
        SimpleGroupId::Psl(4, 2) => SimpleGroupId::Alt(8),
        SimpleGroupId::Psl(3, 2) => SimpleGroupId::Psl(2, 7),
        other => other.clone(),
    }
}

/// Decide power-graph chordality for a finite simple group, by name.
///
/// Chordal exactly for: cyclic groups of prime order; `Alt(5)`, `Alt(6)`,
/// `Alt(7)`; `PSL_3(4)`; `PSL_2(q)` when [`numtheory::psl2_condition`]
/// holds; and `Sz(q)` when [`numtheory::sz_condition`] holds. Every other
/// simple group is non-chordal. Exceptional isomorphisms are normalized
/// before dispatch; invalid or non-simple parameters are errors.
pub fn classify_simple(id: &SimpleGroupId) -> Result<Verdict> {
    validate_id(id)?;
    let norm = normalize_id(id);
    let (chordal, why) = match &norm {
        SimpleGroupId::CyclicPrime(p) => (true, format!("cyclic of prime order {p}")),
        SimpleGroupId::Alt(n @ 5..=7) => (true, format!("alternating of degree {n} ≤ 7")),
        SimpleGroupId::Alt(n) => (false, format!("alternating of degree {n} ≥ 8")),
        SimpleGroupId::Psl(3, 4) => (true, "PSL_3(4), the exceptional linear case".into()),
        SimpleGroupId::Psl(2, q) => {
            let ok = numtheory::psl2_condition(*q)?;
            (ok, format!("PSL_2({q}): parameter condition {}", if ok { "holds" } else { "fails" }))
        }
        SimpleGroupId::Psl(n, q) => (false, format!("PSL_{n}({q}) with n ≥ 3 is never chordal except PSL_3(4)")),
        SimpleGroupId::Sz(q) => {
            let n = odd_power_exponent(*q, 2).expect("validated");
            let ok = numtheory::sz_condition(n)?;
            (ok, format!("Sz({q}): parameter condition {}", if ok { "holds" } else { "fails" }))
        }
        other => (false, format!("{other} is outside the chordal families")),
    };
    Ok(Verdict::predicate(
        chordal,
        format!("{why}; canonical name {norm}"),
    ))
}

// ---------------------------------------------------------------------------
// Structure helpers over enumerated groups
// ---------------------------------------------------------------------------

/// Whether the order is `1` or a power of `r`.
fn is_r_power(o: u64, r: u64) -> bool {
    o == 1 || matches!(numtheory::as_prime_power(o), Some((base, _)) if base == r)
}

/// Number of elements whose order is a power of `r` (identity included).
fn count_r_elements(g: &FiniteGroup, r: u64) -> u64 {
    g.orders().iter().filter(|&&o| is_r_power(o, r)).count() as u64
}

/// Least element of the given order, if any.
fn element_of_order(g: &FiniteGroup, o: u64) -> Option<u32> {
    g.orders()
        .iter()
        .position(|&x| x == o)
        .map(|i| i as u32)
}

/// Whether the group is cyclic (has an element of full order).
fn is_cyclic(g: &FiniteGroup) -> bool {
    element_of_order(g, g.order() as u64).is_some()
}

/// The `r`-elements form a normal cyclic subgroup of order exactly the
/// `r`-part of `|G|`; returns its least generator. Counting `r`-elements
/// against the `r`-part detects a unique (hence normal) Sylow `r`-subgroup,
/// and a full-order element makes it cyclic.
fn normal_cyclic_sylow(g: &FiniteGroup, r: u64) -> Option<u32> {
    let fact = FactoredInt::factor(g.order() as u64).expect("order ≥ 1");
    let rpart = r.pow(fact.exponent_of(r));
    if rpart == 1 || count_r_elements(g, r) != rpart {
        return None;
    }
    let w = element_of_order(g, rpart)?;
    debug_assert!(g.is_normal_in(
        &g.cyclic_subgroup(w),
        &(0..g.order() as u32).collect::<Vec<_>>()
    ));
    Some(w)
}

// ---------------------------------------------------------------------------
// Nilpotent groups
// ---------------------------------------------------------------------------

/// Structural shape of a nilpotent group, as far as chordality cares.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum NilpotentShape {
    /// Prime-power order.
    PGroup {
        /// The prime.
        p: u64,
    },
    /// `C_{q^m} × P` with `P` of exponent `p` (two distinct primes).
    CyclicQExponentP {
        /// Prime of the cyclic factor.
        q: u64,
        /// Exponent of the cyclic factor's order.
        m: u32,
        /// Prime exponent of the complement.
        p: u64,
    },
    /// Neither shape: the power graph is non-chordal.
    Other,
}

/// Recognize the chordality-relevant shape of a nilpotent group.
///
/// Errors when the input is not nilpotent (recognition: every Sylow
/// subgroup is normal, detected by counting `r`-elements against the
/// `r`-part of the order for每 prime — see below).
pub fn nilpotent_shape(g: &FiniteGroup) -> Result<NilpotentShape> {
    let fact = FactoredInt::factor(g.order() as u64)?;
    for &(r, e) in fact.pairs() {
        if count_r_elements(g, r) != r.pow(e) {
            return Err(Error::InvalidInput(format!(
                "not nilpotent: the Sylow {r}-subgroup is not normal"
            )));
        }
    }
    let pairs = fact.pairs();
    if pairs.len() <= 1 {
        let p = pairs.first().map_or(2, |&(r, _)| r);
        return Ok(NilpotentShape::PGroup { p });
    }
    if pairs.len() == 2 {
        // Try both prime role assignments.
        for (qi, pi) in [(0, 1), (1, 0)] {
            let (q, m) = pairs[qi];
            let (p, _) = pairs[pi];
            let q_part_cyclic = element_of_order(g, q.pow(m)).is_some();
            let p_exponent_p = g
                .orders()
                .iter()
                .all(|&o| !is_r_power(o, p) || o <= p);
            if q_part_cyclic && p_exponent_p {
                return Ok(NilpotentShape::CyclicQExponentP { q, m, p });
            }
        }
    }
    Ok(NilpotentShape::Other)
}

/// The nilpotent chordality criterion: a nilpotent group has a chordal
/// power graph iff it is a `p`-group or `C_{q^m} × P` with `P` of exponent
/// `p`.
pub fn nilpotent_predicate(shape: &NilpotentShape) -> bool {
    !matches!(shape, NilpotentShape::Other)
}

// ---------------------------------------------------------------------------
// Generalized dihedral and generalized quaternion groups
// ---------------------------------------------------------------------------

/// Decide chordality of the generalized dihedral group over an abelian `A`:
/// it is chordal iff the power graph of `A` itself is, which for abelian
/// `A` is the nilpotent criterion.
pub fn decide_generalized_dihedral(a: &FiniteGroup) -> Result<Verdict> {
    if !a.is_abelian() {
        return Err(Error::InvalidInput(format!(
            "generalized dihedral base {} must be abelian",
            a.name()
        )));
    }
    let shape = nilpotent_shape(a)?;
    let chordal = nilpotent_predicate(&shape);
    Ok(Verdict::predicate(
        chordal,
        format!(
            "Dih(A) is chordal iff A is; A = {} has shape {shape:?}",
            a.name()
        ),
    ))
}

/// Decide chordality of the generalized quaternion group `Q_{4n}` from its
/// order `4n` (`n ≥ 2`): chordal iff `2n = 2^a p^b` for an odd prime `p`
/// with `a ≤ 1` or `b ≤ 1`.
pub fn decide_quaternion(four_n: u64) -> Result<Verdict> {
    if four_n % 4 != 0 || four_n < 8 {
        return Err(Error::InvalidParam(format!(
            "generalized quaternion order must be 4n with n ≥ 2, got {four_n}"
        )));
    }
    let two_n = four_n / 2;
    let fact = FactoredInt::factor(two_n)?;
    let a = fact.exponent_of(2);
    let odd: Vec<(u64, u32)> = fact
        .pairs()
        .iter()
        .copied()
        .filter(|&(r, _)| r != 2)
        .collect();
    let (chordal, why) = match odd.as_slice() {
        [] => (true, format!("2n = 2^{a} is a prime power")),
        [(p, b)] => (
            a <= 1 || *b <= 1,
            format!("2n = 2^{a}·{p}^{b}: chordal iff a ≤ 1 or b ≤ 1"),
        ),
        _ => (false, "2n has more than two prime divisors".into()),
    };
    Ok(Verdict::predicate(chordal, why))
}

// ---------------------------------------------------------------------------
// Direct products
// ---------------------------------------------------------------------------

/// Case 1: `A` has prime exponent `p` but is not cyclic; `B = ⟨w⟩ ⋊ P`
/// with `|w| = q^n` (`q ≠ p`, `n ≥ 1`), `P` a `p`-group, and
/// `C_P(w^(q^(n-1)))` trivial or of exponent `p`.
fn match_case1(a: &FiniteGroup, b: &FiniteGroup) -> Option<String> {
    let p = a.exponent();
    if !numtheory::is_prime(p) || a.order() as u64 == p {
        return None; // not exponent-p, or cyclic C_p
    }
    let fact = FactoredInt::factor(b.order() as u64).expect("order ≥ 1");
    let q = match fact.primes().as_slice() {
        [r] if *r != p => *r,
        [r1, r2] if *r1 == p => *r2,
        [r1, r2] if *r2 == p => *r1,
        _ => return None,
    };
    let n = fact.exponent_of(q);
    let w = normal_cyclic_sylow(b, q)?;
    // C_P(s) for s the socle generator of ⟨w⟩: p-elements of C_B(s) are the
    // union of the complements' copies of C_P(s), so "trivial or exponent p"
    // reads as: every p-element commuting with s has order ≤ p.
    let s = b.power(w, q.pow(n - 1));
    let cp_ok = (0..b.order() as u32)
        .filter(|&v| b.commutes(v, s))
        .all(|v| !is_r_power(b.element_order(v), p) || b.element_order(v) <= p);
    cp_ok.then(|| {
        format!(
            "first factor has exponent {p} and is not cyclic; second is C_{{{q}^{n}}} ⋊ P with \
             a {p}-group P and C_P(socle) trivial or of exponent {p}"
        )
    })
}

/// Case 2d's conditions on `B`, with `q = |A|` prime: element orders are
/// prime powers or `q·p^j`; for every prime `p ≠ q`, cyclic `p`-subgroups
/// pairwise intersect trivially or nest; and each `q`-element centralizes
/// at most one cyclic `p`-subgroup of a given order.
fn case2d_conditions(b: &FiniteGroup, q: u64) -> bool {
    for &o in b.orders() {
        let f = FactoredInt::factor(o).expect("order ≥ 1");
        match f.pairs().len() {
            0 | 1 => {}
            2 if f.exponent_of(q) == 1 => {}
            _ => return false,
        }
    }
    let bfact = FactoredInt::factor(b.order() as u64).expect("order ≥ 1");
    for &p in bfact.primes().iter().filter(|&&r| r != q) {
        // Distinct cyclic p-subgroups, as sorted member lists.
        let mut subs: BTreeMap<Vec<u32>, u32> = BTreeMap::new();
        for x in 1..b.order() as u32 {
            if is_r_power(b.element_order(x), p) && b.element_order(x) > 1 {
                subs.entry(b.cyclic_subgroup(x)).or_insert(x);
            }
        }
        let subs: Vec<(&Vec<u32>, u32)> = subs.iter().map(|(k, &v)| (k, v)).collect();
        // Pairwise: intersection must be {1}, Z1, or Z2.
        for i in 0..subs.len() {
            for j in i + 1..subs.len() {
                let (za, zb) = (subs[i].0, subs[j].0);
                let inter = intersection_size(za, zb);
                if inter != 1 && inter != za.len() && inter != zb.len() {
                    return false;
                }
            }
        }
        // q-elements centralize at most one cyclic p-subgroup per order.
        for y in 0..b.order() as u32 {
            let oy = b.element_order(y);
            if oy == 1 || !is_r_power(oy, q) {
                continue;
            }
            let mut per_order: BTreeMap<usize, u32> = BTreeMap::new();
            for &(members, gen) in &subs {
                if b.commutes(y, gen) {
                    let count = per_order.entry(members.len()).or_insert(0);
                    *count += 1;
                    if *count > 1 {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Size of the intersection of two sorted vectors.
fn intersection_size(a: &[u32], b: &[u32]) -> usize {
    let (mut i, mut j, mut n) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                n += 1;
                i += 1;
                j += 1;
            }
        }
    }
    n
}

/// Case 2: `A` cyclic of order `p^n q^m` with `n ∈ {0, 1}`; sub-cases on
/// `B`. Returns the sub-case label and detail.
fn match_case2(a: &FiniteGroup, b: &FiniteGroup) -> Option<(String, String)> {
    if !is_cyclic(a) {
        return None;
    }
    let fact = FactoredInt::factor(a.order() as u64).expect("order ≥ 1");
    match fact.pairs() {
        [(q, m)] if *m > 1 => {
            // 2c: B EPPO with exponent q^j · (square-free part).
            let eppo = numtheory::is_eppo(b.orders()).expect("orders valid");
            let exp_fact = FactoredInt::factor(b.exponent()).expect("exponent ≥ 1");
            let exp_ok = exp_fact.pairs().iter().all(|&(r, e)| r == *q || e == 1);
            (eppo && exp_ok).then(|| {
                (
                    "2c".to_string(),
                    format!(
                        "first factor cyclic of order {q}^{m}; second is EPPO with exponent a \
                         {q}-power times a square-free number"
                    ),
                )
            })
        }
        [(q, 1)] => case2d_conditions(b, *q).then(|| {
            (
                "2d".to_string(),
                format!(
                    "first factor C_{q}; second has orders prime-power or {q}·p^j, nested-or-\
                     disjoint cyclic p-subgroups, and {q}-elements centralizing at most one \
                     cyclic p-subgroup per order"
                ),
            )
        }),
        [(r1, 1), (r2, 1)] => {
            // 2b: B EPPO with all orders in {1, p, q} (prime orders only).
            let ok = b
                .orders()
                .iter()
                .all(|&o| o == 1 || o == *r1 || o == *r2);
            ok.then(|| {
                (
                    "2b".to_string(),
                    format!(
                        "first factor C_{{{r1}·{r2}}}; all second-factor element orders lie in \
                         {{{r1}, {r2}}}"
                    ),
                )
            })
        }
        [(p, 1), (q, m)] | [(q, m), (p, 1)] if *m > 1 => {
            // 2a: exp(B) = p.
            (b.exponent() == *p).then(|| {
                (
                    "2a".to_string(),
                    format!(
                        "first factor cyclic of order {p}·{q}^{m}; second has exponent {p}"
                    ),
                )
            })
        }
        _ => None,
    }
}

/// Decomposition data for `H ≅ C_{p^m} ⋊ C_{q^n}` acting faithfully on the
/// socle of the normal factor.
struct Metacyclic {
    p: u64,
    m: u32,
    q: u64,
    n: u32,
}

/// Recognize `H ≅ C_{p^m} ⋊ C_{q^n}` (`m, n ≥ 1`) with
/// `C_U(soc(N)) = {1}`: the `p`-elements form a normal cyclic Sylow
/// `p`-subgroup `N = ⟨w⟩`; any element `u` of full `q`-part order spans a
/// cyclic complement (a Sylow `q`-subgroup, so the choice is immaterial up
/// to conjugacy); faithfulness on `soc(N) = ⟨w^(p^(m-1))⟩` reduces to the
/// minimal subgroup of `⟨u⟩` not centralizing it.
fn faithful_metacyclic(h: &FiniteGroup) -> Option<Metacyclic> {
    let fact = FactoredInt::factor(h.order() as u64).expect("order ≥ 1");
    let pairs = fact.pairs();
    if pairs.len() != 2 {
        return None;
    }
    for (ni, ui) in [(0, 1), (1, 0)] {
        let (p, m) = pairs[ni];
        let (q, n) = pairs[ui];
        let Some(w) = normal_cyclic_sylow(h, p) else {
            continue;
        };
        let Some(u) = element_of_order(h, q.pow(n)) else {
            continue;
        };
        let s = h.power(w, p.pow(m - 1));
        let t = h.power(u, q.pow(n - 1));
        if !h.commutes(t, s) {
            return Some(Metacyclic { p, m, q, n });
        }
    }
    None
}

/// Recognize `B ≅ C_{r^d} ⋊ C_{q^f}` (`d ≥ 1`, `f ≥ 0`) with the
/// complement acting faithfully on `soc(⟨w⟩)`; `r` must differ from `q`.
/// Returns `(d, f)`.
fn cyclic_r_by_cyclic_q(b: &FiniteGroup, r: u64, q: u64) -> Option<(u32, u32)> {
    let fact = FactoredInt::factor(b.order() as u64).expect("order ≥ 1");
    let d = fact.exponent_of(r);
    let f = fact.exponent_of(q);
    if d == 0 || fact.pairs().len() > 2 || fact.value() != r.pow(d) * q.pow(f) {
        return None;
    }
    let w = normal_cyclic_sylow(b, r)?;
    if f == 0 {
        // B = C_{r^d}, trivial complement, faithfulness vacuous.
        return Some((d, 0));
    }
    let u = element_of_order(b, q.pow(f))?;
    let s = b.power(w, r.pow(d - 1));
    let t = b.power(u, q.pow(f - 1));
    (!b.commutes(t, s)).then_some((d, f))
}

/// Recognize `B ≅ C_{p·q} ⋊ C_{q^f}` (`d = 1`, `e = 1`) with the
/// complement faithful on `soc(N') = N' = ⟨w⟩` itself. Returns `f`.
fn cyclic_pq_by_cyclic_q(b: &FiniteGroup, p: u64, q: u64) -> Option<u32> {
    let fact = FactoredInt::factor(b.order() as u64).expect("order ≥ 1");
    if fact.exponent_of(p) != 1 || fact.pairs().len() != 2 {
        return None;
    }
    let qexp = fact.exponent_of(q);
    if qexp == 0 || fact.value() != p * q.pow(qexp) {
        return None;
    }
    let f = qexp - 1;
    let all: Vec<u32> = (0..b.order() as u32).collect();
    for w in 0..b.order() as u32 {
        if b.element_order(w) != p * q {
            continue;
        }
        let wsub = b.cyclic_subgroup(w);
        if !b.is_normal_in(&wsub, &all) {
            continue;
        }
        if f == 0 {
            return Some(0); // B = C_{pq}
        }
        for u in 0..b.order() as u32 {
            if b.element_order(u) != q.pow(f) {
                continue;
            }
            let t = b.power(u, q.pow(f - 1));
            // Complement: ⟨u⟩ ∩ ⟨w⟩ = 1, tested on the minimal subgroup.
            if wsub.binary_search(&t).is_ok() {
                continue;
            }
            // Faithful on soc(N') = ⟨w⟩ (order pq, its own socle).
            if !b.commutes(t, w) {
                return Some(f);
            }
        }
    }
    None
}

/// Case 3: `A ≅ C_{p^m} ⋊ C_{q^n}` faithful on the socle; sub-cases on `B`.
fn match_case3(a: &FiniteGroup, b: &FiniteGroup) -> Option<(String, String)> {
    let mc = faithful_metacyclic(a)?;
    let Metacyclic { p, m, q, n } = mc;
    let head = format!("first factor is C_{{{p}^{m}}} ⋊ C_{{{q}^{n}}} faithful on the socle");
    // 3a: exp(B) = q.
    if b.exponent() == q {
        return Some(("3a".into(), format!("{head}; second factor has exponent {q}")));
    }
    // 3b: m = 1 and B a cyclic q-group.
    if m == 1 && is_r_power(b.order() as u64, q) && is_cyclic(b) {
        return Some((
            "3b".into(),
            format!("{head}; m = 1 and the second factor is a cyclic {q}-group"),
        ));
    }
    // 3c: B ≅ C_{r^d} ⋊ C_{q^f}, r ∉ {p, q}, faithful; constraints:
    // m > 1 ⟹ d = 1 and f ≤ 1; n > 1 ⟹ d = 1.
    let bfact = FactoredInt::factor(b.order() as u64).expect("order ≥ 1");
    if let Some(&r) = bfact.primes().iter().find(|&&x| x != p && x != q) {
        if let Some((d, f)) = cyclic_r_by_cyclic_q(b, r, q) {
            let ok = (m <= 1 || (d == 1 && f <= 1)) && (n <= 1 || d == 1);
            if ok {
                return Some((
                    "3c".into(),
                    format!("{head}; second factor is C_{{{r}^{d}}} ⋊ C_{{{q}^{f}}} faithful"),
                ));
            }
        }
    }
    // 3d with e = 0: B ≅ C_{p^d} ⋊ C_{q^f} faithful; m > 1 ⟹ f ≤ 1,
    // n > 1 ⟹ d = 1.
    if let Some((d, f)) = cyclic_r_by_cyclic_q(b, p, q) {
        let ok = (m <= 1 || f <= 1) && (n <= 1 || d == 1);
        if ok {
            return Some((
                "3d".into(),
                format!("{head}; second factor is C_{{{p}^{d}}} ⋊ C_{{{q}^{f}}} faithful"),
            ));
        }
    }
    // 3d with e = 1: B ≅ C_{pq} ⋊ C_{q^f} faithful, requiring
    // m = n = d = 1 and f ≤ 1 (the latter is forced: larger f yields
    // distinct cyclic q²-subgroups meeting non-trivially, hence a 4-cycle).
    if m == 1 && n == 1 {
        if let Some(f) = cyclic_pq_by_cyclic_q(b, p, q) {
            if f <= 1 {
                return Some((
                    "3d".into(),
                    format!("{head}; second factor is C_{{{p}·{q}}} ⋊ C_{{{q}^{f}}} faithful"),
                ));
            }
        }
    }
    None
}

/// Decide chordality of the direct product `H × K` of two power-chordal
/// groups, by the structural case analysis — the product itself is never
/// enumerated.
///
/// The hypothesis (each factor individually power-chordal) is verified by
/// brute force on the factors; violating it is an error, as is a trivial
/// factor. Cases are tried in order 1, 2a–2d, 3a–3d for the orientation
/// `(H, K)` as given, then the same for `(K, H)`, then the orientation-free
/// case 4 (`|H×K|` a prime power); the first match decides. The chordality
/// answer is symmetric in the arguments; the matched case label may depend
/// on their order when several cases apply.
pub fn decide_direct_product(h: &FiniteGroup, k: &FiniteGroup) -> Result<Verdict> {
    if h.order() <= 1 || k.order() <= 1 {
        return Err(Error::InvalidParam(
            "the direct-product decision needs two non-trivial factors".into(),
        ));
    }
    for g in [h, k] {
        let pow = crate::powergraph::power_graph(g);
        if !crate::chordal::is_chordal(&pow).is_chordal() {
            return Err(Error::InvalidInput(format!(
                "hypothesis failure: factor {} is not power-chordal",
                g.name()
            )));
        }
    }
    for (x, y, swapped) in [(h, k, false), (k, h, true)] {
        let role = if swapped {
            "factors considered in swapped order"
        } else {
            "factors considered in given order"
        };
        if let Some(detail) = match_case1(x, y) {
            return Ok(Verdict::predicate(true, format!("case 1: {detail} ({role})")));
        }
        if let Some((label, detail)) = match_case2(x, y) {
            return Ok(Verdict::predicate(
                true,
                format!("case {label}: {detail} ({role})"),
            ));
        }
        if let Some((label, detail)) = match_case3(x, y) {
            return Ok(Verdict::predicate(
                true,
                format!("case {label}: {detail} ({role})"),
            ));
        }
    }
    let total = h.order() as u64 * k.order() as u64;
    if numtheory::as_prime_power(total).is_some() {
        return Ok(Verdict::predicate(
            true,
            format!("case 4: the product order {total} is a prime power"),
        ));
    }
    Ok(Verdict {
        chordal: false,
        basis: Basis::Predicate,
        certificate: None,
    })
}

// ---------------------------------------------------------------------------
// Socle shapes
// ---------------------------------------------------------------------------

/// Description of a socle: an elementary abelian part, an optional extra
/// cyclic prime factor, and the non-abelian simple factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SocleDescriptor {
    /// Elementary abelian `C_p^m` part, as `(p, m)`.
    pub elementary: Option<(u64, u32)>,
    /// An extra `C_q` factor with `q` different from the elementary prime.
    pub extra_cyclic: Option<u64>,
    /// The non-abelian simple factors.
    pub simple_factors: Vec<SimpleGroupId>,
}

/// The classification of finite simple groups all of whose element orders
/// are prime powers (the simple EPPO groups), stated on canonical names.
fn is_eppo_simple(id: &SimpleGroupId) -> bool {
    matches!(
        normalize_id(id),
        SimpleGroupId::Alt(5)
            | SimpleGroupId::Alt(6)
            | SimpleGroupId::Psl(2, 7)
            | SimpleGroupId::Psl(2, 8)
            | SimpleGroupId::Psl(2, 17)
            | SimpleGroupId::Psl(3, 4)
            | SimpleGroupId::Sz(8)
            | SimpleGroupId::Sz(32)
    )
}

/// Whether a socle shape is permitted for a group with a chordal power
/// graph: `C_p^m × C_q`, `C_p^m`, `T`, or `C_p × T` with `T` non-abelian
/// simple — and in the last case, if `p ∤ |T|` then `T` must be a simple
/// EPPO group. Anything else (two simple factors, simple factor with the
/// extra cyclic, larger abelian rank beside `T`, empty descriptor) is
/// excluded.
pub fn check_socle_shape(d: &SocleDescriptor) -> Result<bool> {
    if let Some((p, m)) = d.elementary {
        if !numtheory::is_prime(p) || m == 0 {
            return Err(Error::InvalidParam(format!(
                "elementary part C_{p}^{m} needs a prime and m ≥ 1"
            )));
        }
    }
    if let Some(q) = d.extra_cyclic {
        if !numtheory::is_prime(q) {
            return Err(Error::InvalidParam(format!("extra factor C_{q} needs a prime")));
        }
        if let Some((p, _)) = d.elementary {
            if p == q {
                return Err(Error::InvalidParam(
                    "extra cyclic prime must differ from the elementary prime".into(),
                ));
            }
        }
    }
    for id in &d.simple_factors {
        validate_id(id)?;
    }
    Ok(match d.simple_factors.as_slice() {
        [] => match (d.elementary, d.extra_cyclic) {
            (Some(_), _) => true,            // C_p^m or C_p^m × C_q
            (None, Some(_)) => true,         // C_q alone is C_q^1
            (None, None) => false,           // empty socle is not a listed shape
        },
        [t] => {
            if d.extra_cyclic.is_some() {
                false
            } else {
                match d.elementary {
                    None => true, // T alone
                    Some((p, 1)) => {
                        // C_p × T: when p does not divide |T|, T must be a
                        // simple EPPO group. Divisibility is decided on the
                        // order only where it matters: every simple group
                        // has even order, and the EPPO list is finite.
                        if p == 2 {
                            true // 2 divides every simple group order
                        } else {
                            is_eppo_simple(t) || simple_order_divisible_by(t, p)
                        }
                    }
                    Some(_) => false, // C_p^m × T with m ≥ 2 is excluded
                }
            }
        }
        _ => false, // two or more simple factors
    })
}

/// Whether `p` divides the order of the named simple group, for the
/// families where we can compute the order exactly; unknown cases answer
/// `false` (conservative: the stricter EPPO requirement then applies).
fn simple_order_divisible_by(id: &SimpleGroupId, p: u64) -> bool {
    match normalize_id(id) {
        SimpleGroupId::CyclicPrime(r) => r == p,
        SimpleGroupId::Alt(n) => {
            // p divides n!/2 iff p ≤ n (p odd prime here).
            u64::from(n) >= p
        }
        SimpleGroupId::Psl(n, q) => crate::groups::matrix::sl_order(n, q)
            .map(|o| o % p == 0)
            .unwrap_or(false),
        SimpleGroupId::Sz(q) => {
            // |Sz(q)| = q² (q² + 1)(q − 1)
            let o = q * q % p * ((q * q + 1) % p) % p * ((q - 1) % p) % p;
            o == 0
        }
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chordal;
    use crate::powergraph;

    fn build(spec: &str) -> FiniteGroup {
        FiniteGroup::parse_build(spec).expect("test spec builds")
    }

    fn brute(spec: &str) -> bool {
        let g = build(spec);
        chordal::is_chordal(&powergraph::power_graph(&g)).is_chordal()
    }

    fn id(text: &str) -> SimpleGroupId {
        text.parse().expect("id parses")
    }

    #[test]
    fn simple_id_round_trips() {
        for text in [
            "cyclic:7",
            "alt:7",
            "psl:2,61",
            "sz:8",
            "psp:4,3",
            "psu:3,3",
            "pomega:7,3",
            "pomega:+8,2",
            "pomega:-10,3",
            "g2:3",
            "ree:27",
            "f4:2",
            "2f4:8",
            "tits",
            "3d4:2",
            "e6:2",
            "2e6:2",
            "e7:2",
            "e8:2",
            "sporadic:M11",
        ] {
            assert_eq!(id(text).to_string(), text, "round trip {text}");
        }
        assert_eq!(id("sporadic:m11").to_string(), "sporadic:M11");
        assert_eq!(id("sporadic:Fi24").to_string(), "sporadic:Fi24'");
        assert!("sporadic:X1".parse::<SimpleGroupId>().is_err());
        assert!("frobenius:20".parse::<SimpleGroupId>().is_err());
    }

    #[test]
    fn classify_simple_theorem_list() {
        let yes = ["cyclic:7", "alt:5", "alt:6", "alt:7", "psl:3,4", "psl:2,7", "sz:8"];
        for text in yes {
            let v = classify_simple(&id(text)).unwrap();
            assert!(v.chordal, "{text} should be chordal");
            assert_eq!(v.basis, Basis::Predicate);
        }
        let no = ["alt:8", "psl:2,61", "psl:3,3", "sporadic:M11", "sporadic:M22", "psu:3,3", "e8:2"];
        for text in no {
            let v = classify_simple(&id(text)).unwrap();
            assert!(!v.chordal, "{text} should be non-chordal");
        }
    }

    #[test]
    fn classify_simple_normalizes_exceptional_isomorphisms() {
        for text in ["psl:2,4", "psl:2,5", "psl:2,9", "psl:3,2"] {
            let v = classify_simple(&id(text)).unwrap();
            assert!(v.chordal, "{text} maps to a chordal canonical name");
        }
        let v = classify_simple(&id("psl:4,2")).unwrap();
        assert!(!v.chordal, "psl:4,2 ≅ alt:8 is non-chordal");
    }

    #[test]
    fn classify_simple_rejects_non_simple_ids() {
        for text in ["cyclic:6", "alt:4", "psl:2,2", "psl:2,3", "psp:4,2", "psu:3,2", "g2:2", "sz:4", "ree:3", "2f4:2"] {
            assert!(classify_simple(&id(text)).is_err(), "{text} must be rejected");
        }
    }

    #[test]
    fn classify_simple_agrees_with_brute_force_on_small_members() {
        for (idtext, spec) in [
            ("alt:5", "alt:5"),
            ("alt:6", "alt:6"),
            ("psl:2,7", "psl:2,7"),
            ("psl:2,11", "psl:2,11"),
            ("psl:2,13", "psl:2,13"),
            ("psl:3,2", "psl:3,2"),
        ] {
            let pred = classify_simple(&id(idtext)).unwrap().chordal;
            assert_eq!(pred, brute(spec), "{idtext} vs brute force");
        }
    }

    #[test]
    fn nilpotent_shapes_and_predicate() {
        let c12 = nilpotent_shape(&build("cyclic:12")).unwrap();
        assert_eq!(c12, NilpotentShape::CyclicQExponentP { q: 2, m: 2, p: 3 });
        assert!(nilpotent_predicate(&c12));

        let s = nilpotent_shape(&build("ab:2x2x9")).unwrap();
        assert_eq!(s, NilpotentShape::CyclicQExponentP { q: 3, m: 2, p: 2 });

        let bad = nilpotent_shape(&build("ab:4x9")).unwrap();
        assert_eq!(bad, NilpotentShape::Other);
        assert!(!nilpotent_predicate(&bad));

        assert!(matches!(
            nilpotent_shape(&build("q:8")).unwrap(),
            NilpotentShape::PGroup { p: 2 }
        ));
        assert!(nilpotent_shape(&build("sym:3")).is_err(), "Sym(3) is not nilpotent");
    }

    #[test]
    fn generalized_dihedral_examples() {
        assert!(!decide_generalized_dihedral(&build("cyclic:30")).unwrap().chordal);
        assert!(decide_generalized_dihedral(&build("ab:9x2")).unwrap().chordal);
        assert!(!decide_generalized_dihedral(&build("ab:4x9")).unwrap().chordal);
        assert!(decide_generalized_dihedral(&build("sym:3")).is_err());
        // Brute-force cross-checks on the dihedral groups themselves.
        assert!(brute("dih:ab:9x2"));
        assert!(!brute("dih:cyclic:30"));
    }

    #[test]
    fn quaternion_examples() {
        assert!(decide_quaternion(8).unwrap().chordal); // Q_8, 2n = 4
        assert!(decide_quaternion(12).unwrap().chordal); // Q_12, 2n = 6
        assert!(!decide_quaternion(72).unwrap().chordal); // Q_72, 2n = 36
        assert!(decide_quaternion(6).is_err());
        assert!(decide_quaternion(4).is_err());
        for four_n in [8u64, 16, 24, 40, 48, 72] {
            let pred = decide_quaternion(four_n).unwrap().chordal;
            assert_eq!(pred, brute(&format!("q:{four_n}")), "Q_{four_n}");
        }
    }

    #[test]
    fn direct_product_spec_examples() {
        // Case 1: C_3 × C_3 with C_4.
        let v = decide_direct_product(&build("ab:3x3"), &build("cyclic:4")).unwrap();
        assert!(v.chordal);
        assert!(v.certificate.as_deref().unwrap().starts_with("case 1"));
        assert!(brute("prod(ab:3x3,cyclic:4)"));

        // C_6 × C_6: no case matches.
        let v = decide_direct_product(&build("cyclic:6"), &build("cyclic:6")).unwrap();
        assert!(!v.chordal);
        assert!(!brute("prod(cyclic:6,cyclic:6)"));

        // Case 3a: Sym(3) with C_2 × C_2.
        let v = decide_direct_product(&build("sym:3"), &build("ab:2x2")).unwrap();
        assert!(v.chordal);
        assert!(v.certificate.as_deref().unwrap().starts_with("case 3a"));
        assert!(brute("prod(sym:3,ab:2x2)"));
    }

    #[test]
    fn direct_product_verdict_is_role_symmetric() {
        let pairs = [
            ("ab:3x3", "cyclic:4"),
            ("cyclic:6", "cyclic:6"),
            ("sym:3", "ab:2x2"),
            ("cyclic:9", "cyclic:3"),
            ("q:8", "cyclic:3"),
            ("cyclic:5", "sd:5,4,2"),
        ];
        for (ha, kb) in pairs {
            let v1 = decide_direct_product(&build(ha), &build(kb)).unwrap();
            let v2 = decide_direct_product(&build(kb), &build(ha)).unwrap();
            assert_eq!(v1.chordal, v2.chordal, "({ha}, {kb}) symmetry");
            assert_eq!(v1.basis, v2.basis);
        }
    }

    #[test]
    fn direct_product_rejects_bad_inputs() {
        assert!(decide_direct_product(&build("cyclic:1"), &build("cyclic:4")).is_err());
        // Hypothesis failure: C_30 is not power-chordal.
        assert!(decide_direct_product(&build("cyclic:30"), &build("cyclic:2")).is_err());
    }

    #[test]
    fn direct_product_agrees_with_brute_force_on_mixed_pairs() {
        let pairs = [
            ("cyclic:4", "cyclic:9"),   // no case: brute non-chordal
            ("cyclic:2", "sd:5,4,2"),   // 2d: C_2 × F_20
            ("cyclic:3", "cyclic:9"),   // prime power: case 4 region
            ("ab:2x2", "cyclic:9"),     // case 1 roles swapped
            ("q:8", "cyclic:3"),        // known non-chordal product
            ("sym:3", "cyclic:2"),      // 3a with K = C_2
            ("cyclic:25", "alt:4"),     // 2c? A_4 EPPO exponent 6 square-free
        ];
        for (ha, kb) in pairs {
            let v = decide_direct_product(&build(ha), &build(kb)).unwrap();
            let b = brute(&format!("prod({ha},{kb})"));
            assert_eq!(v.chordal, b, "({ha}, {kb}): predicate {} vs brute {b}", v.chordal);
        }
    }

    #[test]
    fn socle_shapes() {
        let ok = |elem, extra, simples: &[&str]| SocleDescriptor {
            elementary: elem,
            extra_cyclic: extra,
            simple_factors: simples.iter().map(|s| id(s)).collect(),
        };
        assert!(check_socle_shape(&ok(Some((2, 3)), None, &[])).unwrap()); // C_2^3
        assert!(check_socle_shape(&ok(Some((3, 2)), Some(5), &[])).unwrap()); // C_3^2 × C_5
        assert!(check_socle_shape(&ok(None, None, &["alt:5"])).unwrap()); // T
        assert!(check_socle_shape(&ok(Some((7, 1)), None, &["alt:5"])).unwrap()); // C_7 × Alt(5), EPPO
        assert!(check_socle_shape(&ok(Some((2, 1)), None, &["sporadic:M11"])).unwrap()); // 2 | |M11|
        assert!(check_socle_shape(&ok(Some((3, 1)), None, &["psl:2,7"])).unwrap()); // 3 | |PSL_2(7)|
        assert!(!check_socle_shape(&ok(None, None, &["alt:5", "alt:5"])).unwrap()); // T × T
        assert!(!check_socle_shape(&ok(Some((2, 2)), None, &["alt:5"])).unwrap()); // C_2^2 × T
        assert!(!check_socle_shape(&ok(Some((2, 1)), Some(3), &["alt:5"])).unwrap());
        assert!(!check_socle_shape(&ok(None, None, &[])).unwrap());
        assert!(check_socle_shape(&ok(Some((2, 1)), Some(2), &[])).is_err()); // p = q
    }

    #[test]
    fn socle_eppo_borderline() {
        // C_11 × PSL_2(8): 11 ∤ 504, but PSL_2(8) is a simple EPPO group.
        let d = SocleDescriptor {
            elementary: Some((11, 1)),
            extra_cyclic: None,
            simple_factors: vec![id("psl:2,8")],
        };
        assert!(check_socle_shape(&d).unwrap());
        // C_11 × M11: 11 | |M11|, allowed by the order side.
        let d2 = SocleDescriptor {
            elementary: Some((11, 1)),
            extra_cyclic: None,
            simple_factors: vec![id("sporadic:M11")],
        };
        assert!(!check_socle_shape(&d2).unwrap(), "M11 order test is conservative");
    }
}
