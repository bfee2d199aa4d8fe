//! Finite fields `GF(p^m)` in a polynomial basis.
//!
//! Elements are integer codes in `0..q`: the code `sum c_i p^i` stands for the
//! polynomial `sum c_i x^i` modulo a fixed monic irreducible of degree `m`.
//! Comparing codes numerically therefore orders elements lexicographically by
//! coefficient vector read from the highest power down — the order the matrix
//! canonicalization relies on.
//!
//! The reducing polynomial is pinned: for `p^m <= 512` it comes from the
//! embedded table below (reproduced in the guide), and beyond that it is the
//! lexicographically least monic irreducible of degree `m`, ordering
//! candidates by `(c_{m-1}, ..., c_1, c_0)` ascending. The table entries are
//! exactly what the derivation rule produces, so the two sources can never
//! disagree; a test checks this.
//!
//! Supported range: `q = p^m <= 2^20`.

use crate::numtheory::{self, FactoredInt};
use crate::{Error, Result};
use std::fmt;

const MAX_Q: u64 = 1 << 20;
/// Fields up to this size get dense add/mul/inv tables.
const TABLE_LIMIT: u64 = 512;

/// Fixed reducing polynomials for `p^m <= 512`, `m >= 2`.
///
/// Entry format: `(p, m, non-leading coefficients c_0 ..= c_{m-1})`; the
/// polynomial is `x^m + c_{m-1} x^{m-1} + ... + c_1 x + c_0`. Each is the
/// lexicographically least monic irreducible of its degree (see module docs
/// for the candidate order).
const MODULUS_TABLE: &[(u64, u32, &[u64])] = &[
    (2, 2, &[1, 1]),                      // x^2 + x + 1
    (2, 3, &[1, 1, 0]),                   // x^3 + x + 1
    (2, 4, &[1, 1, 0, 0]),                // x^4 + x + 1
    (2, 5, &[1, 0, 1, 0, 0]),             // x^5 + x^2 + 1
    (2, 6, &[1, 1, 0, 0, 0, 0]),          // x^6 + x + 1
    (2, 7, &[1, 1, 0, 0, 0, 0, 0]),       // x^7 + x + 1
    (2, 8, &[1, 1, 0, 1, 1, 0, 0, 0]),    // x^8 + x^4 + x^3 + x + 1
    (2, 9, &[1, 1, 0, 0, 0, 0, 0, 0, 0]), // x^9 + x + 1
    (3, 2, &[1, 0]),                      // x^2 + 1
    (3, 3, &[1, 2, 0]),                   // x^3 + 2x + 1
    (3, 4, &[2, 1, 0, 0]),                // x^4 + x + 2
    (3, 5, &[1, 2, 0, 0, 0]),             // x^5 + 2x + 1
    (5, 2, &[2, 0]),                      // x^2 + 2
    (5, 3, &[1, 1, 0]),                   // x^3 + x + 1
    (7, 2, &[1, 0]),                      // x^2 + 1
    (7, 3, &[2, 0, 0]),                   // x^3 + 2
    (11, 2, &[1, 0]),                     // x^2 + 1
    (13, 2, &[2, 0]),                     // x^2 + 2
    (17, 2, &[3, 0]),                     // x^2 + 3
    (19, 2, &[1, 0]),                     // x^2 + 1
];

/// A concrete finite field `GF(p^m)`. Elements are `u32` codes in `0..q`.
#[derive(Debug, Clone)]
pub struct FieldSpec {
    p: u64,
    m: u32,
    q: u64,
    /// Non-leading coefficients of the reducing polynomial, `c_0 ..= c_{m-1}`.
    modulus: Vec<u64>,
    primitive: u32,
    mul_table: Option<Vec<u32>>,
    inv_table: Option<Vec<u32>>,
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m
    }
}
impl Eq for FieldSpec {}

impl FieldSpec {
    /// Construct `GF(q)`. `q` must be a prime power with `q <= 2^20`.
    pub fn new(q: u64) -> Result<FieldSpec> {
        let (p, m) = numtheory::as_prime_power(q)
            .ok_or_else(|| Error::InvalidParam(format!("field order {q} is not a prime power")))?;
        if q > MAX_Q {
            return Err(Error::InvalidParam(format!(
                "field order {q} exceeds the supported maximum 2^20"
            )));
        }
        let modulus = if m == 1 {
            Vec::new()
        } else if let Some(&(_, _, coeffs)) = MODULUS_TABLE
            .iter()
            .find(|&&(tp, tm, _)| tp == p && tm == m)
        {
            coeffs.to_vec()
        } else {
            least_irreducible(p, m)
        };
        let mut field = FieldSpec {
            p,
            m,
            q,
            modulus,
            primitive: 0,
            mul_table: None,
            inv_table: None,
        };
        if q <= TABLE_LIMIT {
            let qs = q as usize;
            let mut mul = vec![0u32; qs * qs];
            for a in 0..qs {
                for b in a..qs {
                    let v = field.mul_raw(a as u32, b as u32);
                    mul[a * qs + b] = v;
                    mul[b * qs + a] = v;
                }
            }
            let mut inv = vec![0u32; qs];
            for a in 1..qs {
                inv[a] = field.inv_raw(a as u32);
            }
            field.mul_table = Some(mul);
            field.inv_table = Some(inv);
        }
        field.primitive = field.find_primitive();
        Ok(field)
    }

    pub fn p(&self) -> u64 {
        self.p
    }
    pub fn degree(&self) -> u32 {
        self.m
    }
    pub fn order(&self) -> u64 {
        self.q
    }
    /// Non-leading coefficients `c_0 ..= c_{m-1}` of the reducing polynomial
    /// (empty for prime fields).
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn zero(&self) -> u32 {
        0
    }
    pub fn one(&self) -> u32 {
        1
    }

    /// Embed an integer via reduction mod `p` (lands in the prime subfield).
    /// Negative values are taken mod `p` as well, so `-1` maps to `p - 1`.
    pub fn from_int(&self, n: i64) -> u32 {
        let p = self.p as i64;
        (n.rem_euclid(p)) as u32
    }

    fn digits(&self, a: u32) -> Vec<u64> {
        let mut out = vec![0u64; self.m as usize];
        let mut v = a as u64;
        for d in out.iter_mut() {
            *d = v % self.p;
            v /= self.p;
        }
        out
    }

    fn from_digits(&self, d: &[u64]) -> u32 {
        let mut v = 0u64;
        for &c in d.iter().rev() {
            v = v * self.p + c;
        }
        v as u32
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        debug_assert!((a as u64) < self.q && (b as u64) < self.q);
        if self.m == 1 {
            return ((a as u64 + b as u64) % self.p) as u32;
        }
        if self.p == 2 {
            return a ^ b;
        }
        let (da, db) = (self.digits(a), self.digits(b));
        let sum: Vec<u64> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.from_digits(&sum)
    }

    pub fn neg(&self, a: u32) -> u32 {
        debug_assert!((a as u64) < self.q);
        if self.m == 1 {
            return ((self.p - a as u64) % self.p) as u32;
        }
        if self.p == 2 {
            return a;
        }
        let da = self.digits(a);
        let neg: Vec<u64> = da.iter().map(|&x| (self.p - x) % self.p).collect();
        self.from_digits(&neg)
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if let Some(table) = &self.mul_table {
            return table[a as usize * self.q as usize + b as usize];
        }
        self.mul_raw(a, b)
    }

    fn mul_raw(&self, a: u32, b: u32) -> u32 {
        debug_assert!((a as u64) < self.q && (b as u64) < self.q);
        if self.m == 1 {
            return ((a as u64 * b as u64) % self.p) as u32;
        }
        let (da, db) = (self.digits(a), self.digits(b));
        let m = self.m as usize;
        let mut buf = vec![0u64; 2 * m - 1];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                buf[i + j] = (buf[i + j] + x * y) % self.p;
            }
        }
        // Reduce: x^m == -(c_{m-1} x^{m-1} + ... + c_0).
        for i in (m..buf.len()).rev() {
            let c = buf[i];
            if c == 0 {
                continue;
            }
            buf[i] = 0;
            for (j, &mj) in self.modulus.iter().enumerate() {
                if mj != 0 {
                    buf[i - m + j] = (buf[i - m + j] + c * (self.p - mj)) % self.p;
                }
            }
        }
        self.from_digits(&buf[..m])
    }

    /// Multiplicative inverse. Zero input is an error.
    pub fn inv(&self, a: u32) -> Result<u32> {
        if a == 0 {
            return Err(Error::InvalidParam("inverse of zero in a field".into()));
        }
        if let Some(table) = &self.inv_table {
            return Ok(table[a as usize]);
        }
        Ok(self.inv_raw(a))
    }

    fn inv_raw(&self, a: u32) -> u32 {
        debug_assert!(a != 0);
        self.pow(a, self.q - 2)
    }

    pub fn pow(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative order of a nonzero element.
    pub fn mult_order(&self, a: u32) -> Result<u64> {
        if a == 0 {
            return Err(Error::InvalidParam("order of zero in a field".into()));
        }
        let f = FactoredInt::factor(self.q - 1)?;
        let mut ord = self.q - 1;
        for &(r, _) in f.pairs() {
            while ord % r == 0 && self.pow(a, ord / r) == 1 {
                ord /= r;
            }
        }
        Ok(ord)
    }

    /// The fixed primitive element: the first code in `0, 1, 2, ...` whose
    /// multiplicative order is `q - 1`.
    pub fn primitive_element(&self) -> u32 {
        self.primitive
    }

    fn find_primitive(&self) -> u32 {
        if self.q == 2 {
            return 1;
        }
        let f = FactoredInt::factor(self.q - 1).expect("q-1 factors");
        'cand: for a in 1..self.q {
            for &(r, _) in f.pairs() {
                if self.pow(a as u32, (self.q - 1) / r) == 1 {
                    continue 'cand;
                }
            }
            return a as u32;
        }
        unreachable!("every finite field has a primitive element");
    }

    /// Render an element: plain integer for prime fields, polynomial in `w`
    /// otherwise (e.g. `w+1` in GF(4)).
    pub fn render(&self, a: u32) -> String {
        if self.m == 1 {
            return a.to_string();
        }
        let d = self.digits(a);
        let mut parts: Vec<String> = Vec::new();
        for (i, &c) in d.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let part = match (i, c) {
                (0, c) => c.to_string(),
                (1, 1) => "w".into(),
                (1, c) => format!("{c}w"),
                (i, 1) => format!("w^{i}"),
                (i, c) => format!("{c}w^{i}"),
            };
            parts.push(part);
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join("+")
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.q)
    }
}

// ---------------------------------------------------------------------------
// Irreducible polynomial derivation (shared by the table test and by fields
// beyond the table range).

/// Polynomials over GF(p) as dense coefficient vectors, low degree first,
/// trailing zeros trimmed.
fn poly_trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn poly_rem(mut a: Vec<u64>, b: &[u64], p: u64) -> Vec<u64> {
    debug_assert!(!b.is_empty());
    let db = b.len() - 1;
    let lead_inv = mod_inv(b[db], p);
    while a.len() > db {
        let da = a.len() - 1;
        let coef = a[da] % p;
        if coef != 0 {
            let scale = coef * lead_inv % p;
            for i in 0..=db {
                let idx = da - db + i;
                a[idx] = (a[idx] + (p - b[i] % p) * scale) % p;
            }
        }
        a.pop();
        a = poly_trim(a);
        if a.len() <= db {
            break;
        }
    }
    poly_trim(a)
}

fn poly_mulmod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut buf = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            buf[i + j] = (buf[i + j] + x * y) % p;
        }
    }
    poly_rem(poly_trim(buf), f, p)
}

/// x^(p^k) mod f, via k rounds of x^p.
fn frobenius_power(f: &[u64], p: u64, k: u32) -> Vec<u64> {
    let mut cur = vec![0u64, 1]; // x
    for _ in 0..k {
        // cur = cur^p mod f
        let mut acc = vec![1u64];
        let mut base = cur.clone();
        let mut e = p;
        while e > 0 {
            if e & 1 == 1 {
                acc = poly_mulmod(&acc, &base, f, p);
            }
            base = poly_mulmod(&base, &base, f, p);
            e >>= 1;
        }
        cur = acc;
    }
    cur
}

fn poly_gcd(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    while !b.is_empty() {
        let r = poly_rem(a, &b, p);
        a = b;
        b = r;
    }
    a
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // p prime, a != 0 mod p.
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

/// Rabin irreducibility test for a monic degree-m polynomial over GF(p).
fn is_irreducible(f: &[u64], p: u64) -> bool {
    let m = (f.len() - 1) as u32;
    if m == 0 {
        return false;
    }
    // x^(p^m) == x mod f
    let xpm = frobenius_power(f, p, m);
    let mut diff = xpm.clone();
    diff.resize(diff.len().max(2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    if !poly_trim(diff).is_empty() {
        return false;
    }
    // gcd(x^(p^(m/l)) - x, f) == 1 for every prime l | m
    let mf = FactoredInt::factor(m as u64).expect("degree factors");
    for &(l, _) in mf.pairs() {
        let k = m / l as u32;
        let mut g = frobenius_power(f, p, k);
        g.resize(g.len().max(2), 0);
        g[1] = (g[1] + p - 1) % p;
        let gcd = poly_gcd(f.to_vec(), poly_trim(g), p);
        if gcd.len() != 1 {
            return false;
        }
    }
    true
}

/// The lexicographically least monic irreducible of degree `m` over GF(p),
/// ordering candidates by `(c_{m-1}, ..., c_0)` ascending. Returns the
/// non-leading coefficients `c_0 ..= c_{m-1}`.
pub(crate) fn least_irreducible(p: u64, m: u32) -> Vec<u64> {
    let mu = m as usize;
    let total = p.pow(m);
    for code in 0..total {
        // Interpret `code` base p with the most significant digit as c_{m-1},
        // so ascending code order is ascending (c_{m-1}, ..., c_0) order.
        let mut digits = vec![0u64; mu];
        let mut v = code;
        for d in digits.iter_mut() {
            *d = v % p;
            v /= p;
        }
        let mut f = digits.clone();
        f.push(1); // monic leading coefficient
        if is_irreducible(&f, p) {
            return digits;
        }
    }
    unreachable!("irreducible polynomials exist in every degree");
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modulus_table_matches_lex_least_derivation() {
        for &(p, m, coeffs) in MODULUS_TABLE {
            assert_eq!(
                least_irreducible(p, m),
                coeffs,
                "table entry for GF({p}^{m}) is not the lex-least irreducible"
            );
        }
    }

    #[test]
    fn gf4_arithmetic_table() {
        let f = FieldSpec::new(4).unwrap();
        let w = 2u32; // x
        let w1 = 3u32; // x + 1
        assert_eq!(f.mul(w, w), w1, "w^2 = w + 1");
        assert_eq!(f.mul(w, w1), 1, "w * (w+1) = 1");
        assert_eq!(f.add(w, w1), 1);
        assert_eq!(f.add(w, w), 0);
        assert_eq!(f.inv(w).unwrap(), w1);
        assert_eq!(f.primitive_element(), w);
        assert_eq!(f.render(w1), "w+1");
    }

    #[test]
    fn prime_field_primitive_elements() {
        assert_eq!(FieldSpec::new(7).unwrap().primitive_element(), 3);
        assert_eq!(FieldSpec::new(5).unwrap().primitive_element(), 2);
        assert_eq!(FieldSpec::new(2).unwrap().primitive_element(), 1);
        assert_eq!(FieldSpec::new(3).unwrap().primitive_element(), 2);
    }

    #[test]
    fn primitive_element_is_first_by_exhaustive_order_check() {
        // Independent oracle: compute multiplicative orders by repeated
        // multiplication, confirm the chosen element is the least primitive.
        for q in [4u64, 5, 7, 8, 9, 16, 25, 27, 49] {
            let f = FieldSpec::new(q).unwrap();
            let mut first = None;
            for a in 1..q as u32 {
                let mut x = a;
                let mut ord = 1u64;
                while x != 1 {
                    x = f.mul(x, a);
                    ord += 1;
                }
                if ord == q - 1 {
                    first = Some(a);
                    break;
                }
            }
            assert_eq!(Some(f.primitive_element()), first, "GF({q})");
        }
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        for q in [2u64, 3, 4, 5, 8, 9, 16, 25, 27] {
            let f = FieldSpec::new(q).unwrap();
            let n = q as u32;
            for a in 0..n {
                assert_eq!(f.add(a, f.neg(a)), 0);
                assert_eq!(f.mul(a, 1), a);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
                for b in 0..n {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in 0..n {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                        assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
                    }
                }
            }
        }
    }

    #[test]
    fn large_field_beyond_table() {
        // GF(1024) = GF(2^10) is past the fixed table; modulus is derived.
        let f = FieldSpec::new(1024).unwrap();
        assert_eq!(f.p(), 2);
        assert_eq!(f.degree(), 10);
        let g = f.primitive_element();
        assert_eq!(f.mult_order(g).unwrap(), 1023);
        // Spot-check inverses round-trip.
        for a in [1u32, 2, 3, 500, 1023] {
            let inv = f.inv(a).unwrap();
            assert_eq!(f.mul(a, inv), 1);
        }
    }

    #[test]
    fn rejects_bad_orders() {
        assert!(FieldSpec::new(6).is_err());
        assert!(FieldSpec::new(0).is_err());
        assert!(FieldSpec::new(1).is_err());
        assert!(FieldSpec::new((1 << 20) + 1).is_err());
        // 2^21 is a prime power but too large.
        assert!(FieldSpec::new(1 << 21).is_err());
    }

    #[test]
    fn from_int_handles_negatives() {
        let f = FieldSpec::new(7).unwrap();
        assert_eq!(f.from_int(-1), 6);
        assert_eq!(f.from_int(9), 2);
        assert_eq!(f.from_int(0), 0);
    }
}
