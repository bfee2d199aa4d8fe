//! Integer arithmetic underlying the group-theoretic predicates.
//!
//! Everything here is exact `u64` arithmetic: factorization by trial division
//! up to 10^6 followed by Brent-cycle Pollard rho with deterministic
//! Miller–Rabin primality (fixed witness set valid for all of `u64`), plus the
//! handful of closed-form order conditions the classification layer needs.

use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// A positive integer in factored form: sorted `(prime, exponent)` pairs.
///
/// `FactoredInt::factor(1)` is the empty product.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FactoredInt {
    pairs: Vec<(u64, u32)>,
}

impl FactoredInt {
    /// Factor `n`. Errors on `n == 0`; never silently wraps.
    pub fn factor(n: u64) -> Result<FactoredInt> {
        if n == 0 {
            return Err(Error::InvalidParam("cannot factor 0".into()));
        }
        let mut pairs: Vec<(u64, u32)> = Vec::new();
        let mut rest = n;
        // Trial division stage.
        let mut d: u64 = 2;
        while d <= 1_000_000 && d.saturating_mul(d) <= rest {
            if rest % d == 0 {
                let mut e = 0u32;
                while rest % d == 0 {
                    rest /= d;
                    e += 1;
                }
                pairs.push((d, e));
            }
            d += if d == 2 { 1 } else { 2 };
        }
        if rest > 1 {
            if rest < 1_000_000u64.pow(2) || is_prime(rest) {
                // Either below the trial bound squared (hence prime after the
                // sweep above) or certified prime directly.
                merge(&mut pairs, rest, 1);
            } else {
                // Composite with all prime factors above 10^6: split by rho.
                let mut stack = vec![rest];
                while let Some(m) = stack.pop() {
                    if is_prime(m) {
                        merge(&mut pairs, m, 1);
                        continue;
                    }
                    let f = pollard_rho(m);
                    stack.push(f);
                    stack.push(m / f);
                }
            }
        }
        pairs.sort_unstable();
        Ok(FactoredInt { pairs })
    }

    /// The factored pairs, sorted by prime.
    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.pairs
    }

    /// Multiply the factorization back out (checked; the inverse of `factor`).
    pub fn value(&self) -> u64 {
        let mut v: u64 = 1;
        for &(p, e) in &self.pairs {
            for _ in 0..e {
                v = v.checked_mul(p).expect("factored value overflows u64");
            }
        }
        v
    }

    /// Distinct prime divisors, ascending.
    pub fn primes(&self) -> Vec<u64> {
        self.pairs.iter().map(|&(p, _)| p).collect()
    }

    /// Number of distinct prime divisors.
    pub fn omega(&self) -> usize {
        self.pairs.len()
    }

    /// Exponent of `p` in the factorization (0 if coprime).
    pub fn exponent_of(&self, p: u64) -> u32 {
        self.pairs
            .iter()
            .find(|&&(q, _)| q == p)
            .map(|&(_, e)| e)
            .unwrap_or(0)
    }

    /// `Some((p, k))` if the value is `p^k` with `k >= 1`.
    pub fn as_prime_power(&self) -> Option<(u64, u32)> {
        match self.pairs.as_slice() {
            [(p, e)] => Some((*p, *e)),
            _ => None,
        }
    }
}

impl fmt::Display for FactoredInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pairs.is_empty() {
            return write!(f, "1");
        }
        for (i, &(p, e)) in self.pairs.iter().enumerate() {
            if i > 0 {
                write!(f, " * ")?;
            }
            if e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

fn merge(pairs: &mut Vec<(u64, u32)>, p: u64, e: u32) {
    if let Some(entry) = pairs.iter_mut().find(|(q, _)| *q == p) {
        entry.1 += e;
    } else {
        pairs.push((p, e));
    }
}

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// `base^exp mod m` (m >= 1), with 128-bit intermediates.
pub fn powmod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc: u64 = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, m);
        }
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin over the fixed witness set that decides
/// primality for every `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Pollard rho with Brent cycle detection. Input must be composite, odd-ish
/// (not required), and have a nontrivial factor; returns one.
fn pollard_rho(n: u64) -> u64 {
    debug_assert!(n > 3 && !is_prime(n));
    if n % 2 == 0 {
        return 2;
    }
    // Deterministic sequence of Brent parameters; each composite < 2^64 yields
    // to some small (c, x0) pair long before the list runs out.
    for c in 1u64..64 {
        let f = |x: u64| (mulmod(x, x, n) + c) % n;
        let mut x = 2u64;
        let mut y = 2u64;
        let mut d = 1u64;
        let mut q = 1u64;
        let mut r = 1u64;
        let mut ys = y;
        while d == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0u64;
            while k < r && d == 1 {
                ys = y;
                let lim = 128.min(r - k);
                for _ in 0..lim {
                    y = f(y);
                    q = mulmod(q, x.abs_diff(y), n);
                }
                d = gcd(q, n);
                k += lim;
            }
            r *= 2;
        }
        if d == n {
            // Backtrack one step at a time.
            loop {
                ys = f(ys);
                d = gcd(x.abs_diff(ys), n);
                if d > 1 {
                    break;
                }
            }
        }
        if d > 1 && d < n {
            return d;
        }
    }
    unreachable!("pollard rho exhausted parameter list on {n}");
}

/// Greatest common divisor.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Least common multiple (checked).
pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    (a / gcd(a, b)).checked_mul(b).expect("lcm overflows u64")
}

/// `Some((p, k))` if `n = p^k` for a prime `p` and `k >= 1`.
pub fn as_prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    FactoredInt::factor(n).ok()?.as_prime_power()
}

/// Whether the cyclic group of order `n` has a chordal power graph:
/// `n` has at most two distinct prime divisors and at most one of them
/// occurs with multiplicity greater than one. Equivalently, `n` is divisible
/// by neither `p^2 q^2` nor `p q r` for distinct primes.
pub fn is_chordal_cyclic_order(n: u64) -> Result<bool> {
    let f = FactoredInt::factor(n)?;
    let squared = f.pairs().iter().filter(|&&(_, e)| e >= 2).count();
    Ok(f.omega() <= 2 && squared <= 1)
}

/// Chordality condition for `PSL(2, q)`: both `(q-1)/gcd(q-1, 2)` and
/// `(q+1)/gcd(q+1, 2)` must satisfy [`is_chordal_cyclic_order`].
///
/// `q` must be a prime power `>= 4` (for `q < 4` the group is not simple).
pub fn psl2_condition(q: u64) -> Result<bool> {
    if as_prime_power(q).is_none() {
        return Err(Error::InvalidParam(format!("q = {q} is not a prime power")));
    }
    if q < 4 {
        return Err(Error::InvalidParam(format!(
            "PSL(2, {q}) is not simple; need q >= 4"
        )));
    }
    let lower = (q - 1) / gcd(q - 1, 2);
    let upper = (q + 1) / gcd(q + 1, 2);
    Ok(is_chordal_cyclic_order(lower)? && is_chordal_cyclic_order(upper)?)
}

/// Chordality condition for the Suzuki group `Sz(q)`, `q = 2^(2n+1)`, `n >= 1`:
/// each of `q - 1`, `q - 2^(n+1) + 1`, `q + 2^(n+1) + 1` must satisfy
/// [`is_chordal_cyclic_order`].
///
/// Errors when `n = 0` (`Sz(2)` is not simple) or when `2^(2n+1)` leaves `u64`
/// range (`n > 30`).
pub fn sz_condition(n: u32) -> Result<bool> {
    if n == 0 {
        return Err(Error::InvalidParam("Sz(2) is not simple; need n >= 1".into()));
    }
    if 2 * n + 1 >= 63 {
        return Err(Error::InvalidParam(format!(
            "Sz(2^{}) exceeds u64 range",
            2 * n + 1
        )));
    }
    let q = 1u64 << (2 * n + 1);
    let r = 1u64 << (n + 1);
    let parts = [q - 1, q - r + 1, q + r + 1];
    for part in parts {
        if !is_chordal_cyclic_order(part)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Outcome of [`order_screen`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScreenReport {
    /// True when no element order is divisible by `p^2 q^2` or `p q r`.
    pub clean: bool,
    /// An offending order, if any (the smallest one).
    pub offender: Option<u64>,
}

/// Screen a multiset of element orders: the screen is clean when no order is
/// divisible by `p^2 q^2` or by `p q r` for distinct primes. An order passes
/// exactly when it satisfies [`is_chordal_cyclic_order`].
pub fn order_screen(orders: &[u64]) -> Result<ScreenReport> {
    let mut offender: Option<u64> = None;
    for &o in orders {
        if !is_chordal_cyclic_order(o)? {
            offender = Some(match offender {
                Some(cur) => cur.min(o),
                None => o,
            });
        }
    }
    Ok(ScreenReport {
        clean: offender.is_none(),
        offender,
    })
}

/// Whether every order in the multiset is a prime power (1 allowed).
pub fn is_eppo(orders: &[u64]) -> Result<bool> {
    for &o in orders {
        if o == 0 {
            return Err(Error::InvalidParam("element order 0".into()));
        }
        if o != 1 && as_prime_power(o).is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}
