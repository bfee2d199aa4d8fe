//! Permutations as image vectors on points `0..n` (`u8` points, so degree
//! is limited to 256 — far above every permutation group built here).
//!
//! Composition convention: `(a * b)(pt) = b(a(pt))` — apply `a` first, then
//! `b`. Cycle notation in files and display is 1-based.

use crate::{Error, Result};

/// `(a * b)(pt) = b(a(pt))`.
pub fn compose(a: &[u8], b: &[u8]) -> Box<[u8]> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().map(|&pt| b[pt as usize]).collect()
}

pub fn invert(a: &[u8]) -> Box<[u8]> {
    let mut out = vec![0u8; a.len()];
    for (i, &img) in a.iter().enumerate() {
        out[img as usize] = i as u8;
    }
    out.into_boxed_slice()
}

pub fn identity(n: usize) -> Box<[u8]> {
    (0..n as u8).collect()
}

/// Cycle lengths (including fixed points as 1s), ascending.
pub fn cycle_type(a: &[u8]) -> Vec<u64> {
    let mut seen = vec![false; a.len()];
    let mut out = Vec::new();
    for start in 0..a.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0u64;
        let mut cur = start;
        while !seen[cur] {
            seen[cur] = true;
            cur = a[cur] as usize;
            len += 1;
        }
        out.push(len);
    }
    out.sort_unstable();
    out
}

/// Order = lcm of cycle lengths.
pub fn order(a: &[u8]) -> u64 {
    cycle_type(a)
        .into_iter()
        .fold(1u64, crate::numtheory::lcm)
}

pub fn is_even(a: &[u8]) -> bool {
    // Parity = (number of points) - (number of cycles) mod 2.
    let swaps: u64 = cycle_type(a).iter().map(|l| l - 1).sum();
    swaps % 2 == 0
}

/// Build a permutation of degree `n` from 1-based cycles.
pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Box<[u8]>> {
    if n > 256 {
        return Err(Error::InvalidParam(format!("degree {n} exceeds 256")));
    }
    let mut images: Vec<u8> = (0..n as u8).collect();
    let mut touched = vec![false; n];
    for cycle in cycles {
        for window in 0..cycle.len() {
            let from = cycle[window];
            let to = cycle[(window + 1) % cycle.len()];
            if from == 0 || from > n || to == 0 || to > n {
                return Err(Error::Parse(format!(
                    "cycle point out of range 1..={n}: {from}"
                )));
            }
            if touched[from - 1] {
                return Err(Error::Parse(format!("point {from} repeated across cycles")));
            }
            touched[from - 1] = true;
            images[from - 1] = (to - 1) as u8;
        }
    }
    Ok(images.into_boxed_slice())
}

/// Parse disjoint-cycle notation like `(1,2)(3,4,5)`; `()` is the identity.
/// Whitespace between cycles or around numbers is tolerated.
pub fn parse_cycles(n: usize, text: &str) -> Result<Box<[u8]>> {
    let s = text.trim();
    if s.is_empty() || s == "()" {
        return Ok(identity(n));
    }
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut rest = s;
    while !rest.is_empty() {
        rest = rest.trim_start();
        if rest.is_empty() {
            break;
        }
        let open = rest
            .strip_prefix('(')
            .ok_or_else(|| Error::Parse(format!("expected `(` in permutation `{text}`")))?;
        let close = open
            .find(')')
            .ok_or_else(|| Error::Parse(format!("unclosed cycle in `{text}`")))?;
        let body = &open[..close];
        if !body.trim().is_empty() {
            let mut cycle = Vec::new();
            for part in body.split(',') {
                let v: usize = part.trim().parse().map_err(|_| {
                    Error::Parse(format!("bad point `{part}` in permutation `{text}`"))
                })?;
                cycle.push(v);
            }
            if cycle.len() == 1 {
                return Err(Error::Parse(format!(
                    "singleton cycle in `{text}` — fixed points are implicit"
                )));
            }
            cycles.push(cycle);
        }
        rest = &open[close + 1..];
    }
    from_cycles(n, &cycles)
}

/// Render in 1-based disjoint-cycle notation; identity renders as `()`.
pub fn format_cycles(a: &[u8]) -> String {
    let mut seen = vec![false; a.len()];
    let mut out = String::new();
    for start in 0..a.len() {
        if seen[start] || a[start] as usize == start {
            seen[start] = true;
            continue;
        }
        out.push('(');
        let mut cur = start;
        let mut first = true;
        while !seen[cur] {
            seen[cur] = true;
            if !first {
                out.push(',');
            }
            out.push_str(&(cur + 1).to_string());
            cur = a[cur] as usize;
            first = false;
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}
