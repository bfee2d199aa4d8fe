//! Square matrices over a finite field, stored row-major as field codes.
//!
//! Matrix values are plain `Box<[u32]>`; every operation takes the field and
//! dimension explicitly. Comparing two matrices as slices gives row-major
//! lexicographic order on entry codes, which is the total order the
//! scalar-coset canonicalization minimizes over.

use crate::ff::FieldSpec;
use crate::{Error, Result};

pub fn identity(k: usize) -> Box<[u32]> {
    let mut m = vec![0u32; k * k];
    for i in 0..k {
        m[i * k + i] = 1;
    }
    m.into_boxed_slice()
}

pub fn mul(f: &FieldSpec, k: usize, a: &[u32], b: &[u32]) -> Box<[u32]> {
    let mut out = vec![0u32; k * k];
    for i in 0..k {
        for l in 0..k {
            let aik = a[i * k + l];
            if aik == 0 {
                continue;
            }
            for j in 0..k {
                let prod = f.mul(aik, b[l * k + j]);
                out[i * k + j] = f.add(out[i * k + j], prod);
            }
        }
    }
    out.into_boxed_slice()
}

/// Inverse by Gauss–Jordan elimination. Singular input panics — callers only
/// invert group elements, which are invertible by construction.
pub fn inv(f: &FieldSpec, k: usize, a: &[u32]) -> Box<[u32]> {
    let mut left: Vec<u32> = a.to_vec();
    let mut right: Vec<u32> = identity(k).to_vec();
    for col in 0..k {
        let pivot_row = (col..k)
            .find(|&r| left[r * k + col] != 0)
            .expect("group element matrix is invertible");
        if pivot_row != col {
            for j in 0..k {
                left.swap(col * k + j, pivot_row * k + j);
                right.swap(col * k + j, pivot_row * k + j);
            }
        }
        let pivot = left[col * k + col];
        let pinv = f.inv(pivot).expect("pivot nonzero");
        for j in 0..k {
            left[col * k + j] = f.mul(left[col * k + j], pinv);
            right[col * k + j] = f.mul(right[col * k + j], pinv);
        }
        for r in 0..k {
            if r == col {
                continue;
            }
            let factor = left[r * k + col];
            if factor == 0 {
                continue;
            }
            for j in 0..k {
                let l = f.mul(factor, left[col * k + j]);
                left[r * k + j] = f.sub(left[r * k + j], l);
                let rr = f.mul(factor, right[col * k + j]);
                right[r * k + j] = f.sub(right[r * k + j], rr);
            }
        }
    }
    right.into_boxed_slice()
}

pub fn det(f: &FieldSpec, k: usize, a: &[u32]) -> u32 {
    let mut m: Vec<u32> = a.to_vec();
    let mut d = f.one();
    for col in 0..k {
        let pivot_row = match (col..k).find(|&r| m[r * k + col] != 0) {
            Some(r) => r,
            None => return 0,
        };
        if pivot_row != col {
            for j in 0..k {
                m.swap(col * k + j, pivot_row * k + j);
            }
            d = f.neg(d);
        }
        let pivot = m[col * k + col];
        d = f.mul(d, pivot);
        let pinv = f.inv(pivot).expect("pivot nonzero");
        for r in col + 1..k {
            let factor = f.mul(m[r * k + col], pinv);
            if factor == 0 {
                continue;
            }
            for j in col..k {
                let sub = f.mul(factor, m[col * k + j]);
                m[r * k + j] = f.sub(m[r * k + j], sub);
            }
        }
    }
    d
}

pub fn scalar_mul(f: &FieldSpec, a: &[u32], lambda: u32) -> Box<[u32]> {
    a.iter().map(|&e| f.mul(lambda, e)).collect()
}

/// The scalars λ with λ^k = 1: the kernel of the determinant on scalar
/// matrices, i.e. the scalars whose k×k scalar matrix lies in SL_k(q).
pub fn unit_scalars(f: &FieldSpec, k: usize) -> Vec<u32> {
    (1..f.order() as u32)
        .filter(|&lambda| f.pow(lambda, k as u64) == 1)
        .collect()
}

/// Least representative of `{λa : λ in scalars}` in row-major lexicographic
/// order on entry codes.
pub fn canonicalize(f: &FieldSpec, a: &[u32], scalars: &[u32]) -> Box<[u32]> {
    let mut best: Option<Box<[u32]>> = None;
    for &lambda in scalars {
        let cand = if lambda == 1 {
            a.to_vec().into_boxed_slice()
        } else {
            scalar_mul(f, a, lambda)
        };
        match &best {
            Some(b) if cand[..] >= b[..] => {}
            _ => best = Some(cand),
        }
    }
    best.expect("scalar list contains 1")
}

/// Elementary transvection `I + c·E_{rc}` (r ≠ c), row-major.
pub fn transvection(k: usize, row: usize, col: usize, c: u32) -> Box<[u32]> {
    let mut m = identity(k);
    m[row * k + col] = c;
    m
}

/// Chevalley-style generator list for SL_k(q): for each adjacent index pair
/// (i, i+1) ascending, transvections `I + c·E_{i,i+1}` and `I + c·E_{i+1,i}`
/// for each F_p-basis element c = x^j (codes p^j), ascending in j.
pub fn sl_generators(f: &FieldSpec, k: usize) -> Vec<Box<[u32]>> {
    let mut gens = Vec::new();
    let basis: Vec<u32> = (0..f.degree()).map(|j| (f.p() as u32).pow(j)).collect();
    for i in 0..k - 1 {
        for &c in &basis {
            gens.push(transvection(k, i, i + 1, c));
            gens.push(transvection(k, i + 1, i, c));
        }
    }
    gens
}

/// |SL_k(q)| = q^(k(k-1)/2) · ∏_{i=2..k} (q^i − 1).
pub fn sl_order(k: u32, q: u64) -> Result<u64> {
    if k < 2 {
        return Err(Error::InvalidParam(format!("SL dimension {k} < 2")));
    }
    let mut order: u64 = 1;
    let power = q
        .checked_pow(k * (k - 1) / 2)
        .ok_or_else(|| Error::InvalidParam("SL order overflow".into()))?;
    for i in 2..=k {
        let qi = q
            .checked_pow(i)
            .ok_or_else(|| Error::InvalidParam("SL order overflow".into()))?;
        order = order
            .checked_mul(qi - 1)
            .ok_or_else(|| Error::InvalidParam("SL order overflow".into()))?;
    }
    order
        .checked_mul(power)
        .ok_or_else(|| Error::InvalidParam("SL order overflow".into()))
}

/// Render like `[[1,0],[w,1]]`, entries via the field's display form.
pub fn render(f: &FieldSpec, k: usize, a: &[u32]) -> String {
    let mut rows = Vec::with_capacity(k);
    for i in 0..k {
        let row: Vec<String> = (0..k).map(|j| f.render(a[i * k + j])).collect();
        rows.push(format!("[{}]", row.join(",")));
    }
    format!("[{}]", rows.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mul_and_inv_over_gf7() {
        let f = FieldSpec::new(7).unwrap();
        let a: Box<[u32]> = vec![1, 1, 0, 1].into_boxed_slice(); // [[1,1],[0,1]]
        let b: Box<[u32]> = vec![1, 0, 1, 1].into_boxed_slice(); // [[1,0],[1,1]]
        let ab = mul(&f, 2, &a, &b);
        assert_eq!(&ab[..], &[2, 1, 1, 1]);
        let ai = inv(&f, 2, &a);
        assert_eq!(&ai[..], &[1, 6, 0, 1]); // [[1,-1],[0,1]]
        assert_eq!(&mul(&f, 2, &a, &ai)[..], &identity(2)[..]);
    }

    #[test]
    fn det_matches_cofactor_expansion_small() {
        let f = FieldSpec::new(5).unwrap();
        // All 2x2 matrices: det = ad - bc.
        for code in 0..5u32.pow(4) {
            let e = [code % 5, code / 5 % 5, code / 25 % 5, code / 125 % 5];
            let expected = f.sub(f.mul(e[0], e[3]), f.mul(e[1], e[2]));
            assert_eq!(det(&f, 2, &e), expected);
        }
    }

    #[test]
    fn sl_orders() {
        assert_eq!(sl_order(2, 7).unwrap(), 336);
        assert_eq!(sl_order(2, 61).unwrap(), 226920);
        assert_eq!(sl_order(3, 2).unwrap(), 168);
        assert_eq!(sl_order(3, 3).unwrap(), 5616);
        assert_eq!(sl_order(3, 4).unwrap(), 60480);
    }

    #[test]
    fn generators_have_det_one() {
        for q in [2u64, 3, 4, 5, 7, 9] {
            let f = FieldSpec::new(q).unwrap();
            for k in [2usize, 3] {
                for g in sl_generators(&f, k) {
                    assert_eq!(det(&f, k, &g), 1, "q={q} k={k}");
                }
            }
        }
    }

    #[test]
    fn canonicalization_picks_least_coset_member() {
        let f = FieldSpec::new(7).unwrap();
        let scalars = unit_scalars(&f, 2); // λ² = 1 in GF(7): {1, 6}
        assert_eq!(scalars, vec![1, 6]);
        let a: Box<[u32]> = vec![6, 0, 0, 6].into_boxed_slice(); // -I
        let canon = canonicalize(&f, &a, &scalars);
        assert_eq!(&canon[..], &identity(2)[..]);
        // A matrix already least stays put.
        let b: Box<[u32]> = vec![1, 2, 3, 0].into_boxed_slice();
        assert_eq!(&canonicalize(&f, &b, &scalars)[..], &b[..]);
    }

    #[test]
    fn unit_scalar_counts_match_gcd() {
        // |{λ : λ^k = 1}| = gcd(k, q−1).
        for (k, q, expect) in [(2usize, 7u64, 2), (3, 4, 3), (3, 7, 3), (3, 2, 1), (2, 4, 1)] {
            let f = FieldSpec::new(q).unwrap();
            assert_eq!(unit_scalars(&f, k).len() as u64, expect, "k={k} q={q}");
        }
    }
}
