//! Brute-force correctability check.
//!
//! A code corrects a set of error patterns exactly when no two of them differ
//! by a nonzero codeword. For a shortened cyclic code the codewords are the
//! multiples of `g(x)` of degree below `n`, so two patterns collide iff they
//! leave the same remainder modulo `g(x)`. This module uses that remainder
//! directly and never touches the generator or parity-check matrices.

use std::collections::HashMap;

use crate::error::{arg_err, Error, Result};
use crate::gf2poly::Gf2Poly;
use crate::search::CodeSpec;

/// Largest error set the oracle will enumerate.
pub const MAX_ERROR_SET: u64 = 1 << 22;

/// `1 + sum_{L=1..b} (n-L+1) 2^max(L-2,0) + sum_{L=2..ell} (L-1) 2^(L-2)`.
pub fn error_set_size(n: usize, b: usize, ell: usize) -> u64 {
    let naa: u64 = (1..=b.min(n))
        .map(|l| (n - l + 1) as u64 * (1u64 << l.saturating_sub(2)))
        .sum();
    let aa: u64 = (2..=ell).map(|l| (l as u64 - 1) << (l - 2)).sum();
    1 + naa + aa
}

fn check_params(n: usize, b: usize, ell: usize) -> Result<()> {
    if !(2..=128).contains(&n) || ell == 0 || ell > b || b >= n {
        return arg_err(format!(
            "need 2 <= n <= 128 and 1 <= ell <= b < n, got n = {n}, b = {b}, ell = {ell}"
        ));
    }
    Ok(())
}

/// The zero vector, every NAA burst of length `<= b`, and every AA burst of
/// length `2..=ell`, packed with bit `j` = position `j`.
///
/// Entries are distinct for `n > 2b`; shorter blocks can list a vector that
/// is both an NAA and an AA burst twice.
pub fn enumerate_error_set(n: usize, b: usize, ell: usize) -> Result<Vec<u128>> {
    check_params(n, b, ell)?;
    let size = error_set_size(n, b, ell);
    if size > MAX_ERROR_SET {
        return Err(Error::TooLarge {
            size,
            limit: MAX_ERROR_SET,
        });
    }
    let mut out = Vec::with_capacity(size as usize);
    out.push(0);
    for len in 1..=b {
        let ends = if len == 1 {
            1u128
        } else {
            1 | (1u128 << (len - 1))
        };
        for inner in 0..1u128 << len.saturating_sub(2) {
            let shape = ends | (inner << 1);
            for start in 0..=(n - len) {
                out.push(shape << start);
            }
        }
    }
    let full = if n == 128 {
        u128::MAX
    } else {
        (1u128 << n) - 1
    };
    for len in 2..=ell {
        let ends = 1 | (1u128 << (len - 1));
        for inner in 0..1u128 << (len - 2) {
            let shape = ends | (inner << 1);
            // Rotate so the burst begins at start and wraps past n - 1.
            for start in (n + 1 - len)..n {
                let w = ((shape << start) | (shape >> (n - start))) & full;
                out.push(w);
            }
        }
    }
    Ok(out)
}

/// `e(x) mod g(x)` for a packed error word of length `n`.
pub fn remainder(word: u128, g: &Gf2Poly) -> u128 {
    let d = g.degree();
    let mut r = word;
    while r != 0 {
        let top = 127 - r.leading_zeros() as usize;
        if top < d {
            break;
        }
        r ^= g.bits() << (top - d);
    }
    r
}

/// First pair of correctable patterns sharing a syndrome, if any.
pub fn find_collision(g: &Gf2Poly, spec: &CodeSpec) -> Result<Option<(u128, u128)>> {
    if g.degree() != spec.n - spec.k || !g.coeff(0) {
        return arg_err(format!(
            "generator {g} must have degree n - k = {} and a constant term",
            spec.n - spec.k
        ));
    }
    let patterns = enumerate_error_set(spec.n, spec.b, spec.ell)?;
    let mut seen: HashMap<u128, u128> = HashMap::with_capacity(patterns.len());
    for e in patterns {
        match seen.insert(remainder(e, g), e) {
            Some(prev) if prev != e => return Ok(Some((prev, e))),
            _ => {}
        }
    }
    Ok(None)
}

/// Whether `g` generates an `[n, k, <b, ell>]` burst-correcting code.
pub fn verify_burst_correcting(g: &Gf2Poly, spec: &CodeSpec) -> Result<bool> {
    Ok(find_collision(g, spec)?.is_none())
}
