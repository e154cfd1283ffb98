//! Incremental syndrome walk over the NAA bursts that start in the
//! information part of the block.
//!
//! Bursts are visited block by block: block `q` holds the `2^(b-1)` bursts
//! whose first set bit is at position `q`, and within a block the trailing
//! `b - 1` positions follow the reflected Gray code. Every step therefore
//! changes one coordinate, and the running syndrome is updated with a single
//! column XOR.

use std::ops::ControlFlow;

use crate::binmat::BitMatrix;
use crate::bursts::{graycode_steps, SyndromeSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// No visited syndrome lies in `S`.
    Clean,
    /// The first visited burst whose syndrome lies in `S`.
    Hit(ScanHit),
}

impl Verdict {
    pub fn is_clean(&self) -> bool {
        matches!(self, Verdict::Clean)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanHit {
    /// Start position of the burst (its block).
    pub start: usize,
    /// Gray row within the block.
    pub step: usize,
    pub syndrome: u128,
}

impl ScanHit {
    /// 0-based visit index, `start * 2^(b-1) + step`.
    pub fn index(&self, b: usize) -> usize {
        (self.start << (b - 1)) + self.step
    }
}

/// Walks all `k * 2^(b-1)` bursts, calling `visit(start, step, syndrome)`
/// after each update. `columns` are the MSB-first columns of `H`.
pub fn walk<F>(columns: &[u128], k: usize, b: usize, mut visit: F) -> ControlFlow<ScanHit>
where
    F: FnMut(usize, usize, u128) -> ControlFlow<ScanHit>,
{
    assert!(k >= 1 && b >= 1, "need k >= 1 and b >= 1");
    assert!(k + b - 1 <= columns.len(), "bursts must fit in the block");
    let steps: &[u8] = if b > 1 { graycode_steps(b - 1) } else { &[] };
    let mut s = 0u128;
    for q in 0..k {
        if q == 0 {
            s = columns[0];
        } else if b == 1 {
            // One-bit bursts: move the single set bit.
            s ^= columns[q - 1] ^ columns[q];
        } else {
            // The last Gray row is (1, 0, .., 0): the previous burst was
            // {q-1, q} and the next one is {q}.
            s ^= columns[q - 1];
        }
        visit(q, 0, s)?;
        for (t, &d) in steps.iter().enumerate() {
            s ^= columns[q + d as usize];
            visit(q, t + 1, s)?;
        }
    }
    ControlFlow::Continue(())
}

/// Scans with precomputed columns and stops at the first syndrome in `set`.
#[inline]
pub fn scan_columns(columns: &[u128], k: usize, b: usize, set: &SyndromeSet) -> Verdict {
    let flow = walk(columns, k, b, |start, step, syndrome| {
        if set.contains(syndrome) {
            ControlFlow::Break(ScanHit {
                start,
                step,
                syndrome,
            })
        } else {
            ControlFlow::Continue(())
        }
    });
    match flow {
        ControlFlow::Continue(()) => Verdict::Clean,
        ControlFlow::Break(hit) => Verdict::Hit(hit),
    }
}

/// Scans the bursts starting in `0..k` against `set` under the systematic
/// parity-check matrix `h`.
pub fn scan(h: &BitMatrix, k: usize, b: usize, set: &SyndromeSet) -> Verdict {
    let columns: Vec<u128> = (0..h.cols()).map(|c| h.column_value(c)).collect();
    scan_columns(&columns, k, b, set)
}

/// Every visited burst whose syndrome lies in `set`, in visit order.
pub fn scan_all_hits(h: &BitMatrix, k: usize, b: usize, set: &SyndromeSet) -> Vec<ScanHit> {
    let columns: Vec<u128> = (0..h.cols()).map(|c| h.column_value(c)).collect();
    let mut hits = Vec::new();
    let _ = walk(&columns, k, b, |start, step, syndrome| {
        if set.contains(syndrome) {
            hits.push(ScanHit {
                start,
                step,
                syndrome,
            });
        }
        ControlFlow::Continue(())
    });
    hits
}

/// The full sequence of running syndromes.
pub fn trace(h: &BitMatrix, k: usize, b: usize) -> Vec<u128> {
    let columns: Vec<u128> = (0..h.cols()).map(|c| h.column_value(c)).collect();
    let mut out = Vec::with_capacity(k << (b - 1));
    let _ = walk(&columns, k, b, |_, _, s| {
        out.push(s);
        ControlFlow::Continue(())
    });
    out
}

/// The burst visited at `(start, step)` as a packed error word.
pub fn burst_word(start: usize, step: usize, b: usize) -> u128 {
    let gray = (step ^ (step >> 1)) as u128;
    // Gray coordinate d (1-based from the left of b-1 bits) is position start + d.
    let mut w = 1u128 << start;
    for d in 1..b {
        if (gray >> (b - 1 - d)) & 1 == 1 {
            w |= 1 << (start + d);
        }
    }
    w
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binmat::{build_generator, parity_check, systematize};
    use crate::bursts::{syndrome_of_word, SyndromeSetBuilder};
    use crate::gf2poly::Gf2Poly;
    use crate::search::CodeSpec;

    fn h_for(g: &Gf2Poly, n: usize, k: usize) -> BitMatrix {
        parity_check(&systematize(&build_generator(g, n, k).unwrap()).unwrap()).unwrap()
    }

    #[test]
    fn running_syndrome_matches_direct_computation() {
        for nk in 2..=8usize {
            for interior in 0u128..1 << (nk - 1) {
                let g = Gf2Poly::from_bits(1 | (interior << 1) | (1 << nk)).unwrap();
                for n in [nk + 3, 20] {
                    let k = n - nk;
                    let h = h_for(&g, n, k);
                    let cols: Vec<u128> = (0..n).map(|c| h.column_value(c)).collect();
                    for b in 1..=(nk / 2).max(1) {
                        let mut visited = 0;
                        let _ = walk(&cols, k, b, |q, t, s| {
                            assert_eq!(visited, (q << (b - 1)) + t);
                            let w = burst_word(q, t, b);
                            assert_eq!(s, syndrome_of_word(w, &cols));
                            visited += 1;
                            ControlFlow::Continue(())
                        });
                        assert_eq!(visited, k << (b - 1));
                    }
                }
            }
        }
    }

    #[test]
    fn walk_covers_every_short_burst_once() {
        let (k, b) = (6usize, 4usize);
        let cols: Vec<u128> = (0..k + b).map(|j| 1u128 << j).collect();
        let mut seen = Vec::new();
        let _ = walk(&cols, k, b, |_, _, s| {
            seen.push(s);
            ControlFlow::Continue(())
        });
        let mut expect: Vec<u128> = crate::bursts::naa_bursts(k + b, b)
            .into_iter()
            .filter(|p| p.start < k)
            .map(|p| p.to_word(k + b))
            .collect();
        seen.sort_unstable();
        expect.sort_unstable();
        assert_eq!(seen, expect);
    }

    #[test]
    fn one_bit_bursts() {
        let cols: Vec<u128> = (0..5).map(|j| 1u128 << j).collect();
        let mut seen = Vec::new();
        let _ = walk(&cols, 5, 1, |_, _, s| {
            seen.push(s);
            ControlFlow::Continue(())
        });
        assert_eq!(seen, vec![1, 2, 4, 8, 16]);
    }

    #[test]
    fn scan_stops_at_first_member() {
        let g = Gf2Poly::from_exponents(&[0, 3, 4, 5, 6]).unwrap();
        let h = h_for(&g, 14, 8);
        let code = CodeSpec::new(14, 8, 3, 3).unwrap();
        let cols: Vec<u128> = (0..14).map(|c| h.column_value(c)).collect();
        let mut builder = SyndromeSetBuilder::new();
        let set = builder.build(&code, &cols).unwrap();
        let Verdict::Hit(hit) = scan(&h, 8, 3, set) else {
            panic!("expected a hit");
        };
        let hits = scan_all_hits(&h, 8, 3, set);
        assert_eq!(hits[0], hit);
        assert!(hits.len() > 1);
    }
}
