//! Burst patterns, syndromes, and the reference syndrome set `S`.
//!
//! Syndromes are integers of `n - k` bits with the most significant bit on
//! parity-check row 0, so `(1 1 0 1 0 0)` is 52.

use std::fmt;

use crate::binmat::BitMatrix;
use crate::error::{arg_err, Error, Result};
use crate::gf2poly::Gf2Poly;
use crate::graycode;
use crate::search::CodeSpec;

/// A single burst inside a block of length `n`.
///
/// The burst covers `length` consecutive positions starting at `start`,
/// wrapping past `n - 1` when `wraps` is set. Both end positions are set;
/// bit `i` of `interior` is position `start + 1 + i` (mod `n`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BurstPattern {
    pub start: usize,
    pub length: usize,
    pub interior: u128,
    pub wraps: bool,
}

impl BurstPattern {
    /// Error vector packed into a word, bit `j` = position `j`.
    pub fn to_word(&self, n: usize) -> u128 {
        let mut w = 0u128;
        for off in self.offsets() {
            w |= 1 << ((self.start + off) % n);
        }
        w
    }

    /// The error vector as 0/1 entries.
    pub fn to_vec(&self, n: usize) -> Vec<u8> {
        let w = self.to_word(n);
        (0..n).map(|j| ((w >> j) & 1) as u8).collect()
    }

    /// Offsets from `start` of the set positions.
    fn offsets(&self) -> impl Iterator<Item = usize> + '_ {
        let last = self.length - 1;
        (0..self.length)
            .filter(move |&o| o == 0 || o == last || (self.interior >> (o - 1)) & 1 == 1)
    }
}

/// An `n - k` bit syndrome value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Syndrome {
    pub value: u128,
    pub width: usize,
}

impl Syndrome {
    pub fn bits(&self) -> Vec<u8> {
        (0..self.width)
            .rev()
            .map(|s| ((self.value >> s) & 1) as u8)
            .collect()
    }
}

impl fmt::Display for Syndrome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Number of NAA bursts of length at most `b` (plus zero) inside `nk` bits.
pub fn naa_count(nk: usize, b: usize) -> u64 {
    (1u64 << (b - 1)) * (nk + 2 - b) as u64
}

/// Number of AA bursts of length `2..=ell` in any block longer than `ell`.
pub fn aa_count(ell: usize) -> u64 {
    (2..=ell).map(|l| (l as u64 - 1) << (l - 2)).sum()
}

fn check_reiger(nk: usize, b: usize) -> Result<()> {
    if b == 0 {
        return arg_err("burst length must be at least 1");
    }
    if 2 * b > nk {
        return Err(Error::Reiger {
            twice_b: 2 * b,
            redundancy: nk,
        });
    }
    Ok(())
}

/// Whether `v` is one of [`naa_syndrome_values`]`(nk, b)`: zero, or a
/// pattern of `nk` bits whose set bits span at most `b` positions.
#[inline]
pub fn is_naa_value(v: u128, nk: usize, b: usize) -> bool {
    if v == 0 {
        return true;
    }
    let high = 127 - v.leading_zeros() as usize;
    let low = v.trailing_zeros() as usize;
    high < nk && high - low < b
}

/// Syndromes of the NAA bursts of length `<= b` lying in the last `nk`
/// coordinates, zero included, in ascending order.
pub fn naa_syndrome_values(nk: usize, b: usize) -> Result<Vec<u128>> {
    check_reiger(nk, b)?;
    let half = 1u128 << (b - 1);
    let mut out: Vec<u128> = (0..half).collect();
    for j in 0..=(nk - b) {
        out.extend((half..2 * half).map(|t| t << j));
    }
    out.sort_unstable();
    Ok(out)
}

/// All AA bursts of exact length `2..=ell` in a block of length `n`, ordered
/// by length, then start, then interior pattern.
pub fn aa_bursts(n: usize, ell: usize) -> Result<Vec<BurstPattern>> {
    if ell == 0 || ell >= n {
        return arg_err(format!("AA burst length {ell} must lie in 1..{n}"));
    }
    let mut out = Vec::with_capacity(aa_count(ell) as usize);
    for length in 2..=ell {
        for start in (n + 1 - length)..n {
            for interior in 0..1u128 << (length - 2) {
                out.push(BurstPattern {
                    start,
                    length,
                    interior,
                    wraps: true,
                });
            }
        }
    }
    Ok(out)
}

/// All NAA bursts of length `1..=b` starting anywhere in `0..n`.
pub fn naa_bursts(n: usize, b: usize) -> Vec<BurstPattern> {
    let mut out = Vec::new();
    for length in 1..=b.min(n) {
        for start in 0..=(n - length) {
            for interior in 0..1u128 << length.saturating_sub(2) {
                out.push(BurstPattern {
                    start,
                    length,
                    interior,
                    wraps: false,
                });
            }
        }
    }
    out
}

/// The syndrome `e H^T` of the error vector `pattern`.
pub fn syndrome_of(pattern: &[u8], h: &BitMatrix) -> Result<Syndrome> {
    if pattern.len() != h.cols() {
        return arg_err(format!(
            "pattern length {} does not match n = {}",
            pattern.len(),
            h.cols()
        ));
    }
    let value = pattern
        .iter()
        .enumerate()
        .filter(|(_, &bit)| bit != 0)
        .fold(0u128, |acc, (c, _)| acc ^ h.column_value(c));
    Ok(Syndrome {
        value,
        width: h.rows(),
    })
}

/// Syndrome of a packed error word given the MSB-first columns of `H`.
pub fn syndrome_of_word(word: u128, columns: &[u128]) -> u128 {
    let mut w = word;
    let mut s = 0;
    while w != 0 {
        let j = w.trailing_zeros() as usize;
        s ^= columns[j];
        w &= w - 1;
    }
    s
}

/// Two correctable patterns share a syndrome; the candidate is rejected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("syndrome {value} is repeated")]
pub struct Collision {
    pub value: u128,
}

const FILTER_BITS: usize = 12;

/// The set `S`: the NAA syndromes of the parity region together with the
/// syndromes of all AA bursts of length `2..=ell`.
///
/// The NAA part is a closed-form band test; the AA part is a sorted vector
/// behind a small bit filter on the low syndrome bits.
#[derive(Debug, Clone, Default)]
pub struct SyndromeSet {
    nk: usize,
    b: usize,
    aa: Vec<u128>,
    filter: Vec<u64>,
}

impl SyndromeSet {
    fn reset(&mut self, nk: usize, b: usize) {
        self.nk = nk;
        self.b = b;
        self.aa.clear();
        self.filter.clear();
        self.filter.resize(1 << (FILTER_BITS - 6), 0);
    }

    pub fn width(&self) -> usize {
        self.nk
    }

    #[inline]
    pub fn contains(&self, v: u128) -> bool {
        if is_naa_value(v, self.nk, self.b) {
            return true;
        }
        let slot = (v as usize) & ((1 << FILTER_BITS) - 1);
        if self.filter[slot >> 6] >> (slot & 63) & 1 == 0 {
            return false;
        }
        self.aa.binary_search(&v).is_ok()
    }

    pub fn len(&self) -> usize {
        naa_count(self.nk, self.b) as usize + self.aa.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// AA syndromes in ascending order.
    pub fn aa_members(&self) -> &[u128] {
        &self.aa
    }

    /// Every member in ascending order.
    pub fn members(&self) -> Vec<u128> {
        let mut all = naa_syndrome_values(self.nk, self.b).expect("validated on construction");
        all.extend_from_slice(&self.aa);
        all.sort_unstable();
        all
    }
}

/// Reusable builder for [`SyndromeSet`], holding scratch space across
/// candidates.
#[derive(Debug, Default)]
pub struct SyndromeSetBuilder {
    set: SyndromeSet,
    interior: Vec<usize>,
}

impl SyndromeSetBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds `S` for `code` from the MSB-first columns of `H`. Any repeated
    /// syndrome, within or across the NAA and AA groups, is a collision.
    pub fn build(
        &mut self,
        code: &CodeSpec,
        columns: &[u128],
    ) -> std::result::Result<&SyndromeSet, Collision> {
        let (n, nk, b, ell) = (code.n, code.n - code.k, code.b, code.ell);
        debug_assert_eq!(columns.len(), n);
        self.set.reset(nk, b);
        for length in 2..=ell {
            for start in (n + 1 - length)..n {
                let end = start + length - 1 - n;
                self.interior.clear();
                self.interior.extend((start + 1..n).chain(0..end));
                let mut s = columns[start] ^ columns[end];
                self.push_aa(s)?;
                if length > 2 {
                    for &d in graycode_steps(length - 2) {
                        // Gray coordinate d (1-based from the left) is the
                        // d-th interior position.
                        s ^= columns[self.interior[d as usize - 1]];
                        self.push_aa(s)?;
                    }
                }
            }
        }
        self.set.aa.sort_unstable();
        if let Some(w) = self.set.aa.windows(2).find(|w| w[0] == w[1]) {
            return Err(Collision { value: w[0] });
        }
        for &v in &self.set.aa {
            let slot = (v as usize) & ((1 << FILTER_BITS) - 1);
            self.set.filter[slot >> 6] |= 1 << (slot & 63);
        }
        Ok(&self.set)
    }

    #[inline]
    fn push_aa(&mut self, s: u128) -> std::result::Result<(), Collision> {
        if is_naa_value(s, self.set.nk, self.set.b) {
            return Err(Collision { value: s });
        }
        self.set.aa.push(s);
        Ok(())
    }
}

/// Change sequences for Gray widths 1..=16, computed once.
pub(crate) fn graycode_steps(m: usize) -> &'static [u8] {
    use std::sync::OnceLock;
    static TABLES: OnceLock<Vec<Vec<u8>>> = OnceLock::new();
    let tables = TABLES.get_or_init(|| {
        (1..=graycode::MAX_WIDTH)
            .map(|w| graycode::change_positions(w).expect("width in range"))
            .collect()
    });
    &tables[m - 1]
}

/// Builds `S` for `code` under the parity-check matrix `h`.
pub fn build_syndrome_set(
    code: &CodeSpec,
    h: &BitMatrix,
) -> Result<std::result::Result<SyndromeSet, Collision>> {
    if h.cols() != code.n || h.rows() != code.n - code.k {
        return arg_err("parity-check matrix shape does not match the code");
    }
    let columns: Vec<u128> = (0..code.n).map(|c| h.column_value(c)).collect();
    let mut builder = SyndromeSetBuilder::new();
    Ok(builder.build(code, &columns).cloned())
}

/// Minimum number of NAA bursts of length `<= b` covering the set entries
/// of `v`. Greedy left-to-right covering is optimal for intervals.
pub fn burst_b_weight(v: &[u8], b: usize) -> usize {
    assert!(b >= 1, "burst length must be at least 1");
    let mut count = 0;
    let mut covered_to = 0;
    for (i, &bit) in v.iter().enumerate() {
        if bit != 0 && i >= covered_to {
            count += 1;
            covered_to = i + b;
        }
    }
    count
}

/// Whether `g` has burst-`b` weight below 3, i.e. `g_i = 0` for every
/// `b <= i <= nk - b`. Such generators are skipped outright.
pub fn quick_skip(g: &Gf2Poly, nk: usize, b: usize) -> bool {
    assert!(
        g.degree() == nk && g.coeff(0),
        "generator must have degree nk and g_0 = 1"
    );
    assert!(b >= 1 && 2 * b <= nk, "need 1 <= b and 2b <= nk");
    let band = ((1u128 << (nk - b + 1)) - 1) & !((1u128 << b) - 1);
    g.bits() & band == 0
}
