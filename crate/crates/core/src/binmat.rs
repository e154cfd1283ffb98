//! Dense GF(2) matrices with each row packed into a `u128`.
//!
//! Bit `c` of a row word holds column `c`, so a generator-polynomial row is
//! just the polynomial's coefficient word shifted left.

use std::fmt;

use crate::error::{arg_err, Result};
use crate::gf2poly::{reverse_bits, Gf2Poly};

pub const MAX_COLS: usize = 128;

#[derive(Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    data: Vec<u128>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        if rows == 0 || cols == 0 || cols > MAX_COLS {
            return arg_err(format!("unsupported matrix shape {rows}x{cols}"));
        }
        Ok(BitMatrix {
            rows,
            cols,
            data: vec![0; rows],
        })
    }

    /// Builds a matrix from rows of 0/1 entries.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut m = Self::zeros(rows.len(), cols)?;
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != cols {
                return arg_err("ragged rows");
            }
            for (j, &bit) in row.iter().enumerate() {
                match bit {
                    0 => {}
                    1 => m.data[i] |= 1 << j,
                    _ => return arg_err(format!("entry {bit} is not a bit")),
                }
            }
        }
        Ok(m)
    }

    fn from_words(rows: usize, cols: usize, data: Vec<u128>) -> Self {
        debug_assert_eq!(data.len(), rows);
        BitMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        (self.data[r] >> c) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, v: bool) {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        if v {
            self.data[r] |= 1 << c;
        } else {
            self.data[r] &= !(1 << c);
        }
    }

    /// Packed row word; bit `c` is column `c`.
    pub fn row_word(&self, r: usize) -> u128 {
        self.data[r]
    }

    pub fn row_bits(&self, r: usize) -> Vec<u8> {
        (0..self.cols).map(|c| self.get(r, c) as u8).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        (0..self.rows).map(|r| self.row_bits(r)).collect()
    }

    /// Column `c` as an integer whose most significant bit is row 0.
    pub fn column_value(&self, c: usize) -> u128 {
        assert!(c < self.cols, "column out of bounds");
        self.data
            .iter()
            .fold(0u128, |acc, &w| (acc << 1) | ((w >> c) & 1))
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = vec![0u128; self.cols];
        for (r, &w) in self.data.iter().enumerate() {
            for (c, tw) in t.iter_mut().enumerate() {
                *tw |= ((w >> c) & 1) << r;
            }
        }
        BitMatrix::from_words(self.cols, self.rows, t)
    }

    /// `self * other^T` over GF(2); both operands must share a column count.
    pub fn mul_transpose(&self, other: &BitMatrix) -> Result<BitMatrix> {
        if self.cols != other.cols {
            return arg_err("column counts differ");
        }
        let mut out = BitMatrix::zeros(self.rows, other.rows)?;
        for (i, &a) in self.data.iter().enumerate() {
            for (j, &b) in other.data.iter().enumerate() {
                if (a & b).count_ones() & 1 == 1 {
                    out.data[i] |= 1 << j;
                }
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    /// Whether the first `rows` columns form the identity.
    pub fn is_systematic(&self) -> bool {
        self.rows <= self.cols
            && self
                .data
                .iter()
                .enumerate()
                .all(|(i, &w)| w & low_mask(self.rows) == 1 << i)
    }
}

fn low_mask(bits: usize) -> u128 {
    if bits >= 128 {
        u128::MAX
    } else {
        (1u128 << bits) - 1
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let line: String = (0..self.cols)
                .map(|c| if self.get(r, c) { '1' } else { '0' })
                .collect();
            writeln!(f, "  {line}")?;
        }
        Ok(())
    }
}

/// The `k x n` generator matrix whose row `i` is `g(x)` shifted right by `i`.
pub fn build_generator(g: &Gf2Poly, n: usize, k: usize) -> Result<BitMatrix> {
    check_generator(g, n, k)?;
    let data = (0..k).map(|i| g.bits() << i).collect();
    Ok(BitMatrix::from_words(k, n, data))
}

fn check_generator(g: &Gf2Poly, n: usize, k: usize) -> Result<()> {
    if k == 0 || n > MAX_COLS || k >= n {
        return arg_err(format!("unsupported code shape n = {n}, k = {k}"));
    }
    if g.degree() != n - k {
        return arg_err(format!(
            "generator degree {} does not match n - k = {}",
            g.degree(),
            n - k
        ));
    }
    if !g.coeff(0) {
        return arg_err("generator must have a nonzero constant term");
    }
    Ok(())
}

/// Gauss-Jordan elimination on the first `k` columns, without column swaps,
/// giving `(I_k | V)` with the same row space.
pub fn systematize(g: &BitMatrix) -> Result<BitMatrix> {
    let mut rows = g.data.clone();
    if !reduce_in_place(&mut rows, g.cols) {
        return arg_err("leading k x k block is singular");
    }
    Ok(BitMatrix::from_words(g.rows, g.cols, rows))
}

/// Returns false when some pivot column has no usable row.
fn reduce_in_place(rows: &mut [u128], cols: usize) -> bool {
    let k = rows.len();
    if k > cols {
        return false;
    }
    for c in 0..k {
        let bit = 1u128 << c;
        let Some(p) = (c..k).find(|&r| rows[r] & bit != 0) else {
            return false;
        };
        rows.swap(c, p);
        let pivot = rows[c];
        for (r, w) in rows.iter_mut().enumerate() {
            if r != c && *w & bit != 0 {
                *w ^= pivot;
            }
        }
    }
    true
}

/// `H = (V^T | I_{n-k})` for a systematic `G_sys = (I_k | V)`.
pub fn parity_check(g_sys: &BitMatrix) -> Result<BitMatrix> {
    if !g_sys.is_systematic() || g_sys.rows == g_sys.cols {
        return arg_err("generator matrix is not in systematic form (I_k | V)");
    }
    let (k, n) = (g_sys.rows, g_sys.cols);
    let nk = n - k;
    let mut h = vec![0u128; nk];
    for (r, hw) in h.iter_mut().enumerate() {
        for (j, &w) in g_sys.data.iter().enumerate() {
            *hw |= ((w >> (k + r)) & 1) << j;
        }
        *hw |= 1 << (k + r);
    }
    Ok(BitMatrix::from_words(nk, n, h))
}

/// Columns of the parity-check matrix of the shortened cyclic code generated
/// by `g`, as MSB-first syndrome values.
///
/// Runs the same generator / Gauss-Jordan / `(V^T | I)` pipeline as
/// [`build_generator`], [`systematize`] and [`parity_check`], but writes into
/// caller-owned buffers and reads the columns of `H` straight off the
/// systematic rows, so the search loop does not allocate.
#[derive(Debug, Default, Clone)]
pub struct ParityColumns {
    rows: Vec<u128>,
    cols: Vec<u128>,
}

impl ParityColumns {
    pub fn new() -> Self {
        Self::default()
    }

    /// Fills the column table for `g` at length `n`. Returns the columns
    /// `h_0 .. h_{n-1}`.
    pub fn compute(&mut self, g: &Gf2Poly, n: usize, k: usize) -> Result<&[u128]> {
        check_generator(g, n, k)?;
        let nk = n - k;
        self.rows.clear();
        self.rows.extend((0..k).map(|i| g.bits() << i));
        let ok = reduce_in_place(&mut self.rows, n);
        assert!(
            ok,
            "generator matrix of a polynomial with g_0 = 1 is always reducible"
        );
        self.cols.clear();
        self.cols
            .extend(self.rows.iter().map(|&w| reverse_bits(w >> k, nk)));
        self.cols.extend((0..nk).map(|r| 1u128 << (nk - 1 - r)));
        Ok(&self.cols)
    }

    pub fn columns(&self) -> &[u128] {
        &self.cols
    }
}
