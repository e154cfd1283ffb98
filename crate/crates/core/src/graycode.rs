//! Binary-reflected Gray code tables.
//!
//! Rows are read with the most significant bit on the left; coordinates are
//! numbered 1..=m from the left, so a burst that starts at code position `q`
//! maps Gray coordinate `d` onto code position `q + d`.

use crate::error::{arg_err, Result};

pub const MAX_WIDTH: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrayTable {
    m: usize,
    rows: Vec<u32>,
    changes: Vec<u8>,
}

impl GrayTable {
    pub fn new(m: usize) -> Result<Self> {
        Ok(GrayTable {
            m,
            rows: gray_rows(m)?,
            changes: change_positions(m)?,
        })
    }

    pub fn width(&self) -> usize {
        self.m
    }

    /// Row `i` packed MSB-left into the low `m` bits.
    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    /// Row `i` as a 0/1 vector, leftmost coordinate first.
    pub fn row_bits(&self, i: usize) -> Vec<u8> {
        let r = self.rows[i];
        (0..self.m).rev().map(|s| ((r >> s) & 1) as u8).collect()
    }

    /// `changes()[t - 1]` is the coordinate flipped between rows `t - 1` and `t`.
    pub fn changes(&self) -> &[u8] {
        &self.changes
    }
}

fn check_width(m: usize) -> Result<()> {
    if !(1..=MAX_WIDTH).contains(&m) {
        return arg_err(format!("Gray code width {m} outside 1..={MAX_WIDTH}"));
    }
    Ok(())
}

/// All `2^m` rows of the reflected Gray code, each packed MSB-left.
pub fn gray_rows(m: usize) -> Result<Vec<u32>> {
    check_width(m)?;
    Ok((0..1u32 << m).map(|i| i ^ (i >> 1)).collect())
}

/// The coordinate (1-based from the left) that changes at each of the
/// `2^m - 1` steps of the Gray code.
pub fn change_positions(m: usize) -> Result<Vec<u8>> {
    check_width(m)?;
    Ok((1..1u32 << m)
        .map(|t| (m - t.trailing_zeros() as usize) as u8)
        .collect())
}
