#![allow(dead_code)]

use burstcode::Gf2Poly;

/// Parses whitespace-separated 0/1 rows.
pub fn rows(text: &str) -> Vec<Vec<u8>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(|l| l.split_whitespace().map(|t| t.parse().unwrap()).collect())
        .collect()
}

/// g(x) = 1 + x^3 + x^4 + x^5 + x^6 of the [14, 8] example.
pub fn g14() -> Gf2Poly {
    Gf2Poly::from_exponents(&[0, 3, 4, 5, 6]).unwrap()
}

pub const G14: &str = "
1 0 0 1 1 1 1 0 0 0 0 0 0 0
0 1 0 0 1 1 1 1 0 0 0 0 0 0
0 0 1 0 0 1 1 1 1 0 0 0 0 0
0 0 0 1 0 0 1 1 1 1 0 0 0 0
0 0 0 0 1 0 0 1 1 1 1 0 0 0
0 0 0 0 0 1 0 0 1 1 1 1 0 0
0 0 0 0 0 0 1 0 0 1 1 1 1 0
0 0 0 0 0 0 0 1 0 0 1 1 1 1";

pub const G14_SYS: &str = "
1 0 0 0 0 0 0 0 1 1 0 1 0 0
0 1 0 0 0 0 0 0 0 1 1 0 1 0
0 0 1 0 0 0 0 0 0 0 1 1 0 1
0 0 0 1 0 0 0 0 1 0 0 0 0 1
0 0 0 0 1 0 0 0 1 1 0 1 1 1
0 0 0 0 0 1 0 0 1 1 1 1 0 0
0 0 0 0 0 0 1 0 0 1 1 1 1 0
0 0 0 0 0 0 0 1 0 0 1 1 1 1";

pub const H14: &str = "
1 0 0 1 1 1 0 0 1 0 0 0 0 0
1 1 0 0 1 1 1 0 0 1 0 0 0 0
0 1 1 0 0 1 1 1 0 0 1 0 0 0
1 0 1 0 1 1 1 1 0 0 0 1 0 0
0 1 0 0 1 0 1 1 0 0 0 0 1 0
0 0 1 1 1 0 0 1 0 0 0 0 0 1";

/// The set S for ell = 3, without zero.
pub const S_ELL3: [u128; 24] = [
    1, 2, 3, 4, 5, 6, 7, 8, 10, 12, 14, 16, 20, 24, 28, 32, 40, 48, 56, 27, 47, 53, 54, 55,
];

/// The reduced set for ell = 2, without zero.
pub const S_ELL2: [u128; 20] = [
    1, 2, 3, 4, 5, 6, 7, 8, 10, 12, 14, 16, 20, 24, 28, 32, 40, 48, 56, 53,
];

/// Running syndromes of the first 17 bursts, then of bursts 17..32.
pub const SCAN_FIRST_17: [u128; 17] = [
    52, 57, 35, 46, 26, 59, 54, 23, 13, 58, 27, 44, 33, 29, 42, 22, 55,
];
pub const SCAN_FROM_17: [u128; 16] = [
    55, 41, 21, 11, 60, 51, 45, 34, 30, 62, 49, 17, 15, 31, 63, 47,
];

/// XOR column sequence after the first burst.
pub const SCAN_COLUMNS: [usize; 31] = [
    2, 1, 2, 0, 3, 2, 3, 1, 4, 3, 4, 2, 5, 4, 5, 3, 6, 5, 6, 4, 7, 6, 7, 5, 8, 7, 8, 6, 9, 8, 9,
];

/// g(x) = 1 + x^3 + x^8 of the [12, 4] example and its 8 listed codewords.
pub fn g12() -> Gf2Poly {
    Gf2Poly::from_exponents(&[0, 3, 8]).unwrap()
}

pub const G12: &str = "
1 0 0 1 0 0 0 0 1 0 0 0
0 1 0 0 1 0 0 0 0 1 0 0
0 0 1 0 0 1 0 0 0 0 1 0
0 0 0 1 0 0 1 0 0 0 0 1";

pub const CODEWORDS12: &str = "
1 0 0 1 0 0 0 0 1 0 0 0
1 1 0 1 1 0 0 0 1 1 0 0
1 0 1 1 0 1 0 0 1 0 1 0
1 0 0 0 0 0 1 0 1 0 0 1
1 1 1 1 1 1 0 0 1 1 1 0
1 1 0 0 1 0 1 0 1 1 0 1
1 0 1 0 0 1 1 0 1 0 1 1
1 1 1 0 1 1 1 0 1 1 1 1";

/// Reference rows for b = 5, g = 20..=30: per-ell (n, k), best (n, k), hex, cyclic.
pub struct PaperRow {
    pub g: usize,
    pub per_ell: &'static [(usize, usize)],
    pub best: Option<(usize, usize)>,
    pub hex: &'static str,
    pub cyclic: bool,
}

#[rustfmt::skip]
pub const TABLE1: &[PaperRow] = &[
    PaperRow { g: 20, per_ell: &[(21, 11), (22, 12), (23, 13), (24, 13), (25, 14)], best: Some((23, 13)), hex: "4ED", cyclic: false },
    PaperRow { g: 21, per_ell: &[(22, 12), (23, 13), (24, 13), (25, 14), (26, 14)], best: Some((23, 13)), hex: "4ED", cyclic: false },
    PaperRow { g: 22, per_ell: &[(23, 13), (24, 14), (25, 15), (26, 15), (27, 15)], best: Some((25, 15)), hex: "523", cyclic: false },
    PaperRow { g: 23, per_ell: &[(24, 14), (25, 15), (26, 15), (27, 16), (28, 16)], best: Some((25, 15)), hex: "4ED", cyclic: false },
    PaperRow { g: 24, per_ell: &[(25, 15), (26, 16), (27, 17), (28, 17), (29, 17)], best: Some((27, 17)), hex: "523", cyclic: false },
    PaperRow { g: 25, per_ell: &[(26, 16), (27, 17), (28, 17), (29, 18), (30, 18)], best: Some((27, 17)), hex: "4ED", cyclic: false },
    PaperRow { g: 26, per_ell: &[(27, 17), (28, 17), (29, 18), (30, 19), (31, 20)], best: Some((31, 20)), hex: "867", cyclic: true },
    PaperRow { g: 27, per_ell: &[(28, 17), (29, 18), (30, 19), (31, 20), (32, 20)], best: Some((31, 20)), hex: "867", cyclic: true },
    PaperRow { g: 28, per_ell: &[(29, 18), (30, 19), (31, 20), (32, 21), (33, 21)], best: Some((32, 21)), hex: "947", cyclic: false },
    PaperRow { g: 29, per_ell: &[(30, 19), (31, 20), (32, 21), (33, 22), (34, 22)], best: Some((33, 22)), hex: "947", cyclic: false },
    PaperRow { g: 30, per_ell: &[(31, 20), (32, 21), (33, 22), (34, 23), (35, 23)], best: Some((34, 23)), hex: "837", cyclic: false },
];
