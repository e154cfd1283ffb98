//! Binary polynomials stored as a packed coefficient word.
//!
//! Bit `i` of the word is the coefficient of `x^i`. The hex text form reads
//! the integer the usual way, so the most significant hex digit carries the
//! highest-degree coefficients: `"B"` is `x^3 + x + 1`.

use std::fmt;
use std::str::FromStr;

use crate::error::{arg_err, Error, Result};

/// Largest supported degree.
pub const MAX_DEGREE: usize = 127;

/// A nonzero polynomial over GF(2) of degree at most [`MAX_DEGREE`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf2Poly {
    bits: u128,
}

impl Gf2Poly {
    /// Builds a polynomial from its coefficient word. Zero has no degree and
    /// is rejected.
    pub fn from_bits(bits: u128) -> Result<Self> {
        if bits == 0 {
            return arg_err("the zero polynomial is not supported");
        }
        Ok(Gf2Poly { bits })
    }

    /// Builds a polynomial from the listed exponents.
    pub fn from_exponents(exps: &[usize]) -> Result<Self> {
        let mut bits = 0u128;
        for &e in exps {
            if e > MAX_DEGREE {
                return arg_err(format!("exponent {e} exceeds {MAX_DEGREE}"));
            }
            bits ^= 1 << e;
        }
        Self::from_bits(bits)
    }

    /// Builds a polynomial from `(g_0, g_1, ..., g_d)`.
    pub fn from_coeffs(coeffs: &[u8]) -> Result<Self> {
        if coeffs.len() > MAX_DEGREE + 1 {
            return arg_err("too many coefficients");
        }
        let mut bits = 0u128;
        for (i, &c) in coeffs.iter().enumerate() {
            match c {
                0 => {}
                1 => bits |= 1 << i,
                _ => return arg_err(format!("coefficient {c} is not a bit")),
            }
        }
        Self::from_bits(bits)
    }

    pub fn bits(&self) -> u128 {
        self.bits
    }

    pub fn degree(&self) -> usize {
        127 - self.bits.leading_zeros() as usize
    }

    pub fn coeff(&self, i: usize) -> bool {
        i <= MAX_DEGREE && (self.bits >> i) & 1 == 1
    }

    /// Coefficient vector `(g_0, ..., g_deg)`.
    pub fn coeffs(&self) -> Vec<u8> {
        (0..=self.degree()).map(|i| self.coeff(i) as u8).collect()
    }

    /// Both end coefficients set, as required of a generator polynomial.
    pub fn is_generator_shaped(&self) -> bool {
        self.coeff(0) && self.degree() >= 1
    }

    /// Reverses the coefficient vector of length `width`, mapping
    /// `(g_0, ..., g_{w-1})` to `(g_{w-1}, ..., g_0)`.
    pub fn reverse(&self, width: usize) -> Result<Self> {
        if width < self.degree() + 1 || width > MAX_DEGREE + 1 {
            return arg_err(format!(
                "reversal width {width} does not fit degree {}",
                self.degree()
            ));
        }
        Self::from_bits(reverse_bits(self.bits, width))
    }

    /// Whether this polynomial divides `x^n + 1`.
    pub fn divides_x_n_plus_1(&self, n: usize) -> Result<bool> {
        let d = self.degree();
        if d < 1 || d >= n {
            return arg_err(format!("need 1 <= degree ({d}) < n ({n})"));
        }
        // x^n mod p by repeated multiplication by x, reduced at every step.
        let top = 1u128 << d;
        let low = self.bits ^ top;
        let mut r = 1u128;
        for _ in 0..n {
            r <<= 1;
            if r & top != 0 {
                r ^= top | low;
            }
        }
        Ok(r == 1)
    }

    /// Parses the hex form; an optional `0x` prefix is accepted.
    pub fn parse_hex(s: &str) -> Result<Self> {
        let err = |reason| Error::Parse {
            input: s.to_string(),
            reason,
        };
        let digits = s
            .strip_prefix("0x")
            .or_else(|| s.strip_prefix("0X"))
            .unwrap_or(s);
        if digits.is_empty() {
            return Err(err("empty string"));
        }
        if !digits.chars().all(|c| c.is_ascii_hexdigit()) {
            return Err(err("non-hex character"));
        }
        let bits = u128::from_str_radix(digits, 16).map_err(|_| err("more than 128 bits"))?;
        if bits == 0 {
            return Err(err("zero polynomial"));
        }
        Ok(Gf2Poly { bits })
    }

    /// Uppercase hex without prefix or leading zeros.
    pub fn to_hex(&self) -> String {
        format!("{:X}", self.bits)
    }
}

/// Reverses the low `width` bits of `v`.
pub(crate) fn reverse_bits(v: u128, width: usize) -> u128 {
    debug_assert!((1..=128).contains(&width));
    v.reverse_bits() >> (128 - width)
}

impl FromStr for Gf2Poly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse_hex(s)
    }
}

impl fmt::Display for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

impl fmt::Debug for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for i in (0..=self.degree()).rev().filter(|&i| self.coeff(i)) {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => f.write_str("1")?,
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(exps: &[usize]) -> Gf2Poly {
        Gf2Poly::from_exponents(exps).unwrap()
    }

    /// Remainder of `x^n + 1` by schoolbook long division over a bit vector.
    fn long_division_remainder(p: &Gf2Poly, n: usize) -> Vec<u8> {
        let mut dividend = vec![0u8; n + 1];
        dividend[0] = 1;
        dividend[n] = 1;
        let d = p.degree();
        let divisor = p.coeffs();
        for top in (d..=n).rev() {
            if dividend[top] == 1 {
                for (i, &c) in divisor.iter().enumerate() {
                    dividend[top - d + i] ^= c;
                }
            }
        }
        dividend.truncate(d);
        dividend
    }

    #[test]
    fn parse_table_entry() {
        let p = Gf2Poly::parse_hex("867").unwrap();
        assert_eq!(p.degree(), 11);
        assert_eq!(p.bits(), 0b1000_0110_0111);
        assert_eq!(p, poly(&[11, 6, 5, 2, 1, 0]));
    }

    #[test]
    fn parse_trivial() {
        let one = Gf2Poly::parse_hex("1").unwrap();
        assert_eq!(one.degree(), 0);
        assert_eq!(Gf2Poly::parse_hex("B").unwrap(), poly(&[3, 1, 0]));
        assert_eq!(Gf2Poly::parse_hex("0xb").unwrap(), poly(&[3, 1, 0]));
        assert_eq!(Gf2Poly::parse_hex("00B").unwrap().to_hex(), "B");
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(Gf2Poly::parse_hex(""), Err(Error::Parse { .. })));
        assert!(matches!(Gf2Poly::parse_hex("0x"), Err(Error::Parse { .. })));
        assert!(matches!(
            Gf2Poly::parse_hex("204I"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(Gf2Poly::parse_hex("0"), Err(Error::Parse { .. })));
        assert!(Gf2Poly::parse_hex(&"F".repeat(33)).is_err());
    }

    #[test]
    fn format_hex() {
        assert_eq!(poly(&[11, 6, 5, 2, 1, 0]).to_hex(), "867");
        assert_eq!(poly(&[0]).to_hex(), "1");
        assert_eq!(format!("{:?}", poly(&[3, 1, 0])), "x^3 + x + 1");
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(
            poly(&[9, 8, 6, 0]).reverse(10).unwrap(),
            poly(&[9, 3, 1, 0])
        );
        assert_eq!(poly(&[2, 1, 0]).reverse(3).unwrap(), poly(&[2, 1, 0]));
        let g = Gf2Poly::from_coeffs(&[1, 0, 0, 1, 0, 0, 0, 0, 1]).unwrap();
        assert_eq!(g.reverse(9).unwrap(), poly(&[0, 5, 8]));
        assert!(g.reverse(8).is_err());
    }

    #[test]
    fn divisibility_examples() {
        assert!(poly(&[1, 0]).divides_x_n_plus_1(2).unwrap());
        let p867 = Gf2Poly::parse_hex("867").unwrap();
        let p4ed = Gf2Poly::parse_hex("4ED").unwrap();
        assert!(p867.divides_x_n_plus_1(31).unwrap());
        assert!(!p4ed.divides_x_n_plus_1(23).unwrap());
        assert!(long_division_remainder(&p867, 31).iter().all(|&c| c == 0));
        assert!(long_division_remainder(&p4ed, 23).contains(&1));
        assert!(p867.divides_x_n_plus_1(11).is_err());
        assert!(poly(&[0]).divides_x_n_plus_1(5).is_err());
    }

    proptest! {
        #[test]
        fn hex_round_trip(bits in 1u128..(1 << 21)) {
            let p = Gf2Poly::from_bits(bits).unwrap();
            prop_assert_eq!(Gf2Poly::parse_hex(&p.to_hex()).unwrap(), p);
        }

        #[test]
        fn reverse_is_involution(bits in 0u128..(1 << 30), extra in 0usize..4) {
            let p = Gf2Poly::from_bits(bits | 1).unwrap();
            let w = p.degree() + 1 + extra;
            let r = p.reverse(w).unwrap();
            prop_assert_eq!(r.reverse(w).unwrap(), p);
        }

        #[test]
        fn divisibility_matches_long_division(bits in 0u128..(1 << 16), n in 17usize..80) {
            let p = Gf2Poly::from_bits(bits | 1 | (1 << 16)).unwrap();
            let expect = long_division_remainder(&p, n).iter().all(|&c| c == 0);
            prop_assert_eq!(p.divides_x_n_plus_1(n).unwrap(), expect);
            let r = p.reverse(p.degree() + 1).unwrap();
            prop_assert_eq!(r.divides_x_n_plus_1(n).unwrap(), expect);
        }
    }
}
