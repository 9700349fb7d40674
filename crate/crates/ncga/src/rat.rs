//! Exact rational scalars.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// The coefficient field: arbitrary-precision rationals.
pub type Rat = BigRational;

/// Shorthand for an integer rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Shorthand for the fraction `n/d`.
pub fn ratio(n: i64, d: i64) -> Rat {
    assert!(d != 0, "zero denominator");
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn is_zero(q: &Rat) -> bool {
    q.is_zero()
}

pub fn is_one(q: &Rat) -> bool {
    q.is_one()
}

/// Parse a rational literal: an optionally signed integer or `num/den`.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rat::new(n, d))
            }
        }
        None => {
            let n: BigInt = s.parse().ok()?;
            Some(Rat::from_integer(n))
        }
    }
}

/// Render a rational for reports: `"3/2"`, `"-1"`, `"0"`.
pub fn format_rat(q: &Rat) -> String {
    q.to_string()
}

/// Reduce `q` modulo a prime, if its denominator is invertible.
pub fn rat_mod_p(q: &Rat, p: u64) -> Option<u64> {
    let pb = BigInt::from(p);
    let num = q.numer().mod_floor(&pb);
    let den = q.denom().mod_floor(&pb);
    let den_u = u64::try_from(&den).ok()?;
    if den_u % p == 0 {
        return None;
    }
    let num_u = u64::try_from(&num).ok()?;
    Some((num_u % p) * inv_mod_p(den_u % p, p) % p)
}

/// Modular inverse by Fermat for prime modulus.
pub fn inv_mod_p(a: u64, p: u64) -> u64 {
    pow_mod_p(a, p - 2, p)
}

pub fn pow_mod_p(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Signum as an exact rational: -1, 0 or 1.
pub fn signum(q: &Rat) -> i32 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

use num_integer::Integer;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rat("3/2"), Some(ratio(3, 2)));
        assert_eq!(parse_rat("-7"), Some(rat(-7)));
        assert_eq!(parse_rat("4/6"), Some(ratio(2, 3)));
        assert_eq!(parse_rat("1/0"), None);
        assert_eq!(format_rat(&ratio(-3, 2)), "-3/2");
        assert_eq!(format_rat(&rat(5)), "5");
    }

    #[test]
    fn modular_reduction() {
        // 1/6 mod 7 = 6 since 6*6 = 36 = 1 mod 7.
        assert_eq!(rat_mod_p(&ratio(1, 6), 7), Some(6));
        assert_eq!(rat_mod_p(&ratio(1, 7), 7), None);
        assert_eq!(rat_mod_p(&rat(-1), 5), Some(4));
    }
}
