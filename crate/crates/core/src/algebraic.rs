//! Exact comparison points of the form `(p + q*sqrt(d)) / r`.
//!
//! This covers every threshold the toolkit compares eigenvalues against:
//! rationals, `-sqrt(2)`, `-sqrt(3)`, `(1 - sqrt(17))/2` and the like. Signs
//! of polynomial values at such a point are decided exactly by expanding in
//! the ring `Q(sqrt(d))` and comparing squares, never through floating point.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::poly::IntPoly;

/// The number `(p + q*sqrt(d)) / r` with `r > 0` and `d` squarefree
/// (`d = 0` and `q = 0` for rationals).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraicThreshold {
    p: BigInt,
    q: BigInt,
    d: u64,
    r: BigInt,
}

fn is_squarefree(d: u64) -> bool {
    if d < 4 {
        return true;
    }
    let mut k = 2u64;
    while k * k <= d {
        if d % (k * k) == 0 {
            return false;
        }
        k += 1;
    }
    true
}

impl AlgebraicThreshold {
    pub fn new(p: i64, q: i64, d: u64, r: i64) -> Result<Self, Error> {
        Self::new_big(BigInt::from(p), BigInt::from(q), d, BigInt::from(r))
    }

    pub fn new_big(p: BigInt, q: BigInt, d: u64, r: BigInt) -> Result<Self, Error> {
        if r.is_zero() {
            return Err(Error::InvalidThreshold("denominator must be nonzero".into()));
        }
        if !is_squarefree(d) {
            return Err(Error::InvalidThreshold(format!("{d} is not squarefree")));
        }
        let (mut p, mut q, mut r) = (p, q, r);
        if r.is_negative() {
            p = -p;
            q = -q;
            r = -r;
        }
        let mut d = d;
        if q.is_zero() || d == 0 || d == 1 {
            // sqrt(0) = 0, sqrt(1) = 1 fold into the rational part.
            if d == 1 {
                p += &q;
            }
            q = BigInt::zero();
            d = 0;
        }
        let g = p.gcd(&q).gcd(&r);
        if !g.is_zero() && !g.is_one() {
            p /= &g;
            q /= &g;
            r /= &g;
        }
        Ok(AlgebraicThreshold { p, q, d, r })
    }

    pub fn from_rational(x: BigRational) -> Self {
        AlgebraicThreshold {
            p: x.numer().clone(),
            q: BigInt::zero(),
            d: 0,
            r: x.denom().clone(),
        }
    }

    pub fn from_integer(x: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(x)))
    }

    pub fn minus_two() -> Self {
        Self::from_integer(-2)
    }

    pub fn minus_one() -> Self {
        Self::from_integer(-1)
    }

    pub fn minus_sqrt2() -> Self {
        Self::new(0, -1, 2, 1).unwrap()
    }

    pub fn is_rational(&self) -> bool {
        self.q.is_zero()
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        if self.is_rational() {
            Some(BigRational::new(self.p.clone(), self.r.clone()))
        } else {
            None
        }
    }

    /// The conjugate `(p - q*sqrt(d)) / r` lies strictly below this value
    /// exactly when the surd coefficient is positive.
    pub fn conjugate_is_below(&self) -> bool {
        self.q.is_positive()
    }

    /// Minimal polynomial over Z, primitive with positive leading coefficient.
    /// Degree 1 for rationals, degree 2 otherwise.
    pub fn minimal_polynomial(&self) -> IntPoly {
        if self.is_rational() {
            IntPoly::new(vec![-self.p.clone(), self.r.clone()]).primitive()
        } else {
            // (r x - p)^2 = q^2 d  =>  r^2 x^2 - 2 p r x + p^2 - q^2 d
            let r2 = &self.r * &self.r;
            let c1 = BigInt::from(-2) * &self.p * &self.r;
            let c0 = &self.p * &self.p - &self.q * &self.q * BigInt::from(self.d);
            IntPoly::new(vec![c0, c1, r2]).primitive()
        }
    }

    /// Exact sign of `u + v*sqrt(d)` for rationals `u`, `v`.
    fn sign_of_pair(u: &BigRational, v: &BigRational, d: u64) -> i32 {
        let su = sign_rat(u);
        let sv = sign_rat(v);
        if sv == 0 {
            return su;
        }
        if su == 0 {
            return sv;
        }
        if su == sv {
            return su;
        }
        // Opposite signs: compare u^2 against v^2 d.
        let u2 = u * u;
        let v2d = v * v * BigRational::from_integer(BigInt::from(d));
        match u2.cmp(&v2d) {
            std::cmp::Ordering::Greater => su,
            std::cmp::Ordering::Less => sv,
            std::cmp::Ordering::Equal => 0,
        }
    }

    /// Exact sign of `poly` evaluated at this point.
    pub fn sign_of_poly(&self, poly: &IntPoly) -> i32 {
        // Horner in Q(sqrt(d)): track (u, v) with value u + v sqrt(d).
        let alpha_u = BigRational::new(self.p.clone(), self.r.clone());
        let alpha_v = BigRational::new(self.q.clone(), self.r.clone());
        let d = BigRational::from_integer(BigInt::from(self.d));
        let mut u = BigRational::zero();
        let mut v = BigRational::zero();
        for c in poly.coeffs().iter().rev() {
            let nu = &u * &alpha_u + &v * &alpha_v * &d + BigRational::from_integer(c.clone());
            let nv = &u * &alpha_v + &v * &alpha_u;
            u = nu;
            v = nv;
        }
        Self::sign_of_pair(&u, &v, self.d)
    }

    /// Exact sign of `self - x` for rational `x`.
    pub fn cmp_rational(&self, x: &BigRational) -> std::cmp::Ordering {
        // self - x = (p - x r + q sqrt d) / r
        let u = BigRational::new(self.p.clone(), self.r.clone()) - x;
        let v = BigRational::new(self.q.clone(), self.r.clone());
        match Self::sign_of_pair(&u, &v, self.d) {
            s if s < 0 => std::cmp::Ordering::Less,
            0 => std::cmp::Ordering::Equal,
            _ => std::cmp::Ordering::Greater,
        }
    }

    /// Exact comparison with another threshold over the same surd (or with a
    /// rational one). Mixed surds are not needed anywhere in the toolkit.
    pub fn cmp_same_field(&self, other: &Self) -> Option<std::cmp::Ordering> {
        if !self.is_rational() && !other.is_rational() && self.d != other.d {
            return None;
        }
        let d = if self.is_rational() { other.d } else { self.d };
        let u = BigRational::new(self.p.clone(), self.r.clone())
            - BigRational::new(other.p.clone(), other.r.clone());
        let v = BigRational::new(self.q.clone(), self.r.clone())
            - BigRational::new(other.q.clone(), other.r.clone());
        Some(match Self::sign_of_pair(&u, &v, d) {
            s if s < 0 => std::cmp::Ordering::Less,
            0 => std::cmp::Ordering::Equal,
            _ => std::cmp::Ordering::Greater,
        })
    }

    pub fn to_f64(&self) -> f64 {
        let p = self.p.to_f64().unwrap_or(f64::NAN);
        let q = self.q.to_f64().unwrap_or(f64::NAN);
        let r = self.r.to_f64().unwrap_or(f64::NAN);
        (p + q * (self.d as f64).sqrt()) / r
    }
}

fn sign_rat(x: &BigRational) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

impl fmt::Display for AlgebraicThreshold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            if self.r.is_one() {
                write!(f, "{}", self.p)
            } else {
                write!(f, "{}/{}", self.p, self.r)
            }
        } else {
            let core = if self.p.is_zero() {
                format!("{}sqrt{}", coeff_prefix(&self.q), self.d)
            } else {
                format!("({}{}sqrt{})", self.p, signed_coeff(&self.q), self.d)
            };
            if self.r.is_one() {
                write!(f, "{core}")
            } else {
                write!(f, "{core}/{}", self.r)
            }
        }
    }
}

fn coeff_prefix(q: &BigInt) -> String {
    if q.is_one() {
        String::new()
    } else if (-q).is_one() {
        "-".into()
    } else {
        format!("{q}*")
    }
}

fn signed_coeff(q: &BigInt) -> String {
    if q.is_one() {
        "+".into()
    } else if (-q).is_one() {
        "-".into()
    } else if q.is_positive() {
        format!("+{q}*")
    } else {
        format!("{q}*")
    }
}

/// Accepted forms: `-2`, `-3/2`, `-sqrt2`, `sqrt(3)/2`, `2*sqrt2`,
/// `(1-sqrt17)/2`, `1/2-sqrt17/2`. Whitespace is ignored.
impl FromStr for AlgebraicThreshold {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        parse_expr(&s)
    }
}

fn bad(s: &str) -> Error {
    Error::InvalidThreshold(format!("cannot parse '{s}'"))
}

/// expr := group '/' UINT | sum
/// group := '(' sum ')'
fn parse_expr(s: &str) -> Result<AlgebraicThreshold, Error> {
    if let Some(rest) = s.strip_prefix('(') {
        if let Some(close) = rest.rfind(')') {
            let inner = &rest[..close];
            let tail = &rest[close + 1..];
            let base = parse_sum(inner)?;
            if tail.is_empty() {
                return Ok(base);
            }
            let den = tail
                .strip_prefix('/')
                .and_then(|t| t.parse::<i64>().ok())
                .filter(|&v| v != 0)
                .ok_or_else(|| bad(s))?;
            return AlgebraicThreshold::new_big(
                base.p,
                base.q,
                base.d,
                base.r * BigInt::from(den),
            );
        }
        return Err(bad(s));
    }
    parse_sum(s)
}

/// sum := term (('+'|'-') term)*
fn parse_sum(s: &str) -> Result<AlgebraicThreshold, Error> {
    if s.is_empty() {
        return Err(bad(s));
    }
    let bytes = s.as_bytes();
    let mut splits = vec![0usize];
    for i in 1..bytes.len() {
        if (bytes[i] == b'+' || bytes[i] == b'-')
            && bytes[i - 1] != b'/'
            && bytes[i - 1] != b'*'
            && bytes[i - 1] != b'+'
            && bytes[i - 1] != b'-'
            && bytes[i - 1] != b'('
        {
            splits.push(i);
        }
    }
    splits.push(s.len());
    let mut rat = BigRational::zero();
    let mut surd_coeff = BigRational::zero();
    let mut surd_d: Option<u64> = None;
    for w in splits.windows(2) {
        let term = &s[w[0]..w[1]];
        let (coeff, d) = parse_term(term)?;
        match d {
            None => rat += coeff,
            Some(d0) => {
                if let Some(prev) = surd_d {
                    if prev != d0 {
                        return Err(Error::InvalidThreshold(
                            "mixed surds are not supported".into(),
                        ));
                    }
                }
                surd_d = Some(d0);
                surd_coeff += coeff;
            }
        }
    }
    // Combine p0/r0 + (q0/r1) sqrt d into (p, q, d, r).
    let d = surd_d.unwrap_or(0);
    let r = rat.denom().clone() * surd_coeff.denom().clone();
    let p = rat.numer() * surd_coeff.denom();
    let q = surd_coeff.numer() * rat.denom();
    AlgebraicThreshold::new_big(p, q, d, r)
}

/// term := RATIONAL | [RATIONAL '*'] 'sqrt' ['('] UINT [')'] ['/' UINT]
/// Returns (coefficient, Some(d)) for surd terms, (value, None) otherwise.
fn parse_term(s: &str) -> Result<(BigRational, Option<u64>), Error> {
    let (sign, body) = match s.strip_prefix('-') {
        Some(b) => (-1i64, b),
        None => (1, s.strip_prefix('+').unwrap_or(s)),
    };
    if let Some(pos) = body.find("sqrt") {
        let coeff_part = &body[..pos];
        let coeff = if coeff_part.is_empty() {
            BigRational::one()
        } else {
            parse_rational(coeff_part.strip_suffix('*').unwrap_or(coeff_part))?
        };
        let mut arg = &body[pos + 4..];
        let mut den = BigInt::one();
        if let Some(slash) = arg.find('/') {
            den = arg[slash + 1..].parse::<BigInt>().map_err(|_| bad(s))?;
            if den.is_zero() {
                return Err(bad(s));
            }
            arg = &arg[..slash];
        }
        let arg = arg
            .strip_prefix('(')
            .and_then(|a| a.strip_suffix(')'))
            .unwrap_or(arg);
        let d: u64 = arg.parse().map_err(|_| bad(s))?;
        let coeff = coeff * BigRational::from_integer(BigInt::from(sign))
            / BigRational::from_integer(den);
        Ok((coeff, Some(d)))
    } else {
        let v = parse_rational(body)? * BigRational::from_integer(BigInt::from(sign));
        Ok((v, None))
    }
}

fn parse_rational(s: &str) -> Result<BigRational, Error> {
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.parse().map_err(|_| bad(s))?;
        let d: BigInt = den.parse().map_err(|_| bad(s))?;
        if d.is_zero() {
            return Err(bad(s));
        }
        Ok(BigRational::new(n, d))
    } else {
        let n: BigInt = s.parse().map_err(|_| bad(s))?;
        Ok(BigRational::from_integer(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> AlgebraicThreshold {
        s.parse().unwrap()
    }

    #[test]
    fn parse_forms() {
        assert_eq!(t("-2"), AlgebraicThreshold::from_integer(-2));
        assert_eq!(t("-3/2"), AlgebraicThreshold::new(-3, 0, 0, 2).unwrap());
        assert_eq!(t("-sqrt2"), AlgebraicThreshold::new(0, -1, 2, 1).unwrap());
        assert_eq!(t("-sqrt(2)"), t("-sqrt2"));
        assert_eq!(t("(1-sqrt17)/2"), AlgebraicThreshold::new(1, -1, 17, 2).unwrap());
        assert_eq!(t("1/2-sqrt17/2"), t("(1-sqrt17)/2"));
        assert_eq!(t("2*sqrt2"), AlgebraicThreshold::new(0, 2, 2, 1).unwrap());
        assert!("x".parse::<AlgebraicThreshold>().is_err());
        assert!("sqrt12".parse::<AlgebraicThreshold>().is_err()); // not squarefree
        assert!("1/0".parse::<AlgebraicThreshold>().is_err());
    }

    #[test]
    fn normalization() {
        // sqrt(1) folds into the rational part; negative denominators flip.
        let a = AlgebraicThreshold::new(1, 2, 1, -3).unwrap();
        assert_eq!(a, AlgebraicThreshold::new(-3, 0, 0, 3).unwrap());
        assert_eq!(a, AlgebraicThreshold::from_integer(-1));
    }

    #[test]
    fn sign_of_poly_at_surd() {
        // p(x) = x^2 - 2 vanishes at sqrt2, negative at 1, positive at -2.
        let p = IntPoly::from_i64(&[-2, 0, 1]);
        assert_eq!(t("sqrt2").sign_of_poly(&p), 0);
        assert_eq!(t("-sqrt2").sign_of_poly(&p), 0);
        assert_eq!(t("1").sign_of_poly(&p), -1);
        assert_eq!(t("-2").sign_of_poly(&p), 1);
        assert_eq!(t("(1-sqrt17)/2").sign_of_poly(&IntPoly::from_i64(&[-4, -1, 1])), 0);
    }

    #[test]
    fn comparisons() {
        use std::cmp::Ordering::*;
        let half = BigRational::new(BigInt::from(-3), BigInt::from(2));
        assert_eq!(t("-sqrt2").cmp_rational(&half), Greater); // -1.414 > -1.5
        assert_eq!(t("-sqrt2").cmp_rational(&BigRational::from_integer(BigInt::from(-1))), Less);
        assert_eq!(t("-sqrt2").cmp_same_field(&t("-sqrt2")), Some(Equal));
        assert_eq!(t("-2").cmp_same_field(&t("-sqrt2")), Some(Less));
        assert_eq!(t("(1-sqrt17)/2").cmp_same_field(&t("-3/2")), Some(Less));
        assert_eq!(t("sqrt2").cmp_same_field(&t("sqrt3")), None);
    }

    #[test]
    fn display_roundtrip() {
        for s in ["-2", "-3/2", "-sqrt2", "(1-sqrt17)/2", "2*sqrt2"] {
            let a = t(s);
            let b: AlgebraicThreshold = a.to_string().parse().unwrap();
            assert_eq!(a, b, "roundtrip failed for {s}");
        }
    }

    #[test]
    fn minimal_polynomials() {
        assert_eq!(t("-2").minimal_polynomial(), IntPoly::from_i64(&[2, 1]));
        assert_eq!(t("-sqrt2").minimal_polynomial(), IntPoly::from_i64(&[-2, 0, 1]));
        assert_eq!(
            t("(1-sqrt17)/2").minimal_polynomial(),
            IntPoly::from_i64(&[-4, -1, 1])
        );
    }
}
