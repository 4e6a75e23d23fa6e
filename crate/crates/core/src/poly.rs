//! Integer polynomials with exact root counting.
//!
//! Polynomials are stored little-endian (`coeffs[k]` multiplies `x^k`). All
//! root-location work runs over arbitrary-precision integers: gcds use the
//! primitive pseudo-remainder sequence, Sturm chains keep every element
//! primitive with only positive rescaling so sign patterns are preserved.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebraic::AlgebraicThreshold;

/// Dense integer polynomial, little-endian coefficients, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: vec![] }
    }

    pub fn constant(c: i64) -> Self {
        Self::new(vec![BigInt::from(c)])
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().map_or(false, |c| c.is_one())
    }

    pub fn derivative(&self) -> IntPoly {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for k in 0..len {
            let a = self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero);
            let b = other.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero);
            out.push(a + b);
        }
        IntPoly::new(out)
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    /// Content: gcd of coefficients, with the sign of the leading coefficient.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        if self.leading().is_negative() {
            -g
        } else {
            g
        }
    }

    /// Divides out the content, leaving a primitive polynomial with positive
    /// leading coefficient.
    pub fn primitive(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let g = self.content();
        IntPoly::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + bigint_to_f64(c);
        }
        acc
    }

    /// Exact division; `None` when `other` does not divide `self` over Q.
    /// A divisor that divides over Q with integer `self` yields an integer
    /// quotient up to content, so the quotient is returned primitive-scaled
    /// back to satisfy `self = q * other` exactly.
    pub fn div_exact(&self, other: &IntPoly) -> Option<IntPoly> {
        assert!(!other.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        if self.degree() < other.degree() {
            return None;
        }
        // Long division over rationals.
        let mut rem: Vec<BigRational> = self
            .coeffs
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let d = other.degree();
        let lc = BigRational::from_integer(other.leading());
        let mut q = vec![BigRational::zero(); self.degree() - d + 1];
        for k in (0..q.len()).rev() {
            let coef = &rem[k + d] / &lc;
            if !coef.is_zero() {
                for j in 0..=d {
                    let t = &coef * BigRational::from_integer(other.coeffs[j].clone());
                    rem[k + j] -= t;
                }
            }
            q[k] = coef;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        let mut out = Vec::with_capacity(q.len());
        for c in q {
            if !c.denom().is_one() {
                return None;
            }
            out.push(c.numer().clone());
        }
        Some(IntPoly::new(out))
    }

    /// Primitive polynomial gcd (primitive PRS), positive leading coefficient.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let mut a = self.primitive();
        let mut b = other.primitive();
        if a.is_zero() {
            return b;
        }
        if b.is_zero() {
            return a;
        }
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = pseudo_rem(&a, &b).primitive();
            a = b;
            b = r;
        }
        a.primitive()
    }

    /// Square-free part: `self / gcd(self, self')`, primitive.
    pub fn squarefree_part(&self) -> IntPoly {
        if self.degree() == 0 {
            return IntPoly::constant(1);
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == 0 {
            return self.primitive();
        }
        self.primitive()
            .div_exact(&g)
            .expect("gcd divides its argument")
    }
}

fn bigint_to_f64(c: &BigInt) -> f64 {
    use num_traits::ToPrimitive;
    c.to_f64().unwrap_or(f64::NAN)
}

/// Pseudo-remainder scaled by a positive constant, so that the remainder has
/// the same sign pattern as the true rational remainder of `a` by `b`.
fn pseudo_rem(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let da = a.degree();
    let db = b.degree();
    if da < db {
        return a.clone();
    }
    let lc_b = b.leading();
    let steps = (da - db + 1) as u32;
    // Scale by |lc_b|^steps: positive, so signs survive.
    let scale = lc_b.abs().pow(steps);
    let mut rem: Vec<BigInt> = a.coeffs.iter().map(|c| c * &scale).collect();
    for k in (0..=(da - db)).rev() {
        let coef = &rem[k + db] / &lc_b; // exact by construction of the scaling
        if coef.is_zero() {
            continue;
        }
        for j in 0..=db {
            let t = &coef * &b.coeffs[j];
            rem[k + j] -= t;
        }
    }
    rem.truncate(db);
    IntPoly::new(rem)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Sign {
    Neg,
    Zero,
    Pos,
}

fn sign_of_i32(v: i32) -> Sign {
    match v.cmp(&0) {
        std::cmp::Ordering::Less => Sign::Neg,
        std::cmp::Ordering::Equal => Sign::Zero,
        std::cmp::Ordering::Greater => Sign::Pos,
    }
}

fn variations(signs: &[Sign]) -> usize {
    let mut count = 0;
    let mut last: Option<Sign> = None;
    for &s in signs {
        if s == Sign::Zero {
            continue;
        }
        if let Some(prev) = last {
            if prev != s {
                count += 1;
            }
        }
        last = Some(s);
    }
    count
}

/// Exact root counting for a real-rooted integer polynomial.
///
/// The counter deflates roots at the query point first (dividing by the
/// point's minimal polynomial), then runs Sturm's theorem on each layer of
/// the square-free filtration, so counts carry multiplicities.
pub struct RootCounter {
    poly: IntPoly,
}

impl RootCounter {
    pub fn new(poly: IntPoly) -> Self {
        assert!(!poly.is_zero(), "root counting needs a nonzero polynomial");
        RootCounter { poly }
    }

    pub fn poly(&self) -> &IntPoly {
        &self.poly
    }

    /// Multiplicity of `t` as a root.
    pub fn multiplicity_at(&self, t: &AlgebraicThreshold) -> usize {
        let m = t.minimal_polynomial();
        let mut work = self.poly.clone();
        let mut k = 0;
        while let Some(q) = work.div_exact(&m) {
            work = q;
            k += 1;
            if work.is_zero() || work.degree() == 0 {
                break;
            }
        }
        k
    }

    /// Number of roots strictly below `t`, with multiplicity.
    pub fn count_below(&self, t: &AlgebraicThreshold) -> usize {
        let m = t.minimal_polynomial();
        let mut work = self.poly.primitive();
        let mut boundary = 0usize;
        loop {
            if work.degree() < m.degree() {
                break;
            }
            match work.div_exact(&m) {
                Some(q) => {
                    work = q;
                    boundary += 1;
                }
                None => break,
            }
        }
        // Deflating by a quadratic minimal polynomial removes the conjugate
        // root too; it sits strictly below t exactly when the surd part is
        // positive.
        let mut total = if t.conjugate_is_below() { boundary } else { 0 };
        // Square-free filtration: a root of multiplicity j is counted once in
        // each of the first j layers.
        while work.degree() > 0 {
            let q = work.squarefree_part();
            total += sturm_count_below(&q, t);
            let g = work.primitive().div_exact(&q).expect("squarefree part divides");
            work = g;
        }
        total
    }

    /// Number of roots `<= t`, with multiplicity.
    pub fn count_at_most(&self, t: &AlgebraicThreshold) -> usize {
        self.count_below(t) + self.multiplicity_at(t)
    }

    /// Number of roots strictly below the rational `t`.
    pub fn count_below_rational(&self, t: &BigRational) -> usize {
        self.count_below(&AlgebraicThreshold::from_rational(t.clone()))
    }
}

/// Sturm count of the distinct roots of square-free `q` in `(-inf, t)`;
/// requires `q(t) != 0` (callers deflate first).
fn sturm_count_below(q: &IntPoly, t: &AlgebraicThreshold) -> usize {
    if q.degree() == 0 {
        return 0;
    }
    let chain = sturm_chain(q);
    let at_minus_inf: Vec<Sign> = chain
        .iter()
        .map(|p| {
            let lc_sign = if p.leading().is_negative() { -1 } else { 1 };
            let deg_sign = if p.degree() % 2 == 0 { 1 } else { -1 };
            sign_of_i32(lc_sign * deg_sign)
        })
        .collect();
    let at_t: Vec<Sign> = chain.iter().map(|p| sign_of_i32(t.sign_of_poly(p))).collect();
    debug_assert!(at_t[0] != Sign::Zero, "query point must not be a root");
    variations(&at_minus_inf) - variations(&at_t)
}

/// Divides by the absolute content, preserving the leading sign. Chain
/// elements may only be rescaled by positive constants.
fn primitive_abs(p: &IntPoly) -> IntPoly {
    if p.is_zero() {
        return IntPoly::zero();
    }
    let g = p.content().abs();
    IntPoly::new(p.coeffs.iter().map(|c| c / &g).collect())
}

fn sturm_chain(q: &IntPoly) -> Vec<IntPoly> {
    let p0 = q.primitive();
    let p1 = p0.derivative();
    let mut chain = vec![p0, p1];
    loop {
        let m = chain.len();
        if chain[m - 1].is_zero() {
            chain.pop();
            break;
        }
        if chain[m - 1].degree() == 0 {
            break;
        }
        let r = pseudo_rem(&chain[m - 2], &chain[m - 1]);
        if r.is_zero() {
            break;
        }
        chain.push(primitive_abs(&r.neg()));
    }
    chain
}

#[cfg(test)]
mod tests {
    use super::*;

    fn thr(s: &str) -> AlgebraicThreshold {
        s.parse().unwrap()
    }

    #[test]
    fn primitive_and_gcd() {
        let p = IntPoly::from_i64(&[2, 4, 6]);
        assert_eq!(p.primitive(), IntPoly::from_i64(&[1, 2, 3]));
        // gcd((x-1)(x-2), (x-1)(x-3)) = x-1
        let a = IntPoly::from_i64(&[2, -3, 1]);
        let b = IntPoly::from_i64(&[3, -4, 1]);
        assert_eq!(a.gcd(&b), IntPoly::from_i64(&[-1, 1]));
    }

    #[test]
    fn div_exact_roundtrip() {
        let a = IntPoly::from_i64(&[-1, 0, 1]); // x^2-1
        let b = IntPoly::from_i64(&[1, 1]); // x+1
        assert_eq!(a.div_exact(&b), Some(IntPoly::from_i64(&[-1, 1])));
        assert_eq!(a.div_exact(&IntPoly::from_i64(&[2, 1])), None);
    }

    #[test]
    fn squarefree() {
        // (x-1)^2 (x+2) = x^3 - 3x + 2
        let p = IntPoly::from_i64(&[2, -3, 0, 1]);
        let sf = p.squarefree_part();
        // squarefree part = (x-1)(x+2) = x^2 + x - 2
        assert_eq!(sf, IntPoly::from_i64(&[-2, 1, 1]));
    }

    #[test]
    fn count_roots_x3_minus_2x() {
        // x^3 - 2x has roots -sqrt2, 0, sqrt2
        let p = IntPoly::from_i64(&[0, -2, 0, 1]);
        let rc = RootCounter::new(p);
        assert_eq!(rc.count_below(&thr("-2")), 0);
        assert_eq!(rc.count_below(&thr("0")), 1);
        assert_eq!(rc.count_below(&thr("2")), 3);
        assert_eq!(rc.count_below(&thr("-sqrt2")), 0);
        assert_eq!(rc.multiplicity_at(&thr("-sqrt2")), 1);
        assert_eq!(rc.count_at_most(&thr("-sqrt2")), 1);
    }

    #[test]
    fn count_roots_with_multiplicity() {
        // (x^2-2)^2: roots ±sqrt2 each twice
        let x2m2 = IntPoly::from_i64(&[-2, 0, 1]);
        let p = x2m2.mul(&x2m2);
        let rc = RootCounter::new(p);
        assert_eq!(rc.count_below(&thr("-sqrt2")), 0);
        assert_eq!(rc.count_at_most(&thr("-sqrt2")), 2);
        assert_eq!(rc.count_below(&thr("0")), 2);
        assert_eq!(rc.count_below(&thr("7/5")), 2); // 7/5 < sqrt2
        assert_eq!(rc.count_below(&thr("3/2")), 4); // sqrt2 < 3/2
        assert_eq!(rc.count_at_most(&thr("sqrt2")), 4);
        assert_eq!(rc.multiplicity_at(&thr("sqrt2")), 2);
    }

    #[test]
    fn count_at_quadratic_point() {
        // K_{1,1,2} char poly: x^4 - 5x^2 - 4x = x(x+1)(x^2-x-4);
        // smallest root (1-sqrt17)/2.
        let p = IntPoly::from_i64(&[0, -4, -5, 0, 1]);
        let rc = RootCounter::new(p);
        let t = thr("(1-sqrt17)/2");
        assert_eq!(rc.count_below(&t), 0);
        assert_eq!(rc.multiplicity_at(&t), 1);
        assert_eq!(rc.count_below(&thr("-1")), 1);
        assert_eq!(rc.count_at_most(&thr("-1")), 2);
    }

    #[test]
    fn monotone_counts() {
        let p = IntPoly::from_i64(&[0, -4, -5, 0, 1]);
        let rc = RootCounter::new(p);
        let pts = ["-3", "-2", "-3/2", "-sqrt2", "-1", "0", "1", "sqrt2", "3"];
        let counts: Vec<usize> = pts.iter().map(|s| rc.count_below(&thr(s))).collect();
        for w in counts.windows(2) {
            assert!(w[0] <= w[1]);
        }
    }
}
