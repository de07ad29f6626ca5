//! Exact sign and comparison decisions in the quadratic field Q(√5).
//!
//! Every boundary test in this crate ultimately compares a rational quantity
//! against the golden ratio φ = (1+√5)/2 or against φ² = (3+√5)/2.  Both
//! comparisons reduce to deciding the sign of a number of the form p + q√5
//! with rational p, q, which is decidable without any floating point:
//! when p and q agree in sign the answer is immediate, and in the mixed-sign
//! case it follows from comparing p² with 5q².
//!
//! No other algebraic numbers are needed, so there is no general real
//! algebraic tower here — just this one field.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational, kept in canonical form (reduced, positive
/// denominator) by the underlying representation.
pub type Rational = BigRational;

/// Shorthand for an integer-valued [`Rational`].
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n/d` as a [`Rational`]. Panics on `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// A number p + q·√5 with rational coefficients.
///
/// Since √5 is irrational, the representation of zero is unique:
/// p + q√5 = 0 iff p = q = 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Q5Number {
    pub p: Rational,
    pub q: Rational,
}

impl Q5Number {
    pub fn new(p: Rational, q: Rational) -> Self {
        Q5Number { p, q }
    }

    /// φ = (1+√5)/2 as an element of Q(√5).
    pub fn phi() -> Self {
        Q5Number::new(ratio(1, 2), ratio(1, 2))
    }

    /// φ² = (3+√5)/2 as an element of Q(√5).
    pub fn phi_squared() -> Self {
        Q5Number::new(ratio(3, 2), ratio(1, 2))
    }

    /// Exact sign of the represented value.
    pub fn sign(&self) -> i8 {
        sign_q5(&self.p, &self.q)
    }
}

fn sign_of(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Exact sign of p + q√5.
///
/// If p and q share a sign (or one is zero) the sign is immediate.  In the
/// mixed-sign case the value has the sign of p exactly when |p| > |q|√5,
/// i.e. when p² > 5q²; the opposite inequality gives the sign of q.  Equality
/// p² = 5q² would make √5 rational and so only occurs at p = q = 0.
pub fn sign_q5(p: &Rational, q: &Rational) -> i8 {
    let sp = sign_of(p);
    let sq = sign_of(q);
    if sq == 0 {
        return sp;
    }
    if sp == 0 || sp == sq {
        return sq;
    }
    // Mixed signs: compare p² with 5q².
    let p2 = p * p;
    let q2_5 = q * q * rat(5);
    match p2.cmp(&q2_5) {
        Ordering::Greater => sp,
        Ordering::Less => sq,
        Ordering::Equal => 0, // unreachable for rational p, q not both zero
    }
}

/// Compare a rational r against φ = (1+√5)/2.
///
/// r − φ = ((2r − 1) − √5)/2, so the answer is the sign of the Q(√5) element
/// (2r − 1, −1).  `Equal` is unreachable for rational input (φ is irrational)
/// but kept so the result is an ordinary ordering.
pub fn cmp_phi(r: &Rational) -> Ordering {
    let p = rat(2) * r - Rational::one();
    match sign_q5(&p, &-Rational::one()) {
        1 => Ordering::Greater,
        -1 => Ordering::Less,
        _ => Ordering::Equal,
    }
}

/// Compare `lhs` against φ²·`rhs` for `rhs ≥ 0`, exactly.
///
/// lhs − φ²·rhs = ((2·lhs − 3·rhs) − √5·rhs)/2.  This decides the squared
/// form of the golden-ratio boundary tests: x_j² versus φ²·x_{j−1}x_{j+1}.
///
/// Panics if `rhs < 0`; products of region coordinates are nonnegative, so a
/// negative `rhs` is a caller bug.
pub fn cmp_phi_sq_scaled(lhs: &Rational, rhs: &Rational) -> Ordering {
    assert!(
        !rhs.is_negative(),
        "cmp_phi_sq_scaled requires rhs >= 0, got {rhs}"
    );
    let p = rat(2) * lhs - rat(3) * rhs;
    match sign_q5(&p, &-rhs) {
        1 => Ordering::Greater,
        -1 => Ordering::Less,
        _ => Ordering::Equal,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn sign_rational_cases() {
        assert_eq!(sign_q5(&rat(1), &rat(0)), 1);
        assert_eq!(sign_q5(&rat(-4), &rat(0)), -1);
        assert_eq!(sign_q5(&rat(0), &rat(0)), 0);
        assert_eq!(sign_q5(&rat(0), &rat(3)), 1);
        assert_eq!(sign_q5(&rat(0), &rat(-3)), -1);
    }

    #[test]
    fn sign_mixed_cases() {
        // √5 − 2 > 0 because 5 > 4
        assert_eq!(sign_q5(&rat(-2), &rat(1)), 1);
        // √5 − 3 < 0 because 5 < 9
        assert_eq!(sign_q5(&rat(-3), &rat(1)), -1);
        assert_eq!(sign_q5(&rat(2), &rat(-1)), -1);
        assert_eq!(sign_q5(&rat(3), &rat(-1)), 1);
        assert_eq!(sign_q5(&ratio(9, 4), &rat(-1)), 1);
    }

    #[test]
    fn phi_constants_bracket() {
        // φ itself is (1/2, 1/2); φ − φ = 0 is not representable rationally,
        // but the constants must sit strictly between 1 and 2, φ² between 2 and 3.
        let phi = Q5Number::phi();
        assert_eq!(sign_q5(&(&phi.p - rat(1)), &phi.q), 1);
        assert_eq!(sign_q5(&(&phi.p - rat(2)), &phi.q), -1);
        let phi2 = Q5Number::phi_squared();
        assert_eq!(sign_q5(&(&phi2.p - rat(2)), &phi2.q), 1);
        assert_eq!(sign_q5(&(&phi2.p - rat(3)), &phi2.q), -1);
        // φ² = φ + 1
        assert_eq!(&phi.p + rat(1), phi2.p);
        assert_eq!(phi.q, phi2.q);
    }

    #[test]
    fn cmp_phi_cases() {
        assert_eq!(cmp_phi(&rat(2)), Ordering::Greater);
        assert_eq!(cmp_phi(&rat(1)), Ordering::Less);
        assert_eq!(cmp_phi(&ratio(8, 5)), Ordering::Less);
        // Fibonacci quotients straddle φ
        assert_eq!(cmp_phi(&ratio(13, 8)), Ordering::Greater);
        assert_eq!(cmp_phi(&ratio(21, 13)), Ordering::Less);
        assert_eq!(cmp_phi(&ratio(34, 21)), Ordering::Greater);
        // tight decimal brackets of φ = 1.6180339887...
        assert_eq!(cmp_phi(&ratio(1_618_034, 1_000_000)), Ordering::Greater);
        assert_eq!(cmp_phi(&ratio(1_618_033, 1_000_000)), Ordering::Less);
    }

    #[test]
    fn cmp_phi_sq_scaled_cases() {
        // boundary test for the point (15, 50): 150 − 25√5 > 0 since 22500 > 3125
        assert_eq!(cmp_phi_sq_scaled(&rat(225), &rat(50)), Ordering::Greater);
        // boundary test for (7, 21, 35): 35/2 − (21/2)√5 < 0 since 1225 < 2205
        assert_eq!(cmp_phi_sq_scaled(&rat(49), &rat(21)), Ordering::Less);
        assert_eq!(cmp_phi_sq_scaled(&rat(0), &rat(0)), Ordering::Equal);
    }

    #[test]
    #[should_panic(expected = "rhs >= 0")]
    fn cmp_phi_sq_scaled_rejects_negative_rhs() {
        let _ = cmp_phi_sq_scaled(&rat(1), &rat(-1));
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-1_000_000i64..1_000_000, 1i64..10_000)
            .prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
    }

    proptest! {
        #[test]
        fn sign_is_odd_under_negation(p in arb_rational(), q in arb_rational()) {
            prop_assert_eq!(sign_q5(&p, &q), -sign_q5(&(-&p), &(-&q)));
        }

        #[test]
        fn cmp_phi_is_monotone(a in arb_rational(), b in arb_rational()) {
            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
            if cmp_phi(&lo) == Ordering::Greater {
                prop_assert_eq!(cmp_phi(&hi), Ordering::Greater);
            }
        }

        #[test]
        fn cmp_phi_agrees_with_squared_form(r in arb_rational()) {
            // valid only for positive r: squaring preserves order on positives
            prop_assume!(r.is_positive());
            let r2 = &r * &r;
            prop_assert_eq!(
                cmp_phi(&r) == Ordering::Greater,
                cmp_phi_sq_scaled(&r2, &Rational::one()) == Ordering::Greater
            );
        }

        #[test]
        fn rationals_stay_canonical(p in arb_rational(), q in arb_rational()) {
            use num_integer::Integer;
            let v = &p * &q + &p - &q;
            prop_assert!(v.denom().is_positive());
            prop_assert!(v.numer().gcd(v.denom()).is_one() || v.numer().is_zero());
        }
    }
}
