//! Exact arithmetic in the cyclotomic field Q(z_N).
//!
//! Elements are stored in the power basis 1, z, ..., z^(d-1) with d = deg Phi_N,
//! so equality is coefficientwise. N = 1 and N = 2 both give Q.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct CyclotomicOrder(u32);

impl CyclotomicOrder {
    pub const RATIONAL: Self = Self(1);

    pub fn new(n: u32) -> Result<Self> {
        if n == 0 {
            Err(Error::InvalidOrder(n))
        } else {
            Ok(Self(n))
        }
    }

    pub fn get(self) -> u32 {
        self.0
    }

    /// Degree of Q(z_N) over Q.
    pub fn degree(self) -> usize {
        field(self.0).degree
    }
}

impl TryFrom<u32> for CyclotomicOrder {
    type Error = Error;
    fn try_from(n: u32) -> Result<Self> {
        Self::new(n)
    }
}

impl From<CyclotomicOrder> for u32 {
    fn from(o: CyclotomicOrder) -> u32 {
        o.0
    }
}

impl fmt::Display for CyclotomicOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

struct FieldData {
    degree: usize,
    /// `powers[k]` is x^k reduced modulo Phi_N, for k < max(N, 2d - 1).
    powers: Vec<Vec<BigInt>>,
    modulus: Vec<BigInt>,
}

fn field(n: u32) -> Arc<FieldData> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<FieldData>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(f) = cache.read().expect("field cache poisoned").get(&n) {
        return f.clone();
    }
    let built = Arc::new(build_field(n));
    cache
        .write()
        .expect("field cache poisoned")
        .entry(n)
        .or_insert(built)
        .clone()
}

fn build_field(n: u32) -> FieldData {
    let modulus = cyclotomic_polynomial(n);
    let degree = modulus.len() - 1;
    let count = (n as usize).max(2 * degree);
    let mut powers = Vec::with_capacity(count);
    let mut cur = vec![BigInt::zero(); degree];
    cur[0] = BigInt::one();
    for _ in 0..count {
        powers.push(cur.clone());
        // multiply by x, then fold the overflowing x^d back using the monic modulus
        let top = cur[degree - 1].clone();
        for i in (1..degree).rev() {
            cur[i] = cur[i - 1].clone();
        }
        cur[0] = BigInt::zero();
        if !top.is_zero() {
            for (c, m) in cur.iter_mut().zip(&modulus) {
                *c -= &top * m;
            }
        }
    }
    FieldData {
        degree,
        powers,
        modulus,
    }
}

/// Integer coefficients of Phi_n, lowest degree first.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    assert!(n > 0, "cyclotomic order must be positive");
    // x^n - 1 divided by Phi_d for every proper divisor d
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            num = exact_div_monic(&num, &cyclotomic_polynomial(d));
        }
    }
    num
}

fn exact_div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = rem.len() - 1 - dd;
    let mut quot = vec![BigInt::zero(); qd + 1];
    for i in (0..=qd).rev() {
        let c = rem[i + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[i + j] -= &c * dj;
        }
        quot[i] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

/// An element of Q(z_N).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    order: CyclotomicOrder,
    coeffs: Vec<BigRational>,
}

impl Scalar {
    pub fn zero(order: CyclotomicOrder) -> Self {
        Self {
            order,
            coeffs: vec![BigRational::zero(); order.degree()],
        }
    }

    pub fn one(order: CyclotomicOrder) -> Self {
        Self::from_int(order, 1)
    }

    pub fn from_int(order: CyclotomicOrder, v: i64) -> Self {
        Self::from_rational(order, BigRational::from_integer(BigInt::from(v)))
    }

    pub fn from_ratio(order: CyclotomicOrder, num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::from_rational(
            order,
            BigRational::new(BigInt::from(num), BigInt::from(den)),
        ))
    }

    pub fn from_rational(order: CyclotomicOrder, q: BigRational) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = q;
        s
    }

    /// Builds an element from power-basis coefficients, reducing higher powers.
    pub fn from_coefficients(order: CyclotomicOrder, coeffs: &[BigRational]) -> Self {
        let f = field(order.0);
        let mut out = vec![BigRational::zero(); f.degree];
        for (k, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                accumulate_power(&f, order.0, &mut out, k, c);
            }
        }
        Self { order, coeffs: out }
    }

    /// z_N^k, for any integer k.
    pub fn zeta_pow(order: CyclotomicOrder, k: i64) -> Self {
        Self::one(order).mul_zeta(k)
    }

    pub fn order(&self) -> CyclotomicOrder {
        self.order
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, if the element lies in Q.
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    /// The exponent k in [0, N) with self = z_N^k, if any.
    pub fn root_exponent(&self) -> Option<u32> {
        (0..self.order.0).find(|&k| Self::zeta_pow(self.order, k as i64) == *self)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.order == other.order {
            Ok(())
        } else {
            Err(Error::OrderMismatch(self.order.0, other.order.0))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let d = self.coeffs.len();
        if d == 1 {
            return Ok(Self {
                order: self.order,
                coeffs: vec![&self.coeffs[0] * &other.coeffs[0]],
            });
        }
        let mut raw = vec![BigRational::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    raw[i + j] += a * b;
                }
            }
        }
        Ok(Self::from_coefficients(self.order, &raw))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        self.checked_mul(&other.inverse()?)
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against Phi_N.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.coeffs.len() == 1 {
            return Ok(Self::from_rational(self.order, self.coeffs[0].recip()));
        }
        let f = field(self.order.0);
        let modulus: Vec<BigRational> = f
            .modulus
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        // invariant: s_i * a == r_i (mod Phi)
        let (mut r0, mut r1) = (modulus, trim(self.coeffs.clone()));
        let (mut s0, mut s1) = (vec![], vec![BigRational::one()]);
        while r1.len() > 1 {
            let (q, r) = poly_divrem(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        let c = r1[0].recip();
        let inv: Vec<BigRational> = s1.iter().map(|x| x * &c).collect();
        Ok(Self::from_coefficients(self.order, &inv))
    }

    /// self * z_N^k.
    pub fn mul_zeta(&self, k: i64) -> Self {
        let n = self.order.0 as i64;
        let k = k.rem_euclid(n) as usize;
        if k == 0 {
            return self.clone();
        }
        if self.coeffs.len() == 1 {
            // Q(z_2) = Q with z = -1
            return if n == 2 { -self } else { self.clone() };
        }
        let f = field(self.order.0);
        let mut out = vec![BigRational::zero(); f.degree];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                accumulate_power(&f, self.order.0, &mut out, (i + k) % n as usize, c);
            }
        }
        Self {
            order: self.order,
            coeffs: out,
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.order);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Parses the textual form produced by `Display`, e.g. `-1/2*z^3 + 1`.
    ///
    /// Terms are products of rationals, `z` and `z^k` joined by `+`/`-`.
    pub fn parse(order: CyclotomicOrder, input: &str) -> Result<Self> {
        let fail = |reason: &str| Error::ParseScalar {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        let text: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() {
            return Err(fail("empty input"));
        }
        let mut total = Self::zero(order);
        let mut rest = text.as_str();
        while !rest.is_empty() {
            let (negative, body) = match rest.as_bytes()[0] {
                b'-' => (true, &rest[1..]),
                b'+' => (false, &rest[1..]),
                _ => (false, rest),
            };
            let end = body
                .char_indices()
                .find(|&(i, c)| (c == '+' || c == '-') && i > 0 && !body[..i].ends_with('^'))
                .map_or(body.len(), |(i, _)| i);
            let term = &body[..end];
            if term.is_empty() {
                return Err(fail("dangling sign"));
            }
            let mut value = Self::one(order);
            for factor in term.split('*') {
                value = &value * &parse_factor(order, factor).map_err(|r| fail(&r))?;
            }
            if negative {
                total -= &value;
            } else {
                total += &value;
            }
            rest = &body[end..];
        }
        Ok(total)
    }
}

fn parse_factor(order: CyclotomicOrder, factor: &str) -> std::result::Result<Scalar, String> {
    if factor.is_empty() {
        return Err("empty factor".into());
    }
    if let Some(exp) = factor.strip_prefix('z') {
        let k = match exp.strip_prefix('^') {
            Some(e) => e.parse::<i64>().map_err(|_| format!("bad exponent {e:?}"))?,
            None if exp.is_empty() => 1,
            None => return Err(format!("unexpected {exp:?} after z")),
        };
        return Ok(Scalar::zeta_pow(order, k));
    }
    let q = match factor.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.parse().map_err(|_| format!("bad numerator {n:?}"))?;
            let d: BigInt = d.parse().map_err(|_| format!("bad denominator {d:?}"))?;
            if d.is_zero() {
                return Err("zero denominator".into());
            }
            BigRational::new(n, d)
        }
        None => BigRational::from_integer(
            factor
                .parse::<BigInt>()
                .map_err(|_| format!("bad number {factor:?}"))?,
        ),
    };
    Ok(Scalar::from_rational(order, q))
}

fn accumulate_power(f: &FieldData, n: u32, out: &mut [BigRational], k: usize, c: &BigRational) {
    let idx = if k < f.powers.len() { k } else { k % n as usize };
    for (o, p) in out.iter_mut().zip(&f.powers[idx]) {
        if !p.is_zero() {
            *o += c * p;
        }
    }
}

fn trim(mut p: Vec<BigRational>) -> Vec<BigRational> {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    if p.is_empty() {
        p.push(BigRational::zero());
    }
    p
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
            let y = b.get(i).cloned().unwrap_or_else(BigRational::zero);
            x - y
        })
        .collect();
    trim(out)
}

fn poly_divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    if rem.len() <= db {
        return (vec![BigRational::zero()], trim(rem));
    }
    let lead = b[db].recip();
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    for i in (0..quot.len()).rev() {
        let c = &rem[i + db] * &lead;
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            rem[i + j] -= &c * bj;
        }
        quot[i] = c;
    }
    rem.truncate(db.max(1));
    (trim(quot), trim(rem))
}

fn fmt_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let body = match (k, mag.is_one()) {
                (0, _) => fmt_rational(&mag),
                (1, true) => "z".to_string(),
                (1, false) => format!("{}*z", fmt_rational(&mag)),
                (_, true) => format!("z^{k}"),
                (_, false) => format!("{}*z^{k}", fmt_rational(&mag)),
            };
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-{body}")?,
                (true, false) => write!(f, "{body}")?,
                (false, true) => write!(f, " - {body}")?,
                (false, false) => write!(f, " + {body}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} (in Q(z_{}))", self.order)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$checked(rhs).expect("scalar order mismatch")
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        assert_eq!(self.order, rhs.order, "scalar order mismatch");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        assert_eq!(self.order, rhs.order, "scalar order mismatch");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ord(n: u32) -> CyclotomicOrder {
        CyclotomicOrder::new(n).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn cyclotomic_polynomials_match_known_values() {
        assert_eq!(cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), ints(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(3), ints(&[1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(8), ints(&[1, 0, 0, 0, 1]));
        assert_eq!(cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn zeta_powers_cycle() {
        for n in [1, 2, 3, 4, 5, 6, 12] {
            let o = ord(n);
            assert!(Scalar::zeta_pow(o, n as i64).is_one());
            assert_eq!(Scalar::zeta_pow(o, -1), Scalar::zeta_pow(o, n as i64 - 1));
        }
    }

    #[test]
    fn minus_one_in_q_zeta_two() {
        let o = ord(2);
        assert_eq!(Scalar::zeta_pow(o, 1), Scalar::from_int(o, -1));
    }

    #[test]
    fn cube_root_identity() {
        // 1 + z + z^2 = 0 in Q(z_3)
        let o = ord(3);
        let s = Scalar::one(o) + Scalar::zeta_pow(o, 1) + Scalar::zeta_pow(o, 2);
        assert!(s.is_zero());
    }

    #[test]
    fn inverse_of_one_plus_z_in_q_zeta_three() {
        // (1 + z)(-z) = -z - z^2 = 1
        let o = ord(3);
        let a = Scalar::parse(o, "1 + z").unwrap();
        assert_eq!(a.inverse().unwrap(), Scalar::parse(o, "-z").unwrap());
    }

    #[test]
    fn zero_has_no_inverse() {
        assert!(matches!(
            Scalar::zero(ord(5)).inverse(),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn mixed_orders_are_rejected() {
        let a = Scalar::one(ord(3));
        let b = Scalar::one(ord(4));
        assert!(matches!(a.checked_add(&b), Err(Error::OrderMismatch(3, 4))));
    }

    #[test]
    fn render_format() {
        let o = ord(8);
        let s = Scalar::parse(o, "-1/2*z^3 + 1").unwrap();
        assert_eq!(s.to_string(), "-1/2*z^3 + 1");
        assert_eq!(Scalar::zero(o).to_string(), "0");
        assert_eq!(Scalar::parse(o, "z - 3/4").unwrap().to_string(), "z - 3/4");
    }

    #[test]
    fn parse_reduces_high_powers() {
        let o = ord(4);
        assert_eq!(Scalar::parse(o, "z^2").unwrap(), Scalar::from_int(o, -1));
        assert_eq!(Scalar::parse(o, "2*z*z^5").unwrap(), Scalar::from_int(o, -2));
    }

    #[test]
    fn parse_rejects_garbage() {
        let o = ord(3);
        for bad in ["", "1/0", "x", "1 +", "z^a", "3**z"] {
            assert!(Scalar::parse(o, bad).is_err(), "{bad:?} should fail");
        }
    }
}
