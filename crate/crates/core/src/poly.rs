//! Dense univariate polynomials with arbitrary-precision integer coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub type BigRat = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("not divisible: remainder {remainder}")]
    NotDivisible { remainder: String },
    #[error("quotient has non-integer coefficients")]
    NonIntegralQuotient,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("empty interval: {a} >= {b}")]
    EmptyInterval { a: String, b: String },
    #[error("cannot parse coefficient {0:?}")]
    BadCoefficient(String),
}

/// `coeffs[i]` is the coefficient of `x^i`; no trailing zeros, so the zero
/// polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        IntPoly::new(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        IntPoly::new(vec![c.into()])
    }

    /// `x`.
    pub fn x() -> Self {
        IntPoly::from_i64s(&[0, 1])
    }

    /// `x - r`.
    pub fn linear_root(r: impl Into<BigInt>) -> Self {
        IntPoly::new(vec![-r.into(), BigInt::one()])
    }

    /// `q x - p`, the primitive linear factor vanishing at `p/q`.
    pub fn linear_rational_root(r: &BigRat) -> Self {
        IntPoly::new(vec![-r.numer().clone(), r.denom().clone()])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    /// gcd of the coefficients (non-negative; zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divide out the content and make the leading coefficient positive.
    pub fn primitive(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut c = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            c = -c;
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|x| x / &c).collect(),
        }
    }

    /// Divide out the positive content only (sign preserved).
    pub fn strip_content(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let c = self.content();
        if c.is_one() {
            return self.clone();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|x| x / &c).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// `p(-x)`.
    pub fn reflect(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// `p(x^2)`.
    pub fn compose_square(&self) -> IntPoly {
        let mut out = vec![BigInt::zero(); (2 * self.coeffs.len()).saturating_sub(1)];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[2 * i] = c.clone();
        }
        IntPoly::new(out)
    }

    /// If only even powers occur, the polynomial `q` with `p(x) = q(x^2)`.
    pub fn even_part_in_square(&self) -> Option<IntPoly> {
        if self.coeffs.iter().skip(1).step_by(2).any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntPoly::new(
            self.coeffs.iter().step_by(2).cloned().collect(),
        ))
    }

    pub fn pow(&self, mut e: u32) -> IntPoly {
        let mut base = self.clone();
        let mut acc = IntPoly::constant(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// `q^d p(r/q)` for `r = p/q` in lowest terms, `q > 0`, `d = deg`:
    /// an integer with the same sign as `p(r)`.
    pub fn eval_homogeneous(&self, r: &BigRat) -> BigInt {
        let (num, den) = (r.numer(), r.denom());
        if den.is_one() {
            return self.eval_int(num);
        }
        // Horner: acc_k = acc_{k-1} * num + c_k * den^(d-k) summed from the top.
        let mut acc = BigInt::zero();
        let mut den_pow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * num + c * &den_pow;
            den_pow *= den;
        }
        // acc = sum c_i num^i den^(d-i) with d = deg: the top coefficient got den^0.
        acc
    }

    pub fn eval_rat(&self, r: &BigRat) -> BigRat {
        self.coeffs.iter().rev().fold(BigRat::zero(), |acc, c| {
            acc * r + BigRat::from_integer(c.clone())
        })
    }

    /// Sign of `p(r)`: -1, 0 or +1.
    pub fn sign_at(&self, r: &BigRat) -> i8 {
        sign_of(&self.eval_homogeneous(r))
    }

    /// Quotient and remainder over the rationals.
    pub fn div_rem_rational(&self, d: &IntPoly) -> Result<(Vec<BigRat>, Vec<BigRat>), PolyError> {
        let dd = d.degree().ok_or(PolyError::DivisionByZero)?;
        let mut rem: Vec<BigRat> = self
            .coeffs
            .iter()
            .map(|c| BigRat::from_integer(c.clone()))
            .collect();
        let lead = BigRat::from_integer(d.coeffs[dd].clone());
        if rem.len() <= dd {
            return Ok((Vec::new(), rem));
        }
        let mut quot = vec![BigRat::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let q = &rem[i + dd] / &lead;
            if !q.is_zero() {
                for (j, c) in d.coeffs.iter().enumerate() {
                    rem[i + j] -= &q * BigRat::from_integer(c.clone());
                }
            }
            quot[i] = q;
        }
        rem.truncate(dd);
        while rem.last().is_some_and(Zero::is_zero) {
            rem.pop();
        }
        Ok((quot, rem))
    }

    /// `self / d`, requiring zero remainder and an integral quotient.
    pub fn exact_divide(&self, d: &IntPoly) -> Result<IntPoly, PolyError> {
        let (q, r) = self.div_rem_rational(d)?;
        if !r.is_empty() {
            let rem = r
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| format!("{c}*x^{i}"))
                .collect::<Vec<_>>()
                .join(" + ");
            return Err(PolyError::NotDivisible { remainder: rem });
        }
        if q.iter().any(|c| !c.is_integer()) {
            return Err(PolyError::NonIntegralQuotient);
        }
        Ok(IntPoly::new(
            q.into_iter().map(|c| c.to_integer()).collect(),
        ))
    }

    /// Pseudo-remainder with a positive multiplier: the remainder of
    /// `|lc(d)|^(deg f - deg d + 1) * f` on division by `d`. Being a positive
    /// multiple of the true remainder keeps Sturm sign patterns intact.
    pub fn pseudo_rem_positive(&self, d: &IntPoly) -> Result<IntPoly, PolyError> {
        let dd = d.degree().ok_or(PolyError::DivisionByZero)?;
        let Some(df) = self.degree() else {
            return Ok(IntPoly::zero());
        };
        if df < dd {
            return Ok(self.clone());
        }
        let lead = &d.coeffs[dd];
        let mut r = self.coeffs.clone();
        let steps = df - dd + 1;
        for i in (0..steps).rev() {
            let top = r[i + dd].clone();
            for c in r.iter_mut().take(i + dd + 1) {
                *c *= lead;
            }
            if !top.is_zero() {
                for (j, c) in d.coeffs.iter().enumerate() {
                    r[i + j] -= &top * c;
                }
            }
            r.truncate(i + dd);
        }
        // Untouched low coefficients (index < dd) still need the remaining
        // multipliers; the loop above multiplies the whole live prefix each
        // step, so every coefficient has received exactly `steps` factors.
        let mut out = IntPoly::new(r);
        if lead.is_negative() && steps % 2 == 1 {
            out = -out;
        }
        Ok(out)
    }

    /// Primitive gcd with positive leading coefficient. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let mut a = self.primitive();
        let mut b = other.primitive();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem_positive(&b).expect("b nonzero").primitive();
            a = b;
            b = r;
        }
        a.primitive()
    }

    /// Square-free decomposition `p = c * prod q_i^i` (Yun). Factors are
    /// primitive with positive leading coefficient and degree >= 1; the
    /// returned content `c` carries the sign.
    pub fn squarefree_decomposition(&self) -> Result<SquarefreeDecomposition, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let prim = self.primitive();
        let content = {
            let c = self.content();
            if self.leading().is_some_and(Signed::is_negative) {
                -c
            } else {
                c
            }
        };
        let mut factors = Vec::new();
        if prim.degree() == Some(0) {
            return Ok(SquarefreeDecomposition { content, factors });
        }
        let dp = prim.derivative();
        let a0 = prim.gcd(&dp);
        let mut b = prim.exact_divide(&a0)?;
        let mut c = dp.exact_divide(&a0)?;
        let mut d = &c - &b.derivative();
        let mut i = 1u32;
        loop {
            let a = b.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                factors.push((a.clone(), i));
            }
            b = b.exact_divide(&a)?;
            if b.degree().unwrap_or(0) == 0 {
                break;
            }
            c = d.exact_divide(&a)?;
            d = &c - &b.derivative();
            i += 1;
        }
        Ok(SquarefreeDecomposition { content, factors })
    }

    /// Largest `m` with `(x - r)^m | p`. Zero polynomial gives 0.
    pub fn multiplicity_at_integer(&self, r: &BigInt) -> usize {
        if self.is_zero() {
            return 0;
        }
        let mut p = self.coeffs.clone();
        let mut m = 0;
        loop {
            // synthetic division by (x - r)
            let mut q = vec![BigInt::zero(); p.len() - 1];
            let mut carry = BigInt::zero();
            for i in (0..p.len()).rev() {
                let v = &p[i] + &carry * r;
                if i == 0 {
                    carry = v;
                } else {
                    q[i - 1] = v.clone();
                    carry = v;
                }
            }
            if !carry.is_zero() || q.is_empty() {
                return m;
            }
            m += 1;
            p = q;
        }
    }

    /// Remove every factor `(x - r)`; returns the cofactor and multiplicity.
    pub fn strip_integer_root(&self, r: &BigInt) -> (IntPoly, usize) {
        let m = self.multiplicity_at_integer(r);
        if m == 0 {
            return (self.clone(), 0);
        }
        let q = self
            .exact_divide(&IntPoly::linear_root(r.clone()).pow(m as u32))
            .expect("root");
        (q, m)
    }

    /// Text form `c_d*x^d + ... + c_0` with explicit signs.
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    /// Decimal coefficient strings, low to high degree.
    pub fn to_json_coeffs(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }

    /// Parse comma-separated decimal coefficients, low to high degree.
    pub fn parse_coeffs(text: &str) -> Result<IntPoly, PolyError> {
        let coeffs = text
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.parse::<BigInt>()
                    .map_err(|_| PolyError::BadCoefficient(s.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(IntPoly::new(coeffs))
    }
}

pub(crate) fn sign_of(x: &BigInt) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquarefreeDecomposition {
    pub content: BigInt,
    /// `(q_i, i)` with increasing `i`.
    pub factors: Vec<(IntPoly, u32)>,
}

impl SquarefreeDecomposition {
    pub fn reassemble(&self) -> IntPoly {
        self.factors
            .iter()
            .fold(IntPoly::constant(self.content.clone()), |acc, (q, i)| {
                &acc * &q.pow(*i)
            })
    }

    /// Product of the distinct factors.
    pub fn squarefree_part(&self) -> IntPoly {
        self.factors
            .iter()
            .fold(IntPoly::constant(1), |acc, (q, _)| &acc * q)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                1 => write!(f, "{a}*x")?,
                _ => write!(f, "{a}*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

pub fn poly_add(p: &IntPoly, q: &IntPoly) -> IntPoly {
    p + q
}

pub fn poly_mul(p: &IntPoly, q: &IntPoly) -> IntPoly {
    p * q
}

pub fn poly_derivative(p: &IntPoly) -> IntPoly {
    p.derivative()
}

pub fn poly_gcd(p: &IntPoly, q: &IntPoly) -> IntPoly {
    p.gcd(q)
}

pub fn exact_divide(p: &IntPoly, q: &IntPoly) -> Result<IntPoly, PolyError> {
    p.exact_divide(q)
}
