//! Sturm chains over the integers and exact real-root counting.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::poly::{sign_of, BigRat, IntPoly, PolyError};

/// An endpoint of a (possibly unbounded) interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bound {
    NegInf,
    At(BigRat),
    PosInf,
}

impl From<BigRat> for Bound {
    fn from(r: BigRat) -> Self {
        Bound::At(r)
    }
}

impl From<i64> for Bound {
    fn from(v: i64) -> Self {
        Bound::At(BigRat::from_integer(v.into()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SturmChain {
    pub polys: Vec<IntPoly>,
}

impl SturmChain {
    /// Chain of a nonzero polynomial; meaningful counts need squarefree input.
    pub fn new(p: &IntPoly) -> Result<Self, PolyError> {
        if p.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let mut polys = vec![p.strip_content()];
        let d = p.derivative().strip_content();
        if d.is_zero() {
            return Ok(SturmChain { polys });
        }
        polys.push(d);
        loop {
            let k = polys.len();
            let r = polys[k - 2].pseudo_rem_positive(&polys[k - 1])?;
            if r.is_zero() {
                break;
            }
            polys.push((-r).strip_content());
        }
        Ok(SturmChain { polys })
    }

    fn sign_at(p: &IntPoly, x: &Bound) -> i8 {
        match x {
            Bound::At(r) => p.sign_at(r),
            Bound::PosInf => p.leading().map_or(0, sign_of),
            Bound::NegInf => {
                let s = p.leading().map_or(0, sign_of);
                if p.degree().unwrap_or(0) % 2 == 1 {
                    -s
                } else {
                    s
                }
            }
        }
    }

    /// Number of sign changes in the chain evaluated at `x`, zeros skipped.
    pub fn variations(&self, x: &Bound) -> usize {
        let mut last = 0i8;
        let mut v = 0;
        for p in &self.polys {
            let s = Self::sign_at(p, x);
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                v += 1;
            }
            last = s;
        }
        v
    }

    pub fn variations_at(&self, r: &BigRat) -> usize {
        self.variations(&Bound::At(r.clone()))
    }
}

fn check_interval(a: &Bound, b: &Bound) -> Result<(), PolyError> {
    let ok = match (a, b) {
        (Bound::At(x), Bound::At(y)) => x < y,
        (Bound::PosInf, _) | (_, Bound::NegInf) => false,
        _ => true,
    };
    if ok {
        return Ok(());
    }
    let show = |x: &Bound| match x {
        Bound::At(r) => r.to_string(),
        Bound::NegInf => "-inf".to_string(),
        Bound::PosInf => "inf".to_string(),
    };
    Err(PolyError::EmptyInterval {
        a: show(a),
        b: show(b),
    })
}

/// Distinct roots of a squarefree polynomial in the open interval `(a, b)`.
fn squarefree_count(q: &IntPoly, a: &Bound, b: &Bound) -> Result<usize, PolyError> {
    let mut q = q.clone();
    for end in [a, b] {
        if let Bound::At(r) = end {
            if q.sign_at(r) == 0 {
                q = q.exact_divide(&IntPoly::linear_rational_root(r))?;
            }
        }
    }
    if q.degree().unwrap_or(0) == 0 {
        return Ok(0);
    }
    let chain = SturmChain::new(&q)?;
    Ok(chain.variations(a) - chain.variations(b))
}

/// Real roots of `p` strictly between `a` and `b`, either distinct or
/// counted with multiplicity.
pub fn count_roots(
    p: &IntPoly,
    a: &Bound,
    b: &Bound,
    with_multiplicity: bool,
) -> Result<usize, PolyError> {
    check_interval(a, b)?;
    let dec = p.squarefree_decomposition()?;
    let mut total = 0;
    for (q, m) in &dec.factors {
        let c = squarefree_count(q, a, b)?;
        total += if with_multiplicity {
            c * *m as usize
        } else {
            c
        };
    }
    Ok(total)
}

pub fn count_roots_open(
    p: &IntPoly,
    a: &BigRat,
    b: &BigRat,
    with_multiplicity: bool,
) -> Result<usize, PolyError> {
    count_roots(
        p,
        &Bound::At(a.clone()),
        &Bound::At(b.clone()),
        with_multiplicity,
    )
}

/// Multiplicity of the rational `r` as a root of `p`.
pub fn multiplicity_at(p: &IntPoly, r: &BigRat) -> usize {
    if r.is_integer() {
        return p.multiplicity_at_integer(&r.to_integer());
    }
    let lin = IntPoly::linear_rational_root(r);
    let mut q = p.clone();
    let mut m = 0;
    while !q.is_zero() && q.sign_at(r) == 0 {
        q = q.exact_divide(&lin).expect("rational root divides");
        m += 1;
    }
    m
}

/// Cauchy bound: every real root has absolute value below the result.
pub fn cauchy_bound(p: &IntPoly) -> BigInt {
    let Some(lc) = p.leading() else {
        return BigInt::zero();
    };
    let lc = lc.abs();
    let max = p.coeffs()[..p.coeffs().len() - 1]
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap_or_default();
    max / lc + 2
}
