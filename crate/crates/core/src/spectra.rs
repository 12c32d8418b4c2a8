//! Characteristic polynomials and exact spectral certificates.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::families::{guo_mohar, kollar_sarnak, FamilyError};
use crate::graph::{bits, Graph};
use crate::graph6::to_graph6;
use crate::poly::{BigRat, IntPoly, PolyError};
use crate::sturm::{count_roots, count_roots_open, Bound};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectraError {
    #[error("vertex subset is empty")]
    EmptySubset,
    #[error("vertex {vertex} is outside 0..{n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("k = {0} is below 2")]
    KTooSmall(usize),
    #[error("k = {0} exceeds the supported range")]
    KTooLarge(usize),
    #[error("interval ({a}, {b}) must lie inside [1, 3] or [-3, -1]")]
    IntervalOutside { a: String, b: String },
    #[error("graph needs at least {0} vertices")]
    TooSmall(usize),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Family(#[from] FamilyError),
}

/// `det(xI - A)` by Berkowitz's division-free algorithm.
pub fn char_poly(g: &Graph) -> IntPoly {
    let highest_first = berkowitz_i128(g)
        .map(|c| c.into_iter().map(BigInt::from).collect())
        .unwrap_or_else(|| berkowitz_big(g));
    IntPoly::new(highest_first.into_iter().rev().collect())
}

/// Berkowitz in machine integers; `None` on overflow.
fn berkowitz_i128(g: &Graph) -> Option<Vec<i128>> {
    let n = g.order();
    let mut c: Vec<i128> = vec![1];
    for r in 0..n {
        let prefix = if r == 0 { 0 } else { u64::MAX >> (64 - r) };
        let col = g.row(r) & prefix;
        // t = [1, -a_rr, -R C, -R A C, ..., -R A^(r-1) C]; a_rr = 0.
        let mut t = vec![0i128; r + 2];
        t[0] = 1;
        let mut v: Vec<i128> = (0..r).map(|i| i128::from(col >> i & 1 == 1)).collect();
        for j in 0..r {
            let mut s = 0i128;
            for i in bits(col) {
                s = s.checked_add(v[i])?;
            }
            t[j + 2] = s.checked_neg()?;
            if j + 1 < r {
                let mut next = vec![0i128; r];
                for (i, slot) in next.iter_mut().enumerate() {
                    let mut acc = 0i128;
                    for k in bits(g.row(i) & prefix) {
                        acc = acc.checked_add(v[k])?;
                    }
                    *slot = acc;
                }
                v = next;
            }
        }
        let mut out = vec![0i128; r + 2];
        for (i, o) in out.iter_mut().enumerate() {
            let mut acc = 0i128;
            for j in 0..=i.min(r) {
                if t[i - j] != 0 && c[j] != 0 {
                    acc = acc.checked_add(t[i - j].checked_mul(c[j])?)?;
                }
            }
            *o = acc;
        }
        c = out;
    }
    Some(c)
}

fn berkowitz_big(g: &Graph) -> Vec<BigInt> {
    let n = g.order();
    let mut c: Vec<BigInt> = vec![BigInt::one()];
    for r in 0..n {
        let prefix = if r == 0 { 0 } else { u64::MAX >> (64 - r) };
        let col = g.row(r) & prefix;
        let mut t = vec![BigInt::zero(); r + 2];
        t[0] = BigInt::one();
        let mut v: Vec<BigInt> = (0..r)
            .map(|i| BigInt::from(u8::from(col >> i & 1 == 1)))
            .collect();
        for j in 0..r {
            let s: BigInt = bits(col).map(|i| &v[i]).sum();
            t[j + 2] = -s;
            if j + 1 < r {
                v = (0..r)
                    .map(|i| bits(g.row(i) & prefix).map(|k| &v[k]).sum())
                    .collect();
            }
        }
        c = (0..r + 2)
            .map(|i| (0..=i.min(r)).map(|j| &t[i - j] * &c[j]).sum())
            .collect();
    }
    c
}

/// `det(xI - A)` by Faddeev-LeVerrier with exact integer division.
pub fn char_poly_faddeev_leverrier(g: &Graph) -> IntPoly {
    let n = g.order();
    // coefficients highest first: c[0] = 1
    let mut c = vec![BigInt::zero(); n + 1];
    c[0] = BigInt::one();
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{k-1} I
        let mut next = vec![vec![BigInt::zero(); n]; n];
        for (i, row) in next.iter_mut().enumerate() {
            for u in bits(g.row(i)) {
                for (j, x) in row.iter_mut().enumerate() {
                    *x += &m[u][j];
                }
            }
            row[i] += &c[k - 1];
        }
        m = next;
        // c_k = -tr(A M_k) / k
        let mut tr = BigInt::zero();
        for i in 0..n {
            for u in bits(g.row(i)) {
                tr += &m[u][i];
            }
        }
        c[k] = -(tr / BigInt::from(k));
    }
    IntPoly::new(c.into_iter().rev().collect())
}

fn one() -> BigRat {
    BigRat::one()
}

fn neg_one() -> BigRat {
    -BigRat::one()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapCertificate {
    pub graph6: String,
    pub n: usize,
    pub charpoly: IntPoly,
    /// Eigenvalues in `(-1, 1)`, with multiplicity.
    pub roots_in_gap: usize,
    pub mult_plus1: usize,
    pub mult_minus1: usize,
    pub verdict: bool,
}

impl Serialize for GapCertificate {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("GapCertificate", 6)?;
        st.serialize_field("graph6", &self.graph6)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("charpoly", &self.charpoly.to_json_coeffs())?;
        st.serialize_field("gap", &self.verdict)?;
        st.serialize_field("mult_plus1", &self.mult_plus1)?;
        st.serialize_field("mult_minus1", &self.mult_minus1)?;
        st.end()
    }
}

pub fn certify_gap(g: &Graph) -> GapCertificate {
    let charpoly = char_poly(g);
    certify_with_charpoly(g, charpoly)
}

pub(crate) fn certify_with_charpoly(g: &Graph, charpoly: IntPoly) -> GapCertificate {
    let roots_in_gap = if g.order() == 0 {
        0
    } else {
        count_roots_open(&charpoly, &neg_one(), &one(), true).expect("monic, nonempty interval")
    };
    GapCertificate {
        graph6: to_graph6(g),
        n: g.order(),
        mult_plus1: charpoly.multiplicity_at_integer(&BigInt::one()),
        mult_minus1: charpoly.multiplicity_at_integer(&-BigInt::one()),
        roots_in_gap,
        verdict: roots_in_gap == 0,
        charpoly,
    }
}

/// `A^2 - I`.
pub fn m_matrix(g: &Graph) -> Vec<Vec<i64>> {
    let n = g.order();
    (0..n)
        .map(|u| {
            (0..n)
                .map(|v| {
                    let walks = i64::from((g.row(u) & g.row(v)).count_ones());
                    if u == v {
                        walks - 1
                    } else {
                        walks
                    }
                })
                .collect()
        })
        .collect()
}

/// Determinant by fraction-free Gaussian elimination.
pub fn determinant(matrix: &[Vec<i64>]) -> BigInt {
    let n = matrix.len();
    let mut a: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    if n == 0 {
        return BigInt::one();
    }
    sign * &a[n - 1][n - 1]
}

pub fn principal_submatrix(m: &[Vec<i64>], s: &[usize]) -> Vec<Vec<i64>> {
    s.iter()
        .map(|&i| s.iter().map(|&j| m[i][j]).collect())
        .collect()
}

/// `det((A^2 - I)_SS)`.
pub fn m_matrix_minor(g: &Graph, s: &[usize]) -> Result<BigInt, SpectraError> {
    if s.is_empty() {
        return Err(SpectraError::EmptySubset);
    }
    if let Some(&v) = s.iter().find(|&&v| v >= g.order()) {
        return Err(SpectraError::VertexOutOfRange {
            vertex: v,
            n: g.order(),
        });
    }
    Ok(determinant(&principal_submatrix(&m_matrix(g), s)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ObstructionWitness {
    pub subset: Vec<usize>,
    pub matrix: Vec<Vec<i64>>,
    #[serde(serialize_with = "ser_display")]
    pub determinant: BigInt,
}

fn ser_display<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

/// First subset (by size, then lexicographically) with a negative principal
/// minor of `A^2 - I`.
pub fn find_negative_witness(g: &Graph, max_subset_size: usize) -> Option<ObstructionWitness> {
    let m = m_matrix(g);
    let n = g.order();
    for size in 1..=max_subset_size.min(n) {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let sub = principal_submatrix(&m, &idx);
            let det = determinant(&sub);
            if det.is_negative() {
                return Some(ObstructionWitness {
                    subset: idx,
                    matrix: sub,
                    determinant: det,
                });
            }
            // next combination
            let mut i = size;
            while i > 0 && idx[i - 1] == n - size + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            idx[i - 1] += 1;
            for j in i..size {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    None
}

/// Whether both median eigenvalues lie in `[-1, 1]`. With eigenvalues
/// `λ_1 >= ... >= λ_n`, the medians are `λ_{n/2}` and `λ_{n/2+1}` for even
/// `n` and `λ_{(n+1)/2}` for odd `n`.
pub fn median_within_unit(g: &Graph) -> Result<bool, SpectraError> {
    let n = g.order();
    if n < 2 {
        return Err(SpectraError::TooSmall(2));
    }
    let p = char_poly(g);
    let above = count_roots(&p, &Bound::At(one()), &Bound::PosInf, true)?;
    let below = count_roots(&p, &Bound::NegInf, &Bound::At(neg_one()), true)?;
    let allowed = n.div_ceil(2) - 1;
    Ok(above <= allowed && below <= allowed)
}

/// All eigenvalues are integers.
pub fn has_integral_spectrum(g: &Graph) -> bool {
    let p = char_poly(g);
    let bound = g.degrees().into_iter().max().unwrap_or(0) as i64;
    let total: usize = (-bound..=bound)
        .map(|r| p.multiplicity_at_integer(&BigInt::from(r)))
        .sum();
    total == g.order()
}

/// `(x-3)(x+1)^3 φ(GM(2k)) = (x+3)(x-1)^3 φ(KS(k))^2`.
pub fn verify_sameeigs_identity(k: usize) -> Result<bool, SpectraError> {
    if k < 2 {
        return Err(SpectraError::KTooSmall(k));
    }
    if k > 8 {
        return Err(SpectraError::KTooLarge(k));
    }
    let gm = char_poly(&guo_mohar(2 * k)?);
    let ks = char_poly(&kollar_sarnak(k)?);
    let lhs = &(&IntPoly::linear_root(3) * &IntPoly::linear_root(-1).pow(3)) * &gm;
    let rhs = &(&IntPoly::linear_root(-3) * &IntPoly::linear_root(1).pow(3)) * &(&ks * &ks);
    Ok(lhs == rhs)
}

/// `Q_k(z) = 2^(k+1) (T_k((z-5)/4) - 1)`, so that `φ(GM(k), x) =
/// (x^2-1)^k Q_k(x^2)`. Its roots are `5 + 4 cos(2πj/k)`.
pub fn gm_reduced_poly(k: usize) -> Result<IntPoly, SpectraError> {
    if k < 2 {
        return Err(SpectraError::KTooSmall(k));
    }
    let quarter = BigRat::new(1.into(), 4.into());
    let w = vec![BigRat::new((-5).into(), 4.into()), quarter];
    let mul = |p: &[BigRat], q: &[BigRat]| -> Vec<BigRat> {
        let mut out = vec![BigRat::zero(); p.len() + q.len() - 1];
        for (i, a) in p.iter().enumerate() {
            for (j, b) in q.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        out
    };
    let sub = |p: &[BigRat], q: &[BigRat]| -> Vec<BigRat> {
        let n = p.len().max(q.len());
        (0..n)
            .map(|i| p.get(i).cloned().unwrap_or_default() - q.get(i).cloned().unwrap_or_default())
            .collect()
    };
    // Chebyshev recurrence T_{j+1} = 2w T_j - T_{j-1}.
    let two_w: Vec<BigRat> = w
        .iter()
        .map(|c| c * BigRat::from_integer(2.into()))
        .collect();
    let mut prev = vec![one()];
    let mut cur = w.clone();
    for _ in 1..k {
        let next = sub(&mul(&two_w, &cur), &prev);
        prev = cur;
        cur = next;
    }
    let scale = BigRat::from_integer(BigInt::one() << (k + 1));
    cur[0] -= one();
    let mut coeffs = Vec::with_capacity(cur.len());
    for c in cur {
        let v = c * &scale;
        if !v.is_integer() {
            return Err(PolyError::NonIntegralQuotient.into());
        }
        coeffs.push(v.to_integer());
    }
    Ok(IntPoly::new(coeffs))
}

/// `φ(GM(k))` from the closed form, valid for any `k >= 2`.
pub fn gm_char_poly_closed_form(k: usize) -> Result<IntPoly, SpectraError> {
    let q = gm_reduced_poly(k)?.compose_square();
    let factor = IntPoly::from_i64s(&[-1, 0, 1]).pow(k as u32);
    Ok(&factor * &q)
}

/// `(x^2-1)^k` divides `φ(GM(k))` and the cofactor is `Q_k(x^2)`, monic of
/// degree `2k`.
pub fn gm_spectrum_check(k: usize) -> Result<bool, SpectraError> {
    if k < 2 {
        return Err(SpectraError::KTooSmall(k));
    }
    if 4 * k > crate::graph::MAX_VERTICES {
        return Err(SpectraError::KTooLarge(k));
    }
    let phi = char_poly(&guo_mohar(k)?);
    let factor = IntPoly::from_i64s(&[-1, 0, 1]).pow(k as u32);
    let Ok(cofactor) = phi.exact_divide(&factor) else {
        return Ok(false);
    };
    let q = gm_reduced_poly(k)?.compose_square();
    Ok(cofactor == q && q.is_monic() && q.degree() == Some(2 * k))
}

/// Multiplicities of `+1` and `-1` in the spectrum of `GM(k)`.
pub fn gm_pm1_multiplicity(k: usize) -> Result<(usize, usize), SpectraError> {
    let p = gm_char_poly_closed_form(k)?;
    Ok((
        p.multiplicity_at_integer(&BigInt::one()),
        p.multiplicity_at_integer(&-BigInt::one()),
    ))
}

/// Eigenvalues of `GM(k)` in the open interval `(a, b)` with multiplicity,
/// for `1 <= a < b` or `a < b <= -1`.
pub fn gm_interval_count(k: usize, a: &BigRat, b: &BigRat) -> Result<usize, SpectraError> {
    let (lo, hi) = if a.is_negative() {
        (-b, -a)
    } else {
        (a.clone(), b.clone())
    };
    if lo < one() || lo >= hi {
        return Err(SpectraError::IntervalOutside {
            a: a.to_string(),
            b: b.to_string(),
        });
    }
    // φ is even and (x^2 - 1)^k has no roots inside; x ∈ (lo, hi) iff
    // x^2 ∈ (lo^2, hi^2) for positive x.
    let q = gm_reduced_poly(k)?;
    Ok(count_roots_open(&q, &(&lo * &lo), &(&hi * &hi), true)?)
}

/// Smallest `k0` such that `GM(k)` has an eigenvalue in `(a, b)` for
/// every `k` in `k0..=k_max`; `None` if `GM(k_max)` itself misses.
pub fn interval_hits_all_large_gm(
    a: &BigRat,
    b: &BigRat,
    k_max: usize,
) -> Result<Option<usize>, SpectraError> {
    let three = BigRat::from_integer(3.into());
    let inside =
        (a >= &one() && b <= &three && a < b) || (a >= &-&three && b <= &neg_one() && a < b);
    if !inside {
        return Err(SpectraError::IntervalOutside {
            a: a.to_string(),
            b: b.to_string(),
        });
    }
    let mut k0 = None;
    for k in (2..=k_max).rev() {
        if gm_interval_count(k, a, b)? == 0 {
            break;
        }
        k0 = Some(k);
    }
    Ok(k0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete_bipartite, cube, heawood, petersen};

    fn p(cs: &[i64]) -> IntPoly {
        IntPoly::from_i64s(cs)
    }

    #[test]
    fn k4_charpoly() {
        let k4 = Graph::complete(4).unwrap();
        let expect = &p(&[-3, 1]) * &p(&[1, 1]).pow(3);
        assert_eq!(char_poly(&k4), expect);
        assert_eq!(char_poly_faddeev_leverrier(&k4), expect);
    }

    #[test]
    fn cube_charpoly() {
        let expect = &(&(&p(&[-3, 1]) * &p(&[-1, 1]).pow(3)) * &p(&[1, 1]).pow(3)) * &p(&[3, 1]);
        assert_eq!(char_poly(&cube()), expect);
    }

    #[test]
    fn big_fallback_agrees() {
        let g = heawood();
        let big = IntPoly::new(berkowitz_big(&g).into_iter().rev().collect());
        assert_eq!(big, char_poly(&g));
        assert_eq!(char_poly(&Graph::empty(0).unwrap()), p(&[1]));
    }

    #[test]
    fn certificates() {
        let c = certify_gap(&petersen());
        assert!(c.verdict);
        assert_eq!((c.mult_plus1, c.mult_minus1), (5, 0));
        let c = certify_gap(&complete_bipartite(3, 3).unwrap());
        assert!(!c.verdict);
        assert_eq!(c.roots_in_gap, 4);
        let c = certify_gap(&heawood());
        assert!(c.verdict && c.mult_plus1 == 0);
        let json = serde_json::to_value(certify_gap(&Graph::complete(4).unwrap())).unwrap();
        assert_eq!(json["graph6"], "C~");
        assert_eq!(
            json["charpoly"],
            serde_json::json!(["-3", "-8", "-6", "0", "1"])
        );
        assert_eq!(json["gap"], true);
        assert_eq!(json["mult_minus1"], 3);
    }

    #[test]
    fn determinants() {
        assert_eq!(
            determinant(&[vec![2, 2, 1], vec![2, 2, 0], vec![1, 0, 2]]),
            BigInt::from(-2)
        );
        assert_eq!(
            determinant(&[vec![2, 2, 2], vec![2, 2, 1], vec![2, 1, 2]]),
            BigInt::from(-2)
        );
        assert_eq!(determinant(&[vec![0, 1], vec![1, 0]]), BigInt::from(-1));
        assert_eq!(determinant(&[]), BigInt::one());
    }

    #[test]
    fn minors_and_witnesses() {
        let gm = guo_mohar(4).unwrap();
        assert_eq!(m_matrix_minor(&gm, &[5]).unwrap(), BigInt::from(2));
        assert_eq!(m_matrix_minor(&gm, &[]), Err(SpectraError::EmptySubset));
        assert!(m_matrix_minor(&gm, &[16]).is_err());
        assert!(find_negative_witness(&petersen(), 4).is_none());
        let w = find_negative_witness(&complete_bipartite(3, 3).unwrap(), 4).unwrap();
        assert!(w.determinant.is_negative());
        assert!(w.subset.len() <= 2);
    }

    #[test]
    fn medians() {
        assert!(!median_within_unit(&heawood()).unwrap());
        assert!(median_within_unit(&petersen()).unwrap());
        assert!(median_within_unit(&guo_mohar(4).unwrap()).unwrap());
        assert!(median_within_unit(&Graph::empty(1).unwrap()).is_err());
    }

    #[test]
    fn gm_identities() {
        for k in 2..=4 {
            assert!(verify_sameeigs_identity(k).unwrap());
        }
        for k in 2..=8 {
            assert!(gm_spectrum_check(k).unwrap(), "k = {k}");
        }
        let cube_poly = &p(&[-9, 0, 1]) * &p(&[-1, 0, 1]).pow(3);
        assert_eq!(gm_char_poly_closed_form(2).unwrap(), cube_poly);
        assert_eq!(gm_pm1_multiplicity(3).unwrap(), (3, 3));
        assert_eq!(gm_pm1_multiplicity(4).unwrap(), (5, 5));
    }

    #[test]
    fn gm_pm1_multiplicity_exact() {
        for k in 2..=16 {
            let phi = char_poly(&guo_mohar(k).unwrap());
            let expect = k + usize::from(k % 2 == 0);
            assert_eq!(
                phi.multiplicity_at_integer(&BigInt::one()),
                expect,
                "k = {k}"
            );
            assert_eq!(
                phi.multiplicity_at_integer(&-BigInt::one()),
                expect,
                "k = {k}"
            );
            assert_eq!(gm_pm1_multiplicity(k).unwrap(), (expect, expect));
        }
        assert_eq!(gm_pm1_multiplicity(41).unwrap(), (41, 41));
    }

    #[test]
    fn interval_hits() {
        let r = |n: i64, d: i64| BigRat::new(n.into(), d.into());
        // GM(2) is the cube with spectrum {±3, ±1}: nothing strictly inside.
        assert_eq!(gm_interval_count(2, &r(1, 1), &r(3, 1)).unwrap(), 0);
        assert_eq!(
            interval_hits_all_large_gm(&r(1, 1), &r(3, 1), 20).unwrap(),
            Some(3)
        );
        assert!(interval_hits_all_large_gm(&r(0, 1), &r(1, 1), 20).is_err());
        let k0 = interval_hits_all_large_gm(&r(3, 2), &r(2, 1), 60)
            .unwrap()
            .unwrap();
        assert!(k0 > 2 && k0 < 60);
    }

    #[test]
    fn integral_spectra() {
        assert!(has_integral_spectrum(&petersen()));
        assert!(has_integral_spectrum(&cube()));
        assert!(!has_integral_spectrum(&heawood()));
    }
}
