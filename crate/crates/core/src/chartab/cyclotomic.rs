//! Exact arithmetic in `Q(ζₑ)`.
//!
//! Elements are kept in the power basis `1, ζ, …, ζ^(φ(e)-1)`, reduced modulo
//! the cyclotomic polynomial `Φₑ`, so equality at a fixed conductor is plain
//! coefficient equality.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CyclotomicError {
    #[error("conductor must be positive")]
    ZeroConductor,
    #[error("expected {expected} coefficients for conductor {conductor}, got {found}")]
    CoefficientCount {
        conductor: usize,
        expected: usize,
        found: usize,
    },
}

fn cache() -> &'static Mutex<HashMap<usize, Arc<Vec<BigInt>>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<BigInt>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Coefficients of `Φₙ`, lowest degree first.
///
/// Obtained by dividing `xⁿ - 1` exactly by `Φ_d` for every proper divisor `d`.
pub fn cyclotomic_polynomial(n: usize) -> Arc<Vec<BigInt>> {
    assert!(n > 0, "cyclotomic polynomial of index 0");
    if let Some(p) = cache().lock().expect("cache lock").get(&n) {
        return Arc::clone(p);
    }
    let mut poly = vec![BigInt::zero(); n + 1];
    poly[0] = -BigInt::one();
    poly[n] = BigInt::one();
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        poly = exact_div(&poly, &cyclotomic_polynomial(d));
    }
    let poly = Arc::new(poly);
    cache()
        .lock()
        .expect("cache lock")
        .insert(n, Arc::clone(&poly));
    poly
}

/// Quotient of `num` by the monic `den`; the division must be exact.
fn exact_div(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
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

/// Euler's totient.
pub fn totient(n: usize) -> usize {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// An element of `Q(ζₑ)`.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    conductor: usize,
    coeffs: Vec<BigRational>,
}

impl Cyclotomic {
    /// From power-basis coefficients (exactly `φ(e)` of them).
    pub fn new(conductor: usize, coeffs: Vec<BigRational>) -> Result<Self, CyclotomicError> {
        if conductor == 0 {
            return Err(CyclotomicError::ZeroConductor);
        }
        let expected = totient(conductor);
        if coeffs.len() != expected {
            return Err(CyclotomicError::CoefficientCount {
                conductor,
                expected,
                found: coeffs.len(),
            });
        }
        Ok(Cyclotomic { conductor, coeffs })
    }

    pub fn zero(conductor: usize) -> Result<Self, CyclotomicError> {
        Self::from_rational(conductor, BigRational::zero())
    }

    pub fn one(conductor: usize) -> Result<Self, CyclotomicError> {
        Self::from_rational(conductor, BigRational::one())
    }

    pub fn from_integer(conductor: usize, n: i64) -> Result<Self, CyclotomicError> {
        Self::from_rational(conductor, BigRational::from_integer(n.into()))
    }

    pub fn from_rational(conductor: usize, q: BigRational) -> Result<Self, CyclotomicError> {
        if conductor == 0 {
            return Err(CyclotomicError::ZeroConductor);
        }
        let mut coeffs = vec![BigRational::zero(); totient(conductor)];
        coeffs[0] = q;
        Ok(Cyclotomic { conductor, coeffs })
    }

    /// `ζₑᵏ`
    pub fn root_of_unity(conductor: usize, k: usize) -> Result<Self, CyclotomicError> {
        if conductor == 0 {
            return Err(CyclotomicError::ZeroConductor);
        }
        let mut poly = vec![BigRational::zero(); conductor];
        poly[k % conductor] = BigRational::one();
        Ok(Self::reduce(conductor, poly))
    }

    /// `Σₖ mult[k]·ζₑᵏ` with `e = mult.len()`.
    pub fn from_root_multiplicities(mult: &[i64]) -> Result<Self, CyclotomicError> {
        let conductor = mult.len();
        if conductor == 0 {
            return Err(CyclotomicError::ZeroConductor);
        }
        let poly = mult
            .iter()
            .map(|&m| BigRational::from_integer(m.into()))
            .collect();
        Ok(Self::reduce(conductor, poly))
    }

    /// Reduces a polynomial in `ζₑ` of any degree to canonical form.
    fn reduce(conductor: usize, poly: Vec<BigRational>) -> Self {
        let phi_poly = cyclotomic_polynomial(conductor);
        let phi = phi_poly.len() - 1;
        // fold exponents with ζᵉ = 1 first
        let mut folded = vec![BigRational::zero(); conductor.max(phi)];
        for (i, c) in poly.into_iter().enumerate() {
            if !c.is_zero() {
                folded[i % conductor] += c;
            }
        }
        for top in (phi..folded.len()).rev() {
            let c = std::mem::take(&mut folded[top]);
            if c.is_zero() {
                continue;
            }
            let base = top - phi;
            for (j, pj) in phi_poly.iter().enumerate().take(phi) {
                if !pj.is_zero() {
                    folded[base + j] -= &c * BigRational::from_integer(pj.clone());
                }
            }
        }
        folded.truncate(phi);
        Cyclotomic {
            conductor,
            coeffs: folded,
        }
    }

    pub fn conductor(&self) -> usize {
        self.conductor
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The value as a rational number, if it is one.
    pub fn to_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Re-expresses the value in `Q(ζ_m)` for a multiple `m` of the conductor.
    pub fn lift(&self, m: usize) -> Self {
        assert!(
            m > 0 && m.is_multiple_of(self.conductor),
            "conductor {} does not divide {m}",
            self.conductor
        );
        if m == self.conductor {
            return self.clone();
        }
        let step = m / self.conductor;
        let mut poly = vec![BigRational::zero(); m];
        for (i, c) in self.coeffs.iter().enumerate() {
            poly[i * step] = c.clone();
        }
        Self::reduce(m, poly)
    }

    fn common(a: &Self, b: &Self) -> (Self, Self) {
        if a.conductor == b.conductor {
            return (a.clone(), b.clone());
        }
        let m = a.conductor.lcm(&b.conductor);
        (a.lift(m), b.lift(m))
    }

    /// Image under the Galois automorphism `ζ ↦ ζᵏ` (`k` coprime to the conductor).
    pub fn galois(&self, k: usize) -> Self {
        let e = self.conductor;
        debug_assert_eq!(k.gcd(&e), 1);
        let mut poly = vec![BigRational::zero(); e];
        for (i, c) in self.coeffs.iter().enumerate() {
            poly[(i * k) % e] += c;
        }
        Self::reduce(e, poly)
    }

    /// Complex conjugate, `ζ ↦ ζ^(e-1)`.
    pub fn conj(&self) -> Self {
        self.galois(self.conductor - 1)
    }

    /// `z·conj(z)`, which is always real.
    pub fn abs_square(&self) -> Self {
        self * &self.conj()
    }

    pub fn is_real(&self) -> bool {
        *self == self.conj()
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    fn mul_same(&self, other: &Self) -> Self {
        let n = self.coeffs.len();
        let mut poly = vec![BigRational::zero(); 2 * n - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    poly[i + j] += a * b;
                }
            }
        }
        Self::reduce(self.conductor, poly)
    }

    /// Total order on canonical coefficient vectors at a common conductor.
    pub fn cmp_coeffs(&self, other: &Self) -> Ordering {
        let (a, b) = Self::common(self, other);
        a.coeffs.cmp(&b.coeffs)
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = Self::common(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, other: &Cyclotomic) -> Cyclotomic {
        let (mut a, b) = Cyclotomic::common(self, other);
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs) {
            *x += y;
        }
        a
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, other: &Cyclotomic) -> Cyclotomic {
        let (mut a, b) = Cyclotomic::common(self, other);
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs) {
            *x -= y;
        }
        a
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, other: &Cyclotomic) -> Cyclotomic {
        if self.conductor == other.conductor {
            return self.mul_same(other);
        }
        let (a, b) = Cyclotomic::common(self, other);
        a.mul_same(&b)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, q: &BigRational) -> fmt::Result {
    if q.is_integer() {
        write!(f, "{}", q.numer())
    } else {
        write!(f, "{}/{}", q.numer(), q.denom())
    }
}

/// Power-basis form in GAP-style notation, e.g. `2+E5^2+E5^3`.
impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            if negative {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            let magnitude = c.abs();
            if k == 0 {
                write_rational(f, &magnitude)?;
                continue;
            }
            if !magnitude.is_one() {
                write_rational(f, &magnitude)?;
                f.write_str("*")?;
            }
            write!(f, "E{}", self.conductor)?;
            if k > 1 {
                write!(f, "^{k}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn z(e: usize, k: usize) -> Cyclotomic {
        Cyclotomic::root_of_unity(e, k).unwrap()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        let ints = |v: &[i64]| v.iter().map(|&x| int(x)).collect::<Vec<_>>();
        assert_eq!(*cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(*cyclotomic_polynomial(4), ints(&[1, 0, 1]));
        assert_eq!(*cyclotomic_polynomial(6), ints(&[1, -1, 1]));
        assert_eq!(*cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
        // first index with a coefficient outside {-1, 0, 1}
        assert!(cyclotomic_polynomial(105).contains(&int(-2)));
        for n in 1..60 {
            assert_eq!(cyclotomic_polynomial(n).len() - 1, totient(n));
        }
    }

    #[test]
    fn i_squared_is_minus_one() {
        assert_eq!(&z(4, 1) * &z(4, 1), Cyclotomic::from_integer(4, -1).unwrap());
    }

    #[test]
    fn cube_roots_sum_to_zero() {
        let s = &(&Cyclotomic::one(3).unwrap() + &z(3, 1)) + &z(3, 2);
        assert!(s.is_zero());
    }

    #[test]
    fn abs_square_of_golden_ratio_conjugate() {
        let v = &z(5, 1) + &z(5, 4);
        let sq = v.abs_square();
        let expected = &(&Cyclotomic::from_integer(5, 2).unwrap() + &z(5, 2)) + &z(5, 3);
        assert_eq!(sq, expected);
        assert!(sq.is_real());
        assert_eq!(sq.to_string(), "2+E5^2+E5^3");
    }

    #[test]
    fn lifting_preserves_value() {
        let w = z(3, 1);
        let lifted = w.lift(12);
        assert_eq!(lifted, z(12, 4));
        assert_eq!(w, lifted);
        let s = &w + &z(4, 1);
        assert_eq!(s.conductor(), 12);
        assert_eq!(s, &z(12, 4) + &z(12, 3));
    }

    #[test]
    fn conjugation_inverts_roots() {
        for e in 1..20 {
            for k in 0..e {
                assert_eq!(z(e, k).conj(), z(e, e - k));
                assert!((&z(e, k) * &z(e, k).conj()) == Cyclotomic::one(e).unwrap());
            }
        }
    }

    #[test]
    fn multiplicities_and_display() {
        let v = Cyclotomic::from_root_multiplicities(&[0, 1, 0, 0, 1]).unwrap();
        assert_eq!(v.to_string(), "-1-E5^2-E5^3");
        assert_eq!(Cyclotomic::from_integer(7, 0).unwrap().to_string(), "0");
        let half = Cyclotomic::from_rational(3, BigRational::new(int(1), int(2))).unwrap();
        assert_eq!((&half + &z(3, 1)).to_string(), "1/2+E3");
        assert_eq!(z(8, 3).scale(&BigRational::from_integer(int(-3))).to_string(), "-3*E8^3");
    }

    #[test]
    fn zero_conductor_is_rejected() {
        assert_eq!(Cyclotomic::zero(0).unwrap_err(), CyclotomicError::ZeroConductor);
        assert!(Cyclotomic::from_root_multiplicities(&[]).is_err());
        assert!(Cyclotomic::new(5, vec![BigRational::zero(); 3]).is_err());
    }
}
