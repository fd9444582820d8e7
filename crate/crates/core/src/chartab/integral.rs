//! Checked integer arithmetic in `Z[ζₑ]`.
//!
//! Character values are algebraic integers, so the bulk sums behind the
//! orthogonality relations and the character-side structure constants can run
//! on machine integers. Every operation is checked and reports overflow as
//! `None`; callers then fall back to [`Cyclotomic`](super::Cyclotomic).

use num_rational::BigRational;
use num_traits::ToPrimitive;

use super::cyclotomic::{cyclotomic_polynomial, Cyclotomic};

#[derive(Clone, Debug)]
pub(crate) struct Ring {
    conductor: usize,
    phi: usize,
    /// `Φₑ` without its leading 1.
    cyclo: Vec<i128>,
}

impl Ring {
    pub fn new(conductor: usize) -> Option<Self> {
        let poly = cyclotomic_polynomial(conductor);
        let phi = poly.len() - 1;
        let cyclo = poly[..phi]
            .iter()
            .map(|c| c.to_i128())
            .collect::<Option<Vec<_>>>()?;
        Some(Ring {
            conductor,
            phi,
            cyclo,
        })
    }

    pub fn acc(&self) -> Vec<i128> {
        vec![0; 2 * self.phi - 1]
    }

    /// `acc += w·a·b` without reduction.
    pub fn mul_acc(&self, acc: &mut [i128], a: &[i128], b: &[i128], w: i128) -> Option<()> {
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            let wx = w.checked_mul(x)?;
            for (j, &y) in b.iter().enumerate() {
                if y != 0 {
                    acc[i + j] = acc[i + j].checked_add(wx.checked_mul(y)?)?;
                }
            }
        }
        Some(())
    }

    pub fn reduce(&self, mut acc: Vec<i128>) -> Option<Vec<i128>> {
        for top in (self.phi..acc.len()).rev() {
            let c = std::mem::take(&mut acc[top]);
            if c == 0 {
                continue;
            }
            let base = top - self.phi;
            for (j, &pj) in self.cyclo.iter().enumerate() {
                if pj != 0 {
                    acc[base + j] = acc[base + j].checked_sub(c.checked_mul(pj)?)?;
                }
            }
        }
        acc.truncate(self.phi);
        Some(acc)
    }

    pub fn mul(&self, a: &[i128], b: &[i128]) -> Option<Vec<i128>> {
        let mut acc = self.acc();
        self.mul_acc(&mut acc, a, b, 1)?;
        self.reduce(acc)
    }

    /// Integer coefficients of `z`, if it is integral in the power basis.
    pub fn embed(&self, z: &Cyclotomic) -> Option<Vec<i128>> {
        let z = z.lift(self.conductor);
        z.coeffs()
            .iter()
            .map(|c| if c.is_integer() { c.numer().to_i128() } else { None })
            .collect()
    }

    pub fn to_cyclotomic(&self, v: &[i128]) -> Cyclotomic {
        let coeffs = v
            .iter()
            .map(|&c| BigRational::from_integer(c.into()))
            .collect();
        Cyclotomic::new(self.conductor, coeffs).expect("coefficient count matches")
    }
}
