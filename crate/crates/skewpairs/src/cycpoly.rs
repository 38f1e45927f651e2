//! The ring K[x]/(x^p - 1): the coefficient ring of both toral actions.
//!
//! Carries the order-p automorphisms tau (x -> rho^-1 x) and tau'
//! (x -> rho x), the ring norm n(f) = prod_i tau^i(f), the evaluation
//! isomorphism Theta onto the product ring, and the norm-quotient maps
//! Psi(g) = g/tau(g) and Psi'(g) = g/tau'(g).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cyclotomic::{check_prime, CycNum};
use crate::error::{Error, Result};

/// An element of K[x]/(x^p - 1), stored as p coefficients of 1, x, ..., x^(p-1).
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CycPoly {
    coeffs: Vec<CycNum>,
}

impl CycPoly {
    pub fn new(p: usize, coeffs: Vec<CycNum>) -> Result<Self> {
        check_prime(p)?;
        if coeffs.len() != p {
            return Err(Error::Shape(format!(
                "expected {} coefficients, got {}",
                p,
                coeffs.len()
            )));
        }
        for c in &coeffs {
            if c.prime() != p {
                return Err(Error::Shape("coefficient prime mismatch".into()));
            }
        }
        Ok(CycPoly { coeffs })
    }

    pub fn zero(p: usize) -> Self {
        CycPoly {
            coeffs: vec![CycNum::zero(p); p],
        }
    }

    pub fn one(p: usize) -> Self {
        Self::constant(CycNum::one(p))
    }

    pub fn constant(c: CycNum) -> Self {
        let p = c.prime();
        let mut coeffs = vec![CycNum::zero(p); p];
        coeffs[0] = c;
        CycPoly { coeffs }
    }

    /// The monomial x^k, exponent taken modulo p.
    pub fn monomial(p: usize, k: usize, c: CycNum) -> Self {
        let mut coeffs = vec![CycNum::zero(p); p];
        coeffs[k % p] = c;
        CycPoly { coeffs }
    }

    pub fn from_ints(p: usize, ints: &[i64]) -> Result<Self> {
        let coeffs = ints.iter().map(|&n| CycNum::from_int(p, n)).collect();
        Self::new(p, coeffs)
    }

    pub fn prime(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[CycNum] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// True when exactly one coefficient is nonzero.
    pub fn is_monomial(&self) -> bool {
        self.coeffs.iter().filter(|c| !c.is_zero()).count() == 1
    }

    pub fn add(&self, other: &Self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.add(b))
            .collect();
        CycPoly { coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.sub(b))
            .collect();
        CycPoly { coeffs }
    }

    /// Ring product with cyclic reduction x^p = 1.
    pub fn mul(&self, other: &Self) -> Self {
        let p = self.prime();
        let mut coeffs = vec![CycNum::zero(p); p];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let k = (i + j) % p;
                coeffs[k] = coeffs[k].add(&a.mul(b));
            }
        }
        CycPoly { coeffs }
    }

    pub fn scale(&self, c: &CycNum) -> Self {
        let coeffs = self.coeffs.iter().map(|a| a.mul(c)).collect();
        CycPoly { coeffs }
    }

    /// The automorphism tau: x -> rho^-1 x, i.e. a_i -> a_i rho^-i.
    pub fn tau(&self) -> Self {
        let p = self.prime();
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, a)| a.mul(&CycNum::rho_pow(p, -(i as i64))))
            .collect();
        CycPoly { coeffs }
    }

    /// The automorphism tau': x -> rho x, the inverse of tau.
    pub fn tau_prime(&self) -> Self {
        let p = self.prime();
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, a)| a.mul(&CycNum::rho_pow(p, i as i64)))
            .collect();
        CycPoly { coeffs }
    }

    /// Substitutes x -> rho^k x (coefficient a_i picks up rho^(ik)).
    pub fn twist(&self, k: i64) -> Self {
        let p = self.prime();
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, a)| a.mul(&CycNum::rho_pow(p, k * i as i64)))
            .collect();
        CycPoly { coeffs }
    }

    /// Cyclic shift of the coefficient vector: (a_0,...,a_{p-1}) ->
    /// (a_{p-1},a_0,...,a_{p-2}), i.e. multiplication by x.
    pub fn shift(&self) -> Self {
        let p = self.prime();
        let mut coeffs = Vec::with_capacity(p);
        coeffs.push(self.coeffs[p - 1].clone());
        coeffs.extend_from_slice(&self.coeffs[..p - 1]);
        CycPoly { coeffs }
    }

    /// The ring norm n(f) = prod_{i=0}^{p-1} tau^i(f), returned as the
    /// scalar it collapses to.
    pub fn ring_norm(&self) -> Result<CycNum> {
        let p = self.prime();
        let mut prod = self.clone();
        let mut t = self.clone();
        for _ in 1..p {
            t = t.tau();
            prod = prod.mul(&t);
        }
        for c in &prod.coeffs[1..] {
            if !c.is_zero() {
                return Err(Error::Internal(
                    "ring norm product has a nonconstant coefficient".into(),
                ));
            }
        }
        Ok(prod.coeffs[0].clone())
    }

    /// Evaluates at a point of K.
    pub fn eval(&self, at: &CycNum) -> CycNum {
        let p = self.prime();
        let mut acc = CycNum::zero(p);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(at).add(c);
        }
        acc
    }

    /// The evaluation isomorphism Theta(g) = (g(1), g(rho), ..., g(rho^(p-1))).
    pub fn theta(&self) -> Vec<CycNum> {
        let p = self.prime();
        (0..p)
            .map(|j| self.eval(&CycNum::rho_pow(p, j as i64)))
            .collect()
    }

    /// Inverse of Theta: a_i = (1/p) sum_j rho^(-ij) v_j.
    pub fn theta_inv(p: usize, values: &[CycNum]) -> Result<Self> {
        check_prime(p)?;
        if values.len() != p {
            return Err(Error::Shape(format!(
                "expected {} values, got {}",
                p,
                values.len()
            )));
        }
        let inv_p = CycNum::from_int(p, p as i64).inv()?;
        let coeffs = (0..p)
            .map(|i| {
                let mut acc = CycNum::zero(p);
                for (j, v) in values.iter().enumerate() {
                    acc = acc.add(&v.mul(&CycNum::rho_pow(p, -((i * j) as i64))));
                }
                acc.mul(&inv_p)
            })
            .collect();
        Self::new(p, coeffs)
    }

    /// True iff every Theta component is nonzero, i.e. f is a unit.
    pub fn is_invertible(&self) -> bool {
        self.theta().iter().all(|v| !v.is_zero())
    }

    /// Ring inverse, computed through Theta by componentwise inversion.
    pub fn inv(&self) -> Result<Self> {
        let vals = self.theta();
        let mut inv_vals = Vec::with_capacity(vals.len());
        for v in &vals {
            inv_vals.push(v.inv().map_err(|_| Error::NotInvertible)?);
        }
        Self::theta_inv(self.prime(), &inv_vals)
    }

    /// Psi(g) = g / tau(g).  The output has ring norm 1.
    pub fn psi(&self) -> Result<Self> {
        if !self.is_invertible() {
            return Err(Error::NotInvertible);
        }
        Ok(self.mul(&self.tau().inv()?))
    }

    /// Psi'(g) = g / tau'(g).
    pub fn psi_prime(&self) -> Result<Self> {
        if !self.is_invertible() {
            return Err(Error::NotInvertible);
        }
        Ok(self.mul(&self.tau_prime().inv()?))
    }
}

impl fmt::Debug for CycPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for CycPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "({})", c)?,
                1 => write!(f, "({})*x", c)?,
                _ => write!(f, "({})*x^{}", c, i)?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample::{random_invertible_poly, random_poly, rng_from};
    use rand::Rng;

    #[test]
    fn cyclic_reduction() {
        for p in [3, 5, 7] {
            let x = CycPoly::monomial(p, 1, CycNum::one(p));
            let top = CycPoly::monomial(p, p - 1, CycNum::one(p));
            assert_eq!(top.mul(&x), CycPoly::one(p));
        }
    }

    #[test]
    fn product_example_p3() {
        // (1 + x)(1 + x^2) = 1 + x + x^2 + x^3 = 2 + x + x^2
        let f = CycPoly::from_ints(3, &[1, 1, 0]).unwrap();
        let g = CycPoly::from_ints(3, &[1, 0, 1]).unwrap();
        assert_eq!(f.mul(&g), CycPoly::from_ints(3, &[2, 1, 1]).unwrap());
    }

    #[test]
    fn tau_on_x() {
        let p = 5;
        let x = CycPoly::monomial(p, 1, CycNum::one(p));
        let expected = CycPoly::monomial(p, 1, CycNum::rho_pow(p, -1));
        assert_eq!(x.tau(), expected);
        let c = CycPoly::constant(CycNum::from_int(p, 7));
        assert_eq!(c.tau(), c);
    }

    #[test]
    fn tau_order_p_and_inverse() {
        let mut rng = rng_from(11);
        for p in [3, 5, 7] {
            let f = random_poly(p, &mut rng);
            let mut g = f.clone();
            for _ in 0..p {
                g = g.tau();
            }
            assert_eq!(g, f);
            assert_eq!(f.tau().tau_prime(), f);
        }
    }

    #[test]
    fn ring_norm_values() {
        for p in [3, 5, 7] {
            let x = CycPoly::monomial(p, 1, CycNum::one(p));
            assert_eq!(x.ring_norm().unwrap(), CycNum::one(p));
            let c = CycPoly::constant(CycNum::from_int(p, 3));
            assert_eq!(
                c.ring_norm().unwrap(),
                CycNum::from_int(p, 3).pow(p as i64).unwrap()
            );
        }
        // p = 3: n(1 + x) = f(1) f(rho) f(rho^2) = 2 (1 + rho)(1 + rho^2) = 2
        let f = CycPoly::from_ints(3, &[1, 1, 0]).unwrap();
        assert_eq!(f.ring_norm().unwrap(), CycNum::from_int(3, 2));
    }

    #[test]
    fn theta_basics() {
        let p = 5;
        assert_eq!(CycPoly::one(p).theta(), vec![CycNum::one(p); p]);
        let x = CycPoly::monomial(p, 1, CycNum::one(p));
        let vals = x.theta();
        for (j, v) in vals.iter().enumerate() {
            assert_eq!(*v, CycNum::rho_pow(p, j as i64));
        }
    }

    #[test]
    fn theta_round_trip_random() {
        let mut rng = rng_from(7);
        for p in [3, 5, 7] {
            for _ in 0..20 {
                let f = random_poly(p, &mut rng);
                let back = CycPoly::theta_inv(p, &f.theta()).unwrap();
                assert_eq!(back, f);
            }
        }
    }

    #[test]
    fn invertibility_edge_cases() {
        let p = 5;
        let all_ones = CycPoly::from_ints(p, &[1; 5]).unwrap();
        assert!(!all_ones.is_invertible());
        let x = CycPoly::monomial(p, 1, CycNum::one(p));
        assert!(x.is_invertible());
        let x_minus_1 = CycPoly::from_ints(p, &[-1, 1, 0, 0, 0]).unwrap();
        assert!(!x_minus_1.is_invertible());
        assert!(matches!(all_ones.inv(), Err(Error::NotInvertible)));
        assert!(matches!(all_ones.psi(), Err(Error::NotInvertible)));
    }

    #[test]
    fn psi_of_x_is_rho() {
        for p in [3, 5, 7] {
            let x = CycPoly::monomial(p, 1, CycNum::one(p));
            assert_eq!(x.psi().unwrap(), CycPoly::constant(CycNum::rho(p)));
            let c = CycPoly::constant(CycNum::from_int(p, 4));
            assert_eq!(c.psi().unwrap(), CycPoly::one(p));
        }
    }

    #[test]
    fn psi_norm_one_p3_example() {
        let g = CycPoly::from_ints(3, &[1, 2, 0]).unwrap();
        let h = g.psi().unwrap();
        assert_eq!(h, g.mul(&g.tau().inv().unwrap()));
        assert_eq!(h.ring_norm().unwrap(), CycNum::one(3));
    }

    #[test]
    fn theta_intertwines_products() {
        let mut rng = rng_from(23);
        for p in [3, 5, 7] {
            for _ in 0..10 {
                let f = random_poly(p, &mut rng);
                let g = random_poly(p, &mut rng);
                let lhs = f.mul(&g).theta();
                let rhs: Vec<_> = f
                    .theta()
                    .iter()
                    .zip(g.theta().iter())
                    .map(|(a, b)| a.mul(b))
                    .collect();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn psi_fiber_property() {
        let mut rng = rng_from(31);
        for p in [3, 5, 7] {
            for _ in 0..10 {
                let g = random_invertible_poly(p, &mut rng);
                let c = CycNum::from_int(p, rng.gen_range(1..=9));
                let i = rng.gen_range(0..p);
                let shifted = CycPoly::monomial(p, i, c).mul(&g);
                let lhs = shifted.psi().unwrap();
                let rhs = g.psi().unwrap().scale(&CycNum::rho_pow(p, i as i64));
                assert_eq!(lhs, rhs);
            }
        }
    }
}
