//! The symbol algebra (x,y)_p over K = Q(rho_p) by structure constants:
//! generators gamma, delta with gamma^p = x, delta^p = y and
//! gamma delta = rho delta gamma.  Elements live on the basis
//! gamma^i delta^j, so multiplication is the single rule
//! delta^j gamma^k = rho^{-jk} gamma^k delta^j plus exponent wrap.

use serde::{Deserialize, Serialize};

use crate::cyclotomic::{check_prime, CycNum};
use crate::cycpoly::CycPoly;
use crate::error::{Error, Result};
use crate::linalg::Mat;

/// The pair of nonzero slots (x, y) of the algebra (x,y)_p.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "SymParamsRaw", into = "SymParamsRaw")]
pub struct SymParams {
    p: usize,
    x: CycNum,
    y: CycNum,
}

#[derive(Serialize, Deserialize)]
struct SymParamsRaw {
    p: usize,
    x: CycNum,
    y: CycNum,
}

impl From<SymParams> for SymParamsRaw {
    fn from(v: SymParams) -> Self {
        SymParamsRaw { p: v.p, x: v.x, y: v.y }
    }
}

impl TryFrom<SymParamsRaw> for SymParams {
    type Error = Error;
    fn try_from(v: SymParamsRaw) -> Result<Self> {
        SymParams::new(v.p, v.x, v.y)
    }
}

impl SymParams {
    pub fn new(p: usize, x: CycNum, y: CycNum) -> Result<Self> {
        check_prime(p)?;
        if x.is_zero() || y.is_zero() {
            return Err(Error::ZeroInversion);
        }
        Ok(SymParams { p, x, y })
    }

    pub fn prime(&self) -> usize {
        self.p
    }

    pub fn x(&self) -> &CycNum {
        &self.x
    }

    pub fn y(&self) -> &CycNum {
        &self.y
    }
}

/// Element of (x,y)_p: coefficient grid c[i][j] on gamma^i delta^j.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SymElem {
    #[serde(flatten)]
    params: SymParams,
    coeffs: Vec<Vec<CycNum>>,
}

impl SymElem {
    pub fn new(params: SymParams, coeffs: Vec<Vec<CycNum>>) -> Result<Self> {
        let p = params.p;
        if coeffs.len() != p || coeffs.iter().any(|row| row.len() != p) {
            return Err(Error::Shape(format!("coefficient grid must be {p}x{p}")));
        }
        Ok(SymElem { params, coeffs })
    }

    pub fn zero(params: &SymParams) -> Self {
        let p = params.p;
        SymElem {
            params: params.clone(),
            coeffs: vec![vec![CycNum::zero(p); p]; p],
        }
    }

    /// c * gamma^i delta^j.
    pub fn monomial(params: &SymParams, i: usize, j: usize, c: CycNum) -> Result<Self> {
        let p = params.p;
        if i >= p || j >= p {
            return Err(Error::Shape(format!("basis index ({i},{j}) out of range")));
        }
        let mut e = Self::zero(params);
        e.coeffs[i][j] = c;
        Ok(e)
    }

    pub fn one(params: &SymParams) -> Self {
        let p = params.p;
        Self::monomial(params, 0, 0, CycNum::one(p)).expect("(0,0) is in range")
    }

    pub fn scalar(params: &SymParams, c: CycNum) -> Self {
        Self::monomial(params, 0, 0, c).expect("(0,0) is in range")
    }

    pub fn gamma(params: &SymParams) -> Self {
        Self::monomial(params, 1, 0, CycNum::one(params.p)).expect("(1,0) is in range")
    }

    pub fn delta(params: &SymParams) -> Self {
        Self::monomial(params, 0, 1, CycNum::one(params.p)).expect("(0,1) is in range")
    }

    pub fn params(&self) -> &SymParams {
        &self.params
    }

    pub fn prime(&self) -> usize {
        self.params.p
    }

    pub fn coeff(&self, i: usize, j: usize) -> &CycNum {
        &self.coeffs[i][j]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().flatten().all(CycNum::is_zero)
    }

    /// Supported at (0,0) only.
    pub fn is_scalar(&self) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().enumerate().map(move |(j, c)| (i, j, c)))
            .all(|(i, j, c)| (i, j) == (0, 0) || c.is_zero())
    }

    /// The (0,0) coefficient, failing unless the element is scalar.
    pub fn as_scalar(&self) -> Result<CycNum> {
        if !self.is_scalar() {
            return Err(Error::NotScalar);
        }
        Ok(self.coeffs[0][0].clone())
    }

    fn check_params(&self, other: &Self) -> Result<()> {
        if self.params != other.params {
            return Err(Error::ParamMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_params(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(r, s)| r.iter().zip(s).map(|(a, b)| a.add(b)).collect())
            .collect();
        Ok(SymElem { params: self.params.clone(), coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_params(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(r, s)| r.iter().zip(s).map(|(a, b)| a.sub(b)).collect())
            .collect();
        Ok(SymElem { params: self.params.clone(), coeffs })
    }

    pub fn scale(&self, c: &CycNum) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .map(|row| row.iter().map(|a| a.mul(c)).collect())
            .collect();
        SymElem { params: self.params.clone(), coeffs }
    }

    /// delta^j gamma^k = rho^{-jk} gamma^k delta^j; exponent wrap past p
    /// multiplies by x (gamma slot) or y (delta slot) — the only place
    /// the parameters enter.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_params(other)?;
        let p = self.params.p;
        let mut out = Self::zero(&self.params);
        for i in 0..p {
            for j in 0..p {
                let a = &self.coeffs[i][j];
                if a.is_zero() {
                    continue;
                }
                for k in 0..p {
                    for l in 0..p {
                        let b = &other.coeffs[k][l];
                        if b.is_zero() {
                            continue;
                        }
                        let mut c = a.mul(b).mul(&CycNum::rho_pow(
                            p,
                            -((j * k) as i64),
                        ));
                        if i + k >= p {
                            c = c.mul(&self.params.x);
                        }
                        if j + l >= p {
                            c = c.mul(&self.params.y);
                        }
                        let (gi, dj) = ((i + k) % p, (j + l) % p);
                        out.coeffs[gi][dj] = out.coeffs[gi][dj].add(&c);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, mut n: usize) -> Result<Self> {
        let mut base = self.clone();
        let mut acc = Self::one(&self.params);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Reduced trace: basis elements other than 1 are traceless, so
    /// tr = p * c_00.
    pub fn trace(&self) -> CycNum {
        self.coeffs[0][0].scale_int(self.params.p as i64)
    }

    /// Left multiplication by self on the p^2-dimensional coefficient
    /// space, basis gamma^k delta^l flattened as k*p + l.
    pub fn regular_rep(&self) -> Mat {
        let p = self.params.p;
        let mut m = Mat::zero(p, p * p, p * p);
        for k in 0..p {
            for l in 0..p {
                let basis = Self::monomial(&self.params, k, l, CycNum::one(p))
                    .expect("indices are in range");
                let prod = self.mul(&basis).expect("same params");
                for i in 0..p {
                    for j in 0..p {
                        m.set(i * p + j, k * p + l, prod.coeffs[i][j].clone());
                    }
                }
            }
        }
        m
    }

    pub fn is_invertible(&self) -> bool {
        self.regular_rep()
            .det()
            .map(|d| !d.is_zero())
            .unwrap_or(false)
    }

    /// Two-sided inverse, through the regular representation.
    pub fn inv(&self) -> Result<Self> {
        let p = self.params.p;
        let mut e = vec![CycNum::zero(p); p * p];
        e[0] = CycNum::one(p);
        let v = self
            .regular_rep()
            .solve(&e)
            .ok_or(Error::ZeroInversion)?;
        let coeffs = (0..p)
            .map(|i| (0..p).map(|j| v[i * p + j].clone()).collect())
            .collect();
        Ok(SymElem { params: self.params.clone(), coeffs })
    }
}

/// f evaluated at an algebra element; coefficients of f are scalars.
pub fn eval_poly_sym(f: &CycPoly, a: &SymElem) -> Result<SymElem> {
    if f.prime() != a.prime() {
        return Err(Error::ParamMismatch);
    }
    // Horner from the top coefficient.
    let mut acc = SymElem::zero(a.params());
    for c in f.coeffs().iter().rev() {
        acc = acc.mul(a)?.add(&SymElem::scalar(a.params(), c.clone()))?;
    }
    Ok(acc)
}

/// A skew-commuting pair inside the symbol algebra: ab = rho ba.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SymPair {
    pub a: SymElem,
    pub b: SymElem,
}

impl SymPair {
    pub fn new(a: SymElem, b: SymElem) -> Result<Self> {
        if a.params() != b.params() {
            return Err(Error::ParamMismatch);
        }
        let pair = SymPair { a, b };
        if !pair.skew_commutes()? {
            return Err(Error::DegeneratePair);
        }
        Ok(pair)
    }

    /// The generator pair (gamma, delta).
    pub fn standard(params: &SymParams) -> Self {
        SymPair {
            a: SymElem::gamma(params),
            b: SymElem::delta(params),
        }
    }

    pub fn skew_commutes(&self) -> Result<bool> {
        let p = self.a.prime();
        let lhs = self.a.mul(&self.b)?;
        let rhs = self.b.mul(&self.a)?.scale(&CycNum::rho(p));
        Ok(lhs == rhs)
    }
}

/// (a, b) -> (a, f(a) b); the left slot is untouched.
pub fn slot_move_t(q: &SymPair, f: &CycPoly) -> Result<SymPair> {
    let fa = eval_poly_sym(f, &q.a)?;
    if !fa.is_invertible() {
        return Err(Error::SlotSingular);
    }
    Ok(SymPair {
        a: q.a.clone(),
        b: fa.mul(&q.b)?,
    })
}

/// (a, b) -> (f(b) a, b); the right slot is untouched.
pub fn slot_move_s(q: &SymPair, f: &CycPoly) -> Result<SymPair> {
    let fb = eval_poly_sym(f, &q.b)?;
    if !fb.is_invertible() {
        return Err(Error::SlotSingular);
    }
    Ok(SymPair {
        a: fb.mul(&q.a)?,
        b: q.b.clone(),
    })
}

/// The norm scalar N = prod_{i=0}^{p-1} f(rho^i a), governing how the
/// p-th power of the partner slot changes: (f(a) b)^p = N * b^p.
pub fn slot_power_scalar(a: &SymElem, f: &CycPoly) -> Result<CycNum> {
    let p = a.prime();
    let mut prod = SymElem::one(a.params());
    for i in 0..p {
        let twisted = a.scale(&CycNum::rho_pow(p, i as i64));
        prod = prod.mul(&eval_poly_sym(f, &twisted)?)?;
    }
    prod.as_scalar()
}
