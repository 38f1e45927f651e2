//! Square-zero lifting: given a pair over K[eps]/(eps^2) whose bodies
//! skew-commute exactly, adjust the eps parts so the whole pair does.
//! The linear system is the map L(x,y) = b^-1 x b - x + y - a^-1 y a,
//! whose image is exactly the trace-zero matrices; the defect of any
//! body-exact perturbation normalizes into that image.

use serde::{Deserialize, Serialize};

use crate::cyclotomic::{check_prime, CycNum};
use crate::error::{Error, Result};
use crate::linalg::{DualMat, Mat};
use crate::pairs::SkewPair;

/// L as an explicit p^2 x 2p^2 matrix: the first p^2 columns act on x,
/// the rest on y, all in row-major flattening.
pub fn phi_adjust_matrix(q: &SkewPair) -> Result<Mat> {
    let p = q.alpha.prime();
    let a_inv = q.alpha.inv()?;
    let b = &q.beta;
    let b_inv = b.inv()?;
    let n = p * p;
    let mut m = Mat::zero(p, n, 2 * n);
    for i in 0..p {
        for j in 0..p {
            let mut e = Mat::zero(p, p, p);
            e.set(i, j, CycNum::one(p));
            let lx = b_inv.mul(&e).mul(b).sub(&e);
            let ly = e.sub(&a_inv.mul(&e).mul(&q.alpha));
            let col = i * p + j;
            let (fx, fy) = (lx.flatten(), ly.flatten());
            for r in 0..n {
                m.set(r, col, fx[r].clone());
                m.set(r, n + col, fy[r].clone());
            }
        }
    }
    Ok(m)
}

/// A pair over the dual numbers whose bodies form an exact skew pair;
/// the whole-pair defect alpha*beta - rho*beta*alpha is then pure eps
/// and, after normalization by (alpha*beta)^-1, trace-free.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "LiftProblemRaw", into = "LiftProblemRaw")]
pub struct LiftProblem {
    alpha0: DualMat,
    beta0: DualMat,
}

#[derive(Serialize, Deserialize)]
struct LiftProblemRaw {
    alpha0: DualMat,
    beta0: DualMat,
}

impl From<LiftProblem> for LiftProblemRaw {
    fn from(v: LiftProblem) -> Self {
        LiftProblemRaw { alpha0: v.alpha0, beta0: v.beta0 }
    }
}

impl TryFrom<LiftProblemRaw> for LiftProblem {
    type Error = Error;
    fn try_from(v: LiftProblemRaw) -> Result<Self> {
        LiftProblem::new(v.alpha0, v.beta0)
    }
}

impl LiftProblem {
    pub fn new(alpha0: DualMat, beta0: DualMat) -> Result<Self> {
        // validates invertibility and the exact body relation
        SkewPair::new(alpha0.body.clone(), beta0.body.clone())?;
        Ok(LiftProblem { alpha0, beta0 })
    }

    pub fn prime(&self) -> usize {
        self.alpha0.body.prime()
    }

    pub fn alpha0(&self) -> &DualMat {
        &self.alpha0
    }

    pub fn beta0(&self) -> &DualMat {
        &self.beta0
    }

    pub fn bodies(&self) -> Result<SkewPair> {
        SkewPair::new(self.alpha0.body.clone(), self.beta0.body.clone())
    }

    /// alpha*beta - rho*beta*alpha over the dual numbers; the body
    /// vanishes by the invariant.
    pub fn defect(&self) -> DualMat {
        let p = self.prime();
        let ab = self.alpha0.mul(&self.beta0);
        let ba = self.beta0.mul(&self.alpha0).scale(&CycNum::rho(p));
        ab.sub(&ba)
    }
}

fn skew_holds_dual(alpha: &DualMat, beta: &DualMat) -> bool {
    let p = alpha.body.prime();
    alpha
        .mul(beta)
        .sub(&beta.mul(alpha).scale(&CycNum::rho(p)))
        .is_zero()
}

/// Returns alpha' = alpha0 (1 + eps x), beta' = beta0 (1 + eps y) with
/// alpha' beta' = rho beta' alpha' exactly; bodies are untouched and a
/// zero defect returns the inputs unchanged.
///
/// The system L(x, y) = -(ab)^-1 Z is solved in closed form: the
/// monomials a^i b^j diagonalize L with eigenvalues rho^i - 1 on the x
/// side and 1 - rho^-j on the y side, and coefficients in that basis
/// extract exactly via the trace pairing tr(m (a^i b^j)^-1) = p c_ij
/// (every a^i b^j with (i,j) != (0,0) is traceless).
pub fn lift_skew_pair(prob: &LiftProblem) -> Result<(DualMat, DualMat)> {
    let p = prob.prime();
    let defect = prob.defect();
    debug_assert!(defect.body.is_zero());
    if defect.is_zero() {
        return Ok((prob.alpha0.clone(), prob.beta0.clone()));
    }
    let bodies = prob.bodies()?;
    let a_inv = bodies.alpha.inv()?;
    let b_inv = bodies.beta.inv()?;
    // (ab)^-1 Z, negated: the target eps-part equation reads L(x,y) = rhs
    let rhs = b_inv.mul(&a_inv).mul(&defect.slope).neg();

    let pow_table = |m: &Mat| -> Vec<Mat> {
        let mut pows = vec![Mat::identity(p, p)];
        for _ in 1..p {
            pows.push(pows.last().expect("nonempty").mul(m));
        }
        pows
    };
    let a_pows = pow_table(&bodies.alpha);
    let b_pows = pow_table(&bodies.beta);
    let ainv_pows = pow_table(&a_inv);
    let binv_pows = pow_table(&b_inv);

    let inv_p = CycNum::from_int(p, p as i64).inv()?;
    let mut x = Mat::zero(p, p, p);
    let mut y = Mat::zero(p, p, p);
    for i in 0..p {
        for j in 0..p {
            // (a^i b^j)^-1 = b^-j a^-i
            let c = rhs
                .mul(&binv_pows[j])
                .mul(&ainv_pows[i])
                .trace()
                .mul(&inv_p);
            if (i, j) == (0, 0) {
                // c_00 = tr(rhs)/p; nonzero means no solution exists
                if !c.is_zero() {
                    return Err(Error::NoSolution);
                }
                continue;
            }
            let monomial = a_pows[i].mul(&b_pows[j]);
            if i != 0 {
                let eig = CycNum::rho_pow(p, i as i64).sub(&CycNum::one(p));
                x = x.add(&monomial.scale(&c.mul(&eig.inv()?)));
            } else {
                let eig = CycNum::one(p).sub(&CycNum::rho_pow(p, -(j as i64)));
                y = y.add(&monomial.scale(&c.mul(&eig.inv()?)));
            }
        }
    }
    let alpha = prob
        .alpha0
        .mul(&DualMat::new(Mat::identity(p, p), x)?);
    let beta = prob.beta0.mul(&DualMat::new(Mat::identity(p, p), y)?);
    if !skew_holds_dual(&alpha, &beta) {
        return Err(Error::Internal("lift residual is nonzero".into()));
    }
    Ok((alpha, beta))
}

/// For unit bodies (alpha^p = beta^p = I): skew-lift, then divide each
/// leg by the p-th root (1 + eps s/p) of its p-th power 1 + eps s.  The
/// scalar division leaves the skew relation intact.
pub fn lift_unit_pair(prob: &LiftProblem) -> Result<(DualMat, DualMat)> {
    let p = prob.prime();
    let ident = Mat::identity(p, p);
    if prob.alpha0.body.pow(p) != ident || prob.beta0.body.pow(p) != ident {
        return Err(Error::DegeneratePair);
    }
    let (alpha, beta) = lift_skew_pair(prob)?;
    let fix = |m: &DualMat| -> Result<DualMat> {
        let power = m.pow(p);
        debug_assert_eq!(power.body, ident);
        let s = scalar_of(&power.slope)?;
        let inv_p = CycNum::from_int(p, p as i64).inv()?;
        // (1 + eps s/p)^-1 = 1 - eps s/p
        Ok(m.scale_dual(&CycNum::one(p), &s.mul(&inv_p).neg()))
    };
    let alpha = fix(&alpha)?;
    let beta = fix(&beta)?;
    if alpha.pow(p) != DualMat::identity(p, p)
        || beta.pow(p) != DualMat::identity(p, p)
        || !skew_holds_dual(&alpha, &beta)
    {
        return Err(Error::Internal("unit lift residual is nonzero".into()));
    }
    Ok((alpha, beta))
}

/// The scalar c with m = c I, or NotScalar.
fn scalar_of(m: &Mat) -> Result<CycNum> {
    let c = m.get(0, 0).clone();
    let scaled = Mat::identity(m.prime(), m.nrows()).scale(&c);
    if *m != scaled {
        return Err(Error::NotScalar);
    }
    Ok(c)
}

/// charpoly(alpha) = t^p - (the scalar alpha^p), with every middle
/// coefficient identically zero; likewise for beta.
pub fn charpoly_collapse_check(q: &SkewPair) -> Result<bool> {
    let p = q.alpha.prime();
    for m in [&q.alpha, &q.beta] {
        let c = match scalar_of(&m.pow(p)) {
            Ok(c) => c,
            Err(_) => return Ok(false),
        };
        let cp = m.charpoly()?;
        if cp[0] != c.neg() || !cp[p].is_one() {
            return Ok(false);
        }
        if (1..p).any(|k| !cp[k].is_zero()) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The (p-1)x(p-1) matrix (rho^{ij} - 1), 1 <= i,j <= p-1.
pub fn r1_matrix(p: usize) -> Result<Mat> {
    check_prime(p)?;
    Ok(Mat::from_fn(p, p - 1, p - 1, |i, j| {
        let ij = ((i + 1) * (j + 1)) as i64;
        CycNum::rho_pow(p, ij).sub(&CycNum::one(p))
    }))
}
