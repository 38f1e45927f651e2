//! The orbit tower B_2 c ... c B_{p+1}: points generated from a base
//! basis by alternating right torus factors T, S, T, S, ..., and exact
//! certification of the orbit dimensions by Jacobian rank at seeded
//! rational parameter points.

use serde::{Deserialize, Serialize};

use crate::cyclotomic::{check_prime, CycNum};
use crate::cycpoly::CycPoly;
use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::pairs::{
    s_matrix, scale_matrix, sigma_matrix, t_matrix, Basis, SpanTracker,
};
use crate::sample::{child_seed, random_invertible_poly, random_poly, rng_from};

/// Orbit depth i: the point is base * T_{g_1} * S_{g_2} * ... with i
/// alternating factors, T first.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrbitSpec {
    base: Basis,
    depth: usize,
}

impl OrbitSpec {
    /// Depth runs from 2 to p+2; p+2 exists only to certify that the
    /// tower is stationary past p+1.
    pub fn new(base: Basis, depth: usize) -> Result<Self> {
        let p = base.prime();
        if depth < 2 || depth > p + 2 {
            return Err(Error::Shape(format!(
                "orbit depth {depth} outside 2..={}",
                p + 2
            )));
        }
        Ok(OrbitSpec { base, depth })
    }

    pub fn prime(&self) -> usize {
        self.base.prime()
    }

    pub fn base(&self) -> &Basis {
        &self.base
    }

    pub fn depth(&self) -> usize {
        self.depth
    }
}

/// Factor k of the alternation (0-indexed): T for even k, S for odd.
fn factor_matrix(k: usize, g: &CycPoly) -> Mat {
    if k % 2 == 0 {
        t_matrix(g)
    } else {
        s_matrix(g)
    }
}

/// Derivative of factor k with respect to coefficient c of its
/// parameter.  Both tori are linear in the coefficients, so this is the
/// factor evaluated at the monomial x^c: diag(Theta(x^c)) for T, the
/// shift power S^c for S.
fn factor_derivative(p: usize, k: usize, c: usize) -> Mat {
    let m = CycPoly::monomial(p, c, CycNum::one(p));
    factor_matrix(k, &m)
}

/// base * T_{g_1} * S_{g_2} * ...; every parameter must be a unit.
pub fn orbit_point(spec: &OrbitSpec, params: &[CycPoly]) -> Result<Basis> {
    if params.len() != spec.depth {
        return Err(Error::Shape(format!(
            "expected {} parameters, got {}",
            spec.depth,
            params.len()
        )));
    }
    let mut b = spec.base.clone();
    for (k, g) in params.iter().enumerate() {
        if !g.is_invertible() {
            return Err(Error::NotInvertible);
        }
        b = b.right_mul(&factor_matrix(k, g))?;
    }
    Ok(b)
}

/// Exact rank certificate for the orbit dimension at a seeded random
/// parameter point.  Valid iff rank = depth * (p - 1), capped at p^2 - 1.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct DimCertificate {
    pub p: usize,
    pub depth: usize,
    pub rank: usize,
    pub expected: usize,
    pub params: Vec<CycPoly>,
    pub seed: u64,
}

impl DimCertificate {
    pub fn is_valid(&self) -> bool {
        self.rank == self.expected
    }
}

/// The generic orbit dimension i(p-1), saturating at dim PGL_p = p^2 - 1.
pub fn expected_rank(p: usize, depth: usize) -> usize {
    (depth * (p - 1)).min(p * p - 1)
}

/// Differentiates the orbit map at a random parameter point, translates
/// every partial derivative back to the identity by the inverse of the
/// orbit point, appends the identity matrix for the projective scaling,
/// and returns (span rank) - 1.  Rank can only undershoot the generic
/// value at special points, never overshoot, so equality certifies the
/// orbit dimension; undershoot triggers a bounded reseed.
pub fn orbit_jacobian_rank(spec: &OrbitSpec, seed: u64) -> Result<DimCertificate> {
    let p = spec.prime();
    check_prime(p)?;
    let expected = expected_rank(p, spec.depth);
    let mut last = None;
    for attempt in 0..5u64 {
        let mut rng = rng_from(child_seed(seed, &format!("attempt{attempt}")));
        let params: Vec<CycPoly> = (0..spec.depth)
            .map(|_| random_invertible_poly(p, &mut rng))
            .collect();
        let point = match orbit_point(spec, &params) {
            Ok(b) => b,
            Err(_) => continue,
        };
        let point_inv = point.matrix().inv()?;

        // prefix[k] = base * F_1 ... F_k, suffix[k] = F_{k+1} ... F_i
        let factors: Vec<Mat> = params
            .iter()
            .enumerate()
            .map(|(k, g)| factor_matrix(k, g))
            .collect();
        let mut prefix = vec![spec.base.matrix().clone()];
        for f in &factors {
            prefix.push(prefix.last().expect("nonempty").mul(f));
        }
        let mut suffix = vec![Mat::identity(p, p)];
        for f in factors.iter().rev() {
            suffix.push(f.mul(suffix.last().expect("nonempty")));
        }
        suffix.reverse();

        let mut span = SpanTracker::new(p, p * p);
        span.insert(&Mat::identity(p, p).flatten());
        for k in 0..spec.depth {
            for c in 0..p {
                let d = factor_derivative(p, k, c);
                let partial = point_inv.mul(&prefix[k]).mul(&d).mul(&suffix[k + 1]);
                span.insert(&partial.flatten());
            }
        }
        let rank = span.dim() - 1;
        let cert = DimCertificate {
            p,
            depth: spec.depth,
            rank,
            expected,
            params,
            seed,
        };
        if cert.is_valid() {
            return Ok(cert);
        }
        last = Some(cert);
    }
    // Every attempt undershot: report the last certificate honestly.
    last.ok_or(Error::RetriesExhausted)
}

/// Exact matrix identities behind the stabilizer analysis:
/// r and sigma are torus members, conjugation by them twists torus
/// parameters by tau, and the T-fiber over a basis is the scalars.
pub fn stabilizer_identity_checks(p: usize, seed: u64) -> Result<bool> {
    check_prime(p)?;
    let r = scale_matrix(p);
    let sigma = sigma_matrix(p);
    // membership: r = T at g = x, sigma = S at z = x^{p-1}
    let x = CycPoly::monomial(p, 1, CycNum::one(p));
    if t_matrix(&x) != r {
        return Ok(false);
    }
    if s_matrix(&CycPoly::monomial(p, p - 1, CycNum::one(p))) != sigma {
        return Ok(false);
    }
    // r^p = I
    if r.pow(p) != Mat::identity(p, p) {
        return Ok(false);
    }
    // normalization: conjugation shifts the eigenvalue vector, i.e.
    // twists coefficients by tau
    let r_inv = r.inv()?;
    let sigma_inv = sigma.inv()?;
    let mut rng = rng_from(child_seed(seed, "stabilizer"));
    for _ in 0..20 {
        let z = random_poly(p, &mut rng);
        let tz = z.tau();
        if sigma_inv.mul(&t_matrix(&z)).mul(&sigma) != t_matrix(&tz) {
            return Ok(false);
        }
        if r_inv.mul(&s_matrix(&z)).mul(&r) != s_matrix(&tz) {
            return Ok(false);
        }
    }
    // fiber: T_g and T_g' agree projectively iff g'/g is a constant
    for _ in 0..20 {
        let g = random_invertible_poly(p, &mut rng);
        let c = crate::sample::random_nonzero_cyc(p, &mut rng);
        if !t_matrix(&g.scale(&c)).eq_projective(&t_matrix(&g)) {
            return Ok(false);
        }
        let h = random_invertible_poly(p, &mut rng);
        let ratio_constant = {
            let tg = g.theta();
            let th = h.theta();
            let r0 = th[0].mul(&tg[0].inv()?);
            (1..p).all(|j| th[j] == r0.mul(&tg[j]))
        };
        if t_matrix(&h).eq_projective(&t_matrix(&g)) != ratio_constant {
            return Ok(false);
        }
    }
    Ok(true)
}
