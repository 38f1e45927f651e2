//! Ordered bases, skew-commuting pairs, the isomorphism Phi between
//! them, the shift/scale symmetries sigma and r, and the two toral
//! actions realized by diagonal and circulant matrices.

use serde::{Deserialize, Serialize};

use crate::cyclotomic::{check_prime, CycNum};
use crate::cycpoly::CycPoly;
use crate::error::{Error, Result};
use crate::linalg::Mat;

/// diag(1, rho, ..., rho^(p-1)): the matrix of the standard alpha and
/// of the scale symmetry r.
pub fn scale_matrix(p: usize) -> Mat {
    let entries: Vec<CycNum> = (0..p).map(|i| CycNum::rho_pow(p, i as i64)).collect();
    Mat::diagonal(p, &entries)
}

/// The standard beta: beta(v_i) = v_{i+1}, i.e. the cyclic shift with
/// 1 in positions (i+1 mod p, i).
pub fn shift_endo_matrix(p: usize) -> Mat {
    Mat::from_fn(p, p, p, |i, j| {
        if i == (j + 1) % p {
            CycNum::one(p)
        } else {
            CycNum::zero(p)
        }
    })
}

/// The right-multiplication matrix of the shift action on bases:
/// sigma(A) = A sigma sends (v_0,...,v_{p-1}) to (v_{p-1},v_0,...,v_{p-2}).
/// It has 1's in positions (i, i+1) and (p-1, 0).
pub fn sigma_matrix(p: usize) -> Mat {
    shift_endo_matrix(p).transpose()
}

/// R = (rho^{-ij}), rows and columns indexed 0..p-1.
pub fn r_matrix(p: usize) -> Mat {
    Mat::from_fn(p, p, p, |i, j| CycNum::rho_pow(p, -((i * j) as i64)))
}

/// R' = (rho^{ij}); satisfies R R' = pI.
pub fn r_prime_matrix(p: usize) -> Mat {
    Mat::from_fn(p, p, p, |i, j| CycNum::rho_pow(p, (i * j) as i64))
}

/// Evaluates f at a square matrix by Horner's rule.
pub fn eval_poly_mat(f: &CycPoly, m: &Mat) -> Mat {
    let p = f.prime();
    let n = m.nrows();
    let mut acc = Mat::zero(p, n, n);
    for c in f.coeffs().iter().rev() {
        acc = m.mul(&acc).add(&Mat::identity(p, n).scale(c));
    }
    acc
}

/// The diagonal torus element T_g = diag(Theta(g)).
pub fn t_matrix(g: &CycPoly) -> Mat {
    Mat::diagonal(g.prime(), &g.theta())
}

/// The circulant torus element S_z: column j is the coefficient vector
/// of g shifted cyclically by j, matching g(beta)(v_i) = sum_j z_j v_{i+j}.
pub fn s_matrix(g: &CycPoly) -> Mat {
    let p = g.prime();
    let z = g.coeffs();
    Mat::from_fn(p, p, p, |i, j| z[(i + p - j) % p].clone())
}

/// An ordered basis of V, understood projectively (scaled by K^*).
/// The canonical representative scales the first nonzero entry of
/// column 0 to 1.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Basis {
    matrix: Mat,
}

impl Basis {
    pub fn new(matrix: Mat) -> Result<Self> {
        check_prime(matrix.prime())?;
        if !matrix.is_square() || matrix.nrows() != matrix.prime() {
            return Err(Error::Shape("basis matrix must be p x p".into()));
        }
        if matrix.det()?.is_zero() {
            return Err(Error::Singular);
        }
        Ok(Basis {
            matrix: canonicalize_projective(&matrix),
        })
    }

    pub fn identity(p: usize) -> Self {
        Basis {
            matrix: Mat::identity(p, p),
        }
    }

    pub fn prime(&self) -> usize {
        self.matrix.prime()
    }

    pub fn matrix(&self) -> &Mat {
        &self.matrix
    }

    pub fn column(&self, j: usize) -> Vec<CycNum> {
        self.matrix.column(j)
    }

    /// Right-multiplication by an invertible matrix, reprojectivized.
    pub fn right_mul(&self, m: &Mat) -> Result<Self> {
        Basis::new(self.matrix.mul(m))
    }
}

/// Scales a matrix so the first nonzero entry of column 0 is 1.
fn canonicalize_projective(m: &Mat) -> Mat {
    for i in 0..m.nrows() {
        let e = m.get(i, 0);
        if !e.is_zero() {
            return m.scale(&e.inv().expect("entry is nonzero"));
        }
    }
    m.clone()
}

/// Scales a matrix by the inverse of its first nonzero entry in
/// row-major order; the bihomogeneous normalization of one leg of a
/// pair.
pub fn normalize_leg(m: &Mat) -> Mat {
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            let e = m.get(i, j);
            if !e.is_zero() {
                return m.scale(&e.inv().expect("entry is nonzero"));
            }
        }
    }
    m.clone()
}

/// A pair of invertible matrices with alpha beta = rho beta alpha.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SkewPair {
    pub alpha: Mat,
    pub beta: Mat,
}

impl SkewPair {
    pub fn new(alpha: Mat, beta: Mat) -> Result<Self> {
        let pair = SkewPair { alpha, beta };
        pair.validate()?;
        Ok(pair)
    }

    pub fn prime(&self) -> usize {
        self.alpha.prime()
    }

    fn validate(&self) -> Result<()> {
        let p = self.alpha.prime();
        check_prime(p)?;
        if !self.alpha.is_square()
            || self.alpha.nrows() != p
            || !self.beta.is_square()
            || self.beta.nrows() != p
        {
            return Err(Error::Shape("pair matrices must be p x p".into()));
        }
        if self.alpha.det()?.is_zero() || self.beta.det()?.is_zero() {
            return Err(Error::Singular);
        }
        if !self.skew_relation_holds() {
            return Err(Error::Internal("alpha beta != rho beta alpha".into()));
        }
        Ok(())
    }

    pub fn skew_relation_holds(&self) -> bool {
        let rho = CycNum::rho(self.prime());
        self.alpha.mul(&self.beta) == self.beta.mul(&self.alpha).scale(&rho)
    }

    /// Equality in the double projectivization: each leg normalized
    /// separately by its first nonzero entry.
    pub fn eq_bihomogeneous(&self, other: &Self) -> bool {
        normalize_leg(&self.alpha) == normalize_leg(&other.alpha)
            && normalize_leg(&self.beta) == normalize_leg(&other.beta)
    }
}

/// A skew pair with alpha^p = beta^p = I: a point of the unit-pair
/// variety.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "SkewPair", into = "SkewPair")]
pub struct UnitSkewPair {
    pair: SkewPair,
}

impl UnitSkewPair {
    pub fn new(alpha: Mat, beta: Mat) -> Result<Self> {
        SkewPair::new(alpha, beta).and_then(Self::from_pair)
    }

    pub fn from_pair(pair: SkewPair) -> Result<Self> {
        let p = pair.prime();
        let id = Mat::identity(p, p);
        if pair.alpha.pow(p) != id || pair.beta.pow(p) != id {
            return Err(Error::Internal("p-th powers are not the identity".into()));
        }
        Ok(UnitSkewPair { pair })
    }

    pub fn prime(&self) -> usize {
        self.pair.prime()
    }

    pub fn alpha(&self) -> &Mat {
        &self.pair.alpha
    }

    pub fn beta(&self) -> &Mat {
        &self.pair.beta
    }

    pub fn as_skew(&self) -> &SkewPair {
        &self.pair
    }

    /// The standard pair: alpha = diag(1,rho,...,rho^(p-1)), beta = shift.
    pub fn standard(p: usize) -> Result<Self> {
        check_prime(p)?;
        Self::new(scale_matrix(p), shift_endo_matrix(p))
    }

    /// Deck transformation sigma: alpha -> rho alpha.
    pub fn deck_sigma(&self) -> Self {
        let rho = CycNum::rho(self.prime());
        UnitSkewPair {
            pair: SkewPair {
                alpha: self.pair.alpha.scale(&rho),
                beta: self.pair.beta.clone(),
            },
        }
    }

    /// Deck transformation r: beta -> rho beta.
    pub fn deck_r(&self) -> Self {
        let rho = CycNum::rho(self.prime());
        UnitSkewPair {
            pair: SkewPair {
                alpha: self.pair.alpha.clone(),
                beta: self.pair.beta.scale(&rho),
            },
        }
    }
}

impl TryFrom<SkewPair> for UnitSkewPair {
    type Error = Error;
    fn try_from(pair: SkewPair) -> Result<Self> {
        UnitSkewPair::from_pair(pair)
    }
}

impl From<UnitSkewPair> for SkewPair {
    fn from(q: UnitSkewPair) -> SkewPair {
        q.pair
    }
}

/// Phi: basis -> unit pair, with alpha = A diag(1,rho,...) A^-1 and
/// beta = A sigma A^-1 (sigma the cyclic shift endomorphism).
pub fn phi(b: &Basis) -> Result<UnitSkewPair> {
    let p = b.prime();
    let a = b.matrix();
    let a_inv = a.inv()?;
    let alpha = a.mul(&scale_matrix(p)).mul(&a_inv);
    let beta = a.mul(&shift_endo_matrix(p)).mul(&a_inv);
    UnitSkewPair::new(alpha, beta)
}

/// Phi^-1: v_0 is the canonical kernel vector of (alpha - I) from the
/// deterministic elimination order, and v_i = beta^i(v_0).
pub fn phi_inverse(q: &UnitSkewPair) -> Result<Basis> {
    let p = q.prime();
    let eig = q.alpha().eigenspace(&CycNum::one(p));
    if eig.len() != 1 {
        return Err(Error::DegeneratePair);
    }
    let mut columns = vec![eig.into_iter().next().unwrap()];
    for i in 1..p {
        let prev = &columns[i - 1];
        columns.push(q.beta().mul_vec(prev));
    }
    let m = Mat::from_fn(p, p, p, |i, j| columns[j][i].clone());
    Basis::new(m)
}

/// The shift action on bases: (v_0,...,v_{p-1}) -> (v_{p-1},v_0,...).
pub fn act_sigma(b: &Basis) -> Basis {
    let m = b.matrix().mul(&sigma_matrix(b.prime()));
    Basis::new(m).expect("right multiplication by a permutation preserves invertibility")
}

/// The scale action on bases: v_i -> rho^i v_i.
pub fn act_r(b: &Basis) -> Basis {
    let m = b.matrix().mul(&scale_matrix(b.prime()));
    Basis::new(m).expect("right multiplication by an invertible diagonal")
}

/// The diagonal toral action on bases: A -> A T_{Theta(g)}.
pub fn torus_t(b: &Basis, g: &CycPoly) -> Result<Basis> {
    if !g.is_invertible() {
        return Err(Error::NotInvertible);
    }
    b.right_mul(&t_matrix(g))
}

/// The circulant toral action on bases: A -> A S_z.
pub fn torus_s(b: &Basis, g: &CycPoly) -> Result<Basis> {
    if !g.is_invertible() {
        return Err(Error::NotInvertible);
    }
    b.right_mul(&s_matrix(g))
}

/// The toral action on unit pairs: (alpha, beta) -> (alpha, Psi(g)(alpha) beta).
pub fn act_t_on_pair(q: &UnitSkewPair, g: &CycPoly) -> Result<UnitSkewPair> {
    let h = g.psi()?;
    let beta = eval_poly_mat(&h, q.alpha()).mul(q.beta());
    UnitSkewPair::new(q.alpha().clone(), beta)
}

/// The same action computed through the conjugation form
/// g(alpha) beta g(alpha)^-1; used as an independent cross-check.
pub fn act_t_on_pair_conj(q: &UnitSkewPair, g: &CycPoly) -> Result<UnitSkewPair> {
    if !g.is_invertible() {
        return Err(Error::NotInvertible);
    }
    let ga = eval_poly_mat(g, q.alpha());
    let beta = ga.mul(q.beta()).mul(&ga.inv()?);
    UnitSkewPair::new(q.alpha().clone(), beta)
}

/// The second toral action on unit pairs:
/// (alpha, beta) -> (Psi'(g)(beta) alpha, beta).
pub fn act_s_on_pair(q: &UnitSkewPair, g: &CycPoly) -> Result<UnitSkewPair> {
    let h = g.psi_prime()?;
    let alpha = eval_poly_mat(&h, q.beta()).mul(q.alpha());
    UnitSkewPair::new(alpha, q.beta().clone())
}

/// Conjugation form of the second action: g(beta) alpha g(beta)^-1.
pub fn act_s_on_pair_conj(q: &UnitSkewPair, g: &CycPoly) -> Result<UnitSkewPair> {
    if !g.is_invertible() {
        return Err(Error::NotInvertible);
    }
    let gb = eval_poly_mat(g, q.beta());
    let alpha = gb.mul(q.alpha()).mul(&gb.inv()?);
    UnitSkewPair::new(alpha, q.beta().clone())
}

/// The slot move on plain skew pairs: (alpha, beta) -> (alpha, f(alpha) beta).
pub fn slot_t_on_pair(q: &SkewPair, f: &CycPoly) -> Result<SkewPair> {
    let fa = eval_poly_mat(f, &q.alpha);
    if fa.det()?.is_zero() {
        return Err(Error::SlotSingular);
    }
    SkewPair::new(q.alpha.clone(), fa.mul(&q.beta))
}

/// (alpha, beta) -> (f(beta) alpha, beta).
pub fn slot_s_on_pair(q: &SkewPair, f: &CycPoly) -> Result<SkewPair> {
    let fb = eval_poly_mat(f, &q.beta);
    if fb.det()?.is_zero() {
        return Err(Error::SlotSingular);
    }
    SkewPair::new(fb.mul(&q.alpha), q.beta.clone())
}

/// The w-basis A R with w_j = sum_i rho^{-ij} v_i.
pub fn w_basis(b: &Basis) -> Basis {
    b.right_mul(&r_matrix(b.prime()))
        .expect("R is invertible, so A R is a basis")
}

/// Dimension of the Lie algebra generated by the diagonal matrices
/// together with their R-conjugates, closed under iterated brackets.
/// Spanning all p^2 dimensions certifies that the two tori generate
/// the full matrix group at the Lie-algebra level.
pub fn lie_closure_dimension(p: usize) -> Result<usize> {
    check_prime(p)?;
    let r = r_matrix(p);
    let r_inv = r.inv()?;
    let mut generators = Vec::new();
    for k in 0..p {
        let mut d = vec![CycNum::zero(p); p];
        d[k] = CycNum::one(p);
        let e = Mat::diagonal(p, &d);
        generators.push(e.clone());
        generators.push(r.mul(&e).mul(&r_inv));
    }

    let mut span = SpanTracker::new(p, p * p);
    let mut basis_elems: Vec<Mat> = Vec::new();
    for g in &generators {
        if span.insert(&g.flatten()) {
            basis_elems.push(g.clone());
        }
    }
    // Left-normed brackets of generators span the generated Lie algebra,
    // so closing under [generator, -] suffices.
    let mut frontier = basis_elems.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for m in &frontier {
            for g in &generators {
                let br = g.mul(m).sub(&m.mul(g));
                if span.insert(&br.flatten()) {
                    next.push(br);
                }
            }
        }
        frontier = next;
    }
    Ok(span.dim())
}

/// Exactly one nonzero entry in every row and every column.
pub fn is_monomial_matrix(m: &Mat) -> bool {
    let (nr, nc) = (m.nrows(), m.ncols());
    if nr != nc {
        return false;
    }
    let mut col_used = vec![false; nc];
    for i in 0..nr {
        let mut hits = 0;
        for j in 0..nc {
            if !m.get(i, j).is_zero() {
                hits += 1;
                if col_used[j] {
                    return false;
                }
                col_used[j] = true;
            }
        }
        if hits != 1 {
            return false;
        }
    }
    true
}

/// Does m conjugate diag(d) back into the diagonal matrices?
pub fn normalizes_diagonal(m: &Mat, d: &[CycNum]) -> Result<bool> {
    let p = m.prime();
    let conj = m.mul(&Mat::diagonal(p, d)).mul(&m.inv()?);
    Ok(conj.is_diagonal())
}

/// No w_j lies in a proper coordinate subspace: exhaustive over all
/// 2^p - 2 proper nonempty coordinate subsets.
pub fn w_columns_avoid_coordinate_subspaces(p: usize) -> Result<bool> {
    check_prime(p)?;
    let r = r_matrix(p);
    for mask in 1u32..((1u32 << p) - 1) {
        for j in 0..p {
            let contained = (0..p)
                .all(|i| mask & (1 << i) != 0 || r.get(i, j).is_zero());
            if contained {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// For non-monomial g, S_g maps no proper coordinate subspace onto a
/// coordinate subspace: the support union of any k columns exceeds k.
pub fn s_image_avoids_coordinate_subspaces(g: &CycPoly) -> bool {
    let p = g.prime();
    let s = s_matrix(g);
    let col_support: Vec<u32> = (0..p)
        .map(|j| {
            (0..p)
                .filter(|&i| !s.get(i, j).is_zero())
                .fold(0u32, |acc, i| acc | (1 << i))
        })
        .collect();
    for mask in 1u32..((1u32 << p) - 1) {
        let mut union = 0u32;
        for (j, sup) in col_support.iter().enumerate() {
            if mask & (1 << j) != 0 {
                union |= sup;
            }
        }
        if union.count_ones() <= mask.count_ones() {
            return false;
        }
    }
    true
}

/// Incremental row-reduction over K for span-dimension bookkeeping.
pub struct SpanTracker {
    p: usize,
    ncols: usize,
    /// Rows in echelon form, each normalized to a leading 1.
    rows: Vec<Vec<CycNum>>,
    /// Leading column of each row.
    leads: Vec<usize>,
}

impl SpanTracker {
    pub fn new(p: usize, ncols: usize) -> Self {
        SpanTracker {
            p,
            ncols,
            rows: Vec::new(),
            leads: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the current span; if a nonzero remainder is
    /// left, absorbs it and returns true.
    pub fn insert(&mut self, v: &[CycNum]) -> bool {
        debug_assert_eq!(v.len(), self.ncols);
        let mut v = v.to_vec();
        for (row, &lead) in self.rows.iter().zip(&self.leads) {
            if !v[lead].is_zero() {
                let factor = v[lead].clone();
                for (x, r) in v.iter_mut().zip(row) {
                    *x = x.sub(&factor.mul(r));
                }
            }
        }
        let Some(lead) = v.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let inv = v[lead].inv().expect("leading entry is nonzero");
        for x in v.iter_mut() {
            *x = x.mul(&inv);
        }
        let _ = self.p;
        self.rows.push(v);
        self.leads.push(lead);
        true
    }
}
