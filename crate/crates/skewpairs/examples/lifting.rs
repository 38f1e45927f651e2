//! Square-zero lifting: perturb an exact unit pair by arbitrary eps
//! parts, then repair the eps parts so the skew relation and the unit
//! conditions hold exactly over K[eps]/(eps^2).

use skewpairs::lifting::{lift_unit_pair, LiftProblem};
use skewpairs::pairs::phi;
use skewpairs::sample::{random_basis, random_mat, rng_from};
use skewpairs::{CycNum, DualMat};

fn main() {
    let p = 5;
    let mut rng = rng_from(3);
    let q = phi(&random_basis(p, &mut rng).unwrap()).unwrap();
    let prob = LiftProblem::new(
        DualMat::new(q.alpha().clone(), random_mat(p, p, &mut rng)).unwrap(),
        DualMat::new(q.beta().clone(), random_mat(p, p, &mut rng)).unwrap(),
    )
    .unwrap();

    println!("p = {p}");
    println!("defect is pure eps: {}", prob.defect().body.is_zero());
    println!("defect is nonzero:  {}", !prob.defect().is_zero());

    let (a, b) = lift_unit_pair(&prob).expect("lift exists");
    let rho = CycNum::rho(p);
    let residual = a.mul(&b).sub(&b.mul(&a).scale(&rho));
    println!("lifted skew residual is zero: {}", residual.is_zero());
    println!("alpha'^p = I: {}", a.pow(p) == DualMat::identity(p, p));
    println!("beta'^p  = I: {}", b.pow(p) == DualMat::identity(p, p));
    println!("bodies untouched: {}", a.body == *q.alpha() && b.body == *q.beta());
}
