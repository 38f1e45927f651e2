//! The two maximal tori and the exact change of coordinates between
//! them: R R' = pI, and conjugation by R turns the diagonal torus T
//! into the circulant torus S.

use skewpairs::pairs::{r_matrix, r_prime_matrix, s_matrix, t_matrix};
use skewpairs::sample::{random_invertible_poly, rng_from};
use skewpairs::{CycNum, Mat};

fn main() {
    for p in [3, 5, 7, 11, 13] {
        let prod = r_matrix(p).mul(&r_prime_matrix(p));
        let expect = Mat::identity(p, p).scale(&CycNum::from_int(p, p as i64));
        println!("p = {p:>2}: R R' = {p} I  -> {}", prod == expect);
    }

    let p = 5;
    let mut rng = rng_from(2);
    let r = r_matrix(p);
    let r_inv = r.inv().unwrap();
    let mut all = true;
    for _ in 0..20 {
        let g = random_invertible_poly(p, &mut rng);
        all &= r.mul(&t_matrix(&g)).mul(&r_inv) == s_matrix(&g);
    }
    println!("p = {p}: R T_g R^-1 = S_g on 20 random units -> {all}");
}
