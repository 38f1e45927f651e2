//! The norm-one section Psi(g) = g / tau(g): its ring norm is 1, it
//! scales monomial twists into powers of rho, and the pair-level torus
//! action projects onto the slot move with parameter Psi(g).

use skewpairs::cycpoly::CycPoly;
use skewpairs::pairs::{act_t_on_pair_conj, phi, slot_t_on_pair};
use skewpairs::sample::{random_basis, random_invertible_poly, rng_from};
use skewpairs::CycNum;

fn main() {
    let p = 5;
    let mut rng = rng_from(4);
    let g = random_invertible_poly(p, &mut rng);
    let psi = g.psi().unwrap();
    println!("p = {p}");
    println!("n(Psi(g)) = 1: {}", psi.ring_norm().unwrap().is_one());

    let c = CycNum::from_int(p, 7);
    let shifted = CycPoly::monomial(p, 2, c).mul(&g);
    println!(
        "Psi(c x^2 g) = rho^2 Psi(g): {}",
        shifted.psi().unwrap() == psi.scale(&CycNum::rho_pow(p, 2))
    );

    // toral move on the pair vs slot move with Psi(g), compared in the
    // bihomogeneous quotient
    let q = phi(&random_basis(p, &mut rng).unwrap()).unwrap();
    let hat = act_t_on_pair_conj(&q, &g).unwrap();
    let slot = slot_t_on_pair(q.as_skew(), &psi).unwrap();
    println!("toral and slot projections agree: {}", hat.as_skew().eq_bihomogeneous(&slot));
}
