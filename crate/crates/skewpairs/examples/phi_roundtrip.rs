//! The basis/pair isomorphism: a projective basis A maps to the unit
//! skew pair (A diag(1,rho,...) A^-1, A shift A^-1) and back, exactly.

use skewpairs::pairs::{act_r, act_sigma, phi, phi_inverse};
use skewpairs::sample::{random_basis, rng_from};

fn main() {
    let p = 5;
    let mut rng = rng_from(1);
    let b = random_basis(p, &mut rng).expect("random basis");
    let q = phi(&b).expect("basis is invertible");

    println!("p = {p}");
    println!("skew relation alpha beta = rho beta alpha: {}", q.as_skew().skew_relation_holds());
    println!("round trip phi^-1(phi(A)) = A: {}", phi_inverse(&q).unwrap() == b);
    println!("round trip phi(phi^-1(q)) = q: {}", phi(&phi_inverse(&q).unwrap()).unwrap() == q);

    // the deck transformations sigma, r multiply one leg of the pair by rho
    let via_sigma = phi(&act_sigma(&b)).unwrap();
    let via_r = phi(&act_r(&b)).unwrap();
    println!("phi(sigma A) = (rho alpha, beta): {}", via_sigma == q.deck_sigma());
    println!("phi(r A) = (alpha, rho beta): {}", via_r == q.deck_r());
}
