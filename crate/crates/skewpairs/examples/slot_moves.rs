//! Slot laws in the symbol algebra (x,y)_p: moving f across a slot
//! multiplies the partner's p-th power by the product scalar
//! N = prod_i f(rho^i gamma), computed here by two independent routes.

use skewpairs::cycpoly::CycPoly;
use skewpairs::symbol::{eval_poly_sym, slot_move_t, slot_power_scalar, SymElem, SymPair, SymParams};
use skewpairs::CycNum;

fn main() {
    let p = 3;
    let params = SymParams::new(p, CycNum::from_int(p, 2), CycNum::from_int(p, 3)).unwrap();
    let gamma = SymElem::gamma(&params);
    let delta = SymElem::delta(&params);
    println!("(x, y) = (2, 3), p = {p}");
    println!("gamma^p = x: {}", gamma.pow(p).unwrap().as_scalar().unwrap() == *params.x());
    println!("delta^p = y: {}", delta.pow(p).unwrap().as_scalar().unwrap() == *params.y());

    // f = 1 + x
    let f = CycPoly::from_ints(p, &[1, 1, 0]).unwrap();
    let n = slot_power_scalar(&gamma, &f).unwrap();
    println!("product route:  N = prod f(rho^i gamma) = {n}");
    let direct = eval_poly_sym(&f, &gamma)
        .unwrap()
        .mul(&delta)
        .unwrap()
        .pow(p)
        .unwrap()
        .as_scalar()
        .unwrap();
    println!("direct route:   (f(gamma) delta)^p / y = {}", direct.mul(&params.y().inv().unwrap()));
    println!("routes agree:   {}", direct == n.mul(params.y()));

    let q = SymPair::standard(&params);
    let moved = slot_move_t(&q, &f).unwrap();
    println!("moved pair still skew-commutes: {}", moved.skew_commutes().unwrap());
    println!(
        "moved partner power: {} (was {})",
        moved.b.pow(p).unwrap().as_scalar().unwrap(),
        params.y()
    );
}
