//! Bracket-closure certificate: the diagonal matrices together with
//! their R-conjugates generate the full p^2-dimensional matrix Lie
//! algebra, so the two tori generate a Zariski-dense subgroup.

use skewpairs::pairs::lie_closure_dimension;

fn main() {
    for p in [3, 5, 7] {
        let dim = lie_closure_dimension(p).expect("supported prime");
        println!(
            "p = {p}: bracket closure spans {dim} of {} dimensions -> {}",
            p * p,
            dim == p * p
        );
    }
}
