//! Exact Jacobian-rank certificates for the orbit tower: at depth i the
//! generic orbit has dimension i(p-1), topping out at p^2 - 1.

use skewpairs::filtration::{orbit_jacobian_rank, OrbitSpec};
use skewpairs::pairs::Basis;

fn main() {
    let p: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(3);
    println!("p = {p}");
    for depth in 2..=p + 1 {
        let spec = OrbitSpec::new(Basis::identity(p), depth).expect("valid depth");
        let cert = orbit_jacobian_rank(&spec, 97).expect("rank certificate");
        println!(
            "depth {depth}: rank {} (expected {}) -> {}",
            cert.rank,
            cert.expected,
            if cert.is_valid() { "certified" } else { "UNDERSHOT" }
        );
    }
}
