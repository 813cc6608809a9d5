//! Inertia of a signed Laplacian along the diagonal of K_4 with two red
//! edges sharing a vertex, compared with the predicted limits.

use signlap::spectral::{eigenvalues, index_limits, inertia, laplacian, tau};
use signlap::{parse_rational, SignedGraph};

fn main() -> signlap::Result<()> {
    let g = SignedGraph::from_i64(4, &[(0, 1, -1), (0, 2, -1), (0, 3, 1), (1, 2, 1), (1, 3, 1), (2, 3, 1)])?;
    let cc = g.component_counts();
    println!("N = {}, B = {}, R = {}", g.n(), g.black_count(), g.red_count());
    println!("c(G) = {}, c(G+) = {}, c(G-) = {}", cc.whole, cc.black, cc.red);

    let lim = index_limits(&g)?;
    println!("index as t -> 0:   {}", lim.small_t);
    println!("index as t -> inf: {}", lim.large_t);
    println!("crossings along a generic ray: {}", tau(&g)?);

    for s in ["0", "1/4", "1/3", "1", "2", "3", "4", "10"] {
        let t = parse_rational(s)?;
        let m = laplacian(&g, &[t.clone(), t])?;
        let ev: Vec<String> = eigenvalues(&m).iter().map(|x| format!("{x:+.4}")).collect();
        println!("t = ({s:>4}, {s:>4})  index {}  eigenvalues [{}]", inertia(&m)?, ev.join(", "));
    }
    Ok(())
}
