//! Crossing polynomial coefficients of a small graph and the points where
//! an eigenvalue passes through zero along a few rays.

use signlap::crossing::{coefficients, degree_support, ray_crossings, ray_polynomial};
use signlap::{Rational, SignedGraph};

fn main() -> signlap::Result<()> {
    let g = SignedGraph::from_i64(
        5,
        &[(0, 1, 2), (1, 2, 1), (2, 3, 3), (3, 4, 1), (0, 4, 1), (0, 2, -1), (1, 3, -2), (2, 4, -1)],
    )?;
    let p = coefficients(&g)?;
    println!("R = {}", p.red_count());
    for mask in 0..p.coefficients().len() {
        println!("  A_{} = {}", p.mask_to_key(mask), p.coefficient(mask));
    }
    let (lo, hi) = degree_support(&p, &g)?;
    println!("nonzero degrees from {lo} to {hi}");

    let rays: [[i64; 3]; 3] = [[1, 1, 1], [1, 2, 3], [5, 1, 1]];
    for ray in rays {
        let alpha: Vec<Rational> = ray.iter().map(|&a| Rational::from_integer(a.into())).collect();
        println!("ray {ray:?}: f(t) = {}", ray_polynomial(&p, &alpha)?);
        for root in ray_crossings(&p, &alpha)?.roots {
            match &root.exact {
                Some(x) => println!("  t = {x} (multiplicity {})", root.multiplicity),
                None => println!("  t ~ {:.12} (multiplicity {})", root.approx, root.multiplicity),
            }
        }
    }
    Ok(())
}
