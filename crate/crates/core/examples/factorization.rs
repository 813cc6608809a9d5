//! Wildcard test for full factorization: a chain of triangles factors into
//! hyperplanes, K_5 with three red edges does not.

use signlap::crossing::coefficients;
use signlap::discriminants::{factorize, stacked_deck, wildcard_discriminant};
use signlap::SignedGraph;

fn chain(k: usize) -> signlap::Result<SignedGraph> {
    let mut edges = Vec::new();
    for i in 0..k {
        let a = 2 * i;
        edges.extend([(a, a + 1, 1), (a + 1, a + 2, 1), (a, a + 2, -1)]);
    }
    SignedGraph::from_i64(2 * k + 1, &edges)
}

fn report(name: &str, g: &SignedGraph) -> signlap::Result<()> {
    let p = coefficients(g)?;
    println!("{name}:");
    for w in stacked_deck(p.red_count())? {
        println!("  D[{w}] = {}", wildcard_discriminant(&p, &w)?);
    }
    match factorize(&p)? {
        Some(f) => {
            let c: Vec<String> = f.c.iter().map(ToString::to_string).collect();
            println!("  factors: alpha = {}, C = [{}]", f.alpha, c.join(", "));
        }
        None => println!("  does not factor"),
    }
    Ok(())
}

fn main() -> signlap::Result<()> {
    report("triangle chain, R = 4", &chain(4)?)?;
    let mut k5 = Vec::new();
    for u in 0..5 {
        for v in u + 1..5 {
            k5.push((u, v, if [(0, 1), (1, 2), (3, 4)].contains(&(u, v)) { -1 } else { 1 }));
        }
    }
    report("K_5 with three red edges", &SignedGraph::from_i64(5, &k5)?)
}
