//! Per-edge thresholds and the l1 certificate, including a point outside
//! the certified region that is nonetheless stable.

use signlap::stability::{certify, thresholds};
use signlap::{parse_rational, SignedGraph};

fn main() -> signlap::Result<()> {
    let g = SignedGraph::from_i64(4, &[(0, 1, -1), (0, 2, -1), (0, 3, 1), (1, 2, 1), (1, 3, 1), (2, 3, 1)])?;
    let w: Vec<String> = thresholds(&g)?
        .iter()
        .map(|x| x.as_ref().map_or("inf".into(), ToString::to_string))
        .collect();
    println!("thresholds: [{}]", w.join(", "));

    for (a, b) in [("1/10", "1/5"), ("3/10", "3/10"), ("8/25", "8/25"), ("1/2", "1/2")] {
        let t = [parse_rational(a)?, parse_rational(b)?];
        let r = certify(&g, &t)?;
        println!(
            "t = ({a}, {b}): |t|_1 = {}, certified = {}, boundary = {}, index {}",
            r.l1_norm, r.certified, r.boundary, r.verified_index
        );
    }
    Ok(())
}
