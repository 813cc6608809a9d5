//! Discriminant, gap, spanning-forest and cycle-space quantities for every
//! placement of two red edges in K_4.

use signlap::crossing::coefficients;
use signlap::discriminants::{cycle_minor, degenerate_point, discriminant2, forest_sum_2, gap};
use signlap::SignedGraph;

fn main() -> signlap::Result<()> {
    let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    for i in 0..pairs.len() {
        for j in i + 1..pairs.len() {
            let edges: Vec<(usize, usize, i64)> = pairs
                .iter()
                .enumerate()
                .map(|(k, &(u, v))| (u, v, if k == i || k == j { -1 } else { 1 }))
                .collect();
            let g = SignedGraph::from_i64(4, &edges)?;
            let p = coefficients(&g)?;
            let delta = discriminant2(&p)?;
            let sigma = forest_sum_2(&g)?;
            let cyc = cycle_minor(&g)?.map_or("-".to_string(), |c| c.to_string());
            print!(
                "reds {:?} {:?}: delta = {delta:>4}, forest sum = {sigma:>3}, cycle minor = {cyc:>3}",
                pairs[i], pairs[j]
            );
            match (gap(&p)?, degenerate_point(&p)?) {
                (_, Some((x, y))) => println!(", double crossing at t = ({x}, {y})"),
                (Some(d), None) => println!(", gap = {d:.6}"),
                (None, None) => println!(),
            }
        }
    }
    Ok(())
}
