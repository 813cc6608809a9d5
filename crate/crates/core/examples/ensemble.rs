//! A small Monte Carlo run over G(10, M) with two red edges.

use signlap::ensemble::{run, summarize, EnsembleConfig, Model};

fn main() -> signlap::Result<()> {
    let config = EnsembleConfig {
        n: 10,
        m_values: vec![15, 25, 45],
        samples: 500,
        seed: 7,
        model: Model::Gnm,
    };
    let records = run(&config, None)?;
    let summary = summarize(&records)?;
    for s in &summary.slices {
        println!(
            "M = {:>2}: P(G+ disconnected) = {:.3}, P(D = 0 | connected) = {}, mean log10 gap = {}",
            s.m,
            s.p_gplus_disconnected,
            s.p_delta_zero_given_connected.map_or("-".into(), |p| format!("{p:.3}")),
            s.log10_gap_mean.map_or("-".into(), |x| format!("{x:.3}")),
        );
        let mut classes: Vec<(&String, u64)> =
            s.class_histograms.iter().map(|(c, h)| (c, h.iter().sum())).collect();
        classes.sort_by_key(|c| std::cmp::Reverse(c.1));
        let top: Vec<String> = classes.iter().take(4).map(|(c, n)| format!("{c}: {n}")).collect();
        println!("        most common classes with a gap: {}", top.join(", "));
    }
    Ok(())
}
