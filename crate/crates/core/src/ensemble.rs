//! Monte Carlo statistics of the gap over random graphs with two red edges.
//!
//! Every sample draws a uniform `G(N, M)` graph, colours two distinct edges
//! red and records the discriminant, the gap and a class label describing
//! how the red edges sit relative to each other in the black graph. Each
//! sample has its own seed derived from `(master seed, M, index)`, so output
//! does not depend on the number of worker threads.

use std::collections::BTreeMap;
use std::io::Write;

use num::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::crossing::coefficients;
use crate::discriminants::{discriminant2, gap};
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::graph::SignedGraph;

/// Distances at or beyond this are written as `+` in class labels.
pub const DISTANCE_CLAMP: usize = 10;
pub const HIST_LO: f64 = -10.0;
pub const HIST_HI: f64 = 10.0;
pub const HIST_WIDTH: f64 = 0.1;
pub const HIST_BINS: usize = 200;

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Model {
    /// Exactly `M` edges, uniformly.
    #[default]
    Gnm,
    /// Each edge independently with probability `M / C(N, 2)`, redrawn until
    /// at least two edges are present.
    Gnp,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EnsembleConfig {
    #[serde(rename = "N", alias = "n")]
    pub n: usize,
    #[serde(rename = "M", alias = "m_values")]
    pub m_values: Vec<usize>,
    #[serde(alias = "samples_per_m")]
    pub samples: usize,
    #[serde(default, alias = "master_seed")]
    pub seed: u64,
    #[serde(default)]
    pub model: Model,
}

impl EnsembleConfig {
    pub fn validate(&self) -> Result<()> {
        let pairs = self.n * self.n.saturating_sub(1) / 2;
        if self.samples == 0 {
            return Err(Error::InvalidArgument("samples must be positive".into()));
        }
        if self.m_values.is_empty() {
            return Err(Error::InvalidArgument("no M values given".into()));
        }
        if let Some(m) = self.m_values.iter().find(|&&m| m < 2 || m > pairs) {
            return Err(Error::InvalidArgument(format!(
                "M = {m} outside 2..={pairs} for N = {}",
                self.n
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct EnsembleRecord {
    pub sample_id: u64,
    pub n: usize,
    pub m: usize,
    pub red1: (usize, usize),
    pub red2: (usize, usize),
    pub class: String,
    pub gplus_connected: bool,
    pub delta_zero: bool,
    pub gap: Option<f64>,
}

impl EnsembleRecord {
    /// `None` when the gap is undefined, `-inf` for a zero gap.
    pub fn log10_gap(&self) -> Option<f64> {
        self.gap.map(f64::log10)
    }
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

/// Seed of sample `index` in the slice with `m` edges.
pub fn sample_seed(master: u64, m: usize, index: u64) -> u64 {
    splitmix64(splitmix64(splitmix64(master) ^ m as u64) ^ index)
}

fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

fn colour(n: usize, mut chosen: Vec<(usize, usize)>, rng: &mut ChaCha8Rng) -> Result<SignedGraph> {
    chosen.sort_unstable();
    let m = chosen.len();
    let a = rng.gen_range(0..m);
    let mut b = rng.gen_range(0..m - 1);
    if b >= a {
        b += 1;
    }
    let edges = chosen
        .into_iter()
        .enumerate()
        .map(|(i, (u, v))| (u, v, if i == a || i == b { -1 } else { 1 }))
        .collect::<Vec<_>>();
    SignedGraph::from_i64(n, &edges)
}

/// A uniform `G(N, M)` graph with two uniformly chosen red edges (weight
/// -1); the rest are black with weight 1.
pub fn sample_graph(n: usize, m: usize, seed: u64) -> Result<SignedGraph> {
    let mut pairs = all_pairs(n);
    if m < 2 || m > pairs.len() {
        return Err(Error::InvalidArgument(format!(
            "M = {m} outside 2..={} for N = {n}",
            pairs.len()
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..m {
        let j = rng.gen_range(i..pairs.len());
        pairs.swap(i, j);
    }
    pairs.truncate(m);
    colour(n, pairs, &mut rng)
}

/// `G(N, p)` with `p = M / C(N, 2)`, conditioned on having two edges.
pub fn sample_graph_gnp(n: usize, m: usize, seed: u64) -> Result<SignedGraph> {
    let pairs = all_pairs(n);
    if m < 2 || m > pairs.len() {
        return Err(Error::InvalidArgument(format!(
            "M = {m} outside 2..={} for N = {n}",
            pairs.len()
        )));
    }
    let p = m as f64 / pairs.len() as f64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let chosen: Vec<_> = pairs.iter().copied().filter(|_| rng.gen_bool(p)).collect();
        if chosen.len() >= 2 {
            return colour(n, chosen, &mut rng);
        }
    }
}

/// `adj`, `disconnected_plus`, or the four black distances between the red
/// endpoints sorted ascending (`+` for `>= 10` or unreachable).
pub fn classify(g: &SignedGraph) -> Result<String> {
    let reds = g.red_edges();
    if reds.len() != 2 {
        return Err(Error::RedCount {
            expected: 2,
            actual: reds.len(),
        });
    }
    if g.component_counts().black != 1 {
        return Ok("disconnected_plus".into());
    }
    let (x, y) = (reds[0], reds[1]);
    if [x.u, x.v].iter().any(|a| *a == y.u || *a == y.v) {
        return Ok("adj".into());
    }
    let mut d: Vec<Option<usize>> = Vec::with_capacity(4);
    for src in [x.u, x.v] {
        let dist = g.black_distances(src);
        d.extend([dist[y.u], dist[y.v]]);
    }
    let mut d: Vec<usize> = d
        .into_iter()
        .map(|x| x.filter(|&k| k < DISTANCE_CLAMP).unwrap_or(DISTANCE_CLAMP))
        .collect();
    d.sort_unstable();
    Ok(d
        .into_iter()
        .map(|k| if k >= DISTANCE_CLAMP { '+' } else { char::from(b'0' + k as u8) })
        .collect())
}

/// All quantities of one sample.
pub fn measure(g: &SignedGraph, sample_id: u64, m: usize) -> Result<EnsembleRecord> {
    let p = coefficients(g)?;
    let delta: Rational = discriminant2(&p)?;
    let reds = g.red_edges();
    Ok(EnsembleRecord {
        sample_id,
        n: g.n(),
        m,
        red1: (reds[0].u, reds[0].v),
        red2: (reds[1].u, reds[1].v),
        class: classify(g)?,
        gplus_connected: g.component_counts().black == 1,
        delta_zero: delta.is_zero(),
        gap: gap(&p)?,
    })
}

/// Runs every slice in order. `threads` sizes a dedicated pool; output is
/// identical for any thread count.
pub fn run(config: &EnsembleConfig, threads: Option<usize>) -> Result<Vec<EnsembleRecord>> {
    config.validate()?;
    let work = || -> Result<Vec<EnsembleRecord>> {
        let mut out = Vec::with_capacity(config.samples * config.m_values.len());
        for (slice, &m) in config.m_values.iter().enumerate() {
            let first = (slice * config.samples) as u64;
            let records = (0..config.samples as u64)
                .into_par_iter()
                .map(|i| {
                    let seed = sample_seed(config.seed, m, i);
                    let g = match config.model {
                        Model::Gnm => sample_graph(config.n, m, seed)?,
                        Model::Gnp => sample_graph_gnp(config.n, m, seed)?,
                    };
                    measure(&g, first + i, m)
                })
                .collect::<Result<Vec<_>>>()?;
            out.extend(records);
        }
        Ok(out)
    };
    match threads {
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build()
            .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?
            .install(work),
        None => work(),
    }
}

fn float(x: f64) -> String {
    if x == f64::NEG_INFINITY {
        "-inf".into()
    } else {
        format!("{x:.16e}")
    }
}

pub const CSV_HEADER: [&str; 12] = [
    "sample_id",
    "N",
    "M",
    "red1_u",
    "red1_v",
    "red2_u",
    "red2_v",
    "class",
    "gplus_connected",
    "delta_zero",
    "gap",
    "log10_gap",
];

pub fn write_csv<W: Write>(records: &[EnsembleRecord], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in records {
        w.write_record([
            r.sample_id.to_string(),
            r.n.to_string(),
            r.m.to_string(),
            r.red1.0.to_string(),
            r.red1.1.to_string(),
            r.red2.0.to_string(),
            r.red2.1.to_string(),
            r.class.clone(),
            r.gplus_connected.to_string(),
            r.delta_zero.to_string(),
            r.gap.map_or_else(|| "NA".into(), float),
            r.log10_gap().map_or_else(|| "NA".into(), float),
        ])?;
    }
    w.flush().map_err(|e| Error::io("<csv>", e))?;
    Ok(())
}

/// Bin of `log10(gap)`; a zero gap lands in the lowest bin, values outside
/// the range are clamped to the end bins.
pub fn histogram_bin(log10_gap: f64) -> usize {
    if !log10_gap.is_finite() {
        return if log10_gap > 0.0 { HIST_BINS - 1 } else { 0 };
    }
    let k = ((log10_gap - HIST_LO) / HIST_WIDTH).floor();
    k.clamp(0.0, (HIST_BINS - 1) as f64) as usize
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SliceSummary {
    #[serde(rename = "M")]
    pub m: usize,
    pub samples: usize,
    pub gplus_connected: usize,
    pub p_gplus_disconnected: f64,
    /// Absent when no sample has a connected black graph.
    pub p_delta_zero_given_connected: Option<f64>,
    /// Samples with connected black graph and nonzero discriminant.
    pub conditional_count: usize,
    pub log10_gap_mean: Option<f64>,
    pub log10_gap_std: Option<f64>,
    /// Counts of `log10(gap)` over every sample with a defined gap.
    pub histogram: Vec<u64>,
    pub class_histograms: BTreeMap<String, Vec<u64>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    #[serde(rename = "N")]
    pub n: usize,
    pub bin_lo: f64,
    pub bin_hi: f64,
    pub bin_width: f64,
    pub slices: Vec<SliceSummary>,
}

fn summarize_slice(m: usize, records: &[&EnsembleRecord]) -> SliceSummary {
    let samples = records.len();
    let connected: Vec<_> = records.iter().filter(|r| r.gplus_connected).collect();
    let logs: Vec<f64> = connected
        .iter()
        .filter(|r| !r.delta_zero)
        .filter_map(|r| r.log10_gap())
        .collect();
    let (mean, std) = if logs.is_empty() {
        (None, None)
    } else {
        let k = logs.len() as f64;
        let mean = logs.iter().sum::<f64>() / k;
        let var = logs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / k;
        (Some(mean), Some(var.sqrt()))
    };
    let mut histogram = vec![0u64; HIST_BINS];
    let mut class_histograms: BTreeMap<String, Vec<u64>> = BTreeMap::new();
    for r in records {
        if let Some(l) = r.log10_gap() {
            let b = histogram_bin(l);
            histogram[b] += 1;
            class_histograms
                .entry(r.class.clone())
                .or_insert_with(|| vec![0; HIST_BINS])[b] += 1;
        }
    }
    SliceSummary {
        m,
        samples,
        gplus_connected: connected.len(),
        p_gplus_disconnected: (samples - connected.len()) as f64 / samples as f64,
        p_delta_zero_given_connected: (!connected.is_empty()).then(|| {
            connected.iter().filter(|r| r.delta_zero).count() as f64 / connected.len() as f64
        }),
        conditional_count: logs.len(),
        log10_gap_mean: mean,
        log10_gap_std: std,
        histogram,
        class_histograms,
    }
}

/// Per-`M` statistics in order of first appearance of each `M`.
pub fn summarize(records: &[EnsembleRecord]) -> Result<Summary> {
    let first = records
        .first()
        .ok_or_else(|| Error::InvalidArgument("no records to summarize".into()))?;
    let mut order: Vec<usize> = Vec::new();
    let mut by_m: BTreeMap<usize, Vec<&EnsembleRecord>> = BTreeMap::new();
    for r in records {
        if !by_m.contains_key(&r.m) {
            order.push(r.m);
        }
        by_m.entry(r.m).or_default().push(r);
    }
    Ok(Summary {
        n: first.n,
        bin_lo: HIST_LO,
        bin_hi: HIST_HI,
        bin_width: HIST_WIDTH,
        slices: order.iter().map(|m| summarize_slice(*m, &by_m[m])).collect(),
    })
}
