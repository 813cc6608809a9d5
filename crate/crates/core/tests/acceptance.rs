//! Acceptance suite. Each criterion prints one PASS/FAIL line; the process
//! exits nonzero if any criterion fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use num::{Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use common::*;
use signlap::crossing::{coefficients, evaluate, ray_crossings, ray_polynomial};
use signlap::discriminants::{
    all_wildcards, cycle_minor, discriminant2, dodgson_check, factorize, forest_minor, forest_sum_2, gap,
    laplacian_minor, stacked_deck, wildcard_discriminant,
};
use signlap::ensemble::{self, EnsembleConfig, Model};
use signlap::enumerate::tree_sum;
use signlap::spectral::{eigenvalues, inertia, laplacian, tau, tree_constant, SpectralIndex};
use signlap::stability::{certify, thresholds};
use signlap::{Rational, RationalMatrix, SignedGraph};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn pow(n: i64, k: i64) -> i64 {
    n.pow(k as u32)
}

fn c1_complete_graphs() -> Outcome {
    let mut checked = 0;
    for n in 4..=7usize {
        let ni = n as i64;
        let s = pow(ni, ni - 4);
        let shared = coefficients(&complete(n, &[(0, 1), (0, 2)])).map_err(|e| e.to_string())?;
        let want = [(ni - 1) * (ni - 3) * s, (2 * ni - 3) * s, (2 * ni - 3) * s, 3 * s];
        ensure!(
            shared.coefficients().iter().zip(want).all(|(a, b)| *a == int(b)),
            "K_{n} shared: got {:?}, want {want:?}",
            shared.coefficients()
        );
        let d = discriminant2(&shared).unwrap();
        ensure!(d.abs() == int(pow(ni, 2 * ni - 6)), "K_{n} shared |D| = {d}");

        let disjoint = coefficients(&complete(n, &[(0, 1), (2, 3)])).unwrap();
        let want = [(ni - 2) * (ni - 2) * s, (2 * ni - 4) * s, (2 * ni - 4) * s, 4 * s];
        ensure!(
            disjoint.coefficients().iter().zip(want).all(|(a, b)| *a == int(b)),
            "K_{n} disjoint: got {:?}, want {want:?}",
            disjoint.coefficients()
        );
        ensure!(discriminant2(&disjoint).unwrap().is_zero(), "K_{n} disjoint D != 0");
        checked += 2;
    }
    Ok(format!("{checked} polynomials for n = 4..7 exact; shared D = -n^(2n-6)"))
}

fn c2_matrix_tree() -> Outcome {
    let failures: Vec<String> = (0..500u64)
        .into_par_iter()
        .filter_map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(0x200 + i);
            let shape = Shape {
                n: rng.gen_range(2..=8),
                density: rng.gen_range(0.15..0.6),
                reds: rng.gen_range(0..=4),
                unit_black: false,
                black_connected: false,
            };
            let g = random_graph(&mut rng, shape);
            let p = coefficients(&g).unwrap();
            let mut ts = vec![g.red_magnitudes()];
            ts.extend((0..5).map(|_| random_t(&mut rng, g.red_count())));
            for (k, t) in ts.iter().enumerate() {
                let m = tree_constant(&g, t).unwrap();
                if k == 0 && m != tree_sum(&g, t).unwrap() {
                    return Some(format!("graph {i}: tree constant != enumerated tree sum"));
                }
                if evaluate(&p, t).unwrap() != m {
                    return Some(format!("graph {i}: polynomial != tree constant at t #{k}"));
                }
            }
            None
        })
        .collect();
    ensure!(failures.is_empty(), "{}", failures.join("; "));
    Ok("500 graphs, N <= 8: tree constant = tree sum; polynomial = tree constant at 5 t each".into())
}

struct ExhaustiveCase {
    g: SignedGraph,
    delta: Rational,
}

fn exhaustive_corpus() -> Vec<ExhaustiveCase> {
    (2..=6)
        .flat_map(|n| {
            connected_graphs_up_to_isomorphism(n)
                .into_iter()
                .map(move |edges| (n, edges))
        })
        .collect::<Vec<_>>()
        .into_par_iter()
        .flat_map_iter(|(n, edges)| {
            let m = edges.len();
            (0..m)
                .flat_map(move |i| (i + 1..m).map(move |j| (i, j)))
                .map(move |(i, j)| {
                    let g = with_two_reds(n, &edges, i, j);
                    let delta = discriminant2(&coefficients(&g).unwrap()).unwrap();
                    ExhaustiveCase { g, delta }
                })
                .collect::<Vec<_>>()
        })
        .collect()
}

fn c3_forest_identity(corpus: &[ExhaustiveCase]) -> Outcome {
    let bad = corpus
        .par_iter()
        .filter(|c| {
            let s = forest_sum_2(&c.g).unwrap();
            &s * &s != c.delta.abs()
        })
        .count();
    ensure!(bad == 0, "{bad} of {} exhaustive cases violate sigma^2 = |D|", corpus.len());
    let nonzero = corpus.iter().filter(|c| !c.delta.is_zero()).count();

    let random_bad: Vec<u64> = (0..200u64)
        .into_par_iter()
        .filter(|&i| {
            let mut rng = ChaCha8Rng::seed_from_u64(0x300 + i);
            let g = loop {
                let shape = Shape {
                    n: rng.gen_range(3..=7),
                    density: rng.gen_range(0.2..0.7),
                    reds: 2,
                    unit_black: false,
                    black_connected: false,
                };
                let g = random_graph(&mut rng, shape);
                if g.red_count() == 2 {
                    break g;
                }
            };
            let d = discriminant2(&coefficients(&g).unwrap()).unwrap();
            let s = forest_sum_2(&g).unwrap();
            &s * &s != d.abs()
        })
        .collect();
    ensure!(random_bad.is_empty(), "random rational cases failing: {random_bad:?}");
    Ok(format!(
        "{} exhaustive cases (all connected graphs N <= 6 up to isomorphism, every red pair; {nonzero} with D != 0) + 200 rational-weight cases",
        corpus.len()
    ))
}

fn c4_cycle_identity(corpus: &[ExhaustiveCase]) -> Outcome {
    let results: Vec<Option<bool>> = corpus
        .par_iter()
        .map(|c| cycle_minor(&c.g).unwrap().map(|m| &m * &m == c.delta.abs()))
        .collect();
    let evaluated = results.iter().flatten().count();
    let bad = results.iter().flatten().filter(|ok| !**ok).count();
    ensure!(bad == 0, "{bad} of {evaluated} cases violate minor^2 = |D|");

    let mut extra = 0;
    for i in 0..200u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(0x400 + i);
        let shape = Shape {
            n: rng.gen_range(5..=8),
            density: rng.gen_range(0.3..0.7),
            reds: 2,
            unit_black: true,
            black_connected: true,
        };
        let g = random_graph(&mut rng, shape);
        if g.red_count() != 2 {
            continue;
        }
        if let Some(m) = cycle_minor(&g).unwrap() {
            let d = discriminant2(&coefficients(&g).unwrap()).unwrap();
            ensure!(&m * &m == d.abs(), "random unit graph {i}: minor {m}, D {d}");
            extra += 1;
        }
    }
    Ok(format!(
        "{evaluated} exhaustive cases meeting the connectivity precondition ({} skipped) + {extra} random unit-weight cases, N <= 8",
        corpus.len() - evaluated
    ))
}

fn sorted_pairs(n: usize) -> Vec<[usize; 2]> {
    (0..n).flat_map(|a| (a + 1..n).map(move |b| [a, b])).collect()
}

fn c5_minors() -> Outcome {
    let results: Vec<Result<(usize, usize, usize, usize), String>> = (0..200u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(0x500 + i);
            let shape = Shape {
                n: rng.gen_range(4..=7),
                density: rng.gen_range(0.2..0.7),
                reds: rng.gen_range(0..=3),
                unit_black: i % 2 == 0,
                black_connected: false,
            };
            let g = random_graph(&mut rng, shape);
            let m = laplacian(&g, &g.red_magnitudes()).unwrap();
            let n = g.n();
            let mm = |u: [usize; 2], w: [usize; 2]| laplacian_minor(&m, &u, &w).unwrap();

            let pairs = sorted_pairs(n);
            let mut chaiken = 0;
            for (k, u) in pairs.iter().enumerate() {
                for w in &pairs {
                    // every pair for small graphs, a deterministic third of them otherwise
                    if n > 5 && (k + w[0] + w[1]) % 3 != 0 {
                        continue;
                    }
                    if mm(*u, *w) != forest_minor(&g, u, w).unwrap() {
                        return Err(format!("graph {i}: all-minors expansion fails at U={u:?} W={w:?}"));
                    }
                    chaiken += 1;
                }
            }

            let sign = |k: usize| if k % 2 == 0 { int(1) } else { int(-1) };
            let mut rel = 0;
            for a in 0..n {
                for b in a + 1..n {
                    for c in b + 1..n {
                        for d in c + 1..n {
                            let lhs = sign(c + d) * mm([a, b], [a, d]) - mm([a, b], [a, c]);
                            if lhs != sign(a + d) * mm([a, b], [c, d]) {
                                return Err(format!("graph {i}: linear relation fails at {a}{b}{c}{d}"));
                            }
                            rel += 1;
                        }
                    }
                }
            }
            let literal_rel = mm([0, 1], [0, 2]) + mm([0, 1], [0, 3]) == mm([0, 1], [2, 3]);
            if !literal_rel {
                return Err(format!("graph {i}: |L12,13| + |L12,14| != |L12,34|"));
            }
            let four = mm([0, 2], [0, 2]) + mm([0, 3], [0, 2]) + mm([0, 2], [1, 2]) + mm([0, 3], [1, 2]);
            if four != -mm([0, 1], [2, 3]) {
                return Err(format!("graph {i}: four-term relation fails"));
            }
            let literal_four =
                mm([0, 2], [0, 2]) + mm([0, 3], [0, 3]) + mm([0, 2], [1, 2]) + mm([0, 3], [1, 2]) == mm([0, 1], [2, 3]);
            Ok((chaiken, rel, 1, usize::from(!literal_four)))
        })
        .collect();
    let mut totals = (0, 0, 0, 0);
    for r in results {
        let (a, b, c, d) = r?;
        totals = (totals.0 + a, totals.1 + b, totals.2 + c, totals.3 + d);
    }
    Ok(format!(
        "200 graphs N <= 7: {} all-minors checks, {} sign-corrected two-term relations over all a<b<c<d, {} literal |L12,13|+|L12,14|=|L12,34|, {} corrected four-term relations \
         (L13,13 + L14,13 + L13,23 + L14,23 = -L12,34); the variant with L14,14 in place of L14,13 and no sign fails on {} of 200",
        totals.0, totals.1, totals.2, totals.2, totals.3
    ))
}

fn c6_dodgson() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x600);
    for trial in 0..1000 {
        let n = rng.gen_range(2..=6);
        let rows: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(-9..=9)).collect()).collect();
        let m = RationalMatrix::from_i64_rows(&rows).unwrap();
        let mut pick = || {
            let a = rng.gen_range(0..n);
            let mut b = rng.gen_range(0..n - 1);
            if b >= a {
                b += 1;
            }
            (a, b)
        };
        let (i, j) = pick();
        let (k, l) = pick();
        ensure!(dodgson_check(&m, i, j, k, l).unwrap(), "trial {trial}: {rows:?} at ({i},{j},{k},{l})");
    }
    Ok("1000 random integer matrices up to 6x6".into())
}

fn c7_wildcards() -> Outcome {
    for r in 2..=12 {
        let deck = stacked_deck(r).unwrap();
        ensure!(deck.len() == (1 << r) - r - 1, "|W_{r}| = {}", deck.len());
        if r > 2 {
            // W_R consists of W_{R-1} extended by 0 or 1, plus the wildcards
            // whose second free position is last.
            let prev = stacked_deck(r - 1).unwrap();
            let mut rebuilt: Vec<String> = prev
                .iter()
                .flat_map(|w| [format!("{w}0"), format!("{w}1")])
                .chain((0..r - 1).map(|i| {
                    (0..r).map(|k| if k == i || k == r - 1 { '*' } else { '0' }).collect()
                }))
                .collect();
            let mut got: Vec<String> = deck.iter().map(ToString::to_string).collect();
            rebuilt.sort();
            got.sort();
            ensure!(rebuilt == got, "W_{r} does not follow the recursion");
        }
    }

    for r in 2..=6 {
        let g = triangle_chain(r);
        let p = coefficients(&g).unwrap();
        let f = factorize(&p).unwrap().ok_or(format!("chain R={r} did not factor"))?;
        ensure!(f.alpha == int(1) && f.c.iter().all(|c| *c == int(2)), "chain R={r}: {f:?}");
        let ws = all_wildcards(r);
        ensure!(ws.len() == r * (r - 1) / 2 * (1 << (r - 2)), "wildcard count R={r}");
        ensure!(
            ws.iter().all(|w| wildcard_discriminant(&p, w).unwrap().is_zero()),
            "chain R={r}: nonzero wildcard discriminant"
        );
        let rc = ray_crossings(&p, &vec![q(1, 2); r]).unwrap();
        ensure!(
            rc.roots.len() == 1 && rc.roots[0].multiplicity == r && rc.roots[0].exact == Some(int(1)),
            "chain R={r}: ray through the common point gives {:?}",
            rc.roots
        );
    }

    let mut rng = ChaCha8Rng::seed_from_u64(0x700);
    let (mut none, mut some, mut attempts) = (0, 0, 0);
    while none < 100 && attempts < 2000 {
        attempts += 1;
        let shape = Shape {
            n: rng.gen_range(4..=7),
            density: rng.gen_range(0.3..0.8),
            reds: rng.gen_range(2..=4),
            unit_black: attempts % 3 == 0,
            black_connected: true,
        };
        let g = random_graph(&mut rng, shape);
        if g.red_count() < 2 {
            continue;
        }
        let p = coefficients(&g).unwrap();
        let deck_zero = stacked_deck(g.red_count())
            .unwrap()
            .iter()
            .all(|w| wildcard_discriminant(&p, w).unwrap().is_zero());
        match factorize(&p).unwrap() {
            None => {
                ensure!(!deck_zero, "attempt {attempts}: deck vanishes but no factorization");
                // a nonzero wildcard discriminant proves no product form exists
                ensure!(
                    all_wildcards(g.red_count())
                        .iter()
                        .any(|w| !wildcard_discriminant(&p, w).unwrap().is_zero()),
                    "attempt {attempts}: rejected without a witness"
                );
                none += 1;
            }
            Some(f) => {
                ensure!(deck_zero && f.expand() == p, "attempt {attempts}: unsound factorization");
                let t = random_t(&mut rng, g.red_count());
                ensure!(evaluate(&f.expand(), &t).unwrap() == tree_constant(&g, &t).unwrap(), "expansion mismatch");
                some += 1;
            }
        }
    }
    ensure!(none == 100, "only {none} non-factorable graphs found");
    Ok(format!(
        "|W_R| = 2^R-R-1 and the recursion for R <= 12; chains R = 2..6 factor with C_i = 2, all wildcard discriminants vanish and the ray through the common point has one root of multiplicity R; 100 non-factorable random graphs rejected with witnesses ({some} factorable ones verified)"
    ))
}

fn zero_count(ev: &[f64], tol: f64) -> usize {
    let scale = ev.iter().fold(1f64, |a, x| a.max(x.abs()));
    ev.iter().filter(|x| x.abs() <= tol * scale).count()
}

fn c8_genericity() -> Outcome {
    let results: Vec<Result<(usize, usize, usize), String>> = (0..200u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(0x800 + i);
            let shape = Shape {
                n: rng.gen_range(3..=7),
                density: rng.gen_range(0.2..0.7),
                reds: rng.gen_range(1..=4),
                unit_black: false,
                black_connected: false,
            };
            let g = random_graph(&mut rng, shape);
            let r = g.red_count();
            let p = coefficients(&g).unwrap();
            let tau = tau(&g).unwrap();
            let (mut roots, mut exact, mut float) = (0, 0, 0);
            for ray in 0..5 {
                let alpha: Vec<Rational> = (0..r).map(|_| positive_rational(&mut rng, 97, 89)).collect();
                let rc = ray_crossings(&p, &alpha).map_err(|e| e.to_string())?;
                if rc.roots.iter().any(|x| x.multiplicity != 1) {
                    return Err(format!("graph {i} ray {ray}: repeated root {:?}", rc.roots));
                }
                if rc.total_multiplicity() != tau {
                    return Err(format!("graph {i} ray {ray}: {} roots, tau = {tau}", rc.total_multiplicity()));
                }
                let q = ray_polynomial(&p, &alpha).unwrap();
                if !q.shift_down(q.order_at_zero()).is_square_free() {
                    return Err(format!("graph {i} ray {ray}: ray polynomial not square-free"));
                }
                for root in &rc.roots {
                    roots += 1;
                    match &root.exact {
                        Some(t) => {
                            let at: Vec<Rational> = alpha.iter().map(|a| a * t).collect();
                            let idx = inertia(&laplacian(&g, &at).unwrap()).unwrap();
                            if idx.n_zero != 2 {
                                return Err(format!("graph {i}: index {idx} at rational root {t}"));
                            }
                            exact += 1;
                        }
                        None => {
                            let at: Vec<Rational> = alpha
                                .iter()
                                .map(|a| a * Rational::from_float(root.approx).unwrap())
                                .collect();
                            let ev = eigenvalues(&laplacian(&g, &at).unwrap());
                            if zero_count(&ev, 1e-6) != 2 {
                                return Err(format!("graph {i}: eigenvalues {ev:?} at root {}", root.approx));
                            }
                            float += 1;
                        }
                    }
                }
            }
            Ok((roots, exact, float))
        })
        .collect();
    let mut t = (0, 0, 0);
    for r in results {
        let (a, b, c) = r?;
        t = (t.0 + a, t.1 + b, t.2 + c);
    }

    let g = complete(4, &[(0, 1), (2, 3)]);
    let rc = ray_crossings(&coefficients(&g).unwrap(), &[int(1), int(1)]).unwrap();
    ensure!(
        rc.roots.len() == 1 && rc.roots[0].multiplicity == 2 && rc.roots[0].exact == Some(int(1)),
        "K_4 disjoint diagonal: {:?}",
        rc.roots
    );
    let idx = inertia(&laplacian(&g, &[int(1), int(1)]).unwrap()).unwrap();
    ensure!(idx.n_zero == 3, "K_4 disjoint at (1,1): index {idx}");
    Ok(format!(
        "200 graphs x 5 rays: {} simple roots, totals = tau; n_0 = 2 at {} rational roots (exact) and {} irrational roots (tol 1e-6); K_4 disjoint diagonal has a double root at t = 1 with index {idx}",
        t.0, t.1, t.2
    ))
}

fn c9_monotonicity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x900);
    let mut worst = f64::INFINITY;
    for probe in 0..200 {
        let shape = Shape {
            n: rng.gen_range(2..=8),
            density: rng.gen_range(0.2..0.7),
            reds: rng.gen_range(1..=4),
            unit_black: false,
            black_connected: false,
        };
        let g = random_graph(&mut rng, shape);
        let r = g.red_count();
        let t = random_t(&mut rng, r);
        let k = rng.gen_range(0..r);
        let mut t2 = t.clone();
        t2[k] += positive_rational(&mut rng, 20, 9);
        let a = eigenvalues(&laplacian(&g, &t).unwrap());
        let b = eigenvalues(&laplacian(&g, &t2).unwrap());
        for (x, y) in a.iter().zip(&b) {
            worst = worst.min(y - x);
            ensure!(*y >= x - 1e-9, "probe {probe}: eigenvalue fell from {x} to {y}");
        }
    }
    Ok(format!("200 probes; smallest eigenvalue change {worst:.3e} (slack 1e-9)"))
}

fn l1_ball_point(rng: &mut ChaCha8Rng, r: usize, radius: &Rational) -> Vec<Rational> {
    // uniform on {t >= 0, |t|_1 <= radius}: normalized exponentials with one slack coordinate
    let e: Vec<f64> = (0..=r).map(|_| -(1.0 - rng.gen::<f64>()).ln()).collect();
    let total: f64 = e.iter().sum();
    let mut t: Vec<Rational> = e[..r]
        .iter()
        .map(|x| radius * Rational::from_float(x / total).unwrap())
        .collect();
    let norm: Rational = t.iter().fold(Rational::zero(), |a, b| a + b);
    if &norm > radius {
        let s = radius / &norm;
        t.iter_mut().for_each(|x| *x *= &s);
    }
    t
}

fn c10_stability() -> Outcome {
    let results: Vec<Result<(usize, usize), String>> = (0..100u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(0xa00 + i);
            let g = loop {
                let shape = Shape {
                    n: rng.gen_range(3..=7),
                    density: rng.gen_range(0.3..0.8),
                    reds: rng.gen_range(1..=4),
                    unit_black: i % 2 == 0,
                    black_connected: true,
                };
                let g = random_graph(&mut rng, shape);
                if g.red_count() > 0 {
                    break g;
                }
            };
            let r = g.red_count();
            let w = thresholds(&g).unwrap();
            let min = w.iter().flatten().min().cloned().ok_or("no finite threshold")?;
            let stable = SpectralIndex::new(g.n() - 1, 1, 0);
            for _ in 0..5 {
                let t = l1_ball_point(&mut rng, r, &min);
                let rep = certify(&g, &t).map_err(|e| format!("graph {i}: {e}"))?;
                if !rep.certified || rep.verified_index != stable {
                    return Err(format!("graph {i}: false certificate, index {}", rep.verified_index));
                }
            }
            let mut axes = 0;
            for (k, wk) in w.iter().enumerate() {
                let Some(wk) = wk else { continue };
                let axis = |s: Rational| {
                    let mut t = vec![Rational::zero(); r];
                    t[k] = s;
                    tree_constant(&g, &t).unwrap()
                };
                if !axis(wk.clone()).is_zero() {
                    return Err(format!("graph {i}: M(w_{k} e_{k}) != 0"));
                }
                let below = [Rational::zero(), wk / int(2), wk * q(999, 1000)];
                if below.into_iter().any(|s| !axis(s).is_positive()) {
                    return Err(format!("graph {i}: M not positive below w_{k}"));
                }
                axes += 1;
            }
            Ok((5, axes))
        })
        .collect();
    let mut samples = 0;
    let mut axes = 0;
    for r in results {
        let (a, b) = r?;
        samples += a;
        axes += b;
    }

    let g = complete(4, &[(0, 1), (0, 2)]);
    let t = [q(8, 25), q(8, 25)];
    let rep = certify(&g, &t).unwrap();
    ensure!(
        !rep.certified && rep.verified_index == SpectralIndex::new(3, 1, 0),
        "witness failed: {rep:?}"
    );
    Ok(format!(
        "{samples} l1-ball samples over 100 graphs all index (N-1,1,0); {axes} axis thresholds sharp; witness K_4 shared at t = (8/25, 8/25): |t|_1 = 16/25 > 3/5 yet index {}",
        rep.verified_index
    ))
}

fn c11_ensemble() -> Outcome {
    let config = |m: Vec<usize>, samples: usize, seed: u64| EnsembleConfig {
        n: 10,
        m_values: m,
        samples,
        seed,
        model: Model::Gnm,
    };
    let full = ensemble::run(&config(vec![45], 10_000, 2024), None).unwrap();
    let p0 = full.iter().filter(|r| r.delta_zero).count() as f64 / full.len() as f64;
    ensure!((p0 - 7.0 / 11.0).abs() <= 0.02, "P(D = 0) = {p0}");

    let ms = vec![15, 20, 25, 30, 35, 40, 45];
    let records = ensemble::run(&config(ms.clone(), 10_000, 99), None).unwrap();
    let summary = ensemble::summarize(&records).unwrap();
    let curve: Vec<f64> = summary.slices.iter().map(|s| s.p_gplus_disconnected).collect();
    ensure!(curve.windows(2).all(|w| w[1] <= w[0] + 0.01), "P(G+ disconnected) over M = {curve:?}");

    let mut law = 0;
    for n in [5usize, 6] {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        for i in 0..pairs.len() {
            for j in i + 1..pairs.len() {
                let g = complete(n, &[pairs[i], pairs[j]]);
                let rec = ensemble::measure(&g, 0, pairs.len()).unwrap();
                let disjoint = [pairs[i].0, pairs[i].1].iter().all(|x| *x != pairs[j].0 && *x != pairs[j].1);
                ensure!(rec.delta_zero == disjoint, "K_{n} reds {:?} {:?}", pairs[i], pairs[j]);
                ensure!(rec.delta_zero == (rec.class != "adj"), "class/delta mismatch on K_{n}");
                law += 1;
            }
        }
    }

    let small = config(vec![20, 45], 500, 5);
    let mut a = Vec::new();
    let mut b = Vec::new();
    ensemble::write_csv(&ensemble::run(&small, Some(1)).unwrap(), &mut a).unwrap();
    ensemble::write_csv(&ensemble::run(&small, Some(4)).unwrap(), &mut b).unwrap();
    ensure!(a == b, "reruns differ");
    Ok(format!(
        "P(D = 0) on K_10 = {p0:.4} vs 7/11 = {:.4}; P(G+ disconnected) over M = {ms:?}: {}; complete-graph law on {law} red pairs (N = 5, 6); CSV byte-identical across 1 and 4 threads",
        7.0 / 11.0,
        curve.iter().map(|x| format!("{x:.4}")).collect::<Vec<_>>().join(" ")
    ))
}

/// Minimum distance between the two branches of
/// `a11 x y - a10 x - a01 y + a00 = 0` by dense sampling and refinement.
fn branch_distance(a: [f64; 4]) -> f64 {
    let [a00, a10, a01, a11] = a;
    let x0 = a01 / a11;
    let y = |x: f64| (a10 * x - a00) / (a11 * x - a01);
    let dist = |s: f64, u: f64| {
        let (x1, x2) = (x0 + s.exp(), x0 - u.exp());
        ((x1 - x2).powi(2) + (y(x1) - y(x2)).powi(2)).sqrt()
    };
    let mut best = (f64::INFINITY, 0.0, 0.0);
    let grid = 1200;
    for i in 0..grid {
        let s = -8.0 + 16.0 * i as f64 / grid as f64;
        for j in 0..grid {
            let u = -8.0 + 16.0 * j as f64 / grid as f64;
            let d = dist(s, u);
            if d < best.0 {
                best = (d, s, u);
            }
        }
    }
    let (mut d, mut s, mut u) = best;
    let mut step = 16.0 / grid as f64;
    while step > 1e-13 {
        let mut moved = false;
        for (ds, du) in [(step, 0.0), (-step, 0.0), (0.0, step), (0.0, -step)] {
            let cand = dist(s + ds, u + du);
            if cand < d {
                (d, s, u) = (cand, s + ds, u + du);
                moved = true;
            }
        }
        if !moved {
            step /= 2.0;
        }
    }
    d
}

fn c12_gap_oracle() -> Outcome {
    let p = coefficients(&complete(4, &[(0, 1), (0, 2)])).unwrap();
    let a: Vec<f64> = p.coefficients().iter().map(|x| x.to_integer().to_f64().unwrap()).collect();
    let reported = gap(&p).unwrap().unwrap();
    let delta = discriminant2(&p).unwrap().abs().to_integer();
    let formula = (2.0 * delta.to_f64().unwrap()).sqrt() / a[3];
    ensure!((reported - formula).abs() < 1e-12, "reported gap {reported} != sqrt(2|D|)/A11");
    let numeric = branch_distance([a[0], a[1], a[2], a[3]]);
    let ratio = numeric / reported;
    Ok(format!(
        "K_4 shared: numeric branch distance {numeric:.12}, reported sqrt(2|D|)/A11 = {reported:.12}, ratio {ratio:.9} (the true distance is sqrt(8|D|)/A11)"
    ))
}

fn main() {
    let started = Instant::now();
    let corpus = exhaustive_corpus();
    type Criterion<'a> = (&'a str, Box<dyn Fn() -> Outcome + Sync + 'a>);
    let criteria: Vec<Criterion> = vec![
        ("1 complete-graph closed forms", Box::new(c1_complete_graphs)),
        ("2 matrix-tree consistency", Box::new(c2_matrix_tree)),
        ("3 forest/discriminant identity", Box::new(|| c3_forest_identity(&corpus))),
        ("4 cycle-basis identity", Box::new(|| c4_cycle_identity(&corpus))),
        ("5 all-minors expansion and minor relations", Box::new(c5_minors)),
        ("6 Dodgson condensation", Box::new(c6_dodgson)),
        ("7 wildcards and factorization", Box::new(c7_wildcards)),
        ("8 genericity / level repulsion", Box::new(c8_genericity)),
        ("9 eigenvalue monotonicity", Box::new(c9_monotonicity)),
        ("10 l1 stability certificate", Box::new(c10_stability)),
        ("11 random-graph ensemble", Box::new(c11_ensemble)),
        ("12 gap formula oracle", Box::new(c12_gap_oracle)),
    ];
    let outcomes: Vec<(Outcome, f64)> = criteria
        .par_iter()
        .map(|(_, f)| {
            let t = Instant::now();
            let out = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                Err(format!("panicked: {msg}"))
            });
            (out, t.elapsed().as_secs_f64())
        })
        .collect();

    let mut failed = 0;
    for ((name, _), (out, secs)) in criteria.iter().zip(&outcomes) {
        match out {
            Ok(detail) => println!("PASS criterion {name} [{secs:.1}s]: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {name} [{secs:.1}s]: {detail}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed in {:.1}s",
        criteria.len() - failed,
        started.elapsed().as_secs_f64()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
