//! Instance pools shared by the integration suites.

#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use monolip::generators::{gen_example1, gen_example2, gen_example3, gen_example4, random_discrete, random_tree, real_loset};
use monolip::{Context, MetricPoset};

pub fn ctx() -> Context {
    Context::default()
}

/// A radial instance drawn from one of five families, chosen by `seed`.
pub fn radial_instance(seed: u64) -> (String, MetricPoset) {
    let mut r = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let ctx = ctx();
    match seed % 5 {
        0 => {
            let n = r.gen_range(1..=12);
            let density = r.gen_range(0.1..0.7);
            (format!("discrete n={n}"), random_discrete(n, density, seed, &ctx).unwrap())
        }
        1 => {
            let n = r.gen_range(1..=10);
            let (_, dt) = gen_example2(n, &random_tree(n, seed), 0, &ctx).unwrap();
            (format!("tree n={n}"), dt)
        }
        2 => {
            let sample = |r: &mut ChaCha8Rng| {
                let k = r.gen_range(1..=5);
                let mut xs: Vec<f64> = (0..k).map(|_| r.gen_range(0.0..3.0)).collect();
                xs.dedup();
                xs
            };
            let (a, b) = (sample(&mut r), sample(&mut r));
            let (pa, pb) = (real_loset(&a, &ctx).unwrap(), real_loset(&b, &ctx).unwrap());
            let theta = pa.diameter().max(pb.diameter()) * r.gen_range(1.0..2.0) + 0.1;
            (format!("sum |A|={} |B|={}", a.len(), b.len()), gen_example3(&pa, &pb, theta, &ctx).unwrap())
        }
        3 => {
            let k = r.gen_range(1..=6);
            let samples: Vec<f64> = (0..k).map(|i| (i as f64 + r.gen::<f64>()) / k as f64).collect();
            let m = r.gen_range(0..=4);
            (format!("mixed k={k} m={m}"), gen_example4(&samples, m, &ctx).unwrap())
        }
        _ => {
            let (a, b) = radial_grid_point(&mut r);
            (format!("four-point a={a} b={b}"), gen_example1(a, b, &ctx).unwrap())
        }
    }
}

/// Parameters on the 0.05 grid with `min{a, 1 − a} ≥ b`.
fn radial_grid_point(r: &mut ChaCha8Rng) -> (f64, f64) {
    let i: u32 = r.gen_range(1..20);
    let m = i.min(20 - i);
    let j = r.gen_range(1..=m);
    (f64::from(i) / 20.0, f64::from(j) / 20.0)
}
