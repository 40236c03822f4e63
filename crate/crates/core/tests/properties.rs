mod common;

use common::{ctx, radial_instance};
use proptest::prelude::*;

use monolip::extension::{extend, ExtensionPolicy, PointOrder, Selector};
use monolip::function::{validate_input_function, validate_total};
use monolip::generators::{random_euclidean, random_function, random_metric_loset, random_monotone_function};
use monolip::io::InstanceFile;
use monolip::oracle::oracle_solve;
use monolip::radiality::{check_radial_convexity, check_radiality, inextensible_instance, is_radial, ViolationKind};
use monolip::representation::{normalize_family, representing_family, strict_monotone_map, verify_representation};
use monolip::uniform::{concave_affine_envelope, extend_uniform, modulus_of_continuity, remetrize};
use monolip::{MetricPoset, OrderRelation, PartialFunction};

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-9
}

fn policy(selector: Selector, n: usize, seed: u64) -> ExtensionPolicy {
    let order = match seed % 3 {
        0 => PointOrder::Ascending,
        1 => PointOrder::Descending,
        _ => {
            let mut perm: Vec<usize> = (0..n).collect();
            perm.rotate_left((seed as usize) % n.max(1));
            PointOrder::Custom(perm)
        }
    };
    ExtensionPolicy::new(selector).with_order(order)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn order_closure_is_idempotent(n in 1usize..9, raw in proptest::collection::vec((0usize..9, 0usize..9), 0..20)) {
        // Only pairs going down in index can never create a cycle.
        let pairs: Vec<(usize, usize)> = raw.into_iter().filter(|&(i, j)| i < n && j < i).collect();
        let order = OrderRelation::from_pairs(n, &pairs).unwrap();
        let again = OrderRelation::from_pairs(n, &order.hasse_pairs()).unwrap();
        prop_assert_eq!(&again, &order);
        let all: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|&(i, j)| order.geq(i, j)).collect();
        prop_assert_eq!(OrderRelation::from_pairs(n, &all).unwrap(), order);
    }

    #[test]
    fn losets_are_radial_iff_radially_convex(n in 1usize..10, seed in any::<u64>()) {
        let p = random_metric_loset(n, seed, &ctx()).unwrap();
        prop_assert_eq!(check_radiality(&p, &ctx()).radial, check_radial_convexity(&p, &ctx()).0);
    }

    #[test]
    fn radial_extensions_are_complete_and_extremal(seed in any::<u64>(), k_idx in 0usize..3, wide in any::<bool>()) {
        let (name, p) = radial_instance(seed);
        let k = [0.5, 1.0, 2.0][k_idx];
        let width = if wide { 3 } else { 1 };
        let f = random_function(&p, k, width, seed).unwrap();
        prop_assert!(validate_input_function(&p, &f, &ctx()).unwrap().is_valid());
        let oracle = oracle_solve(&p, &f, &ctx()).unwrap();
        prop_assert!(oracle.feasible, "{}", name);
        let mut outs = Vec::new();
        for selector in [Selector::Min, Selector::Max, Selector::Mid] {
            let out = extend(&p, &f, &policy(selector, p.len(), seed), &ctx()).unwrap();
            prop_assert!(out.is_feasible(), "{} {:?}", name, selector);
            prop_assert!(validate_total(&p, &out.values, k, &ctx()).unwrap().is_valid(), "{}", name);
            for (s, v) in f.iter() {
                prop_assert_eq!(&out.values[s][..], v);
            }
            outs.push(out.values);
        }
        for x in 0..p.len() {
            for t in 0..width {
                prop_assert!(close(outs[0][x][t], oracle.fmin[x][t]), "{} min at {}", name, x);
                prop_assert!(close(outs[1][x][t], oracle.fmax[x][t]), "{} max at {}", name, x);
                prop_assert!(outs[2][x][t] >= oracle.fmin[x][t] - 1e-9 && outs[2][x][t] <= oracle.fmax[x][t] + 1e-9);
            }
        }
    }

    #[test]
    fn vector_extension_is_coordinatewise(seed in any::<u64>()) {
        let (_, p) = radial_instance(seed);
        let f = random_function(&p, 1.0, 3, seed).unwrap();
        let pol = policy(Selector::Mid, p.len(), seed);
        let whole = extend(&p, &f, &pol, &ctx()).unwrap();
        for t in 0..3 {
            let part = extend(&p, &f.coordinate(t).unwrap(), &pol, &ctx()).unwrap();
            for x in 0..p.len() {
                prop_assert_eq!(whole.values[x][t], part.values[x][0]);
            }
        }
    }

    #[test]
    fn extremal_extensions_scale(seed in any::<u64>(), c in 0.25f64..4.0) {
        let (_, p) = radial_instance(seed);
        let f = random_function(&p, 1.0, 1, seed).unwrap();
        let g = f.scaled(c).with_k(c).unwrap();
        for selector in [Selector::Min, Selector::Max] {
            let a = extend(&p, &f, &ExtensionPolicy::new(selector), &ctx()).unwrap();
            let b = extend(&p, &g, &ExtensionPolicy::new(selector), &ctx()).unwrap();
            for x in 0..p.len() {
                prop_assert!((c * a.values[x][0] - b.values[x][0]).abs() <= 1e-9 * (1.0 + c));
            }
        }
    }

    #[test]
    fn non_radial_witnesses_are_inextensible(n in 3usize..8, seed in any::<u64>()) {
        let p = random_euclidean(n, seed, &ctx()).unwrap();
        let report = check_radiality(&p, &ctx());
        prop_assert!(report.radially_convex);
        for w in report.violations.iter().filter(|w| w.kind != ViolationKind::RadialConvexity) {
            let (_, f) = inextensible_instance(&p, w, &ctx()).unwrap();
            prop_assert!(validate_input_function(&p, &f, &ctx()).unwrap().is_valid());
            prop_assert!(!oracle_solve(&p, &f, &ctx()).unwrap().feasible);
            prop_assert!(!extend(&p, &f, &ExtensionPolicy::default(), &ctx()).unwrap().is_feasible());
        }
    }

    #[test]
    fn representing_families_represent(seed in any::<u64>()) {
        let (name, p) = radial_instance(seed);
        let family = representing_family(&p, &ctx()).unwrap();
        prop_assert!(verify_representation(&p, &family, &ctx()).represents, "{}", name);
        if p.len() >= 2 {
            let normalized = normalize_family(&p, &family, seed as usize % p.len()).unwrap();
            prop_assert!(verify_representation(&p, &normalized, &ctx()).represents);
            let bound = p.diameter() + 1e-9;
            prop_assert!(normalized.members.iter().flatten().all(|v| v.abs() <= bound));
        }
    }

    #[test]
    fn strict_maps_are_strict_and_lipschitz(seed in any::<u64>()) {
        let (name, p) = radial_instance(seed);
        let g = strict_monotone_map(&p, &ctx()).unwrap();
        prop_assert!(g.margin > 0.0, "{}", name);
        for x in 0..p.len() {
            for y in 0..p.len() {
                if p.gt(x, y) {
                    prop_assert!(g.values[x] > g.values[y]);
                }
                prop_assert!((g.values[x] - g.values[y]).abs() <= p.d(x, y) + 1e-9);
            }
        }
    }

    #[test]
    fn strict_maps_embed_radially_convex_losets(n in 1usize..9, seed in any::<u64>()) {
        let p = random_metric_loset(n, seed, &ctx()).unwrap();
        prop_assume!(is_radial(&p, &ctx()));
        let g = strict_monotone_map(&p, &ctx()).unwrap();
        for x in 0..n {
            for y in 0..n {
                prop_assert_eq!(p.geq(x, y), g.values[x] >= g.values[y] - 1e-12);
            }
        }
    }

    #[test]
    fn uniform_pipeline_certifies(seed in any::<u64>()) {
        let (name, p) = radial_instance(seed);
        let f = random_monotone_function(&p, 5.0, seed).unwrap();
        let u = extend_uniform(&p, &f, &ExtensionPolicy::default(), &ctx()).unwrap();
        prop_assert!(u.outcome.is_feasible(), "{}", name);
        prop_assert!(u.certificate.holds, "{} {:?}", name, u.certificate);
        for (s, v) in f.iter() {
            prop_assert_eq!(u.outcome.values[s][0], v[0]);
        }
        if let Some(q) = &u.remetrized {
            prop_assert!(is_radial(q, &ctx()), "{}", name);
        }
    }

    #[test]
    fn envelope_dominates_modulus_and_is_concave(seed in any::<u64>()) {
        let (_, p) = radial_instance(seed);
        prop_assume!(p.len() >= 2);
        let all: Vec<usize> = (0..p.len()).collect();
        let f = random_monotone_function(&p, 3.0, seed).unwrap();
        let f = if f.domain().len() >= 2 { f } else {
            let vals: Vec<f64> = (0..p.len()).map(|x| (0..p.len()).filter(|&z| p.geq(x, z)).count() as f64).collect();
            PartialFunction::scalar(all, vals, 1.0).unwrap()
        };
        let ms = modulus_of_continuity(&p, &f).unwrap();
        let phi = concave_affine_envelope(&ms);
        for (&t, &w) in ms.breakpoints.iter().zip(&ms.omega) {
            prop_assert!(phi.eval(t) >= w - 1e-12);
        }
        let slopes = phi.slopes();
        prop_assert!(slopes.iter().all(|&s| s >= 0.0));
        prop_assert!(slopes.windows(2).all(|w| w[0] >= w[1] - 1e-12));
        if !phi.degenerate {
            let q = remetrize(&p, &phi, &ctx()).unwrap();
            prop_assert!(is_radial(&q, &ctx()));
        }
    }

    #[test]
    fn instance_files_round_trip(seed in any::<u64>()) {
        let (_, p) = radial_instance(seed);
        let text = serde_json::to_string(&InstanceFile::from_poset(&p)).unwrap();
        let back: MetricPoset = serde_json::from_str::<InstanceFile>(&text).unwrap().to_poset(&ctx()).unwrap();
        prop_assert_eq!(back, p);
    }
}
