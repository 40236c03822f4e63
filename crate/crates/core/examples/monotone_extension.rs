// Extend an increasing Lipschitz function from a subset, and compare the
// smallest and largest extensions with the shortest-path solver.
//
//     cargo run --example monotone_extension

use monolip::extension::{extend, ExtensionPolicy, PointOrder, Selector};
use monolip::function::validate_total;
use monolip::generators::gen_example1;
use monolip::oracle::oracle_solve;
use monolip::{Context, PartialFunction};

fn main() {
    let ctx = Context::default();
    let poset = gen_example1(0.6, 0.3, &ctx).unwrap();

    // Fix the top and one middle point; the budget is K = 1.
    let f = PartialFunction::scalar(vec![0, 1], vec![0.5, 0.1], 1.0).unwrap();
    let oracle = oracle_solve(&poset, &f, &ctx).unwrap();

    for selector in [Selector::Min, Selector::Mid, Selector::Max] {
        for order in [PointOrder::Ascending, PointOrder::Descending] {
            let policy = ExtensionPolicy::new(selector).with_order(order.clone());
            let out = extend(&poset, &f, &policy, &ctx).unwrap();
            assert!(out.is_feasible());
            assert!(validate_total(&poset, &out.values, 1.0, &ctx).unwrap().is_valid());
            let values = out.scalar_values();
            println!("{selector:?} {order:?}: {values:?}");
            for x in 0..poset.len() {
                let (lo, hi) = (oracle.fmin[x][0], oracle.fmax[x][0]);
                match selector {
                    Selector::Min => assert!((values[x] - lo).abs() < 1e-9),
                    Selector::Max => assert!((values[x] - hi).abs() < 1e-9),
                    Selector::Mid => assert!(lo - 1e-9 <= values[x] && values[x] <= hi + 1e-9),
                }
            }
        }
    }

    // Vector-valued functions extend coordinatewise.
    let g = PartialFunction::new(vec![3], vec![vec![0.0, 1.0, -2.0]], 2.0).unwrap();
    let out = extend(&poset, &g, &ExtensionPolicy::new(Selector::Max), &ctx).unwrap();
    println!("vector, largest extension: {:?}", out.values);
    assert!(validate_total(&poset, &out.values, 2.0, &ctx).unwrap().is_valid());
}
