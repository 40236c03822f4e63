// Decide radial convexity and radiality, and read off the first witness.
//
//     cargo run --example check_radiality

use monolip::generators::{gen_example1, plane_poset};
use monolip::radiality::{check_radiality, ViolationKind};
use monolip::Context;

fn main() {
    let ctx = Context::default();

    // The four-point family: radial when min{a, 1 - a} >= b, otherwise one of
    // the two one-sided conditions fails.
    for (a, b) in [(0.6, 0.3), (0.7, 0.4), (0.3, 0.4)] {
        let poset = gen_example1(a, b, &ctx).expect("valid parameters");
        let report = check_radiality(&poset, &ctx);
        println!(
            "a={a} b={b}: radially convex={} d1={} d2={} radial={}",
            report.radially_convex, report.d1_holds, report.d2_holds, report.radial
        );
        assert!(report.radially_convex);
    }

    // Three points of the plane, ordered coordinatewise. Every strict chain is
    // fine, yet x sits closer to z than to y although y is above z.
    let poset = plane_poset(&[(1.0, -1.0), (0.0, 0.0), (0.0, -1.0)], &ctx).unwrap();
    let report = check_radiality(&poset, &ctx);
    let w = report.first_radial_violation().expect("not radial");
    println!("plane: {:?} on {:?}, d(x,z)={} < {}", w.kind, w.triple, w.lhs, w.rhs);
    assert_eq!(w.kind, ViolationKind::D1);
    assert!(report.radially_convex && !report.radial);
}
