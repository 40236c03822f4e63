// Turn a failure of radiality into a function that cannot be extended.
//
//     cargo run --example inextensible_witness

use monolip::extension::{extend, ExtensionPolicy};
use monolip::function::validate_input_function;
use monolip::generators::gen_example1;
use monolip::oracle::oracle_solve;
use monolip::radiality::{check_radiality, inextensible_instance};
use monolip::Context;

fn main() {
    let ctx = Context::default();
    // 1 - a < b < a: the second condition holds but the first does not.
    let poset = gen_example1(0.7, 0.4, &ctx).unwrap();
    let report = check_radiality(&poset, &ctx);
    assert!(!report.radial);

    for w in report.violations.iter().filter(|w| w.kind != monolip::radiality::ViolationKind::RadialConvexity) {
        let (domain, f) = inextensible_instance(&poset, w, &ctx).unwrap();
        assert!(validate_input_function(&poset, &f, &ctx).unwrap().is_valid());
        let oracle = oracle_solve(&poset, &f, &ctx).unwrap();
        let out = extend(&poset, &f, &ExtensionPolicy::default(), &ctx).unwrap();
        println!(
            "{:?} on {:?}: f on {:?} = {:?}; solver feasible = {}, stuck at {:?}",
            w.kind,
            w.triple.map(|i| poset.label(i)),
            domain.as_slice(),
            f.values(),
            oracle.feasible,
            out.infeasible.iter().map(|iv| (iv.point, iv.lo(), iv.hi())).collect::<Vec<_>>()
        );
        assert!(!oracle.feasible && !out.is_feasible());
    }
}
