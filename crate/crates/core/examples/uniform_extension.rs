// Extend a bounded increasing function with no Lipschitz budget, controlling
// its modulus of continuity through a concave remetrization.
//
//     cargo run --example uniform_extension

use monolip::extension::ExtensionPolicy;
use monolip::generators::real_loset;
use monolip::uniform::extend_uniform;
use monolip::{Context, PartialFunction};

fn main() {
    let ctx = Context::default();
    let poset = real_loset(&[0.0, 0.5, 1.0, 1.5], &ctx).unwrap();
    let f = PartialFunction::scalar(vec![0, 1, 2], vec![0.0, 0.4, 0.5], 1.0).unwrap();

    let run = extend_uniform(&poset, &f, &ExtensionPolicy::default(), &ctx).unwrap();
    let modulus = run.modulus.as_ref().unwrap();
    println!("omega at {:?} = {:?}", modulus.breakpoints, modulus.omega);
    println!("phi vertices {:?}", run.majorant.vertices);
    let (a, b) = run.majorant.affine_majorant();
    println!("affine majorant {a}·t + {b}; K at distance 0.5 = {}", run.majorant.large_distance_constant(0.5));
    println!("F = {:?}", run.outcome.scalar_values());
    println!("certificate {:?}", run.certificate);
    assert_eq!(&run.majorant.vertices[..3], &[(0.0, 0.0), (0.5, 0.4), (1.0, 0.5)]);
    assert!(run.outcome.is_feasible() && run.certificate.holds);
}
