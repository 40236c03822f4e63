// Seeded random instances and random valid functions.
//
//     cargo run --example random_instances

use monolip::extension::{extend, ExtensionPolicy};
use monolip::generators::{random_function, random_instance, GeneratorSpec};
use monolip::io::{to_json, InstanceFile};
use monolip::radiality::check_radiality;
use monolip::Context;

fn main() {
    let ctx = Context::default();
    let specs = [
        GeneratorSpec::RandomDiscrete { n: 6, density: 0.4 },
        GeneratorSpec::RandomLoset { n: 5 },
        GeneratorSpec::RandomEuclidean { n: 5 },
        GeneratorSpec::Example4Mixed {
            samples: vec![0.0, 0.5, 1.0],
            antichain: 2,
        },
    ];
    for (seed, spec) in specs.iter().enumerate() {
        let poset = random_instance(spec, seed as u64, &ctx).unwrap();
        let radial = check_radiality(&poset, &ctx).radial;
        let f = random_function(&poset, 1.0, 1, seed as u64).unwrap();
        let out = extend(&poset, &f, &ExtensionPolicy::default(), &ctx).unwrap();
        println!("{}: radial={radial}, f on {:?}, extension {:?}", serde_json::to_string(spec).unwrap(), f.domain().as_slice(), out.status);
        // Random functions are drawn from the feasible region, so they extend
        // even on posets that are not radial.
        assert!(out.is_feasible());
    }
    let poset = random_instance(&specs[0], 0, &ctx).unwrap();
    print!("{}", to_json(&InstanceFile::from_poset(&poset)));
}
