// Represent the order by increasing 1-Lipschitz functions and collapse the
// family into one strictly increasing map.
//
//     cargo run --example representation

use monolip::generators::gen_example1;
use monolip::representation::{normalize_family, representing_family, strict_monotone_map, verify_representation, MemberTag};
use monolip::Context;

fn main() {
    let ctx = Context::default();
    let poset = gen_example1(0.6, 0.3, &ctx).unwrap();

    let family = representing_family(&poset, &ctx).unwrap();
    for (tag, member) in family.tags.iter().zip(&family.members) {
        if let MemberTag::Pair(x, y) = tag {
            println!("F[{}, {}] = {member:?}", poset.label(*x), poset.label(*y));
        }
    }
    assert!(verify_representation(&poset, &family, &ctx).represents);

    let normalized = normalize_family(&poset, &family, 3).unwrap();
    assert!(verify_representation(&poset, &normalized, &ctx).represents);
    assert!(normalized.members.iter().flatten().all(|v| v.abs() <= poset.diameter() + 1e-9));

    let g = strict_monotone_map(&poset, &ctx).unwrap();
    println!("G = {:?}, smallest gap {}", g.values, g.margin);
    let v = &g.values;
    assert!(v[0] > v[1] && v[1] > v[3] && v[0] > v[2] && v[2] > v[3]);
}
