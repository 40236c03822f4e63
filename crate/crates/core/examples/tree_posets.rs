// Rooted trees under the ancestor order: the truncated metric is radial, the
// path-length metric need not be.
//
//     cargo run --example tree_posets

use monolip::generators::{gen_example2, random_tree, search_tree_violation};
use monolip::radiality::{check_radial_convexity, check_radiality};
use monolip::Context;

fn main() {
    let ctx = Context::default();
    for seed in 0..5 {
        let edges = random_tree(8, seed);
        let (rho, truncated) = gen_example2(8, &edges, 0, &ctx).unwrap();
        let (rc, _) = check_radial_convexity(&rho, &ctx);
        let rho_radial = check_radiality(&rho, &ctx).radial;
        let truncated_radial = check_radiality(&truncated, &ctx).radial;
        println!("tree {edges:?}: path length radially convex={rc} radial={rho_radial}; truncated radial={truncated_radial}");
        assert!(rc && truncated_radial);
    }

    let (edges, w) = search_tree_violation(7, &ctx).unwrap().expect("a small tree fails");
    println!("smallest failing tree {edges:?}: {:?} on {:?} ({} < {})", w.kind, w.triple, w.lhs, w.rhs);
}
