//! Exhaustive search for distinct weight tuples sharing a full pair-sum
//! multiset. Such collisions exist exactly when the tuple length is a
//! power of two; the scan demonstrates both sides at desk scale.
//!
//! Run with `cargo run --release --example collision_search`.

use wps_spectrum::find_collisions;

fn main() {
    // d = 3: provably no collisions, at any bound. The scan agrees.
    let none = find_collisions(3, 40, false, false);
    println!("d=3, weights <= 40: {} colliding groups", none.len());

    // d = 4: the smallest coprime, strict examples fit in a tiny box.
    let groups = find_collisions(4, 20, true, true);
    println!("d=4, weights <= 20, coprime and strict: {} groups", groups.len());
    for g in &groups {
        println!("  shared sums {}:", g.pair_sums);
        for m in &g.members {
            println!("    {m}");
        }
    }

    // The classical quadruple pair appears once the box reaches 61.
    let wider = find_collisions(4, 61, true, true);
    let classic = wider
        .iter()
        .find(|g| {
            g.members
                .iter()
                .any(|m| m.weights == [17, 37, 49, 53])
        })
        .expect("the documented pair is in the box");
    println!(
        "d=4, weights <= 61: {} groups; the documented pair shares {}",
        wider.len(),
        classic.pair_sums
    );
    for m in &classic.members {
        println!("    {m}");
    }
}
