//! Length spectra of a few small weight vectors: the two-weight
//! classification, a triple with an undesirable short class, and a triple
//! where a pair-sum class also carries a two-dimensional family.
//!
//! Run with `cargo run --example spectrum_basics`.

use wps_spectrum::{length_spectrum, line_spectrum_d2, WeightVector};

fn show(raw: &[i64]) {
    let w = WeightVector::new(raw).expect("example weights are valid");
    let spec = length_spectrum(&w);
    println!(
        "weights {} ({}):",
        w,
        if spec.all_weights_odd {
            "all odd, generic length π"
        } else {
            "mixed parity, generic length 2π"
        }
    );
    for class in &spec.classes {
        print!(
            "  {:<6} k={:<3} {}",
            class.length_display(),
            class.k,
            class.kind
        );
        if let Some(dim) = class.max_family_dimension {
            print!(", family dimension {dim}");
        }
        if !class.desirable_pairs.is_empty() {
            print!(", realized by pairs {:?}", class.desirable_pairs);
        }
        println!();
    }
    println!();
}

fn main() {
    // The d = 2 classification, built by its own dedicated route.
    for (p, q) in [(3, 5), (2, 5)] {
        let spec = line_spectrum_d2(p, q, false).unwrap();
        println!("line ({p},{q}): {} classes", spec.classes.len());
        for class in &spec.classes {
            println!("  {:<6} {}", class.length_display(), class.kind);
        }
        println!();
    }

    // The general machinery agrees with the d = 2 route and goes further.
    show(&[3, 5, 7]);

    // 3 + 5 = 8 = gcd(3+5, 3+13): the shortest desirable length coincides
    // with an undesirable order, so its class carries both the isolated
    // geodesic and a two-parameter family.
    show(&[3, 5, 13]);
}
