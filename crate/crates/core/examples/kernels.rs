// Kernels of directed graphs: independent sets that every other vertex points
// into. Odd directed cycles have none; even ones have exactly two.
//
//     cargo run --example kernels

use dinitz::kernel::{enumerate_kernels_bruteforce, find_kernel_search, has_property_x};
use dinitz::{Digraph, VertexSet};

fn cycle(k: usize) -> Digraph {
    Digraph::new(k, (0..k).map(|i| (i, (i + 1) % k))).unwrap()
}

fn main() {
    for k in 3..=8 {
        let kernels = enumerate_kernels_bruteforce(&cycle(k), &VertexSet::full(k), 24).unwrap();
        let shown: Vec<String> = kernels.iter().map(ToString::to_string).collect();
        println!("C{k}: {} kernel(s) {}", kernels.len(), shown.join(" "));
    }

    // A 4-cycle with a chord: the triangle 0 -> 1 -> 2 -> 0 is kernel-free,
    // so the hereditary property fails on it.
    let g = Digraph::new(4, [(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
    println!("whole graph kernel: {:?}", find_kernel_search(&g, &VertexSet::full(4)).unwrap());
    let report = has_property_x(&g, 20).unwrap();
    println!(
        "hereditary: {}, witness {}",
        report.holds,
        report.witness.map_or("-".into(), |w| w.to_string())
    );
}
