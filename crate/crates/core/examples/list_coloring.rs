// The generic kernel-driven list coloring loop on a hand-made digraph. Any
// digraph whose induced subgraphs all have kernels can be colored from lists
// that are longer than each vertex's outdegree.
//
//     cargo run --example list_coloring

use dinitz::galvin::{
    check_condition_y, list_color_with_kernels_traced, BruteForceOracle, ColoringOptions,
};
use dinitz::kernel::has_property_x;
use dinitz::{verify_list_coloring, Digraph, ListAssignment};

fn main() {
    // an acyclic orientation of the 5-wheel; acyclic digraphs always have kernels
    let g = Digraph::new(
        6,
        [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (2, 3), (3, 4), (4, 5), (1, 5)],
    )
    .unwrap();
    assert!(has_property_x(&g, 20).unwrap().holds);

    let lists: ListAssignment = (0..6)
        .map(|v| {
            let size = g.out_neighbors(v).len() as u32 + 1;
            (v as u32..v as u32 + size).collect()
        })
        .collect();
    println!("condition holds: {}", check_condition_y(&g, &lists).is_satisfied());

    let (coloring, trace) =
        list_color_with_kernels_traced(&g, &lists, &BruteForceOracle::default(), ColoringOptions::checked())
            .unwrap();
    for v in 0..6 {
        println!("vertex {v}: list {:?} -> {}", lists.list(v), coloring.get(v).unwrap());
    }
    println!("{} passes, {} invariant checks", trace.passes, trace.invariant_checks);
    assert!(verify_list_coloring(&g, &lists, &coloring).unwrap().is_valid());
}
