// The cyclic Latin square (r + c) mod n and the orientation it induces on the
// rook's graph of the n x n grid: along a row, edges point to larger entries;
// down a column, to smaller ones. Every cell ends up with outdegree n - 1.
//
//     cargo run --example square_orientation -- 4

use dinitz::galvin::{build_square_orientation, latin_value, CellIndexMap};
use dinitz::kernel::has_property_x;

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(3);

    println!("Latin square, n = {n}:");
    for r in 0..n {
        let row: Vec<String> = (0..n).map(|c| latin_value(r, c, n).to_string()).collect();
        println!("  {}", row.join(" "));
    }

    let g = build_square_orientation(n);
    let cells = CellIndexMap::new(n);
    println!("{} vertices, {} edges", g.num_vertices(), g.num_edges());
    for v in 0..g.num_vertices().min(2 * n) {
        let (r, c) = cells.cell(v);
        let targets: Vec<String> = g
            .out_neighbors(v)
            .iter()
            .map(|&w| format!("{:?}", cells.cell(w)))
            .collect();
        println!("  ({r}, {c}) -> {}", targets.join(" "));
    }
    assert!((0..n * n).all(|v| g.out_neighbors(v).len() == n - 1));

    if n * n <= 16 {
        let report = has_property_x(&g, 20).expect("small enough");
        println!(
            "every induced subgraph has a kernel: {} ({} subsets)",
            report.holds, report.subsets_checked
        );
    }
}
