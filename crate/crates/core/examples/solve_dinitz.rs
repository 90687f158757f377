// Solve a small Dinitz instance: every cell of a 3x3 grid gets its own list
// of three labels, and we pick one label per cell so that no row or column
// repeats.
//
//     cargo run --example solve_dinitz

use dinitz::galvin::{solve_dinitz_traced, verify_generalized_latin, ColoringOptions, DinitzInstance};

fn main() {
    let raw = [
        ["red green blue", "red green cyan", "green blue cyan"],
        ["red blue cyan", "red green blue", "blue cyan pink"],
        ["green cyan pink", "red pink blue", "red green pink"],
    ];
    let lists = raw
        .iter()
        .flatten()
        .map(|cell| cell.split_whitespace().map(str::to_string).collect())
        .collect();
    let (inst, _) = DinitzInstance::from_labels(3, lists).expect("3x3 lists");

    let (grid, trace) = solve_dinitz_traced(&inst, ColoringOptions::checked()).expect("lists have n colors");
    for row in grid.label_rows(&inst) {
        println!("{}", row.iter().map(|l| format!("{l:>6}")).collect::<String>());
    }
    println!("{} color passes", trace.passes);
    for (color, kernel) in &trace.kernels {
        println!("  {:>6} -> cells {kernel}", inst.label(*color).unwrap());
    }

    let report = verify_generalized_latin(&inst, &grid).expect("same size");
    assert!(report.is_valid());
    println!("verified: rows and columns distinct, every pick from its list");
}
