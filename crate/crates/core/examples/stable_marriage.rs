// Deferred acceptance with forbidden pairs. Not everyone gets matched, but the
// result has no blocking pair, and it is the best stable outcome for every row.
//
//     cargo run --example stable_marriage

use dinitz::stable_matching::{
    deferred_acceptance_traced, enumerate_stable_matchings, is_stable, PreferenceProfile, RankedPair,
};

fn main() {
    // (row, col, how much the row likes it, how much the col likes it); lower is better
    let table = [
        (0, 0, 0, 1),
        (0, 1, 1, 0),
        (1, 0, 0, 0),
        (1, 2, 1, 0),
        (2, 1, 0, 1),
        (2, 2, 1, 1),
        // (3, *) are all forbidden except one
        (3, 0, 0, 2),
    ];
    let profile = PreferenceProfile::new(
        4,
        3,
        table.iter().map(|&(row, col, row_rank, col_rank)| RankedPair { row, col, row_rank, col_rank }),
    )
    .unwrap();

    let run = deferred_acceptance_traced(&profile);
    println!("row-proposing result: {} after {} proposals", run.matching, run.proposals);
    assert!(is_stable(&profile, &run.matching).unwrap().is_stable());

    for m in enumerate_stable_matchings(&profile, 20).unwrap() {
        println!("stable: {m}");
    }
}
