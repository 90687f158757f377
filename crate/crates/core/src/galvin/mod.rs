//! Latin-square orientation, stable-matching kernels and the kernel-driven
//! list-coloring loop, assembled into a Dinitz solver.

mod coloring;
mod dinitz;
mod latin;
mod oracle;

pub use coloring::{
    check_condition_y, list_color_with_kernels, list_color_with_kernels_traced, ColoringError,
    ColoringOptions, ColoringTrace, ConditionYReport,
};
pub use dinitz::{
    solve_dinitz, solve_dinitz_traced, verify_generalized_latin, DinitzError, DinitzInstance,
    DuplicateLabel, Grid, LatinReport,
};
pub use latin::{build_square_orientation, latin_value, square_orientation_order, CellIndexMap};
pub use oracle::{
    square_kernel_oracle, square_profile, BruteForceOracle, KernelOracle, SquareKernelOracle,
};
