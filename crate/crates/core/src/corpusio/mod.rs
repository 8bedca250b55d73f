//! Group constructors, the group file format, and the built-in catalog.

mod catalog;
mod cli;
mod constructors;
mod format;

pub use catalog::*;
pub use cli::{print_report, run_cli, run_cli_with, EXIT_FAIL, EXIT_PASS, EXIT_USAGE};
pub use constructors::{
    direct_product, embed, make_named, sl23_matrix, sl23_q8_generators, Family, MAX_DEGREE,
};
pub use format::{load_group, write_group, GroupSpec, ResolvedGroup, SubgroupGenerator};
