//! d-complete posets: (D1)–(D3), top trees, ranks, d-complete colorings,
//! inductive hook monomials and the weight `W_P`.

mod coloring;
mod poset;
mod structure;
mod weight;

pub use coloring::{extend_coloring, ColoredPoset};
pub use poset::{
    build, cell_name, diagram_poset, dk1, dk1_minus, parse_poset_json, parse_tree, poset_to_json,
    random_tree_spec, LabeledPoset, Poset, PosetSpec,
};
pub use structure::{
    check_dcomplete, find_intervals, is_isomorphic, rank, top_tree, DCompleteReport, DkInterval,
    DkMinus, Intervals,
};
pub use weight::{
    conjecture_check, conjecture_lhs, conjecture_lhs_from, conjecture_rhs, enumerate_p_partitions, tree_recursion_check,
    weight_w_p, weight_w_p_extended, WeightPlan,
};
