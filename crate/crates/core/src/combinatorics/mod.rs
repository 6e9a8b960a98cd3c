//! Permutations, partitions, tableaux and the orders on them.

mod cosets;
mod partition;
mod perm;
mod tableau;
mod updown;

pub use cosets::{coset_count, coset_reps_d, CosetRep};
pub use partition::{dominance, partitions, Dominance, Node, Partition};
pub use perm::{s_range_word, Perm, MAX_N};
pub use tableau::{coset_word, row_stabilizer_generators, std_tableaux, StandardTableau};
pub use updown::{
    branching_list, ct_eigenvalue, ct_eigenvalue_ground, label_order, labels, ud_compare, updown_tableaux, Branching, CellLabel, Step,
    UdVerdict, UpDownTableau,
};
