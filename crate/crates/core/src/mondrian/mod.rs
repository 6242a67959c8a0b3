//! The classes `M(a_1, ..., a_{r-1}; n)` in `Gr(r, n + r - 1)`: one per term
//! `sigma_lambda * sigma_lambda~` of the Berget-Fink sum, pushed into a larger
//! Grassmannian where they have a closed formula and a tableau description.

mod classes;
mod gap;
mod maps;
mod refill;

pub use classes::{m_class_explicit, m_class_recursive, split_factors, split_product, summed_m_class};
pub use gap::{gap_of_partition, gap_table, partition_of_gap, GapRow, GapVector, SplitSequence};
pub use maps::{add_columns, append_max_row, flag_correspondence, restrict_shift, theta};
pub use refill::{bold_strips, pie_refined_coefficient, refill, term_coefficient_tableaux, unrefill};
