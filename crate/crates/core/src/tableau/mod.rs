//! Partitions, Young tableaux, and strip-avoiding counts.

mod count;
mod filling;
mod partition;
mod strips;

pub use count::{binomial, binomial_signed, count_ssyt};
pub use filling::{descents, enumerate_ssyt, enumerate_syt, ssyt_with_content, SsytIter, SytIter, Tableau};
pub use partition::{bf_complement, complement, GrassmannianContext, Partition};
pub use strips::{
    count_one_strip_less, count_one_strip_less_in, count_zero_strip_less,
    count_zero_strip_less_in, has_i_strip, has_pair_strip, is_one_strip_less, is_pair_strip,
    is_strip, is_zero_strip_less,
};
