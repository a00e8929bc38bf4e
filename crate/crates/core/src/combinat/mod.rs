//! Partitions, tableaux, permutations and symmetric-group characters.

mod character;
mod partition;
mod permutation;
mod tableau;

pub use character::{mn_character, z_factor};
pub use partition::{
    binomial, factorial, horizontal_strip_extensions, partitions_inside, partitions_of, vertical_strip_extensions,
    Partition,
};
pub use permutation::{derangements, permutations, Permutation};
pub use tableau::{ssyt_enumerate, syt_enumerate, syt_of_shape, SytStats, Tableau};
