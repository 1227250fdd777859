//! Shared fixtures for the benchmark targets.

use deltastar_core::monoid::{AffineSemigroup, MonoidPresentation};
use deltastar_core::{Int, IntVector};

fn iv(v: &[i64]) -> IntVector {
    v.iter().map(|&x| Int::from(x)).collect()
}

/// Nine generators in N^3 whose cone has four extremal rays and ten faces.
pub fn wide_example() -> AffineSemigroup {
    AffineSemigroup::from_i64(&[
        vec![2, 14, 2],
        vec![5, 6, 1],
        vec![7, 4, 4],
        vec![9, 3, 5],
        vec![5, 5, 15],
        vec![6, 9, 12],
        vec![3, 9, 7],
        vec![10, 1, 3],
        vec![3, 6, 8],
    ])
    .expect("valid generators")
}

/// Five generators in N^3 with minimal distances {4, 8}.
pub fn kernel_example() -> AffineSemigroup {
    AffineSemigroup::from_i64(&[
        vec![5, 9, 0],
        vec![10, 11, 0],
        vec![15, 5, 0],
        vec![0, 0, 1],
        vec![10, 0, 1],
    ])
    .expect("valid generators")
}

/// A reduced presentation of N^4 with one congruence and two equations.
pub fn presented_example() -> MonoidPresentation {
    MonoidPresentation::from_group_generators(
        4,
        &[iv(&[-4, -2, 4, 4]), iv(&[5, 2, -5, -4]), iv(&[2, 2, -2, -4])],
    )
    .expect("valid presentation")
}
