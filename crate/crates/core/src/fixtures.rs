//! Small hand-picked squares used by tests, benches and the shipped data
//! files.

use crate::square::LatinSquare;

/// 7x7 quasigroup with eight rectangles.
pub fn example1() -> LatinSquare {
    LatinSquare::from_rows(vec![
        vec![1, 2, 3, 4, 5, 6, 7],
        vec![2, 1, 4, 3, 7, 5, 6],
        vec![3, 6, 5, 1, 4, 7, 2],
        vec![4, 5, 2, 7, 6, 1, 3],
        vec![5, 4, 7, 6, 2, 3, 1],
        vec![6, 7, 1, 2, 3, 4, 5],
        vec![7, 3, 6, 5, 1, 2, 4],
    ])
    .unwrap()
}

/// [`example1`] after switching the rectangle `<2,3,7,7>`; distance 4.
pub fn example2() -> LatinSquare {
    LatinSquare::from_rows(vec![
        vec![1, 2, 3, 4, 5, 6, 7],
        vec![2, 1, 6, 3, 7, 5, 4],
        vec![3, 6, 5, 1, 4, 7, 2],
        vec![4, 5, 2, 7, 6, 1, 3],
        vec![5, 4, 7, 6, 2, 3, 1],
        vec![6, 7, 1, 2, 3, 4, 5],
        vec![7, 3, 4, 5, 1, 2, 6],
    ])
    .unwrap()
}

/// Commutative 6x6 quasigroup with seven rectangles.
pub fn example4() -> LatinSquare {
    LatinSquare::from_rows(vec![
        vec![1, 2, 3, 4, 5, 6],
        vec![2, 1, 4, 5, 6, 3],
        vec![3, 4, 2, 6, 1, 5],
        vec![4, 5, 6, 2, 3, 1],
        vec![5, 6, 1, 3, 2, 4],
        vec![6, 3, 5, 1, 4, 2],
    ])
    .unwrap()
}
