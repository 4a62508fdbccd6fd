#![allow(dead_code)]

use borel_ass::{GroundSet, SquarefreeMonomial, VariableSubset};

/// Every squarefree monomial over `[n]`, by increasing bitmask.
pub fn all_squarefree(n: usize) -> Vec<SquarefreeMonomial> {
    (1u32..1 << n)
        .map(|mask| {
            let idx: Vec<usize> = (1..=n).filter(|i| mask & (1 << (i - 1)) != 0).collect();
            SquarefreeMonomial::over(n, &idx).unwrap()
        })
        .collect()
}

pub fn subsets(n: usize) -> Vec<VariableSubset> {
    VariableSubset::all(&GroundSet::contiguous(n).unwrap())
}

pub fn sq(n: usize, idx: &[usize]) -> SquarefreeMonomial {
    SquarefreeMonomial::over(n, idx).unwrap()
}

pub fn subset(n: usize, members: &[usize]) -> VariableSubset {
    VariableSubset::new(GroundSet::contiguous(n).unwrap(), members.to_vec()).unwrap()
}
