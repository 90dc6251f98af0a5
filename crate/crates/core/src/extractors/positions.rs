//! Recursive selection of positions with pointwise-decreasing function
//! values: given functions `f_1..f_{s-1}` from positions to `1..=n`, find
//! `x_1 < ... < x_s` with `f_i(x_i) >= f_i(x_{i+1})` for every `i`.
//!
//! The implementation is the inductive proof itself: build the strictly
//! increasing record sequence of `f_1`, recurse on the remaining functions
//! over the non-record positions, then pick `x_1` as the largest record
//! below `x_2`.

use crate::error::{Error, Result};

/// Positions are 0-based; values must lie in `1..=value_cap`. Requires
/// `n_positions >= (fns.len() + 1) * value_cap` and that each function is
/// defined on all of `0..n_positions`.
pub fn select_decreasing_positions(
    fns: &[Vec<usize>],
    n_positions: usize,
    value_cap: usize,
) -> Result<Vec<usize>> {
    let s = fns.len() + 1;
    if value_cap < 1 {
        return Err(Error::Precondition("value cap must be at least 1".into()));
    }
    if n_positions < s * value_cap {
        return Err(Error::Precondition(format!(
            "need at least s*n = {} positions, got {n_positions}",
            s * value_cap
        )));
    }
    for (i, f) in fns.iter().enumerate() {
        if f.len() != n_positions {
            return Err(Error::Precondition(format!(
                "function {i} is defined on {} positions, expected {n_positions}",
                f.len()
            )));
        }
        if let Some(&bad) = f.iter().find(|&&v| v < 1 || v > value_cap) {
            return Err(Error::Precondition(format!(
                "function {i} takes value {bad} outside 1..={value_cap}"
            )));
        }
    }
    let avail: Vec<usize> = (0..n_positions).collect();
    let picks = recurse(fns, &avail)?;
    debug_assert!(picks.windows(2).all(|w| w[0] < w[1]));
    debug_assert!((0..fns.len()).all(|i| fns[i][picks[i]] >= fns[i][picks[i + 1]]));
    Ok(picks)
}

fn recurse(fns: &[Vec<usize>], avail: &[usize]) -> Result<Vec<usize>> {
    let Some(&first) = avail.first() else {
        return Err(Error::Precondition(
            "ran out of positions during selection".into(),
        ));
    };
    if fns.is_empty() {
        return Ok(vec![first]);
    }
    let f1 = &fns[0];
    // Strictly increasing records of f_1 over the available positions.
    let mut records = vec![first];
    for &p in &avail[1..] {
        if f1[p] > f1[*records.last().unwrap()] {
            records.push(p);
        }
    }
    let rest: Vec<usize> = {
        let mut out = Vec::with_capacity(avail.len() - records.len());
        let mut r = 0;
        for &p in avail {
            if r < records.len() && records[r] == p {
                r += 1;
            } else {
                out.push(p);
            }
        }
        out
    };
    let tail = recurse(&fns[1..], &rest)?;
    let x2 = tail[0];
    // The first record is the smallest available position, so a record
    // below x2 always exists.
    let x1 = *records
        .iter()
        .rev()
        .find(|&&y| y < x2)
        .expect("first record is below every non-record");
    let mut out = Vec::with_capacity(tail.len() + 1);
    out.push(x1);
    out.extend(tail);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    #[test]
    fn single_function_free_case_picks_smallest() {
        // s = 1: no inequalities, the single smallest position is returned.
        let picks = select_decreasing_positions(&[], 3, 1).unwrap();
        assert_eq!(picks, vec![0]);
    }

    #[test]
    fn hand_traced_example() {
        // f_1 = (1,2,1,2) on four positions with n = 2: records are
        // positions 0,1; the recursion picks x_2 = 2 and the largest record
        // below it is 1. (The trace is (2,3) in 1-based positions.)
        let picks = select_decreasing_positions(&[vec![1, 2, 1, 2]], 4, 2).unwrap();
        assert_eq!(picks, vec![1, 2]);
        let f = [1, 2, 1, 2];
        assert!(f[picks[0]] >= f[picks[1]]);
    }

    #[test]
    fn constant_functions_always_valid() {
        let fns = vec![vec![1; 6], vec![1; 6]];
        let picks = select_decreasing_positions(&fns, 6, 2).unwrap();
        assert_eq!(picks.len(), 3);
        assert!(picks.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn too_few_positions_is_a_precondition_error() {
        assert!(select_decreasing_positions(&[vec![1, 1]], 2, 2).is_err());
    }

    #[test]
    fn random_instances_satisfy_all_inequalities() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..500 {
            let s = rng.gen_range(1..=5usize);
            let n = rng.gen_range(1..=6usize);
            let big = s * n;
            let fns: Vec<Vec<usize>> = (0..s - 1)
                .map(|_| (0..big).map(|_| rng.gen_range(1..=n)).collect())
                .collect();
            let picks = select_decreasing_positions(&fns, big, n).unwrap();
            assert_eq!(picks.len(), s);
            for i in 0..s - 1 {
                assert!(fns[i][picks[i]] >= fns[i][picks[i + 1]]);
            }
        }
    }
}
