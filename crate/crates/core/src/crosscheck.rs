//! Cross-validation of the root-theoretic pipeline against the isotropic
//! `OG(2, C^m)` oracle: class counts, horizontal dimension multisets, and
//! maximal horizontal data.
//!
//! The root-side context for `OG(2, C^m)` is `B_r{2}` for `m = 2r + 1` and
//! `D_r{2}` for `m = 2r`. Two boundary cases: `m = 5` is `B2{2}` (accepted as
//! the `C2` alias), and `m = 6` falls outside the `D_r (r >= 4)` family, so
//! the isomorphic `A3{1,3}` stabilizer of an isotropic 2-plane in `C^6` is
//! used instead.

use crate::error::{Error, Result};
use crate::isotropic::{enumerate_og2, maximal_hsv_og2};
use crate::schubert::{enumerate_hsv, maximal_elements, ParabolicContext};
use crate::weyl::enumerate_min_reps;

/// Outcome of one cross-check run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrosscheckReport {
    pub m: usize,
    /// Diagram spec of the root-side context.
    pub context_spec: String,
    pub oracle_count: usize,
    pub weyl_count: usize,
    /// Sorted dimension multisets of the horizontal classes.
    pub oracle_horizontal_dims: Vec<usize>,
    pub weyl_horizontal_dims: Vec<usize>,
    pub oracle_max_dim: usize,
    pub weyl_max_dim: usize,
    pub expected_max_dim: usize,
    pub oracle_maximal_count: usize,
    pub weyl_maximal_count: usize,
    pub pass: bool,
}

/// Diagram spec of the root-side context modeling `OG(2, C^m)`.
pub fn og2_context_spec(m: usize) -> Result<String> {
    if !(5..=12).contains(&m) {
        return Err(Error::CrosscheckRange(m));
    }
    Ok(if m == 6 {
        "A3{1,3}".to_string()
    } else if m % 2 == 1 {
        format!("B{}{{2}}", m / 2)
    } else {
        format!("D{}{{2}}", m / 2)
    })
}

/// Run both pipelines for `OG(2, C^m)` and compare.
pub fn crosscheck(m: usize) -> Result<CrosscheckReport> {
    let spec = og2_context_spec(m)?;
    let ctx = ParabolicContext::from_spec(&spec)?;
    let r = m / 2;

    let oracle = enumerate_og2(m)?;
    let weyl_table = enumerate_min_reps(ctx.root_system(), ctx.marked(), None)?;

    let mut oracle_horizontal_dims: Vec<usize> = oracle
        .iter()
        .filter(|x| x.is_horizontal())
        .map(|x| x.dimension())
        .collect();
    oracle_horizontal_dims.sort_unstable();

    let hsv = enumerate_hsv(&ctx, true)?;
    let mut weyl_horizontal_dims: Vec<usize> = hsv.iter().map(|d| d.dim()).collect();
    weyl_horizontal_dims.sort_unstable();

    let oracle_maximal = maximal_hsv_og2(m)?;
    let weyl_maximal = maximal_elements(&ctx, &hsv)?;

    let oracle_max_dim = oracle_horizontal_dims.last().copied().unwrap_or(0);
    let weyl_max_dim = weyl_horizontal_dims.last().copied().unwrap_or(0);
    let expected_max_dim = m - 4;

    let counts_ok = oracle.len() == weyl_table.len();
    let dims_ok = oracle_horizontal_dims == weyl_horizontal_dims;
    let max_ok = oracle_max_dim == expected_max_dim
        && weyl_max_dim == expected_max_dim
        && oracle_maximal.iter().all(|x| x.dimension() == expected_max_dim)
        && weyl_maximal.iter().all(|&i| hsv[i].dim() == expected_max_dim);
    // Odd m: the maximal count is pinned to r - 1. Even m: the two pipelines
    // must agree; the locus X[r-1, r+1] is reducible there, so fixed-count
    // bookkeeping depends on how its two components are listed.
    let maximal_count_ok = if m % 2 == 1 {
        oracle_maximal.len() == r - 1 && weyl_maximal.len() == r - 1
    } else {
        oracle_maximal.len() == weyl_maximal.len()
    };

    Ok(CrosscheckReport {
        m,
        context_spec: spec,
        oracle_count: oracle.len(),
        weyl_count: weyl_table.len(),
        oracle_horizontal_dims,
        weyl_horizontal_dims,
        oracle_max_dim,
        weyl_max_dim,
        expected_max_dim,
        oracle_maximal_count: oracle_maximal.len(),
        weyl_maximal_count: weyl_maximal.len(),
        pass: counts_ok && dims_ok && max_ok && maximal_count_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_is_enforced() {
        assert_eq!(crosscheck(4).unwrap_err(), Error::CrosscheckRange(4));
        assert_eq!(crosscheck(13).unwrap_err(), Error::CrosscheckRange(13));
    }

    #[test]
    fn m7_passes() {
        let rep = crosscheck(7).unwrap();
        assert_eq!(rep.oracle_count, 12);
        assert_eq!(rep.weyl_count, 12);
        assert_eq!(rep.oracle_max_dim, 3);
        assert_eq!(rep.oracle_maximal_count, 2);
        assert!(rep.pass, "{rep:?}");
    }

    #[test]
    fn m9_passes() {
        let rep = crosscheck(9).unwrap();
        assert_eq!(rep.oracle_maximal_count, 3);
        assert_eq!(rep.weyl_maximal_count, 3);
        assert_eq!(rep.expected_max_dim, 5);
        assert!(rep.pass, "{rep:?}");
    }

    #[test]
    fn whole_range_passes() {
        for m in 5..=12 {
            let rep = crosscheck(m).unwrap();
            assert!(rep.pass, "m = {m}: {rep:?}");
        }
    }

    #[test]
    fn full_dimension_multisets_match() {
        // Not just the horizontal classes: every class dimension agrees with
        // the length of some minimal representative, as multisets.
        use crate::schubert::enumerate_all;
        for m in 5..=10 {
            let spec = og2_context_spec(m).unwrap();
            let ctx = ParabolicContext::from_spec(&spec).unwrap();
            let mut weyl: Vec<usize> =
                enumerate_all(&ctx, None).unwrap().iter().map(|d| d.dim()).collect();
            weyl.sort_unstable();
            let mut oracle: Vec<usize> =
                enumerate_og2(m).unwrap().iter().map(|x| x.dimension()).collect();
            oracle.sort_unstable();
            assert_eq!(oracle, weyl, "m = {m}");
        }
    }
}
