//! Closed-form values and bounds for the strong edge geodetic number of grids.
//!
//! Everything here is exact integer arithmetic on the decomposition `n = k² + h`,
//! `0 ≤ h ≤ 2k`; no floating point is involved.

use serde::Serialize;

use crate::construct::decompose;
use crate::error::FormulaError;

/// `⌈2√n⌉` via the case split on `n = k² + h`: `2k` if `h = 0`, `2k + 1` if `1 ≤ h ≤ k`,
/// `2k + 2` otherwise.
pub fn ceil_two_sqrt(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    let d = decompose(n).expect("n is positive");
    let (k, h) = (d.k, d.h);
    if h == 0 {
        2 * k
    } else if h <= k {
        2 * k + 1
    } else {
        2 * k + 2
    }
}

fn check_dims(n: u64, m: u64) -> Result<(), FormulaError> {
    if n < 2 || m < 2 {
        return Err(FormulaError::DimensionTooSmall { n, m });
    }
    Ok(())
}

/// `sge(P_n □ P_2) = ⌈2√n⌉`.
pub fn sge_two_rows(n: u64) -> u64 {
    ceil_two_sqrt(n)
}

/// `sge(P_n □ P_3) = ⌈2√(n+1)⌉`.
pub fn sge_three_rows(n: u64) -> u64 {
    ceil_two_sqrt(n + 1)
}

/// `sge(P_n □ P_4)`: `2k+1` for `0 ≤ h ≤ k−1`, `2k+2` for `k ≤ h ≤ 2k−1`, `2k+3` for `h = 2k`.
pub fn sge_four_rows(n: u64) -> u64 {
    let d = decompose(n).expect("n is positive");
    let (k, h) = (d.k, d.h);
    if h < k {
        2 * k + 1
    } else if h < 2 * k {
        2 * k + 2
    } else {
        2 * k + 3
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LowerSource {
    /// `⌈2√|F|⌉` for the convex edge cut between the first two rows (or columns).
    ConvexCut,
    /// Exact value.
    Theorem,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum UpperSource {
    /// Outer rows plus a rotated cover of the inner band: `⌈2√n⌉ + ⌈2√(m−2)⌉`.
    BandSplit,
    /// Corner-sharing vertical and horizontal passes: `⌈2√(n+2)⌉ + ⌈2√m⌉ − 4`.
    CornerSharing,
    Theorem,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundBracket {
    pub lower: u64,
    pub upper: u64,
    pub lower_source: LowerSource,
    pub upper_source: UpperSource,
    /// The upper bound is attained on the transposed grid `P_m □ P_n`.
    pub upper_transposed: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum SgeValue {
    Exact(u64),
    Bracket(BoundBracket),
}

impl SgeValue {
    pub fn exact(&self) -> Option<u64> {
        match self {
            SgeValue::Exact(v) => Some(*v),
            SgeValue::Bracket(_) => None,
        }
    }

    pub fn upper(&self) -> u64 {
        match self {
            SgeValue::Exact(v) => *v,
            SgeValue::Bracket(b) => b.upper,
        }
    }

    pub fn lower(&self) -> u64 {
        match self {
            SgeValue::Exact(v) => *v,
            SgeValue::Bracket(b) => b.lower,
        }
    }
}

/// Lower bound from the convex edge cut separating the first row (or column), taken in the
/// stronger orientation: `⌈2√max(n,m)⌉`.
pub fn convex_cut_lower_bound(n: u64, m: u64) -> Result<u64, FormulaError> {
    check_dims(n, m)?;
    Ok(ceil_two_sqrt(n.max(m)))
}

/// `⌈2√n⌉ + ⌈2√(m−2)⌉`, valid for `n, m ≥ 2`.
pub fn band_split_bound(n: u64, m: u64) -> Result<u64, FormulaError> {
    check_dims(n, m)?;
    Ok(ceil_two_sqrt(n) + ceil_two_sqrt(m - 2))
}

/// `⌈2√(n+2)⌉ + ⌈2√m⌉ − 4`, valid for `n, m ≥ 3`.
pub fn corner_sharing_bound(n: u64, m: u64) -> Result<u64, FormulaError> {
    if n < 3 || m < 3 {
        return Err(FormulaError::DimensionTooSmall { n, m });
    }
    Ok(ceil_two_sqrt(n + 2) + ceil_two_sqrt(m) - 4)
}

/// Best general upper bound over both constructions and both orientations.
/// Ties prefer the band split, then the untransposed grid.
pub fn best_general_upper(n: u64, m: u64) -> Result<(u64, UpperSource, bool), FormulaError> {
    check_dims(n, m)?;
    let mut best: Option<(u64, UpperSource, bool)> = None;
    for (source, transposed) in [
        (UpperSource::BandSplit, false),
        (UpperSource::BandSplit, true),
        (UpperSource::CornerSharing, false),
        (UpperSource::CornerSharing, true),
    ] {
        let (a, b) = if transposed { (m, n) } else { (n, m) };
        let bound = match source {
            UpperSource::BandSplit => band_split_bound(a, b).ok(),
            _ => corner_sharing_bound(a, b).ok(),
        };
        if let Some(bound) = bound {
            if best.is_none_or(|(v, _, _)| bound < v) {
                best = Some((bound, source, transposed));
            }
        }
    }
    Ok(best.expect("band split applies whenever n, m >= 2"))
}

/// Exact `sge(P_n □ P_m)` when the smaller side is 2, 3 or 4; otherwise the bracket from the
/// convex cut and the general constructions.
pub fn sge_grid(n: u64, m: u64) -> Result<SgeValue, FormulaError> {
    check_dims(n, m)?;
    let (long, short) = (n.max(m), n.min(m));
    let exact = match short {
        2 => Some(sge_two_rows(long)),
        3 => Some(sge_three_rows(long)),
        4 => Some(sge_four_rows(long)),
        _ => None,
    };
    if let Some(v) = exact {
        return Ok(SgeValue::Exact(v));
    }
    let (upper, upper_source, upper_transposed) = best_general_upper(n, m)?;
    Ok(SgeValue::Bracket(BoundBracket {
        lower: ceil_two_sqrt(long),
        upper,
        lower_source: LowerSource::ConvexCut,
        upper_source,
        upper_transposed,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ceil_two_sqrt_cases() {
        assert_eq!(ceil_two_sqrt(9), 6);
        assert_eq!(ceil_two_sqrt(12), 7);
        assert_eq!(ceil_two_sqrt(15), 8);
        assert_eq!(ceil_two_sqrt(0), 0);
        assert_eq!(ceil_two_sqrt(1), 2);
        assert_eq!(ceil_two_sqrt(2), 3);
    }

    #[test]
    fn exact_values() {
        assert_eq!(sge_grid(16, 2), Ok(SgeValue::Exact(8)));
        assert_eq!(sge_grid(9, 3), Ok(SgeValue::Exact(7)));
        assert_eq!(sge_grid(15, 4), Ok(SgeValue::Exact(9)));
        assert_eq!(sge_grid(4, 15), Ok(SgeValue::Exact(9)));
        assert_eq!(sge_grid(2, 2), Ok(SgeValue::Exact(3)));
        assert_eq!(sge_grid(3, 4), Ok(SgeValue::Exact(5)));
    }

    #[test]
    fn small_dimensions_rejected() {
        assert!(sge_grid(1, 5).is_err());
        assert!(convex_cut_lower_bound(7, 1).is_err());
    }

    #[test]
    fn convex_cut() {
        assert_eq!(convex_cut_lower_bound(10, 3), Ok(7));
        assert_eq!(convex_cut_lower_bound(4, 9), Ok(6));
        assert_eq!(convex_cut_lower_bound(2, 2), Ok(3));
    }

    #[test]
    fn bracket_for_wide_grids() {
        let SgeValue::Bracket(b) = sge_grid(14, 8).unwrap() else {
            panic!("m >= 5 gives a bracket");
        };
        assert_eq!(b.lower, 8);
        assert!(b.lower <= b.upper);
        assert!(b.upper <= 8 + 5);
    }

    #[test]
    fn four_row_formula_small_cases() {
        // n = 2: k=1, h=1 -> 2k+2; n = 3: h = 2k -> 2k+3; n = 4: k=2, h=0 -> 2k+1.
        assert_eq!(sge_four_rows(2), 4);
        assert_eq!(sge_four_rows(3), 5);
        assert_eq!(sge_four_rows(4), 5);
        assert_eq!(sge_four_rows(14), 8);
        assert_eq!(sge_four_rows(11), 7);
    }
}
