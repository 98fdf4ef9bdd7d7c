//! Counting polynomials bounding how many vertical edges pairs of `s` vertices can cover in
//! three- and four-row grids, and their integer maxima.
//!
//! With `a, b, c (, d)` vertices in rows 1, 2, 3 (, 4), a pair in rows `i < j` covers at most
//! `j − i` vertical edges, which gives
//! `f₃ = ab + bc + 2ac` and `f₄ = ab + bc + cd + 2ac + 2bd + 3ad`.

use num_rational::Ratio;
use serde::Serialize;

use crate::error::FormulaError;

pub fn f3(a: u64, b: u64, c: u64) -> u64 {
    a * b + b * c + 2 * a * c
}

pub fn f4(a: u64, b: u64, c: u64, d: u64) -> u64 {
    a * b + b * c + c * d + 2 * a * c + 2 * b * d + 3 * a * d
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct F4Constraints {
    pub min_b: u64,
    pub min_c: u64,
    pub min_bc_sum: u64,
}

impl F4Constraints {
    fn admits(&self, b: u64, c: u64) -> bool {
        b >= self.min_b && c >= self.min_c && b + c >= self.min_bc_sum
    }
}

/// An integer maximum and the first maximizer in lexicographic order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Maximum<const N: usize> {
    pub value: u64,
    #[serde(serialize_with = "serialize_array")]
    pub argmax: [u64; N],
}

fn serialize_array<S: serde::Serializer, const N: usize>(
    a: &[u64; N],
    s: S,
) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(N))?;
    for x in a {
        seq.serialize_element(x)?;
    }
    seq.end()
}

/// Maximum of `f₃` over nonnegative integers with `a + b + c = s` and `b ≥ min_b`.
pub fn max_f3(s: u64, min_b: u64) -> Result<Maximum<3>, FormulaError> {
    if min_b > s {
        return Err(FormulaError::Infeasible { required: min_b, s });
    }
    let mut best: Option<Maximum<3>> = None;
    for a in 0..=s - min_b {
        for b in min_b..=s - a {
            let c = s - a - b;
            let value = f3(a, b, c);
            if best.is_none_or(|m| value > m.value) {
                best = Some(Maximum { value, argmax: [a, b, c] });
            }
        }
    }
    Ok(best.expect("feasible"))
}

/// Maximum of `f₄` over nonnegative integers with `a + b + c + d = s` under `constraints`.
pub fn max_f4(s: u64, constraints: F4Constraints) -> Result<Maximum<4>, FormulaError> {
    let required = (constraints.min_b + constraints.min_c).max(constraints.min_bc_sum);
    if required > s {
        return Err(FormulaError::Infeasible { required, s });
    }
    let mut best: Option<Maximum<4>> = None;
    for a in 0..=s {
        for b in 0..=s - a {
            for c in 0..=s - a - b {
                if !constraints.admits(b, c) {
                    continue;
                }
                let d = s - a - b - c;
                let value = f4(a, b, c, d);
                if best.is_none_or(|m| value > m.value) {
                    best = Some(Maximum { value, argmax: [a, b, c, d] });
                }
            }
        }
    }
    Ok(best.expect("feasible"))
}

/// Real upper bounds on `f₃`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum F3Row {
    Unconstrained,
    MiddleAtLeastOne,
}

impl F3Row {
    pub const ALL: [F3Row; 2] = [F3Row::Unconstrained, F3Row::MiddleAtLeastOne];

    pub fn min_b(self) -> u64 {
        match self {
            F3Row::Unconstrained => 0,
            F3Row::MiddleAtLeastOne => 1,
        }
    }

    /// `s²/2`, or `(s² − 1)/2` when `b ≥ 1`.
    pub fn real_bound(self, s: u64) -> Ratio<i64> {
        let s2 = (s * s) as i64;
        match self {
            F3Row::Unconstrained => Ratio::new(s2, 2),
            F3Row::MiddleAtLeastOne => Ratio::new(s2 - 1, 2),
        }
    }
}

/// Rows of the table of real upper bounds on `f₄`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum F4Row {
    /// `a, b, c, d ≥ 0`: `3s²/4`.
    Unconstrained,
    /// `b ≥ 1`: `(9s² − 8)/12`.
    SecondRowOccupied,
    /// `b + c ≥ 2`: `(3s² − 8)/4`.
    MiddleAtLeastTwo,
    /// `b + c ≥ 3`: `(3s² − 18)/4`.
    MiddleAtLeastThree,
}

impl F4Row {
    pub const ALL: [F4Row; 4] = [
        F4Row::Unconstrained,
        F4Row::SecondRowOccupied,
        F4Row::MiddleAtLeastTwo,
        F4Row::MiddleAtLeastThree,
    ];

    pub fn constraints(self) -> F4Constraints {
        match self {
            F4Row::Unconstrained => F4Constraints::default(),
            F4Row::SecondRowOccupied => F4Constraints { min_b: 1, ..Default::default() },
            F4Row::MiddleAtLeastTwo => F4Constraints { min_bc_sum: 2, ..Default::default() },
            F4Row::MiddleAtLeastThree => F4Constraints { min_bc_sum: 3, ..Default::default() },
        }
    }

    pub fn real_bound(self, s: u64) -> Ratio<i64> {
        let s2 = (s * s) as i64;
        match self {
            F4Row::Unconstrained => Ratio::new(3 * s2, 4),
            F4Row::SecondRowOccupied => Ratio::new(9 * s2 - 8, 12),
            F4Row::MiddleAtLeastTwo => Ratio::new(3 * s2 - 8, 4),
            F4Row::MiddleAtLeastThree => Ratio::new(3 * s2 - 18, 4),
        }
    }
}
