//! Types of the first or last column of a four-row grid, by which of its rows belong to `S`,
//! and the minimum column redundancy each type forces.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum ColumnType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    H,
    I,
}

impl ColumnType {
    pub const ALL: [ColumnType; 9] = [
        ColumnType::A,
        ColumnType::B,
        ColumnType::C,
        ColumnType::D,
        ColumnType::E,
        ColumnType::F,
        ColumnType::G,
        ColumnType::H,
        ColumnType::I,
    ];

    /// One representative row set; the other (if any) is its reflection.
    pub fn representative(self) -> &'static [usize] {
        match self {
            ColumnType::A => &[1, 2, 3, 4],
            ColumnType::B => &[1, 2, 3],
            ColumnType::C => &[1, 2, 4],
            ColumnType::D => &[1, 2],
            ColumnType::E => &[1, 3],
            ColumnType::F => &[1, 4],
            ColumnType::G => &[2, 3],
            ColumnType::H => &[1],
            ColumnType::I => &[2],
        }
    }
}

impl fmt::Display for ColumnType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

fn mask(rows: &BTreeSet<usize>) -> u8 {
    rows.iter()
        .filter(|r| (1..=4).contains(*r))
        .fold(0, |acc, r| acc | 1 << (r - 1))
}

fn reflect(bits: u8) -> u8 {
    (0..4).fold(0, |acc, i| if bits & (1 << i) != 0 { acc | 1 << (3 - i) } else { acc })
}

/// Type of a boundary column given the rows (1..=4) of its `S`-vertices. The empty column
/// has no type. Rows outside 1..=4 are ignored.
pub fn classify_column_type(rows: &BTreeSet<usize>) -> Option<ColumnType> {
    let bits = mask(rows);
    if bits == 0 {
        return None;
    }
    ColumnType::ALL.into_iter().find(|t| {
        let rep = mask(&t.representative().iter().copied().collect());
        rep == bits || reflect(rep) == bits
    })
}

/// Minimum column redundancy forced by each type.
pub fn r_of_type(t: ColumnType) -> i64 {
    match t {
        ColumnType::A => 7,
        ColumnType::B => 2,
        ColumnType::C => 4,
        ColumnType::D => 1,
        ColumnType::E => 1,
        ColumnType::F => 2,
        ColumnType::G => 0,
        ColumnType::H => 3,
        ColumnType::I => 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(r: &[usize]) -> BTreeSet<usize> {
        r.iter().copied().collect()
    }

    #[test]
    fn table_rows() {
        assert_eq!(classify_column_type(&rows(&[1, 2, 4])), Some(ColumnType::C));
        assert_eq!(classify_column_type(&rows(&[3, 4])), Some(ColumnType::D));
        assert_eq!(classify_column_type(&rows(&[2, 3])), Some(ColumnType::G));
        assert_eq!(classify_column_type(&rows(&[2, 4])), Some(ColumnType::E));
        assert_eq!(classify_column_type(&rows(&[3])), Some(ColumnType::I));
        assert_eq!(classify_column_type(&rows(&[])), None);
    }

    #[test]
    fn every_nonempty_subset_has_a_type_closed_under_reflection() {
        for bits in 1u8..16 {
            let set: BTreeSet<usize> = (1..=4).filter(|r| bits & (1 << (r - 1)) != 0).collect();
            let mirrored: BTreeSet<usize> = set.iter().map(|r| 5 - r).collect();
            let t = classify_column_type(&set);
            assert!(t.is_some());
            assert_eq!(t, classify_column_type(&mirrored));
        }
    }

    #[test]
    fn r_values() {
        assert_eq!(r_of_type(ColumnType::C), 4);
        assert_eq!(r_of_type(ColumnType::G), 0);
        assert_eq!(r_of_type(ColumnType::A), 7);
    }
}
