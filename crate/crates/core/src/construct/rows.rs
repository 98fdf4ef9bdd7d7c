//! Optimal constructions for two, three and four rows.

use super::alg1::{vertical_pass, VerticalPass};
use crate::certificate::Certificate;
use crate::error::GridError;
use crate::grid::Vertex;

fn check_columns(n: usize, m: usize) -> Result<(), GridError> {
    if n < 2 {
        return Err(GridError::Unsupported {
            n,
            m,
            reason: "need at least two columns",
        });
    }
    Ok(())
}

/// Covers rows 1 and `m` with one straight path each, from the first anchor to the last one
/// in that row. Whatever the staircases leave uncovered at the right end of row 1 is already
/// covered by the staircase of column `n`.
pub(crate) fn close_outer_rows(pass: &mut VerticalPass) {
    let (k, h) = (pass.k, pass.h);
    let a_last = if h > k { pass.a(k + 1) } else { pass.a(k) };
    let b_last = if h >= 1 { pass.b(k + 1) } else { pass.b(k) };
    let (a1, b1) = (pass.a(1), pass.b(1));
    if a_last != a1 {
        pass.draft.connect_straight(a1, a_last);
    }
    if b_last != b1 {
        pass.draft.connect_straight(b1, b_last);
    }
}

/// `P_n □ P_2` with `⌈2√n⌉` vertices.
pub fn construct_p2(n: usize) -> Result<Certificate, GridError> {
    check_columns(n, 2)?;
    let mut pass = vertical_pass(n, 2, false)?;
    close_outer_rows(&mut pass);
    Ok(pass.draft.into_certificate())
}

/// `P_n □ P_3` with `⌈2√(n+1)⌉` vertices.
pub fn construct_p3(n: usize) -> Result<Certificate, GridError> {
    check_columns(n, 3)?;
    let mut p = vertical_pass(n, 3, false)?;
    let (k, h) = (p.k, p.h);
    if h == 0 || h == k {
        let extra = Vertex::new(n, 2);
        p.draft.add_vertex(extra);
        let path = p.draft.through_row(p.a(1), extra, 2);
        p.draft.connect(path);
    } else {
        if h < k {
            p.draft.cover_column(p.a(k), p.b(k + 1), k * k + 1);
        } else {
            p.draft.cover_column(p.a(k + 1), p.b(k + 1), n);
            p.draft.recover_column(p.a(k + 1), p.b(h - k), k * k + 1);
        }
        let middle = p.draft.through_row(p.a(1), p.b(k + 1), 2);
        p.draft.reroute(middle);
    }
    close_outer_rows(&mut p);
    Ok(p.draft.into_certificate())
}

/// `P_n □ P_4` with `2k+1`, `2k+2` or `2k+3` vertices depending on where `h` falls.
pub fn construct_p4(n: usize) -> Result<Certificate, GridError> {
    check_columns(n, 4)?;
    let mut p = vertical_pass(n, 4, false)?;
    let (k, h) = (p.k, p.h);
    if h == 0 || h == k || h == 2 * k {
        let extra = Vertex::new(n, 2);
        p.draft.add_vertex(extra);
        let second = p.draft.through_row(p.a(1), extra, 2);
        let third = p.draft.through_row(p.b(1), extra, 3);
        p.draft.connect(second);
        p.draft.connect(third);
        close_outer_rows(&mut p);
    } else if h < k {
        let c = Vertex::new(n, 3);
        p.draft.remove_vertex(p.b(k + 1));
        p.draft.add_vertex(c);
        for j in 1..=h {
            p.draft.cover_column(p.a(j + 1), c, k * k + j);
            p.draft.cover_column(p.b(j + 1), c, k * k + j);
        }
        let second = p.draft.through_row(p.a(1), c, 2);
        let third = p.draft.through_row(p.b(1), c, 3);
        p.draft.connect(second);
        p.draft.connect(third);
        p.draft.connect_straight(p.a(1), p.a(k));
        p.draft.connect_straight(p.b(1), p.b(k));
    } else {
        p.draft.cover_column(p.a(k + 1), p.b(k + 1), n);
        if h - k >= 2 {
            p.draft.recover_column(p.a(k + 1), p.b(h - k), k * (k + 1) + 1);
        }
        let third = p.draft.through_row(p.a(k + 1), p.b(1), 3);
        p.draft.reroute(third);
        p.draft.cover_column(p.a(k + 1), p.b(k), k * k + 1);
        let second = p.draft.through_row(p.a(1), p.b(k + 1), 2);
        p.draft.reroute(second);
        close_outer_rows(&mut p);
    }
    Ok(p.draft.into_certificate())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::verify;
    use crate::formulas::{sge_four_rows, sge_three_rows, sge_two_rows};

    #[test]
    fn optimal_sizes_and_valid() {
        for n in 2..150 {
            let nn = n as u64;
            for (c, want) in [
                (construct_p2(n).unwrap(), sge_two_rows(nn)),
                (construct_p3(n).unwrap(), sge_three_rows(nn)),
                (construct_p4(n).unwrap(), sge_four_rows(nn)),
            ] {
                let r = verify(&c);
                assert!(r.valid, "{}: {r:?}", c.spec);
                assert_eq!(c.size() as u64, want, "{}", c.spec);
            }
        }
    }

    #[test]
    fn one_column_rejected() {
        assert!(construct_p2(1).is_err());
        assert!(construct_p4(1).is_err());
    }
}
