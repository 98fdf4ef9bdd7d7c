//! Constructions for arbitrary `n, m`, which give upper bounds only.

use super::alg1::vertical_pass;
use super::rows::close_outer_rows;
use crate::certificate::Certificate;
use crate::error::GridError;
use crate::grid::Vertex;

fn at_least(n: usize, m: usize, min: usize) -> Result<(), GridError> {
    if n < min || m < min {
        return Err(GridError::Unsupported {
            n,
            m,
            reason: if min == 2 {
                "both sides must be at least 2"
            } else {
                "both sides must be at least 3"
            },
        });
    }
    Ok(())
}

/// `⌈2√n⌉ + ⌈2√(m−2)⌉` vertices: vertical edges and the outer rows as for two rows, then the
/// horizontal edges of rows `2..m−1` by a vertical pass on the rotated inner band.
pub fn construct_general(n: usize, m: usize) -> Result<Certificate, GridError> {
    at_least(n, m, 2)?;
    let mut outer = vertical_pass(n, m, false)?;
    close_outer_rows(&mut outer);
    let mut draft = outer.draft;
    if m >= 3 {
        let band = vertical_pass(m - 2, n, false)?;
        draft.absorb(band.draft, |v| Vertex::new(n + 1 - v.y, v.x + 1));
    }
    Ok(draft.into_certificate())
}

/// `⌈2√(n+2)⌉ + ⌈2√m⌉ − 4` vertices: a corner-containing vertical pass whose two diagonal
/// corner pairs are left free, plus a corner-containing pass on the transpose that reuses the
/// four corners.
pub fn construct_general_corners(n: usize, m: usize) -> Result<Certificate, GridError> {
    at_least(n, m, 3)?;
    let mut p = vertical_pass(n, m, true)?;
    let (k, h) = (p.k, p.h);
    let d = &mut p.draft;
    let (a, b) = (|i| p.anchors.a(i), |i| p.anchors.b(i));

    if h == 0 || h + 1 == k || h == k || h == 2 * k {
        let c = if k == 1 {
            Vertex::new(2, m)
        } else {
            Vertex::new((k - 1) * (k - 1) + k, m)
        };
        d.add_vertex(c);
        if h == 2 * k {
            d.disconnect(a(1), b(k + 1));
            d.disconnect(a(k + 1), b(1));
            d.cover_column(a(k + 1), b(k + 1), n);
            if k >= 2 {
                d.recover_column(a(k + 1), b(k), k * (k + 1) + 1);
            }
            d.cover_column(a(k + 1), c, k * k + 1);
        } else {
            let far = if h == 0 { b(k) } else { b(k + 1) };
            d.disconnect(a(1), far);
            d.disconnect(a(k), b(1));
            d.cover_column(a(1), c, (k - 1) * (k - 1) + 1);
            let col = if h == 0 { (k - 1) * (k - 1) + k } else { k * k + 1 };
            d.cover_column(a(k), c, col);
        }
    } else if h < k {
        d.disconnect(a(1), b(k + 1));
        d.cover_column(a(k), b(k + 1), n);
        if h >= 2 {
            d.recover_column(a(h), b(k + 1), k * k + 1);
        }
        d.disconnect(a(k), b(1));
        d.cover_column(a(k - 1), b(k + 1), (k - 1) * (k - 1) + 1);
    } else {
        d.cover_column(a(k + 1), b(k + 1), n);
        if h - k >= 2 {
            d.recover_column(a(k + 1), b(h - k), k * (k + 1) + 1);
        }
        d.disconnect(a(k + 1), b(1));
        d.disconnect(a(1), b(k + 1));
        d.cover_column(a(k + 1), b(k), k * k + 1);
    }

    let [c11, c1m, cn1, cnm] = [
        Vertex::new(1, 1),
        Vertex::new(1, m),
        Vertex::new(n, 1),
        Vertex::new(n, m),
    ];
    assert!(!d.has_pair(c11, cnm) && !d.has_pair(cn1, c1m));

    let mut draft = p.draft;
    let across = vertical_pass(m, n, true)?;
    draft.absorb(across.draft, Vertex::transposed);
    Ok(draft.into_certificate())
}
