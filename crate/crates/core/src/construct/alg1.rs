use super::{decompose, AnchorSet, Draft};
use crate::certificate::Certificate;
use crate::error::GridError;
use crate::grid::{GridSpec, Vertex};

/// A finished vertical pass together with its anchors and `n = k² + h`.
pub(crate) struct VerticalPass {
    pub draft: Draft,
    pub anchors: AnchorSet,
    pub k: usize,
    pub h: usize,
}

impl VerticalPass {
    pub fn a(&self, i: usize) -> Vertex {
        self.anchors.a(i)
    }

    pub fn b(&self, i: usize) -> Vertex {
        self.anchors.b(i)
    }
}

/// Covers every vertical edge of `P_n □ P_m` with staircases between row 1 and row `m`.
///
/// With `corners`, the top-right anchor moves to `(n, 1)` so that all four corners are in
/// `S`; for `n = 2` this costs one extra vertex.
pub(crate) fn vertical_pass(n: usize, m: usize, corners: bool) -> Result<VerticalPass, GridError> {
    if m < 2 {
        return Err(GridError::Unsupported {
            n,
            m,
            reason: "a vertical pass needs at least two rows",
        });
    }
    let spec = GridSpec::new(n, m)?;
    let d = decompose(n as u64).expect("n is positive");
    let (k, h) = (d.k as usize, d.h as usize);

    let mut a: Vec<Vertex> = (1..=k).map(|i| Vertex::new(i * i, 1)).collect();
    let mut b: Vec<Vertex> = (1..=k).map(|i| Vertex::new(i * i, m)).collect();
    let wide = h > k || (corners && n == 2);
    if corners && !wide && h >= 1 {
        a[k - 1] = Vertex::new(n, 1);
    }
    if h >= 1 {
        b.push(Vertex::new(n, m));
    }
    if wide {
        a.push(Vertex::new(n, 1));
    }

    let mut draft = Draft::new(spec);
    for &v in a.iter().chain(&b) {
        draft.add_vertex(v);
    }
    let (ai, bi) = (|i: usize| a[i - 1], |i: usize| b[i - 1]);
    for i in 1..=k {
        for j in 1..i {
            draft.cover_column(ai(i), bi(j), (i - 1) * (i - 1) + j);
            draft.cover_column(ai(j), bi(i), i * (i - 1) + j);
        }
        draft.cover_column(ai(i), bi(i), i * i);
    }
    if h >= 1 {
        for j in 1..=h.min(k) {
            draft.cover_column(ai(j), bi(k + 1), k * k + j);
        }
    }
    if wide {
        for j in 1..=h.saturating_sub(k) {
            draft.cover_column(ai(k + 1), bi(j), k * (k + 1) + j);
        }
    }
    Ok(VerticalPass {
        draft,
        anchors: AnchorSet { a, b, c: None },
        k,
        h,
    })
}

/// Vertical-edge cover of `P_n □ P_m` with `⌈2√n⌉` vertices in rows 1 and `m`.
pub fn algorithm1(n: usize, m: usize) -> Result<Certificate, GridError> {
    Ok(vertical_pass(n, m, false)?.draft.into_certificate())
}

/// [`algorithm1`] plus the anchors it placed.
pub fn algorithm1_with_anchors(n: usize, m: usize) -> Result<(Certificate, AnchorSet), GridError> {
    let pass = vertical_pass(n, m, false)?;
    Ok((pass.draft.into_certificate(), pass.anchors))
}

/// Vertical-edge cover that contains all four corners. Same size as [`algorithm1`] except
/// for `n = 2`, where it needs 4 vertices.
pub fn algorithm1_star(n: usize, m: usize) -> Result<Certificate, GridError> {
    Ok(vertical_pass(n, m, true)?.draft.into_certificate())
}
