//! Static figures of grid certificates: the grid lattice in light gray, each assigned path as
//! a thick polyline, and the members of `S` as filled black discs. Row 1 is drawn at the
//! bottom. Output depends only on the certificate, so it is byte-for-byte reproducible.

use std::fmt::Write;

use sge_core::Certificate;

const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf",
];

const TIKZ_PALETTE: [&str; 8] = [
    "blue", "red", "green!60!black", "violet", "orange", "brown", "magenta", "cyan!70!black",
];

const UNIT: usize = 40;
const MARGIN: usize = 30;

pub fn svg(c: &Certificate) -> String {
    let (n, m) = (c.spec.n(), c.spec.m());
    let width = 2 * MARGIN + (n - 1) * UNIT;
    let height = 2 * MARGIN + (m - 1) * UNIT;
    let px = |x: usize| MARGIN + (x - 1) * UNIT;
    let py = |y: usize| MARGIN + (m - y) * UNIT;

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    )
    .unwrap();
    writeln!(out, r#"<rect width="{width}" height="{height}" fill="white"/>"#).unwrap();
    writeln!(out, r##"<g stroke="#c8c8c8" stroke-width="1">"##).unwrap();
    for y in 1..=m {
        writeln!(out, r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#, px(1), py(y), px(n), py(y))
            .unwrap();
    }
    for x in 1..=n {
        writeln!(out, r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#, px(x), py(1), px(x), py(m))
            .unwrap();
    }
    writeln!(out, "</g>").unwrap();

    writeln!(
        out,
        r#"<g fill="none" stroke-width="4" stroke-linecap="round" stroke-linejoin="round" stroke-opacity="0.75">"#
    )
    .unwrap();
    for (i, a) in c.assignments.iter().enumerate() {
        let points: Vec<String> = a
            .path
            .vertices()
            .iter()
            .map(|v| format!("{},{}", px(v.x), py(v.y)))
            .collect();
        writeln!(
            out,
            r#"<polyline stroke="{}" points="{}"/>"#,
            PALETTE[i % PALETTE.len()],
            points.join(" ")
        )
        .unwrap();
    }
    writeln!(out, "</g>").unwrap();

    writeln!(out, r#"<g fill="black">"#).unwrap();
    for v in &c.set {
        writeln!(out, r#"<circle cx="{}" cy="{}" r="7"/>"#, px(v.x), py(v.y)).unwrap();
    }
    writeln!(out, "</g>").unwrap();
    writeln!(out, "</svg>").unwrap();
    out
}

pub fn tikz(c: &Certificate) -> String {
    let (n, m) = (c.spec.n(), c.spec.m());
    let mut out = String::new();
    writeln!(out, r"\begin{{tikzpicture}}[scale=0.6]").unwrap();
    writeln!(out, r"  \draw[gray!40] (1,1) grid ({n},{m});").unwrap();
    for (i, a) in c.assignments.iter().enumerate() {
        let points: Vec<String> = a
            .path
            .vertices()
            .iter()
            .map(|v| format!("({},{})", v.x, v.y))
            .collect();
        writeln!(
            out,
            r"  \draw[{}, line width=2pt, opacity=0.75, line join=round] {};",
            TIKZ_PALETTE[i % TIKZ_PALETTE.len()],
            points.join(" -- ")
        )
        .unwrap();
    }
    for v in &c.set {
        writeln!(out, r"  \fill ({},{}) circle (5pt);", v.x, v.y).unwrap();
    }
    writeln!(out, r"\end{{tikzpicture}}").unwrap();
    out
}
