use std::collections::BTreeSet;

use sge_core::certificate::{column_vertical_edges, redundancy, verify, Assignment, Certificate};
use sge_core::construct::{
    algorithm1, algorithm1_star, algorithm1_with_anchors, construct, construct_general,
    construct_general_corners, construct_p2, construct_p3, construct_p4, decompose, Method,
};
use sge_core::formulas::ceil_two_sqrt;
use sge_core::grid::{row_geodesic, staircase_geodesic, GridSpec, Path, Vertex};

fn v(x: usize, y: usize) -> Vertex {
    Vertex::new(x, y)
}

fn set(points: &[(usize, usize)]) -> BTreeSet<Vertex> {
    points.iter().map(|&(x, y)| v(x, y)).collect()
}

fn assert_valid(c: &Certificate) {
    let r = verify(c);
    assert!(r.valid, "{}: {r:?}", c.spec);
}

fn has_path(c: &Certificate, points: &[(usize, usize)]) -> bool {
    let target: Vec<Vertex> = points.iter().map(|&(x, y)| v(x, y)).collect();
    let reversed: Vec<Vertex> = target.iter().rev().copied().collect();
    c.assignments.iter().any(|a| {
        let vs = a.path.vertices();
        vs == target.as_slice() || vs == reversed.as_slice()
    })
}

#[test]
fn two_rows_on_squares_uses_square_columns() {
    let c = construct_p2(16).unwrap();
    assert_valid(&c);
    assert_eq!(c.set, set(&[(1, 1), (1, 2), (4, 1), (4, 2), (9, 1), (9, 2), (16, 1), (16, 2)]));
}

#[test]
fn two_rows_with_remainder_adds_corner_vertices() {
    let c = construct_p2(20).unwrap();
    assert_valid(&c);
    assert_eq!(c.size(), 9);
    assert!(c.set.contains(&v(20, 2)));

    let c = construct_p2(24).unwrap();
    assert_valid(&c);
    assert_eq!(c.size(), 10);
    assert!(c.set.contains(&v(24, 1)) && c.set.contains(&v(24, 2)));
}

#[test]
fn vertical_pass_on_ten_columns() {
    let (c, anchors) = algorithm1_with_anchors(10, 2).unwrap();
    assert_eq!(c.size(), 7);
    assert_eq!(anchors.a, vec![v(1, 1), v(4, 1), v(9, 1)]);
    assert_eq!(anchors.b, vec![v(1, 2), v(4, 2), v(9, 2), v(10, 2)]);
    let r = verify(&c);
    assert!(r.uncovered_edges.iter().all(|e| e.is_horizontal()));
}

#[test]
fn vertical_pass_on_one_column() {
    let c = algorithm1(1, 6).unwrap();
    assert_eq!(c.set, set(&[(1, 1), (1, 6)]));
    assert_eq!(c.assignments.len(), 1);
    assert_eq!(c.assignments[0].path.len(), 5);
}

#[test]
fn vertical_pass_uses_each_column_once() {
    for n in 1..60 {
        for m in [2, 4, 7] {
            let c = algorithm1(n, m).unwrap();
            let r = verify(&c);
            assert!(r.stats.column_vertical_coverage.iter().all(|&k| k == m - 1), "{}", c.spec);
            assert_eq!(c.assignments.len(), n, "one pair per column on {}", c.spec);
        }
    }
}

#[test]
fn corner_variant_anchor_placement() {
    let (plain, _) = algorithm1_with_anchors(18, 5).unwrap();
    assert!(plain.set.is_superset(&set(&[(16, 1), (16, 5), (18, 5)])));
    assert!(!plain.set.contains(&v(18, 1)));

    let star = algorithm1_star(18, 5).unwrap();
    assert_eq!(
        star.set,
        set(&[(1, 1), (1, 5), (4, 1), (4, 5), (9, 1), (9, 5), (16, 5), (18, 1), (18, 5)])
    );
    assert_eq!(star.size() as u64, ceil_two_sqrt(18));
}

#[test]
fn corner_variant_equals_plain_on_squares() {
    for k in 1..8 {
        let n = k * k;
        assert_eq!(algorithm1(n, 4).unwrap(), algorithm1_star(n, 4).unwrap());
    }
}

#[test]
fn three_rows_short_remainder_layout() {
    let c = construct_p3(11).unwrap();
    assert_valid(&c);
    assert_eq!(c.set, set(&[(1, 1), (1, 3), (4, 1), (4, 3), (9, 1), (9, 3), (11, 3)]));
    assert!(has_path(&c, &[(9, 1), (10, 1), (10, 2), (10, 3), (11, 3)]));
    let middle: Vec<(usize, usize)> = [(1, 1)]
        .into_iter()
        .chain((1..=11).map(|x| (x, 2)))
        .chain([(11, 3)])
        .collect();
    assert!(has_path(&c, &middle));
}

#[test]
fn three_rows_long_remainder_layout() {
    let c = construct_p3(15).unwrap();
    assert_valid(&c);
    assert_eq!(
        c.set,
        set(&[(1, 1), (1, 3), (4, 1), (4, 3), (9, 1), (9, 3), (15, 1), (15, 3)])
    );
}

#[test]
fn three_rows_on_a_square_adds_middle_vertex() {
    let c = construct_p3(9).unwrap();
    assert_valid(&c);
    assert_eq!(c.size(), 7);
    assert!(c.set.contains(&v(9, 2)));
}

#[test]
fn four_rows_layouts() {
    let c = construct_p4(11).unwrap();
    assert_valid(&c);
    assert_eq!(c.set, set(&[(1, 1), (1, 4), (4, 1), (4, 4), (9, 1), (9, 4), (11, 3)]));

    let c = construct_p4(14).unwrap();
    assert_valid(&c);
    assert_eq!(
        c.set,
        set(&[(1, 1), (1, 4), (4, 1), (4, 4), (9, 1), (9, 4), (14, 1), (14, 4)])
    );

    let c = construct_p4(15).unwrap();
    assert_valid(&c);
    assert_eq!(c.size(), 9);
}

#[test]
fn four_rows_on_a_square_adds_one_vertex() {
    let c = construct_p4(10).unwrap();
    assert_valid(&c);
    assert!(c.set.contains(&v(10, 3)));
    assert_eq!(c.size(), 7);
}

#[test]
fn band_split_examples() {
    let c = construct_general(14, 8).unwrap();
    assert_valid(&c);
    assert!(c.size() <= 13);
    // Inner band anchors sit on the outer columns, one row below their band row.
    assert!(c.set.is_superset(&set(&[(1, 2), (1, 5), (1, 7), (14, 2), (14, 5)])));

    for n in 2..30 {
        assert_eq!(construct_general(n, 2).unwrap(), construct_p2(n).unwrap());
    }

    let c = construct_general(5, 3).unwrap();
    assert_valid(&c);
    assert!(c.size() <= 7);
}

#[test]
fn corner_sharing_examples() {
    for (n, m, bound) in [(10, 5, 8), (9, 9, 9), (16, 3, 9)] {
        let c = construct_general_corners(n, m).unwrap();
        assert_valid(&c);
        assert!(c.size() <= bound, "({n},{m}): {}", c.size());
    }
    // Sharp when m = 3 and n is a square.
    assert_eq!(construct_general_corners(16, 3).unwrap().size() as u64, ceil_two_sqrt(17));
}

#[test]
fn corner_sharing_reroute_on_squares() {
    let c = construct_general_corners(9, 5).unwrap();
    assert_valid(&c);
    assert!(c.set.contains(&v(7, 5)));
    assert!(has_path(&c, &[(1, 1), (2, 1), (3, 1), (4, 1), (5, 1), (5, 2), (5, 3), (5, 4), (5, 5), (6, 5), (7, 5)]));
    assert!(has_path(&c, &[(9, 1), (8, 1), (7, 1), (7, 2), (7, 3), (7, 4), (7, 5)]));
    assert_eq!(c.size(), 8);
}

#[test]
fn auto_method_matches_closed_forms_and_transposes() {
    let c = construct(Method::Auto, 3, 17).unwrap();
    assert_valid(&c);
    assert_eq!(c.spec, GridSpec::new(3, 17).unwrap());
    assert_eq!(c.size() as u64, ceil_two_sqrt(18));

    let c = construct(Method::Auto, 14, 8).unwrap();
    assert_valid(&c);
    assert_eq!(c.size(), 10);

    assert!(construct(Method::P3, 10, 4).is_err());
}

#[test]
fn decomposition_examples() {
    assert_eq!((decompose(20).unwrap().k, decompose(20).unwrap().h), (4, 4));
    assert_eq!((decompose(24).unwrap().k, decompose(24).unwrap().h), (4, 8));
    assert_eq!((decompose(9).unwrap().k, decompose(9).unwrap().h), (3, 0));
}

#[test]
fn staircase_examples() {
    let spec = GridSpec::new(10, 3).unwrap();
    let p = staircase_geodesic(spec, v(1, 1), v(9, 3), 3).unwrap();
    assert_eq!(p.len(), 10);
    let col: Vec<String> = column_vertical_edges(&p, 3).iter().map(|e| e.to_string()).collect();
    assert_eq!(col, ["(3,1)(3,2)", "(3,2)(3,3)"]);

    let p = staircase_geodesic(spec, v(4, 1), v(4, 3), 4).unwrap();
    assert_eq!(p.vertices(), [v(4, 1), v(4, 2), v(4, 3)]);

    assert!(staircase_geodesic(spec, v(1, 1), v(9, 3), 10).is_err());
    assert!(row_geodesic(spec, v(1, 1), v(9, 2), 3).is_err());
}

#[test]
fn column_redundancy_examples() {
    let spec = GridSpec::new(6, 4).unwrap();
    let mut c = Certificate::new(spec);
    c.set = set(&[(1, 1), (1, 2), (1, 4)]);
    for (a, b) in [((1, 1), (1, 2)), ((1, 1), (1, 4)), ((1, 2), (1, 4))] {
        let p = staircase_geodesic(spec, v(a.0, a.1), v(b.0, b.1), 1).unwrap();
        c.assignments.push(Assignment::from_path(p));
    }
    assert_eq!(redundancy(&c, 1), 3);
    assert_eq!(redundancy(&c, 4), -3);

    let p = Path::new(vec![v(4, 1), v(4, 2), v(4, 3), v(4, 4)]);
    assert_eq!(column_vertical_edges(&p, 4).len(), 3);
    assert!(column_vertical_edges(&p, 5).is_empty());

    for n in 2..40 {
        let c = construct_p4(n).unwrap();
        assert!(redundancy(&c, 1) >= 0 && redundancy(&c, n) >= 0);
    }
}
