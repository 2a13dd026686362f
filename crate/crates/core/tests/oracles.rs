mod common;

use common::{walk_count, GridOracle, CIRCLE_STEPS, FIVE_POINT_STEPS};
use ditopo::cat::{endo_monoid, hom_count, MonoidStructure};
use ditopo::catalog::{discrete_circle, five_point_circle};
use ditopo::cubical::{dihomotopy_classes, Cell, CubicalSpace, Vertex};
use ditopo::model::SpaceModel;

fn grid(w: u32, h: u32, cells: &[(u32, u32)]) -> CubicalSpace {
    CubicalSpace::new(w, h, cells.iter().map(|&(x, y)| Cell::new(x, y))).unwrap()
}

fn engine_counts(w: u32, h: u32, cells: &[(u32, u32)]) -> (usize, usize) {
    let g = grid(w, h, cells);
    let set = dihomotopy_classes(&g, Vertex::new(0, 0), Vertex::new(w, h), 100_000).unwrap();
    (set.paths.len(), set.classes.len())
}

/// Width, height, forbidden cells, paths, classes.
type Frozen = (u32, u32, &'static [(u32, u32)], usize, usize);

// frozen from the oracle
const FROZEN: &[Frozen] = &[
    (3, 3, &[(1, 1)], 20, 2),
    (3, 3, &[], 20, 1),
    (4, 4, &[(1, 1), (2, 2)], 70, 4),
    (4, 4, &[(1, 1), (1, 2), (2, 1), (2, 2)], 34, 2),
    (5, 5, &[(1, 1), (3, 3)], 252, 4),
    (5, 5, &[(1, 3), (3, 1)], 252, 3),
    (6, 4, &[(1, 1), (3, 2), (4, 0)], 210, 5),
];

#[test]
fn oracle_matches_frozen_values() {
    for &(w, h, cells, paths, classes) in FROZEN {
        let o = GridOracle::new(w, h, cells);
        assert_eq!(o.class_count((0, 0), (w, h)), (paths, classes), "{w}x{h} {cells:?}");
    }
}

#[test]
fn engine_matches_frozen_values() {
    for &(w, h, cells, paths, classes) in FROZEN {
        assert_eq!(engine_counts(w, h, cells), (paths, classes), "{w}x{h} {cells:?}");
    }
}

#[test]
fn engine_matches_oracle_on_every_single_obstacle_grid() {
    for w in 1..=4 {
        for h in 1..=4 {
            for cx in 0..w {
                for cy in 0..h {
                    let o = GridOracle::new(w, h, &[(cx, cy)]);
                    assert_eq!(
                        engine_counts(w, h, &[(cx, cy)]),
                        o.class_count((0, 0), (w, h)),
                        "{w}x{h} ({cx},{cy})"
                    );
                }
            }
        }
    }
}

#[test]
fn hom_counts_match_flip_classes_for_every_vertex_pair() {
    for &(w, h, cells, _, _) in &FROZEN[..4] {
        let g = grid(w, h, cells);
        let o = GridOracle::new(w, h, cells);
        let c = SpaceModel::Grid(g.clone()).presentation();
        let len = (w + h) as usize;
        for a in g.vertices().filter(|&v| g.is_vertex_allowed(v)) {
            for b in g.vertices().filter(|&v| g.is_vertex_allowed(v) && a.le(v)) {
                let count = hom_count(&c, &a.to_string(), &b.to_string(), len, 64).unwrap();
                assert!(count.exact);
                let (paths, classes) = o.class_count((a.x, a.y), (b.x, b.y));
                let expected = if paths == 0 { 0 } else { classes };
                assert_eq!(count.count, expected, "{w}x{h} {cells:?} {a}→{b}");
            }
        }
    }
}

#[test]
fn circle_loop_counts() {
    let c = SpaceModel::Finite(discrete_circle()).presentation();
    for m in 0..=3 {
        let r = endo_monoid(&c, "E", 4 * m).unwrap();
        assert_eq!(r.classes, walk_count(CIRCLE_STEPS, "E", "E", 4 * m));
        assert_eq!(r.classes, m + 1);
    }
    for x in ["N", "E", "S", "W"] {
        for y in ["N", "E", "S", "W"] {
            assert_eq!(
                hom_count(&c, x, y, 12, 32).unwrap().count,
                walk_count(CIRCLE_STEPS, x, y, 12)
            );
        }
    }
}

#[test]
fn five_point_loop_counts() {
    let c = SpaceModel::Finite(five_point_circle()).presentation();
    for len in [0, 4, 8, 12] {
        let r = endo_monoid(&c, "W", len).unwrap();
        assert_eq!(r.classes, walk_count(FIVE_POINT_STEPS, "W", "W", len), "length {len}");
    }
    let r = endo_monoid(&c, "W", 8).unwrap();
    assert_eq!((r.classes, r.structure), (7, MonoidStructure::Free(2)));
}
