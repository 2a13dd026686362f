//! Built-in example spaces, addressable by name.

use crate::cover::{Cover, PointCover};
use crate::cubical::{Cell, CubicalSpace, GridCover};
use crate::error::{Error, Result};
use crate::model::SpaceModel;
use crate::pv::{build_pv_grid, PvProgram};
use crate::topology::{CombinatorialDirectedSpace, FiniteTopology};

#[derive(Clone, Debug)]
pub struct Example {
    pub name: String,
    pub model: SpaceModel,
    pub cover: Option<Cover>,
}

/// Names accepted by [`example`]; `k` stands for a positive integer.
pub const EXAMPLE_NAMES: &[&str] = &[
    "directed-square-k",
    "obstacle-square-k",
    "interval-fence-k",
    "discrete-circle",
    "discrete-circle-cover",
    "five-point-circle",
    "five-point-circle-bubenik",
    "pv-grid",
];

pub fn directed_square(k: u32) -> Result<CubicalSpace> {
    CubicalSpace::empty(k, k)
}

/// A `k × k` grid with a central obstacle: one cell for odd `k`, a 2×2
/// block for even `k`.
pub fn obstacle_square(k: u32) -> Result<CubicalSpace> {
    if k < 3 {
        return Err(Error::InvalidGrid("an obstacle square needs k ≥ 3".into()));
    }
    let (lo, hi) = if k % 2 == 1 { (k / 2, k / 2) } else { (k / 2 - 1, k / 2) };
    obstacle_square_with(k, [lo, lo, hi, hi])
}

/// A `k × k` grid with the cells `x0..=x1, y0..=y1` forbidden.
pub fn obstacle_square_with(k: u32, [x0, y0, x1, y1]: [u32; 4]) -> Result<CubicalSpace> {
    let cells = (y0..=y1).flat_map(|y| (x0..=x1).map(move |x| Cell::new(x, y)));
    CubicalSpace::new(k, k, cells)
}

/// Four points with `N`, `S` open and steps `E→N→W→S→E`.
pub fn discrete_circle() -> CombinatorialDirectedSpace {
    let t = FiniteTopology::new(
        &["N", "E", "S", "W"],
        &[
            vec![],
            vec!["N"],
            vec!["S"],
            vec!["N", "S"],
            vec!["N", "S", "E"],
            vec!["N", "S", "W"],
            vec!["N", "E", "S", "W"],
        ],
    )
    .expect("static topology");
    CombinatorialDirectedSpace::new(t, &[("E", "N"), ("N", "W"), ("W", "S"), ("S", "E")]).expect("static steps")
}

/// The open cover `{N, S, E}`, `{N, S, W}`.
pub fn discrete_circle_cover() -> PointCover {
    PointCover::new(&["N", "S", "E"], &["N", "S", "W"])
}

/// The discrete circle with an extra open point `M` between `E` and `W`.
pub fn five_point_circle() -> CombinatorialDirectedSpace {
    let t = FiniteTopology::generated_by(
        &["N", "E", "S", "W", "M"],
        &[
            vec!["N"],
            vec!["M"],
            vec!["S"],
            vec!["N", "M", "S", "E"],
            vec!["N", "M", "S", "W"],
        ],
    )
    .expect("static topology");
    CombinatorialDirectedSpace::new(
        t,
        &[("E", "N"), ("N", "W"), ("W", "S"), ("S", "E"), ("E", "M"), ("M", "W")],
    )
    .expect("static steps")
}

/// The open cover `{N, M, S, E}`, `{N, M, S, W}`.
pub fn five_point_circle_cover() -> PointCover {
    PointCover::new(&["N", "M", "S", "E"], &["N", "M", "S", "W"])
}

/// A cover with `W` in both pieces: `{W, N, M, E}` sees no loop at `W`,
/// `{W, S, M, E}` sees one.
pub fn five_point_circle_bubenik_cover() -> PointCover {
    PointCover::new(&["W", "N", "M", "E"], &["W", "S", "M", "E"])
}

/// Points `0 … k` with odd points open and steps `i → i+1`.
pub fn interval_fence(k: usize) -> Result<CombinatorialDirectedSpace> {
    if k == 0 {
        return Err(Error::InvalidTopology("a fence needs at least two points".into()));
    }
    let names: Vec<String> = (0..=k).map(|i| i.to_string()).collect();
    let basic: Vec<Vec<String>> = (0..=k)
        .map(|i| {
            if i % 2 == 1 {
                vec![names[i].clone()]
            } else {
                (i.saturating_sub(1)..=(i + 1).min(k))
                    .map(|j| names[j].clone())
                    .collect()
            }
        })
        .collect();
    let t = FiniteTopology::generated_by(&names, &basic)?;
    let steps: Vec<(String, String)> = (0..k).map(|i| (names[i].clone(), names[i + 1].clone())).collect();
    CombinatorialDirectedSpace::new(t, &steps)
}

/// Halves `0 … ⌊k/2⌋` and `⌊k/2⌋ … k`, meeting at the midpoint.
pub fn interval_fence_cover(k: usize) -> PointCover {
    let mid = k / 2;
    let first: Vec<String> = (0..=mid).map(|i| i.to_string()).collect();
    let second: Vec<String> = (mid..=k).map(|i| i.to_string()).collect();
    PointCover::new(&first, &second)
}

/// Two processes sharing mutex `m`, each wrapped in a private resource, so
/// the conflict is the single interior cell `(1, 1)` of a 4×4 grid.
pub fn pv_example() -> PvProgram {
    PvProgram::parse("acq(p) acq(m) rel(m) rel(p)", "acq(q) acq(m) rel(m) rel(q)").expect("static program")
}

fn sized(name: &str, prefix: &str) -> Option<Result<u32>> {
    let k = name.strip_prefix(prefix)?;
    Some(
        k.parse::<u32>()
            .ok()
            .filter(|&k| (1..=64).contains(&k))
            .ok_or_else(|| Error::Document(format!("`{k}` in `{name}` is not a size between 1 and 64"))),
    )
}

fn grid_example(name: &str, g: CubicalSpace) -> Example {
    let cover = GridCover::vertical_split(&g);
    Example {
        name: name.to_owned(),
        model: g.into(),
        cover: Some(cover.into()),
    }
}

/// Builds a named example with its default cover.
pub fn example(name: &str) -> Result<Example> {
    let finite = |s: CombinatorialDirectedSpace, c: Option<PointCover>| Example {
        name: name.to_owned(),
        model: s.into(),
        cover: c.map(Cover::from),
    };
    if let Some(k) = sized(name, "directed-square-") {
        return Ok(grid_example(name, directed_square(k?)?));
    }
    if let Some(k) = sized(name, "obstacle-square-") {
        return Ok(grid_example(name, obstacle_square(k?)?));
    }
    if let Some(k) = sized(name, "interval-fence-") {
        let k = k? as usize;
        return Ok(finite(interval_fence(k)?, Some(interval_fence_cover(k))));
    }
    Ok(match name {
        "discrete-circle" => finite(discrete_circle(), None),
        "discrete-circle-cover" => finite(discrete_circle(), Some(discrete_circle_cover())),
        "five-point-circle" => finite(five_point_circle(), Some(five_point_circle_cover())),
        "five-point-circle-bubenik" => finite(five_point_circle(), Some(five_point_circle_bubenik_cover())),
        "pv-grid" => grid_example(name, build_pv_grid(&pv_example())?),
        _ => {
            return Err(Error::Document(format!(
                "unknown example `{name}`; known: {}",
                EXAMPLE_NAMES.join(", ")
            )))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_example_is_valid_and_round_trips() {
        for name in [
            "directed-square-1",
            "directed-square-3",
            "obstacle-square-3",
            "obstacle-square-4",
            "interval-fence-1",
            "interval-fence-6",
            "discrete-circle",
            "discrete-circle-cover",
            "five-point-circle",
            "five-point-circle-bubenik",
            "pv-grid",
        ] {
            let ex = example(name).unwrap();
            if let SpaceModel::Finite(s) = &ex.model {
                assert!(s.validate().is_valid(), "{name}");
            }
            if let Some(c) = &ex.cover {
                ex.model.validate_cover(c).unwrap();
            }
            let (back, cover) = SpaceModel::from_json(&ex.model.to_json(ex.cover.as_ref())).unwrap();
            assert_eq!(back, ex.model, "{name}");
            assert_eq!(cover, ex.cover, "{name}");
        }
    }

    #[test]
    fn open_covers() {
        assert!(discrete_circle_cover().is_open_cover(&discrete_circle()));
        assert!(five_point_circle_cover().is_open_cover(&five_point_circle()));
        assert!(!five_point_circle_bubenik_cover().is_open_cover(&five_point_circle()));
    }

    #[test]
    fn pv_example_shape() {
        let g = build_pv_grid(&pv_example()).unwrap();
        assert_eq!((g.width(), g.height()), (4, 4));
        assert_eq!(g.forbidden().iter().copied().collect::<Vec<_>>(), [Cell::new(1, 1)]);
    }

    #[test]
    fn unknown_names() {
        assert!(example("obstacle-square-x").is_err());
        assert!(example("torus").is_err());
        assert!(example("obstacle-square-2").is_err());
    }
}
