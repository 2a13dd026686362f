//! Two-piece covers of a space.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::cubical::{GridCover, Rect};
use crate::error::{Error, Result};
use crate::topology::CombinatorialDirectedSpace;

/// Which piece of a two-piece cover.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Piece {
    First,
    Second,
}

impl Piece {
    pub const BOTH: [Piece; 2] = [Piece::First, Piece::Second];

    pub fn index(self) -> usize {
        match self {
            Piece::First => 1,
            Piece::Second => 2,
        }
    }

    pub fn other(self) -> Piece {
        match self {
            Piece::First => Piece::Second,
            Piece::Second => Piece::First,
        }
    }
}

/// A cover of a finite space by two named point sets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointCover {
    pub first: BTreeSet<String>,
    pub second: BTreeSet<String>,
}

impl PointCover {
    pub fn new<S: AsRef<str>>(first: &[S], second: &[S]) -> Self {
        let set = |xs: &[S]| xs.iter().map(|x| x.as_ref().to_owned()).collect();
        PointCover {
            first: set(first),
            second: set(second),
        }
    }

    pub fn piece(&self, piece: Piece) -> &BTreeSet<String> {
        match piece {
            Piece::First => &self.first,
            Piece::Second => &self.second,
        }
    }

    pub fn contains(&self, piece: Piece, point: &str) -> bool {
        self.piece(piece).contains(point)
    }

    pub fn overlap(&self) -> BTreeSet<String> {
        self.first.intersection(&self.second).cloned().collect()
    }

    /// Every point lies in a piece and every step has both ends in one piece.
    pub fn validate(&self, space: &CombinatorialDirectedSpace) -> Result<()> {
        for name in self.first.iter().chain(&self.second) {
            space.index_of(name)?;
        }
        for name in space.topology().points() {
            if !self.first.contains(name) && !self.second.contains(name) {
                return Err(Error::InvalidCover(format!("point `{name}` is in no piece")));
            }
        }
        for (a, b) in space.step_names() {
            let inside = |p: Piece| self.contains(p, &a) && self.contains(p, &b);
            if !inside(Piece::First) && !inside(Piece::Second) {
                return Err(Error::InvalidCover(format!("step {a}→{b} is in no piece")));
            }
        }
        Ok(())
    }

    /// Whether both pieces are open.
    pub fn is_open_cover(&self, space: &CombinatorialDirectedSpace) -> bool {
        let t = space.topology();
        Piece::BOTH.iter().all(|&p| {
            let mut set = fixedbitset::FixedBitSet::with_capacity(t.len());
            for name in self.piece(p) {
                if let Ok(i) = t.index_of(name) {
                    set.insert(i);
                }
            }
            t.is_open(&set)
        })
    }
}

/// A cover of either space model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cover {
    Points(PointCover),
    Grid(GridCover),
}

impl From<PointCover> for Cover {
    fn from(c: PointCover) -> Self {
        Cover::Points(c)
    }
}

impl From<GridCover> for Cover {
    fn from(c: GridCover) -> Self {
        Cover::Grid(c)
    }
}

/// Serialized cover: rectangles `[x0, y0, x1, y1]` for grids, point names for
/// finite spaces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CoverDocument {
    Grid {
        first: Vec<[u32; 4]>,
        second: Vec<[u32; 4]>,
    },
    Points {
        first: Vec<String>,
        second: Vec<String>,
    },
}

impl CoverDocument {
    pub fn into_cover(self) -> Cover {
        match self {
            CoverDocument::Grid { first, second } => {
                let rects = |rs: Vec<[u32; 4]>| rs.into_iter().map(Rect::from).collect();
                Cover::Grid(GridCover::new(rects(first), rects(second)))
            }
            CoverDocument::Points { first, second } => Cover::Points(PointCover::new(&first, &second)),
        }
    }

    pub fn from_cover(cover: &Cover) -> Self {
        match cover {
            Cover::Grid(g) => CoverDocument::Grid {
                first: g.first.iter().map(|r| r.to_array()).collect(),
                second: g.second.iter().map(|r| r.to_array()).collect(),
            },
            Cover::Points(p) => CoverDocument::Points {
                first: p.first.iter().cloned().collect(),
                second: p.second.iter().cloned().collect(),
            },
        }
    }
}
