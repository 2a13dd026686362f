//! One interface over the two space models, so covers, presentations and
//! the Van Kampen machinery can treat grids and finite spaces alike.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::cat::{
    cubical_piece_presentation, finite_piece_presentation, fundamental_presentation_cubical,
    fundamental_presentation_finite, PieceSelector, PresentedCategory,
};
use crate::cover::{Cover, Piece, PointCover};
use crate::cubical::{raise_flips, CubicalSpace, GridDocument, LatticePath, Move, Vertex};
use crate::dipath::{vertex_name, GenericDipath};
use crate::error::{Error, Result};
use crate::topology::{CombinatorialDirectedSpace, SpaceDocument, StepPath};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpaceModel {
    Finite(CombinatorialDirectedSpace),
    Grid(CubicalSpace),
}

impl From<CombinatorialDirectedSpace> for SpaceModel {
    fn from(s: CombinatorialDirectedSpace) -> Self {
        SpaceModel::Finite(s)
    }
}

impl From<CubicalSpace> for SpaceModel {
    fn from(s: CubicalSpace) -> Self {
        SpaceModel::Grid(s)
    }
}

fn vertex(name: &str) -> Result<Vertex> {
    name.parse()
}

impl SpaceModel {
    pub fn kind(&self) -> &'static str {
        match self {
            SpaceModel::Finite(_) => "finite",
            SpaceModel::Grid(_) => "grid",
        }
    }

    /// Point names; blocked grid vertices are left out.
    pub fn points(&self) -> Vec<String> {
        match self {
            SpaceModel::Finite(s) => s.topology().points().to_vec(),
            SpaceModel::Grid(g) => g
                .vertices()
                .filter(|&v| g.is_vertex_allowed(v))
                .map(vertex_name)
                .collect(),
        }
    }

    pub fn has_point(&self, name: &str) -> bool {
        match self {
            SpaceModel::Finite(s) => s.index_of(name).is_ok(),
            SpaceModel::Grid(g) => vertex(name).is_ok_and(|v| g.is_vertex_allowed(v)),
        }
    }

    /// Points reachable by one elementary step.
    pub fn successors(&self, name: &str) -> Vec<String> {
        match self {
            SpaceModel::Finite(s) => match s.index_of(name) {
                Ok(i) => s.successors(i).map(|j| s.name(j).to_owned()).collect(),
                Err(_) => Vec::new(),
            },
            SpaceModel::Grid(g) => match vertex(name) {
                Ok(v) => [Move::Right, Move::Up]
                    .into_iter()
                    .filter(|&m| g.edge_allowed(v, m))
                    .map(|m| vertex_name(v.step(m)))
                    .collect(),
                Err(_) => Vec::new(),
            },
        }
    }

    /// `a = b` or an elementary step `a → b`.
    pub fn is_jump(&self, a: &str, b: &str) -> bool {
        (a == b && self.has_point(a)) || self.successors(a).iter().any(|s| s == b)
    }

    pub fn presentation(&self) -> PresentedCategory {
        match self {
            SpaceModel::Finite(s) => {
                fundamental_presentation_finite(s, &[]).expect("presentations without extra relations are well formed")
            }
            SpaceModel::Grid(g) => fundamental_presentation_cubical(g),
        }
    }

    pub fn piece_presentation(&self, cover: &Cover, sel: PieceSelector) -> Result<PresentedCategory> {
        match (self, cover) {
            (SpaceModel::Finite(s), Cover::Points(c)) => finite_piece_presentation(s, c, sel, &[]),
            (SpaceModel::Grid(g), Cover::Grid(c)) => Ok(cubical_piece_presentation(g, c, sel)),
            _ => Err(self.mismatch(cover)),
        }
    }

    fn mismatch(&self, cover: &Cover) -> Error {
        let cover_kind = match cover {
            Cover::Points(_) => "point",
            Cover::Grid(_) => "grid",
        };
        Error::ModelMismatch(format!("a {cover_kind} cover does not fit a {} space", self.kind()))
    }

    pub fn validate_cover(&self, cover: &Cover) -> Result<()> {
        match (self, cover) {
            (SpaceModel::Finite(s), Cover::Points(c)) => c.validate(s),
            (SpaceModel::Grid(g), Cover::Grid(c)) => c.validate(g),
            _ => Err(self.mismatch(cover)),
        }
    }

    /// Points of one piece (or of the overlap).
    pub fn piece_points(&self, cover: &Cover, sel: PieceSelector) -> BTreeSet<String> {
        self.points()
            .into_iter()
            .filter(|p| match sel {
                PieceSelector::Whole => true,
                PieceSelector::Piece(k) => cover_has_point(cover, k, p),
                PieceSelector::Overlap => Piece::BOTH.iter().all(|&k| cover_has_point(cover, k, p)),
            })
            .collect()
    }

    pub fn constant(&self, point: &str) -> Result<GenericDipath> {
        if !self.has_point(point) {
            return Err(Error::UnknownPoint(point.to_owned()));
        }
        Ok(match self {
            SpaceModel::Finite(_) => StepPath::constant(point).into(),
            SpaceModel::Grid(_) => LatticePath::constant(vertex(point)?).into(),
        })
    }

    /// The dipath visiting `points` in order; repeats are allowed.
    pub fn path_through<S: AsRef<str>>(&self, points: &[S]) -> Result<GenericDipath> {
        match self {
            SpaceModel::Finite(s) => Ok(StepPath::new(s, points)?.into()),
            SpaceModel::Grid(g) => {
                let vs = points.iter().map(|p| vertex(p.as_ref())).collect::<Result<Vec<_>>>()?;
                let path = LatticePath::through(&vs)?;
                path.check(g)?;
                Ok(path.into())
            }
        }
    }

    /// Dipaths obtained from `p` by one raise flip (grids only).
    pub fn raise_neighbours(&self, p: &GenericDipath) -> Vec<GenericDipath> {
        match (self, p) {
            (SpaceModel::Grid(g), GenericDipath::Lattice(l)) => {
                raise_flips(g, l).into_iter().map(GenericDipath::from).collect()
            }
            _ => Vec::new(),
        }
    }

    /// Every dipath without constant segments of length at most `max_len`,
    /// constants included, from every point. Errors past `limit` paths.
    pub fn dipaths(&self, max_len: usize, limit: usize) -> Result<Vec<GenericDipath>> {
        let mut out = Vec::new();
        for p in self.points() {
            let mut stack = vec![vec![p]];
            while let Some(route) = stack.pop() {
                if route.len() <= max_len {
                    for next in self.successors(route.last().unwrap()).into_iter().rev() {
                        let mut r = route.clone();
                        r.push(next);
                        stack.push(r);
                    }
                }
                out.push(self.path_through(&route)?);
                if out.len() > limit {
                    return Err(Error::LimitExceeded(limit));
                }
            }
        }
        Ok(out)
    }

    pub fn to_document(&self, cover: Option<&Cover>) -> ModelDocument {
        match self {
            SpaceModel::Grid(g) => {
                let gc = match cover {
                    Some(Cover::Grid(c)) => Some(c),
                    _ => None,
                };
                ModelDocument::Grid(g.to_document(gc))
            }
            SpaceModel::Finite(s) => ModelDocument::Finite(FiniteDocument {
                space: s.to_document(),
                cover: match cover {
                    Some(Cover::Points(c)) => Some(PointCoverDocument {
                        first: c.first.iter().cloned().collect(),
                        second: c.second.iter().cloned().collect(),
                    }),
                    _ => None,
                },
            }),
        }
    }

    pub fn from_document(doc: &ModelDocument) -> Result<(SpaceModel, Option<Cover>)> {
        match doc {
            ModelDocument::Grid(d) => {
                let (g, c) = CubicalSpace::from_document(d)?;
                Ok((g.into(), c.map(Cover::Grid)))
            }
            ModelDocument::Finite(d) => {
                let s = CombinatorialDirectedSpace::from_document(&d.space)?;
                let c = d
                    .cover
                    .as_ref()
                    .map(|c| Cover::Points(PointCover::new(&c.first, &c.second)));
                Ok((s.into(), c))
            }
        }
    }

    /// Reads either document shape; grids are recognized by `width`.
    pub fn from_json(text: &str) -> Result<(SpaceModel, Option<Cover>)> {
        let value: serde_json::Value = serde_json::from_str(text)?;
        let doc = if value.get("width").is_some() {
            ModelDocument::Grid(serde_json::from_value(value)?)
        } else {
            ModelDocument::Finite(serde_json::from_value(value)?)
        };
        Self::from_document(&doc)
    }

    pub fn to_json(&self, cover: Option<&Cover>) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_document(cover)).expect("model documents always serialize");
        s.push('\n');
        s
    }
}

/// Whether a cover piece contains a named point of either model.
pub fn cover_has_point(cover: &Cover, piece: Piece, point: &str) -> bool {
    match cover {
        Cover::Points(c) => c.contains(piece, point),
        Cover::Grid(c) => vertex(point).is_ok_and(|v| c.contains_vertex(piece, v)),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ModelDocument {
    Grid(GridDocument),
    Finite(FiniteDocument),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteDocument {
    #[serde(flatten)]
    pub space: SpaceDocument,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cover: Option<PointCoverDocument>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointCoverDocument {
    pub first: Vec<String>,
    pub second: Vec<String>,
}
