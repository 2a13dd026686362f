//! Path algebra shared by both space models: concatenation, equal
//! subdivision, and the covering predicates behind the mediating functor.
//!
//! Subdivision works on carrier indices. A path with `L` segments split into
//! `n` pieces gives piece `i` (1-based) the vertex range
//! `⌈L(i−1)/n⌉ ..= ⌈Li/n⌉`; pieces may be constant when `n > L`. Piece counts
//! here are the number of pieces, so "n-covered" means `covered_partwise(γ, n)`.

use std::fmt;

use crate::cover::{Cover, Piece};
use crate::cubical::{LatticePath, Vertex};
use crate::error::{Error, Result};
use crate::topology::StepPath;

/// A directed path in either space model.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GenericDipath {
    Step(StepPath),
    Lattice(LatticePath),
}

impl From<StepPath> for GenericDipath {
    fn from(p: StepPath) -> Self {
        GenericDipath::Step(p)
    }
}

impl From<LatticePath> for GenericDipath {
    fn from(p: LatticePath) -> Self {
        GenericDipath::Lattice(p)
    }
}

impl fmt::Display for GenericDipath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenericDipath::Step(p) => p.fmt(f),
            GenericDipath::Lattice(p) => p.fmt(f),
        }
    }
}

/// A point of either model, by name.
pub fn vertex_name(v: Vertex) -> String {
    v.to_string()
}

impl GenericDipath {
    /// Constant path at a named point of the same model as `like`.
    pub fn constant_like(like: &GenericDipath, point: &str) -> Result<GenericDipath> {
        Ok(match like {
            GenericDipath::Step(_) => GenericDipath::Step(StepPath::constant(point)),
            GenericDipath::Lattice(_) => GenericDipath::Lattice(LatticePath::constant(point.parse()?)),
        })
    }

    /// Number of segments of the carrier.
    pub fn len(&self) -> usize {
        match self {
            GenericDipath::Step(p) => p.len(),
            GenericDipath::Lattice(p) => p.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Names of the carrier's points, `len() + 1` of them.
    pub fn point_names(&self) -> Vec<String> {
        match self {
            GenericDipath::Step(p) => p.points().to_vec(),
            GenericDipath::Lattice(p) => p.vertices().into_iter().map(vertex_name).collect(),
        }
    }

    pub fn start_name(&self) -> String {
        match self {
            GenericDipath::Step(p) => p.start().to_owned(),
            GenericDipath::Lattice(p) => vertex_name(p.start()),
        }
    }

    pub fn end_name(&self) -> String {
        match self {
            GenericDipath::Step(p) => p.end().to_owned(),
            GenericDipath::Lattice(p) => vertex_name(p.end()),
        }
    }

    /// Sub-path over carrier indices `from..=to`.
    pub fn slice(&self, from: usize, to: usize) -> GenericDipath {
        match self {
            GenericDipath::Step(p) => GenericDipath::Step(p.slice(from, to)),
            GenericDipath::Lattice(p) => GenericDipath::Lattice(p.slice(from, to)),
        }
    }

    /// Drops constant segments; lattice paths have none.
    pub fn normalized(&self) -> GenericDipath {
        match self {
            GenericDipath::Step(p) => GenericDipath::Step(p.without_stutters()),
            GenericDipath::Lattice(_) => self.clone(),
        }
    }
}

/// `γ₁ ⊙ γ₂`.
pub fn concat(first: &GenericDipath, second: &GenericDipath) -> Result<GenericDipath> {
    match (first, second) {
        (GenericDipath::Step(a), GenericDipath::Step(b)) => Ok(GenericDipath::Step(a.concat(b)?)),
        (GenericDipath::Lattice(a), GenericDipath::Lattice(b)) => Ok(GenericDipath::Lattice(a.concat(b)?)),
        _ => Err(Error::ModelMismatch(
            "cannot concatenate a step path with a lattice path".into(),
        )),
    }
}

/// Index bounds `(from, to)` of each of the `n` equal pieces of a carrier
/// with `len` segments.
pub fn subdivision_bounds(len: usize, n: usize) -> Vec<(usize, usize)> {
    assert!(n >= 1, "subdivision needs at least one piece");
    let cut = |i: usize| (len * i).div_ceil(n);
    (1..=n).map(|i| (cut(i - 1), cut(i))).collect()
}

/// The pieces `γ_{1,n}, …, γ_{n,n}`.
pub fn subdivide(path: &GenericDipath, n: usize) -> Vec<GenericDipath> {
    subdivision_bounds(path.len(), n)
        .into_iter()
        .map(|(a, b)| path.slice(a, b))
        .collect()
}

/// Whether the whole range of `path` lies in `piece`.
pub fn in_piece(path: &GenericDipath, cover: &Cover, piece: Piece) -> bool {
    match (path, cover) {
        (GenericDipath::Step(p), Cover::Points(c)) => p.points().iter().all(|x| c.contains(piece, x)),
        (GenericDipath::Lattice(p), Cover::Grid(c)) => c.contains_path(piece, p),
        _ => false,
    }
}

/// Pieces containing the whole path, first piece first.
pub fn covering_pieces(path: &GenericDipath, cover: &Cover) -> Vec<Piece> {
    Piece::BOTH.into_iter().filter(|&p| in_piece(path, cover, p)).collect()
}

/// The path lies entirely in one piece.
pub fn covered(path: &GenericDipath, cover: &Cover) -> bool {
    !covering_pieces(path, cover).is_empty()
}

/// Every piece of `subdivide(path, n)` is covered.
pub fn covered_partwise(path: &GenericDipath, cover: &Cover, n: usize) -> bool {
    n >= 1 && subdivide(path, n).iter().all(|p| covered(p, cover))
}

/// Smallest `n` with `covered_partwise(path, cover, n)`. Splitting into
/// single segments always works when every step lies in a piece, so the scan
/// stops at `max(len, 1)`; `None` means some single segment is uncovered.
pub fn smallest_cover_index(path: &GenericDipath, cover: &Cover) -> Option<usize> {
    let bound = path.len().max(1);
    (1..=bound).find(|&n| covered_partwise(path, cover, n))
}

/// Splits `path` at the smallest covering index and labels each piece with
/// its covering piece, preferring the first.
pub fn labeled_pieces(path: &GenericDipath, cover: &Cover) -> Result<Vec<(Piece, GenericDipath)>> {
    let n = smallest_cover_index(path, cover)
        .ok_or_else(|| Error::InvalidCover(format!("path {path} has an uncovered segment")))?;
    labeled_pieces_at(path, cover, n, Piece::First)
}

/// Splits `path` into `n` pieces and labels each with a covering piece,
/// preferring `prefer` when both apply.
pub fn labeled_pieces_at(
    path: &GenericDipath,
    cover: &Cover,
    n: usize,
    prefer: Piece,
) -> Result<Vec<(Piece, GenericDipath)>> {
    subdivide(path, n)
        .into_iter()
        .map(|piece| {
            let pieces = covering_pieces(&piece, cover);
            let label = if pieces.contains(&prefer) {
                prefer
            } else {
                *pieces
                    .first()
                    .ok_or_else(|| Error::InvalidCover(format!("piece {piece} of {path} is not covered")))?
            };
            Ok((label, piece))
        })
        .collect()
}

/// Whether a homotopy given by its time slices is `(n, m)`-covered: after
/// splitting slice indices into `n` blocks and each slice's carrier into `m`
/// blocks, every block's swept points lie in a single piece.
pub fn homotopy_covered(slices: &[GenericDipath], cover: &Cover, n: usize, m: usize) -> bool {
    if n == 0 || m == 0 || slices.is_empty() {
        return false;
    }
    let time = subdivision_bounds(slices.len() - 1, n);
    let pieces: Vec<Vec<GenericDipath>> = slices.iter().map(|s| subdivide(s, m)).collect();
    time.iter().all(|&(t0, t1)| {
        (0..m).all(|j| {
            Piece::BOTH
                .into_iter()
                .any(|p| (t0..=t1).all(|t| in_piece(&pieces[t][j], cover, p)))
        })
    })
}
