//! Presentations of fundamental categories of the two space models, and of
//! the pieces of a cover. Generator names are shared between a space and its
//! pieces, so inclusion functors are the identity on names.

use crate::cover::{Piece, PointCover};
use crate::cubical::{Cell, CubicalSpace, GridCover, Move, Vertex};
use crate::dipath::{vertex_name, GenericDipath};
use crate::error::Result;
use crate::topology::CombinatorialDirectedSpace;

use super::{Generator, MorphismWord, PresentedCategory, Relation};

/// Which part of a cover a piece presentation describes.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum PieceSelector {
    Whole,
    Piece(Piece),
    Overlap,
}

/// `R(x,y)` or `U(x,y)`: the unit edge leaving `(x,y)`.
pub fn lattice_generator_id(from: Vertex, mv: Move) -> String {
    format!("{}{}", mv.letter(), from)
}

/// `a->b`.
pub fn step_generator_id(a: &str, b: &str) -> String {
    format!("{a}->{b}")
}

/// The word of a dipath; constant segments contribute nothing.
pub fn path_word(path: &GenericDipath) -> MorphismWord {
    match path {
        GenericDipath::Step(p) => MorphismWord::new(
            p.start(),
            p.jumps().filter(|(a, b)| a != b).map(|(a, b)| step_generator_id(a, b)),
        ),
        GenericDipath::Lattice(p) => {
            let vs = p.vertices();
            MorphismWord::new(
                vertex_name(p.start()),
                p.moves().iter().zip(&vs).map(|(&mv, &v)| lattice_generator_id(v, mv)),
            )
        }
    }
}

fn cell_relation(c: Cell) -> Relation {
    let v = Vertex::new(c.x, c.y);
    let right = Vertex::new(c.x + 1, c.y);
    let up = Vertex::new(c.x, c.y + 1);
    Relation::new(
        MorphismWord::new(
            vertex_name(v),
            [
                lattice_generator_id(v, Move::Right),
                lattice_generator_id(right, Move::Up),
            ],
        ),
        MorphismWord::new(
            vertex_name(v),
            [lattice_generator_id(v, Move::Up), lattice_generator_id(up, Move::Right)],
        ),
    )
}

fn selected(cover: Option<&GridCover>, sel: PieceSelector, test: impl Fn(&GridCover, Piece) -> bool) -> bool {
    match (sel, cover) {
        (PieceSelector::Whole, _) | (_, None) => true,
        (PieceSelector::Piece(p), Some(c)) => test(c, p),
        (PieceSelector::Overlap, Some(c)) => test(c, Piece::First) && test(c, Piece::Second),
    }
}

fn cubical_presentation(s: &CubicalSpace, cover: Option<&GridCover>, sel: PieceSelector) -> PresentedCategory {
    let objects = s
        .vertices()
        .filter(|&v| s.is_vertex_allowed(v) && selected(cover, sel, |c, p| c.contains_vertex(p, v)))
        .map(vertex_name)
        .collect();
    let generators = s
        .edges()
        .filter(|&(v, mv)| s.edge_allowed(v, mv) && selected(cover, sel, |c, p| c.contains_edge(p, v, mv)))
        .map(|(v, mv)| Generator::new(lattice_generator_id(v, mv), vertex_name(v), vertex_name(v.step(mv))))
        .collect();
    let relations = s
        .cells()
        .filter(|&c| !s.is_forbidden(c) && selected(cover, sel, |cv, p| cv.contains_cell(p, c)))
        .map(cell_relation)
        .collect();
    PresentedCategory::new(objects, generators, relations).expect("grid presentations are well formed by construction")
}

/// Objects are unblocked vertices, generators allowed unit edges, and each
/// non-forbidden cell contributes its commuting square.
pub fn fundamental_presentation_cubical(s: &CubicalSpace) -> PresentedCategory {
    cubical_presentation(s, None, PieceSelector::Whole)
}

/// Presentation of a piece (or the overlap) of a grid cover.
pub fn cubical_piece_presentation(s: &CubicalSpace, cover: &GridCover, sel: PieceSelector) -> PresentedCategory {
    cubical_presentation(s, Some(cover), sel)
}

fn finite_presentation(
    s: &CombinatorialDirectedSpace,
    keep: impl Fn(&str) -> bool,
    extra_relations: &[Relation],
    strict: bool,
) -> Result<PresentedCategory> {
    let objects: Vec<String> = s.topology().points().iter().filter(|p| keep(p)).cloned().collect();
    let generators: Vec<Generator> = s
        .step_names()
        .into_iter()
        .filter(|(a, b)| keep(a) && keep(b))
        .map(|(a, b)| Generator::new(step_generator_id(&a, &b), a, b))
        .collect();
    let known = |w: &MorphismWord| keep(&w.src) && w.gens.iter().all(|g| generators.iter().any(|h| &h.id == g));
    let relations = extra_relations
        .iter()
        .filter(|r| strict || (known(&r.lhs) && known(&r.rhs)))
        .cloned()
        .collect();
    PresentedCategory::new(objects, generators, relations)
}

/// Objects are points, generators steps, relations exactly `extra_relations`.
pub fn fundamental_presentation_finite(
    s: &CombinatorialDirectedSpace,
    extra_relations: &[Relation],
) -> Result<PresentedCategory> {
    finite_presentation(s, |_| true, extra_relations, true)
}

/// Presentation of a piece of a point cover; relations are kept when all
/// their generators survive.
pub fn finite_piece_presentation(
    s: &CombinatorialDirectedSpace,
    cover: &PointCover,
    sel: PieceSelector,
    extra_relations: &[Relation],
) -> Result<PresentedCategory> {
    let keep = |p: &str| match sel {
        PieceSelector::Whole => true,
        PieceSelector::Piece(k) => cover.contains(k, p),
        PieceSelector::Overlap => cover.contains(Piece::First, p) && cover.contains(Piece::Second, p),
    };
    finite_presentation(s, keep, extra_relations, false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::{hom_count, word_equal, Decision};

    #[test]
    fn grid_presentation_sizes() {
        let unit = fundamental_presentation_cubical(&CubicalSpace::empty(1, 1).unwrap());
        assert_eq!(
            (unit.objects().len(), unit.generators().len(), unit.relations().len()),
            (4, 4, 1)
        );
        let s = CubicalSpace::new(3, 3, [Cell::new(1, 1)]).unwrap();
        let p = fundamental_presentation_cubical(&s);
        assert_eq!(
            (p.objects().len(), p.generators().len(), p.relations().len()),
            (16, 24, 8)
        );
    }

    #[test]
    fn unit_square_words_commute() {
        let s = CubicalSpace::empty(1, 1).unwrap();
        let p = fundamental_presentation_cubical(&s);
        let ru = path_word(&s.path(Vertex::new(0, 0), "RU").unwrap().into());
        let ur = path_word(&s.path(Vertex::new(0, 0), "UR").unwrap().into());
        assert_eq!(ru.gens, ["R(0,0)", "U(1,0)"]);
        assert_eq!(word_equal(&p, &ru, &ur, 4).unwrap(), Decision::Yes);
    }

    #[test]
    fn obstacle_words_are_distinct() {
        let s = CubicalSpace::new(3, 3, [Cell::new(1, 1)]).unwrap();
        let p = fundamental_presentation_cubical(&s);
        let o = Vertex::new(0, 0);
        let low = path_word(&s.path(o, "RRRUUU").unwrap().into());
        let high = path_word(&s.path(o, "UUURRR").unwrap().into());
        assert_eq!(word_equal(&p, &low, &high, 64).unwrap(), Decision::No);
        let h = hom_count(&p, "(0,0)", "(3,3)", 6, 64).unwrap();
        assert_eq!((h.count, h.exact), (2, true));
    }

    #[test]
    fn split_pieces() {
        let s = CubicalSpace::empty(2, 2).unwrap();
        let cover = GridCover::vertical_split(&s);
        let first = cubical_piece_presentation(&s, &cover, PieceSelector::Piece(Piece::First));
        let overlap = cubical_piece_presentation(&s, &cover, PieceSelector::Overlap);
        assert_eq!(
            (first.objects().len(), first.generators().len(), first.relations().len()),
            (6, 7, 2)
        );
        assert_eq!(
            (
                overlap.objects().len(),
                overlap.generators().len(),
                overlap.relations().len()
            ),
            (3, 2, 0)
        );
    }
}
