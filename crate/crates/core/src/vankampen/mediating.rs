use serde::Serialize;

use super::pushout::{tagged, PushoutResult, PushoutSpan};
use crate::cat::{path_word, CatFunctor, MorphismWord, PresentedCategory};
use crate::cover::{Cover, Piece};
use crate::dipath::{labeled_pieces_at, smallest_cover_index, GenericDipath};
use crate::error::{Error, Result};
use crate::model::cover_has_point;

/// Exact comparison of `F₁ ∘ i₁` and `F₂ ∘ i₂` on the apex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CommutationWitness {
    pub holds: bool,
    pub mismatch: Option<String>,
}

/// A target category with functors out of both pieces.
#[derive(Clone, Debug)]
pub struct MediatingInput {
    pub target: PresentedCategory,
    pub f1: CatFunctor,
    pub f2: CatFunctor,
    pub witness: CommutationWitness,
}

impl MediatingInput {
    /// Validates both functors and records whether they agree on the apex.
    /// A disagreement is recorded, not rejected, so that checks can report it.
    pub fn new(span: &PushoutSpan, target: PresentedCategory, f1: CatFunctor, f2: CatFunctor) -> Result<Self> {
        f1.validate(&span.left, &target)?;
        f2.validate(&span.right, &target)?;
        let via1 = span.i1.then(&f1)?;
        let via2 = span.i2.then(&f2)?;
        let mismatch = via1.disagreement(&via2, &span.apex);
        Ok(MediatingInput {
            target,
            f1,
            f2,
            witness: CommutationWitness {
                holds: mismatch.is_none(),
                mismatch,
            },
        })
    }

    pub fn functor(&self, k: Piece) -> &CatFunctor {
        match k {
            Piece::First => &self.f1,
            Piece::Second => &self.f2,
        }
    }
}

/// `F₁(x)` when `x` is in the first piece, else `F₂(x)`.
pub fn mediating_object_map(input: &MediatingInput, cover: &Cover, x: &str) -> Result<String> {
    let k = if cover_has_point(cover, Piece::First, x) {
        Piece::First
    } else if cover_has_point(cover, Piece::Second, x) {
        Piece::Second
    } else {
        return Err(Error::InvalidCover(format!("point {x} is in no piece")));
    };
    Ok(input.functor(k).object(x)?.to_owned())
}

/// `F′(γ)`: subdivide at the smallest covering index, send each piece
/// through the functor of its piece (the first when both apply) and compose.
pub fn mediating_morphism_map(input: &MediatingInput, cover: &Cover, path: &GenericDipath) -> Result<MorphismWord> {
    let n = smallest_cover_index(path, cover)
        .ok_or_else(|| Error::InvalidCover(format!("path {path} has an uncovered segment")))?;
    mediating_morphism_map_at(input, cover, path, n, Piece::First)
}

/// `F′(γ)` computed from the `n`-piece subdivision with tie-break `prefer`.
pub fn mediating_morphism_map_at(
    input: &MediatingInput,
    cover: &Cover,
    path: &GenericDipath,
    n: usize,
    prefer: Piece,
) -> Result<MorphismWord> {
    let mut out: Option<MorphismWord> = None;
    for (k, piece) in labeled_pieces_at(path, cover, n, prefer)? {
        let image = input.functor(k).apply(&path_word(&piece))?;
        out = Some(match out {
            None => image,
            Some(w) => w.then(&image),
        });
    }
    Ok(out.expect("subdivisions have at least one piece"))
}

/// The functor out of the pushout presentation induced by `F₁` and `F₂`:
/// `k:x ↦ F_k(x)` and `k:g ↦ F_k(g)`.
pub fn mediating_functor(po: &PushoutResult, input: &MediatingInput) -> Result<CatFunctor> {
    let mut f = CatFunctor::default();
    for k in Piece::BOTH {
        let side = po.span.side(k);
        let fk = input.functor(k);
        for o in side.objects() {
            let rep = &po.object_class[&tagged(k, o)];
            let image = fk.object(o)?.to_owned();
            if let Some(prev) = f.object_map.insert(rep.clone(), image.clone()) {
                if prev != image {
                    return Err(Error::InvalidFunctor(format!(
                        "{rep} would map to both {prev} and {image}"
                    )));
                }
            }
        }
        for g in side.generators() {
            let image = fk
                .generator_map
                .get(&g.id)
                .ok_or_else(|| Error::InvalidFunctor(format!("no image for generator `{}`", g.id)))?;
            f.generator_map.insert(tagged(k, &g.id), image.clone());
        }
    }
    Ok(f)
}
