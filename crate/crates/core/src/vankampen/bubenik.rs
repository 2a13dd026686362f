use serde::Serialize;

use crate::cat::{endo_monoid_with_depth, MonoidReport, MorphismWord, PieceSelector, PresentedCategory, WordSearch};
use crate::cover::{Cover, Piece};
use crate::dipath::covered;
use crate::error::{Error, Result};
use crate::model::{cover_has_point, SpaceModel};
use crate::report::Status;

#[derive(Clone, Debug, Serialize)]
pub struct BubenikReport {
    pub base: String,
    pub max_len: usize,
    pub classes: usize,
    /// Classes with a member whose loops at the base each stay in one piece.
    pub factorable: usize,
    /// First class without such a member, as the points of its representative.
    pub witness: Option<String>,
    pub exact: bool,
    pub whole: MonoidReport,
    pub pieces: Vec<MonoidReport>,
    pub status: Status,
}

fn points_of(c: &PresentedCategory, w: &MorphismWord) -> Vec<String> {
    let mut points = vec![w.src.clone()];
    for g in &w.gens {
        points.push(c.generator(g).expect("enumerated word").dst.clone());
    }
    points
}

/// Splits a loop at every interior visit of its start.
fn prime_segments(points: &[String]) -> Vec<&[String]> {
    let mut out = Vec::new();
    let mut from = 0;
    for i in 1..points.len() {
        if points[i] == points[0] {
            out.push(&points[from..=i]);
            from = i;
        }
    }
    if from + 1 < points.len() {
        out.push(&points[from..]);
    }
    out
}

/// Whether every loop class at `base` (up to `max_len`) has a member made
/// of loops that each lie in one piece, the condition under which the loop
/// monoid of the whole space is the free product of the pieces' monoids.
pub fn monoid_pushout_condition(
    model: &SpaceModel,
    cover: &Cover,
    base: &str,
    max_len: usize,
    depth: usize,
) -> Result<BubenikReport> {
    if !model.has_point(base) {
        return Err(Error::UnknownPoint(base.to_owned()));
    }
    if !Piece::BOTH.iter().all(|&k| cover_has_point(cover, k, base)) {
        return Err(Error::BaseOutsideOverlap(base.to_owned()));
    }
    let c = model.presentation();
    let search = WordSearch::new(&c);
    let loops = search.words_from(base, max_len)?.remove(base).unwrap_or_default();
    let hom = search.classify(loops, depth)?;

    let mut factorable = 0;
    let mut witness = None;
    for class in &hom.classes {
        let ok = class.iter().try_fold(false, |found, w| -> Result<bool> {
            if found {
                return Ok(true);
            }
            let points = points_of(&c, w);
            for seg in prime_segments(&points) {
                if !covered(&model.path_through(seg)?, cover) {
                    return Ok(false);
                }
            }
            Ok(true)
        })?;
        if ok {
            factorable += 1;
        } else if witness.is_none() {
            witness = Some(points_of(&c, &class[0]).join("→"));
        }
    }

    let whole = endo_monoid_with_depth(&c, base, max_len, depth)?;
    let pieces = Piece::BOTH
        .iter()
        .map(|&k| {
            let p = model.piece_presentation(cover, PieceSelector::Piece(k))?;
            endo_monoid_with_depth(&p, base, max_len, depth)
        })
        .collect::<Result<Vec<_>>>()?;

    let status = if witness.is_some() {
        Status::Fail
    } else if !hom.exact {
        Status::Unknown
    } else {
        Status::Pass
    };
    Ok(BubenikReport {
        base: base.to_owned(),
        max_len,
        classes: hom.count(),
        factorable,
        witness,
        exact: hom.exact,
        whole,
        pieces,
        status,
    })
}
