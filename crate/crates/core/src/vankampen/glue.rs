use std::collections::BTreeMap;

use serde::Serialize;

use crate::cover::{Cover, Piece};
use crate::error::{Error, Result};
use crate::model::{cover_has_point, SpaceModel};
use crate::report::Status;

/// Cap on the dipaths a gluing check walks.
const GLUE_LIMIT: usize = 500_000;

#[derive(Clone, Debug, Serialize)]
pub struct GlueReport {
    pub glued: BTreeMap<String, String>,
    pub checked: usize,
    pub failures: usize,
    /// First dipath whose image is not a dipath.
    pub witness: Option<String>,
    pub status: Status,
}

/// Glues maps defined on the two pieces into one map and checks that it
/// sends every dipath of length at most `max_len` to a dipath of `target`.
pub fn glue_directed_maps(
    source: &SpaceModel,
    cover: &Cover,
    f1: &BTreeMap<String, String>,
    f2: &BTreeMap<String, String>,
    target: &SpaceModel,
    max_len: usize,
) -> Result<GlueReport> {
    source.validate_cover(cover)?;
    let mut glued = BTreeMap::new();
    for x in source.points() {
        let mut image: Option<&String> = None;
        for (k, f) in [(Piece::First, f1), (Piece::Second, f2)] {
            if !cover_has_point(cover, k, &x) {
                continue;
            }
            let y = f
                .get(&x)
                .ok_or_else(|| Error::PartialMap(format!("{x} (piece {})", k.index())))?;
            if image.is_some_and(|prev| prev != y) {
                return Err(Error::OverlapDisagreement(x));
            }
            image = Some(y);
        }
        let y = image.ok_or_else(|| Error::PartialMap(x.clone()))?;
        if !target.has_point(y) {
            return Err(Error::UnknownPoint(y.clone()));
        }
        glued.insert(x, y.clone());
    }

    let mut checked = 0;
    let mut failures = 0;
    let mut witness = None;
    for p in source.dipaths(max_len, GLUE_LIMIT)? {
        checked += 1;
        let points = p.point_names();
        let bad = points
            .windows(2)
            .find(|w| !target.is_jump(&glued[&w[0]], &glued[&w[1]]));
        if let Some(w) = bad {
            failures += 1;
            witness.get_or_insert_with(|| {
                format!(
                    "{p}: step {}→{} goes to {}→{}, not a step of the target",
                    w[0], w[1], glued[&w[0]], glued[&w[1]]
                )
            });
        }
    }
    Ok(GlueReport {
        glued,
        checked,
        failures,
        witness,
        status: Status::from_bool(failures == 0),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::directed_square;
    use crate::cubical::GridCover;

    fn identity(model: &SpaceModel) -> BTreeMap<String, String> {
        model.points().into_iter().map(|p| (p.clone(), p)).collect()
    }

    #[test]
    fn inclusions_glue() {
        let g = directed_square(3).unwrap();
        let cover: Cover = GridCover::vertical_split(&g).into();
        let model: SpaceModel = g.into();
        let id = identity(&model);
        let r = glue_directed_maps(&model, &cover, &id, &id, &model, 2).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert!(r.checked > 16);
    }

    #[test]
    fn corrupted_map_fails() {
        let g = directed_square(3).unwrap();
        let cover: Cover = GridCover::vertical_split(&g).into();
        let model: SpaceModel = g.into();
        let id = identity(&model);
        let mut bad = id.clone();
        bad.insert("(3,3)".into(), "(0,0)".into());
        let r = glue_directed_maps(&model, &cover, &id, &bad, &model, 2).unwrap();
        assert_eq!(r.status, Status::Fail);
        assert!(r.witness.unwrap().contains("(3,3)"));
    }

    #[test]
    fn overlap_and_partial_errors() {
        let g = directed_square(3).unwrap();
        let cover: Cover = GridCover::vertical_split(&g).into();
        let model: SpaceModel = g.into();
        let id = identity(&model);
        let mut off = id.clone();
        off.insert("(1,0)".into(), "(0,0)".into());
        assert!(matches!(
            glue_directed_maps(&model, &cover, &id, &off, &model, 1),
            Err(Error::OverlapDisagreement(_))
        ));
        let mut missing = id.clone();
        missing.remove("(3,0)");
        assert!(matches!(
            glue_directed_maps(&model, &cover, &id, &missing, &model, 1),
            Err(Error::PartialMap(_))
        ));
    }
}
