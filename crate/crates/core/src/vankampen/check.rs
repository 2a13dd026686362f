use serde::Serialize;

use super::mediating::mediating_morphism_map;
use super::pushout::{comparison_functor, pushout_with_depth, PushoutSpan};
use super::verify::canonical_input;
use crate::cat::{path_word, WordSearch};
use crate::cover::Cover;
use crate::error::Result;
use crate::model::SpaceModel;
use crate::report::{CheckTally, Status};

/// Longest dipath on which the induced functor is compared with the
/// comparison functor.
const AGREEMENT_LEN: usize = 6;

/// Number of classes of words of length at most `max_len` between two points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomComparison {
    pub source: String,
    pub target: String,
    pub direct: usize,
    pub pushout: usize,
    pub exact: bool,
}

impl HomComparison {
    pub fn status(&self) -> Status {
        if !self.exact {
            Status::Unknown
        } else {
            Status::from_bool(self.direct == self.pushout)
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VanKampenReport {
    pub max_len: usize,
    pub pairs: Vec<HomComparison>,
    pub mismatches: usize,
    pub unknowns: usize,
    /// The functor induced by the injections agrees with the comparison
    /// functor on short dipaths.
    pub agreement: CheckTally,
    pub status: Status,
}

/// Compares `|Hom(x, y)|` in the fundamental category of the whole space
/// with the same count in the pushout of the pieces, for every pair of
/// points, counting words up to `max_len` generators on both sides.
pub fn van_kampen_check(model: &SpaceModel, cover: &Cover, max_len: usize, depth: usize) -> Result<VanKampenReport> {
    let direct = model.presentation();
    let po = pushout_with_depth(PushoutSpan::from_cover(model, cover)?, depth)?;
    let k = comparison_functor(&direct, &po)?;
    let whole = WordSearch::new(&direct);
    let glued = WordSearch::new(&po.presentation);

    let mut pairs = Vec::new();
    for x in direct.objects() {
        let mut left = whole.words_from(x, max_len)?;
        let mut right = glued.words_from(k.object(x)?, max_len)?;
        for y in direct.objects() {
            let a = whole.classify(left.remove(y).unwrap_or_default(), depth)?;
            let b = glued.classify(right.remove(k.object(y)?).unwrap_or_default(), depth)?;
            pairs.push(HomComparison {
                source: x.clone(),
                target: y.clone(),
                direct: a.count(),
                pushout: b.count(),
                exact: a.exact && b.exact,
            });
        }
    }

    let input = canonical_input(&po)?;
    let mut agreement = CheckTally::new("agreement");
    for p in model.dipaths(max_len.min(AGREEMENT_LEN), usize::MAX)? {
        let induced = mediating_morphism_map(&input, cover, &p)?;
        let compared = k.apply(&path_word(&p))?;
        let status = glued.equal(&induced, &compared, depth)?.into();
        agreement.record(status, || format!("{p}: induced {induced}, compared {compared}"));
    }

    let mismatches = pairs.iter().filter(|p| p.status() == Status::Fail).count();
    let unknowns = pairs.iter().filter(|p| p.status() == Status::Unknown).count();
    let status = Status::all(pairs.iter().map(HomComparison::status).chain([agreement.status]));
    Ok(VanKampenReport {
        max_len,
        pairs,
        mismatches,
        unknowns,
        agreement,
        status,
    })
}
