use std::collections::{BTreeMap, HashMap};

use petgraph::unionfind::UnionFind;
use serde::Serialize;

use crate::cat::{
    CatFunctor, Generator, MorphismWord, PieceSelector, PresentedCategory, Preservation, Relation, DEFAULT_DEPTH,
};
use crate::cover::{Cover, Piece};
use crate::error::{Error, Result};
use crate::model::SpaceModel;

/// `k:name`, the copy of `name` coming from side `k` of a pushout.
pub fn tagged(side: Piece, name: &str) -> String {
    format!("{}:{name}", side.index())
}

/// `C₁ ← C₀ → C₂`.
#[derive(Clone, Debug)]
pub struct PushoutSpan {
    pub apex: PresentedCategory,
    pub left: PresentedCategory,
    pub right: PresentedCategory,
    pub i1: CatFunctor,
    pub i2: CatFunctor,
}

impl PushoutSpan {
    pub fn new(
        apex: PresentedCategory,
        left: PresentedCategory,
        right: PresentedCategory,
        i1: CatFunctor,
        i2: CatFunctor,
    ) -> Result<Self> {
        i1.validate(&apex, &left)?;
        i2.validate(&apex, &right)?;
        Ok(PushoutSpan {
            apex,
            left,
            right,
            i1,
            i2,
        })
    }

    /// Both legs are name-matching inclusions.
    pub fn of_inclusions(apex: PresentedCategory, left: PresentedCategory, right: PresentedCategory) -> Result<Self> {
        let i1 = CatFunctor::inclusion(&apex, &left)?;
        let i2 = CatFunctor::inclusion(&apex, &right)?;
        Self::new(apex, left, right, i1, i2)
    }

    /// `Π(X₁) ← Π(X₁ ∩ X₂) → Π(X₂)` for a validated cover.
    pub fn from_cover(model: &SpaceModel, cover: &Cover) -> Result<Self> {
        model.validate_cover(cover)?;
        Self::of_inclusions(
            model.piece_presentation(cover, PieceSelector::Overlap)?,
            model.piece_presentation(cover, PieceSelector::Piece(Piece::First))?,
            model.piece_presentation(cover, PieceSelector::Piece(Piece::Second))?,
        )
    }

    pub fn side(&self, k: Piece) -> &PresentedCategory {
        match k {
            Piece::First => &self.left,
            Piece::Second => &self.right,
        }
    }

    pub fn leg(&self, k: Piece) -> &CatFunctor {
        match k {
            Piece::First => &self.i1,
            Piece::Second => &self.i2,
        }
    }
}

#[derive(Clone, Debug)]
pub struct PushoutResult {
    pub span: PushoutSpan,
    pub presentation: PresentedCategory,
    pub j1: CatFunctor,
    pub j2: CatFunctor,
    /// Tagged object `k:x` to its representative in the pushout.
    pub object_class: BTreeMap<String, String>,
    /// Relation preservation of `i₁` and `i₂`.
    pub leg_preservation: [Preservation; 2],
}

impl PushoutResult {
    pub fn injection(&self, k: Piece) -> &CatFunctor {
        match k {
            Piece::First => &self.j1,
            Piece::Second => &self.j2,
        }
    }

    /// Objects and generators of the pushout, relations split by origin.
    pub fn summary(&self) -> PushoutSummary {
        let p = &self.presentation;
        let identifications = self.span.apex.generators().len();
        PushoutSummary {
            objects: p.objects().len(),
            generators: p.generators().len(),
            relations: p.relations().len() - identifications,
            identifications,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PushoutSummary {
    pub objects: usize,
    pub generators: usize,
    pub relations: usize,
    pub identifications: usize,
}

fn tag_word(side: Piece, w: &MorphismWord, rep: &dyn Fn(&str) -> String) -> MorphismWord {
    MorphismWord::new(rep(&tagged(side, &w.src)), w.gens.iter().map(|g| tagged(side, g)))
}

/// Glues `C₁` and `C₂` along `C₀`. Objects are identified through a
/// disjoint-set quotient whose representatives are lexicographically least.
pub fn pushout(span: PushoutSpan) -> Result<PushoutResult> {
    pushout_with_depth(span, DEFAULT_DEPTH)
}

pub fn pushout_with_depth(span: PushoutSpan, depth: usize) -> Result<PushoutResult> {
    let mut leg_preservation = Vec::new();
    for k in Piece::BOTH {
        let p = span.leg(k).preserves_relations(&span.apex, span.side(k), depth)?;
        if let Preservation::Violated { relation } = &p {
            return Err(Error::RelationViolated(format!("{relation} under leg i{}", k.index())));
        }
        leg_preservation.push(p);
    }

    let mut tags: Vec<String> = Vec::new();
    for k in Piece::BOTH {
        tags.extend(span.side(k).objects().iter().map(|o| tagged(k, o)));
    }
    let slot: HashMap<&str, usize> = tags.iter().enumerate().map(|(i, t)| (t.as_str(), i)).collect();
    let mut classes = UnionFind::<usize>::new(tags.len());
    for x in span.apex.objects() {
        let a = tagged(Piece::First, span.i1.object(x)?);
        let b = tagged(Piece::Second, span.i2.object(x)?);
        classes.union(slot[a.as_str()], slot[b.as_str()]);
    }
    let mut least: HashMap<usize, &str> = HashMap::new();
    for (i, t) in tags.iter().enumerate() {
        let root = classes.find(i);
        let e = least.entry(root).or_insert(t);
        if t.as_str() < *e {
            *e = t;
        }
    }
    let object_class: BTreeMap<String, String> = tags
        .iter()
        .enumerate()
        .map(|(i, t)| (t.clone(), least[&classes.find(i)].to_owned()))
        .collect();
    let rep = |t: &str| object_class[t].clone();

    let mut objects: Vec<String> = Vec::new();
    for t in &tags {
        let r = rep(t);
        if !objects.contains(&r) {
            objects.push(r);
        }
    }
    let mut generators = Vec::new();
    let mut relations = Vec::new();
    for k in Piece::BOTH {
        let side = span.side(k);
        for g in side.generators() {
            generators.push(Generator::new(
                tagged(k, &g.id),
                rep(&tagged(k, &g.src)),
                rep(&tagged(k, &g.dst)),
            ));
        }
        for r in side.relations() {
            relations.push(Relation::new(tag_word(k, &r.lhs, &rep), tag_word(k, &r.rhs, &rep)));
        }
    }
    for g in span.apex.generators() {
        let w = MorphismWord::new(g.src.clone(), [g.id.clone()]);
        relations.push(Relation::new(
            tag_word(Piece::First, &span.i1.apply(&w)?, &rep),
            tag_word(Piece::Second, &span.i2.apply(&w)?, &rep),
        ));
    }
    let presentation = PresentedCategory::new(objects, generators, relations)?;

    let injection = |k: Piece| CatFunctor {
        object_map: span
            .side(k)
            .objects()
            .iter()
            .map(|o| (o.clone(), rep(&tagged(k, o))))
            .collect(),
        generator_map: span
            .side(k)
            .generators()
            .iter()
            .map(|g| {
                (
                    g.id.clone(),
                    MorphismWord::new(rep(&tagged(k, &g.src)), [tagged(k, &g.id)]),
                )
            })
            .collect(),
    };
    let (j1, j2) = (injection(Piece::First), injection(Piece::Second));
    let [p1, p2]: [Preservation; 2] = leg_preservation.try_into().expect("two legs");
    Ok(PushoutResult {
        span,
        presentation,
        j1,
        j2,
        object_class,
        leg_preservation: [p1, p2],
    })
}

/// The functor from the direct presentation of the whole space to the
/// pushout, sending each object and generator through the first piece that
/// contains it.
pub fn comparison_functor(direct: &PresentedCategory, po: &PushoutResult) -> Result<CatFunctor> {
    let mut f = CatFunctor::default();
    for o in direct.objects() {
        let image = Piece::BOTH
            .into_iter()
            .find_map(|k| po.injection(k).object_map.get(o))
            .ok_or_else(|| Error::InvalidCover(format!("point {o} is in no piece")))?;
        f.object_map.insert(o.clone(), image.clone());
    }
    for g in direct.generators() {
        let image = Piece::BOTH
            .into_iter()
            .find_map(|k| po.injection(k).generator_map.get(&g.id))
            .ok_or_else(|| Error::InvalidCover(format!("generator {} is in no piece", g.id)))?;
        f.generator_map.insert(g.id.clone(), image.clone());
    }
    Ok(f)
}
