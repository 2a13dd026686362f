use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{Decision, MorphismWord, PresentedCategory, WordSearch};
use crate::error::{Error, Result};

/// A functor between presented categories, given on objects and generators.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatFunctor {
    pub object_map: BTreeMap<String, String>,
    pub generator_map: BTreeMap<String, MorphismWord>,
}

/// Whether a functor respects the source relations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum Preservation {
    Preserved,
    Violated { relation: String },
    Unknown { relation: String },
}

impl Preservation {
    pub fn decision(&self) -> Decision {
        match self {
            Preservation::Preserved => Decision::Yes,
            Preservation::Violated { .. } => Decision::No,
            Preservation::Unknown { .. } => Decision::Unknown,
        }
    }
}

impl CatFunctor {
    pub fn identity(c: &PresentedCategory) -> Self {
        CatFunctor {
            object_map: c.objects().iter().map(|o| (o.clone(), o.clone())).collect(),
            generator_map: c
                .generators()
                .iter()
                .map(|g| (g.id.clone(), MorphismWord::new(g.src.clone(), [g.id.clone()])))
                .collect(),
        }
    }

    /// The inclusion of `sub` into `sup` matching objects and generators by name.
    pub fn inclusion(sub: &PresentedCategory, sup: &PresentedCategory) -> Result<Self> {
        for o in sub.objects() {
            if !sup.has_object(o) {
                return Err(Error::InvalidFunctor(format!(
                    "object `{o}` is missing from the target"
                )));
            }
        }
        for g in sub.generators() {
            match sup.generator(&g.id) {
                Some(h) if h.src == g.src && h.dst == g.dst => {}
                _ => {
                    return Err(Error::InvalidFunctor(format!(
                        "generator `{}` has no match in the target",
                        g.id
                    )))
                }
            }
        }
        Ok(Self::identity(sub))
    }

    pub fn object(&self, x: &str) -> Result<&str> {
        self.object_map
            .get(x)
            .map(String::as_str)
            .ok_or_else(|| Error::InvalidWord(format!("functor has no image for object `{x}`")))
    }

    pub fn apply(&self, w: &MorphismWord) -> Result<MorphismWord> {
        let mut out = MorphismWord::identity(self.object(&w.src)?);
        for g in &w.gens {
            let image = self
                .generator_map
                .get(g)
                .ok_or_else(|| Error::InvalidWord(format!("functor has no image for `{g}`")))?;
            out.gens.extend(image.gens.iter().cloned());
        }
        Ok(out)
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &CatFunctor) -> Result<CatFunctor> {
        let object_map = self
            .object_map
            .iter()
            .map(|(x, y)| Ok((x.clone(), next.object(y)?.to_owned())))
            .collect::<Result<_>>()?;
        let generator_map = self
            .generator_map
            .iter()
            .map(|(g, w)| Ok((g.clone(), next.apply(w)?)))
            .collect::<Result<_>>()?;
        Ok(CatFunctor {
            object_map,
            generator_map,
        })
    }

    /// Totality and endpoint preservation.
    pub fn validate(&self, source: &PresentedCategory, target: &PresentedCategory) -> Result<()> {
        for o in source.objects() {
            let y = self
                .object_map
                .get(o)
                .ok_or_else(|| Error::InvalidFunctor(format!("no image for object `{o}`")))?;
            if !target.has_object(y) {
                return Err(Error::InvalidFunctor(format!("`{o}` maps to unknown object `{y}`")));
            }
        }
        for g in source.generators() {
            let w = self
                .generator_map
                .get(&g.id)
                .ok_or_else(|| Error::InvalidFunctor(format!("no image for generator `{}`", g.id)))?;
            let (fs, fd) = (&self.object_map[&g.src], &self.object_map[&g.dst]);
            let end = target
                .word_target(w)
                .map_err(|e| Error::InvalidFunctor(format!("image of `{}`: {e}", g.id)))?;
            if &w.src != fs || &end != fd {
                return Err(Error::InvalidFunctor(format!(
                    "`{}` maps to {w} running {}→{end}, expected {fs}→{fd}",
                    g.id, w.src
                )));
            }
        }
        Ok(())
    }

    /// Checks every source relation in the target up to `depth` rewrites.
    pub fn preserves_relations(
        &self,
        source: &PresentedCategory,
        target: &PresentedCategory,
        depth: usize,
    ) -> Result<Preservation> {
        self.validate(source, target)?;
        let search = WordSearch::new(target);
        let mut unknown = None;
        for r in source.relations() {
            match search.equal(&self.apply(&r.lhs)?, &self.apply(&r.rhs)?, depth)? {
                Decision::Yes => {}
                Decision::No => {
                    return Ok(Preservation::Violated {
                        relation: r.to_string(),
                    })
                }
                Decision::Unknown => {
                    unknown.get_or_insert_with(|| r.to_string());
                }
            }
        }
        Ok(match unknown {
            Some(relation) => Preservation::Unknown { relation },
            None => Preservation::Preserved,
        })
    }

    /// Exact agreement on every object and generator of `source`; returns the
    /// first disagreement.
    pub fn disagreement(&self, other: &CatFunctor, source: &PresentedCategory) -> Option<String> {
        for o in source.objects() {
            if self.object_map.get(o) != other.object_map.get(o) {
                return Some(format!("object {o}"));
            }
        }
        for g in source.generators() {
            if self.generator_map.get(&g.id) != other.generator_map.get(&g.id) {
                return Some(format!("generator {}", g.id));
            }
        }
        None
    }
}

/// Generator-wise substitution of `w` through `f`.
pub fn apply_functor(f: &CatFunctor, w: &MorphismWord) -> Result<MorphismWord> {
    f.apply(w)
}
