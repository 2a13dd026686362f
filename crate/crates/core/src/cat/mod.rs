//! Finitely presented categories.
//!
//! Morphisms are words of generators read in path order: the word `[f, g]`
//! is `g ∘ f`. Composition is concatenation and the empty word at an object
//! is its identity. Equality of words modulo the relations is decided by a
//! bounded search, see [`word_equal`].

mod functor;
mod fundamental;
mod monoid;
mod word;

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use functor::{apply_functor, CatFunctor, Preservation};
pub use fundamental::{
    cubical_piece_presentation, finite_piece_presentation, fundamental_presentation_cubical,
    fundamental_presentation_finite, lattice_generator_id, path_word, step_generator_id, PieceSelector,
};
pub use monoid::{endo_monoid, endo_monoid_with_depth, MonoidReport, MonoidStructure};
pub use word::{hom_classes, hom_count, word_equal, words_between, Decision, HomClasses, HomCount, WordSearch};

/// Default bound on rewrite steps for the word problem.
pub const DEFAULT_DEPTH: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Generator {
    pub id: String,
    pub src: String,
    pub dst: String,
}

impl Generator {
    pub fn new(id: impl Into<String>, src: impl Into<String>, dst: impl Into<String>) -> Self {
        Generator {
            id: id.into(),
            src: src.into(),
            dst: dst.into(),
        }
    }
}

/// A composable chain of generators starting at `src`; empty means identity.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MorphismWord {
    pub src: String,
    pub gens: Vec<String>,
}

impl MorphismWord {
    pub fn new<S: Into<String>>(src: impl Into<String>, gens: impl IntoIterator<Item = S>) -> Self {
        MorphismWord {
            src: src.into(),
            gens: gens.into_iter().map(Into::into).collect(),
        }
    }

    pub fn identity(at: impl Into<String>) -> Self {
        MorphismWord {
            src: at.into(),
            gens: Vec::new(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// `self` followed by `next`; the caller guarantees composability.
    pub fn then(&self, next: &MorphismWord) -> MorphismWord {
        let mut gens = self.gens.clone();
        gens.extend(next.gens.iter().cloned());
        MorphismWord {
            src: self.src.clone(),
            gens,
        }
    }
}

impl fmt::Display for MorphismWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            write!(f, "id({})", self.src)
        } else {
            write!(f, "{}", self.gens.join("·"))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Relation {
    pub lhs: MorphismWord,
    pub rhs: MorphismWord,
}

impl Relation {
    pub fn new(lhs: MorphismWord, rhs: MorphismWord) -> Self {
        Relation { lhs, rhs }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

/// Objects, generating arrows and word relations.
#[derive(Clone, Debug)]
pub struct PresentedCategory {
    objects: Vec<String>,
    generators: Vec<Generator>,
    relations: Vec<Relation>,
    object_index: HashMap<String, usize>,
    generator_index: HashMap<String, usize>,
}

impl PartialEq for PresentedCategory {
    fn eq(&self, other: &Self) -> bool {
        self.objects == other.objects && self.generators == other.generators && self.relations == other.relations
    }
}

impl Eq for PresentedCategory {}

impl PresentedCategory {
    pub fn new(objects: Vec<String>, generators: Vec<Generator>, relations: Vec<Relation>) -> Result<Self> {
        let mut object_index = HashMap::new();
        for (i, o) in objects.iter().enumerate() {
            if object_index.insert(o.clone(), i).is_some() {
                return Err(Error::InvalidPresentation(format!("duplicate object `{o}`")));
            }
        }
        let mut generator_index = HashMap::new();
        for (i, g) in generators.iter().enumerate() {
            for end in [&g.src, &g.dst] {
                if !object_index.contains_key(end) {
                    return Err(Error::InvalidPresentation(format!(
                        "generator `{}` uses undeclared object `{end}`",
                        g.id
                    )));
                }
            }
            if generator_index.insert(g.id.clone(), i).is_some() {
                return Err(Error::InvalidPresentation(format!("duplicate generator `{}`", g.id)));
            }
        }
        let cat = PresentedCategory {
            objects,
            generators,
            relations: Vec::new(),
            object_index,
            generator_index,
        };
        for r in &relations {
            let l = cat.word_target(&r.lhs)?;
            let rt = cat.word_target(&r.rhs)?;
            if r.lhs.src != r.rhs.src || l != rt {
                return Err(Error::InvalidPresentation(format!(
                    "relation {r} joins words with different endpoints"
                )));
            }
        }
        Ok(PresentedCategory { relations, ..cat })
    }

    /// The free category on a graph.
    pub fn free(objects: Vec<String>, generators: Vec<Generator>) -> Result<Self> {
        Self::new(objects, generators, Vec::new())
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn has_object(&self, o: &str) -> bool {
        self.object_index.contains_key(o)
    }

    pub fn generator(&self, id: &str) -> Option<&Generator> {
        self.generator_index.get(id).map(|&i| &self.generators[i])
    }

    pub(crate) fn object_id(&self, o: &str) -> Option<usize> {
        self.object_index.get(o).copied()
    }

    pub(crate) fn generator_id(&self, g: &str) -> Option<usize> {
        self.generator_index.get(g).copied()
    }

    /// Checks composability and returns the word's codomain.
    pub fn word_target(&self, w: &MorphismWord) -> Result<String> {
        if !self.has_object(&w.src) {
            return Err(Error::InvalidWord(format!("unknown object `{}`", w.src)));
        }
        let mut at = &w.src;
        for id in &w.gens {
            let g = self
                .generator(id)
                .ok_or_else(|| Error::InvalidWord(format!("unknown generator `{id}`")))?;
            if &g.src != at {
                return Err(Error::InvalidWord(format!(
                    "`{id}` starts at {} but the word is at {at}",
                    g.src
                )));
            }
            at = &g.dst;
        }
        Ok(at.clone())
    }

    pub fn is_free(&self) -> bool {
        self.relations.is_empty()
    }

    pub fn to_document(&self) -> PresentationDocument {
        PresentationDocument {
            objects: self.objects.clone(),
            generators: self
                .generators
                .iter()
                .map(|g| [g.id.clone(), g.src.clone(), g.dst.clone()])
                .collect(),
            relations: self
                .relations
                .iter()
                .map(|r| [r.lhs.gens.clone(), r.rhs.gens.clone()])
                .collect(),
        }
    }

    pub fn from_document(doc: &PresentationDocument) -> Result<Self> {
        let generators: Vec<Generator> = doc
            .generators
            .iter()
            .map(|[id, s, d]| Generator::new(id, s, d))
            .collect();
        let lookup: HashMap<&str, &Generator> = generators.iter().map(|g| (g.id.as_str(), g)).collect();
        let first_src = |w: &[String]| -> Option<String> {
            w.first().and_then(|id| lookup.get(id.as_str())).map(|g| g.src.clone())
        };
        let mut relations = Vec::new();
        for [l, r] in &doc.relations {
            // an empty side is the identity at the other side's source
            let src = first_src(l).or_else(|| first_src(r)).ok_or_else(|| {
                Error::InvalidPresentation("relation needs a nonempty side with known generators".into())
            })?;
            relations.push(Relation::new(
                MorphismWord::new(src.clone(), l.clone()),
                MorphismWord::new(src, r.clone()),
            ));
        }
        Self::new(doc.objects.clone(), generators, relations)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Self::from_document(&serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_document()).expect("presentation documents always serialize");
        s.push('\n');
        s
    }
}

/// Serialized form of a [`PresentedCategory`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationDocument {
    pub objects: Vec<String>,
    /// `[id, src, dst]`
    pub generators: Vec<[String; 3]>,
    /// `[lhs, rhs]` generator id lists
    #[serde(default)]
    pub relations: Vec<[Vec<String>; 2]>,
}
