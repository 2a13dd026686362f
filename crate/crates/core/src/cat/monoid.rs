use std::collections::HashMap;
use std::fmt;

use serde::{Serialize, Serializer};

use super::{MorphismWord, PresentedCategory, WordSearch, DEFAULT_DEPTH};
use crate::error::Result;

/// Structure detected in a finite window of an endomorphism monoid.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum MonoidStructure {
    Trivial,
    Free(usize),
    Unknown,
}

impl fmt::Display for MonoidStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonoidStructure::Trivial => f.write_str("trivial"),
            MonoidStructure::Free(k) => write!(f, "free({k})"),
            MonoidStructure::Unknown => f.write_str("unknown"),
        }
    }
}

impl Serialize for MonoidStructure {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonoidReport {
    pub base: String,
    pub max_len: usize,
    /// Number of endomorphism classes with a representative of length at most `max_len`.
    pub classes: usize,
    pub representatives: Vec<MorphismWord>,
    /// Irreducible loops: classes with no split into two non-identity loops.
    pub generators: Vec<MorphismWord>,
    pub structure: MonoidStructure,
    /// False when some class could not be closed under rewriting.
    pub exact: bool,
    /// Why the structure is unknown, when it is.
    pub witness: Option<String>,
}

/// Enumerates endomorphism classes of `x` up to `max_len` and detects
/// trivial or free structure.
pub fn endo_monoid(c: &PresentedCategory, x: &str, max_len: usize) -> Result<MonoidReport> {
    endo_monoid_with_depth(c, x, max_len, DEFAULT_DEPTH)
}

pub fn endo_monoid_with_depth(c: &PresentedCategory, x: &str, max_len: usize, depth: usize) -> Result<MonoidReport> {
    let search = WordSearch::new(c);
    let words = search.words_from(x, max_len)?.remove(x).unwrap_or_default();
    let hom = search.classify(words, depth)?;
    let class_of: HashMap<&[String], usize> = hom
        .classes
        .iter()
        .enumerate()
        .flat_map(|(i, ws)| ws.iter().map(move |w| (w.gens.as_slice(), i)))
        .collect();
    let identity = class_of[&[][..]];
    let reducible = |members: &[MorphismWord]| {
        members.iter().any(|w| {
            let mut at = w.src.as_str();
            (0..w.len()).any(|i| {
                let split = i > 0 && at == x && {
                    let (u, v) = w.gens.split_at(i);
                    class_of[u] != identity && class_of[v] != identity
                };
                at = &c.generator(&w.gens[i]).expect("enumerated word").dst;
                split
            })
        })
    };
    let irreducible: Vec<usize> = (0..hom.count())
        .filter(|&i| i != identity && !reducible(&hom.classes[i]))
        .collect();

    // every product of irreducible representatives that fits in the window
    let mut hits = vec![0usize; hom.count()];
    let mut stack: Vec<Vec<String>> = vec![Vec::new()];
    while let Some(w) = stack.pop() {
        if let Some(&k) = class_of.get(w.as_slice()) {
            hits[k] += 1;
        }
        for &g in &irreducible {
            let rep = &hom.classes[g][0].gens;
            if w.len() + rep.len() <= max_len {
                let mut next = w.clone();
                next.extend(rep.iter().cloned());
                stack.push(next);
            }
        }
    }
    let repeated = hits.iter().position(|&h| h > 1);
    let missed = hits.iter().position(|&h| h == 0);

    let witness = if !hom.exact {
        Some("some class did not close within the rewrite bound".to_owned())
    } else if let Some(k) = repeated {
        Some(format!("{} has two factorizations", hom.classes[k][0]))
    } else {
        missed.map(|k| format!("{} is not a product of irreducible loops", hom.classes[k][0]))
    };
    let structure = match (&witness, irreducible.len()) {
        (Some(_), _) => MonoidStructure::Unknown,
        (None, 0) => MonoidStructure::Trivial,
        (None, k) => MonoidStructure::Free(k),
    };
    Ok(MonoidReport {
        base: x.to_owned(),
        max_len,
        classes: hom.count(),
        representatives: hom.classes.iter().map(|m| m[0].clone()).collect(),
        generators: irreducible.iter().map(|&i| hom.classes[i][0].clone()).collect(),
        structure,
        exact: hom.exact,
        witness,
    })
}
