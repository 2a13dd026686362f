use std::collections::{BTreeMap, HashMap, HashSet};

use serde::Serialize;

use super::{MorphismWord, PresentedCategory};
use crate::error::{Error, Result};

/// Hard cap on words visited by one search.
const NODE_LIMIT: usize = 250_000;
/// Hard cap on words enumerated for one hom-set window.
const WORD_LIMIT: usize = 2_000_000;

/// Outcome of a bounded decision.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Decision {
    Yes,
    No,
    Unknown,
}

impl Decision {
    pub fn as_str(self) -> &'static str {
        match self {
            Decision::Yes => "yes",
            Decision::No => "no",
            Decision::Unknown => "unknown",
        }
    }
}

impl std::fmt::Display for Decision {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

type Code = Vec<u32>;

struct Rule {
    from: Code,
    to: Code,
    /// Object where an empty `from` may be inserted.
    at: u32,
}

/// Relations compiled into directed rewrite rules, reusable across queries.
pub struct WordSearch<'a> {
    cat: &'a PresentedCategory,
    src: Vec<u32>,
    dst: Vec<u32>,
    rules: Vec<Rule>,
    by_first: HashMap<u32, Vec<usize>>,
    inserts: Vec<usize>,
}

/// Result of exploring the class of one word.
struct Closure {
    members: HashSet<Code>,
    exhausted: bool,
}

impl<'a> WordSearch<'a> {
    pub fn new(cat: &'a PresentedCategory) -> Self {
        let obj = |o: &str| cat.object_id(o).expect("validated presentation") as u32;
        let src = cat.generators().iter().map(|g| obj(&g.src)).collect();
        let dst = cat.generators().iter().map(|g| obj(&g.dst)).collect();
        let code = |w: &MorphismWord| -> Code {
            w.gens
                .iter()
                .map(|g| cat.generator_id(g).expect("validated presentation") as u32)
                .collect()
        };
        let mut rules = Vec::new();
        for r in cat.relations() {
            let (l, rr) = (code(&r.lhs), code(&r.rhs));
            let at = obj(&r.lhs.src);
            rules.push(Rule {
                from: l.clone(),
                to: rr.clone(),
                at,
            });
            rules.push(Rule { from: rr, to: l, at });
        }
        let mut by_first: HashMap<u32, Vec<usize>> = HashMap::new();
        let mut inserts = Vec::new();
        for (i, r) in rules.iter().enumerate() {
            match r.from.first() {
                Some(&g) => by_first.entry(g).or_default().push(i),
                None => inserts.push(i),
            }
        }
        WordSearch {
            cat,
            src,
            dst,
            rules,
            by_first,
            inserts,
        }
    }

    pub fn category(&self) -> &PresentedCategory {
        self.cat
    }

    fn compile(&self, w: &MorphismWord) -> Result<(u32, u32, Code)> {
        let dst = self.cat.word_target(w)?;
        let code = w
            .gens
            .iter()
            .map(|g| self.cat.generator_id(g).unwrap() as u32)
            .collect();
        Ok((
            self.cat.object_id(&w.src).unwrap() as u32,
            self.cat.object_id(&dst).unwrap() as u32,
            code,
        ))
    }

    fn decode(&self, src: u32, code: &[u32]) -> MorphismWord {
        MorphismWord {
            src: self.cat.objects()[src as usize].clone(),
            gens: code
                .iter()
                .map(|&g| self.cat.generators()[g as usize].id.clone())
                .collect(),
        }
    }

    fn object_at(&self, src: u32, w: &[u32], i: usize) -> u32 {
        if i == 0 {
            src
        } else {
            self.dst[w[i - 1] as usize]
        }
    }

    fn neighbours(&self, src: u32, w: &[u32], out: &mut Vec<Code>) {
        for i in 0..w.len() {
            if let Some(ids) = self.by_first.get(&w[i]) {
                for &r in ids {
                    let rule = &self.rules[r];
                    if w[i..].starts_with(&rule.from) {
                        let mut next = Vec::with_capacity(w.len() - rule.from.len() + rule.to.len());
                        next.extend_from_slice(&w[..i]);
                        next.extend_from_slice(&rule.to);
                        next.extend_from_slice(&w[i + rule.from.len()..]);
                        out.push(next);
                    }
                }
            }
        }
        for &r in &self.inserts {
            let rule = &self.rules[r];
            for i in 0..=w.len() {
                if self.object_at(src, w, i) == rule.at {
                    let mut next = w[..i].to_vec();
                    next.extend_from_slice(&rule.to);
                    next.extend_from_slice(&w[i..]);
                    out.push(next);
                }
            }
        }
    }

    fn closure(&self, src: u32, start: Code, depth: usize) -> Closure {
        let mut members = HashSet::from([start.clone()]);
        let mut frontier = vec![start];
        let mut buf = Vec::new();
        for _ in 0..depth {
            let mut next = Vec::new();
            for w in &frontier {
                buf.clear();
                self.neighbours(src, w, &mut buf);
                for n in buf.drain(..) {
                    if !members.contains(&n) {
                        members.insert(n.clone());
                        next.push(n);
                    }
                }
            }
            if next.is_empty() {
                return Closure {
                    members,
                    exhausted: true,
                };
            }
            frontier = next;
            if members.len() > NODE_LIMIT {
                return Closure {
                    members,
                    exhausted: false,
                };
            }
        }
        // one more look decides whether the last layer was closed
        let mut buf = Vec::new();
        let exhausted = frontier.iter().all(|w| {
            buf.clear();
            self.neighbours(src, w, &mut buf);
            buf.iter().all(|n| members.contains(n))
        });
        Closure { members, exhausted }
    }

    /// See [`word_equal`].
    pub fn equal(&self, a: &MorphismWord, b: &MorphismWord, depth: usize) -> Result<Decision> {
        let (sa, ta, ca) = self.compile(a)?;
        let (sb, tb, cb) = self.compile(b)?;
        if sa != sb || ta != tb {
            return Err(Error::EndpointMismatch(format!("{a} and {b} do not share endpoints")));
        }
        if ca == cb {
            return Ok(Decision::Yes);
        }
        let mut seen = [HashSet::from([ca.clone()]), HashSet::from([cb.clone()])];
        let mut frontier = [vec![ca], vec![cb]];
        let mut buf = Vec::new();
        for _ in 0..depth {
            let side = usize::from(frontier[1].len() < frontier[0].len());
            let other = 1 - side;
            let mut next = Vec::new();
            for w in &frontier[side] {
                buf.clear();
                self.neighbours(sa, w, &mut buf);
                for n in buf.drain(..) {
                    if seen[other].contains(&n) {
                        return Ok(Decision::Yes);
                    }
                    if seen[side].insert(n.clone()) {
                        next.push(n);
                    }
                }
            }
            if next.is_empty() {
                // this side's class is fully enumerated and misses the other word
                return Ok(Decision::No);
            }
            frontier[side] = next;
            if seen[0].len() + seen[1].len() > NODE_LIMIT {
                return Ok(Decision::Unknown);
            }
        }
        Ok(Decision::Unknown)
    }

    /// Words from `x` of length at most `max_len`, grouped by target, each
    /// group in shortlex order (generator ids compared as strings).
    pub fn words_from(&self, x: &str, max_len: usize) -> Result<BTreeMap<String, Vec<MorphismWord>>> {
        let x0 = self
            .cat
            .object_id(x)
            .ok_or_else(|| Error::InvalidWord(format!("unknown object `{x}`")))? as u32;
        let mut out_of: Vec<Vec<u32>> = vec![Vec::new(); self.cat.objects().len()];
        let mut order: Vec<u32> = (0..self.src.len() as u32).collect();
        order.sort_by(|&a, &b| {
            self.cat.generators()[a as usize]
                .id
                .cmp(&self.cat.generators()[b as usize].id)
        });
        for g in order {
            out_of[self.src[g as usize] as usize].push(g);
        }
        // breadth first by length keeps shortlex order within each length
        let mut by_target: BTreeMap<String, Vec<MorphismWord>> = BTreeMap::new();
        let mut layer: Vec<(u32, Code)> = vec![(x0, Vec::new())];
        let mut total = 0usize;
        for len in 0..=max_len {
            for (at, w) in &layer {
                by_target
                    .entry(self.cat.objects()[*at as usize].clone())
                    .or_default()
                    .push(self.decode(x0, w));
            }
            total += layer.len();
            if total > WORD_LIMIT {
                return Err(Error::TooLarge {
                    what: "hom-set window",
                    needed: total,
                    limit: WORD_LIMIT,
                });
            }
            if len == max_len {
                break;
            }
            let mut next = Vec::new();
            for (at, w) in &layer {
                for &g in &out_of[*at as usize] {
                    let mut v = w.clone();
                    v.push(g);
                    next.push((self.dst[g as usize], v));
                }
            }
            layer = next;
        }
        Ok(by_target)
    }

    /// Groups `words` (all with the same endpoints) into classes.
    pub fn classify(&self, words: Vec<MorphismWord>, depth: usize) -> Result<HomClasses> {
        let mut codes = Vec::with_capacity(words.len());
        for w in &words {
            codes.push(self.compile(w)?);
        }
        let index: HashMap<&Code, usize> = codes.iter().enumerate().map(|(i, c)| (&c.2, i)).collect();
        let mut class_of = vec![usize::MAX; words.len()];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut exact = true;
        for seed in 0..words.len() {
            if class_of[seed] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let closure = self.closure(codes[seed].0, codes[seed].2.clone(), depth);
            exact &= closure.exhausted;
            let mut members: Vec<usize> = closure
                .members
                .iter()
                .filter_map(|c| index.get(c).copied())
                .filter(|&i| class_of[i] == usize::MAX)
                .collect();
            if !members.contains(&seed) {
                members.push(seed);
            }
            members.sort_unstable();
            for &i in &members {
                class_of[i] = id;
            }
            classes.push(members);
        }
        Ok(HomClasses {
            classes: classes
                .into_iter()
                .map(|m| m.into_iter().map(|i| words[i].clone()).collect())
                .collect(),
            exact,
        })
    }

    /// Every member of the class of `w` found within `depth` rewrites.
    pub fn class_members(&self, w: &MorphismWord, depth: usize) -> Result<(Vec<MorphismWord>, bool)> {
        let (s, _, code) = self.compile(w)?;
        let closure = self.closure(s, code, depth);
        let mut members: Vec<MorphismWord> = closure.members.iter().map(|c| self.decode(s, c)).collect();
        members.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.gens.cmp(&b.gens)));
        Ok((members, closure.exhausted))
    }
}

/// Equivalence classes of a finite window of a hom-set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomClasses {
    /// Members of each class in shortlex order; the first is the representative.
    pub classes: Vec<Vec<MorphismWord>>,
    /// False when some class could not be closed within the bounds.
    pub exact: bool,
}

impl HomClasses {
    pub fn count(&self) -> usize {
        self.classes.len()
    }

    pub fn representatives(&self) -> Vec<&MorphismWord> {
        self.classes.iter().map(|c| &c[0]).collect()
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomCount {
    pub count: usize,
    pub exact: bool,
}

/// Decides `w₁ = w₂` by bidirectional breadth-first rewriting with at most
/// `depth` rewrite steps in total. `No` means one of the two classes was
/// enumerated completely without meeting the other word.
pub fn word_equal(c: &PresentedCategory, w1: &MorphismWord, w2: &MorphismWord, depth: usize) -> Result<Decision> {
    WordSearch::new(c).equal(w1, w2, depth)
}

/// All words `x → y` of length at most `max_len`, shortlex ordered.
pub fn words_between(c: &PresentedCategory, x: &str, y: &str, max_len: usize) -> Result<Vec<MorphismWord>> {
    if !c.has_object(y) {
        return Err(Error::InvalidWord(format!("unknown object `{y}`")));
    }
    Ok(WordSearch::new(c).words_from(x, max_len)?.remove(y).unwrap_or_default())
}

/// Classes of words `x → y` of length at most `max_len`.
pub fn hom_classes(c: &PresentedCategory, x: &str, y: &str, max_len: usize, depth: usize) -> Result<HomClasses> {
    let search = WordSearch::new(c);
    let words = words_between(c, x, y, max_len)?;
    search.classify(words, depth)
}

/// Number of classes among words `x → y` of length at most `max_len`.
pub fn hom_count(c: &PresentedCategory, x: &str, y: &str, max_len: usize, depth: usize) -> Result<HomCount> {
    let h = hom_classes(c, x, y, max_len, depth)?;
    Ok(HomCount {
        count: h.count(),
        exact: h.exact,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::{Generator, Relation};

    fn square() -> PresentedCategory {
        // (0,0) -r-> (1,0) -u'-> (1,1), (0,0) -u-> (0,1) -r'-> (1,1)
        PresentedCategory::new(
            vec!["a".into(), "b".into(), "c".into(), "d".into()],
            vec![
                Generator::new("r", "a", "b"),
                Generator::new("u2", "b", "d"),
                Generator::new("u", "a", "c"),
                Generator::new("r2", "c", "d"),
            ],
            vec![Relation::new(
                MorphismWord::new("a", ["r", "u2"]),
                MorphismWord::new("a", ["u", "r2"]),
            )],
        )
        .unwrap()
    }

    #[test]
    fn free_words_are_equal_only_when_identical() {
        let c = PresentedCategory::free(
            vec!["x".into(), "y".into()],
            vec![Generator::new("f", "x", "y"), Generator::new("g", "x", "y")],
        )
        .unwrap();
        let f = MorphismWord::new("x", ["f"]);
        let g = MorphismWord::new("x", ["g"]);
        assert_eq!(word_equal(&c, &f, &f, 4).unwrap(), Decision::Yes);
        assert_eq!(word_equal(&c, &f, &g, 4).unwrap(), Decision::No);
        assert!(word_equal(&c, &f, &MorphismWord::identity("x"), 4).is_err());
    }

    #[test]
    fn commuting_square() {
        let c = square();
        let ru = MorphismWord::new("a", ["r", "u2"]);
        let ur = MorphismWord::new("a", ["u", "r2"]);
        assert_eq!(word_equal(&c, &ru, &ur, 1).unwrap(), Decision::Yes);
        assert_eq!(word_equal(&c, &ru, &ur, 0).unwrap(), Decision::Unknown);
        assert_eq!(
            hom_count(&c, "a", "d", 2, 4).unwrap(),
            HomCount { count: 1, exact: true }
        );
        assert_eq!(hom_count(&c, "a", "a", 0, 4).unwrap().count, 1);
    }

    #[test]
    fn identity_relations_make_loops_collapse() {
        let c = PresentedCategory::new(
            vec!["x".into()],
            vec![Generator::new("f", "x", "x")],
            vec![Relation::new(
                MorphismWord::new("x", ["f", "f"]),
                MorphismWord::identity("x"),
            )],
        )
        .unwrap();
        let ff = MorphismWord::new("x", ["f", "f"]);
        assert_eq!(
            word_equal(&c, &ff, &MorphismWord::identity("x"), 2).unwrap(),
            Decision::Yes
        );
        // classes never close because f·f can always be inserted
        let h = hom_classes(&c, "x", "x", 3, 4).unwrap();
        assert_eq!(h.count(), 2);
        assert!(!h.exact);
    }

    #[test]
    fn words_are_shortlex() {
        let c = square();
        let ws = words_between(&c, "a", "d", 5).unwrap();
        let shown: Vec<String> = ws.iter().map(|w| w.to_string()).collect();
        assert_eq!(shown, ["r·u2", "u·r2"]);
    }
}
