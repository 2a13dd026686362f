//! Finite topological spaces carrying a directed elementary-step relation.
//!
//! A [`CombinatorialDirectedSpace`] stands in for a d-space on finitely many
//! points: its directed paths are the finite step sequences [`StepPath`],
//! where every consecutive pair is either constant or a declared step. Steps
//! must join points that are comparable in the specialization preorder, so
//! that each step is realized by a continuous jump path.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default cap on the number of points a product may have.
pub const DEFAULT_PRODUCT_LIMIT: usize = 4096;
/// Cap on the number of open sets materialized by union closure.
pub const OPEN_SET_LIMIT: usize = 1 << 16;

/// A topology on finitely many named points, given by its full family of
/// open sets. Points and opens are kept in canonical order: points
/// lexicographic, opens by size and then by their sorted member names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteTopology {
    points: Vec<String>,
    index: BTreeMap<String, usize>,
    opens: Vec<FixedBitSet>,
    minimal: Vec<FixedBitSet>,
}

impl FiniteTopology {
    /// Builds a topology from point names and open sets. Only structural
    /// problems (duplicate or unknown names) are errors; the open-set axioms
    /// are checked by [`FiniteTopology::axiom_violations`].
    pub fn new<S: AsRef<str>>(points: &[S], opens: &[Vec<S>]) -> Result<Self> {
        let mut names: Vec<String> = points.iter().map(|p| p.as_ref().to_owned()).collect();
        names.sort();
        if let Some(w) = names.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidTopology(format!("duplicate point `{}`", w[0])));
        }
        let index: BTreeMap<String, usize> = names.iter().enumerate().map(|(i, n)| (n.clone(), i)).collect();
        let mut sets = Vec::with_capacity(opens.len());
        for open in opens {
            let mut set = FixedBitSet::with_capacity(names.len());
            for member in open {
                let i = *index
                    .get(member.as_ref())
                    .ok_or_else(|| Error::UnknownPoint(member.as_ref().to_owned()))?;
                set.insert(i);
            }
            sets.push(set);
        }
        Ok(Self::from_sets(names, index, sets))
    }

    fn from_sets(points: Vec<String>, index: BTreeMap<String, usize>, mut opens: Vec<FixedBitSet>) -> Self {
        let key = |s: &FixedBitSet| (s.count_ones(..), s.ones().collect::<Vec<_>>());
        opens.sort_by_key(key);
        opens.dedup();
        let n = points.len();
        let minimal = (0..n)
            .map(|p| {
                let mut acc = FixedBitSet::with_capacity(n);
                acc.insert_range(..);
                for open in opens.iter().filter(|o| o.contains(p)) {
                    acc.intersect_with(open);
                }
                acc
            })
            .collect();
        FiniteTopology {
            points,
            index,
            opens,
            minimal,
        }
    }

    /// The coarsest topology in which every generating set is open. Its
    /// basis is the family of smallest neighbourhoods: for each point, the
    /// intersection of the whole space with every generator containing it.
    pub fn generated_by<S: AsRef<str>>(points: &[S], generators: &[Vec<S>]) -> Result<Self> {
        let base = Self::new(points, generators)?;
        let n = base.len();
        let basis: Vec<FixedBitSet> = (0..n)
            .map(|x| {
                let mut u = FixedBitSet::with_capacity(n);
                u.insert_range(..);
                for g in base.opens.iter().filter(|g| g.contains(x)) {
                    u.intersect_with(g);
                }
                u
            })
            .collect();
        let opens = union_closure(&basis, n)?;
        Ok(Self::from_sets(base.points, base.index, opens))
    }

    /// Every subset is open.
    pub fn discrete<S: AsRef<str>>(points: &[S]) -> Result<Self> {
        let singletons: Vec<Vec<&str>> = points.iter().map(|p| vec![p.as_ref()]).collect();
        let names: Vec<&str> = points.iter().map(|p| p.as_ref()).collect();
        Self::generated_by(&names, &singletons)
    }

    /// Only the empty set and the full set are open.
    pub fn indiscrete<S: AsRef<str>>(points: &[S]) -> Result<Self> {
        let full: Vec<&str> = points.iter().map(|p| p.as_ref()).collect();
        Self::new(&full, &[Vec::new(), full.clone()])
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn name(&self, point: usize) -> &str {
        &self.points[point]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownPoint(name.to_owned()))
    }

    pub fn opens(&self) -> &[FixedBitSet] {
        &self.opens
    }

    pub fn is_open(&self, set: &FixedBitSet) -> bool {
        self.opens.iter().any(|o| o == set)
    }

    /// Intersection of all opens containing `point`.
    pub fn minimal_open(&self, point: usize) -> &FixedBitSet {
        &self.minimal[point]
    }

    /// Whether a jump between `a` and `b` can be realized continuously in
    /// at least one orientation.
    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.minimal[a].contains(b) || self.minimal[b].contains(a)
    }

    pub fn set_names(&self, set: &FixedBitSet) -> Vec<String> {
        set.ones().map(|i| self.points[i].clone()).collect()
    }

    pub fn axiom_violations(&self) -> Vec<Violation> {
        let n = self.len();
        let mut out = Vec::new();
        if !self.opens.iter().any(|o| o.count_ones(..) == 0) {
            out.push(Violation::EmptySetAbsent);
        }
        if !self.opens.iter().any(|o| o.count_ones(..) == n) {
            out.push(Violation::FullSetAbsent);
        }
        for (i, a) in self.opens.iter().enumerate() {
            for b in &self.opens[i + 1..] {
                let mut union = a.clone();
                union.union_with(b);
                if !self.is_open(&union) {
                    out.push(Violation::UnionNotOpen(self.set_names(a), self.set_names(b)));
                }
                let mut inter = a.clone();
                inter.intersect_with(b);
                if !self.is_open(&inter) {
                    out.push(Violation::IntersectionNotOpen(self.set_names(a), self.set_names(b)));
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.axiom_violations().is_empty()
    }

    fn require_valid(&self) -> Result<()> {
        match self.axiom_violations().first() {
            Some(v) => Err(Error::InvalidTopology(v.to_string())),
            None => Ok(()),
        }
    }

    /// Subspace topology on the named points.
    pub fn subspace<S: AsRef<str>>(&self, keep: &[S]) -> Result<Self> {
        let kept: Vec<usize> = keep.iter().map(|k| self.index_of(k.as_ref())).collect::<Result<_>>()?;
        let names: Vec<&str> = kept.iter().map(|&i| self.name(i)).collect();
        let opens: Vec<Vec<&str>> = self
            .opens
            .iter()
            .map(|o| kept.iter().filter(|&&i| o.contains(i)).map(|&i| self.name(i)).collect())
            .collect();
        Self::new(&names, &opens)
    }
}

/// All unions of subfamilies of `generators`, the empty union included.
fn union_closure(generators: &[FixedBitSet], n: usize) -> Result<Vec<FixedBitSet>> {
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut family = vec![FixedBitSet::with_capacity(n)];
    seen.insert(Vec::new());
    for g in generators {
        let mut fresh = Vec::new();
        for s in &family {
            let mut u = s.clone();
            u.union_with(g);
            if seen.insert(u.ones().collect()) {
                fresh.push(u);
            }
        }
        family.extend(fresh);
        if family.len() > OPEN_SET_LIMIT {
            return Err(Error::TooLarge {
                what: "open sets",
                needed: family.len(),
                limit: OPEN_SET_LIMIT,
            });
        }
    }
    Ok(family)
}

/// One failed axiom or step condition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Violation {
    EmptySetAbsent,
    FullSetAbsent,
    UnionNotOpen(Vec<String>, Vec<String>),
    IntersectionNotOpen(Vec<String>, Vec<String>),
    IncomparablePair(String, String),
    ConstantStep(String),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EmptySetAbsent => write!(f, "empty set absent"),
            Violation::FullSetAbsent => write!(f, "full set absent"),
            Violation::UnionNotOpen(a, b) => {
                write!(f, "union of {{{}}} and {{{}}} not open", a.join(","), b.join(","))
            }
            Violation::IntersectionNotOpen(a, b) => write!(
                f,
                "intersection of {{{}}} and {{{}}} not open",
                a.join(","),
                b.join(",")
            ),
            Violation::IncomparablePair(a, b) => write!(f, "incomparable pair {a}→{b}"),
            Violation::ConstantStep(a) => write!(f, "constant step at {a}"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// A finite topology with directed elementary steps between distinct,
/// comparable points. Constant paths are always directed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CombinatorialDirectedSpace {
    topology: FiniteTopology,
    steps: BTreeSet<(usize, usize)>,
}

impl CombinatorialDirectedSpace {
    pub fn new<S: AsRef<str>>(topology: FiniteTopology, steps: &[(S, S)]) -> Result<Self> {
        let steps = steps
            .iter()
            .map(|(a, b)| Ok((topology.index_of(a.as_ref())?, topology.index_of(b.as_ref())?)))
            .collect::<Result<_>>()?;
        Ok(CombinatorialDirectedSpace { topology, steps })
    }

    fn from_indices(topology: FiniteTopology, steps: BTreeSet<(usize, usize)>) -> Self {
        CombinatorialDirectedSpace { topology, steps }
    }

    pub fn topology(&self) -> &FiniteTopology {
        &self.topology
    }

    pub fn len(&self) -> usize {
        self.topology.len()
    }

    pub fn is_empty(&self) -> bool {
        self.topology.is_empty()
    }

    pub fn name(&self, point: usize) -> &str {
        self.topology.name(point)
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.topology.index_of(name)
    }

    /// Steps as index pairs, in canonical order.
    pub fn steps(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.steps.iter().copied()
    }

    pub fn step_count(&self) -> usize {
        self.steps.len()
    }

    pub fn step_names(&self) -> Vec<(String, String)> {
        self.steps
            .iter()
            .map(|&(a, b)| (self.name(a).to_owned(), self.name(b).to_owned()))
            .collect()
    }

    pub fn has_step(&self, a: usize, b: usize) -> bool {
        self.steps.contains(&(a, b))
    }

    /// Constant or a declared step.
    pub fn is_directed_jump(&self, a: usize, b: usize) -> bool {
        a == b || self.has_step(a, b)
    }

    pub fn successors(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        self.steps.range((a, 0)..=(a, usize::MAX)).map(|&(_, b)| b)
    }

    pub fn validate(&self) -> ValidationReport {
        let mut violations = self.topology.axiom_violations();
        for &(a, b) in &self.steps {
            if a == b {
                violations.push(Violation::ConstantStep(self.name(a).to_owned()));
            } else if !self.topology.comparable(a, b) {
                violations.push(Violation::IncomparablePair(
                    self.name(a).to_owned(),
                    self.name(b).to_owned(),
                ));
            }
        }
        ValidationReport { violations }
    }

    /// Builds a step path from point names.
    pub fn step_path<S: AsRef<str>>(&self, names: &[S]) -> Result<StepPath> {
        StepPath::new(self, names)
    }

    /// Induced directed subspace on the named points.
    pub fn subspace<S: AsRef<str>>(&self, keep: &[S]) -> Result<Self> {
        let topology = self.topology.subspace(keep)?;
        let inclusion: BTreeMap<String, String> = topology.points().iter().map(|p| (p.clone(), p.clone())).collect();
        induced_directedness(&inclusion, self, &topology)
    }

    pub fn to_document(&self) -> SpaceDocument {
        let t = &self.topology;
        SpaceDocument {
            points: t.points().to_vec(),
            opens: t.opens().iter().map(|o| t.set_names(o)).collect(),
            steps: self.step_names().into_iter().map(|(a, b)| [a, b]).collect(),
        }
    }

    pub fn from_document(doc: &SpaceDocument) -> Result<Self> {
        let topology = FiniteTopology::new(&doc.points, &doc.opens)?;
        let steps: Vec<(&str, &str)> = doc.steps.iter().map(|[a, b]| (a.as_str(), b.as_str())).collect();
        Self::new(topology, &steps)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Self::from_document(&serde_json::from_str(text)?)
    }

    /// Canonical JSON text, newline terminated.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_document()).expect("space documents always serialize");
        s.push('\n');
        s
    }
}

/// Serialized form of a [`CombinatorialDirectedSpace`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceDocument {
    pub points: Vec<String>,
    pub opens: Vec<Vec<String>>,
    pub steps: Vec<[String; 2]>,
}

/// A finite directed path over point names: consecutive points are equal or
/// joined by a step.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StepPath {
    points: Vec<String>,
}

impl StepPath {
    pub fn new<S: AsRef<str>>(space: &CombinatorialDirectedSpace, points: &[S]) -> Result<Self> {
        let path = StepPath {
            points: points.iter().map(|p| p.as_ref().to_owned()).collect(),
        };
        path.check(space)?;
        Ok(path)
    }

    /// The constant path at `point`.
    pub fn constant(point: &str) -> Self {
        StepPath {
            points: vec![point.to_owned()],
        }
    }

    pub fn check(&self, space: &CombinatorialDirectedSpace) -> Result<()> {
        if self.points.is_empty() {
            return Err(Error::InvalidPath("step path needs at least one point".into()));
        }
        let idx = self
            .points
            .iter()
            .map(|p| space.index_of(p))
            .collect::<Result<Vec<_>>>()?;
        if let Some(w) = idx.windows(2).find(|w| !space.is_directed_jump(w[0], w[1])) {
            return Err(Error::InvalidPath(format!(
                "{}→{} is not a step",
                space.name(w[0]),
                space.name(w[1])
            )));
        }
        Ok(())
    }

    pub fn is_valid_in(&self, space: &CombinatorialDirectedSpace) -> bool {
        self.check(space).is_ok()
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn start(&self) -> &str {
        &self.points[0]
    }

    pub fn end(&self) -> &str {
        self.points.last().unwrap()
    }

    /// Number of segments, constant segments included.
    pub fn len(&self) -> usize {
        self.points.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn concat(&self, other: &StepPath) -> Result<StepPath> {
        if self.end() != other.start() {
            return Err(Error::EndpointMismatch(format!(
                "path ends at {} but next starts at {}",
                self.end(),
                other.start()
            )));
        }
        let mut points = self.points.clone();
        points.extend_from_slice(&other.points[1..]);
        Ok(StepPath { points })
    }

    /// Sub-path between point indices `from..=to`.
    pub fn slice(&self, from: usize, to: usize) -> StepPath {
        StepPath {
            points: self.points[from..=to].to_vec(),
        }
    }

    /// Drops constant segments.
    pub fn without_stutters(&self) -> StepPath {
        let mut points = self.points.clone();
        points.dedup();
        StepPath { points }
    }

    /// Duplicates the point at `index`, adding a constant segment.
    pub fn with_stutter(&self, index: usize) -> StepPath {
        let mut points = self.points.clone();
        points.insert(index, points[index].clone());
        StepPath { points }
    }

    /// The non-constant segments as `(from, to)` pairs.
    pub fn jumps(&self) -> impl Iterator<Item = (&str, &str)> + '_ {
        self.points
            .windows(2)
            .filter(|w| w[0] != w[1])
            .map(|w| (w[0].as_str(), w[1].as_str()))
    }
}

impl fmt::Display for StepPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.points.join("→"))
    }
}

pub fn validate_space(space: &CombinatorialDirectedSpace) -> ValidationReport {
    space.validate()
}

/// Only constant paths are directed.
pub fn minimal_directedness(topology: &FiniteTopology) -> Result<CombinatorialDirectedSpace> {
    topology.require_valid()?;
    Ok(CombinatorialDirectedSpace::from_indices(
        topology.clone(),
        BTreeSet::new(),
    ))
}

/// Every continuous path is directed: all comparable ordered pairs are steps.
pub fn maximal_directedness(topology: &FiniteTopology) -> Result<CombinatorialDirectedSpace> {
    topology.require_valid()?;
    let n = topology.len();
    let steps = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .filter(|&(a, b)| a != b && topology.comparable(a, b))
        .collect();
    Ok(CombinatorialDirectedSpace::from_indices(topology.clone(), steps))
}

/// Name of a product point.
pub fn product_point_name(a: &str, b: &str) -> String {
    format!("({a},{b})")
}

pub fn product_space(
    a: &CombinatorialDirectedSpace,
    b: &CombinatorialDirectedSpace,
) -> Result<CombinatorialDirectedSpace> {
    product_space_with_limit(a, b, DEFAULT_PRODUCT_LIMIT)
}

/// Product space: opens generated by open rectangles, steps move each
/// coordinate by a step or not at all, and the combined jump must itself be
/// comparable in the product.
pub fn product_space_with_limit(
    a: &CombinatorialDirectedSpace,
    b: &CombinatorialDirectedSpace,
    limit: usize,
) -> Result<CombinatorialDirectedSpace> {
    let needed = a.len() * b.len();
    if needed > limit {
        return Err(Error::TooLarge {
            what: "product points",
            needed,
            limit,
        });
    }
    let (ta, tb) = (a.topology(), b.topology());
    let mut names = Vec::with_capacity(needed);
    for i in 0..a.len() {
        for j in 0..b.len() {
            names.push(product_point_name(ta.name(i), tb.name(j)));
        }
    }
    let rectangles: Vec<Vec<String>> = (0..a.len())
        .flat_map(|i| (0..b.len()).map(move |j| (i, j)))
        .map(|(i, j)| {
            let mut rect = Vec::new();
            for x in ta.minimal_open(i).ones() {
                for y in tb.minimal_open(j).ones() {
                    rect.push(product_point_name(ta.name(x), tb.name(y)));
                }
            }
            rect
        })
        .collect();
    let topology = FiniteTopology::generated_by(&names, &rectangles)?;
    let mut steps = BTreeSet::new();
    for i1 in 0..a.len() {
        for j1 in 0..b.len() {
            for i2 in 0..a.len() {
                for j2 in 0..b.len() {
                    if (i1, j1) == (i2, j2) || !a.is_directed_jump(i1, i2) || !b.is_directed_jump(j1, j2) {
                        continue;
                    }
                    let from = topology.index_of(&product_point_name(ta.name(i1), tb.name(j1)))?;
                    let to = topology.index_of(&product_point_name(ta.name(i2), tb.name(j2)))?;
                    if topology.comparable(from, to) {
                        steps.insert((from, to));
                    }
                }
            }
        }
    }
    Ok(CombinatorialDirectedSpace::from_indices(topology, steps))
}

/// Pulls the directed structure of `target` back along `map`: a comparable
/// pair of source points is a step iff its image is constant or a step.
pub fn induced_directedness(
    map: &BTreeMap<String, String>,
    target: &CombinatorialDirectedSpace,
    source_topology: &FiniteTopology,
) -> Result<CombinatorialDirectedSpace> {
    let image: Vec<usize> = source_topology
        .points()
        .iter()
        .map(|p| {
            let y = map.get(p).ok_or_else(|| Error::PartialMap(p.clone()))?;
            target.index_of(y)
        })
        .collect::<Result<_>>()?;
    let n = source_topology.len();
    for open in target.topology().opens() {
        let mut pre = FixedBitSet::with_capacity(n);
        for (x, &y) in image.iter().enumerate() {
            if open.contains(y) {
                pre.insert(x);
            }
        }
        if !source_topology.is_open(&pre) {
            return Err(Error::Discontinuous(format!(
                "{{{}}}",
                target.topology().set_names(open).join(",")
            )));
        }
    }
    let steps = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .filter(|&(a, b)| a != b && source_topology.comparable(a, b) && target.is_directed_jump(image[a], image[b]))
        .collect();
    Ok(CombinatorialDirectedSpace::from_indices(source_topology.clone(), steps))
}
