//! Grid models of two-process programs.
//!
//! A [`CubicalSpace`] is a `width × height` grid of unit cells, some of them
//! forbidden. Execution schedules are monotone lattice paths (moves `R` and
//! `U`). Forbidden cells are closed obstacles: an edge is blocked only when it
//! lies between two forbidden cells, and a vertex only when all four cells
//! around it are forbidden, so paths may run along an obstacle's boundary.
//! The atomic directed deformation is the corner flip across one allowed
//! cell.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::cover::{CoverDocument, Piece};
use crate::error::{Error, Result};

/// Default cap on enumerated paths.
pub const DEFAULT_PATH_LIMIT: usize = 1_000_000;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Vertex {
    pub x: u32,
    pub y: u32,
}

impl Vertex {
    pub const fn new(x: u32, y: u32) -> Self {
        Vertex { x, y }
    }

    pub fn step(self, mv: Move) -> Vertex {
        match mv {
            Move::Right => Vertex::new(self.x + 1, self.y),
            Move::Up => Vertex::new(self.x, self.y + 1),
        }
    }

    pub fn le(self, other: Vertex) -> bool {
        self.x <= other.x && self.y <= other.y
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl FromStr for Vertex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidPath(format!("bad vertex `{s}`, expected (x,y)"));
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .unwrap_or(s.trim());
        let (x, y) = inner.split_once(',').ok_or_else(bad)?;
        Ok(Vertex::new(
            x.trim().parse().map_err(|_| bad())?,
            y.trim().parse().map_err(|_| bad())?,
        ))
    }
}

/// A unit cell, named by its lower-left vertex.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub x: u32,
    pub y: u32,
}

impl Cell {
    pub const fn new(x: u32, y: u32) -> Self {
        Cell { x, y }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.x, self.y)
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Move {
    Right,
    Up,
}

impl Move {
    pub fn letter(self) -> char {
        match self {
            Move::Right => 'R',
            Move::Up => 'U',
        }
    }
}

/// Parses a move string such as `RRUU`.
pub fn parse_moves(s: &str) -> Result<Vec<Move>> {
    s.chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| match c {
            'R' | 'r' => Ok(Move::Right),
            'U' | 'u' => Ok(Move::Up),
            other => Err(Error::InvalidPath(format!("unknown move `{other}`"))),
        })
        .collect()
}

pub fn moves_to_string(moves: &[Move]) -> String {
    moves.iter().map(|m| m.letter()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CubicalSpace {
    width: u32,
    height: u32,
    forbidden: BTreeSet<Cell>,
}

impl CubicalSpace {
    pub fn new(width: u32, height: u32, forbidden: impl IntoIterator<Item = Cell>) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(Error::InvalidGrid(format!(
                "dimensions must be positive, got {width}×{height}"
            )));
        }
        let forbidden: BTreeSet<Cell> = forbidden.into_iter().collect();
        if let Some(c) = forbidden.iter().find(|c| c.x >= width || c.y >= height) {
            return Err(Error::InvalidGrid(format!("forbidden cell {c} outside grid")));
        }
        Ok(CubicalSpace {
            width,
            height,
            forbidden,
        })
    }

    /// The obstacle-free grid.
    pub fn empty(width: u32, height: u32) -> Result<Self> {
        Self::new(width, height, [])
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    pub fn forbidden(&self) -> &BTreeSet<Cell> {
        &self.forbidden
    }

    pub fn is_forbidden(&self, cell: Cell) -> bool {
        self.forbidden.contains(&cell)
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        v.x <= self.width && v.y <= self.height
    }

    pub fn contains_cell(&self, c: Cell) -> bool {
        c.x < self.width && c.y < self.height
    }

    /// Interior vertex surrounded by four forbidden cells.
    pub fn is_vertex_blocked(&self, v: Vertex) -> bool {
        v.x > 0
            && v.y > 0
            && v.x < self.width
            && v.y < self.height
            && [(v.x - 1, v.y - 1), (v.x, v.y - 1), (v.x - 1, v.y), (v.x, v.y)]
                .iter()
                .all(|&(x, y)| self.is_forbidden(Cell::new(x, y)))
    }

    /// Interior edge between two forbidden cells.
    pub fn is_edge_blocked(&self, from: Vertex, mv: Move) -> bool {
        match mv {
            Move::Right => {
                from.y > 0
                    && from.y < self.height
                    && self.is_forbidden(Cell::new(from.x, from.y - 1))
                    && self.is_forbidden(Cell::new(from.x, from.y))
            }
            Move::Up => {
                from.x > 0
                    && from.x < self.width
                    && self.is_forbidden(Cell::new(from.x - 1, from.y))
                    && self.is_forbidden(Cell::new(from.x, from.y))
            }
        }
    }

    pub fn is_vertex_allowed(&self, v: Vertex) -> bool {
        self.contains_vertex(v) && !self.is_vertex_blocked(v)
    }

    /// Whether the unit edge from `from` in direction `mv` may be traversed.
    pub fn edge_allowed(&self, from: Vertex, mv: Move) -> bool {
        let to = from.step(mv);
        self.is_vertex_allowed(from) && self.is_vertex_allowed(to) && !self.is_edge_blocked(from, mv)
    }

    /// All vertices in row-major order (by y, then x).
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..=self.height).flat_map(move |y| (0..=self.width).map(move |x| Vertex::new(x, y)))
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        (0..self.height).flat_map(move |y| (0..self.width).map(move |x| Cell::new(x, y)))
    }

    /// All allowed unit edges.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Move)> + '_ {
        self.vertices()
            .flat_map(|v| [(v, Move::Right), (v, Move::Up)])
            .filter(|&(v, m)| self.edge_allowed(v, m))
    }

    /// Unblocked vertices other than the top-right corner with no allowed
    /// outgoing edge.
    pub fn dead_vertices(&self) -> Vec<Vertex> {
        let top = Vertex::new(self.width, self.height);
        self.vertices()
            .filter(|&v| v != top && self.is_vertex_allowed(v))
            .filter(|&v| !self.edge_allowed(v, Move::Right) && !self.edge_allowed(v, Move::Up))
            .collect()
    }

    pub fn path(&self, start: Vertex, moves: &str) -> Result<LatticePath> {
        LatticePath::new(self, start, parse_moves(moves)?)
    }

    pub fn to_document(&self, cover: Option<&GridCover>) -> GridDocument {
        GridDocument {
            width: self.width,
            height: self.height,
            forbidden: self.forbidden.iter().map(|c| [c.x, c.y]).collect(),
            cover: cover.map(|c| match CoverDocument::from_cover(&c.clone().into()) {
                CoverDocument::Grid { first, second } => GridCoverDocument { first, second },
                CoverDocument::Points { .. } => unreachable!(),
            }),
        }
    }

    pub fn from_document(doc: &GridDocument) -> Result<(Self, Option<GridCover>)> {
        let space = Self::new(
            doc.width,
            doc.height,
            doc.forbidden.iter().map(|&[x, y]| Cell::new(x, y)),
        )?;
        let cover = doc.cover.as_ref().map(|c| {
            GridCover::new(
                c.first.iter().copied().map(Rect::from).collect(),
                c.second.iter().copied().map(Rect::from).collect(),
            )
        });
        Ok((space, cover))
    }
}

/// Serialized grid, with an optional two-piece cover.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridDocument {
    pub width: u32,
    pub height: u32,
    pub forbidden: Vec<[u32; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cover: Option<GridCoverDocument>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridCoverDocument {
    pub first: Vec<[u32; 4]>,
    pub second: Vec<[u32; 4]>,
}

/// A monotone lattice path: a start vertex and a sequence of moves.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePath {
    start: Vertex,
    moves: Vec<Move>,
}

impl LatticePath {
    pub fn new(space: &CubicalSpace, start: Vertex, moves: Vec<Move>) -> Result<Self> {
        let path = LatticePath { start, moves };
        path.check(space)?;
        Ok(path)
    }

    pub fn constant(at: Vertex) -> Self {
        LatticePath {
            start: at,
            moves: Vec::new(),
        }
    }

    pub fn from_parts(start: Vertex, moves: Vec<Move>) -> Self {
        LatticePath { start, moves }
    }

    pub fn check(&self, space: &CubicalSpace) -> Result<()> {
        if !space.is_vertex_allowed(self.start) {
            return Err(Error::InvalidPath(format!(
                "start {} is outside the grid or blocked",
                self.start
            )));
        }
        let mut v = self.start;
        for &m in &self.moves {
            if !space.edge_allowed(v, m) {
                return Err(Error::InvalidPath(format!(
                    "edge {}{} from {v} is not allowed",
                    m.letter(),
                    v.step(m)
                )));
            }
            v = v.step(m);
        }
        Ok(())
    }

    pub fn is_valid_in(&self, space: &CubicalSpace) -> bool {
        self.check(space).is_ok()
    }

    pub fn start(&self) -> Vertex {
        self.start
    }

    pub fn end(&self) -> Vertex {
        self.moves.iter().fold(self.start, |v, &m| v.step(m))
    }

    pub fn moves(&self) -> &[Move] {
        &self.moves
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    pub fn vertices(&self) -> Vec<Vertex> {
        let mut out = Vec::with_capacity(self.moves.len() + 1);
        let mut v = self.start;
        out.push(v);
        for &m in &self.moves {
            v = v.step(m);
            out.push(v);
        }
        out
    }

    pub fn concat(&self, other: &LatticePath) -> Result<LatticePath> {
        if self.end() != other.start {
            return Err(Error::EndpointMismatch(format!(
                "path ends at {} but next starts at {}",
                self.end(),
                other.start
            )));
        }
        let mut moves = self.moves.clone();
        moves.extend_from_slice(&other.moves);
        Ok(LatticePath {
            start: self.start,
            moves,
        })
    }

    /// Sub-path between vertex indices `from..=to`.
    pub fn slice(&self, from: usize, to: usize) -> LatticePath {
        let start = self.moves[..from].iter().fold(self.start, |v, &m| v.step(m));
        LatticePath {
            start,
            moves: self.moves[from..to].to_vec(),
        }
    }

    /// Path through a sequence of vertices that are equal or one unit step
    /// apart; repeated vertices are dropped.
    pub fn through(vertices: &[Vertex]) -> Result<LatticePath> {
        let first = *vertices
            .first()
            .ok_or_else(|| Error::InvalidPath("no vertices".into()))?;
        let mut moves = Vec::new();
        for w in vertices.windows(2) {
            if w[0] == w[1] {
                continue;
            }
            let mv = [Move::Right, Move::Up]
                .into_iter()
                .find(|&m| w[0].step(m) == w[1])
                .ok_or_else(|| Error::InvalidPath(format!("{} to {} is not a unit step", w[0], w[1])))?;
            moves.push(mv);
        }
        Ok(LatticePath::from_parts(first, moves))
    }

    /// Moves as a string such as `RRUU`.
    pub fn word(&self) -> String {
        moves_to_string(&self.moves)
    }

    /// Height of the path after each move count: `y` of the `k`-th vertex.
    fn heights(&self) -> Vec<u32> {
        self.vertices().iter().map(|v| v.y).collect()
    }

    /// Pointwise order for paths with the same endpoints.
    pub fn is_below(&self, other: &LatticePath) -> bool {
        self.start == other.start
            && self.moves.len() == other.moves.len()
            && self.heights().iter().zip(other.heights()).all(|(&a, b)| a <= b)
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.moves.is_empty() {
            write!(f, "{}·", self.start)
        } else {
            write!(f, "{}{}", self.start, self.word())
        }
    }
}

/// Enumerates all allowed monotone paths from `from` to `to`, in
/// lexicographic order of their move strings.
pub fn enumerate_paths(space: &CubicalSpace, from: Vertex, to: Vertex, limit: usize) -> Result<Vec<LatticePath>> {
    if !from.le(to) {
        return Err(Error::EndpointMismatch(format!("{from} is not below {to}")));
    }
    if !space.is_vertex_allowed(from) || !space.is_vertex_allowed(to) {
        return Ok(Vec::new());
    }
    let reach = reachable_to(space, from, to);
    let mut out = Vec::new();
    let mut moves = Vec::new();
    let mut stack: Vec<(Vertex, usize)> = vec![(from, 0)];
    // iterative DFS: each frame remembers which move to try next
    while let Some(&mut (v, ref mut next)) = stack.last_mut() {
        if v == to {
            out.push(LatticePath::from_parts(from, moves.clone()));
            if out.len() > limit {
                return Err(Error::LimitExceeded(limit));
            }
            stack.pop();
            moves.pop();
            continue;
        }
        let candidates = [Move::Right, Move::Up];
        let mut advanced = false;
        while *next < 2 {
            let m = candidates[*next];
            *next += 1;
            let w = v.step(m);
            if w.le(to) && space.edge_allowed(v, m) && reach.contains(&w) {
                moves.push(m);
                stack.push((w, 0));
                advanced = true;
                break;
            }
        }
        if !advanced {
            stack.pop();
            moves.pop();
        }
    }
    Ok(out)
}

/// Vertices in the box `[from, to]` that can reach `to`.
fn reachable_to(space: &CubicalSpace, from: Vertex, to: Vertex) -> HashSet<Vertex> {
    let mut reach = HashSet::new();
    reach.insert(to);
    for y in (from.y..=to.y).rev() {
        for x in (from.x..=to.x).rev() {
            let v = Vertex::new(x, y);
            if v == to || !space.is_vertex_allowed(v) {
                continue;
            }
            let ok = [Move::Right, Move::Up].into_iter().any(|m| {
                let w = v.step(m);
                w.le(to) && space.edge_allowed(v, m) && reach.contains(&w)
            });
            if ok {
                reach.insert(v);
            }
        }
    }
    reach
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum FlipDirection {
    Raise,
    Lower,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flip {
    pub cell: Cell,
    pub direction: FlipDirection,
    pub result: LatticePath,
}

/// Move indices `i` where a raise flip applies (an `RU` corner across an
/// allowed cell), with the cell.
fn raise_sites(space: &CubicalSpace, path: &LatticePath) -> Vec<(usize, Cell)> {
    let vs = path.vertices();
    path.moves
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] == Move::Right && w[1] == Move::Up)
        .map(|(i, _)| (i, Cell::new(vs[i].x, vs[i].y)))
        .filter(|&(_, c)| !space.is_forbidden(c))
        .collect()
}

fn lower_sites(space: &CubicalSpace, path: &LatticePath) -> Vec<(usize, Cell)> {
    let vs = path.vertices();
    path.moves
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] == Move::Up && w[1] == Move::Right)
        .map(|(i, _)| (i, Cell::new(vs[i].x, vs[i].y)))
        .filter(|&(_, c)| !space.is_forbidden(c))
        .collect()
}

fn swapped(path: &LatticePath, i: usize) -> LatticePath {
    let mut moves = path.moves.clone();
    moves.swap(i, i + 1);
    LatticePath::from_parts(path.start, moves)
}

/// Paths reachable by one raise flip.
pub fn raise_flips(space: &CubicalSpace, path: &LatticePath) -> Vec<LatticePath> {
    raise_sites(space, path)
        .into_iter()
        .map(|(i, _)| swapped(path, i))
        .collect()
}

/// All single flips, raises first, each group in move-index order.
pub fn elementary_flips(space: &CubicalSpace, path: &LatticePath) -> Vec<Flip> {
    let raise = raise_sites(space, path).into_iter().map(|(i, cell)| Flip {
        cell,
        direction: FlipDirection::Raise,
        result: swapped(path, i),
    });
    let lower = lower_sites(space, path).into_iter().map(|(i, cell)| Flip {
        cell,
        direction: FlipDirection::Lower,
        result: swapped(path, i),
    });
    raise.chain(lower).collect()
}

fn require_same_endpoints(a: &LatticePath, b: &LatticePath) -> Result<()> {
    if a.start() != b.start() || a.end() != b.end() {
        return Err(Error::EndpointMismatch(format!(
            "{a} runs {}→{}, {b} runs {}→{}",
            a.start(),
            a.end(),
            b.start(),
            b.end()
        )));
    }
    Ok(())
}

/// Shortest chain of raise flips from `from` to `to`, both included.
fn raise_chain(space: &CubicalSpace, from: &LatticePath, to: &LatticePath) -> Option<Vec<LatticePath>> {
    if !from.is_below(to) {
        return None;
    }
    let mut parent: HashMap<LatticePath, Option<LatticePath>> = HashMap::new();
    parent.insert(from.clone(), None);
    let mut queue = VecDeque::from([from.clone()]);
    while let Some(p) = queue.pop_front() {
        if &p == to {
            let mut chain = vec![p.clone()];
            let mut cur = p;
            while let Some(Some(prev)) = parent.get(&cur) {
                chain.push(prev.clone());
                cur = prev.clone();
            }
            chain.reverse();
            return Some(chain);
        }
        for q in raise_flips(space, &p) {
            // raise flips only go up, so anything not below the goal is a dead end
            if q.is_below(to) && !parent.contains_key(&q) {
                parent.insert(q.clone(), Some(p.clone()));
                queue.push_back(q);
            }
        }
    }
    None
}

/// Whether `to` is reachable from `from` by raise flips alone.
pub fn pre_dihomotopic(space: &CubicalSpace, from: &LatticePath, to: &LatticePath) -> Result<bool> {
    require_same_endpoints(from, to)?;
    Ok(raise_chain(space, from, to).is_some())
}

/// A directed homotopy sampled at discrete times.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscreteDihomotopy {
    slices: Vec<LatticePath>,
}

/// How one slice of a [`DiscreteDihomotopy`] becomes the next.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum SliceStep {
    Stay,
    RaiseFlip(Cell),
    AdvanceStart,
    ExtendEnd(Move),
}

impl DiscreteDihomotopy {
    pub fn new(space: &CubicalSpace, slices: Vec<LatticePath>) -> Result<Self> {
        if slices.is_empty() {
            return Err(Error::InvalidPath("a dihomotopy needs at least one slice".into()));
        }
        for s in &slices {
            s.check(space)?;
        }
        for w in slices.windows(2) {
            if slice_step(space, &w[0], &w[1]).is_none() {
                return Err(Error::InvalidPath(format!(
                    "{} to {} is not a single raising move",
                    w[0], w[1]
                )));
            }
        }
        Ok(DiscreteDihomotopy { slices })
    }

    pub fn slices(&self) -> &[LatticePath] {
        &self.slices
    }

    pub fn first(&self) -> &LatticePath {
        &self.slices[0]
    }

    pub fn last(&self) -> &LatticePath {
        self.slices.last().unwrap()
    }

    /// Trajectory of the start point.
    pub fn start_trace(&self) -> LatticePath {
        let vs: Vec<Vertex> = self.slices.iter().map(|s| s.start()).collect();
        LatticePath::through(&vs).expect("start points advance by unit steps")
    }

    /// Trajectory of the end point.
    pub fn end_trace(&self) -> LatticePath {
        let vs: Vec<Vertex> = self.slices.iter().map(|s| s.end()).collect();
        LatticePath::through(&vs).expect("end points advance by unit steps")
    }
}

/// Classifies the move from one slice to the next, if it is allowed.
pub fn slice_step(space: &CubicalSpace, a: &LatticePath, b: &LatticePath) -> Option<SliceStep> {
    if a == b {
        return Some(SliceStep::Stay);
    }
    if a.start() == b.start() && a.len() == b.len() {
        return raise_sites(space, a)
            .into_iter()
            .find(|&(i, _)| &swapped(a, i) == b)
            .map(|(_, c)| SliceStep::RaiseFlip(c));
    }
    if let Some(&first) = a.moves.first() {
        if b.start() == a.start().step(first) && b.moves == a.moves[1..] {
            return Some(SliceStep::AdvanceStart);
        }
    }
    if b.start() == a.start()
        && b.len() == a.len() + 1
        && b.moves[..a.len()] == a.moves[..]
        && space.edge_allowed(a.end(), b.moves[a.len()])
    {
        return Some(SliceStep::ExtendEnd(b.moves[a.len()]));
    }
    None
}

/// A chain of single raise flips from `from` to `to`.
pub fn realize_interpolation(space: &CubicalSpace, from: &LatticePath, to: &LatticePath) -> Result<DiscreteDihomotopy> {
    require_same_endpoints(from, to)?;
    let slices = raise_chain(space, from, to).ok_or_else(|| Error::NotPreDihomotopic {
        from: from.to_string(),
        to: to.to_string(),
    })?;
    Ok(DiscreteDihomotopy { slices })
}

/// Partition of a path set into zigzag classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DihomotopyClassSet {
    pub paths: Vec<LatticePath>,
    /// Class index of each path.
    pub class_of: Vec<usize>,
    /// Members of each class, sorted; classes ordered by representative.
    pub classes: Vec<Vec<usize>>,
}

impl DihomotopyClassSet {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn representatives(&self) -> Vec<&LatticePath> {
        self.classes.iter().map(|c| &self.paths[c[0]]).collect()
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }
}

/// Connected components of the flip graph on all paths `from → to`.
pub fn dihomotopy_classes(space: &CubicalSpace, from: Vertex, to: Vertex, limit: usize) -> Result<DihomotopyClassSet> {
    let paths = enumerate_paths(space, from, to, limit)?;
    Ok(classify(space, paths))
}

pub fn classify(space: &CubicalSpace, paths: Vec<LatticePath>) -> DihomotopyClassSet {
    let index: HashMap<&[Move], usize> = paths.iter().enumerate().map(|(i, p)| (p.moves(), i)).collect();
    let mut class_of = vec![usize::MAX; paths.len()];
    let mut classes = Vec::new();
    // paths are in lexicographic order, so each new class starts at its minimum
    for seed in 0..paths.len() {
        if class_of[seed] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let mut members = vec![seed];
        class_of[seed] = id;
        let mut queue = VecDeque::from([seed]);
        while let Some(i) = queue.pop_front() {
            for flip in elementary_flips(space, &paths[i]) {
                if let Some(&j) = index.get(flip.result.moves()) {
                    if class_of[j] == usize::MAX {
                        class_of[j] = id;
                        members.push(j);
                        queue.push_back(j);
                    }
                }
            }
        }
        members.sort_unstable();
        classes.push(members);
    }
    DihomotopyClassSet {
        paths,
        class_of,
        classes,
    }
}

/// Axis-aligned rectangle of vertices `[x0, x1] × [y0, y1]`; may be
/// degenerate (a segment or a point).
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Rect {
    pub x0: u32,
    pub y0: u32,
    pub x1: u32,
    pub y1: u32,
}

impl Rect {
    pub const fn new(x0: u32, y0: u32, x1: u32, y1: u32) -> Self {
        Rect { x0, y0, x1, y1 }
    }

    pub fn to_array(self) -> [u32; 4] {
        [self.x0, self.y0, self.x1, self.y1]
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        self.x0 <= v.x && v.x <= self.x1 && self.y0 <= v.y && v.y <= self.y1
    }

    pub fn contains_cell(&self, c: Cell) -> bool {
        self.x0 <= c.x && c.x < self.x1 && self.y0 <= c.y && c.y < self.y1
    }
}

impl From<[u32; 4]> for Rect {
    fn from([x0, y0, x1, y1]: [u32; 4]) -> Self {
        Rect::new(x0, y0, x1, y1)
    }
}

/// Two pieces of a grid, each a union of rectangles.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GridCover {
    pub first: Vec<Rect>,
    pub second: Vec<Rect>,
}

impl GridCover {
    pub fn new(first: Vec<Rect>, second: Vec<Rect>) -> Self {
        GridCover { first, second }
    }

    /// Left and right halves sharing the middle column line (odd widths
    /// share the middle cell column).
    pub fn vertical_split(space: &CubicalSpace) -> Self {
        let (w, h) = (space.width(), space.height());
        GridCover::new(vec![Rect::new(0, 0, w.div_ceil(2), h)], vec![Rect::new(w / 2, 0, w, h)])
    }

    pub fn rects(&self, piece: Piece) -> &[Rect] {
        match piece {
            Piece::First => &self.first,
            Piece::Second => &self.second,
        }
    }

    pub fn contains_vertex(&self, piece: Piece, v: Vertex) -> bool {
        self.rects(piece).iter().any(|r| r.contains_vertex(v))
    }

    pub fn contains_edge(&self, piece: Piece, from: Vertex, mv: Move) -> bool {
        let to = from.step(mv);
        self.rects(piece)
            .iter()
            .any(|r| r.contains_vertex(from) && r.contains_vertex(to))
    }

    pub fn contains_cell(&self, piece: Piece, c: Cell) -> bool {
        self.rects(piece).iter().any(|r| r.contains_cell(c))
    }

    /// Whether every vertex and edge of `path` lies in `piece`.
    pub fn contains_path(&self, piece: Piece, path: &LatticePath) -> bool {
        let mut v = path.start();
        if !self.contains_vertex(piece, v) {
            return false;
        }
        for &m in path.moves() {
            if !self.contains_edge(piece, v, m) {
                return false;
            }
            v = v.step(m);
        }
        true
    }

    /// Every cell, allowed vertex and allowed edge lies in some piece.
    pub fn validate(&self, space: &CubicalSpace) -> Result<()> {
        for r in self.first.iter().chain(&self.second) {
            if r.x0 > r.x1 || r.y0 > r.y1 || r.x1 > space.width() || r.y1 > space.height() {
                return Err(Error::InvalidCover(format!(
                    "rectangle {:?} is malformed or outside the grid",
                    r.to_array()
                )));
            }
        }
        let any = |f: &dyn Fn(Piece) -> bool| Piece::BOTH.iter().any(|&p| f(p));
        if let Some(c) = space.cells().find(|&c| !any(&|p| self.contains_cell(p, c))) {
            return Err(Error::InvalidCover(format!("cell {c} is in no piece")));
        }
        if let Some(v) = space.vertices().find(|&v| !any(&|p| self.contains_vertex(p, v))) {
            return Err(Error::InvalidCover(format!("vertex {v} is in no piece")));
        }
        if let Some((v, m)) = space.edges().find(|&(v, m)| !any(&|p| self.contains_edge(p, v, m))) {
            return Err(Error::InvalidCover(format!(
                "edge {}{} from {v} is in no piece",
                m.letter(),
                v.step(m)
            )));
        }
        Ok(())
    }
}
