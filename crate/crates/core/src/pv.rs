//! Two-process programs over capacity-one resources and their grid models.
//!
//! Process B runs along the x axis and process A along the y axis. A process
//! holds a resource on the half-open range of positions `[acquire, release)`,
//! and cell `(x, y)` is forbidden when both processes hold the same resource
//! there.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::cubical::{Cell, CubicalSpace};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Action {
    Acquire(String),
    Release(String),
}

impl fmt::Display for Action {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Action::Acquire(r) => write!(f, "acq({r})"),
            Action::Release(r) => write!(f, "rel({r})"),
        }
    }
}

impl FromStr for Action {
    type Err = Error;

    /// Accepts `acq(r)`, `acquire(r)`, `P(r)` and the matching release forms.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::MalformedProgram(format!("cannot read action `{s}`"));
        let (op, rest) = s.trim().split_once('(').ok_or_else(bad)?;
        let name = rest.strip_suffix(')').ok_or_else(bad)?.trim();
        if name.is_empty() {
            return Err(bad());
        }
        match op.trim() {
            "acq" | "acquire" | "P" => Ok(Action::Acquire(name.to_owned())),
            "rel" | "release" | "V" => Ok(Action::Release(name.to_owned())),
            _ => Err(bad()),
        }
    }
}

impl Serialize for Action {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Action {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PvProgram {
    /// Runs along the y axis.
    pub a: Vec<Action>,
    /// Runs along the x axis.
    pub b: Vec<Action>,
}

/// Positions `[acquire, release)` at which each resource is held.
fn hold_intervals(name: &str, actions: &[Action]) -> Result<BTreeMap<String, Vec<(usize, usize)>>> {
    let mut stack: Vec<(&str, usize)> = Vec::new();
    let mut held: BTreeMap<String, Vec<(usize, usize)>> = BTreeMap::new();
    for (i, act) in actions.iter().enumerate() {
        match act {
            Action::Acquire(r) => {
                if stack.iter().any(|(s, _)| s == r) {
                    return Err(Error::MalformedProgram(format!(
                        "process {name} acquires `{r}` twice at position {i}"
                    )));
                }
                stack.push((r, i));
            }
            Action::Release(r) => match stack.pop() {
                Some((top, start)) if top == r => held.entry(r.clone()).or_default().push((start, i)),
                Some((top, _)) => {
                    return Err(Error::MalformedProgram(format!(
                        "process {name} releases `{r}` at position {i} while `{top}` is innermost"
                    )))
                }
                None => {
                    return Err(Error::MalformedProgram(format!(
                        "process {name} releases `{r}` at position {i} without holding it"
                    )))
                }
            },
        }
    }
    if let Some((r, i)) = stack.first() {
        return Err(Error::MalformedProgram(format!(
            "process {name} never releases `{r}` acquired at position {i}"
        )));
    }
    Ok(held)
}

impl PvProgram {
    pub fn new(a: Vec<Action>, b: Vec<Action>) -> Self {
        PvProgram { a, b }
    }

    /// Parses two whitespace-separated action lists.
    pub fn parse(a: &str, b: &str) -> Result<Self> {
        let read = |s: &str| s.split_whitespace().map(str::parse).collect::<Result<Vec<_>>>();
        Ok(PvProgram::new(read(a)?, read(b)?))
    }

    pub fn forbidden_cells(&self) -> Result<Vec<Cell>> {
        let ha = hold_intervals("A", &self.a)?;
        let hb = hold_intervals("B", &self.b)?;
        let mut cells = Vec::new();
        for (r, ys) in &ha {
            let Some(xs) = hb.get(r) else { continue };
            for &(y0, y1) in ys {
                for &(x0, x1) in xs {
                    for y in y0..y1 {
                        for x in x0..x1 {
                            cells.push(Cell::new(x as u32, y as u32));
                        }
                    }
                }
            }
        }
        cells.sort();
        cells.dedup();
        Ok(cells)
    }
}

/// Grid of width `|B|` and height `|A|` with the mutual-exclusion cells removed.
pub fn build_pv_grid(p: &PvProgram) -> Result<CubicalSpace> {
    if p.a.is_empty() || p.b.is_empty() {
        return Err(Error::MalformedProgram(
            "both processes need at least one action".into(),
        ));
    }
    CubicalSpace::new(p.b.len() as u32, p.a.len() as u32, p.forbidden_cells()?)
}
