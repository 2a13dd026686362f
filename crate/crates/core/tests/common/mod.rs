//! Brute-force oracles that share no code with the library.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use petgraph::unionfind::UnionFind;

/// Grid with forbidden unit cells named by their lower-left corner.
pub struct GridOracle {
    pub w: u32,
    pub h: u32,
    pub forbidden: BTreeSet<(u32, u32)>,
}

impl GridOracle {
    pub fn new(w: u32, h: u32, forbidden: &[(u32, u32)]) -> Self {
        GridOracle {
            w,
            h,
            forbidden: forbidden.iter().copied().collect(),
        }
    }

    /// An edge is lost only when both cells beside it are in bounds and forbidden.
    fn edge_open(&self, (x, y): (u32, u32), right: bool) -> bool {
        let beside: Vec<(i64, i64)> = if right {
            vec![(x as i64, y as i64), (x as i64, y as i64 - 1)]
        } else {
            vec![(x as i64, y as i64), (x as i64 - 1, y as i64)]
        };
        let inside: Vec<_> = beside
            .into_iter()
            .filter(|&(cx, cy)| cx >= 0 && cy >= 0 && cx < self.w as i64 && cy < self.h as i64)
            .collect();
        !(inside.len() == 2
            && inside
                .iter()
                .all(|&(cx, cy)| self.forbidden.contains(&(cx as u32, cy as u32))))
    }

    /// Move strings over `R`/`U` from `from` to `to`.
    pub fn paths(&self, from: (u32, u32), to: (u32, u32)) -> Vec<String> {
        let mut out = Vec::new();
        let mut stack = vec![(from, String::new())];
        while let Some((v, s)) = stack.pop() {
            if v == to {
                out.push(s);
                continue;
            }
            if v.0 < to.0 && self.edge_open(v, true) {
                stack.push(((v.0 + 1, v.1), format!("{s}R")));
            }
            if v.1 < to.1 && self.edge_open(v, false) {
                stack.push(((v.0, v.1 + 1), format!("{s}U")));
            }
        }
        out.sort();
        out
    }

    /// Connected components of the graph whose edges swap an `RU` corner
    /// over a non-forbidden cell.
    pub fn class_count(&self, from: (u32, u32), to: (u32, u32)) -> (usize, usize) {
        let paths = self.paths(from, to);
        let index: HashMap<&str, usize> = paths.iter().enumerate().map(|(i, p)| (p.as_str(), i)).collect();
        let mut uf = UnionFind::<usize>::new(paths.len());
        for (i, p) in paths.iter().enumerate() {
            let b = p.as_bytes();
            let (mut x, mut y) = from;
            for k in 0..b.len().saturating_sub(1) {
                if b[k] == b'R' && b[k + 1] == b'U' && !self.forbidden.contains(&(x, y)) {
                    let mut q = b.to_vec();
                    q.swap(k, k + 1);
                    let q = String::from_utf8(q).unwrap();
                    uf.union(i, index[q.as_str()]);
                }
                if b[k] == b'R' {
                    x += 1;
                } else {
                    y += 1;
                }
            }
        }
        let roots: BTreeSet<usize> = (0..paths.len()).map(|i| uf.find(i)).collect();
        (paths.len(), roots.len())
    }
}

/// Walks of length at most `max_len` from `from` to `to` in a digraph.
pub fn walk_count(edges: &[(&str, &str)], from: &str, to: &str, max_len: usize) -> usize {
    let mut layer: HashMap<&str, usize> = HashMap::from([(from, 1)]);
    let mut total = 0;
    for len in 0..=max_len {
        total += layer.get(to).copied().unwrap_or(0);
        if len == max_len {
            break;
        }
        let mut next: HashMap<&str, usize> = HashMap::new();
        for (&at, &n) in &layer {
            for &(a, b) in edges {
                if a == at {
                    *next.entry(b).or_default() += n;
                }
            }
        }
        layer = next;
    }
    total
}

pub const CIRCLE_STEPS: &[(&str, &str)] = &[("E", "N"), ("N", "W"), ("W", "S"), ("S", "E")];
pub const FIVE_POINT_STEPS: &[(&str, &str)] = &[("E", "N"), ("N", "W"), ("W", "S"), ("S", "E"), ("E", "M"), ("M", "W")];
