//! Contingency tables on V(C), the moves attached to the minors, fiber
//! connectivity by breadth-first search, and the corner-minor certificate.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::combinatorics::{enumerate_cycles, IntervalGraph, MinorCollection};
use crate::config::Caps;
use crate::error::{Error, Result};
use crate::groebner::IdealGb;
use crate::poly::{Cell, Monomial, Polynomial};
use crate::primes::{minimal_primes, PrimeComponent};

/// A table of nonnegative integers on grid cells; zero entries are not stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ContingencyTable {
    values: BTreeMap<Cell, u32>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TableDoc {
    cells: Vec<(usize, usize, i64)>,
}

impl ContingencyTable {
    pub fn new(entries: impl IntoIterator<Item = (Cell, u32)>) -> Self {
        let mut values = BTreeMap::new();
        for (c, v) in entries {
            if v > 0 {
                *values.entry(c).or_insert(0) += v;
            }
        }
        ContingencyTable { values }
    }

    /// Parses `{"cells": [[i, j, value], ...]}`. Repeated cells are an error.
    pub fn parse_json(text: &str) -> Result<Self> {
        let doc: TableDoc = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let mut values = BTreeMap::new();
        for (i, j, v) in doc.cells {
            if i == 0 || j == 0 {
                return Err(Error::Validation(format!("cell ({i},{j}) is not 1-based")));
            }
            let v = u32::try_from(v).map_err(|_| Error::Validation(format!("entry {v} at ({i},{j}) is negative or too large")))?;
            if values.insert(Cell::new(i, j), v).is_some() {
                return Err(Error::Validation(format!("cell ({i},{j}) listed twice")));
            }
        }
        Ok(Self::new(values))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let cells: Vec<(usize, usize, u32)> = self.values.iter().map(|(c, v)| (c.row, c.col, *v)).collect();
        serde_json::json!({ "cells": cells })
    }

    pub fn get(&self, c: Cell) -> u32 {
        self.values.get(&c).copied().unwrap_or(0)
    }

    pub fn support(&self) -> impl Iterator<Item = Cell> + '_ {
        self.values.keys().copied()
    }

    pub fn total(&self) -> u64 {
        self.values.values().map(|&v| v as u64).sum()
    }

    pub fn row_sums(&self) -> BTreeMap<usize, u64> {
        let mut out = BTreeMap::new();
        for (c, v) in &self.values {
            *out.entry(c.row).or_insert(0) += *v as u64;
        }
        out
    }

    pub fn col_sums(&self) -> BTreeMap<usize, u64> {
        let mut out = BTreeMap::new();
        for (c, v) in &self.values {
            *out.entry(c.col).or_insert(0) += *v as u64;
        }
        out
    }

    pub fn same_margins(&self, other: &ContingencyTable) -> bool {
        self.row_sums() == other.row_sums() && self.col_sums() == other.col_sums()
    }

    /// x^U over the variables of the collection's ring.
    pub fn monomial(&self, c: &MinorCollection) -> Monomial {
        let ring = c.ring();
        Monomial::from_pairs(self.values.iter().map(|(&cell, &v)| (ring.var(cell), v as u16)))
    }

    fn check_support(&self, verts: &[Cell]) -> Result<()> {
        match self.support().find(|c| verts.binary_search(c).is_err()) {
            Some(c) => Err(Error::Validation(format!("table entry at {c} outside V(C)"))),
            None => Ok(()),
        }
    }
}

/// One ±1 move per minor, stored on the sorted vertex list of C.
#[derive(Debug, Clone)]
pub struct MoveBasis {
    vertices: Vec<Cell>,
    /// (index of +1 cells, index of −1 cells) per minor.
    moves: Vec<([usize; 2], [usize; 2])>,
}

impl MoveBasis {
    pub fn new(c: &MinorCollection) -> Self {
        let vertices = c.vertices();
        let at = |r: usize, col: usize| vertices.binary_search(&Cell::new(r, col)).expect("minor vertex");
        let moves = c
            .minors()
            .iter()
            .map(|d| ([at(d.a1, d.b1), at(d.a2, d.b2)], [at(d.a1, d.b2), at(d.a2, d.b1)]))
            .collect();
        MoveBasis { vertices, moves }
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    pub fn vertices(&self) -> &[Cell] {
        &self.vertices
    }

    /// The k-th move as a table of signed entries.
    pub fn vector(&self, k: usize) -> BTreeMap<Cell, i32> {
        let (plus, minus) = self.moves[k];
        let mut out = BTreeMap::new();
        for i in plus {
            out.insert(self.vertices[i], 1);
        }
        for i in minus {
            out.insert(self.vertices[i], -1);
        }
        out
    }

    fn encode(&self, t: &ContingencyTable) -> Vec<u32> {
        self.vertices.iter().map(|&c| t.get(c)).collect()
    }

    /// Applies move `k` with the given sign, or None if an entry would go negative.
    fn apply(&self, t: &[u32], k: usize, sign: i8) -> Option<Vec<u32>> {
        let (plus, minus) = self.moves[k];
        let (up, down) = if sign > 0 { (plus, minus) } else { (minus, plus) };
        if down.iter().any(|&i| t[i] == 0) {
            return None;
        }
        let mut out = t.to_vec();
        for i in down {
            out[i] -= 1;
        }
        for i in up {
            out[i] += 1;
        }
        Some(out)
    }

    /// Applies a signed 1-based move sequence; None if a step leaves the fiber.
    pub fn replay(&self, t: &ContingencyTable, witness: &[i64]) -> Option<ContingencyTable> {
        let mut cur = self.encode(t);
        for &s in witness {
            let k = s.unsigned_abs() as usize;
            if k == 0 || k > self.moves.len() {
                return None;
            }
            cur = self.apply(&cur, k - 1, s.signum() as i8)?;
        }
        Some(ContingencyTable::new(self.vertices.iter().copied().zip(cur)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum Connectivity {
    Connected,
    Disconnected,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct FiberResult {
    pub verdict: Connectivity,
    /// Shortest path from u to v as 1-based minor indices, negative for the
    /// reversed move.
    pub witness: Option<Vec<i64>>,
    pub explored: usize,
    pub reason: Option<String>,
}

/// Breadth-first search from `u` over nonnegative tables under ±moves.
pub fn fiber_connected(u: &ContingencyTable, v: &ContingencyTable, b: &MoveBasis, cap: usize) -> Result<FiberResult> {
    u.check_support(&b.vertices)?;
    v.check_support(&b.vertices)?;
    if !u.same_margins(v) {
        return Ok(FiberResult {
            verdict: Connectivity::Disconnected,
            witness: None,
            explored: 0,
            reason: Some("row or column sums differ".into()),
        });
    }
    let start = b.encode(u);
    let goal = b.encode(v);
    // parent links: state index -> (parent index, signed move)
    let mut index: HashMap<Vec<u32>, usize> = HashMap::new();
    let mut states: Vec<Vec<u32>> = vec![start.clone()];
    let mut parent: Vec<(usize, i64)> = vec![(usize::MAX, 0)];
    index.insert(start, 0);
    let mut queue = VecDeque::from([0usize]);
    let path = |mut at: usize, parent: &[(usize, i64)]| {
        let mut w = Vec::new();
        while parent[at].0 != usize::MAX {
            w.push(parent[at].1);
            at = parent[at].0;
        }
        w.reverse();
        w
    };
    if states[0] == goal {
        return Ok(FiberResult {
            verdict: Connectivity::Connected,
            witness: Some(Vec::new()),
            explored: 1,
            reason: None,
        });
    }
    while let Some(at) = queue.pop_front() {
        for k in 0..b.moves.len() {
            for sign in [1i8, -1] {
                let Some(next) = b.apply(&states[at], k, sign) else {
                    continue;
                };
                if index.contains_key(&next) {
                    continue;
                }
                if states.len() >= cap {
                    return Ok(FiberResult {
                        verdict: Connectivity::Unknown,
                        witness: None,
                        explored: states.len(),
                        reason: Some(format!("state cap {cap} reached")),
                    });
                }
                let id = states.len();
                index.insert(next.clone(), id);
                parent.push((at, sign as i64 * (k as i64 + 1)));
                let done = next == goal;
                states.push(next);
                if done {
                    return Ok(FiberResult {
                        verdict: Connectivity::Connected,
                        witness: Some(path(id, &parent)),
                        explored: states.len(),
                        reason: None,
                    });
                }
                queue.push_back(id);
            }
        }
    }
    Ok(FiberResult {
        verdict: Connectivity::Disconnected,
        witness: None,
        explored: states.len(),
        reason: Some("component exhausted".into()),
    })
}

/// Every table reachable from `u`, up to `cap` states.
pub fn fiber_component(u: &ContingencyTable, b: &MoveBasis, cap: usize) -> Result<Vec<ContingencyTable>> {
    u.check_support(&b.vertices)?;
    let start = b.encode(u);
    let mut seen: BTreeSet<Vec<u32>> = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(t) = queue.pop_front() {
        for k in 0..b.moves.len() {
            for sign in [1i8, -1] {
                if let Some(next) = b.apply(&t, k, sign) {
                    if !seen.contains(&next) {
                        if seen.len() >= cap {
                            return Err(Error::resource("fiber states", cap));
                        }
                        seen.insert(next.clone());
                        queue.push_back(next);
                    }
                }
            }
        }
    }
    Ok(seen
        .into_iter()
        .map(|t| ContingencyTable::new(b.vertices.iter().copied().zip(t)))
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum Certification {
    Certified,
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CertifyReport {
    pub verdict: Certification,
    /// Both tables put weight at least 2 on every nonempty minimal-prime set.
    pub weights_ok: bool,
    /// x^U − x^V lies in J_C.
    pub in_toric: bool,
    pub same_margins: bool,
    /// The union of both supports is exactly the cell set of one cycle of G(C).
    pub support_on_cycle: bool,
}

/// Sufficient condition for connectivity on corner collections: weight at
/// least 2 on every W of a nonempty minimal prime, and x^U − x^V ∈ J_C.
pub fn certify_connected(u: &ContingencyTable, v: &ContingencyTable, c: &MinorCollection, caps: &Caps) -> Result<CertifyReport> {
    let primes = minimal_primes(c, caps)?;
    certify_connected_with(u, v, c, &primes, caps)
}

/// As [`certify_connected`] with the minimal primes supplied, the first
/// being P_∅.
pub fn certify_connected_with(
    u: &ContingencyTable,
    v: &ContingencyTable,
    c: &MinorCollection,
    primes: &[PrimeComponent],
    caps: &Caps,
) -> Result<CertifyReport> {
    if let Some(d) = c.minors().iter().find(|d| !d.is_corner()) {
        return Err(Error::NotCornerCollection(format!("minor {d} does not start at row 1, column 1")));
    }
    let verts = c.vertices();
    u.check_support(&verts)?;
    v.check_support(&verts)?;
    let weight = |t: &ContingencyTable, p: &PrimeComponent| p.w.cells().iter().map(|&x| t.get(x) as u64).sum::<u64>();
    let weights_ok = primes
        .iter()
        .filter(|p| !p.w.is_empty())
        .all(|p| weight(u, p) >= 2 && weight(v, p) >= 2);
    let f = Polynomial::binomial(u.monomial(c), v.monomial(c));
    let in_toric = f.is_zero() || {
        let p0 = primes.iter().find(|p| p.w.is_empty()).expect("P_∅ is always minimal");
        IdealGb::new(p0.toric.clone(), caps)?.contains(&f)
    };
    let support_on_cycle = support_on_cycle(u, v, c, caps)?;
    let verdict = if weights_ok && in_toric {
        Certification::Certified
    } else {
        Certification::NotApplicable
    };
    Ok(CertifyReport {
        verdict,
        weights_ok,
        in_toric,
        same_margins: u.same_margins(v),
        support_on_cycle,
    })
}

fn support_on_cycle(u: &ContingencyTable, v: &ContingencyTable, c: &MinorCollection, caps: &Caps) -> Result<bool> {
    let cells: BTreeSet<Cell> = u.support().chain(v.support()).collect();
    if cells.is_empty() {
        return Ok(false);
    }
    let g = IntervalGraph::new(c);
    let longest = 2 * g.h.len().min(g.v.len());
    if longest < 4 {
        return Ok(false);
    }
    let cycles = enumerate_cycles(&g, longest, false, caps)?;
    Ok(cycles.iter().any(|s| s.cells(&g).into_iter().collect::<BTreeSet<_>>() == cells))
}
