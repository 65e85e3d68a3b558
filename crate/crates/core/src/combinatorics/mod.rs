//! Collections of 2-minors, their maximal intervals, the interval graph,
//! its cycles and the attached binomials.

mod cycles;
mod intervals;

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

pub use cycles::{cycle_binomial, enumerate_cycles, toric_ideal, toric_kernel_dim, Cycle};
pub use intervals::{interval_decomposition, Interval, IntervalGraph, Orientation};

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::poly::{Cell, Polynomial, Ring};

/// The 2-minor on rows `a1 < a2` and columns `b1 < b2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Minor {
    pub a1: usize,
    pub a2: usize,
    pub b1: usize,
    pub b2: usize,
}

impl Minor {
    pub fn new(a1: usize, a2: usize, b1: usize, b2: usize) -> Result<Self> {
        if a1 == 0 || b1 == 0 || a1 >= a2 || b1 >= b2 {
            return Err(Error::Validation(format!(
                "minor [{a1},{a2}|{b1},{b2}] needs 1 <= a1 < a2 and 1 <= b1 < b2"
            )));
        }
        Ok(Minor { a1, a2, b1, b2 })
    }

    pub fn is_corner_interval(&self) -> bool {
        self.b1 == 1
    }

    pub fn is_corner(&self) -> bool {
        self.b1 == 1 && self.a1 == 1
    }

    pub fn vertices(&self) -> [Cell; 4] {
        [
            Cell::new(self.a1, self.b1),
            Cell::new(self.a1, self.b2),
            Cell::new(self.a2, self.b1),
            Cell::new(self.a2, self.b2),
        ]
    }

    pub fn horizontal_edges(&self) -> [(Cell, Cell); 2] {
        [
            (Cell::new(self.a1, self.b1), Cell::new(self.a1, self.b2)),
            (Cell::new(self.a2, self.b1), Cell::new(self.a2, self.b2)),
        ]
    }

    pub fn vertical_edges(&self) -> [(Cell, Cell); 2] {
        [
            (Cell::new(self.a1, self.b1), Cell::new(self.a2, self.b1)),
            (Cell::new(self.a1, self.b2), Cell::new(self.a2, self.b2)),
        ]
    }

    pub fn edges(&self) -> [(Cell, Cell); 4] {
        let [h1, h2] = self.horizontal_edges();
        let [v1, v2] = self.vertical_edges();
        [h1, h2, v1, v2]
    }

    /// x_{a1 b1} x_{a2 b2} − x_{a1 b2} x_{a2 b1}.
    pub fn binomial(&self, ring: &Ring) -> Polynomial {
        let main = &ring.x(self.a1, self.b1) * &ring.x(self.a2, self.b2);
        let anti = &ring.x(self.a1, self.b2) * &ring.x(self.a2, self.b1);
        &main - &anti
    }

    fn fits(&self, m: usize, n: usize) -> bool {
        self.a2 <= m && self.b2 <= n
    }
}

impl std::fmt::Display for Minor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{},{}|{},{}]", self.a1, self.a2, self.b1, self.b2)
    }
}

#[derive(Debug, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
struct CollectionDoc {
    m: usize,
    n: usize,
    minors: Vec<[usize; 4]>,
    #[serde(default = "default_strict")]
    corner_interval_only: bool,
}

fn default_strict() -> bool {
    true
}

/// A set of 2-minors of an `m x n` matrix of indeterminates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MinorCollection {
    m: usize,
    n: usize,
    minors: Vec<Minor>,
}

impl MinorCollection {
    /// Validates and sorts. In strict mode every minor must have b1 = 1.
    pub fn new(m: usize, n: usize, minors: impl IntoIterator<Item = Minor>, strict: bool) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::Validation("grid dimensions must be positive".into()));
        }
        let mut seen = BTreeSet::new();
        for d in minors {
            if !d.fits(m, n) {
                return Err(Error::Validation(format!("minor {d} outside {m}x{n} grid")));
            }
            if strict && !d.is_corner_interval() {
                return Err(Error::Validation(format!("minor {d} has b1 != 1")));
            }
            if !seen.insert(d) {
                return Err(Error::Validation(format!("duplicate minor {d}")));
            }
        }
        Ok(MinorCollection {
            m,
            n,
            minors: seen.into_iter().collect(),
        })
    }

    pub fn from_quads(m: usize, n: usize, quads: &[[usize; 4]], strict: bool) -> Result<Self> {
        let minors = quads
            .iter()
            .map(|q| Minor::new(q[0], q[1], q[2], q[3]))
            .collect::<Result<Vec<_>>>()?;
        Self::new(m, n, minors, strict)
    }

    /// Parses `{"m":..,"n":..,"minors":[[a1,a2,b1,b2],..]}` with optional
    /// `"cornerIntervalOnly"` (default true).
    pub fn parse_json(text: &str) -> Result<Self> {
        let doc: CollectionDoc = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_quads(doc.m, doc.n, &doc.minors, doc.corner_interval_only)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "m": self.m,
            "n": self.n,
            "minors": self.minors.iter().map(|d| [d.a1, d.a2, d.b1, d.b2]).collect::<Vec<_>>(),
        })
    }

    /// All minors [i,j|1,k] with i < j, k >= 2.
    pub fn all_corner_interval(m: usize, n: usize) -> Self {
        let mut v = Vec::new();
        for i in 1..=m {
            for j in i + 1..=m {
                for k in 2..=n {
                    v.push(Minor { a1: i, a2: j, b1: 1, b2: k });
                }
            }
        }
        Self::new(m, n, v, true).expect("valid by construction")
    }

    /// All minors [1,j|1,k].
    pub fn all_corner(m: usize, n: usize) -> Self {
        let mut v = Vec::new();
        for j in 2..=m {
            for k in 2..=n {
                v.push(Minor { a1: 1, a2: j, b1: 1, b2: k });
            }
        }
        Self::new(m, n, v, true).expect("valid by construction")
    }

    /// A random corner-interval collection with `k` distinct minors (fewer
    /// if the grid has fewer).
    pub fn random_corner_interval<R: Rng>(m: usize, n: usize, k: usize, rng: &mut R) -> Self {
        let mut all = Self::all_corner_interval(m, n).minors;
        all.shuffle(rng);
        all.truncate(k);
        Self::new(m, n, all, true).expect("valid by construction")
    }

    pub fn random_corner<R: Rng>(m: usize, n: usize, k: usize, rng: &mut R) -> Self {
        let mut all = Self::all_corner(m, n).minors;
        all.shuffle(rng);
        all.truncate(k);
        Self::new(m, n, all, true).expect("valid by construction")
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ring(&self) -> Ring {
        Ring::new(self.m, self.n)
    }

    pub fn minors(&self) -> &[Minor] {
        &self.minors
    }

    pub fn len(&self) -> usize {
        self.minors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.minors.is_empty()
    }

    pub fn is_corner_interval(&self) -> bool {
        self.minors.iter().all(Minor::is_corner_interval)
    }

    pub fn is_corner(&self) -> bool {
        self.minors.iter().all(Minor::is_corner)
    }

    /// V(C), sorted row-major.
    pub fn vertices(&self) -> Vec<Cell> {
        let set: BTreeSet<Cell> = self.minors.iter().flat_map(|d| d.vertices()).collect();
        set.into_iter().collect()
    }

    pub fn vertex_vars(&self) -> Vec<usize> {
        let r = self.ring();
        self.vertices().into_iter().map(|c| r.var(c)).collect()
    }

    /// E(C) as (smaller, larger) cell pairs.
    pub fn edges(&self) -> Vec<(Cell, Cell)> {
        let set: BTreeSet<(Cell, Cell)> = self.minors.iter().flat_map(|d| d.edges()).collect();
        set.into_iter().collect()
    }

    /// C \ U: the minors whose vertices avoid `cells`.
    pub fn restrict_away(&self, cells: &[Cell]) -> Self {
        let minors = self
            .minors
            .iter()
            .filter(|d| d.vertices().iter().all(|c| !cells.contains(c)))
            .copied()
            .collect();
        MinorCollection {
            m: self.m,
            n: self.n,
            minors,
        }
    }

    /// Keeps the minors satisfying `keep`.
    pub fn filter(&self, keep: impl Fn(&Minor) -> bool) -> Self {
        MinorCollection {
            m: self.m,
            n: self.n,
            minors: self.minors.iter().filter(|d| keep(d)).copied().collect(),
        }
    }

    /// I(C), one binomial per minor.
    pub fn ideal(&self) -> Ideal {
        let r = self.ring();
        Ideal::new(r, self.minors.iter().map(|d| d.binomial(&r)))
    }
}
