use std::collections::BTreeMap;

use crate::poly::Cell;

use super::MinorCollection;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    Vertical,
    Horizontal,
}

/// A maximal set of cells in one column (vertical) or one row (horizontal)
/// joined by edges of the collection in that direction.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interval {
    pub orientation: Orientation,
    pub cells: Vec<Cell>,
}

impl Interval {
    pub fn contains(&self, c: Cell) -> bool {
        self.cells.binary_search(&c).is_ok()
    }

    /// Row (horizontal) or column (vertical) the interval lives in.
    pub fn line(&self) -> usize {
        match self.orientation {
            Orientation::Vertical => self.cells[0].col,
            Orientation::Horizontal => self.cells[0].row,
        }
    }
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

fn components(cells: &[Cell], edges: impl Iterator<Item = (Cell, Cell)>, orientation: Orientation) -> Vec<Interval> {
    let index: BTreeMap<Cell, usize> = cells.iter().enumerate().map(|(i, c)| (*c, i)).collect();
    let mut parent: Vec<usize> = (0..cells.len()).collect();
    for (a, b) in edges {
        let (ra, rb) = (find(&mut parent, index[&a]), find(&mut parent, index[&b]));
        if ra != rb {
            parent[ra.max(rb)] = ra.min(rb);
        }
    }
    let mut groups: BTreeMap<usize, Vec<Cell>> = BTreeMap::new();
    for (i, c) in cells.iter().enumerate() {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(*c);
    }
    let mut out: Vec<Interval> = groups
        .into_values()
        .map(|mut cells| {
            cells.sort();
            Interval { orientation, cells }
        })
        .collect();
    // vertical: by column then top row; horizontal: by row then left column
    out.sort_by_key(|iv| {
        let c = iv.cells[0];
        match orientation {
            Orientation::Vertical => (c.col, c.row),
            Orientation::Horizontal => (c.row, c.col),
        }
    });
    out
}

/// All maximal vertical and horizontal intervals of the collection.
pub fn interval_decomposition(c: &MinorCollection) -> (Vec<Interval>, Vec<Interval>) {
    let cells = c.vertices();
    let vertical = components(
        &cells,
        c.minors().iter().flat_map(|d| d.vertical_edges()),
        Orientation::Vertical,
    );
    let horizontal = components(
        &cells,
        c.minors().iter().flat_map(|d| d.horizontal_edges()),
        Orientation::Horizontal,
    );
    (vertical, horizontal)
}

/// Bipartite graph on maximal horizontal and vertical intervals, with an
/// edge wherever two intervals share a cell of V(C).
#[derive(Debug, Clone)]
pub struct IntervalGraph {
    pub h: Vec<Interval>,
    pub v: Vec<Interval>,
    /// `adj[i][j]` is the shared cell of h_i and v_j.
    adj: Vec<Vec<Option<Cell>>>,
    cell_h: BTreeMap<Cell, usize>,
    cell_v: BTreeMap<Cell, usize>,
}

impl IntervalGraph {
    pub fn new(c: &MinorCollection) -> Self {
        let (v, h) = interval_decomposition(c);
        let mut cell_h = BTreeMap::new();
        let mut cell_v = BTreeMap::new();
        for (i, iv) in h.iter().enumerate() {
            for &cell in &iv.cells {
                cell_h.insert(cell, i);
            }
        }
        for (j, iv) in v.iter().enumerate() {
            for &cell in &iv.cells {
                cell_v.insert(cell, j);
            }
        }
        let mut adj = vec![vec![None; v.len()]; h.len()];
        for (&cell, &i) in &cell_h {
            adj[i][cell_v[&cell]] = Some(cell);
        }
        IntervalGraph {
            h,
            v,
            adj,
            cell_h,
            cell_v,
        }
    }

    pub fn edge(&self, i: usize, j: usize) -> Option<Cell> {
        self.adj[i][j]
    }

    pub fn edges(&self) -> Vec<(usize, usize, Cell)> {
        let mut out = Vec::new();
        for (i, row) in self.adj.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if let Some(c) = c {
                    out.push((i, j, *c));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.cell_h.len()
    }

    pub fn h_of(&self, c: Cell) -> Option<usize> {
        self.cell_h.get(&c).copied()
    }

    pub fn v_of(&self, c: Cell) -> Option<usize> {
        self.cell_v.get(&c).copied()
    }

    pub fn h_neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[i].iter().enumerate().filter(|(_, c)| c.is_some()).map(|(j, _)| j)
    }

    pub fn v_neighbors(&self, j: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj.iter().enumerate().filter(move |(_, row)| row[j].is_some()).map(|(i, _)| i)
    }

    /// Index of the vertical interval through column-1 cell (row, 1), if any.
    pub fn v_first_column(&self) -> Vec<usize> {
        (0..self.v.len()).filter(|&j| self.v[j].line() == 1).collect()
    }

    /// The vertical interval containing x11 (v1 of a corner collection).
    pub fn v1(&self) -> Option<usize> {
        self.v_of(Cell::new(1, 1))
    }

    /// The horizontal interval containing x11 (h1 of a corner collection).
    pub fn h1(&self) -> Option<usize> {
        self.h_of(Cell::new(1, 1))
    }

    /// True when the graph minus the listed nodes has no cycle.
    pub fn is_forest_without(&self, drop_h: &[usize], drop_v: &[usize]) -> bool {
        let hn = self.h.len();
        let mut parent: Vec<usize> = (0..hn + self.v.len()).collect();
        for (i, j, _) in self.edges() {
            if drop_h.contains(&i) || drop_v.contains(&j) {
                continue;
            }
            let (a, b) = (find(&mut parent, i), find(&mut parent, hn + j));
            if a == b {
                return false;
            }
            parent[a] = b;
        }
        true
    }
}
