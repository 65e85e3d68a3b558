//! Exact sparse linear algebra over the rationals.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::poly::Coeff;

/// Sparse vector: strictly increasing column indices with nonzero entries.
pub type SparseVec = Vec<(usize, Coeff)>;

pub fn sparse_from_map(map: BTreeMap<usize, Coeff>) -> SparseVec {
    map.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

/// Row space in echelon form, kept fully reduced on demand.
///
/// Every stored row has a distinct pivot (its first column) with pivot
/// entry 1. Rows are not back-reduced against later pivots until
/// [`Echelon::rref`] is called; reduction of external vectors is complete
/// regardless.
#[derive(Debug, Clone, Default)]
pub struct Echelon {
    rows: BTreeMap<usize, SparseVec>,
}

fn axpy(target: &mut BTreeMap<usize, Coeff>, scale: &Coeff, row: &SparseVec) {
    for (c, v) in row {
        let entry = target.entry(*c).or_insert_with(Coeff::zero);
        *entry -= scale * v;
        if entry.is_zero() {
            target.remove(c);
        }
    }
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.rows.contains_key(&col)
    }

    /// Reduces `v` against the stored rows until no entry sits in a pivot column.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut work: BTreeMap<usize, Coeff> = v.iter().cloned().collect();
        let mut cursor = 0usize;
        loop {
            let next = work
                .range(cursor..)
                .find(|(c, _)| self.rows.contains_key(c))
                .map(|(c, v)| (*c, v.clone()));
            match next {
                None => break,
                Some((c, a)) => {
                    axpy(&mut work, &a, &self.rows[&c]);
                    cursor = c + 1;
                }
            }
        }
        work.into_iter().collect()
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let r = self.reduce(v);
        match r.first() {
            None => false,
            Some((p, a)) => {
                let p = *p;
                let inv = a.recip();
                let row: SparseVec = r.iter().map(|(c, x)| (*c, x * &inv)).collect();
                self.rows.insert(p, row);
                true
            }
        }
    }

    /// Fully reduced rows, sorted by pivot.
    pub fn rref(&self) -> Vec<SparseVec> {
        let mut done: BTreeMap<usize, SparseVec> = BTreeMap::new();
        // back-substitute from the last pivot upwards
        for (p, row) in self.rows.iter().rev() {
            let mut work: BTreeMap<usize, Coeff> = row.iter().cloned().collect();
            let cols: Vec<usize> = work.keys().copied().filter(|c| c != p).collect();
            for c in cols {
                if let Some(r) = done.get(&c) {
                    if let Some(a) = work.get(&c).cloned() {
                        axpy(&mut work, &a, r);
                    }
                }
            }
            done.insert(*p, work.into_iter().collect());
        }
        done.into_values().collect()
    }

    pub fn rows(&self) -> impl Iterator<Item = &SparseVec> {
        self.rows.values()
    }
}

pub fn rank_of(rows: &[SparseVec]) -> usize {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

/// Basis of the null space `{x : A x = 0}` for `A` given by rows over `ncols` columns.
pub fn nullspace(rows: &[SparseVec], ncols: usize) -> Vec<SparseVec> {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    let rref = e.rref();
    let pivots: Vec<usize> = rref.iter().map(|r| r[0].0).collect();
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| pivots.binary_search(c).is_err()) {
        let mut v: BTreeMap<usize, Coeff> = BTreeMap::new();
        v.insert(free, Coeff::one());
        for row in &rref {
            if let Some((_, a)) = row.iter().find(|(c, _)| *c == free) {
                v.insert(row[0].0, -a.clone());
            }
        }
        basis.push(v.into_iter().collect());
    }
    basis
}

/// Basis of `span(a) ∩ span(b)` in a space of dimension `ncols`, computed as
/// the orthogonal complement of `a⊥ + b⊥`.
pub fn intersect_spans(a: &[SparseVec], b: &[SparseVec], ncols: usize) -> Vec<SparseVec> {
    let mut perp = nullspace(a, ncols);
    perp.extend(nullspace(b, ncols));
    nullspace(&perp, ncols)
}

/// True when the two row lists span the same space.
pub fn same_span(a: &[SparseVec], b: &[SparseVec]) -> bool {
    let mut ea = Echelon::new();
    let mut eb = Echelon::new();
    for r in a {
        ea.insert(r);
    }
    for r in b {
        eb.insert(r);
    }
    ea.rref() == eb.rref()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::coeff;

    fn v(entries: &[(usize, i64)]) -> SparseVec {
        entries.iter().map(|&(c, x)| (c, coeff(x))).collect()
    }

    #[test]
    fn rank_and_membership() {
        let mut e = Echelon::new();
        assert!(e.insert(&v(&[(0, 1), (1, 2)])));
        assert!(e.insert(&v(&[(1, 1), (2, 1)])));
        assert!(!e.insert(&v(&[(0, 1), (1, 3), (2, 1)])));
        assert_eq!(e.rank(), 2);
        assert!(e.contains(&v(&[(0, 2), (1, 4)])));
        assert!(!e.contains(&v(&[(2, 1)])));
    }

    #[test]
    fn rref_is_reduced() {
        let mut e = Echelon::new();
        e.insert(&v(&[(0, 1), (1, 1)]));
        e.insert(&v(&[(1, 1), (2, 1)]));
        let r = e.rref();
        assert_eq!(r[0], v(&[(0, 1), (2, -1)]));
        assert_eq!(r[1], v(&[(1, 1), (2, 1)]));
    }

    #[test]
    fn nullspace_dimension() {
        let rows = vec![v(&[(0, 1), (1, 1)]), v(&[(1, 1), (2, 1)])];
        let ns = nullspace(&rows, 4);
        assert_eq!(ns.len(), 2);
        for x in &ns {
            for r in &rows {
                let dot: Coeff = r
                    .iter()
                    .filter_map(|(c, a)| x.iter().find(|(d, _)| d == c).map(|(_, b)| a * b))
                    .sum();
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn span_intersection() {
        // span{e0, e1} ∩ span{e1, e2} = span{e1}
        let a = vec![v(&[(0, 1)]), v(&[(1, 1)])];
        let b = vec![v(&[(1, 1)]), v(&[(2, 1)])];
        let i = intersect_spans(&a, &b, 3);
        assert!(same_span(&i, &[v(&[(1, 1)])]));
    }
}
