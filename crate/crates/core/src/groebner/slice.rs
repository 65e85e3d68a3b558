use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::config::Caps;
use crate::error::{Error, Result};
use crate::grading::{Grading, Key};
use crate::linalg::{Echelon, SparseVec};
use crate::poly::{Monomial, Polynomial, TermOrder};

use super::ideal::Ideal;

/// One graded piece `I_k` of a homogeneous ideal for a multidegree `k`,
/// as a row space over the monomials of degree `k`.
///
/// Columns are sorted descending in the ring's graded revlex order, so the
/// pivot columns are exactly the initial monomials of `I_k` for that order.
#[derive(Debug, Clone)]
pub struct SliceBlock {
    pub key: Key,
    monomials: Vec<Monomial>,
    order: TermOrder,
    echelon: Echelon,
}

impl SliceBlock {
    pub fn new(ideal: &Ideal, grading: Grading, key: &[u32], caps: &Caps) -> Result<Self> {
        let order = ideal.ring().grevlex();
        let mut monomials = grading.monomials_with_key(ideal.vars(), key, caps.memory_cap)?;
        monomials.sort_by(|a, b| order.cmp(b, a));
        let mut block = SliceBlock {
            key: key.to_vec(),
            monomials,
            order,
            echelon: Echelon::new(),
        };
        if block.monomials.is_empty() {
            return Ok(block);
        }
        let mut rows = 0usize;
        for g in ideal.gens() {
            let gk = grading
                .poly_key(g)
                .ok_or_else(|| Error::NotHomogeneous(format!("generator {g:?} for {grading:?}")))?;
            let Some(rest) = grading.sub_key(key, &gk) else {
                continue;
            };
            for u in grading.monomials_with_key(ideal.vars(), &rest, caps.memory_cap)? {
                rows += 1;
                if rows > caps.memory_cap {
                    return Err(Error::memory("rows of a graded piece", caps.memory_cap));
                }
                let v = block.vector(&g.mul_monomial(&u)).expect("product lies in the block");
                block.echelon.insert(&v);
                if block.echelon.rank() == block.monomials.len() {
                    return Ok(block);
                }
            }
        }
        Ok(block)
    }

    pub fn index(&self, m: &Monomial) -> Option<usize> {
        self.monomials
            .binary_search_by(|x| match self.order.cmp(x, m) {
                Ordering::Less => Ordering::Greater,
                Ordering::Greater => Ordering::Less,
                Ordering::Equal => Ordering::Equal,
            })
            .ok()
    }

    /// Coordinates of `p`, or `None` if some term lies outside the block.
    pub fn vector(&self, p: &Polynomial) -> Option<SparseVec> {
        let mut entries: Vec<(usize, _)> = Vec::with_capacity(p.len());
        for (m, c) in p.terms() {
            entries.push((self.index(m)?, c.clone()));
        }
        entries.sort_by_key(|(i, _)| *i);
        Some(entries)
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn dim(&self) -> usize {
        self.echelon.rank()
    }

    pub fn quotient_dim(&self) -> usize {
        self.monomials.len() - self.echelon.rank()
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        match self.vector(p) {
            Some(v) => self.echelon.contains(&v),
            None => false,
        }
    }

    /// Initial monomials of this piece (pivot columns).
    pub fn initial_monomials(&self) -> Vec<Monomial> {
        self.echelon.pivots().map(|c| self.monomials[c].clone()).collect()
    }

    /// Monomials outside the initial ideal; a basis of the quotient piece.
    pub fn standard_monomials(&self) -> Vec<usize> {
        (0..self.monomials.len()).filter(|&c| !self.echelon.is_pivot(c)).collect()
    }

    /// Normal form of a monomial of this block, expressed on standard columns.
    pub fn reduce_monomial(&self, m: &Monomial) -> SparseVec {
        let c = self.index(m).expect("monomial belongs to the block");
        self.echelon.reduce(&vec![(c, crate::poly::coeff(1))])
    }

    pub fn rows(&self) -> Vec<SparseVec> {
        self.echelon.rows().cloned().collect()
    }
}

/// The degree-`d` piece of a homogeneous ideal, split into blocks by a
/// finer grading for which the generators are homogeneous.
#[derive(Debug, Clone)]
pub struct GradedSlice {
    pub degree: u32,
    pub blocks: BTreeMap<Key, SliceBlock>,
}

impl GradedSlice {
    pub fn dim(&self) -> usize {
        self.blocks.values().map(|b| b.dim()).sum()
    }

    pub fn monomial_count(&self) -> usize {
        self.blocks.values().map(|b| b.monomials().len()).sum()
    }

    pub fn quotient_dim(&self) -> usize {
        self.monomial_count() - self.dim()
    }

    /// Membership of a form of this degree; forms of other degrees are rejected.
    pub fn contains(&self, p: &Polynomial, grading: Grading) -> bool {
        if p.is_zero() {
            return true;
        }
        // split p into its graded components
        let mut parts: BTreeMap<Key, Vec<_>> = BTreeMap::new();
        for (m, c) in p.terms() {
            if m.degree() != self.degree {
                return false;
            }
            parts.entry(grading.key(m)).or_default().push((m.clone(), c.clone()));
        }
        parts.into_iter().all(|(k, terms)| match self.blocks.get(&k) {
            Some(b) => b.contains(&Polynomial::from_terms(terms)),
            None => false,
        })
    }

    pub fn initial_monomials(&self) -> Vec<Monomial> {
        self.blocks.values().flat_map(|b| b.initial_monomials()).collect()
    }
}

/// Exact row space of `{u·g}` in degree `d`. The grading splits the work;
/// `Grading::Standard` gives a single block.
pub fn graded_slice(ideal: &Ideal, d: u32, grading: Grading, caps: &Caps) -> Result<GradedSlice> {
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous("graded slice of an inhomogeneous ideal".into()));
    }
    let all = crate::grading::monomials_of_degree(ideal.vars(), d, caps.memory_cap)?;
    let mut keys: Vec<Key> = all.iter().map(|m| grading.key(m)).collect();
    keys.sort();
    keys.dedup();
    let mut blocks = BTreeMap::new();
    for k in keys {
        let b = SliceBlock::new(ideal, grading, &k, caps)?;
        blocks.insert(k, b);
    }
    Ok(GradedSlice { degree: d, blocks })
}

/// `H(S/I, d)` for `d = 0..=max_deg`, from graded slices.
pub fn hilbert_function_from_slices(ideal: &Ideal, max_deg: u32, grading: Grading, caps: &Caps) -> Result<Vec<u64>> {
    (0..=max_deg)
        .map(|d| graded_slice(ideal, d, grading, caps).map(|s| s.quotient_dim() as u64))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Ring;

    #[test]
    fn zero_and_single_minor() {
        let r = Ring::new(2, 2);
        let caps = Caps::default();
        let z = Ideal::zero(r);
        assert_eq!(graded_slice(&z, 3, Grading::Standard, &caps).unwrap().dim(), 0);
        let f = &(&r.x(1, 1) * &r.x(2, 2)) - &(&r.x(1, 2) * &r.x(2, 1));
        let i = Ideal::new(r, [f.clone()]);
        let s = graded_slice(&i, 2, Grading::Standard, &caps).unwrap();
        assert_eq!(s.dim(), 1);
        assert!(s.contains(&f, Grading::Standard));
        let m = graded_slice(&i, 2, Grading::margin(&r), &caps).unwrap();
        assert_eq!(m.dim(), 1);
        assert_eq!(m.quotient_dim(), 9);
    }
}
