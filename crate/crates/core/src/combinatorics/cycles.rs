use std::collections::BTreeSet;

use crate::config::Caps;
use crate::error::{Error, Result};
use crate::grading::monomials_of_degree;
use crate::groebner::Ideal;
use crate::poly::{Monomial, Polynomial, Ring};

use super::{IntervalGraph, MinorCollection};

/// A cycle h[0], v[0], h[1], v[1], ..., h[r-1], v[r-1] of the interval
/// graph, closing back to h[0]. Stored in canonical form: the least
/// rotation/reflection of the node sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle {
    pub h: Vec<usize>,
    pub v: Vec<usize>,
}

impl Cycle {
    pub fn new(h: Vec<usize>, v: Vec<usize>) -> Self {
        assert_eq!(h.len(), v.len());
        let r = h.len();
        let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
        for s in 0..r {
            let fwd: (Vec<usize>, Vec<usize>) = ((0..r).map(|k| h[(s + k) % r]).collect(), (0..r).map(|k| v[(s + k) % r]).collect());
            // reversed walk from h[s]: h[s], v[s-1], h[s-1], v[s-2], ...
            let rev: (Vec<usize>, Vec<usize>) = (
                (0..r).map(|k| h[(s + r - k) % r]).collect(),
                (0..r).map(|k| v[(s + 2 * r - k - 1) % r]).collect(),
            );
            for cand in [fwd, rev] {
                let key = interleave(&cand.0, &cand.1);
                if best.as_ref().map_or(true, |b| key < interleave(&b.0, &b.1)) {
                    best = Some(cand);
                }
            }
        }
        let (h, v) = best.expect("nonempty cycle");
        Cycle { h, v }
    }

    pub fn len(&self) -> usize {
        2 * self.h.len()
    }

    pub fn is_empty(&self) -> bool {
        self.h.is_empty()
    }

    pub fn meets_h(&self, i: usize) -> bool {
        self.h.contains(&i)
    }

    pub fn meets_v(&self, j: usize) -> bool {
        self.v.contains(&j)
    }

    /// True when some graph edge joins two non-consecutive nodes of the cycle.
    pub fn has_chord(&self, g: &IntervalGraph) -> bool {
        let r = self.h.len();
        for (a, &hi) in self.h.iter().enumerate() {
            for (b, &vj) in self.v.iter().enumerate() {
                // h[a] is adjacent on the cycle to v[a] and v[a-1]
                let consecutive = b == a || (b + 1) % r == a;
                if !consecutive && g.edge(hi, vj).is_some() {
                    return true;
                }
            }
        }
        false
    }

    /// Cells of V(C) visited by the cycle (labels of its edges).
    pub fn cells(&self, g: &IntervalGraph) -> Vec<crate::poly::Cell> {
        let r = self.h.len();
        let mut out = Vec::with_capacity(2 * r);
        for k in 0..r {
            out.push(g.edge(self.h[k], self.v[k]).expect("cycle edge"));
            out.push(g.edge(self.h[(k + 1) % r], self.v[k]).expect("cycle edge"));
        }
        out
    }
}

fn interleave(h: &[usize], v: &[usize]) -> Vec<usize> {
    h.iter().zip(v).flat_map(|(&a, &b)| [a, b]).collect()
}

/// Cycles of `g` with at most `max_len` nodes (`max_len` even, at least 4),
/// each reported once. With `chordless_only`, cycles with a chord are
/// pruned during the search.
pub fn enumerate_cycles(g: &IntervalGraph, max_len: usize, chordless_only: bool, caps: &Caps) -> Result<Vec<Cycle>> {
    if max_len < 4 || max_len % 2 == 1 {
        return Err(Error::Precondition(format!("cycle length bound {max_len} must be even and at least 4")));
    }
    let max_r = max_len / 2;
    let mut found: BTreeSet<Cycle> = BTreeSet::new();

    struct Search<'a> {
        g: &'a IntervalGraph,
        max_r: usize,
        chordless: bool,
        cap: usize,
        start: usize,
        hs: Vec<usize>,
        vs: Vec<usize>,
        used_h: Vec<bool>,
        used_v: Vec<bool>,
    }

    impl Search<'_> {
        // chordless check for a new node: it may only touch the previous node
        // (and the start when it closes the cycle)
        fn v_ok(&self, j: usize) -> bool {
            !self.chordless
                || self.hs[..self.hs.len() - 1]
                    .iter()
                    .enumerate()
                    .all(|(k, &hi)| self.g.edge(hi, j).is_none() || (k == 0 && self.hs.len() > 1))
        }

        fn h_ok(&self, i: usize) -> bool {
            !self.chordless || self.vs[..self.vs.len() - 1].iter().all(|&vj| self.g.edge(i, vj).is_none())
        }

        // path ends at h-node hs.last(); extend with a v-node
        fn extend(&mut self, out: &mut BTreeSet<Cycle>) -> Result<()> {
            let last = *self.hs.last().unwrap();
            let nbrs: Vec<usize> = self.g.h_neighbors(last).collect();
            for j in nbrs {
                if self.used_v[j] || !self.v_ok(j) {
                    continue;
                }
                let closes = self.hs.len() >= 2 && self.g.edge(self.start, j).is_some();
                self.vs.push(j);
                self.used_v[j] = true;
                if closes {
                    let c = Cycle::new(self.hs.clone(), self.vs.clone());
                    out.insert(c);
                    if out.len() > self.cap {
                        return Err(Error::resource("cycle enumeration", self.cap));
                    }
                }
                // a chordless path touching the start must close here
                if !(self.chordless && closes) && self.hs.len() < self.max_r {
                    let hn: Vec<usize> = self.g.v_neighbors(j).collect();
                    for i in hn {
                        if i <= self.start || self.used_h[i] || !self.h_ok(i) {
                            continue;
                        }
                        self.hs.push(i);
                        self.used_h[i] = true;
                        self.extend(out)?;
                        self.used_h[i] = false;
                        self.hs.pop();
                    }
                }
                self.used_v[j] = false;
                self.vs.pop();
            }
            Ok(())
        }
    }

    for start in 0..g.h.len() {
        let mut s = Search {
            g,
            max_r,
            chordless: chordless_only,
            cap: caps.cycle_cap,
            start,
            hs: vec![start],
            vs: vec![],
            used_h: vec![false; g.h.len()],
            used_v: vec![false; g.v.len()],
        };
        s.used_h[start] = true;
        s.extend(&mut found)?;
    }
    Ok(found.into_iter().collect())
}

/// f_σ = ∏ x(h_k ∩ v_k) − ∏ x(h_{k+1} ∩ v_k).
pub fn cycle_binomial(sigma: &Cycle, g: &IntervalGraph, ring: &Ring) -> Polynomial {
    let r = sigma.h.len();
    let first = Monomial::product_of((0..r).map(|k| ring.var(g.edge(sigma.h[k], sigma.v[k]).expect("cycle edge"))));
    let second = Monomial::product_of((0..r).map(|k| ring.var(g.edge(sigma.h[(k + 1) % r], sigma.v[k]).expect("cycle edge"))));
    Polynomial::binomial(first, second)
}

/// J_C: the ideal of cycle binomials of all chordless cycles of G(C) with at
/// most `max_len` nodes (default: the longest possible).
pub fn toric_ideal(c: &MinorCollection, max_len: Option<usize>, caps: &Caps) -> Result<Ideal> {
    let g = IntervalGraph::new(c);
    let ring = c.ring();
    let longest = 2 * g.h.len().min(g.v.len());
    if longest < 4 {
        return Ok(Ideal::zero(ring));
    }
    let max_len = max_len.unwrap_or(longest);
    let cycles = enumerate_cycles(&g, max_len, true, caps)?;
    Ok(Ideal::new(ring, cycles.iter().map(|s| cycle_binomial(s, &g, &ring))))
}

/// Dimension in degree `d` of the kernel of x_ab ↦ h(x_ab)·v(x_ab) on the
/// polynomial ring over V(C). The map sends monomials to monomials, so the
/// kernel dimension is the monomial count minus the number of distinct images.
pub fn toric_kernel_dim(c: &MinorCollection, d: u32, caps: &Caps) -> Result<usize> {
    let g = IntervalGraph::new(c);
    let ring = c.ring();
    let vars = c.vertex_vars();
    let hn = g.h.len();
    let monos = monomials_of_degree(&vars, d, caps.memory_cap)?;
    let mut images: BTreeSet<Vec<u32>> = BTreeSet::new();
    for m in &monos {
        let mut img = vec![0u32; hn + g.v.len()];
        for (v, e) in m.support() {
            let cell = ring.cell(v).expect("cell variable");
            img[g.h_of(cell).unwrap()] += e as u32;
            img[hn + g.v_of(cell).unwrap()] += e as u32;
        }
        images.insert(img);
    }
    Ok(monos.len() - images.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::tests::MIXED_4X4;
    use crate::groebner::graded_slice;
    use crate::grading::Grading;

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn square_has_one_cycle() {
        let c = MinorCollection::from_quads(2, 2, &[[1, 2, 1, 2]], true).unwrap();
        let g = IntervalGraph::new(&c);
        let cyc = enumerate_cycles(&g, 4, true, &caps()).unwrap();
        assert_eq!(cyc.len(), 1);
        let f = cycle_binomial(&cyc[0], &g, &c.ring());
        let delta = c.minors()[0].binomial(&c.ring());
        assert!(f == delta || f == -delta);
    }

    #[test]
    fn complete_bipartite_three_three() {
        let c = MinorCollection::all_corner(3, 3);
        let g = IntervalGraph::new(&c);
        let all = enumerate_cycles(&g, 6, false, &caps()).unwrap();
        assert_eq!(all.iter().filter(|s| s.len() == 4).count(), 9);
        assert_eq!(all.iter().filter(|s| s.len() == 6).count(), 6);
        assert!(all.iter().filter(|s| s.len() == 6).all(|s| s.has_chord(&g)));
        let chordless = enumerate_cycles(&g, 6, true, &caps()).unwrap();
        assert_eq!(chordless.len(), 9);
        assert!(chordless.iter().all(|s| s.len() == 4 && !s.has_chord(&g)));
    }

    #[test]
    fn example_six_cycle() {
        let c = MinorCollection::parse_json(MIXED_4X4).unwrap();
        let g = IntervalGraph::new(&c);
        let r = c.ring();
        let cyc = enumerate_cycles(&g, 8, true, &caps()).unwrap();
        let target = Polynomial::binomial(
            r.cells_monomial(&[(1, 2), (2, 3), (3, 4)]),
            r.cells_monomial(&[(1, 4), (2, 2), (3, 3)]),
        );
        let binoms: Vec<Polynomial> = cyc.iter().map(|s| cycle_binomial(s, &g, &r)).collect();
        assert!(binoms.iter().any(|f| *f == target || *f == -target.clone()));
        assert_eq!(cyc.iter().filter(|s| s.len() == 6).count(), 1);
    }

    #[test]
    fn cycle_binomials_vanish_under_parametrization() {
        let c = MinorCollection::parse_json(MIXED_4X4).unwrap();
        let g = IntervalGraph::new(&c);
        let r = c.ring();
        for s in enumerate_cycles(&g, 8, false, &caps()).unwrap() {
            let f = cycle_binomial(&s, &g, &r);
            let img = |m: &Monomial| {
                let mut k = vec![0u32; g.h.len() + g.v.len()];
                for (v, e) in m.support() {
                    let cell = r.cell(v).unwrap();
                    k[g.h_of(cell).unwrap()] += e as u32;
                    k[g.h.len() + g.v_of(cell).unwrap()] += e as u32;
                }
                k
            };
            assert_eq!(img(&f.terms()[0].0), img(&f.terms()[1].0));
        }
    }

    #[test]
    fn toric_ideal_matches_kernel_dimensions() {
        let c = MinorCollection::parse_json(MIXED_4X4).unwrap();
        let j = toric_ideal(&c, None, &caps()).unwrap().with_vars(c.vertex_vars());
        for d in 0..=4 {
            let s = graded_slice(&j, d, Grading::margin(&c.ring()), &caps()).unwrap();
            assert_eq!(s.dim(), toric_kernel_dim(&c, d, &caps()).unwrap(), "degree {d}");
        }
    }

    #[test]
    fn canonical_form_is_rotation_invariant() {
        let a = Cycle::new(vec![2, 0, 1], vec![5, 3, 4]);
        let b = Cycle::new(vec![0, 1, 2], vec![3, 4, 5]);
        assert_eq!(a, b);
        // reflection of h0 v0 h1 v1 h2 v2 is h0 v2 h2 v1 h1 v0
        let c = Cycle::new(vec![0, 2, 1], vec![5, 4, 3]);
        assert_eq!(b, c);
    }
}
