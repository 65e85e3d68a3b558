use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_traits::{One, Zero};

use crate::config::Caps;
use crate::error::{Error, Result};
use crate::poly::{Coeff, Monomial, Polynomial, TermOrder};

type Terms = Vec<(Monomial, Coeff)>;

fn support_mask(m: &Monomial) -> u128 {
    m.support().fold(0u128, |acc, (v, _)| acc | (1u128 << (v % 128)))
}

/// `a - c*u*g` with every list sorted descending under `order`.
fn sub_scaled(a: &[(Monomial, Coeff)], c: &Coeff, u: &Monomial, g: &[(Monomial, Coeff)], order: &TermOrder) -> Terms {
    let mut out = Vec::with_capacity(a.len() + g.len());
    let (mut i, mut j) = (0, 0);
    let next_b = |j: usize| -> (Monomial, Coeff) { (g[j].0.mul(u), -(c * &g[j].1)) };
    let mut pending: Option<(Monomial, Coeff)> = if g.is_empty() { None } else { Some(next_b(0)) };
    while i < a.len() || pending.is_some() {
        match (&pending, a.get(i)) {
            (None, Some(t)) => {
                out.push(t.clone());
                i += 1;
            }
            (Some(_), None) => {
                out.push(pending.take().unwrap());
                j += 1;
                pending = (j < g.len()).then(|| next_b(j));
            }
            (Some(b), Some(t)) => match order.cmp(&t.0, &b.0) {
                Ordering::Greater => {
                    out.push(t.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(pending.take().unwrap());
                    j += 1;
                    pending = (j < g.len()).then(|| next_b(j));
                }
                Ordering::Equal => {
                    let s = &t.1 + &b.1;
                    if !s.is_zero() {
                        out.push((t.0.clone(), s));
                    }
                    i += 1;
                    j += 1;
                    pending = (j < g.len()).then(|| next_b(j));
                }
            },
            (None, None) => unreachable!(),
        }
    }
    out
}

/// Divisor list used for reduction: monic polynomials in ordered form.
#[derive(Debug, Clone, Default)]
struct Divisors {
    polys: Vec<Terms>,
    leads: Vec<Monomial>,
    masks: Vec<u128>,
    active: Vec<bool>,
}

impl Divisors {
    fn push(&mut self, terms: Terms) -> usize {
        let lead = terms[0].0.clone();
        self.masks.push(support_mask(&lead));
        self.leads.push(lead);
        self.polys.push(terms);
        self.active.push(true);
        self.polys.len() - 1
    }

    fn find_divisor(&self, m: &Monomial) -> Option<usize> {
        let mask = support_mask(m);
        (0..self.leads.len()).find(|&k| {
            self.active[k] && self.masks[k] & !mask == 0 && self.leads[k].divides(m)
        })
    }

    /// Full reduction of `p`; the result has no term divisible by an active lead.
    fn reduce(&self, p: Terms, order: &TermOrder) -> Terms {
        let mut work = p;
        let mut start = 0;
        let mut rem: Terms = Vec::new();
        while start < work.len() {
            let (lm, lc) = work[start].clone();
            match self.find_divisor(&lm) {
                Some(k) => {
                    let u = lm.checked_div(&self.leads[k]).expect("lead divides");
                    work = sub_scaled(&work[start..], &lc, &u, &self.polys[k], order);
                    start = 0;
                }
                None => {
                    rem.push((lm, lc));
                    start += 1;
                }
            }
        }
        rem
    }
}

fn make_monic(mut t: Terms) -> Terms {
    if let Some((_, c)) = t.first() {
        if !c.is_one() {
            let inv = c.recip();
            for (_, a) in t.iter_mut() {
                *a *= &inv;
            }
        }
    }
    t
}

fn ordered(p: &Polynomial, order: &TermOrder) -> Terms {
    p.sorted_terms(order)
}

/// S-polynomial of two nonzero polynomials.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, order: &TermOrder) -> Result<Polynomial> {
    let (lf, cf) = f.leading_term(order)?;
    let (lg, cg) = g.leading_term(order)?;
    let l = lf.lcm(&lg);
    let a = f.mul_monomial(&l.checked_div(&lf).unwrap()).scale(&cf.recip());
    let b = g.mul_monomial(&l.checked_div(&lg).unwrap()).scale(&cg.recip());
    Ok(&a - &b)
}

/// Remainder of `p` under full reduction by `divisors` (any order of use).
pub fn normal_form_by(p: &Polynomial, divisors: &[Polynomial], order: &TermOrder) -> Polynomial {
    let mut d = Divisors::default();
    for g in divisors.iter().filter(|g| !g.is_zero()) {
        d.push(make_monic(ordered(g, order)));
    }
    Polynomial::from_terms(d.reduce(ordered(p, order), order))
}

/// True iff every S-pair of `gens` reduces to zero modulo `gens`.
///
/// Pairs with coprime leading monomials are skipped; they always reduce to zero.
pub fn is_groebner_basis(gens: &[Polynomial], order: &TermOrder) -> bool {
    let mut d = Divisors::default();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        d.push(make_monic(ordered(g, order)));
    }
    for i in 0..d.polys.len() {
        for j in i + 1..d.polys.len() {
            if d.leads[i].is_coprime(&d.leads[j]) {
                continue;
            }
            let s = spoly_terms(&d, i, j, order);
            if !d.reduce(s, order).is_empty() {
                return false;
            }
        }
    }
    true
}

fn spoly_terms(d: &Divisors, i: usize, j: usize, order: &TermOrder) -> Terms {
    let l = d.leads[i].lcm(&d.leads[j]);
    let ui = l.checked_div(&d.leads[i]).unwrap();
    let uj = l.checked_div(&d.leads[j]).unwrap();
    let a: Terms = d.polys[i].iter().map(|(m, c)| (m.mul(&ui), c.clone())).collect();
    // leading terms cancel exactly; drop them before merging
    sub_scaled(&a[1..], &Coeff::one(), &uj, &d.polys[j][1..], order)
}

/// A reduced Gröbner basis: monic, sorted by leading monomial descending.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    order: TermOrder,
    elements: Vec<Polynomial>,
    div: Divisors,
}

impl GroebnerBasis {
    fn from_reduced(order: TermOrder, mut polys: Vec<Terms>) -> Self {
        polys.sort_by(|a, b| order.cmp(&b[0].0, &a[0].0));
        let mut div = Divisors::default();
        for p in &polys {
            div.push(p.clone());
        }
        let elements = polys.into_iter().map(Polynomial::from_terms).collect();
        GroebnerBasis { order, elements, div }
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.div.leads.iter().any(|m| m.is_one())
    }

    /// Minimal generators of the initial ideal.
    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.div.leads
    }

    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        Polynomial::from_terms(self.div.reduce(ordered(p, &self.order), &self.order))
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        p.is_zero() || self.div.reduce(ordered(p, &self.order), &self.order).is_empty()
    }

    /// True when `m` is divisible by some leading monomial.
    pub fn in_initial_ideal(&self, m: &Monomial) -> bool {
        self.div.find_divisor(m).is_some()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct PairKey {
    deg: u32,
    lcm: Monomial,
    i: usize,
    j: usize,
}

/// Buchberger's algorithm with the Gebauer–Möller criteria and the normal
/// selection strategy. Output is the reduced Gröbner basis.
pub fn buchberger(gens: &[Polynomial], order: &TermOrder, caps: &Caps) -> Result<GroebnerBasis> {
    let inputs: Vec<&Polynomial> = gens.iter().filter(|g| !g.is_zero()).collect();
    if !order.is_well_order() && inputs.iter().any(|g| !g.is_homogeneous()) {
        return Err(Error::OrderNotWellFounded);
    }
    if inputs.iter().any(|g| g.terms().iter().all(|(m, _)| m.is_one())) {
        let one = vec![(Monomial::one(), Coeff::one())];
        return Ok(GroebnerBasis::from_reduced(order.clone(), vec![one]));
    }

    let mut d = Divisors::default();
    let mut pairs: BTreeSet<PairKey> = BTreeSet::new();

    // seed by inserting inputs one at a time, each reduced by the previous ones
    let mut seeds: Vec<Terms> = inputs.iter().map(|g| make_monic(ordered(g, order))).collect();
    seeds.sort_by(|a, b| order.cmp(&a[0].0, &b[0].0).then_with(|| a.len().cmp(&b.len())));
    for s in seeds {
        let r = d.reduce(s, order);
        if r.is_empty() {
            continue;
        }
        if r[0].0.is_one() {
            let one = vec![(Monomial::one(), Coeff::one())];
            return Ok(GroebnerBasis::from_reduced(order.clone(), vec![one]));
        }
        let h = d.push(make_monic(r));
        update(&mut d, &mut pairs, h, caps)?;
    }

    while let Some(p) = pairs.pop_first() {
        if p.deg as usize > caps.degree_cap {
            return Err(Error::resource("S-pair degree", caps.degree_cap));
        }
        let s = spoly_terms(&d, p.i, p.j, order);
        let r = d.reduce(s, order);
        if r.is_empty() {
            continue;
        }
        if r[0].0.is_one() {
            let one = vec![(Monomial::one(), Coeff::one())];
            return Ok(GroebnerBasis::from_reduced(order.clone(), vec![one]));
        }
        let h = d.push(make_monic(r));
        update(&mut d, &mut pairs, h, caps)?;
    }

    // interreduce the active elements
    let active: Vec<usize> = (0..d.polys.len()).filter(|&k| d.active[k]).collect();
    let mut reduced = Vec::with_capacity(active.len());
    for &k in &active {
        let mut others = d.clone();
        others.active[k] = false;
        let p = &d.polys[k];
        let mut tail = others.reduce(p[1..].to_vec(), order);
        let mut full = vec![p[0].clone()];
        full.append(&mut tail);
        reduced.push(full);
    }
    Ok(GroebnerBasis::from_reduced(order.clone(), reduced))
}

fn update(d: &mut Divisors, pairs: &mut BTreeSet<PairKey>, h: usize, caps: &Caps) -> Result<()> {
    let lh = d.leads[h].clone();
    let candidates: Vec<usize> = (0..h).filter(|&g| d.active[g]).collect();
    let lcms: Vec<Monomial> = candidates.iter().map(|&g| lh.lcm(&d.leads[g])).collect();

    // chain criterion among the new pairs
    let mut kept: Vec<usize> = Vec::new();
    for a in 0..candidates.len() {
        let coprime = lh.is_coprime(&d.leads[candidates[a]]);
        let dominated = (a + 1..candidates.len()).any(|b| lcms[b].divides(&lcms[a]))
            || kept.iter().any(|&b| lcms[b].divides(&lcms[a]));
        if coprime || !dominated {
            kept.push(a);
        }
    }

    // old pairs whose lcm is strictly covered through h
    let stale: Vec<PairKey> = pairs
        .iter()
        .filter(|p| {
            lh.divides(&p.lcm) && lh.lcm(&d.leads[p.i]) != p.lcm && lh.lcm(&d.leads[p.j]) != p.lcm
        })
        .cloned()
        .collect();
    for p in stale {
        pairs.remove(&p);
    }

    for a in kept {
        let g = candidates[a];
        if lh.is_coprime(&d.leads[g]) {
            continue;
        }
        pairs.insert(PairKey {
            deg: lcms[a].degree(),
            lcm: lcms[a].clone(),
            i: g,
            j: h,
        });
    }
    if pairs.len() > caps.pair_cap {
        return Err(Error::resource("S-pair queue", caps.pair_cap));
    }

    for g in 0..h {
        if d.active[g] && lh.divides(&d.leads[g]) {
            d.active[g] = false;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Ring;

    fn minor(r: &Ring, a1: usize, a2: usize, b1: usize, b2: usize) -> Polynomial {
        &(&r.x(a1, b1) * &r.x(a2, b2)) - &(&r.x(a1, b2) * &r.x(a2, b1))
    }

    #[test]
    fn single_minor_is_its_own_basis() {
        let r = Ring::new(2, 2);
        let f = minor(&r, 1, 2, 1, 2);
        let gb = buchberger(&[f.clone()], &r.diagonal_lex(), &Caps::default()).unwrap();
        assert_eq!(gb.elements(), &[f.clone()]);
        assert!(gb.contains(&f));
        assert!(is_groebner_basis(&[f], &r.diagonal_lex()));
    }

    #[test]
    fn adjacent_minors_have_coprime_leads() {
        // under diagonal lex the leads x11*x22 and x12*x23 are coprime, so the
        // pair is already a basis even though the third minor is not in the ideal
        let r = Ring::new(2, 3);
        let f = minor(&r, 1, 2, 1, 2);
        let g = minor(&r, 1, 2, 2, 3);
        let o = r.diagonal_lex();
        assert!(is_groebner_basis(&[f.clone(), g.clone()], &o));
        let gb = buchberger(&[f, g], &o, &Caps::default()).unwrap();
        assert_eq!(gb.len(), 2);
        assert!(!gb.contains(&minor(&r, 1, 2, 1, 3)));
    }

    #[test]
    fn shared_lead_variable_needs_completion() {
        let r = Ring::new(2, 3);
        let f = minor(&r, 1, 2, 1, 2);
        let h = minor(&r, 1, 2, 1, 3);
        let o = r.diagonal_lex();
        assert!(!is_groebner_basis(&[f.clone(), h.clone()], &o));
        let gb = buchberger(&[f, h], &o, &Caps::default()).unwrap();
        assert_eq!(gb.len(), 3);
        let g = minor(&r, 1, 2, 2, 3);
        assert!(!gb.contains(&g));
        assert!(gb.contains(&(&r.x(2, 1) * &g)));
        assert!(is_groebner_basis(gb.elements(), &o));
    }

    #[test]
    fn unit_ideal_detected() {
        let r = Ring::new(1, 2);
        let p = &r.x(1, 1) - &Polynomial::one();
        let q = r.x(1, 1);
        let gb = buchberger(&[p, q], &r.grevlex(), &Caps::default()).unwrap();
        assert!(gb.is_unit());
    }

    #[test]
    fn degree_cap_reported() {
        let r = Ring::new(2, 3);
        let f = minor(&r, 1, 2, 1, 2);
        let g = minor(&r, 1, 2, 1, 3);
        let caps = Caps {
            degree_cap: 2,
            ..Caps::default()
        };
        assert!(matches!(
            buchberger(&[f, g], &r.diagonal_lex(), &caps),
            Err(Error::ResourceCap { .. })
        ));
    }
}
