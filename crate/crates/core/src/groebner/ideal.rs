use crate::config::Caps;
use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial, Ring, TermOrder};

use super::buchberger::{buchberger, GroebnerBasis};

/// An ideal given by generators in a grid ring.
///
/// `vars` is the set of ambient variables the quotient ring is built on;
/// it defaults to every variable of the ring and always contains the
/// variables of the generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    ring: Ring,
    gens: Vec<Polynomial>,
    vars: Vec<usize>,
}

impl Ideal {
    pub fn new(ring: Ring, gens: impl IntoIterator<Item = Polynomial>) -> Self {
        let mut out: Vec<Polynomial> = Vec::new();
        for g in gens {
            if !g.is_zero() && !out.contains(&g) {
                out.push(g);
            }
        }
        Ideal {
            ring,
            gens: out,
            vars: (0..ring.nvars()).collect(),
        }
    }

    pub fn zero(ring: Ring) -> Self {
        Self::new(ring, [])
    }

    /// Monomial ideal generated by the given monomials.
    pub fn monomial(ring: Ring, gens: impl IntoIterator<Item = Monomial>) -> Self {
        Self::new(ring, gens.into_iter().map(Polynomial::monomial))
    }

    /// Restricts the ambient variables; generator variables are always kept.
    pub fn with_vars(mut self, vars: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = vars.into_iter().collect();
        for g in &self.gens {
            v.extend(g.variables());
        }
        v.sort_unstable();
        v.dedup();
        self.vars = v;
        self
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn vars(&self) -> &[usize] {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    pub fn is_monomial(&self) -> bool {
        self.gens.iter().all(|g| g.is_monomial())
    }

    pub fn monomial_gens(&self) -> Option<Vec<Monomial>> {
        self.gens
            .iter()
            .map(|g| g.is_monomial().then(|| g.terms()[0].0.clone()))
            .collect()
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        let mut s = Ideal::new(self.ring, self.gens.iter().chain(other.gens.iter()).cloned());
        s.vars = union(&self.vars, &other.vars);
        s
    }

    pub fn with_gens(&self, extra: impl IntoIterator<Item = Polynomial>) -> Ideal {
        let mut s = Ideal::new(self.ring, self.gens.iter().cloned().chain(extra));
        s.vars = self.vars.clone();
        s.with_vars([])
    }

    /// The `t`-th power, generated by all products of `t` generators.
    pub fn power(&self, t: u32) -> Ideal {
        let mut prods = vec![(0usize, Polynomial::one())];
        for _ in 0..t {
            let mut next = Vec::new();
            for (start, p) in &prods {
                for (k, g) in self.gens.iter().enumerate().skip(*start) {
                    next.push((k, p * g));
                }
            }
            prods = next;
        }
        let mut out = Ideal::new(self.ring, prods.into_iter().map(|(_, p)| p));
        out.vars = self.vars.clone();
        out
    }

    pub fn groebner(&self, order: &TermOrder, caps: &Caps) -> Result<GroebnerBasis> {
        buchberger(&self.gens, order, caps)
    }

    /// Graded revlex Gröbner basis, the default for membership.
    pub fn default_gb(&self, caps: &Caps) -> Result<GroebnerBasis> {
        self.groebner(&self.ring.grevlex(), caps)
    }

    pub fn contains(&self, p: &Polynomial, caps: &Caps) -> Result<bool> {
        if p.is_zero() {
            return Ok(true);
        }
        Ok(self.default_gb(caps)?.contains(p))
    }

    /// `self ⊆ other`, decided by membership of every generator.
    pub fn is_subset_of(&self, other: &Ideal, caps: &Caps) -> Result<bool> {
        let gb = other.default_gb(caps)?;
        Ok(self.gens.iter().all(|g| gb.contains(g)))
    }

    /// Equality by membership in both directions; homogeneous ideals only.
    pub fn equals(&self, other: &Ideal, caps: &Caps) -> Result<bool> {
        for (name, i) in [("left", self), ("right", other)] {
            if !i.is_homogeneous() {
                return Err(Error::NotHomogeneous(format!("{name} operand of an equality test")));
            }
        }
        Ok(self.is_subset_of(other, caps)? && other.is_subset_of(self, caps)?)
    }
}

fn union(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut v: Vec<usize> = a.iter().chain(b).copied().collect();
    v.sort_unstable();
    v.dedup();
    v
}

/// An ideal with a Gröbner basis computed once for repeated membership queries.
#[derive(Debug, Clone)]
pub struct IdealGb {
    ideal: Ideal,
    gb: GroebnerBasis,
}

impl IdealGb {
    pub fn new(ideal: Ideal, caps: &Caps) -> Result<Self> {
        let gb = ideal.default_gb(caps)?;
        Ok(IdealGb { ideal, gb })
    }

    pub fn with_order(ideal: Ideal, order: &TermOrder, caps: &Caps) -> Result<Self> {
        let gb = ideal.groebner(order, caps)?;
        Ok(IdealGb { ideal, gb })
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn gb(&self) -> &GroebnerBasis {
        &self.gb
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.gb.contains(p)
    }

    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        other.gens().iter().all(|g| self.gb.contains(g))
    }
}

/// `I : x^∞` for a single variable: a graded revlex basis with `var`
/// smallest, each element divided by its largest power of `var`.
pub fn saturate_by_variable(i: &Ideal, var: usize, caps: &Caps) -> Result<Ideal> {
    let order = TermOrder::grevlex_with_smallest(i.ring.nvars(), var);
    let gb = i.groebner(&order, caps)?;
    let mut out = Ideal::new(i.ring, gb.elements().iter().map(|g| g.strip_var_power(var)));
    out.vars = i.vars.clone();
    Ok(out)
}

/// Saturation by each listed variable in turn.
pub fn saturate_by_variables(i: &Ideal, vars: &[usize], caps: &Caps) -> Result<Ideal> {
    let mut cur = i.clone();
    for &v in vars {
        cur = saturate_by_variable(&cur, v, caps)?;
    }
    Ok(cur)
}

/// `I ∩ J` by eliminating an auxiliary variable t from (t·I, (1−t)·J).
pub fn intersect(i: &Ideal, j: &Ideal, caps: &Caps) -> Result<Ideal> {
    if i.ring != j.ring {
        return Err(Error::Precondition("intersection of ideals in different rings".into()));
    }
    let ring = i.ring;
    if i.is_zero() || j.is_zero() {
        let mut z = Ideal::zero(ring);
        z.vars = union(&i.vars, &j.vars);
        return Ok(z);
    }
    let big = ring.with_aux(ring.aux + 1);
    let t = big.nvars() - 1;
    let tp = Polynomial::var(t);
    let one_minus_t = &Polynomial::one() - &tp;
    let gens: Vec<Polynomial> = i
        .gens
        .iter()
        .map(|f| f * &tp)
        .chain(j.gens.iter().map(|g| g * &one_minus_t))
        .collect();
    let order = TermOrder::grevlex(big.nvars()).with_block(vec![t]);
    let gb = buchberger(&gens, &order, caps)?;
    let kept = gb
        .elements()
        .iter()
        .filter(|g| g.terms().iter().all(|(m, _)| m.exp(t) == 0))
        .cloned();
    let mut out = Ideal::new(ring, kept);
    out.vars = union(&i.vars, &j.vars);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn saturation_of_monomials() {
        let r = Ring::new(1, 2);
        let caps = Caps::default();
        let i = Ideal::new(r, [&r.x(1, 1) * &r.x(1, 2)]);
        let s = saturate_by_variable(&i, 0, &caps).unwrap();
        assert!(s.equals(&Ideal::new(r, [r.x(1, 2)]), &caps).unwrap());
        let sq = Ideal::new(r, [r.x(1, 1).pow(2)]);
        let s = saturate_by_variable(&sq, 0, &caps).unwrap();
        assert!(s.contains(&Polynomial::one(), &caps).unwrap());
    }

    #[test]
    fn intersection_of_coprime_monomials() {
        let r = Ring::new(2, 2);
        let caps = Caps::default();
        let a = Ideal::new(r, [r.x(1, 1)]);
        let b = Ideal::new(r, [r.x(2, 2)]);
        let c = intersect(&a, &b, &caps).unwrap();
        assert!(c.equals(&Ideal::new(r, [&r.x(1, 1) * &r.x(2, 2)]), &caps).unwrap());
        let aa = intersect(&a, &a, &caps).unwrap();
        assert!(aa.equals(&a, &caps).unwrap());
    }

    #[test]
    fn power_generators() {
        let r = Ring::new(1, 2);
        let i = Ideal::new(r, [r.x(1, 1), r.x(1, 2)]);
        assert_eq!(i.power(2).gens().len(), 3);
    }

    #[test]
    fn equality_requires_homogeneity() {
        let r = Ring::new(1, 1);
        let i = Ideal::new(r, [&r.x(1, 1) - &Polynomial::one()]);
        assert!(matches!(i.equals(&i, &Caps::default()), Err(Error::NotHomogeneous(_))));
    }
}
