use std::fmt;

use smallvec::SmallVec;

/// A monomial as an exponent vector indexed by variable. Trailing zero
/// exponents are never stored, so equal monomials have equal representations
/// and the derived ordering is lex with variable 0 most significant.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(SmallVec<[u16; 20]>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(SmallVec::new())
    }

    pub fn var(index: usize) -> Self {
        Self::var_pow(index, 1)
    }

    pub fn var_pow(index: usize, exp: u16) -> Self {
        let mut v: SmallVec<[u16; 20]> = SmallVec::from_elem(0, index + 1);
        v[index] = exp;
        let mut m = Monomial(v);
        m.trim();
        m
    }

    pub fn from_exponents(exps: &[u16]) -> Self {
        let mut m = Monomial(SmallVec::from_slice(exps));
        m.trim();
        m
    }

    /// Builds a monomial from `(variable, exponent)` pairs; repeated variables add up.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, u16)>) -> Self {
        let mut v: SmallVec<[u16; 20]> = SmallVec::new();
        for (i, e) in pairs {
            if v.len() <= i {
                v.resize(i + 1, 0);
            }
            v[i] += e;
        }
        let mut m = Monomial(v);
        m.trim();
        m
    }

    /// Product of the listed variables (with repetition).
    pub fn product_of(vars: impl IntoIterator<Item = usize>) -> Self {
        Self::from_pairs(vars.into_iter().map(|v| (v, 1)))
    }

    fn trim(&mut self) {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
    }

    #[inline]
    pub fn exp(&self, var: usize) -> u16 {
        self.0.get(var).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// Variables with nonzero exponent, ascending, paired with the exponent.
    pub fn support(&self) -> impl Iterator<Item = (usize, u16)> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| (i, e))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (long, short) = if self.0.len() >= other.0.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut v = long.0.clone();
        for (i, &e) in short.0.iter().enumerate() {
            v[i] += e;
        }
        Monomial(v)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        if self.0.len() > other.0.len() {
            return false;
        }
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let mut v = self.0.clone();
        for (i, &e) in other.0.iter().enumerate() {
            v[i] -= e;
        }
        let mut m = Monomial(v);
        m.trim();
        Some(m)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let len = self.0.len().max(other.0.len());
        let v: SmallVec<[u16; 20]> = (0..len).map(|i| self.exp(i).max(other.exp(i))).collect();
        Monomial(v)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let len = self.0.len().min(other.0.len());
        let mut m = Monomial((0..len).map(|i| self.exp(i).min(other.exp(i))).collect());
        m.trim();
        m
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0
            .iter()
            .zip(other.0.iter())
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Sum of exponents over the given variables.
    pub fn degree_in(&self, vars: &[usize]) -> u32 {
        vars.iter().map(|&v| self.exp(v) as u32).sum()
    }

    /// The monomial with every listed variable removed.
    pub fn without(&self, vars: &[usize]) -> Monomial {
        let mut v = self.0.clone();
        for &x in vars {
            if x < v.len() {
                v[x] = 0;
            }
        }
        let mut m = Monomial(v);
        m.trim();
        m
    }

    /// Largest power of `var` dividing the monomial, removed.
    pub fn strip_var(&self, var: usize) -> Monomial {
        self.without(&[var])
    }

    /// Squarefree part: every exponent capped at 1.
    pub fn radical(&self) -> Monomial {
        Monomial(self.0.iter().map(|&e| e.min(1)).collect())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .support()
            .map(|(i, e)| if e == 1 { format!("v{i}") } else { format!("v{i}^{e}") })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trimmed_representation() {
        let a = Monomial::from_exponents(&[1, 0, 0]);
        let b = Monomial::var(0);
        assert_eq!(a, b);
        assert_eq!(a.exponents(), &[1]);
        assert!(Monomial::from_exponents(&[0, 0]).is_one());
    }

    #[test]
    fn arithmetic() {
        let a = Monomial::from_exponents(&[1, 2]);
        let b = Monomial::from_exponents(&[0, 1, 3]);
        assert_eq!(a.mul(&b), Monomial::from_exponents(&[1, 3, 3]));
        assert_eq!(a.lcm(&b), Monomial::from_exponents(&[1, 2, 3]));
        assert_eq!(a.gcd(&b), Monomial::from_exponents(&[0, 1]));
        assert!(Monomial::var(1).divides(&a));
        assert!(!b.divides(&a));
        assert_eq!(a.checked_div(&Monomial::var(1)), Some(Monomial::from_exponents(&[1, 1])));
        assert_eq!(a.checked_div(&b), None);
        assert!(Monomial::var(0).is_coprime(&Monomial::var(3)));
        assert_eq!(a.degree(), 3);
    }
}
