use std::cmp::Ordering;

use super::monomial::Monomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Lex,
    RevLex,
    GradedRevLex,
}

/// A monomial order given by a kind and an explicit variable ranking.
///
/// `ascending` lists variables from least to most significant. Variables not
/// listed are compared afterwards by plain lex on their indices. When `block`
/// is set, the total degree in the block variables is compared first, which
/// makes every monomial involving the block larger than any monomial free of
/// it (an elimination order for the block).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TermOrder {
    pub kind: OrderKind,
    ascending: Vec<usize>,
    block: Option<Vec<usize>>,
}

impl TermOrder {
    pub fn new(kind: OrderKind, ascending: Vec<usize>) -> Self {
        TermOrder {
            kind,
            ascending,
            block: None,
        }
    }

    /// Lex with variable 0 most significant, down to variable `nvars - 1`.
    pub fn lex(nvars: usize) -> Self {
        Self::new(OrderKind::Lex, (0..nvars).rev().collect())
    }

    /// Graded revlex with variable 0 least significant. For cell variables
    /// indexed row-major this is x11 < x12 < ... < xmn.
    pub fn grevlex(nvars: usize) -> Self {
        Self::new(OrderKind::GradedRevLex, (0..nvars).collect())
    }

    /// Graded revlex with `var` least significant and the remaining
    /// variables in index order above it.
    pub fn grevlex_with_smallest(nvars: usize, var: usize) -> Self {
        let mut asc = vec![var];
        asc.extend((0..nvars).filter(|&v| v != var));
        Self::new(OrderKind::GradedRevLex, asc)
    }

    /// Adds an elimination block in front of this order.
    pub fn with_block(mut self, block: Vec<usize>) -> Self {
        self.block = Some(block);
        self
    }

    pub fn ascending(&self) -> &[usize] {
        &self.ascending
    }

    pub fn block(&self) -> Option<&[usize]> {
        self.block.as_deref()
    }

    /// True when every monomial is at least the unit monomial, so that
    /// reduction terminates on arbitrary input.
    pub fn is_well_order(&self) -> bool {
        !matches!(self.kind, OrderKind::RevLex)
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        if let Some(block) = &self.block {
            let o = a.degree_in(block).cmp(&b.degree_in(block));
            if o != Ordering::Equal {
                return o;
            }
        }
        let o = match self.kind {
            OrderKind::Lex => self.lex_part(a, b),
            OrderKind::RevLex => self.revlex_part(a, b),
            OrderKind::GradedRevLex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| self.revlex_part(a, b)),
        };
        o.then_with(|| a.cmp(b))
    }

    fn lex_part(&self, a: &Monomial, b: &Monomial) -> Ordering {
        for &v in self.ascending.iter().rev() {
            let o = a.exp(v).cmp(&b.exp(v));
            if o != Ordering::Equal {
                return o;
            }
        }
        Ordering::Equal
    }

    fn revlex_part(&self, a: &Monomial, b: &Monomial) -> Ordering {
        // the least significant differing variable decides; more of it is smaller
        for &v in &self.ascending {
            let o = b.exp(v).cmp(&a.exp(v));
            if o != Ordering::Equal {
                return o;
            }
        }
        Ordering::Equal
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // 2x2 grid: x11=0, x12=1, x21=2, x22=3
    fn m(vars: &[usize]) -> Monomial {
        Monomial::product_of(vars.iter().copied())
    }

    #[test]
    fn grevlex_tie_break_on_two_by_two() {
        let o = TermOrder::grevlex(4);
        assert_eq!(o.cmp(&m(&[0, 3]), &m(&[1, 2])), Ordering::Less);
        assert_eq!(o.cmp(&m(&[1, 2]), &m(&[1, 2])), Ordering::Equal);
        assert_eq!(o.cmp(&m(&[3]), &m(&[0, 0])), Ordering::Less);
    }

    #[test]
    fn lex_diagonal() {
        let o = TermOrder::lex(4);
        assert_eq!(o.cmp(&m(&[0, 3]), &m(&[1, 2])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0]), &m(&[1, 1, 1])), Ordering::Greater);
    }

    #[test]
    fn block_eliminates() {
        let o = TermOrder::grevlex(5).with_block(vec![4]);
        assert_eq!(o.cmp(&m(&[4]), &m(&[0, 1, 2, 3])), Ordering::Greater);
    }

    #[test]
    fn smallest_variable_order() {
        let o = TermOrder::grevlex_with_smallest(4, 2);
        assert_eq!(o.ascending()[0], 2);
        // any term divisible by the smallest variable loses a degree tie
        assert_eq!(o.cmp(&m(&[2, 3]), &m(&[0, 1])), Ordering::Less);
    }
}
