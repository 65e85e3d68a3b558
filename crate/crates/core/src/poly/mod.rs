mod monomial;
mod order;
mod polynomial;

use std::fmt::Write as _;

use num_traits::{One, Signed};

pub use monomial::Monomial;
pub use order::{OrderKind, TermOrder};
pub use polynomial::{coeff, Coeff, Polynomial};

use crate::error::{Error, Result};

/// A grid cell, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl std::fmt::Display for Cell {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "x[{},{}]", self.row, self.col)
    }
}

/// Polynomial ring over the cells of an `m x n` grid plus `aux` extra
/// variables. Cell (i, j) is variable `(i-1)*n + (j-1)`; auxiliary variables
/// come after all cells.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Ring {
    pub m: usize,
    pub n: usize,
    pub aux: usize,
}

impl Ring {
    pub fn new(m: usize, n: usize) -> Self {
        Ring { m, n, aux: 0 }
    }

    pub fn with_aux(self, aux: usize) -> Self {
        Ring { aux, ..self }
    }

    pub fn cell_count(&self) -> usize {
        self.m * self.n
    }

    pub fn nvars(&self) -> usize {
        self.cell_count() + self.aux
    }

    pub fn var(&self, c: Cell) -> usize {
        debug_assert!(self.contains(c));
        (c.row - 1) * self.n + (c.col - 1)
    }

    pub fn contains(&self, c: Cell) -> bool {
        (1..=self.m).contains(&c.row) && (1..=self.n).contains(&c.col)
    }

    pub fn checked_var(&self, c: Cell) -> Result<usize> {
        if self.contains(c) {
            Ok(self.var(c))
        } else {
            Err(Error::Validation(format!("cell {c} outside {}x{} grid", self.m, self.n)))
        }
    }

    pub fn cell(&self, var: usize) -> Option<Cell> {
        (var < self.cell_count()).then(|| Cell::new(var / self.n + 1, var % self.n + 1))
    }

    pub fn aux_var(&self, k: usize) -> usize {
        self.cell_count() + k
    }

    pub fn x(&self, row: usize, col: usize) -> Polynomial {
        Polynomial::var(self.var(Cell::new(row, col)))
    }

    pub fn cells_monomial(&self, cells: &[(usize, usize)]) -> Monomial {
        Monomial::product_of(cells.iter().map(|&(r, c)| self.var(Cell::new(r, c))))
    }

    /// The order of graded revlex with x11 < x12 < ... < xmn, auxiliary
    /// variables placed above every cell.
    pub fn grevlex(&self) -> TermOrder {
        TermOrder::grevlex(self.nvars())
    }

    /// Lex with x11 most significant, row-major.
    pub fn diagonal_lex(&self) -> TermOrder {
        TermOrder::lex(self.nvars())
    }

    pub fn var_name(&self, v: usize) -> String {
        match self.cell(v) {
            Some(c) => c.to_string(),
            None if self.aux == 1 => "t".to_string(),
            None => format!("t{}", v - self.cell_count()),
        }
    }

    pub fn render_monomial(&self, m: &Monomial) -> String {
        if m.is_one() {
            return "1".to_string();
        }
        let parts: Vec<String> = m
            .support()
            .map(|(v, e)| {
                if e == 1 {
                    self.var_name(v)
                } else {
                    format!("{}^{e}", self.var_name(v))
                }
            })
            .collect();
        parts.join("*")
    }

    /// Renders `p` with terms in descending order under `order`.
    pub fn render(&self, p: &Polynomial, order: &TermOrder) -> String {
        if p.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in p.sorted_terms(order).into_iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                let _ = write!(out, "{a}");
            } else if a.is_one() {
                out.push_str(&self.render_monomial(&m));
            } else {
                let _ = write!(out, "{a}*{}", self.render_monomial(&m));
            }
        }
        out
    }
}
