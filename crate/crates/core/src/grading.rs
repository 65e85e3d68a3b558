//! Gradings of the polynomial ring and enumeration of monomials by degree.

use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial, Ring};

/// A positive grading of the variables.
///
/// `Margin` sends the cell variable x_ij to e_i + f_j in Z^(m+n); every
/// 2-minor binomial and every cycle binomial is homogeneous for it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Grading {
    Standard,
    Margin { m: usize, n: usize },
    Fine,
}

pub type Key = Vec<u32>;

impl Grading {
    pub fn margin(ring: &Ring) -> Self {
        Grading::Margin { m: ring.m, n: ring.n }
    }

    pub fn key(&self, mono: &Monomial) -> Key {
        match *self {
            Grading::Standard => vec![mono.degree()],
            Grading::Margin { m, n } => {
                let mut k = vec![0u32; m + n];
                for (v, e) in mono.support() {
                    assert!(v < m * n, "margin grading is defined on cell variables only");
                    k[v / n] += e as u32;
                    k[m + v % n] += e as u32;
                }
                k
            }
            Grading::Fine => mono.exponents().iter().map(|&e| e as u32).collect(),
        }
    }

    /// Key of a homogeneous polynomial, `None` for zero or inhomogeneous input.
    pub fn poly_key(&self, p: &Polynomial) -> Option<Key> {
        let mut it = p.terms().iter().map(|(m, _)| self.key(m));
        let first = it.next()?;
        it.all(|k| self.eq_keys(&k, &first)).then_some(first)
    }

    /// Total degree carried by a key.
    pub fn degree_of(&self, key: &[u32]) -> u32 {
        match *self {
            Grading::Standard => key[0],
            Grading::Margin { m, .. } => key[..m].iter().sum(),
            Grading::Fine => key.iter().sum(),
        }
    }

    fn normalize(&self, key: &[u32]) -> Key {
        let mut k = key.to_vec();
        if matches!(self, Grading::Fine) {
            while k.last() == Some(&0) {
                k.pop();
            }
        }
        k
    }

    pub fn eq_keys(&self, a: &[u32], b: &[u32]) -> bool {
        self.normalize(a) == self.normalize(b)
    }

    /// `a - b` when `b <= a` componentwise.
    pub fn sub_key(&self, a: &[u32], b: &[u32]) -> Option<Key> {
        let len = a.len().max(b.len());
        let mut out = Vec::with_capacity(len);
        for i in 0..len {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            out.push(x.checked_sub(y)?);
        }
        Some(self.normalize(&out))
    }

    /// All monomials in `vars` whose key is `key`, in lex-descending order.
    pub fn monomials_with_key(&self, vars: &[usize], key: &[u32], cap: usize) -> Result<Vec<Monomial>> {
        let mut out = match *self {
            Grading::Standard => monomials_of_degree(vars, key[0], cap)?,
            Grading::Fine => {
                let m = Monomial::from_exponents(&key.iter().map(|&e| e as u16).collect::<Vec<_>>());
                if m.support().all(|(v, _)| vars.binary_search(&v).is_ok()) {
                    vec![m]
                } else {
                    vec![]
                }
            }
            Grading::Margin { m, n } => tables_with_margins(vars, m, n, key, cap)?,
        };
        out.sort_unstable_by(|a, b| b.cmp(a));
        Ok(out)
    }
}

/// All monomials of total degree `d` in the given variables.
pub fn monomials_of_degree(vars: &[usize], d: u32, cap: usize) -> Result<Vec<Monomial>> {
    fn rec(
        vars: &[usize],
        i: usize,
        left: u32,
        cur: &mut Vec<(usize, u16)>,
        out: &mut Vec<Monomial>,
        cap: usize,
    ) -> Result<()> {
        if left == 0 {
            if out.len() >= cap {
                return Err(Error::memory("monomial basis of a graded piece", cap));
            }
            out.push(Monomial::from_pairs(cur.iter().copied()));
            return Ok(());
        }
        if i == vars.len() {
            return Ok(());
        }
        for e in (0..=left).rev() {
            if e > 0 {
                cur.push((vars[i], e as u16));
            }
            rec(vars, i + 1, left - e, cur, out, cap)?;
            if e > 0 {
                cur.pop();
            }
        }
        Ok(())
    }
    let mut out = Vec::new();
    rec(vars, 0, d, &mut Vec::new(), &mut out, cap)?;
    Ok(out)
}

/// Monomials supported on the cell variables `vars` with the given row and
/// column sums; these are nonnegative tables with fixed margins.
fn tables_with_margins(vars: &[usize], m: usize, n: usize, key: &[u32], cap: usize) -> Result<Vec<Monomial>> {
    let mut rows: Vec<u32> = key[..m].to_vec();
    let mut cols: Vec<u32> = key[m..m + n].to_vec();
    if rows.iter().sum::<u32>() != cols.iter().sum::<u32>() {
        return Ok(vec![]);
    }
    let cells: Vec<usize> = vars.iter().copied().filter(|&v| v < m * n).collect();
    // remaining capacity of each row/column among cells not yet decided
    let mut row_room = vec![0usize; m];
    let mut col_room = vec![0usize; n];
    for &v in &cells {
        row_room[v / n] += 1;
        col_room[v % n] += 1;
    }

    #[allow(clippy::too_many_arguments)]
    fn rec(
        cells: &[usize],
        i: usize,
        n: usize,
        rows: &mut [u32],
        cols: &mut [u32],
        row_room: &mut [usize],
        col_room: &mut [usize],
        cur: &mut Vec<(usize, u16)>,
        out: &mut Vec<Monomial>,
        cap: usize,
    ) -> Result<()> {
        if i == cells.len() {
            if rows.iter().all(|&r| r == 0) && cols.iter().all(|&c| c == 0) {
                if out.len() >= cap {
                    return Err(Error::memory("monomial basis of a graded piece", cap));
                }
                out.push(Monomial::from_pairs(cur.iter().copied()));
            }
            return Ok(());
        }
        let v = cells[i];
        let (r, c) = (v / n, v % n);
        row_room[r] -= 1;
        col_room[c] -= 1;
        let hi = rows[r].min(cols[c]);
        // the last free cell of a row or column must absorb its whole margin
        let lo = if row_room[r] == 0 {
            rows[r]
        } else if col_room[c] == 0 {
            cols[c]
        } else {
            0
        };
        if lo <= hi && (row_room[r] != 0 || col_room[c] != 0 || rows[r] == cols[c]) {
            for e in (lo..=hi).rev() {
                rows[r] -= e;
                cols[c] -= e;
                if e > 0 {
                    cur.push((v, e as u16));
                }
                let ok = (row_room[r] > 0 || rows[r] == 0) && (col_room[c] > 0 || cols[c] == 0);
                if ok {
                    rec(cells, i + 1, n, rows, cols, row_room, col_room, cur, out, cap)?;
                }
                if e > 0 {
                    cur.pop();
                }
                rows[r] += e;
                cols[c] += e;
            }
        }
        row_room[r] += 1;
        col_room[c] += 1;
        Ok(())
    }

    // rows or columns with a margin but no cells admit no table
    for r in 0..m {
        if rows[r] > 0 && row_room[r] == 0 {
            return Ok(vec![]);
        }
    }
    for c in 0..n {
        if cols[c] > 0 && col_room[c] == 0 {
            return Ok(vec![]);
        }
    }
    let mut out = Vec::new();
    rec(
        &cells,
        0,
        n,
        &mut rows,
        &mut cols,
        &mut row_room,
        &mut col_room,
        &mut Vec::new(),
        &mut out,
        cap,
    )?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn degree_enumeration_counts() {
        let vars: Vec<usize> = (0..5).collect();
        for d in 0..5u32 {
            let ms = monomials_of_degree(&vars, d, 1 << 20).unwrap();
            assert_eq!(ms.len() as u64, binom(5 + d as u64 - 1, d as u64));
            assert!(ms.iter().all(|m| m.degree() == d));
        }
    }

    #[test]
    fn margin_blocks_partition_degree_piece() {
        let ring = Ring::new(3, 3);
        let g = Grading::margin(&ring);
        let vars: Vec<usize> = (0..9).filter(|&v| v != 4).collect();
        let all = monomials_of_degree(&vars, 3, 1 << 20).unwrap();
        let mut keys: Vec<Key> = all.iter().map(|m| g.key(m)).collect();
        keys.sort();
        keys.dedup();
        let mut total = 0;
        for k in &keys {
            let block = g.monomials_with_key(&vars, k, 1 << 20).unwrap();
            assert!(block.iter().all(|m| g.key(m) == *k));
            total += block.len();
        }
        assert_eq!(total, all.len());
    }

    #[test]
    fn fine_key_round_trip() {
        let m = Monomial::from_exponents(&[1, 0, 2]);
        let k = Grading::Fine.key(&m);
        assert_eq!(Grading::Fine.monomials_with_key(&[0, 1, 2], &k, 10).unwrap(), vec![m.clone()]);
        assert!(Grading::Fine.monomials_with_key(&[0, 1], &k, 10).unwrap().is_empty());
    }
}
