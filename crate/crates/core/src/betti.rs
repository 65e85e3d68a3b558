//! Graded Betti numbers of S/I by Koszul homology, an lcm-lattice oracle
//! for monomial ideals, regularity, and the Betti comparison for
//! restricted collections.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::Serialize;

use crate::combinatorics::{Interval, MinorCollection};
use crate::config::Caps;
use crate::error::{Error, Result};
use crate::grading::{Grading, Key};
use crate::groebner::{Ideal, SliceBlock};
use crate::hilbert::UnivariatePoly;
use crate::linalg::{Echelon, SparseVec};
use crate::poly::{coeff, Monomial};

/// β_{i,j}(S/I); zero entries are not stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BettiTable {
    entries: BTreeMap<(usize, u32), u64>,
    /// Some candidate (i, j) beyond the requested bounds was skipped.
    pub truncated: bool,
}

impl BettiTable {
    fn add(&mut self, i: usize, j: u32, v: u64) {
        if v > 0 {
            *self.entries.entry((i, j)).or_insert(0) += v;
        }
    }

    pub fn get(&self, i: usize, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, u32, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &v)| (i, j, v))
    }

    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|k| k.0).max().unwrap_or(0)
    }

    /// max{j − i : β_{i,j} ≠ 0}.
    pub fn regularity(&self) -> i64 {
        self.entries.keys().map(|&(i, j)| j as i64 - i as i64).max().unwrap_or(0)
    }

    /// Σ (−1)^i β_{i,j} z^j, the K-polynomial of S/I.
    pub fn euler_polynomial(&self) -> UnivariatePoly {
        self.entries().fold(UnivariatePoly::zero(), |acc, (i, j, v)| {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            &acc + &UnivariatePoly::term(sign * v as i64, j as usize)
        })
    }

    /// Every entry of `self` is at most the matching entry of `other`.
    pub fn dominated_by(&self, other: &BettiTable) -> bool {
        self.entries().all(|(i, j, v)| v <= other.get(i, j))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "entries": self.entries().map(|(i, j, v)| [i as u64, j as u64, v]).collect::<Vec<_>>(),
            "projectiveDimension": self.projective_dimension(),
            "regularity": self.regularity(),
            "truncated": self.truncated,
        })
    }

    /// Macaulay-style table: columns by i, rows by j − i.
    pub fn render(&self) -> String {
        let pd = self.projective_dimension();
        let reg = self.regularity().max(0) as usize;
        let cell = |v: u64| if v == 0 { "-".to_string() } else { v.to_string() };
        let width = self.entries.values().map(|v| v.to_string().len()).max().unwrap_or(1).max(5) + 1;
        let mut out = format!("{:>6}", "");
        for i in 0..=pd {
            out.push_str(&format!("{i:>width$}"));
        }
        out.push('\n');
        out.push_str(&format!("{:>6}", "total:"));
        for i in 0..=pd {
            let t: u64 = self.entries().filter(|e| e.0 == i).map(|e| e.2).sum();
            out.push_str(&format!("{t:>width$}"));
        }
        out.push('\n');
        for r in 0..=reg {
            out.push_str(&format!("{:>6}", format!("{r}:")));
            for i in 0..=pd {
                out.push_str(&format!("{:>width$}", cell(self.get(i, (i + r) as u32))));
            }
            out.push('\n');
        }
        out
    }
}

impl Serialize for BettiTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

fn rank(rows: &[SparseVec]) -> usize {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

fn subsets_of_size(items: &[usize], k: usize, cap: usize) -> Result<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(items: &[usize], start: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>, cap: usize) -> Result<()> {
        if cur.len() == k {
            if out.len() >= cap {
                return Err(Error::memory("Koszul chain basis", cap));
            }
            out.push(cur.clone());
            return Ok(());
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            rec(items, i + 1, k, cur, out, cap)?;
            cur.pop();
        }
        Ok(())
    }
    rec(items, 0, k, &mut cur, &mut out, cap)?;
    Ok(out)
}

fn in_monomial_ideal(gens: &[Monomial], m: &Monomial) -> bool {
    gens.iter().any(|g| g.divides(m))
}

fn minimal_monomials(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| (m.degree(), m.clone()));
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

/// The lcm lattice of `gens` without its bottom element.
fn lcm_lattice(gens: &[Monomial], cap: usize) -> Result<BTreeSet<Monomial>> {
    let mut lattice: BTreeSet<Monomial> = gens.iter().cloned().collect();
    let mut frontier: Vec<Monomial> = lattice.iter().cloned().collect();
    while let Some(a) = frontier.pop() {
        for g in gens {
            let l = a.lcm(g);
            if !lattice.contains(&l) {
                if lattice.len() >= cap {
                    return Err(Error::memory("lcm lattice", cap));
                }
                lattice.insert(l.clone());
                frontier.push(l);
            }
        }
    }
    Ok(lattice)
}

/// Fine-graded Betti numbers β_{i,α}(S/J) of a monomial quotient, from the
/// Koszul complex in each multidegree α of the lcm lattice. In degree α the
/// chain group C_i has one basis element per i-subset σ ⊆ supp(α) with
/// x^{α−σ} ∉ J.
pub fn fine_betti_monomial(gens: &[Monomial], caps: &Caps) -> Result<BTreeMap<(usize, Monomial), u64>> {
    let gens = minimal_monomials(gens.to_vec());
    let mut out = BTreeMap::new();
    out.insert((0, Monomial::one()), 1);
    if gens.iter().any(Monomial::is_one) {
        out.clear();
        return Ok(out);
    }
    for alpha in lcm_lattice(&gens, caps.memory_cap)? {
        let support: Vec<usize> = alpha.support().map(|(v, _)| v).collect();
        let mut chains: Vec<Vec<Vec<usize>>> = Vec::new();
        for k in 0..=support.len() {
            let all = subsets_of_size(&support, k, caps.memory_cap)?;
            chains.push(
                all.into_iter()
                    .filter(|s| {
                        let sm = Monomial::product_of(s.iter().copied());
                        !in_monomial_ideal(&gens, &alpha.checked_div(&sm).expect("σ divides α"))
                    })
                    .collect(),
            );
        }
        let index: Vec<HashMap<&[usize], usize>> = chains
            .iter()
            .map(|c| c.iter().enumerate().map(|(i, s)| (s.as_slice(), i)).collect())
            .collect();
        // rank of d_k : C_k → C_{k−1}
        let mut ranks = vec![0usize; support.len() + 2];
        for k in 1..=support.len() {
            let rows: Vec<SparseVec> = chains[k]
                .iter()
                .map(|s| {
                    let mut row: SparseVec = Vec::new();
                    for p in 0..s.len() {
                        let mut face = s.clone();
                        face.remove(p);
                        if let Some(&col) = index[k - 1].get(face.as_slice()) {
                            row.push((col, coeff(if p % 2 == 0 { 1 } else { -1 })));
                        }
                    }
                    row.sort_by_key(|e| e.0);
                    row
                })
                .collect();
            ranks[k] = rank(&rows);
        }
        for k in 0..=support.len() {
            let h = chains[k].len() - ranks[k] - ranks[k + 1];
            if h > 0 {
                out.insert((k, alpha.clone()), h as u64);
            }
        }
    }
    Ok(out)
}

fn monomial_table(gens: &[Monomial], caps: &Caps) -> Result<BettiTable> {
    let mut t = BettiTable::default();
    for ((i, a), v) in fine_betti_monomial(gens, caps)? {
        t.add(i, a.degree(), v);
    }
    Ok(t)
}

/// Koszul complex of S/I in one margin degree, with graded pieces of S/I
/// taken from slice blocks.
struct KoszulBlocks<'a> {
    ideal: &'a Ideal,
    grading: Grading,
    vars: Vec<usize>,
    blocks: HashMap<Key, SliceBlock>,
    caps: &'a Caps,
}

impl<'a> KoszulBlocks<'a> {
    fn block(&mut self, key: &Key) -> Result<&SliceBlock> {
        if !self.blocks.contains_key(key) {
            let b = SliceBlock::new(self.ideal, self.grading, key, self.caps)?;
            self.blocks.insert(key.clone(), b);
        }
        Ok(&self.blocks[key])
    }

    /// Basis of C_i in degree `b`: (σ, standard column) pairs.
    fn chain_basis(&mut self, i: usize, b: &Key) -> Result<Vec<(Vec<usize>, Key, usize)>> {
        let mut out = Vec::new();
        for s in subsets_of_size(&self.vars.clone(), i, self.caps.memory_cap)? {
            let sk = self.grading.key(&Monomial::product_of(s.iter().copied()));
            let Some(rest) = self.grading.sub_key(b, &sk) else {
                continue;
            };
            for col in self.block(&rest)?.standard_monomials() {
                out.push((s.clone(), rest.clone(), col));
            }
            if out.len() > self.caps.memory_cap {
                return Err(Error::memory("Koszul chain basis", self.caps.memory_cap));
            }
        }
        Ok(out)
    }

    /// Rank of d_i : C_i(b) → C_{i−1}(b).
    fn differential_rank(&mut self, i: usize, b: &Key, source: &[(Vec<usize>, Key, usize)], target: &[(Vec<usize>, Key, usize)]) -> Result<usize> {
        if i == 0 || source.is_empty() || target.is_empty() {
            return Ok(0);
        }
        let index: HashMap<(&[usize], usize), usize> =
            target.iter().enumerate().map(|(p, (s, _, c))| ((s.as_slice(), *c), p)).collect();
        let mut rows = Vec::with_capacity(source.len());
        for (s, key, col) in source {
            let m = self.block(key)?.monomials()[*col].clone();
            let mut acc: BTreeMap<usize, crate::Coeff> = BTreeMap::new();
            for p in 0..s.len() {
                let mut face = s.clone();
                let x = face.remove(p);
                let fk = self.grading.key(&Monomial::product_of(face.iter().copied()));
                let tkey = self.grading.sub_key(b, &fk).expect("face degree below b");
                let img = m.mul(&Monomial::var(x));
                let block = self.block(&tkey)?;
                let sign = if p % 2 == 0 { coeff(1) } else { coeff(-1) };
                for (c, v) in block.reduce_monomial(&img) {
                    let at = index[&(face.as_slice(), c)];
                    *acc.entry(at).or_insert_with(|| coeff(0)) += &sign * &v;
                }
            }
            rows.push(acc.into_iter().filter(|(_, v)| !num_traits::Zero::is_zero(v)).collect());
        }
        Ok(rank(&rows))
    }

    fn homology(&mut self, i: usize, b: &Key) -> Result<u64> {
        let ci = self.chain_basis(i, b)?;
        if ci.is_empty() {
            return Ok(0);
        }
        let below = if i > 0 { self.chain_basis(i - 1, b)? } else { Vec::new() };
        let above = self.chain_basis(i + 1, b)?;
        let r_out = self.differential_rank(i, b, &ci, &below)?;
        let r_in = self.differential_rank(i + 1, b, &above, &ci)?;
        Ok((ci.len() - r_out - r_in) as u64)
    }
}

/// β_{i,j}(S/I) for a homogeneous ideal, over the variables of its
/// generators. Monomial ideals are resolved in the fine grading directly.
/// Otherwise the candidates (i, b) in the margin grading are the nonzero
/// Betti degrees of the initial ideal, and each is evaluated by Koszul
/// homology of S/I in that degree.
pub fn betti_koszul(i: &Ideal, max_hom: Option<usize>, max_deg: Option<u32>, caps: &Caps) -> Result<BettiTable> {
    if !i.is_homogeneous() {
        return Err(Error::NotHomogeneous("Betti numbers of an inhomogeneous quotient".into()));
    }
    let ideal = Ideal::new(i.ring(), i.gens().iter().cloned()).with_vars([]);
    let keep = |h: usize, j: u32| max_hom.is_none_or(|mh| h <= mh) && max_deg.is_none_or(|md| j <= md);
    if let Some(gens) = ideal.monomial_gens() {
        let full = monomial_table(&gens, caps)?;
        let mut t = BettiTable::default();
        for (h, j, v) in full.entries() {
            if keep(h, j) {
                t.add(h, j, v);
            } else {
                t.truncated = true;
            }
        }
        return Ok(t);
    }
    let ring = ideal.ring();
    let grading = Grading::margin(&ring);
    let gb = ideal.default_gb(caps)?;
    let initial = fine_betti_monomial(gb.leading_monomials(), caps)?;
    let candidates: BTreeSet<(usize, Key)> = initial.keys().map(|(h, a)| (*h, grading.key(a))).collect();
    let mut k = KoszulBlocks {
        ideal: &ideal,
        grading,
        vars: ideal.vars().to_vec(),
        blocks: HashMap::new(),
        caps,
    };
    let mut t = BettiTable::default();
    for (h, b) in candidates {
        let j = grading.degree_of(&b);
        if !keep(h, j) {
            t.truncated = true;
            continue;
        }
        let v = k.homology(h, &b)?;
        t.add(h, j, v);
    }
    Ok(t)
}

/// Betti numbers of a monomial quotient from the lcm lattice:
/// β_{i,b}(S/I) = dim H̃_{i−2}(X_{<b}), where X_{<b} is the complex of
/// generator subsets whose lcm strictly divides b.
pub fn taylor_betti(i: &Ideal, caps: &Caps) -> Result<BettiTable> {
    let gens = i
        .monomial_gens()
        .ok_or_else(|| Error::Precondition("lcm-lattice Betti numbers need monomial generators".into()))?;
    let gens = minimal_monomials(gens);
    if gens.len() > 16 {
        return Err(Error::resource("generators for the lcm-lattice oracle", 16));
    }
    let mut t = BettiTable::default();
    t.add(0, 0, 1);
    for b in lcm_lattice(&gens, caps.memory_cap)? {
        let below: Vec<usize> = (0..gens.len()).filter(|&g| gens[g].divides(&b)).collect();
        // faces by size, as bitmasks over `below`
        let nb = below.len();
        let mut faces: Vec<Vec<u32>> = vec![Vec::new(); nb + 1];
        for mask in 0u32..1 << nb {
            let l = (0..nb)
                .filter(|k| mask >> k & 1 == 1)
                .fold(Monomial::one(), |acc, k| acc.lcm(&gens[below[k]]));
            if l != b {
                faces[mask.count_ones() as usize].push(mask);
            }
        }
        let index: Vec<HashMap<u32, usize>> = faces
            .iter()
            .map(|f| f.iter().enumerate().map(|(p, &m)| (m, p)).collect())
            .collect();
        let mut ranks = vec![0usize; nb + 2];
        for k in 1..=nb {
            let rows: Vec<SparseVec> = faces[k]
                .iter()
                .map(|&mask| {
                    let mut row: SparseVec = Vec::new();
                    let mut p = 0;
                    for bit in 0..nb {
                        if mask >> bit & 1 == 1 {
                            if let Some(&col) = index[k - 1].get(&(mask & !(1 << bit))) {
                                row.push((col, coeff(if p % 2 == 0 { 1 } else { -1 })));
                            }
                            p += 1;
                        }
                    }
                    row.sort_by_key(|e| e.0);
                    row
                })
                .collect();
            ranks[k] = rank(&rows);
        }
        // faces of size k carry H̃_{k−1}, which is β_{k+1, b}
        for k in 0..=nb {
            let h = faces[k].len() - ranks[k] - ranks[k + 1];
            t.add(k + 1, b.degree(), h as u64);
        }
    }
    Ok(t)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RegularityReport {
    pub regularity: i64,
    /// True when the Betti table was computed without truncation.
    pub certified: bool,
    pub table: BettiTable,
}

pub fn regularity_of(i: &Ideal, caps: &Caps) -> Result<RegularityReport> {
    let table = betti_koszul(i, None, None, caps)?;
    Ok(RegularityReport {
        regularity: table.regularity(),
        certified: !table.truncated,
        table,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BettiComparison {
    pub power: u32,
    pub removed: Vec<String>,
    pub full: BettiTable,
    pub restricted: BettiTable,
    /// (i, j, restricted, full) wherever the restricted entry is larger.
    pub violations: Vec<(usize, u32, u64, u64)>,
    pub holds: bool,
}

/// Compares β(S/I(C')^t) with β(S/I(C)^t) where C' drops every minor
/// meeting the interval `h`.
pub fn betti_comparison(c: &MinorCollection, h: &Interval, t: u32, caps: &Caps) -> Result<BettiComparison> {
    if t == 0 {
        return Err(Error::Validation("power must be at least 1".into()));
    }
    let restricted = c.restrict_away(&h.cells);
    let removed = c
        .minors()
        .iter()
        .filter(|d| !restricted.minors().contains(d))
        .map(|d| d.to_string())
        .collect();
    let full = betti_koszul(&c.ideal().power(t), None, None, caps)?;
    let small = if restricted.is_empty() {
        let mut b = BettiTable::default();
        b.add(0, 0, 1);
        b
    } else {
        betti_koszul(&restricted.ideal().power(t), None, None, caps)?
    };
    let violations: Vec<(usize, u32, u64, u64)> = small
        .entries()
        .filter(|&(i, j, v)| v > full.get(i, j))
        .map(|(i, j, v)| (i, j, v, full.get(i, j)))
        .collect();
    Ok(BettiComparison {
        power: t,
        removed,
        holds: violations.is_empty(),
        full,
        restricted: small,
        violations,
    })
}
