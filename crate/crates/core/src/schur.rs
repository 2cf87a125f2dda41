//! The virtual representation ring of GL(n): Littlewood-Richardson products,
//! duals, Weyl dimensions, and the plethysm S^t(Λ²) needed for pushforwards.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::weights::DominantWeight;
use crate::Error;

/// A formal integer combination of dominant weights of GL(n).
///
/// Multiplicities are signed so that Euler characteristics live in the same
/// ring; zero multiplicities are never stored, and keys are kept in
/// lexicographic order for deterministic serialization.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VirtualRep {
    rank: usize,
    terms: BTreeMap<DominantWeight, BigInt>,
}

impl VirtualRep {
    pub fn zero(rank: usize) -> Self {
        VirtualRep {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn trivial(rank: usize) -> Self {
        Self::single(DominantWeight::zero(rank), BigInt::one())
    }

    pub fn single(weight: DominantWeight, mult: BigInt) -> Self {
        let mut rep = VirtualRep::zero(weight.rank());
        rep.add_term(weight, mult);
        rep
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_trivial_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&DominantWeight::zero(self.rank))
                .is_some_and(|m| m.is_one())
    }

    /// All stored multiplicities are positive.
    pub fn is_effective(&self) -> bool {
        self.terms.values().all(|m| m.is_positive())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&DominantWeight, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn mult(&self, weight: &DominantWeight) -> BigInt {
        self.terms.get(weight).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, weight: DominantWeight, mult: BigInt) {
        assert_eq!(weight.rank(), self.rank, "weight rank must match rep rank");
        if mult.is_zero() {
            return;
        }
        match self.terms.entry(weight) {
            Entry::Vacant(v) => {
                v.insert(mult);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += mult;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &VirtualRep) -> Result<VirtualRep, Error> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (w, m) in other.terms() {
            out.add_term(w.clone(), m.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &VirtualRep) -> Result<VirtualRep, Error> {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn scale(&self, c: &BigInt) -> VirtualRep {
        if c.is_zero() {
            return VirtualRep::zero(self.rank);
        }
        VirtualRep {
            rank: self.rank,
            terms: self.terms.iter().map(|(w, m)| (w.clone(), m * c)).collect(),
        }
    }

    /// Termwise dual: a linear involution preserving dimensions.
    pub fn dualize(&self) -> VirtualRep {
        let mut out = VirtualRep::zero(self.rank);
        for (w, m) in self.terms() {
            out.add_term(w.dual(), m.clone());
        }
        out
    }

    /// Ring product, bilinear over [`lr_product`].
    pub fn tensor(&self, other: &VirtualRep) -> Result<VirtualRep, Error> {
        self.check_rank(other)?;
        let mut out = VirtualRep::zero(self.rank);
        for (wa, ma) in self.terms() {
            for (wb, mb) in other.terms() {
                let prod = lr_product(wa, wb)?.scale(&(ma * mb));
                out = out.add(&prod)?;
            }
        }
        Ok(out)
    }

    /// Signed dimension Σ mult·dim.
    pub fn dimension(&self) -> BigInt {
        self.terms.iter().map(|(w, m)| m * weyl_dimension(w)).sum()
    }

    fn check_rank(&self, other: &VirtualRep) -> Result<(), Error> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        Ok(())
    }
}

impl fmt::Display for VirtualRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, m) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if m.is_one() {
                write!(f, "S[{w}]")?;
            } else {
                write!(f, "{m}*S[{w}]")?;
            }
        }
        Ok(())
    }
}

impl Serialize for VirtualRep {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct TermEntry<'a> {
            weight: &'a DominantWeight,
            mult: String,
        }
        let terms: Vec<TermEntry> = self
            .terms
            .iter()
            .map(|(w, m)| TermEntry {
                weight: w,
                mult: m.to_string(),
            })
            .collect();
        let mut s = serializer.serialize_struct("VirtualRep", 2)?;
        s.serialize_field("rank", &self.rank)?;
        s.serialize_field("terms", &terms)?;
        s.end()
    }
}

/// Weyl dimension formula: dim Σ^λ(C^n) = Π_{i<j} (λ_i − λ_j + j − i)/(j − i).
///
/// Determinant twists do not change the dimension, so negative entries are
/// handled directly (the formula only sees differences).
pub fn weyl_dimension(w: &DominantWeight) -> BigInt {
    let e = w.entries();
    let n = e.len();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..n {
        for j in (i + 1)..n {
            let gap = (j - i) as i64;
            num *= BigInt::from(e[i] - e[j] + gap);
            den *= BigInt::from(gap);
        }
    }
    num / den
}

/// Σ^λ ⊗ Σ^μ = ⊕ c^ν_{λμ} Σ^ν by enumerating Littlewood-Richardson skew
/// tableaux; ν with more than n rows vanish for GL(n) and are dropped.
///
/// Weights with negative entries are det-normalized first: the combinatorics
/// runs on partitions and the shift is restored on the output.
pub fn lr_product(lambda: &DominantWeight, mu: &DominantWeight) -> Result<VirtualRep, Error> {
    if lambda.rank() != mu.rank() {
        return Err(Error::RankMismatch {
            left: lambda.rank(),
            right: mu.rank(),
        });
    }
    let n = lambda.rank();
    let shift_l = *lambda.entries().last().unwrap();
    let shift_m = *mu.entries().last().unwrap();
    let pl: Vec<i64> = lambda.entries().iter().map(|a| a - shift_l).collect();
    let pm: Vec<i64> = mu.entries().iter().map(|a| a - shift_m).collect();

    let table = lr_partition_table(&trim(&pl), &trim(&pm), n);
    let mut out = VirtualRep::zero(n);
    for (nu, c) in table.iter() {
        let mut entries = nu.clone();
        entries.resize(n, 0);
        let weight = DominantWeight::new(entries.iter().map(|a| a + shift_l + shift_m).collect())
            .expect("LR output is a partition");
        out.add_term(weight, c.clone());
    }
    Ok(out)
}

fn trim(p: &[i64]) -> Vec<i64> {
    let mut v = p.to_vec();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

type LrTable = BTreeMap<Vec<i64>, BigInt>;
type LrKey = (Vec<i64>, Vec<i64>, usize);

fn lr_cache() -> &'static RwLock<HashMap<LrKey, Arc<LrTable>>> {
    static CACHE: OnceLock<RwLock<HashMap<LrKey, Arc<LrTable>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Product of two straight partitions with at most `max_rows` rows kept.
/// Cached; concurrent fills of the same key recompute the same value, so the
/// cache is observationally transparent.
fn lr_partition_table(lambda: &[i64], mu: &[i64], max_rows: usize) -> Arc<LrTable> {
    let key = (lambda.to_vec(), mu.to_vec(), max_rows);
    if let Some(hit) = lr_cache().read().expect("lr cache poisoned").get(&key) {
        return Arc::clone(hit);
    }
    let mut search = LrSearch::new(lambda, mu, max_rows);
    search.batch(0, &vec![0; max_rows]);
    let table = Arc::new(search.out);
    lr_cache()
        .write()
        .expect("lr cache poisoned")
        .insert(key, Arc::clone(&table));
    table
}

/// Backtracking enumeration of LR skew tableaux: boxes labeled by the row of
/// μ they come from are appended to λ row by row subject to the semistandard
/// and lattice constraints. Every completed tableau is re-checked from
/// scratch (`certify`), so the enumeration certifies its own output.
struct LrSearch {
    max_rows: usize,
    mu: Vec<i64>,
    base: Vec<i64>,
    shape: Vec<i64>,
    rows: Vec<Vec<usize>>,
    out: LrTable,
}

impl LrSearch {
    fn new(lambda: &[i64], mu: &[i64], max_rows: usize) -> Self {
        assert!(lambda.len() <= max_rows, "λ must fit in the row bound");
        let mut base = lambda.to_vec();
        base.resize(max_rows, 0);
        LrSearch {
            max_rows,
            mu: mu.to_vec(),
            base: base.clone(),
            shape: base,
            rows: vec![Vec::new(); max_rows],
            out: BTreeMap::new(),
        }
    }

    fn batch(&mut self, label: usize, prev_prefix: &[i64]) {
        if label == self.mu.len() {
            self.record();
            return;
        }
        let start = self.shape.clone();
        let mut counts = vec![0i64; self.max_rows];
        let remaining = self.mu[label];
        self.place(label, 0, remaining, 0, &start, prev_prefix, &mut counts);
    }

    #[allow(clippy::too_many_arguments)]
    fn place(
        &mut self,
        label: usize,
        row: usize,
        remaining: i64,
        cum: i64,
        start: &[i64],
        prev_prefix: &[i64],
        counts: &mut Vec<i64>,
    ) {
        if remaining == 0 {
            let mut prefix = vec![0i64; self.max_rows];
            let mut acc = 0;
            for r in 0..self.max_rows {
                acc += counts[r];
                prefix[r] = acc;
            }
            self.batch(label + 1, &prefix);
            return;
        }
        if row >= self.max_rows {
            return;
        }
        // column-strictness: boxes in this row may not stick out past the
        // filled part of the row above (row 0 is unbounded)
        let strip_room = if row == 0 {
            remaining
        } else {
            (start[row - 1] - self.shape[row]).max(0).min(remaining)
        };
        // lattice: cumulative count of this label through row `row` may not
        // exceed the previous label's count through row `row`-1
        let lattice_room = if label == 0 {
            remaining
        } else if row == 0 {
            0
        } else {
            (prev_prefix[row - 1] - cum).max(0).min(remaining)
        };
        let room = strip_room.min(lattice_room);
        for c in 0..=room {
            if c > 0 {
                self.shape[row] += 1;
                self.rows[row].push(label);
                counts[row] += 1;
            }
            self.place(
                label,
                row + 1,
                remaining - c,
                cum + c,
                start,
                prev_prefix,
                counts,
            );
            // undo handled after loop; apply incremental c one box at a time
        }
        // backtrack all boxes placed in this row
        let placed = counts[row];
        self.shape[row] -= placed;
        counts[row] = 0;
        for _ in 0..placed {
            self.rows[row].pop();
        }
    }

    fn record(&mut self) {
        self.certify();
        let nu = trim(&self.shape);
        *self.out.entry(nu).or_default() += 1;
    }

    /// Re-checks the completed filling: semistandard rows and columns, and
    /// the reverse reading word lattice condition.
    fn certify(&self) {
        for r in 0..self.max_rows {
            assert!(self.rows[r].windows(2).all(|w| w[0] <= w[1]), "rows sorted");
            assert_eq!(self.base[r] + self.rows[r].len() as i64, self.shape[r]);
            if r > 0 {
                for (idx, &label) in self.rows[r].iter().enumerate() {
                    let col = self.base[r] + idx as i64;
                    assert!(col < self.shape[r - 1], "shape must stay a partition");
                    if col >= self.base[r - 1] {
                        let above = self.rows[r - 1][(col - self.base[r - 1]) as usize];
                        assert!(above < label, "columns must be strict");
                    }
                }
            }
        }
        let mut counts = vec![0i64; self.mu.len() + 1];
        for r in 0..self.max_rows {
            for &label in self.rows[r].iter().rev() {
                counts[label] += 1;
                if label > 0 {
                    assert!(counts[label] <= counts[label - 1], "lattice word violated");
                }
            }
        }
    }
}

/// The exponents of S^t(Λ²E) for E of rank r: all partitions of 2t with at
/// most r parts whose conjugate has only even parts, padded to length r.
///
/// Even-conjugate partitions are exactly those whose parts pair up, so they
/// are generated by doubling the partitions of t with at most ⌊r/2⌋ parts.
pub fn sym_power_of_wedge2(t: usize, r: usize) -> Vec<DominantWeight> {
    assert!(r >= 2, "Λ² needs rank at least 2");
    let mut out = Vec::new();
    for p in partitions_at_most(t, r / 2) {
        let mut doubled = Vec::with_capacity(r);
        for part in &p {
            doubled.push(*part);
            doubled.push(*part);
        }
        doubled.resize(r, 0);
        out.push(DominantWeight::new(doubled).expect("doubled partition is dominant"));
    }
    out.sort();
    out.reverse();
    out
}

/// Partitions of `total` with at most `parts` parts, nonincreasing.
pub fn partitions_at_most(total: usize, parts: usize) -> Vec<Vec<i64>> {
    fn rec(
        total: i64,
        parts: usize,
        max_part: i64,
        prefix: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
    ) {
        if total == 0 {
            out.push(prefix.clone());
            return;
        }
        if parts == 0 {
            return;
        }
        let top = max_part.min(total);
        for part in (1..=top).rev() {
            prefix.push(part);
            rec(total - part, parts - 1, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(total as i64, parts, total as i64, &mut Vec::new(), &mut out);
    if total == 0 {
        return vec![vec![]];
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dw(entries: &[i64]) -> DominantWeight {
        DominantWeight::new(entries.to_vec()).unwrap()
    }

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn lr_standard_square() {
        // (1,0)⊗(1,0) = S² + Λ² for GL(2)
        let p = lr_product(&dw(&[1, 0]), &dw(&[1, 0])).unwrap();
        assert_eq!(p.mult(&dw(&[2, 0])), big(1));
        assert_eq!(p.mult(&dw(&[1, 1])), big(1));
        assert_eq!(p.num_terms(), 2);
    }

    #[test]
    fn lr_wedge2_square_gl4() {
        let p = lr_product(&dw(&[1, 1, 0, 0]), &dw(&[1, 1, 0, 0])).unwrap();
        assert_eq!(p.mult(&dw(&[2, 2, 0, 0])), big(1));
        assert_eq!(p.mult(&dw(&[2, 1, 1, 0])), big(1));
        assert_eq!(p.mult(&dw(&[1, 1, 1, 1])), big(1));
        assert_eq!(p.num_terms(), 3);
        // 6·6 = 20 + 15 + 1
        assert_eq!(p.dimension(), big(36));
    }

    #[test]
    fn lr_unit() {
        let lam = dw(&[3, 1, 0]);
        let p = lr_product(&lam, &dw(&[0, 0, 0])).unwrap();
        assert_eq!(p, VirtualRep::single(lam, big(1)));
    }

    #[test]
    fn lr_with_negative_entries() {
        // V ⊗ V* = ad ⊕ trivial for GL(2)
        let p = lr_product(&dw(&[1, 0]), &dw(&[0, -1])).unwrap();
        assert_eq!(p.mult(&dw(&[1, -1])), big(1));
        assert_eq!(p.mult(&dw(&[0, 0])), big(1));
        assert_eq!(p.num_terms(), 2);
    }

    #[test]
    fn tensor_is_bilinear() {
        let v = VirtualRep::single(dw(&[1, 0]), big(1));
        let triv = VirtualRep::trivial(2);
        let a = v.sub(&triv).unwrap();
        assert_eq!(a.tensor(&triv).unwrap(), a);
        let zero = VirtualRep::zero(2);
        assert_eq!(zero.tensor(&a).unwrap(), zero);
    }

    #[test]
    fn weyl_dimensions() {
        assert_eq!(weyl_dimension(&dw(&[1, 1, 0, 0, 0, 0])), big(15));
        assert_eq!(weyl_dimension(&dw(&[1, 1, 1, 1, 1, 1])), big(1));
        assert_eq!(weyl_dimension(&dw(&[2, 2, 0, 0])), big(20));
        // det twist invariance
        assert_eq!(weyl_dimension(&dw(&[2, 2, 0, 0]).det_shift(-3)), big(20));
    }

    #[test]
    fn dualize_is_linear_involution() {
        let mut rep = VirtualRep::zero(3);
        rep.add_term(dw(&[1, 0, 0]), big(2));
        rep.add_term(dw(&[2, 1, 0]), big(1));
        let dual = rep.dualize();
        assert_eq!(dual.mult(&dw(&[0, 0, -1])), big(2));
        assert_eq!(dual.mult(&dw(&[0, -1, -2])), big(1));
        assert_eq!(dual.dualize(), rep);
        assert_eq!(dual.dimension(), rep.dimension());
    }

    #[test]
    fn plethysm_exponents() {
        let t2 = sym_power_of_wedge2(2, 4);
        assert_eq!(t2, vec![dw(&[2, 2, 0, 0]), dw(&[1, 1, 1, 1])]);
        let t1 = sym_power_of_wedge2(1, 4);
        assert_eq!(t1, vec![dw(&[1, 1, 0, 0])]);
        // rank 2: only the doubled row survives
        let t3 = sym_power_of_wedge2(3, 2);
        assert_eq!(t3, vec![dw(&[3, 3])]);
    }

    #[test]
    fn partition_generator() {
        assert_eq!(partitions_at_most(0, 3), vec![Vec::<i64>::new()]);
        let p4 = partitions_at_most(4, 2);
        assert_eq!(p4.len(), 3); // 4, 3+1, 2+2
    }
}
