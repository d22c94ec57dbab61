//! Pattern bases: Gelfand–Tsetlin patterns for `gl(n)` and the signed,
//! primed patterns used for `o(2n+1)`.
//!
//! Levels `k` and positions `i` are 1-based throughout, matching the usual
//! way the patterns are written down. Row `k` has `k` entries.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::arith::{half, int, HalfInt, Rational};
use crate::Error;

// ---------------------------------------------------------------------------
// gl(n)
// ---------------------------------------------------------------------------

/// Highest weight `(λ_1, …, λ_n)` with `λ_i − λ_{i+1}` a non-negative
/// integer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlHighestWeight {
    entries: Vec<Rational>,
}

impl GlHighestWeight {
    pub fn new(entries: Vec<Rational>) -> Result<Self, Error> {
        if entries.is_empty() {
            return Err(Error::InvalidWeight("rank must be at least 1".into()));
        }
        for (i, w) in entries.windows(2).enumerate() {
            let d = &w[0] - &w[1];
            if !d.is_integer() || d.is_negative() {
                return Err(Error::InvalidWeight(format!(
                    "entries {} and {} must differ by a non-negative integer, got {} and {}",
                    i + 1,
                    i + 2,
                    w[0],
                    w[1]
                )));
            }
        }
        Ok(GlHighestWeight { entries })
    }

    pub fn parse<S: AsRef<str>>(entries: &[S]) -> Result<Self, Error> {
        let v = entries
            .iter()
            .map(|s| crate::arith::parse_rational(s.as_ref()))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(v)
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    /// `l_i = λ_i − i + 1`.
    pub fn l_values(&self) -> Vec<Rational> {
        self.entries
            .iter()
            .enumerate()
            .map(|(i, x)| x - int(i as i64))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }
}

/// A Gelfand–Tsetlin pattern; `rows[k-1]` is row `k`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct GtPatternA {
    rows: Vec<Vec<Rational>>,
}

impl GtPatternA {
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        GtPatternA { rows }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn entry(&self, k: usize, i: usize) -> &Rational {
        &self.rows[k - 1][i - 1]
    }

    /// `l_{ki} = λ_{ki} − i + 1`.
    pub fn l(&self, k: usize, i: usize) -> Rational {
        self.entry(k, i) - int(i as i64 - 1)
    }

    /// The array with `λ_{ki}` replaced by `λ_{ki} + d`, not checked.
    pub fn shifted(&self, k: usize, i: usize, d: i64) -> GtPatternA {
        let mut p = self.clone();
        p.rows[k - 1][i - 1] += int(d);
        p
    }

    pub fn is_valid(&self, hw: &GlHighestWeight) -> bool {
        let n = hw.rank();
        if self.rows.len() != n || self.rows[n - 1] != hw.entries {
            return false;
        }
        for k in 2..=n {
            let (up, low) = (&self.rows[k - 1], &self.rows[k - 2]);
            if low.len() != k - 1 {
                return false;
            }
            for i in 0..k - 1 {
                let a = &up[i] - &low[i];
                let b = &low[i] - &up[i + 1];
                if !a.is_integer() || a.is_negative() || !b.is_integer() || b.is_negative() {
                    return false;
                }
            }
        }
        true
    }

    /// Eigenvalues of `E_kk`: row sum of `k` minus row sum of `k − 1`.
    pub fn weight(&self) -> Vec<Rational> {
        let sums: Vec<Rational> = self
            .rows
            .iter()
            .map(|r| r.iter().fold(Rational::zero(), |a, b| a + b))
            .collect();
        (0..sums.len())
            .map(|k| {
                if k == 0 {
                    sums[0].clone()
                } else {
                    &sums[k] - &sums[k - 1]
                }
            })
            .collect()
    }
}

/// All patterns with top row `hw`, ordered lexicographically on
/// `(row n−1, row n−2, …, row 1)`.
pub fn enumerate_patterns_a(hw: &GlHighestWeight) -> Vec<GtPatternA> {
    let n = hw.rank();
    let mut out = Vec::new();
    let mut rows = vec![Vec::new(); n];
    rows[n - 1] = hw.entries.clone();
    descend_a(n - 1, &mut rows, &mut out);
    out
}

fn descend_a(k: usize, rows: &mut Vec<Vec<Rational>>, out: &mut Vec<GtPatternA>) {
    if k == 0 {
        out.push(GtPatternA { rows: rows.clone() });
        return;
    }
    // row k (1-based) lies between entries of row k + 1
    let upper = rows[k].clone();
    let ranges: Vec<(Rational, usize)> = (0..k)
        .map(|i| {
            let len = (&upper[i] - &upper[i + 1])
                .to_integer()
                .to_usize()
                .unwrap_or(0);
            (upper[i + 1].clone(), len + 1)
        })
        .collect();
    let mut row = vec![Rational::zero(); k];
    fill_row_a(0, &ranges, &mut row, k, rows, out);
}

fn fill_row_a(
    i: usize,
    ranges: &[(Rational, usize)],
    row: &mut Vec<Rational>,
    k: usize,
    rows: &mut Vec<Vec<Rational>>,
    out: &mut Vec<GtPatternA>,
) {
    if i == ranges.len() {
        rows[k - 1] = row.clone();
        descend_a(k - 1, rows, out);
        return;
    }
    let (lo, count) = &ranges[i];
    for step in 0..*count {
        row[i] = lo + int(step as i64);
        fill_row_a(i + 1, ranges, row, k, rows, out);
    }
}

// ---------------------------------------------------------------------------
// o(2n+1)
// ---------------------------------------------------------------------------

/// Highest weight for `o(2n+1)`: `0 ≥ λ_1 ≥ … ≥ λ_n`, all integers or all
/// half-integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SoHighestWeight {
    entries: Vec<HalfInt>,
}

impl SoHighestWeight {
    pub fn new(entries: Vec<HalfInt>) -> Result<Self, Error> {
        if entries.is_empty() {
            return Err(Error::InvalidWeight("rank must be at least 1".into()));
        }
        let integer = entries[0].is_integer();
        if entries.iter().any(|e| e.is_integer() != integer) {
            return Err(Error::InvalidWeight(
                "entries must be all integers or all half-integers".into(),
            ));
        }
        if entries[0].is_positive() {
            return Err(Error::InvalidWeight(format!(
                "first entry {} must be <= 0",
                entries[0]
            )));
        }
        for (i, w) in entries.windows(2).enumerate() {
            if w[1] > w[0] {
                return Err(Error::InvalidWeight(format!(
                    "entries must be non-increasing: entry {} is {} but entry {} is {}",
                    i + 1,
                    w[0],
                    i + 2,
                    w[1]
                )));
            }
        }
        Ok(SoHighestWeight { entries })
    }

    pub fn parse<S: AsRef<str>>(entries: &[S]) -> Result<Self, Error> {
        let v = entries
            .iter()
            .map(|s| HalfInt::parse(s.as_ref()))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(v)
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[HalfInt] {
        &self.entries
    }

    pub fn is_integer(&self) -> bool {
        self.entries[0].is_integer()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.doubled().is_zero())
    }
}

/// A pattern for `o(2n+1)`: bits `σ_k`, unprimed rows `λ_{k·}` and primed
/// rows `λ'_{k·}` for `k = 1..n`.
///
/// The same type also carries arbitrary shifted arrays that are not valid
/// patterns; validity is decided by [`PatternB::is_valid`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PatternB {
    sigma: Vec<u8>,
    rows: Vec<Vec<HalfInt>>,
    primed: Vec<Vec<HalfInt>>,
}

/// Which entry of a [`PatternB`] a quantity refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Slot {
    Unprimed { k: usize, i: usize },
    Primed { k: usize, i: usize },
}

impl PatternB {
    pub fn from_parts(sigma: Vec<u8>, rows: Vec<Vec<HalfInt>>, primed: Vec<Vec<HalfInt>>) -> Self {
        PatternB {
            sigma,
            rows,
            primed,
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn sigma(&self, k: usize) -> u8 {
        self.sigma[k - 1]
    }

    pub fn sigmas(&self) -> &[u8] {
        &self.sigma
    }

    pub fn rows(&self) -> &[Vec<HalfInt>] {
        &self.rows
    }

    pub fn primed_rows(&self) -> &[Vec<HalfInt>] {
        &self.primed
    }

    pub fn unprimed(&self, k: usize, i: usize) -> &HalfInt {
        &self.rows[k - 1][i - 1]
    }

    pub fn primed(&self, k: usize, i: usize) -> &HalfInt {
        &self.primed[k - 1][i - 1]
    }

    pub fn get(&self, slot: Slot) -> &HalfInt {
        match slot {
            Slot::Unprimed { k, i } => self.unprimed(k, i),
            Slot::Primed { k, i } => self.primed(k, i),
        }
    }

    /// `l_{ki} = λ_{ki} − i + 1/2`, with `l_{k0} = −1/2`.
    pub fn l(&self, k: usize, i: usize) -> Rational {
        if i == 0 {
            return -half();
        }
        self.unprimed(k, i).to_rational() - int(i as i64) + half()
    }

    /// `l'_{ki} = λ'_{ki} − i + 1/2`.
    pub fn lp(&self, k: usize, i: usize) -> Rational {
        self.primed(k, i).to_rational() - int(i as i64) + half()
    }

    pub fn shift_unprimed(&self, k: usize, i: usize, d: i64) -> PatternB {
        let mut p = self.clone();
        p.rows[k - 1][i - 1] = p.rows[k - 1][i - 1].offset(d);
        p
    }

    pub fn shift_primed(&self, k: usize, i: usize, d: i64) -> PatternB {
        let mut p = self.clone();
        p.primed[k - 1][i - 1] = p.primed[k - 1][i - 1].offset(d);
        p
    }

    /// Toggle `σ_k`; `k = 0` is a no-op so that level-1 formulas can refer to
    /// a nonexistent `σ_0`.
    pub fn flip(&self, k: usize) -> PatternB {
        let mut p = self.clone();
        if k > 0 {
            p.sigma[k - 1] ^= 1;
        }
        p
    }

    /// Whether the array satisfies every pattern condition for `hw`.
    pub fn is_valid(&self, hw: &SoHighestWeight) -> bool {
        let n = hw.rank();
        if self.rows.len() != n
            || self.primed.len() != n
            || self.sigma.len() != n
            || self.rows[n - 1] != hw.entries
        {
            return false;
        }
        let integer = hw.is_integer();
        for k in 1..=n {
            if self.sigma[k - 1] > 1 || self.rows[k - 1].len() != k || self.primed[k - 1].len() != k
            {
                return false;
            }
            let (row, pr) = (&self.rows[k - 1], &self.primed[k - 1]);
            for v in row.iter().chain(pr) {
                if v.is_positive() || v.is_integer() != integer {
                    return false;
                }
            }
            for i in 0..k {
                if pr[i] < row[i] || (i + 1 < k && row[i] < pr[i + 1]) {
                    return false;
                }
            }
            if k >= 2 {
                let below = &self.rows[k - 2];
                if below.len() != k - 1 {
                    return false;
                }
                for i in 0..k - 1 {
                    if pr[i] < below[i] || below[i] < pr[i + 1] {
                        return false;
                    }
                }
            }
            if integer && self.sigma[k - 1] == 1 && pr[0] > HalfInt::from_int(-1) {
                return false;
            }
        }
        true
    }

    fn row_sum(row: &[HalfInt]) -> Rational {
        row.iter()
            .fold(Rational::zero(), |a, v| a + v.to_rational())
    }

    /// Eigenvalue of `F_kk`: `σ_k + 2 Σ λ'_{k·} − Σ λ_{k·} − Σ λ_{k−1,·}`.
    pub fn weight_component(&self, k: usize) -> Rational {
        let mut w = int(self.sigma[k - 1] as i64) + int(2) * Self::row_sum(&self.primed[k - 1])
            - Self::row_sum(&self.rows[k - 1]);
        if k >= 2 {
            w -= Self::row_sum(&self.rows[k - 2]);
        }
        w
    }

    pub fn weight(&self) -> Vec<Rational> {
        (1..=self.rank())
            .map(|k| self.weight_component(k))
            .collect()
    }

    /// Sort key for the canonical basis order: `σ_n, λ'_n, λ_{n−1}, σ_{n−1},
    /// λ'_{n−1}, …, λ_1, σ_1, λ'_1`, entries compared as numbers.
    pub fn order_key(&self) -> Vec<BigInt> {
        let n = self.rank();
        let mut key = Vec::new();
        for k in (1..=n).rev() {
            if k < n {
                key.extend(self.rows[k - 1].iter().map(|v| v.doubled().clone()));
            }
            key.push(BigInt::from(self.sigma[k - 1]));
            key.extend(self.primed[k - 1].iter().map(|v| v.doubled().clone()));
        }
        key
    }

    /// The pattern of the highest vector: `σ = 0`, every row equal to the
    /// highest weight truncated to its length.
    pub fn highest(hw: &SoHighestWeight) -> PatternB {
        let n = hw.rank();
        let rows: Vec<Vec<HalfInt>> = (1..=n).map(|k| hw.entries[..k].to_vec()).collect();
        PatternB {
            sigma: vec![0; n],
            primed: rows.clone(),
            rows,
        }
    }
}

/// All patterns for `hw`, in canonical order.
pub fn enumerate_patterns_b(hw: &SoHighestWeight) -> Vec<PatternB> {
    let n = hw.rank();
    let mut st = BState {
        integer: hw.is_integer(),
        sigma: vec![0; n],
        rows: (1..=n).map(|k| vec![HalfInt::zero(); k]).collect(),
        primed: (1..=n).map(|k| vec![HalfInt::zero(); k]).collect(),
        out: Vec::new(),
    };
    st.rows[n - 1] = hw.entries.clone();
    st.primed_level(n);
    let mut out = st.out;
    out.sort_by_cached_key(PatternB::order_key);
    out
}

struct BState {
    integer: bool,
    sigma: Vec<u8>,
    rows: Vec<Vec<HalfInt>>,
    primed: Vec<Vec<HalfInt>>,
    out: Vec<PatternB>,
}

impl BState {
    // choose λ'_{k·} given λ_{k·}
    fn primed_level(&mut self, k: usize) {
        self.primed_entry(k, 0);
    }

    fn primed_entry(&mut self, k: usize, i: usize) {
        if i == k {
            for s in 0..=1u8 {
                if s == 1 && self.integer && self.primed[k - 1][0] > HalfInt::from_int(-1) {
                    continue;
                }
                self.sigma[k - 1] = s;
                if k == 1 {
                    self.out.push(PatternB {
                        sigma: self.sigma.clone(),
                        rows: self.rows.clone(),
                        primed: self.primed.clone(),
                    });
                } else {
                    self.unprimed_entry(k - 1, 0);
                }
            }
            return;
        }
        let lo = self.rows[k - 1][i].clone();
        let hi = if i == 0 {
            HalfInt::nonpositive_top(self.integer)
        } else {
            self.rows[k - 1][i - 1].clone()
        };
        let mut v = lo;
        while v <= hi {
            self.primed[k - 1][i] = v.clone();
            self.primed_entry(k, i + 1);
            v = v.offset(1);
        }
    }

    // choose λ_{k·} between the primed row k + 1
    fn unprimed_entry(&mut self, k: usize, i: usize) {
        if i == k {
            self.primed_level(k);
            return;
        }
        let lo = self.primed[k][i + 1].clone();
        let hi = self.primed[k][i].clone();
        let mut v = lo;
        while v <= hi {
            self.rows[k - 1][i] = v.clone();
            self.unprimed_entry(k, i + 1);
            v = v.offset(1);
        }
    }
}

/// Map from pattern to its index in a basis.
pub fn index_of<P: Ord + Clone>(basis: &[P]) -> BTreeMap<P, usize> {
    basis
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, p)| (p, i))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn h(s: &str) -> HalfInt {
        HalfInt::parse(s).unwrap()
    }

    fn so(w: &[&str]) -> SoHighestWeight {
        SoHighestWeight::parse(w).unwrap()
    }

    fn gl(w: &[i64]) -> GlHighestWeight {
        GlHighestWeight::new(w.iter().map(|&v| int(v)).collect()).unwrap()
    }

    fn n1(hw: &SoHighestWeight, s: u8, p: &str) -> PatternB {
        PatternB::from_parts(vec![s], vec![hw.entries().to_vec()], vec![vec![h(p)]])
    }

    #[test]
    fn gl_counts() {
        assert_eq!(enumerate_patterns_a(&gl(&[0, 0, 0])).len(), 1);
        let two = enumerate_patterns_a(&gl(&[1, 0]));
        assert_eq!(two.len(), 2);
        assert_eq!(two[0].entry(1, 1), &int(0));
        assert_eq!(enumerate_patterns_a(&gl(&[2, 1, 0])).len(), 8);
    }

    #[test]
    fn gl_weight_and_l() {
        let hw = gl(&[1, 0]);
        let p = &enumerate_patterns_a(&hw)[1];
        assert_eq!(p.weight(), vec![int(1), int(0)]);
        assert_eq!(p.l(2, 1), int(1));
        assert_eq!(p.l(2, 2), int(-1));
        assert!(!p.shifted(1, 1, 1).is_valid(&hw));
    }

    #[test]
    fn gl_rejects_bad_weights() {
        assert!(GlHighestWeight::new(vec![int(0), int(1)]).is_err());
        assert!(GlHighestWeight::new(vec![rat(1, 2), int(0)]).is_err());
        assert!(GlHighestWeight::new(vec![rat(3, 2), rat(1, 2)]).is_ok());
    }

    #[test]
    fn so_weight_validation() {
        assert!(SoHighestWeight::parse(&["-1", "-1/2"]).is_err());
        assert!(SoHighestWeight::parse(&["1"]).is_err());
        assert!(SoHighestWeight::parse(&["-1", "0"]).is_err());
        assert!(SoHighestWeight::parse(&["0", "-1"]).is_ok());
    }

    #[test]
    fn rank_one_enumeration() {
        let z = so(&["0"]);
        assert_eq!(enumerate_patterns_b(&z), vec![n1(&z, 0, "0")]);

        let s = so(&["-1/2"]);
        assert_eq!(
            enumerate_patterns_b(&s),
            vec![n1(&s, 0, "-1/2"), n1(&s, 1, "-1/2")]
        );

        let v = so(&["-1"]);
        assert_eq!(
            enumerate_patterns_b(&v),
            vec![n1(&v, 0, "-1"), n1(&v, 0, "0"), n1(&v, 1, "-1")]
        );
    }

    #[test]
    fn rank_one_weights() {
        let v = so(&["-1"]);
        assert_eq!(n1(&v, 0, "0").weight(), vec![int(1)]);
        assert_eq!(n1(&v, 0, "-1").weight(), vec![int(-1)]);
        assert_eq!(n1(&v, 1, "-1").weight(), vec![int(0)]);
        let s = so(&["-1/2"]);
        assert_eq!(n1(&s, 0, "-1/2").weight(), vec![rat(-1, 2)]);
        assert_eq!(n1(&s, 1, "-1/2").weight(), vec![rat(1, 2)]);
    }

    #[test]
    fn shifts_and_validity() {
        let v = so(&["-1"]);
        assert!(!n1(&v, 0, "0").flip(1).is_valid(&v));
        let up = n1(&v, 0, "-1").shift_primed(1, 1, 1);
        assert!(up.is_valid(&v));
        assert_eq!(up, n1(&v, 0, "0"));
        assert_eq!(up.shift_primed(1, 1, -1), n1(&v, 0, "-1"));
    }

    #[test]
    fn l_values() {
        let v = so(&["-1"]);
        let p = n1(&v, 0, "0");
        assert_eq!(p.l(1, 1), rat(-3, 2));
        assert_eq!(p.lp(1, 1), rat(-1, 2));
        assert_eq!(p.l(1, 0), rat(-1, 2));
    }

    #[test]
    fn highest_pattern_is_enumerated() {
        for w in [&["0", "-1"][..], &["-1/2", "-3/2"], &["0", "0", "-1"]] {
            let hw = so(w);
            let basis = enumerate_patterns_b(&hw);
            let top = PatternB::highest(&hw);
            assert!(basis.contains(&top));
            let lam: Vec<Rational> = hw.entries().iter().map(HalfInt::to_rational).collect();
            assert_eq!(top.weight(), lam);
        }
    }

    #[test]
    fn every_enumerated_pattern_is_valid_and_unique() {
        for w in [
            &["0", "-1"][..],
            &["-1/2", "-1/2"],
            &["-1", "-2"],
            &["-1/2", "-1/2", "-1/2"],
        ] {
            let hw = so(w);
            let basis = enumerate_patterns_b(&hw);
            assert!(basis.iter().all(|p| p.is_valid(&hw)));
            let keys: Vec<_> = basis.iter().map(PatternB::order_key).collect();
            assert!(keys.windows(2).all(|k| k[0] < k[1]));
        }
    }
}
