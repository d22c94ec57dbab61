//! Irreducible representations of `o(2n+1)` in the pattern basis.
//!
//! `F_kk`, the lowering generators `F_{k-1,-k}` and the auxiliary operators
//! `Φ_{-k,k}` and `Φ_{k-1,-k}(u)` have closed-form matrix elements. The
//! raising generators are obtained from
//!
//! `F_{k-1,k} = Φ_{k-1,-k}(2) Φ_{-k,k} − Φ_{-k,k} Φ_{k-1,-k}(0)`,
//!
//! whose individual terms can have vanishing denominators even though the
//! total is finite. Those columns are recomputed with every pattern entry
//! moved off its value, `x ↦ x + s·ε` with a fixed slope `s` per entry,
//! and the result is specialized at `ε = 0`.
//!
//! Intermediate arrays of the composite are kept even when they are not
//! valid patterns: in the deformed module they are honest basis vectors,
//! and some finite entries are only produced through them. Only final
//! targets are required to be patterns.

use alloc::collections::btree_map::Entry;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::arith::{half, int, Laurent, Rational, RationalFunction, Scalar, UniPoly};
use crate::lie::{close_under_brackets, Algebra, Key, StructureTable};
use crate::linalg::{joint_kernel, Echelon};
use crate::operator::{display_vec, Operator};
use crate::patterns::{enumerate_patterns_b, index_of, PatternB, Slot, SoHighestWeight};
use crate::Error;

// ---------------------------------------------------------------------------
// evaluation of pattern data
// ---------------------------------------------------------------------------

/// How numeric pattern entries are turned into scalars.
pub trait Evaluator {
    type S: Scalar;
    fn entry(&self, p: &PatternB, slot: Slot) -> Self::S;
}

/// Entries taken at face value.
#[derive(Clone, Copy, Debug, Default)]
pub struct Exact;

impl Evaluator for Exact {
    type S = Rational;
    fn entry(&self, p: &PatternB, slot: Slot) -> Rational {
        p.get(slot).to_rational()
    }
}

/// Entries moved to `x + s·ε`, with a slope `s` that depends only on the
/// entry's position and on the profile.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Deformed {
    pub profile: u64,
}

impl Deformed {
    /// Slope in `1..=997` assigned to a position.
    pub fn slope(&self, slot: Slot) -> i64 {
        let (kind, k, i) = match slot {
            Slot::Unprimed { k, i } => (0u64, k as u64, i as u64),
            Slot::Primed { k, i } => (1u64, k as u64, i as u64),
        };
        let mut z = self.profile.wrapping_mul(0x9E37_79B9_7F4A_7C15)
            ^ (kind << 40 | k << 20 | i).wrapping_add(0x632B_E59B_D9B4_E019);
        // splitmix64 finalizer
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^= z >> 31;
        (z % 997) as i64 + 1
    }
}

impl Evaluator for Deformed {
    type S = RationalFunction;
    fn entry(&self, p: &PatternB, slot: Slot) -> RationalFunction {
        RationalFunction::from_poly(UniPoly::linear(
            p.get(slot).to_rational(),
            int(self.slope(slot)),
        ))
    }
}

/// The same deformation expanded as truncated Laurent series of the given
/// order; used to compute limits without rational-function arithmetic.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Expanded {
    pub slopes: Deformed,
    pub order: i64,
}

impl Evaluator for Expanded {
    type S = Laurent;
    fn entry(&self, p: &PatternB, slot: Slot) -> Laurent {
        Laurent::linear(
            p.get(slot).to_rational(),
            int(self.slopes.slope(slot)),
            self.order,
        )
    }
}

/// Series orders tried before giving up on a profile.
const ORDERS: [i64; 5] = [3, 6, 12, 24, 48];

/// The two slope profiles tried, in order.
pub const PROFILES: [Deformed; 2] = [Deformed { profile: 1 }, Deformed { profile: 2 }];

fn c<S: Scalar>(r: Rational) -> S {
    S::from_rational(r)
}

/// `l_{ki} = λ_{ki} − i + 1/2`, `l_{k0} = −1/2`.
pub fn l_value<E: Evaluator>(ev: &E, p: &PatternB, k: usize, i: usize) -> E::S {
    if i == 0 {
        return c(-half());
    }
    ev.entry(p, Slot::Unprimed { k, i })
        .plus_r(&(half() - int(i as i64)))
}

/// `l'_{ki} = λ'_{ki} − i + 1/2`.
pub fn lp_value<E: Evaluator>(ev: &E, p: &PatternB, k: usize, i: usize) -> E::S {
    ev.entry(p, Slot::Primed { k, i })
        .plus_r(&(half() - int(i as i64)))
}

/// Eigenvalue of `F_kk`: `σ_k + 2 Σ λ'_{k·} − Σ λ_{k·} − Σ λ_{k−1,·}`.
pub fn fkk_value<E: Evaluator>(ev: &E, p: &PatternB, k: usize) -> E::S {
    let mut v: E::S = c(int(p.sigma(k) as i64));
    for i in 1..=k {
        let pr = ev.entry(p, Slot::Primed { k, i });
        v = v
            .plus(&pr)
            .plus(&pr)
            .minus(&ev.entry(p, Slot::Unprimed { k, i }));
    }
    for i in 1..k {
        v = v.minus(&ev.entry(p, Slot::Unprimed { k: k - 1, i }));
    }
    v
}

/// `A_{ki} = ∏_{a≠i} 1/(l_{k−1,i} − l_{k−1,a}) · ∏_a 1/(l_{k−1,i} + l_{k−1,a})`,
/// `a` over `1..k−1`, `0 ≤ i ≤ k − 1`.
pub fn coeff_a<E: Evaluator>(ev: &E, p: &PatternB, k: usize, i: usize) -> Result<E::S, Error> {
    let li = l_value(ev, p, k - 1, i);
    let mut r: E::S = c(int(1));
    for a in 1..k {
        let la = l_value(ev, p, k - 1, a);
        if a != i {
            r = r.over(&li.minus(&la))?;
        }
        r = r.over(&li.plus(&la))?;
    }
    Ok(r)
}

/// `B_{ki}(x) = ∏_{a≠i} (x + l'_{ka} + 1)(x − l'_{ka}) / (l'_{ka} − l'_{ki})`.
pub fn coeff_b<E: Evaluator>(
    ev: &E,
    p: &PatternB,
    k: usize,
    i: usize,
    x: &E::S,
) -> Result<E::S, Error> {
    let li = lp_value(ev, p, k, i);
    let mut r: E::S = c(int(1));
    for a in (1..=k).filter(|&a| a != i) {
        let la = lp_value(ev, p, k, a);
        let num = x.plus(&la).plus_r(&int(1)).times(&x.minus(&la));
        r = r.times(&num).over(&la.minus(&li))?;
    }
    Ok(r)
}

/// `C_{ki} = l'_{ki}(1 − 2σ_k − 2l'_{ki}) ∏_a (l_{ka} − l'_{ki})
/// ∏_{a<k} (l_{k−1,a} − l'_{ki}) ∏_{a≠i} 1/(l'_{ka} − l'_{ki})`.
pub fn coeff_c<E: Evaluator>(ev: &E, p: &PatternB, k: usize, i: usize) -> Result<E::S, Error> {
    let li = lp_value(ev, p, k, i);
    let sigma = int(p.sigma(k) as i64);
    let mut r = li.times(&c::<E::S>(int(1) - int(2) * sigma).minus(&li).minus(&li));
    for a in 1..=k {
        r = r.times(&l_value(ev, p, k, a).minus(&li));
    }
    for a in 1..k {
        r = r.times(&l_value(ev, p, k - 1, a).minus(&li));
    }
    for a in (1..=k).filter(|&a| a != i) {
        r = r.over(&lp_value(ev, p, k, a).minus(&li))?;
    }
    Ok(r)
}

// ---------------------------------------------------------------------------
// term expansions
// ---------------------------------------------------------------------------

/// Images of one array under a formula: `(target array, coefficient)`.
type Terms<S> = Vec<(PatternB, S)>;

/// Which terms to evaluate; coefficients are only computed for kept
/// targets, so a dropped term can never raise a division error.
type Keep<'a> = &'a dyn Fn(&PatternB) -> bool;

fn sign<S: Scalar>(odd: bool) -> S {
    c(int(if odd { -1 } else { 1 }))
}

/// `F_{k−1,−k}` (`u = None`) or `Φ_{k−1,−k}(u)` applied to `p`.
fn lower_terms<E: Evaluator>(
    ev: &E,
    p: &PatternB,
    k: usize,
    u: Option<&Rational>,
    keep: Keep<'_>,
) -> Result<Terms<E::S>, Error> {
    let mut out = Vec::new();
    let minus_half: E::S = c(-half());

    // A_{k0} ζ(k, 0)
    let s_k = p.sigma(k);
    let s_below = if k >= 2 { p.sigma(k - 1) } else { 0 };
    let bar = p.flip(k).flip(k - 1);
    #[allow(clippy::type_complexity)]
    let mut zeta0: Vec<(PatternB, Vec<(usize, usize)>, bool)> = Vec::new();
    match (s_k, s_below) {
        (0, 0) => zeta0.push((bar, vec![], k % 2 == 1)),
        (1, 0) => {
            for j in 1..=k {
                zeta0.push((bar.shift_primed(k, j, 1), vec![(k, j)], false));
            }
        }
        (0, _) => {
            for m in 1..k {
                zeta0.push((bar.shift_primed(k - 1, m, 1), vec![(k - 1, m)], true));
            }
        }
        _ => {
            for j in 1..=k {
                for m in 1..k {
                    let t = bar.shift_primed(k, j, 1).shift_primed(k - 1, m, 1);
                    zeta0.push((t, vec![(k, j), (k - 1, m)], k.is_multiple_of(2)));
                }
            }
        }
    }
    let zeta0: Vec<_> = zeta0.into_iter().filter(|(t, _, _)| keep(t)).collect();
    if !zeta0.is_empty() {
        let a0 = coeff_a(ev, p, k, 0)?;
        for (t, bs, neg) in zeta0 {
            let mut co = a0.times(&sign(neg));
            for (level, idx) in bs {
                co = co.times(&coeff_b(ev, p, level, idx, &minus_half)?);
            }
            if let Some(u) = u {
                let d = fkk_value(ev, &t, k).plus_r(&(u - Rational::new(3.into(), 2.into())));
                co = co.over(&d)?;
            }
            out.push((t, co));
        }
    }

    for i in 1..k {
        let plus: Vec<(PatternB, usize, usize)> = (1..=k)
            .flat_map(|j| (1..k).map(move |m| (j, m)))
            .map(|(j, m)| {
                let t = p
                    .shift_primed(k, j, 1)
                    .shift_unprimed(k - 1, i, 1)
                    .shift_primed(k - 1, m, 1);
                (t, j, m)
            })
            .filter(|(t, _, _)| keep(t))
            .collect();
        let minus = p.shift_unprimed(k - 1, i, -1);
        let keep_minus = keep(&minus);
        if plus.is_empty() && !keep_minus {
            continue;
        }
        let ai = coeff_a(ev, p, k, i)?;
        let li = l_value(ev, p, k - 1, i);
        if !plus.is_empty() {
            let base = ai.over(&li.plus_r(&half()))?;
            let mut bk: BTreeMap<usize, E::S> = BTreeMap::new();
            let mut bkm: BTreeMap<usize, E::S> = BTreeMap::new();
            for (t, j, m) in plus {
                if let Entry::Vacant(slot) = bk.entry(j) {
                    slot.insert(coeff_b(ev, p, k, j, &li)?);
                }
                if let Entry::Vacant(slot) = bkm.entry(m) {
                    slot.insert(coeff_b(ev, p, k - 1, m, &li)?);
                }
                let mut co = base.times(&bk[&j]).times(&bkm[&m]);
                if let Some(u) = u {
                    let d = fkk_value(ev, &t, k).plus(&li).plus_r(&(u - int(1)));
                    co = co.over(&d)?;
                }
                out.push((t, co));
            }
        }
        if keep_minus {
            let mut co = ai.negated().over(&li.minus(&c(half())))?;
            if let Some(u) = u {
                let d = fkk_value(ev, &minus, k).minus(&li).plus_r(&(u - int(1)));
                co = co.over(&d)?;
            }
            out.push((minus, co));
        }
    }
    Ok(out)
}

/// `Φ_{−k,k}` applied to `p`:
/// `Σ_i C_{ki} (F_kk − l'_{ki} + 1) ζ_{Λ−δ'_{ki}}`, `F_kk` on the target.
fn phi_minus_terms<E: Evaluator>(
    ev: &E,
    p: &PatternB,
    k: usize,
    keep: Keep<'_>,
) -> Result<Terms<E::S>, Error> {
    let mut out = Vec::new();
    for i in 1..=k {
        let t = p.shift_primed(k, i, -1);
        if !keep(&t) {
            continue;
        }
        let f = fkk_value(ev, &t, k)
            .minus(&lp_value(ev, p, k, i))
            .plus_r(&int(1));
        out.push((t, coeff_c(ev, p, k, i)?.times(&f)));
    }
    Ok(out)
}

/// `(Φ_{k−1,−k}(2) Φ_{−k,k} − Φ_{−k,k} Φ_{k−1,−k}(0)) p`, intermediates
/// unfiltered.
fn raise_terms<E: Evaluator>(
    ev: &E,
    p: &PatternB,
    k: usize,
) -> Result<BTreeMap<PatternB, E::S>, Error> {
    let all: Keep<'_> = &|_| true;
    let mut acc: BTreeMap<PatternB, E::S> = BTreeMap::new();
    let mut push = |t: PatternB, v: E::S| match acc.get_mut(&t) {
        Some(x) => *x = x.plus(&v),
        None => {
            acc.insert(t, v);
        }
    };
    for (mid, c1) in phi_minus_terms(ev, p, k, all)? {
        if c1.vanishes() {
            continue;
        }
        for (t, c2) in lower_terms(ev, &mid, k, Some(&int(2)), all)? {
            push(t, c1.times(&c2));
        }
    }
    for (mid, c1) in lower_terms(ev, p, k, Some(&int(0)), all)? {
        if c1.vanishes() {
            continue;
        }
        for (t, c2) in phi_minus_terms(ev, &mid, k, all)? {
            push(t, c1.times(&c2).negated());
        }
    }
    Ok(acc)
}

// ---------------------------------------------------------------------------
// operators
// ---------------------------------------------------------------------------

/// One matrix element that was obtained as a limit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceEntry {
    pub generator: Key,
    pub row: usize,
    pub col: usize,
    pub profile: u64,
    /// The entry as a function of the deformation parameter.
    pub function: RationalFunction,
}

/// How the raising generators are evaluated.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Mode {
    /// Exact rationals, deforming only the columns that need it.
    #[default]
    Auto,
    /// Deform every column with the given profile.
    Deformed(Deformed),
    /// Never deform; a vanishing denominator is an error.
    Undeformed,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BuildOptions {
    pub mode: Mode,
    /// Record every deformed entry as a rational function of `ε`.
    pub trace: bool,
}

struct Basis<'a> {
    patterns: &'a [PatternB],
    index: &'a BTreeMap<PatternB, usize>,
}

impl Basis<'_> {
    fn dim(&self) -> usize {
        self.patterns.len()
    }
}

/// One column of a generator, as a formula in the pattern entries.
trait Column {
    fn eval<E: Evaluator>(&self, ev: &E) -> Result<BTreeMap<PatternB, E::S>, Error>;
}

struct LowerColumn<'a> {
    p: &'a PatternB,
    k: usize,
    valid: Keep<'a>,
}

impl Column for LowerColumn<'_> {
    fn eval<E: Evaluator>(&self, ev: &E) -> Result<BTreeMap<PatternB, E::S>, Error> {
        Ok(lower_terms(ev, self.p, self.k, None, self.valid)?
            .into_iter()
            .collect())
    }
}

struct RaiseColumn<'a> {
    p: &'a PatternB,
    k: usize,
}

impl Column for RaiseColumn<'_> {
    fn eval<E: Evaluator>(&self, ev: &E) -> Result<BTreeMap<PatternB, E::S>, Error> {
        raise_terms(ev, self.p, self.k)
    }
}

/// Evaluate a column under each profile in turn until every valid target
/// has a finite value at `ε = 0`. Series orders are raised while the
/// truncation is too coarse to decide.
fn deformed_column<C: Column>(
    b: &Basis<'_>,
    col: usize,
    key: Key,
    column: &C,
    profiles: &[Deformed],
    trace: Option<&mut Vec<TraceEntry>>,
) -> Result<Vec<(usize, Rational)>, Error> {
    let mut last = Error::Pole(format!("generator F{key:?}: column {col}"));
    'profiles: for &slopes in profiles {
        for order in ORDERS {
            let acc = match column.eval(&Expanded { slopes, order }) {
                Ok(acc) => acc,
                Err(Error::DivisionByZero) => {
                    last = Error::DivisionByZero;
                    continue;
                }
                Err(e) => {
                    last = e;
                    continue 'profiles;
                }
            };
            let mut out = Vec::new();
            let mut coarse = false;
            for (t, v) in acc {
                let Some(&row) = b.index.get(&t) else {
                    continue;
                };
                match v.value_at_zero() {
                    Ok(x) => out.push((row, x)),
                    Err(Error::Precision) => {
                        coarse = true;
                        break;
                    }
                    Err(e) => {
                        last = Error::Pole(format!(
                            "generator F{key:?}: column {col} -> row {row}: {e}"
                        ));
                        continue 'profiles;
                    }
                }
            }
            if coarse {
                last = Error::Precision;
                continue;
            }
            if let Some(trace) = trace {
                record(b, column, col, key, slopes, &out, trace)?;
            }
            return Ok(out);
        }
    }
    Err(last)
}

/// The deformed entries of one column as rational functions of `ε`.
fn record<C: Column>(
    b: &Basis<'_>,
    column: &C,
    col: usize,
    generator: Key,
    slopes: Deformed,
    limits: &[(usize, Rational)],
    trace: &mut Vec<TraceEntry>,
) -> Result<(), Error> {
    for (t, f) in column.eval(&slopes)? {
        let Some(&row) = b.index.get(&t) else {
            continue;
        };
        if f.is_zero() {
            continue;
        }
        debug_assert!(limits
            .iter()
            .any(|(r, v)| *r == row && f.limit_at(&Rational::zero()).as_ref() == Ok(v)));
        trace.push(TraceEntry {
            generator,
            row,
            col,
            profile: slopes.profile,
            function: f,
        });
    }
    Ok(())
}

fn undeformed_failure(key: Key, col: usize, e: Error) -> Error {
    Error::Pole(format!(
        "generator F{key:?}: column {col} needs deformation ({e})"
    ))
}

fn build_fkk(b: &Basis<'_>, k: usize) -> Operator {
    Operator::diagonal(b.patterns.iter().map(|p| p.weight_component(k)).collect())
}

fn build_f_lower(
    b: &Basis<'_>,
    k: usize,
    mode: Mode,
    mut trace: Option<&mut Vec<TraceEntry>>,
) -> Result<Operator, Error> {
    let key = (k as i32 - 1, -(k as i32));
    let valid: Keep<'_> = &|t| b.index.contains_key(t);
    let mut m = Operator::zero(b.dim());
    for (col, p) in b.patterns.iter().enumerate() {
        let entries = match lower_terms(&Exact, p, k, None, valid) {
            Ok(terms) => terms.into_iter().map(|(t, v)| (b.index[&t], v)).collect(),
            Err(e) if mode == Mode::Undeformed => return Err(undeformed_failure(key, col, e)),
            Err(_) => {
                let column = LowerColumn { p, k, valid };
                deformed_column(b, col, key, &column, &PROFILES, trace.as_deref_mut())?
            }
        };
        for (row, v) in entries {
            m.add_entry(row, col, v);
        }
    }
    Ok(m)
}

fn build_phi_minus(b: &Basis<'_>, k: usize) -> Result<Operator, Error> {
    let valid: Keep<'_> = &|t| b.index.contains_key(t);
    let mut m = Operator::zero(b.dim());
    for (col, p) in b.patterns.iter().enumerate() {
        for (t, v) in phi_minus_terms(&Exact, p, k, valid)? {
            m.add_entry(b.index[&t], col, v);
        }
    }
    Ok(m)
}

fn build_f_raise(
    b: &Basis<'_>,
    k: usize,
    mode: Mode,
    mut trace: Option<&mut Vec<TraceEntry>>,
) -> Result<Operator, Error> {
    let key = (k as i32 - 1, k as i32);
    let mut m = Operator::zero(b.dim());
    for (col, p) in b.patterns.iter().enumerate() {
        let column = RaiseColumn { p, k };
        let entries = match mode {
            Mode::Auto => match raise_terms(&Exact, p, k) {
                Ok(acc) => acc
                    .into_iter()
                    .filter_map(|(t, v)| b.index.get(&t).map(|&r| (r, v)))
                    .collect(),
                Err(_) => deformed_column(b, col, key, &column, &PROFILES, trace.as_deref_mut())?,
            },
            Mode::Deformed(ev) => {
                deformed_column(b, col, key, &column, &[ev], trace.as_deref_mut())?
            }
            Mode::Undeformed => raise_terms(&Exact, p, k)
                .map_err(|e| undeformed_failure(key, col, e))?
                .into_iter()
                .filter_map(|(t, v)| b.index.get(&t).map(|&r| (r, v)))
                .collect(),
        };
        for (row, v) in entries {
            m.add_entry(row, col, v);
        }
    }
    Ok(m)
}

// ---------------------------------------------------------------------------
// representation
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct SoRepresentation {
    hw: SoHighestWeight,
    basis: Vec<PatternB>,
    index: BTreeMap<PatternB, usize>,
    gens: BTreeMap<Key, Operator>,
    phi_minus: Vec<Operator>,
    trace: Vec<TraceEntry>,
}

impl SoRepresentation {
    pub fn highest_weight(&self) -> &SoHighestWeight {
        &self.hw
    }

    pub fn rank(&self) -> usize {
        self.hw.rank()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[PatternB] {
        &self.basis
    }

    pub fn index(&self, p: &PatternB) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// `F_ij`, indices in `-n..=n`.
    pub fn gen(&self, i: i32, j: i32) -> &Operator {
        &self.gens[&(i, j)]
    }

    pub fn gens(&self) -> &BTreeMap<Key, Operator> {
        &self.gens
    }

    /// Replace generators; used to build deliberately broken fixtures.
    pub fn gens_mut(&mut self) -> &mut BTreeMap<Key, Operator> {
        &mut self.gens
    }

    /// `Φ_{−k,k}` built from its closed formula, `1 ≤ k ≤ n`.
    pub fn phi_minus(&self, k: usize) -> &Operator {
        &self.phi_minus[k - 1]
    }

    /// Matrix elements of the raising generators that were obtained as
    /// limits, with the function they were specialized from.
    pub fn deform_trace(&self) -> &[TraceEntry] {
        &self.trace
    }

    pub fn highest_index(&self) -> usize {
        self.index[&PatternB::highest(&self.hw)]
    }
}

/// The representation with highest weight `hw`, all generators filled in.
pub fn build_so(hw: &SoHighestWeight) -> Result<SoRepresentation, Error> {
    build_so_with(hw, BuildOptions::default())
}

pub fn build_so_with(
    hw: &SoHighestWeight,
    options: BuildOptions,
) -> Result<SoRepresentation, Error> {
    let n = hw.rank();
    let patterns = enumerate_patterns_b(hw);
    let index = index_of(&patterns);
    let b = Basis {
        patterns: &patterns,
        index: &index,
    };
    let mut trace = Vec::new();
    let mut given = BTreeMap::new();
    let mut phi_minus = Vec::new();
    for k in 1..=n {
        let ki = k as i32;
        let mut tr = options.trace.then_some(&mut trace);
        given.insert((ki, ki), build_fkk(&b, k));
        given.insert(
            (ki - 1, -ki),
            build_f_lower(&b, k, options.mode, tr.as_deref_mut())?,
        );
        given.insert((ki - 1, ki), build_f_raise(&b, k, options.mode, tr)?);
        phi_minus.push(build_phi_minus(&b, k)?);
    }
    let alg = Algebra::OddOrthogonal(n);
    let table = StructureTable::new(alg);
    let gens = close_under_brackets(&table, given, b.dim())?;
    if !hw.is_zero() {
        let mut e = Echelon::new();
        for key in alg.basis_keys() {
            e.insert(&gens[&key].flatten());
        }
        if e.rank() != alg.dimension() {
            return Err(Error::Closure(format!(
                "generators span {} dimensions, expected {}",
                e.rank(),
                alg.dimension()
            )));
        }
    }
    Ok(SoRepresentation {
        hw: hw.clone(),
        basis: patterns,
        index,
        gens,
        phi_minus,
        trace,
    })
}

/// `F_ij = E_ij − E_{−j,−i}` on `C^{2n+1}`, rows and columns `-n..=n`.
pub fn defining_rep(n: usize) -> BTreeMap<Key, Operator> {
    Algebra::OddOrthogonal(n).defining()
}

/// `Σ_{i=1}^{k−1} F_{−k,i} F_{ik} − ½ F_{0k}²`.
pub fn phi_minus_quadratic(rep: &SoRepresentation, k: usize) -> Operator {
    let k = k as i32;
    let f0k = rep.gen(0, k);
    let mut q = f0k.mul(f0k).scale(&-half());
    for i in 1..k {
        q = q.add(&rep.gen(-k, i).mul(rep.gen(i, k)));
    }
    q
}

/// Compares [`phi_minus_quadratic`] with the formula-built `Φ_{−k,k}` on the
/// vectors killed by every `F_ij`, `−k < i < j < k`, for each `k`.
pub fn phi_definition_check(rep: &SoRepresentation) -> Result<(), String> {
    let n = rep.rank();
    let all: Vec<usize> = (0..rep.dim()).collect();
    for k in 1..=n {
        let ki = k as i32;
        let raising: Vec<&Operator> = Algebra::OddOrthogonal(k - 1)
            .raising_keys()
            .into_iter()
            .filter(|&(i, j)| i > -ki && j < ki)
            .map(|(i, j)| rep.gen(i, j))
            .collect();
        let q = phi_minus_quadratic(rep, k);
        let phi = rep.phi_minus(k);
        for v in joint_kernel(&raising, &all) {
            if q.apply(&v) != phi.apply(&v) {
                return Err(format!("k={k}: mismatch on {}", display_vec(&v)));
            }
        }
    }
    Ok(())
}
