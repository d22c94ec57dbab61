//! Checks of built representations against oracles that do not depend on
//! the pattern formulas: structure constants, the Weyl dimension formula,
//! Freudenthal's multiplicity recursion, the branching count, scalarity of
//! the Casimir element and intertwiners with the defining representation.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{display_tuple, half, int, HalfInt, Rational};
use crate::gl::{self, GlRepresentation};
use crate::lie::{combine, Algebra, Key, StructureTable};
use crate::linalg::{joint_kernel, nullspace, Echelon};
use crate::operator::{Operator, SparseVec};
use crate::patterns::{GlHighestWeight, SoHighestWeight};
use crate::so::{self, SoRepresentation};
use crate::Error;

// ---------------------------------------------------------------------------
// reports
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    /// Empty on success; otherwise the first offending case.
    pub witness: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn push(&mut self, name: &str, outcome: Result<(), String>) {
        let (pass, witness) = match outcome {
            Ok(()) => (true, String::new()),
            Err(w) => (false, w),
        };
        self.checks.push(Check {
            name: name.to_string(),
            pass,
            witness,
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn summary(&self) -> &'static str {
        if self.passed() {
            "pass"
        } else {
            "fail"
        }
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Level {
    Fast,
    Full,
}

// ---------------------------------------------------------------------------
// relations among generators
// ---------------------------------------------------------------------------

/// Every commutator of basis generators against the table derived from the
/// defining representation.
pub fn check_structure_constants(
    gens: &BTreeMap<Key, Operator>,
    algebra: Algebra,
) -> Result<(), String> {
    let table = StructureTable::new(algebra);
    let dim = gens.values().next().map_or(0, Operator::dim);
    for &a in table.keys() {
        for &b in table.keys() {
            let lhs = gens[&a].commutator(&gens[&b]);
            let rhs = combine(gens, table.bracket(a, b), dim);
            if lhs != rhs {
                let want: Vec<String> = table
                    .bracket(a, b)
                    .iter()
                    .map(|(k, c)| format!("{c}*{k:?}"))
                    .collect();
                return Err(format!(
                    "[{a:?}, {b:?}] differs from [{}]",
                    want.join(" + ")
                ));
            }
        }
    }
    Ok(())
}

/// `F_{−j,−i} = −F_ij` for every label.
pub fn check_antisymmetry(gens: &BTreeMap<Key, Operator>) -> Result<(), String> {
    for (&(i, j), m) in gens {
        if gens[&(-j, -i)] != m.neg() {
            return Err(format!("F({},{}) != -F({i},{j})", -j, -i));
        }
    }
    Ok(())
}

/// Cartan generators are diagonal with the given eigenvalues.
pub fn check_weights(
    gens: &BTreeMap<Key, Operator>,
    weights: &[Vec<Rational>],
) -> Result<(), String> {
    let n = weights.first().map_or(0, Vec::len);
    for k in 1..=n {
        let want = Operator::diagonal(weights.iter().map(|w| w[k - 1].clone()).collect());
        if gens[&(k as i32, k as i32)] != want {
            return Err(format!("({k},{k}) is not diag of pattern weights"));
        }
    }
    Ok(())
}

/// Every raising generator kills the highest vector.
pub fn check_highest_vector(
    gens: &BTreeMap<Key, Operator>,
    algebra: Algebra,
    top: usize,
) -> Result<(), String> {
    for key in algebra.raising_keys() {
        if !gens[&key].column(top).is_empty() {
            return Err(format!("{key:?} does not kill the highest vector"));
        }
    }
    Ok(())
}

/// `Σ_{i,j} X_ij X_ji` over every label, required to be scalar; returns the
/// scalar.
pub fn casimir_scalar(gens: &BTreeMap<Key, Operator>, algebra: Algebra) -> Result<Rational, Error> {
    let dim = gens.values().next().map_or(0, Operator::dim);
    let mut total = Operator::zero(dim);
    for &(i, j) in gens.keys() {
        total = total.add(&gens[&(i, j)].mul(&gens[&(j, i)]));
    }
    let _ = algebra;
    total
        .as_scalar()
        .map_err(|(r, c)| Error::NonScalar(format!("entry ({r},{c}) = {}", total.get(r, c))))
}

/// The Casimir value computed on a highest vector of weight `hw` from the
/// structure constants alone: for `i > j` the product `X_ij X_ji` kills the
/// vector, for `i < j` it acts as `[X_ij, X_ji]`, and `X_ii` acts by its
/// eigenvalue.
pub fn casimir_on_highest(algebra: Algebra, hw: &[Rational]) -> Rational {
    let table = StructureTable::new(algebra);
    let eigen = |key: Key| -> Rational {
        match algebra.canonical(key) {
            None => Rational::zero(),
            Some(((k, l), s)) if k == l && k > 0 => &hw[(k - 1) as usize] * int(s as i64),
            _ => Rational::zero(),
        }
    };
    let mut total = Rational::zero();
    for (i, j) in algebra.all_keys() {
        if i == j {
            let e = eigen((i, i));
            total += &e * &e;
        } else if i < j {
            for (key, c) in table.bracket_any((i, j), (j, i)) {
                total += c * eigen(key);
            }
        }
    }
    total
}

// ---------------------------------------------------------------------------
// Weyl dimension
// ---------------------------------------------------------------------------

fn integral(r: Rational, what: &str) -> Result<u64, Error> {
    if !r.is_integer() || r.is_negative() {
        return Err(Error::NonIntegral(format!("{what} = {r}")));
    }
    r.to_integer()
        .to_u64()
        .ok_or_else(|| Error::NonIntegral(format!("{what} overflows")))
}

/// `∏_{i<j} (l_i − l_j)/(j − i)`, `l_i = λ_i − i + 1`.
pub fn weyl_dim_a(hw: &GlHighestWeight) -> Result<u64, Error> {
    let l = hw.l_values();
    let mut d = Rational::one();
    for i in 0..l.len() {
        for j in i + 1..l.len() {
            d *= (&l[i] - &l[j]) / int((j - i) as i64);
        }
    }
    integral(d, "Weyl dimension")
}

/// Standard coordinates `λ̃_i = −λ_{n+1−i}` of an `o(2n+1)` weight.
pub fn b_standard(w: &[Rational]) -> Vec<Rational> {
    w.iter().rev().map(|x| -x).collect()
}

/// Weyl dimension for `o(2n+1)` in standard coordinates, with
/// `l̃_i = λ̃_i + n − i + 1/2` and `ρ̃_i = n − i + 1/2`.
pub fn weyl_dim_b(hw: &[HalfInt]) -> Result<u64, Error> {
    let n = hw.len();
    let lam = b_standard(&hw.iter().map(HalfInt::to_rational).collect::<Vec<_>>());
    let rho: Vec<Rational> = (0..n).map(|i| int((n - 1 - i) as i64) + half()).collect();
    let l: Vec<Rational> = lam.iter().zip(&rho).map(|(a, b)| a + b).collect();
    let mut d = Rational::one();
    for i in 0..n {
        d *= &l[i] / &rho[i];
        for j in i + 1..n {
            d *= (&l[i] * &l[i] - &l[j] * &l[j]) / (&rho[i] * &rho[i] - &rho[j] * &rho[j]);
        }
    }
    integral(d, "Weyl dimension")
}

// ---------------------------------------------------------------------------
// Freudenthal
// ---------------------------------------------------------------------------

/// Root data in standard coordinates.
struct Roots {
    algebra: Algebra,
    positive: Vec<Vec<Rational>>,
    rho: Vec<Rational>,
}

impl Roots {
    fn new(algebra: Algebra) -> Self {
        let n = algebra.rank();
        let unit = |i: usize, s: i64| {
            let mut v = vec![Rational::zero(); n];
            v[i] = int(s);
            v
        };
        let add = |a: Vec<Rational>, b: Vec<Rational>| -> Vec<Rational> {
            a.iter().zip(&b).map(|(x, y)| x + y).collect()
        };
        let mut positive = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                positive.push(add(unit(i, 1), unit(j, -1)));
                if let Algebra::OddOrthogonal(_) = algebra {
                    positive.push(add(unit(i, 1), unit(j, 1)));
                }
            }
            if let Algebra::OddOrthogonal(_) = algebra {
                positive.push(unit(i, 1));
            }
        }
        let mut rho = vec![Rational::zero(); n];
        for a in &positive {
            for (r, x) in rho.iter_mut().zip(a) {
                *r += x * half();
            }
        }
        Roots {
            algebra,
            positive,
            rho,
        }
    }

    /// Dominant representative of the Weyl orbit.
    fn dominant(&self, w: &[Rational]) -> Vec<Rational> {
        let mut v: Vec<Rational> = match self.algebra {
            Algebra::Gl(_) => w.to_vec(),
            Algebra::OddOrthogonal(_) => w.iter().map(|x| x.abs()).collect(),
        };
        v.sort_by(|a, b| b.cmp(a));
        v
    }

    /// Every element of the Weyl orbit of a dominant weight.
    fn orbit(&self, w: &[Rational]) -> BTreeSet<Vec<Rational>> {
        let mut out = BTreeSet::new();
        let mut perm = w.to_vec();
        perm.sort();
        loop {
            match self.algebra {
                Algebra::Gl(_) => {
                    out.insert(perm.clone());
                }
                Algebra::OddOrthogonal(_) => {
                    for mask in 0u32..(1 << perm.len()) {
                        let v: Vec<Rational> = perm
                            .iter()
                            .enumerate()
                            .map(|(i, x)| if mask >> i & 1 == 1 { -x } else { x.clone() })
                            .collect();
                        out.insert(v);
                    }
                }
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
        out
    }

    /// `λ − μ` is a non-negative integral combination of simple roots.
    fn below(&self, mu: &[Rational], lam: &[Rational]) -> bool {
        let mut partial = Rational::zero();
        for (a, b) in lam.iter().zip(mu) {
            partial += a - b;
            if !partial.is_integer() || partial.is_negative() {
                return false;
            }
        }
        match self.algebra {
            Algebra::Gl(_) => partial.is_zero(),
            Algebra::OddOrthogonal(_) => true,
        }
    }
}

fn next_permutation(v: &mut [Rational]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .fold(Rational::zero(), |s, (x, y)| s + x * y)
}

struct Freudenthal<'a> {
    roots: &'a Roots,
    lam: Vec<Rational>,
    lam_norm: Rational,
    target: Rational,
    memo: BTreeMap<Vec<Rational>, Rational>,
}

impl Freudenthal<'_> {
    fn mult(&mut self, w: &[Rational]) -> Rational {
        let mu = self.roots.dominant(w);
        if !self.roots.below(&mu, &self.lam) {
            return Rational::zero();
        }
        if let Some(m) = self.memo.get(&mu) {
            return m.clone();
        }
        let m = if mu == self.lam {
            Rational::one()
        } else {
            let mut s = Rational::zero();
            let positive = self.roots.positive.clone();
            for a in &positive {
                let mut k = 1i64;
                loop {
                    let v: Vec<Rational> = mu.iter().zip(a).map(|(x, y)| x + y * int(k)).collect();
                    if dot(&v, &v) > self.lam_norm {
                        break;
                    }
                    let mv = self.mult(&v);
                    s += mv * dot(&v, a);
                    k += 1;
                }
            }
            let mr: Vec<Rational> = mu.iter().zip(&self.roots.rho).map(|(x, y)| x + y).collect();
            s * int(2) / (&self.target - dot(&mr, &mr))
        };
        self.memo.insert(mu, m.clone());
        m
    }
}

/// Multiplicity of every weight of the irreducible representation with
/// dominant highest weight `lam`, in standard coordinates.
pub fn freudenthal_multiplicities(
    algebra: Algebra,
    lam: &[Rational],
    dim: u64,
    cap: u64,
) -> Result<BTreeMap<Vec<Rational>, u64>, Error> {
    if dim > cap {
        return Err(Error::CapExceeded { dim, cap });
    }
    let roots = Roots::new(algebra);
    let lr: Vec<Rational> = lam.iter().zip(&roots.rho).map(|(x, y)| x + y).collect();
    let mut f = Freudenthal {
        roots: &roots,
        lam: lam.to_vec(),
        lam_norm: dot(lam, lam),
        target: dot(&lr, &lr),
        memo: BTreeMap::new(),
    };
    // dominant weights below λ, by search along positive roots
    let mut seen = BTreeSet::new();
    let mut queue = vec![lam.to_vec()];
    seen.insert(lam.to_vec());
    while let Some(mu) = queue.pop() {
        for a in &roots.positive {
            let v: Vec<Rational> = mu.iter().zip(a).map(|(x, y)| x - y).collect();
            let d = roots.dominant(&v);
            if roots.below(&d, lam) && !seen.contains(&d) {
                seen.insert(d.clone());
                queue.push(d);
            }
        }
    }
    let mut out = BTreeMap::new();
    for mu in &seen {
        let m = f.mult(mu);
        if m.is_zero() {
            continue;
        }
        let m = integral(m, "multiplicity")?;
        for w in roots.orbit(mu) {
            out.insert(w, m);
        }
    }
    Ok(out)
}

/// Histogram of basis weights.
pub fn weight_histogram(weights: &[Vec<Rational>]) -> BTreeMap<Vec<Rational>, u64> {
    let mut h = BTreeMap::new();
    for w in weights {
        *h.entry(w.clone()).or_insert(0) += 1;
    }
    h
}

fn compare_histograms(
    got: &BTreeMap<Vec<Rational>, u64>,
    want: &BTreeMap<Vec<Rational>, u64>,
) -> Result<(), String> {
    for (w, m) in want.iter() {
        let g = got.get(w).copied().unwrap_or(0);
        if g != *m {
            return Err(format!(
                "weight {}: basis has {g}, expected {m}",
                display_tuple(w)
            ));
        }
    }
    for (w, g) in got {
        if !want.contains_key(w) {
            return Err(format!(
                "weight {}: basis has {g}, expected 0",
                display_tuple(w)
            ));
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// branching
// ---------------------------------------------------------------------------

/// Number of `ρ` in the parity class of `λ` with
/// `−λ_1 ≥ ρ_1 ≥ λ_1 ≥ ρ_2 ≥ … ≥ ρ_n ≥ λ_n` and
/// `−μ_1 ≥ ρ_1 ≥ μ_1 ≥ ρ_2 ≥ … ≥ ρ_{n−1} ≥ μ_{n−1} ≥ ρ_n`.
pub fn branching_multiplicity(lam: &SoHighestWeight, mu: &[HalfInt]) -> u64 {
    let l = lam.entries();
    let n = l.len();
    if mu.len() + 1 != n {
        return 0;
    }
    if mu.iter().any(|m| m.is_integer() != lam.is_integer()) {
        return 0;
    }
    if n == 1 {
        return HalfInt::count_between(&l[0], &-&l[0]).to_u64().unwrap_or(0);
    }
    let max = |a: &HalfInt, b: &HalfInt| if a > b { a.clone() } else { b.clone() };
    let min = |a: &HalfInt, b: &HalfInt| if a < b { a.clone() } else { b.clone() };
    let mut count = BigInt::one();
    for i in 0..n {
        let (lo, hi) = if i == 0 {
            (max(&l[0], &mu[0]), min(&-&l[0], &-&mu[0]))
        } else if i < n - 1 {
            (max(&l[i], &mu[i]), min(&l[i - 1], &mu[i - 1]))
        } else {
            (l[n - 1].clone(), min(&l[n - 2], &mu[n - 2]))
        };
        count *= HalfInt::count_between(&lo, &hi);
        if count.is_zero() {
            return 0;
        }
    }
    count.to_u64().unwrap_or(0)
}

/// Highest weights of `o(2n−1)` in the parity class of `λ` that can
/// occur: non-increasing, between `λ_n` and `0`.
fn candidate_mus(lam: &SoHighestWeight) -> Vec<Vec<HalfInt>> {
    let n = lam.rank();
    let top = HalfInt::nonpositive_top(lam.is_integer());
    let bottom = lam.entries()[n - 1].clone();
    let mut out = vec![Vec::new()];
    for _ in 0..n - 1 {
        let mut next = Vec::new();
        for prefix in &out {
            let hi: HalfInt = prefix.last().cloned().unwrap_or_else(|| top.clone());
            let mut v = bottom.clone();
            while v <= hi {
                let mut p = prefix.clone();
                p.push(v.clone());
                next.push(p);
                v = v.offset(1);
            }
        }
        out = next;
    }
    out
}

/// `c(μ)` for every `μ` with `c(μ) > 0`.
pub fn branching_table(lam: &SoHighestWeight) -> Vec<(Vec<HalfInt>, u64)> {
    candidate_mus(lam)
        .into_iter()
        .filter_map(|mu| {
            let c = branching_multiplicity(lam, &mu);
            (c > 0).then_some((mu, c))
        })
        .collect()
}

/// Highest-vector counts of `o(2n−1)` in each weight space against `c(μ)`,
/// and `Σ c(μ) dim V'(μ) = dim V(λ)`.
pub fn check_branching(rep: &SoRepresentation) -> Result<(), String> {
    let n = rep.rank();
    let lam = rep.highest_weight();
    let raising: Vec<&Operator> = Algebra::OddOrthogonal(n - 1)
        .raising_keys()
        .into_iter()
        .map(|(i, j)| rep.gen(i, j))
        .collect();
    let mut groups: BTreeMap<Vec<Rational>, Vec<usize>> = BTreeMap::new();
    for (c, p) in rep.basis().iter().enumerate() {
        groups
            .entry(p.weight()[..n - 1].to_vec())
            .or_default()
            .push(c);
    }
    let table: BTreeMap<Vec<Rational>, u64> = branching_table(lam)
        .into_iter()
        .map(|(mu, c)| (mu.iter().map(HalfInt::to_rational).collect(), c))
        .collect();
    for (mu, cols) in &groups {
        let k = joint_kernel(&raising, cols).len() as u64;
        let c = table.get(mu).copied().unwrap_or(0);
        if k != c {
            return Err(format!(
                "mu={}: {k} highest vectors, c(mu)={c}",
                display_tuple(mu)
            ));
        }
    }
    for (mu, c) in &table {
        if !groups.contains_key(mu) {
            return Err(format!(
                "mu={}: c(mu)={c} but weight absent",
                display_tuple(mu)
            ));
        }
    }
    let mut total = 0u64;
    for (mu, c) in branching_table(lam) {
        let d = weyl_dim_b(&mu).map_err(|e| e.to_string())?;
        total += c * d;
    }
    if total != rep.dim() as u64 {
        return Err(format!(
            "sum of c(mu) dim V'(mu) = {total}, dim V = {}",
            rep.dim()
        ));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// intertwiners
// ---------------------------------------------------------------------------

/// Every `X` with `X a(key) = b(key) X` for all keys, as a basis of
/// `dim b × dim a` matrices.
pub fn intertwiners(
    a: &BTreeMap<Key, Operator>,
    b: &BTreeMap<Key, Operator>,
    keys: &[Key],
) -> Vec<Vec<Vec<Rational>>> {
    let na = a.values().next().map_or(0, Operator::dim);
    let nb = b.values().next().map_or(0, Operator::dim);
    let var = |r: usize, c: usize| r * na + c;
    let mut rows = Vec::new();
    for key in keys {
        let (ma, mb) = (&a[key], &b[key]);
        // (X A)_{rc} − (B X)_{rc}
        for r in 0..nb {
            for c in 0..na {
                let mut row = SparseVec::new();
                for (&s, v) in ma.column(c) {
                    crate::operator::add_into(&mut row, var(r, s), v.clone());
                }
                for s in 0..nb {
                    let v = mb.get(r, s);
                    if !v.is_zero() {
                        crate::operator::add_into(&mut row, var(s, c), -v);
                    }
                }
                if !row.is_empty() {
                    rows.push(row);
                }
            }
        }
    }
    nullspace(rows.iter(), na * nb)
        .into_iter()
        .map(|v| {
            let mut m = vec![vec![Rational::zero(); na]; nb];
            for (idx, x) in v {
                m[idx / na][idx % na] = x;
            }
            m
        })
        .collect()
}

/// A unique-up-to-scale, invertible intertwiner from `rep` to the defining
/// representation.
pub fn check_defining_equivalence(rep: &SoRepresentation) -> Result<(), String> {
    let n = rep.rank();
    let alg = Algebra::OddOrthogonal(n);
    let def = so::defining_rep(n);
    if rep.dim() != 2 * n + 1 {
        return Err(format!("dimension {} != {}", rep.dim(), 2 * n + 1));
    }
    let xs = intertwiners(rep.gens(), &def, &alg.basis_keys());
    if xs.len() != 1 {
        return Err(format!("{} independent intertwiners", xs.len()));
    }
    let mut e = Echelon::new();
    for row in &xs[0] {
        let v: SparseVec = row
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, x)| (i, x.clone()))
            .collect();
        e.insert(&v);
    }
    if e.rank() != rep.dim() {
        return Err(format!("intertwiner has rank {}", e.rank()));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// suites
// ---------------------------------------------------------------------------

fn err_string(e: Error) -> String {
    e.to_string()
}

/// Checks of a `gl(n)` representation.
pub fn verify_gl(rep: &GlRepresentation, level: Level, cap: u64) -> VerificationReport {
    let alg = Algebra::Gl(rep.rank());
    let hw = rep.highest_weight();
    let weights: Vec<Vec<Rational>> = rep.basis().iter().map(|p| p.weight()).collect();
    let mut r = VerificationReport::default();
    r.push(
        "structure_constants",
        check_structure_constants(rep.gens(), alg),
    );
    r.push(
        "dimension",
        weyl_dim_a(hw).map_err(err_string).and_then(|d| {
            if d == rep.dim() as u64 {
                Ok(())
            } else {
                Err(format!("{} patterns, Weyl dimension {d}", rep.dim()))
            }
        }),
    );
    r.push("weights", check_weights(rep.gens(), &weights));
    r.push(
        "highest_vector",
        check_highest_vector(rep.gens(), alg, rep.highest_index()),
    );
    if level == Level::Fast {
        return r;
    }
    r.push(
        "casimir",
        casimir_scalar(rep.gens(), alg)
            .map_err(err_string)
            .and_then(|s| {
                let want = casimir_on_highest(alg, hw.entries());
                if s == want {
                    Ok(())
                } else {
                    Err(format!("scalar {s}, highest-vector value {want}"))
                }
            }),
    );
    r.push(
        "freudenthal",
        weyl_dim_a(hw)
            .and_then(|d| freudenthal_multiplicities(alg, hw.entries(), d, cap))
            .map_err(err_string)
            .and_then(|want| compare_histograms(&weight_histogram(&weights), &want)),
    );
    let t_check = || -> Result<(), String> {
        for u in [-1i64, 0, 1, 7] {
            let u = int(u);
            let t = gl::gelfand_invariant_t(rep, &u);
            let want = gl::expected_t(hw, &u);
            if t != Operator::scalar(rep.dim(), &want) {
                return Err(format!("T({u}) is not {want} times identity"));
            }
        }
        Ok(())
    };
    r.push("central_polynomial", t_check());
    r.push(
        "contravariant_form",
        gl::contravariant_gram(rep)
            .map_err(err_string)
            .and_then(|g| {
                if !g.is_diagonal() {
                    return Err("form is not diagonal".into());
                }
                if let Some(a) = (0..rep.dim()).find(|&a| g.get(a, a).is_zero()) {
                    return Err(format!("zero norm for basis vector {a}"));
                }
                gl::check_adjointness(rep, &g)
                    .map_err(|(i, j)| format!("adjointness fails for E({i},{j})"))
            }),
    );
    r.push(
        "raising_operator_action",
        gl::check_raising_action(rep).map(|_| ()),
    );
    r.push("z_commutation", gl::check_z_commutation(rep).map(|_| ()));
    r
}

/// Checks of an `o(2n+1)` representation.
pub fn verify_so(rep: &SoRepresentation, level: Level, cap: u64) -> VerificationReport {
    let n = rep.rank();
    let alg = Algebra::OddOrthogonal(n);
    let hw: Vec<Rational> = rep
        .highest_weight()
        .entries()
        .iter()
        .map(HalfInt::to_rational)
        .collect();
    let weights: Vec<Vec<Rational>> = rep.basis().iter().map(|p| p.weight()).collect();
    let mut r = VerificationReport::default();
    r.push(
        "structure_constants",
        check_structure_constants(rep.gens(), alg),
    );
    r.push("antisymmetry", check_antisymmetry(rep.gens()));
    r.push(
        "dimension",
        weyl_dim_b(rep.highest_weight().entries())
            .map_err(err_string)
            .and_then(|d| {
                if d == rep.dim() as u64 {
                    Ok(())
                } else {
                    Err(format!("{} patterns, Weyl dimension {d}", rep.dim()))
                }
            }),
    );
    r.push("weights", check_weights(rep.gens(), &weights));
    r.push(
        "highest_vector",
        check_highest_vector(rep.gens(), alg, rep.highest_index()),
    );
    if level == Level::Fast {
        return r;
    }
    r.push("branching", check_branching(rep));
    r.push(
        "casimir",
        casimir_scalar(rep.gens(), alg)
            .map_err(err_string)
            .and_then(|s| {
                let want = casimir_on_highest(alg, &hw);
                if s == want {
                    Ok(())
                } else {
                    Err(format!("scalar {s}, highest-vector value {want}"))
                }
            }),
    );
    r.push(
        "freudenthal",
        weyl_dim_b(rep.highest_weight().entries())
            .and_then(|d| freudenthal_multiplicities(alg, &b_standard(&hw), d, cap))
            .map_err(err_string)
            .and_then(|want| {
                let std: Vec<Vec<Rational>> = weights.iter().map(|w| b_standard(w)).collect();
                compare_histograms(&weight_histogram(&std), &want)
            }),
    );
    r.push("phi_definition", so::phi_definition_check(rep));
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gl::build_gl;
    use crate::so::build_so;

    fn so_hw(w: &[&str]) -> SoHighestWeight {
        SoHighestWeight::parse(w).unwrap()
    }

    fn gl_hw(w: &[i64]) -> GlHighestWeight {
        GlHighestWeight::new(w.iter().map(|&v| int(v)).collect()).unwrap()
    }

    fn h(s: &str) -> HalfInt {
        HalfInt::parse(s).unwrap()
    }

    #[test]
    fn weyl_dimensions() {
        assert_eq!(weyl_dim_b(so_hw(&["-1"]).entries()).unwrap(), 3);
        assert_eq!(weyl_dim_b(so_hw(&["-1/2"]).entries()).unwrap(), 2);
        assert_eq!(weyl_dim_b(so_hw(&["0", "-1"]).entries()).unwrap(), 5);
        assert_eq!(weyl_dim_b(so_hw(&["-1/2", "-1/2"]).entries()).unwrap(), 4);
        assert_eq!(weyl_dim_a(&gl_hw(&[2, 1, 0])).unwrap(), 8);
    }

    #[test]
    fn branching_examples() {
        let lam = so_hw(&["0", "-1"]);
        assert_eq!(branching_multiplicity(&lam, &[h("0")]), 2);
        assert_eq!(branching_multiplicity(&lam, &[h("-1")]), 1);
        assert_eq!(branching_multiplicity(&lam, &[h("-1/2")]), 0);
        assert_eq!(branching_table(&lam).len(), 2);
    }

    #[test]
    fn branching_checks_pass() {
        for w in [&["0", "-1"][..], &["-1/2", "-1/2"], &["0", "0"], &["-1"]] {
            assert_eq!(check_branching(&build_so(&so_hw(w)).unwrap()), Ok(()));
        }
    }

    #[test]
    fn freudenthal_examples() {
        let b2 = Algebra::OddOrthogonal(2);
        let m = freudenthal_multiplicities(b2, &[int(1), int(0)], 5, 1000).unwrap();
        assert_eq!(m.len(), 5);
        assert!(m.values().all(|&v| v == 1));
        let a2 = Algebra::Gl(2);
        let m = freudenthal_multiplicities(a2, &[int(1), int(0)], 2, 1000).unwrap();
        assert_eq!(
            m.keys().cloned().collect::<Vec<_>>(),
            vec![vec![int(0), int(1)], vec![int(1), int(0)]]
        );
        let b1 = Algebra::OddOrthogonal(1);
        let m = freudenthal_multiplicities(b1, &[half()], 2, 1000).unwrap();
        assert_eq!(
            m.keys().cloned().collect::<Vec<_>>(),
            vec![vec![-half()], vec![half()]]
        );
        assert!(matches!(
            freudenthal_multiplicities(b1, &[half()], 2, 1),
            Err(Error::CapExceeded { .. })
        ));
        // adjoint of gl(3): zero weight has multiplicity 2
        let m =
            freudenthal_multiplicities(Algebra::Gl(3), &[int(1), int(0), int(-1)], 8, 100).unwrap();
        assert_eq!(m[&vec![int(0), int(0), int(0)]], 2);
    }

    #[test]
    fn casimir_values() {
        let rep = build_gl(&gl_hw(&[1, 0]));
        assert_eq!(casimir_scalar(rep.gens(), Algebra::Gl(2)).unwrap(), int(2));
        assert_eq!(
            casimir_on_highest(Algebra::Gl(2), &[int(1), int(0)]),
            int(2)
        );
        let triv = build_so(&so_hw(&["0"])).unwrap();
        assert_eq!(
            casimir_scalar(triv.gens(), Algebra::OddOrthogonal(1)).unwrap(),
            int(0)
        );
    }

    #[test]
    fn defining_structure_constants() {
        let alg = Algebra::OddOrthogonal(2);
        assert_eq!(check_structure_constants(&alg.defining(), alg), Ok(()));
    }

    #[test]
    fn corrupted_entry_is_caught() {
        let mut rep = build_so(&so_hw(&["0", "-1"])).unwrap();
        let m = rep.gens_mut().get_mut(&(0, 1)).unwrap();
        let (r, c, v) = m.entries()[0].clone();
        m.set(r, c, v + int(1));
        let report = verify_so(&rep, Level::Fast, 1000);
        assert!(!report.passed());
        assert!(!report
            .get("structure_constants")
            .unwrap()
            .witness
            .is_empty());
    }

    #[test]
    fn full_suites_pass() {
        let rep = build_gl(&gl_hw(&[2, 1, 0]));
        let r = verify_gl(&rep, Level::Full, 1000);
        assert!(r.passed(), "{r:?}");
        let rep = build_so(&so_hw(&["-1/2", "-3/2"])).unwrap();
        let r = verify_so(&rep, Level::Full, 1000);
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn defining_equivalence() {
        for w in [&["-1"][..], &["0", "-1"], &["0", "0", "-1"]] {
            assert_eq!(
                check_defining_equivalence(&build_so(&so_hw(w)).unwrap()),
                Ok(())
            );
        }
    }
}
