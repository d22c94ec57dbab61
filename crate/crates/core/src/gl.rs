//! Irreducible representations of `gl(n)` in the Gelfand–Tsetlin basis,
//! plus the identities used to check them: the central polynomial `T(u)`,
//! the lowering and raising operators `z`, and the contravariant form.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::arith::{display_tuple, int, Rational};
use crate::lie::Key;
use crate::linalg::{self, joint_kernel, Echelon};
use crate::operator::{add_into, display_vec, Operator, SparseVec};
use crate::patterns::{enumerate_patterns_a, index_of, GlHighestWeight, GtPatternA};
use crate::Error;

#[derive(Clone, Debug)]
pub struct GlRepresentation {
    hw: GlHighestWeight,
    basis: Vec<GtPatternA>,
    index: BTreeMap<GtPatternA, usize>,
    gens: BTreeMap<Key, Operator>,
}

impl GlRepresentation {
    pub fn highest_weight(&self) -> &GlHighestWeight {
        &self.hw
    }

    pub fn rank(&self) -> usize {
        self.hw.rank()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[GtPatternA] {
        &self.basis
    }

    pub fn index(&self, p: &GtPatternA) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// `E_ij`, indices `1..=n`.
    pub fn gen(&self, i: usize, j: usize) -> &Operator {
        &self.gens[&(i as i32, j as i32)]
    }

    pub fn gens(&self) -> &BTreeMap<Key, Operator> {
        &self.gens
    }

    /// Replace one generator; used to build deliberately broken fixtures.
    pub fn gens_mut(&mut self) -> &mut BTreeMap<Key, Operator> {
        &mut self.gens
    }

    /// Basis index of the highest vector (every row equal to the top row
    /// truncated).
    pub fn highest_index(&self) -> usize {
        let n = self.rank();
        let rows = (1..=n).map(|k| self.hw.entries()[..k].to_vec()).collect();
        self.index[&GtPatternA::from_rows(rows)]
    }

    /// Eigenvalue of `h_t = E_tt − t + 1` on each basis vector.
    fn h(&self, t: usize) -> Vec<Rational> {
        self.basis
            .iter()
            .map(|p| &p.weight()[t - 1] - int(t as i64 - 1))
            .collect()
    }
}

/// The representation with highest weight `hw`.
pub fn build_gl(hw: &GlHighestWeight) -> GlRepresentation {
    let n = hw.rank();
    let basis = enumerate_patterns_a(hw);
    let index = index_of(&basis);
    let dim = basis.len();
    let mut gens = BTreeMap::new();

    for k in 1..=n {
        let diag = basis.iter().map(|p| p.weight()[k - 1].clone()).collect();
        gens.insert((k as i32, k as i32), Operator::diagonal(diag));
    }
    for k in 1..n {
        let mut raise = Operator::zero(dim);
        let mut lower = Operator::zero(dim);
        for (col, p) in basis.iter().enumerate() {
            for i in 1..=k {
                let li = p.l(k, i);
                let mut den = Rational::one();
                for j in (1..=k).filter(|&j| j != i) {
                    den *= &li - p.l(k, j);
                }
                if let Some(&row) = index.get(&p.shifted(k, i, 1)) {
                    let mut num = Rational::one();
                    for j in 1..=k + 1 {
                        num *= &li - p.l(k + 1, j);
                    }
                    raise.add_entry(row, col, -(num / &den));
                }
                if let Some(&row) = index.get(&p.shifted(k, i, -1)) {
                    let mut num = Rational::one();
                    for j in 1..k {
                        num *= &li - p.l(k - 1, j);
                    }
                    lower.add_entry(row, col, num / &den);
                }
            }
        }
        gens.insert((k as i32, k as i32 + 1), raise);
        gens.insert((k as i32 + 1, k as i32), lower);
    }
    // E_ij = [E_{i,i±1}, E_{i±1,j}], by increasing distance |i − j|
    for d in 2..n as i32 {
        for i in 1..=n as i32 {
            for j in [i + d, i - d] {
                if j < 1 || j > n as i32 {
                    continue;
                }
                let step = if j > i { 1 } else { -1 };
                let m = gens[&(i, i + step)].commutator(&gens[&(i + step, j)]);
                gens.insert((i, j), m);
            }
        }
    }
    GlRepresentation {
        hw: hw.clone(),
        basis,
        index,
        gens,
    }
}

/// `T(u) = Σ_σ sgn σ · (u+E)_{σ(1),1} (u+E−1)_{σ(2),2} ⋯ (u+E−n+1)_{σ(n),n}`.
pub fn gelfand_invariant_t(rep: &GlRepresentation, u: &Rational) -> Operator {
    let n = rep.rank();
    let dim = rep.dim();
    // factor (u + E − m)_{r, c}
    let factor = |r: usize, c: usize| {
        let m = rep.gen(r, c);
        if r == c {
            m.add(&Operator::scalar(dim, &(u - int(c as i64 - 1))))
        } else {
            m.clone()
        }
    };
    let mut total = Operator::zero(dim);
    let mut used = vec![false; n + 1];
    descend_t(
        1,
        n,
        &Operator::identity(dim),
        false,
        &mut used,
        &factor,
        &mut total,
    );
    total
}

fn descend_t(
    col: usize,
    n: usize,
    prefix: &Operator,
    odd: bool,
    used: &mut Vec<bool>,
    factor: &dyn Fn(usize, usize) -> Operator,
    total: &mut Operator,
) {
    if col > n {
        *total = if odd {
            total.sub(prefix)
        } else {
            total.add(prefix)
        };
        return;
    }
    for r in 1..=n {
        if used[r] {
            continue;
        }
        // inversions gained: earlier columns that took a larger row
        let inv = (r + 1..=n).filter(|&s| used[s]).count();
        let next = prefix.mul(&factor(r, col));
        if next.is_zero() {
            continue;
        }
        used[r] = true;
        descend_t(col + 1, n, &next, odd ^ (inv % 2 == 1), used, factor, total);
        used[r] = false;
    }
}

/// `∏ (u + l_i)`, the expected scalar value of `T(u)`.
pub fn expected_t(hw: &GlHighestWeight, u: &Rational) -> Rational {
    hw.l_values()
        .iter()
        .fold(Rational::one(), |acc, l| acc * (u + l))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// `z_{in}`
    Raising,
    /// `z_{ni}`
    Lowering,
}

/// The operator `z_{in}` or `z_{ni}`, `1 ≤ i ≤ n − 1`, with its
/// normalizing factors already multiplied through, so it is a polynomial
/// in the generators:
///
/// `z_{ni} = Σ E_{i_1 i} E_{i_2 i_1} ⋯ E_{n i_s} · ∏_{t ∉ chain} (h_i − h_t)`
/// over chains `i < i_1 < … < i_s < n`, `t` ranging over `i < t < n`, and
///
/// `z_{in} = Σ E_{i i_1} E_{i_1 i_2} ⋯ E_{i_s n} · ∏_{t ∉ chain} (h_i − h_t)`
/// over chains `i > i_1 > … > i_s ≥ 1`, `t` ranging over `1 ≤ t < i`.
///
/// The identities it is checked against only hold on vectors killed by
/// every `E_ab`, `a < b < n`.
pub fn lowering_operator_z(rep: &GlRepresentation, i: usize, dir: Direction) -> Operator {
    let n = rep.rank();
    assert!(i >= 1 && i < n, "index out of range");
    let pool: Vec<usize> = match dir {
        Direction::Lowering => (i + 1..n).collect(),
        Direction::Raising => (1..i).rev().collect(),
    };
    let hi = rep.h(i);
    let hs: BTreeMap<usize, Vec<Rational>> = pool.iter().map(|&t| (t, rep.h(t))).collect();
    let dim = rep.dim();
    let mut total = Operator::zero(dim);
    for mask in 0u32..(1 << pool.len()) {
        let chain: Vec<usize> = pool
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &t)| t)
            .collect();
        // indices visited: i, chain..., n
        let mut path = vec![i];
        path.extend(&chain);
        path.push(n);
        let mut prod = Operator::identity(dim);
        for w in path.windows(2) {
            let e = match dir {
                Direction::Lowering => rep.gen(w[1], w[0]),
                Direction::Raising => rep.gen(w[0], w[1]),
            };
            prod = prod.mul(e);
        }
        let diag: Vec<Rational> = (0..dim)
            .map(|c| {
                pool.iter()
                    .filter(|t| !chain.contains(t))
                    .fold(Rational::one(), |acc, t| acc * (&hi[c] - &hs[t][c]))
            })
            .collect();
        total = total.add(&prod.mul_diag(&diag));
    }
    total
}

/// Raising generators `E_ab`, `a < b < n`, of the subalgebra `gl(n−1)`.
fn sub_raising(rep: &GlRepresentation) -> Vec<&Operator> {
    let n = rep.rank();
    let mut v = Vec::new();
    for a in 1..n {
        for b in a + 1..n {
            v.push(rep.gen(a, b));
        }
    }
    v
}

/// Basis of the vectors of weight `μ` under `gl(n−1)` killed by every
/// `E_ab`, `a < b < n`.
pub fn g_highest_vectors(rep: &GlRepresentation, mu: &[Rational]) -> Vec<SparseVec> {
    let n = rep.rank();
    let cols: Vec<usize> = (0..rep.dim())
        .filter(|&c| rep.basis[c].weight()[..n - 1] == *mu)
        .collect();
    joint_kernel(&sub_raising(rep), &cols)
}

/// All `gl(n−1)` highest vectors.
pub fn all_g_highest_vectors(rep: &GlRepresentation) -> Vec<SparseVec> {
    let cols: Vec<usize> = (0..rep.dim()).collect();
    joint_kernel(&sub_raising(rep), &cols)
}

/// Basis index of the vector labelled by the pattern whose rows below the
/// top are all truncations of `μ`.
fn mu_vector(rep: &GlRepresentation, mu: &[Rational]) -> Option<usize> {
    let n = rep.rank();
    let mut rows: Vec<Vec<Rational>> = (1..n).map(|k| mu[..k].to_vec()).collect();
    rows.push(rep.hw.entries().to_vec());
    rep.index(&GtPatternA::from_rows(rows))
}

/// Admissible `gl(n−1)` highest weights: `λ_i ≥ μ_i ≥ λ_{i+1}` in integer
/// steps.
pub fn admissible_mus(hw: &GlHighestWeight) -> Vec<Vec<Rational>> {
    let lam = hw.entries();
    let n = lam.len();
    let mut out = vec![Vec::new()];
    for i in 0..n - 1 {
        let mut next = Vec::new();
        for prefix in &out {
            let mut v = lam[i + 1].clone();
            while v <= lam[i] {
                let mut p = prefix.clone();
                p.push(v.clone());
                next.push(p);
                v += Rational::one();
            }
        }
        out = next;
    }
    out
}

/// Checks `z_{in} ξ_μ = −∏_j (m_i − l_j) ξ_{μ+δ_i}` with `m_i = μ_i − i + 1`
/// for every admissible `μ` and `1 ≤ i < n`, `ξ_μ` being the basis vector
/// whose lower rows are truncations of `μ`. Returns the number of cases.
pub fn check_raising_action(rep: &GlRepresentation) -> Result<usize, String> {
    let n = rep.rank();
    if n < 2 {
        return Ok(0);
    }
    let ls = rep.hw.l_values();
    let zs: Vec<Operator> = (1..n)
        .map(|i| lowering_operator_z(rep, i, Direction::Raising))
        .collect();
    let mut cases = 0;
    for mu in admissible_mus(&rep.hw) {
        let src = mu_vector(rep, &mu)
            .ok_or_else(|| format!("no basis vector for mu={}", display_tuple(&mu)))?;
        for i in 1..n {
            let m_i = &mu[i - 1] - int(i as i64 - 1);
            let coeff = -ls.iter().fold(Rational::one(), |a, l| a * (&m_i - l));
            let mut up = mu.clone();
            up[i - 1] += Rational::one();
            let mut expected = SparseVec::new();
            if let Some(t) = mu_vector(rep, &up) {
                add_into(&mut expected, t, coeff.clone());
            } else if !coeff.is_zero() {
                return Err(format!(
                    "mu={}, i={i}: target missing but coefficient {coeff}",
                    display_tuple(&mu)
                ));
            }
            let got = zs[i - 1].apply(&BTreeMap::from([(src, Rational::one())]));
            if got != expected {
                return Err(format!(
                    "mu={}, i={i}: got {}, expected {}",
                    display_tuple(&mu),
                    display_vec(&got),
                    display_vec(&expected)
                ));
            }
            cases += 1;
        }
    }
    Ok(cases)
}

/// Checks `[z_{ni}, z_{nj}] = 0` for all `i, j` and `[z_{in}, z_{nj}] = 0`
/// for `i ≠ j` on every `gl(n−1)` highest vector.
pub fn check_z_commutation(rep: &GlRepresentation) -> Result<usize, String> {
    let n = rep.rank();
    if n < 2 {
        return Ok(0);
    }
    let low: Vec<Operator> = (1..n)
        .map(|i| lowering_operator_z(rep, i, Direction::Lowering))
        .collect();
    let up: Vec<Operator> = (1..n)
        .map(|i| lowering_operator_z(rep, i, Direction::Raising))
        .collect();
    let vecs = all_g_highest_vectors(rep);
    let mut cases = 0;
    for i in 0..n - 1 {
        for j in 0..n - 1 {
            let mut pairs = vec![("z_ni z_nj", &low[i], &low[j])];
            if i != j {
                pairs.push(("z_in z_nj", &up[i], &low[j]));
            }
            for (name, a, b) in pairs {
                for v in &vecs {
                    let ab = a.apply(&b.apply(v));
                    let ba = b.apply(&a.apply(v));
                    if ab != ba {
                        return Err(format!(
                            "{name} with i={}, j={} on {}",
                            i + 1,
                            j + 1,
                            display_vec(v)
                        ));
                    }
                    cases += 1;
                }
            }
        }
    }
    Ok(cases)
}

/// The contravariant form: the symmetric matrix `G` with
/// `E_ijᵀ G = G E_ji` and value 1 on the highest vector.
///
/// Only pairs of basis vectors of equal weight are unknowns; the equations
/// come from the simple generators `E_{k,k+1}`.
pub fn contravariant_gram(rep: &GlRepresentation) -> Result<Operator, Error> {
    let dim = rep.dim();
    let weights: Vec<Vec<Rational>> = rep.basis.iter().map(GtPatternA::weight).collect();
    let mut by_weight: BTreeMap<&Vec<Rational>, Vec<usize>> = BTreeMap::new();
    for (a, w) in weights.iter().enumerate() {
        by_weight.entry(w).or_default().push(a);
    }
    let mut unknown: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for group in by_weight.values() {
        for (x, &a) in group.iter().enumerate() {
            for &b in &group[x..] {
                let next = unknown.len();
                unknown.insert((a, b), next);
            }
        }
    }
    let var = |a: usize, b: usize| unknown[&(a.min(b), a.max(b))];

    let n = rep.rank();
    let mut eqs: Vec<(SparseVec, Rational)> = Vec::new();
    let mut hw_row = SparseVec::new();
    let top = rep.highest_index();
    hw_row.insert(var(top, top), Rational::one());
    eqs.push((hw_row, Rational::one()));
    for k in 1..n {
        let e = rep.gen(k, k + 1);
        let f = rep.gen(k + 1, k);
        for (a, weight) in weights.iter().enumerate() {
            let mut shifted = weight.clone();
            shifted[k - 1] += Rational::one();
            shifted[k] -= Rational::one();
            let Some(targets) = by_weight.get(&shifted) else {
                continue;
            };
            for &b in targets {
                // ⟨E e_a, e_b⟩ − ⟨e_a, F e_b⟩ = 0
                let mut row = SparseVec::new();
                for (&r, v) in e.column(a) {
                    add_into(&mut row, var(r, b), v.clone());
                }
                for (&r, v) in f.column(b) {
                    add_into(&mut row, var(a, r), -v.clone());
                }
                if !row.is_empty() {
                    eqs.push((row, Rational::zero()));
                }
            }
        }
    }
    let sol = match linalg::solve_unique(&eqs, unknown.len()) {
        None => {
            return Err(Error::Inconsistent(
                "adjointness equations have no solution".into(),
            ))
        }
        Some(Err(k)) => {
            return Err(Error::Inconsistent(format!(
                "form not unique: {k} free parameters"
            )))
        }
        Some(Ok(x)) => x,
    };
    let mut g = Operator::zero(dim);
    for (&(a, b), &x) in &unknown {
        g.set(a, b, sol[x].clone());
        g.set(b, a, sol[x].clone());
    }
    Ok(g)
}

/// `E_ijᵀ G = G E_ji` for every `i, j`; returns the first failing pair.
pub fn check_adjointness(rep: &GlRepresentation, g: &Operator) -> Result<(), (usize, usize)> {
    let n = rep.rank();
    for i in 1..=n {
        for j in 1..=n {
            if rep.gen(i, j).transpose().mul(g) != g.mul(rep.gen(j, i)) {
                return Err((i, j));
            }
        }
    }
    Ok(())
}

/// Rank of the span of the generators as matrices.
pub fn span_rank(gens: &BTreeMap<Key, Operator>) -> usize {
    let mut e = Echelon::new();
    for m in gens.values() {
        e.insert(&m.flatten());
    }
    e.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hw(w: &[i64]) -> GlHighestWeight {
        GlHighestWeight::new(w.iter().map(|&v| int(v)).collect()).unwrap()
    }

    fn op(dim: usize, e: &[(usize, usize, i64)]) -> Operator {
        let mut m = Operator::zero(dim);
        for &(r, c, v) in e {
            m.add_entry(r, c, int(v));
        }
        m
    }

    #[test]
    fn two_dimensional_rep() {
        let rep = build_gl(&hw(&[1, 0]));
        // basis order: λ_11 = 0, then λ_11 = 1
        assert_eq!(rep.gen(1, 2), &op(2, &[(1, 0, 1)]));
        assert_eq!(rep.gen(2, 1), &op(2, &[(0, 1, 1)]));
        assert_eq!(
            rep.gen(1, 2).commutator(rep.gen(2, 1)),
            Operator::diagonal(vec![int(-1), int(1)])
        );
    }

    #[test]
    fn trivial_rep_is_zero() {
        let rep = build_gl(&hw(&[0, 0, 0]));
        assert_eq!(rep.dim(), 1);
        assert!(rep.gens().values().all(Operator::is_zero));
    }

    #[test]
    fn t_values() {
        let rep = build_gl(&hw(&[1, 0]));
        assert_eq!(
            gelfand_invariant_t(&rep, &int(0)),
            Operator::scalar(2, &int(-1))
        );
        let rep = build_gl(&hw(&[2, 1, 0]));
        assert_eq!(
            gelfand_invariant_t(&rep, &int(1)),
            Operator::scalar(8, &int(-3))
        );
        let triv = build_gl(&hw(&[0, 0, 0]));
        for u in [-2, 0, 5] {
            let u = int(u);
            let want = (0..3).fold(Rational::one(), |a, i| a * (&u - int(i)));
            assert_eq!(gelfand_invariant_t(&triv, &u), Operator::scalar(1, &want));
        }
    }

    #[test]
    fn z_rank_two_is_plain_generator() {
        let rep = build_gl(&hw(&[1, 0]));
        assert_eq!(
            &lowering_operator_z(&rep, 1, Direction::Lowering),
            rep.gen(2, 1)
        );
        assert_eq!(
            &lowering_operator_z(&rep, 1, Direction::Raising),
            rep.gen(1, 2)
        );
        // z_12 ξ_(0) = ξ_(1)
        let z = lowering_operator_z(&rep, 1, Direction::Raising);
        assert_eq!(z.get(1, 0), int(1));
    }

    #[test]
    fn raising_action_and_commutation() {
        for w in [&[1, 0][..], &[2, 1, 0], &[2, 0, 0], &[3, 1, 0, 0]] {
            let rep = build_gl(&hw(w));
            assert!(check_raising_action(&rep).unwrap() > 0);
            assert!(check_z_commutation(&rep).is_ok());
        }
    }

    #[test]
    fn z_product_matches_t() {
        // z_{in} z_{ni} = (−1)^{n−1} T(−h_i + 1) on gl(n−1) highest vectors
        let rep = build_gl(&hw(&[2, 1, 0]));
        let n = 3;
        for i in 1..n {
            let zz = lowering_operator_z(&rep, i, Direction::Raising).mul(&lowering_operator_z(
                &rep,
                i,
                Direction::Lowering,
            ));
            for v in all_g_highest_vectors(&rep) {
                let (&c, _) = v.iter().next().unwrap();
                let h = &rep.basis()[c].weight()[i - 1] - int(i as i64 - 1);
                let t = expected_t(rep.highest_weight(), &(int(1) - h));
                let mut want = SparseVec::new();
                for (&k, x) in &v {
                    add_into(&mut want, k, x * &t);
                }
                assert_eq!(zz.apply(&v), want);
            }
        }
    }

    #[test]
    fn highest_vector_spaces() {
        let rep = build_gl(&hw(&[1, 0]));
        assert_eq!(g_highest_vectors(&rep, &[int(0)]).len(), 1);
        assert_eq!(g_highest_vectors(&rep, &[int(2)]).len(), 0);
        let rep = build_gl(&hw(&[2, 1, 0]));
        let mus = admissible_mus(rep.highest_weight());
        assert_eq!(mus.len(), 4);
        for mu in mus {
            assert_eq!(g_highest_vectors(&rep, &mu).len(), 1);
        }
    }

    #[test]
    fn gram_examples() {
        let g = contravariant_gram(&build_gl(&hw(&[0, 0, 0]))).unwrap();
        assert_eq!(g, Operator::identity(1));
        let g = contravariant_gram(&build_gl(&hw(&[1, 0]))).unwrap();
        assert_eq!(g, Operator::identity(2));
        let rep = build_gl(&hw(&[2, 1, 0]));
        let g = contravariant_gram(&rep).unwrap();
        assert!(g.is_diagonal());
        assert!((0..8).all(|a| g.get(a, a) > Rational::zero()));
        assert!(check_adjointness(&rep, &g).is_ok());
    }
}
