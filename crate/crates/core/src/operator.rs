//! Sparse exact matrices acting on a fixed ordered basis.
//!
//! Column `c` holds the image of basis vector `c`; entry `(r, c)` is the
//! coefficient of basis vector `r` in that image. Zero entries are never
//! stored.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::arith::Rational;

/// Sparse vector: basis index to nonzero coefficient.
pub type SparseVec = BTreeMap<usize, Rational>;

/// `{index: value, …}` with values as exact strings.
pub fn display_vec(v: &SparseVec) -> String {
    let parts: Vec<String> = v.iter().map(|(i, x)| format!("{i}: {x}")).collect();
    format!("{{{}}}", parts.join(", "))
}

pub fn add_into(v: &mut SparseVec, idx: usize, c: Rational) {
    if c.is_zero() {
        return;
    }
    match v.entry(idx) {
        alloc::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        alloc::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Operator {
    dim: usize,
    cols: Vec<SparseVec>,
}

impl Operator {
    pub fn zero(dim: usize) -> Self {
        Operator {
            dim,
            cols: vec![SparseVec::new(); dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::diagonal((0..dim).map(|_| Rational::one()).collect())
    }

    pub fn scalar(dim: usize, s: &Rational) -> Self {
        Self::diagonal((0..dim).map(|_| s.clone()).collect())
    }

    pub fn diagonal(diag: Vec<Rational>) -> Self {
        let mut op = Self::zero(diag.len());
        for (i, d) in diag.into_iter().enumerate() {
            op.add_entry(i, i, d);
        }
        op
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> Rational {
        self.cols[col]
            .get(&row)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn set(&mut self, row: usize, col: usize, v: Rational) {
        assert!(row < self.dim && col < self.dim, "index out of range");
        if v.is_zero() {
            self.cols[col].remove(&row);
        } else {
            self.cols[col].insert(row, v);
        }
    }

    pub fn add_entry(&mut self, row: usize, col: usize, v: Rational) {
        assert!(row < self.dim && col < self.dim, "index out of range");
        add_into(&mut self.cols[col], row, v);
    }

    pub fn column(&self, col: usize) -> &SparseVec {
        &self.cols[col]
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(|c| c.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_empty())
    }

    /// Nonzero entries sorted by `(row, col)`.
    pub fn entries(&self) -> Vec<(usize, usize, Rational)> {
        let mut out: Vec<_> = self
            .cols
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(&r, v)| (r, c, v.clone())))
            .collect();
        out.sort_by_key(|a| (a.0, a.1));
        out
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (&c, x) in v {
            for (&r, a) in &self.cols[c] {
                add_into(&mut out, r, a * x);
            }
        }
        out
    }

    pub fn add(&self, rhs: &Operator) -> Operator {
        assert_eq!(self.dim, rhs.dim);
        let mut out = self.clone();
        for (c, col) in rhs.cols.iter().enumerate() {
            for (&r, v) in col {
                add_into(&mut out.cols[c], r, v.clone());
            }
        }
        out
    }

    pub fn scale(&self, s: &Rational) -> Operator {
        if s.is_zero() {
            return Operator::zero(self.dim);
        }
        Operator {
            dim: self.dim,
            cols: self
                .cols
                .iter()
                .map(|col| col.iter().map(|(&r, v)| (r, v * s)).collect())
                .collect(),
        }
    }

    pub fn neg(&self) -> Operator {
        self.scale(&-Rational::one())
    }

    pub fn sub(&self, rhs: &Operator) -> Operator {
        self.add(&rhs.neg())
    }

    /// Matrix product `self · rhs` (apply `rhs` first).
    pub fn mul(&self, rhs: &Operator) -> Operator {
        assert_eq!(self.dim, rhs.dim);
        Operator {
            dim: self.dim,
            cols: rhs.cols.iter().map(|col| self.apply(col)).collect(),
        }
    }

    /// `[self, rhs] = self·rhs − rhs·self`.
    pub fn commutator(&self, rhs: &Operator) -> Operator {
        self.mul(rhs).sub(&rhs.mul(self))
    }

    /// Multiply on the right by a diagonal matrix (scales columns).
    pub fn mul_diag(&self, diag: &[Rational]) -> Operator {
        Operator {
            dim: self.dim,
            cols: self
                .cols
                .iter()
                .zip(diag)
                .map(|(col, d)| {
                    if d.is_zero() {
                        SparseVec::new()
                    } else {
                        col.iter().map(|(&r, v)| (r, v * d)).collect()
                    }
                })
                .collect(),
        }
    }

    /// If the operator is `s·Id`, returns `s`; otherwise the first offending
    /// `(row, col)`.
    pub fn as_scalar(&self) -> Result<Rational, (usize, usize)> {
        if self.dim == 0 {
            return Ok(Rational::zero());
        }
        let s = self.get(0, 0);
        for (c, col) in self.cols.iter().enumerate() {
            for &r in col.keys() {
                if r != c {
                    return Err((r, c));
                }
            }
            if self.get(c, c) != s {
                return Err((c, c));
            }
        }
        Ok(s)
    }

    /// Whether every nonzero entry is on the diagonal.
    pub fn is_diagonal(&self) -> bool {
        self.cols
            .iter()
            .enumerate()
            .all(|(c, col)| col.keys().all(|&r| r == c))
    }

    pub fn transpose(&self) -> Operator {
        let mut out = Operator::zero(self.dim);
        for (c, col) in self.cols.iter().enumerate() {
            for (&r, v) in col {
                out.cols[r].insert(c, v.clone());
            }
        }
        out
    }

    /// Flattened `(row·dim + col) → value`, for rank computations over
    /// several operators.
    pub fn flatten(&self) -> SparseVec {
        let mut out = SparseVec::new();
        for (c, col) in self.cols.iter().enumerate() {
            for (&r, v) in col {
                out.insert(r * self.dim + c, v.clone());
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;
    use proptest::prelude::*;

    fn op(dim: usize, e: &[(usize, usize, i64)]) -> Operator {
        let mut m = Operator::zero(dim);
        for &(r, c, v) in e {
            m.add_entry(r, c, int(v));
        }
        m
    }

    #[test]
    fn product_and_commutator() {
        // e = E_01, f = E_10 on a 2-dim space: [e, f] = diag(1, -1)
        let e = op(2, &[(0, 1, 1)]);
        let f = op(2, &[(1, 0, 1)]);
        assert_eq!(e.commutator(&f), Operator::diagonal(vec![int(1), int(-1)]));
        assert_eq!(e.mul(&e), Operator::zero(2));
    }

    #[test]
    fn no_explicit_zeros() {
        let mut m = op(2, &[(0, 1, 3)]);
        m.add_entry(0, 1, int(-3));
        assert_eq!(m.nnz(), 0);
        assert!(m.is_zero());
    }

    #[test]
    fn scalar_detection() {
        assert_eq!(Operator::scalar(3, &int(4)).as_scalar(), Ok(int(4)));
        assert_eq!(op(2, &[(0, 0, 1), (1, 1, 2)]).as_scalar(), Err((1, 1)));
        assert_eq!(
            op(2, &[(0, 0, 1), (1, 0, 2), (1, 1, 1)]).as_scalar(),
            Err((1, 0))
        );
    }

    fn arb_op() -> impl Strategy<Value = Operator> {
        proptest::collection::vec((0usize..4, 0usize..4, -3i64..=3), 0..8).prop_map(|e| op(4, &e))
    }

    proptest! {
        #[test]
        fn jacobi_identity(a in arb_op(), b in arb_op(), c in arb_op()) {
            let j = a.commutator(&b.commutator(&c))
                .add(&b.commutator(&c.commutator(&a)))
                .add(&c.commutator(&a.commutator(&b)));
            prop_assert!(j.is_zero());
        }

        #[test]
        fn product_is_associative(a in arb_op(), b in arb_op(), c in arb_op()) {
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        }
    }
}
