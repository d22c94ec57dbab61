//! Exact Gaussian elimination on sparse rational rows.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::arith::Rational;
use crate::operator::{add_into, Operator, SparseVec};

/// Incrementally maintained reduced row echelon form.
///
/// Every stored row has a leading coefficient 1 at its pivot column and
/// zeros in every other pivot column.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the stored rows.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut v = v.clone();
        for (&p, row) in &self.rows {
            if let Some(c) = v.get(&p).cloned() {
                for (&j, x) in row {
                    add_into(&mut v, j, -(&c * x));
                }
            }
        }
        v
    }

    /// Insert a row; returns `false` when it was already in the span.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let mut r = self.reduce(v);
        let Some((&p, lead)) = r.iter().next() else {
            return false;
        };
        let inv = lead.recip();
        for x in r.values_mut() {
            *x *= &inv;
        }
        for row in self.rows.values_mut() {
            if let Some(c) = row.get(&p).cloned() {
                for (&j, x) in &r {
                    add_into(row, j, -(&c * x));
                }
            }
        }
        self.rows.insert(p, core::mem::take(&mut r));
        true
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    pub fn pivots(&self) -> impl Iterator<Item = (&usize, &SparseVec)> {
        self.rows.iter()
    }

    /// Basis of `{x ∈ Q^n : row·x = 0 for all rows}`.
    pub fn nullspace(&self, n: usize) -> Vec<SparseVec> {
        let mut out = Vec::new();
        for free in (0..n).filter(|c| !self.rows.contains_key(c)) {
            let mut v = SparseVec::new();
            v.insert(free, Rational::one());
            for (&p, row) in &self.rows {
                if let Some(c) = row.get(&free) {
                    v.insert(p, -c);
                }
            }
            out.push(v);
        }
        out
    }
}

pub fn rank<'a>(rows: impl IntoIterator<Item = &'a SparseVec>) -> usize {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

/// Basis of the solution space of the homogeneous system `rows · x = 0`.
pub fn nullspace<'a>(rows: impl IntoIterator<Item = &'a SparseVec>, n: usize) -> Vec<SparseVec> {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    e.nullspace(n)
}

/// Solve `A x = b` for a unique `x`, where each equation is given as a row
/// over the `n` unknowns with right-hand side. Returns `None` if the system
/// is inconsistent and `Some(Err(k))` with the nullity `k` if it is
/// underdetermined.
pub fn solve_unique(
    eqs: &[(SparseVec, Rational)],
    n: usize,
) -> Option<Result<Vec<Rational>, usize>> {
    let mut e = Echelon::new();
    for (row, rhs) in eqs {
        let mut r = row.clone();
        add_into(&mut r, n, rhs.clone());
        e.insert(&r);
    }
    if e.rows.contains_key(&n) {
        return None;
    }
    if e.rank() < n {
        return Some(Err(n - e.rank()));
    }
    let mut x = alloc::vec![Rational::zero(); n];
    for (&p, row) in &e.rows {
        x[p] = row.get(&n).cloned().unwrap_or_else(Rational::zero);
    }
    Some(Ok(x))
}

/// Joint kernel of `ops` restricted to the span of the basis vectors
/// `cols`, as vectors in global coordinates.
pub fn joint_kernel(ops: &[&Operator], cols: &[usize]) -> Vec<SparseVec> {
    let local: BTreeMap<usize, usize> = cols.iter().enumerate().map(|(a, &c)| (c, a)).collect();
    let mut rows: BTreeMap<(usize, usize), SparseVec> = BTreeMap::new();
    for (o, op) in ops.iter().enumerate() {
        for &c in cols {
            for (&r, v) in op.column(c) {
                rows.entry((o, r)).or_default().insert(local[&c], v.clone());
            }
        }
    }
    nullspace(rows.values(), cols.len())
        .into_iter()
        .map(|v| v.into_iter().map(|(a, x)| (cols[a], x)).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    fn sv(e: &[(usize, i64)]) -> SparseVec {
        let mut v = SparseVec::new();
        for &(i, x) in e {
            add_into(&mut v, i, int(x));
        }
        v
    }

    #[test]
    fn rank_and_kernel() {
        let rows = [sv(&[(0, 1), (1, 1)]), sv(&[(0, 2), (1, 2)]), sv(&[(2, 1)])];
        assert_eq!(rank(rows.iter()), 2);
        let k = nullspace(rows.iter(), 3);
        assert_eq!(k, alloc::vec![sv(&[(0, -1), (1, 1)])]);
    }

    #[test]
    fn unique_solution() {
        // x + y = 3, x - y = 1
        let eqs = [
            (sv(&[(0, 1), (1, 1)]), int(3)),
            (sv(&[(0, 1), (1, -1)]), int(1)),
        ];
        assert_eq!(solve_unique(&eqs, 2), Some(Ok(alloc::vec![int(2), int(1)])));
        let bad = [(sv(&[(0, 1)]), int(1)), (sv(&[(0, 1)]), int(2))];
        assert_eq!(solve_unique(&bad, 1), None);
        assert_eq!(solve_unique(&eqs[..1], 2), Some(Err(1)));
    }
}
