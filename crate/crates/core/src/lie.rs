//! Generator labels, structure constants and defining representations.
//!
//! Structure constants are never typed in: they are read off from
//! commutators of the generators in the defining representation, so the
//! sign conventions used by the builders and by the checks are the same
//! by construction.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::arith::{int, Rational};
use crate::operator::Operator;
use crate::Error;

/// Generator label `(i, j)`. For `gl(n)` indices run over `1..=n`; for
/// `o(2n+1)` over `-n..=n`.
pub type Key = (i32, i32);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algebra {
    /// `gl(n)`
    Gl(usize),
    /// `o(2n+1)`
    OddOrthogonal(usize),
}

impl Algebra {
    pub fn rank(self) -> usize {
        match self {
            Algebra::Gl(n) | Algebra::OddOrthogonal(n) => n,
        }
    }

    /// All labels `(i, j)`, in lexicographic order.
    pub fn all_keys(self) -> Vec<Key> {
        let n = self.rank() as i32;
        let r: Vec<i32> = match self {
            Algebra::Gl(_) => (1..=n).collect(),
            Algebra::OddOrthogonal(_) => (-n..=n).collect(),
        };
        r.iter()
            .flat_map(|&i| r.iter().map(move |&j| (i, j)))
            .collect()
    }

    /// A label together with the sign relating it to its canonical label:
    /// `X_key = sign · X_canonical`. Returns `None` for `F(-i, i) = 0`.
    pub fn canonical(self, key: Key) -> Option<(Key, i32)> {
        match self {
            Algebra::Gl(_) => Some((key, 1)),
            Algebra::OddOrthogonal(_) => {
                let (i, j) = key;
                if i == -j {
                    return None;
                }
                let mirror = (-j, -i);
                if key >= mirror {
                    Some((key, 1))
                } else {
                    Some((mirror, -1))
                }
            }
        }
    }

    /// Labels of a basis of the algebra.
    pub fn basis_keys(self) -> Vec<Key> {
        let mut v: Vec<Key> = self
            .all_keys()
            .into_iter()
            .filter(|&k| matches!(self.canonical(k), Some((c, _)) if c == k))
            .collect();
        v.sort();
        v
    }

    pub fn dimension(self) -> usize {
        let n = self.rank();
        match self {
            Algebra::Gl(_) => n * n,
            Algebra::OddOrthogonal(_) => n * (2 * n + 1),
        }
    }

    /// Diagonal labels `(k, k)` spanning the Cartan subalgebra, `k ≥ 1`.
    pub fn cartan_keys(self) -> Vec<Key> {
        (1..=self.rank() as i32).map(|k| (k, k)).collect()
    }

    /// Labels `(i, j)`, `i < j`, of the raising generators (those that kill
    /// the highest vector), canonical only.
    pub fn raising_keys(self) -> Vec<Key> {
        self.basis_keys()
            .into_iter()
            .filter(|&(i, j)| i < j)
            .collect()
    }

    /// Generators in the defining representation: `E_ij` for `gl(n)`, and
    /// `F_ij = E_ij − E_{-j,-i}` on rows and columns indexed `-n..=n` for
    /// `o(2n+1)`. Every label is present, including the zero ones.
    pub fn defining(self) -> BTreeMap<Key, Operator> {
        let n = self.rank() as i32;
        let (dim, off) = match self {
            Algebra::Gl(_) => (n as usize, 1),
            Algebra::OddOrthogonal(_) => ((2 * n + 1) as usize, -n),
        };
        let ix = |a: i32| (a - off) as usize;
        self.all_keys()
            .into_iter()
            .map(|(i, j)| {
                let mut m = Operator::zero(dim);
                m.add_entry(ix(i), ix(j), Rational::one());
                if let Algebra::OddOrthogonal(_) = self {
                    m.add_entry(ix(-j), ix(-i), -Rational::one());
                }
                ((i, j), m)
            })
            .collect()
    }

    /// Coordinates of a matrix in the defining representation with respect
    /// to the basis labels.
    pub fn decompose(self, m: &Operator) -> Vec<(Key, Rational)> {
        let off = match self {
            Algebra::Gl(_) => 1,
            Algebra::OddOrthogonal(n) => -(n as i32),
        };
        self.basis_keys()
            .into_iter()
            .filter_map(|(i, j)| {
                let v = m.get((i - off) as usize, (j - off) as usize);
                (!v.is_zero()).then_some(((i, j), v))
            })
            .collect()
    }
}

/// `[X_a, X_b] = Σ c · X_key` for all pairs of basis labels.
#[derive(Clone, Debug)]
pub struct StructureTable {
    algebra: Algebra,
    keys: Vec<Key>,
    table: BTreeMap<(Key, Key), Vec<(Key, Rational)>>,
}

impl StructureTable {
    pub fn new(algebra: Algebra) -> Self {
        let def = algebra.defining();
        let keys = algebra.basis_keys();
        let mut table = BTreeMap::new();
        for &a in &keys {
            for &b in &keys {
                let c = def[&a].commutator(&def[&b]);
                let d = algebra.decompose(&c);
                debug_assert!(combine(&def, &d, c.dim()) == c);
                table.insert((a, b), d);
            }
        }
        StructureTable {
            algebra,
            keys,
            table,
        }
    }

    pub fn algebra(&self) -> Algebra {
        self.algebra
    }

    pub fn keys(&self) -> &[Key] {
        &self.keys
    }

    /// Bracket of two basis labels.
    pub fn bracket(&self, a: Key, b: Key) -> &[(Key, Rational)] {
        &self.table[&(a, b)]
    }

    /// Bracket of two arbitrary labels, expressed in basis labels.
    pub fn bracket_any(&self, a: Key, b: Key) -> Vec<(Key, Rational)> {
        let (Some((ca, sa)), Some((cb, sb))) =
            (self.algebra.canonical(a), self.algebra.canonical(b))
        else {
            return Vec::new();
        };
        let s = int((sa * sb) as i64);
        self.bracket(ca, cb)
            .iter()
            .map(|(k, v)| (*k, v * &s))
            .collect()
    }
}

/// `Σ c · gens[key]`.
pub fn combine(gens: &BTreeMap<Key, Operator>, terms: &[(Key, Rational)], dim: usize) -> Operator {
    terms.iter().fold(Operator::zero(dim), |acc, (k, c)| {
        acc.add(&gens[k].scale(c))
    })
}

/// Fill in every label from a generating set by repeated brackets.
///
/// Whenever the bracket of two known generators is a single multiple
/// `c · X_key` of an unknown one, `X_key` is set to that bracket divided by
/// `c`. The returned map has every label of [`Algebra::all_keys`], with
/// `F(-j,-i) = -F(i,j)` and `F(-i,i) = 0` for the orthogonal case.
pub fn close_under_brackets(
    table: &StructureTable,
    given: BTreeMap<Key, Operator>,
    dim: usize,
) -> Result<BTreeMap<Key, Operator>, Error> {
    let alg = table.algebra();
    let mut known: BTreeMap<Key, Operator> = BTreeMap::new();
    for (k, m) in given {
        if let Some((c, s)) = alg.canonical(k) {
            known.insert(c, if s == 1 { m } else { m.neg() });
        }
    }
    let total = table.keys().len();
    let mut changed = true;
    while changed && known.len() < total {
        changed = false;
        let current: Vec<Key> = known.keys().copied().collect();
        for &a in &current {
            for &b in &current {
                if let [(c, v)] = table.bracket(a, b) {
                    if !known.contains_key(c) {
                        let m = known[&a].commutator(&known[&b]).scale(&v.recip());
                        known.insert(*c, m);
                        changed = true;
                    }
                }
            }
        }
    }
    if known.len() < total {
        let missing: Vec<Key> = table
            .keys()
            .iter()
            .copied()
            .filter(|k| !known.contains_key(k))
            .collect();
        return Err(Error::Closure(format!("no bracket reaches {missing:?}")));
    }
    Ok(alg
        .all_keys()
        .into_iter()
        .map(|k| {
            let m = match alg.canonical(k) {
                None => Operator::zero(dim),
                Some((c, 1)) => known[&c].clone(),
                Some((c, _)) => known[&c].neg(),
            };
            (k, m)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_one_defining() {
        let d = Algebra::OddOrthogonal(1).defining();
        assert_eq!(
            d[&(1, 1)],
            Operator::diagonal(alloc::vec![int(-1), int(0), int(1)])
        );
        assert!(d[&(-1, 1)].is_zero());
        assert_eq!(d[&(1, 0)], d[&(0, -1)].neg());
    }

    #[test]
    fn basis_sizes() {
        for n in 1..=4 {
            assert_eq!(
                Algebra::OddOrthogonal(n).basis_keys().len(),
                n * (2 * n + 1)
            );
            assert_eq!(Algebra::OddOrthogonal(n).raising_keys().len(), n * n);
            assert_eq!(Algebra::Gl(n).basis_keys().len(), n * n);
        }
    }

    #[test]
    fn gl_table_matches_matrix_units() {
        // [E_ij, E_kl] = δ_jk E_il − δ_li E_kj
        let t = StructureTable::new(Algebra::Gl(3));
        assert_eq!(t.bracket((1, 2), (2, 3)), &[((1, 3), int(1))]);
        assert_eq!(
            t.bracket((1, 2), (2, 1)),
            &[((1, 1), int(1)), ((2, 2), int(-1))]
        );
        assert!(t.bracket((1, 2), (1, 3)).is_empty());
    }

    #[test]
    fn orthogonal_table_cartan_pairing() {
        let t = StructureTable::new(Algebra::OddOrthogonal(2));
        // [F_01, F_10] = −F_11 (F_10 = −F_{-1,0})
        let v = t.bracket_any((0, 1), (1, 0));
        assert_eq!(v, alloc::vec![((1, 1), int(-1))]);
        // [F_11, F_12] = F_12
        assert_eq!(t.bracket((1, 1), (1, 2)), &[((1, 2), int(1))]);
    }

    #[test]
    fn closure_recovers_defining_generators() {
        for n in 1..=3 {
            let alg = Algebra::OddOrthogonal(n);
            let def = alg.defining();
            let t = StructureTable::new(alg);
            let mut given = BTreeMap::new();
            for k in 1..=n as i32 {
                given.insert((k, k), def[&(k, k)].clone());
                given.insert((k - 1, k), def[&(k - 1, k)].clone());
                given.insert((k - 1, -k), def[&(k - 1, -k)].clone());
            }
            let all = close_under_brackets(&t, given, 2 * n + 1).unwrap();
            assert_eq!(all, def);
        }
    }
}
