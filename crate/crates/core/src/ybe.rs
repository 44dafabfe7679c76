//! Set-theoretic solutions of the Yang-Baxter equation.
//!
//! A solution on a finite set X is a map `r : X x X -> X x X` satisfying
//! the braid relation `(r x id)(id x r)(r x id) = (id x r)(r x id)(id x r)`.
//! Every skew brace yields one: `r(x, y) = (λ_x(y), λ_x(y)⁻¹ · x · y)`
//! (the inverse and product taken in the multiplicative group). Such
//! solutions are bijective and non-degenerate, and are involutive exactly
//! when the additive group is abelian.
//!
//! [`YbeSolution`] stores an arbitrary map given by its table and exposes
//! the braid check, bijectivity, and non-degeneracy as queries, so a
//! claimed solution can be audited rather than trusted.

use crate::brace::SkewBrace;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum YbeError {
    #[error("table is not a square array over {expected} elements")]
    BadShape { expected: usize },
    #[error("entry at ({x}, {y}) is out of range")]
    OutOfRange { x: usize, y: usize },
}

/// A map `r : X x X -> X x X` on `X = {0, .., n-1}`, given by its table.
/// Construction only checks shape and range; whether the map is a
/// solution is answered by [`YbeSolution::first_braid_violation`] and the
/// other predicates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YbeSolution {
    n: usize,
    /// `table[x * n + y]` = `r(x, y)`.
    table: Vec<(usize, usize)>,
}

impl YbeSolution {
    /// Builds from `rows[x][y] = r(x, y)`.
    pub fn from_table(rows: &[Vec<(usize, usize)>]) -> Result<YbeSolution, YbeError> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(YbeError::BadShape { expected: n });
        }
        let mut table = Vec::with_capacity(n * n);
        for (x, row) in rows.iter().enumerate() {
            for (y, &(u, v)) in row.iter().enumerate() {
                if u >= n || v >= n {
                    return Err(YbeError::OutOfRange { x, y });
                }
                table.push((u, v));
            }
        }
        Ok(YbeSolution { n, table })
    }

    /// The solution associated to a skew brace:
    /// `r(x, y) = (λ_x(y), λ_x(y)⁻¹ · x · y)`. The construction
    /// guarantees `u · v = x · y` and bijectivity; both are asserted.
    pub fn from_brace(b: &SkewBrace) -> YbeSolution {
        let n = b.order();
        let mut table = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                let u = b.lambda(x, y);
                let v = b.times(b.inv(u), b.times(x, y));
                assert_eq!(
                    b.times(u, v),
                    b.times(x, y),
                    "derived map must preserve products"
                );
                table.push((u, v));
            }
        }
        let sol = YbeSolution { n, table };
        assert!(
            sol.is_bijective(),
            "the map derived from a skew brace is a bijection"
        );
        sol
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn apply(&self, x: usize, y: usize) -> (usize, usize) {
        self.table[x * self.n + y]
    }

    /// Is `r` a bijection of `X x X`?
    pub fn is_bijective(&self) -> bool {
        let n = self.n;
        let mut seen = vec![false; n * n];
        for &(u, v) in &self.table {
            let k = u * n + v;
            if seen[k] {
                return false;
            }
            seen[k] = true;
        }
        true
    }

    /// Left non-degeneracy: for each x, the map `y -> first(r(x, y))` is
    /// a bijection.
    pub fn is_left_nondegenerate(&self) -> bool {
        let n = self.n;
        (0..n).all(|x| {
            let mut seen = vec![false; n];
            (0..n).all(|y| {
                let (u, _) = self.apply(x, y);
                !std::mem::replace(&mut seen[u], true)
            })
        })
    }

    /// Right non-degeneracy: for each y, the map `x -> second(r(x, y))`
    /// is a bijection.
    pub fn is_right_nondegenerate(&self) -> bool {
        let n = self.n;
        (0..n).all(|y| {
            let mut seen = vec![false; n];
            (0..n).all(|x| {
                let (_, v) = self.apply(x, y);
                !std::mem::replace(&mut seen[v], true)
            })
        })
    }

    /// Is `r ∘ r` the identity?
    pub fn is_involutive(&self) -> bool {
        let n = self.n;
        (0..n).all(|x| {
            (0..n).all(|y| {
                let (u, v) = self.apply(x, y);
                self.apply(u, v) == (x, y)
            })
        })
    }

    /// The lexicographically first triple `(x, y, z)` where the braid
    /// relation fails, or `None` if `r` satisfies it everywhere.
    pub fn first_braid_violation(&self) -> Option<(usize, usize, usize)> {
        let r12 = |(x, y, z): (usize, usize, usize)| {
            let (u, v) = self.apply(x, y);
            (u, v, z)
        };
        let r23 = |(x, y, z): (usize, usize, usize)| {
            let (u, v) = self.apply(y, z);
            (x, u, v)
        };
        let n = self.n;
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let t = (x, y, z);
                    if r12(r23(r12(t))) != r23(r12(r23(t))) {
                        return Some(t);
                    }
                }
            }
        }
        None
    }

    /// Convenience wrapper: no braid violation anywhere.
    pub fn satisfies_braid_relation(&self) -> bool {
        self.first_braid_violation().is_none()
    }

    /// One line per pair, `x y -> u v`, in lexicographic order.
    pub fn export(&self) -> String {
        let mut out = String::new();
        for x in 0..self.n {
            for y in 0..self.n {
                let (u, v) = self.apply(x, y);
                out.push_str(&format!("{x} {y} -> {u} {v}\n"));
            }
        }
        out
    }
}
