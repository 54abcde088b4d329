use std::fmt;

use super::{int, Rational, Ring};
use crate::error::{Error, Result};

/// Square matrix over a commutative Q-algebra, stored row-major.
#[derive(Clone, PartialEq)]
pub struct RingMatrix<R> {
    dim: usize,
    entries: Vec<R>,
}

impl<R: Ring> RingMatrix<R> {
    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::DimensionMismatch("empty matrix".into()));
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != dim) {
            return Err(Error::DimensionMismatch(format!(
                "row of length {} in a {dim}x{dim} matrix",
                bad.len()
            )));
        }
        Ok(Self {
            dim,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds the matrix entrywise from `f(row, col)`.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        assert!(dim > 0, "matrix dimension must be positive");
        let entries = (0..dim * dim).map(|k| f(k / dim, k % dim)).collect();
        Self { dim, entries }
    }

    /// Identity matrix with zero/one taken from `template`'s ring.
    pub fn identity(dim: usize, template: &R) -> Self {
        let (zero, one) = (template.zero_like(), template.one_like());
        Self::from_fn(dim, |i, j| if i == j { one.clone() } else { zero.clone() })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.entries[i * self.dim + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[R]> {
        self.entries.chunks(self.dim)
    }

    pub fn map<S: Ring>(&self, f: impl FnMut(&R) -> S) -> RingMatrix<S> {
        RingMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn trace(&self) -> R {
        (1..self.dim).fold(self.get(0, 0).clone(), |acc, i| {
            acc + self.get(i, i).clone()
        })
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|e| e.clone() * c.clone())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.clone() - b.clone())
            .collect();
        Ok(Self {
            dim: self.dim,
            entries,
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let n = self.dim;
        Ok(Self::from_fn(n, |i, j| {
            let mut acc = self.get(i, 0).clone() * other.get(0, j).clone();
            for k in 1..n {
                let a = self.get(i, k);
                if a.is_zero_like() {
                    continue;
                }
                acc = acc + a.clone() * other.get(k, j).clone();
            }
            acc
        }))
    }

    /// `self^e` by binary exponentiation.
    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = Self::identity(self.dim, self.get(0, 0));
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same dimension");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same dimension");
            }
        }
        acc
    }

    /// Coefficients `c_0 = 1, c_1, ..., c_dim` of the characteristic polynomial
    /// `det(t*I - A) = sum_k c_k t^(dim-k)`, by Faddeev-LeVerrier.
    ///
    /// Only divisions by the integers `1..=dim` occur, so this is valid over
    /// any commutative Q-algebra, zero divisors included.
    pub fn char_poly_fl(&self) -> Vec<R> {
        let n = self.dim;
        let template = self.get(0, 0);
        let ident = Self::identity(n, template);
        let mut coeffs = vec![template.one_like()];
        // M_1 = I
        let mut m = ident.clone();
        for k in 1..=n {
            let am = self.mul(&m).expect("same dimension");
            let ck = am.trace().scale(&int(-(k as i64)).recip());
            if k < n {
                m = add_scaled_identity(am, &ck);
            }
            coeffs.push(ck);
        }
        coeffs
    }

    /// Determinant via Faddeev-LeVerrier.
    pub fn det_fl(&self) -> R {
        let c = self.char_poly_fl();
        let last = c[self.dim].clone();
        if self.dim.is_multiple_of(2) {
            last
        } else {
            -last
        }
    }

    /// Square submatrix on the given (sorted) row and column indices.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Result<Self> {
        if rows.len() != cols.len() || rows.is_empty() {
            return Err(Error::DimensionMismatch(
                "submatrix needs equally many nonzero rows and columns".into(),
            ));
        }
        Ok(Self::from_fn(rows.len(), |i, j| {
            self.get(rows[i], cols[j]).clone()
        }))
    }

    /// `l`-th compound matrix: minors indexed by lexicographically ordered
    /// `l`-subsets of rows and columns.
    pub fn compound(&self, l: usize) -> Result<Self> {
        if l == 0 || l > self.dim {
            return Err(Error::DimensionMismatch(format!(
                "compound order {l} for a {0}x{0} matrix",
                self.dim
            )));
        }
        let subsets = lex_subsets(self.dim, l);
        let mut minors = Vec::with_capacity(subsets.len() * subsets.len());
        for r in &subsets {
            for c in &subsets {
                minors.push(self.submatrix(r, c)?.det_fl());
            }
        }
        Ok(Self {
            dim: subsets.len(),
            entries: minors,
        })
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim == other.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch(format!(
                "{0}x{0} vs {1}x{1}",
                self.dim, other.dim
            )))
        }
    }
}

fn add_scaled_identity<R: Ring>(mut m: RingMatrix<R>, c: &R) -> RingMatrix<R> {
    let n = m.dim;
    for i in 0..n {
        let e = &mut m.entries[i * n + i];
        *e = e.clone() + c.clone();
    }
    m
}

/// All `l`-subsets of `0..n` in lexicographic order.
pub fn lex_subsets(n: usize, l: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, l: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == l {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, l, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, l, &mut Vec::with_capacity(l), &mut out);
    out
}

impl RingMatrix<Rational> {
    pub fn from_int_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| int(x)).collect())
                .collect(),
        )
    }
}

impl<R: Ring + fmt::Display> fmt::Display for RingMatrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

impl<R: Ring> fmt::Debug for RingMatrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}
