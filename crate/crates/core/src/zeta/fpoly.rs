use std::fmt;

use num_traits::Zero;

use super::genfun::{companion, monic_root_poly};
use crate::error::{Error, Result};
use crate::exact::{fmt_signed_terms, Rational, UniPoly};

/// Largest `s` accepted by [`f_poly`]; the compound matrices stay at most
/// `20 × 20`.
pub const MAX_FPOLY_S: u64 = 6;

/// Polynomial in `X` and `Y` with rational coefficients; `grid[i][j]` is the
/// coefficient of `X^i Y^j`. Trailing zero rows and columns are trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    grid: Vec<Vec<Rational>>,
}

impl BiPoly {
    pub fn from_grid(mut grid: Vec<Vec<Rational>>) -> Self {
        let width = grid.iter().map(|row| row.len()).max().unwrap_or(0);
        for row in &mut grid {
            row.resize(width, Rational::zero());
        }
        while grid.last().is_some_and(|row| row.iter().all(Zero::is_zero)) {
            grid.pop();
        }
        let width = (0..width)
            .rev()
            .find(|&j| grid.iter().any(|row| !row[j].is_zero()))
            .map_or(0, |j| j + 1);
        for row in &mut grid {
            row.truncate(width);
        }
        BiPoly { grid }
    }

    pub fn from_ints(grid: &[&[i64]]) -> Self {
        Self::from_grid(
            grid.iter()
                .map(|row| row.iter().map(|&c| crate::exact::int(c)).collect())
                .collect(),
        )
    }

    /// `Σ_j p_j(X) Y^j`.
    pub fn from_y_coeffs(by_y: &[UniPoly]) -> Self {
        let rows = by_y
            .iter()
            .filter_map(|p| p.degree())
            .max()
            .map_or(0, |d| d + 1);
        Self::from_grid(
            (0..rows)
                .map(|i| by_y.iter().map(|p| p.coeff(i)).collect())
                .collect(),
        )
    }

    pub fn grid(&self) -> &[Vec<Rational>] {
        &self.grid
    }

    pub fn coeff(&self, i: usize, j: usize) -> Rational {
        self.grid
            .get(i)
            .and_then(|row| row.get(j))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.grid.is_empty()
    }

    pub fn x_degree(&self) -> Option<usize> {
        self.grid.len().checked_sub(1)
    }

    pub fn y_degree(&self) -> Option<usize> {
        self.grid.first().map(|row| row.len() - 1)
    }
}

fn monomial(i: usize, j: usize) -> String {
    let part = |var: &str, k: usize| match k {
        0 => None,
        1 => Some(var.to_string()),
        _ => Some(format!("{var}^{k}")),
    };
    [part("X", i), part("Y", j)]
        .into_iter()
        .flatten()
        .collect::<Vec<_>>()
        .join("*")
}

impl fmt::Display for BiPoly {
    /// Terms ordered by degree in `Y`, then in `X`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cols = self.y_degree().map_or(0, |d| d + 1);
        let terms = (0..cols).flat_map(|j| {
            (0..self.grid.len()).map(move |i| (self.grid[i][j].clone(), monomial(i, j)))
        });
        fmt_signed_terms(f, terms)
    }
}

/// `F_{s,l}(X, Y) = Π_{i_1 < … < i_l} (1 - α_{i_1} ⋯ α_{i_l} Y)` over the roots
/// `α_i` of `(1 - Y)^s - X`, computed as `det(I - Y Λ)` where `Λ` is the
/// `l`-th compound of the companion matrix. `F_{s,0} = 1 - Y`.
pub fn f_poly(s: u64, l: u64) -> Result<BiPoly> {
    if s == 0 || s > MAX_FPOLY_S {
        return Err(Error::InvalidArgument(format!(
            "s must lie in 1..={MAX_FPOLY_S}, got {s}"
        )));
    }
    if l > s {
        return Err(Error::InvalidArgument(format!(
            "l must lie in 0..={s}, got {l}"
        )));
    }
    if l == 0 {
        return Ok(BiPoly::from_ints(&[&[1, -1]]));
    }
    let c = companion(&monic_root_poly(s), &UniPoly::one());
    let lambda = c.compound(l as usize)?;
    Ok(BiPoly::from_y_coeffs(&lambda.char_poly_fl()))
}
