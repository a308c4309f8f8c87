//! Exact rational matrices and the oriented matroid of a linear subspace.
//!
//! All arithmetic is over `BigRational`; signs are never derived from
//! floating point.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::om::{minimal_signed_sets, OrientedMatroid};
use crate::set::ElementSet;
use crate::signed::SignedSet;

pub type Rational = BigRational;

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let r: Rational = t
        .parse()
        .map_err(|_| Error::Parse(format!("not a rational: {s:?}")))?;
    Ok(r)
}

/// Lowest terms with a positive denominator; integers print without `/1`.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    cols: usize,
    rows: Vec<Vec<Rational>>,
}

impl RationalMatrix {
    pub fn new(cols: usize, rows: Vec<Vec<Rational>>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::GroundSizeMismatch {
                expected: cols,
                found: bad.len(),
            });
        }
        Ok(RationalMatrix { cols, rows })
    }

    pub fn from_integers(cols: usize, rows: &[Vec<i64>]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&x| Rational::from_integer(BigInt::from(x)))
                    .collect()
            })
            .collect();
        Self::new(cols, rows)
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    /// Reduced row echelon form with zero rows dropped.
    pub fn row_reduced(&self) -> RationalMatrix {
        RationalMatrix {
            cols: self.cols,
            rows: rref(self.rows.clone(), self.cols).0,
        }
    }

    pub fn rank(&self) -> usize {
        rref(self.rows.clone(), self.cols).0.len()
    }

    /// A basis of `{x : A x = 0}`, as the rows of a new matrix.
    pub fn kernel(&self) -> RationalMatrix {
        RationalMatrix {
            cols: self.cols,
            rows: nullspace(&self.rows, self.cols),
        }
    }

    /// Multiplies on the left: `self` becomes `mix * self`.
    pub fn left_mul(&self, mix: &[Vec<Rational>]) -> Result<RationalMatrix> {
        if let Some(bad) = mix.iter().find(|r| r.len() != self.rows.len()) {
            return Err(Error::GroundSizeMismatch {
                expected: self.rows.len(),
                found: bad.len(),
            });
        }
        let rows = mix
            .iter()
            .map(|coeffs| {
                (0..self.cols)
                    .map(|j| {
                        coeffs
                            .iter()
                            .zip(&self.rows)
                            .fold(Rational::zero(), |acc, (c, r)| acc + c * &r[j])
                    })
                    .collect()
            })
            .collect();
        Ok(RationalMatrix {
            cols: self.cols,
            rows,
        })
    }
}

/// Oriented matroid whose circuits are the sign patterns of the
/// minimal-support nonzero vectors of the row space of `a`.
///
/// Read each row as a linear form: the rows generate a linear ideal and the
/// result is its oriented matroid. A zero matrix yields the free matroid.
pub fn circuits_from_matrix(a: &RationalMatrix) -> Result<OrientedMatroid> {
    circuits_from_matrix_with(a, &Limits::default())
}

pub fn circuits_from_matrix_with(a: &RationalMatrix, limits: &Limits) -> Result<OrientedMatroid> {
    let n = a.cols;
    limits.check_subsets(n)?;
    let basis = rref(a.rows.clone(), n).0;
    if basis.is_empty() {
        return Ok(OrientedMatroid::free(n).with_limits(*limits));
    }

    let mut supports: Vec<ElementSet> = ElementSet::all_subsets(n)
        .filter(|s| !s.is_empty())
        .collect();
    supports.sort();

    let mut found: Vec<SignedSet> = Vec::new();
    for s in supports {
        if found.iter().any(|c| c.support().is_subset(s)) {
            continue;
        }
        // coefficients y with (y * basis)_i = 0 for every i outside s
        let outside = s.complement(n);
        let constraints: Vec<Vec<Rational>> = outside
            .iter()
            .map(|i| basis.iter().map(|row| row[i - 1].clone()).collect())
            .collect();
        let ys = nullspace(&constraints, basis.len());
        let Some(y) = ys.first() else { continue };
        let w: Vec<Rational> = (0..n)
            .map(|j| {
                y.iter()
                    .zip(&basis)
                    .fold(Rational::zero(), |acc, (c, row)| acc + c * &row[j])
            })
            .collect();
        let pos: ElementSet = (1..=n).filter(|&j| w[j - 1].is_positive()).collect();
        let neg: ElementSet = (1..=n).filter(|&j| w[j - 1].is_negative()).collect();
        if pos | neg != s || ys.len() != 1 {
            return Err(Error::Inconsistent(format!(
                "support {s} is not a minimal support of the row space"
            )));
        }
        found.push(SignedSet::new(n, pos, neg)?);
    }
    let circuits = minimal_signed_sets(found)?;
    Ok(OrientedMatroid::new(n, circuits)?.with_limits(*limits))
}

/// Oriented matroid of the linear dependencies among the columns of `a`.
///
/// Equivalently, the rows of `a` span a linear space `V` and the result is the
/// oriented matroid of the ideal of linear forms vanishing on `V`. For the
/// incidence matrix of a digraph this is the graphic oriented matroid.
pub fn circuits_of_column_dependencies(a: &RationalMatrix) -> Result<OrientedMatroid> {
    circuits_from_matrix(&a.kernel())
}

/// Returns `(nonzero rows of the RREF, pivot columns)`.
fn rref(mut rows: Vec<Vec<Rational>>, cols: usize) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Rational::one() / rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let factor = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &factor * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

/// Basis of `{x in Q^cols : rows * x = 0}`.
fn nullspace(rows: &[Vec<Rational>], cols: usize) -> Vec<Vec<Rational>> {
    let (reduced, pivots) = rref(rows.to_vec(), cols);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![Rational::zero(); cols];
            x[f] = Rational::one();
            for (row, &p) in reduced.iter().zip(&pivots) {
                x[p] = -row[f].clone();
            }
            x
        })
        .collect()
}
