//! Exact rational linear algebra for homogeneous restriction systems:
//! canonical nullspace bases, subspace comparison and membership.
//!
//! All arithmetic is over arbitrary-precision rationals, so bases are exact
//! and the reduced-echelon representation is unique per subspace — equality
//! of spaces is syntactic equality of bases.

use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::{BipartiteCore, Matching, VertexSet};

/// Exact weight values. Always stored reduced with a positive denominator.
pub type Rational = BigRational;

/// `i64 -> Rational`.
pub fn rat(value: i64) -> Rational {
    BigRational::from_integer(BigInt::from(value))
}

/// `num/den -> Rational` (den != 0).
pub fn ratio(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Renders a rational as `p/q`, or just `p` when the denominator is 1.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p` or `p/q`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let mut parts = text.splitn(2, '/');
    let numer: BigInt = parts
        .next()
        .unwrap_or("")
        .trim()
        .parse()
        .map_err(|_| Error::Parse {
            line: 0,
            msg: format!("bad rational {text:?}"),
        })?;
    let denom: BigInt = match parts.next() {
        Some(d) => d.trim().parse().map_err(|_| Error::Parse {
            line: 0,
            msg: format!("bad rational {text:?}"),
        })?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(Error::Parse {
            line: 0,
            msg: format!("zero denominator in {text:?}"),
        });
    }
    Ok(BigRational::new(numer, denom))
}

/// Where a restriction came from, kept so certificates can be re-validated
/// and printed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    /// A generating subgraph with its witness independent set.
    GeneratingSubgraph {
        core: BipartiteCore,
        witness: VertexSet,
    },
    /// A path that is the symmetric difference of two maximal matchings.
    SymDiffPath {
        vertices: Vec<usize>,
        matchings: (Matching, Matching),
    },
    /// An even cycle together with its two alternating maximal matchings.
    SymDiffCycle {
        vertices: Vec<usize>,
        matchings: (Matching, Matching),
    },
    /// Oracle: two maximal independent sets forced to equal weight.
    MaximalIndependentPair { first: VertexSet, second: VertexSet },
    /// Oracle: two maximal matchings forced to equal weight.
    MaximalMatchingPair { first: Matching, second: Matching },
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::GeneratingSubgraph { core, witness } => {
                write!(f, "generating {core} witness={witness}")
            }
            Provenance::SymDiffPath { vertices, .. } => {
                write!(f, "path {vertices:?}")
            }
            Provenance::SymDiffCycle { vertices, .. } => {
                write!(f, "cycle {vertices:?}")
            }
            Provenance::MaximalIndependentPair { first, second } => {
                write!(f, "maximal independent sets {first} and {second}")
            }
            Provenance::MaximalMatchingPair { first, second } => {
                write!(
                    f,
                    "maximal matchings {:?} and {:?}",
                    first.edge_indices(),
                    second.edge_indices()
                )
            }
        }
    }
}

/// One homogeneous equation `coeffs . w = 0` over a fixed index set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Restriction {
    pub coeffs: Vec<Rational>,
    pub provenance: Provenance,
}

impl Restriction {
    pub fn new(coeffs: Vec<Rational>, provenance: Provenance) -> Self {
        debug_assert!(
            coeffs.iter().any(|c| !c.is_zero()),
            "trivial restriction must not be emitted"
        );
        Restriction { coeffs, provenance }
    }

    /// Sum of basis coordinates minus sum over a second index set; the
    /// `w(first) = w(second)` equation.
    pub fn equal_sums(
        dim: usize,
        first: impl IntoIterator<Item = usize>,
        second: impl IntoIterator<Item = usize>,
        provenance: Provenance,
    ) -> Self {
        let mut coeffs = vec![Rational::zero(); dim];
        for i in first {
            coeffs[i] += Rational::one();
        }
        for i in second {
            coeffs[i] -= Rational::one();
        }
        Restriction::new(coeffs, provenance)
    }

    /// Exact evaluation of `coeffs . w`.
    pub fn evaluate(&self, w: &[Rational]) -> Rational {
        self.coeffs
            .iter()
            .zip(w)
            .map(|(c, x)| c * x)
            .fold(Rational::zero(), |acc, t| acc + t)
    }

    /// Renders the equation with caller-supplied variable names.
    pub fn render(&self, var: impl Fn(usize) -> String) -> String {
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let term = if mag.is_one() {
                var(i)
            } else {
                format!("{}*{}", format_rational(&mag), var(i))
            };
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            out.push_str(&term);
        }
        if out.is_empty() {
            out.push('0');
        }
        out.push_str(" = 0");
        out
    }
}

/// The solution space of a homogeneous restriction system, stored as the
/// reduced row-echelon basis of the nullspace. This representation is
/// unique per subspace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSpace {
    ambient: usize,
    basis: Vec<Vec<Rational>>,
}

impl WeightSpace {
    /// The whole ambient space (no restrictions): identity basis.
    pub fn full(ambient: usize) -> Self {
        let basis = (0..ambient)
            .map(|i| {
                let mut row = vec![Rational::zero(); ambient];
                row[i] = Rational::one();
                row
            })
            .collect();
        WeightSpace { ambient, basis }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Canonical basis rows (reduced row-echelon form).
    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    /// True iff the two spaces have identical canonical bases.
    pub fn subspace_equal(&self, other: &WeightSpace) -> Result<bool> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                got: other.ambient,
            });
        }
        Ok(self.basis == other.basis)
    }

    /// True iff `w` lies in the span of the basis, decided by exact
    /// reduction against the echelon rows.
    pub fn contains(&self, w: &[Rational]) -> Result<bool> {
        if w.len() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                got: w.len(),
            });
        }
        let mut residual = w.to_vec();
        for row in &self.basis {
            let pivot = row
                .iter()
                .position(|c| !c.is_zero())
                .expect("basis rows are nonzero");
            let coef = residual[pivot].clone();
            if coef.is_zero() {
                continue;
            }
            for (r, b) in residual.iter_mut().zip(row) {
                *r -= &coef * b;
            }
        }
        Ok(residual.iter().all(|c| c.is_zero()))
    }
}

/// Reduces `rows` in place to reduced row-echelon form and returns the rank.
/// Zero rows end up at the bottom and are truncated away.
fn rref(rows: &mut Vec<Vec<Rational>>) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot_row) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot_row);
        let pivot = rows[rank][col].clone();
        for c in &mut rows[rank] {
            *c /= &pivot;
        }
        for r in 0..rows.len() {
            if r == rank || rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].clone();
            for c in 0..cols {
                let delta = &factor * &rows[rank][c];
                rows[r][c] -= delta;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    rank
}

/// Solves `{w : c . w = 0 for every restriction c}` and returns the
/// canonical basis. Duplicate coefficient vectors are removed first; an
/// empty system yields the full space.
pub fn nullspace(restrictions: &[Restriction], dim: usize) -> Result<WeightSpace> {
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for r in restrictions {
        if r.coeffs.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: r.coeffs.len(),
            });
        }
        let key: Vec<String> = r.coeffs.iter().map(|c| c.to_string()).collect();
        if seen.insert(key) {
            rows.push(r.coeffs.clone());
        }
    }
    let rank = rref(&mut rows);
    // Pivot columns of the constraint matrix, in increasing order.
    let mut pivots = Vec::with_capacity(rank);
    for row in rows.iter() {
        pivots.push(row.iter().position(|c| !c.is_zero()).expect("nonzero row"));
    }
    let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
    let mut basis: Vec<Vec<Rational>> = Vec::with_capacity(dim - rank);
    for free in (0..dim).filter(|c| !pivot_set.contains(c)) {
        let mut vec = vec![Rational::zero(); dim];
        vec[free] = Rational::one();
        for (row, &pivot) in rows.iter().zip(&pivots) {
            // Row reads w[pivot] + sum_{c > pivot} row[c] * w[c] = 0.
            vec[pivot] = -row[free].clone();
        }
        basis.push(vec);
    }
    rref(&mut basis);
    let space = WeightSpace {
        ambient: dim,
        basis,
    };
    debug_assert!(restrictions
        .iter()
        .all(|r| space.basis.iter().all(|b| r.evaluate(b).is_zero())));
    Ok(space)
}
