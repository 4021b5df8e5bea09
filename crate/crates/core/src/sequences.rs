//! Padovan and Perrin numbers and their 3×3 matrix counterparts.
//!
//! All four families obey `t(n+3) = t(n+1) + t(n)`; they differ only in
//! their three seed terms.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmat::{Element, Mat3};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SeqKind {
    PadovanScalar,
    PerrinScalar,
    PadovanMatrix,
    PerrinMatrix,
}

impl SeqKind {
    pub const ALL: [SeqKind; 4] = [
        SeqKind::PadovanScalar,
        SeqKind::PerrinScalar,
        SeqKind::PadovanMatrix,
        SeqKind::PerrinMatrix,
    ];

    pub const MATRIX: [SeqKind; 2] = [SeqKind::PadovanMatrix, SeqKind::PerrinMatrix];

    pub fn is_matrix(self) -> bool {
        matches!(self, SeqKind::PadovanMatrix | SeqKind::PerrinMatrix)
    }

    pub fn is_perrin(self) -> bool {
        matches!(self, SeqKind::PerrinScalar | SeqKind::PerrinMatrix)
    }

    pub fn name(self) -> &'static str {
        match self {
            SeqKind::PadovanScalar => "padovan-scalar",
            SeqKind::PerrinScalar => "perrin-scalar",
            SeqKind::PadovanMatrix => "padovan-matrix",
            SeqKind::PerrinMatrix => "perrin-matrix",
        }
    }

    /// Errors unless this is one of the two matrix families.
    pub fn require_matrix(self) -> Result<SeqKind> {
        if self.is_matrix() {
            Ok(self)
        } else {
            Err(Error::NotMatrixKind(self))
        }
    }
}

impl fmt::Display for SeqKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SeqKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.replace('_', "-");
        SeqKind::ALL
            .into_iter()
            .find(|k| k.name() == norm)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown sequence kind '{s}'")))
    }
}

/// A single sequence term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Term {
    Scalar(BigInt),
    Matrix(Mat3),
}

impl Term {
    pub fn as_matrix(&self) -> Option<&Mat3> {
        match self {
            Term::Matrix(m) => Some(m),
            Term::Scalar(_) => None,
        }
    }

    pub fn as_scalar(&self) -> Option<&BigInt> {
        match self {
            Term::Scalar(x) => Some(x),
            Term::Matrix(_) => None,
        }
    }
}

/// A homogeneous list of terms indexed from 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Terms {
    Scalar(Vec<BigInt>),
    Matrix(Vec<Mat3>),
}

impl Terms {
    pub fn len(&self) -> usize {
        match self {
            Terms::Scalar(v) => v.len(),
            Terms::Matrix(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, n: usize) -> Option<Term> {
        match self {
            Terms::Scalar(v) => v.get(n).cloned().map(Term::Scalar),
            Terms::Matrix(v) => v.get(n).cloned().map(Term::Matrix),
        }
    }

    pub fn matrices(&self) -> Option<&[Mat3]> {
        match self {
            Terms::Matrix(v) => Some(v),
            Terms::Scalar(_) => None,
        }
    }

    pub fn scalars(&self) -> Option<&[BigInt]> {
        match self {
            Terms::Scalar(v) => Some(v),
            Terms::Matrix(_) => None,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = Term> + '_ {
        (0..self.len()).map(|n| self.get(n).expect("index in range"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeqPrefix {
    pub kind: SeqKind,
    pub terms: Terms,
}

pub fn padovan_seeds() -> [BigInt; 3] {
    [1, 1, 1].map(BigInt::from)
}

pub fn perrin_seeds() -> [BigInt; 3] {
    [3, 0, 2].map(BigInt::from)
}

/// 𝒫₀, 𝒫₁, 𝒫₂.
pub fn padovan_matrix_seeds() -> [Mat3; 3] {
    [
        Mat3::identity(),
        Mat3::from_i64([[0, 1, 0], [0, 0, 1], [1, 1, 0]]),
        Mat3::from_i64([[0, 0, 1], [1, 1, 0], [0, 1, 1]]),
    ]
}

/// ℛ₀, ℛ₁, ℛ₂.
pub fn perrin_matrix_seeds() -> [Mat3; 3] {
    [
        Mat3::from_i64([[4, 2, -3], [-3, 1, 2], [2, -1, 1]]),
        Mat3::from_i64([[-3, 1, 2], [2, -1, 1], [1, 3, -1]]),
        Mat3::from_i64([[2, -1, 1], [1, 3, -1], [-1, 0, 3]]),
    ]
}

/// Seed matrices of a matrix family.
pub fn matrix_seeds(kind: SeqKind) -> Result<[Mat3; 3]> {
    match kind.require_matrix()? {
        SeqKind::PadovanMatrix => Ok(padovan_matrix_seeds()),
        _ => Ok(perrin_matrix_seeds()),
    }
}

fn unroll<T: Element>(seeds: [T; 3], count: usize) -> Vec<T> {
    let mut out: Vec<T> = seeds.into_iter().take(count).collect();
    while out.len() < count {
        let n = out.len() - 3;
        let next = out[n + 1].plus(&out[n]);
        out.push(next);
    }
    out
}

/// Terms `0..count` of a matrix family.
pub fn matrix_prefix(kind: SeqKind, count: usize) -> Result<Vec<Mat3>> {
    Ok(unroll(matrix_seeds(kind)?, count))
}

pub fn seq_prefix(kind: SeqKind, count: usize) -> Result<SeqPrefix> {
    if count == 0 {
        return Err(Error::InvalidArgument("prefix length must be at least 1".into()));
    }
    let terms = match kind {
        SeqKind::PadovanScalar => Terms::Scalar(unroll(padovan_seeds(), count)),
        SeqKind::PerrinScalar => Terms::Scalar(unroll(perrin_seeds(), count)),
        SeqKind::PadovanMatrix | SeqKind::PerrinMatrix => Terms::Matrix(matrix_prefix(kind, count)?),
    };
    Ok(SeqPrefix { kind, terms })
}

/// The `n`-th term by forward iteration from the seeds.
pub fn seq_term(kind: SeqKind, n: usize) -> Term {
    seq_prefix(kind, n + 1)
        .expect("count is positive")
        .terms
        .get(n)
        .expect("prefix covers n")
}
