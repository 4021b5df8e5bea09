use num_bigint::BigInt;
use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

use crate::exactmat::{Mat3, RatMat3};
use crate::sequences::SeqKind;

#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct ReportParams {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kind: Option<SeqKind>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<u64>,
}

impl ReportParams {
    pub fn new(kind: SeqKind, r: u32, n: u64) -> Self {
        ReportParams {
            kind: Some(kind),
            r: Some(r),
            n: Some(n),
            m: None,
        }
    }

    pub fn with_m(mut self, m: u64) -> Self {
        self.m = Some(m);
        self
    }
}

/// One side of a checked identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReportValue {
    Integer(BigInt),
    Matrix(Mat3),
    Rational(RatMat3),
    /// High-precision float rendered in decimal.
    Decimal(String),
    /// A 3×3 matrix of decimal strings.
    DecimalMatrix([[String; 3]; 3]),
}

impl Serialize for ReportValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        fn rows<S: Serializer, T: ToString>(s: S, m: &[[T; 3]; 3]) -> Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(3))?;
            for row in m {
                seq.serialize_element(&row.iter().map(ToString::to_string).collect::<Vec<_>>())?;
            }
            seq.end()
        }
        match self {
            ReportValue::Integer(x) => s.serialize_str(&x.to_string()),
            ReportValue::Matrix(m) => rows(s, m.entries()),
            ReportValue::Rational(q) => rows(s, q.entries()),
            ReportValue::Decimal(x) => s.serialize_str(x),
            ReportValue::DecimalMatrix(m) => rows(s, m),
        }
    }
}

impl From<Mat3> for ReportValue {
    fn from(m: Mat3) -> Self {
        ReportValue::Matrix(m)
    }
}

impl From<BigInt> for ReportValue {
    fn from(x: BigInt) -> Self {
        ReportValue::Integer(x)
    }
}

/// Outcome of checking one identity at one parameter point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub identity_id: String,
    pub params: ReportParams,
    pub lhs: ReportValue,
    pub rhs: ReportValue,
    pub matched: bool,
    pub note: String,
}

impl VerificationReport {
    /// Exact comparison of two integer matrices.
    pub fn exact(id: &str, params: ReportParams, lhs: Mat3, rhs: Mat3) -> Self {
        let matched = lhs == rhs;
        VerificationReport {
            identity_id: id.to_owned(),
            params,
            lhs: lhs.into(),
            rhs: rhs.into(),
            matched,
            note: String::new(),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = note.into();
        self
    }
}

/// Orders reports by identity id, then parameters.
pub fn sort_reports(reports: &mut [VerificationReport]) {
    reports.sort_by(|a, b| (&a.identity_id, &a.params).cmp(&(&b.identity_id, &b.params)));
}

/// Identity ids used throughout the crate.
pub mod ids {
    pub const PASCAL_SPLIT: &str = "pascal_split";
    pub const PASCAL_SPLIT_SHIFTED: &str = "pascal_split_shifted";
    pub const PATH_RECURRENCE: &str = "path_recurrence_vs_oracle";
    pub const PATH_POWER: &str = "path_power_vs_oracle";
    pub const SEED_FIRST: &str = "seed_formula_1";
    pub const SEED_SECOND: &str = "seed_formula_2";
    pub const SEED_THIRD: &str = "seed_formula_3";
    pub const DETERMINANT: &str = "determinant_law";
    pub const PRODUCT: &str = "product_law";
    pub const PRODUCT_UNRESTRICTED: &str = "product_law_n_gt_m";
    pub const MIXED_LEFT: &str = "mixed_product_bc";
    pub const MIXED_RIGHT: &str = "mixed_product_cb";
    pub const COMMUTE: &str = "bc_commute";
    pub const DIFF_B: &str = "difference_b_by_b1";
    pub const DIFF_C: &str = "difference_c_by_b1";
    pub const DIFF_C_BY_C1: &str = "difference_c_by_c1";
    pub const CROSS_LEVEL: &str = "cross_level";
    pub const PERRIN_FACTOR: &str = "perrin_from_padovan";
    pub const PERRIN_INVERSE: &str = "padovan_from_perrin_cleared";
    pub const GENERATING_FUNCTION: &str = "generating_function";
    pub const BINET: &str = "binet";
    pub const TELESCOPED_SUM: &str = "telescoped_sum";
    pub const PRINTED_SUM: &str = "printed_sum_formula";
    pub const PLASTIC_RATIO: &str = "plastic_ratio";
    pub const PLASTIC_RADICAL: &str = "plastic_radical_vs_root";
}
