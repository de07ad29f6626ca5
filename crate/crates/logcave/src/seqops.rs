//! Finite sequences, the logconcavity operator, and the classification loop.
//!
//! The operator sends {c_i} to {c_i² − c_{i−1}c_{i+1}}, with c_i = 0 outside
//! the stored support.  A sequence is 1-logconcave when it is nonnegative and
//! every interior entry satisfies c_i² ≥ c_{i−1}c_{i+1}; it is ∞-logconcave
//! when every iterate of the operator stays nonnegative.  Classification
//! iterates the operator and stops on the first iterate that fails
//! 1-logconcavity (refuted), on capture by the trapping region (certified),
//! or on exhausting an iteration or bit budget (unknown).

use std::fmt;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::qfield::Rational;
use crate::region::RegionPoint;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeqError {
    #[error("sequence must contain at least one entry")]
    Empty,
    #[error("symmetric half must contain at least one entry")]
    EmptyHalf,
    #[error("normalization requires at least 3 entries, got {0}")]
    TooShort(usize),
    #[error("normalization requires strictly positive entries; entry {index} is {value}")]
    NonPositiveEntry { index: usize, value: String },
}

/// Middle-term arrangement of a symmetric sequence: `Even` repeats the
/// middle entry, `Odd` has a single middle entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parity::Even => write!(f, "even"),
            Parity::Odd => write!(f, "odd"),
        }
    }
}

/// A finite sequence of exact rationals, implicitly zero outside its support.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSequence {
    values: Vec<Rational>,
}

impl FiniteSequence {
    pub fn new(values: Vec<Rational>) -> Result<Self, SeqError> {
        if values.is_empty() {
            return Err(SeqError::Empty);
        }
        Ok(FiniteSequence { values })
    }

    pub fn from_integers(values: &[i64]) -> Self {
        FiniteSequence {
            values: values.iter().map(|&v| crate::qfield::rat(v)).collect(),
        }
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false // length >= 1 by construction
    }

    /// One application of the operator: {c_i} ↦ {c_i² − c_{i−1}c_{i+1}} over
    /// the same index support, with zero padding at the boundaries.
    pub fn apply_l(&self) -> FiniteSequence {
        let n = self.values.len();
        let zero = Rational::zero();
        let at = |i: isize| -> &Rational {
            if i < 0 || i as usize >= n {
                &zero
            } else {
                &self.values[i as usize]
            }
        };
        let values = (0..n as isize)
            .map(|i| at(i) * at(i) - at(i - 1) * at(i + 1))
            .collect();
        FiniteSequence { values }
    }

    /// Nonnegative everywhere and c_i² ≥ c_{i−1}c_{i+1} at each interior
    /// index.  With zero padding the boundary conditions hold automatically
    /// for nonnegative sequences.
    pub fn is_logconcave(&self) -> bool {
        if self.values.iter().any(|v| v.is_negative()) {
            return false;
        }
        self.interior_gaps_all(|gap| !gap.is_negative())
    }

    /// Strictly positive everywhere and c_i² > c_{i−1}c_{i+1} at each
    /// interior index.
    pub fn is_strictly_logconcave(&self) -> bool {
        if self.values.iter().any(|v| !v.is_positive()) {
            return false;
        }
        self.interior_gaps_all(|gap| gap.is_positive())
    }

    fn interior_gaps_all(&self, ok: impl Fn(&Rational) -> bool) -> bool {
        self.values.windows(3).all(|w| {
            let gap = &w[1] * &w[1] - &w[0] * &w[2];
            ok(&gap)
        })
    }

    /// Scale to a leading 1 and recognize the symmetric half-form.
    ///
    /// Divides by the first entry; if the result is a palindrome it returns
    /// the half-form plus the scale factor, otherwise a marker that region
    /// certification is unavailable.  Requires at least 3 strictly positive
    /// entries.
    pub fn normalize(&self) -> Result<Normalized, SeqError> {
        if self.values.len() < 3 {
            return Err(SeqError::TooShort(self.values.len()));
        }
        if let Some((index, value)) = self
            .values
            .iter()
            .enumerate()
            .find(|(_, v)| !v.is_positive())
        {
            return Err(SeqError::NonPositiveEntry {
                index,
                value: value.to_string(),
            });
        }
        let scale = self.values[0].clone();
        let scaled: Vec<Rational> = self.values.iter().map(|v| v / &scale).collect();
        let len = scaled.len();
        let palindrome = (0..len / 2).all(|i| scaled[i] == scaled[len - 1 - i]);
        if !palindrome || !scaled[len - 1].is_one() {
            return Ok(Normalized {
                scale,
                form: NormalForm::NotSymmetric,
            });
        }
        // {1, x_0, ..., x_n, [x_n], ..., x_0, 1}: even length repeats the
        // middle (len = 2n+4), odd length has a single middle (len = 2n+3).
        let (parity, half_len) = if len % 2 == 0 {
            (Parity::Even, (len - 2) / 2)
        } else {
            (Parity::Odd, (len - 1) / 2)
        };
        let half = scaled[1..1 + half_len].to_vec();
        let sym = SymmetricSeq::new(half, parity).expect("half is nonempty for len >= 3");
        Ok(Normalized {
            scale,
            form: NormalForm::Symmetric(sym),
        })
    }

    /// Total numerator+denominator bit size across all entries; the budget
    /// measure used by [`classify`].
    pub fn total_bits(&self) -> u64 {
        self.values
            .iter()
            .map(|v| v.numer().bits() + v.denom().bits())
            .sum()
    }
}

impl fmt::Display for FiniteSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.values {
            if !first {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

/// Result of [`FiniteSequence::normalize`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Normalized {
    /// The first entry of the original sequence (everything was divided by it).
    pub scale: Rational,
    pub form: NormalForm,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NormalForm {
    Symmetric(SymmetricSeq),
    NotSymmetric,
}

/// Half-representation of {1, x_0, ..., x_n, [x_n], ..., x_0, 1}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricSeq {
    half: Vec<Rational>,
    parity: Parity,
}

impl SymmetricSeq {
    pub fn new(half: Vec<Rational>, parity: Parity) -> Result<Self, SeqError> {
        if half.is_empty() {
            return Err(SeqError::EmptyHalf);
        }
        Ok(SymmetricSeq { half, parity })
    }

    pub fn from_integers(half: &[i64], parity: Parity) -> Result<Self, SeqError> {
        SymmetricSeq::new(half.iter().map(|&v| crate::qfield::rat(v)).collect(), parity)
    }

    pub fn half(&self) -> &[Rational] {
        &self.half
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    /// Index of the last half coordinate (the `n` in x_0..x_n).
    pub fn n(&self) -> usize {
        self.half.len() - 1
    }

    /// Expand to the full palindrome: length 2n+4 (even) or 2n+3 (odd).
    pub fn expand(&self) -> FiniteSequence {
        let one = Rational::one();
        let mut values = Vec::with_capacity(2 * self.half.len() + 2);
        values.push(one.clone());
        values.extend(self.half.iter().cloned());
        let tail: &[Rational] = match self.parity {
            Parity::Even => &self.half,
            Parity::Odd => &self.half[..self.half.len() - 1],
        };
        values.extend(tail.iter().rev().cloned());
        values.push(one);
        FiniteSequence { values }
    }
}

/// Reason a classification ended without a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnknownReason {
    MaxIterations,
    BitBudget,
}

impl fmt::Display for UnknownReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UnknownReason::MaxIterations => write!(f, "max-iterations"),
            UnknownReason::BitBudget => write!(f, "bit-budget"),
        }
    }
}

/// Classification verdict.
///
/// `CertifiedInfLogconcave { iterate }`: iterate k normalizes to a symmetric
/// half-form that lies in the trapping region, so every later iterate stays
/// nonnegative.  `NotLogconcave { iterate }`: iterate k is the first that
/// fails 1-logconcavity, so iterate k+1 contains a negative entry (or k
/// itself does, for inputs that start negative).  `Unknown` carries the
/// budget that ran out and the iterate reached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    CertifiedInfLogconcave { iterate: usize },
    NotLogconcave { iterate: usize },
    Unknown { iterate: usize, reason: UnknownReason },
}

impl Certificate {
    pub fn iterate(&self) -> usize {
        match self {
            Certificate::CertifiedInfLogconcave { iterate }
            | Certificate::NotLogconcave { iterate }
            | Certificate::Unknown { iterate, .. } => *iterate,
        }
    }

    /// Short verdict name used in CSV and JSON output.
    pub fn verdict_name(&self) -> &'static str {
        match self {
            Certificate::CertifiedInfLogconcave { .. } => "certified",
            Certificate::NotLogconcave { .. } => "refuted",
            Certificate::Unknown { .. } => "unknown",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassifyOptions {
    pub max_iter: usize,
    /// Cap on the total numerator+denominator bits of an iterate.  Entries
    /// square each step, so growth is doubly exponential; the cap converts
    /// runaway cases into `Unknown` instead of exhausting memory.
    pub bit_budget: u64,
}

pub const DEFAULT_MAX_ITER: usize = 30;
pub const DEFAULT_BIT_BUDGET: u64 = 1_000_000;

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            max_iter: DEFAULT_MAX_ITER,
            bit_budget: DEFAULT_BIT_BUDGET,
        }
    }
}

/// Iterate the operator and classify.
///
/// At each iterate k: refute if 1-logconcavity fails, certify if the iterate
/// normalizes to a symmetric half-form inside the trapping region, otherwise
/// keep iterating until `max_iter` or the bit budget runs out.  Total and
/// deterministic for every input.
pub fn classify(s: &FiniteSequence, opts: &ClassifyOptions) -> Certificate {
    let mut current = s.clone();
    for k in 0.. {
        if !current.is_logconcave() {
            return Certificate::NotLogconcave { iterate: k };
        }
        if let Ok(Normalized {
            form: NormalForm::Symmetric(sym),
            ..
        }) = current.normalize()
        {
            if let Ok(point) = RegionPoint::from_symmetric(&sym) {
                if point.in_region() {
                    return Certificate::CertifiedInfLogconcave { iterate: k };
                }
            }
        }
        if current.total_bits() > opts.bit_budget {
            return Certificate::Unknown {
                iterate: k,
                reason: UnknownReason::BitBudget,
            };
        }
        if k == opts.max_iter {
            return Certificate::Unknown {
                iterate: k,
                reason: UnknownReason::MaxIterations,
            };
        }
        current = current.apply_l();
    }
    unreachable!("loop always returns")
}
