//! The bijection between k x t integer matrices and integer sequences of
//! length kt that transports the total entry sum onto the Schmidt weight,
//! together with the classification predicates linking matrix row shape to
//! sequence monotonicity.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::types::schmidt_weight;

/// A k x t integer matrix. Entries may be negative; nonnegativity is only
/// required by the classification predicates, not by the bijection itself.
/// An optional boolean mask carries overline marks for the mark-transporting
/// bijections.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawMatrix", into = "RawMatrix")]
pub struct IntMatrix {
    k: usize,
    t: usize,
    entries: Vec<Vec<i64>>,
    marks: Option<Vec<Vec<bool>>>,
}

#[derive(Serialize, Deserialize)]
struct RawMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    marks: Option<Vec<Vec<bool>>>,
}

impl From<IntMatrix> for RawMatrix {
    fn from(m: IntMatrix) -> Self {
        RawMatrix {
            rows: m.k,
            cols: m.t,
            entries: m.entries,
            marks: m.marks,
        }
    }
}

impl TryFrom<RawMatrix> for IntMatrix {
    type Error = Error;
    fn try_from(raw: RawMatrix) -> Result<Self> {
        let m = IntMatrix::new(raw.entries)?;
        if m.k != raw.rows || m.t != raw.cols {
            return Err(Error::Dimension(format!(
                "declared {}x{} but entries are {}x{}",
                raw.rows, raw.cols, m.k, m.t
            )));
        }
        match raw.marks {
            Some(marks) => m.with_marks(marks),
            None => Ok(m),
        }
    }
}

impl IntMatrix {
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self> {
        let k = entries.len();
        if k == 0 {
            return Err(Error::Dimension("matrix must have at least one row".into()));
        }
        let t = entries[0].len();
        if t == 0 {
            return Err(Error::Dimension(
                "matrix must have at least one column".into(),
            ));
        }
        if entries.iter().any(|row| row.len() != t) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(IntMatrix {
            k,
            t,
            entries,
            marks: None,
        })
    }

    pub fn with_marks(mut self, marks: Vec<Vec<bool>>) -> Result<Self> {
        if marks.len() != self.k || marks.iter().any(|row| row.len() != self.t) {
            return Err(Error::Dimension("mark mask shape mismatch".into()));
        }
        self.marks = Some(marks);
        Ok(self)
    }

    pub fn rows(&self) -> usize {
        self.k
    }

    pub fn cols(&self) -> usize {
        self.t
    }

    /// Entry at 1-based position (i, j).
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i - 1][j - 1]
    }

    /// Mark at 1-based position (i, j); false when no mask is attached.
    pub fn mark(&self, i: usize, j: usize) -> bool {
        self.marks
            .as_ref()
            .map(|m| m[i - 1][j - 1])
            .unwrap_or(false)
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.entries[i - 1]
    }

    pub fn entry_sum(&self) -> i64 {
        self.entries.iter().flatten().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().flatten().all(|&a| a >= 0)
    }
}

/// Maps a k x t matrix to the sequence of length kt whose entry at position
/// (j-1)k + i (1-based) is
///
/// * the j-th column sum, if i = 1;
/// * the partial column sum over rows i..k, if j = t;
/// * the partial sum over rows i..k of column j plus rows 1..i-1 of column
///   j+1, otherwise.
///
/// The Schmidt weight (modulus k) of the result equals the total entry sum.
pub fn phi_forward(a: &IntMatrix) -> Vec<i64> {
    let (k, t) = (a.rows(), a.cols());
    let mut out = Vec::with_capacity(k * t);
    for j in 1..=t {
        for i in 1..=k {
            // the i = 1 and j = t rules agree at (1, t)
            let value = if i == 1 {
                (1..=k).map(|s| a.get(s, j)).sum()
            } else if j == t {
                (i..=k).map(|s| a.get(s, t)).sum()
            } else {
                (i..=k).map(|s| a.get(s, j)).sum::<i64>()
                    + (1..i).map(|s| a.get(s, j + 1)).sum::<i64>()
            };
            out.push(value);
        }
    }
    debug_assert_eq!(schmidt_weight(&out, k), a.entry_sum());
    out
}

/// Recovers the unique matrix mapping to `s` under [`phi_forward`]. The last
/// column is solved bottom-up first; the remaining columns are solved right
/// to left, each bottom-up, since an entry depends on the lower rows of its
/// own column and the upper rows of the next column.
pub fn phi_inverse(s: &[i64], k: usize) -> Result<IntMatrix> {
    if k == 0 {
        return Err(Error::Dimension("k must be >= 1".into()));
    }
    if s.is_empty() || s.len() % k != 0 {
        return Err(Error::Dimension(format!(
            "sequence length {} is not a positive multiple of k = {}",
            s.len(),
            k
        )));
    }
    let t = s.len() / k;
    let lam = |i: usize, j: usize| s[(j - 1) * k + (i - 1)];
    let mut a = vec![vec![0i64; t]; k];

    for i in (1..=k).rev() {
        let below: i64 = (i + 1..=k).map(|s| a[s - 1][t - 1]).sum();
        a[i - 1][t - 1] = lam(i, t) - below;
    }
    for j in (1..t).rev() {
        for i in (1..=k).rev() {
            let below: i64 = (i + 1..=k).map(|s| a[s - 1][j - 1]).sum();
            a[i - 1][j - 1] = if i == 1 {
                lam(1, j) - below
            } else {
                let above_next: i64 = (1..i).map(|s| a[s - 1][j]).sum();
                lam(i, j) - below - above_next
            };
        }
    }
    IntMatrix::new(a)
}

/// Row-shape classification of a nonnegative matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MatrixClass {
    /// Every row is weakly decreasing.
    pub weak_rows: bool,
    /// Every row is strictly decreasing over its nonzero prefix and the zero
    /// entries (if any) form a contiguous suffix in column-major reading
    /// order, i.e. positions (j-1)k + i beyond some cutoff. When the zero
    /// tail is shorter than k this reduces to "zeros occupy rows i0..k of
    /// the last column".
    pub strict_rows_with_zero_tail: bool,
}

pub fn classify_matrix(a: &IntMatrix) -> Result<MatrixClass> {
    if !a.is_nonnegative() {
        return Err(Error::Domain(
            "classification requires a nonnegative matrix".into(),
        ));
    }
    let (k, t) = (a.rows(), a.cols());
    let weak_rows = (1..=k).all(|i| (1..t).all(|j| a.get(i, j) >= a.get(i, j + 1)));
    let zeros_are_suffix = {
        let mut seen_zero = false;
        let mut ok = true;
        for j in 1..=t {
            for i in 1..=k {
                if a.get(i, j) == 0 {
                    seen_zero = true;
                } else if seen_zero {
                    ok = false;
                }
            }
        }
        ok
    };
    let strict_nonzero_prefixes = (1..=k).all(|i| {
        (1..t).all(|j| a.get(i, j + 1) == 0 || a.get(i, j) > a.get(i, j + 1))
    });
    Ok(MatrixClass {
        weak_rows,
        strict_rows_with_zero_tail: zeros_are_suffix && strict_nonzero_prefixes,
    })
}

/// Monotonicity classification of an integer sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SequenceClass {
    /// Weakly decreasing with last entry >= 0.
    pub weakly_decreasing: bool,
    /// A strictly decreasing positive prefix followed by an all-zero tail.
    pub strictly_decreasing_mod_zero_tail: bool,
}

pub fn classify_sequence(s: &[i64]) -> SequenceClass {
    let weakly_decreasing =
        s.windows(2).all(|w| w[0] >= w[1]) && s.last().map_or(true, |&x| x >= 0);
    let m = s.iter().take_while(|&&x| x > 0).count();
    let strictly_decreasing_mod_zero_tail = s[..m].windows(2).all(|w| w[0] > w[1])
        && s[m..].iter().all(|&x| x == 0);
    SequenceClass {
        weakly_decreasing,
        strictly_decreasing_mod_zero_tail,
    }
}
