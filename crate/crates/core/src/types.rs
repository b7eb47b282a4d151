//! Domain types shared by every other module: partitions, overpartitions,
//! strict overpartitions and tuples of them, together with the elementary
//! statistics (weight, Schmidt weight, Durfee square size).
//!
//! All values are immutable after construction and validated on entry, so
//! downstream bijections can rely on the invariants without re-checking.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition: a finite weakly decreasing sequence of positive integers.
///
/// The empty partition is a first-class value of weight 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<i64>", try_from = "Vec<i64>")]
pub struct Partition {
    parts: Vec<i64>,
}

impl Partition {
    pub fn new(parts: Vec<i64>) -> Result<Self> {
        if parts.iter().any(|&p| p < 1) {
            return Err(Error::InvalidPartition(format!(
                "all parts must be >= 1, got {:?}",
                parts
            )));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts must be weakly decreasing, got {:?}",
                parts
            )));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of all parts.
    pub fn weight(&self) -> i64 {
        self.parts.iter().sum()
    }

    /// True iff adjacent parts differ by at least `k`.
    pub fn is_k_distinct(&self, k: i64) -> bool {
        self.parts.windows(2).all(|w| w[0] - w[1] >= k)
    }

    /// True iff the parts are strictly decreasing (1-distinct).
    pub fn is_strict(&self) -> bool {
        self.is_k_distinct(1)
    }

    /// Size of the Durfee square: the largest `d` with `parts[d] >= d`
    /// (1-based), 0 for the empty partition.
    pub fn durfee_size(&self) -> usize {
        let mut d = 0;
        for (i, &p) in self.parts.iter().enumerate() {
            if p >= (i + 1) as i64 {
                d = i + 1;
            } else {
                break;
            }
        }
        d
    }

    /// Number of parts that are `>= col` (the `col`-th column height of the
    /// Ferrers diagram, 1-based).
    pub fn column_height(&self, col: usize) -> usize {
        self.parts.iter().take_while(|&&p| p >= col as i64).count()
    }
}

impl From<Partition> for Vec<i64> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl TryFrom<Vec<i64>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<i64>) -> Result<Self> {
        Partition::new(parts)
    }
}

/// JSON shape of one overpartition part.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarkedPart {
    pub part: i64,
    pub over: bool,
}

/// An overpartition: a partition in which the final occurrence of a part
/// may be overlined.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<MarkedPart>", try_from = "Vec<MarkedPart>")]
pub struct Overpartition {
    parts: Vec<i64>,
    marks: Vec<bool>,
}

impl Overpartition {
    pub fn new(parts: Vec<i64>, marks: Vec<bool>) -> Result<Self> {
        if parts.len() != marks.len() {
            return Err(Error::InvalidMark(format!(
                "{} parts but {} marks",
                parts.len(),
                marks.len()
            )));
        }
        let base = Partition::new(parts)?;
        let parts = Vec::from(base);
        for i in 0..parts.len() {
            // a mark is allowed only on the final occurrence of a value
            if marks[i] && i + 1 < parts.len() && parts[i] == parts[i + 1] {
                return Err(Error::InvalidMark(format!(
                    "part at position {} is overlined but is not the final occurrence of {}",
                    i + 1,
                    parts[i]
                )));
            }
        }
        Ok(Overpartition { parts, marks })
    }

    pub fn unmarked(parts: Vec<i64>) -> Result<Self> {
        let marks = vec![false; parts.len()];
        Overpartition::new(parts, marks)
    }

    pub fn empty() -> Self {
        Overpartition {
            parts: Vec::new(),
            marks: Vec::new(),
        }
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    pub fn marks(&self) -> &[bool] {
        &self.marks
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> i64 {
        self.parts.iter().sum()
    }

    /// Number of overlined parts.
    pub fn mark_count(&self) -> usize {
        self.marks.iter().filter(|&&m| m).count()
    }

    /// The partition obtained by forgetting the overlines.
    pub fn underlying(&self) -> Partition {
        Partition {
            parts: self.parts.clone(),
        }
    }
}

impl From<Overpartition> for Vec<MarkedPart> {
    fn from(p: Overpartition) -> Self {
        p.parts
            .iter()
            .zip(&p.marks)
            .map(|(&part, &over)| MarkedPart { part, over })
            .collect()
    }
}

impl TryFrom<Vec<MarkedPart>> for Overpartition {
    type Error = Error;
    fn try_from(v: Vec<MarkedPart>) -> Result<Self> {
        let (parts, marks) = v.iter().map(|mp| (mp.part, mp.over)).unzip();
        Overpartition::new(parts, marks)
    }
}

/// A strict overpartition: strictly decreasing parts, where a part may be
/// overlined only if the gap to the next part is at least 2 or it is the
/// last part.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<MarkedPart>", try_from = "Vec<MarkedPart>")]
pub struct StrictOverpartition {
    parts: Vec<i64>,
    marks: Vec<bool>,
}

impl StrictOverpartition {
    pub fn new(parts: Vec<i64>, marks: Vec<bool>) -> Result<Self> {
        if parts.len() != marks.len() {
            return Err(Error::InvalidMark(format!(
                "{} parts but {} marks",
                parts.len(),
                marks.len()
            )));
        }
        if parts.iter().any(|&p| p < 1) {
            return Err(Error::InvalidPartition(format!(
                "all parts must be >= 1, got {:?}",
                parts
            )));
        }
        if !parts.windows(2).all(|w| w[0] > w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts must be strictly decreasing, got {:?}",
                parts
            )));
        }
        for i in 0..parts.len() {
            if marks[i] && i + 1 < parts.len() && parts[i] - parts[i + 1] < 2 {
                return Err(Error::InvalidMark(format!(
                    "part {} at position {} is overlined but the gap to the next part is 1",
                    parts[i],
                    i + 1
                )));
            }
        }
        Ok(StrictOverpartition { parts, marks })
    }

    pub fn unmarked(parts: Vec<i64>) -> Result<Self> {
        let marks = vec![false; parts.len()];
        StrictOverpartition::new(parts, marks)
    }

    pub fn empty() -> Self {
        StrictOverpartition {
            parts: Vec::new(),
            marks: Vec::new(),
        }
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    pub fn marks(&self) -> &[bool] {
        &self.marks
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> i64 {
        self.parts.iter().sum()
    }

    pub fn mark_count(&self) -> usize {
        self.marks.iter().filter(|&&m| m).count()
    }

    pub fn underlying(&self) -> Partition {
        Partition {
            parts: self.parts.clone(),
        }
    }
}

impl From<StrictOverpartition> for Vec<MarkedPart> {
    fn from(p: StrictOverpartition) -> Self {
        p.parts
            .iter()
            .zip(&p.marks)
            .map(|(&part, &over)| MarkedPart { part, over })
            .collect()
    }
}

impl TryFrom<Vec<MarkedPart>> for StrictOverpartition {
    type Error = Error;
    fn try_from(v: Vec<MarkedPart>) -> Result<Self> {
        let (parts, marks) = v.iter().map(|mp| (mp.part, mp.over)).unzip();
        StrictOverpartition::new(parts, marks)
    }
}

/// One slot of a tuple partition. Ordinary partitions serialize as plain
/// integer arrays, overpartitions as arrays of `{"part": .., "over": ..}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TupleMember {
    Partition(Partition),
    Overpartition(Overpartition),
}

impl TupleMember {
    pub fn weight(&self) -> i64 {
        match self {
            TupleMember::Partition(p) => p.weight(),
            TupleMember::Overpartition(p) => p.weight(),
        }
    }

    pub fn len(&self) -> usize {
        match self {
            TupleMember::Partition(p) => p.len(),
            TupleMember::Overpartition(p) => p.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn mark_count(&self) -> usize {
        match self {
            TupleMember::Partition(_) => 0,
            TupleMember::Overpartition(p) => p.mark_count(),
        }
    }
}

/// An ordered tuple of partition-like members whose weights sum to the
/// weight of the tuple.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct KTuple {
    pub members: Vec<TupleMember>,
}

impl KTuple {
    pub fn new(members: Vec<TupleMember>) -> Self {
        KTuple { members }
    }

    pub fn k(&self) -> usize {
        self.members.len()
    }

    pub fn weight(&self) -> i64 {
        self.members.iter().map(|m| m.weight()).sum()
    }

    pub fn mark_count(&self) -> usize {
        self.members.iter().map(|m| m.mark_count()).sum()
    }
}

/// Sum of the entries at 1-based positions 1, k+1, 2k+1, ...
pub fn schmidt_weight(entries: &[i64], k: usize) -> i64 {
    assert!(k >= 1, "modulus k must be >= 1");
    entries.iter().step_by(k).sum()
}
