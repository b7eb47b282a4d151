//! Overpartition analogues: strict overpartition tuples map to Schmidt
//! k-overpartitions, unrestricted overpartition tuples to unrestricted
//! Schmidt k-overpartitions (marks transported positionally), and the
//! marked-Ferrers Durfee decomposition of an overpartition into two strict
//! overpartitions.

use crate::error::{Error, Result};
use crate::schmidt::{
    durfee_compose, durfee_decompose, schmidt_to_strict_tuple, schmidt_to_unrestricted_tuple,
    strict_tuple_to_schmidt, unrestricted_tuple_to_schmidt, SchmidtSequence,
};
use crate::types::{schmidt_weight, Overpartition, Partition, StrictOverpartition};

/// Schmidt weight of the parts of a strict overpartition.
pub fn strict_over_schmidt_weight(s: &StrictOverpartition, k: usize) -> i64 {
    schmidt_weight(s.parts(), k)
}

/// Schmidt weight of the parts of an overpartition.
pub fn over_schmidt_weight(s: &Overpartition, k: usize) -> i64 {
    schmidt_weight(s.parts(), k)
}

fn strip_strict(members: &[StrictOverpartition]) -> Result<Vec<Partition>> {
    members.iter().map(|m| Partition::new(m.parts().to_vec())).collect()
}

/// Maps a k-tuple of strict overpartitions (lengths t for the first r
/// members, t-1 for the rest; overlined parts of members other than the
/// r-th must be at least 2) to the Schmidt k-overpartition with the same
/// total number of overlines: the overline of the j-th part of member i
/// lands on the part at position (j-1)k + i.
pub fn over_strict_tuple_to_schmidt(
    members: &[StrictOverpartition],
    k: usize,
    t: usize,
    r: usize,
) -> Result<StrictOverpartition> {
    for (i, m) in members.iter().enumerate() {
        if i + 1 != r {
            for (j, &mk) in m.marks().iter().enumerate() {
                if mk && m.parts()[j] < 2 {
                    return Err(Error::InvalidMark(format!(
                        "member {} has an overlined 1 but is not the r-th member",
                        i + 1
                    )));
                }
            }
        }
    }
    let plain = strip_strict(members)?;
    let s = strict_tuple_to_schmidt(&plain, k, t, r)?;
    let mut marks = vec![false; s.len()];
    for (i, m) in members.iter().enumerate() {
        for (j, &mk) in m.marks().iter().enumerate() {
            if mk {
                marks[j * k + i] = true;
            }
        }
    }
    StrictOverpartition::new(s.entries().to_vec(), marks)
}

/// Inverse of [`over_strict_tuple_to_schmidt`].
pub fn schmidt_over_to_strict_tuple(
    s: &StrictOverpartition,
    k: usize,
) -> Result<(Vec<StrictOverpartition>, usize, usize)> {
    let seq = SchmidtSequence::new_strict(s.parts().to_vec(), k)?;
    let (plain, t, r) = schmidt_to_strict_tuple(&seq)?;
    let mut members = Vec::with_capacity(k);
    for (i, m) in plain.iter().enumerate() {
        let marks: Vec<bool> = (0..m.len()).map(|j| s.marks()[j * k + i]).collect();
        members.push(StrictOverpartition::new(m.parts().to_vec(), marks)?);
    }
    Ok((members, t, r))
}

/// Maps a k-tuple of overpartitions (not all empty) to the unrestricted
/// Schmidt k-overpartition with the same number of overlines.
pub fn over_unrestricted_tuple_to_schmidt(
    members: &[Overpartition],
    k: usize,
) -> Result<(Overpartition, usize, usize)> {
    let plain: Vec<Partition> = members.iter().map(|m| m.underlying()).collect();
    let (s, t, r) = unrestricted_tuple_to_schmidt(&plain, k)?;
    let mut marks = vec![false; s.len()];
    for (i, m) in members.iter().enumerate() {
        for (j, &mk) in m.marks().iter().enumerate() {
            if mk {
                marks[j * k + i] = true;
            }
        }
    }
    let out = Overpartition::new(s.entries().to_vec(), marks)?;
    Ok((out, t, r))
}

/// Inverse of [`over_unrestricted_tuple_to_schmidt`].
pub fn schmidt_over_to_unrestricted_tuple(
    s: &Overpartition,
    k: usize,
) -> Result<Vec<Overpartition>> {
    let seq = SchmidtSequence::new_unrestricted(s.parts().to_vec(), k)?;
    let plain = schmidt_to_unrestricted_tuple(&seq)?;
    let mut members = Vec::with_capacity(k);
    for (i, m) in plain.iter().enumerate() {
        let marks: Vec<bool> = (0..m.len())
            .map(|j| s.marks().get(j * k + i).copied().unwrap_or(false))
            .collect();
        members.push(Overpartition::new(m.parts().to_vec(), marks)?);
    }
    Ok(members)
}

/// Durfee decomposition of an overpartition. The underlying partition is
/// split along the diagonal as usual; a part of `alpha` is overlined iff
/// the bottom cell of its column is marked, a part of `beta` iff the last
/// cell of its row is marked. A marked cell of the Ferrers graph is the
/// final cell of an overlined row.
pub fn over_durfee_decompose(
    p: &Overpartition,
) -> Result<(StrictOverpartition, StrictOverpartition)> {
    if p.is_empty() {
        return Err(Error::Domain("cannot decompose the empty overpartition".into()));
    }
    let base = p.underlying();
    let (alpha, beta) = durfee_decompose(&base)?;
    let t = base.durfee_size();
    let alpha_marks: Vec<bool> = (1..=t)
        .map(|col| {
            // bottom cell of column `col` is (row, col) with row the column
            // height; it is marked iff that row is overlined and ends there
            let row = base.column_height(col);
            p.marks()[row - 1] && base.parts()[row - 1] == col as i64
        })
        .collect();
    let beta_marks: Vec<bool> = (0..beta.len()).map(|i| p.marks()[i]).collect();
    Ok((
        StrictOverpartition::new(alpha.parts().to_vec(), alpha_marks)?,
        StrictOverpartition::new(beta.parts().to_vec(), beta_marks)?,
    ))
}

/// Inverse of [`over_durfee_decompose`]. Requires the pair to satisfy the
/// side condition that an overlined 1 in `alpha` occurs only when `beta`
/// has length t-1 (and symmetrically no overlined 1 in `beta` of length
/// t-1), which is exactly when the mark lands on a row-final cell.
pub fn over_durfee_compose(
    alpha: &StrictOverpartition,
    beta: &StrictOverpartition,
) -> Result<Overpartition> {
    let t = alpha.len();
    let base = durfee_compose(
        &Partition::new(alpha.parts().to_vec())?,
        &Partition::new(beta.parts().to_vec())?,
    )?;
    let mut marks = vec![false; base.len()];
    for (i, &mk) in beta.marks().iter().enumerate() {
        if mk {
            marks[i] = true;
        }
    }
    for (col, &mk) in alpha.marks().iter().enumerate() {
        if mk {
            let col = col + 1;
            let row = base.column_height(col);
            if base.parts()[row - 1] != col as i64 {
                return Err(Error::InvalidMark(format!(
                    "overline on column {} of alpha does not land on a row-final cell",
                    col
                )));
            }
            marks[row - 1] = true;
        }
    }
    let out = Overpartition::new(Vec::from(base), marks)?;
    if out.underlying().durfee_size() != t {
        return Err(Error::Domain("composition changed the Durfee size".into()));
    }
    Ok(out)
}
