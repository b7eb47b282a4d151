//! Bijections between k-tuples of (strict or ordinary) partitions and
//! Schmidt k-partitions, the Durfee square decomposition into two strict
//! partitions, and the staircase transform linking 2-distinct triples to
//! strict triples.

use crate::error::{Error, Result};
use crate::phi::{phi_forward, phi_inverse, IntMatrix};
use crate::types::{schmidt_weight, Partition};

/// A sequence of positive integers whose tracked statistic is the Schmidt
/// weight with respect to the modulus `k`: the sum of the entries at
/// positions 1, k+1, 2k+1, ...
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SchmidtSequence {
    entries: Vec<i64>,
    k: usize,
}

impl SchmidtSequence {
    /// Strictly decreasing variant (a Schmidt k-partition).
    pub fn new_strict(entries: Vec<i64>, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::Dimension("modulus k must be >= 1".into()));
        }
        if entries.is_empty() || entries.iter().any(|&x| x < 1) {
            return Err(Error::InvalidPartition(
                "entries must be positive and nonempty".into(),
            ));
        }
        if !entries.windows(2).all(|w| w[0] > w[1]) {
            return Err(Error::InvalidPartition(format!(
                "entries must be strictly decreasing, got {:?}",
                entries
            )));
        }
        Ok(SchmidtSequence { entries, k })
    }

    /// Weakly decreasing variant (an unrestricted Schmidt k-partition).
    pub fn new_unrestricted(entries: Vec<i64>, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::Dimension("modulus k must be >= 1".into()));
        }
        if entries.is_empty() || entries.iter().any(|&x| x < 1) {
            return Err(Error::InvalidPartition(
                "entries must be positive and nonempty".into(),
            ));
        }
        if !entries.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidPartition(format!(
                "entries must be weakly decreasing, got {:?}",
                entries
            )));
        }
        Ok(SchmidtSequence { entries, k })
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn modulus(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The tracked statistic: sum over positions congruent to 1 mod k.
    pub fn weight(&self) -> i64 {
        schmidt_weight(&self.entries, self.k)
    }

    pub fn is_strict(&self) -> bool {
        self.entries.windows(2).all(|w| w[0] > w[1])
    }
}

/// Length bookkeeping shared by the tuple-side maps: given a sequence
/// length, `t` is the number of matrix columns and `r` the row index of the
/// last positive entry in the final column.
fn shape_of_len(len: usize, k: usize) -> (usize, usize) {
    let t = (len + k - 1) / k;
    let r = 1 + (len - 1) % k;
    (t, r)
}

/// Maps a k-tuple of strict partitions, the first r of length t and the
/// rest of length t-1, to the Schmidt k-partition of the same weight with
/// (t-1)k + r parts.
pub fn strict_tuple_to_schmidt(
    members: &[Partition],
    k: usize,
    t: usize,
    r: usize,
) -> Result<SchmidtSequence> {
    if members.len() != k || k == 0 {
        return Err(Error::Dimension(format!(
            "expected {} members, got {}",
            k,
            members.len()
        )));
    }
    if r < 1 || r > k || t < 1 {
        return Err(Error::Domain(format!("need 1 <= r <= k and t >= 1, got t={t} r={r}")));
    }
    let mut rows = Vec::with_capacity(k);
    for (i, m) in members.iter().enumerate() {
        let want = if i < r { t } else { t - 1 };
        if m.len() != want {
            return Err(Error::Domain(format!(
                "member {} must have length {}, got {}",
                i + 1,
                want,
                m.len()
            )));
        }
        if !m.is_strict() {
            return Err(Error::Domain(format!("member {} is not strict", i + 1)));
        }
        let mut row = m.parts().to_vec();
        row.resize(t, 0);
        rows.push(row);
    }
    let lam = phi_forward(&IntMatrix::new(rows)?);
    let cut = (t - 1) * k + r;
    debug_assert!(lam[cut..].iter().all(|&x| x == 0));
    SchmidtSequence::new_strict(lam[..cut].to_vec(), k)
}

/// Inverse of [`strict_tuple_to_schmidt`]: zero-pads to the next multiple of
/// k, inverts the matrix bijection, and reads the rows as strict partitions.
pub fn schmidt_to_strict_tuple(s: &SchmidtSequence) -> Result<(Vec<Partition>, usize, usize)> {
    if !s.is_strict() {
        return Err(Error::Domain("sequence is not strictly decreasing".into()));
    }
    let k = s.modulus();
    let (t, r) = shape_of_len(s.len(), k);
    let mut padded = s.entries().to_vec();
    padded.resize(t * k, 0);
    let a = phi_inverse(&padded, k)?;
    let mut members = Vec::with_capacity(k);
    for i in 1..=k {
        let row: Vec<i64> = a.row(i).iter().copied().filter(|&x| x != 0).collect();
        let p = Partition::new(row)?;
        let want = if i <= r { t } else { t - 1 };
        if p.len() != want || !p.is_strict() {
            return Err(Error::Domain(format!(
                "row {} did not invert to a strict partition of length {}",
                i, want
            )));
        }
        members.push(p);
    }
    Ok((members, t, r))
}

/// Maps a k-tuple of ordinary partitions (not all empty) to the unrestricted
/// Schmidt k-partition of the same weight, where t is the maximum member
/// length and r the largest index attaining it.
pub fn unrestricted_tuple_to_schmidt(
    members: &[Partition],
    k: usize,
) -> Result<(SchmidtSequence, usize, usize)> {
    if members.len() != k || k == 0 {
        return Err(Error::Dimension(format!(
            "expected {} members, got {}",
            k,
            members.len()
        )));
    }
    let t = members.iter().map(|m| m.len()).max().unwrap_or(0);
    if t == 0 {
        return Err(Error::Domain("all members are empty".into()));
    }
    let r = members
        .iter()
        .rposition(|m| m.len() == t)
        .map(|i| i + 1)
        .unwrap();
    let rows: Vec<Vec<i64>> = members
        .iter()
        .map(|m| {
            let mut row = m.parts().to_vec();
            row.resize(t, 0);
            row
        })
        .collect();
    let lam = phi_forward(&IntMatrix::new(rows)?);
    let cut = (t - 1) * k + r;
    debug_assert!(lam[cut..].iter().all(|&x| x == 0));
    let s = SchmidtSequence::new_unrestricted(lam[..cut].to_vec(), k)?;
    Ok((s, t, r))
}

/// Inverse of [`unrestricted_tuple_to_schmidt`].
pub fn schmidt_to_unrestricted_tuple(s: &SchmidtSequence) -> Result<Vec<Partition>> {
    let k = s.modulus();
    let (t, _r) = shape_of_len(s.len(), k);
    let mut padded = s.entries().to_vec();
    padded.resize(t * k, 0);
    let a = phi_inverse(&padded, k)?;
    let mut members = Vec::with_capacity(k);
    for i in 1..=k {
        let row = a.row(i);
        // zeros may only appear as a suffix of a weakly decreasing row
        let parts: Vec<i64> = row.iter().copied().take_while(|&x| x != 0).collect();
        if row[parts.len()..].iter().any(|&x| x != 0) {
            return Err(Error::Domain(format!(
                "row {} did not invert to a partition: {:?}",
                i, row
            )));
        }
        members.push(Partition::new(parts)?);
    }
    Ok(members)
}

/// Splits a nonempty partition along the diagonal of its Ferrers diagram
/// into two strict partitions: `alpha` reads the columns at or below the
/// diagonal (left to right), `beta` the rows to the right of it (top to
/// bottom). With t the Durfee size, `alpha` has length t and `beta` has
/// length t or t-1 according to whether the t-th part exceeds t.
pub fn durfee_decompose(p: &Partition) -> Result<(Partition, Partition)> {
    if p.is_empty() {
        return Err(Error::Domain("cannot decompose the empty partition".into()));
    }
    let t = p.durfee_size();
    let alpha: Vec<i64> = (1..=t)
        .map(|i| p.column_height(i) as i64 - i as i64 + 1)
        .collect();
    let mut beta: Vec<i64> = (1..=t).map(|i| p.parts()[i - 1] - i as i64).collect();
    if beta.last() == Some(&0) {
        beta.pop();
    }
    Ok((Partition::new(alpha)?, Partition::new(beta)?))
}

/// Inverse of [`durfee_decompose`]: rebuilds the unique partition with
/// Durfee size `len(alpha)` from its diagonal decomposition.
pub fn durfee_compose(alpha: &Partition, beta: &Partition) -> Result<Partition> {
    let t = alpha.len();
    if t == 0 {
        return Err(Error::Domain("alpha must be nonempty".into()));
    }
    if !alpha.is_strict() || !beta.is_strict() {
        return Err(Error::Domain("alpha and beta must be strict".into()));
    }
    if beta.len() != t && beta.len() + 1 != t {
        return Err(Error::Dimension(format!(
            "beta must have length {} or {}, got {}",
            t,
            t - 1,
            beta.len()
        )));
    }
    let mut parts: Vec<i64> = (1..=t)
        .map(|i| {
            let b = beta.parts().get(i - 1).copied().unwrap_or(0);
            b + i as i64
        })
        .collect();
    // rows below the Durfee square: row r gains a cell in column i exactly
    // when column i reaches down to row i + alpha_i - 1
    let max_row = (1..=t)
        .map(|i| i as i64 + alpha.parts()[i - 1] - 1)
        .max()
        .unwrap();
    for row in (t as i64 + 1)..=max_row {
        let width = (1..=t)
            .filter(|&i| i as i64 + alpha.parts()[i - 1] - 1 >= row)
            .count() as i64;
        parts.push(width);
    }
    let out = Partition::new(parts)?;
    if out.durfee_size() != t {
        return Err(Error::Domain(format!(
            "composition does not have Durfee size {}",
            t
        )));
    }
    Ok(out)
}

/// Removes the staircase (t-1, t-2, ..., 1, 0) from a 2-distinct partition
/// `alpha` of length t and adds it to an ordinary partition `gamma` of
/// length at most t, turning the triple (2-distinct, strict, ordinary) into
/// a triple of strict partitions of lengths (t, t, t or t-1).
pub fn staircase_forward(
    alpha: &Partition,
    beta: &Partition,
    gamma: &Partition,
    t: usize,
) -> Result<(Partition, Partition, Partition)> {
    if alpha.len() != t || !alpha.is_k_distinct(2) {
        return Err(Error::Domain(format!(
            "alpha must be a 2-distinct partition of length {}",
            t
        )));
    }
    if beta.len() != t || !beta.is_strict() {
        return Err(Error::Domain(format!(
            "beta must be a strict partition of length {}",
            t
        )));
    }
    if gamma.len() > t {
        return Err(Error::Domain(format!(
            "gamma must have length at most {}",
            t
        )));
    }
    let mu: Vec<i64> = (0..t)
        .map(|i| alpha.parts()[i] - (t - 1 - i) as i64)
        .collect();
    if mu.iter().any(|&x| x < 1) {
        return Err(Error::Domain(
            "alpha minus the staircase is not positive".into(),
        ));
    }
    let mut omega: Vec<i64> = (0..t)
        .map(|i| gamma.parts().get(i).copied().unwrap_or(0) + (t - 1 - i) as i64)
        .collect();
    if omega.last() == Some(&0) {
        omega.pop();
    }
    Ok((
        Partition::new(mu)?,
        beta.clone(),
        Partition::new(omega)?,
    ))
}

/// Inverse of [`staircase_forward`].
pub fn staircase_backward(
    mu: &Partition,
    nu: &Partition,
    omega: &Partition,
    t: usize,
) -> Result<(Partition, Partition, Partition)> {
    if mu.len() != t || !mu.is_strict() {
        return Err(Error::Domain(format!(
            "mu must be a strict partition of length {}",
            t
        )));
    }
    if nu.len() != t || !nu.is_strict() {
        return Err(Error::Domain(format!(
            "nu must be a strict partition of length {}",
            t
        )));
    }
    if !(omega.len() == t || omega.len() + 1 == t) || !omega.is_strict() {
        return Err(Error::Domain(format!(
            "omega must be a strict partition of length {} or {}",
            t,
            t - 1
        )));
    }
    let alpha: Vec<i64> = (0..t)
        .map(|i| mu.parts()[i] + (t - 1 - i) as i64)
        .collect();
    let mut gamma: Vec<i64> = (0..t)
        .map(|i| omega.parts().get(i).copied().unwrap_or(0) - (t - 1 - i) as i64)
        .collect();
    if gamma.iter().any(|&x| x < 0) {
        return Err(Error::Domain(
            "omega minus the staircase is not nonnegative".into(),
        ));
    }
    while gamma.last() == Some(&0) {
        gamma.pop();
    }
    Ok((
        Partition::new(alpha)?,
        nu.clone(),
        Partition::new(gamma)?,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[i64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn strict_tuple_examples() {
        let s = strict_tuple_to_schmidt(&[p(&[2, 1]), p(&[1])], 2, 2, 1).unwrap();
        assert_eq!(s.entries(), &[3, 2, 1]);
        assert_eq!(s.weight(), 4);

        let s = strict_tuple_to_schmidt(&[p(&[3]), p(&[])], 2, 1, 1).unwrap();
        assert_eq!(s.entries(), &[3]);

        let s = strict_tuple_to_schmidt(&[p(&[1]), p(&[1])], 2, 1, 2).unwrap();
        assert_eq!(s.entries(), &[2, 1]);
    }

    #[test]
    fn schmidt_to_strict_tuple_examples() {
        let s = SchmidtSequence::new_strict(vec![3, 2, 1], 2).unwrap();
        let (members, t, r) = schmidt_to_strict_tuple(&s).unwrap();
        assert_eq!(members, vec![p(&[2, 1]), p(&[1])]);
        assert_eq!((t, r), (2, 1));

        let s = SchmidtSequence::new_strict(vec![3], 2).unwrap();
        let (members, t, r) = schmidt_to_strict_tuple(&s).unwrap();
        assert_eq!(members, vec![p(&[3]), p(&[])]);
        assert_eq!((t, r), (1, 1));

        let s = SchmidtSequence::new_strict(vec![2, 1], 2).unwrap();
        let (members, t, r) = schmidt_to_strict_tuple(&s).unwrap();
        assert_eq!(members, vec![p(&[1]), p(&[1])]);
        assert_eq!((t, r), (1, 2));
    }

    #[test]
    fn unrestricted_tuple_examples() {
        let (s, t, r) = unrestricted_tuple_to_schmidt(&[p(&[2, 2]), p(&[1])], 2).unwrap();
        assert_eq!(s.entries(), &[3, 3, 2]);
        assert_eq!((t, r), (2, 1));

        let (s, t, r) = unrestricted_tuple_to_schmidt(&[p(&[1]), p(&[1])], 2).unwrap();
        assert_eq!(s.entries(), &[2, 1]);
        assert_eq!((t, r), (1, 2));

        let (s, t, r) = unrestricted_tuple_to_schmidt(&[p(&[]), p(&[3, 1])], 2).unwrap();
        assert_eq!(s.entries(), &[3, 3, 1, 1]);
        assert_eq!((t, r), (2, 2));

        assert!(unrestricted_tuple_to_schmidt(&[p(&[]), p(&[])], 2).is_err());
    }

    #[test]
    fn schmidt_to_unrestricted_examples() {
        let s = SchmidtSequence::new_unrestricted(vec![3, 3, 2], 2).unwrap();
        assert_eq!(
            schmidt_to_unrestricted_tuple(&s).unwrap(),
            vec![p(&[2, 2]), p(&[1])]
        );
        let s = SchmidtSequence::new_unrestricted(vec![2, 1], 2).unwrap();
        assert_eq!(
            schmidt_to_unrestricted_tuple(&s).unwrap(),
            vec![p(&[1]), p(&[1])]
        );
        let s = SchmidtSequence::new_unrestricted(vec![5], 3).unwrap();
        assert_eq!(
            schmidt_to_unrestricted_tuple(&s).unwrap(),
            vec![p(&[5]), p(&[]), p(&[])]
        );
    }

    #[test]
    fn durfee_examples() {
        let (alpha, beta) = durfee_decompose(&p(&[4, 3, 3, 1])).unwrap();
        assert_eq!(alpha, p(&[4, 2, 1]));
        assert_eq!(beta, p(&[3, 1]));
        assert_eq!(alpha.weight() + beta.weight(), 11);

        let (alpha, beta) = durfee_decompose(&p(&[1])).unwrap();
        assert_eq!(alpha, p(&[1]));
        assert_eq!(beta, p(&[]));

        let (alpha, beta) = durfee_decompose(&p(&[2, 2])).unwrap();
        assert_eq!(alpha, p(&[2, 1]));
        assert_eq!(beta, p(&[1]));

        assert!(durfee_decompose(&Partition::empty()).is_err());
    }

    #[test]
    fn durfee_compose_examples() {
        assert_eq!(
            durfee_compose(&p(&[4, 2, 1]), &p(&[3, 1])).unwrap(),
            p(&[4, 3, 3, 1])
        );
        assert_eq!(durfee_compose(&p(&[1]), &p(&[])).unwrap(), p(&[1]));
        assert_eq!(durfee_compose(&p(&[2, 1]), &p(&[1])).unwrap(), p(&[2, 2]));
        assert!(durfee_compose(&p(&[3, 1]), &p(&[5, 4, 1])).is_err());
    }

    #[test]
    fn staircase_examples() {
        let (mu, nu, omega) =
            staircase_forward(&p(&[4, 1]), &p(&[2, 1]), &p(&[3]), 2).unwrap();
        assert_eq!((mu, nu, omega), (p(&[3, 1]), p(&[2, 1]), p(&[4])));

        let (mu, nu, omega) = staircase_forward(&p(&[1]), &p(&[1]), &p(&[]), 1).unwrap();
        assert_eq!((mu, nu, omega), (p(&[1]), p(&[1]), p(&[])));

        let (mu, nu, omega) =
            staircase_forward(&p(&[5, 3, 1]), &p(&[3, 2, 1]), &p(&[1, 1, 1]), 3).unwrap();
        assert_eq!(
            (mu, nu, omega),
            (p(&[3, 2, 1]), p(&[3, 2, 1]), p(&[3, 2, 1]))
        );

        let (a, b, g) =
            staircase_backward(&p(&[3, 1]), &p(&[2, 1]), &p(&[4]), 2).unwrap();
        assert_eq!((a, b, g), (p(&[4, 1]), p(&[2, 1]), p(&[3])));
    }
}
