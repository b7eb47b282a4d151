//! k-elongated partition diamonds: a chain of t building blocks, each of
//! 2k+1 nodes ordered by "min of the left group >= max of the right group",
//! with counted weight the sum of the block-head nodes, and the bijection
//! with (2k+1)-tuples whose even slots are overpartitions (overlines are
//! encoded as strictly inverted pairs).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::phi::{phi_forward, phi_inverse, IntMatrix};
use crate::types::{Overpartition, Partition, TupleMember};

/// A k-elongated partition diamond stored flat: entries
/// pi_1 .. pi_{t(2k+1)+1} with the final entry 0 and each block satisfying
/// the chain order. Canonical form: for weight >= 1 the last building block
/// contains a nonzero entry.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawDiamond", into = "RawDiamond")]
pub struct Diamond {
    k: usize,
    entries: Vec<i64>,
    t: usize,
}

#[derive(Serialize, Deserialize)]
struct RawDiamond {
    k: usize,
    entries: Vec<i64>,
}

impl From<Diamond> for RawDiamond {
    fn from(d: Diamond) -> Self {
        RawDiamond {
            k: d.k,
            entries: d.entries,
        }
    }
}

impl TryFrom<RawDiamond> for Diamond {
    type Error = Error;
    fn try_from(raw: RawDiamond) -> Result<Self> {
        Diamond::new(raw.entries, raw.k)
    }
}

/// Summary statistics returned by the validator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiamondStats {
    /// Number of building blocks.
    pub t: usize,
    /// Sum of the block-head entries.
    pub weight: i64,
    /// Nonzero entries among the first t(2k+1) positions.
    pub nonzero_count: usize,
}

/// Checks every diamond invariant on a flat entry sequence: length congruent
/// to 1 mod 2k+1, final entry 0, chain order within each block, and the
/// canonical-form rule that the last block of a positive-weight diamond
/// contains a nonzero entry.
pub fn validate_diamond(entries: &[i64], k: usize) -> Result<DiamondStats> {
    if k == 0 {
        return Err(Error::Dimension("k must be >= 1".into()));
    }
    let block = 2 * k + 1;
    if entries.len() < block + 1 || (entries.len() - 1) % block != 0 {
        return Err(Error::InvalidDiamond(format!(
            "length {} is not t(2k+1)+1 for k = {}",
            entries.len(),
            k
        )));
    }
    if entries.iter().any(|&x| x < 0) {
        return Err(Error::InvalidDiamond("entries must be nonnegative".into()));
    }
    let t = (entries.len() - 1) / block;
    if *entries.last().unwrap() != 0 {
        return Err(Error::InvalidDiamond(format!(
            "final entry must be 0, got {}",
            entries.last().unwrap()
        )));
    }
    for b in 0..t {
        let base = b * block;
        // head >= both entries of the first pair, min of each pair >= max of
        // the next, min of the last pair >= next head
        let mut lo = entries[base];
        for pair in 0..k {
            let x = entries[base + 1 + 2 * pair];
            let y = entries[base + 2 + 2 * pair];
            if lo < x.max(y) {
                return Err(Error::InvalidDiamond(format!(
                    "chain violation in block {} at pair {}",
                    b + 1,
                    pair + 1
                )));
            }
            lo = x.min(y);
        }
        if lo < entries[base + block] {
            return Err(Error::InvalidDiamond(format!(
                "chain violation in block {}: tail head exceeds last pair",
                b + 1
            )));
        }
    }
    let weight: i64 = (0..t).map(|b| entries[b * block]).sum();
    let last_block = &entries[(t - 1) * block..t * block];
    if weight >= 1 && last_block.iter().all(|&x| x == 0) {
        return Err(Error::InvalidDiamond(
            "non-canonical: trailing all-zero building block".into(),
        ));
    }
    let nonzero_count = entries[..t * block].iter().filter(|&&x| x != 0).count();
    Ok(DiamondStats {
        t,
        weight,
        nonzero_count,
    })
}

impl Diamond {
    pub fn new(entries: Vec<i64>, k: usize) -> Result<Self> {
        let stats = validate_diamond(&entries, k)?;
        Ok(Diamond {
            k,
            entries,
            t: stats.t,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    /// Number of building blocks.
    pub fn t(&self) -> usize {
        self.t
    }

    pub fn weight(&self) -> i64 {
        let block = 2 * self.k + 1;
        (0..self.t).map(|b| self.entries[b * block]).sum()
    }

    pub fn nonzero_count(&self) -> usize {
        let block = 2 * self.k + 1;
        self.entries[..self.t * block]
            .iter()
            .filter(|&&x| x != 0)
            .count()
    }
}

fn check_tuple_slots(members: &[TupleMember], k: usize) -> Result<()> {
    if members.len() != 2 * k + 1 {
        return Err(Error::Dimension(format!(
            "expected {} members, got {}",
            2 * k + 1,
            members.len()
        )));
    }
    for (i, m) in members.iter().enumerate() {
        let even = (i + 1) % 2 == 0;
        match m {
            TupleMember::Partition(_) => {}
            TupleMember::Overpartition(o) => {
                if !even && o.mark_count() > 0 {
                    return Err(Error::InvalidMark(format!(
                        "slot {} is an odd slot and must not carry overlines",
                        i + 1
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Maps a (2k+1)-tuple whose even slots are overpartitions (odd slots plain
/// partitions) to a canonical diamond of the same weight. Pairs whose even
/// slot carries an overline in that column are emitted swapped, which makes
/// them strictly inverted and therefore recoverable.
pub fn tuple_to_diamond(members: &[TupleMember], k: usize) -> Result<Diamond> {
    check_tuple_slots(members, k)?;
    let rows_n = 2 * k + 1;
    let t = members.iter().map(|m| m.len()).max().unwrap_or(0);
    if t == 0 {
        return Err(Error::Domain("all members are empty".into()));
    }
    let mut rows = Vec::with_capacity(rows_n);
    let mut marks = vec![vec![false; t]; rows_n];
    for (i, m) in members.iter().enumerate() {
        let (parts, row_marks): (Vec<i64>, Vec<bool>) = match m {
            TupleMember::Partition(p) => (p.parts().to_vec(), vec![false; p.len()]),
            TupleMember::Overpartition(o) => (o.parts().to_vec(), o.marks().to_vec()),
        };
        let mut row = parts;
        row.resize(t, 0);
        for (j, &mk) in row_marks.iter().enumerate() {
            marks[i][j] = mk;
        }
        rows.push(row);
    }
    let lam = phi_forward(&IntMatrix::new(rows)?);
    let block = rows_n;
    let pos = |i: usize, j: usize| (j - 1) * block + i; // 1-based into lam/pi
    let mut pi = vec![0i64; t * block + 1];
    for j in 1..=t {
        pi[pos(1, j) - 1] = lam[pos(1, j) - 1];
        for i in 1..=k {
            let a = pos(2 * i, j);
            let b = pos(2 * i + 1, j);
            if marks[2 * i - 1][j - 1] {
                // overlined column: emit the pair swapped
                pi[a - 1] = lam[b - 1];
                pi[b - 1] = lam[a - 1];
            } else {
                pi[a - 1] = lam[a - 1];
                pi[b - 1] = lam[b - 1];
            }
        }
    }
    // final entry stays 0
    Diamond::new(pi, k)
}

/// Inverse of [`tuple_to_diamond`]: drops the final zero, restores the
/// weakly decreasing sequence by placing the larger element of each pair
/// first (ties unswapped), inverts the matrix bijection, and overlines the
/// even-slot entry of every strictly inverted pair.
pub fn diamond_to_tuple(d: &Diamond) -> Result<Vec<TupleMember>> {
    let k = d.k();
    let block = 2 * k + 1;
    let t = d.t();
    let pi = &d.entries()[..t * block];
    let mut lam = vec![0i64; t * block];
    let mut swapped = vec![vec![false; t]; k]; // [pair i - 1][col j - 1]
    let pos = |i: usize, j: usize| (j - 1) * block + i;
    for j in 1..=t {
        lam[pos(1, j) - 1] = pi[pos(1, j) - 1];
        for i in 1..=k {
            let a = pi[pos(2 * i, j) - 1];
            let b = pi[pos(2 * i + 1, j) - 1];
            if a < b {
                swapped[i - 1][j - 1] = true;
                lam[pos(2 * i, j) - 1] = b;
                lam[pos(2 * i + 1, j) - 1] = a;
            } else {
                lam[pos(2 * i, j) - 1] = a;
                lam[pos(2 * i + 1, j) - 1] = b;
            }
        }
    }
    if !lam.windows(2).all(|w| w[0] >= w[1]) {
        return Err(Error::InvalidDiamond(
            "entries do not sort into a weakly decreasing sequence by pair swaps".into(),
        ));
    }
    let a = phi_inverse(&lam, block)?;
    let mut members = Vec::with_capacity(block);
    for i in 1..=block {
        let row = a.row(i);
        let parts: Vec<i64> = row.iter().copied().take_while(|&x| x != 0).collect();
        if row[parts.len()..].iter().any(|&x| x != 0) {
            return Err(Error::InvalidDiamond(format!(
                "row {} did not invert to a partition: {:?}",
                i, row
            )));
        }
        if i % 2 == 0 {
            let marks: Vec<bool> = (0..parts.len())
                .map(|j| swapped[i / 2 - 1][j])
                .collect();
            // a swap beyond the member's length would be unrecoverable
            if (parts.len()..t).any(|j| swapped[i / 2 - 1][j]) {
                return Err(Error::InvalidDiamond(format!(
                    "inverted pair in slot {} beyond the member length",
                    i
                )));
            }
            members.push(TupleMember::Overpartition(Overpartition::new(
                parts, marks,
            )?));
        } else {
            members.push(TupleMember::Partition(Partition::new(parts)?));
        }
    }
    Ok(members)
}
