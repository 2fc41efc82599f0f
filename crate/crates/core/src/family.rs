//! An infinite antichain of basis elements for `Av(2431)·A`.

use alloc::vec::Vec;

use crate::class::{in_ca, PatternClass};
use crate::error::Error;
use crate::perm::Permutation;
use crate::Result;

/// `2 (m+1) (4 1) (6 3) ⋯ (m−4 m−7) (m−2) m (m−5) (m−1) (m−3)` for even `m >= 6`.
///
/// The bracketed pairs are absent when `m = 6`; at `m = 4` the template repeats 2.
pub fn family_2431(m: usize) -> Result<Permutation> {
    if !m.is_multiple_of(2) || m < 6 || m + 1 > crate::perm::MAX_LEN {
        return Err(Error::InvalidFamilyParameter(m));
    }
    let mut v: Vec<usize> = alloc::vec![2, m + 1];
    for top in (4..=m - 4).step_by(2) {
        v.push(top);
        v.push(top - 3);
    }
    v.extend([m - 2, m, m - 5, m - 1, m - 3]);
    Permutation::new(v.into_iter().map(|x| x as i64))
}

/// Outcome of checking one family member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyReport {
    pub m: usize,
    pub member: Permutation,
    /// The member is not in `Av(2431)·A`.
    pub excluded: bool,
    /// 1-based positions whose deletion falls outside `Av(2431)·A`.
    pub failing_deletions: Vec<usize>,
}

impl FamilyReport {
    pub fn passed(&self) -> bool {
        self.excluded && self.failing_deletions.is_empty()
    }
}

/// Checks that `family_2431(m)` is a basis element of `Av(2431)·A`.
pub fn verify_family_member(m: usize) -> Result<FamilyReport> {
    let member = family_2431(m)?;
    let class = PatternClass::new([Permutation::new([2i64, 4, 3, 1])?]);
    let excluded = !in_ca(&member, &class);
    let failing_deletions = (1..=member.len())
        .filter(|&i| {
            let shorter = member.delete_point(i).expect("position in range");
            !in_ca(&shorter, &class)
        })
        .collect();
    Ok(FamilyReport { m, member, excluded, failing_deletions })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn members() {
        let want: Permutation = "2 13 4 1 6 3 8 5 10 12 7 11 9".parse().unwrap();
        assert_eq!(family_2431(12).unwrap(), want);
        assert_eq!(family_2431(8).unwrap(), "294168375".parse().unwrap());
        assert_eq!(family_2431(7), Err(Error::InvalidFamilyParameter(7)));
        assert_eq!(family_2431(6).unwrap(), "2746153".parse().unwrap());
        assert_eq!(family_2431(4), Err(Error::InvalidFamilyParameter(4)));
    }

    #[test]
    fn small_members_verify() {
        for m in [6, 8, 10] {
            let r = verify_family_member(m).unwrap();
            assert!(r.passed(), "{r:?}");
        }
    }
}
