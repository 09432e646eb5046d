//! Isomorph-free lattice enumeration.
//!
//! A finite lattice is a finite meet-semilattice with a top, and removing a
//! maximal element from a meet-semilattice leaves one. So generation runs
//! level by level over meet-semilattices: extend each canonical
//! representative by one new maximal element whose strict down-set is a
//! valid ideal, keep canonical forms only, and read lattices off as the
//! semilattices with a unique maximal element.

use crate::lattice::{canonical_poset_key, Lattice, LatticeError};
use rayon::prelude::*;
use std::collections::HashMap;
use thiserror::Error;

/// Default largest size enumerated (a config knob, not a database wall).
pub const DEFAULT_LATTICE_CAP: usize = 8;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum LatticeEnumError {
    #[error("size {size} exceeds the lattice enumeration cap {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error(transparent)]
    Invalid(#[from] LatticeError),
}

#[derive(Clone)]
struct Semilattice {
    n: usize,
    leq: Vec<Vec<bool>>,
}

impl Semilattice {
    fn trivial() -> Self {
        Semilattice {
            n: 1,
            leq: vec![vec![true]],
        }
    }

    fn key(&self) -> Vec<u8> {
        canonical_poset_key(&self.leq)
    }

    /// Extensions by one new maximal element. The strict down-set must be a
    /// nonempty order ideal D such that D cap down(u) has a greatest element
    /// for every u, so that all meets with the new element exist.
    fn extensions(&self) -> Vec<Semilattice> {
        let n = self.n;
        let mut out = Vec::new();
        'mask: for mask in 1u32..(1 << n) {
            let d: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            // down-closed
            for &i in &d {
                for j in 0..n {
                    if self.leq[j][i] && mask >> j & 1 == 0 {
                        continue 'mask;
                    }
                }
            }
            for u in 0..n {
                let inter: Vec<usize> = d.iter().copied().filter(|&x| self.leq[x][u]).collect();
                if inter.is_empty() {
                    continue 'mask;
                }
                let greatest = inter
                    .iter()
                    .filter(|&&c| inter.iter().all(|&e| self.leq[e][c]))
                    .count();
                if greatest != 1 {
                    continue 'mask;
                }
            }
            let mut leq: Vec<Vec<bool>> = self
                .leq
                .iter()
                .map(|row| {
                    let mut r = row.clone();
                    r.push(false);
                    r
                })
                .collect();
            let mut last = vec![false; n + 1];
            last[n] = true;
            leq.push(last);
            for &i in &d {
                leq[i][n] = true;
            }
            out.push(Semilattice { n: n + 1, leq });
        }
        out
    }

    fn unique_maximal(&self) -> bool {
        (0..self.n)
            .filter(|&i| !(0..self.n).any(|j| j != i && self.leq[i][j]))
            .count()
            == 1
    }

    fn to_lattice(&self) -> Lattice {
        let n = self.n;
        let mut meet = vec![vec![0usize; n]; n];
        for a in 0..n {
            for b in 0..n {
                let lower: Vec<usize> =
                    (0..n).filter(|&c| self.leq[c][a] && self.leq[c][b]).collect();
                meet[a][b] = lower
                    .iter()
                    .copied()
                    .find(|&c| lower.iter().all(|&d| self.leq[d][c]))
                    .expect("meet-semilattice has all meets");
            }
        }
        Lattice::from_meet(n, meet)
            .expect("semilattice with top is a lattice")
            .canonicalize()
    }
}

/// The complete isomorph-free list of lattices with `size` elements, in
/// canonical-key order with vertex 0 the bottom of each.
pub fn enumerate_lattices(size: usize, cap: usize) -> Result<Vec<Lattice>, LatticeEnumError> {
    if size == 0 || size > cap {
        return Err(LatticeEnumError::CapExceeded { size, cap });
    }
    let mut level: Vec<Semilattice> = vec![Semilattice::trivial()];
    for _ in 1..size {
        let extended: Vec<(Vec<u8>, Semilattice)> = level
            .par_iter()
            .flat_map_iter(|sl| sl.extensions().into_iter().map(|e| (e.key(), e)))
            .collect();
        let mut seen: HashMap<Vec<u8>, Semilattice> = HashMap::new();
        for (key, sl) in extended {
            seen.entry(key).or_insert(sl);
        }
        let mut next: Vec<(Vec<u8>, Semilattice)> = seen.into_iter().collect();
        next.sort_by(|a, b| a.0.cmp(&b.0));
        level = next.into_iter().map(|(_, sl)| sl).collect();
    }
    let mut lattices: Vec<(Vec<u8>, Lattice)> = level
        .into_iter()
        .filter(|sl| sl.unique_maximal())
        .map(|sl| {
            let l = sl.to_lattice();
            (l.canonical_key(), l)
        })
        .collect();
    lattices.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(lattices.into_iter().map(|(_, l)| l).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_known_values() {
        let expected = [(1, 1), (2, 1), (3, 1), (4, 2), (5, 5), (6, 15), (7, 53), (8, 222)];
        for (size, count) in expected {
            assert_eq!(
                enumerate_lattices(size, DEFAULT_LATTICE_CAP).unwrap().len(),
                count,
                "size {size}"
            );
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            enumerate_lattices(9, DEFAULT_LATTICE_CAP),
            Err(LatticeEnumError::CapExceeded { .. })
        ));
        // but it is a knob
        assert_eq!(enumerate_lattices(9, 9).unwrap().len(), 1078);
    }

    #[test]
    fn every_lattice_is_canonical_with_bottom_zero() {
        for l in enumerate_lattices(6, 8).unwrap() {
            assert_eq!(l.bottom(), 0);
            let again = Lattice::from_meet(l.size(), l.meet_rows()).unwrap();
            assert_eq!(again.canonical_key(), l.canonical_key());
        }
    }

    #[test]
    fn keys_are_distinct() {
        let ls = enumerate_lattices(7, 8).unwrap();
        let mut keys: Vec<_> = ls.iter().map(|l| l.canonical_key()).collect();
        keys.sort();
        keys.dedup();
        assert_eq!(keys.len(), ls.len());
    }
}
