//! Admissible partitions: the combinatorial skeleton of the enumeration.
//!
//! An admissible partition of n splits n into parts >= 2 plus exactly one 1,
//! with some part whose prime support contains every other part's.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum PartitionError {
    #[error("admissible partitions require n >= 3, got {0}")]
    TooSmall(u64),
}

/// Parts >= 2 in weakly decreasing order; the single 1 is implicit.
/// `dominator` indexes the first part whose prime support contains all
/// others'.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AdmissiblePartition {
    pub parts: Vec<u64>,
    pub dominator: usize,
}

impl AdmissiblePartition {
    pub fn n(&self) -> u64 {
        self.parts.iter().sum::<u64>() + 1
    }

    /// Parts with the trailing 1 included, as displayed.
    pub fn with_one(&self) -> Vec<u64> {
        let mut v = self.parts.clone();
        v.push(1);
        v
    }
}

/// Set of prime divisors, ascending. Empty for k = 1.
pub fn prime_support(k: u64) -> Vec<u64> {
    crate::ring::factorize(k).into_iter().map(|(p, _)| p).collect()
}

/// True iff some part's prime support contains every part's divisors.
pub fn is_admissible(parts: &[u64]) -> bool {
    dominator_index(parts).is_some()
}

fn dominator_index(parts: &[u64]) -> Option<usize> {
    let supports: Vec<Vec<u64>> = parts.iter().map(|&p| prime_support(p)).collect();
    let mut union: Vec<u64> = supports.iter().flatten().copied().collect();
    union.sort();
    union.dedup();
    supports.iter().position(|s| *s == union)
}

/// All admissible partitions of n, complete and duplicate-free, parts in
/// weakly decreasing order, partitions in descending lexicographic order.
pub fn admissible_partitions(n: u64) -> Result<Vec<AdmissiblePartition>, PartitionError> {
    if n < 3 {
        return Err(PartitionError::TooSmall(n));
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    gen_parts(n - 1, n - 1, &mut current, &mut out);
    Ok(out)
}

fn gen_parts(rest: u64, max: u64, current: &mut Vec<u64>, out: &mut Vec<AdmissiblePartition>) {
    if rest == 0 {
        if let Some(dominator) = dominator_index(current) {
            out.push(AdmissiblePartition {
                parts: current.clone(),
                dominator,
            });
        }
        return;
    }
    let mut p = max.min(rest);
    while p >= 2 {
        if rest - p != 1 {
            current.push(p);
            gen_parts(rest - p, p, current, out);
            current.pop();
        }
        p -= 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_supports() {
        assert_eq!(prime_support(30), vec![2, 3, 5]);
        assert_eq!(prime_support(8), vec![2]);
        assert_eq!(prime_support(1), Vec::<u64>::new());
    }

    #[test]
    fn admissibility_examples() {
        assert!(is_admissible(&[4]));
        assert!(!is_admissible(&[3, 2]));
        assert!(is_admissible(&[30, 5, 3, 2]));
        assert_eq!(dominator_index(&[30, 5, 3, 2]), Some(0));
    }

    #[test]
    fn partitions_of_5_and_7() {
        let p5 = admissible_partitions(5).unwrap();
        let parts5: Vec<Vec<u64>> = p5.iter().map(|p| p.with_one()).collect();
        assert_eq!(parts5, vec![vec![4, 1], vec![2, 2, 1]]);

        let p7 = admissible_partitions(7).unwrap();
        let parts7: Vec<Vec<u64>> = p7.iter().map(|p| p.with_one()).collect();
        assert_eq!(
            parts7,
            vec![vec![6, 1], vec![4, 2, 1], vec![3, 3, 1], vec![2, 2, 2, 1]]
        );
    }

    #[test]
    fn counts_for_3_to_16() {
        let expected = [1, 1, 2, 1, 4, 1, 5, 3, 8, 2, 14, 3, 17, 11];
        for (i, &want) in expected.iter().enumerate() {
            let n = (i + 3) as u64;
            assert_eq!(admissible_partitions(n).unwrap().len(), want, "n={n}");
        }
    }

    #[test]
    fn brute_force_oracle_agrees() {
        // enumerate all partitions into parts >= 2 plus a single 1 and filter
        // by the definition directly
        fn all_parts(rest: u64, max: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
            if rest == 0 {
                out.push(cur.clone());
                return;
            }
            let mut p = max.min(rest);
            while p >= 2 {
                if rest - p != 1 {
                    cur.push(p);
                    all_parts(rest - p, p, cur, out);
                    cur.pop();
                }
                p -= 1;
            }
        }
        for n in 3..=16u64 {
            let mut all = Vec::new();
            all_parts(n - 1, n - 1, &mut Vec::new(), &mut all);
            let expected: Vec<Vec<u64>> = all
                .into_iter()
                .filter(|parts| {
                    let union: std::collections::BTreeSet<u64> =
                        parts.iter().flat_map(|&p| prime_support(p)).collect();
                    parts.iter().any(|&p| {
                        prime_support(p).into_iter().collect::<std::collections::BTreeSet<_>>()
                            == union
                    })
                })
                .collect();
            let got: Vec<Vec<u64>> = admissible_partitions(n)
                .unwrap()
                .into_iter()
                .map(|p| p.parts)
                .collect();
            assert_eq!(got, expected, "n={n}");
        }
    }

    #[test]
    fn prime_minus_one_orders_have_unique_partition() {
        for n in [3u64, 4, 6, 8] {
            let ps = admissible_partitions(n).unwrap();
            assert_eq!(ps.len(), 1);
            assert_eq!(ps[0].parts, vec![n - 1]);
        }
    }

    #[test]
    fn too_small_is_an_error() {
        assert!(matches!(admissible_partitions(2), Err(PartitionError::TooSmall(2))));
    }
}
