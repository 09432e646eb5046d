//! Finite lattices stored as meet tables (commutative idempotent semigroup
//! form), with the order, Hasse covers and automorphisms as derived views.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("meet table is not {0}")]
    NotASemilattice(&'static str),
    #[error("induced order lacks a join for vertices {0} and {1}")]
    MissingJoin(usize, usize),
    #[error("table shape mismatch")]
    Shape,
}

/// A finite lattice on vertices `0..size` with an explicit meet table.
/// After canonicalization vertex 0 is always the bottom.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Lattice {
    size: usize,
    meet: Vec<usize>,
    bottom: usize,
    top: usize,
}

impl Lattice {
    /// Validates idempotency, commutativity, associativity and the existence
    /// of all binary joins in the induced order.
    pub fn from_meet(size: usize, meet_rows: Vec<Vec<usize>>) -> Result<Self, LatticeError> {
        if meet_rows.len() != size || meet_rows.iter().any(|r| r.len() != size) {
            return Err(LatticeError::Shape);
        }
        let mut meet = Vec::with_capacity(size * size);
        for row in &meet_rows {
            for &v in row {
                if v >= size {
                    return Err(LatticeError::Shape);
                }
                meet.push(v);
            }
        }
        let at = |x: usize, y: usize| meet[x * size + y];
        for x in 0..size {
            if at(x, x) != x {
                return Err(LatticeError::NotASemilattice("idempotent"));
            }
            for y in 0..size {
                if at(x, y) != at(y, x) {
                    return Err(LatticeError::NotASemilattice("commutative"));
                }
                for z in 0..size {
                    if at(at(x, y), z) != at(x, at(y, z)) {
                        return Err(LatticeError::NotASemilattice("associative"));
                    }
                }
            }
        }
        let leq = |x: usize, y: usize| at(x, y) == x;
        // joins must exist
        for x in 0..size {
            for y in 0..size {
                let uppers: Vec<usize> =
                    (0..size).filter(|&u| leq(x, u) && leq(y, u)).collect();
                let least = uppers
                    .iter()
                    .copied()
                    .filter(|&u| uppers.iter().all(|&v| leq(u, v)));
                if least.count() != 1 {
                    return Err(LatticeError::MissingJoin(x, y));
                }
            }
        }
        let bottom = (0..size)
            .find(|&b| (0..size).all(|x| at(b, x) == b))
            .ok_or(LatticeError::NotASemilattice("bounded below"))?;
        let top = (0..size)
            .find(|&t| (0..size).all(|x| at(t, x) == x))
            .ok_or(LatticeError::MissingJoin(0, 0))?;
        Ok(Lattice {
            size,
            meet,
            bottom,
            top,
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    #[inline]
    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.size + y]
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.meet(x, y) == x
    }

    pub fn meet_rows(&self) -> Vec<Vec<usize>> {
        (0..self.size)
            .map(|x| self.meet[x * self.size..(x + 1) * self.size].to_vec())
            .collect()
    }

    /// Exact covering pairs (upper, lower) of the induced order.
    pub fn hasse_covers(&self) -> Vec<(usize, usize)> {
        let n = self.size;
        let mut out = Vec::new();
        for hi in 0..n {
            for lo in 0..n {
                if lo == hi || !self.leq(lo, hi) {
                    continue;
                }
                let skipped = (0..n)
                    .any(|m| m != lo && m != hi && self.leq(lo, m) && self.leq(m, hi));
                if !skipped {
                    out.push((hi, lo));
                }
            }
        }
        out.sort();
        out
    }

    /// All order-preserving bijections onto itself, as `perm[old] = new`.
    pub fn automorphisms(&self) -> Vec<Vec<usize>> {
        let classes = refine_classes(&self.leq_matrix());
        let n = self.size;
        let mut out = Vec::new();
        let mut perm = vec![usize::MAX; n];
        let mut used = vec![false; n];
        self.auto_backtrack(&classes, 0, &mut perm, &mut used, &mut out);
        out.sort();
        out
    }

    fn auto_backtrack(
        &self,
        classes: &[usize],
        v: usize,
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let n = self.size;
        if v == n {
            let total =
                (0..n).all(|a| (0..n).all(|b| perm[self.meet(a, b)] == self.meet(perm[a], perm[b])));
            if total {
                out.push(perm.clone());
            }
            return;
        }
        for im in 0..n {
            if used[im] || classes[im] != classes[v] {
                continue;
            }
            // prune on meets whose result is already assigned
            let ok = (0..v).all(|w| {
                let m = self.meet(v, w);
                m > v || {
                    let pm = if m == v { im } else { perm[m] };
                    pm == self.meet(im, perm[w])
                }
            });
            if !ok {
                continue;
            }
            perm[v] = im;
            used[im] = true;
            self.auto_backtrack(classes, v + 1, perm, used, out);
            perm[v] = usize::MAX;
            used[im] = false;
        }
    }

    pub fn leq_matrix(&self) -> Vec<Vec<bool>> {
        (0..self.size)
            .map(|x| (0..self.size).map(|y| self.leq(x, y)).collect())
            .collect()
    }

    /// Relabeling-invariant key; equal keys iff isomorphic lattices.
    pub fn canonical_key(&self) -> Vec<u8> {
        canonical_poset_key(&self.leq_matrix())
    }

    /// Relabels vertices into canonical order (bottom becomes 0).
    pub fn canonicalize(&self) -> Lattice {
        let perm = canonical_poset_perm(&self.leq_matrix());
        let n = self.size;
        let mut meet = vec![vec![0; n]; n];
        for x in 0..n {
            for y in 0..n {
                meet[perm[x]][perm[y]] = perm[self.meet(x, y)];
            }
        }
        Lattice::from_meet(n, meet).expect("relabeling preserves the lattice laws")
    }
}

/// Whether a reflexive partial order (given as a boolean matrix) has all
/// binary meets and joins.
pub fn is_lattice(leq: &[Vec<bool>]) -> bool {
    let n = leq.len();
    if leq.iter().any(|r| r.len() != n) {
        return false;
    }
    let bound_ok = |xs: &[usize], x: usize, y: usize, lower: bool| -> bool {
        let cmp = |a: usize, b: usize| if lower { leq[a][b] } else { leq[b][a] };
        let bounds: Vec<usize> = xs
            .iter()
            .copied()
            .filter(|&c| cmp(c, x) && cmp(c, y))
            .collect();
        bounds
            .iter()
            .filter(|&&c| bounds.iter().all(|&d| cmp(d, c)))
            .count()
            == 1
    };
    let all: Vec<usize> = (0..n).collect();
    for x in 0..n {
        for y in 0..n {
            if !bound_ok(&all, x, y, true) || !bound_ok(&all, x, y, false) {
                return false;
            }
        }
    }
    true
}

/// Iterated invariant refinement of a poset; returns a class id per vertex,
/// ordered so the bottom's class is first and the top's last.
pub(crate) fn refine_classes(leq: &[Vec<bool>]) -> Vec<usize> {
    let n = leq.len();
    let mut inv: Vec<u64> = (0..n)
        .map(|i| {
            let down = (0..n).filter(|&j| leq[j][i]).count() as u64;
            let up = (0..n).filter(|&j| leq[i][j]).count() as u64;
            down * 1000 + up
        })
        .collect();
    for _ in 0..n {
        let mut sigs: Vec<(u64, Vec<u64>, Vec<u64>)> = Vec::with_capacity(n);
        for i in 0..n {
            let mut below: Vec<u64> = (0..n).filter(|&j| leq[j][i]).map(|j| inv[j]).collect();
            let mut above: Vec<u64> = (0..n).filter(|&j| leq[i][j]).map(|j| inv[j]).collect();
            below.sort();
            above.sort();
            sigs.push((inv[i], below, above));
        }
        let mut sorted: Vec<_> = sigs.clone();
        sorted.sort();
        sorted.dedup();
        inv = sigs
            .iter()
            .map(|s| sorted.binary_search(s).unwrap() as u64)
            .collect();
    }
    inv.iter().map(|&v| v as usize).collect()
}

fn canonical_poset_perm(leq: &[Vec<bool>]) -> Vec<usize> {
    let n = leq.len();
    let classes = refine_classes(leq);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| (classes[i], i));
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for &i in &order {
        match groups.last() {
            Some(g) if classes[g[0]] == classes[i] => groups.last_mut().unwrap().push(i),
            _ => groups.push(vec![i]),
        }
    }
    let mut best: Option<(Vec<u8>, Vec<usize>)> = None;
    let mut perm = vec![0usize; n];
    canon_backtrack(leq, &groups, 0, 0, &mut perm, &mut best);
    best.expect("poset has a labeling").1
}

pub(crate) fn canonical_poset_key(leq: &[Vec<bool>]) -> Vec<u8> {
    let n = leq.len();
    let perm = canonical_poset_perm(leq);
    let mut key = vec![0u8; n * n];
    for x in 0..n {
        for y in 0..n {
            if leq[x][y] {
                key[perm[x] * n + perm[y]] = 1;
            }
        }
    }
    key
}

fn canon_backtrack(
    leq: &[Vec<bool>],
    groups: &[Vec<usize>],
    gi: usize,
    base: usize,
    perm: &mut Vec<usize>,
    best: &mut Option<(Vec<u8>, Vec<usize>)>,
) {
    if gi == groups.len() {
        let n = leq.len();
        let mut key = vec![0u8; n * n];
        for x in 0..n {
            for y in 0..n {
                if leq[x][y] {
                    key[perm[x] * n + perm[y]] = 1;
                }
            }
        }
        if best.is_none() || key < best.as_ref().unwrap().0 {
            *best = Some((key, perm.clone()));
        }
        return;
    }
    let group = groups[gi].clone();
    let mut idx: Vec<usize> = (0..group.len()).collect();
    fn per(
        leq: &[Vec<bool>],
        groups: &[Vec<usize>],
        gi: usize,
        base: usize,
        group: &[usize],
        idx: &mut Vec<usize>,
        pos: usize,
        perm: &mut Vec<usize>,
        best: &mut Option<(Vec<u8>, Vec<usize>)>,
    ) {
        if pos == group.len() {
            canon_backtrack(leq, groups, gi + 1, base + group.len(), perm, best);
            return;
        }
        for i in pos..idx.len() {
            idx.swap(pos, i);
            perm[group[idx[pos]]] = base + pos;
            per(leq, groups, gi, base, group, idx, pos + 1, perm, best);
            idx.swap(pos, i);
        }
    }
    per(leq, groups, gi, base, &group, &mut idx, 0, perm, best);
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn chain(n: usize) -> Lattice {
        let meet = (0..n)
            .map(|x| (0..n).map(|y| x.min(y)).collect())
            .collect();
        Lattice::from_meet(n, meet).unwrap()
    }

    pub(crate) fn diamond() -> Lattice {
        // 0 bottom, 1 and 2 incomparable, 3 top
        let meet = vec![
            vec![0, 0, 0, 0],
            vec![0, 1, 0, 1],
            vec![0, 0, 2, 2],
            vec![0, 1, 2, 3],
        ];
        Lattice::from_meet(4, meet).unwrap()
    }

    /// The 8-vertex lattice with three middle "squares".
    pub(crate) fn three_square_lattice() -> Lattice {
        // bottom 0; atoms 1,2,3; coatoms 4,5,6; top 7
        // 4 covers {1,2}; 5 covers {1,3}; 6 covers {2,3}
        let n = 8;
        let mut leq = vec![vec![false; n]; n];
        for i in 0..n {
            leq[i][i] = true;
        }
        let covers = [
            (7, 4),
            (7, 5),
            (7, 6),
            (4, 1),
            (4, 2),
            (5, 1),
            (5, 3),
            (6, 2),
            (6, 3),
            (1, 0),
            (2, 0),
            (3, 0),
        ];
        for (hi, lo) in covers {
            leq[lo][hi] = true;
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if leq[i][k] && leq[k][j] {
                        leq[i][j] = true;
                    }
                }
            }
        }
        let mut meet = vec![vec![0; n]; n];
        for a in 0..n {
            for b in 0..n {
                let lower: Vec<usize> = (0..n).filter(|&c| leq[c][a] && leq[c][b]).collect();
                meet[a][b] = lower
                    .iter()
                    .copied()
                    .find(|&c| lower.iter().all(|&d| leq[d][c]))
                    .unwrap();
            }
        }
        Lattice::from_meet(n, meet).unwrap()
    }

    #[test]
    fn chains_and_diamonds_validate() {
        assert_eq!(chain(3).hasse_covers().len(), 2);
        assert_eq!(diamond().hasse_covers().len(), 4);
        assert_eq!(chain(5).bottom(), 0);
        assert_eq!(chain(5).top(), 4);
    }

    #[test]
    fn n_poset_is_not_a_lattice() {
        // a, b, c, d with a<c, a<d, b<d only
        let n = 4;
        let mut leq = vec![vec![false; n]; n];
        for i in 0..n {
            leq[i][i] = true;
        }
        leq[0][2] = true;
        leq[0][3] = true;
        leq[1][3] = true;
        assert!(!is_lattice(&leq));
        assert!(is_lattice(&diamond().leq_matrix()));
        assert!(is_lattice(&chain(4).leq_matrix()));
    }

    #[test]
    fn automorphism_groups() {
        for n in 2..6 {
            assert_eq!(chain(n).automorphisms().len(), 1);
        }
        assert_eq!(diamond().automorphisms().len(), 2);
        // brute-force-derived value for the three-square lattice: the three
        // middle squares are freely permuted
        assert_eq!(three_square_lattice().automorphisms().len(), 6);
    }

    #[test]
    fn three_square_lattice_has_12_covers() {
        assert_eq!(three_square_lattice().hasse_covers().len(), 12);
    }

    #[test]
    fn canonical_bottom_is_zero() {
        let l = diamond().canonicalize();
        assert_eq!(l.bottom(), 0);
        assert_eq!(l.top(), l.size() - 1);
    }

    #[test]
    fn covers_transitive_closure_reproduces_order() {
        for l in [chain(4), diamond(), three_square_lattice()] {
            let n = l.size();
            let covers = l.hasse_covers();
            let mut closure = vec![vec![false; n]; n];
            for i in 0..n {
                closure[i][i] = true;
            }
            for &(hi, lo) in &covers {
                closure[lo][hi] = true;
            }
            for k in 0..n {
                for i in 0..n {
                    for j in 0..n {
                        if closure[i][k] && closure[k][j] {
                            closure[i][j] = true;
                        }
                    }
                }
            }
            assert_eq!(closure, l.leq_matrix());
        }
    }
}
