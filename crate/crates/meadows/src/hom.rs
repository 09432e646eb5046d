//! Unital ring homomorphisms: enumeration, isomorphism testing and
//! canonical forms for "up to isomorphism" bookkeeping.

use crate::ring::{cyclic_ring, factorize, product_ring, RingTable};
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum HomError {
    #[error("map has wrong length {got}, expected {expected}")]
    WrongLength { got: usize, expected: usize },
    #[error("map entry {value} out of range for target of order {order}")]
    OutOfRange { value: usize, order: usize },
    #[error("homomorphism law {law} fails at {witness:?}")]
    LawViolation { law: &'static str, witness: Vec<usize> },
    #[error("prime support of target order must divide into source order ({m} vs {n})")]
    UnsupportedFactorization { m: u64, n: u64 },
}

/// A verified unital ring homomorphism, stored as the image table of the
/// source's elements.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnitalHom {
    map: Vec<usize>,
}

impl UnitalHom {
    /// Checks all four laws (zero, one, sums, products) against the given
    /// source and target.
    pub fn new(source: &RingTable, target: &RingTable, map: Vec<usize>) -> Result<Self, HomError> {
        if map.len() != source.order() {
            return Err(HomError::WrongLength {
                got: map.len(),
                expected: source.order(),
            });
        }
        if let Some(&v) = map.iter().find(|&&v| v >= target.order()) {
            return Err(HomError::OutOfRange {
                value: v,
                order: target.order(),
            });
        }
        if map[source.zero()] != target.zero() {
            return Err(HomError::LawViolation {
                law: "zero",
                witness: vec![source.zero()],
            });
        }
        if map[source.one()] != target.one() {
            return Err(HomError::LawViolation {
                law: "one",
                witness: vec![source.one()],
            });
        }
        for x in 0..source.order() {
            for y in 0..source.order() {
                if map[source.add(x, y)] != target.add(map[x], map[y]) {
                    return Err(HomError::LawViolation {
                        law: "addition",
                        witness: vec![x, y],
                    });
                }
                if map[source.mul(x, y)] != target.mul(map[x], map[y]) {
                    return Err(HomError::LawViolation {
                        law: "multiplication",
                        witness: vec![x, y],
                    });
                }
            }
        }
        Ok(UnitalHom { map })
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn is_bijective(&self) -> bool {
        let n = self.map.len();
        let mut seen = vec![false; n];
        self.map.iter().all(|&v| v < n && !std::mem::replace(&mut seen[v], true))
    }

    /// `other` after `self` (self: R->S, other: S->T).
    pub fn then(&self, other: &UnitalHom) -> UnitalHom {
        UnitalHom {
            map: self.map.iter().map(|&v| other.map[v]).collect(),
        }
    }
}

/// The complete list of unital homomorphisms `source -> target`, in
/// lexicographic order of their image tables.
///
/// The search pivots on a minimal additive generating set of the source and
/// prunes candidate generator images by additive order before extending
/// additively and verifying the multiplicative laws.
pub fn enum_homs(source: &RingTable, target: &RingTable) -> Vec<UnitalHom> {
    if target.order() == 1 {
        // the constant map is the unique hom into the zero ring
        return vec![UnitalHom {
            map: vec![0; source.order()],
        }];
    }
    let gens = source.additive_generators();
    let coords = source.coordinates(&gens);
    let gen_orders: Vec<usize> = gens.iter().map(|&g| source.additive_order(g)).collect();
    let mut out = Vec::new();
    let mut images = vec![0usize; gens.len()];
    search_hom(source, target, &gens, &gen_orders, &coords, &mut images, 0, &mut out);
    out.sort();
    out.dedup();
    out
}

#[allow(clippy::too_many_arguments)]
fn search_hom(
    source: &RingTable,
    target: &RingTable,
    gens: &[usize],
    gen_orders: &[usize],
    coords: &[Vec<usize>],
    images: &mut Vec<usize>,
    depth: usize,
    out: &mut Vec<UnitalHom>,
) {
    if depth == gens.len() {
        // extend additively from the generator images
        let mut map = vec![0usize; source.order()];
        for (x, cx) in coords.iter().enumerate() {
            let mut acc = target.zero();
            for (i, &c) in cx.iter().enumerate() {
                for _ in 0..c {
                    acc = target.add(acc, images[i]);
                }
            }
            map[x] = acc;
        }
        if map[source.one()] != target.one() {
            return;
        }
        let n = source.order();
        for x in 0..n {
            for y in 0..n {
                if map[source.add(x, y)] != target.add(map[x], map[y])
                    || map[source.mul(x, y)] != target.mul(map[x], map[y])
                {
                    return;
                }
            }
        }
        out.push(UnitalHom { map });
        return;
    }
    for im in 0..target.order() {
        // the image's additive order must divide the generator's
        if gen_orders[depth] % target.additive_order(im) != 0 {
            continue;
        }
        images[depth] = im;
        search_hom(source, target, gens, gen_orders, coords, images, depth + 1, out);
    }
}

/// Searches for an operation-preserving bijection, returning one if it exists.
/// Quick-rejects on the sorted element-invariant profile, then backtracks over
/// images of additive generators restricted to invariant-equal elements.
pub fn is_isomorphic(r: &RingTable, s: &RingTable) -> Option<UnitalHom> {
    if r.order() != s.order() || r.invariant_profile() != s.invariant_profile() {
        return None;
    }
    let gens = r.additive_generators();
    let coords = r.coordinates(&gens);
    let gen_inv: Vec<_> = gens.iter().map(|&g| r.element_invariant(g)).collect();
    let mut images = vec![0usize; gens.len()];
    iso_search(r, s, &gens, &gen_inv, &coords, &mut images, 0)
}

fn iso_search(
    r: &RingTable,
    s: &RingTable,
    gens: &[usize],
    gen_inv: &[crate::ring::ElementInvariant],
    coords: &[Vec<usize>],
    images: &mut Vec<usize>,
    depth: usize,
) -> Option<UnitalHom> {
    if depth == gens.len() {
        let mut map = vec![0usize; r.order()];
        for (x, cx) in coords.iter().enumerate() {
            let mut acc = s.zero();
            for (i, &c) in cx.iter().enumerate() {
                for _ in 0..c {
                    acc = s.add(acc, images[i]);
                }
            }
            map[x] = acc;
        }
        let hom = UnitalHom { map };
        if hom.is_bijective() && UnitalHom::new(r, s, hom.map.clone()).is_ok() {
            return Some(hom);
        }
        return None;
    }
    for im in 0..s.order() {
        if s.element_invariant(im) != gen_inv[depth] {
            continue;
        }
        images[depth] = im;
        if let Some(h) = iso_search(r, s, gens, gen_inv, coords, images, depth + 1) {
            return Some(h);
        }
    }
    None
}

/// Relabeling-invariant key: equal keys iff the rings are isomorphic.
/// Minimizes the concatenated (add, mul) tables over all relabelings that
/// respect the element-invariant classes.
pub fn canonical_form(r: &RingTable) -> Vec<u8> {
    let n = r.order();
    assert!(n <= 0xFF, "canonical keys use byte entries");
    // refine classes: invariant vector, then invariant of the square
    let base: Vec<_> = (0..n).map(|x| r.element_invariant(x)).collect();
    let refined: Vec<_> = (0..n)
        .map(|x| (base[x], base[r.mul(x, x)], base[r.neg(x)]))
        .collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| refined[a].cmp(&refined[b]).then(a.cmp(&b)));
    // group into classes
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &x in &order {
        match classes.last() {
            Some(c) if refined[c[0]] == refined[x] => classes.last_mut().unwrap().push(x),
            _ => classes.push(vec![x]),
        }
    }
    let mut best: Option<Vec<u8>> = None;
    let mut perm = vec![0usize; n]; // perm[old] = new
    permute_classes(r, &classes, 0, 0, &mut perm, &mut best);
    best.expect("at least one labeling")
}

fn permute_classes(
    r: &RingTable,
    classes: &[Vec<usize>],
    ci: usize,
    next_label: usize,
    perm: &mut Vec<usize>,
    best: &mut Option<Vec<u8>>,
) {
    if ci == classes.len() {
        let n = r.order();
        let mut inv = vec![0usize; n]; // inv[new] = old
        for old in 0..n {
            inv[perm[old]] = old;
        }
        let mut key = Vec::with_capacity(2 * n * n);
        for &x in &inv {
            for &y in &inv {
                key.push(perm[r.add(x, y)] as u8);
            }
        }
        for &x in &inv {
            for &y in &inv {
                key.push(perm[r.mul(x, y)] as u8);
            }
        }
        if best.is_none() || key < *best.as_ref().unwrap() {
            *best = Some(key);
        }
        return;
    }
    let class = &classes[ci];
    let mut idx: Vec<usize> = (0..class.len()).collect();
    permute_one_class(r, classes, ci, next_label, class, &mut idx, 0, perm, best);
}

#[allow(clippy::too_many_arguments)]
fn permute_one_class(
    r: &RingTable,
    classes: &[Vec<usize>],
    ci: usize,
    next_label: usize,
    class: &[usize],
    idx: &mut Vec<usize>,
    pos: usize,
    perm: &mut Vec<usize>,
    best: &mut Option<Vec<u8>>,
) {
    if pos == class.len() {
        permute_classes(r, classes, ci + 1, next_label + class.len(), perm, best);
        return;
    }
    for i in pos..idx.len() {
        idx.swap(pos, i);
        perm[class[idx[pos]]] = next_label + pos;
        permute_one_class(r, classes, ci, next_label, class, idx, pos + 1, perm, best);
        idx.swap(pos, i);
    }
}

/// Instantiates the constructive homomorphism-existence witness: for
/// m = p1^a1...ps^as and n with prime support contained in m's, builds
/// S as the product of a_i copies of Z_{p_i}, T likewise, and the composite
/// project-then-diagonally-include map S -> T.
pub fn construct_witness_hom(m: u64, n: u64) -> Result<(RingTable, RingTable, UnitalHom), HomError> {
    if m == 0 || n == 0 {
        return Err(HomError::UnsupportedFactorization { m, n });
    }
    let mf = factorize(m);
    let nf = factorize(n);
    for (p, _) in &nf {
        if !mf.iter().any(|(q, _)| q == p) {
            return Err(HomError::UnsupportedFactorization { m, n });
        }
    }
    // copies of Z_p per prime, in m's prime order
    let mut s_factors: Vec<(u64, u32)> = mf.clone();
    let t_exp = |p: u64| nf.iter().find(|(q, _)| *q == p).map(|&(_, k)| k).unwrap_or(0);
    s_factors.sort();
    let build = |factors: &[(u64, u32)]| -> RingTable {
        let mut r: Option<RingTable> = None;
        for &(p, k) in factors {
            for _ in 0..k {
                let zp = cyclic_ring(p as usize);
                r = Some(match r {
                    None => zp,
                    Some(acc) => product_ring(&acc, &zp),
                });
            }
        }
        r.expect("nonempty factorization")
    };
    let s = build(&s_factors);
    let t_factors: Vec<(u64, u32)> = s_factors
        .iter()
        .filter(|(p, _)| t_exp(*p) > 0)
        .map(|&(p, _)| (p, t_exp(p)))
        .collect();
    let t = build(&t_factors);

    // decompose an S-index into its per-copy digits (product built left-fold,
    // so the last factor is the fastest-varying digit)
    let digits = |mut x: usize, factors: &[(u64, u32)]| -> Vec<Vec<usize>> {
        let mut per_prime: Vec<Vec<usize>> = Vec::new();
        let mut flat: Vec<usize> = Vec::new();
        let mut radii: Vec<usize> = Vec::new();
        for &(p, k) in factors {
            for _ in 0..k {
                radii.push(p as usize);
            }
        }
        for &rad in radii.iter().rev() {
            flat.push(x % rad);
            x /= rad;
        }
        flat.reverse();
        let mut i = 0;
        for &(_, k) in factors {
            per_prime.push(flat[i..i + k as usize].to_vec());
            i += k as usize;
        }
        per_prime
    };
    let encode = |per_prime: &[Vec<usize>], factors: &[(u64, u32)]| -> usize {
        let mut acc = 0usize;
        for (block, &(p, _)) in per_prime.iter().zip(factors) {
            for &d in block {
                acc = acc * p as usize + d;
            }
        }
        acc
    };

    let mut map = vec![0usize; s.order()];
    for (x, slot) in map.iter_mut().enumerate() {
        let blocks = digits(x, &s_factors);
        // per shared prime: project the block to its first coordinate, then
        // include diagonally into the target block
        let mut t_blocks: Vec<Vec<usize>> = Vec::new();
        for (block, &(p, _)) in blocks.iter().zip(&s_factors) {
            let k = t_exp(p);
            if k == 0 {
                continue;
            }
            t_blocks.push(vec![block[0]; k as usize]);
        }
        *slot = encode(&t_blocks, &t_factors);
    }
    let hom = UnitalHom::new(&s, &t, map)?;
    Ok((s, t, hom))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{dual_numbers, quadratic_field, zero_ring};

    /// Brute-force oracle: every function source -> target checked against
    /// the hom laws directly. Only feasible for tiny orders.
    fn brute_force_homs(r: &RingTable, s: &RingTable) -> Vec<Vec<usize>> {
        let n = r.order();
        let m = s.order();
        let total = (m as u64).pow(n as u32);
        let mut out = Vec::new();
        for code in 0..total {
            let mut map = Vec::with_capacity(n);
            let mut c = code;
            for _ in 0..n {
                map.push((c % m as u64) as usize);
                c /= m as u64;
            }
            if UnitalHom::new(r, s, map.clone()).is_ok() {
                out.push(map);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn hom_search_matches_brute_force_up_to_order_4() {
        let rings: Vec<RingTable> = vec![
            zero_ring(),
            cyclic_ring(2),
            cyclic_ring(3),
            cyclic_ring(4),
            product_ring(&cyclic_ring(2), &cyclic_ring(2)),
            quadratic_field(2),
            dual_numbers(2),
        ];
        for r in &rings {
            for s in &rings {
                let fast: Vec<Vec<usize>> =
                    enum_homs(r, s).into_iter().map(|h| h.map().to_vec()).collect();
                let slow = brute_force_homs(r, s);
                assert_eq!(fast, slow, "{:?} -> {:?}", r.name(), s.name());
            }
        }
    }

    #[test]
    fn hom_counts_small_rings() {
        let z2 = cyclic_ring(2);
        let z4 = cyclic_ring(4);
        let z6 = cyclic_ring(6);
        let z2z2 = product_ring(&z2, &z2);
        let f4 = quadratic_field(2);
        let m2 = dual_numbers(2);
        assert_eq!(enum_homs(&z6, &z2).len(), 1);
        assert_eq!(enum_homs(&z2, &z4).len(), 0);
        assert_eq!(enum_homs(&f4, &z2).len(), 0);
        assert_eq!(enum_homs(&z2z2, &z2).len(), 2);
        assert_eq!(enum_homs(&z4, &z2z2).len(), 1);
        assert_eq!(enum_homs(&z2z2, &z2z2).len(), 4);
        assert_eq!(enum_homs(&m2, &m2).len(), 2);
        assert_eq!(enum_homs(&z2, &z2z2).len(), 1);
    }

    #[test]
    fn every_ring_has_one_hom_into_zero_ring() {
        for r in [cyclic_ring(5), product_ring(&cyclic_ring(2), &cyclic_ring(3))] {
            assert_eq!(enum_homs(&r, &zero_ring()).len(), 1);
        }
    }

    #[test]
    fn composition_closure() {
        let z12 = cyclic_ring(12);
        let z6 = cyclic_ring(6);
        let z2 = cyclic_ring(2);
        let first = enum_homs(&z12, &z6);
        let second = enum_homs(&z6, &z2);
        let direct = enum_homs(&z12, &z2);
        for h in &first {
            for g in &second {
                assert!(direct.contains(&h.then(g)));
            }
        }
    }

    #[test]
    fn iso_examples() {
        let z4 = cyclic_ring(4);
        let z2z2 = product_ring(&cyclic_ring(2), &cyclic_ring(2));
        let z6 = cyclic_ring(6);
        let z2z3 = product_ring(&cyclic_ring(2), &cyclic_ring(3));
        let f4 = quadratic_field(2);
        let m2 = dual_numbers(2);
        assert!(is_isomorphic(&z4, &z2z2).is_none());
        assert!(is_isomorphic(&z2z3, &z6).is_some());
        assert!(is_isomorphic(&m2, &f4).is_none());
    }

    #[test]
    fn canonical_forms_agree_exactly_for_isomorphic_rings() {
        let z6 = cyclic_ring(6);
        let z2z3 = product_ring(&cyclic_ring(2), &cyclic_ring(3));
        assert_eq!(canonical_form(&z6), canonical_form(&z2z3));
        assert_ne!(canonical_form(&cyclic_ring(4)), canonical_form(&quadratic_field(2)));
    }

    #[test]
    fn witness_hom_examples() {
        // m=4, n=2: S = Z2 x Z2, T = Z2, h = first projection
        let (s, t, h) = construct_witness_hom(4, 2).unwrap();
        assert_eq!(s.order(), 4);
        assert_eq!(t.order(), 2);
        assert!(UnitalHom::new(&s, &t, h.map().to_vec()).is_ok());

        // equal factorizations give a bijection
        let (_, _, h) = construct_witness_hom(6, 6).unwrap();
        assert!(h.is_bijective());

        // m=12, n=2
        let (s, t, h) = construct_witness_hom(12, 2).unwrap();
        assert_eq!(s.order(), 12);
        assert_eq!(t.order(), 2);
        assert!(UnitalHom::new(&s, &t, h.map().to_vec()).is_ok());

        assert!(matches!(
            construct_witness_hom(4, 6),
            Err(HomError::UnsupportedFactorization { .. })
        ));
    }
}
