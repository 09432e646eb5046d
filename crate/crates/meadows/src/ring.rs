//! Finite commutative unital rings as explicit operation tables.
//!
//! Elements are dense indices `0..order`; tables are row-major so every law
//! can be checked exhaustively and canonicalization gets O(1) lookups.

use thiserror::Error;

/// Identifier for the ring law that failed validation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RingAxiom {
    TableShape,
    AddAssociativity,
    AddCommutativity,
    AddIdentity,
    AddInverse,
    MulAssociativity,
    MulCommutativity,
    MulIdentity,
    Distributivity,
    ZeroOneDistinct,
}

impl std::fmt::Display for RingAxiom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            RingAxiom::TableShape => "table shape",
            RingAxiom::AddAssociativity => "additive associativity",
            RingAxiom::AddCommutativity => "additive commutativity",
            RingAxiom::AddIdentity => "additive identity",
            RingAxiom::AddInverse => "additive inverse",
            RingAxiom::MulAssociativity => "multiplicative associativity",
            RingAxiom::MulCommutativity => "multiplicative commutativity",
            RingAxiom::MulIdentity => "multiplicative identity",
            RingAxiom::Distributivity => "distributivity",
            RingAxiom::ZeroOneDistinct => "zero/one distinctness",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum RingError {
    #[error("ring axiom violated: {axiom} (witness {witness:?})")]
    AxiomViolation {
        axiom: RingAxiom,
        witness: Vec<usize>,
    },
}

fn violation(axiom: RingAxiom, witness: &[usize]) -> RingError {
    RingError::AxiomViolation {
        axiom,
        witness: witness.to_vec(),
    }
}

/// A finite commutative unital ring given by its addition and multiplication
/// tables. Immutable once validated; all operations are pure.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingTable {
    order: usize,
    /// Row-major `order x order` addition table.
    add: Vec<usize>,
    /// Row-major `order x order` multiplication table.
    mul: Vec<usize>,
    zero: usize,
    one: usize,
    /// Additive inverse of each element, derived during validation.
    neg: Vec<usize>,
    name: Option<String>,
}

impl RingTable {
    /// Validates the tables exhaustively and builds the ring.
    pub fn new(
        order: usize,
        add: Vec<Vec<usize>>,
        mul: Vec<Vec<usize>>,
        zero: usize,
        one: usize,
        name: Option<String>,
    ) -> Result<Self, RingError> {
        let flat = |t: &[Vec<usize>]| -> Result<Vec<usize>, RingError> {
            if t.len() != order {
                return Err(violation(RingAxiom::TableShape, &[t.len()]));
            }
            let mut out = Vec::with_capacity(order * order);
            for row in t {
                if row.len() != order {
                    return Err(violation(RingAxiom::TableShape, &[row.len()]));
                }
                for &v in row {
                    if v >= order {
                        return Err(violation(RingAxiom::TableShape, &[v]));
                    }
                    out.push(v);
                }
            }
            Ok(out)
        };
        if order == 0 || zero >= order || one >= order {
            return Err(violation(RingAxiom::TableShape, &[order]));
        }
        let add = flat(&add)?;
        let mul = flat(&mul)?;
        Self::from_flat(order, add, mul, zero, one, name)
    }

    pub(crate) fn from_flat(
        order: usize,
        add: Vec<usize>,
        mul: Vec<usize>,
        zero: usize,
        one: usize,
        name: Option<String>,
    ) -> Result<Self, RingError> {
        let n = order;
        let at = |t: &[usize], x: usize, y: usize| t[x * n + y];
        for x in 0..n {
            if at(&add, x, zero) != x {
                return Err(violation(RingAxiom::AddIdentity, &[x]));
            }
            if at(&mul, x, one) != x {
                return Err(violation(RingAxiom::MulIdentity, &[x]));
            }
            for y in 0..n {
                if at(&add, x, y) != at(&add, y, x) {
                    return Err(violation(RingAxiom::AddCommutativity, &[x, y]));
                }
                if at(&mul, x, y) != at(&mul, y, x) {
                    return Err(violation(RingAxiom::MulCommutativity, &[x, y]));
                }
                for z in 0..n {
                    if at(&add, at(&add, x, y), z) != at(&add, x, at(&add, y, z)) {
                        return Err(violation(RingAxiom::AddAssociativity, &[x, y, z]));
                    }
                    if at(&mul, at(&mul, x, y), z) != at(&mul, x, at(&mul, y, z)) {
                        return Err(violation(RingAxiom::MulAssociativity, &[x, y, z]));
                    }
                    if at(&mul, x, at(&add, y, z)) != at(&add, at(&mul, x, y), at(&mul, x, z)) {
                        return Err(violation(RingAxiom::Distributivity, &[x, y, z]));
                    }
                }
            }
        }
        let mut neg = vec![usize::MAX; n];
        for x in 0..n {
            match (0..n).find(|&y| at(&add, x, y) == zero) {
                Some(y) => neg[x] = y,
                None => return Err(violation(RingAxiom::AddInverse, &[x])),
            }
        }
        if n > 1 && zero == one {
            return Err(violation(RingAxiom::ZeroOneDistinct, &[zero]));
        }
        if n == 1 && zero != one {
            return Err(violation(RingAxiom::ZeroOneDistinct, &[zero, one]));
        }
        Ok(RingTable {
            order,
            add,
            mul,
            zero,
            one,
            neg,
            name,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = Some(name.into());
    }

    #[inline]
    pub fn add(&self, x: usize, y: usize) -> usize {
        self.add[x * self.order + y]
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.order + y]
    }

    #[inline]
    pub fn neg(&self, x: usize) -> usize {
        self.neg[x]
    }

    pub fn add_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|x| self.add[x * self.order..(x + 1) * self.order].to_vec())
            .collect()
    }

    pub fn mul_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|x| self.mul[x * self.order..(x + 1) * self.order].to_vec())
            .collect()
    }

    /// True iff `x` has a multiplicative inverse. In the zero ring the single
    /// element is a unit (0 = 1 there), so the bottom fiber's element always
    /// lands in every J-set.
    pub fn is_unit(&self, x: usize) -> bool {
        (0..self.order).any(|y| self.mul(x, y) == self.one)
    }

    pub fn unit_inverse(&self, x: usize) -> Option<usize> {
        (0..self.order).find(|&y| self.mul(x, y) == self.one)
    }

    pub fn is_idempotent(&self, x: usize) -> bool {
        self.mul(x, x) == x
    }

    pub fn is_nilpotent(&self, x: usize) -> bool {
        let mut acc = x;
        for _ in 0..self.order {
            if acc == self.zero {
                return true;
            }
            acc = self.mul(acc, x);
        }
        acc == self.zero
    }

    /// Order of `x` in the additive group.
    pub fn additive_order(&self, x: usize) -> usize {
        let mut acc = x;
        let mut k = 1;
        while acc != self.zero {
            acc = self.add(acc, x);
            k += 1;
        }
        k
    }

    /// Additive order of 1 (equals 1 only in the zero ring).
    pub fn characteristic(&self) -> usize {
        self.additive_order(self.one)
    }

    /// Relabeling-invariant per-element fingerprint used as the prefilter for
    /// canonicalization, isomorphism search and hom search.
    pub fn element_invariant(&self, x: usize) -> ElementInvariant {
        ElementInvariant {
            additive_order: self.additive_order(x),
            unit: self.is_unit(x),
            idempotent: self.is_idempotent(x),
            nilpotent: self.is_nilpotent(x),
        }
    }

    /// Sorted multiset of element invariants; equal for isomorphic rings.
    pub fn invariant_profile(&self) -> Vec<ElementInvariant> {
        let mut v: Vec<_> = (0..self.order).map(|x| self.element_invariant(x)).collect();
        v.sort();
        v
    }

    /// Applies a relabeling permutation (`perm[old] = new`) to the tables.
    pub fn relabel(&self, perm: &[usize]) -> RingTable {
        let n = self.order;
        let mut add = vec![0; n * n];
        let mut mul = vec![0; n * n];
        let mut neg = vec![0; n];
        for x in 0..n {
            neg[perm[x]] = perm[self.neg[x]];
            for y in 0..n {
                add[perm[x] * n + perm[y]] = perm[self.add(x, y)];
                mul[perm[x] * n + perm[y]] = perm[self.mul(x, y)];
            }
        }
        RingTable {
            order: n,
            add,
            mul,
            zero: perm[self.zero],
            one: perm[self.one],
            neg,
            name: self.name.clone(),
        }
    }

    /// A small additive generating set, largest additive orders first.
    pub fn additive_generators(&self) -> Vec<usize> {
        let n = self.order;
        let mut by_order: Vec<usize> = (0..n).collect();
        by_order.sort_by_key(|&x| std::cmp::Reverse(self.additive_order(x)));
        let mut gens = Vec::new();
        let mut span = vec![false; n];
        span[self.zero] = true;
        let mut span_count = 1;
        while span_count < n {
            let g = by_order
                .iter()
                .copied()
                .find(|&x| !span[x])
                .expect("additive group spans");
            gens.push(g);
            // close span under adding multiples of g
            let mut frontier: Vec<usize> = (0..n).filter(|&x| span[x]).collect();
            while let Some(x) = frontier.pop() {
                let y = self.add(x, g);
                if !span[y] {
                    span[y] = true;
                    span_count += 1;
                    frontier.push(y);
                }
            }
        }
        gens
    }

    /// Expresses every element as a combination of the given generators:
    /// `coords[x][i]` = coefficient of `gens[i]`, found by BFS.
    pub fn coordinates(&self, gens: &[usize]) -> Vec<Vec<usize>> {
        let n = self.order;
        let mut coords: Vec<Option<Vec<usize>>> = vec![None; n];
        coords[self.zero] = Some(vec![0; gens.len()]);
        let mut frontier = vec![self.zero];
        while let Some(x) = frontier.pop() {
            let cx = coords[x].clone().unwrap();
            for (i, &g) in gens.iter().enumerate() {
                let y = self.add(x, g);
                if coords[y].is_none() {
                    let mut c = cx.clone();
                    c[i] += 1;
                    coords[y] = Some(c);
                    frontier.push(y);
                }
            }
        }
        coords
            .into_iter()
            .map(|c| c.expect("generators span the additive group"))
            .collect()
    }
}

/// Iso-invariant data of a single element. The derive order matters: it fixes
/// the class order used by canonicalization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementInvariant {
    pub additive_order: usize,
    pub unit: bool,
    pub idempotent: bool,
    pub nilpotent: bool,
}

/// The unique ring with one element (0 = 1).
pub fn zero_ring() -> RingTable {
    RingTable::new(1, vec![vec![0]], vec![vec![0]], 0, 0, Some("0".into())).unwrap()
}

/// The cyclic ring Z_n.
pub fn cyclic_ring(n: usize) -> RingTable {
    assert!(n >= 1);
    let add = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    let mul = (0..n).map(|i| (0..n).map(|j| (i * j) % n).collect()).collect();
    RingTable::new(n, add, mul, 0, 1 % n, Some(format!("Z{n}"))).unwrap()
}

/// Direct product with mixed-radix element encoding: index = a * |S| + b.
pub fn product_ring(r: &RingTable, s: &RingTable) -> RingTable {
    let n = r.order() * s.order();
    let enc = |a: usize, b: usize| a * s.order() + b;
    let mut add = vec![vec![0; n]; n];
    let mut mul = vec![vec![0; n]; n];
    for a in 0..r.order() {
        for b in 0..s.order() {
            for c in 0..r.order() {
                for d in 0..s.order() {
                    add[enc(a, b)][enc(c, d)] = enc(r.add(a, c), s.add(b, d));
                    mul[enc(a, b)][enc(c, d)] = enc(r.mul(a, c), s.mul(b, d));
                }
            }
        }
    }
    let name = match (r.name(), s.name()) {
        (Some(a), Some(b)) => Some(format!("{a}x{b}")),
        _ => None,
    };
    RingTable::new(n, add, mul, enc(r.zero(), s.zero()), enc(r.one(), s.one()), name).unwrap()
}

/// Z_p[x]/(x^2): elements a + b x encoded as a*p + b.
pub fn dual_numbers(p: usize) -> RingTable {
    let n = p * p;
    let enc = |a: usize, b: usize| a * p + b;
    let mut add = vec![vec![0; n]; n];
    let mut mul = vec![vec![0; n]; n];
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                for d in 0..p {
                    add[enc(a, b)][enc(c, d)] = enc((a + c) % p, (b + d) % p);
                    mul[enc(a, b)][enc(c, d)] = enc((a * c) % p, (a * d + b * c) % p);
                }
            }
        }
    }
    let name = if p == 2 {
        "M2".to_string()
    } else {
        format!("Z{p}[x]/x2")
    };
    RingTable::new(n, add, mul, 0, enc(1, 0), Some(name)).unwrap()
}

/// The field F_{p^2}, built from a monic irreducible quadratic over Z_p.
pub fn quadratic_field(p: usize) -> RingTable {
    // find x^2 + bx + c with no root mod p
    let (b, c) = (0..p)
        .flat_map(|b| (0..p).map(move |c| (b, c)))
        .find(|&(b, c)| (0..p).all(|x| (x * x + b * x + c) % p != 0))
        .expect("irreducible quadratic exists for every prime");
    let n = p * p;
    let enc = |a: usize, t: usize| a * p + t;
    let mut add = vec![vec![0; n]; n];
    let mut mul = vec![vec![0; n]; n];
    // x^2 = -b x - c
    let xb = (p - b % p) % p;
    let xc = (p - c % p) % p;
    for a0 in 0..p {
        for a1 in 0..p {
            for c0 in 0..p {
                for c1 in 0..p {
                    add[enc(a0, a1)][enc(c0, c1)] = enc((a0 + c0) % p, (a1 + c1) % p);
                    // (a0 + a1 x)(c0 + c1 x) = a0c0 + (a0c1 + a1c0) x + a1c1 x^2
                    let t2 = a1 * c1 % p;
                    let lo = (a0 * c0 + t2 * xc) % p;
                    let hi = (a0 * c1 + a1 * c0 + t2 * xb) % p;
                    mul[enc(a0, a1)][enc(c0, c1)] = enc(lo, hi);
                }
            }
        }
    }
    RingTable::new(n, add, mul, 0, enc(1, 0), Some(format!("F{n}"))).unwrap()
}

pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            let mut k = 0;
            while n % d == 0 {
                n /= d;
                k += 1;
            }
            out.push((d, k));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z2_is_valid() {
        let r = cyclic_ring(2);
        assert_eq!(r.order(), 2);
        assert_eq!(r.add(1, 1), 0);
        assert_eq!(r.mul(1, 1), 1);
    }

    #[test]
    fn zero_ring_zero_equals_one() {
        let r = zero_ring();
        assert_eq!(r.order(), 1);
        assert_eq!(r.zero(), r.one());
        assert!(r.is_unit(0));
    }

    #[test]
    fn corrupted_z4_reports_violation() {
        let z4 = cyclic_ring(4);
        let mut mul = z4.mul_rows();
        mul[2][2] = 1;
        let err = RingTable::new(4, z4.add_rows(), mul, 0, 1, None).unwrap_err();
        let RingError::AxiomViolation { axiom, witness } = err;
        assert!(
            matches!(
                axiom,
                RingAxiom::Distributivity
                    | RingAxiom::MulAssociativity
                    | RingAxiom::MulCommutativity
            ),
            "got {axiom} ({witness:?})"
        );
        assert!(!witness.is_empty());
    }

    #[test]
    fn units_of_z6() {
        let r = cyclic_ring(6);
        assert!(r.is_unit(5));
        assert!(!r.is_unit(2));
        assert_eq!(r.unit_inverse(5), Some(5));
    }

    #[test]
    fn product_orders_and_identities() {
        let r = product_ring(&cyclic_ring(2), &cyclic_ring(3));
        assert_eq!(r.order(), 6);
        assert_eq!(r.characteristic(), 6);
    }

    #[test]
    fn f4_has_no_zero_divisors() {
        let f4 = quadratic_field(2);
        for x in 0..4 {
            for y in 0..4 {
                if x != f4.zero() && y != f4.zero() {
                    assert_ne!(f4.mul(x, y), f4.zero());
                }
            }
        }
        assert_eq!(f4.characteristic(), 2);
    }

    #[test]
    fn dual_numbers_nilpotents() {
        let m2 = dual_numbers(2);
        // the non-trivial nilpotent is x (index 1)
        assert!(m2.is_nilpotent(1));
        assert!(!m2.is_unit(1));
        assert_eq!(m2.characteristic(), 2);
    }

    #[test]
    fn generators_span() {
        for r in [cyclic_ring(8), product_ring(&cyclic_ring(2), &cyclic_ring(2))] {
            let gens = r.additive_generators();
            let coords = r.coordinates(&gens);
            assert_eq!(coords.len(), r.order());
        }
        assert_eq!(cyclic_ring(7).additive_generators().len(), 1);
    }
}
