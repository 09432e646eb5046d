//! Complete isomorphism-class lists of finite commutative unital rings.
//!
//! Small orders are searched exhaustively: for each abelian group of the
//! given order the multiplication is pinned down by structure constants on a
//! generating set (distributivity does the rest), searched with symmetry
//! pruning modulo the group's automorphisms. Composite orders outside the
//! brute-force cap decompose into prime-power factors (CRT), whose catalogs
//! come from the brute force or, at p^2, from the constructive seed list.

use crate::hom::{canonical_form, is_isomorphic};
use crate::ring::{
    cyclic_ring, dual_numbers, factorize, product_ring, quadratic_field, zero_ring, RingTable,
};
use rayon::prelude::*;
use std::collections::BTreeMap;
use thiserror::Error;

/// Default largest order the exhaustive search will attempt.
pub const DEFAULT_BRUTE_FORCE_CAP: usize = 8;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum EnumError {
    #[error("order {order} exceeds the cap {cap} for this enumerator")]
    CapExceeded { order: usize, cap: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    BruteForce,
    Structured,
    Loaded,
}

/// One RingTable per isomorphism class of the given order, sorted by
/// canonical form.
#[derive(Debug, Clone)]
pub struct RingCatalog {
    pub order: usize,
    pub classes: Vec<RingTable>,
    pub provenance: Provenance,
}

impl RingCatalog {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

/// Abelian groups of order n, each as a list of cyclic factor sizes.
fn abelian_groups(n: usize) -> Vec<Vec<usize>> {
    fn exponent_partitions(k: u32) -> Vec<Vec<u32>> {
        fn rec(rest: u32, max: u32) -> Vec<Vec<u32>> {
            if rest == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for first in (1..=rest.min(max)).rev() {
                for tail in rec(rest - first, first) {
                    let mut v = vec![first];
                    v.extend(tail);
                    out.push(v);
                }
            }
            out
        }
        rec(k, k)
    }
    let mut groups = vec![vec![]];
    for (p, k) in factorize(n as u64) {
        let mut next = Vec::new();
        for lambda in exponent_partitions(k) {
            for g in &groups {
                let mut g2 = g.clone();
                for &e in &lambda {
                    g2.push((p as usize).pow(e));
                }
                next.push(g2);
            }
        }
        groups = next;
    }
    groups
}

/// Mixed-radix element arithmetic for a direct sum of cyclic groups.
struct Group {
    radii: Vec<usize>,
    order: usize,
    add: Vec<usize>,
    elem_order: Vec<usize>,
    digits: Vec<Vec<usize>>,
}

impl Group {
    fn new(radii: Vec<usize>) -> Self {
        let order: usize = radii.iter().product();
        let digits: Vec<Vec<usize>> = (0..order)
            .map(|mut x| {
                let mut d = vec![0; radii.len()];
                for (i, &r) in radii.iter().enumerate().rev() {
                    d[i] = x % r;
                    x /= r;
                }
                d
            })
            .collect();
        let encode = |d: &[usize]| -> usize {
            let mut acc = 0;
            for (i, &r) in radii.iter().enumerate() {
                acc = acc * r + d[i] % r;
            }
            acc
        };
        let mut add = vec![0; order * order];
        for x in 0..order {
            for y in 0..order {
                let d: Vec<usize> = digits[x]
                    .iter()
                    .zip(&digits[y])
                    .zip(&radii)
                    .map(|((&a, &b), &r)| (a + b) % r)
                    .collect();
                add[x * order + y] = encode(&d);
            }
        }
        let mut elem_order = vec![0; order];
        for x in 0..order {
            let mut acc = x;
            let mut k = 1;
            while acc != 0 {
                acc = add[acc * order + x];
                k += 1;
            }
            elem_order[x] = k;
        }
        Group {
            radii,
            order,
            add,
            elem_order,
            digits,
        }
    }

    #[inline]
    fn add(&self, x: usize, y: usize) -> usize {
        self.add[x * self.order + y]
    }

    /// Generator index for slot i (the unit vector in that coordinate).
    fn generator(&self, i: usize) -> usize {
        let mut d = vec![0; self.radii.len()];
        d[i] = 1;
        let mut acc = 0;
        for (j, &r) in self.radii.iter().enumerate() {
            acc = acc * r + d[j];
        }
        acc
    }

    /// All additive automorphisms, as permutations of element indices.
    fn automorphisms(&self) -> Vec<Vec<usize>> {
        let r = self.radii.len();
        let gens: Vec<usize> = (0..r).map(|i| self.generator(i)).collect();
        let mut out = Vec::new();
        let mut images = vec![0usize; r];
        self.auto_search(&gens, &mut images, 0, &mut out);
        out
    }

    fn auto_search(&self, gens: &[usize], images: &mut Vec<usize>, depth: usize, out: &mut Vec<Vec<usize>>) {
        if depth == gens.len() {
            // build the induced endomorphism, keep it if bijective
            let mut map = vec![usize::MAX; self.order];
            map[0] = 0;
            let mut frontier = vec![0usize];
            while let Some(x) = frontier.pop() {
                for (i, &g) in gens.iter().enumerate() {
                    let y = self.add(x, g);
                    if map[y] == usize::MAX {
                        map[y] = self.add(map[x], images[i]);
                        frontier.push(y);
                    }
                }
            }
            let mut seen = vec![false; self.order];
            if map.iter().all(|&v| !std::mem::replace(&mut seen[v], true)) {
                // verify additivity (generator images with matching orders can
                // still fail to extend to an automorphism of the full group)
                for x in 0..self.order {
                    for (i, &g) in gens.iter().enumerate() {
                        if map[self.add(x, g)] != self.add(map[x], images[i]) {
                            return;
                        }
                    }
                }
                out.push(map);
            }
            return;
        }
        for im in 0..self.order {
            if self.elem_order[im] != self.elem_order[gens[depth]] {
                continue;
            }
            images[depth] = im;
            self.auto_search(gens, images, depth + 1, out);
        }
    }
}

/// Exhaustive search for all commutative unital multiplications on each
/// abelian group of the given order, modulo additive automorphisms, followed
/// by canonical-form rejection.
pub fn brute_force_rings(order: usize, cap: usize) -> Result<RingCatalog, EnumError> {
    if order > cap {
        return Err(EnumError::CapExceeded { order, cap });
    }
    if order == 1 {
        return Ok(RingCatalog {
            order,
            classes: vec![zero_ring()],
            provenance: Provenance::BruteForce,
        });
    }
    let mut classes: Vec<RingTable> = abelian_groups(order)
        .into_par_iter()
        .flat_map(|radii| rings_on_group(Group::new(radii)))
        .collect();
    name_known_classes(order, &mut classes);
    let mut keyed: Vec<(Vec<u8>, RingTable)> = classes
        .into_iter()
        .map(|r| (canonical_form(&r), r))
        .collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.dedup_by(|a, b| a.0 == b.0);
    Ok(RingCatalog {
        order,
        classes: keyed.into_iter().map(|(_, r)| r).collect(),
        provenance: Provenance::BruteForce,
    })
}

fn rings_on_group(g: Group) -> Vec<RingTable> {
    let n = g.order;
    let r = g.radii.len();
    let gens: Vec<usize> = (0..r).map(|i| g.generator(i)).collect();
    // slots (i, j) with i <= j; product must be killed by gcd(d_i, d_j)
    let mut slots = Vec::new();
    for i in 0..r {
        for j in i..r {
            let gcd = {
                let (mut a, mut b) = (g.radii[i], g.radii[j]);
                while b != 0 {
                    let t = a % b;
                    a = b;
                    b = t;
                }
                a
            };
            let candidates: Vec<usize> = (0..n)
                .filter(|&x| {
                    let mut acc = 0;
                    for _ in 0..gcd {
                        acc = g.add(acc, x);
                    }
                    acc == 0
                })
                .collect();
            slots.push(((i, j), candidates));
        }
    }
    let autos = g.automorphisms();
    let mut found: BTreeMap<Vec<usize>, RingTable> = BTreeMap::new();
    let mut choice = vec![0usize; slots.len()];
    search_multiplications(&g, &gens, &slots, &autos, &mut choice, 0, &mut found);
    found.into_values().collect()
}

#[allow(clippy::too_many_arguments)]
fn search_multiplications(
    g: &Group,
    gens: &[usize],
    slots: &[((usize, usize), Vec<usize>)],
    autos: &[Vec<usize>],
    choice: &mut Vec<usize>,
    depth: usize,
    found: &mut BTreeMap<Vec<usize>, RingTable>,
) {
    if depth < slots.len() {
        for idx in 0..slots[depth].1.len() {
            choice[depth] = idx;
            search_multiplications(g, gens, slots, autos, choice, depth + 1, found);
        }
        return;
    }
    let n = g.order;
    let r = gens.len();
    // structure constants
    let mut sc = vec![0usize; r * r];
    for (si, ((i, j), cands)) in slots.iter().enumerate() {
        sc[i * r + j] = cands[choice[si]];
        sc[j * r + i] = cands[choice[si]];
    }
    // bilinear extension: mul(x, y) = sum_{i,j} x_i y_j (e_i e_j)
    let mut mul = vec![0usize; n * n];
    for x in 0..n {
        for y in 0..=x {
            let mut acc = 0usize;
            for i in 0..r {
                let xi = g.digits[x][i];
                if xi == 0 {
                    continue;
                }
                for j in 0..r {
                    let yj = g.digits[y][j];
                    if yj == 0 {
                        continue;
                    }
                    let base = sc[i * r + j];
                    for _ in 0..xi * yj {
                        acc = g.add(acc, base);
                    }
                }
            }
            mul[x * n + y] = acc;
            mul[y * n + x] = acc;
        }
    }
    // associativity on generator triples suffices under bilinearity
    for &a in gens {
        for &b in gens {
            let ab = mul[a * n + b];
            for &c in gens {
                if mul[ab * n + c] != mul[a * n + mul[b * n + c]] {
                    return;
                }
            }
        }
    }
    // a multiplicative identity must exist
    let Some(_one) = (0..n).find(|&u| gens.iter().all(|&e| mul[u * n + e] == e)) else {
        return;
    };
    // canonical representative modulo additive automorphisms
    let mut best: Option<Vec<usize>> = None;
    for auto in autos {
        let mut key = vec![0usize; n * n];
        let mut inv = vec![0usize; n];
        for x in 0..n {
            inv[auto[x]] = x;
        }
        for x in 0..n {
            for y in 0..n {
                key[x * n + y] = auto[mul[inv[x] * n + inv[y]]];
            }
        }
        if best.is_none() || key < *best.as_ref().unwrap() {
            best = Some(key);
        }
    }
    let key = best.unwrap();
    if found.contains_key(&key) {
        return;
    }
    let one = (0..n).find(|&u| (0..n).all(|x| key[u * n + x] == x)).unwrap();
    let add_rows: Vec<Vec<usize>> = (0..n)
        .map(|x| (0..n).map(|y| g.add(x, y)).collect())
        .collect();
    let mul_rows: Vec<Vec<usize>> = (0..n)
        .map(|x| (0..n).map(|y| key[x * n + y]).collect())
        .collect();
    let ring = RingTable::new(n, add_rows, mul_rows, 0, one, None)
        .expect("searched multiplication satisfies the ring laws");
    found.insert(key, ring);
}

/// Catalog of rings whose order is the prime power p^k.
fn prime_power_catalog(p: usize, k: u32, cap: usize) -> Result<Vec<RingTable>, EnumError> {
    let order = p.pow(k);
    if k == 1 {
        return Ok(vec![cyclic_ring(p)]);
    }
    if order <= cap {
        return Ok(brute_force_rings(order, cap)?.classes);
    }
    if k == 2 {
        // the four rings of order p^2
        return Ok(vec![
            cyclic_ring(p * p),
            dual_numbers(p),
            product_ring(&cyclic_ring(p), &cyclic_ring(p)),
            quadratic_field(p),
        ]);
    }
    Err(EnumError::CapExceeded { order, cap })
}

/// The full class list for any order within desk scale: brute force below the
/// cap, otherwise the product of prime-power catalogs with canonical dedup.
pub fn enumerate_rings(order: usize, cap: usize) -> Result<RingCatalog, EnumError> {
    if order == 0 {
        return Err(EnumError::CapExceeded { order, cap });
    }
    if order <= cap {
        let mut cat = brute_force_rings(order, cap)?;
        cat.provenance = Provenance::BruteForce;
        return Ok(cat);
    }
    let mut combos: Vec<RingTable> = vec![];
    for (p, k) in factorize(order as u64) {
        let part = prime_power_catalog(p as usize, k, cap)?;
        combos = if combos.is_empty() {
            part
        } else {
            combos
                .iter()
                .flat_map(|a| part.iter().map(move |b| product_ring(a, b)))
                .collect()
        };
    }
    let mut classes = combos;
    name_known_classes(order, &mut classes);
    let mut keyed: Vec<(Vec<u8>, RingTable)> =
        classes.into_iter().map(|r| (canonical_form(&r), r)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.dedup_by(|a, b| a.0 == b.0);
    Ok(RingCatalog {
        order,
        classes: keyed.into_iter().map(|(_, r)| r).collect(),
        provenance: Provenance::Structured,
    })
}

/// Attaches display names by matching against a library of familiar
/// constructions (Z_n, products, F_q, truncated polynomial rings).
fn name_known_classes(order: usize, classes: &mut [RingTable]) {
    let library = named_library(order);
    for class in classes.iter_mut() {
        if class.name().is_some() {
            continue;
        }
        if let Some(named) = library.iter().find(|r| is_isomorphic(class, r).is_some()) {
            class.set_name(named.name().unwrap_or_default());
        } else {
            class.set_name(format!("R{order}"));
        }
    }
    // disambiguate any leftover duplicates of the fallback name
    let mut seen: BTreeMap<String, usize> = BTreeMap::new();
    for class in classes.iter_mut() {
        let name = class.name().unwrap_or_default().to_string();
        let count = seen.entry(name.clone()).or_insert(0);
        if *count > 0 {
            class.set_name(format!("{name}#{count}"));
        }
        *count += 1;
    }
}

/// Familiar small rings of the given order, used purely for display labels.
fn named_library(order: usize) -> Vec<RingTable> {
    let mut lib: Vec<RingTable> = Vec::new();
    if order == 1 {
        return vec![zero_ring()];
    }
    lib.push(cyclic_ring(order));
    match order {
        4 => {
            lib.push(dual_numbers(2));
            lib.push(product_ring(&cyclic_ring(2), &cyclic_ring(2)));
            lib.push(quadratic_field(2));
        }
        8 => {
            let z2 = cyclic_ring(2);
            for r4 in [
                cyclic_ring(4),
                dual_numbers(2),
                product_ring(&z2, &z2),
                quadratic_field(2),
            ] {
                lib.push(product_ring(&z2, &r4));
            }
            lib.push(cubic_extension(CubicKind::TruncatedPoly));
            lib.push(cubic_extension(CubicKind::Field));
            lib.push(cubic_extension(CubicKind::TwoVariables));
            lib.push(cubic_extension(CubicKind::Z4Adjoin { x_squared: 0 }));
            lib.push(cubic_extension(CubicKind::Z4Adjoin { x_squared: 2 }));
        }
        9 => {
            lib.push(dual_numbers(3));
            lib.push(product_ring(&cyclic_ring(3), &cyclic_ring(3)));
            lib.push(quadratic_field(3));
        }
        12 => {
            let z3 = cyclic_ring(3);
            for r4 in [
                cyclic_ring(4),
                dual_numbers(2),
                product_ring(&cyclic_ring(2), &cyclic_ring(2)),
                quadratic_field(2),
            ] {
                lib.push(product_ring(&r4, &z3));
            }
        }
        _ => {
            // squarefree composite orders are cyclic; other orders keep the
            // fallback label
        }
    }
    lib
}

enum CubicKind {
    /// Z_2[x]/(x^3)
    TruncatedPoly,
    /// F_8
    Field,
    /// Z_2[x,y]/(x^2, xy, y^2)
    TwoVariables,
    /// Z_4[x]/(2x, x^2 - c)
    Z4Adjoin { x_squared: usize },
}

fn cubic_extension(kind: CubicKind) -> RingTable {
    match kind {
        CubicKind::Field => {
            // F_8 = Z_2[x]/(x^3 + x + 1)
            let n = 8;
            let dec = |i: usize| [i >> 2 & 1, i >> 1 & 1, i & 1]; // [x^2, x, 1]
            let enc = |d: [usize; 3]| (d[0] << 2) | (d[1] << 1) | d[2];
            let mut add = vec![vec![0; n]; n];
            let mut mul = vec![vec![0; n]; n];
            for i in 0..n {
                let a = dec(i);
                for j in 0..n {
                    let b = dec(j);
                    add[i][j] = enc([a[0] ^ b[0], a[1] ^ b[1], a[2] ^ b[2]]);
                    // polynomial product then reduce by x^3 = x + 1
                    let mut c = [0usize; 5]; // degrees 4..0
                    for (da, &ca) in a.iter().enumerate() {
                        for (db, &cb) in b.iter().enumerate() {
                            c[da + db] ^= ca & cb;
                        }
                    }
                    // c indices: 0 => x^4, 1 => x^3, 2 => x^2, 3 => x, 4 => 1
                    // reduce x^4 = x^2 + x, x^3 = x + 1
                    let mut d = [c[2], c[3], c[4]];
                    if c[1] == 1 {
                        d[1] ^= 1;
                        d[2] ^= 1;
                    }
                    if c[0] == 1 {
                        d[0] ^= 1;
                        d[1] ^= 1;
                    }
                    mul[i][j] = enc(d);
                }
            }
            RingTable::new(n, add, mul, 0, 1, Some("F8".into())).unwrap()
        }
        CubicKind::TruncatedPoly => {
            let n = 8;
            let dec = |i: usize| [i >> 2 & 1, i >> 1 & 1, i & 1]; // [1, x, x^2]
            let enc = |d: [usize; 3]| (d[0] << 2) | (d[1] << 1) | d[2];
            let mut add = vec![vec![0; n]; n];
            let mut mul = vec![vec![0; n]; n];
            for i in 0..n {
                let a = dec(i);
                for j in 0..n {
                    let b = dec(j);
                    add[i][j] = enc([a[0] ^ b[0], a[1] ^ b[1], a[2] ^ b[2]]);
                    mul[i][j] = enc([
                        a[0] & b[0],
                        (a[0] & b[1]) ^ (a[1] & b[0]),
                        (a[0] & b[2]) ^ (a[1] & b[1]) ^ (a[2] & b[0]),
                    ]);
                }
            }
            RingTable::new(n, add, mul, 0, enc([1, 0, 0]), Some("Z2[x]/x3".into())).unwrap()
        }
        CubicKind::TwoVariables => {
            let n = 8;
            let dec = |i: usize| [i >> 2 & 1, i >> 1 & 1, i & 1]; // [1, x, y]
            let enc = |d: [usize; 3]| (d[0] << 2) | (d[1] << 1) | d[2];
            let mut add = vec![vec![0; n]; n];
            let mut mul = vec![vec![0; n]; n];
            for i in 0..n {
                let a = dec(i);
                for j in 0..n {
                    let b = dec(j);
                    add[i][j] = enc([a[0] ^ b[0], a[1] ^ b[1], a[2] ^ b[2]]);
                    mul[i][j] = enc([
                        a[0] & b[0],
                        (a[0] & b[1]) ^ (a[1] & b[0]),
                        (a[0] & b[2]) ^ (a[2] & b[0]),
                    ]);
                }
            }
            RingTable::new(n, add, mul, 0, enc([1, 0, 0]), Some("Z2[x,y]/(x,y)2".into())).unwrap()
        }
        CubicKind::Z4Adjoin { x_squared } => {
            // elements a + bx with a in Z_4, b in Z_2; 2x = 0, x^2 = c in Z_4
            let n = 8;
            let dec = |i: usize| (i >> 1, i & 1);
            let enc = |a: usize, b: usize| ((a % 4) << 1) | (b % 2);
            let mut add = vec![vec![0; n]; n];
            let mut mul = vec![vec![0; n]; n];
            for i in 0..n {
                let (a, b) = dec(i);
                for j in 0..n {
                    let (c, d) = dec(j);
                    add[i][j] = enc((a + c) % 4, (b + d) % 2);
                    mul[i][j] = enc((a * c + b * d * x_squared) % 4, (a * d + b * c) % 2);
                }
            }
            let name = if x_squared == 0 {
                "Z4[x]/(2x,x2)"
            } else {
                "Z4[x]/(2x,x2-2)"
            };
            RingTable::new(n, add, mul, 0, enc(1, 0), Some(name.into())).unwrap()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_small_orders() {
        let expected = [(1, 1), (2, 1), (3, 1), (4, 4), (5, 1), (6, 1), (7, 1), (8, 10)];
        for (order, count) in expected {
            let cat = brute_force_rings(order, DEFAULT_BRUTE_FORCE_CAP).unwrap();
            assert_eq!(cat.len(), count, "order {order}");
        }
    }

    #[test]
    fn cap_is_enforced_and_configurable() {
        assert!(matches!(
            brute_force_rings(9, DEFAULT_BRUTE_FORCE_CAP),
            Err(EnumError::CapExceeded { .. })
        ));
        // raised cap validates the p^2 seed list against the exhaustive search
        let brute = brute_force_rings(9, 9).unwrap();
        let seeds = prime_power_catalog(3, 2, DEFAULT_BRUTE_FORCE_CAP).unwrap();
        assert_eq!(brute.len(), 4);
        assert_eq!(seeds.len(), 4);
        let mut brute_keys: Vec<_> = brute.classes.iter().map(canonical_form).collect();
        let mut seed_keys: Vec<_> = seeds.iter().map(canonical_form).collect();
        brute_keys.sort();
        seed_keys.sort();
        assert_eq!(brute_keys, seed_keys);
    }

    #[test]
    fn structured_matches_brute_force_below_cap() {
        for order in 1..=8 {
            let brute = brute_force_rings(order, 8).unwrap();
            // force the structured path by setting the cap under the order
            if order > 1 {
                let structured = enumerate_rings(order, order - 1);
                match structured {
                    Ok(cat) => {
                        let mut a: Vec<_> = brute.classes.iter().map(canonical_form).collect();
                        let mut b: Vec<_> = cat.classes.iter().map(canonical_form).collect();
                        a.sort();
                        b.sort();
                        assert_eq!(a, b, "order {order}");
                    }
                    Err(EnumError::CapExceeded { .. }) => {
                        // prime powers beyond the cap legitimately refuse,
                        // except p and p^2 which have constructive lists
                        let f = factorize(order as u64);
                        assert!(f.iter().any(|&(_, k)| k > 2), "order {order}");
                    }
                }
            }
        }
    }

    #[test]
    fn composite_orders() {
        assert_eq!(enumerate_rings(6, 8).unwrap().len(), 1);
        assert_eq!(enumerate_rings(9, 8).unwrap().len(), 4);
        assert_eq!(enumerate_rings(12, 8).unwrap().len(), 4);
        assert_eq!(enumerate_rings(30, 8).unwrap().len(), 1);
    }

    #[test]
    fn crt_multiplicativity_on_catalog_orders() {
        let count = |n: usize| enumerate_rings(n, 8).unwrap().len();
        for (m, n) in [(2, 3), (4, 3), (2, 5), (8, 3), (9, 4)] {
            assert_eq!(count(m * n), count(m) * count(n), "{m}x{n}");
        }
    }

    #[test]
    fn catalog_entries_validate_and_are_distinct() {
        for order in [4, 8, 9, 12] {
            let cat = enumerate_rings(order, 8).unwrap();
            let keys: Vec<_> = cat.classes.iter().map(canonical_form).collect();
            for (i, a) in keys.iter().enumerate() {
                for b in &keys[i + 1..] {
                    assert_ne!(a, b);
                }
            }
            for r in &cat.classes {
                // round-trip through the validating constructor
                RingTable::new(r.order(), r.add_rows(), r.mul_rows(), r.zero(), r.one(), None)
                    .unwrap();
            }
        }
    }

    #[test]
    fn known_names_attach() {
        let cat = brute_force_rings(4, 8).unwrap();
        let names: Vec<_> = cat.classes.iter().filter_map(|r| r.name()).collect();
        assert!(names.contains(&"Z4"));
        assert!(names.contains(&"F4"));
        assert!(names.contains(&"M2"));
    }
}
