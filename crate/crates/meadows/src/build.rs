//! Assembly of directed lattices of rings and their flattened meadow tables,
//! plus the full enumeration pipeline behind `enumerate --order N`.

use crate::hom::{enum_homs, UnitalHom};
use crate::lattice::Lattice;
use crate::lattice_enum::{enumerate_lattices, LatticeEnumError};
use crate::partitions::{admissible_partitions, AdmissiblePartition, PartitionError};
use crate::ring::{cyclic_ring, zero_ring, RingTable};
use crate::ring_enum::{enumerate_rings, EnumError, RingCatalog};
use rayon::prelude::*;
use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum BuildError {
    #[error("vertex {0} carries a ring of order {1}, but the bottom must be the zero ring and the rest non-trivial")]
    BadRingPlacement(usize, usize),
    #[error("edge ({0}, {1}) is not a Hasse cover of the lattice")]
    NotACover(usize, usize),
    #[error("missing homomorphism for cover ({0}, {1})")]
    MissingHom(usize, usize),
    #[error("homomorphism on cover ({0}, {1}) fails validation")]
    BadHom(usize, usize),
    #[error("path compositions from vertex {upper} to vertex {lower} disagree")]
    PathMismatch { upper: usize, lower: usize },
    #[error("ring orders {0:?} do not match the partition parts {1:?}")]
    OrderMismatch(Vec<u64>, Vec<u64>),
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum PipelineError {
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Lattice(#[from] LatticeEnumError),
    #[error(transparent)]
    Rings(#[from] EnumError),
    #[error("order {0} out of range for this construction")]
    DomainError(u64),
}

/// A lattice with a ring on every vertex (zero ring at the bottom) and a
/// unital homomorphism on every Hasse cover, composition-consistent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectedLattice {
    lattice: Lattice,
    rings: Vec<RingTable>,
    covers: Vec<(usize, usize)>,
    edge_homs: Vec<UnitalHom>,
}

/// Composite transition maps for every comparable pair, keyed by
/// (upper, lower); the diagonal holds identities.
pub type Composites = BTreeMap<(usize, usize), Vec<usize>>;

impl DirectedLattice {
    /// Validates ring placement, hom validity per cover and path
    /// independence.
    pub fn new(
        lattice: Lattice,
        rings: Vec<RingTable>,
        edge_homs: Vec<UnitalHom>,
    ) -> Result<Self, BuildError> {
        let covers = lattice.hasse_covers();
        if rings.len() != lattice.size() {
            return Err(BuildError::BadRingPlacement(rings.len(), 0));
        }
        for (v, r) in rings.iter().enumerate() {
            let want_trivial = v == lattice.bottom();
            if want_trivial != (r.order() == 1) {
                return Err(BuildError::BadRingPlacement(v, r.order()));
            }
        }
        if edge_homs.len() != covers.len() {
            return Err(BuildError::MissingHom(covers.len(), edge_homs.len()));
        }
        for (&(hi, lo), h) in covers.iter().zip(&edge_homs) {
            if UnitalHom::new(&rings[hi], &rings[lo], h.map().to_vec()).is_err() {
                return Err(BuildError::BadHom(hi, lo));
            }
        }
        let dl = DirectedLattice {
            lattice,
            rings,
            covers,
            edge_homs,
        };
        dl.composites().map(|_| dl)
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn rings(&self) -> &[RingTable] {
        &self.rings
    }

    pub fn ring(&self, v: usize) -> &RingTable {
        &self.rings[v]
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn edge_homs(&self) -> &[UnitalHom] {
        &self.edge_homs
    }

    pub fn hom_for_cover(&self, hi: usize, lo: usize) -> Option<&UnitalHom> {
        self.covers
            .iter()
            .position(|&c| c == (hi, lo))
            .map(|i| &self.edge_homs[i])
    }

    /// Total number of meadow elements (sum of fiber sizes).
    pub fn flat_size(&self) -> usize {
        self.rings.iter().map(|r| r.order()).sum()
    }

    /// Global index of local element `x` in the fiber of vertex `v`, in the
    /// layout `build_meadow` uses.
    pub fn flat_index(&self, v: usize, x: usize) -> usize {
        self.rings[..v].iter().map(|r| r.order()).sum::<usize>() + x
    }

    /// Inverse of `flat_index`.
    pub fn unflatten(&self, mut idx: usize) -> (usize, usize) {
        for (v, r) in self.rings.iter().enumerate() {
            if idx < r.order() {
                return (v, idx);
            }
            idx -= r.order();
        }
        panic!("index out of range");
    }

    /// Transition maps for all comparable pairs; fails iff two downward paths
    /// compose differently (Check_Composition).
    pub fn composites(&self) -> Result<Composites, BuildError> {
        let n = self.lattice.size();
        let mut comp: Composites = BTreeMap::new();
        for v in 0..n {
            comp.insert((v, v), (0..self.rings[v].order()).collect());
        }
        let mut pairs: Vec<(usize, usize, usize)> = Vec::new();
        for hi in 0..n {
            for lo in 0..n {
                if hi != lo && self.lattice.leq(lo, hi) {
                    let interval = (0..n)
                        .filter(|&m| self.lattice.leq(lo, m) && self.lattice.leq(m, hi))
                        .count();
                    pairs.push((interval, hi, lo));
                }
            }
        }
        pairs.sort();
        for (_, hi, lo) in pairs {
            let mut agreed: Option<Vec<usize>> = None;
            for (ci, &(chi, clo)) in self.covers.iter().enumerate() {
                if chi != hi || !self.lattice.leq(lo, clo) {
                    continue;
                }
                let step = &self.edge_homs[ci];
                let rest = &comp[&(clo, lo)];
                let candidate: Vec<usize> =
                    (0..self.rings[hi].order()).map(|x| rest[step.apply(x)]).collect();
                match &agreed {
                    None => agreed = Some(candidate),
                    Some(prev) if *prev != candidate => {
                        return Err(BuildError::PathMismatch { upper: hi, lower: lo })
                    }
                    _ => {}
                }
            }
            comp.insert((hi, lo), agreed.expect("covers connect comparable pairs"));
        }
        Ok(comp)
    }
}

/// True iff all maximal-path compositions between every comparable pair
/// agree.
pub fn check_composition(dl: &DirectedLattice) -> bool {
    dl.composites().is_ok()
}

/// Flattened operation tables of a pre-meadow candidate. Fiber structure is
/// derived on demand so that raw (even adversarial) tables can be verified.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MeadowTable {
    size: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
    neg: Vec<usize>,
}

impl MeadowTable {
    pub fn from_tables(
        size: usize,
        add: Vec<Vec<usize>>,
        mul: Vec<Vec<usize>>,
        neg: Vec<usize>,
    ) -> Option<Self> {
        let flat = |t: Vec<Vec<usize>>| -> Option<Vec<usize>> {
            if t.len() != size {
                return None;
            }
            let mut out = Vec::with_capacity(size * size);
            for row in t {
                if row.len() != size || row.iter().any(|&v| v >= size) {
                    return None;
                }
                out.extend(row);
            }
            Some(out)
        };
        if neg.len() != size || neg.iter().any(|&v| v >= size) {
            return None;
        }
        Some(MeadowTable {
            size,
            add: flat(add)?,
            mul: flat(mul)?,
            neg,
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn add(&self, x: usize, y: usize) -> usize {
        self.add[x * self.size + y]
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.size + y]
    }

    #[inline]
    pub fn neg(&self, x: usize) -> usize {
        self.neg[x]
    }

    pub fn add_rows(&self) -> Vec<Vec<usize>> {
        (0..self.size)
            .map(|x| self.add[x * self.size..(x + 1) * self.size].to_vec())
            .collect()
    }

    pub fn mul_rows(&self) -> Vec<Vec<usize>> {
        (0..self.size)
            .map(|x| self.mul[x * self.size..(x + 1) * self.size].to_vec())
            .collect()
    }

    pub fn neg_table(&self) -> &[usize] {
        &self.neg
    }

    /// The additive identity, if exactly one element satisfies x + e = x for
    /// all x.
    pub fn zero(&self) -> Option<usize> {
        let mut found = None;
        for e in 0..self.size {
            if (0..self.size).all(|x| self.add(x, e) == x) {
                if found.is_some() {
                    return None;
                }
                found = Some(e);
            }
        }
        found
    }

    pub fn one(&self) -> Option<usize> {
        let mut found = None;
        for u in 0..self.size {
            if (0..self.size).all(|x| self.mul(x, u) == x) {
                if found.is_some() {
                    return None;
                }
                found = Some(u);
            }
        }
        found
    }

    /// The element absorbing for addition (x + a = a for all x), if unique.
    pub fn absorbing(&self) -> Option<usize> {
        let mut found = None;
        for a in 0..self.size {
            if (0..self.size).all(|x| self.add(x, a) == a) {
                if found.is_some() {
                    return None;
                }
                found = Some(a);
            }
        }
        found
    }

    /// The map x -> 0*x (fiber representative per element). Needs a zero.
    pub fn fiber_map(&self) -> Option<Vec<usize>> {
        let zero = self.zero()?;
        Some((0..self.size).map(|x| self.mul(zero, x)).collect())
    }

    /// Fibers grouped by representative, each sorted; representatives sorted.
    pub fn fibers(&self) -> Option<Vec<(usize, Vec<usize>)>> {
        let fm = self.fiber_map()?;
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (x, &z) in fm.iter().enumerate() {
            groups.entry(z).or_default().push(x);
        }
        Some(groups.into_iter().collect())
    }
}

/// Flattens a directed lattice: the element set is the disjoint union of the
/// fibers; operations route through the meet vertex via the composite
/// transition maps.
pub fn build_meadow(dl: &DirectedLattice) -> Result<MeadowTable, BuildError> {
    let comp = dl.composites()?;
    let size = dl.flat_size();
    let nv = dl.lattice().size();
    let mut add = vec![0usize; size * size];
    let mut mul = vec![0usize; size * size];
    let mut neg = vec![0usize; size];
    for v in 0..nv {
        let rv = dl.ring(v);
        for x in 0..rv.order() {
            let gx = dl.flat_index(v, x);
            neg[gx] = dl.flat_index(v, rv.neg(x));
            for w in 0..nv {
                let rw = dl.ring(w);
                let k = dl.lattice().meet(v, w);
                let rk = dl.ring(k);
                let fv = &comp[&(v, k)];
                let fw = &comp[&(w, k)];
                for y in 0..rw.order() {
                    let gy = dl.flat_index(w, y);
                    add[gx * size + gy] = dl.flat_index(k, rk.add(fv[x], fw[y]));
                    mul[gx * size + gy] = dl.flat_index(k, rk.mul(fv[x], fw[y]));
                }
            }
        }
    }
    Ok(MeadowTable {
        size,
        add,
        mul,
        neg,
    })
}

/// Fiber sizes of the non-absorbing fibers, descending, with the trailing 1.
pub fn associated_partition(m: &MeadowTable) -> Option<Vec<u64>> {
    let fibers = m.fibers()?;
    let a = m.absorbing()?;
    let a_repr = m.fiber_map()?[a];
    let mut sizes: Vec<u64> = fibers
        .iter()
        .filter(|(z, _)| *z != a_repr)
        .map(|(_, f)| f.len() as u64)
        .collect();
    sizes.sort_by(|x, y| y.cmp(x));
    sizes.push(1);
    Some(sizes)
}

/// All unital isomorphisms between two rings (bijective homs).
fn all_ring_isos(r: &RingTable, s: &RingTable) -> Vec<UnitalHom> {
    if r.order() != s.order() || r.invariant_profile() != s.invariant_profile() {
        return Vec::new();
    }
    enum_homs(r, s).into_iter().filter(|h| h.is_bijective()).collect()
}

/// Structural isomorphism: a lattice isomorphism plus per-vertex ring
/// isomorphisms commuting with every cover's transition map.
pub fn meadow_isomorphic(d1: &DirectedLattice, d2: &DirectedLattice) -> bool {
    if d1.lattice().size() != d2.lattice().size()
        || d1.lattice().canonical_key() != d2.lattice().canonical_key()
    {
        return false;
    }
    let n = d1.lattice().size();
    // all order isomorphisms L1 -> L2
    let l1 = d1.lattice();
    let l2 = d2.lattice();
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    lattice_iso_backtrack(l1, l2, 0, &mut perm, &mut used, &mut |phi| {
        // ring isos per vertex, then commuting selection
        let iso_sets: Vec<Vec<UnitalHom>> = (0..n)
            .map(|v| all_ring_isos(d1.ring(v), d2.ring(phi[v])))
            .collect();
        if iso_sets.iter().any(|s| s.is_empty()) {
            return false;
        }
        let mut pick = vec![0usize; n];
        commuting_selection(d1, d2, phi, &iso_sets, 0, &mut pick)
    })
}

fn lattice_iso_backtrack(
    l1: &Lattice,
    l2: &Lattice,
    v: usize,
    perm: &mut Vec<usize>,
    used: &mut Vec<bool>,
    accept: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    let n = l1.size();
    if v == n {
        let ok = (0..n).all(|a| (0..n).all(|b| perm[l1.meet(a, b)] == l2.meet(perm[a], perm[b])));
        return ok && accept(perm);
    }
    for im in 0..n {
        if used[im] {
            continue;
        }
        let ok = (0..v).all(|w| {
            let m = l1.meet(v, w);
            m > v || {
                let pm = if m == v { im } else { perm[m] };
                pm == l2.meet(im, perm[w])
            }
        });
        if !ok {
            continue;
        }
        perm[v] = im;
        used[im] = true;
        if lattice_iso_backtrack(l1, l2, v + 1, perm, used, accept) {
            perm[v] = usize::MAX;
            used[im] = false;
            return true;
        }
        perm[v] = usize::MAX;
        used[im] = false;
    }
    false
}

fn commuting_selection(
    d1: &DirectedLattice,
    d2: &DirectedLattice,
    phi: &[usize],
    iso_sets: &[Vec<UnitalHom>],
    v: usize,
    pick: &mut Vec<usize>,
) -> bool {
    let n = iso_sets.len();
    if v == n {
        return true;
    }
    'candidates: for c in 0..iso_sets[v].len() {
        pick[v] = c;
        // check covers once both endpoints are decided
        for (ci, &(hi, lo)) in d1.covers().iter().enumerate() {
            if hi.max(lo) != v {
                continue;
            }
            let f1 = &d1.edge_homs()[ci];
            let Some(f2) = d2.hom_for_cover(phi[hi], phi[lo]) else {
                return false;
            };
            let psi_hi = &iso_sets[hi][pick[hi]];
            let psi_lo = &iso_sets[lo][pick[lo]];
            // psi_lo . f1 = f2 . psi_hi
            let lhs = f1.then(psi_lo);
            let rhs = psi_hi.then(f2);
            if lhs != rhs {
                continue 'candidates;
            }
        }
        if commuting_selection(d1, d2, phi, iso_sets, v + 1, pick) {
            return true;
        }
    }
    false
}

/// Reads the directed lattice back off a flattened table: fibers become
/// vertices ordered by z * z' = z, fiber rings are the restricted tables and
/// the transition maps are x -> x + z.
pub fn extract_directed_lattice(m: &MeadowTable) -> Result<DirectedLattice, ExtractError> {
    let report = crate::verify::check_premeadow_axioms(m);
    if !report.passed {
        return Err(ExtractError::NotAPremeadow(report));
    }
    let report = crate::verify::check_premeadow_with_a(m);
    if !report.passed {
        return Err(ExtractError::NotAPremeadow(report));
    }
    let fibers = m.fibers().expect("verified table has a zero");
    let reprs: Vec<usize> = fibers.iter().map(|(z, _)| *z).collect();
    let vid: HashMap<usize, usize> = reprs.iter().enumerate().map(|(i, &z)| (z, i)).collect();
    let k = reprs.len();
    let mut meet = vec![vec![0usize; k]; k];
    for (i, &z) in reprs.iter().enumerate() {
        for (j, &w) in reprs.iter().enumerate() {
            meet[i][j] = vid[&m.mul(z, w)];
        }
    }
    let lattice = Lattice::from_meet(k, meet).map_err(ExtractError::BadLattice)?;
    // fiber rings
    let mut rings = Vec::with_capacity(k);
    for (_, (z, elems)) in fibers.iter().enumerate() {
        let pos: HashMap<usize, usize> = elems.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let order = elems.len();
        let add: Vec<Vec<usize>> = elems
            .iter()
            .map(|&x| elems.iter().map(|&y| pos[&m.add(x, y)]).collect())
            .collect();
        let mul: Vec<Vec<usize>> = elems
            .iter()
            .map(|&x| elems.iter().map(|&y| pos[&m.mul(x, y)]).collect())
            .collect();
        let zero_local = pos[z];
        let one_local = (0..order)
            .find(|&u| (0..order).all(|x| mul[u][x] == x))
            .ok_or(ExtractError::FiberNotUnital(*z))?;
        let ring = RingTable::new(order, add, mul, zero_local, one_local, None)
            .map_err(|_| ExtractError::FiberNotUnital(*z))?;
        rings.push(ring);
    }
    // transition maps on covers: x -> x + z
    let covers = lattice.hasse_covers();
    let mut edge_homs = Vec::with_capacity(covers.len());
    for &(hi, lo) in &covers {
        let (z_lo, lo_elems) = &fibers[lo];
        let (_, hi_elems) = &fibers[hi];
        let pos_lo: HashMap<usize, usize> =
            lo_elems.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let map: Vec<usize> = hi_elems.iter().map(|&x| pos_lo[&m.add(x, *z_lo)]).collect();
        let hom = UnitalHom::new(&rings[hi], &rings[lo], map)
            .map_err(|_| ExtractError::BadTransition(hi, lo))?;
        edge_homs.push(hom);
    }
    DirectedLattice::new(lattice, rings, edge_homs).map_err(ExtractError::Assembly)
}

#[derive(Debug, Clone, Error)]
pub enum ExtractError {
    #[error("table is not a pre-meadow with an absorbing element: {0:?}")]
    NotAPremeadow(crate::verify::AxiomReport),
    #[error("0*M does not form a lattice: {0}")]
    BadLattice(crate::lattice::LatticeError),
    #[error("fiber of {0} is not a unital ring")]
    FiberNotUnital(usize),
    #[error("transition map on cover ({0}, {1}) is not a homomorphism")]
    BadTransition(usize, usize),
    #[error(transparent)]
    Assembly(BuildError),
}

/// Read-only caches shared across the pipeline: ring catalogs per order and
/// hom lists per ordered class pair. Precomputed before the parallel stage.
pub struct PipelineCaches {
    ring_cap: usize,
    catalogs: HashMap<usize, Arc<RingCatalog>>,
    homs: HashMap<(usize, usize, usize, usize), Arc<Vec<UnitalHom>>>,
}

impl PipelineCaches {
    pub fn new(ring_cap: usize) -> Self {
        PipelineCaches {
            ring_cap,
            catalogs: HashMap::new(),
            homs: HashMap::new(),
        }
    }

    pub fn catalog(&mut self, order: usize) -> Result<Arc<RingCatalog>, EnumError> {
        if let Some(c) = self.catalogs.get(&order) {
            return Ok(c.clone());
        }
        let cat = Arc::new(enumerate_rings(order, self.ring_cap)?);
        self.catalogs.insert(order, cat.clone());
        Ok(cat)
    }

    /// Precomputes hom lists for every ordered class pair over the orders.
    fn precompute_homs(&mut self, orders: &[usize]) -> Result<(), EnumError> {
        for &o1 in orders {
            for &o2 in orders {
                let n1 = self.catalog(o1)?.len();
                let n2 = self.catalog(o2)?.len();
                for i in 0..n1 {
                    for j in 0..n2 {
                        let key = (o1, i, o2, j);
                        if self.homs.contains_key(&key) {
                            continue;
                        }
                        let src = self.catalog(o1)?.classes[i].clone();
                        let dst = self.catalog(o2)?.classes[j].clone();
                        self.homs.insert(key, Arc::new(enum_homs(&src, &dst)));
                    }
                }
            }
        }
        Ok(())
    }

    fn hom_list(&self, key: (usize, usize, usize, usize)) -> &Arc<Vec<UnitalHom>> {
        &self.homs[&key]
    }
}

/// A placement of part orders onto vertices (bottom gets 1).
type OrderAssignment = Vec<u64>;

/// All ways (up to lattice-automorphism symmetry on the order placement) to
/// assign rings of the partition's orders to the non-bottom vertices, the
/// bottom pinned to the zero ring. Each returned vector is indexed by vertex.
pub fn assign_rings(
    lattice: &Lattice,
    partition: &AdmissiblePartition,
    caches: &mut PipelineCaches,
) -> Result<Vec<Vec<RingTable>>, PipelineError> {
    if lattice.size() != partition.parts.len() + 1 {
        return Err(PipelineError::DomainError(lattice.size() as u64));
    }
    let mut out = Vec::new();
    for oa in order_assignment_orbits(lattice, &partition.parts) {
        for indices in class_index_lists(lattice, &oa, caches)? {
            let mut rings = vec![zero_ring(); lattice.size()];
            for (&v, &(order, idx)) in nonbottom(lattice).iter().zip(&indices) {
                rings[v] = caches.catalog(order)?.classes[idx].clone();
            }
            out.push(rings);
        }
    }
    Ok(out)
}

/// Lexicographic class-index tuples for one order placement; each entry is
/// (order, class index) per non-bottom vertex.
fn class_index_lists(
    lattice: &Lattice,
    oa: &OrderAssignment,
    caches: &mut PipelineCaches,
) -> Result<Vec<Vec<(usize, usize)>>, PipelineError> {
    let vs = nonbottom(lattice);
    let counts: Vec<usize> = vs
        .iter()
        .map(|&v| caches.catalog(oa[v] as usize).map(|c| c.len()))
        .collect::<Result<_, _>>()?;
    let mut out = Vec::new();
    let mut indices = vec![0usize; vs.len()];
    loop {
        out.push(
            vs.iter()
                .zip(&indices)
                .map(|(&v, &i)| (oa[v] as usize, i))
                .collect(),
        );
        let mut i = indices.len();
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            indices[i] += 1;
            if indices[i] < counts[i] {
                break;
            }
            indices[i] = 0;
        }
    }
}

fn nonbottom(lattice: &Lattice) -> Vec<usize> {
    (0..lattice.size()).filter(|&v| v != lattice.bottom()).collect()
}

/// Distinct placements of the multiset of part orders onto the non-bottom
/// vertices, one representative per orbit of the lattice's automorphisms.
fn order_assignment_orbits(lattice: &Lattice, parts: &[u64]) -> Vec<OrderAssignment> {
    let autos = lattice.automorphisms();
    let vs = nonbottom(lattice);
    let mut perms = Vec::new();
    let mut sorted = parts.to_vec();
    sorted.sort_by(|a, b| b.cmp(a));
    distinct_permutations(&sorted, &mut Vec::new(), &mut perms);
    let mut seen: std::collections::HashSet<Vec<u64>> = std::collections::HashSet::new();
    let mut out = Vec::new();
    for perm in perms {
        let mut oa = vec![1u64; lattice.size()];
        for (slot, &v) in vs.iter().enumerate() {
            oa[v] = perm[slot];
        }
        let key = autos
            .iter()
            .map(|a| {
                let mut transported = vec![1u64; lattice.size()];
                for v in 0..lattice.size() {
                    transported[v] = oa[a[v]];
                }
                transported
            })
            .min()
            .unwrap();
        if seen.insert(key) {
            out.push(oa);
        }
    }
    out
}

fn distinct_permutations(pool: &[u64], current: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
    if pool.is_empty() {
        out.push(current.clone());
        return;
    }
    let mut last = None;
    for i in 0..pool.len() {
        if last == Some(pool[i]) {
            continue;
        }
        last = Some(pool[i]);
        let mut rest = pool.to_vec();
        rest.remove(i);
        current.push(pool[i]);
        distinct_permutations(&rest, current, out);
        current.pop();
    }
}

/// Every labeling of the covers by homomorphisms whose path compositions are
/// path-independent, in lexicographic order of hom choices.
pub fn enumerate_labelings(lattice: &Lattice, rings: &[RingTable]) -> Vec<DirectedLattice> {
    let covers = lattice.hasse_covers();
    let hom_lists: Vec<Arc<Vec<UnitalHom>>> = covers
        .iter()
        .map(|&(hi, lo)| Arc::new(enum_homs(&rings[hi], &rings[lo])))
        .collect();
    labelings_from(lattice, rings, &hom_lists, false)
}

/// The lexicographically first valid labeling, if any.
pub fn first_labeling(lattice: &Lattice, rings: &[RingTable]) -> Option<DirectedLattice> {
    let covers = lattice.hasse_covers();
    let hom_lists: Vec<Arc<Vec<UnitalHom>>> = covers
        .iter()
        .map(|&(hi, lo)| Arc::new(enum_homs(&rings[hi], &rings[lo])))
        .collect();
    labelings_from(lattice, rings, &hom_lists, true).into_iter().next()
}

fn labelings_from(
    lattice: &Lattice,
    rings: &[RingTable],
    hom_lists: &[Arc<Vec<UnitalHom>>],
    first_only: bool,
) -> Vec<DirectedLattice> {
    if hom_lists.iter().any(|hs| hs.is_empty()) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut choice = vec![0usize; hom_lists.len()];
    loop {
        let edge_homs: Vec<UnitalHom> = choice
            .iter()
            .enumerate()
            .map(|(i, &c)| hom_lists[i][c].clone())
            .collect();
        if let Ok(dl) = DirectedLattice::new(lattice.clone(), rings.to_vec(), edge_homs) {
            out.push(dl);
            if first_only {
                return out;
            }
        }
        let mut i = choice.len();
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            choice[i] += 1;
            if choice[i] < hom_lists[i].len() {
                break;
            }
            choice[i] = 0;
        }
    }
}

/// Knobs for the enumeration pipeline.
#[derive(Debug, Clone)]
pub struct PipelineConfig {
    pub lattice_cap: usize,
    pub ring_cap: usize,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        PipelineConfig {
            lattice_cap: crate::lattice_enum::DEFAULT_LATTICE_CAP,
            ring_cap: crate::ring_enum::DEFAULT_BRUTE_FORCE_CAP,
        }
    }
}

/// The full pipeline: admissible partitions, lattices, ring assignments,
/// homomorphism labelings. One structure is emitted per (lattice,
/// order-placement-orbit, ring list) admitting a consistent labeling,
/// carrying its first valid labeling; this is the counting the reference
/// tables use. The output is deterministic and schedule-independent.
pub fn enumerate_premeadows(
    n: u64,
    config: &PipelineConfig,
) -> Result<Vec<DirectedLattice>, PipelineError> {
    let partitions = admissible_partitions(n)?;
    // precompute catalogs and hom lists sequentially, then share read-only
    let mut caches = PipelineCaches::new(config.ring_cap);
    let mut orders: Vec<usize> = partitions
        .iter()
        .flat_map(|p| p.parts.iter().map(|&x| x as usize))
        .collect();
    orders.push(1);
    orders.sort_unstable();
    orders.dedup();
    caches.precompute_homs(&orders)?;
    let mut units: Vec<(AdmissiblePartition, Lattice)> = Vec::new();
    for p in &partitions {
        for l in enumerate_lattices(p.parts.len() + 1, config.lattice_cap)? {
            units.push((p.clone(), l));
        }
    }
    // order placements and class lists are cheap; compute them up front so
    // the parallel stage borrows the caches immutably
    let mut tasks: Vec<(Lattice, Vec<Vec<(usize, usize)>>)> = Vec::new();
    for (partition, lattice) in &units {
        let mut lists = Vec::new();
        for oa in order_assignment_orbits(lattice, &partition.parts) {
            lists.extend(class_index_lists(lattice, &oa, &mut caches)?);
        }
        tasks.push((lattice.clone(), lists));
    }
    let caches = &caches;
    let results: Vec<Vec<DirectedLattice>> = tasks
        .par_iter()
        .map(|(lattice, lists)| {
            let covers = lattice.hasse_covers();
            let vs = nonbottom(lattice);
            let mut found = Vec::new();
            for indices in lists {
                let mut rings = vec![zero_ring(); lattice.size()];
                for (&v, &(order, idx)) in vs.iter().zip(indices) {
                    rings[v] = caches.catalogs[&order].classes[idx].clone();
                }
                let slot_of = |v: usize| vs.iter().position(|&w| w == v);
                let hom_lists: Vec<Arc<Vec<UnitalHom>>> = covers
                    .iter()
                    .map(|&(hi, lo)| {
                        let (oh, ih) = slot_of(hi).map(|s| indices[s]).unwrap_or((1, 0));
                        let (ol, il) = slot_of(lo).map(|s| indices[s]).unwrap_or((1, 0));
                        caches.hom_list((oh, ih, ol, il)).clone()
                    })
                    .collect();
                if let Some(dl) =
                    labelings_from(lattice, &rings, &hom_lists, true).into_iter().next()
                {
                    found.push(dl);
                }
            }
            found
        })
        .collect();
    Ok(results.into_iter().flatten().collect())
}

/// Constructive lower-bound witnesses.
///
/// Odd order 2n+1: every lattice with n+1 vertices, all non-bottom fibers
/// Z_2, transition maps forced. Even order 2n (n >= 6): an (n-5)-vertex
/// lattice of Z_2 fibers wrapped between Z_6 on top, Z_3 on a side chain and
/// the zero ring at the new bottom.
pub fn lower_bound_witnesses(
    order: u64,
    config: &PipelineConfig,
) -> Result<Vec<DirectedLattice>, PipelineError> {
    if order % 2 == 1 {
        if order < 5 {
            return Err(PipelineError::DomainError(order));
        }
        let n = ((order - 1) / 2) as usize;
        let mut out = Vec::new();
        for lattice in enumerate_lattices(n + 1, config.lattice_cap)? {
            let mut rings = vec![zero_ring(); lattice.size()];
            for v in 0..lattice.size() {
                if v != lattice.bottom() {
                    rings[v] = cyclic_ring(2);
                }
            }
            let dl = first_labeling(&lattice, &rings)
                .expect("identity labelings are always consistent");
            out.push(dl);
        }
        Ok(out)
    } else {
        if order < 12 {
            return Err(PipelineError::DomainError(order));
        }
        let n = (order / 2) as usize;
        let m = n - 5;
        let mut out = Vec::new();
        for inner in enumerate_lattices(m, config.lattice_cap)? {
            // vertices: 0 = new bottom, 1..=m = inner shifted, m+1 = side
            // (Z_3), m+2 = new top (Z_6)
            let k = m + 3;
            let side = m + 1;
            let top = m + 2;
            let inner_leq = inner.leq_matrix();
            let mut leq = vec![vec![false; k]; k];
            for (i, row) in leq.iter_mut().enumerate() {
                row[i] = true;
                row[top] = true;
            }
            for a in 0..m {
                for b in 0..m {
                    if inner_leq[a][b] {
                        leq[1 + a][1 + b] = true;
                    }
                }
            }
            for v in 1..k {
                leq[0][v] = true;
            }
            let mut meet = vec![vec![0usize; k]; k];
            for a in 0..k {
                for b in 0..k {
                    let lower: Vec<usize> =
                        (0..k).filter(|&c| leq[c][a] && leq[c][b]).collect();
                    meet[a][b] = lower
                        .iter()
                        .copied()
                        .find(|&c| lower.iter().all(|&d| leq[d][c]))
                        .expect("wrapped construction is a lattice");
                }
            }
            let lattice =
                Lattice::from_meet(k, meet).expect("wrapped construction is a lattice");
            let mut rings = vec![zero_ring(); k];
            for v in 1..=m {
                rings[v] = cyclic_ring(2);
            }
            rings[side] = cyclic_ring(3);
            rings[top] = cyclic_ring(6);
            let dl = first_labeling(&lattice, &rings)
                .expect("projection labelings are always consistent");
            out.push(dl);
        }
        Ok(out)
    }
}
