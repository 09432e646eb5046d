//! Enumeration and verification of finite pre-meadows and common meadows.
//!
//! A pre-meadow with an absorbing error element decomposes into a lattice of
//! fibers, each a commutative unital ring, glued by transition homomorphisms.
//! This crate enumerates all such structures of a given order up to
//! isomorphism by generating admissible partitions, finite commutative rings
//! and finite lattices, labeling the lattice covers with commuting
//! homomorphisms, and verifying the axioms directly on the flattened
//! operation tables.

pub mod build;
pub mod catalog;
pub mod dot;
pub mod hom;
pub mod lattice;
pub mod lattice_enum;
pub mod partitions;
pub mod ring;
pub mod ring_enum;
pub mod verify;

pub use build::{
    assign_rings, associated_partition, build_meadow, check_composition,
    enumerate_labelings, enumerate_premeadows, extract_directed_lattice, first_labeling,
    lower_bound_witnesses, meadow_isomorphic, DirectedLattice, MeadowTable, PipelineCaches,
    PipelineConfig,
};
pub use hom::{canonical_form, construct_witness_hom, enum_homs, is_isomorphic, UnitalHom};
pub use lattice::{is_lattice, Lattice};
pub use lattice_enum::enumerate_lattices;
pub use partitions::{admissible_partitions, is_admissible, prime_support, AdmissiblePartition};
pub use ring::{cyclic_ring, product_ring, zero_ring, RingTable};
pub use ring_enum::{brute_force_rings, enumerate_rings, RingCatalog};
pub use verify::{
    check_common_axioms, check_premeadow_axioms, check_premeadow_with_a, compute_jx,
    construct_inverse, is_common_meadow, search_inverse_table, AxiomReport, JSet,
};
