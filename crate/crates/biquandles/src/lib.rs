//! Computational algebra for finite quandles and biquandles.
//!
//! The crate builds biquandles from structures on a quandle (a coherent
//! family of automorphisms), decomposes any biquandle back into such a
//! structure over its underlying quandle, classifies structures up to
//! isomorphism, and computes automorphism groups — with exhaustive
//! brute-force enumerators acting as independent oracles for every derived
//! fact.
//!
//! Everything is a pure function over immutable operation tables; element
//! carriers are always `0..n`.
//!
//! Start with the runnable examples:
//!
//! ```bash
//! cargo run -p biquandles --example verify_families
//! cargo run -p biquandles --example build_and_decompose
//! cargo run -p biquandles --example automorphism_groups
//! cargo run -p biquandles --example classify_structures
//! cargo run -p biquandles --example product_biquandles
//! cargo run -p biquandles --example census
//! ```
//!
//! The same functionality is scriptable through the thin `biq` binary; see
//! the crate README for the file formats and command set.

pub mod cli;
pub mod enumeration;
pub mod error;
pub mod io;
pub mod morphisms;
pub mod perm;
pub mod products;
pub mod structures;
pub mod tables;

pub use error::{Error, Result};
pub use perm::Permutation;
pub use tables::{
    alexander_biquandle, alexander_quandle, conjugation_quandle, core_quandle, dihedral_biquandle,
    dihedral_quandle, trivial_quandle, verify_biquandle, verify_group, verify_quandle,
    wada_biquandle, FiniteBiquandle, FiniteGroup, FiniteQuandle, OperationTable,
    VerificationReport,
};

pub use structures::{
    constant_structure, extract_structure, realize, underlying_quandle, verify_structure,
    BiquandleStructure,
};

pub use morphisms::{
    affine_group, affine_permutation, biquandle_aut_group, centralizer,
    classify_constant_structures, conjugacy_classes, dihedral_biquandle_aut, groups_isomorphic,
    inner_group, is_biquandle_hom, is_quandle_hom, quandle_aut_group, setwise_normalizer,
    structures_isomorphic, IsoResult, PermGroup,
};

pub use products::{
    biquandle_components, decompose_product_aut, product_aut_group, product_biquandle,
    quandle_components, ComponentPartition, ProductBiquandle,
};

pub use enumeration::{
    census_crosscheck, enumerate_biquandles_bruteforce, enumerate_structures, BiquandleCensus,
    CensusCrosscheck, EnumerationLimits, StructureCensus,
};
