//! Fusion subcategories of twisted quantum doubles `Rep(D^ω(G))`.
//!
//! The crate builds exact modular data for a finite group `G` with a
//! 3-cocycle `ω`, enumerates fusion subcategories through triples `(K, H, B)`,
//! and computes the subcategory lattice with its invariants. A brute-force
//! fusion-closure oracle cross-checks the untwisted case.

pub mod characters;
pub mod cocycle;
pub mod cyclo;
pub mod double;
pub mod group;
pub mod modp;
pub mod oracle;
pub mod subcat;
pub mod zmod;

pub use num_complex::Complex64;

pub use characters::{
    degree_one_characters, CentralExtension, Character, CharacterError, CharacterTable, ProjCharTable, ProjCharacter,
};
pub use cocycle::{CochainKind, Cochain2, CocycleError, IdentityReport, ThreeCocycle};
pub use double::{DoubleError, ModularData, SimpleObject, TwistedDouble};
pub use cyclo::{Cyclo, CycloContext, CycloError, RootExp, RootSum};
pub use group::{CentralSeries, ConjStructure, FiniteGroup, GroupDefect, GroupError, Subgroup};
pub use subcat::{
    adjoint, build_subcat, central_charge, centralizer, classify, contains, enumerate_all, enumerate_bicharacters,
    enumerate_subcats, gauss_sum, is_prime, join, lower_central_term, meet, muger_center, nondegenerate_count,
    proper_nondegenerate, triple_of, upper_central_term, Classification, FusionSubcat, OmegaBicharacter, SubcatError,
    Triple,
};
pub use oracle::{certify, predicate_centralizer, ClosureReport, FusionOracle, OracleError};
