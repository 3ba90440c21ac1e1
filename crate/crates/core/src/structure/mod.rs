//! The `sl_2` structure induced by `F_1`, the involution `Φ`, cogeneration
//! searches and export of the model with a grading dictionary.

mod cogenerate;
mod export;
pub mod reference;
mod sl2;

pub use cogenerate::{Certificate, Cogenerator};
pub use export::{
    export_homology, GradingDictionary, HomologyRecord, HomologyTable, OperatorTable,
};
pub use sl2::{
    lefschetz_check, phi_coefficient, power_from, swap_map, weight, weight_map, LefschetzFailure,
    SlString, WeightDecomposition,
};
