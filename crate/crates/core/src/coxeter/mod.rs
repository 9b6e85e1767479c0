//! Finite Coxeter groups and the complexes tiled by graph-associahedra.

mod building;
mod complex;
mod group;
mod system;

pub use building::{min_building_elements_type_a, MinBuildingRow};
pub use complex::{
    blown_up_points, build_tiled_complex, euler_characteristic, exceptional_divisors, face_stabilizer,
    untwisted_mock_subgroup, Cell, ComplexReport, DivisorComponent, FaceStabilizer, TiledComplex,
};
pub use group::{
    CoxeterGroup, GroupElement, GroupLimits, DEFAULT_MAX_ORDER, HARD_MAX_ORDER, MAX_ORDER_ENV,
};
pub use system::{coxeter_graph, CoxeterSystem, CoxeterType};
