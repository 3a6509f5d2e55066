//! Local-complementation orbits of graphs and the machinery relating their
//! size to Eulerian tours of 4-regular multigraphs: `l(G) = e(G) / k(G)`,
//! where `e(G)` counts Eulerian vectors of the canonical isotropic system and
//! `k(G)` is computed in polynomial time from the bineighbourhood space.

pub mod bench;
pub mod bits;
pub mod error;
pub mod euler;
pub mod formats;
pub mod generate;
pub mod gf4;
pub mod graph;
pub mod isotropic;
pub mod mu;
pub mod orbit;
pub mod quantum;
pub mod reduction;
pub mod verify;

pub use error::{Error, Result};
pub use euler::{
    alternance_graph, count_eulerian_tours, decomposition_from_vector, double_occurrence_word,
    find_eulerian_tour, DoubleOccurrenceWord, EulerianDecomposition, MultiGraph4, Tour,
};
pub use gf4::{GF4Subspace, GF4Vector, Pauli, PauliString, GF4};
pub use graph::LabelledGraph;
pub use isotropic::{canonical_system, e_of_graph, GraphicPresentation, IsotropicSystem};
pub use mu::{in_class_mu, k_index, nu_space, BinSubspace, BinVector, CycleBasis};
pub use orbit::{enumerate_orbit, lc_equivalent, OrbitReport};
