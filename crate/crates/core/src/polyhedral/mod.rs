//! Polyhedral geometry of `conv(A)` and `pos(A)`: hulls, faces, normal
//! fans, regular triangulations, volumes and lattice-point counts.

pub mod cone;
pub mod ehrhart;
pub mod polytope;
pub mod triangulation;

pub use cone::Cone;
pub use ehrhart::{ehrhart_polynomial, lattice_points, CountLattice, Ehrhart};
pub use polytope::{convex_hull, face_poset, normal_fan_equal, normal_fans_equal, vertices_of, Face, FacePoset, Facet, NormalFan, Polytope};
pub use triangulation::{cone_triangulation, normalized_volume, regular_triangulation, Simplex, Triangulation};
