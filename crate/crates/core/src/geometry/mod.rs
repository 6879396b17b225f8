//! Exact polyhedral geometry: the lifted polyhedron `P_t`, its cone `C_t`,
//! double description, and the Laurent determinant sign oracle.

pub mod dd;
pub mod hull;
pub mod laurent;

pub use dd::{cone_from_inequalities, facet_normals, Cone};
pub use hull::{
    bounded_faces, bounded_faces_at_vertex, build_cone, choose_t, face_poset, hull_faces, lift,
    t_independence_check, ConeDescription, FacePoset, PolyFace,
};
pub use laurent::{det_laurent, det_sign_laurent, LaurentPoly};
