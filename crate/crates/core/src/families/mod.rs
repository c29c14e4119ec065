//! Special families of domains: two-ball intersections, shear images of
//! the ball, tubes over convex curves, the Hardy-Littlewood inequality
//! corpus, and a naive parametric search for the biholomorphic
//! isoperimetric invariant.

pub mod ball_pair;
pub mod corpus;
pub mod hl;
pub mod qstar;
pub mod shear;
pub mod tube;

pub use ball_pair::{
    minimize_q, q_ball_pair, q_ball_pair_direct, q_ball_pair_limit, BallPairParams,
    MinimizeResult,
};
pub use corpus::{seeded_circular_potentials, seeded_holomorphic, seeded_linear_images};
pub use hl::{hl_check, HlReport};
pub use qstar::{q_star_search, MapFamily, QStarResult};
pub use shear::{shear_asymptotics, shear_measures, ShearAsymptotics, ShearSurface};
pub use tube::{tube_measures, ConvexCurve, TubeReport};
