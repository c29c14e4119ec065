//! The Hardy-Littlewood-type inequality for holomorphic h on the ball:
//! ||h||_{L^2(U)} <= 2^{-3/4} pi^{-1/2} ||h||_{L^{4/3}(S^3)}.
//! The left norm is exact (ball monomial integration); the right norm
//! is sphere quadrature of |h|^{4/3}.

use crate::error::Result;
use crate::exact::PiValue;
use crate::quad::SphereGrid;
use crate::sphere::{integrate_ball, SpherePolynomial};
use crate::Error;
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct HlReport {
    /// ||h||_{L^2(U)} (floating; exact radicand attached).
    pub lhs: f64,
    /// ||h||_{L^{4/3}(S^3)} by quadrature.
    pub rhs_norm: f64,
    /// The constant 2^{-3/4} pi^{-1/2}.
    pub bound_const: f64,
    /// lhs / rhs_norm; the inequality is ratio <= bound_const.
    pub ratio: f64,
    pub holds: bool,
    #[serde(skip)]
    pub lhs_sq_exact: PiValue,
}

pub fn hl_check(h: &SpherePolynomial, grid: &SphereGrid) -> Result<HlReport> {
    if !h.is_holomorphic() {
        return Err(Error::NotHolomorphic);
    }
    let lhs_sq = integrate_ball(&h.abs_sq());
    let lhs = lhs_sq.to_f64().max(0.0).sqrt();
    let rhs_43 = grid.integrate(|n| {
        let v = h.eval(n.z, n.w);
        v.norm_sqr().powf(2.0 / 3.0)
    });
    let rhs_norm = rhs_43.powf(0.75);
    let bound_const = 2f64.powf(-0.75) / std::f64::consts::PI.sqrt();
    let ratio = lhs / rhs_norm;
    Ok(HlReport {
        lhs,
        rhs_norm,
        bound_const,
        ratio,
        holds: ratio <= bound_const,
        lhs_sq_exact: lhs_sq,
    })
}
