//! Naive parametric search for the biholomorphically invariant
//! quotient: over a family of holomorphic maps H of the closed ball,
//! minimize Q(H(Z_0)) computed from
//!   F = 2^{1/3} Int_{S^3} |det H'|^{4/3},  V = Int_U |det H'|^2.
//! The result is an upper bound for Q*(Z_0), never claimed as the
//! infimum.

use crate::error::Result;
use crate::exact::{rat_from_f64, Qc};
use crate::fit::{nelder_mead, NelderMeadResult};
use crate::measures::iso_quotient;
use crate::quad::SphereGrid;
use crate::sphere::{integrate_ball, SpherePolynomial};
use serde::Serialize;
use std::sync::Arc;

/// A family of holomorphic self-maps given through det H' as a
/// polynomial in (z, w) depending on real parameters.
#[derive(Clone)]
pub struct MapFamily {
    pub label: String,
    pub bounds: Vec<(f64, f64)>,
    pub start: Vec<f64>,
    det: Arc<dyn Fn(&[f64]) -> SpherePolynomial + Send + Sync>,
}

impl MapFamily {
    pub fn new<F>(
        label: impl Into<String>,
        bounds: Vec<(f64, f64)>,
        start: Vec<f64>,
        det: F,
    ) -> Self
    where
        F: Fn(&[f64]) -> SpherePolynomial + Send + Sync + 'static,
    {
        MapFamily { label: label.into(), bounds, start, det: Arc::new(det) }
    }

    /// Unitary rotations: |det H'| = 1 for every parameter.
    pub fn unitary() -> Self {
        MapFamily::new(
            "unitary",
            vec![(0.0, std::f64::consts::TAU)],
            vec![0.3],
            |p| {
                let phase = num_complex::Complex64::from_polar(1.0, p[0]);
                SpherePolynomial::constant(Qc::new(
                    rat_from_f64(phase.re),
                    rat_from_f64(phase.im),
                ))
            },
        )
    }

    /// The shear-linear family phi_t(w) = 1 + t w pushed through
    /// H(z, w) = (phi(w) z, w): det H' = 1 + t w.
    pub fn shear_linear(t_max: f64) -> Self {
        MapFamily::new("shear-linear", vec![(0.0, t_max)], vec![t_max / 2.0], |p| {
            SpherePolynomial::one().add(
                &SpherePolynomial::var_w().scale(&Qc::from_rat(rat_from_f64(p[0]))),
            )
        })
    }

    /// Only the identity map.
    pub fn identity_only() -> Self {
        MapFamily::new("identity", vec![(0.0, 1.0)], vec![0.5], |_| SpherePolynomial::one())
    }

    pub fn det_at(&self, p: &[f64]) -> SpherePolynomial {
        (self.det)(p)
    }
}

/// Q of the image surface for one parameter: F by sphere quadrature of
/// |det|^{4/3}, V exactly from the ball monomial integrals of |det|^2.
pub fn q_of_map(family: &MapFamily, p: &[f64], grid: &SphereGrid) -> Result<f64> {
    let det = family.det_at(p);
    let f = 2f64.powf(1.0 / 3.0)
        * grid.integrate(|n| det.eval(n.z, n.w).norm_sqr().powf(2.0 / 3.0));
    let v = integrate_ball(&det.abs_sq()).to_f64();
    iso_quotient(f, v)
}

#[derive(Clone, Debug, Serialize)]
pub struct QStarResult {
    pub family: String,
    pub best_param: Vec<f64>,
    /// Upper bound for Q* attained by the search.
    pub min_q: f64,
    pub iterations: usize,
    pub converged: bool,
    pub trace: Vec<crate::fit::NelderMeadStep>,
}

/// Nelder-Mead over the family's parameter box.
pub fn q_star_search(family: &MapFamily, grid: &SphereGrid) -> Result<QStarResult> {
    let f = |p: &[f64]| q_of_map(family, p, grid).unwrap_or(f64::INFINITY);
    let nm: NelderMeadResult =
        nelder_mead(f, &family.start, &family.bounds, 0.25, 1e-6, 200)?;
    Ok(QStarResult {
        family: family.label.clone(),
        best_param: nm.point,
        min_q: nm.value,
        iterations: nm.iterations,
        converged: nm.converged,
        trace: nm.trace,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    fn grid() -> SphereGrid {
        SphereGrid::new(16, 12, 12)
    }

    #[test]
    fn unitary_family_constant_8pi() {
        let fam = MapFamily::unitary();
        let g = grid();
        for p in [[0.0], [1.0], [2.5]] {
            assert_relative_eq!(q_of_map(&fam, &p, &g).unwrap(), 8.0 * PI, max_relative = 1e-9);
        }
        let r = q_star_search(&fam, &g).unwrap();
        assert_relative_eq!(r.min_q, 8.0 * PI, max_relative = 1e-9);
    }

    #[test]
    fn identity_only_returns_8pi() {
        let r = q_star_search(&MapFamily::identity_only(), &grid()).unwrap();
        assert_relative_eq!(r.min_q, 8.0 * PI, max_relative = 1e-9);
    }

    #[test]
    fn shear_linear_bounds() {
        let g = grid();
        let r = q_star_search(&MapFamily::shear_linear(0.9), &g).unwrap();
        // Lower bound 4 pi from the ball-image inequality; families
        // containing the identity stay at or below 8 pi.
        assert!(r.min_q >= 4.0 * PI);
        assert!(r.min_q <= 8.0 * PI * (1.0 + 1e-9));
        // The identity (t = 0) gives exactly 8 pi.
        assert_relative_eq!(
            q_of_map(&MapFamily::shear_linear(0.9), &[0.0], &g).unwrap(),
            8.0 * PI,
            max_relative = 1e-9
        );
    }
}
