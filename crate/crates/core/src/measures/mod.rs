//! Surface representations and the three core functionals: the
//! Fefferman measure F(Z), the enclosed volume V(Z), and the
//! isoperimetric quotient Q(Z) = F^{3/2}/V.
//!
//! Graph surfaces integrate 2^{2/3} mu(F)^{1/3} over the base box.
//! Star-shaped surfaces are described on the unit sphere by a radial
//! potential G with SG = 0; the Monge-Ampere density there is assembled
//! exactly from tangential derivatives (L, Lbar, T applied to G), and
//! F(Z) = 2^{1/3} Int e^{-4G/3} B(G)^{1/3}, V(Z) = (1/4) Int e^{-2G},
//! where B is the bracket of the sphere Monge-Ampere lemma.

use crate::calculus::{graph_mu, GraphField};
use crate::error::{Error, Result};
use crate::exact::rat_from_f64;
use crate::quad::{BaseBox, BoxGrid, SphereGrid, SphereNode};
use crate::sphere::{l, lbar, t, SpherePolynomial};
use num_complex::Complex64;
use serde::Serialize;
use std::sync::Arc;

type C = Complex64;

/// Tangential derivative data of the radial potential G at a sphere
/// point. For real G: Lbar G = conj(L G), T G and T^2 G are real, and
/// Lbar L G = L Lbar G + i T G.
#[derive(Clone, Copy, Debug)]
pub struct TangentialDerivs {
    pub g: f64,
    pub lg: C,
    pub lbg: C,
    pub tg: f64,
    pub llbg: C,
    pub ltg: C,
    pub t2g: f64,
}

/// The bracket of the sphere Monge-Ampere density: on the unit sphere,
/// M(rho) = e^{3G} B(G) with
/// B = 1 + (L Lbar + Lbar L)G/2 + (TG)^2/4 + Im(Lbar G . LT G)
///     + ((TG)^2 (L Lbar + Lbar L)G/2 + LG Lbar G T^2 G
///        - 2 Re(Lbar G . TG . LT G)) / 4.
pub fn ma_bracket(td: &TangentialDerivs) -> f64 {
    // (L Lbar + Lbar L) G / 2 = Re(L Lbar G) for real G.
    let sym = td.llbg.re;
    let tg2 = td.tg * td.tg;
    1.0 + sym
        + 0.25 * tg2
        + (td.lbg * td.ltg).im
        + 0.25 * (tg2 * sym + (td.lg * td.lbg).re * td.t2g - 2.0 * td.tg * (td.lbg * td.ltg).re)
}

/// Exact tangential derivative polynomials of a potential given on the
/// sphere by a polynomial restriction.
#[derive(Clone)]
struct PolyDerivs {
    g: SpherePolynomial,
    lg: SpherePolynomial,
    lbg: SpherePolynomial,
    tg: SpherePolynomial,
    llbg: SpherePolynomial,
    ltg: SpherePolynomial,
    t2g: SpherePolynomial,
}

impl PolyDerivs {
    fn new(g: &SpherePolynomial) -> Self {
        let lg = l(g);
        let lbg = lbar(g);
        let tg = t(g);
        PolyDerivs {
            g: g.clone(),
            llbg: l(&lbg),
            ltg: l(&tg),
            t2g: t(&tg),
            lg,
            lbg,
            tg,
        }
    }

    fn eval(&self, z: C, w: C, scale: f64) -> TangentialDerivs {
        TangentialDerivs {
            g: scale * self.g.eval(z, w).re,
            lg: scale * self.lg.eval(z, w),
            lbg: scale * self.lbg.eval(z, w),
            tg: scale * self.tg.eval(z, w).re,
            llbg: scale * self.llbg.eval(z, w),
            ltg: scale * self.ltg.eval(z, w),
            t2g: scale * self.t2g.eval(z, w).re,
        }
    }
}

enum RadialKind {
    /// G = eps * (polynomial restricted to the sphere).
    Poly { derivs: PolyDerivs, eps: f64 },
    /// G = log P for a real polynomial P > 0 on the sphere; tangential
    /// derivatives by the quotient rule from exact derivatives of P.
    LogPoly { derivs: PolyDerivs },
    /// G composed with an SU(2) rotation of (z, w); tangential
    /// derivatives pull back pointwise because L, Lbar, T commute with
    /// the rotation.
    Rotated { inner: Arc<RadialSurface>, u: [[C; 2]; 2] },
}

/// A star-shaped surface given by the defining function
/// e^{G}(|z|^2 + |w|^2) - 1 with SG = 0.
pub struct RadialSurface {
    kind: RadialKind,
    pub label: String,
}

impl RadialSurface {
    /// G = eps * g0 with g0 a real polynomial restriction.
    pub fn poly_scaled(g0: &SpherePolynomial, eps: f64) -> Result<Self> {
        if !g0.is_real() {
            return Err(Error::Precondition(
                "radial potential polynomial must be real-valued".into(),
            ));
        }
        Ok(RadialSurface {
            kind: RadialKind::Poly { derivs: PolyDerivs::new(g0), eps },
            label: format!("radial-poly(eps={eps})"),
        })
    }

    /// The sphere of the given radius: constant G = -2 ln R.
    pub fn sphere(radius: f64) -> Self {
        let c = -2.0 * radius.ln();
        let g = SpherePolynomial::constant(crate::exact::Qc::from_rat(rat_from_f64(c)));
        RadialSurface {
            kind: RadialKind::Poly { derivs: PolyDerivs::new(&g), eps: 1.0 },
            label: format!("sphere(R={radius})"),
        }
    }

    /// G = log P on the sphere, for real P positive there.
    pub fn log_poly(p: &SpherePolynomial, label: impl Into<String>) -> Result<Self> {
        if !p.is_real() {
            return Err(Error::Precondition(
                "log-polynomial potential requires a real polynomial".into(),
            ));
        }
        Ok(RadialSurface {
            kind: RadialKind::LogPoly { derivs: PolyDerivs::new(p) },
            label: label.into(),
        })
    }

    /// Precompose with the SU(2) map (z, w) -> (a z + b w, -conj(b) z + conj(a) w).
    pub fn rotated(self, a: C, b: C) -> Result<Self> {
        let norm = a.norm_sqr() + b.norm_sqr();
        if (norm - 1.0).abs() > 1e-12 {
            return Err(Error::Precondition(format!(
                "SU(2) row must be unit length, got |a|^2+|b|^2 = {norm}"
            )));
        }
        let label = format!("{} rotated", self.label);
        Ok(RadialSurface {
            kind: RadialKind::Rotated {
                inner: Arc::new(self),
                u: [[a, b], [-b.conj(), a.conj()]],
            },
            label,
        })
    }

    pub fn tangential_at(&self, z: C, w: C) -> TangentialDerivs {
        match &self.kind {
            RadialKind::Poly { derivs, eps } => derivs.eval(z, w, *eps),
            RadialKind::LogPoly { derivs } => {
                let d = derivs.eval(z, w, 1.0);
                let p = d.g;
                let lg = d.lg / p;
                let lbg = d.lbg / p;
                let tg = d.tg / p;
                TangentialDerivs {
                    g: p.ln(),
                    lg,
                    lbg,
                    tg,
                    llbg: d.llbg / p - d.lg * d.lbg / (p * p),
                    ltg: d.ltg / p - d.lg * d.tg / (p * p),
                    t2g: d.t2g / p - d.tg * d.tg / (p * p),
                }
            }
            RadialKind::Rotated { inner, u } => {
                let zz = u[0][0] * z + u[0][1] * w;
                let ww = u[1][0] * z + u[1][1] * w;
                inner.tangential_at(zz, ww)
            }
        }
    }

    /// Exactly-zero T derivative for polynomial kinds (circularity).
    fn t_vanishes_exactly(&self) -> bool {
        match &self.kind {
            RadialKind::Poly { derivs, .. } => derivs.tg.is_zero(),
            RadialKind::LogPoly { derivs } => derivs.tg.is_zero(),
            RadialKind::Rotated { inner, .. } => inner.t_vanishes_exactly(),
        }
    }
}

/// Fefferman measure of a radial surface:
/// F(Z) = 2^{1/3} Int e^{-4G/3} B(G)^{1/3} over the unit sphere.
pub fn fefferman_radial(surface: &RadialSurface, grid: &SphereGrid) -> Result<f64> {
    let c = 2f64.powf(1.0 / 3.0);
    let v = grid.try_integrate(|n: &SphereNode| {
        let td = surface.tangential_at(n.z, n.w);
        let br = ma_bracket(&td);
        if br <= 0.0 {
            return Err(Error::NotPseudoconvex(format!(
                "Monge-Ampere bracket {br:.3e} at (z={}, w={})",
                n.z, n.w
            )));
        }
        Ok((-4.0 * td.g / 3.0).exp() * br.cbrt())
    })?;
    Ok(c * v)
}

/// Enclosed volume of a radial surface: V(Z) = (1/4) Int e^{-2G}.
pub fn volume_radial(surface: &RadialSurface, grid: &SphereGrid) -> f64 {
    0.25 * grid.integrate(|n| (-2.0 * surface.tangential_at(n.z, n.w).g).exp())
}

/// Q = f^{3/2} / v.
pub fn iso_quotient(f: f64, v: f64) -> Result<f64> {
    if v <= 0.0 {
        return Err(Error::Precondition(format!("volume must be positive, got {v}")));
    }
    if f < 0.0 {
        return Err(Error::Precondition(format!("measure must be nonnegative, got {f}")));
    }
    Ok(f.powf(1.5) / v)
}

/// A hypersurface in graph form v = F(z, u) over a rectangular base.
pub struct GraphSurface {
    pub field: GraphField,
    pub base: BaseBox,
    pub label: String,
}

impl GraphSurface {
    pub fn new(field: GraphField, base: BaseBox, label: impl Into<String>) -> Self {
        GraphSurface { field, base, label: label.into() }
    }

    /// The Heisenberg graph v = |z|^2.
    pub fn heisenberg(base: BaseBox) -> Self {
        GraphSurface::new(
            GraphField::analytic(|z, zb, _u| z * zb),
            base,
            "heisenberg",
        )
    }

    /// Selects the branch of an implicit +-sqrt graph pair with mu > 0
    /// at the base center; errors if neither branch qualifies.
    pub fn from_branches<M>(make: M, base: BaseBox, label: impl Into<String>) -> Result<Self>
    where
        M: Fn(f64) -> GraphField,
    {
        let (zc, uc) = base.center();
        let label = label.into();
        for sign in [1.0, -1.0] {
            let field = make(sign);
            if let Ok(jet) = field.jet_at(zc, uc) {
                if graph_mu(&jet) > 0.0 {
                    return Ok(GraphSurface::new(field, base, label));
                }
            }
        }
        Err(Error::NoPseudoconvexBranch)
    }

    /// Graph branch of the sphere |z|^2 + u^2 + v^2 = R^2.
    pub fn sphere_branch(radius: f64, base: BaseBox) -> Result<Self> {
        let r2 = radius * radius;
        GraphSurface::from_branches(
            move |sign| {
                let s = C::new(sign, 0.0);
                GraphField::analytic(move |z, zb, u| {
                    let arg = crate::calculus::GraphJet::constant_re(r2) - z * zb - u * u;
                    arg.sqrt() * s
                })
                .with_domain(move |z, u| r2 - z.norm_sqr() - u * u > 1e-12)
            },
            base,
            format!("sphere-branch(R={radius})"),
        )
    }

    /// Graph branch of the hyperboloid |z|^2 - |w|^2 = R^2.
    pub fn hyperboloid_branch(radius: f64, base: BaseBox) -> Result<Self> {
        let r2 = radius * radius;
        GraphSurface::from_branches(
            move |sign| {
                let s = C::new(sign, 0.0);
                GraphField::analytic(move |z, zb, u| {
                    let arg = z * zb - u * u - crate::calculus::GraphJet::constant_re(r2);
                    arg.sqrt() * s
                })
                .with_domain(move |z, u| z.norm_sqr() - u * u - r2 > 1e-12)
            },
            base,
            format!("hyperboloid-branch(R={radius})"),
        )
    }
}

/// F(Z) = 2^{2/3} Int_B mu(F)^{1/3} dV; errors on any node where mu <= 0,
/// naming the node.
pub fn fefferman_graph(surface: &GraphSurface, grid: &BoxGrid) -> Result<f64> {
    let c = 2f64.powf(2.0 / 3.0);
    let v = grid.try_integrate(|n| {
        let jet = surface.field.jet_at(n.z, n.u)?;
        let mu = graph_mu(&jet);
        if mu <= 0.0 {
            return Err(Error::NotPseudoconvex(format!(
                "mu = {mu:.6e} at node (z={}, u={})",
                n.z, n.u
            )));
        }
        Ok(mu.cbrt())
    })?;
    Ok(c * v)
}

/// Signed variant integrating the real cube root of mu without the
/// positivity gate. Used by the variation oracle on stationary graphs
/// whose natural orientation has mu < 0 (the fefferman_graph contract
/// stays strict).
pub fn fefferman_graph_signed(surface: &GraphSurface, grid: &BoxGrid) -> Result<f64> {
    let c = 2f64.powf(2.0 / 3.0);
    let v = grid.try_integrate(|n| {
        let jet = surface.field.jet_at(n.z, n.u)?;
        Ok(graph_mu(&jet).cbrt())
    })?;
    Ok(c * v)
}

/// Euclidean surface area of the graph: Int sqrt(1 + 4|F_z|^2 + F_u^2).
pub fn graph_area(surface: &GraphSurface, grid: &BoxGrid) -> Result<f64> {
    grid.try_integrate(|n| {
        let jet = surface.field.jet_at(n.z, n.u)?;
        Ok((1.0 + 4.0 * jet.fz.norm_sqr() + jet.fu * jet.fu).sqrt())
    })
}

/// A circular surface: radial with T G = 0, so the Monge-Ampere bracket
/// collapses to 1 + (L Lbar + Lbar L) G / 2.
pub struct CircularSurface(pub RadialSurface);

impl CircularSurface {
    pub fn new(surface: RadialSurface) -> Result<Self> {
        if !surface.t_vanishes_exactly() {
            return Err(Error::Precondition(
                "circular surface requires T G = 0 identically".into(),
            ));
        }
        Ok(CircularSurface(surface))
    }

    /// G = eps * g0 for a real circular polynomial (every monomial has
    /// equal holomorphic and antiholomorphic degree).
    pub fn poly_scaled(g0: &SpherePolynomial, eps: f64) -> Result<Self> {
        CircularSurface::new(RadialSurface::poly_scaled(g0, eps)?)
    }

    /// The C-linear image |alpha z + beta w|^2 + |gamma z + delta w|^2 = 1.
    pub fn linear_image(alpha: C, beta: C, gamma: C, delta: C) -> Result<Self> {
        let det = alpha * delta - beta * gamma;
        if det.norm() < 1e-12 {
            return Err(Error::Precondition("linear image requires an invertible matrix".into()));
        }
        let row = |a: C, b: C| {
            let az = SpherePolynomial::var_z().scale(&qc_from_c(a));
            let bw = SpherePolynomial::var_w().scale(&qc_from_c(b));
            let lin = az.add(&bw);
            lin.abs_sq()
        };
        let p = row(alpha, beta).add(&row(gamma, delta));
        Ok(CircularSurface(RadialSurface::log_poly(
            &p,
            format!("linear-image({alpha},{beta};{gamma},{delta})"),
        )?))
    }
}

fn qc_from_c(c: C) -> crate::exact::Qc {
    crate::exact::Qc::new(rat_from_f64(c.re), rat_from_f64(c.im))
}

/// Measure report for one surface at one grid resolution.
#[derive(Clone, Debug, Serialize)]
pub struct MeasureReport {
    pub surface: String,
    pub grid: Vec<usize>,
    pub fefferman: f64,
    pub volume: f64,
    pub quotient: f64,
    /// Max relative change of (F, V, Q) under one grid refinement.
    pub err_est: f64,
}

fn rel_diff(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(1e-300)
}

/// F, V, Q of a radial surface with a one-refinement error estimate:
/// the values reported are from the refined grid, the estimate is the
/// relative change from the coarse grid.
pub fn measure_radial(surface: &RadialSurface, dims: [usize; 3]) -> Result<MeasureReport> {
    let coarse = SphereGrid::new(dims[0], dims[1], dims[2]);
    let fine = coarse.refined();
    let f0 = fefferman_radial(surface, &coarse)?;
    let v0 = volume_radial(surface, &coarse);
    let f1 = fefferman_radial(surface, &fine)?;
    let v1 = volume_radial(surface, &fine);
    let q0 = iso_quotient(f0, v0)?;
    let q1 = iso_quotient(f1, v1)?;
    Ok(MeasureReport {
        surface: surface.label.clone(),
        grid: fine.dims(),
        fefferman: f1,
        volume: v1,
        quotient: q1,
        err_est: rel_diff(f0, f1).max(rel_diff(v0, v1)).max(rel_diff(q0, q1)),
    })
}

/// Report plus CP^1 curvature data for a circular surface.
#[derive(Clone, Debug, Serialize)]
pub struct CircularReport {
    pub report: MeasureReport,
    pub curvature_min: f64,
    pub curvature_max: f64,
    /// Lifted Gauss-Bonnet integral (2/pi) Int kappa e^{-2G}; equals
    /// 4 pi for every circular surface.
    pub gauss_bonnet: f64,
}

/// Measures of a circular surface together with the curvature
/// kappa = e^{2G}(1 + (L Lbar + Lbar L)G/2) of the induced CP^1 metric
/// and its Gauss-Bonnet integral.
pub fn circular_measures(surface: &CircularSurface, dims: [usize; 3]) -> Result<CircularReport> {
    let run = |grid: &SphereGrid| -> Result<(f64, f64, f64, f64, f64)> {
        let mut cmin = f64::INFINITY;
        let mut cmax = f64::NEG_INFINITY;
        // Curvature min/max scanned sequentially (cheap) for determinism.
        for n in &grid.nodes {
            let td = surface.0.tangential_at(n.z, n.w);
            let kappa = (2.0 * td.g).exp() * (1.0 + td.llbg.re);
            if kappa <= 0.0 {
                return Err(Error::NotPseudoconvex(format!(
                    "CP^1 curvature {kappa:.3e} at (z={}, w={})",
                    n.z, n.w
                )));
            }
            cmin = cmin.min(kappa);
            cmax = cmax.max(kappa);
        }
        let f = fefferman_radial(&surface.0, grid)?;
        let v = volume_radial(&surface.0, grid);
        // kappa e^{-2G} = 1 + (L Lbar + Lbar L) G / 2.
        let gb = (2.0 / std::f64::consts::PI)
            * grid.integrate(|n| {
                let td = surface.0.tangential_at(n.z, n.w);
                1.0 + td.llbg.re
            });
        Ok((f, v, cmin, cmax, gb))
    };
    let coarse = SphereGrid::new(dims[0], dims[1], dims[2]);
    let fine = coarse.refined();
    let (f0, v0, _, _, _) = run(&coarse)?;
    let (f1, v1, cmin, cmax, gb) = run(&fine)?;
    let q0 = iso_quotient(f0, v0)?;
    let q1 = iso_quotient(f1, v1)?;
    Ok(CircularReport {
        report: MeasureReport {
            surface: surface.0.label.clone(),
            grid: fine.dims(),
            fefferman: f1,
            volume: v1,
            quotient: q1,
            err_est: rel_diff(f0, f1).max(rel_diff(v0, v1)).max(rel_diff(q0, q1)),
        },
        curvature_min: cmin,
        curvature_max: cmax,
        gauss_bonnet: gb,
    })
}

/// Tagged union of the surface representations the variation module
/// perturbs.
pub enum SurfaceModel {
    Graph(GraphSurface),
    Radial(RadialSurface),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Functional {
    Fefferman,
    Volume,
    Quotient,
}

/// Grid resolutions used when evaluating functionals on surface models.
#[derive(Clone, Copy, Debug)]
pub struct GridSpec {
    pub sphere: [usize; 3],
    pub base_box: [usize; 3],
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec { sphere: [24, 24, 24], base_box: [24, 24, 24] }
    }
}

/// Evaluate one functional on a surface model. Graph models support the
/// Fefferman measure only (signed density; see fefferman_graph_signed).
pub fn eval_functional(model: &SurfaceModel, functional: Functional, spec: GridSpec) -> Result<f64> {
    match model {
        SurfaceModel::Graph(gs) => match functional {
            Functional::Fefferman => {
                let grid = BoxGrid::new(gs.base, spec.base_box);
                fefferman_graph_signed(gs, &grid)
            }
            _ => Err(Error::Unsupported(
                "volume/quotient are defined for closed radial surfaces only".into(),
            )),
        },
        SurfaceModel::Radial(rs) => {
            let grid = SphereGrid::new(spec.sphere[0], spec.sphere[1], spec.sphere[2]);
            match functional {
                Functional::Fefferman => fefferman_radial(rs, &grid),
                Functional::Volume => Ok(volume_radial(rs, &grid)),
                Functional::Quotient => {
                    let f = fefferman_radial(rs, &grid)?;
                    iso_quotient(f, volume_radial(rs, &grid))
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, Qc};
    use crate::sphere::{Monomial, SpherePolynomial};
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    #[test]
    fn sphere_constants() {
        let s = RadialSurface::sphere(1.0);
        let grid = SphereGrid::new(16, 8, 8);
        let f = fefferman_radial(&s, &grid).unwrap();
        let v = volume_radial(&s, &grid);
        assert_relative_eq!(f, 2f64.powf(4.0 / 3.0) * PI * PI, max_relative = 1e-10);
        assert_relative_eq!(v, PI * PI / 2.0, max_relative = 1e-12);
        assert_relative_eq!(iso_quotient(f, v).unwrap(), 8.0 * PI, max_relative = 1e-10);
    }

    #[test]
    fn constant_potential_dilation() {
        // G = c: sphere of radius e^{-c/2}; F = 2^{4/3} pi^2 e^{-4c/3}.
        for radius in [0.5, 2.0] {
            let s = RadialSurface::sphere(radius);
            let grid = SphereGrid::new(12, 8, 8);
            let f = fefferman_radial(&s, &grid).unwrap();
            let v = volume_radial(&s, &grid);
            assert_relative_eq!(
                f,
                2f64.powf(4.0 / 3.0) * PI * PI * radius.powf(8.0 / 3.0),
                max_relative = 1e-10
            );
            assert_relative_eq!(v, PI * PI / 2.0 * radius.powi(4), max_relative = 1e-12);
            assert_relative_eq!(iso_quotient(f, v).unwrap(), 8.0 * PI, max_relative = 1e-10);
        }
    }

    #[test]
    fn heisenberg_graph_measure() {
        let base = BaseBox::new((-1.0, 1.0), (-0.5, 0.5), (0.0, 2.0));
        let s = GraphSurface::heisenberg(base);
        let grid = BoxGrid::new(base, [6, 6, 6]);
        let f = fefferman_graph(&s, &grid).unwrap();
        assert_relative_eq!(f, 2f64.powf(2.0 / 3.0) * base.volume(), max_relative = 1e-12);
    }

    #[test]
    fn quotient_edge_cases() {
        assert_eq!(iso_quotient(0.0, 1.0).unwrap(), 0.0);
        assert!(iso_quotient(1.0, 0.0).is_err());
        assert!(iso_quotient(-1.0, 1.0).is_err());
        // Dilation invariance of the quotient by exponent cancellation.
        let (f, v) = (3.7, 1.9);
        let s = 1.7f64;
        let q1 = iso_quotient(f, v).unwrap();
        let q2 = iso_quotient(f * s.powf(8.0 / 3.0), v * s.powi(4)).unwrap();
        assert_relative_eq!(q1, q2, max_relative = 1e-12);
    }

    #[test]
    fn circular_sphere_is_exact_equality() {
        let g0 = SpherePolynomial::zero();
        let c = CircularSurface::poly_scaled(&g0, 1.0).unwrap();
        let rep = circular_measures(&c, [10, 6, 6]).unwrap();
        assert_relative_eq!(rep.report.quotient, 8.0 * PI, max_relative = 1e-10);
        assert_relative_eq!(rep.gauss_bonnet, 4.0 * PI, max_relative = 1e-10);
        assert_relative_eq!(rep.curvature_min, 1.0, max_relative = 1e-12);
    }

    #[test]
    fn circular_rejects_noncircular_poly() {
        // z + zb has T != 0.
        let g0 = SpherePolynomial::var_z().add(&SpherePolynomial::var_zb());
        assert!(CircularSurface::poly_scaled(&g0, 0.1).is_err());
    }

    #[test]
    fn circular_linear_image_attains_8pi() {
        let c = CircularSurface::linear_image(
            C::new(1.1, 0.2),
            C::new(0.3, -0.4),
            C::new(0.0, 0.1),
            C::new(0.9, 0.0),
        )
        .unwrap();
        let rep = circular_measures(&c, [16, 12, 12]).unwrap();
        assert_relative_eq!(rep.report.quotient, 8.0 * PI, max_relative = 1e-8);
        assert_relative_eq!(rep.gauss_bonnet, 4.0 * PI, max_relative = 1e-8);
    }

    #[test]
    fn circular_perturbation_strictly_below() {
        // 0.3 (z^2 zb^2 - w^2 wb^2) restricted to the sphere.
        let m1 = SpherePolynomial::monomial(Monomial::new(2, 0, 2, 0), Qc::from_rat(rat(3, 10)));
        let m2 = SpherePolynomial::monomial(Monomial::new(0, 2, 0, 2), Qc::from_rat(rat(-3, 10)));
        let g0 = m1.add(&m2);
        let c = CircularSurface::poly_scaled(&g0, 1.0).unwrap();
        let rep = circular_measures(&c, [16, 12, 12]).unwrap();
        assert!(rep.report.quotient < 8.0 * PI - 1e-3);
        assert_relative_eq!(rep.gauss_bonnet, 4.0 * PI, max_relative = 1e-8);
    }

    #[test]
    fn unitary_rotation_invariance() {
        let g0 = crate::sphere::mode_polynomial(crate::sphere::ModeKind::A, 2, 1);
        let s = RadialSurface::poly_scaled(&g0, 0.05).unwrap();
        let grid = SphereGrid::new(20, 16, 16);
        let f0 = fefferman_radial(&s, &grid).unwrap();
        let v0 = volume_radial(&s, &grid);
        let phi = 0.731f64;
        let a = C::from_polar(phi.cos(), 0.4);
        let b = C::from_polar(phi.sin(), -1.1);
        let s2 = RadialSurface::poly_scaled(&g0, 0.05)
            .unwrap()
            .rotated(a, b)
            .unwrap();
        let f1 = fefferman_radial(&s2, &grid).unwrap();
        let v1 = volume_radial(&s2, &grid);
        assert_relative_eq!(f0, f1, max_relative = 1e-8);
        assert_relative_eq!(v0, v1, max_relative = 1e-8);
    }

    #[test]
    fn measure_report_refinement() {
        let g0 = crate::sphere::mode_polynomial(crate::sphere::ModeKind::A, 2, 0);
        let s = RadialSurface::poly_scaled(&g0, 0.02).unwrap();
        let rep = measure_radial(&s, [12, 10, 10]).unwrap();
        assert!(rep.err_est < 1e-6, "err_est = {}", rep.err_est);
        assert!(rep.quotient > 8.0 * PI, "mode A increases Q");
    }
}
