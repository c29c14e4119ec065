//! Pointwise differential calculus: second-order jets of real scalar
//! fields in graph coordinates (z, u) or ambient coordinates (z, w),
//! the bordered-Hessian determinant M(rho), and the graph density
//! mu(F). Strong pseudoconvexity at a point is mu > 0 (equivalently
//! M > 0), and the two are tied by mu(F) = 4 M(-v + F).

pub mod jet;

pub use jet::{AmbientJet, GraphJet};

use crate::error::{Error, Result};
use num_complex::Complex64;
use std::sync::Arc;

type C = Complex64;

/// Relative tolerance below which an imaginary residue is rounding, not
/// a malformed jet.
pub const IM_RESIDUE_TOL: f64 = 1e-12;

/// A point (z, w) in C^2.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AmbientPoint {
    pub z: C,
    pub w: C,
}

impl AmbientPoint {
    pub fn new(z: C, w: C) -> Self {
        AmbientPoint { z, w }
    }

    pub fn is_finite(&self) -> bool {
        self.z.is_finite() && self.w.is_finite()
    }

    /// Real coordinates (u, v) of w = u + iv.
    pub fn uv(&self) -> (f64, f64) {
        (self.w.re, self.w.im)
    }
}

/// Second-order jet of a real scalar field on C^2, carrying the gradient
/// and the complex-Hessian block. For a real field the antiholomorphic
/// entries are conjugates of the holomorphic ones; `check_pairing`
/// enforces this.
#[derive(Clone, Copy, Debug)]
pub struct Jet2Ambient {
    pub val: f64,
    pub dz: C,
    pub dw: C,
    pub dzb: C,
    pub dwb: C,
    pub dzzb: C,
    pub dzwb: C,
    pub dwzb: C,
    pub dwwb: C,
}

impl Jet2Ambient {
    pub fn from_jet(j: AmbientJet) -> Result<Self> {
        let out = Jet2Ambient {
            val: j.val.re,
            dz: j.dz,
            dw: j.dw,
            dzb: j.dzb,
            dwb: j.dwb,
            dzzb: j.dzzb,
            dzwb: j.dzwb,
            dwzb: j.dwzb,
            dwwb: j.dwwb,
        };
        out.check_pairing()?;
        Ok(out)
    }

    /// Conjugate pairing for a real-valued field: dzb = conj dz,
    /// dwb = conj dw, Hessian block Hermitian, diagonal entries real.
    pub fn check_pairing(&self) -> Result<()> {
        let scale = 1.0
            + self.dz.norm()
            + self.dw.norm()
            + self.dzzb.norm()
            + self.dwwb.norm()
            + self.dzwb.norm();
        let bad = |r: f64| r > IM_RESIDUE_TOL * scale;
        if bad((self.dzb - self.dz.conj()).norm())
            || bad((self.dwb - self.dw.conj()).norm())
            || bad((self.dwzb - self.dzwb.conj()).norm())
            || bad(self.dzzb.im.abs())
            || bad(self.dwwb.im.abs())
        {
            return Err(Error::MalformedJet(
                "conjugate pairing violated beyond tolerance".into(),
            ));
        }
        Ok(())
    }
}

/// Second-order jet of a real graph function F(z, u). The conjugate
/// entries F_zb, F_zbu are implied (`fz.conj()`, `fzu.conj()`); F,
/// F_u, F_zzb, F_uu are real.
#[derive(Clone, Copy, Debug)]
pub struct Jet2Graph {
    pub f: f64,
    pub fz: C,
    pub fu: f64,
    pub fzzb: f64,
    pub fzu: C,
    pub fuu: f64,
}

impl Jet2Graph {
    pub fn fzb(&self) -> C {
        self.fz.conj()
    }

    pub fn fzbu(&self) -> C {
        self.fzu.conj()
    }

    pub fn from_jet(j: GraphJet) -> Result<Self> {
        let scale = 1.0 + j.val.norm() + j.dz.norm() + j.du.norm() + j.dzzb.norm() + j.duu.norm();
        let bad = |r: f64| r > IM_RESIDUE_TOL * scale;
        if bad(j.val.im.abs())
            || bad((j.dzb - j.dz.conj()).norm())
            || bad(j.du.im.abs())
            || bad(j.dzzb.im.abs())
            || bad((j.dzbu - j.dzu.conj()).norm())
            || bad(j.duu.im.abs())
        {
            return Err(Error::MalformedJet(
                "jet of a graph field is not conjugate-paired".into(),
            ));
        }
        Ok(Jet2Graph {
            f: j.val.re,
            fz: j.dz,
            fu: j.du.re,
            fzzb: j.dzzb.re,
            fzu: j.dzu,
            fuu: j.duu.re,
        })
    }

    pub fn is_finite(&self) -> bool {
        self.f.is_finite()
            && self.fz.is_finite()
            && self.fu.is_finite()
            && self.fzzb.is_finite()
            && self.fzu.is_finite()
            && self.fuu.is_finite()
    }
}

/// The bordered-Hessian Monge-Ampere determinant
/// M(rho) = -det [[0, rho_z, rho_w], [rho_zb, H], [rho_wb, H]] with the
/// complex-Hessian block arranged so that the holomorphic index runs
/// along the border row. Expanded:
/// M = |rho_z|^2 rho_wwb + |rho_w|^2 rho_zzb
///     - rho_z rho_wb rho_wzb - rho_w rho_zb rho_zwb.
pub fn bordered_hessian_m(jet: &Jet2Ambient) -> Result<f64> {
    jet.check_pairing()?;
    let m = jet.dz * jet.dzb * jet.dwwb + jet.dw * jet.dwb * jet.dzzb
        - jet.dz * jet.dwb * jet.dwzb
        - jet.dw * jet.dzb * jet.dzwb;
    let scale = 1.0 + m.norm();
    if m.im.abs() > IM_RESIDUE_TOL * scale {
        return Err(Error::MalformedJet(format!(
            "bordered Hessian has imaginary residue {:.3e}",
            m.im
        )));
    }
    Ok(m.re)
}

/// The graph-form density
/// mu(F) = F_zzb (F_u^2 + 1) - F_zu (F_u + i) F_zb
///         - F_zbu (F_u - i) F_z + F_uu |F_z|^2.
/// Strong pseudoconvexity at the point is mu > 0; negative values are
/// legal output and flagged by callers.
pub fn graph_mu(jet: &Jet2Graph) -> f64 {
    let i = C::new(0.0, 1.0);
    let fu = C::new(jet.fu, 0.0);
    let m = jet.fzzb * (jet.fu * jet.fu + 1.0)
        - (jet.fzu * (fu + i) * jet.fzb()
            + jet.fzbu() * (fu - i) * jet.fz)
            .re
        + jet.fuu * jet.fz.norm_sqr();
    m
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum DerivMode {
    Analytic,
    FiniteDifference { h: f64 },
}

/// Default central-difference step: cbrt(machine epsilon), scaled by
/// coordinate magnitude at the evaluation point.
pub fn default_fd_step(coord_scale: f64) -> f64 {
    f64::EPSILON.cbrt() * coord_scale.abs().max(1.0)
}

type GraphJetFn = dyn Fn(GraphJet, GraphJet, GraphJet) -> GraphJet + Send + Sync;
type GraphValFn = dyn Fn(C, f64) -> f64 + Send + Sync;
type GraphDomainFn = dyn Fn(C, f64) -> bool + Send + Sync;

/// A real scalar field F(z, u) on C x R with a jet evaluation rule.
///
/// Analytic mode builds the jet by running a closure over seeded jet
/// variables; finite-difference mode applies nested central stencils of
/// step h to a plain value closure.
#[derive(Clone)]
pub struct GraphField {
    jet_rule: Option<Arc<GraphJetFn>>,
    value: Arc<GraphValFn>,
    domain: Option<Arc<GraphDomainFn>>,
    pub mode: DerivMode,
}

impl GraphField {
    /// Analytic field: `rule(z, zb, u)` combines the seeded jets.
    pub fn analytic<F>(rule: F) -> Self
    where
        F: Fn(GraphJet, GraphJet, GraphJet) -> GraphJet + Send + Sync + 'static,
    {
        let rule = Arc::new(rule);
        let r2 = rule.clone();
        GraphField {
            jet_rule: Some(rule),
            value: Arc::new(move |z, u| {
                r2(GraphJet::var_z(z), GraphJet::var_zb(z), GraphJet::var_u(u)).val.re
            }),
            domain: None,
            mode: DerivMode::Analytic,
        }
    }

    /// Finite-difference field over a plain value closure.
    pub fn finite_difference<F>(value: F, h: f64) -> Self
    where
        F: Fn(C, f64) -> f64 + Send + Sync + 'static,
    {
        GraphField {
            jet_rule: None,
            value: Arc::new(value),
            domain: None,
            mode: DerivMode::FiniteDifference { h },
        }
    }

    /// Same field, switched to finite differences (for mode cross-checks).
    pub fn with_fd_mode(&self, h: f64) -> Self {
        GraphField {
            jet_rule: self.jet_rule.clone(),
            value: self.value.clone(),
            domain: self.domain.clone(),
            mode: DerivMode::FiniteDifference { h },
        }
    }

    pub fn with_domain<D>(mut self, domain: D) -> Self
    where
        D: Fn(C, f64) -> bool + Send + Sync + 'static,
    {
        self.domain = Some(Arc::new(domain));
        self
    }

    pub fn value_at(&self, z: C, u: f64) -> f64 {
        (self.value)(z, u)
    }

    fn in_domain(&self, z: C, u: f64) -> bool {
        self.domain.as_ref().map_or(true, |d| d(z, u))
    }

    /// The second-order jet at (z, u); see the module doc for the modes.
    pub fn jet_at(&self, z: C, u: f64) -> Result<Jet2Graph> {
        if !self.in_domain(z, u) {
            return Err(Error::OutsideDomain(format!("(z={z}, u={u})")));
        }
        let jet = match self.mode {
            DerivMode::Analytic => {
                let rule = self
                    .jet_rule
                    .as_ref()
                    .expect("analytic mode requires a jet rule");
                Jet2Graph::from_jet(rule(
                    GraphJet::var_z(z),
                    GraphJet::var_zb(z),
                    GraphJet::var_u(u),
                ))?
            }
            DerivMode::FiniteDifference { h } => self.fd_jet(z, u, h)?,
        };
        if !jet.is_finite() {
            return Err(Error::NonFiniteDerivative(format!("(z={z}, u={u})")));
        }
        Ok(jet)
    }

    fn fd_jet(&self, z: C, u: f64, h: f64) -> Result<Jet2Graph> {
        // FD mode requires a 2h-neighborhood inside the domain.
        for (dz, du) in [
            (C::new(2.0 * h, 0.0), 0.0),
            (C::new(-2.0 * h, 0.0), 0.0),
            (C::new(0.0, 2.0 * h), 0.0),
            (C::new(0.0, -2.0 * h), 0.0),
            (C::ZERO, 2.0 * h),
            (C::ZERO, -2.0 * h),
        ] {
            if !self.in_domain(z + dz, u + du) {
                return Err(Error::OutsideDomain(format!(
                    "finite-difference stencil leaves the domain near (z={z}, u={u})"
                )));
            }
        }
        let f = |zz: C, uu: f64| (self.value)(zz, uu);
        let ex = C::new(h, 0.0);
        let ey = C::new(0.0, h);
        let v = f(z, u);
        let dx = (f(z + ex, u) - f(z - ex, u)) / (2.0 * h);
        let dy = (f(z + ey, u) - f(z - ey, u)) / (2.0 * h);
        let du_ = (f(z, u + h) - f(z, u - h)) / (2.0 * h);
        let dxx = (f(z + ex, u) - 2.0 * v + f(z - ex, u)) / (h * h);
        let dyy = (f(z + ey, u) - 2.0 * v + f(z - ey, u)) / (h * h);
        let duu = (f(z, u + h) - 2.0 * v + f(z, u - h)) / (h * h);
        let dxu = (f(z + ex, u + h) - f(z + ex, u - h) - f(z - ex, u + h) + f(z - ex, u - h))
            / (4.0 * h * h);
        let dyu = (f(z + ey, u + h) - f(z + ey, u - h) - f(z - ey, u + h) + f(z - ey, u - h))
            / (4.0 * h * h);
        let jet = Jet2Graph {
            f: v,
            fz: C::new(dx, -dy) * 0.5,
            fu: du_,
            fzzb: 0.25 * (dxx + dyy),
            fzu: C::new(dxu, -dyu) * 0.5,
            fuu: duu,
        };
        Ok(jet)
    }
}

type AmbientJetFn = dyn Fn(AmbientJet, AmbientJet, AmbientJet, AmbientJet) -> AmbientJet + Send + Sync;
type AmbientValFn = dyn Fn(C, C) -> f64 + Send + Sync;

/// A real scalar field rho(z, w) on C^2 with a jet evaluation rule.
#[derive(Clone)]
pub struct AmbientField {
    jet_rule: Option<Arc<AmbientJetFn>>,
    value: Arc<AmbientValFn>,
    pub mode: DerivMode,
}

impl AmbientField {
    /// Analytic field: `rule(z, w, zb, wb)` combines the seeded jets.
    pub fn analytic<F>(rule: F) -> Self
    where
        F: Fn(AmbientJet, AmbientJet, AmbientJet, AmbientJet) -> AmbientJet
            + Send
            + Sync
            + 'static,
    {
        let rule = Arc::new(rule);
        let r2 = rule.clone();
        AmbientField {
            jet_rule: Some(rule),
            value: Arc::new(move |z, w| {
                r2(
                    AmbientJet::var_z(z),
                    AmbientJet::var_w(w),
                    AmbientJet::var_zb(z),
                    AmbientJet::var_wb(w),
                )
                .val
                .re
            }),
            mode: DerivMode::Analytic,
        }
    }

    pub fn finite_difference<F>(value: F, h: f64) -> Self
    where
        F: Fn(C, C) -> f64 + Send + Sync + 'static,
    {
        AmbientField {
            jet_rule: None,
            value: Arc::new(value),
            mode: DerivMode::FiniteDifference { h },
        }
    }

    pub fn with_fd_mode(&self, h: f64) -> Self {
        AmbientField {
            jet_rule: self.jet_rule.clone(),
            value: self.value.clone(),
            mode: DerivMode::FiniteDifference { h },
        }
    }

    pub fn value_at(&self, p: AmbientPoint) -> f64 {
        (self.value)(p.z, p.w)
    }

    pub fn jet_at(&self, p: AmbientPoint) -> Result<Jet2Ambient> {
        if !p.is_finite() {
            return Err(Error::OutsideDomain("non-finite ambient point".into()));
        }
        match self.mode {
            DerivMode::Analytic => {
                let rule = self
                    .jet_rule
                    .as_ref()
                    .expect("analytic mode requires a jet rule");
                Jet2Ambient::from_jet(rule(
                    AmbientJet::var_z(p.z),
                    AmbientJet::var_w(p.w),
                    AmbientJet::var_zb(p.z),
                    AmbientJet::var_wb(p.w),
                ))
            }
            DerivMode::FiniteDifference { h } => self.fd_jet(p.z, p.w, h),
        }
    }

    fn fd_jet(&self, z: C, w: C, h: f64) -> Result<Jet2Ambient> {
        let f = |zz: C, ww: C| (self.value)(zz, ww);
        let x1 = C::new(h, 0.0);
        let y1 = C::new(0.0, h);
        let v = f(z, w);
        // First derivatives.
        let dzx = (f(z + x1, w) - f(z - x1, w)) / (2.0 * h);
        let dzy = (f(z + y1, w) - f(z - y1, w)) / (2.0 * h);
        let dwx = (f(z, w + x1) - f(z, w - x1)) / (2.0 * h);
        let dwy = (f(z, w + y1) - f(z, w - y1)) / (2.0 * h);
        let dz = C::new(dzx, -dzy) * 0.5;
        let dw = C::new(dwx, -dwy) * 0.5;
        // Pure second derivatives for the diagonal Hessian entries.
        let dzxx = (f(z + x1, w) - 2.0 * v + f(z - x1, w)) / (h * h);
        let dzyy = (f(z + y1, w) - 2.0 * v + f(z - y1, w)) / (h * h);
        let dwxx = (f(z, w + x1) - 2.0 * v + f(z, w - x1)) / (h * h);
        let dwyy = (f(z, w + y1) - 2.0 * v + f(z, w - y1)) / (h * h);
        // Mixed z-w second derivatives.
        let mixed = |ez: C, ew: C| {
            (f(z + ez, w + ew) - f(z + ez, w - ew) - f(z - ez, w + ew) + f(z - ez, w - ew))
                / (4.0 * h * h)
        };
        let dxx = mixed(x1, x1);
        let dxy = mixed(x1, y1);
        let dyx = mixed(y1, x1);
        let dyy = mixed(y1, y1);
        // d/dz d/dwb = ((dxx + dyy) + i (dxy - dyx)) / 4, and d/dw d/dzb
        // is its Hermitian partner.
        let dzwb = C::new(dxx + dyy, dxy - dyx) * 0.25;
        let dwzb = C::new(dxx + dyy, dyx - dxy) * 0.25;
        let jet = Jet2Ambient {
            val: v,
            dz,
            dw,
            dzb: dz.conj(),
            dwb: dw.conj(),
            dzzb: C::new(0.25 * (dzxx + dzyy), 0.0),
            dzwb,
            dwzb,
            dwwb: C::new(0.25 * (dwxx + dwyy), 0.0),
        };
        if !(jet.val.is_finite() && jet.dz.is_finite() && jet.dzwb.is_finite()) {
            return Err(Error::NonFiniteDerivative(format!("(z={z}, w={w})")));
        }
        Ok(jet)
    }
}

/// The defining function rho = -v + F(z, u) of the graph v = F(z, u),
/// as an ambient field (used for the mu = 4 M consistency route).
pub fn graph_defining_field(field: &GraphField) -> AmbientField {
    let f = field.clone();
    match f.mode {
        DerivMode::Analytic => {
            let inner = f;
            AmbientField::analytic(move |z, w, _zb, wb| {
                // v = (w - wb)/(2i); F enters through u = Re w.
                let v = (w - wb) * C::new(0.0, -0.5);
                -v + graph_jet_as_ambient(&inner, z.val, w.val.re)
            })
        }
        DerivMode::FiniteDifference { h } => {
            let inner = f;
            AmbientField::finite_difference(
                move |z, w| -w.im + inner.value_at(z, w.re),
                h,
            )
        }
    }
}

/// The ambient jet of F(z, u) under the substitution u = (w + wb)/2,
/// chain-ruled by hand (u_w = u_wb = 1/2, z passes straight through).
fn graph_jet_as_ambient(field: &GraphField, zc: C, uc: f64) -> AmbientJet {
    let rule = field
        .jet_rule
        .as_ref()
        .expect("analytic graph field required");
    let g = rule(
        GraphJet::var_z(zc),
        GraphJet::var_zb(zc),
        GraphJet::var_u(uc),
    );
    let half = C::new(0.5, 0.0);
    let quarter = C::new(0.25, 0.0);
    AmbientJet {
        val: g.val,
        dz: g.dz,
        dzb: g.dzb,
        dw: g.du * half,
        dwb: g.du * half,
        dzzb: g.dzzb,
        dzwb: g.dzu * half,
        dwzb: g.dzbu * half,
        dwwb: g.duu * quarter,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn heisenberg_graph() -> GraphField {
        GraphField::analytic(|z, zb, _u| z * zb)
    }

    #[test]
    fn m_on_unit_sphere() {
        // rho = |z|^2 + |w|^2 - 1 at (1, 0): M = 1.
        let rho = AmbientField::analytic(|z, w, zb, wb| {
            z * zb + w * wb - AmbientJet::constant_re(1.0)
        });
        let p = AmbientPoint::new(C::new(1.0, 0.0), C::ZERO);
        let m = bordered_hessian_m(&rho.jet_at(p).unwrap()).unwrap();
        assert_relative_eq!(m, 1.0, max_relative = 1e-14);
    }

    #[test]
    fn m_on_heisenberg_defining_function() {
        // rho = (i/2)(w - wb) + |z|^2 = -v + |z|^2: M = 1/4 everywhere.
        let rho = AmbientField::analytic(|z, w, zb, wb| {
            (w - wb) * C::new(0.0, 0.5) + z * zb
        });
        for (zz, ww) in [
            (C::new(0.3, -0.2), C::new(0.1, 0.4)),
            (C::new(-1.0, 2.0), C::new(0.0, 0.0)),
        ] {
            let m = bordered_hessian_m(&rho.jet_at(AmbientPoint::new(zz, ww)).unwrap()).unwrap();
            assert_relative_eq!(m, 0.25, max_relative = 1e-13);
        }
    }

    #[test]
    fn m_zero_gradient_row() {
        // Zero gradient forces M = 0 regardless of the Hessian.
        let jet = Jet2Ambient {
            val: 0.0,
            dz: C::ZERO,
            dw: C::ZERO,
            dzb: C::ZERO,
            dwb: C::ZERO,
            dzzb: C::new(2.0, 0.0),
            dzwb: C::new(0.5, 0.25),
            dwzb: C::new(0.5, -0.25),
            dwwb: C::new(3.0, 0.0),
        };
        assert_eq!(bordered_hessian_m(&jet).unwrap(), 0.0);
    }

    #[test]
    fn malformed_jet_rejected() {
        let jet = Jet2Ambient {
            val: 0.0,
            dz: C::new(1.0, 0.0),
            dw: C::ZERO,
            dzb: C::new(0.5, 0.0), // not conj(dz)
            dwb: C::ZERO,
            dzzb: C::new(1.0, 0.0),
            dzwb: C::ZERO,
            dwzb: C::ZERO,
            dwwb: C::new(1.0, 0.0),
        };
        assert!(bordered_hessian_m(&jet).is_err());
    }

    #[test]
    fn mu_heisenberg_is_one() {
        let f = heisenberg_graph();
        for (z, u) in [(C::new(0.5, 0.1), 0.0), (C::new(-2.0, 1.0), 3.0)] {
            let mu = graph_mu(&f.jet_at(z, u).unwrap());
            assert_relative_eq!(mu, 1.0, max_relative = 1e-14);
        }
    }

    #[test]
    fn mu_of_zz_plus_u2() {
        // F = |z|^2 + u^2: mu = 1 + 4u^2 + 2|z|^2.
        let f = GraphField::analytic(|z, zb, u| z * zb + u * u);
        for (z, u) in [(C::new(0.7, -0.3), 0.4), (C::new(0.0, 1.2), -0.9)] {
            let mu = graph_mu(&f.jet_at(z, u).unwrap());
            let expect = 1.0 + 4.0 * u * u + 2.0 * z.norm_sqr();
            assert_relative_eq!(mu, expect, max_relative = 1e-13);
        }
    }

    #[test]
    fn jet_of_linear_u() {
        let f = GraphField::analytic(|_z, _zb, u| u);
        let j = f.jet_at(C::new(0.3, 0.4), 1.7).unwrap();
        assert_eq!(j.fu, 1.0);
        assert_eq!(j.fz, C::ZERO);
        assert_eq!(j.fzzb, 0.0);
        assert_eq!(j.fuu, 0.0);
    }

    #[test]
    fn fd_jet_of_zzbar_quadratic_exact() {
        let f = GraphField::finite_difference(|z, _u| z.norm_sqr(), 1e-4);
        let j = f.jet_at(C::new(0.3, -0.5), 0.2).unwrap();
        assert!((j.fzzb - 1.0).abs() < 1e-8);
        assert!((j.fz - C::new(0.3, 0.5)).norm() < 1e-9);
    }

    #[test]
    fn fd_vs_analytic_on_cubic() {
        // F = Re(z^3): both modes agree to ~1e-7 at z = 1.
        let fa = GraphField::analytic(|z, zb, _u| {
            (z.powi(3) + zb.powi(3)) * C::new(0.5, 0.0)
        });
        let ff = fa.with_fd_mode(1e-5);
        let z = C::new(1.0, 0.0);
        let ja = fa.jet_at(z, 0.0).unwrap();
        let jf = ff.jet_at(z, 0.0).unwrap();
        assert_relative_eq!(ja.fz.re, 1.5, max_relative = 1e-13);
        assert!((ja.fz - jf.fz).norm() < 1e-7);
        assert!((ja.fzzb - jf.fzzb).abs() < 1e-5);
    }

    #[test]
    fn mu_equals_4m_heisenberg_everywhere() {
        let f = heisenberg_graph();
        let rho = graph_defining_field(&f);
        for (z, w) in [
            (C::new(0.2, 0.7), C::new(0.5, -0.1)),
            (C::new(-1.1, 0.3), C::new(2.0, 0.9)),
        ] {
            let mj = bordered_hessian_m(&rho.jet_at(AmbientPoint::new(z, w)).unwrap()).unwrap();
            let mu = graph_mu(&f.jet_at(z, w.re).unwrap());
            assert_relative_eq!(mu, 4.0 * mj, max_relative = 1e-12);
        }
    }

    #[test]
    fn domain_errors() {
        let f = GraphField::analytic(|z, zb, _u| z * zb)
            .with_domain(|z, _u| z.norm_sqr() < 1.0);
        assert!(f.jet_at(C::new(2.0, 0.0), 0.0).is_err());
        let g = GraphField::finite_difference(|z, _u| z.norm_sqr(), 1e-3)
            .with_domain(|z, _u| z.norm_sqr() < 1.0);
        // Stencil of radius 2h must stay inside.
        assert!(g.jet_at(C::new(0.9999, 0.0), 0.0).is_err());
        assert!(g.jet_at(C::new(0.5, 0.0), 0.0).is_ok());
    }
}
