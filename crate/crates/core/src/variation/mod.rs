//! First and second variation machinery: the flux form of the first
//! variation operator L1 (whose 3/8 multiple is the curvature invariant
//! kappa), the rigid-surface specialization, the Heisenberg second
//! variation form, the cube-simplification identity behind the
//! semi-global Heisenberg maximality bound, and a generic
//! epsilon-expansion fitting oracle for surface families.

use crate::calculus::{graph_mu, GraphField, GraphJet, Jet2Graph};
use crate::error::{Error, Result};
use crate::fit::{polyfit, PolyFit};
use crate::measures::{eval_functional, Functional, GridSpec, SurfaceModel};
use crate::quad::{BaseBox, BoxGrid};
use crate::sphere::SpherePolynomial;
use num_complex::Complex64;
use std::sync::Arc;

type C = Complex64;

const I: C = C::new(0.0, 1.0);

/// Smooth compactly supported bump: a product of per-axis profiles
/// exp(1 - 1/(1 - t^2)) on (-1, 1), scaled into a sub-box of the base.
/// All derivatives vanish at the support boundary.
#[derive(Clone, Debug)]
pub struct BumpField {
    pub base: BaseBox,
    pub center: [f64; 3],
    pub halfwidth: [f64; 3],
    pub amplitude: f64,
}

impl BumpField {
    /// Bump centered in the base with support shrunk by `margin`
    /// (relative, in (0, 1)) from each wall.
    pub fn centered(base: BaseBox, margin: f64, amplitude: f64) -> Result<Self> {
        if !(margin > 0.0 && margin < 1.0) {
            return Err(Error::OutOfRange("bump margin must lie in (0,1)".into()));
        }
        let (zc, uc) = base.center();
        let hw = [
            0.5 * (base.x.1 - base.x.0) * (1.0 - margin),
            0.5 * (base.y.1 - base.y.0) * (1.0 - margin),
            0.5 * (base.u.1 - base.u.0) * (1.0 - margin),
        ];
        BumpField::new(base, [zc.re, zc.im, uc], hw, amplitude)
    }

    pub fn new(
        base: BaseBox,
        center: [f64; 3],
        halfwidth: [f64; 3],
        amplitude: f64,
    ) -> Result<Self> {
        let inside = |lo: f64, hi: f64, c: f64, h: f64| c - h > lo && c + h < hi;
        if !(inside(base.x.0, base.x.1, center[0], halfwidth[0])
            && inside(base.y.0, base.y.1, center[1], halfwidth[1])
            && inside(base.u.0, base.u.1, center[2], halfwidth[2]))
        {
            return Err(Error::Precondition(
                "bump support touches the base boundary".into(),
            ));
        }
        if halfwidth.iter().any(|h| *h <= 0.0) {
            return Err(Error::OutOfRange("bump halfwidths must be positive".into()));
        }
        Ok(BumpField { base, center, halfwidth, amplitude })
    }

    pub fn scaled(&self, amplitude: f64) -> Self {
        BumpField { amplitude, ..self.clone() }
    }

    /// Analytic jet of the bump at (z, u).
    pub fn jet(&self, z: C, u: f64) -> GraphJet {
        let tx = (z.re - self.center[0]) / self.halfwidth[0];
        let ty = (z.im - self.center[1]) / self.halfwidth[1];
        let tu = (u - self.center[2]) / self.halfwidth[2];
        // Outside (or too close to) the support edge everything is zero.
        let cut = 1.0 - 1e-7;
        if tx.abs() >= cut || ty.abs() >= cut || tu.abs() >= cut {
            return GraphJet::ZERO;
        }
        let sx = 1.0 / self.halfwidth[0];
        let sy = 1.0 / self.halfwidth[1];
        let su = 1.0 / self.halfwidth[2];
        let jx = (GraphJet::var_x(z) - GraphJet::constant_re(self.center[0]))
            * C::new(sx, 0.0);
        let jy = (GraphJet::var_y(z) - GraphJet::constant_re(self.center[1]))
            * C::new(sy, 0.0);
        let ju = (GraphJet::var_u(u) - GraphJet::constant_re(self.center[2]))
            * C::new(su, 0.0);
        let b = bump1(jx) * bump1(jy) * bump1(ju);
        b * C::new(self.amplitude, 0.0)
    }

    pub fn value(&self, z: C, u: f64) -> f64 {
        self.jet(z, u).val.re
    }

    pub fn field(&self) -> GraphField {
        let b = self.clone();
        GraphField::analytic(move |zj, _zb, uj| b.jet(zj.val, uj.val.re))
    }

    /// Max of the zzbar second derivative over a scan grid.
    pub fn max_zzbar(&self, n: usize) -> f64 {
        let grid = BoxGrid::new(self.base, [n, n, n]);
        grid.nodes
            .iter()
            .map(|node| self.jet(node.z, node.u).dzzb.re)
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// Rescale the amplitude so the max of the zzbar derivative equals
    /// `cap` (keeping the sign of the current amplitude).
    pub fn scaled_to_zzbar_cap(&self, cap: f64, n: usize) -> Self {
        let unit = self.scaled(1.0);
        let m = unit.max_zzbar(n);
        self.scaled(self.amplitude.signum() * cap / m)
    }
}

/// exp(1 - 1/(1 - t^2)) as a jet operation.
fn bump1(t: GraphJet) -> GraphJet {
    let s = GraphJet::constant_re(1.0) - t * t;
    (GraphJet::constant_re(1.0) - s.recip()).exp()
}

/// The Heisenberg fields applied to a graph jet:
/// L = d/dz + i zbar d/du, Lbar = d/dzb - i z d/du, T = d/du.
/// L Lbar F from second-order jet data:
/// F_zzb - i F_u - i z F_zu + i zbar F_zbu + |z|^2 F_uu.
pub fn heis_llbar(jet: &Jet2Graph, z: C) -> C {
    C::new(jet.fzzb, 0.0) - I * jet.fu - I * z * jet.fzu + I * z.conj() * jet.fzbu()
        + z.norm_sqr() * jet.fuu
}

/// Lbar L F; differs from L Lbar F by the commutator -2i T F.
pub fn heis_lbarl(jet: &Jet2Graph, z: C) -> C {
    heis_llbar(jet, z) + 2.0 * I * jet.fu
}

/// The Heisenberg second variation form
/// -(1/9) Int ( |L Lbar F|^2 + 6 |T F|^2 ) dV
/// for a compactly supported bump; strictly negative for nonzero bumps.
pub fn heis_second_variation(bump: &BumpField, n: [usize; 3]) -> f64 {
    let grid = BoxGrid::new(bump.base, n);
    let v = grid.integrate(|node| {
        let j = bump.jet(node.z, node.u);
        let jet = Jet2Graph::from_jet(j).expect("bump jets are real");
        let llb = heis_llbar(&jet, node.z);
        llb.norm_sqr() + 6.0 * jet.fu * jet.fu
    });
    -v / 9.0
}

/// Both sides of the cube-simplification identity for F = |z|^2 + Ft:
/// Int mu(F) dV  =  Int ( 1 + (3 Ft_zzb - 1) Ft_u^2 ) dV.
pub fn cube_simp_check(bump: &BumpField, n: [usize; 3]) -> (f64, f64) {
    let grid = BoxGrid::new(bump.base, n);
    let lhs = grid.integrate(|node| {
        let f = GraphJet::var_z(node.z) * GraphJet::var_zb(node.z) + bump.jet(node.z, node.u);
        let jet = Jet2Graph::from_jet(f).expect("real jet");
        graph_mu(&jet)
    });
    let rhs = grid.integrate(|node| {
        let j = Jet2Graph::from_jet(bump.jet(node.z, node.u)).expect("real jet");
        1.0 + (3.0 * j.fzzb - 1.0) * j.fu * j.fu
    });
    (lhs, rhs)
}

/// mu^{-2/3} through the real cube root (valid for either sign of mu).
fn mu_pow_m23(mu: f64) -> f64 {
    let c = mu.cbrt();
    1.0 / (c * c)
}

/// The eleven flux expressions of the first-variation operator, from a
/// single jet. Index k corresponds to the k-th term of L1; the outer
/// derivative applied to each is fixed in `l1_graph_at`.
fn l1_inner(jet: &Jet2Graph) -> Result<[C; 11]> {
    let mu = graph_mu(jet);
    if mu <= 0.0 {
        return Err(Error::NotPseudoconvex(format!("mu = {mu:.3e} in L1 stencil")));
    }
    let w = C::new(mu_pow_m23(mu), 0.0);
    let fu = C::new(jet.fu, 0.0);
    let fzzb = C::new(jet.fzzb, 0.0);
    let fuu = C::new(jet.fuu, 0.0);
    Ok([
        2.0 * w * fu * fzzb,              // +d/du
        w * (fu * fu + 1.0),              // -d2/dz dzb
        w * jet.fzu * (fu + I),           // -d/dzb
        w * jet.fzu * jet.fzb(),          // -d/du
        w * (fu + I) * jet.fzb(),         // +d2/dz du
        w * jet.fzbu() * (fu - I),        // -d/dz
        w * jet.fzbu() * jet.fz,          // -d/du
        w * (fu - I) * jet.fz,            // +d2/dzb du
        w * fuu * jet.fz,                 // +d/dzb
        w * fuu * jet.fzb(),              // +d/dz
        w * jet.fz * jet.fzb(),           // -d2/du du
    ])
}

/// L1(F) at (z, u) with outer step h: the eleven inner expressions are
/// evaluated from analytic (or FD) jets of F, and the outer flux
/// derivatives are taken by central differences of step h.
fn l1_graph_at(field: &GraphField, z: C, u: f64, h: f64) -> Result<C> {
    let e = |zz: C, uu: f64| -> Result<[C; 11]> { l1_inner(&field.jet_at(zz, uu)?) };
    let ex = C::new(h, 0.0);
    let ey = C::new(0.0, h);

    let c0 = e(z, u)?;
    let xp = e(z + ex, u)?;
    let xm = e(z - ex, u)?;
    let yp = e(z + ey, u)?;
    let ym = e(z - ey, u)?;
    let up = e(z, u + h)?;
    let um = e(z, u - h)?;
    let xpup = e(z + ex, u + h)?;
    let xpum = e(z + ex, u - h)?;
    let xmup = e(z - ex, u + h)?;
    let xmum = e(z - ex, u - h)?;
    let ypup = e(z + ey, u + h)?;
    let ypum = e(z + ey, u - h)?;
    let ymup = e(z - ey, u + h)?;
    let ymum = e(z - ey, u - h)?;

    let du = |k: usize| (up[k] - um[k]) / (2.0 * h);
    let dz = |k: usize| ((xp[k] - xm[k]) - I * (yp[k] - ym[k])) / (4.0 * h);
    let dzb = |k: usize| ((xp[k] - xm[k]) + I * (yp[k] - ym[k])) / (4.0 * h);
    let dzzb =
        |k: usize| (xp[k] + xm[k] + yp[k] + ym[k] - 4.0 * c0[k]) / (4.0 * h * h);
    let duu = |k: usize| (up[k] - 2.0 * c0[k] + um[k]) / (h * h);
    // d/dz then d/du by nesting central differences.
    let dzdu = |k: usize| {
        let dz_up = ((xpup[k] - xmup[k]) - I * (ypup[k] - ymup[k])) / (4.0 * h);
        let dz_um = ((xpum[k] - xmum[k]) - I * (ypum[k] - ymum[k])) / (4.0 * h);
        (dz_up - dz_um) / (2.0 * h)
    };
    let dzbdu = |k: usize| {
        let dzb_up = ((xpup[k] - xmup[k]) + I * (ypup[k] - ymup[k])) / (4.0 * h);
        let dzb_um = ((xpum[k] - xmum[k]) + I * (ypum[k] - ymum[k])) / (4.0 * h);
        (dzb_up - dzb_um) / (2.0 * h)
    };

    Ok(du(0) - dzzb(1) - dzb(2) - du(3) + dzdu(4) - dz(5) - du(6) + dzbdu(7) + dzb(8) + dz(9)
        - duu(10))
}

/// Richardson-extrapolated L1 (two central-difference step sizes, h and
/// h/2, eliminating the O(h^2) error).
pub fn l1_graph(field: &GraphField, z: C, u: f64, h: f64) -> Result<f64> {
    let a = l1_graph_at(field, z, u, h)?;
    let b = l1_graph_at(field, z, u, 0.5 * h)?;
    let v = (4.0 * b - a) / 3.0;
    Ok(v.re)
}

/// Default outer step for the flux derivatives: 1e-3 of the local scale.
pub fn default_outer_step(z: C, u: f64) -> f64 {
    1e-3 * z.norm().max(u.abs()).max(1.0)
}

/// The curvature invariant kappa = (3/8) L1(F) at a point of a graph
/// surface.
pub fn kappa_graph(field: &GraphField, z: C, u: f64) -> Result<f64> {
    let h = default_outer_step(z, u);
    Ok(0.375 * l1_graph(field, z, u, h)?)
}

/// Rigid-surface first variation: L1(F) = -(F_zzb^{-2/3})_{z zbar} for
/// v = F(z). The inner derivative is analytic; the outer Laplacian is a
/// Richardson-extrapolated central difference. F_zzb may have either
/// sign (the -2/3 power goes through the real cube root); only a
/// degenerate F_zzb near zero is an error.
pub fn l1_rigid(field: &GraphField, z: C) -> Result<f64> {
    let h = 1e-3 * z.norm().max(1.0);
    let inner = |zz: C| -> Result<f64> {
        let jet = field.jet_at(zz, 0.0)?;
        if jet.fzzb.abs() < 1e-10 {
            return Err(Error::NotPseudoconvex(format!(
                "degenerate F_zzb = {:.3e} at z = {zz}",
                jet.fzzb
            )));
        }
        Ok(mu_pow_m23(jet.fzzb))
    };
    let lap = |h: f64| -> Result<f64> {
        let ex = C::new(h, 0.0);
        let ey = C::new(0.0, h);
        Ok(
            (inner(z + ex)? + inner(z - ex)? + inner(z + ey)? + inner(z - ey)?
                - 4.0 * inner(z)?)
                / (h * h),
        )
    };
    let a = lap(h)?;
    let b = lap(0.5 * h)?;
    // d/dz d/dzb = Laplacian / 4.
    Ok(-((4.0 * b - a) / 3.0) / 4.0)
}

/// kappa for rigid surfaces.
pub fn kappa_rigid(field: &GraphField, z: C) -> Result<f64> {
    Ok(0.375 * l1_rigid(field, z)?)
}

/// A one-parameter family of surfaces eps -> Z_eps with Z_0 the base.
pub struct PerturbationFamily {
    pub label: String,
    make: Arc<dyn Fn(f64) -> Result<SurfaceModel> + Send + Sync>,
}

impl PerturbationFamily {
    pub fn new<F>(label: impl Into<String>, make: F) -> Self
    where
        F: Fn(f64) -> Result<SurfaceModel> + Send + Sync + 'static,
    {
        PerturbationFamily { label: label.into(), make: Arc::new(make) }
    }

    /// Radial family G = eps * g0 over the unit sphere.
    pub fn sphere_poly(g0: SpherePolynomial) -> Self {
        PerturbationFamily::new("sphere-poly", move |eps| {
            Ok(SurfaceModel::Radial(crate::measures::RadialSurface::poly_scaled(&g0, eps)?))
        })
    }

    /// Graph family v = |z|^2 + eps * bump over the bump's base.
    pub fn heisenberg_bump(bump: BumpField) -> Self {
        PerturbationFamily::new("heisenberg-bump", move |eps| {
            let b = bump.clone();
            let field = GraphField::analytic(move |zj, zbj, uj| {
                zj * zbj + b.jet(zj.val, uj.val.re) * C::new(eps, 0.0)
            });
            Ok(SurfaceModel::Graph(crate::measures::GraphSurface::new(
                field,
                bump.base,
                format!("heisenberg+eps*bump(eps={eps})"),
            )))
        })
    }

    /// Graph family F0 + eps * bump for an arbitrary analytic base graph.
    pub fn graph_bump(base_field: GraphField, bump: BumpField, label: impl Into<String>) -> Self {
        let label = label.into();
        PerturbationFamily::new(label.clone(), move |eps| {
            let b = bump.clone();
            let f0 = base_field.clone();
            let field = GraphField::analytic(move |zj, zbj, uj| {
                // Reconstitute the base jet through its own rule.
                let base = f0
                    .jet_at(zj.val, uj.val.re)
                    .expect("base field jet");
                let base_jet = GraphJet {
                    val: C::new(base.f, 0.0),
                    dz: base.fz,
                    dzb: base.fzb(),
                    du: C::new(base.fu, 0.0),
                    dzzb: C::new(base.fzzb, 0.0),
                    dzu: base.fzu,
                    dzbu: base.fzbu(),
                    duu: C::new(base.fuu, 0.0),
                };
                let _ = zbj;
                base_jet + b.jet(zj.val, uj.val.re) * C::new(eps, 0.0)
            });
            Ok(SurfaceModel::Graph(crate::measures::GraphSurface::new(
                field,
                bump.base,
                label.clone(),
            )))
        })
    }

    pub fn at(&self, eps: f64) -> Result<SurfaceModel> {
        (self.make)(eps)
    }
}

/// Result of the epsilon-expansion fit: coefficient k approximates the
/// k-th variation term of the functional along the family.
#[derive(Clone, Debug)]
pub struct EpsFit {
    pub fit: PolyFit,
    pub samples: Vec<(f64, f64)>,
    /// Set when the fit residual exceeds 1e-3 of the eps^2 term over the
    /// sampled range.
    pub flagged: bool,
}

impl EpsFit {
    pub fn coeff(&self, k: usize) -> f64 {
        self.fit.coeffs.get(k).copied().unwrap_or(0.0)
    }
}

/// Least-squares polynomial fit (degree <= 4) of a functional along a
/// perturbation family over a symmetric epsilon set.
pub fn eps_fit_oracle(
    family: &PerturbationFamily,
    functional: Functional,
    eps_set: &[f64],
    degree: usize,
    spec: GridSpec,
) -> Result<EpsFit> {
    if degree > 4 {
        return Err(Error::Precondition("fit degree must be <= 4".into()));
    }
    let mut sorted: Vec<f64> = eps_set.to_vec();
    sorted.sort_by(f64::total_cmp);
    let symmetric = sorted
        .iter()
        .zip(sorted.iter().rev())
        .all(|(a, b)| (a + b).abs() < 1e-15);
    if !symmetric {
        return Err(Error::Precondition("eps set must be symmetric about 0".into()));
    }
    let mut samples = Vec::with_capacity(eps_set.len());
    for &eps in eps_set {
        let model = family.at(eps)?;
        let v = eval_functional(&model, functional, spec)?;
        samples.push((eps, v));
    }
    let xs: Vec<f64> = samples.iter().map(|s| s.0).collect();
    let ys: Vec<f64> = samples.iter().map(|s| s.1).collect();
    let fit = polyfit(&xs, &ys, degree)?;
    if fit.condition > 1e12 {
        return Err(Error::IllConditionedFit(fit.condition));
    }
    let eps_ms = xs.iter().map(|e| e * e).sum::<f64>() / xs.len() as f64;
    let c2 = fit.coeffs.get(2).copied().unwrap_or(0.0);
    let flagged = fit.residual_rms > 1e-3 * (c2.abs() * eps_ms).max(f64::MIN_POSITIVE);
    Ok(EpsFit { fit, samples, flagged })
}

/// The default epsilon set {+-1, +-2, +-3, +-4} * 1e-2.
pub fn default_eps_set() -> Vec<f64> {
    let mut v: Vec<f64> = (1..=4).flat_map(|k| [k as f64 * 1e-2, -(k as f64) * 1e-2]).collect();
    v.sort_by(f64::total_cmp);
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn test_bump() -> BumpField {
        BumpField::centered(BaseBox::cube(1.0), 0.15, 0.5).unwrap()
    }

    #[test]
    fn bump_vanishes_at_support_edge() {
        let b = test_bump();
        assert_eq!(b.value(C::new(0.9, 0.0), 0.0), 0.0);
        assert!(b.value(C::new(0.0, 0.0), 0.0) > 0.4);
        let j = b.jet(C::new(0.85, 0.0), 0.0);
        assert!(j.val.re.abs() < 1e-30);
    }

    #[test]
    fn bump_rejects_boundary_support() {
        let base = BaseBox::cube(1.0);
        assert!(BumpField::new(base, [0.0; 3], [1.0, 0.5, 0.5], 1.0).is_err());
    }

    #[test]
    fn heisenberg_commutator_on_test_fields() {
        // (L Lbar - Lbar L) F = -2i T F on assorted analytic fields.
        let fields = [
            GraphField::analytic(|z, zb, u| {
                (z * z * zb + zb * zb * z) * C::new(0.5, 0.0) + u * u * u
            }),
            GraphField::analytic(|z, zb, u| (z + zb) * u + z * zb * u),
        ];
        for f in &fields {
            for (z, u) in [(C::new(0.3, -0.4), 0.7), (C::new(1.2, 0.5), -0.2)] {
                let jet = f.jet_at(z, u).unwrap();
                let lhs = heis_llbar(&jet, z) - heis_lbarl(&jet, z);
                let rhs = -2.0 * I * jet.fu;
                assert!((lhs - rhs).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn second_variation_zero_and_negative() {
        let zero = test_bump().scaled(0.0);
        assert_eq!(heis_second_variation(&zero, [12, 12, 12]), 0.0);
        let b = test_bump();
        let v = heis_second_variation(&b, [16, 16, 16]);
        assert!(v < -1e-6, "strictly negative, got {v}");
    }

    #[test]
    fn kappa_heisenberg_is_zero() {
        let f = GraphField::analytic(|z, zb, _u| z * zb);
        let k = kappa_graph(&f, C::new(0.4, -0.2), 0.3).unwrap();
        assert!(k.abs() < 1e-9, "kappa = {k}");
    }

    #[test]
    fn kappa_sphere_constant() {
        let s = crate::measures::GraphSurface::sphere_branch(
            1.0,
            BaseBox::new((-0.35, 0.35), (-0.35, 0.35), (-0.35, 0.35)),
        )
        .unwrap();
        let expect = 3.0 * 2f64.powf(-1.0 / 3.0);
        for (z, u) in [
            (C::new(0.0, 0.0), 0.0),
            (C::new(0.2, 0.1), -0.1),
            (C::new(-0.15, 0.2), 0.2),
        ] {
            let k = kappa_graph(&s.field, z, u).unwrap();
            assert_relative_eq!(k, expect, max_relative = 1e-4);
        }
    }

    #[test]
    fn kappa_hyperboloid_negative_constant() {
        let s = crate::measures::GraphSurface::hyperboloid_branch(
            1.0,
            BaseBox::new((1.8, 2.2), (-0.2, 0.2), (-0.2, 0.2)),
        )
        .unwrap();
        let expect = -3.0 * 2f64.powf(-1.0 / 3.0);
        let k = kappa_graph(&s.field, C::new(2.0, 0.0), 0.05).unwrap();
        assert_relative_eq!(k, expect, max_relative = 1e-3);
    }

    #[test]
    fn l1_rigid_examples() {
        // F = |z|^2: harmonic inverse-power, L1 = 0.
        let f = GraphField::analytic(|z, zb, _u| z * zb);
        assert!(l1_rigid(&f, C::new(0.7, 0.2)).unwrap().abs() < 1e-9);
        // F = sqrt(z^-2 + zb^-2) where defined: L1 = 0.
        let f = GraphField::analytic(|z, zb, _u| (z.powi(-2) + zb.powi(-2)).sqrt());
        assert!(l1_rigid(&f, C::new(1.0, 0.05)).unwrap().abs() < 1e-6);
        // F = |z|^4 at z=1: L1 = -(4)^{-2/3} * 4/9.
        let f = GraphField::analytic(|z, zb, _u| (z * zb).powi(2));
        let expect = -(4f64.powf(-2.0 / 3.0)) * 4.0 / 9.0;
        assert_relative_eq!(l1_rigid(&f, C::new(1.0, 0.0)).unwrap(), expect, max_relative = 1e-6);
    }

    #[test]
    fn cube_simp_zero_bump() {
        let zero = test_bump().scaled(0.0);
        let (lhs, rhs) = cube_simp_check(&zero, [8, 8, 8]);
        let vol = BaseBox::cube(1.0).volume();
        assert_relative_eq!(lhs, vol, max_relative = 1e-12);
        assert_relative_eq!(rhs, vol, max_relative = 1e-12);
    }

    #[test]
    fn cube_simp_generic_bump() {
        let b = test_bump();
        let (lhs, rhs) = cube_simp_check(&b, [28, 28, 28]);
        assert_relative_eq!(lhs, rhs, max_relative = 1e-6);
    }

    #[test]
    fn eps_fit_constant_family_is_flat() {
        let fam = PerturbationFamily::sphere_poly(SpherePolynomial::zero());
        let fit = eps_fit_oracle(
            &fam,
            Functional::Volume,
            &default_eps_set(),
            4,
            GridSpec { sphere: [10, 6, 6], base_box: [8, 8, 8] },
        )
        .unwrap();
        for k in 1..=4 {
            assert!(fit.coeff(k).abs() < 1e-10, "coeff {k} = {}", fit.coeff(k));
        }
    }

    #[test]
    fn eps_fit_rejects_asymmetric_set() {
        let fam = PerturbationFamily::sphere_poly(SpherePolynomial::zero());
        let r = eps_fit_oracle(
            &fam,
            Functional::Volume,
            &[0.01, 0.02],
            2,
            GridSpec::default(),
        );
        assert!(r.is_err());
    }

    #[test]
    fn family_at_zero_returns_base() {
        let b = test_bump();
        let fam = PerturbationFamily::heisenberg_bump(b);
        let m0 = fam.at(0.0).unwrap();
        if let SurfaceModel::Graph(g) = m0 {
            let jet = g.field.jet_at(C::new(0.1, 0.0), 0.0).unwrap();
            assert_relative_eq!(graph_mu(&jet), 1.0, max_relative = 1e-14);
        } else {
            panic!("expected graph model");
        }
    }
}
