//! Truncated second-order jet algebra.
//!
//! A [`GraphJet`] carries, at a point, the value of a function of
//! (z, zbar, u) together with the first partials and the mixed second
//! partials (zzb, zu, zbu, uu). This component set is closed under ring
//! operations and smooth univariate post-composition, which is all that
//! the density mu(F) and its flux expressions consume; the holomorphic-
//! holomorphic partials (zz, uu aside) are never needed and never
//! tracked. [`AmbientJet`] is the analogue on (z, zbar, w, wbar) with
//! the complex-Hessian block only.

use num_complex::Complex64;
use std::ops::{Add, Div, Mul, Neg, Sub};

pub type C = Complex64;

fn c(re: f64) -> C {
    C::new(re, 0.0)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GraphJet {
    pub val: C,
    pub dz: C,
    pub dzb: C,
    pub du: C,
    pub dzzb: C,
    pub dzu: C,
    pub dzbu: C,
    pub duu: C,
}

impl GraphJet {
    pub const ZERO: GraphJet = GraphJet {
        val: C::ZERO,
        dz: C::ZERO,
        dzb: C::ZERO,
        du: C::ZERO,
        dzzb: C::ZERO,
        dzu: C::ZERO,
        dzbu: C::ZERO,
        duu: C::ZERO,
    };

    pub fn constant(v: C) -> Self {
        GraphJet { val: v, ..Self::ZERO }
    }

    pub fn constant_re(v: f64) -> Self {
        Self::constant(c(v))
    }

    /// The coordinate z as a jet (dz = 1, all else 0).
    pub fn var_z(z0: C) -> Self {
        GraphJet { val: z0, dz: c(1.0), ..Self::ZERO }
    }

    /// The coordinate zbar as a jet.
    pub fn var_zb(z0: C) -> Self {
        GraphJet { val: z0.conj(), dzb: c(1.0), ..Self::ZERO }
    }

    /// The coordinate u as a jet.
    pub fn var_u(u0: f64) -> Self {
        GraphJet { val: c(u0), du: c(1.0), ..Self::ZERO }
    }

    /// x = Re z = (z + zbar)/2 as a jet.
    pub fn var_x(z0: C) -> Self {
        (Self::var_z(z0) + Self::var_zb(z0)) * c(0.5)
    }

    /// y = Im z = (z - zbar)/(2i) as a jet.
    pub fn var_y(z0: C) -> Self {
        (Self::var_z(z0) - Self::var_zb(z0)) * C::new(0.0, -0.5)
    }

    /// Post-compose with a univariate function given its value and first
    /// two derivatives at `self.val`.
    pub fn compose(self, h: C, dh: C, ddh: C) -> Self {
        GraphJet {
            val: h,
            dz: dh * self.dz,
            dzb: dh * self.dzb,
            du: dh * self.du,
            dzzb: ddh * self.dz * self.dzb + dh * self.dzzb,
            dzu: ddh * self.dz * self.du + dh * self.dzu,
            dzbu: ddh * self.dzb * self.du + dh * self.dzbu,
            duu: ddh * self.du * self.du + dh * self.duu,
        }
    }

    pub fn recip(self) -> Self {
        let v = self.val;
        self.compose(1.0 / v, -1.0 / (v * v), 2.0 / (v * v * v))
    }

    pub fn sqrt(self) -> Self {
        let s = self.val.sqrt();
        self.compose(s, 0.5 / s, -0.25 / (s * s * s))
    }

    pub fn exp(self) -> Self {
        let e = self.val.exp();
        self.compose(e, e, e)
    }

    pub fn ln(self) -> Self {
        let v = self.val;
        self.compose(v.ln(), 1.0 / v, -1.0 / (v * v))
    }

    pub fn powi(self, n: i32) -> Self {
        let v = self.val;
        self.compose(
            v.powi(n),
            c(n as f64) * v.powi(n - 1),
            c((n * (n - 1)) as f64) * v.powi(n - 2),
        )
    }
}

impl Add for GraphJet {
    type Output = GraphJet;
    fn add(self, r: GraphJet) -> GraphJet {
        GraphJet {
            val: self.val + r.val,
            dz: self.dz + r.dz,
            dzb: self.dzb + r.dzb,
            du: self.du + r.du,
            dzzb: self.dzzb + r.dzzb,
            dzu: self.dzu + r.dzu,
            dzbu: self.dzbu + r.dzbu,
            duu: self.duu + r.duu,
        }
    }
}

impl Sub for GraphJet {
    type Output = GraphJet;
    fn sub(self, r: GraphJet) -> GraphJet {
        self + (-r)
    }
}

impl Neg for GraphJet {
    type Output = GraphJet;
    fn neg(self) -> GraphJet {
        GraphJet {
            val: -self.val,
            dz: -self.dz,
            dzb: -self.dzb,
            du: -self.du,
            dzzb: -self.dzzb,
            dzu: -self.dzu,
            dzbu: -self.dzbu,
            duu: -self.duu,
        }
    }
}

impl Mul for GraphJet {
    type Output = GraphJet;
    fn mul(self, r: GraphJet) -> GraphJet {
        GraphJet {
            val: self.val * r.val,
            dz: self.dz * r.val + self.val * r.dz,
            dzb: self.dzb * r.val + self.val * r.dzb,
            du: self.du * r.val + self.val * r.du,
            dzzb: self.dzzb * r.val + self.dz * r.dzb + self.dzb * r.dz + self.val * r.dzzb,
            dzu: self.dzu * r.val + self.dz * r.du + self.du * r.dz + self.val * r.dzu,
            dzbu: self.dzbu * r.val + self.dzb * r.du + self.du * r.dzb + self.val * r.dzbu,
            duu: self.duu * r.val + 2.0 * self.du * r.du + self.val * r.duu,
        }
    }
}

impl Mul<C> for GraphJet {
    type Output = GraphJet;
    fn mul(self, k: C) -> GraphJet {
        GraphJet {
            val: self.val * k,
            dz: self.dz * k,
            dzb: self.dzb * k,
            du: self.du * k,
            dzzb: self.dzzb * k,
            dzu: self.dzu * k,
            dzbu: self.dzbu * k,
            duu: self.duu * k,
        }
    }
}

impl Div for GraphJet {
    type Output = GraphJet;
    fn div(self, r: GraphJet) -> GraphJet {
        self * r.recip()
    }
}

/// Second-order jet of a function of (z, zbar, w, wbar), tracking the
/// gradient and the complex-Hessian block only.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AmbientJet {
    pub val: C,
    pub dz: C,
    pub dw: C,
    pub dzb: C,
    pub dwb: C,
    pub dzzb: C,
    pub dzwb: C,
    pub dwzb: C,
    pub dwwb: C,
}

impl AmbientJet {
    pub const ZERO: AmbientJet = AmbientJet {
        val: C::ZERO,
        dz: C::ZERO,
        dw: C::ZERO,
        dzb: C::ZERO,
        dwb: C::ZERO,
        dzzb: C::ZERO,
        dzwb: C::ZERO,
        dwzb: C::ZERO,
        dwwb: C::ZERO,
    };

    pub fn constant(v: C) -> Self {
        AmbientJet { val: v, ..Self::ZERO }
    }

    pub fn constant_re(v: f64) -> Self {
        Self::constant(c(v))
    }

    pub fn var_z(z0: C) -> Self {
        AmbientJet { val: z0, dz: c(1.0), ..Self::ZERO }
    }

    pub fn var_w(w0: C) -> Self {
        AmbientJet { val: w0, dw: c(1.0), ..Self::ZERO }
    }

    pub fn var_zb(z0: C) -> Self {
        AmbientJet { val: z0.conj(), dzb: c(1.0), ..Self::ZERO }
    }

    pub fn var_wb(w0: C) -> Self {
        AmbientJet { val: w0.conj(), dwb: c(1.0), ..Self::ZERO }
    }

    pub fn compose(self, h: C, dh: C, ddh: C) -> Self {
        AmbientJet {
            val: h,
            dz: dh * self.dz,
            dw: dh * self.dw,
            dzb: dh * self.dzb,
            dwb: dh * self.dwb,
            dzzb: ddh * self.dz * self.dzb + dh * self.dzzb,
            dzwb: ddh * self.dz * self.dwb + dh * self.dzwb,
            dwzb: ddh * self.dw * self.dzb + dh * self.dwzb,
            dwwb: ddh * self.dw * self.dwb + dh * self.dwwb,
        }
    }

    pub fn recip(self) -> Self {
        let v = self.val;
        self.compose(1.0 / v, -1.0 / (v * v), 2.0 / (v * v * v))
    }

    pub fn sqrt(self) -> Self {
        let s = self.val.sqrt();
        self.compose(s, 0.5 / s, -0.25 / (s * s * s))
    }

    pub fn exp(self) -> Self {
        let e = self.val.exp();
        self.compose(e, e, e)
    }

    pub fn ln(self) -> Self {
        let v = self.val;
        self.compose(v.ln(), 1.0 / v, -1.0 / (v * v))
    }

    pub fn powi(self, n: i32) -> Self {
        let v = self.val;
        self.compose(
            v.powi(n),
            c(n as f64) * v.powi(n - 1),
            c((n * (n - 1)) as f64) * v.powi(n - 2),
        )
    }
}

impl Add for AmbientJet {
    type Output = AmbientJet;
    fn add(self, r: AmbientJet) -> AmbientJet {
        AmbientJet {
            val: self.val + r.val,
            dz: self.dz + r.dz,
            dw: self.dw + r.dw,
            dzb: self.dzb + r.dzb,
            dwb: self.dwb + r.dwb,
            dzzb: self.dzzb + r.dzzb,
            dzwb: self.dzwb + r.dzwb,
            dwzb: self.dwzb + r.dwzb,
            dwwb: self.dwwb + r.dwwb,
        }
    }
}

impl Sub for AmbientJet {
    type Output = AmbientJet;
    fn sub(self, r: AmbientJet) -> AmbientJet {
        self + (-r)
    }
}

impl Neg for AmbientJet {
    type Output = AmbientJet;
    fn neg(self) -> AmbientJet {
        AmbientJet {
            val: -self.val,
            dz: -self.dz,
            dw: -self.dw,
            dzb: -self.dzb,
            dwb: -self.dwb,
            dzzb: -self.dzzb,
            dzwb: -self.dzwb,
            dwzb: -self.dwzb,
            dwwb: -self.dwwb,
        }
    }
}

impl Mul for AmbientJet {
    type Output = AmbientJet;
    fn mul(self, r: AmbientJet) -> AmbientJet {
        AmbientJet {
            val: self.val * r.val,
            dz: self.dz * r.val + self.val * r.dz,
            dw: self.dw * r.val + self.val * r.dw,
            dzb: self.dzb * r.val + self.val * r.dzb,
            dwb: self.dwb * r.val + self.val * r.dwb,
            dzzb: self.dzzb * r.val + self.dz * r.dzb + self.dzb * r.dz + self.val * r.dzzb,
            dzwb: self.dzwb * r.val + self.dz * r.dwb + self.dwb * r.dz + self.val * r.dzwb,
            dwzb: self.dwzb * r.val + self.dw * r.dzb + self.dzb * r.dw + self.val * r.dwzb,
            dwwb: self.dwwb * r.val + self.dw * r.dwb + self.dwb * r.dw + self.val * r.dwwb,
        }
    }
}

impl Mul<C> for AmbientJet {
    type Output = AmbientJet;
    fn mul(self, k: C) -> AmbientJet {
        AmbientJet {
            val: self.val * k,
            dz: self.dz * k,
            dw: self.dw * k,
            dzb: self.dzb * k,
            dwb: self.dwb * k,
            dzzb: self.dzzb * k,
            dzwb: self.dzwb * k,
            dwzb: self.dwzb * k,
            dwwb: self.dwwb * k,
        }
    }
}

impl Div for AmbientJet {
    type Output = AmbientJet;
    fn div(self, r: AmbientJet) -> AmbientJet {
        self * r.recip()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: C, b: C) -> bool {
        (a - b).norm() < 1e-12
    }

    #[test]
    fn graph_jet_of_zzbar() {
        // F = z zbar at z0: F_z = zbar, F_zzb = 1, rest of seconds 0.
        let z0 = C::new(0.3, -0.7);
        let j = GraphJet::var_z(z0) * GraphJet::var_zb(z0);
        assert!(close(j.val, c(z0.norm_sqr())));
        assert!(close(j.dz, z0.conj()));
        assert!(close(j.dzb, z0));
        assert!(close(j.dzzb, c(1.0)));
        assert!(close(j.duu, C::ZERO));
    }

    #[test]
    fn graph_jet_chain_rules() {
        // F = sqrt(1 - z zbar - u^2), checked against hand derivatives.
        let z0 = C::new(0.2, 0.1);
        let u0 = 0.3;
        let zz = GraphJet::var_z(z0) * GraphJet::var_zb(z0);
        let uu = GraphJet::var_u(u0) * GraphJet::var_u(u0);
        let s = GraphJet::constant_re(1.0) - zz - uu;
        let f = s.sqrt();
        let sval = 1.0 - z0.norm_sqr() - u0 * u0;
        let sq = sval.sqrt();
        assert!(close(f.val, c(sq)));
        // F_z = -zbar / (2 sqrt s)
        assert!(close(f.dz, -z0.conj() / (2.0 * sq)));
        // F_u = -u / sqrt s
        assert!(close(f.du, c(-u0 / sq)));
        // F_zzb = -1/(2 sqrt s) - |z|^2/(4 s^{3/2})
        let expect = -1.0 / (2.0 * sq) - z0.norm_sqr() / (4.0 * sval.powf(1.5));
        assert!(close(f.dzzb, c(expect)));
        // F_zu = -zbar u / (2 s^{3/2})
        assert!(close(f.dzu, -z0.conj() * u0 / (2.0 * sval.powf(1.5))));
    }

    #[test]
    fn jet_div_exp_consistency() {
        let z0 = C::new(0.4, 0.2);
        let u0 = -0.1;
        let a = GraphJet::var_z(z0) * GraphJet::var_zb(z0) + GraphJet::constant_re(2.0);
        let b = GraphJet::var_u(u0).exp();
        let q = a / b;
        let back = q * b;
        assert!(close(back.val, a.val));
        assert!(close(back.dzzb, a.dzzb));
        assert!(close(back.duu, a.duu));
    }

    #[test]
    fn ambient_jet_of_sphere_rho() {
        // rho = z zbar + w wbar - 1.
        let z0 = C::new(0.6, 0.0);
        let w0 = C::new(0.0, 0.8);
        let j = AmbientJet::var_z(z0) * AmbientJet::var_zb(z0)
            + AmbientJet::var_w(w0) * AmbientJet::var_wb(w0)
            - AmbientJet::constant_re(1.0);
        assert!(close(j.dz, z0.conj()));
        assert!(close(j.dw, w0.conj()));
        assert!(close(j.dzzb, c(1.0)));
        assert!(close(j.dwwb, c(1.0)));
        assert!(close(j.dzwb, C::ZERO));
    }
}
