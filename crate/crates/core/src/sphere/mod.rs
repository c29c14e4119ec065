//! Exact polynomial algebra in z, w, zbar, wbar with the sphere vector
//! fields L, Lbar, T, S, exact monomial integration over S^3 and the
//! unit ball, and the exact sphere-side operations built on them:
//! the second-variation form of the isoperimetric quotient, the
//! closed-form mode coefficients, the integration-by-parts identities,
//! the radial operator solve X g = h, and the Jerison-Lee inequality
//! check.
//!
//! Coefficients are exact complex rationals; integrals are exact
//! rational multiples of powers of pi (see [`crate::exact::PiValue`]).

mod parse;

pub use parse::parse_polynomial;

use crate::error::{Error, Result};
use crate::exact::{factorial, rat_int, PiValue, Qc, Rat};
use num_complex::Complex64;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Exponents (a, b, c, d) of z^a w^b zbar^c wbar^d.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Monomial {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub d: u32,
}

impl Monomial {
    pub fn new(a: u32, b: u32, c: u32, d: u32) -> Self {
        Monomial { a, b, c, d }
    }

    pub fn one() -> Self {
        Monomial::new(0, 0, 0, 0)
    }

    pub fn degree(&self) -> u32 {
        self.a + self.b + self.c + self.d
    }

    /// Swaps holomorphic and antiholomorphic exponents.
    pub fn conj(&self) -> Self {
        Monomial::new(self.c, self.d, self.a, self.b)
    }

    fn mul(&self, rhs: &Monomial) -> Monomial {
        Monomial::new(
            self.a + rhs.a,
            self.b + rhs.b,
            self.c + rhs.c,
            self.d + rhs.d,
        )
    }

    pub fn eval(&self, z: Complex64, w: Complex64) -> Complex64 {
        z.powu(self.a) * w.powu(self.b) * z.conj().powu(self.c) * w.conj().powu(self.d)
    }
}

/// Finite sum of monomials with exact complex-rational coefficients.
///
/// Zero coefficients are never stored; the term map is ordered so all
/// iteration (and hence all derived floating-point evaluation) is
/// deterministic.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SpherePolynomial {
    terms: BTreeMap<Monomial, Qc>,
}

impl SpherePolynomial {
    pub fn zero() -> Self {
        SpherePolynomial::default()
    }

    pub fn constant(c: Qc) -> Self {
        let mut p = SpherePolynomial::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn one() -> Self {
        SpherePolynomial::constant(Qc::one())
    }

    pub fn monomial(m: Monomial, c: Qc) -> Self {
        let mut p = SpherePolynomial::zero();
        p.add_term(m, c);
        p
    }

    pub fn var_z() -> Self {
        SpherePolynomial::monomial(Monomial::new(1, 0, 0, 0), Qc::one())
    }

    pub fn var_w() -> Self {
        SpherePolynomial::monomial(Monomial::new(0, 1, 0, 0), Qc::one())
    }

    pub fn var_zb() -> Self {
        SpherePolynomial::monomial(Monomial::new(0, 0, 1, 0), Qc::one())
    }

    pub fn var_wb() -> Self {
        SpherePolynomial::monomial(Monomial::new(0, 0, 0, 1), Qc::one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Qc)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    /// Only z and w appear (c = d = 0 on every term).
    pub fn is_holomorphic(&self) -> bool {
        self.terms.keys().all(|m| m.c == 0 && m.d == 0)
    }

    fn add_term(&mut self, m: Monomial, c: Qc) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, rhs: &SpherePolynomial) -> SpherePolynomial {
        let mut out = self.clone();
        for (m, c) in rhs.terms() {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &SpherePolynomial) -> SpherePolynomial {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> SpherePolynomial {
        let mut out = SpherePolynomial::zero();
        for (m, c) in self.terms() {
            out.add_term(*m, -c);
        }
        out
    }

    pub fn mul(&self, rhs: &SpherePolynomial) -> SpherePolynomial {
        let mut out = SpherePolynomial::zero();
        for (m1, c1) in self.terms() {
            for (m2, c2) in rhs.terms() {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &Qc) -> SpherePolynomial {
        let mut out = SpherePolynomial::zero();
        for (m, k) in self.terms() {
            out.add_term(*m, k * c);
        }
        out
    }

    pub fn scale_rat(&self, r: &Rat) -> SpherePolynomial {
        self.scale(&Qc::from_rat(r.clone()))
    }

    /// Complex conjugate: exponents (a,b) <-> (c,d), coefficients conjugated.
    pub fn conj(&self) -> SpherePolynomial {
        let mut out = SpherePolynomial::zero();
        for (m, c) in self.terms() {
            out.add_term(m.conj(), c.conj());
        }
        out
    }

    /// Real-valued on C^2 (equivalently conj(p) == p).
    pub fn is_real(&self) -> bool {
        *self == self.conj()
    }

    /// p * conj(p); real-valued by construction.
    pub fn abs_sq(&self) -> SpherePolynomial {
        self.mul(&self.conj())
    }

    pub fn pow(&self, n: u32) -> SpherePolynomial {
        let mut out = SpherePolynomial::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    pub fn eval(&self, z: Complex64, w: Complex64) -> Complex64 {
        let mut acc = Complex64::ZERO;
        for (m, c) in self.terms() {
            acc += c.to_c64() * m.eval(z, w);
        }
        acc
    }
}

impl fmt::Display for SpherePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})", c)?;
            for (name, e) in [("z", m.a), ("w", m.b), ("zb", m.c), ("wb", m.d)] {
                if e > 0 {
                    write!(f, "*{}^{}", name, e)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SpherePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The tangential and radial vector fields on S^3:
/// L = wb d/dz - zb d/dw, Lbar = w d/dzb - z d/dwb,
/// T = i(z d/dz + w d/dw - zb d/dzb - wb d/dwb),
/// S = z d/dz + w d/dw + zb d/dzb + wb d/dwb.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SphereField {
    L,
    Lbar,
    T,
    S,
}

pub fn apply_field(field: SphereField, p: &SpherePolynomial) -> SpherePolynomial {
    let mut out = SpherePolynomial::zero();
    for (m, c) in p.terms() {
        match field {
            SphereField::L => {
                if m.a > 0 {
                    out.add_term(
                        Monomial::new(m.a - 1, m.b, m.c, m.d + 1),
                        c.scale(&rat_int(m.a as i64)),
                    );
                }
                if m.b > 0 {
                    out.add_term(
                        Monomial::new(m.a, m.b - 1, m.c + 1, m.d),
                        c.scale(&rat_int(-(m.b as i64))),
                    );
                }
            }
            SphereField::Lbar => {
                if m.c > 0 {
                    out.add_term(
                        Monomial::new(m.a, m.b + 1, m.c - 1, m.d),
                        c.scale(&rat_int(m.c as i64)),
                    );
                }
                if m.d > 0 {
                    out.add_term(
                        Monomial::new(m.a + 1, m.b, m.c, m.d - 1),
                        c.scale(&rat_int(-(m.d as i64))),
                    );
                }
            }
            SphereField::T => {
                let k = m.a as i64 + m.b as i64 - m.c as i64 - m.d as i64;
                out.add_term(*m, c * &Qc::new(Rat::zero(), rat_int(k)));
            }
            SphereField::S => {
                out.add_term(*m, c.scale(&rat_int(m.degree() as i64)));
            }
        }
    }
    out
}

pub fn l(p: &SpherePolynomial) -> SpherePolynomial {
    apply_field(SphereField::L, p)
}

pub fn lbar(p: &SpherePolynomial) -> SpherePolynomial {
    apply_field(SphereField::Lbar, p)
}

pub fn t(p: &SpherePolynomial) -> SpherePolynomial {
    apply_field(SphereField::T, p)
}

pub fn s(p: &SpherePolynomial) -> SpherePolynomial {
    apply_field(SphereField::S, p)
}

/// Exact integral over the unit sphere S^3 against the area form:
/// a monomial integrates to zero unless a=c and b=d, in which case
/// it contributes 2 pi^2 a! b! / (a+b+1)!.
pub fn integrate_sphere(p: &SpherePolynomial) -> PiValue {
    let mut acc = Qc::zero();
    for (m, c) in p.terms() {
        if m.a == m.c && m.b == m.d {
            let num = factorial(m.a) * factorial(m.b) * 2;
            let den = factorial(m.a + m.b + 1);
            let weight = Rat::new(num, den);
            acc = &acc + &c.scale(&weight);
        }
    }
    PiValue::new(acc, 2)
}

/// Exact integral over the open unit ball: the diagonal monomial
/// |z|^2a |w|^2b contributes pi^2 a! b! / (a+b+2)!.
pub fn integrate_ball(p: &SpherePolynomial) -> PiValue {
    let mut acc = Qc::zero();
    for (m, c) in p.terms() {
        if m.a == m.c && m.b == m.d {
            let num = factorial(m.a) * factorial(m.b);
            let den = factorial(m.a + m.b + 2);
            let weight = Rat::new(num, den);
            acc = &acc + &c.scale(&weight);
        }
    }
    PiValue::new(acc, 2)
}

/// Exact epsilon^2 coefficient of the isoperimetric quotient along the
/// perturbation G = eps * g0 of the unit sphere, for real-valued g0 with
/// zero sphere mean:
/// (1/(3 pi)) * Int( 5 |T g0|^2 - 2 |L Lbar g0 + 2 g0|^2 ).
pub fn second_variation_q(g0: &SpherePolynomial) -> Result<PiValue> {
    if !g0.is_real() {
        return Err(Error::Precondition(
            "second variation requires a real-valued polynomial".into(),
        ));
    }
    if !integrate_sphere(g0).is_zero() {
        return Err(Error::Precondition(
            "second variation requires zero sphere mean".into(),
        ));
    }
    let tg = t(g0);
    let llb2 = l(&lbar(g0)).add(&g0.scale_rat(&rat_int(2)));
    let integrand = tg
        .abs_sq()
        .scale_rat(&rat_int(5))
        .sub(&llb2.abs_sq().scale_rat(&rat_int(2)));
    let integral = integrate_sphere(&integrand);
    Ok(integral.scale(&Rat::new(1.into(), 3.into())).div_pi(1))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ModeKind {
    /// g0 = z^j w^k + zb^j wb^k
    A,
    /// g0 = z^j wb^k + zb^j w^k
    B,
}

/// The mode polynomial whose second variation the closed form predicts.
pub fn mode_polynomial(kind: ModeKind, j: u32, k: u32) -> SpherePolynomial {
    let m = match kind {
        ModeKind::A => Monomial::new(j, k, 0, 0),
        ModeKind::B => Monomial::new(j, 0, 0, k),
    };
    let p = SpherePolynomial::monomial(m, Qc::one());
    p.add(&p.conj())
}

/// Closed-form epsilon^2 coefficient for the two mode families:
/// kind A ((j,k) != (0,0)):  (16 pi / 3) j!k!/(j+k+1)! (j+k+2)(j+k-1)
/// kind B (j,k >= 1):       -(8 pi / 3) j!k!/(j+k+1)! (j+2)(j-1)(k+2)(k-1)
pub fn closed_form_coeff(kind: ModeKind, j: u32, k: u32) -> Result<PiValue> {
    let base = Rat::new(
        factorial(j) * factorial(k),
        factorial(j + k + 1),
    );
    let (j_, k_) = (j as i64, k as i64);
    let coeff = match kind {
        ModeKind::A => {
            if (j, k) == (0, 0) {
                return Err(Error::OutOfRange("mode A requires (j,k) != (0,0)".into()));
            }
            base * rat_int(16) / rat_int(3) * rat_int((j_ + k_ + 2) * (j_ + k_ - 1))
        }
        ModeKind::B => {
            if j == 0 || k == 0 {
                return Err(Error::OutOfRange("mode B requires j,k >= 1".into()));
            }
            -base * rat_int(8) / rat_int(3)
                * rat_int((j_ + 2) * (j_ - 1) * (k_ + 2) * (k_ - 1))
        }
    };
    Ok(PiValue::real(coeff, 1))
}

/// Exact residuals (left minus right) of the four integration-by-parts
/// identities used to reduce the sphere second variation:
/// 1) Int (L Lbar + Lbar L) g / 2 = 0
/// 2) 2 Im Int Lbar g . L T g = Int |T g|^2
/// 3) 2 Re Int (L Lbar g)^2 = 2 Int |L Lbar g|^2 - Int |T g|^2
/// 4) Int g (L Lbar + Lbar L) g / 2 = -Int |L g|^2
pub fn parts_identities_check(g0: &SpherePolynomial) -> Result<[PiValue; 4]> {
    if !g0.is_real() {
        return Err(Error::Precondition(
            "parts identities require a real-valued polynomial".into(),
        ));
    }
    let lg = l(g0);
    let lbg = lbar(g0);
    let tg = t(g0);
    let llbg = l(&lbg);
    let lblg = lbar(&lg);
    let sym = llbg.add(&lblg).scale_rat(&Rat::new(1.into(), 2.into()));

    let r1 = integrate_sphere(&sym);

    let cross = integrate_sphere(&lbg.mul(&l(&tg)));
    // 2 Im(x) of an exact complex value, kept exact: 2 Im x = -i (x - conj x).
    let two_im = PiValue::new(
        Qc::new(cross.coeff.im.clone() + cross.coeff.im.clone(), Rat::zero()),
        cross.pi_pow,
    );
    let r2 = two_im.sub(&integrate_sphere(&tg.abs_sq()));

    let sq = integrate_sphere(&llbg.mul(&llbg));
    let two_re = PiValue::new(
        Qc::new(sq.coeff.re.clone() + sq.coeff.re.clone(), Rat::zero()),
        sq.pi_pow,
    );
    let rhs3 = integrate_sphere(&llbg.abs_sq())
        .scale(&rat_int(2))
        .sub(&integrate_sphere(&tg.abs_sq()));
    let r3 = two_re.sub(&rhs3);

    let r4 = integrate_sphere(&g0.mul(&sym)).add(&integrate_sphere(&lg.abs_sq()));

    Ok([r1, r2, r3, r4])
}

/// Solve X g = h for holomorphic h, where X = z d/dz + w d/dw + 2.
/// Monomials are eigenvectors: g_{ab} = h_{ab} / (a + b + 2).
pub fn solve_x(h: &SpherePolynomial) -> Result<SpherePolynomial> {
    if !h.is_holomorphic() {
        return Err(Error::NotHolomorphic);
    }
    let mut g = SpherePolynomial::zero();
    for (m, c) in h.terms() {
        let eig = rat_int((m.a + m.b + 2) as i64);
        g = g.add(&SpherePolynomial::monomial(
            *m,
            c.scale(&(Rat::one() / eig)),
        ));
    }
    Ok(g)
}

/// Apply X = z d/dz + w d/dw + 2 to a holomorphic polynomial.
pub fn apply_x(g: &SpherePolynomial) -> SpherePolynomial {
    let mut out = SpherePolynomial::zero();
    for (m, c) in g.terms() {
        out.add_term(*m, c.scale(&rat_int((m.a + m.b + 2) as i64)));
    }
    out
}

/// Jerison-Lee inequality report for holomorphic g:
/// ||g||_{L^4}^2 <= (1 / (sqrt(2) pi)) Int (|g|^2 + |Lg|^2).
///
/// Both sides are squared so the check is exact rational arithmetic at
/// grade pi^4; the floating `lhs`/`rhs` fields are for reporting only
/// (the square root is the single inexact step, with the exact radicand
/// attached).
#[derive(Clone, Debug)]
pub struct JlReport {
    /// sqrt(2) pi ( Int |g|^4 )^{1/2}, floating.
    pub lhs: f64,
    /// Int (|g|^2 + |Lg|^2), floating.
    pub rhs: f64,
    /// Exact (lhs)^2 = 2 pi^2 Int |g|^4.
    pub lhs_sq: PiValue,
    /// Exact (rhs)^2.
    pub rhs_sq: PiValue,
    /// Exact radicand Int |g|^4.
    pub quartic_integral: PiValue,
    /// lhs <= rhs, decided exactly on the squares.
    pub holds: bool,
    /// Exact equality of the squares (attained at constants).
    pub equality: bool,
}

pub fn jl_check(g: &SpherePolynomial) -> Result<JlReport> {
    if !g.is_holomorphic() {
        return Err(Error::NotHolomorphic);
    }
    let quartic = integrate_sphere(&g.abs_sq().mul(&g.abs_sq()));
    let rhs_int = integrate_sphere(&g.abs_sq().add(&l(g).abs_sq()));
    // lhs^2 = 2 pi^2 * quartic ; rhs^2 = rhs_int^2 ; both at grade pi^4.
    let lhs_sq = quartic.scale(&rat_int(2)).mul(&PiValue::real(Rat::one(), 2));
    let rhs_sq = rhs_int.mul(&rhs_int);
    let diff = rhs_sq.sub(&lhs_sq);
    let holds = !diff.coeff.re.is_negative();
    let equality = diff.is_zero();
    Ok(JlReport {
        lhs: lhs_sq.to_f64().max(0.0).sqrt(),
        rhs: rhs_int.to_f64(),
        lhs_sq,
        rhs_sq,
        quartic_integral: quartic,
        holds,
        equality,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn zp() -> SpherePolynomial {
        SpherePolynomial::var_z()
    }
    fn wp() -> SpherePolynomial {
        SpherePolynomial::var_w()
    }

    #[test]
    fn conj_swaps_exponents() {
        // conj(z wb) = zb w
        let p = zp().mul(&SpherePolynomial::var_wb());
        let q = SpherePolynomial::var_zb().mul(&wp());
        assert_eq!(p.conj(), q);
    }

    #[test]
    fn square_of_real_sum() {
        // (z + zb)^2 = z^2 + 2 z zb + zb^2
        let p = zp().add(&SpherePolynomial::var_zb());
        let sq = p.mul(&p);
        assert_eq!(sq.num_terms(), 3);
        let mid = sq
            .terms()
            .find(|(m, _)| **m == Monomial::new(1, 0, 1, 0))
            .unwrap()
            .1
            .clone();
        assert_eq!(mid, Qc::from_int(2));
    }

    #[test]
    fn scale_by_zero_prunes() {
        assert!(zp().scale(&Qc::zero()).is_zero());
    }

    #[test]
    fn field_images() {
        // L z = wb
        assert_eq!(l(&zp()), SpherePolynomial::var_wb());
        // T(z^j w^k) = i (j+k) z^j w^k
        let p = SpherePolynomial::monomial(Monomial::new(2, 3, 0, 0), Qc::one());
        let expect = p.scale(&Qc::new(Rat::zero(), rat_int(5)));
        assert_eq!(t(&p), expect);
        // L(z zb + w wb) = 0 (tangency to the sphere)
        let n = zp()
            .mul(&SpherePolynomial::var_zb())
            .add(&wp().mul(&SpherePolynomial::var_wb()));
        assert!(l(&n).is_zero());
        assert!(lbar(&n).is_zero());
        assert!(t(&n).is_zero());
        // S is the degree on homogeneous polynomials
        let h = zp().mul(&wp());
        assert_eq!(s(&h), h.scale_rat(&rat_int(2)));
    }

    #[test]
    fn sphere_integrals() {
        // Int 1 = 2 pi^2
        assert_eq!(
            integrate_sphere(&SpherePolynomial::one()),
            PiValue::real(rat_int(2), 2)
        );
        // Int z wb = 0
        let p = zp().mul(&SpherePolynomial::var_wb());
        assert!(integrate_sphere(&p).is_zero());
        // Int |z|^2 |w|^2 = 2 pi^2 / 3! = pi^2/3
        let p = zp()
            .mul(&SpherePolynomial::var_zb())
            .mul(&wp())
            .mul(&SpherePolynomial::var_wb());
        assert_eq!(integrate_sphere(&p), PiValue::real(rat(1, 3), 2));
    }

    #[test]
    fn ball_integrals() {
        assert_eq!(
            integrate_ball(&SpherePolynomial::one()),
            PiValue::real(rat(1, 2), 2)
        );
        let zz = zp().mul(&SpherePolynomial::var_zb());
        assert_eq!(integrate_ball(&zz), PiValue::real(rat(1, 6), 2));
        assert!(integrate_ball(&zp()).is_zero());
    }

    #[test]
    fn second_variation_examples() {
        // Example A at (2,0): 64 pi / 9
        let g = mode_polynomial(ModeKind::A, 2, 0);
        assert_eq!(second_variation_q(&g).unwrap(), PiValue::real(rat(64, 9), 1));
        // Null direction z wb + zb w
        let g = mode_polynomial(ModeKind::B, 1, 1);
        assert!(second_variation_q(&g).unwrap().is_zero());
        // Example B at (2,2): -64 pi / 45
        let g = mode_polynomial(ModeKind::B, 2, 2);
        assert_eq!(
            second_variation_q(&g).unwrap(),
            PiValue::real(rat(-64, 45), 1)
        );
    }

    #[test]
    fn second_variation_rejects_nonzero_mean() {
        assert!(second_variation_q(&SpherePolynomial::one()).is_err());
    }

    #[test]
    fn closed_forms() {
        assert!(closed_form_coeff(ModeKind::A, 1, 0).unwrap().is_zero());
        assert_eq!(
            closed_form_coeff(ModeKind::A, 2, 0).unwrap(),
            PiValue::real(rat(64, 9), 1)
        );
        assert!(closed_form_coeff(ModeKind::B, 1, 5).unwrap().is_zero());
        assert!(closed_form_coeff(ModeKind::A, 0, 0).is_err());
        assert!(closed_form_coeff(ModeKind::B, 0, 3).is_err());
    }

    #[test]
    fn parts_identities_exact_zero() {
        for g in [
            zp().add(&SpherePolynomial::var_zb()),
            mode_polynomial(ModeKind::B, 1, 1),
            SpherePolynomial::zero(),
            mode_polynomial(ModeKind::A, 3, 2),
        ] {
            let res = parts_identities_check(&g).unwrap();
            for r in res {
                assert!(r.is_zero(), "nonzero residual {:?} for {:?}", r, g);
            }
        }
    }

    #[test]
    fn solve_x_examples() {
        // h = 1 -> g = 1/2
        let g = solve_x(&SpherePolynomial::one()).unwrap();
        assert_eq!(g, SpherePolynomial::constant(Qc::new(rat(1, 2), Rat::zero())));
        // h = z^2 w -> g = z^2 w / 5
        let h = zp().mul(&zp()).mul(&wp());
        let g = solve_x(&h).unwrap();
        assert_eq!(g, h.scale_rat(&rat(1, 5)));
        // h = 3 + z -> g = 3/2 + z/3, and X g = h exactly
        let h = SpherePolynomial::constant(Qc::from_int(3)).add(&zp());
        let g = solve_x(&h).unwrap();
        assert_eq!(apply_x(&g), h);
        // non-holomorphic input rejected
        assert!(solve_x(&SpherePolynomial::var_zb()).is_err());
    }

    #[test]
    fn jl_examples() {
        // g = 1: equality, lhs = rhs = 2 pi^2
        let r = jl_check(&SpherePolynomial::one()).unwrap();
        assert!(r.holds && r.equality);
        assert_eq!(r.rhs_sq, PiValue::real(rat_int(4), 4));
        // g = z: lhs = 2 pi^2 / sqrt(3), rhs = 2 pi^2
        let r = jl_check(&zp()).unwrap();
        assert!(r.holds && !r.equality);
        assert_eq!(r.lhs_sq, PiValue::real(rat(4, 3), 4));
        assert_eq!(r.rhs_sq, PiValue::real(rat_int(4), 4));
        let expect = 2.0 * std::f64::consts::PI.powi(2) / 3f64.sqrt();
        assert!((r.lhs - expect).abs() < 1e-12 * expect);
        // g = z + w
        let r = jl_check(&zp().add(&wp())).unwrap();
        assert!(r.holds);
        assert!(jl_check(&SpherePolynomial::var_zb()).is_err());
    }
}
