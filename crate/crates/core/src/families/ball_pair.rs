//! Isoperimetric quotient of the intersection of two balls,
//! parameterized by the intersection angle theta in (0, pi) and the
//! radius ratio R in (0, 1].
//!
//! The closed form is
//!   q(R, theta) = 8 sqrt(pi) N^{3/2} / D,
//!   N = R^{8/3} lambda + nu - R s (1 + R^{8/3} - (R + R^{5/3}) c) / A,
//!   D = R^4 lambda + nu - R s (1 + (2/3) R^2 s^2 + R^4 - (R + R^3) c) / A,
//! with c = cos theta, s = sin theta, A = 1 + R^2 - 2 R c,
//! lambda = arccos((R - c)/sqrt(A)), nu = arccos((1 - R c)/sqrt(A)).
//!
//! Near R = 0 both N and D cancel through several orders (N ~ R^{8/3},
//! D ~ R^4), so the module also carries an exact rearrangement in
//! u = R^{1/3}: writing each arccos via its sine and expanding
//! A - P^2 as an explicit polynomial in u kills every catastrophic
//! subtraction, giving n(u) = N/u^8 and d(u) = D/u^12 that are accurate
//! uniformly down to and including u = 0. The public q_ball_pair
//! dispatches between the direct coding and the rearranged one; their
//! agreement in the overlap is itself a checked invariant.

use crate::error::{Error, Result};
use crate::fit::{golden_min, nelder_mead, neville_to_zero};
use serde::Serialize;
use std::f64::consts::PI;

#[derive(Clone, Copy, Debug, Serialize)]
pub struct BallPairParams {
    pub r: f64,
    pub theta: f64,
}

impl BallPairParams {
    pub fn new(r: f64, theta: f64) -> Result<Self> {
        if !(0.0 < r && r <= 1.0) {
            return Err(Error::OutOfRange(format!("R = {r} not in (0, 1]")));
        }
        if !(0.0 < theta && theta < PI) {
            return Err(Error::OutOfRange(format!("theta = {theta} not in (0, pi)")));
        }
        Ok(BallPairParams { r, theta })
    }
}

/// Clamped arccos with a 1e-12 guard against rounding just outside [-1, 1].
fn acos_clamped(x: f64) -> Result<f64> {
    if x.abs() > 1.0 + 1e-12 {
        return Err(Error::OutOfRange(format!("arccos argument {x} outside [-1,1]")));
    }
    Ok(x.clamp(-1.0, 1.0).acos())
}

/// Direct coding of the printed closed form (arccos form of lambda, nu).
pub fn q_ball_pair_direct(p: BallPairParams) -> Result<f64> {
    let (r, th) = (p.r, p.theta);
    let (s, c) = th.sin_cos();
    let a = 1.0 + r * r - 2.0 * r * c;
    let sa = a.sqrt();
    let lambda = acos_clamped((r - c) / sa)?;
    let nu = acos_clamped((1.0 - r * c) / sa)?;
    let r83 = r.powf(8.0 / 3.0);
    let r53 = r.powf(5.0 / 3.0);
    let n = r83 * lambda + nu - r * s * (1.0 + r83 - (r + r53) * c) / a;
    let d = r.powi(4) * lambda + nu
        - r * s * (1.0 + (2.0 / 3.0) * r * r * s * s + r.powi(4) - (r + r.powi(3)) * c) / a;
    Ok(8.0 * PI.sqrt() * n.powf(1.5) / d)
}

/// asin(x) - x - x^3/6, divided by x^5, via the series (stable for
/// |x| <= ~0.5; used only at small R where x = R s / sqrt(A)).
fn asin_tail5_over_x5(x2: f64) -> f64 {
    // asin x = sum_k binom(2k,k) / (4^k (2k+1)) x^{2k+1}
    let mut total = 0.0;
    let mut binom = 6.0; // binom(4,2)
    let mut pow4 = 16.0; // 4^2
    let mut xp = 1.0;
    for k in 2..40 {
        let ck = binom / (pow4 * (2 * k + 1) as f64);
        total += ck * xp;
        xp *= x2;
        if ck * xp.abs() < 1e-22 {
            break;
        }
        // binom(2k+2, k+1) = binom(2k, k) * (2k+1)(2k+2)/(k+1)^2
        let kf = k as f64;
        binom *= (2.0 * kf + 1.0) * (2.0 * kf + 2.0) / ((kf + 1.0) * (kf + 1.0));
        pow4 *= 4.0;
    }
    total
}

/// Cancellation-free evaluation in u = R^{1/3}: returns
/// (n, d) = (N / u^8, D / u^12); q = 8 sqrt(pi) n^{3/2} / d.
/// Exact for u = 0, where n and d reduce to the half-space cap values.
fn q_stable_parts(u: f64, th: f64) -> (f64, f64) {
    let (s, c) = th.sin_cos();
    let u3 = u * u * u;
    let u5 = u3 * u * u;
    let u6 = u3 * u3;
    let a = 1.0 + u6 - 2.0 * u3 * c;
    let sa = a.sqrt();
    let lambda = s.atan2(u3 - c);
    let pn = 1.0 + u6 * u * u - (u3 + u5) * c;
    let pd = 1.0 + (2.0 / 3.0) * u6 * s * s + u6 * u6 - (u3 + u6 * u3) * c;
    // (A - PN^2) / u^5, expanded exactly: no cancellation at small u.
    let apn2_u5 = 2.0 * c + u * s * s - 2.0 * u3 * (1.0 + c * c) - u5 * c * c
        + 2.0 * c * (u6 + u6 * u * u)
        - u6 * u5;
    // W/u^9 where A - PD^2 = -(1/3) u^6 s^2 + W.
    let w_u9 = (2.0 / 3.0) * c * (3.0 + 2.0 * s * s)
        - u3 * (2.0 + (4.0 / 9.0) * s.powi(4) + 2.0 * c * c)
        + (2.0 / 3.0) * u6 * c * (3.0 + 2.0 * s * s)
        - u6 * u3 * (c * c + (4.0 / 3.0) * s * s)
        + 2.0 * u6 * u6 * c
        - u6 * u6 * u3;
    let xou = s / sa; // x / u^3 with x = sin(nu)
    let x2 = (u3 * xou) * (u3 * xou);
    let tail = asin_tail5_over_x5(x2);
    // n = N / u^8.
    let n = lambda + xou * apn2_u5 / (sa * (sa + pn)) + u * xou.powi(3) / 6.0
        + u5 * u * u * xou.powi(5) * tail;
    // d = D / u^12; the x^3/6 piece is folded against the leading term of
    // A - PD^2 (they cancel at order u^9), leaving explicit parts.
    let term1 = s * s * xou * (u3 * s * s / 3.0 - u6 * w_u9) / (6.0 * a * (sa + pd) * (sa + pd));
    let term2 = w_u9 * xou / (sa * (sa + pd));
    let d = lambda + term1 + term2 + u3 * xou.powi(5) * tail;
    (n, d)
}

fn q_stable(r: f64, th: f64) -> f64 {
    let (n, d) = q_stable_parts(r.cbrt(), th);
    8.0 * PI.sqrt() * n.powf(1.5) / d
}

/// Switch point between the direct and rearranged evaluations; both are
/// accurate to ~1e-9 in a wide band around it.
const R_SWITCH: f64 = 0.02;

/// The isoperimetric quotient q(R, theta) of a two-ball intersection.
pub fn q_ball_pair(p: BallPairParams) -> Result<f64> {
    if p.r > R_SWITCH {
        q_ball_pair_direct(p)
    } else {
        Ok(q_stable(p.r, p.theta))
    }
}

/// Continuous extension to the R = 0 edge (intersections of a ball with
/// a half-space): Richardson/Neville extrapolation of q along R -> 0 in
/// the variable t = R^{1/3} (the expansion of q is a power series in t).
/// Returns the extrapolated value and an error estimate.
pub fn q_ball_pair_limit(theta: f64) -> Result<(f64, f64)> {
    if !(0.0 <= theta && theta < PI) {
        return Err(Error::OutOfRange(format!("theta = {theta} not in [0, pi)")));
    }
    if theta == 0.0 {
        // Internally tangent: the intersection is a ball.
        return Ok((8.0 * PI, 0.0));
    }
    let ts: Vec<f64> = (0..8).map(|k| 0.08 * 0.7f64.powi(k)).collect();
    let qs: Vec<f64> = ts.iter().map(|t| q_stable(t * t * t, theta)).collect();
    let (val, est) = neville_to_zero(&ts, &qs);
    if !val.is_finite() || est > 1e-3 * val.abs() {
        return Err(Error::ExtrapolationFailed(format!(
            "estimate {est:.3e} at theta = {theta}"
        )));
    }
    Ok((val, est))
}

/// Limit of q along theta -> 0 at fixed R (internally tangent balls).
pub fn q_theta_zero_limit(_r: f64) -> f64 {
    8.0 * PI
}

/// Residual of the cubic expansion
/// q(R, theta) = 8 pi - 8 (1 - R^{1/3}) / (1 - R)^3 theta^3 + O(theta^4).
pub fn theta_expansion_residual(r: f64, theta: f64) -> Result<f64> {
    let q = q_ball_pair(BallPairParams::new(r, theta)?)?;
    let coeff = 8.0 * (1.0 - r.cbrt()) / (1.0 - r).powi(3);
    Ok(q - (8.0 * PI - coeff * theta.powi(3)))
}

#[derive(Clone, Debug, Serialize)]
pub struct MinimizeResult {
    pub r: f64,
    pub theta: f64,
    pub q: f64,
    pub scan_min: f64,
    pub scan_grid: [usize; 2],
    pub refined_by: String,
}

/// Coarse 64 x 64 scan of [0,1] x (0, pi - 0.05] (R = 0 column by the
/// limit extrapolation) followed by local refinement: 1-D golden
/// section along R = 0 when the scan minimum sits on that edge,
/// otherwise 2-D Nelder-Mead.
pub fn minimize_q() -> Result<MinimizeResult> {
    let n_r = 64;
    let n_t = 64;
    let theta_max = PI - 0.05;
    let mut best = (f64::INFINITY, 0.0f64, 0.0f64);
    for i in 0..n_r {
        let r = i as f64 / (n_r - 1) as f64;
        for j in 1..=n_t {
            let theta = theta_max * j as f64 / n_t as f64;
            let q = if r == 0.0 {
                q_ball_pair_limit(theta)?.0
            } else {
                q_ball_pair(BallPairParams::new(r, theta)?)?
            };
            if q < best.0 {
                best = (q, r, theta);
            }
        }
    }
    let (scan_min, r0, t0) = best;
    let dr = 1.0 / (n_r - 1) as f64;
    if r0 <= dr + 1e-12 {
        // Minimum on (or adjacent to) the R = 0 edge: refine theta there.
        let f = |th: f64| q_ball_pair_limit(th).map(|v| v.0).unwrap_or(f64::INFINITY);
        let (theta, q) = golden_min(f, (t0 - 0.2).max(1e-3), (t0 + 0.2).min(theta_max), 1e-9);
        Ok(MinimizeResult {
            r: 0.0,
            theta,
            q,
            scan_min,
            scan_grid: [n_r, n_t],
            refined_by: "golden-section on R=0 column".into(),
        })
    } else {
        let f = |p: &[f64]| {
            let r = p[0].clamp(1e-6, 1.0);
            let th = p[1].clamp(1e-6, theta_max);
            q_ball_pair(BallPairParams::new(r, th).unwrap()).unwrap_or(f64::INFINITY)
        };
        let nm = nelder_mead(
            f,
            &[r0, t0],
            &[(1e-6, 1.0), (1e-6, theta_max)],
            0.05,
            1e-6,
            400,
        )?;
        Ok(MinimizeResult {
            r: nm.point[0],
            theta: nm.point[1],
            q: nm.value,
            scan_min,
            scan_grid: [n_r, n_t],
            refined_by: "nelder-mead".into(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    /// Independent oracle for the R = 0 column, derived from the
    /// half-space cap geometry (cap area and cap volume in closed form):
    /// with chi = pi - theta,
    /// q0 = 24 sqrt(pi) (chi - sin chi cos chi)^{3/2}
    ///      / (3 chi - sin chi cos chi (5 - 2 cos^2 chi)).
    fn cap_oracle(theta: f64) -> f64 {
        let chi = PI - theta;
        let (s, c) = chi.sin_cos();
        24.0 * PI.sqrt() * (chi - s * c).powf(1.5) / (3.0 * chi - s * c * (5.0 - 2.0 * c * c))
    }

    #[test]
    fn two_codings_agree() {
        // Direct arccos coding vs the rearranged coding at interior points.
        for (r, th) in [(0.5, PI / 2.0), (0.3, 1.0), (0.9, 2.5), (0.05, 0.7)] {
            let p = BallPairParams::new(r, th).unwrap();
            let a = q_ball_pair_direct(p).unwrap();
            let b = q_stable(r, th);
            assert_relative_eq!(a, b, max_relative = 1e-9);
        }
    }

    #[test]
    fn theta_to_zero_gives_8pi() {
        for r in [0.2, 0.5, 0.8] {
            let q = q_ball_pair(BallPairParams::new(r, 1e-5).unwrap()).unwrap();
            assert_relative_eq!(q, 8.0 * PI, max_relative = 1e-10);
        }
    }

    #[test]
    fn increases_toward_pi() {
        let q1 = q_ball_pair(BallPairParams::new(0.9, 3.0).unwrap()).unwrap();
        let q2 = q_ball_pair(BallPairParams::new(0.9, 3.1).unwrap()).unwrap();
        assert!(q2 > q1 && q1 > 8.0 * PI);
    }

    #[test]
    fn limit_matches_cap_oracle() {
        for theta in [0.5, 1.0, 1.5, 1.9473, 2.5] {
            let (v, est) = q_ball_pair_limit(theta).unwrap();
            assert_relative_eq!(v, cap_oracle(theta), max_relative = 1e-7);
            assert!(est < 1e-6 * v);
        }
    }

    #[test]
    fn limit_continuity_from_interior() {
        // Interior values Cauchy-approach the limit as R -> 0.
        let theta = 1.2;
        let (lim, _) = q_ball_pair_limit(theta).unwrap();
        let mut prev_gap = f64::INFINITY;
        for r in [1e-2, 1e-3, 1e-4, 1e-6] {
            let q = q_ball_pair(BallPairParams::new(r, theta).unwrap()).unwrap();
            let gap = (q - lim).abs();
            assert!(gap < prev_gap, "gap should shrink: {gap} vs {prev_gap}");
            prev_gap = gap;
        }
        assert!(prev_gap < 2e-2);
    }

    #[test]
    fn corner_expansion_along_diagonal() {
        // Along theta = 1 - R: q ~ 8 pi - 8 theta^3 / (3 (theta^2 + (1-R)^2)).
        for t in [0.05, 0.01] {
            let q = q_ball_pair(BallPairParams::new(1.0 - t, t).unwrap()).unwrap();
            let expect = 8.0 * PI - 8.0 * t.powi(3) / (3.0 * (t * t + t * t));
            assert_relative_eq!(q, expect, epsilon = 2.0 * t * t);
        }
    }

    #[test]
    fn cubic_expansion_slope() {
        // log-log slope of the residual >= 3.9 over theta in [1e-3, 1e-1].
        for r in [0.3, 0.5, 0.7] {
            let thetas: Vec<f64> = (0..12)
                .map(|k| 1e-3 * (100.0f64).powf(k as f64 / 11.0))
                .collect();
            let (xs, ys): (Vec<f64>, Vec<f64>) = thetas
                .iter()
                .map(|&th| {
                    let resid = theta_expansion_residual(r, th).unwrap().abs();
                    (th.ln(), resid.max(1e-300).ln())
                })
                .unzip();
            let (_a, slope, _rms) = crate::fit::linear_fit(&xs, &ys);
            assert!(slope >= 3.9, "slope {slope} at R = {r}");
        }
    }

    #[test]
    fn minimum_at_printed_digits() {
        let m = minimize_q().unwrap();
        assert!(m.r.abs() <= 1e-3);
        assert_relative_eq!(m.theta, 1.9473, epsilon = 1e-3);
        assert_relative_eq!(m.q, 17.0297, epsilon = 1e-3);
        // argmin definition sanity: scan minimum is no smaller.
        assert!(m.scan_min >= m.q - 1e-9);
    }

    #[test]
    fn restricted_scan_small_theta_maximizes_at_spheres() {
        // On theta in (0, 0.5] the min over the scan approaches 8 pi at
        // the theta edge and every value stays below 8 pi.
        let mut min_q = f64::INFINITY;
        for i in 0..32 {
            let r = i as f64 / 31.0;
            for j in 1..=32 {
                let theta = 0.5 * j as f64 / 32.0;
                let q = if r == 0.0 {
                    q_ball_pair_limit(theta).unwrap().0
                } else {
                    q_ball_pair(BallPairParams::new(r, theta).unwrap()).unwrap()
                };
                assert!(q <= 8.0 * PI + 1e-9);
                min_q = min_q.min(q);
            }
        }
        let q_edge = q_ball_pair(BallPairParams::new(0.5, 1e-4).unwrap()).unwrap();
        assert_relative_eq!(q_edge, 8.0 * PI, max_relative = 1e-8);
        assert!(min_q < q_edge);
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(BallPairParams::new(0.0, 1.0).is_err());
        assert!(BallPairParams::new(1.1, 1.0).is_err());
        assert!(BallPairParams::new(0.5, PI).is_err());
        assert!(q_ball_pair_limit(PI).is_err());
    }
}
