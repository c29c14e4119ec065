//! Small numerics toolbox shared by the variation and family studies:
//! polynomial least squares (with condition number), straight-line fits,
//! Neville extrapolation to zero, golden-section search, and a bounded
//! Nelder-Mead simplex.

use crate::error::{Error, Result};
use nalgebra::{DMatrix, DVector};
use serde::Serialize;

/// Least-squares polynomial fit of degree `deg`, with the abscissae
/// rescaled by their max modulus for conditioning. Returns coefficients
/// in the original variable, the rms residual, and the condition number
/// of the scaled Vandermonde matrix.
#[derive(Clone, Debug, Serialize)]
pub struct PolyFit {
    pub coeffs: Vec<f64>,
    pub residual_rms: f64,
    pub condition: f64,
}

pub fn polyfit(xs: &[f64], ys: &[f64], deg: usize) -> Result<PolyFit> {
    assert_eq!(xs.len(), ys.len());
    if xs.len() < deg + 1 {
        return Err(Error::Precondition(format!(
            "need at least {} samples for a degree-{} fit",
            deg + 1,
            deg
        )));
    }
    let scale = xs.iter().fold(0.0f64, |a, x| a.max(x.abs())).max(1e-300);
    let n = xs.len();
    let mut v = DMatrix::zeros(n, deg + 1);
    for (i, x) in xs.iter().enumerate() {
        let t = x / scale;
        let mut p = 1.0;
        for j in 0..=deg {
            v[(i, j)] = p;
            p *= t;
        }
    }
    let rhs = DVector::from_column_slice(ys);
    let svd = v.clone().svd(true, true);
    let smax = svd.singular_values.max();
    let smin = svd.singular_values.min();
    let condition = if smin > 0.0 { smax / smin } else { f64::INFINITY };
    let sol = svd
        .solve(&rhs, 1e-14 * smax)
        .map_err(|_| Error::IllConditionedFit(condition))?;
    let resid = (&v * &sol - &rhs).norm() / (n as f64).sqrt();
    let coeffs = sol
        .iter()
        .enumerate()
        .map(|(j, c)| c / scale.powi(j as i32))
        .collect();
    Ok(PolyFit { coeffs, residual_rms: resid, condition })
}

/// Ordinary least squares line y = a + b x; returns (a, b, rms residual).
pub fn linear_fit(xs: &[f64], ys: &[f64]) -> (f64, f64, f64) {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let b = sxy / sxx;
    let a = my - b * mx;
    let rms = (xs
        .iter()
        .zip(ys)
        .map(|(x, y)| {
            let e = y - a - b * x;
            e * e
        })
        .sum::<f64>()
        / n)
        .sqrt();
    (a, b, rms)
}

/// Neville polynomial extrapolation of (t_k, f_k) to t = 0. Returns the
/// extrapolant and the last-correction error estimate.
pub fn neville_to_zero(ts: &[f64], fs: &[f64]) -> (f64, f64) {
    assert_eq!(ts.len(), fs.len());
    let n = ts.len();
    let mut tab = fs.to_vec();
    let mut best = tab[0];
    let mut err = f64::INFINITY;
    for k in 1..n {
        for i in 0..n - k {
            // P_{i..i+k}(0) from P_{i..i+k-1} and P_{i+1..i+k}.
            tab[i] = (ts[i + k] * tab[i] - ts[i] * tab[i + 1]) / (ts[i + k] - ts[i]);
        }
        err = (tab[0] - best).abs();
        best = tab[0];
    }
    (best, err)
}

/// Golden-section minimization of a unimodal function on [a, b].
pub fn golden_min<F: FnMut(f64) -> f64>(mut f: F, mut a: f64, mut b: f64, tol: f64) -> (f64, f64) {
    let gr = (5.0f64.sqrt() - 1.0) / 2.0;
    let mut c = b - gr * (b - a);
    let mut d = a + gr * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    while (b - a).abs() > tol {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = f(d);
        }
    }
    let x = 0.5 * (a + b);
    let fx = f(x);
    (x, fx)
}

#[derive(Clone, Debug, Serialize)]
pub struct NelderMeadStep {
    pub point: Vec<f64>,
    pub value: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct NelderMeadResult {
    pub point: Vec<f64>,
    pub value: f64,
    pub iterations: usize,
    pub converged: bool,
    pub trace: Vec<NelderMeadStep>,
}

/// Nelder-Mead over a parameter box, clamping trial points to the box.
/// The trace records each accepted best point.
pub fn nelder_mead<F>(
    f: F,
    x0: &[f64],
    bounds: &[(f64, f64)],
    scale: f64,
    tol: f64,
    max_iter: usize,
) -> Result<NelderMeadResult>
where
    F: Fn(&[f64]) -> f64,
{
    let dim = x0.len();
    assert_eq!(bounds.len(), dim);
    let clamp = |x: &mut Vec<f64>| {
        for (xi, (lo, hi)) in x.iter_mut().zip(bounds) {
            *xi = xi.clamp(*lo, *hi);
        }
    };
    let mut simplex: Vec<Vec<f64>> = Vec::with_capacity(dim + 1);
    simplex.push(x0.to_vec());
    for i in 0..dim {
        let mut p = x0.to_vec();
        let step = scale * (bounds[i].1 - bounds[i].0).max(1e-12);
        p[i] = if p[i] + step <= bounds[i].1 { p[i] + step } else { p[i] - step };
        simplex.push(p);
    }
    let mut values: Vec<f64> = simplex.iter().map(|p| f(p)).collect();
    let mut trace = Vec::new();
    let mut converged = false;
    let mut iters = 0;

    for it in 0..max_iter {
        iters = it + 1;
        // Order ascending by value.
        let mut idx: Vec<usize> = (0..=dim).collect();
        idx.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
        let reorder: Vec<Vec<f64>> = idx.iter().map(|&i| simplex[i].clone()).collect();
        let revals: Vec<f64> = idx.iter().map(|&i| values[i]).collect();
        simplex = reorder;
        values = revals;
        trace.push(NelderMeadStep { point: simplex[0].clone(), value: values[0] });

        let spread = values[dim] - values[0];
        let size: f64 = (0..dim)
            .map(|j| {
                (0..=dim)
                    .map(|i| simplex[i][j])
                    .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
                        (lo.min(v), hi.max(v))
                    })
            })
            .map(|(lo, hi)| hi - lo)
            .fold(0.0, f64::max);
        if spread.abs() < tol && size < tol {
            converged = true;
            break;
        }
        if size < 1e-15 {
            return Err(Error::OptimizerFailed("simplex collapsed".into()));
        }

        // Centroid of all but worst.
        let mut cen = vec![0.0; dim];
        for p in simplex.iter().take(dim) {
            for (c, v) in cen.iter_mut().zip(p) {
                *c += v / dim as f64;
            }
        }
        let worst = simplex[dim].clone();
        let mk = |alpha: f64| -> Vec<f64> {
            let mut p: Vec<f64> = cen
                .iter()
                .zip(&worst)
                .map(|(c, w)| c + alpha * (c - w))
                .collect();
            clamp(&mut p);
            p
        };
        let refl = mk(1.0);
        let f_refl = f(&refl);
        if f_refl < values[0] {
            let exp = mk(2.0);
            let f_exp = f(&exp);
            if f_exp < f_refl {
                simplex[dim] = exp;
                values[dim] = f_exp;
            } else {
                simplex[dim] = refl;
                values[dim] = f_refl;
            }
        } else if f_refl < values[dim - 1] {
            simplex[dim] = refl;
            values[dim] = f_refl;
        } else {
            let con = mk(-0.5);
            let f_con = f(&con);
            if f_con < values[dim] {
                simplex[dim] = con;
                values[dim] = f_con;
            } else {
                // Shrink toward best.
                for i in 1..=dim {
                    let best = simplex[0].clone();
                    for (pj, bj) in simplex[i].iter_mut().zip(&best) {
                        *pj = bj + 0.5 * (*pj - bj);
                    }
                    values[i] = f(&simplex[i]);
                }
            }
        }
    }

    let mut idx: Vec<usize> = (0..=dim).collect();
    idx.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    Ok(NelderMeadResult {
        point: simplex[idx[0]].clone(),
        value: values[idx[0]],
        iterations: iters,
        converged,
        trace,
    })
}
