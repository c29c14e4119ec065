//! Quadrature grids: Gauss-Legendre rules, the Hopf-coordinate tensor
//! grid on S^3, the radially extended ball grid, box grids for graph
//! bases, and a boundary-graded polar grid on the unit disk.
//!
//! Grid evaluation is embarrassingly parallel over nodes; summation is
//! chunked with a fixed chunk size so results are bit-identical
//! regardless of thread count.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;
use std::f64::consts::PI;

type C = Complex64;

const SUM_CHUNK: usize = 4096;

/// Gauss-Legendre nodes and weights on [-1, 1], by Newton iteration on
/// the Legendre polynomial.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1);
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        // Chebyshev-like initial guess.
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_and_deriv(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
        let (_, d) = legendre_and_deriv(n, 0.0);
        weights[n / 2] = 2.0 / (d * d);
    }
    (nodes, weights)
}

fn legendre_and_deriv(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    if n == 0 {
        return (1.0, 0.0);
    }
    if n == 1 {
        return (x, 1.0);
    }
    let d = n as f64 * (p0 - x * p1) / (1.0 - x * x);
    (p1, d)
}

/// Gauss-Legendre rule mapped to [a, b].
pub fn gauss_legendre_on(n: usize, a: f64, b: f64) -> (Vec<f64>, Vec<f64>) {
    let (xs, ws) = gauss_legendre(n);
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    (
        xs.iter().map(|x| mid + half * x).collect(),
        ws.iter().map(|w| w * half).collect(),
    )
}

fn chunked_sum(values: Vec<f64>) -> f64 {
    values
        .chunks(SUM_CHUNK)
        .map(|c| c.iter().sum::<f64>())
        .sum()
}

/// A quadrature node on S^3 (or a scaled copy of it in the ball grid).
#[derive(Clone, Copy, Debug)]
pub struct SphereNode {
    pub z: C,
    pub w: C,
    pub weight: f64,
}

/// Tensor quadrature on S^3 in Hopf coordinates
/// z = cos(a) e^{ib}, w = sin(a) e^{ic}, a in [0, pi/2], b, c in [0, 2pi),
/// with area element cos(a) sin(a) da db dc: Gauss-Legendre in a,
/// periodic trapezoid in b and c. Total weight is 2 pi^2.
#[derive(Clone, Debug)]
pub struct SphereGrid {
    pub n_alpha: usize,
    pub n_beta: usize,
    pub n_gamma: usize,
    pub nodes: Vec<SphereNode>,
}

impl SphereGrid {
    pub fn new(n_alpha: usize, n_beta: usize, n_gamma: usize) -> Self {
        assert!(n_alpha >= 2 && n_beta >= 2 && n_gamma >= 2, "counts >= 2");
        let (al, aw) = gauss_legendre_on(n_alpha, 0.0, PI / 2.0);
        let db = 2.0 * PI / n_beta as f64;
        let dg = 2.0 * PI / n_gamma as f64;
        let mut nodes = Vec::with_capacity(n_alpha * n_beta * n_gamma);
        for (a, wa) in al.iter().zip(&aw) {
            let (sa, ca) = a.sin_cos();
            let wgt_a = wa * ca * sa;
            for j in 0..n_beta {
                let b = db * j as f64;
                let zb = C::from_polar(ca, b);
                for k in 0..n_gamma {
                    let g = dg * k as f64;
                    nodes.push(SphereNode {
                        z: zb,
                        w: C::from_polar(sa, g),
                        weight: wgt_a * db * dg,
                    });
                }
            }
        }
        SphereGrid { n_alpha, n_beta, n_gamma, nodes }
    }

    pub fn refined(&self) -> Self {
        SphereGrid::new(2 * self.n_alpha, 2 * self.n_beta, 2 * self.n_gamma)
    }

    pub fn dims(&self) -> Vec<usize> {
        vec![self.n_alpha, self.n_beta, self.n_gamma]
    }

    pub fn total_weight(&self) -> f64 {
        chunked_sum(self.nodes.iter().map(|n| n.weight).collect())
    }

    /// Deterministic parallel quadrature of a real integrand.
    pub fn integrate<F>(&self, f: F) -> f64
    where
        F: Fn(&SphereNode) -> f64 + Send + Sync,
    {
        let vals: Vec<f64> = self
            .nodes
            .par_chunks(SUM_CHUNK)
            .map(|chunk| chunk.iter().map(|n| n.weight * f(n)).sum::<f64>())
            .collect();
        vals.iter().sum()
    }

    pub fn integrate_complex<F>(&self, f: F) -> C
    where
        F: Fn(&SphereNode) -> C + Send + Sync,
    {
        let vals: Vec<C> = self
            .nodes
            .par_chunks(SUM_CHUNK)
            .map(|chunk| {
                chunk
                    .iter()
                    .map(|n| n.weight * f(n))
                    .fold(C::ZERO, |a, b| a + b)
            })
            .collect();
        vals.iter().fold(C::ZERO, |a, b| a + b)
    }

    /// Fallible quadrature: the first node error aborts the sum.
    pub fn try_integrate<F>(&self, f: F) -> crate::Result<f64>
    where
        F: Fn(&SphereNode) -> crate::Result<f64> + Send + Sync,
    {
        let vals: Vec<crate::Result<f64>> = self
            .nodes
            .par_chunks(SUM_CHUNK)
            .map(|chunk| {
                let mut acc = 0.0;
                for n in chunk {
                    acc += n.weight * f(n)?;
                }
                Ok(acc)
            })
            .collect();
        let mut acc = 0.0;
        for v in vals {
            acc += v?;
        }
        Ok(acc)
    }
}

/// Radially extended sphere grid for the unit ball: nodes r * (z, w)
/// with Gauss-Legendre in r and weight r^3 dr d(sphere).
#[derive(Clone, Debug)]
pub struct BallGrid {
    pub n_r: usize,
    pub sphere_dims: Vec<usize>,
    pub nodes: Vec<SphereNode>,
}

impl BallGrid {
    pub fn new(n_r: usize, sphere: &SphereGrid) -> Self {
        let (rs, ws) = gauss_legendre_on(n_r, 0.0, 1.0);
        let mut nodes = Vec::with_capacity(n_r * sphere.nodes.len());
        for (r, wr) in rs.iter().zip(&ws) {
            let rw = wr * r.powi(3);
            for sn in &sphere.nodes {
                nodes.push(SphereNode {
                    z: sn.z * *r,
                    w: sn.w * *r,
                    weight: rw * sn.weight,
                });
            }
        }
        BallGrid { n_r, sphere_dims: sphere.dims(), nodes }
    }

    pub fn integrate<F>(&self, f: F) -> f64
    where
        F: Fn(&SphereNode) -> f64 + Send + Sync,
    {
        let vals: Vec<f64> = self
            .nodes
            .par_chunks(SUM_CHUNK)
            .map(|chunk| chunk.iter().map(|n| n.weight * f(n)).sum::<f64>())
            .collect();
        vals.iter().sum()
    }
}

/// Rectangular base box [x0,x1] x [y0,y1] x [u0,u1] in C x R.
#[derive(Clone, Copy, Debug, Serialize, PartialEq)]
pub struct BaseBox {
    pub x: (f64, f64),
    pub y: (f64, f64),
    pub u: (f64, f64),
}

impl BaseBox {
    pub fn new(x: (f64, f64), y: (f64, f64), u: (f64, f64)) -> Self {
        assert!(x.1 > x.0 && y.1 > y.0 && u.1 > u.0);
        BaseBox { x, y, u }
    }

    pub fn cube(half: f64) -> Self {
        BaseBox::new((-half, half), (-half, half), (-half, half))
    }

    pub fn volume(&self) -> f64 {
        (self.x.1 - self.x.0) * (self.y.1 - self.y.0) * (self.u.1 - self.u.0)
    }

    pub fn center(&self) -> (C, f64) {
        (
            C::new(0.5 * (self.x.0 + self.x.1), 0.5 * (self.y.0 + self.y.1)),
            0.5 * (self.u.0 + self.u.1),
        )
    }

    pub fn contains(&self, z: C, u: f64) -> bool {
        z.re >= self.x.0
            && z.re <= self.x.1
            && z.im >= self.y.0
            && z.im <= self.y.1
            && u >= self.u.0
            && u <= self.u.1
    }
}

#[derive(Clone, Copy, Debug)]
pub struct BoxNode {
    pub z: C,
    pub u: f64,
    pub weight: f64,
}

/// Gauss-Legendre tensor grid over a base box.
#[derive(Clone, Debug)]
pub struct BoxGrid {
    pub base: BaseBox,
    pub n: [usize; 3],
    pub nodes: Vec<BoxNode>,
}

impl BoxGrid {
    pub fn new(base: BaseBox, n: [usize; 3]) -> Self {
        let (xs, wx) = gauss_legendre_on(n[0], base.x.0, base.x.1);
        let (ys, wy) = gauss_legendre_on(n[1], base.y.0, base.y.1);
        let (us, wu) = gauss_legendre_on(n[2], base.u.0, base.u.1);
        let mut nodes = Vec::with_capacity(n[0] * n[1] * n[2]);
        for (x, wxi) in xs.iter().zip(&wx) {
            for (y, wyi) in ys.iter().zip(&wy) {
                let z = C::new(*x, *y);
                for (u, wui) in us.iter().zip(&wu) {
                    nodes.push(BoxNode { z, u: *u, weight: wxi * wyi * wui });
                }
            }
        }
        BoxGrid { base, n, nodes }
    }

    pub fn refined(&self) -> Self {
        BoxGrid::new(self.base, [2 * self.n[0], 2 * self.n[1], 2 * self.n[2]])
    }

    pub fn integrate<F>(&self, f: F) -> f64
    where
        F: Fn(&BoxNode) -> f64 + Send + Sync,
    {
        let vals: Vec<f64> = self
            .nodes
            .par_chunks(SUM_CHUNK)
            .map(|chunk| chunk.iter().map(|n| n.weight * f(n)).sum::<f64>())
            .collect();
        vals.iter().sum()
    }

    pub fn try_integrate<F>(&self, f: F) -> crate::Result<f64>
    where
        F: Fn(&BoxNode) -> crate::Result<f64> + Send + Sync,
    {
        let vals: Vec<crate::Result<f64>> = self
            .nodes
            .par_chunks(SUM_CHUNK)
            .map(|chunk| {
                let mut acc = 0.0;
                for n in chunk {
                    acc += n.weight * f(n)?;
                }
                Ok(acc)
            })
            .collect();
        let mut acc = 0.0;
        for v in vals {
            acc += v?;
        }
        Ok(acc)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct DiskNode {
    pub w: C,
    pub weight: f64,
}

/// Polar grid on the unit disk with panels geometrically graded toward
/// the boundary point w = 1, in both 1-r and the angle. Used for the
/// shear integrals, whose integrands concentrate (up to log divergence)
/// at w = 1.
#[derive(Clone, Debug)]
pub struct DiskGrid {
    pub rings: usize,
    pub sectors: usize,
    pub nodes: Vec<DiskNode>,
}

impl DiskGrid {
    /// `scale_min` is the finest panel scale (commensurate with the
    /// distance of the nearest singularity to the boundary); `ratio` the
    /// geometric grading; `min_panels` a floor on the panel count per
    /// direction; `nodes_per_panel` the Gauss-Legendre order per panel.
    pub fn graded(scale_min: f64, ratio: f64, min_panels: usize, nodes_per_panel: usize) -> Self {
        assert!(ratio > 0.0 && ratio < 1.0);
        let scale_min = scale_min.clamp(1e-12, 0.1);
        let needed = (scale_min.ln() / ratio.ln()).ceil() as usize + 1;
        let n_panels = needed.max(min_panels);

        // Panel boundaries in s = 1 - r and in |phi|/pi, both graded to 0.
        let mut bounds = Vec::with_capacity(n_panels + 1);
        let mut b = 1.0f64;
        for _ in 0..n_panels {
            bounds.push(b);
            b *= ratio;
        }
        bounds.push(0.0);

        let mut radial: Vec<(f64, f64)> = Vec::new(); // (r, wr)
        for win in bounds.windows(2) {
            let (hi, lo) = (win[0], win[1]);
            let (ss, ws) = gauss_legendre_on(nodes_per_panel, lo, hi);
            for (s, w) in ss.iter().zip(&ws) {
                radial.push((1.0 - s, *w));
            }
        }

        let mut angular: Vec<(f64, f64)> = Vec::new(); // (phi, wphi), phi in (0, pi]
        for win in bounds.windows(2) {
            let (hi, lo) = (win[0] * PI, win[1] * PI);
            let (ps, ws) = gauss_legendre_on(nodes_per_panel, lo, hi);
            for (p, w) in ps.iter().zip(&ws) {
                angular.push((*p, *w));
            }
        }

        let mut nodes = Vec::with_capacity(radial.len() * angular.len() * 2);
        for &(r, wr) in &radial {
            for &(phi, wp) in &angular {
                let weight = wr * wp * r;
                // Mirror-symmetric in phi.
                nodes.push(DiskNode { w: C::from_polar(r, phi), weight });
                nodes.push(DiskNode { w: C::from_polar(r, -phi), weight });
            }
        }
        DiskGrid {
            rings: radial.len(),
            sectors: 2 * angular.len(),
            nodes,
        }
    }

    /// One refinement step: finer grading and higher per-panel order.
    pub fn refined(&self, scale_min: f64, ratio: f64) -> Self {
        DiskGrid::graded(scale_min * 0.5, ratio, self.rings / 4, 12)
    }

    pub fn integrate<F>(&self, f: F) -> f64
    where
        F: Fn(C) -> f64 + Send + Sync,
    {
        let vals: Vec<f64> = self
            .nodes
            .par_chunks(SUM_CHUNK)
            .map(|chunk| chunk.iter().map(|n| n.weight * f(n.w)).sum::<f64>())
            .collect();
        vals.iter().sum()
    }
}

/// Tagged union mirroring the grid kinds used across the crate.
#[derive(Clone, Debug)]
pub enum QuadratureGrid {
    Sphere(SphereGrid),
    Ball(BallGrid),
    BaseBox(BoxGrid),
    Disk(DiskGrid),
}

impl QuadratureGrid {
    pub fn node_count(&self) -> usize {
        match self {
            QuadratureGrid::Sphere(g) => g.nodes.len(),
            QuadratureGrid::Ball(g) => g.nodes.len(),
            QuadratureGrid::BaseBox(g) => g.nodes.len(),
            QuadratureGrid::Disk(g) => g.nodes.len(),
        }
    }

    pub fn weights_positive(&self) -> bool {
        match self {
            QuadratureGrid::Sphere(g) => g.nodes.iter().all(|n| n.weight > 0.0),
            QuadratureGrid::Ball(g) => g.nodes.iter().all(|n| n.weight > 0.0),
            QuadratureGrid::BaseBox(g) => g.nodes.iter().all(|n| n.weight > 0.0),
            QuadratureGrid::Disk(g) => g.nodes.iter().all(|n| n.weight > 0.0),
        }
    }
}
