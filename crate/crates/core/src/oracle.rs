//! Brute-force checks for the closed-form maximum-chroma solver.
//!
//! The boundary oracle walks the path black -> pure hue -> white on the
//! surface of the cube. The pure color at a hue is built with the standard
//! HSV-style channel formula rather than the solver's sector table, and the
//! path is searched by sampling plus bisection on intensity, so neither the
//! critical intensity nor the branch choice of the solver is reused.

use rayon::prelude::*;
use serde::Serialize;

use crate::color::{hue_distance, max_chroma_color, normalize_hue, rgb_to_hci, Rgb, LUMA_WEIGHTS};
use crate::error::{Error, Result};

/// Largest per-axis lattice accepted by [`cube_scan_max_chroma`].
pub const CUBE_SCAN_MAX_RESOLUTION: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OracleConfig {
    grid_resolution: usize,
    hue_tolerance: f64,
    intensity_tolerance: f64,
}

impl OracleConfig {
    pub fn new(
        grid_resolution: usize,
        hue_tolerance: f64,
        intensity_tolerance: f64,
    ) -> Result<Self> {
        if grid_resolution < 11 {
            return Err(Error::OracleResolution(grid_resolution));
        }
        if !(hue_tolerance > 0.0 && intensity_tolerance > 0.0) {
            return Err(Error::OracleTolerance);
        }
        Ok(OracleConfig {
            grid_resolution,
            hue_tolerance,
            intensity_tolerance,
        })
    }

    pub fn grid_resolution(&self) -> usize {
        self.grid_resolution
    }

    pub fn hue_tolerance(&self) -> f64 {
        self.hue_tolerance
    }

    pub fn intensity_tolerance(&self) -> f64 {
        self.intensity_tolerance
    }
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            grid_resolution: 101,
            hue_tolerance: 1e-6,
            intensity_tolerance: 1e-12,
        }
    }
}

fn luma(c: [f64; 3]) -> f64 {
    c.iter().zip(LUMA_WEIGHTS).map(|(v, w)| v * w).sum()
}

/// Chroma-one color at `hue`: `f(n) = 1 - max(0, min(j, 4 - j, 1))` with
/// `j = (n + hue / 60) mod 6` and `n = 5, 3, 1` for red, green, blue.
fn pure_color(hue: f64) -> [f64; 3] {
    let h = normalize_hue(hue) / 60.0;
    [5.0, 3.0, 1.0].map(|n: f64| {
        let j = (n + h).rem_euclid(6.0);
        1.0 - j.min(4.0 - j).clamp(0.0, 1.0)
    })
}

/// Point at parameter `t` in `[0, 2]` on the boundary path: `t * pure` for
/// `t <= 1`, then `u + (1 - u) * pure` with `u = t - 1`.
fn boundary_point(pure: [f64; 3], t: f64) -> [f64; 3] {
    if t <= 1.0 {
        pure.map(|p| t * p)
    } else {
        let u = t - 1.0;
        pure.map(|p| u + (1.0 - u) * p)
    }
}

/// Finds the maximum-chroma color at `(hue, intensity)` by searching the
/// cube boundary path. Returns the color and its chroma.
pub fn brute_force_max_chroma(hue: f64, intensity: f64, cfg: &OracleConfig) -> (Rgb, f64) {
    let pure = pure_color(hue);
    let n = cfg.grid_resolution;
    // samples on both segments; t = 1 is shared
    let ts: Vec<f64> = (0..n)
        .map(|j| j as f64 / (n - 1) as f64)
        .chain((1..n).map(|j| 1.0 + j as f64 / (n - 1) as f64))
        .collect();
    let lum: Vec<f64> = ts.iter().map(|&t| luma(boundary_point(pure, t))).collect();

    let nearest = (0..ts.len())
        .min_by(|&a, &b| {
            (lum[a] - intensity)
                .abs()
                .total_cmp(&(lum[b] - intensity).abs())
        })
        .expect("path has samples");

    let mut t = ts[nearest];
    if (lum[nearest] - intensity).abs() > cfg.intensity_tolerance {
        // intensity rises along the path, so a bracketing neighbour exists
        let (mut lo, mut hi) = if lum[nearest] < intensity {
            (ts[nearest], ts[(nearest + 1).min(ts.len() - 1)])
        } else {
            (ts[nearest.saturating_sub(1)], ts[nearest])
        };
        for _ in 0..200 {
            t = 0.5 * (lo + hi);
            let i = luma(boundary_point(pure, t));
            if (i - intensity).abs() <= cfg.intensity_tolerance || hi - lo <= 1e-16 {
                break;
            }
            if i < intensity {
                lo = t;
            } else {
                hi = t;
            }
        }
    }
    let [r, g, b] = boundary_point(pure, t);
    let color = Rgb::clamped(r, g, b);
    (color, color.chroma())
}

/// Highest-chroma lattice point of the cube whose hue and intensity fall
/// within the given windows of the target. Grays count as matching any hue.
///
/// Scans `resolution^3` points, so resolution is capped at
/// [`CUBE_SCAN_MAX_RESOLUTION`].
pub fn cube_scan_max_chroma(
    hue: f64,
    intensity: f64,
    resolution: usize,
    hue_window: f64,
    intensity_window: f64,
) -> Result<Option<(Rgb, f64)>> {
    if !(2..=CUBE_SCAN_MAX_RESOLUTION).contains(&resolution) {
        return Err(Error::OracleResolution(resolution));
    }
    let step = 1.0 / (resolution - 1) as f64;
    let mut best: Option<(Rgb, f64)> = None;
    for ri in 0..resolution {
        for gi in 0..resolution {
            for bi in 0..resolution {
                let c = Rgb::clamped(ri as f64 * step, gi as f64 * step, bi as f64 * step);
                let hci = rgb_to_hci(c);
                if (hci.intensity - intensity).abs() > intensity_window {
                    continue;
                }
                if let Some(h) = hci.hue {
                    if hue_distance(h, hue) > hue_window {
                        continue;
                    }
                }
                if best.is_none_or(|(_, bc)| hci.chroma > bc) {
                    best = Some((c, hci.chroma));
                }
            }
        }
    }
    Ok(best)
}

/// Worst-case disagreement between a solver and the boundary oracle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct VerifyReport {
    pub points: usize,
    pub max_abs_chroma_gap: f64,
    pub max_rgb_gap: f64,
    /// `(hue, intensity)` where the chroma gap is largest.
    pub worst_point: (f64, f64),
}

/// Compares [`max_chroma_color`] with the oracle on a `grid_hue x grid_i`
/// lattice over `[0, 360) x [0, 1]`.
pub fn verify_solver(grid_hue: usize, grid_i: usize, cfg: &OracleConfig) -> Result<VerifyReport> {
    verify_solver_with(max_chroma_color, grid_hue, grid_i, cfg)
}

/// [`verify_solver`] for an arbitrary solver.
pub fn verify_solver_with<F>(
    solver: F,
    grid_hue: usize,
    grid_i: usize,
    cfg: &OracleConfig,
) -> Result<VerifyReport>
where
    F: Fn(f64, f64) -> Rgb + Sync,
{
    if grid_hue < 2 || grid_i < 2 {
        return Err(Error::VerifyGrid {
            hue: grid_hue,
            intensity: grid_i,
        });
    }
    let gaps: Vec<(f64, f64, f64, f64)> = (0..grid_hue * grid_i)
        .into_par_iter()
        .map(|idx| {
            let hue = 360.0 * (idx / grid_i) as f64 / grid_hue as f64;
            let intensity = (idx % grid_i) as f64 / (grid_i - 1) as f64;
            let solved = solver(hue, intensity);
            let (oracle, oracle_chroma) = brute_force_max_chroma(hue, intensity, cfg);
            (
                hue,
                intensity,
                (solved.chroma() - oracle_chroma).abs(),
                solved.max_abs_diff(&oracle),
            )
        })
        .collect();

    let mut report = VerifyReport {
        points: gaps.len(),
        max_abs_chroma_gap: 0.0,
        max_rgb_gap: 0.0,
        worst_point: (0.0, 0.0),
    };
    for (hue, intensity, chroma_gap, rgb_gap) in gaps {
        if chroma_gap > report.max_abs_chroma_gap {
            report.max_abs_chroma_gap = chroma_gap;
            report.worst_point = (hue, intensity);
        }
        report.max_rgb_gap = report.max_rgb_gap.max(rgb_gap);
    }
    Ok(report)
}
