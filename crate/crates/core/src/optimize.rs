//! Exhaustive grid search over the starting hue of a scale.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::scale::{ColorScale, ScaleSpec, DEFAULT_SAMPLES};

pub const DEFAULT_GRID_STEP: f64 = 0.25;

/// Minimum intensities of the reference parameter grid.
pub const GRID16_I_MINS: [f64; 2] = [0.0, 0.1];
/// Maximum intensities of the reference parameter grid.
pub const GRID16_I_MAXS: [f64; 2] = [0.9, 1.0];
/// Hue spans of the reference parameter grid.
pub const GRID16_SPANS: [f64; 4] = [-360.0, -300.0, 300.0, 360.0];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Objective {
    Max,
    Min,
}

impl Objective {
    /// Whether `candidate` strictly beats `incumbent`.
    pub fn improves(self, candidate: f64, incumbent: f64) -> bool {
        match self {
            Objective::Max => candidate > incumbent,
            Objective::Min => candidate < incumbent,
        }
    }
}

impl fmt::Display for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Objective::Max => "max",
            Objective::Min => "min",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SweepSpec {
    theta_span: f64,
    i_min: f64,
    i_max: f64,
    objective: Objective,
    grid_step: f64,
    samples: usize,
}

impl SweepSpec {
    pub fn new(
        theta_span: f64,
        i_min: f64,
        i_max: f64,
        objective: Objective,
        grid_step: f64,
        samples: usize,
    ) -> Result<Self> {
        grid_points(grid_step)?;
        // validates span, intensities and samples
        ScaleSpec::new(0.0, theta_span, i_min, i_max, samples)?;
        Ok(SweepSpec {
            theta_span,
            i_min,
            i_max,
            objective,
            grid_step,
            samples,
        })
    }

    /// Sweep at the default grid step and quadrature resolution.
    pub fn with_defaults(
        theta_span: f64,
        i_min: f64,
        i_max: f64,
        objective: Objective,
    ) -> Result<Self> {
        Self::new(
            theta_span,
            i_min,
            i_max,
            objective,
            DEFAULT_GRID_STEP,
            DEFAULT_SAMPLES,
        )
    }

    pub fn theta_span(&self) -> f64 {
        self.theta_span
    }

    pub fn i_min(&self) -> f64 {
        self.i_min
    }

    pub fn i_max(&self) -> f64 {
        self.i_max
    }

    pub fn objective(&self) -> Objective {
        self.objective
    }

    pub fn grid_step(&self) -> f64 {
        self.grid_step
    }

    pub fn samples(&self) -> usize {
        self.samples
    }

    /// Candidate starting hues `0, step, ..., 360 - step`.
    pub fn grid(&self) -> Vec<f64> {
        let n = grid_points(self.grid_step).expect("validated at construction");
        (0..n).map(|j| j as f64 * self.grid_step).collect()
    }

    pub fn scale_spec(&self, theta_start: f64) -> ScaleSpec {
        ScaleSpec::new(
            theta_start,
            self.theta_span,
            self.i_min,
            self.i_max,
            self.samples,
        )
        .expect("validated at construction")
    }
}

/// Number of grid points for a step that must tile the circle.
fn grid_points(step: f64) -> Result<usize> {
    if !(step.is_finite() && step > 0.0 && step <= 360.0) {
        return Err(Error::GridStep(step));
    }
    let n = 360.0 / step;
    let rounded = n.round();
    if (n - rounded).abs() > 1e-9 * n.max(1.0) {
        return Err(Error::GridStep(step));
    }
    Ok(rounded as usize)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SweepEntry {
    pub theta_start: f64,
    pub avg_chroma: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepResult {
    pub spec: SweepSpec,
    pub table: Vec<SweepEntry>,
    pub best_theta_start: f64,
    pub best_avg_chroma: f64,
    #[serde(skip)]
    pub best_scale: ColorScale,
}

/// Index of the extreme entry; the earliest wins ties.
pub fn best_index(values: &[f64], objective: Objective) -> Option<usize> {
    let mut best: Option<usize> = None;
    for (j, &v) in values.iter().enumerate() {
        match best {
            Some(b) if !objective.improves(v, values[b]) => {}
            _ => best = Some(j),
        }
    }
    best
}

/// Average chroma of the scale starting at every grid hue, and the best one.
pub fn sweep(spec: &SweepSpec) -> SweepResult {
    let table: Vec<SweepEntry> = spec
        .grid()
        .into_par_iter()
        .map(|theta_start| SweepEntry {
            theta_start,
            avg_chroma: ColorScale::build(spec.scale_spec(theta_start)).average_chroma(),
        })
        .collect();
    let values: Vec<f64> = table.iter().map(|e| e.avg_chroma).collect();
    let best = best_index(&values, spec.objective).expect("grid is never empty");
    let best_theta_start = table[best].theta_start;
    SweepResult {
        spec: *spec,
        best_theta_start,
        best_avg_chroma: table[best].avg_chroma,
        best_scale: ColorScale::build(spec.scale_spec(best_theta_start)),
        table,
    }
}

/// Parameter triples `(i_min, i_max, span)` of the reference grid, with
/// `i_min` outermost and `span` innermost.
pub fn grid16_params() -> Vec<(f64, f64, f64)> {
    let mut out = Vec::with_capacity(16);
    for &i_min in &GRID16_I_MINS {
        for &i_max in &GRID16_I_MAXS {
            for &span in &GRID16_SPANS {
                out.push((i_min, i_max, span));
            }
        }
    }
    out
}

/// Runs [`sweep`] on all 16 combinations of the reference grid, in the
/// order of [`grid16_params`].
pub fn reference_grid16(
    grid_step: f64,
    samples: usize,
    objective: Objective,
) -> Result<Vec<SweepResult>> {
    grid16_params()
        .into_iter()
        .map(|(i_min, i_max, span)| {
            SweepSpec::new(span, i_min, i_max, objective, grid_step, samples).map(|s| sweep(&s))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_step_must_tile_the_circle() {
        assert!(matches!(
            SweepSpec::new(360.0, 0.0, 1.0, Objective::Max, 7.0, 64),
            Err(Error::GridStep(_))
        ));
        assert!(SweepSpec::new(360.0, 0.0, 1.0, Objective::Max, 0.0, 64).is_err());
        assert!(SweepSpec::new(360.0, 0.0, 1.0, Objective::Max, -1.0, 64).is_err());
        let s = SweepSpec::new(360.0, 0.0, 1.0, Objective::Max, 0.25, 64).unwrap();
        let g = s.grid();
        assert_eq!(g.len(), 1440);
        assert_eq!(g[0], 0.0);
        assert_eq!(*g.last().unwrap(), 359.75);
    }

    #[test]
    fn sweep_spec_checks_scale_parameters() {
        assert!(matches!(
            SweepSpec::new(0.0, 0.0, 1.0, Objective::Max, 1.0, 64),
            Err(Error::HueSpan(_))
        ));
        assert!(SweepSpec::new(360.0, 0.9, 0.1, Objective::Min, 1.0, 64).is_err());
    }

    #[test]
    fn ties_go_to_the_smallest_start() {
        assert_eq!(best_index(&[0.5; 10], Objective::Max), Some(0));
        assert_eq!(best_index(&[0.5; 10], Objective::Min), Some(0));
        assert_eq!(best_index(&[0.1, 0.7, 0.3, 0.7], Objective::Max), Some(1));
        assert_eq!(best_index(&[0.4, 0.2, 0.3, 0.2], Objective::Min), Some(1));
        assert_eq!(best_index(&[], Objective::Min), None);
    }

    #[test]
    fn grid16_order_is_i_min_then_i_max_then_span() {
        let p = grid16_params();
        assert_eq!(p.len(), 16);
        assert_eq!(p[0], (0.0, 0.9, -360.0));
        assert_eq!(p[1], (0.0, 0.9, -300.0));
        assert_eq!(p[3], (0.0, 0.9, 360.0));
        assert_eq!(p[4], (0.0, 1.0, -360.0));
        assert_eq!(p[15], (0.1, 1.0, 360.0));
    }

    #[test]
    fn sweep_table_is_consistent_with_best() {
        let spec = SweepSpec::new(300.0, 0.0, 1.0, Objective::Max, 5.0, 128).unwrap();
        let r = sweep(&spec);
        assert_eq!(r.table.len(), 72);
        for (j, e) in r.table.iter().enumerate() {
            assert_eq!(e.theta_start, 5.0 * j as f64);
            assert!(e.avg_chroma <= r.best_avg_chroma);
        }
        assert_eq!(r.best_scale.spec().theta_start(), r.best_theta_start);
        assert_eq!(r.best_scale.average_chroma(), r.best_avg_chroma);
    }
}
