//! Color scales with hue and intensity both affine in the scale parameter
//! `s` in `[0, 1]`, filled with the maximum-chroma color at each point.

use serde::Serialize;

use crate::color::{critical_intensity, max_chroma_color, normalize_hue, rgb_to_hci, Hci, Rgb};
use crate::error::{Error, Result};

/// Quadrature resolution used when none is given.
pub const DEFAULT_SAMPLES: usize = 1024;

/// Parameters that fully determine a color scale.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScaleSpec {
    theta_start: f64,
    theta_span: f64,
    i_min: f64,
    i_max: f64,
    samples: usize,
}

impl ScaleSpec {
    /// `theta_span` is `theta_final - theta_start`; its sign is the direction
    /// of travel around the hue circle.
    pub fn new(
        theta_start: f64,
        theta_span: f64,
        i_min: f64,
        i_max: f64,
        samples: usize,
    ) -> Result<Self> {
        if !theta_start.is_finite() {
            return Err(Error::NonFiniteHue(theta_start));
        }
        if !theta_span.is_finite() || theta_span == 0.0 || theta_span.abs() > 360.0 {
            return Err(Error::HueSpan(theta_span));
        }
        if !(0.0 <= i_min && i_min < i_max && i_max <= 1.0) {
            return Err(Error::IntensityRange { i_min, i_max });
        }
        if samples < 2 {
            return Err(Error::TooFewSamples(samples));
        }
        Ok(ScaleSpec {
            theta_start,
            theta_span,
            i_min,
            i_max,
            samples,
        })
    }

    pub fn theta_start(&self) -> f64 {
        self.theta_start
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

    pub fn samples(&self) -> usize {
        self.samples
    }

    /// Same scale at a different sampling resolution.
    pub fn with_samples(&self, samples: usize) -> Result<Self> {
        Self::new(
            self.theta_start,
            self.theta_span,
            self.i_min,
            self.i_max,
            samples,
        )
    }

    /// Hue at `s`, not wrapped.
    pub fn unwrapped_hue_at(&self, s: f64) -> f64 {
        self.theta_start + s * self.theta_span
    }

    /// Hue at `s`, wrapped into `[0, 360)`.
    pub fn hue_at(&self, s: f64) -> f64 {
        normalize_hue(self.unwrapped_hue_at(s))
    }

    pub fn intensity_at(&self, s: f64) -> f64 {
        self.i_min + s * (self.i_max - self.i_min)
    }

    /// Parameter value of sample `j`.
    pub fn s_at(&self, j: usize) -> f64 {
        j as f64 / (self.samples - 1) as f64
    }

    /// Maximum-chroma color at `s`.
    pub fn color_at(&self, s: f64) -> Rgb {
        max_chroma_color(self.hue_at(s), self.intensity_at(s))
    }
}

/// One sampled point of a scale.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Stop {
    pub s: f64,
    /// Hue prescribed by the scale at `s`, wrapped into `[0, 360)`; defined
    /// even where the color is gray.
    pub theta: f64,
    pub color: Rgb,
    /// Coordinates recovered from `color`; the hue is `None` at grays.
    pub hci: Hci,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ColorScale {
    spec: ScaleSpec,
    stops: Vec<Stop>,
}

impl ColorScale {
    pub fn build(spec: ScaleSpec) -> Self {
        let stops = (0..spec.samples())
            .map(|j| {
                let s = spec.s_at(j);
                let color = spec.color_at(s);
                Stop {
                    s,
                    theta: spec.hue_at(s),
                    color,
                    hci: rgb_to_hci(color),
                }
            })
            .collect();
        ColorScale { spec, stops }
    }

    pub fn spec(&self) -> &ScaleSpec {
        &self.spec
    }

    pub fn stops(&self) -> &[Stop] {
        &self.stops
    }

    /// Mean chroma over the scale parameter, by the composite trapezoid rule.
    ///
    /// Averaging over `s` equals averaging over hue, since hue is affine in `s`;
    /// the sign of the span cancels.
    pub fn average_chroma(&self) -> f64 {
        let chroma: Vec<f64> = self.stops.iter().map(|p| p.hci.chroma).collect();
        trapezoid_unit(&chroma)
    }

    /// `(hue, intensity)` of every stop with a defined hue, in stop order.
    pub fn intensity_vs_hue(&self) -> Vec<(f64, f64)> {
        self.stops
            .iter()
            .filter_map(|p| p.hci.hue.map(|h| (h, p.hci.intensity)))
            .collect()
    }
}

pub fn build_scale(spec: ScaleSpec) -> ColorScale {
    ColorScale::build(spec)
}

/// Composite trapezoid rule for samples taken uniformly on `[0, 1]`,
/// endpoints included.
pub fn trapezoid_unit(values: &[f64]) -> f64 {
    match values {
        [] => 0.0,
        [v] => *v,
        [first, inner @ .., last] => {
            let h = 1.0 / (values.len() - 1) as f64;
            h * (0.5 * (first + last) + inner.iter().sum::<f64>())
        }
    }
}

/// Intensity of the chroma-one color at evenly spaced hues covering
/// `[0, 360]`, with `samples_per_sector` intervals in each 60 degree sector.
///
/// The six pure colors fall exactly on rows `0, n, 2n, ...`.
pub fn chroma_one_curve(samples_per_sector: usize) -> Vec<(f64, f64)> {
    let n = samples_per_sector.max(1);
    (0..=6 * n)
        .map(|j| {
            let hue = 60.0 * (j / n) as f64 + 60.0 * (j % n) as f64 / n as f64;
            (hue, critical_intensity(hue))
        })
        .collect()
}
