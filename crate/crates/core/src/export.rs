//! Palette tables, swatch images and report files.
//!
//! Every numeric field is written with 6 decimals. Colors are quantized to
//! 8 bits with `round(255 v)` and no transfer curve, so the gray band of a
//! swatch has exactly the intensity of the color above it.

use std::io::{self, Write};

use serde::Serialize;

use crate::color::{quantize, to_gray};
use crate::optimize::SweepResult;
use crate::scale::{ColorScale, ScaleSpec};

pub const CSV_HEADER: &str = "s,theta_deg,chroma,intensity,R,G,B,gray";

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PaletteMetadata {
    pub tool: &'static str,
    pub version: &'static str,
    pub theta_start: f64,
    pub theta_span: f64,
    pub i_min: f64,
    pub i_max: f64,
    pub samples: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PaletteStop {
    pub s: f64,
    pub hue: Option<f64>,
    pub chroma: f64,
    pub intensity: f64,
    pub r: f64,
    pub g: f64,
    pub b: f64,
    pub gray: f64,
}

/// A scale together with its grayscale companion, ready for serialization.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PaletteDocument {
    pub metadata: PaletteMetadata,
    pub stops: Vec<PaletteStop>,
}

impl PaletteDocument {
    pub fn from_scale(scale: &ColorScale) -> Self {
        let spec: &ScaleSpec = scale.spec();
        let stops = scale
            .stops()
            .iter()
            .map(|p| PaletteStop {
                s: p.s,
                hue: p.hci.hue,
                chroma: p.hci.chroma,
                intensity: p.hci.intensity,
                r: p.color.r(),
                g: p.color.g(),
                b: p.color.b(),
                gray: to_gray(p.color).r(),
            })
            .collect();
        PaletteDocument {
            metadata: PaletteMetadata {
                tool: env!("CARGO_PKG_NAME"),
                version: env!("CARGO_PKG_VERSION"),
                theta_start: spec.theta_start(),
                theta_span: spec.theta_span(),
                i_min: spec.i_min(),
                i_max: spec.i_max(),
                samples: spec.samples(),
            },
            stops,
        }
    }

    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "{CSV_HEADER}")?;
        for p in &self.stops {
            let hue = p.hue.map(|h| format!("{h:.6}")).unwrap_or_default();
            writeln!(
                out,
                "{:.6},{hue},{:.6},{:.6},{:.6},{:.6},{:.6},{:.6}",
                p.s, p.chroma, p.intensity, p.r, p.g, p.b, p.gray
            )?;
        }
        Ok(())
    }

    pub fn write_json<W: Write>(&self, mut out: W) -> io::Result<()> {
        serde_json::to_writer_pretty(&mut out, self)?;
        writeln!(out)
    }

    /// Binary PPM: a color band `band_height` rows tall above a gray band of
    /// the same height, one column per stop.
    pub fn write_ppm<W: Write>(&self, out: W, band_height: usize) -> io::Result<()> {
        let colors: Vec<[u8; 3]> = self
            .stops
            .iter()
            .map(|p| [p.r, p.g, p.b].map(quantize))
            .collect();
        let grays: Vec<[u8; 3]> = self.stops.iter().map(|p| [quantize(p.gray); 3]).collect();
        write_swatch_ppm(out, &colors, &grays, band_height)
    }
}

/// Writes a two-band swatch as binary PPM (`P6`, maxval 255).
pub fn write_swatch_ppm<W: Write>(
    mut out: W,
    top: &[[u8; 3]],
    bottom: &[[u8; 3]],
    band_height: usize,
) -> io::Result<()> {
    assert_eq!(top.len(), bottom.len(), "bands must have equal width");
    write!(out, "P6\n{} {}\n255\n", top.len(), 2 * band_height)?;
    let row = |band: &[[u8; 3]]| band.iter().flatten().copied().collect::<Vec<u8>>();
    let (top_row, bottom_row) = (row(top), row(bottom));
    for _ in 0..band_height {
        out.write_all(&top_row)?;
    }
    for _ in 0..band_height {
        out.write_all(&bottom_row)?;
    }
    Ok(())
}

/// `theta_start,avg_chroma` for every grid point of a sweep.
pub fn write_sweep_table<W: Write>(mut out: W, result: &SweepResult) -> io::Result<()> {
    writeln!(out, "theta_start,avg_chroma")?;
    for e in &result.table {
        writeln!(out, "{:.6},{:.6}", e.theta_start, e.avg_chroma)?;
    }
    Ok(())
}

pub const SUMMARY_HEADER: &str = "i_min,i_max,theta_span,best_theta_start,best_avg_chroma";

/// One row per sweep, in the order given.
pub fn write_sweep_summary<W: Write>(mut out: W, results: &[SweepResult]) -> io::Result<()> {
    writeln!(out, "{SUMMARY_HEADER}")?;
    for r in results {
        writeln!(
            out,
            "{:.6},{:.6},{:.6},{:.6},{:.6}",
            r.spec.i_min(),
            r.spec.i_max(),
            r.spec.theta_span(),
            r.best_theta_start,
            r.best_avg_chroma
        )?;
    }
    Ok(())
}

/// Intensity of `spec`'s scale where its hue equals `hue`, if the scale
/// passes through that hue. For a full turn the start hue is reported at
/// `s = 0`.
pub fn scale_intensity_at_hue(spec: &ScaleSpec, hue: f64) -> Option<f64> {
    let span = spec.theta_span();
    let offset = if span > 0.0 {
        (hue - spec.theta_start()).rem_euclid(360.0)
    } else {
        (spec.theta_start() - hue).rem_euclid(360.0)
    };
    let s = offset / span.abs();
    (s <= 1.0 + 1e-12).then(|| spec.intensity_at(s.min(1.0)))
}

/// Chroma-one intensity per hue, plus one intensity column per overlaid
/// scale (empty where the scale does not reach that hue).
pub fn write_fig3_csv<W: Write>(
    mut out: W,
    curve: &[(f64, f64)],
    overlays: &[ScaleSpec],
) -> io::Result<()> {
    write!(out, "hue,chroma_one_intensity")?;
    for o in overlays {
        write!(
            out,
            ",scale_span_{}_theta_{}_intensity",
            fmt_label(o.theta_span()),
            fmt_label(o.theta_start())
        )?;
    }
    writeln!(out)?;
    for &(hue, intensity) in curve {
        write!(out, "{hue:.6},{intensity:.6}")?;
        for o in overlays {
            match scale_intensity_at_hue(o, hue) {
                Some(i) => write!(out, ",{i:.6}")?,
                None => write!(out, ",")?,
            }
        }
        writeln!(out)?;
    }
    Ok(())
}

fn fmt_label(v: f64) -> String {
    let s = format!("{v}");
    s.replace('-', "m").replace('.', "p")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scale::build_scale;

    fn doc(samples: usize) -> PaletteDocument {
        let spec = ScaleSpec::new(180.0, 360.0, 0.0, 1.0, samples).unwrap();
        PaletteDocument::from_scale(&build_scale(spec))
    }

    #[test]
    fn csv_first_row_is_black_with_empty_hue() {
        let mut buf = Vec::new();
        doc(256).write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some(CSV_HEADER));
        assert_eq!(
            lines.next(),
            Some("0.000000,,0.000000,0.000000,0.000000,0.000000,0.000000,0.000000")
        );
        assert_eq!(text.lines().count(), 257);
        assert!(text.ends_with("1.000000,1.000000,1.000000,1.000000\n"));
        assert!(!text.contains('\r'));
    }

    #[test]
    fn gray_equals_intensity() {
        for p in doc(64).stops {
            assert!((p.gray - p.intensity).abs() < 1e-15);
        }
    }

    #[test]
    fn json_has_metadata_first_and_null_hue() {
        let mut buf = Vec::new();
        doc(5).write_json(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.find("\"metadata\"").unwrap() < text.find("\"stops\"").unwrap());
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["metadata"]["samples"], 5);
        assert!(v["stops"][0]["hue"].is_null());
        assert_eq!(v["stops"].as_array().unwrap().len(), 5);
    }

    #[test]
    fn ppm_layout() {
        let mut buf = Vec::new();
        doc(512).write_ppm(&mut buf, 32).unwrap();
        let header = b"P6\n512 64\n255\n";
        assert_eq!(&buf[..header.len()], header);
        assert_eq!(buf.len(), header.len() + 512 * 64 * 3);
    }

    #[test]
    fn overlay_lookup() {
        let up = ScaleSpec::new(180.0, 360.0, 0.0, 1.0, 16).unwrap();
        assert_eq!(scale_intensity_at_hue(&up, 180.0), Some(0.0));
        assert_eq!(scale_intensity_at_hue(&up, 270.0), Some(0.25));
        assert_eq!(scale_intensity_at_hue(&up, 0.0), Some(0.5));
        let down = ScaleSpec::new(0.0, -300.0, 0.0, 1.0, 16).unwrap();
        assert_eq!(scale_intensity_at_hue(&down, 300.0), Some(0.2));
        assert_eq!(scale_intensity_at_hue(&down, 30.0), None);
    }
}
