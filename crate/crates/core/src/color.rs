//! The RGB cube, its hue/chroma/intensity coordinates, and the closed-form
//! maximum-chroma color at a given hue and intensity.
//!
//! Intensity is NTSC luma, `0.299 R + 0.587 G + 0.114 B`, applied directly to
//! the linear components. No transfer curve is involved anywhere.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// NTSC luma weights for red, green and blue.
pub const LUMA_WEIGHTS: [f64; 3] = [0.299, 0.587, 0.114];

/// A color channel of the RGB cube.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Channel {
    R,
    G,
    B,
}

impl Channel {
    pub const fn index(self) -> usize {
        match self {
            Channel::R => 0,
            Channel::G => 1,
            Channel::B => 2,
        }
    }

    /// Luma weight of this channel.
    pub const fn weight(self) -> f64 {
        LUMA_WEIGHTS[self.index()]
    }
}

impl fmt::Display for Channel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Channel::R => 'R',
            Channel::G => 'G',
            Channel::B => 'B',
        };
        write!(f, "{c}")
    }
}

/// A point in the unit RGB cube.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Rgb {
    r: f64,
    g: f64,
    b: f64,
}

impl Rgb {
    pub const BLACK: Rgb = Rgb {
        r: 0.0,
        g: 0.0,
        b: 0.0,
    };
    pub const WHITE: Rgb = Rgb {
        r: 1.0,
        g: 1.0,
        b: 1.0,
    };

    /// Builds a color, rejecting components outside `[0, 1]` (and NaN).
    pub fn new(r: f64, g: f64, b: f64) -> Result<Self> {
        for (channel, value) in [('R', r), ('G', g), ('B', b)] {
            if !(0.0..=1.0).contains(&value) {
                return Err(Error::ComponentOutOfRange { channel, value });
            }
        }
        Ok(Rgb { r, g, b })
    }

    /// Builds a color from values known to lie in the cube up to rounding;
    /// each component is clamped.
    pub(crate) fn clamped(r: f64, g: f64, b: f64) -> Self {
        Rgb {
            r: r.clamp(0.0, 1.0),
            g: g.clamp(0.0, 1.0),
            b: b.clamp(0.0, 1.0),
        }
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn g(&self) -> f64 {
        self.g
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn components(&self) -> [f64; 3] {
        [self.r, self.g, self.b]
    }

    pub fn channel(&self, channel: Channel) -> f64 {
        self.components()[channel.index()]
    }

    /// Largest component.
    pub fn max(&self) -> f64 {
        self.r.max(self.g).max(self.b)
    }

    /// Smallest component.
    pub fn min(&self) -> f64 {
        self.r.min(self.g).min(self.b)
    }

    /// Middle component in order of magnitude.
    pub fn mid(&self) -> f64 {
        self.r + self.g + self.b - self.max() - self.min()
    }

    pub fn chroma(&self) -> f64 {
        self.max() - self.min()
    }

    /// NTSC luma.
    pub fn intensity(&self) -> f64 {
        LUMA_WEIGHTS[0] * self.r + LUMA_WEIGHTS[1] * self.g + LUMA_WEIGHTS[2] * self.b
    }

    /// Largest per-component absolute difference.
    pub fn max_abs_diff(&self, other: &Rgb) -> f64 {
        (self.r - other.r)
            .abs()
            .max((self.g - other.g).abs())
            .max((self.b - other.b).abs())
    }

    /// Quantizes to 8 bits per channel with `round(255 v)`.
    pub fn to_rgb8(&self) -> [u8; 3] {
        self.components().map(quantize)
    }
}

/// `round(255 v)` for `v` in `[0, 1]`.
pub fn quantize(v: f64) -> u8 {
    (v.clamp(0.0, 1.0) * 255.0).round() as u8
}

/// Hue, chroma and intensity of a color. `hue` is `None` exactly when chroma is 0.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Hci {
    pub hue: Option<f64>,
    pub chroma: f64,
    pub intensity: f64,
}

/// Wraps a hue into `[0, 360)`, negative inputs included.
pub fn normalize_hue(hue: f64) -> f64 {
    let h = hue.rem_euclid(360.0);
    // rem_euclid can round up to 360 for tiny negative inputs
    if h >= 360.0 {
        0.0
    } else {
        h
    }
}

/// Shortest distance between two hues on the circle, in degrees.
pub fn hue_distance(a: f64, b: f64) -> f64 {
    let d = normalize_hue(a - b);
    d.min(360.0 - d)
}

pub fn rgb_to_hci(color: Rgb) -> Hci {
    let [r, g, b] = color.components();
    let max = color.max();
    let chroma = color.chroma();
    let hue = if chroma == 0.0 {
        None
    } else if max == r {
        Some(normalize_hue(60.0 * (g - b) / chroma))
    } else if max == g {
        Some(normalize_hue(60.0 * (b - r) / chroma + 120.0))
    } else {
        Some(normalize_hue(60.0 * (r - g) / chroma + 240.0))
    };
    Hci {
        hue,
        chroma,
        intensity: color.intensity(),
    }
}

/// Replaces a color by the gray of equal intensity.
pub fn to_gray(color: Rgb) -> Rgb {
    let i = color.intensity().clamp(0.0, 1.0);
    Rgb { r: i, g: i, b: i }
}

/// Which channel holds the max, mid and min component at a hue, and where the
/// mid component sits between them: `k = (mid - min) / (max - min)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SectorDecomposition {
    pub sector: u8,
    pub max_channel: Channel,
    pub mid_channel: Channel,
    pub min_channel: Channel,
    pub k: f64,
}

impl SectorDecomposition {
    /// Places the given min, mid and max values into their channels.
    pub fn assemble(&self, min: f64, mid: f64, max: f64) -> Rgb {
        let mut c = [0.0; 3];
        c[self.min_channel.index()] = min;
        c[self.mid_channel.index()] = mid;
        c[self.max_channel.index()] = max;
        Rgb::clamped(c[0], c[1], c[2])
    }

    /// Intensity of the chroma-one color `(min, mid, max) = (0, k, 1)`.
    pub fn critical_intensity(&self) -> f64 {
        self.max_channel.weight() + self.mid_channel.weight() * self.k
    }
}

/// Inverts the piecewise hue definition on each 60 degree sector.
///
/// Sectors are half-open, so boundary hues land in the sector they start.
pub fn hue_decompose(hue: f64) -> SectorDecomposition {
    use Channel::*;
    let h = normalize_hue(hue);
    let sector = ((h / 60.0).floor() as u8).min(5);
    let (max_channel, mid_channel, min_channel, k) = match sector {
        0 => (R, G, B, h / 60.0),
        1 => (G, R, B, (120.0 - h) / 60.0),
        2 => (G, B, R, (h - 120.0) / 60.0),
        3 => (B, G, R, (240.0 - h) / 60.0),
        4 => (B, R, G, (h - 240.0) / 60.0),
        _ => (R, B, G, (360.0 - h) / 60.0),
    };
    SectorDecomposition {
        sector,
        max_channel,
        mid_channel,
        min_channel,
        k: k.clamp(0.0, 1.0),
    }
}

/// Intensity of the unique chroma-one color at `hue`.
pub fn critical_intensity(hue: f64) -> f64 {
    hue_decompose(hue).critical_intensity()
}

/// The color of largest chroma with the given hue and intensity.
///
/// The optimum lies on the cube boundary: with `min = 0` when `intensity` is at
/// most the critical intensity of the hue, and with `max = 1` above it. At
/// intensity 0 and 1 only black and white exist, and those are returned.
pub fn max_chroma_color(hue: f64, intensity: f64) -> Rgb {
    if intensity <= 0.0 {
        return Rgb::BLACK;
    }
    if intensity >= 1.0 {
        return Rgb::WHITE;
    }
    let d = hue_decompose(hue);
    let (w_max, w_mid, w_min) = (
        d.max_channel.weight(),
        d.mid_channel.weight(),
        d.min_channel.weight(),
    );
    let i0 = w_max + w_mid * d.k;
    if intensity <= i0 {
        // min = 0, mid = k max, I = max (w_max + k w_mid)
        let max = intensity / i0;
        d.assemble(0.0, d.k * max, max)
    } else {
        // max = 1, mid = min + k (1 - min), I = i0 + min (w_mid (1 - k) + w_min)
        let min = (intensity - i0) / (w_mid * (1.0 - d.k) + w_min);
        d.assemble(min, min + d.k * (1.0 - min), 1.0)
    }
}
