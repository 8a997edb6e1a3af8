//! Color scales whose hue and intensity vary linearly and whose chroma is
//! as large as possible, so that they read well both in color and after
//! conversion to grayscale.
//!
//! - [`color`]: RGB and hue/chroma/intensity, and the maximum-chroma solver.
//! - [`scale`]: scale construction, average chroma, the chroma-one locus.
//! - [`optimize`]: grid search over the starting hue.
//! - [`oracle`]: brute-force checks of the solver.
//! - [`export`] and [`cli`]: file formats and the command-line tool.

pub mod cli;
pub mod color;
pub mod error;
pub mod export;
pub mod optimize;
pub mod oracle;
pub mod scale;

pub use color::{
    critical_intensity, hue_decompose, max_chroma_color, rgb_to_hci, to_gray, Channel, Hci, Rgb,
    SectorDecomposition,
};
pub use error::{Error, Result};
pub use optimize::{reference_grid16, sweep, Objective, SweepResult, SweepSpec};
pub use scale::{build_scale, chroma_one_curve, ColorScale, ScaleSpec, Stop};
