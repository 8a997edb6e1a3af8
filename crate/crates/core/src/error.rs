use thiserror::Error;

/// Errors raised when constructing colors, scales or sweeps from invalid input.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{channel} component {value} is outside [0, 1]")]
    ComponentOutOfRange { channel: char, value: f64 },

    #[error("intensity range must satisfy 0 <= i_min < i_max <= 1, got {i_min}..{i_max}")]
    IntensityRange { i_min: f64, i_max: f64 },

    #[error("hue span must be nonzero with magnitude at most 360, got {0}")]
    HueSpan(f64),

    #[error("hue value {0} is not finite")]
    NonFiniteHue(f64),

    #[error("at least 2 samples are required, got {0}")]
    TooFewSamples(usize),

    #[error("grid step {0} must be positive and divide 360 evenly")]
    GridStep(f64),

    #[error("oracle grid resolution must be at least 11, got {0}")]
    OracleResolution(usize),

    #[error("oracle tolerances must be positive")]
    OracleTolerance,

    #[error("verification grid must be at least 2x2, got {hue}x{intensity}")]
    VerifyGrid { hue: usize, intensity: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
