use std::fmt;

use thiserror::Error;

/// Every failure the numerical core can report.
///
/// Payloads are stored as `f64` regardless of the scalar type in use so that
/// errors stay `'static`, comparable and serializable.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("pole: s = {re}{im:+}i is within 1e-12 of s = 1")]
    Pole { re: f64, im: f64 },

    #[error("precision: error estimate {estimate:e} exceeds target {target:e}")]
    Precision { estimate: f64, target: f64 },

    #[error("zero proximity: |zeta| = {modulus:e} at {re}{im:+}i, logarithm branch undefined")]
    ZeroProximity { re: f64, im: f64, modulus: f64 },

    #[error("overflow: Re P(s) = {re_exponent} exceeds 700")]
    Overflow { re_exponent: f64 },

    #[error("domain: {0}")]
    Domain(String),

    #[error("geometry: {0}")]
    Geometry(String),

    #[error("conditioning: condition estimate {estimate:e} exceeds 1e12")]
    Conditioning { estimate: f64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("no sample in the profile evaluated successfully")]
    NoValidSample,

    #[error("at grid point {re}{im:+}i: {source}")]
    AtPoint {
        re: f64,
        im: f64,
        #[source]
        source: Box<Error>,
    },
}

/// Machine-readable error class, used in sample status fields and CLI error output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ErrorClass {
    Pole,
    Precision,
    ZeroProximity,
    Overflow,
    Domain,
    Geometry,
    Conditioning,
    InvalidParameter,
    NoValidSample,
}

impl ErrorClass {
    pub const ALL: [ErrorClass; 9] = [
        ErrorClass::Pole,
        ErrorClass::Precision,
        ErrorClass::ZeroProximity,
        ErrorClass::Overflow,
        ErrorClass::Domain,
        ErrorClass::Geometry,
        ErrorClass::Conditioning,
        ErrorClass::InvalidParameter,
        ErrorClass::NoValidSample,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ErrorClass::Pole => "pole",
            ErrorClass::Precision => "precision",
            ErrorClass::ZeroProximity => "zero_proximity",
            ErrorClass::Overflow => "overflow",
            ErrorClass::Domain => "domain",
            ErrorClass::Geometry => "geometry",
            ErrorClass::Conditioning => "conditioning",
            ErrorClass::InvalidParameter => "invalid_parameter",
            ErrorClass::NoValidSample => "no_valid_sample",
        }
    }

    pub fn parse(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.as_str() == name)
    }
}

impl fmt::Display for ErrorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::Pole { .. } => ErrorClass::Pole,
            Error::Precision { .. } => ErrorClass::Precision,
            Error::ZeroProximity { .. } => ErrorClass::ZeroProximity,
            Error::Overflow { .. } => ErrorClass::Overflow,
            Error::Domain(_) => ErrorClass::Domain,
            Error::Geometry(_) => ErrorClass::Geometry,
            Error::Conditioning { .. } => ErrorClass::Conditioning,
            Error::InvalidParameter(_) => ErrorClass::InvalidParameter,
            Error::NoValidSample => ErrorClass::NoValidSample,
            Error::AtPoint { source, .. } => source.class(),
        }
    }

    /// Wrap with the grid point at which the failure happened.
    pub fn at_point(self, re: f64, im: f64) -> Self {
        Error::AtPoint {
            re,
            im,
            source: Box::new(self),
        }
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
