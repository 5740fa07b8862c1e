use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::numeric::PrimeField;

/// Coefficient domain selected on the command line: `q`, `fp:<p>` or `qx`
/// (coefficients in `Q[X]`, inputs monic in `Y`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Q,
    Fp(PrimeField),
    Qx,
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "q" | "Q" => Ok(FieldSpec::Q),
            "qx" | "QX" => Ok(FieldSpec::Qx),
            other => {
                let digits = other
                    .strip_prefix("fp:")
                    .or_else(|| other.strip_prefix("FP:"))
                    .ok_or_else(|| Error::UnknownField(other.to_string()))?;
                let p = digits.parse::<u64>().map_err(|_| Error::UnknownField(other.to_string()))?;
                Ok(FieldSpec::Fp(PrimeField::new(p)?))
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Q => f.write_str("q"),
            FieldSpec::Fp(k) => write!(f, "fp:{}", k.modulus()),
            FieldSpec::Qx => f.write_str("qx"),
        }
    }
}
