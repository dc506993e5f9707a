//! Ground field scalars.
//!
//! Scalars are always stored as complex numbers; real-field evaluation is a
//! property of the evaluation context and is enforced by [`Field::admit`].

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{GrussError, Result};
use crate::tolerance::REAL_FIELD_IMAG_TOL;

pub type Scalar = Complex64;

#[inline]
pub fn real(re: f64) -> Scalar {
    Scalar::new(re, 0.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Field {
    Real,
    #[default]
    Complex,
}

impl Field {
    /// Rejects scalars whose imaginary part exceeds the real-field threshold
    /// when `self` is [`Field::Real`]. The index reported is the position in
    /// `values`.
    pub fn admit<'a, I>(self, values: I) -> Result<()>
    where
        I: IntoIterator<Item = &'a Scalar>,
    {
        if self == Field::Complex {
            return Ok(());
        }
        for (index, v) in values.into_iter().enumerate() {
            if v.im.abs() > REAL_FIELD_IMAG_TOL {
                return Err(GrussError::ImaginaryPart { index, imag: v.im });
            }
        }
        Ok(())
    }
}

impl std::str::FromStr for Field {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "real" => Ok(Field::Real),
            "complex" => Ok(Field::Complex),
            other => Err(format!(
                "unknown field `{other}` (expected real or complex)"
            )),
        }
    }
}

pub(crate) fn check_finite(values: &[Scalar]) -> Result<()> {
    match values
        .iter()
        .position(|v| !v.re.is_finite() || !v.im.is_finite())
    {
        Some(index) => Err(GrussError::NonFinite { index }),
        None => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugation_is_an_involution() {
        let s = Scalar::new(1.5, -2.25);
        assert_eq!(s.conj().conj(), s);
        let sq = s * s.conj();
        assert_eq!(sq.im, 0.0);
        assert!(sq.re >= 0.0);
    }

    #[test]
    fn real_field_rejects_imaginary_parts() {
        let vals = [real(1.0), Scalar::new(0.0, 1e-6)];
        assert_eq!(
            Field::Real.admit(&vals),
            Err(GrussError::ImaginaryPart {
                index: 1,
                imag: 1e-6
            })
        );
        assert!(Field::Complex.admit(&vals).is_ok());
        assert!(Field::Real.admit(&[Scalar::new(2.0, 1e-13)]).is_ok());
    }

    #[test]
    fn non_finite_is_located() {
        let vals = [real(0.0), Scalar::new(f64::NAN, 0.0)];
        assert_eq!(check_finite(&vals), Err(GrussError::NonFinite { index: 1 }));
    }
}
