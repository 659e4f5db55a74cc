use crate::error::{Error, Result};

/// Complex value at native `f64` precision.
pub type ComplexValue = num_complex::Complex64;

/// NaN and infinities are an error state, never a value.
pub fn ensure_finite(z: ComplexValue, context: &'static str) -> Result<ComplexValue> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(Error::NonFinite(context))
    }
}
