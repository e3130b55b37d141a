use crate::error::{Error, Result};

/// Number of factors multiplied directly before switching to log-Gamma
/// differences.
const DIRECT_PRODUCT_LIMIT: usize = 256;

/// Chunk threshold for the direct product; keeps partial products finite.
const CHUNK_LIMIT: f64 = 1e280;

/// `ln Γ(x)` for `x > 0`.
pub fn ln_gamma(x: f64) -> f64 {
    statrs::function::gamma::ln_gamma(x)
}

/// `ln (a)ₙ = ln Γ(a+n) − ln Γ(a)` for `a > 0`.
///
/// Short products are accumulated factor by factor (exact for small integer
/// arguments); long ones fall back to the log-Gamma difference.
pub fn log_pochhammer(a: f64, n: usize) -> Result<f64> {
    if !(a > 0.0) || !a.is_finite() {
        return Err(Error::InvalidParameter(format!("log_pochhammer requires a > 0, got {a}")));
    }
    if n == 0 {
        return Ok(0.0);
    }
    if n > DIRECT_PRODUCT_LIMIT {
        return Ok(ln_gamma(a + n as f64) - ln_gamma(a));
    }
    let mut acc = 0.0;
    let mut chunk = 1.0;
    for k in 0..n {
        chunk *= a + k as f64;
        if chunk > CHUNK_LIMIT {
            acc += chunk.ln();
            chunk = 1.0;
        }
    }
    Ok(acc + chunk.ln())
}

/// Rising factorial `(a)ₙ` for arbitrary real `a`, by direct product.
///
/// Used for hypergeometric parameters that may be zero or negative.
pub fn pochhammer(a: f64, n: usize) -> f64 {
    (0..n).fold(1.0, |p, k| p * (a + k as f64))
}
