//! Scalar math shims.
//!
//! `no_std` builds have no float methods on `f64`, so every transcendental
//! goes through `libm` here. Std builds use the same paths, which keeps
//! results bit-identical across the two build modes.

use crate::Real;

#[inline(always)]
pub fn exp(x: Real) -> Real {
    libm::exp(x)
}

#[inline(always)]
pub fn ln(x: Real) -> Real {
    libm::log(x)
}

#[inline(always)]
pub fn sqrt(x: Real) -> Real {
    libm::sqrt(x)
}

#[inline(always)]
pub fn powf(x: Real, y: Real) -> Real {
    libm::pow(x, y)
}

#[inline(always)]
pub fn sin(x: Real) -> Real {
    libm::sin(x)
}

#[inline(always)]
pub fn cos(x: Real) -> Real {
    libm::cos(x)
}

#[inline(always)]
pub fn tanh(x: Real) -> Real {
    libm::tanh(x)
}

#[inline(always)]
pub fn erf(x: Real) -> Real {
    libm::erf(x)
}

#[inline(always)]
pub fn floor(x: Real) -> Real {
    libm::floor(x)
}

#[inline(always)]
pub fn round(x: Real) -> Real {
    libm::round(x)
}

#[inline(always)]
pub fn abs(x: Real) -> Real {
    libm::fabs(x)
}

/// Standard normal CDF, used by the GELU activation.
#[inline(always)]
pub fn norm_cdf(x: Real) -> Real {
    0.5 * (1.0 + erf(x * core::f64::consts::FRAC_1_SQRT_2))
}

/// Standard normal PDF.
#[inline(always)]
pub fn norm_pdf(x: Real) -> Real {
    const INV_SQRT_2PI: Real = 0.398_942_280_401_432_7;
    INV_SQRT_2PI * exp(-0.5 * x * x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cdf_pdf_sanity() {
        assert!((norm_cdf(0.0) - 0.5).abs() < 1e-15);
        assert!((norm_pdf(0.0) - 0.3989422804014327).abs() < 1e-15);
        assert!(norm_cdf(8.0) > 0.9999999);
        assert!(norm_cdf(-8.0) < 1e-7);
    }
}
