//! Float operations that need `std` intrinsics or `libm`, behind one shim so
//! the crate builds without `std`.

#[cfg(feature = "std")]
mod imp {
    #[inline]
    pub fn sqrt(x: f64) -> f64 {
        x.sqrt()
    }

    #[inline]
    pub fn pow(x: f64, y: f64) -> f64 {
        x.powf(y)
    }

    #[inline]
    pub fn round(x: f64) -> f64 {
        x.round()
    }

    #[inline]
    pub fn abs(x: f64) -> f64 {
        x.abs()
    }
}

#[cfg(not(feature = "std"))]
mod imp {
    #[inline]
    pub fn sqrt(x: f64) -> f64 {
        libm::sqrt(x)
    }

    #[inline]
    pub fn pow(x: f64, y: f64) -> f64 {
        libm::pow(x, y)
    }

    #[inline]
    pub fn round(x: f64) -> f64 {
        libm::round(x)
    }

    #[inline]
    pub fn abs(x: f64) -> f64 {
        libm::fabs(x)
    }
}

pub(crate) use imp::{abs, pow, round, sqrt};

/// Euclidean distance between two points.
#[inline]
pub(crate) fn dist(ax: f64, ay: f64, bx: f64, by: f64) -> f64 {
    let dx = bx - ax;
    let dy = by - ay;
    sqrt(dx * dx + dy * dy)
}
