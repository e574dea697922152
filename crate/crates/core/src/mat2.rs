//! Complex 2x2 matrices with a unit-determinant contract.
//!
//! Transfer matrices of -u'' + (V - z)u = 0 are unimodular for every z; all
//! long products in this crate renormalize determinant drift periodically
//! (see [`Mat2::renormalized`]).

use num_complex::Complex64;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use std::ops::{Add, Mul, Sub};

pub type C64 = Complex64;

/// Row-major complex 2x2 matrix.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat2 {
    pub m: [[C64; 2]; 2],
}

impl Mat2 {
    pub fn new(a: C64, b: C64, c: C64, d: C64) -> Self {
        Mat2 { m: [[a, b], [c, d]] }
    }

    pub fn from_real(a: f64, b: f64, c: f64, d: f64) -> Self {
        Mat2::new(
            C64::new(a, 0.0),
            C64::new(b, 0.0),
            C64::new(c, 0.0),
            C64::new(d, 0.0),
        )
    }

    pub fn identity() -> Self {
        Mat2::from_real(1.0, 0.0, 0.0, 1.0)
    }

    /// Rotation by `angle`: [[cos, -sin], [sin, cos]].
    pub fn rotation(angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        Mat2::from_real(c, -s, s, c)
    }

    pub fn det(&self) -> C64 {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]
    }

    pub fn trace(&self) -> C64 {
        self.m[0][0] + self.m[1][1]
    }

    /// Inverse assuming det = 1 (adjugate). Exact for the unimodular contract.
    pub fn inverse_unimodular(&self) -> Self {
        Mat2::new(self.m[1][1], -self.m[0][1], -self.m[1][0], self.m[0][0])
    }

    /// General inverse; errs silently on singular input (caller checks det).
    pub fn inverse(&self) -> Self {
        let d = self.det();
        let inv = self.inverse_unimodular();
        Mat2::new(inv.m[0][0] / d, inv.m[0][1] / d, inv.m[1][0] / d, inv.m[1][1] / d)
    }

    pub fn scale(&self, s: C64) -> Self {
        let mut out = *self;
        for r in 0..2 {
            for c in 0..2 {
                out.m[r][c] *= s;
            }
        }
        out
    }

    /// Rescale by det^{-1/2} so the determinant returns to 1.
    pub fn renormalized(&self) -> Self {
        let d = self.det();
        if d == C64::new(0.0, 0.0) {
            return *self;
        }
        self.scale(C64::new(1.0, 0.0) / d.sqrt())
    }

    pub fn apply(&self, v: [C64; 2]) -> [C64; 2] {
        [
            self.m[0][0] * v[0] + self.m[0][1] * v[1],
            self.m[1][0] * v[0] + self.m[1][1] * v[1],
        ]
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entry_sq_sum().sqrt()
    }

    fn entry_sq_sum(&self) -> f64 {
        let mut s = 0.0;
        for r in 0..2 {
            for c in 0..2 {
                s += self.m[r][c].norm_sqr();
            }
        }
        s
    }

    /// Spectral norm (largest singular value) via the closed 2x2 formula:
    /// sigma_max^2 = (s + sqrt(s^2 - 4 d)) / 2 with s the squared Frobenius
    /// norm and d = |det|^2.
    pub fn op_norm(&self) -> f64 {
        let s = self.entry_sq_sum();
        let d = self.det().norm_sqr();
        let disc = (s * s - 4.0 * d).max(0.0);
        (0.5 * (s + disc.sqrt())).sqrt()
    }

    /// Smallest singular value.
    pub fn op_norm_min(&self) -> f64 {
        let s = self.entry_sq_sum();
        let d = self.det().norm_sqr();
        let disc = (s * s - 4.0 * d).max(0.0);
        (0.5 * (s - disc.sqrt())).max(0.0).sqrt()
    }

    pub fn conj(&self) -> Self {
        Mat2::new(
            self.m[0][0].conj(),
            self.m[0][1].conj(),
            self.m[1][0].conj(),
            self.m[1][1].conj(),
        )
    }

    pub fn transpose(&self) -> Self {
        Mat2::new(self.m[0][0], self.m[1][0], self.m[0][1], self.m[1][1])
    }

    pub fn max_imag(&self) -> f64 {
        let mut v: f64 = 0.0;
        for r in 0..2 {
            for c in 0..2 {
                v = v.max(self.m[r][c].im.abs());
            }
        }
        v
    }

    pub fn is_real(&self, tol: f64) -> bool {
        self.max_imag() <= tol
    }

    /// Frobenius distance to another matrix.
    pub fn dist(&self, other: &Mat2) -> f64 {
        (*self - *other).frobenius_norm()
    }
}

pub fn commutator(a: &Mat2, b: &Mat2) -> Mat2 {
    *a * *b - *b * *a
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: Mat2) -> Mat2 {
        let a = &self.m;
        let b = &rhs.m;
        Mat2::new(
            a[0][0] * b[0][0] + a[0][1] * b[1][0],
            a[0][0] * b[0][1] + a[0][1] * b[1][1],
            a[1][0] * b[0][0] + a[1][1] * b[1][0],
            a[1][0] * b[0][1] + a[1][1] * b[1][1],
        )
    }
}

impl Add for Mat2 {
    type Output = Mat2;
    fn add(self, rhs: Mat2) -> Mat2 {
        Mat2::new(
            self.m[0][0] + rhs.m[0][0],
            self.m[0][1] + rhs.m[0][1],
            self.m[1][0] + rhs.m[1][0],
            self.m[1][1] + rhs.m[1][1],
        )
    }
}

impl Sub for Mat2 {
    type Output = Mat2;
    fn sub(self, rhs: Mat2) -> Mat2 {
        Mat2::new(
            self.m[0][0] - rhs.m[0][0],
            self.m[0][1] - rhs.m[0][1],
            self.m[1][0] - rhs.m[1][0],
            self.m[1][1] - rhs.m[1][1],
        )
    }
}

// Row-major 4-tuple of [re, im] pairs.
impl Serialize for Mat2 {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(4))?;
        for r in 0..2 {
            for c in 0..2 {
                seq.serialize_element(&[self.m[r][c].re, self.m[r][c].im])?;
            }
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn op_norm_of_diagonal() {
        let m = Mat2::from_real(2.0, 0.0, 0.0, 0.5);
        assert_relative_eq!(m.op_norm(), 2.0, max_relative = 1e-14);
        assert_relative_eq!(m.op_norm_min(), 0.5, max_relative = 1e-14);
    }

    #[test]
    fn rotation_is_an_isometry() {
        let m = Mat2::rotation(0.7);
        assert_relative_eq!(m.op_norm(), 1.0, max_relative = 1e-14);
        assert_relative_eq!(m.det().re, 1.0, max_relative = 1e-14);
    }

    #[test]
    fn unimodular_inverse_has_equal_norm() {
        // shear * rotation, det 1
        let m = Mat2::from_real(1.0, 2.5, 0.0, 1.0) * Mat2::rotation(1.1);
        assert_relative_eq!(m.op_norm(), m.inverse_unimodular().op_norm(), max_relative = 1e-13);
    }

    #[test]
    fn renormalized_restores_unit_det() {
        let m = Mat2::from_real(1.0, 2.0, 0.5, 3.0).scale(C64::new(1.3, 0.2));
        let r = m.renormalized();
        assert_relative_eq!(r.det().re, 1.0, max_relative = 1e-13);
        assert!(r.det().im.abs() < 1e-13);
    }
}
