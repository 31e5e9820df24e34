use nalgebra::{Matrix3, Quaternion, UnitQuaternion, Vector3};
use rand::Rng;

use crate::{GeometryError, Result};

/// A rigid pose with anisotropic size.
///
/// Convention: `r` and `t` map scale-normalized canonical coordinates to
/// camera coordinates, `p_cam = ||s||_2 * r * n + t`. The size `s` is the
/// full per-axis extent of the object's oriented bounding box in meters.
#[derive(Debug, Clone, PartialEq)]
pub struct Pose {
    /// Canonical-to-camera rotation.
    pub r: Matrix3<f64>,
    /// Translation in meters (object center in camera frame).
    pub t: Vector3<f64>,
    /// Per-axis bounding-box extent in meters; all components positive.
    pub s: Vector3<f64>,
}

const ORTHONORMALITY_TOL: f64 = 1e-6;

impl Pose {
    pub fn new(r: Matrix3<f64>, t: Vector3<f64>, s: Vector3<f64>) -> Result<Self> {
        let pose = Self { r, t, s };
        pose.validate()?;
        Ok(pose)
    }

    /// Identity rotation, zero translation, unit-diagonal size.
    pub fn identity() -> Self {
        Self {
            r: Matrix3::identity(),
            t: Vector3::zeros(),
            s: Vector3::new(1.0, 1.0, 1.0).normalize(),
        }
    }

    /// Checks R in SO(3) within 1e-6 and s > 0.
    pub fn validate(&self) -> Result<()> {
        let rtr = self.r.transpose() * self.r;
        let err = (rtr - Matrix3::identity()).norm();
        if err > ORTHONORMALITY_TOL {
            return Err(GeometryError::InvalidPose(format!(
                "rotation not orthonormal (|R^T R - I| = {err:.3e})"
            )));
        }
        let det = self.r.determinant();
        if (det - 1.0).abs() > ORTHONORMALITY_TOL {
            return Err(GeometryError::InvalidPose(format!(
                "rotation determinant {det:.9} != +1"
            )));
        }
        if self.s.iter().any(|&v| v <= 0.0) {
            return Err(GeometryError::InvalidPose(format!(
                "non-positive size component in {:?}",
                self.s
            )));
        }
        Ok(())
    }

    /// Scale-normalizing factor: the diagonal length of the size box.
    pub fn scale(&self) -> f64 {
        self.s.norm()
    }
}

/// An oriented 3D bounding box: center `pose.t`, orientation `pose.r`,
/// full extents `pose.s`.
#[derive(Debug, Clone)]
pub struct Box3D {
    pub pose: Pose,
}

impl Box3D {
    pub fn new(pose: Pose) -> Self {
        Self { pose }
    }

    pub fn volume(&self) -> f64 {
        self.pose.s.x * self.pose.s.y * self.pose.s.z
    }

    /// The eight corners in camera coordinates.
    pub fn corners(&self) -> [Vector3<f64>; 8] {
        let h = self.pose.s * 0.5;
        let mut out = [Vector3::zeros(); 8];
        let mut k = 0;
        for &sx in &[-1.0, 1.0] {
            for &sy in &[-1.0, 1.0] {
                for &sz in &[-1.0, 1.0] {
                    let local = Vector3::new(sx * h.x, sy * h.y, sz * h.z);
                    out[k] = self.pose.r * local + self.pose.t;
                    k += 1;
                }
            }
        }
        out
    }
}

/// Draws a rotation uniformly over SO(3) (normalized 4-Gaussian quaternion).
pub fn random_rotation<R: Rng + ?Sized>(rng: &mut R) -> Matrix3<f64> {
    loop {
        let q = Quaternion::new(
            standard_normal(rng),
            standard_normal(rng),
            standard_normal(rng),
            standard_normal(rng),
        );
        if q.norm() > 1e-6 {
            return *UnitQuaternion::from_quaternion(q).to_rotation_matrix().matrix();
        }
    }
}

/// Box-Muller standard normal sample.
pub fn standard_normal<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    let u1: f64 = rng.gen_range(f64::EPSILON..1.0);
    let u2: f64 = rng.gen_range(0.0..1.0);
    (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
}

/// Rotation by `angle_rad` about the x axis.
pub fn rot_x(angle_rad: f64) -> Matrix3<f64> {
    let (s, c) = angle_rad.sin_cos();
    Matrix3::new(1.0, 0.0, 0.0, 0.0, c, -s, 0.0, s, c)
}

/// Rotation by `angle_rad` about the y axis.
pub fn rot_y(angle_rad: f64) -> Matrix3<f64> {
    let (s, c) = angle_rad.sin_cos();
    Matrix3::new(c, 0.0, s, 0.0, 1.0, 0.0, -s, 0.0, c)
}

/// Rotation by `angle_rad` about the z axis.
pub fn rot_z(angle_rad: f64) -> Matrix3<f64> {
    let (s, c) = angle_rad.sin_cos();
    Matrix3::new(c, -s, 0.0, s, c, 0.0, 0.0, 0.0, 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha12Rng;

    #[test]
    fn valid_pose_passes() {
        let p = Pose::identity();
        assert!(p.validate().is_ok());
    }

    #[test]
    fn non_orthonormal_rotation_rejected() {
        let mut r = Matrix3::identity();
        r[(0, 0)] = 1.5;
        assert!(Pose::new(r, Vector3::zeros(), Vector3::new(0.1, 0.1, 0.1)).is_err());
    }

    #[test]
    fn reflection_rejected() {
        let r = Matrix3::from_diagonal(&Vector3::new(1.0, 1.0, -1.0));
        assert!(Pose::new(r, Vector3::zeros(), Vector3::new(0.1, 0.1, 0.1)).is_err());
    }

    #[test]
    fn non_positive_size_rejected() {
        let p = Pose {
            s: Vector3::new(0.1, 0.0, 0.1),
            ..Pose::identity()
        };
        assert!(p.validate().is_err());
    }

    #[test]
    fn random_rotations_are_orthonormal() {
        let mut rng = ChaCha12Rng::seed_from_u64(7);
        for _ in 0..200 {
            let r = random_rotation(&mut rng);
            assert!((r.transpose() * r - Matrix3::identity()).norm() < 1e-12);
            assert!((r.determinant() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn box_volume_and_corners() {
        let b = Box3D::new(
            Pose::new(
                Matrix3::identity(),
                Vector3::new(1.0, 2.0, 3.0),
                Vector3::new(0.2, 0.4, 0.6),
            )
            .unwrap(),
        );
        assert!((b.volume() - 0.048).abs() < 1e-12);
        let corners = b.corners();
        for c in &corners {
            assert!((c.x - 1.0).abs() <= 0.1 + 1e-12);
            assert!((c.y - 2.0).abs() <= 0.2 + 1e-12);
            assert!((c.z - 3.0).abs() <= 0.3 + 1e-12);
        }
    }
}
