use nalgebra::Vector3;

use crate::Pose;

/// Maps camera-space points into the pose's normalized object coordinate
/// space: `n = R^T (p - t) / ||s||_2`.
///
/// A point set spanning the object lands inside a ball of radius 0.5 (the
/// canonical box has unit diagonal).
pub fn to_nocs(points: &[Vector3<f64>], pose: &Pose) -> Vec<Vector3<f64>> {
    let inv_scale = 1.0 / pose.scale();
    let r_t = pose.r.transpose();
    points
        .iter()
        .map(|p| r_t * (p - pose.t) * inv_scale)
        .collect()
}

/// Inverse of [`to_nocs`]: `p = ||s||_2 * R * n + t`.
pub fn from_nocs(nocs_points: &[Vector3<f64>], pose: &Pose) -> Vec<Vector3<f64>> {
    let scale = pose.scale();
    nocs_points
        .iter()
        .map(|n| pose.r * n * scale + pose.t)
        .collect()
}
