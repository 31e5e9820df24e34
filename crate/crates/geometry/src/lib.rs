//! Geometry kernel for category-level 6D pose estimation.
//!
//! Everything in this crate is pure 64-bit math on immutable inputs:
//! pose algebra and the normalized-object-coordinate (NOCS) mapping,
//! closed-form similarity registration, the 6D rotation representation,
//! canonicalization of rotations for y-axis rotationally symmetric
//! objects, exact oriented-box IoU, and the pose evaluation metrics.

mod iou;
mod metrics;
mod nocs;
mod pose;
mod registration;
mod rot6d;
mod symmetry;

pub use iou::iou3d;
pub use metrics::{evaluate_pose, rotation_error_deg, translation_error, PoseMetrics};
pub use nocs::{from_nocs, to_nocs};
pub use pose::{random_rotation, rot_x, rot_y, rot_z, standard_normal, Box3D, Pose};
pub use registration::{umeyama_fit, Similarity};
pub use rot6d::{rot6d_decode, rot6d_encode, Rot6d};
pub use symmetry::canonicalize_y_symmetric;

/// Errors produced by the geometry kernel.
#[derive(Debug, thiserror::Error)]
pub enum GeometryError {
    /// The input point configuration does not determine a unique solution
    /// (collinear registration sources, parallel 6D rotation halves, ...).
    #[error("degenerate configuration: {0}")]
    DegenerateConfiguration(String),
    /// A pose failed its validity invariants.
    #[error("invalid pose: {0}")]
    InvalidPose(String),
}

pub type Result<T> = std::result::Result<T, GeometryError>;
