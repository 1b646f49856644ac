//! Signed-distance-field geometry: analytic primitives, an optimizable
//! trilinear voxel grid, secant ray intersection, and isosurface extraction.
//!
//! Sign convention everywhere: the field is **positive inside** the object,
//! negative outside, zero on the surface. Outward surface normals are the
//! negated normalized gradient.

mod field;
mod intersect;
mod mesh;

pub use field::{GridStencil, SdfField, VoxelGrid};
pub use intersect::{
    march_profile, secant_intersect, secant_refine, unit_sphere_clip, Intersection, RayProfile,
    SECANT_COARSE_STEPS, SECANT_MAX_ITERS, SECANT_TOLERANCE,
};
pub use mesh::{extract_surface, sample_surface, SurfaceSample, TriangleMesh};

use nalgebra::Vector3;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum SdfError {
    /// Field gradient shorter than 1e-8; no normal direction exists.
    #[error("degenerate gradient: |grad f| <= 1e-8")]
    DegenerateGradient,
    /// The field has no zero crossing (or the mesh is empty).
    #[error("no zero level set in the sampled volume")]
    EmptySurface,
}

/// Side of the surface a point sits on, by field sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldSign {
    /// Field value > 0.
    Inside,
    /// Field value <= 0.
    Outside,
}

/// A ray `x = origin + t * direction` with unit direction.
#[derive(Debug, Clone, Copy)]
pub struct Ray {
    pub origin: Vector3<f64>,
    pub direction: Vector3<f64>,
}

impl Ray {
    /// Normalizes the direction.
    pub fn new(origin: Vector3<f64>, direction: Vector3<f64>) -> Self {
        Self {
            origin,
            direction: direction.normalize(),
        }
    }

    pub fn at(&self, t: f64) -> Vector3<f64> {
        self.origin + t * self.direction
    }
}
