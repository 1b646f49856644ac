//! Polarimetric inverse rendering of transparent shapes.
//!
//! The crate reconstructs transparent 3D objects from multi-view polarization
//! images. An optimizable signed-distance field (voxel grid over `[-1,1]^3`,
//! inside-positive) is fitted under three losses: a silhouette loss, an
//! Eikonal regularizer, and an angle-of-linear-polarization loss weighted by
//! a ray-traced reflection percentage. A full polarimetric forward renderer
//! and a synthetic dataset generator make the pipeline verifiable end to end
//! without physical capture hardware.
//!
//! Module map:
//! - [`polarimetry`]: Stokes/Mueller/Fresnel math and reference-frame rotators
//! - [`sdf`]: signed-distance fields, secant ray intersection, marching cubes
//! - [`render`]: polarimetric forward renderer and 2-bounce reflection tracer
//! - [`recon`]: loss functions with analytic gradients and the optimizer
//! - [`eval`]: pose normalization, chamfer distance / chamfer normal angle
//! - [`io`]: PFM/PNG/OBJ formats, dataset synthesis, manifests, checkpoints

pub mod eval;
pub mod io;
pub mod polarimetry;
pub mod recon;
pub mod render;
pub mod sdf;
