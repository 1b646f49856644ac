//! Stokes/Mueller polarization algebra, Fresnel coefficients, and the
//! reference-frame rotators that move polarization state between the
//! incident-plane frame, per-ray implicit frames, and the camera pixel frame.
//!
//! Conventions used throughout:
//! - A Stokes vector `[s0, s1, s2, s3]` is expressed in a right-handed frame
//!   whose z-axis is the propagation direction of the ray it describes.
//! - `Rotator(dt)` re-expresses Stokes components in the frame obtained by
//!   rotating the current frame by `dt` (right-handed about z).
//! - Fresnel amplitude coefficients use the index/cosine form, which stays
//!   finite at normal incidence where the tangent form is 0/0.

use nalgebra::Vector3;
use thiserror::Error;

/// Cross-product magnitude below which two directions are treated as parallel
/// and a frame rotator degenerates to the identity.
pub const DEGENERATE_FRAME_EPS: f64 = 1e-8;

#[derive(Debug, Error, PartialEq)]
pub enum PolarimetryError {
    /// `eta_i * sin(chi_i) / eta_t > 1`: no transmitted ray exists.
    #[error("total internal reflection: eta_i*sin(chi_i)/eta_t = {sin_chi_t} > 1")]
    TotalInternalReflection { sin_chi_t: f64 },
}

/// Full polarization state of a beam of light: total intensity `s0`,
/// 0°/90° linear component `s1`, ±45° linear component `s2`, and
/// right-circular component `s3`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StokesVector {
    pub s0: f64,
    pub s1: f64,
    pub s2: f64,
    pub s3: f64,
}

impl StokesVector {
    pub fn new(s0: f64, s1: f64, s2: f64, s3: f64) -> Self {
        Self { s0, s1, s2, s3 }
    }

    /// Unpolarized light of the given intensity.
    pub fn unpolarized(intensity: f64) -> Self {
        Self::new(intensity, 0.0, 0.0, 0.0)
    }

    /// Physical realizability: `s0 >= 0` and `s1^2+s2^2+s3^2 <= s0^2`,
    /// with relative slack for accumulated rounding.
    pub fn is_realizable(&self, rel_tol: f64) -> bool {
        let pol2 = self.s1 * self.s1 + self.s2 * self.s2 + self.s3 * self.s3;
        let max2 = self.s0 * self.s0;
        self.s0 >= 0.0 && pol2 <= max2 * (1.0 + rel_tol) + rel_tol
    }

    /// Total intensity `I = s0`.
    pub fn intensity(&self) -> f64 {
        self.s0
    }

    /// Degree of linear polarization `sqrt(s1^2+s2^2)/s0`; 0 when `s0 <= 0`.
    pub fn dolp(&self) -> f64 {
        if self.s0 <= 0.0 {
            return 0.0;
        }
        (self.s1 * self.s1 + self.s2 * self.s2).sqrt() / self.s0
    }

    /// Angle of linear polarization `0.5*atan2(s2, s1)` mapped into `[0, pi)`.
    /// Returns 0 for unpolarized states; check [`Self::aolp_defined`] first
    /// when the distinction matters.
    pub fn aolp(&self) -> f64 {
        self.aolp_checked().unwrap_or(0.0)
    }

    /// `None` when `s1 = s2 = 0` (AoLP is undefined for unpolarized light).
    pub fn aolp_checked(&self) -> Option<f64> {
        if self.s1 == 0.0 && self.s2 == 0.0 {
            return None;
        }
        Some(wrap_aolp(0.5 * self.s2.atan2(self.s1)))
    }

    pub fn aolp_defined(&self) -> bool {
        !(self.s1 == 0.0 && self.s2 == 0.0)
    }

    pub fn scaled(&self, k: f64) -> Self {
        Self::new(self.s0 * k, self.s1 * k, self.s2 * k, self.s3 * k)
    }
}

/// Map an angle to the AoLP range `[0, pi)`.
pub fn wrap_aolp(psi: f64) -> f64 {
    let mut a = psi % std::f64::consts::PI;
    if a < 0.0 {
        a += std::f64::consts::PI;
    }
    // `-1e-17 % pi` rounds back up to pi itself; fold that onto 0.
    if a >= std::f64::consts::PI {
        a = 0.0;
    }
    a
}

/// Angular distance between two AoLP values on the pi-periodic circle.
pub fn aolp_distance(a: f64, b: f64) -> f64 {
    let d = (a - b).abs() % std::f64::consts::PI;
    d.min(std::f64::consts::PI - d)
}

/// 4x4 real matrix acting on Stokes vectors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MuellerMatrix {
    pub m: [[f64; 4]; 4],
}

impl MuellerMatrix {
    pub fn identity() -> Self {
        let mut m = [[0.0; 4]; 4];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1.0;
        }
        Self { m }
    }

    pub fn zero() -> Self {
        Self { m: [[0.0; 4]; 4] }
    }

    pub fn apply(&self, s: &StokesVector) -> StokesVector {
        let v = [s.s0, s.s1, s.s2, s.s3];
        let mut out = [0.0; 4];
        for i in 0..4 {
            out[i] = (0..4).map(|j| self.m[i][j] * v[j]).sum();
        }
        StokesVector::new(out[0], out[1], out[2], out[3])
    }

    pub fn compose(&self, rhs: &Self) -> Self {
        let mut m = [[0.0; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                m[i][j] = (0..4).map(|k| self.m[i][k] * rhs.m[k][j]).sum();
            }
        }
        Self { m }
    }
}

/// Right-handed orthonormal frame attached to a ray; `z_axis` is the
/// propagation direction.
#[derive(Debug, Clone, Copy)]
pub struct ReferenceFrame {
    pub x_axis: Vector3<f64>,
    pub y_axis: Vector3<f64>,
    pub z_axis: Vector3<f64>,
}

/// Amplitude reflection coefficients at a dielectric interface, together
/// with the geometry they were computed from.
#[derive(Debug, Clone, Copy)]
pub struct FresnelCoefficients {
    /// Perpendicular (s) amplitude reflection coefficient.
    pub r_s: f64,
    /// Parallel (p) amplitude reflection coefficient.
    pub r_p: f64,
    pub eta_i: f64,
    pub eta_t: f64,
    /// Incidence angle, radians.
    pub chi_i: f64,
    /// Transmission angle, radians.
    pub chi_t: f64,
}

impl FresnelCoefficients {
    /// Intensity reflectance for unpolarized light, `(r_s^2 + r_p^2)/2`.
    pub fn reflectance(&self) -> f64 {
        0.5 * (self.r_s * self.r_s + self.r_p * self.r_p)
    }
}

/// Amplitude reflection coefficients from the index/cosine form:
///
/// `r_s = (eta_i cos chi_i - eta_t cos chi_t) / (eta_i cos chi_i + eta_t cos chi_t)`
/// `r_p = (eta_i cos chi_t - eta_t cos chi_i) / (eta_t cos chi_i + eta_i cos chi_t)`
///
/// `cos_chi_i` must lie in `[0, 1]`. Fails with
/// [`PolarimetryError::TotalInternalReflection`] when Snell's law admits no
/// transmitted ray; callers decide how to branch.
pub fn fresnel_coefficients(
    eta_i: f64,
    eta_t: f64,
    cos_chi_i: f64,
) -> Result<FresnelCoefficients, PolarimetryError> {
    debug_assert!(eta_i > 0.0 && eta_t > 0.0);
    let cos_chi_i = cos_chi_i.clamp(0.0, 1.0);
    let sin_chi_i = (1.0 - cos_chi_i * cos_chi_i).max(0.0).sqrt();
    let sin_chi_t = eta_i * sin_chi_i / eta_t;
    if sin_chi_t > 1.0 {
        return Err(PolarimetryError::TotalInternalReflection { sin_chi_t });
    }
    let cos_chi_t = (1.0 - sin_chi_t * sin_chi_t).max(0.0).sqrt();
    let r_s = (eta_i * cos_chi_i - eta_t * cos_chi_t) / (eta_i * cos_chi_i + eta_t * cos_chi_t);
    let r_p = (eta_i * cos_chi_t - eta_t * cos_chi_i) / (eta_t * cos_chi_i + eta_i * cos_chi_t);
    Ok(FresnelCoefficients {
        r_s,
        r_p,
        eta_i,
        eta_t,
        chi_i: cos_chi_i.acos(),
        chi_t: cos_chi_t.acos(),
    })
}

/// Intensity Fresnel term `F` for unpolarized light at a dielectric
/// interface. Under total internal reflection all energy reflects (`F = 1`).
pub fn fresnel_term(eta_i: f64, eta_t: f64, cos_chi_i: f64) -> f64 {
    match fresnel_coefficients(eta_i, eta_t, cos_chi_i) {
        Ok(fc) => fc.reflectance(),
        Err(PolarimetryError::TotalInternalReflection { .. }) => 1.0,
    }
}

/// Mueller matrix of specular reflection expressed in the incident-plane
/// (s/p) frame:
///
/// ```text
///       | rs²+rp²  rs²-rp²    0       0    |
/// 1/2 * | rs²-rp²  rs²+rp²    0       0    |
///       |    0        0     2·rs·rp   0    |
///       |    0        0       0     2·rs·rp|
/// ```
pub fn mueller_reflect(fc: &FresnelCoefficients) -> MuellerMatrix {
    let a = 0.5 * (fc.r_s * fc.r_s + fc.r_p * fc.r_p);
    let b = 0.5 * (fc.r_s * fc.r_s - fc.r_p * fc.r_p);
    let c = fc.r_s * fc.r_p;
    MuellerMatrix {
        m: [
            [a, b, 0.0, 0.0],
            [b, a, 0.0, 0.0],
            [0.0, 0.0, c, 0.0],
            [0.0, 0.0, 0.0, c],
        ],
    }
}

/// Frame rotation on Stokes components: identity on `s0`/`s3`, a `2*dt`
/// rotation on the `(s1, s2)` subspace. Re-expresses a fixed polarization
/// state in a frame rotated by `dt` about the propagation axis.
pub fn rotator(delta_theta: f64) -> MuellerMatrix {
    let (s, c) = (2.0 * delta_theta).sin_cos();
    MuellerMatrix {
        m: [
            [1.0, 0.0, 0.0, 0.0],
            [0.0, c, s, 0.0],
            [0.0, -s, c, 0.0],
            [0.0, 0.0, 0.0, 1.0],
        ],
    }
}

/// Signed angle from `a` to `b` measured right-handed about `axis`.
/// Both vectors must be perpendicular to `axis` for an exact result.
pub fn signed_angle(a: &Vector3<f64>, b: &Vector3<f64>, axis: &Vector3<f64>) -> f64 {
    a.cross(b).dot(axis).atan2(a.dot(b))
}

/// Deterministic right-handed orthonormal frame with the given z-axis
/// (branchless construction after Duff et al.). For `z = (0,0,1)` the basis
/// is exactly `x = (1,0,0)`, `y = (0,1,0)`. Identical inputs yield bitwise
/// identical output; continuity across the `z.z = 0` pole is not promised.
pub fn implicit_frame(z: &Vector3<f64>) -> ReferenceFrame {
    let s = 1.0_f64.copysign(z.z);
    let a = -1.0 / (s + z.z);
    let b = z.x * z.y * a;
    ReferenceFrame {
        x_axis: Vector3::new(1.0 + s * z.x * z.x * a, s * b, -s * z.x),
        y_axis: Vector3::new(b, s + z.y * z.y * a, -z.y),
        z_axis: *z,
    }
}

/// Signed rotator angle from the incident-plane frame x-axis
/// (`n_hat x v_i`, normalized) to `implicit_frame(v_i).x`, about `v_i`.
/// `None` at normal incidence where the incident plane is undefined.
pub fn frame_in_angle(v_i: &Vector3<f64>, n_hat: &Vector3<f64>) -> Option<f64> {
    let x_in = n_hat.cross(v_i);
    let norm = x_in.norm();
    if norm < DEGENERATE_FRAME_EPS {
        return None;
    }
    Some(signed_angle(&(x_in / norm), &implicit_frame(v_i).x_axis, v_i))
}

/// `R_i`: rotator between the incident-plane frame of `(v_i, n_hat)` and the
/// implicit frame of `v_i`. Identity at normal incidence, where every frame
/// choice is equivalent for the rotationally symmetric state.
pub fn frame_in(v_i: &Vector3<f64>, n_hat: &Vector3<f64>) -> MuellerMatrix {
    match frame_in_angle(v_i, n_hat) {
        Some(dt) => rotator(dt),
        None => MuellerMatrix::identity(),
    }
}

/// Signed rotator angle from the outgoing incident-plane frame x-axis
/// (`v_o x v_i`, normalized, i.e. the shared s-axis) to
/// `implicit_frame(v_o).x`, about `v_o`. `None` when `v_i` and `v_o` are
/// parallel (normal incidence).
pub fn frame_out_angle(v_i: &Vector3<f64>, v_o: &Vector3<f64>) -> Option<f64> {
    let x_out = v_o.cross(v_i);
    let norm = x_out.norm();
    if norm < DEGENERATE_FRAME_EPS {
        return None;
    }
    Some(signed_angle(&(x_out / norm), &implicit_frame(v_o).x_axis, v_o))
}

/// `R_o`: rotator mapping the outgoing incident-plane frame to the implicit
/// frame of `v_o`. Identity in the degenerate normal-incidence case.
pub fn frame_out(v_i: &Vector3<f64>, v_o: &Vector3<f64>) -> MuellerMatrix {
    match frame_out_angle(v_i, v_o) {
        Some(dt) => rotator(dt),
        None => MuellerMatrix::identity(),
    }
}

/// Signed rotator angle from `implicit_frame(v_o).x` to the pixel frame
/// x-axis `camera_up x v_o`, about `v_o`. `None` when the view direction is
/// parallel to the camera up vector.
pub fn frame_camera_angle(v_o: &Vector3<f64>, camera_up: &Vector3<f64>) -> Option<f64> {
    let x_c = camera_up.cross(v_o);
    let norm = x_c.norm();
    if norm < DEGENERATE_FRAME_EPS {
        return None;
    }
    Some(signed_angle(&implicit_frame(v_o).x_axis, &(x_c / norm), v_o))
}

/// `R_c`: rotator aligning the implicit frame of `v_o` with the camera pixel
/// frame. Identity when `v_o` is parallel to `camera_up`.
pub fn frame_camera(v_o: &Vector3<f64>, camera_up: &Vector3<f64>) -> MuellerMatrix {
    match frame_camera_angle(v_o, camera_up) {
        Some(dt) => rotator(dt),
        None => MuellerMatrix::identity(),
    }
}

/// Mirror the propagation direction `d` about the plane with outward normal
/// `n`: `d - 2 (d.n) n`.
pub fn reflect_dir(d: &Vector3<f64>, n: &Vector3<f64>) -> Vector3<f64> {
    d - 2.0 * d.dot(n) * n
}

/// Refract propagation direction `d` across an interface with normal `n`
/// (oriented against `d`, i.e. `d.n < 0`), for relative index
/// `eta = eta_i / eta_t`. `None` under total internal reflection.
pub fn refract_dir(d: &Vector3<f64>, n: &Vector3<f64>, eta: f64) -> Option<Vector3<f64>> {
    let cos_i = -d.dot(n);
    let sin2_t = eta * eta * (1.0 - cos_i * cos_i);
    if sin2_t > 1.0 {
        return None;
    }
    let cos_t = (1.0 - sin2_t).sqrt();
    Some((eta * d + (eta * cos_i - cos_t) * n).normalize())
}
