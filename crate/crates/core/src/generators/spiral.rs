//! Bipyramid over a polygonal spiral ribbon whose apices realize a
//! prescribed angle sum.
//!
//! The ribbon follows an Archimedean spiral around the origin with pitch 1
//! per turn; its centerline starts at radius [`INNER_RADIUS`]. Both ends
//! taper to a single tip vertex. The apices sit at `(0, 0, ±h)`: seen from
//! near the plane, the boundary winds around the apex axis about `2·turns`
//! times, so the apex angle sum can be pushed toward `2·turns` as `h → 0`
//! and toward 0 as `h → ∞`. The height is found by bisection.

use std::f64::consts::TAU;

use serde::Serialize;

use crate::complex::EmbeddedComplex;
use crate::error::{Error, Result};
use crate::geometry::angle_sum;
use crate::generators::solids::{is_simple_polygon, suspension};

pub const SAMPLES_PER_TURN: usize = 12;
pub const INNER_RADIUS: f64 = 1.5;
pub const MAX_BISECTION_STEPS: usize = 200;
/// Non-apex vertices must have angle sum below `1 − FLAT_MARGIN`.
pub const FLAT_MARGIN: f64 = 1e-9;

#[derive(Debug, Clone, Serialize)]
pub struct SpiralBipyramid {
    #[serde(skip)]
    pub complex: EmbeddedComplex,
    pub top_apex: usize,
    pub bottom_apex: usize,
    pub height: f64,
    pub achieved_omega: f64,
    pub iterations: usize,
    /// Largest angle sum over the ribbon vertices.
    pub max_ribbon_angle_sum: f64,
}

/// Boundary of the ribbon as a counter-clockwise simple polygon.
pub fn spiral_ribbon(turns: usize, width: f64) -> Result<Vec<[f64; 2]>> {
    if turns == 0 {
        return Err(Error::BadParameter("a spiral needs at least one turn".into()));
    }
    if !(width > 0.0) {
        return Err(Error::BadParameter(format!("ribbon width {width} must be positive")));
    }
    if width >= 1.0 {
        return Err(Error::RibbonSelfOverlap(format!(
            "width {width} is not less than the turn spacing 1"
        )));
    }
    let step = 1.0 / SAMPLES_PER_TURN as f64;
    let at = |turn: f64, offset: f64| {
        let r = INNER_RADIUS + turn + offset;
        let (s, c) = (TAU * turn).sin_cos();
        [r * c, r * s]
    };
    let n = turns * SAMPLES_PER_TURN;
    let mut boundary = Vec::with_capacity(2 * n + 4);
    boundary.push(at(-step, 0.0));
    boundary.extend((0..=n).map(|k| at(k as f64 * step, 0.5 * width)));
    boundary.push(at((n + 1) as f64 * step, 0.0));
    boundary.extend((0..=n).rev().map(|k| at(k as f64 * step, -0.5 * width)));
    if !is_simple_polygon(&boundary) {
        return Err(Error::RibbonSelfOverlap("ribbon boundary intersects itself".into()));
    }
    Ok(boundary)
}

fn apex_sum(polygon: &[[f64; 2]], h: f64) -> Result<(EmbeddedComplex, f64)> {
    let k = suspension(polygon, [0.0, 0.0, h], [0.0, 0.0, -h])?;
    let s = angle_sum(&k, polygon.len())?;
    Ok((k, s))
}

/// Spiral bipyramid with apex angle sum `target_omega`.
pub fn spiral_bipyramid(target_omega: f64, turns: usize, ribbon_width: f64) -> Result<SpiralBipyramid> {
    if !(target_omega > 0.0 && target_omega.is_finite()) {
        return Err(Error::BadParameter(format!("target {target_omega} must be positive")));
    }
    let polygon = spiral_ribbon(turns, ribbon_width)?;
    let m = polygon.len();

    let mut lo = 1e-3;
    let (_, max) = apex_sum(&polygon, lo)?;
    if max <= target_omega {
        return Err(Error::TargetUnreachable {
            target: target_omega,
            max,
        });
    }
    let mut hi = 1.0;
    while apex_sum(&polygon, hi)?.1 >= target_omega {
        hi *= 2.0;
        if hi > 1e12 {
            return Err(Error::BadParameter(format!("target {target_omega} too small")));
        }
    }

    let mut iterations = 0;
    while iterations < MAX_BISECTION_STEPS && hi - lo > 1e-14 * hi {
        iterations += 1;
        let mid = 0.5 * (lo + hi);
        if apex_sum(&polygon, mid)?.1 > target_omega {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let (lo_k, lo_sum) = apex_sum(&polygon, lo)?;
    let (hi_k, hi_sum) = apex_sum(&polygon, hi)?;
    let (complex, height, achieved_omega) = if (lo_sum - target_omega).abs() <= (hi_sum - target_omega).abs() {
        (lo_k, lo, lo_sum)
    } else {
        (hi_k, hi, hi_sum)
    };

    let mut max_ribbon_angle_sum: f64 = 0.0;
    for v in 0..m {
        max_ribbon_angle_sum = max_ribbon_angle_sum.max(angle_sum(&complex, v)?);
    }
    if max_ribbon_angle_sum >= 1.0 - FLAT_MARGIN {
        return Err(Error::BadParameter(format!(
            "ribbon vertex angle sum {max_ribbon_angle_sum} is not below 1"
        )));
    }
    Ok(SpiralBipyramid {
        complex,
        top_apex: m,
        bottom_apex: m + 1,
        height,
        achieved_omega,
        iterations,
        max_ribbon_angle_sum,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_wide_ribbons() {
        assert!(matches!(spiral_ribbon(2, 1.0), Err(Error::RibbonSelfOverlap(_))));
        assert!(spiral_ribbon(0, 0.3).is_err());
        assert!(spiral_ribbon(3, 0.5).is_ok());
    }

    #[test]
    fn unreachable_target() {
        assert!(matches!(
            spiral_bipyramid(10.0, 1, 0.4),
            Err(Error::TargetUnreachable { .. })
        ));
    }

    #[test]
    fn hits_target() {
        let s = spiral_bipyramid(0.5, 1, 0.4).unwrap();
        assert!((s.achieved_omega - 0.5).abs() < 1e-6);
        assert!(s.complex.is_surface());
        assert!(s.max_ribbon_angle_sum < 1.0);
        let bottom = angle_sum(&s.complex, s.bottom_apex).unwrap();
        assert!((bottom - s.achieved_omega).abs() < 1e-12);
    }
}
