//! Points and cylinders of the parabolic metric on the plane.
//!
//! The metric is ‖(x₁,t₁) − (x₂,t₂)‖ = |x₁ − x₂| + |t₁ − t₂|^{1/2}: space
//! scales linearly and time quadratically, so the metric ball of radius r is
//! the cylinder {|x − x₀| < r, |t − t₀| < r²}.

/// A point (x, t) of space-time.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParaPoint {
    pub x: f64,
    pub t: f64,
}

impl ParaPoint {
    /// Both coordinates must be finite.
    pub fn new(x: f64, t: f64) -> Self {
        debug_assert!(x.is_finite() && t.is_finite(), "non-finite ParaPoint");
        ParaPoint { x, t }
    }

    /// Parabolic distance to another point.
    pub fn dist(&self, other: &ParaPoint) -> f64 {
        para_dist(*self, *other)
    }
}

/// Parabolic distance |Δx| + |Δt|^{1/2}.
pub fn para_dist(p: ParaPoint, q: ParaPoint) -> f64 {
    (p.x - q.x).abs() + (p.t - q.t).abs().sqrt()
}

/// The parabolic cylinder C_r(x₀,t₀) = {|x − x₀| < r, |t − t₀| < r²}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParaCylinder {
    pub center: ParaPoint,
    pub r: f64,
}

impl ParaCylinder {
    /// Requires r > 0.
    pub fn new(center: ParaPoint, r: f64) -> Self {
        debug_assert!(r > 0.0, "cylinder radius must be positive");
        ParaCylinder { center, r }
    }

    pub fn contains(&self, p: &ParaPoint) -> bool {
        (p.x - self.center.x).abs() < self.r && (p.t - self.center.t).abs() < self.r * self.r
    }

    /// Time extent [t_lo, t_hi] = [t₀ − r², t₀ + r²].
    pub fn t_range(&self) -> (f64, f64) {
        let r2 = self.r * self.r;
        (self.center.t - r2, self.center.t + r2)
    }

    /// Space extent [x_lo, x_hi] = [x₀ − r, x₀ + r].
    pub fn x_range(&self) -> (f64, f64) {
        (self.center.x - self.r, self.center.x + self.r)
    }

    /// Open-rectangle intersection test.
    pub fn intersects(&self, other: &ParaCylinder) -> bool {
        let dx = (self.center.x - other.center.x).abs();
        let dt = (self.center.t - other.center.t).abs();
        dx < self.r + other.r && dt < self.r * self.r + other.r * other.r
    }

    /// Image under the parabolic scaling (x,t) ↦ (ρx, ρ²t).
    pub fn scaled(&self, rho: f64) -> ParaCylinder {
        ParaCylinder::new(
            ParaPoint::new(self.center.x * rho, self.center.t * rho * rho),
            self.r * rho,
        )
    }
}
