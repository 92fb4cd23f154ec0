//! Domain models: graph domains {x > f(t)}, slab domains {f(t) < x < g(t)},
//! and occupancy grids with parabolic cell aspect ht = hx².
//!
//! All queries are restricted to the model's declared finite window; the
//! underlying objects are unbounded, so the window is part of the model and
//! queries outside it are window errors rather than guesses. Distances are
//! parabolic throughout.

use crate::error::{Error, Result};
use crate::geometry::{ParaCylinder, ParaPoint};
use crate::sampled::SampledFunction;

/// Which side of a graph is the domain interior.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    /// Ω = {x > f(t)}
    PositiveX,
    /// Ω = {x < f(t)}
    NegativeX,
}

/// Boolean occupancy lattice with parabolic cell aspect ht = hx².
///
/// Cell (ix, it) covers [x0 + ix·hx, x0 + (ix+1)·hx) × [t0 + it·ht, t0 + (it+1)·ht).
/// The one-cell frame of the lattice must be unoccupied so that the whole
/// boundary of the occupied set is carried by interior faces; the modeled
/// domain is therefore a subset of the lattice extent and everything past the
/// extent is exterior.
#[derive(Debug, Clone)]
pub struct GridOccupancy {
    pub x0: f64,
    pub t0: f64,
    pub hx: f64,
    pub nx: usize,
    pub nt: usize,
    cells: Vec<bool>,
    /// boundary face midpoints grouped by time, each group sorted in x
    boundary_rows: Vec<(f64, Vec<f64>)>,
}

impl GridOccupancy {
    pub fn new(x0: f64, t0: f64, hx: f64, nx: usize, nt: usize, cells: Vec<bool>) -> Result<Self> {
        if !(hx > 0.0) || nx < 3 || nt < 3 {
            return Err(Error::Degenerate("grid needs hx > 0 and ≥ 3×3 cells".into()));
        }
        if cells.len() != nx * nt {
            return Err(Error::Degenerate(format!(
                "cell buffer has {} entries, lattice wants {}",
                cells.len(),
                nx * nt
            )));
        }
        for it in 0..nt {
            for ix in 0..nx {
                let edge = it == 0 || it == nt - 1 || ix == 0 || ix == nx - 1;
                if edge && cells[it * nx + ix] {
                    return Err(Error::Precondition(
                        "grid frame cells must be unoccupied (domain must not touch the extent)"
                            .into(),
                    ));
                }
            }
        }
        let mut grid = GridOccupancy {
            x0,
            t0,
            hx,
            nx,
            nt,
            cells,
            boundary_rows: Vec::new(),
        };
        grid.boundary_rows = grid.collect_boundary_rows();
        Ok(grid)
    }

    /// Builds a grid by testing a membership predicate at cell centers.
    pub fn from_predicate<F: Fn(f64, f64) -> bool>(
        x_lo: f64,
        x_hi: f64,
        t_lo: f64,
        t_hi: f64,
        hx: f64,
        inside: F,
    ) -> Result<Self> {
        let ht = hx * hx;
        let nx = ((x_hi - x_lo) / hx).ceil() as usize + 2;
        let nt = ((t_hi - t_lo) / ht).ceil() as usize + 2;
        let x0 = x_lo - hx;
        let t0 = t_lo - ht;
        let mut cells = vec![false; nx * nt];
        for it in 1..nt - 1 {
            for ix in 1..nx - 1 {
                let xc = x0 + (ix as f64 + 0.5) * hx;
                let tc = t0 + (it as f64 + 0.5) * ht;
                cells[it * nx + ix] = inside(xc, tc);
            }
        }
        GridOccupancy::new(x0, t0, hx, nx, nt, cells)
    }

    pub fn ht(&self) -> f64 {
        self.hx * self.hx
    }

    pub fn occupied(&self, ix: usize, it: usize) -> bool {
        self.cells[it * self.nx + ix]
    }

    /// Cell index containing a point, when inside the lattice extent.
    pub fn cell_of(&self, p: &ParaPoint) -> Option<(usize, usize)> {
        let fx = (p.x - self.x0) / self.hx;
        let ft = (p.t - self.t0) / self.ht();
        if fx < 0.0 || ft < 0.0 {
            return None;
        }
        let (ix, it) = (fx.floor() as usize, ft.floor() as usize);
        if ix >= self.nx || it >= self.nt {
            return None;
        }
        Some((ix, it))
    }

    pub fn cell_center(&self, ix: usize, it: usize) -> ParaPoint {
        ParaPoint::new(
            self.x0 + (ix as f64 + 0.5) * self.hx,
            self.t0 + (it as f64 + 0.5) * self.ht(),
        )
    }

    pub fn contains_point(&self, p: &ParaPoint) -> bool {
        match self.cell_of(p) {
            Some((ix, it)) => self.occupied(ix, it),
            None => false,
        }
    }

    fn collect_boundary_rows(&self) -> Vec<(f64, Vec<f64>)> {
        use std::collections::BTreeMap;
        let ht = self.ht();
        let mut rows: BTreeMap<u64, (f64, Vec<f64>)> = BTreeMap::new();
        let mut push = |t: f64, x: f64| {
            rows.entry(t.to_bits()).or_insert_with(|| (t, Vec::new())).1.push(x);
        };
        for it in 0..self.nt {
            for ix in 0..self.nx {
                if !self.occupied(ix, it) {
                    continue;
                }
                // vertical faces (differ in x), midpoint at cell-center time
                let tc = self.t0 + (it as f64 + 0.5) * ht;
                if !self.occupied(ix - 1, it) {
                    push(tc, self.x0 + ix as f64 * self.hx);
                }
                if !self.occupied(ix + 1, it) {
                    push(tc, self.x0 + (ix + 1) as f64 * self.hx);
                }
                // horizontal faces (differ in t), midpoint at cell-center x
                let xc = self.x0 + (ix as f64 + 0.5) * self.hx;
                if !self.occupied(ix, it - 1) {
                    push(self.t0 + it as f64 * ht, xc);
                }
                if !self.occupied(ix, it + 1) {
                    push(self.t0 + (it + 1) as f64 * ht, xc);
                }
            }
        }
        let mut out: Vec<(f64, Vec<f64>)> = rows.into_values().collect();
        for (_, xs) in out.iter_mut() {
            xs.sort_by(f64::total_cmp);
            xs.dedup();
        }
        out.sort_by(|a, b| a.0.total_cmp(&b.0));
        out
    }

    /// All boundary face midpoints, sorted by (t, x).
    pub fn boundary_points(&self) -> Vec<ParaPoint> {
        let mut pts = Vec::new();
        for (t, xs) in &self.boundary_rows {
            for &x in xs {
                pts.push(ParaPoint::new(x, *t));
            }
        }
        pts
    }

    /// Unsigned parabolic distance from `p` to the boundary point set.
    /// Rows are scanned outward from p.t and pruned once √|Δt| alone
    /// exceeds the best distance so far.
    pub fn boundary_distance(&self, p: &ParaPoint) -> f64 {
        let rows = &self.boundary_rows;
        if rows.is_empty() {
            return f64::INFINITY;
        }
        let mut best = f64::INFINITY;
        let start = rows.partition_point(|(t, _)| *t < p.t);
        let mut lo = start as isize - 1;
        let mut hi = start;
        loop {
            let pick_lo = if lo >= 0 && hi < rows.len() {
                (p.t - rows[lo as usize].0).abs() <= (rows[hi].0 - p.t).abs()
            } else {
                lo >= 0
            };
            let idx = if pick_lo {
                if lo < 0 {
                    break;
                }
                let i = lo as usize;
                lo -= 1;
                i
            } else {
                if hi >= rows.len() {
                    break;
                }
                let i = hi;
                hi += 1;
                i
            };
            let (t, xs) = &rows[idx];
            let dt_part = (p.t - t).abs().sqrt();
            if dt_part >= best {
                if pick_lo {
                    lo = -1; // this side exhausted
                } else {
                    hi = rows.len();
                }
                if lo < 0 && hi >= rows.len() {
                    break;
                }
                continue;
            }
            // nearest x in the sorted row
            let j = xs.partition_point(|&x| x < p.x);
            for cand in [j.wrapping_sub(1), j] {
                if let Some(&x) = xs.get(cand) {
                    let d = (p.x - x).abs() + dt_part;
                    if d < best {
                        best = d;
                    }
                }
            }
        }
        best
    }
}

/// A domain of the plane answering membership, signed parabolic distance and
/// boundary sampling, in one of three representations.
#[derive(Debug, Clone)]
pub enum DomainModel {
    Graph {
        f: SampledFunction,
        orientation: Orientation,
    },
    Slab {
        f: SampledFunction,
        g: SampledFunction,
    },
    Grid(GridOccupancy),
}

impl DomainModel {
    pub fn graph(f: SampledFunction, orientation: Orientation) -> DomainModel {
        DomainModel::Graph { f, orientation }
    }

    /// Slab {f(t) < x < g(t)}; requires g > f strictly at every shared knot.
    pub fn slab(f: SampledFunction, g: SampledFunction) -> Result<DomainModel> {
        let (a, b) = shared_window(&f, &g)?;
        let mut ts: Vec<f64> = f
            .knots()
            .iter()
            .chain(g.knots().iter())
            .map(|(t, _)| *t)
            .filter(|t| *t >= a && *t <= b)
            .collect();
        ts.sort_by(f64::total_cmp);
        for t in ts {
            if g.eval(t)? <= f.eval(t)? {
                return Err(Error::Precondition(format!(
                    "slab needs g > f strictly; violated at t = {t}"
                )));
            }
        }
        Ok(DomainModel::Slab { f, g })
    }

    /// Queryable time window.
    pub fn window_t(&self) -> (f64, f64) {
        match self {
            DomainModel::Graph { f, .. } => f.window(),
            DomainModel::Slab { f, g } => {
                let (fa, fb) = f.window();
                let (ga, gb) = g.window();
                (fa.max(ga), fb.min(gb))
            }
            DomainModel::Grid(grid) => (grid.t0, grid.t0 + grid.nt as f64 * grid.ht()),
        }
    }

    /// Resolution to which boundary positions are trusted.
    pub fn resolution(&self) -> f64 {
        match self {
            DomainModel::Graph { f, .. } => graph_resolution(f),
            DomainModel::Slab { f, g } => graph_resolution(f).max(graph_resolution(g)),
            DomainModel::Grid(grid) => grid.hx,
        }
    }

    /// Membership test. Errors when the query time leaves a graph window;
    /// grid models are exterior past their extent by construction.
    pub fn contains(&self, p: &ParaPoint) -> Result<bool> {
        match self {
            DomainModel::Graph { f, orientation } => {
                let fv = f.eval(p.t)?;
                Ok(match orientation {
                    Orientation::PositiveX => p.x > fv,
                    Orientation::NegativeX => p.x < fv,
                })
            }
            DomainModel::Slab { f, g } => Ok(p.x > f.eval(p.t)? && p.x < g.eval(p.t)?),
            DomainModel::Grid(grid) => Ok(grid.contains_point(p)),
        }
    }

    /// Signed parabolic distance to ∂Ω: positive inside, negative outside,
    /// zero on the boundary, accurate to the model's stated resolution.
    pub fn signed_distance(&self, p: &ParaPoint) -> Result<f64> {
        let unsigned = match self {
            DomainModel::Graph { f, .. } => graph_boundary_distance(f, p)?,
            DomainModel::Slab { f, g } => {
                graph_boundary_distance(f, p)?.min(graph_boundary_distance(g, p)?)
            }
            DomainModel::Grid(grid) => grid.boundary_distance(p),
        };
        Ok(if self.contains(p)? { unsigned } else { -unsigned })
    }

    /// Points of ∂Ω inside `window`, deterministic for fixed inputs.
    ///
    /// Graphs place n samples at times spread across the window with a tiny
    /// end inset; slabs do the same per component; grids return their
    /// boundary face midpoints (decimated to ≈ n keeping both extremes).
    pub fn boundary_sample(&self, window: &ParaCylinder, n: usize) -> Result<Vec<ParaPoint>> {
        if n < 2 {
            return Err(Error::Precondition("boundary_sample needs n ≥ 2".into()));
        }
        let mut pts = match self {
            DomainModel::Graph { f, .. } => graph_boundary_sample(f, window, n)?,
            DomainModel::Slab { f, g } => {
                let mut v = graph_boundary_sample(f, window, n)?;
                v.extend(graph_boundary_sample(g, window, n)?);
                v
            }
            DomainModel::Grid(grid) => {
                let (t_lo, t_hi) = window.t_range();
                let (x_lo, x_hi) = window.x_range();
                let all: Vec<ParaPoint> = grid
                    .boundary_points()
                    .into_iter()
                    .filter(|p| p.t > t_lo && p.t < t_hi && p.x > x_lo && p.x < x_hi)
                    .collect();
                decimate_keeping_ends(all, n)
            }
        };
        pts.sort_by(|a, b| a.t.total_cmp(&b.t).then(a.x.total_cmp(&b.x)));
        Ok(pts)
    }

    /// Graph components as (function, orientation of Ω relative to the
    /// graph): graphs have one, slabs two, grids none.
    pub fn graph_components(&self) -> Vec<(&SampledFunction, Orientation)> {
        match self {
            DomainModel::Graph { f, orientation } => vec![(f, *orientation)],
            DomainModel::Slab { f, g } => vec![
                (f, Orientation::PositiveX),
                (g, Orientation::NegativeX),
            ],
            DomainModel::Grid(_) => Vec::new(),
        }
    }

    /// Rasterizes any variant onto an occupancy grid covering the given
    /// rectangle. Grid inputs are re-sampled at their own cell centers.
    pub fn rasterize(&self, x_lo: f64, x_hi: f64, t_lo: f64, t_hi: f64, hx: f64) -> Result<GridOccupancy> {
        let (wa, wb) = self.window_t();
        if t_lo < wa || t_hi > wb {
            return Err(Error::Window(format!(
                "rasterization window [{t_lo}, {t_hi}] exceeds model window [{wa}, {wb}]"
            )));
        }
        GridOccupancy::from_predicate(x_lo, x_hi, t_lo, t_hi, hx, |x, t| {
            self.contains(&ParaPoint::new(x, t)).unwrap_or(false)
        })
    }
}

fn shared_window(f: &SampledFunction, g: &SampledFunction) -> Result<(f64, f64)> {
    let (fa, fb) = f.window();
    let (ga, gb) = g.window();
    let (a, b) = (fa.max(ga), fb.min(gb));
    if !(b > a) {
        return Err(Error::Window("graph windows do not overlap".into()));
    }
    Ok((a, b))
}

fn graph_resolution(f: &SampledFunction) -> f64 {
    let mut max_dt: f64 = 0.0;
    for w in f.knots().windows(2) {
        max_dt = max_dt.max(w[1].0 - w[0].0);
    }
    // PL minimization is exact on segments; the refinement floor matters
    // only for analytic sources evaluated between knots.
    (max_dt.sqrt() / 16.0).max(1e-12)
}

/// Unsigned parabolic distance from p to the graph {(f(t), t)} restricted to
/// the knot window. Exact up to the PL/analytic deviation: per linear
/// segment the minimum of |p.x − f(t)| + √|p.t − t| is attained at a segment
/// end, at the f(t) = p.x crossing, at t = p.t, or at the stationary points
/// t = p.t ± 1/(4b²) for segment slope b; a short bracketed refinement
/// follows when the function carries an analytic source.
fn graph_boundary_distance(f: &SampledFunction, p: &ParaPoint) -> Result<f64> {
    let (wa, wb) = f.window();
    if p.t < wa || p.t > wb {
        return Err(Error::Window(format!(
            "signed_distance query t = {} outside window [{wa}, {wb}]",
            p.t
        )));
    }
    let eval = |t: f64| -> f64 {
        // inside the window by construction of the candidates
        f.eval(t).unwrap_or(f64::INFINITY)
    };
    let cost = |t: f64| (p.x - eval(t)).abs() + (p.t - t).abs().sqrt();

    let mut best_t = p.t;
    let mut best = cost(p.t);

    let knots = f.knots();
    for i in 0..knots.len().saturating_sub(1) {
        let (ta, va) = knots[i];
        let (tb, vb) = knots[i + 1];
        // prune: segment cannot beat best if its time gap alone is too far
        let gap = if p.t < ta {
            ta - p.t
        } else if p.t > tb {
            p.t - tb
        } else {
            0.0
        };
        if gap.sqrt() >= best {
            continue;
        }
        let b = (vb - va) / (tb - ta);
        let mut cands = [ta, tb, f64::NAN, f64::NAN, f64::NAN, f64::NAN];
        if b != 0.0 {
            let tx = ta + (p.x - va) / b;
            if tx > ta && tx < tb {
                cands[2] = tx;
            }
            let dt = 1.0 / (4.0 * b * b);
            if p.t - dt > ta && p.t - dt < tb {
                cands[3] = p.t - dt;
            }
            if p.t + dt > ta && p.t + dt < tb {
                cands[4] = p.t + dt;
            }
        }
        if p.t > ta && p.t < tb {
            cands[5] = p.t;
        }
        for &t in &cands {
            if t.is_nan() {
                continue;
            }
            let c = cost(t);
            if c < best {
                best = c;
                best_t = t;
            }
        }
    }

    if f.source().is_some() {
        // local refinement for the analytic graph around the PL argmin
        let mut half = graph_resolution(f).powi(2).max(1e-12).sqrt();
        for w in f.knots().windows(2) {
            if best_t >= w[0].0 && best_t <= w[1].0 {
                half = (w[1].0 - w[0].0) * 0.5;
                break;
            }
        }
        for _ in 0..24 {
            let lo = (best_t - half).max(wa);
            let hi = (best_t + half).min(wb);
            let mut local_best = best;
            let mut local_t = best_t;
            for k in 0..=8 {
                let t = lo + (hi - lo) * k as f64 / 8.0;
                let c = cost(t);
                if c < local_best {
                    local_best = c;
                    local_t = t;
                }
            }
            best = local_best;
            best_t = local_t;
            half *= 0.35;
        }
    }
    Ok(best)
}

fn graph_boundary_sample(
    f: &SampledFunction,
    window: &ParaCylinder,
    n: usize,
) -> Result<Vec<ParaPoint>> {
    let (wa, wb) = f.window();
    let (t_lo, t_hi) = window.t_range();
    let lo = t_lo.max(wa);
    let hi = t_hi.min(wb);
    if !(hi > lo) {
        return Ok(Vec::new());
    }
    let inset = (hi - lo) * 1e-9;
    let (a, b) = (lo + inset, hi - inset);
    let (cx, r) = (window.center.x, window.r);
    let mut pts = Vec::with_capacity(n);
    for k in 0..n {
        let t = a + (b - a) * k as f64 / (n - 1) as f64;
        let x = f.eval(t)?;
        if (x - cx).abs() < r {
            pts.push(ParaPoint::new(x, t));
        }
    }
    Ok(pts)
}

fn decimate_keeping_ends(pts: Vec<ParaPoint>, n: usize) -> Vec<ParaPoint> {
    if pts.len() <= n {
        return pts;
    }
    let m = pts.len();
    (0..n)
        .map(|k| pts[(k * (m - 1)) / (n - 1)])
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::para_dist;
    use crate::sampled::AnalyticSource;

    pub fn half_plane(window: f64) -> DomainModel {
        let f = SampledFunction::analytic(AnalyticSource::Const(0.0), -window, window, 2).unwrap();
        DomainModel::graph(f, Orientation::PositiveX)
    }

    #[test]
    fn half_plane_signed_distance() {
        let dom = half_plane(100.0);
        // nearest boundary point of (2,5) is (0,5)
        assert_eq!(dom.signed_distance(&ParaPoint::new(2.0, 5.0)).unwrap(), 2.0);
        // exterior sign
        assert_eq!(dom.signed_distance(&ParaPoint::new(-1.0, 0.0)).unwrap(), -1.0);
    }

    // Oracle (brute force over a dense boundary sample, computed before
    // freezing): for f(t) = |t|^{1/2} and p = (1,0) the cost
    // |1 − √|t|| + √|t| equals 1 for all √|t| ≤ 1 and exceeds 1 beyond,
    // so the distance is exactly 1.
    #[test]
    fn sqrt_cusp_distance_matches_brute_force() {
        let f = SampledFunction::analytic(AnalyticSource::SqrtCusp { amp: 1.0 }, -4.0, 4.0, 4001)
            .unwrap();
        let dom = DomainModel::graph(f, Orientation::PositiveX);
        let p = ParaPoint::new(1.0, 0.0);
        let d = dom.signed_distance(&p).unwrap();
        assert!(d > 0.0 && d <= 1.0 + 1e-9, "d = {d} not in (0,1]");

        let mut brute = f64::INFINITY;
        for i in 0..=200_000 {
            let t = -4.0 + 8.0 * i as f64 / 200_000.0;
            let q = ParaPoint::new(t.abs().sqrt(), t);
            brute = brute.min(para_dist(p, q));
        }
        assert!((d - brute).abs() < 1e-3, "d = {d}, brute = {brute}");
        assert!((d - 1.0).abs() < 1e-6, "analytic oracle gives exactly 1");
    }

    #[test]
    fn signed_distance_outside_window_errors() {
        let dom = half_plane(1.0);
        assert!(matches!(
            dom.signed_distance(&ParaPoint::new(0.5, 3.0)),
            Err(Error::Window(_))
        ));
    }

    #[test]
    fn half_plane_boundary_sample_is_vertical() {
        let dom = half_plane(100.0);
        let win = ParaCylinder::new(ParaPoint::new(0.0, 0.0), 1.0);
        let pts = dom.boundary_sample(&win, 3).unwrap();
        assert_eq!(pts.len(), 3);
        assert!(pts.iter().all(|p| p.x == 0.0));
        assert!((pts[0].t + 1.0).abs() < 1e-6);
        assert!(pts[1].t.abs() < 1e-12);
        assert!((pts[2].t - 1.0).abs() < 1e-6);
    }

    #[test]
    fn slab_boundary_sample_has_two_families() {
        let f = SampledFunction::analytic(AnalyticSource::Const(0.0), -110.0, 110.0, 2).unwrap();
        let g = SampledFunction::analytic(AnalyticSource::Const(1.0), -110.0, 110.0, 2).unwrap();
        let dom = DomainModel::slab(f, g).unwrap();
        let win = ParaCylinder::new(ParaPoint::new(0.5, 0.0), 10.0);
        let pts = dom.boundary_sample(&win, 5).unwrap();
        let on_f = pts.iter().filter(|p| p.x == 0.0).count();
        let on_g = pts.iter().filter(|p| p.x == 1.0).count();
        assert_eq!((on_f, on_g), (5, 5));
    }

    #[test]
    fn slab_requires_strict_separation() {
        let f = SampledFunction::from_knots(vec![(-1.0, 0.0), (1.0, 1.0)]).unwrap();
        let g = SampledFunction::from_knots(vec![(-1.0, 1.0), (1.0, 1.0)]).unwrap();
        assert!(matches!(
            DomainModel::slab(f, g),
            Err(Error::Precondition(_))
        ));
    }

    fn unit_disk_grid(hx: f64) -> GridOccupancy {
        GridOccupancy::from_predicate(-1.3, 1.3, -1.3, 1.3, hx, |x, t| x * x + t * t < 1.0)
            .unwrap()
    }

    #[test]
    fn grid_disk_boundary_near_circle() {
        let grid = unit_disk_grid(0.05);
        let win = ParaCylinder::new(ParaPoint::new(0.0, 0.0), 1.4);
        let dom = DomainModel::Grid(grid);
        let pts = dom.boundary_sample(&win, 4000).unwrap();
        assert!(!pts.is_empty());
        for p in &pts {
            let rad = (p.x * p.x + p.t * p.t).sqrt();
            // within one cell of the analytic circle (cell diagonal in the
            // parabolic metric is ~ hx + ht ≈ 0.0525)
            assert!(
                (rad - 1.0).abs() < 0.06,
                "boundary point ({}, {}) at radius {rad}",
                p.x,
                p.t
            );
        }
    }

    #[test]
    fn grid_membership_and_distance_signs_agree() {
        let dom = DomainModel::Grid(unit_disk_grid(0.05));
        let inside = ParaPoint::new(0.0, 0.0);
        let outside = ParaPoint::new(1.2, 0.0);
        assert!(dom.signed_distance(&inside).unwrap() > 0.0);
        assert!(dom.signed_distance(&outside).unwrap() < 0.0);
        // exterior past the extent
        assert!(!dom.contains(&ParaPoint::new(5.0, 0.0)).unwrap());
    }

    #[test]
    fn grid_reproduces_graph_membership_within_one_cell() {
        use crate::sampled::AnalyticSource;
        let f = SampledFunction::analytic(AnalyticSource::Sine { amp: 0.3, freq: 1.0 }, -2.0, 2.0, 401)
            .unwrap();
        let dom = DomainModel::graph(f, Orientation::PositiveX);
        let grid = dom.rasterize(-1.0, 1.5, -1.5, 1.5, 0.05).unwrap();
        let gdom = DomainModel::Grid(grid);
        let mut checked = 0;
        for i in 0..40 {
            for j in 0..40 {
                let p = ParaPoint::new(-0.9 + 2.3 * i as f64 / 39.0, -1.4 + 2.8 * j as f64 / 39.0);
                let d = dom.signed_distance(&p).unwrap();
                if d.abs() > 0.08 {
                    assert_eq!(
                        dom.contains(&p).unwrap(),
                        gdom.contains(&p).unwrap(),
                        "mismatch at ({}, {}), graph dist {d}",
                        p.x,
                        p.t
                    );
                    checked += 1;
                }
            }
        }
        assert!(checked > 1000);
    }
}
