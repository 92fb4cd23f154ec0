//! Domain spec files: a small key-value text format describing a domain
//! model, either by a named built-in profile or by explicit knot tables.
//!
//! ```text
//! variant = graph
//! orientation = +x
//! builtin = sin(0.3, 1)
//! window = -8 8
//! samples = 1025
//! ```
//!
//! Grid variants add `resolution` (cell size hx) and `xrange`. Serialization
//! uses Rust's shortest round-trip float formatting, so parse ∘ serialize is
//! the identity on every field.

use crate::domain::{DomainModel, GridOccupancy, Orientation};
use crate::error::{Error, Result};
use crate::sampled::{AnalyticSource, SampledFunction};

/// Named boundary profiles.
#[derive(Debug, Clone, PartialEq)]
pub enum Builtin {
    /// f ≡ 0
    HalfPlane,
    /// f ≡ 0, g ≡ w
    SlabWidth(f64),
    /// f(t) = a sin(ωt)
    Sin { amp: f64, freq: f64 },
    /// f(t) = a |t|^{1/2}
    SqrtCusp { amp: f64 },
    /// f(t) = m t
    Linear { slope: f64 },
    /// grid disk (x−cx)² + (t−ct)² < R²
    Disk { cx: f64, ct: f64, r: f64 },
    /// grid {x > 0} minus the closed disk
    Bubble { cx: f64, ct: f64, r: f64 },
}

impl Builtin {
    pub fn parse(s: &str) -> Option<Builtin> {
        let s = s.trim();
        if s == "halfplane" {
            return Some(Builtin::HalfPlane);
        }
        let (name, rest) = s.split_once('(')?;
        let args: Vec<f64> = rest
            .strip_suffix(')')?
            .split(',')
            .map(|a| a.trim().parse::<f64>())
            .collect::<std::result::Result<_, _>>()
            .ok()?;
        match (name.trim(), args.as_slice()) {
            ("slab", [w]) => Some(Builtin::SlabWidth(*w)),
            ("sin", [a, w]) => Some(Builtin::Sin { amp: *a, freq: *w }),
            ("sqrtcusp", [a]) => Some(Builtin::SqrtCusp { amp: *a }),
            ("linear", [m]) => Some(Builtin::Linear { slope: *m }),
            ("disk", [r]) => Some(Builtin::Disk { cx: 0.0, ct: 0.0, r: *r }),
            ("disk", [cx, ct, r]) => Some(Builtin::Disk { cx: *cx, ct: *ct, r: *r }),
            ("bubble", [cx, ct, r]) => Some(Builtin::Bubble { cx: *cx, ct: *ct, r: *r }),
            _ => None,
        }
    }

    pub fn format(&self) -> String {
        match self {
            Builtin::HalfPlane => "halfplane".into(),
            Builtin::SlabWidth(w) => format!("slab({w})"),
            Builtin::Sin { amp, freq } => format!("sin({amp}, {freq})"),
            Builtin::SqrtCusp { amp } => format!("sqrtcusp({amp})"),
            Builtin::Linear { slope } => format!("linear({slope})"),
            Builtin::Disk { cx, ct, r } => format!("disk({cx}, {ct}, {r})"),
            Builtin::Bubble { cx, ct, r } => format!("bubble({cx}, {ct}, {r})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    Graph,
    Slab,
    Grid,
}

/// Parsed domain spec; `build` turns it into a model.
#[derive(Debug, Clone, PartialEq)]
pub struct DomainSpec {
    pub variant: Variant,
    pub orientation: Orientation,
    pub builtin: Option<Builtin>,
    pub table: Option<Vec<(f64, f64)>>,
    pub gtable: Option<Vec<(f64, f64)>>,
    /// time window [t0, t1]
    pub window: (f64, f64),
    /// knot count for analytic profiles
    pub samples: usize,
    /// grid cell size hx
    pub resolution: f64,
    /// grid x extent
    pub x_range: Option<(f64, f64)>,
}

impl Default for DomainSpec {
    fn default() -> Self {
        DomainSpec {
            variant: Variant::Graph,
            orientation: Orientation::PositiveX,
            builtin: Some(Builtin::HalfPlane),
            table: None,
            gtable: None,
            window: (-8.0, 8.0),
            samples: 1025,
            resolution: 0.05,
            x_range: None,
        }
    }
}

impl DomainSpec {
    pub fn parse(text: &str) -> Result<DomainSpec> {
        let mut spec = DomainSpec::default();
        let mut saw_builtin_or_table = false;
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let lineno = idx + 1;
            let (key, value) = line.split_once('=').ok_or_else(|| Error::Parse {
                line: lineno,
                msg: format!("expected `key = value`, got `{line}`"),
            })?;
            let (key, value) = (key.trim(), value.trim());
            let bad = |msg: String| Error::Parse { line: lineno, msg };
            match key {
                "variant" => {
                    spec.variant = match value {
                        "graph" => Variant::Graph,
                        "slab" => Variant::Slab,
                        "grid" => Variant::Grid,
                        other => return Err(bad(format!("unknown variant `{other}`"))),
                    }
                }
                "orientation" => {
                    spec.orientation = match value {
                        "+x" => Orientation::PositiveX,
                        "-x" => Orientation::NegativeX,
                        other => return Err(bad(format!("unknown orientation `{other}`"))),
                    }
                }
                "builtin" => {
                    spec.builtin = Some(
                        Builtin::parse(value)
                            .ok_or_else(|| bad(format!("unknown builtin `{value}`")))?,
                    );
                    saw_builtin_or_table = true;
                }
                "table" | "gtable" => {
                    let knots = parse_knot_table(value)
                        .map_err(|msg| bad(format!("bad knot table: {msg}")))?;
                    if key == "table" {
                        spec.table = Some(knots);
                        spec.builtin = None;
                    } else {
                        spec.gtable = Some(knots);
                    }
                    saw_builtin_or_table = true;
                }
                "window" => {
                    spec.window = parse_pair(value).map_err(|msg| bad(msg))?;
                }
                "samples" => {
                    spec.samples = value
                        .parse()
                        .map_err(|_| bad(format!("bad sample count `{value}`")))?;
                }
                "resolution" => {
                    spec.resolution = value
                        .parse()
                        .map_err(|_| bad(format!("bad resolution `{value}`")))?;
                }
                "xrange" => {
                    spec.x_range = Some(parse_pair(value).map_err(|msg| bad(msg))?);
                }
                other => return Err(bad(format!("unknown key `{other}`"))),
            }
        }
        if !saw_builtin_or_table {
            return Err(Error::Parse {
                line: 0,
                msg: "spec needs a `builtin` or a `table`".into(),
            });
        }
        Ok(spec)
    }

    pub fn serialize(&self) -> String {
        let mut out = String::from("# paranta domain spec\n");
        out.push_str(&format!(
            "variant = {}\n",
            match self.variant {
                Variant::Graph => "graph",
                Variant::Slab => "slab",
                Variant::Grid => "grid",
            }
        ));
        out.push_str(&format!(
            "orientation = {}\n",
            match self.orientation {
                Orientation::PositiveX => "+x",
                Orientation::NegativeX => "-x",
            }
        ));
        if let Some(b) = &self.builtin {
            out.push_str(&format!("builtin = {}\n", b.format()));
        }
        if let Some(t) = &self.table {
            out.push_str(&format!("table = {}\n", format_knot_table(t)));
        }
        if let Some(t) = &self.gtable {
            out.push_str(&format!("gtable = {}\n", format_knot_table(t)));
        }
        out.push_str(&format!("window = {} {}\n", self.window.0, self.window.1));
        out.push_str(&format!("samples = {}\n", self.samples));
        out.push_str(&format!("resolution = {}\n", self.resolution));
        if let Some((a, b)) = self.x_range {
            out.push_str(&format!("xrange = {a} {b}\n"));
        }
        out
    }

    /// Builds the domain model this spec describes.
    pub fn build(&self) -> Result<DomainModel> {
        let (w0, w1) = self.window;
        if !(w1 > w0) {
            return Err(Error::Degenerate("window must satisfy t1 > t0".into()));
        }
        let graph_fn = |src: AnalyticSource| SampledFunction::analytic(src, w0, w1, self.samples);
        match self.variant {
            Variant::Graph => {
                let f = match (&self.builtin, &self.table) {
                    (Some(Builtin::HalfPlane), _) => graph_fn(AnalyticSource::Const(0.0))?,
                    (Some(Builtin::Sin { amp, freq }), _) => {
                        graph_fn(AnalyticSource::Sine { amp: *amp, freq: *freq })?
                    }
                    (Some(Builtin::SqrtCusp { amp }), _) => {
                        graph_fn(AnalyticSource::SqrtCusp { amp: *amp })?
                    }
                    (Some(Builtin::Linear { slope }), _) => {
                        graph_fn(AnalyticSource::Linear { slope: *slope, intercept: 0.0 })?
                    }
                    (None, Some(table)) => SampledFunction::from_knots(table.clone())?,
                    _ => {
                        return Err(Error::Degenerate(
                            "graph variant needs a graph builtin or a table".into(),
                        ))
                    }
                };
                Ok(DomainModel::graph(f, self.orientation))
            }
            Variant::Slab => match (&self.builtin, &self.table, &self.gtable) {
                (Some(Builtin::SlabWidth(w)), _, _) => DomainModel::slab(
                    graph_fn(AnalyticSource::Const(0.0))?,
                    graph_fn(AnalyticSource::Const(*w))?,
                ),
                (None, Some(t), Some(g)) => DomainModel::slab(
                    SampledFunction::from_knots(t.clone())?,
                    SampledFunction::from_knots(g.clone())?,
                ),
                _ => Err(Error::Degenerate(
                    "slab variant needs slab(w) or both `table` and `gtable`".into(),
                )),
            },
            Variant::Grid => {
                let hx = self.resolution;
                match &self.builtin {
                    Some(Builtin::Disk { cx, ct, r }) => {
                        let (xa, xb) = self
                            .x_range
                            .unwrap_or((cx - r - 6.0 * hx, cx + r + 6.0 * hx));
                        let grid = GridOccupancy::from_predicate(xa, xb, w0, w1, hx, |x, t| {
                            (x - cx).powi(2) + (t - ct).powi(2) < r * r
                        })?;
                        Ok(DomainModel::Grid(grid))
                    }
                    Some(Builtin::Bubble { cx, ct, r }) => {
                        let (xa, xb) = self.x_range.unwrap_or((-1.0, cx + r + 2.0));
                        let grid = GridOccupancy::from_predicate(xa, xb, w0, w1, hx, |x, t| {
                            x > 0.0 && (x - cx).powi(2) + (t - ct).powi(2) > r * r
                        })?;
                        Ok(DomainModel::Grid(grid))
                    }
                    _ => {
                        // rasterize the graph/slab this spec would otherwise build
                        let base = DomainSpec {
                            variant: if self.gtable.is_some()
                                || matches!(self.builtin, Some(Builtin::SlabWidth(_)))
                            {
                                Variant::Slab
                            } else {
                                Variant::Graph
                            },
                            ..self.clone()
                        };
                        let model = base.build()?;
                        let (xa, xb) = self.x_range.ok_or_else(|| {
                            Error::Degenerate("grid rasterization needs `xrange`".into())
                        })?;
                        let ht = hx * hx;
                        let grid = model.rasterize(xa, xb, w0 + ht, w1 - ht, hx)?;
                        Ok(DomainModel::Grid(grid))
                    }
                }
            }
        }
    }
}

fn parse_pair(s: &str) -> std::result::Result<(f64, f64), String> {
    let parts: Vec<&str> = s.split_whitespace().collect();
    if parts.len() != 2 {
        return Err(format!("expected two numbers, got `{s}`"));
    }
    let a = parts[0].parse().map_err(|_| format!("bad number `{}`", parts[0]))?;
    let b = parts[1].parse().map_err(|_| format!("bad number `{}`", parts[1]))?;
    Ok((a, b))
}

fn parse_knot_table(s: &str) -> std::result::Result<Vec<(f64, f64)>, String> {
    s.split(';')
        .filter(|e| !e.trim().is_empty())
        .map(|entry| {
            let (t, v) = entry
                .split_once(':')
                .ok_or_else(|| format!("expected `t:v`, got `{entry}`"))?;
            let t = t.trim().parse().map_err(|_| format!("bad time `{t}`"))?;
            let v = v.trim().parse().map_err(|_| format!("bad value `{v}`"))?;
            Ok((t, v))
        })
        .collect()
}

fn format_knot_table(knots: &[(f64, f64)]) -> String {
    knots
        .iter()
        .map(|(t, v)| format!("{t}:{v}"))
        .collect::<Vec<_>>()
        .join("; ")
}

/// Convenience: parse a spec file's text and build the model.
pub fn load_domain(text: &str) -> Result<(DomainSpec, DomainModel)> {
    let spec = DomainSpec::parse(text)?;
    let model = spec.build()?;
    Ok((spec, model))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_is_lossless() {
        let specs = [
            DomainSpec::default(),
            DomainSpec {
                variant: Variant::Grid,
                builtin: Some(Builtin::Disk { cx: 0.0, ct: 0.0, r: 1.0 }),
                window: (-1.3, 1.3),
                resolution: 0.05,
                x_range: Some((-1.3, 1.3)),
                ..DomainSpec::default()
            },
            DomainSpec {
                variant: Variant::Slab,
                builtin: None,
                table: Some(vec![(-1.0, 0.1), (0.5, -0.25), (2.0, 0.3)]),
                gtable: Some(vec![(-1.0, 1.0), (2.0, 1.5)]),
                window: (-1.0, 2.0),
                ..DomainSpec::default()
            },
            DomainSpec {
                builtin: Some(Builtin::Sin { amp: 0.3, freq: 1.0 }),
                window: (-12.5, 12.5),
                samples: 2049,
                ..DomainSpec::default()
            },
        ];
        for spec in specs {
            let text = spec.serialize();
            let back = DomainSpec::parse(&text).unwrap();
            assert_eq!(spec, back, "round trip changed the spec:\n{text}");
        }
    }

    #[test]
    fn parse_reports_line_numbers() {
        let text = "variant = graph\nbuiltin = halfplane\nwobble = 3\n";
        match DomainSpec::parse(text) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn builtins_build() {
        for text in [
            "variant = graph\nbuiltin = halfplane\nwindow = -4 4\n",
            "variant = graph\nbuiltin = sin(0.3, 1)\nwindow = -4 4\nsamples = 401\n",
            "variant = slab\nbuiltin = slab(1)\nwindow = -4 4\n",
            "variant = grid\nbuiltin = disk(1)\nwindow = -1.3 1.3\nresolution = 0.05\n",
            "variant = grid\nbuiltin = bubble(2, 0, 0.5)\nwindow = -2 2\nresolution = 0.05\nxrange = -0.5 4\n",
        ] {
            let (_, model) = load_domain(text).expect(text);
            drop(model);
        }
    }
}
