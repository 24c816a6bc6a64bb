//! Orbit sweeps: one record per orbit per n, with the diameter measured
//! against the |V|^(2/3) log |V| envelope.

use crate::census::{h2_a_representative, h2_b_representative, two_cylinder_origami};
use crate::error::{Error, Result};
use crate::invariants::hlk_invariant;
use crate::orbit::OrbitGraph;
use crate::origami::Origami;
use crate::perm::is_primitive;
use crate::prym::{reduced_prototype4, reduced_s4, PrymKind, Sign};
use crate::prym_surface::{prototype4_to_origami, prototype6_to_origami};
use serde::Serialize;
use std::time::Instant;

#[derive(Clone, Debug, Serialize)]
pub struct SweepRecord {
    pub n: usize,
    pub stratum: String,
    pub orbit: String,
    pub label_hlk: String,
    pub vertices: usize,
    pub edges: usize,
    pub diameter: u32,
    /// |V|^(2/3) · ln |V|
    pub bound: f64,
    /// diameter / bound (0 for one-vertex graphs)
    pub ratio: f64,
    pub ms: u128,
}

impl SweepRecord {
    pub fn csv_header() -> &'static str {
        "n,stratum,orbit,label_hlk,vertices,edges,diameter,bound,ratio,ms"
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{:.6},{:.6},{}",
            self.n,
            self.stratum,
            self.orbit,
            self.label_hlk,
            self.vertices,
            self.edges,
            self.diameter,
            self.bound,
            self.ratio,
            self.ms
        )
    }
}

pub fn bound_value(vertices: usize) -> f64 {
    if vertices < 2 {
        return 0.0;
    }
    let v = vertices as f64;
    v.powf(2.0 / 3.0) * v.ln()
}

fn record_for(
    seed: &Origami,
    stratum: &str,
    orbit: &str,
    max_vertices: usize,
    all_pairs_threshold: usize,
) -> Result<SweepRecord> {
    let start = Instant::now();
    let g = OrbitGraph::build(seed, max_vertices)?;
    let diameter = g.diameter_with_threshold(all_pairs_threshold);
    let bound = bound_value(g.len());
    let ratio = if bound > 0.0 {
        diameter as f64 / bound
    } else {
        0.0
    };
    let label_hlk = hlk_invariant(seed)
        .map(|h| h.to_string())
        .unwrap_or_else(|_| "none".to_string());
    Ok(SweepRecord {
        n: seed.n(),
        stratum: stratum.to_string(),
        orbit: orbit.to_string(),
        label_hlk,
        vertices: g.len(),
        edges: g.edge_count(),
        diameter,
        bound,
        ratio,
        ms: start.elapsed().as_millis(),
    })
}

/// Orbit seeds for H(2) at a given n: the A and B representatives for odd
/// n ≥ 5, the single orbit otherwise.
pub fn h2_orbit_seeds(n: usize) -> Result<Vec<(String, Origami)>> {
    if n < 3 {
        return Err(Error::BadArgument(format!("n = {n} is too small for H(2)")));
    }
    if n == 3 {
        return Ok(vec![(
            "N3".to_string(),
            crate::census::one_cylinder_origami(1, 1, 1)?,
        )]);
    }
    if n % 2 == 1 {
        Ok(vec![
            ("A".to_string(), h2_a_representative(n)?),
            ("B".to_string(), h2_b_representative(n)?),
        ])
    } else {
        Ok(vec![(
            "Even".to_string(),
            two_cylinder_origami(1, 1, 0, n - 1, 1, 0)?,
        )])
    }
}

/// Primitive Prym H(4) orbit seeds at a given n, labeled by discriminant:
/// D = n², plus D = n²/4 when n ≡ 2 mod 4.
pub fn prym4_orbit_seeds(n: usize) -> Vec<(String, i64, Origami)> {
    let mut out = Vec::new();
    let mut ds = vec![(n * n) as i64];
    if n % 2 == 0 {
        ds.push(((n * n) / 4) as i64);
    }
    for d in ds {
        if !matches!(d % 8, 0 | 1 | 4) || d < 17 {
            continue;
        }
        let mut found = None;
        'search: for e in reduced_s4(d).unwrap_or_default() {
            for eps in [Sign::Plus, Sign::Minus] {
                if let Ok(p) = reduced_prototype4(d, e, eps) {
                    if let Ok(o) = prototype4_to_origami(&p, n) {
                        if is_primitive(o.h(), o.v()).unwrap_or(false) {
                            found = Some(o);
                            break 'search;
                        }
                    }
                }
            }
        }
        if let Some(o) = found {
            out.push((format!("D{d}"), d, o));
        }
    }
    out
}

/// Primitive Prym H(6) orbit seed at even n (D = n²/4).
pub fn prym6_orbit_seed(n: usize) -> Option<(String, i64, Origami)> {
    if n % 2 != 0 {
        return None;
    }
    let d = ((n * n) / 4) as i64;
    for p in crate::prym_surface::reduced6_all(d) {
        if p.kind() != PrymKind::A {
            continue;
        }
        if let Ok(o) = prototype6_to_origami(&p, n) {
            if is_primitive(o.h(), o.v()).unwrap_or(false) {
                return Some((format!("D{d}"), d, o));
            }
        }
    }
    None
}

/// Sweep a stratum over a range of n. Records are ordered by (n, orbit).
pub fn sweep(
    stratum: &str,
    n_min: usize,
    n_max: usize,
    max_vertices: usize,
    all_pairs_threshold: usize,
) -> Result<Vec<SweepRecord>> {
    let mut out = Vec::new();
    for n in n_min..=n_max {
        match stratum {
            "h2" => {
                if n < 3 {
                    continue;
                }
                for (label, seed) in h2_orbit_seeds(n)? {
                    out.push(record_for(&seed, "h2", &label, max_vertices, all_pairs_threshold)?);
                }
            }
            "prym4" => {
                for (label, _, seed) in prym4_orbit_seeds(n) {
                    out.push(record_for(
                        &seed,
                        "prym4",
                        &label,
                        max_vertices,
                        all_pairs_threshold,
                    )?);
                }
            }
            "prym6" => {
                if let Some((label, _, seed)) = prym6_orbit_seed(n) {
                    out.push(record_for(
                        &seed,
                        "prym6",
                        &label,
                        max_vertices,
                        all_pairs_threshold,
                    )?);
                }
            }
            other => return Err(Error::BadArgument(format!("unknown stratum {other:?}"))),
        }
    }
    Ok(out)
}

/// Least-squares fit of `log(diameter) = alpha log |V| + log C` over records
/// with at least two vertices and positive diameter. Returns
/// `(alpha, c, rms_residual)`.
pub fn fit_exponent(records: &[SweepRecord]) -> Result<(f64, f64, f64)> {
    let points: Vec<(f64, f64)> = records
        .iter()
        .filter(|r| r.vertices >= 2 && r.diameter >= 1)
        .map(|r| ((r.vertices as f64).ln(), (r.diameter as f64).ln()))
        .collect();
    if points.len() < 3 {
        return Err(Error::BadArgument(format!(
            "need at least 3 usable records, found {}",
            points.len()
        )));
    }
    let n = points.len() as f64;
    let sx: f64 = points.iter().map(|p| p.0).sum();
    let sy: f64 = points.iter().map(|p| p.1).sum();
    let sxx: f64 = points.iter().map(|p| p.0 * p.0).sum();
    let sxy: f64 = points.iter().map(|p| p.0 * p.1).sum();
    let denom = n * sxx - sx * sx;
    if denom.abs() < 1e-12 {
        return Err(Error::BadArgument("degenerate fit input".into()));
    }
    let alpha = (n * sxy - sx * sy) / denom;
    let logc = (sy - alpha * sx) / n;
    let rms = (points
        .iter()
        .map(|&(x, y)| {
            let r = y - (alpha * x + logc);
            r * r
        })
        .sum::<f64>()
        / n)
        .sqrt();
    Ok((alpha, logc.exp(), rms))
}

/// Self-contained log-log SVG plot of diameter against |V| with the fitted
/// line.
pub fn plot_svg(records: &[SweepRecord]) -> String {
    let pts: Vec<(f64, f64)> = records
        .iter()
        .filter(|r| r.vertices >= 2 && r.diameter >= 1)
        .map(|r| ((r.vertices as f64).ln(), (r.diameter as f64).ln()))
        .collect();
    let (w, h, margin) = (640.0, 480.0, 50.0);
    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">\n"
    ));
    svg.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
    if pts.is_empty() {
        svg.push_str("<text x=\"20\" y=\"40\">no data</text>\n</svg>\n");
        return svg;
    }
    let (xmin, xmax) = pts
        .iter()
        .fold((f64::MAX, f64::MIN), |(a, b), p| (a.min(p.0), b.max(p.0)));
    let (ymin, ymax) = pts
        .iter()
        .fold((f64::MAX, f64::MIN), |(a, b), p| (a.min(p.1), b.max(p.1)));
    let xr = (xmax - xmin).max(1e-9);
    let yr = (ymax - ymin).max(1e-9);
    let sx = |x: f64| margin + (x - xmin) / xr * (w - 2.0 * margin);
    let sy = |y: f64| h - margin - (y - ymin) / yr * (h - 2.0 * margin);
    svg.push_str(&format!(
        "<line x1=\"{m}\" y1=\"{y}\" x2=\"{x2}\" y2=\"{y}\" stroke=\"black\"/>\n<line x1=\"{m}\" y1=\"{m}\" x2=\"{m}\" y2=\"{y}\" stroke=\"black\"/>\n",
        m = margin,
        y = h - margin,
        x2 = w - margin
    ));
    svg.push_str(&format!(
        "<text x=\"{}\" y=\"{}\" font-size=\"12\">ln |V|</text>\n<text x=\"8\" y=\"{}\" font-size=\"12\">ln diam</text>\n",
        w / 2.0,
        h - 12.0,
        margin
    ));
    for &(x, y) in &pts {
        svg.push_str(&format!(
            "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"3\" fill=\"steelblue\"/>\n",
            sx(x),
            sy(y)
        ));
    }
    if let Ok((alpha, c, _)) = fit_exponent(records) {
        let y1 = alpha * xmin + c.ln();
        let y2 = alpha * xmax + c.ln();
        svg.push_str(&format!(
            "<line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"crimson\"/>\n",
            sx(xmin),
            sy(y1),
            sx(xmax),
            sy(y2)
        ));
        svg.push_str(&format!(
            "<text x=\"{}\" y=\"24\" font-size=\"12\">fit: alpha = {:.4}, C = {:.4}</text>\n",
            margin, alpha, c
        ));
    }
    svg.push_str("</svg>\n");
    svg
}

#[cfg(test)]
mod tests {
    use super::*;

    fn synthetic(v: usize, diam: u32) -> SweepRecord {
        SweepRecord {
            n: 0,
            stratum: "x".into(),
            orbit: "x".into(),
            label_hlk: "x".into(),
            vertices: v,
            edges: 0,
            diameter: diam,
            bound: bound_value(v),
            ratio: 0.0,
            ms: 0,
        }
    }

    #[test]
    fn fit_recovers_exact_power_law() {
        let records: Vec<SweepRecord> = (2..40)
            .map(|k| {
                let v = k * k * k;
                synthetic(v, ((v as f64).powf(2.0 / 3.0)).round() as u32)
            })
            .collect();
        let (alpha, _, _) = fit_exponent(&records).unwrap();
        assert!((alpha - 2.0 / 3.0).abs() < 2e-2, "alpha = {alpha}");
        // exactly representable power law
        let records: Vec<SweepRecord> = (1..20).map(|k| synthetic(8usize.pow(k % 6 + 1), 1 << ((k % 6 + 1) * 2))).collect();
        let (alpha, c, res) = fit_exponent(&records).unwrap();
        assert!((alpha - 2.0 / 3.0).abs() < 1e-6);
        assert!((c - 1.0).abs() < 1e-6);
        assert!(res < 1e-9);
    }

    #[test]
    fn fit_of_constant_diameter_has_zero_slope() {
        let records: Vec<SweepRecord> = (2..20).map(|k| synthetic(10 * k, 7)).collect();
        let (alpha, _, _) = fit_exponent(&records).unwrap();
        assert!(alpha.abs() < 1e-9);
        assert!(fit_exponent(&records[..2]).is_err());
    }

    #[test]
    fn h2_sweep_small() {
        let records = sweep("h2", 5, 7, 100_000, 100_000).unwrap();
        assert_eq!(records.len(), 5); // A+B at 5 and 7, one at 6
        let sizes: Vec<usize> = records.iter().map(|r| r.vertices).collect();
        assert!(sizes.contains(&18) && sizes.contains(&9));
        for r in &records {
            assert!(r.ratio > 0.0);
            assert!((r.diameter as usize) < r.vertices);
        }
        let svg = plot_svg(&records);
        assert!(svg.starts_with("<svg"));
    }

    #[test]
    fn prym_seeds_exist() {
        assert!(!prym4_orbit_seeds(8).is_empty());
        assert_eq!(prym4_orbit_seeds(10).len(), 2); // D = 100 and D = 25
        assert!(prym6_orbit_seed(8).is_some());
    }
}
