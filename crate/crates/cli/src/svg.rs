//! Self-contained SVG chart emitters: a per-channel line chart of mean QFI
//! against `alpha`, and per-channel heatmap panels over the `(alpha, p)`
//! grid. No external assets, no scripting; the output is a plain static
//! document that diffs cleanly.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use qfi_core::{ChannelKind, ResultRow};

use crate::table::format_sig;

/// Stroke/legend colors, fixed per channel.
pub fn channel_color(kind: ChannelKind) -> &'static str {
    match kind {
        ChannelKind::AmplitudeDamping => "red",
        ChannelKind::PhaseDamping => "blue",
        ChannelKind::Depolarizing => "green",
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum PlotError {
    Empty,
    /// A line chart needs at least two distinct `alpha` samples per channel.
    TooFewPoints { channel: ChannelKind, points: usize },
    /// A line chart needs one fixed `p`; found several.
    MixedP { distinct: usize },
    /// Two rows landed on the same grid cell.
    DuplicateCell { channel: ChannelKind, alpha: f64, p: f64 },
    /// A heatmap needs every `(alpha, p)` combination per channel.
    RaggedGrid { missing: Vec<(ChannelKind, f64, f64)>, total_missing: usize },
}

impl std::fmt::Display for PlotError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PlotError::Empty => write!(f, "input table has no rows"),
            PlotError::TooFewPoints { channel, points } => write!(
                f,
                "line chart needs at least 2 alpha samples per channel; {channel} has {points}"
            ),
            PlotError::MixedP { distinct } => write!(
                f,
                "line chart needs a single p value; input carries {distinct} distinct values"
            ),
            PlotError::DuplicateCell { channel, alpha, p } => {
                write!(f, "duplicate cell (channel={channel}, alpha={alpha}, p={p})")
            }
            PlotError::RaggedGrid { missing, total_missing } => {
                write!(f, "heatmap grid is incomplete; missing {total_missing} cells:")?;
                for (channel, alpha, p) in missing {
                    write!(f, " ({channel}, alpha={alpha}, p={p})")?;
                }
                if *total_missing > missing.len() {
                    write!(f, " ...")?;
                }
                Ok(())
            }
        }
    }
}

impl std::error::Error for PlotError {}

/// Channels in canonical order, keeping only those present in the rows.
fn channels_present(rows: &[ResultRow]) -> Vec<ChannelKind> {
    ChannelKind::ALL
        .into_iter()
        .filter(|kind| rows.iter().any(|row| row.channel == *kind))
        .collect()
}

fn axis_ticks(min: f64, max: f64, count: usize) -> Vec<f64> {
    (0..count)
        .map(|i| min + (max - min) * i as f64 / (count - 1) as f64)
        .collect()
}

/// Line chart: one polyline per channel, `alpha` horizontal, mean QFI
/// vertical. All rows must share one `p`.
pub fn line_plot(rows: &[ResultRow]) -> Result<String, PlotError> {
    if rows.is_empty() {
        return Err(PlotError::Empty);
    }
    let mut p_values: Vec<f64> = rows.iter().map(|r| r.p).collect();
    p_values.sort_by(f64::total_cmp);
    p_values.dedup_by(|a, b| a.to_bits() == b.to_bits());
    if p_values.len() != 1 {
        return Err(PlotError::MixedP { distinct: p_values.len() });
    }
    let p = p_values[0];

    let channels = channels_present(rows);
    let mut series: Vec<(ChannelKind, Vec<(f64, f64)>)> = Vec::new();
    for kind in channels {
        let mut points: Vec<(f64, f64)> = rows
            .iter()
            .filter(|row| row.channel == kind)
            .map(|row| (row.alpha, row.mean_qfi))
            .collect();
        points.sort_by(|a, b| a.0.total_cmp(&b.0));
        for pair in points.windows(2) {
            if pair[0].0.to_bits() == pair[1].0.to_bits() {
                return Err(PlotError::DuplicateCell { channel: kind, alpha: pair[0].0, p });
            }
        }
        if points.len() < 2 {
            return Err(PlotError::TooFewPoints { channel: kind, points: points.len() });
        }
        series.push((kind, points));
    }

    let x_min = series.iter().flat_map(|(_, pts)| pts.iter().map(|p| p.0)).fold(f64::MAX, f64::min);
    let x_max = series.iter().flat_map(|(_, pts)| pts.iter().map(|p| p.0)).fold(f64::MIN, f64::max);
    let y_max_data =
        series.iter().flat_map(|(_, pts)| pts.iter().map(|p| p.1)).fold(0.0f64, f64::max);
    let y_min = 0.0;
    let y_max = if y_max_data > 0.0 { y_max_data * 1.05 } else { 1.0 };
    let x_span = if x_max > x_min { x_max - x_min } else { 1.0 };

    let (width, height) = (760.0, 520.0);
    let (left, right, top, bottom) = (70.0, 180.0, 40.0, 60.0);
    let plot_w = width - left - right;
    let plot_h = height - top - bottom;
    let to_x = |v: f64| left + (v - x_min) / x_span * plot_w;
    let to_y = |v: f64| top + plot_h - (v - y_min) / (y_max - y_min) * plot_h;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(svg, r#"<rect width="{width}" height="{height}" fill="white"/>"#);
    let _ = writeln!(
        svg,
        r#"<text x="{}" y="20" font-family="sans-serif" font-size="15" text-anchor="middle">mean QFI vs alpha (p = {})</text>"#,
        left + plot_w / 2.0,
        format_sig(p, 6)
    );

    // Axes, ticks, grid.
    for (i, tick) in axis_ticks(x_min, x_max, 6).iter().enumerate() {
        let x = to_x(*tick);
        let _ = writeln!(
            svg,
            r##"<line x1="{x:.2}" y1="{}" x2="{x:.2}" y2="{}" stroke="#cccccc" stroke-width="0.5"/>"##,
            top,
            top + plot_h
        );
        let _ = writeln!(
            svg,
            r#"<text x="{x:.2}" y="{}" font-family="sans-serif" font-size="11" text-anchor="middle">{}</text>"#,
            top + plot_h + 18.0,
            format_sig(*tick, 4)
        );
        let _ = i;
    }
    for tick in axis_ticks(y_min, y_max, 6) {
        let y = to_y(tick);
        let _ = writeln!(
            svg,
            r##"<line x1="{}" y1="{y:.2}" x2="{}" y2="{y:.2}" stroke="#cccccc" stroke-width="0.5"/>"##,
            left,
            left + plot_w
        );
        let _ = writeln!(
            svg,
            r#"<text x="{}" y="{:.2}" font-family="sans-serif" font-size="11" text-anchor="end">{}</text>"#,
            left - 8.0,
            y + 4.0,
            format_sig(tick, 4)
        );
    }
    let _ = writeln!(
        svg,
        r#"<rect x="{left}" y="{top}" width="{plot_w}" height="{plot_h}" fill="none" stroke="black" stroke-width="1"/>"#
    );
    let _ = writeln!(
        svg,
        r#"<text x="{}" y="{}" font-family="sans-serif" font-size="13" text-anchor="middle">alpha</text>"#,
        left + plot_w / 2.0,
        height - 14.0
    );
    let _ = writeln!(
        svg,
        r#"<text x="18" y="{}" font-family="sans-serif" font-size="13" text-anchor="middle" transform="rotate(-90 18 {})">mean QFI</text>"#,
        top + plot_h / 2.0,
        top + plot_h / 2.0
    );

    // One polyline per channel plus a legend entry.
    for (index, (kind, points)) in series.iter().enumerate() {
        let color = channel_color(*kind);
        let mut path = String::new();
        for (alpha, value) in points {
            let _ = write!(path, "{:.3},{:.3} ", to_x(*alpha), to_y(*value));
        }
        let _ = writeln!(
            svg,
            r#"<polyline points="{}" fill="none" stroke="{color}" stroke-width="1.8"/>"#,
            path.trim_end()
        );
        let ly = top + 16.0 + 22.0 * index as f64;
        let lx = left + plot_w + 14.0;
        let _ = writeln!(
            svg,
            r#"<line x1="{lx}" y1="{ly}" x2="{}" y2="{ly}" stroke="{color}" stroke-width="1.8"/>"#,
            lx + 26.0
        );
        let _ = writeln!(
            svg,
            r#"<text x="{}" y="{}" font-family="sans-serif" font-size="12">{kind}</text>"#,
            lx + 32.0,
            ly + 4.0
        );
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

/// Perceptually monotone color ramp (dark violet to yellow).
fn ramp_color(t: f64) -> String {
    const ANCHORS: [(f64, [f64; 3]); 5] = [
        (0.00, [68.0, 1.0, 84.0]),
        (0.25, [59.0, 82.0, 139.0]),
        (0.50, [33.0, 145.0, 140.0]),
        (0.75, [94.0, 201.0, 98.0]),
        (1.00, [253.0, 231.0, 37.0]),
    ];
    let t = t.clamp(0.0, 1.0);
    let mut rgb = ANCHORS[ANCHORS.len() - 1].1;
    for window in ANCHORS.windows(2) {
        let (t0, c0) = window[0];
        let (t1, c1) = window[1];
        if t <= t1 {
            let f = if t1 > t0 { (t - t0) / (t1 - t0) } else { 0.0 };
            rgb = [
                c0[0] + (c1[0] - c0[0]) * f,
                c0[1] + (c1[1] - c0[1]) * f,
                c0[2] + (c1[2] - c0[2]) * f,
            ];
            break;
        }
    }
    format!("#{:02x}{:02x}{:02x}", rgb[0].round() as u8, rgb[1].round() as u8, rgb[2].round() as u8)
}

struct Panel {
    kind: ChannelKind,
    alphas: Vec<f64>,
    ps: Vec<f64>,
    /// Values in row-major (p index outer is NOT used; alpha index * n_p + p index).
    values: Vec<f64>,
}

fn build_panels(rows: &[ResultRow]) -> Result<Vec<Panel>, PlotError> {
    if rows.is_empty() {
        return Err(PlotError::Empty);
    }
    let mut panels = Vec::new();
    for kind in channels_present(rows) {
        let subset: Vec<&ResultRow> = rows.iter().filter(|r| r.channel == kind).collect();
        let mut alphas: Vec<f64> = subset.iter().map(|r| r.alpha).collect();
        alphas.sort_by(f64::total_cmp);
        alphas.dedup_by(|a, b| a.to_bits() == b.to_bits());
        let mut ps: Vec<f64> = subset.iter().map(|r| r.p).collect();
        ps.sort_by(f64::total_cmp);
        ps.dedup_by(|a, b| a.to_bits() == b.to_bits());

        let mut cells: BTreeMap<(u64, u64), f64> = BTreeMap::new();
        for row in &subset {
            if cells.insert((row.alpha.to_bits(), row.p.to_bits()), row.mean_qfi).is_some() {
                return Err(PlotError::DuplicateCell { channel: kind, alpha: row.alpha, p: row.p });
            }
        }
        let mut missing = Vec::new();
        for &alpha in &alphas {
            for &p in &ps {
                if !cells.contains_key(&(alpha.to_bits(), p.to_bits())) {
                    missing.push((kind, alpha, p));
                }
            }
        }
        if !missing.is_empty() {
            let total_missing = missing.len();
            missing.truncate(20);
            return Err(PlotError::RaggedGrid { missing, total_missing });
        }
        let values = alphas
            .iter()
            .flat_map(|a| ps.iter().map(|p| cells[&(a.to_bits(), p.to_bits())]))
            .collect();
        panels.push(Panel { kind, alphas, ps, values });
    }
    Ok(panels)
}

/// Heatmap: one panel per channel, `alpha` horizontal, `p` vertical
/// (increasing upward), shared color scale with the global minimum and
/// maximum annotated next to the color bar.
pub fn heatmap(rows: &[ResultRow]) -> Result<String, PlotError> {
    let panels = build_panels(rows)?;
    let v_min = rows.iter().map(|r| r.mean_qfi).fold(f64::MAX, f64::min);
    let v_max = rows.iter().map(|r| r.mean_qfi).fold(f64::MIN, f64::max);
    let span = v_max - v_min;

    let panel_w = 260.0;
    let panel_h = 260.0;
    let gap = 46.0;
    let left = 64.0;
    let top = 56.0;
    let bar_w = 18.0;
    let width = left + panels.len() as f64 * (panel_w + gap) + bar_w + 86.0;
    let height = top + panel_h + 70.0;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.0} {height:.0}">"#
    );
    let _ = writeln!(svg, r#"<rect width="{width:.0}" height="{height:.0}" fill="white"/>"#);
    let _ = writeln!(
        svg,
        r#"<text x="{}" y="24" font-family="sans-serif" font-size="15" text-anchor="middle">mean QFI over (alpha, p)</text>"#,
        width / 2.0
    );

    for (index, panel) in panels.iter().enumerate() {
        let x0 = left + index as f64 * (panel_w + gap);
        let y0 = top;
        let n_a = panel.alphas.len();
        let n_p = panel.ps.len();
        let cell_w = panel_w / n_a as f64;
        let cell_h = panel_h / n_p as f64;

        let _ = writeln!(
            svg,
            r#"<text x="{}" y="{}" font-family="sans-serif" font-size="13" text-anchor="middle">{}</text>"#,
            x0 + panel_w / 2.0,
            y0 - 10.0,
            panel.kind
        );
        for (ai, _) in panel.alphas.iter().enumerate() {
            for (pi, _) in panel.ps.iter().enumerate() {
                let value = panel.values[ai * n_p + pi];
                let t = if span > 0.0 { (value - v_min) / span } else { 0.5 };
                let x = x0 + ai as f64 * cell_w;
                // p grows upward: highest p index sits at the panel top.
                let y = y0 + panel_h - (pi + 1) as f64 * cell_h;
                let _ = writeln!(
                    svg,
                    r#"<rect x="{x:.2}" y="{y:.2}" width="{:.2}" height="{:.2}" fill="{}"/>"#,
                    cell_w + 0.01,
                    cell_h + 0.01,
                    ramp_color(t)
                );
            }
        }
        let _ = writeln!(
            svg,
            r#"<rect x="{x0}" y="{y0}" width="{panel_w}" height="{panel_h}" fill="none" stroke="black" stroke-width="1"/>"#
        );
        // Axis labels and corner ticks.
        let a_lo = format_sig(*panel.alphas.first().unwrap(), 4);
        let a_hi = format_sig(*panel.alphas.last().unwrap(), 4);
        let p_lo = format_sig(*panel.ps.first().unwrap(), 4);
        let p_hi = format_sig(*panel.ps.last().unwrap(), 4);
        let _ = writeln!(
            svg,
            r#"<text x="{x0}" y="{}" font-family="sans-serif" font-size="10" text-anchor="middle">{a_lo}</text>"#,
            y0 + panel_h + 14.0
        );
        let _ = writeln!(
            svg,
            r#"<text x="{}" y="{}" font-family="sans-serif" font-size="10" text-anchor="middle">{a_hi}</text>"#,
            x0 + panel_w,
            y0 + panel_h + 14.0
        );
        let _ = writeln!(
            svg,
            r#"<text x="{}" y="{}" font-family="sans-serif" font-size="10" text-anchor="end">{p_lo}</text>"#,
            x0 - 4.0,
            y0 + panel_h
        );
        let _ = writeln!(
            svg,
            r#"<text x="{}" y="{}" font-family="sans-serif" font-size="10" text-anchor="end">{p_hi}</text>"#,
            x0 - 4.0,
            y0 + 10.0
        );
        let _ = writeln!(
            svg,
            r#"<text x="{}" y="{}" font-family="sans-serif" font-size="12" text-anchor="middle">alpha</text>"#,
            x0 + panel_w / 2.0,
            y0 + panel_h + 32.0
        );
        let _ = writeln!(
            svg,
            r#"<text x="{}" y="{}" font-family="sans-serif" font-size="12" text-anchor="middle" transform="rotate(-90 {} {})">p</text>"#,
            x0 - 34.0,
            y0 + panel_h / 2.0,
            x0 - 34.0,
            y0 + panel_h / 2.0
        );
    }

    // Color bar with min/max annotations.
    let bar_x = left + panels.len() as f64 * (panel_w + gap);
    let steps = 64;
    for i in 0..steps {
        let t = i as f64 / (steps - 1) as f64;
        let y = top + panel_h - (i + 1) as f64 * (panel_h / steps as f64);
        let _ = writeln!(
            svg,
            r#"<rect x="{bar_x:.2}" y="{y:.2}" width="{bar_w}" height="{:.2}" fill="{}"/>"#,
            panel_h / steps as f64 + 0.01,
            ramp_color(t)
        );
    }
    let _ = writeln!(
        svg,
        r#"<rect x="{bar_x}" y="{top}" width="{bar_w}" height="{panel_h}" fill="none" stroke="black" stroke-width="1"/>"#
    );
    let _ = writeln!(
        svg,
        r#"<text x="{}" y="{}" font-family="sans-serif" font-size="11">max = {}</text>"#,
        bar_x + bar_w + 6.0,
        top + 10.0,
        format_sig(v_max, 6)
    );
    let _ = writeln!(
        svg,
        r#"<text x="{}" y="{}" font-family="sans-serif" font-size="11">min = {}</text>"#,
        bar_x + bar_w + 6.0,
        top + panel_h,
        format_sig(v_min, 6)
    );
    svg.push_str("</svg>\n");
    Ok(svg)
}
