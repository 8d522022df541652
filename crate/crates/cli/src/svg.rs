//! Minimal SVG emission: scatter dots and polylines on a shared frame.

/// A dot series drawn at a fixed radius and color.
pub struct Scatter {
    pub points: Vec<(f64, f64)>,
    pub color: String,
    pub radius: f64,
}

/// A connected polyline.
pub struct Line {
    pub points: Vec<(f64, f64)>,
    pub color: String,
}

const WIDTH: f64 = 720.0;
const HEIGHT: f64 = 540.0;
const MARGIN: f64 = 40.0;

fn bounds(series: &[&[(f64, f64)]]) -> (f64, f64, f64, f64) {
    let mut xmin = f64::INFINITY;
    let mut xmax = f64::NEG_INFINITY;
    let mut ymin = f64::INFINITY;
    let mut ymax = f64::NEG_INFINITY;
    for pts in series {
        for &(x, y) in *pts {
            if x.is_finite() && y.is_finite() {
                xmin = xmin.min(x);
                xmax = xmax.max(x);
                ymin = ymin.min(y);
                ymax = ymax.max(y);
            }
        }
    }
    if !xmin.is_finite() {
        return (0.0, 1.0, 0.0, 1.0);
    }
    let pad = |lo: f64, hi: f64| {
        let span = (hi - lo).max(1e-9);
        (lo - 0.05 * span, hi + 0.05 * span)
    };
    let (xmin, xmax) = pad(xmin, xmax);
    let (ymin, ymax) = pad(ymin, ymax);
    (xmin, xmax, ymin, ymax)
}

/// Render scatters and lines into a self-contained SVG document. The y axis
/// points upward (mathematical convention).
pub fn render(scatters: &[Scatter], lines: &[Line], title: &str) -> String {
    let all: Vec<&[(f64, f64)]> = scatters
        .iter()
        .map(|s| s.points.as_slice())
        .chain(lines.iter().map(|l| l.points.as_slice()))
        .collect();
    let (xmin, xmax, ymin, ymax) = bounds(&all);
    let sx = (WIDTH - 2.0 * MARGIN) / (xmax - xmin);
    let sy = (HEIGHT - 2.0 * MARGIN) / (ymax - ymin);
    let px = |x: f64| MARGIN + (x - xmin) * sx;
    let py = |y: f64| HEIGHT - MARGIN - (y - ymin) * sy;

    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" \
         viewBox=\"0 0 {WIDTH} {HEIGHT}\">\n"
    ));
    out.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
    out.push_str(&format!(
        "<rect x=\"{MARGIN}\" y=\"{MARGIN}\" width=\"{}\" height=\"{}\" fill=\"none\" \
         stroke=\"#cccccc\"/>\n",
        WIDTH - 2.0 * MARGIN,
        HEIGHT - 2.0 * MARGIN
    ));
    out.push_str(&format!(
        "<text x=\"{}\" y=\"{}\" font-family=\"monospace\" font-size=\"14\" \
         text-anchor=\"middle\">{}</text>\n",
        WIDTH / 2.0,
        MARGIN / 2.0 + 5.0,
        title
    ));
    out.push_str(&format!(
        "<text x=\"{MARGIN}\" y=\"{}\" font-family=\"monospace\" font-size=\"11\">({:.6}, {:.6})</text>\n",
        HEIGHT - MARGIN / 4.0,
        xmin,
        ymin
    ));
    out.push_str(&format!(
        "<text x=\"{}\" y=\"{}\" font-family=\"monospace\" font-size=\"11\" \
         text-anchor=\"end\">({:.6}, {:.6})</text>\n",
        WIDTH - MARGIN,
        MARGIN / 2.0 + 5.0,
        xmax,
        ymax
    ));
    for line in lines {
        if line.points.is_empty() {
            continue;
        }
        let pts: Vec<String> = line
            .points
            .iter()
            .filter(|(x, y)| x.is_finite() && y.is_finite())
            .map(|&(x, y)| format!("{:.3},{:.3}", px(x), py(y)))
            .collect();
        out.push_str(&format!(
            "<polyline points=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\"/>\n",
            pts.join(" "),
            line.color
        ));
    }
    for sc in scatters {
        for &(x, y) in &sc.points {
            if x.is_finite() && y.is_finite() {
                out.push_str(&format!(
                    "<circle cx=\"{:.3}\" cy=\"{:.3}\" r=\"{}\" fill=\"{}\"/>\n",
                    px(x),
                    py(y),
                    sc.radius,
                    sc.color
                ));
            }
        }
    }
    out.push_str("</svg>\n");
    out
}
