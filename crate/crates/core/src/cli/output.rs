//! Tables and their CSV and SVG renderings.

use std::fmt::Write as _;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Cell {
    Index(usize),
    Value(f64),
    Missing,
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Value(v)
    }
}

impl From<Option<f64>> for Cell {
    fn from(v: Option<f64>) -> Self {
        v.map_or(Cell::Missing, Cell::Value)
    }
}

impl Cell {
    fn as_f64(&self) -> Option<f64> {
        match self {
            Cell::Index(i) => Some(*i as f64),
            Cell::Value(v) if v.is_finite() => Some(*v),
            _ => None,
        }
    }
}

/// A rectangular data set with a one-line provenance header.
#[derive(Clone, Debug, PartialEq)]
pub struct Table {
    pub meta: Vec<(String, String)>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(meta: Vec<(String, String)>, columns: Vec<String>) -> Self {
        Self { meta, columns, rows: Vec::new() }
    }

    pub fn column(&self, name: &str) -> Option<Vec<Cell>> {
        let i = self.columns.iter().position(|c| c == name)?;
        Some(self.rows.iter().map(|r| r[i]).collect())
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("# su11-coherent v1");
        for (k, v) in &self.meta {
            let _ = write!(s, "; {k}={v}");
        }
        s.push('\n');
        s.push_str(&self.columns.join(","));
        s.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row
                .iter()
                .map(|c| match c {
                    Cell::Index(i) => i.to_string(),
                    // 17 significant digits round-trip every double.
                    Cell::Value(v) => format!("{v:.16e}"),
                    Cell::Missing => String::new(),
                })
                .collect();
            s.push_str(&cells.join(","));
            s.push('\n');
        }
        s
    }

    /// Line plot of every column against the first.
    pub fn to_svg(&self, title: &str) -> String {
        const W: f64 = 640.0;
        const H: f64 = 420.0;
        const PAD: f64 = 56.0;
        const COLORS: [&str; 6] = ["#000000", "#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e"];

        let points: Vec<Vec<(f64, f64)>> = (1..self.columns.len())
            .map(|j| self.rows.iter().filter_map(|r| Some((r[0].as_f64()?, r[j].as_f64()?))).collect())
            .collect();
        let all = points.iter().flatten();
        let (mut x0, mut x1, mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
        for (x, y) in all {
            x0 = x0.min(*x);
            x1 = x1.max(*x);
            y0 = y0.min(*y);
            y1 = y1.max(*y);
        }
        if !x0.is_finite() {
            (x0, x1, y0, y1) = (0.0, 1.0, 0.0, 1.0);
        }
        if x1 == x0 {
            x1 = x0 + 1.0;
        }
        if y1 == y0 {
            y0 -= 0.5;
            y1 += 0.5;
        }
        let sx = |x: f64| PAD + (x - x0) / (x1 - x0) * (W - 2.0 * PAD);
        let sy = |y: f64| H - PAD - (y - y0) / (y1 - y0) * (H - 2.0 * PAD);

        let mut s = String::new();
        let _ =
            writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" viewBox="0 0 {W} {H}">"#);
        let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
        let _ = writeln!(
            s,
            r#"<text x="{}" y="20" font-family="sans-serif" font-size="14" text-anchor="middle">{}</text>"#,
            W / 2.0,
            escape(title)
        );
        let _ = writeln!(
            s,
            r#"<path d="M{PAD},{PAD} L{PAD},{b} L{r},{b}" fill="none" stroke="black"/>"#,
            b = H - PAD,
            r = W - PAD
        );
        if y0 < 0.0 && y1 > 0.0 {
            let _ = writeln!(
                s,
                r##"<line x1="{PAD}" y1="{y}" x2="{r}" y2="{y}" stroke="#999" stroke-dasharray="4 3"/>"##,
                y = sy(0.0),
                r = W - PAD
            );
        }
        for (label, x, y, anchor) in [
            (format!("{x0:.3}"), PAD, H - PAD + 16.0, "start"),
            (format!("{x1:.3}"), W - PAD, H - PAD + 16.0, "end"),
            (format!("{y0:.3}"), PAD - 4.0, H - PAD, "end"),
            (format!("{y1:.3}"), PAD - 4.0, PAD + 4.0, "end"),
        ] {
            let _ = writeln!(
                s,
                r#"<text x="{x}" y="{y}" font-family="sans-serif" font-size="11" text-anchor="{anchor}">{label}</text>"#
            );
        }
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{}" font-family="sans-serif" font-size="12" text-anchor="middle">{}</text>"#,
            W / 2.0,
            H - 12.0,
            escape(&self.columns[0])
        );
        for (j, series) in points.iter().enumerate() {
            let color = COLORS[j % COLORS.len()];
            if !series.is_empty() {
                let mut d = String::new();
                for (k, (x, y)) in series.iter().enumerate() {
                    let _ = write!(d, "{}{:.2},{:.2} ", if k == 0 { "M" } else { "L" }, sx(*x), sy(*y));
                }
                let _ = writeln!(s, r#"<path d="{}" fill="none" stroke="{color}" stroke-width="1.5"/>"#, d.trim_end());
            }
            let ly = PAD + 16.0 * j as f64;
            let _ = writeln!(
                s,
                r#"<line x1="{a}" y1="{ly}" x2="{b}" y2="{ly}" stroke="{color}" stroke-width="2"/>"#,
                a = W - PAD - 90.0,
                b = W - PAD - 70.0
            );
            let _ = writeln!(
                s,
                r#"<text x="{}" y="{}" font-family="sans-serif" font-size="11">{}</text>"#,
                W - PAD - 64.0,
                ly + 4.0,
                escape(&self.columns[j + 1])
            );
        }
        s.push_str("</svg>\n");
        s
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
