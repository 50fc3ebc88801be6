//! Plain-text and SVG renderings of bigraded dimension charts.

use std::fmt::Write;

/// Dimensions on the region `d ≤ min(g, d_max)`, `g ≤ g_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chart {
    pub title: String,
    pub g_max: usize,
    pub d_max: usize,
    dims: Vec<Vec<usize>>,
}

impl Chart {
    pub fn new(title: &str, g_max: usize, d_max: usize) -> Self {
        Chart { title: title.to_string(), g_max, d_max, dims: vec![vec![0; d_max + 1]; g_max + 1] }
    }

    pub fn set(&mut self, g: usize, d: usize, dim: usize) {
        self.dims[g][d] = dim;
    }

    pub fn get(&self, g: usize, d: usize) -> usize {
        self.dims[g][d]
    }

    fn in_region(&self, g: usize, d: usize) -> bool {
        d <= g
    }

    /// Rows are `d` from the top down, columns `g`; `.` is a zero group and
    /// blanks lie outside `d ≤ g`.
    pub fn ascii(&self) -> String {
        let mut s = format!("{}\n", self.title);
        for d in (0..=self.d_max).rev() {
            let _ = write!(s, "{d:>3} |");
            for g in 0..=self.g_max {
                let cell = if !self.in_region(g, d) {
                    String::new()
                } else {
                    match self.dims[g][d] {
                        0 => ".".to_string(),
                        n if n < 10 => n.to_string(),
                        _ => "#".to_string(),
                    }
                };
                let _ = write!(s, "{cell:>3}");
            }
            s = s.trim_end().to_string();
            s.push('\n');
        }
        let _ = writeln!(s, "    +{}", "-".repeat(3 * (self.g_max + 1)));
        let _ = write!(s, "  d/g");
        for g in 0..=self.g_max {
            let _ = write!(s, "{g:>3}");
        }
        s.push('\n');
        s
    }

    /// A static SVG with one dot per basis element.
    pub fn svg(&self) -> String {
        const CELL: usize = 24;
        const MARGIN: usize = 40;
        let (w, h) = (MARGIN * 2 + CELL * (self.g_max + 1), MARGIN * 2 + CELL * (self.d_max + 1));
        let x = |g: usize| MARGIN + CELL * g + CELL / 2;
        let y = |d: usize| h - MARGIN - CELL * d - CELL / 2;
        let mut s = String::new();
        let _ = writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#);
        let _ = writeln!(s, r#"<rect width="{w}" height="{h}" fill="white"/>"#);
        let _ = writeln!(s, r#"<text x="{MARGIN}" y="20" font-family="monospace" font-size="12">{}</text>"#, escape(&self.title));
        for g in 0..=self.g_max {
            let _ = writeln!(
                s,
                r##"<text x="{}" y="{}" font-family="monospace" font-size="10" text-anchor="middle">{g}</text>"##,
                x(g),
                h - MARGIN / 2
            );
        }
        for d in 0..=self.d_max {
            let _ = writeln!(
                s,
                r##"<text x="{}" y="{}" font-family="monospace" font-size="10" text-anchor="end">{d}</text>"##,
                MARGIN - 8,
                y(d) + 4
            );
        }
        for g in 0..=self.g_max {
            for d in 0..=self.d_max.min(g) {
                let n = self.dims[g][d];
                for k in 0..n {
                    let dx = (2 * k as i64 - (n as i64 - 1)) * 5;
                    let _ = writeln!(s, r#"<circle cx="{}" cy="{}" r="4" fill="black"/>"#, x(g) as i64 + dx, y(d));
                }
            }
        }
        s.push_str("</svg>\n");
        s
    }
}

fn escape(t: &str) -> String {
    t.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ascii_layout() {
        let mut c = Chart::new("t", 2, 1);
        c.set(0, 0, 1);
        c.set(2, 1, 12);
        assert_eq!(c.ascii(), "t\n  1 |     .  #\n  0 |  1  .  .\n    +---------\n  d/g  0  1  2\n");
    }

    #[test]
    fn svg_has_one_dot_per_class() {
        let mut c = Chart::new("a<b", 3, 2);
        c.set(3, 2, 2);
        c.set(1, 0, 1);
        let s = c.svg();
        assert_eq!(s.matches("<circle").count(), 3);
        assert!(s.contains("a&lt;b"));
    }
}
