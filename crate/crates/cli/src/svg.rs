//! Minimal SVG figures in world coordinates (y up).

use inaccess::Point2;
use xmlwriter::{Options, XmlWriter};

use crate::format::sig9;

/// Output width in pixels; the height follows the aspect ratio.
const WIDTH_PX: f64 = 800.0;

pub struct Svg {
    w: XmlWriter,
    scale: f64,
}

impl Svg {
    /// Starts a document whose viewBox is `[lo, hi]` grown by 5% on each axis.
    pub fn new(lo: Point2, hi: Point2, title: &str) -> Self {
        let span = hi - lo;
        let mx = 0.05 * span.x.max(1e-12);
        let my = 0.05 * span.y.max(1e-12);
        let (vw, vh) = (span.x + 2.0 * mx, span.y + 2.0 * my);
        let mut w = XmlWriter::new(Options::default());
        w.write_declaration();
        w.start_element("svg");
        w.write_attribute("xmlns", "http://www.w3.org/2000/svg");
        w.write_attribute("version", "1.1");
        w.write_attribute("width", &sig9(WIDTH_PX));
        w.write_attribute("height", &sig9((WIDTH_PX * vh / vw).round()));
        w.write_attribute(
            "viewBox",
            &format!("{} {} {} {}", sig9(lo.x - mx), sig9(-hi.y - my), sig9(vw), sig9(vh)),
        );
        w.start_element("title");
        w.write_text(title);
        w.end_element();
        Svg { w, scale: vw.max(vh) }
    }

    fn coords(points: &[Point2]) -> String {
        points
            .iter()
            .map(|p| format!("{},{}", sig9(p.x), sig9(-p.y)))
            .collect::<Vec<_>>()
            .join(" ")
    }

    fn stroke(&mut self, color: &str, dashed: bool) {
        self.w.write_attribute("fill", "none");
        self.w.write_attribute("stroke", color);
        self.w.write_attribute("stroke-width", "1.5");
        self.w.write_attribute("vector-effect", "non-scaling-stroke");
        if dashed {
            self.w.write_attribute("stroke-dasharray", "4 3");
        }
    }

    /// Closed outline of a domain.
    pub fn domain(&mut self, boundary: &[Point2]) {
        self.w.start_element("polygon");
        self.w.write_attribute("class", "domain");
        self.w.write_attribute("points", &Self::coords(boundary));
        self.w.write_attribute("fill", "#f4f4f4");
        self.w.write_attribute("stroke", "black");
        self.w.write_attribute("stroke-width", "1");
        self.w.write_attribute("vector-effect", "non-scaling-stroke");
        self.w.end_element();
    }

    /// A sampled contour, closed back to its first point.
    pub fn contour(&mut self, points: &[Point2], color: &str, label: &str) {
        let mut closed = points.to_vec();
        if let Some(&first) = points.first() {
            closed.push(first);
        }
        self.w.start_element("polyline");
        self.w.write_attribute("class", "contour");
        self.w.write_attribute("data-label", label);
        self.w.write_attribute("points", &Self::coords(&closed));
        self.stroke(color, false);
        self.w.end_element();
    }

    /// One open curve through `points` as a single path.
    pub fn arc(&mut self, points: &[Point2], color: &str, label: &str, dashed: bool) {
        if points.is_empty() {
            return;
        }
        let d: Vec<String> = points
            .iter()
            .enumerate()
            .map(|(k, p)| format!("{}{},{}", if k == 0 { "M" } else { "L" }, sig9(p.x), sig9(-p.y)))
            .collect();
        self.w.start_element("path");
        self.w.write_attribute("class", "arc");
        self.w.write_attribute("data-label", label);
        self.w.write_attribute("d", &d.join(" "));
        self.stroke(color, dashed);
        self.w.end_element();
    }

    pub fn dot(&mut self, at: Point2, color: &str) {
        self.w.start_element("circle");
        self.w.write_attribute("cx", &sig9(at.x));
        self.w.write_attribute("cy", &sig9(-at.y));
        self.w.write_attribute("r", &sig9(0.006 * self.scale));
        self.w.write_attribute("fill", color);
        self.w.end_element();
    }

    pub fn text(&mut self, at: Point2, text: &str) {
        self.w.start_element("text");
        self.w.write_attribute("x", &sig9(at.x));
        self.w.write_attribute("y", &sig9(-at.y));
        self.w.write_attribute("font-size", &sig9(0.03 * self.scale));
        self.w.write_attribute("font-family", "sans-serif");
        self.w.write_text(text);
        self.w.end_element();
    }

    pub fn finish(self) -> String {
        let mut s = self.w.end_document();
        s.push('\n');
        s
    }
}
