//! Number formatting and CSV contour I/O.

use std::io::{Read, Write};

use inaccess::Point2;

/// Nine significant digits, trailing zeros dropped; scientific outside `[1e-5, 1e9)`.
pub fn sig9(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{x:.8e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent marker");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..9).contains(&exp) {
        let decimals = (8 - exp).max(0) as usize;
        trim_zeros(&format!("{x:.decimals$}")).to_string()
    } else {
        format!("{}e{exp}", trim_zeros(mantissa))
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

pub fn point9(p: Point2) -> String {
    format!("({}, {})", sig9(p.x), sig9(p.y))
}

/// One CSV row of a contour.
#[derive(Clone, Debug, PartialEq)]
pub struct ContourRow {
    pub point: Point2,
    pub theta: f64,
    pub label: String,
}

/// Writes `x,y,theta,label` with shortest round-trip decimals and LF line ends.
///
/// `Debug` formatting of `f64` is the shortest string that parses back to the same bits.
pub fn write_contour_csv(out: impl Write, rows: &[ContourRow]) -> csv::Result<()> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
    w.write_record(["x", "y", "theta", "label"])?;
    for row in rows {
        w.write_record([
            format!("{:?}", row.point.x),
            format!("{:?}", row.point.y),
            format!("{:?}", row.theta),
            row.label.clone(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_contour_csv(input: impl Read) -> csv::Result<Vec<ContourRow>> {
    let mut r = csv::ReaderBuilder::new().from_reader(input);
    let mut rows = Vec::new();
    for record in r.records() {
        let record = record?;
        let num = |k: usize| -> csv::Result<f64> {
            let field = record.get(k).unwrap_or_default();
            field.parse().map_err(|_| {
                csv::Error::from(std::io::Error::new(
                    std::io::ErrorKind::InvalidData,
                    format!("line {}: column {k} is not a number: {field:?}", record.position().map_or(0, |p| p.line())),
                ))
            })
        };
        rows.push(ContourRow {
            point: Point2::new(num(0)?, num(1)?),
            theta: num(2)?,
            label: record.get(3).unwrap_or_default().to_string(),
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nine_digits() {
        assert_eq!(sig9(0.769_800_358_919_501_2), "0.769800359");
        assert_eq!(sig9(2.0), "2");
        assert_eq!(sig9(-0.5), "-0.5");
        assert_eq!(sig9(1.0 / 3.0), "0.333333333");
        assert_eq!(sig9(123_456_789_012.0), "1.23456789e11");
        assert_eq!(sig9(1.5e-7), "1.5e-7");
        assert_eq!(sig9(9.999_999_999_9), "10");
        assert_eq!(point9(Point2::new(0.0, 3f64.sqrt() / 2.0)), "(0, 0.866025404)");
    }

    #[test]
    fn csv_round_trip_is_exact() {
        let rows: Vec<ContourRow> = (0..50)
            .map(|k| ContourRow {
                point: Point2::new((k as f64).sin() * 1e-7, (k as f64 * 0.37).exp()),
                theta: k as f64 * 0.1,
                label: format!("bow:{k}-{}", k + 1),
            })
            .collect();
        let mut buf = Vec::new();
        write_contour_csv(&mut buf, &rows).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("x,y,theta,label\n"));
        assert!(!text.contains('\r'));
        let back = read_contour_csv(buf.as_slice()).unwrap();
        for (a, b) in rows.iter().zip(&back) {
            assert_eq!(a.point.x.to_bits(), b.point.x.to_bits());
            assert_eq!(a.point.y.to_bits(), b.point.y.to_bits());
            assert_eq!(a.label, b.label);
        }
    }
}
