//! Deterministic output formatting: every float is printed with twelve
//! significant digits so identical runs produce byte-identical reports.

use std::io;

use serde::Serialize;

/// Formats with exactly twelve significant digits, positional where the
/// exponent is moderate, scientific otherwise.
pub fn fmt_f64(v: f64) -> String {
    if !v.is_finite() {
        return "null".to_string();
    }
    if v == 0.0 {
        return "0.0".to_string();
    }
    let exp = v.abs().log10().floor() as i32;
    if (-5..12).contains(&exp) {
        format!("{:.*}", (11 - exp).max(0) as usize, v)
    } else {
        format!("{:.11e}", v)
    }
}

struct TwelveDigitFormatter;

impl serde_json::ser::Formatter for TwelveDigitFormatter {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        writer.write_all(fmt_f64(value).as_bytes())
    }
}

/// Compact JSON with the twelve-digit float convention.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, TwelveDigitFormatter);
    value.serialize(&mut ser).expect("serialization cannot fail for report types");
    String::from_utf8(out).expect("JSON is UTF-8")
}
