//! Deterministic number and file formatting.
//!
//! Every number in CSV and JSON output is rendered with 15 significant
//! digits (printf %.15g semantics), so identical invocations produce
//! byte-identical files.

use std::io;

/// %.15g: shortest of fixed/scientific at 15 significant digits, with
/// trailing zeros trimmed.
pub fn fmt_g15(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let sci = format!("{:.14e}", x); // d.dddddddddddddde[-]dd
    let (mantissa, exp_str) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp_str.parse().expect("exponent");
    if exp < -4 || exp >= 15 {
        let m = trim_trailing_zeros(mantissa);
        if exp < 0 {
            format!("{m}e-{:02}", -exp)
        } else {
            format!("{m}e+{exp:02}")
        }
    } else {
        let prec = (14 - exp).max(0) as usize;
        let fixed = format!("{x:.prec$}");
        trim_trailing_zeros(&fixed).to_string()
    }
}

fn trim_trailing_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// serde_json formatter that renders every f64 with [`fmt_g15`].
pub struct G15Formatter;

impl serde_json::ser::Formatter for G15Formatter {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        if value.is_finite() {
            writer.write_all(fmt_g15(value).as_bytes())
        } else {
            writer.write_all(b"null")
        }
    }
}

/// Serializes a value to a JSON string with 15-significant-digit floats
/// and a trailing newline.
pub fn to_json_g15<T: serde::Serialize>(value: &T) -> String {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, G15Formatter);
    value.serialize(&mut ser).expect("serialization cannot fail");
    buf.push(b'\n');
    String::from_utf8(buf).expect("JSON is UTF-8")
}
