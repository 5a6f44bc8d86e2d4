//! Number formatting shared by every CSV the harness writes.

use std::io::Write;

use crate::error::Result;

/// Missing value marker.
pub const NA: &str = "NA";

/// Decimal scientific notation with 12 significant digits; `NA` for NaN.
pub fn fmt_num(value: f64) -> String {
    if value.is_nan() {
        NA.to_string()
    } else {
        format!("{value:.11e}")
    }
}

/// `value` rounded to the 12 significant digits it is written with.
pub fn round_sig(value: f64) -> f64 {
    if value.is_finite() {
        fmt_num(value).parse().expect("formatted float parses")
    } else {
        value
    }
}

pub(crate) fn write_row(out: &mut dyn Write, fields: &[f64]) -> Result<()> {
    let line: Vec<String> = fields.iter().map(|&v| fmt_num(v)).collect();
    writeln!(out, "{}", line.join(","))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(fmt_num(3.987_761_167_674_492), "3.98776116767e0");
        assert_eq!(fmt_num(-1.5e-7), "-1.50000000000e-7");
        assert_eq!(fmt_num(f64::NAN), "NA");
        assert_eq!(round_sig(0.123_456_789_012_345), 0.123_456_789_012);
    }
}
