//! Fixed-precision number formatting for reports.

/// Rounds to 12 significant digits.
pub fn round12(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

/// Decimal rendering with 12 significant digits, trailing zeros kept so
/// columns line up. Magnitudes below `1e-4` use exponent notation.
pub fn sig12(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return "0.00000000000".to_string();
    }
    if x.abs() < 1e-4 {
        return format!("{x:.11e}");
    }
    let exp = x.abs().log10().floor() as i32;
    // rounding can carry into the next decade
    let x = round12(x);
    let exp = exp.max(x.abs().log10().floor() as i32);
    let decimals = (11 - exp).max(0) as usize;
    format!("{x:.decimals$}")
}

/// Rounds every floating-point number inside a JSON value with [`round12`].
/// Integers are left alone.
pub fn round_json(v: serde_json::Value) -> serde_json::Value {
    use serde_json::Value;
    match v {
        Value::Number(n) if n.is_f64() => {
            let x = round12(n.as_f64().unwrap_or_default());
            serde_json::Number::from_f64(x)
                .map(Value::Number)
                .unwrap_or(Value::Null)
        }
        Value::Array(a) => Value::Array(a.into_iter().map(round_json).collect()),
        Value::Object(o) => Value::Object(o.into_iter().map(|(k, v)| (k, round_json(v))).collect()),
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_digits() {
        assert_eq!(sig12(0.2107560406), "0.210756040600");
        assert_eq!(sig12(1.0), "1.00000000000");
        assert_eq!(sig12(-0.5), "-0.500000000000");
        assert_eq!(sig12(0.0), "0.00000000000");
        assert_eq!(sig12(0.999_999_999_999_9), "1.00000000000");
        assert_eq!(sig12(1234.5), "1234.50000000");
        assert_eq!(sig12(7.29e-13), "7.29000000000e-13");
    }

    #[test]
    fn rounding() {
        assert_eq!(round12(0.123_456_789_012_34), 0.123_456_789_012);
    }

    #[test]
    fn json_rounding_keeps_integers() {
        let v = serde_json::json!({"a": 0.123_456_789_012_34, "n": 7, "l": [1.000_000_000_000_2]});
        let r = round_json(v);
        assert_eq!(r["a"], 0.123_456_789_012);
        assert_eq!(r["n"], 7);
        assert_eq!(r["l"][0], 1.0);
    }
}
