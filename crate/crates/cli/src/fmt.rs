//! Numeric formatting for emitted files: %.15g-style, 15 significant
//! digits, plain decimal inside a sane exponent window, trailing zeros
//! trimmed. Deterministic, so identical configs emit byte-identical files.

pub const SIG_DIGITS: usize = 15;

pub fn fmt_g15(v: f64) -> String {
    fmt_g(v, SIG_DIGITS)
}

pub fn fmt_g(v: f64, sig: usize) -> String {
    assert!(sig >= 1);
    if v == 0.0 {
        return "0".to_string();
    }
    if !v.is_finite() {
        return v.to_string();
    }
    let formatted = format!("{:.*e}", sig - 1, v);
    let (mant, exp_str) = formatted.split_once('e').expect("exponential format");
    let exp: i32 = exp_str.parse().expect("exponent");
    let neg = mant.starts_with('-');
    let digits: String = mant.chars().filter(|c| c.is_ascii_digit()).collect();
    let body = if exp >= -4 && exp < sig as i32 {
        decimal_from_digits(&digits, exp)
    } else {
        let trimmed = trim_fraction(&insert_point(&digits, 1));
        format!("{trimmed}e{exp}")
    };
    if neg {
        format!("-{body}")
    } else {
        body
    }
}

/// Round-trips a value through the emission format; abs-err columns are
/// computed from these so that every emitted row is self-consistent.
pub fn rounded15(v: f64) -> f64 {
    fmt_g15(v).parse().expect("formatted float must parse")
}

fn insert_point(digits: &str, at: usize) -> String {
    let (a, b) = digits.split_at(at.min(digits.len()));
    if b.is_empty() {
        a.to_string()
    } else {
        format!("{a}.{b}")
    }
}

fn decimal_from_digits(digits: &str, exp: i32) -> String {
    let s = if exp < 0 {
        format!("0.{}{}", "0".repeat((-exp - 1) as usize), digits)
    } else {
        let point = exp as usize + 1;
        if point >= digits.len() {
            return format!("{}{}", digits, "0".repeat(point - digits.len()));
        }
        insert_point(digits, point)
    };
    trim_fraction(&s)
}

fn trim_fraction(s: &str) -> String {
    if !s.contains('.') {
        return s.to_string();
    }
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}
