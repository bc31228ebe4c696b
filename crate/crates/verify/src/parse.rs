//! Parsing of complex literals `re`, `imi` and `re±imi`, and of lists.

use humbert_core::C64;

/// Parses `"2.5"`, `"-1e-3"`, `"0.7+0.3i"`, `"1-2i"`, `"3i"` or `"-i"`.
pub fn parse_complex(s: &str) -> Result<C64, String> {
    let t = s.trim();
    let bad = || format!("malformed complex literal '{s}'");
    if t.is_empty() {
        return Err(bad());
    }
    let Some(body) = t.strip_suffix('i') else {
        return t.parse::<f64>().map(|re| C64::new(re, 0.0)).map_err(|_| bad());
    };
    // split at the last sign that is not part of an exponent
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => "1",
        "-" => "-1",
        other => other,
    };
    let re = re.parse::<f64>().map_err(|_| bad())?;
    let im = im.parse::<f64>().map_err(|_| bad())?;
    Ok(C64::new(re, im))
}

/// Parses a comma-separated list of complex literals; empty input gives
/// an empty list.
pub fn parse_complex_list(s: &str) -> Result<Vec<C64>, String> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse_complex).collect()
}

/// Parses a comma-separated list of reals.
pub fn parse_real_list(s: &str) -> Result<Vec<f64>, String> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| t.trim().parse::<f64>().map_err(|_| format!("malformed number '{t}'")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literals() {
        assert_eq!(parse_complex("2.5"), Ok(C64::new(2.5, 0.0)));
        assert_eq!(parse_complex("0.7+0.3i"), Ok(C64::new(0.7, 0.3)));
        assert_eq!(parse_complex("1-2i"), Ok(C64::new(1.0, -2.0)));
        assert_eq!(parse_complex("-1e-3+2e+1i"), Ok(C64::new(-1e-3, 20.0)));
        assert_eq!(parse_complex("3i"), Ok(C64::new(0.0, 3.0)));
        assert_eq!(parse_complex("-i"), Ok(C64::new(0.0, -1.0)));
        assert_eq!(parse_complex("-3"), Ok(C64::new(-3.0, 0.0)));
        assert!(parse_complex("1+2j").is_err());
        assert!(parse_complex("").is_err());
        assert!(parse_complex("abc").is_err());
    }

    #[test]
    fn lists() {
        assert_eq!(parse_complex_list("1,1").unwrap().len(), 2);
        assert!(parse_complex_list("").unwrap().is_empty());
        assert_eq!(parse_real_list("25, 50,100").unwrap(), vec![25.0, 50.0, 100.0]);
        assert!(parse_real_list("1,,2").is_err());
    }
}
