//! Comma-separated text formats shared by paths, rank sequences and multisets.

use crate::error::ParseError;

/// Parses `"2,0,2,-3,1,-2"` into integers. Whitespace around tokens is ignored
/// and the empty string is the empty list.
pub fn parse_int_list(s: &str) -> Result<Vec<i64>, ParseError> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    // Sum of magnitudes must fit so that prefix sums and ranks never overflow.
    let mut magnitude: i64 = 0;
    for raw in s.split(',') {
        let token = raw.trim();
        let value = parse_int(token)?;
        magnitude = value
            .checked_abs()
            .and_then(|v| magnitude.checked_add(v))
            .ok_or_else(|| ParseError::new(token, "values too large (sum of magnitudes overflows)"))?;
        out.push(value);
    }
    Ok(out)
}

pub(crate) fn parse_int(token: &str) -> Result<i64, ParseError> {
    if token.is_empty() {
        return Err(ParseError::new(token, "empty entry"));
    }
    token.parse::<i64>().map_err(|e| ParseError::new(token, e.to_string()))
}

pub fn format_int_list(values: &[i64]) -> String {
    let mut s = String::new();
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        s.push_str(&v.to_string());
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_signed_lists() {
        assert_eq!(parse_int_list("2,0,2,-3,1,-2").unwrap(), vec![2, 0, 2, -3, 1, -2]);
        assert_eq!(parse_int_list(" 1 , -1 ").unwrap(), vec![1, -1]);
        assert_eq!(parse_int_list("").unwrap(), Vec::<i64>::new());
    }

    #[test]
    fn names_the_bad_token() {
        let err = parse_int_list("1,x2,3").unwrap_err();
        assert_eq!(err.token, "x2");
        let err = parse_int_list("1,,3").unwrap_err();
        assert_eq!(err.token, "");
        assert!(parse_int_list("9223372036854775807,1").is_err());
        assert!(parse_int_list("-9223372036854775808").is_err());
    }
}
