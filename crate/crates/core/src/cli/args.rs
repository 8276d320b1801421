//! Parsing of command-line values.

use std::f64::consts::PI;
use std::fs;

use crate::error::{Error, Result};
use crate::polytope::{Rational, Scenario};

/// A real number or a multiple of π: `0.5`, `pi`, `-pi/4`, `3pi/2`, `2*pi`, `7π/4`.
pub fn parse_angle(text: &str) -> Result<f64> {
    let s: String = text.trim().to_lowercase().replace('π', "pi").replace(' ', "");
    if let Ok(x) = s.parse::<f64>() {
        return Ok(x);
    }
    let bad = || Error::Domain(format!("cannot read `{text}` as an angle"));
    let pos = s.find("pi").ok_or_else(bad)?;
    let (head, tail) = (&s[..pos], &s[pos + 2..]);
    let factor = match head.trim_end_matches('*') {
        "" | "+" => 1.0,
        "-" => -1.0,
        h => h.parse::<f64>().map_err(|_| bad())?,
    };
    let divisor = match tail {
        "" => 1.0,
        t => t.strip_prefix('/').ok_or_else(bad)?.parse::<f64>().map_err(|_| bad())?,
    };
    let x = factor * PI / divisor;
    if x.is_finite() {
        Ok(x)
    } else {
        Err(bad())
    }
}

/// Comma-separated angles.
pub fn parse_angles(text: &str) -> Result<Vec<f64>> {
    text.split(',').map(parse_angle).collect()
}

/// Comma-separated reals.
pub fn parse_reals(text: &str) -> Result<Vec<f64>> {
    text.split(',')
        .map(|s| {
            s.trim()
                .replace('−', "-")
                .parse::<f64>()
                .map_err(|_| Error::Domain(format!("cannot read `{s}` as a number")))
        })
        .collect()
}

/// `3`, `-1/2`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    text.trim()
        .replace('−', "-")
        .parse::<Rational>()
        .map_err(|_| Error::Domain(format!("cannot read `{text}` as a rational")))
}

pub fn parse_rationals(text: &str) -> Result<Vec<Rational>> {
    text.split(',').map(parse_rational).collect()
}

/// Built-in name (`sz`, `chsh`) or path to a scenario document.
pub fn load_scenario(source: &str) -> Result<Scenario> {
    if let Some(s) = Scenario::builtin(source) {
        return Ok(s);
    }
    let text = fs::read_to_string(source)
        .map_err(|e| Error::InvalidScenario(format!("cannot read `{source}`: {e}")))?;
    Scenario::from_json(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn angles() {
        assert_eq!(parse_angle("0.25").unwrap(), 0.25);
        assert_eq!(parse_angle("pi").unwrap(), PI);
        assert_eq!(parse_angle("-pi/4").unwrap(), -PI / 4.0);
        assert_eq!(parse_angle("7π/4").unwrap(), 7.0 * PI / 4.0);
        assert_eq!(parse_angle("2*pi").unwrap(), 2.0 * PI);
        assert!(parse_angle("pie").is_err());
        assert!(parse_angle("pi/0").is_err());
        assert!(parse_angle("x").is_err());
        assert_eq!(parse_angles("0, pi/2").unwrap(), vec![0.0, PI / 2.0]);
    }

    #[test]
    fn numbers() {
        assert_eq!(parse_reals("−1,-1, 1").unwrap(), vec![-1.0, -1.0, 1.0]);
        assert_eq!(parse_rationals("1,-1/2").unwrap()[1], Rational::new((-1).into(), 2.into()));
        assert!(parse_rational("1/x").is_err());
    }

    #[test]
    fn scenarios() {
        assert_eq!(load_scenario("sz").unwrap(), Scenario::suppes_zanotti());
        assert!(matches!(load_scenario("/no/such/file.json"), Err(Error::InvalidScenario(_))));
    }
}
