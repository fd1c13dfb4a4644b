//! Exact scalars: rationals for real-valued cochains and `Phase` for ℝ/ℤ.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{One, Signed, Zero};

/// Exact rational number used for every real-valued cochain.
pub type Q = Rational64;

pub fn q(numer: i64, denom: i64) -> Q {
    Q::new(numer, denom)
}

pub fn qi(n: i64) -> Q {
    Q::from_integer(n)
}

/// Greatest integer not exceeding `x`.
pub fn floor_q(x: &Q) -> i64 {
    x.numer().div_floor(x.denom())
}

/// Representative of `x` modulo 1 in `[0, 1)`.
pub fn frac(x: &Q) -> Q {
    x - qi(floor_q(x))
}

/// Representative of `x` modulo 1 in `[-1/2, 1/2)`.
pub fn centered(x: &Q) -> Q {
    let f = frac(x);
    if f >= q(1, 2) {
        f - Q::one()
    } else {
        f
    }
}

pub fn is_integer(x: &Q) -> bool {
    x.is_integer()
}

/// Integer value of `x`; panics when `x` is not integral.
pub fn to_int(x: &Q) -> i64 {
    assert!(x.is_integer(), "expected an integer, got {x}");
    x.to_integer()
}

pub fn format_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal `{0}`")]
pub struct ParseQError(pub String);

/// Parses `p/q` or `p`.
pub fn parse_q(s: &str) -> Result<Q, ParseQError> {
    let s = s.trim();
    let err = || ParseQError(s.to_string());
    match s.split_once('/') {
        Some((n, d)) => {
            let n: i64 = n.trim().parse().map_err(|_| err())?;
            let d: i64 = d.trim().parse().map_err(|_| err())?;
            if d == 0 {
                return Err(err());
            }
            Ok(Q::new(n, d))
        }
        None => s.parse::<i64>().map(qi).map_err(|_| err()),
    }
}

/// An element of ℝ/ℤ with an exact rational representative in `[0, 1)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Phase(Q);

impl Phase {
    pub fn new(x: Q) -> Self {
        Phase(frac(&x))
    }

    pub fn zero() -> Self {
        Phase(Q::zero())
    }

    /// The canonical lift in `[0, 1)`.
    pub fn lift(&self) -> Q {
        self.0
    }

    /// The lift in `[-1/2, 1/2)`.
    pub fn centered(&self) -> Q {
        centered(&self.0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Distance to zero on the circle, in `[0, 1/2]`.
    pub fn circle_abs(&self) -> Q {
        self.centered().abs()
    }
}

impl fmt::Debug for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Phase({})", format_q(&self.0))
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_q(&self.0))
    }
}

impl FromStr for Phase {
    type Err = ParseQError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_q(s).map(Phase::new)
    }
}

impl std::ops::Add for Phase {
    type Output = Phase;
    fn add(self, rhs: Phase) -> Phase {
        Phase::new(self.0 + rhs.0)
    }
}

impl std::ops::Sub for Phase {
    type Output = Phase;
    fn sub(self, rhs: Phase) -> Phase {
        Phase::new(self.0 - rhs.0)
    }
}

impl std::ops::Neg for Phase {
    type Output = Phase;
    fn neg(self) -> Phase {
        Phase::new(-self.0)
    }
}

impl From<Q> for Phase {
    fn from(x: Q) -> Self {
        Phase::new(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frac_and_centered() {
        assert_eq!(frac(&q(-1, 3)), q(2, 3));
        assert_eq!(frac(&q(7, 3)), q(1, 3));
        assert_eq!(centered(&q(1, 2)), q(-1, 2));
        assert_eq!(centered(&q(-1, 2)), q(-1, 2));
        assert_eq!(centered(&q(3, 4)), q(-1, 4));
        assert_eq!(floor_q(&q(-7, 2)), -4);
    }

    #[test]
    fn phase_arithmetic_wraps() {
        let a: Phase = "3/4".parse().unwrap();
        let b: Phase = "1/2".parse().unwrap();
        assert_eq!((a + b).lift(), q(1, 4));
        assert_eq!((b - a).lift(), q(3, 4));
        assert_eq!((-a).lift(), q(1, 4));
        assert!(Phase::new(qi(5)).is_zero());
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("x").is_err());
        assert_eq!(parse_q(" -3/6 ").unwrap(), q(-1, 2));
        assert_eq!(format_q(&q(4, 2)), "2");
        assert_eq!(format_q(&q(-1, 8)), "-1/8");
    }
}
