//! Exact half-integers stored as doubled `i64`s.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_rational::Rational64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// A value in `½ℤ`, stored as twice its value.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Half(i64);

impl Half {
    pub const ZERO: Half = Half(0);
    pub const ONE: Half = Half(2);
    pub const HALF: Half = Half(1);

    pub const fn from_int(n: i64) -> Self {
        Half(2 * n)
    }

    pub const fn from_doubled(twice: i64) -> Self {
        Half(twice)
    }

    pub const fn doubled(self) -> i64 {
        self.0
    }

    pub const fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    pub fn to_int(self) -> Option<i64> {
        self.is_integer().then_some(self.0 / 2)
    }

    /// Parity class of the lattice this value lives in: `false` for `ℤ`, `true` for `½+ℤ`.
    pub const fn is_half_odd(self) -> bool {
        self.0 % 2 != 0
    }

    pub fn halve(self) -> Rational64 {
        Rational64::new(self.0, 4)
    }

    pub fn to_rational(self) -> Rational64 {
        Rational64::new(self.0, 2)
    }

    /// Exact conversion from a rational with denominator dividing 2.
    pub fn from_rational(r: Rational64) -> Option<Self> {
        let twice = r * Rational64::from_integer(2);
        twice.is_integer().then(|| Half(twice.to_integer()))
    }

    pub fn abs(self) -> Self {
        Half(self.0.abs())
    }

    pub fn signum(self) -> i64 {
        self.0.signum()
    }
}

impl fmt::Display for Half {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl fmt::Debug for Half {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Half {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || Error::Parse {
            field: "half-integer".into(),
            message: format!("expected \"p\" or \"p/2\", got {s:?}"),
        };
        match s.split_once('/') {
            None => s.parse::<i64>().map(Half::from_int).map_err(|_| bad()),
            Some((num, den)) => {
                let num: i64 = num.trim().parse().map_err(|_| bad())?;
                match den.trim() {
                    "1" => Ok(Half::from_int(num)),
                    "2" => Ok(Half(num)),
                    _ => Err(bad()),
                }
            }
        }
    }
}

impl Serialize for Half {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Half {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl PartialOrd for Half {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Half {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }
}

impl Add for Half {
    type Output = Half;
    fn add(self, rhs: Half) -> Half {
        Half(self.0 + rhs.0)
    }
}

impl Sub for Half {
    type Output = Half;
    fn sub(self, rhs: Half) -> Half {
        Half(self.0 - rhs.0)
    }
}

impl Neg for Half {
    type Output = Half;
    fn neg(self) -> Half {
        Half(-self.0)
    }
}

impl AddAssign for Half {
    fn add_assign(&mut self, rhs: Half) {
        self.0 += rhs.0;
    }
}

impl SubAssign for Half {
    fn sub_assign(&mut self, rhs: Half) {
        self.0 -= rhs.0;
    }
}

impl Add<i64> for Half {
    type Output = Half;
    fn add(self, rhs: i64) -> Half {
        Half(self.0 + 2 * rhs)
    }
}

impl Sub<i64> for Half {
    type Output = Half;
    fn sub(self, rhs: i64) -> Half {
        Half(self.0 - 2 * rhs)
    }
}

impl Mul<i64> for Half {
    type Output = Half;
    fn mul(self, rhs: i64) -> Half {
        Half(self.0 * rhs)
    }
}

impl From<i64> for Half {
    fn from(n: i64) -> Self {
        Half::from_int(n)
    }
}

/// Serde helper for `Rational64` rendered as `"p/q"` strings.
pub(crate) mod rational_str {
    use num_rational::Rational64;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn render(r: &Rational64) -> String {
        if r.is_integer() {
            r.to_integer().to_string()
        } else {
            format!("{}/{}", r.numer(), r.denom())
        }
    }

    pub fn parse(s: &str) -> Option<Rational64> {
        let s = s.trim();
        match s.split_once('/') {
            None => s.parse().ok().map(Rational64::from_integer),
            Some((n, d)) => {
                let n: i64 = n.trim().parse().ok()?;
                let d: i64 = d.trim().parse().ok()?;
                (d != 0).then(|| Rational64::new(n, d))
            }
        }
    }

    pub fn serialize<S: Serializer>(v: &[Rational64], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(render))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational64>, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        raw.iter()
            .map(|s| {
                parse(s).ok_or_else(|| serde::de::Error::custom(format!("bad rational {s:?}")))
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_render() {
        assert_eq!("3".parse::<Half>().unwrap(), Half::from_int(3));
        assert_eq!("5/2".parse::<Half>().unwrap(), Half::from_doubled(5));
        assert_eq!("-1/2".parse::<Half>().unwrap(), Half::from_doubled(-1));
        assert_eq!(Half::from_doubled(-7).to_string(), "-7/2");
        assert_eq!(Half::from_int(-4).to_string(), "-4");
        assert!("1/3".parse::<Half>().is_err());
        assert!("x".parse::<Half>().is_err());
    }

    #[test]
    fn arithmetic() {
        let a = Half::from_doubled(3);
        assert_eq!(a + a, Half::from_int(3));
        assert_eq!(a - 2, Half::from_doubled(-1));
        assert_eq!(-a, Half::from_doubled(-3));
        assert_eq!(a * 2, Half::from_int(3));
        assert_eq!(a.halve(), Rational64::new(3, 4));
    }
}
