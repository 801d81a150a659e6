//! Numbers with optional unit suffixes, e.g. `"2.0 ge"` or `"400 nm"`.
//!
//! A bare number is taken in SI units of whatever the field measures.

use std::fmt;
use std::str::FromStr;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Unit {
    /// rad/s
    RadS,
    /// Multiples of the excited-state decay rate gamma_e.
    Ge,
    M,
    Um,
    Nm,
    /// Multiples of the lattice period.
    Lat,
    PerM,
    Kg,
    /// Cross section, m^2.
    M2,
    /// Number density, 1/m^3.
    PerM3,
}

impl Unit {
    pub const ALL: [Unit; 10] = [
        Unit::RadS,
        Unit::Ge,
        Unit::M,
        Unit::Um,
        Unit::Nm,
        Unit::Lat,
        Unit::PerM,
        Unit::Kg,
        Unit::M2,
        Unit::PerM3,
    ];

    pub fn suffix(self) -> &'static str {
        match self {
            Unit::RadS => "rad_s",
            Unit::Ge => "ge",
            Unit::M => "m",
            Unit::Um => "um",
            Unit::Nm => "nm",
            Unit::Lat => "lat",
            Unit::PerM => "per_m",
            Unit::Kg => "kg",
            Unit::M2 => "m2",
            Unit::PerM3 => "per_m3",
        }
    }
}

impl FromStr for Unit {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Unit::ALL
            .into_iter()
            .find(|u| u.suffix() == s)
            .ok_or_else(|| format!("unknown unit suffix '{s}'"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quantity {
    pub value: f64,
    pub unit: Option<Unit>,
}

impl Quantity {
    pub fn si(value: f64) -> Self {
        Self { value, unit: None }
    }

    pub fn new(value: f64, unit: Unit) -> Self {
        Self {
            value,
            unit: Some(unit),
        }
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.unit {
            Some(u) => write!(f, "{} {}", self.value, u.suffix()),
            None => write!(f, "{}", self.value),
        }
    }
}

impl FromStr for Quantity {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parts = s.split_whitespace();
        let number = parts.next().ok_or("empty quantity")?;
        let value: f64 = number
            .parse()
            .map_err(|_| format!("'{number}' is not a number"))?;
        if !value.is_finite() {
            return Err(format!("'{number}' is not finite"));
        }
        let unit = parts.next().map(str::parse).transpose()?;
        if parts.next().is_some() {
            return Err(format!("expected '<number> [unit]', got '{s}'"));
        }
        Ok(Self { value, unit })
    }
}

impl Serialize for Quantity {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self.unit {
            Some(_) => serializer.collect_str(self),
            None => serializer.serialize_f64(self.value),
        }
    }
}

impl<'de> Deserialize<'de> for Quantity {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct QuantityVisitor;

        impl Visitor<'_> for QuantityVisitor {
            type Value = Quantity;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a number or a string like \"2.0 ge\"")
            }

            fn visit_f64<E: de::Error>(self, v: f64) -> Result<Quantity, E> {
                if v.is_finite() {
                    Ok(Quantity::si(v))
                } else {
                    Err(E::custom("quantity must be finite"))
                }
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Quantity, E> {
                Ok(Quantity::si(v as f64))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Quantity, E> {
                Ok(Quantity::si(v as f64))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Quantity, E> {
                v.parse().map_err(E::custom)
            }
        }

        deserializer.deserialize_any(QuantityVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_suffixes() {
        assert_eq!("2.0 ge".parse::<Quantity>().unwrap(), Quantity::new(2.0, Unit::Ge));
        assert_eq!("400 nm".parse::<Quantity>().unwrap(), Quantity::new(400.0, Unit::Nm));
        assert_eq!("1e7".parse::<Quantity>().unwrap(), Quantity::si(1e7));
        assert_eq!(" 0.1   lat ".parse::<Quantity>().unwrap(), Quantity::new(0.1, Unit::Lat));
    }

    #[test]
    fn rejects_garbage() {
        assert!("".parse::<Quantity>().is_err());
        assert!("ge".parse::<Quantity>().is_err());
        assert!("2 parsec".parse::<Quantity>().is_err());
        assert!("2 ge extra".parse::<Quantity>().is_err());
        assert!("inf".parse::<Quantity>().is_err());
        assert!("2ge".parse::<Quantity>().is_err());
    }

    #[test]
    fn display_round_trips() {
        for u in Unit::ALL {
            let q = Quantity::new(-1.234_567_890_123e-7, u);
            assert_eq!(q.to_string().parse::<Quantity>().unwrap(), q);
        }
    }
}
