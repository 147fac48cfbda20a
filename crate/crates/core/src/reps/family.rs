use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    PiF,
    Tau,
    Nu1,
    Nu2,
    Rho,
    Theta,
    Gamma,
    PolCFock,
    PolCOnedim,
    Csu2Xi,
    Csu2Pi,
    /// Built by composing a homomorphism with representations of its target.
    Induced,
}

impl Family {
    pub const POLMAT2: [Family; 7] = [
        Family::PiF,
        Family::Tau,
        Family::Nu1,
        Family::Nu2,
        Family::Rho,
        Family::Theta,
        Family::Gamma,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::PiF => "piF",
            Family::Tau => "tau",
            Family::Nu1 => "nu1",
            Family::Nu2 => "nu2",
            Family::Rho => "rho",
            Family::Theta => "theta",
            Family::Gamma => "gamma",
            Family::PolCFock => "polC-fock",
            Family::PolCOnedim => "polC-onedim",
            Family::Csu2Xi => "csu2-xi",
            Family::Csu2Pi => "csu2-pi",
            Family::Induced => "induced",
        }
    }

    /// Number of `l²(Z+)` tensor slots; `None` where it depends on parameters.
    pub fn slots(self) -> Option<usize> {
        match self {
            Family::PiF => Some(4),
            Family::Tau => Some(3),
            Family::Nu1 | Family::Nu2 => Some(2),
            Family::Rho | Family::Theta | Family::Csu2Pi => Some(1),
            Family::Gamma | Family::PolCOnedim | Family::Csu2Xi => Some(0),
            Family::PolCFock | Family::Induced => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for Family {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// Which composite an `induced-*` family string denotes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum InducedKind {
    /// `(ρ_F∘Π_φ ⊗ π₀ ⊗ π₀)∘D`
    Fock,
    /// `(ρ_{φ₁}∘Π_{φ₂} ⊗ π₀ ⊗ π₀)∘D`
    Chi,
}

/// A family with its parameters, as written on the command line, e.g.
/// `rho:phi1=0.25pi,phi2=1.5pi` or `polC-fock:n=2`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FamilySpec {
    pub family: Family,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub induced: Option<InducedKind>,
    pub phi: f64,
    pub phi1: f64,
    pub phi2: f64,
    /// Number of generators for the `polC` families.
    pub n: usize,
}

impl FamilySpec {
    pub fn new(family: Family) -> Self {
        FamilySpec { family, induced: None, phi: 0.0, phi1: 0.0, phi2: 0.0, n: 1 }
    }

    pub fn phi(mut self, phi: f64) -> Self {
        self.phi = phi;
        self
    }

    pub fn phis(mut self, phi1: f64, phi2: f64) -> Self {
        self.phi1 = phi1;
        self.phi2 = phi2;
        self
    }

    pub fn with_n(mut self, n: usize) -> Self {
        self.n = n;
        self
    }

    pub fn induced_fock(phi: f64) -> Self {
        FamilySpec { induced: Some(InducedKind::Fock), ..Self::new(Family::Induced).phi(phi) }
    }

    pub fn induced_chi(phi1: f64, phi2: f64) -> Self {
        FamilySpec { induced: Some(InducedKind::Chi), ..Self::new(Family::Induced).phis(phi1, phi2) }
    }

    fn uses(&self) -> &'static [&'static str] {
        match (self.family, self.induced) {
            (Family::Tau | Family::Nu1 | Family::Nu2 | Family::Theta, _) => &["phi"],
            (Family::PolCOnedim, _) => &["n", "phi"],
            (Family::Csu2Xi | Family::Csu2Pi, _) => &["phi"],
            (Family::Rho | Family::Gamma, _) => &["phi1", "phi2"],
            (Family::PolCFock, _) => &["n"],
            (Family::Induced, Some(InducedKind::Fock)) => &["phi"],
            (Family::Induced, _) => &["phi1", "phi2"],
            (Family::PiF, _) => &[],
        }
    }

    fn tag(&self) -> &'static str {
        match self.induced {
            Some(InducedKind::Fock) => "induced-fock",
            Some(InducedKind::Chi) => "induced-chi",
            None => self.family.name(),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())?;
        let parts: Vec<String> = self
            .uses()
            .iter()
            .map(|&k| match k {
                "n" => format!("n={}", self.n),
                "phi" => format!("phi={}", self.phi),
                "phi1" => format!("phi1={}", self.phi1),
                _ => format!("phi2={}", self.phi2),
            })
            .collect();
        if !parts.is_empty() {
            write!(f, ":{}", parts.join(","))?;
        }
        Ok(())
    }
}

/// Parses an angle: `1.25`, `pi`, `0.25pi`, `pi/3` or `2pi/3`.
pub fn parse_angle(text: &str) -> Result<f64> {
    let t = text.trim();
    let bad = || Error::InvalidParams(format!("cannot parse angle `{text}`"));
    let (num, den) = match t.split_once('/') {
        Some((a, b)) => (a, Some(b.trim().parse::<f64>().map_err(|_| bad())?)),
        None => (t, None),
    };
    let value = match num.strip_suffix("pi") {
        Some("") => PI,
        Some(m) => m.trim().parse::<f64>().map_err(|_| bad())? * PI,
        None => num.parse::<f64>().map_err(|_| bad())?,
    };
    Ok(match den {
        Some(d) if d != 0.0 => value / d,
        Some(_) => return Err(bad()),
        None => value,
    })
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let (head, args) = match text.split_once(':') {
            Some((h, a)) => (h.trim(), a),
            None => (text.trim(), ""),
        };
        let mut spec = match head {
            "piF" => FamilySpec::new(Family::PiF),
            "tau" => FamilySpec::new(Family::Tau),
            "nu1" => FamilySpec::new(Family::Nu1),
            "nu2" => FamilySpec::new(Family::Nu2),
            "rho" => FamilySpec::new(Family::Rho),
            "theta" => FamilySpec::new(Family::Theta),
            "gamma" => FamilySpec::new(Family::Gamma),
            "polC-fock" => FamilySpec::new(Family::PolCFock),
            "polC-onedim" => FamilySpec::new(Family::PolCOnedim),
            "csu2-xi" => FamilySpec::new(Family::Csu2Xi),
            "csu2-pi" => FamilySpec::new(Family::Csu2Pi),
            "induced-fock" => FamilySpec::induced_fock(0.0),
            "induced-chi" => FamilySpec::induced_chi(0.0, 0.0),
            other => return Err(Error::UnknownFamily(other.to_string())),
        };
        for kv in args.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (k, v) = kv
                .split_once('=')
                .ok_or_else(|| Error::InvalidParams(format!("expected key=value, got `{kv}`")))?;
            let k = k.trim();
            if !spec.uses().contains(&k) {
                return Err(Error::InvalidParams(format!("`{head}` takes no parameter `{k}`")));
            }
            match k {
                "n" => {
                    spec.n = v
                        .trim()
                        .parse()
                        .ok()
                        .filter(|&n| n >= 1)
                        .ok_or_else(|| Error::InvalidParams(format!("bad n `{v}`")))?
                }
                "phi" => spec.phi = parse_angle(v)?,
                "phi1" => spec.phi1 = parse_angle(v)?,
                _ => spec.phi2 = parse_angle(v)?,
            }
        }
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn angles() {
        assert!((parse_angle("0.25pi").unwrap() - PI / 4.0).abs() < 1e-15);
        assert!((parse_angle("pi/3").unwrap() - PI / 3.0).abs() < 1e-15);
        assert!((parse_angle("2pi/3").unwrap() - 2.0 * PI / 3.0).abs() < 1e-15);
        assert_eq!(parse_angle("1.5").unwrap(), 1.5);
        assert!(parse_angle("x").is_err());
    }

    #[test]
    fn family_strings() {
        let s: FamilySpec = "rho:phi1=0.25pi,phi2=1.5pi".parse().unwrap();
        assert_eq!(s.family, Family::Rho);
        assert!((s.phi2 - 1.5 * PI).abs() < 1e-15);
        let s: FamilySpec = "polC-fock:n=3".parse().unwrap();
        assert_eq!(s.n, 3);
        assert!(matches!("rho:phi=1".parse::<FamilySpec>(), Err(Error::InvalidParams(_))));
        assert!(matches!("sigma".parse::<FamilySpec>(), Err(Error::UnknownFamily(_))));
        let back: FamilySpec = s.to_string().parse().unwrap();
        assert_eq!(back, s);
    }
}
