//! The spectrum report and its JSON form. Integers are decimal strings so
//! that unbounded values survive any JSON reader.

use intcircle::spectra::{self, has_radius, max_radius, rational_spectrum};
use intcircle::{arith, Certificate, IntegerCircle, LatticePoint, PointSet, TorusResidue};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fraction {
    pub num: String,
    pub den: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonPoint {
    pub x: String,
    pub y: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub residue: [String; 2],
    pub point: JsonPoint,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum JsonCertificate {
    Yes { radius: String, center: JsonPoint },
    NoDivisibility { radius: String, a: JsonPoint, b: JsonPoint },
    NoCovering { radius: String, prime: u64, witnesses: Vec<Witness> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub points: usize,
    pub g: String,
    pub tau: String,
    pub max_radius: Fraction,
    pub integer_spectrum: Vec<String>,
    pub rational_spectrum: String,
    pub certificates: Vec<JsonCertificate>,
}

fn json_point(p: &LatticePoint) -> JsonPoint {
    JsonPoint { x: p.x.to_string(), y: p.y.to_string() }
}

fn big(s: &str) -> Result<BigInt, CliError> {
    s.parse().map_err(|_| CliError::Json(format!("not an integer: {s:?}")))
}

fn lattice_point(p: &JsonPoint) -> Result<LatticePoint, CliError> {
    Ok(LatticePoint::new(big(&p.x)?, big(&p.y)?))
}

impl JsonCertificate {
    pub fn from_certificate(radius: &BigInt, cert: &Certificate) -> Self {
        let radius = radius.to_string();
        match cert {
            Certificate::Yes(c) => JsonCertificate::Yes { radius, center: json_point(c.center()) },
            Certificate::NoDivisibility { a, b, .. } => {
                JsonCertificate::NoDivisibility { radius, a: json_point(a), b: json_point(b) }
            }
            Certificate::NoCovering { prime, witnesses } => JsonCertificate::NoCovering {
                radius,
                prime: *prime,
                witnesses: witnesses
                    .iter()
                    .map(|(res, p)| Witness { residue: [res.rx.to_string(), res.ry.to_string()], point: json_point(p) })
                    .collect(),
            },
        }
    }

    pub fn radius(&self) -> Result<BigInt, CliError> {
        match self {
            JsonCertificate::Yes { radius, .. }
            | JsonCertificate::NoDivisibility { radius, .. }
            | JsonCertificate::NoCovering { radius, .. } => big(radius),
        }
    }

    pub fn to_certificate(&self) -> Result<Certificate, CliError> {
        let radius = self.radius()?;
        Ok(match self {
            JsonCertificate::Yes { center, .. } => Certificate::Yes(
                IntegerCircle::new(lattice_point(center)?, radius).map_err(|e| CliError::Json(e.to_string()))?,
            ),
            JsonCertificate::NoDivisibility { a, b, .. } => {
                Certificate::NoDivisibility { a: lattice_point(a)?, b: lattice_point(b)?, r: radius }
            }
            JsonCertificate::NoCovering { prime, witnesses, .. } => Certificate::NoCovering {
                prime: *prime,
                witnesses: witnesses
                    .iter()
                    .map(|w| {
                        let residue =
                            TorusResidue { m: BigInt::from(*prime), rx: big(&w.residue[0])?, ry: big(&w.residue[1])? };
                        Ok((residue, lattice_point(&w.point)?))
                    })
                    .collect::<Result<_, CliError>>()?,
            },
        })
    }
}

impl SpectrumReport {
    /// Builds the report; with `certify`, one certificate per divisor of `g`.
    pub fn build(s: &PointSet, certify: bool) -> Result<Self, CliError> {
        let spectrum = rational_spectrum(s)?;
        let max = max_radius(s)?;
        let integers = spectra::integer_spectrum(s)?;
        let mut certificates = Vec::new();
        if certify {
            for r in arith::divisors(spectrum.g()) {
                let (_, cert) = has_radius(s, &r)?;
                certificates.push(JsonCertificate::from_certificate(&r, &cert));
            }
        }
        Ok(Self {
            points: s.len(),
            g: spectrum.g().to_string(),
            tau: spectrum.tau().to_string(),
            max_radius: Fraction { num: max.num().to_string(), den: max.den().to_string() },
            integer_spectrum: integers.iter().map(|r| r.to_string()).collect(),
            rational_spectrum: spectrum.to_string(),
            certificates,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Json(e.to_string()))
    }

    /// Re-checks every certificate against `s`; returns the radii that fail.
    pub fn verify(&self, s: &PointSet) -> Result<Vec<BigInt>, CliError> {
        let mut failed = Vec::new();
        for c in &self.certificates {
            let r = c.radius()?;
            if !spectra::verify_certificate(s, &r, &c.to_certificate()?) {
                failed.push(r);
            }
        }
        Ok(failed)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let integers = if self.integer_spectrum.is_empty() {
            "{}".to_string()
        } else {
            format!("{{{}}}", self.integer_spectrum.join(", "))
        };
        let max = if self.max_radius.den == "1" {
            self.max_radius.num.clone()
        } else {
            format!("{}/{}", self.max_radius.num, self.max_radius.den)
        };
        out.push_str(&format!("points            = {}\n", self.points));
        out.push_str(&format!("g                 = {}\n", self.g));
        out.push_str(&format!("tau               = {}\n", self.tau));
        out.push_str(&format!("max radius        = {max}\n"));
        out.push_str(&format!("integer spectrum  = {integers}\n"));
        out.push_str(&format!("rational spectrum = {}\n", self.rational_spectrum));
        if !self.certificates.is_empty() {
            out.push_str("certificates:\n");
            for c in &self.certificates {
                let r = c.radius().expect("built from integers");
                let cert = c.to_certificate().expect("built from a certificate");
                out.push_str(&format!("  r = {r}: {cert}\n"));
            }
        }
        out
    }
}
