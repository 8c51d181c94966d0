//! Deterministic exports of the atlas, the models and the plane data.

use std::fmt::{self, Write as _};
use std::path::Path;
use std::str::FromStr;

use serde::Serialize;
use serde_json::{json, Value};

use crate::atlas::{Atlas, MatrixClass};
use crate::error::{GqError, Result};
use crate::gf2::{Mat3, SymMat3};
use crate::planes::{block_rows, intersection_profile, plane_of_sym};
use crate::projective::{quadric_points, QuadraticForm};
use crate::quadrangle::{build_gq_s, verify_gq_axioms, ISO_TABLE};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum What {
    Atlas,
    Incidence,
    Quadric,
    Planes,
    Isomorphism,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Dot,
    Csv,
}

impl FromStr for What {
    type Err = GqError;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "atlas" => What::Atlas,
            "incidence" => What::Incidence,
            "quadric" => What::Quadric,
            "planes" => What::Planes,
            "isomorphism" => What::Isomorphism,
            _ => return Err(GqError::Parse(format!("unknown export selector {s:?}"))),
        })
    }
}

impl FromStr for Format {
    type Err = GqError;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "json" => Format::Json,
            "dot" => Format::Dot,
            "csv" => Format::Csv,
            _ => return Err(GqError::Parse(format!("unknown export format {s:?}"))),
        })
    }
}

impl fmt::Display for What {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            What::Atlas => "atlas",
            What::Incidence => "incidence",
            What::Quadric => "quadric",
            What::Planes => "planes",
            What::Isomorphism => "isomorphism",
        })
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Json => "json",
            Format::Dot => "dot",
            Format::Csv => "csv",
        })
    }
}

/// Parses `q0`, `q` or `qM:<label>` (label of a point of S, or its six bits).
pub fn parse_form(s: &str) -> Result<QuadraticForm> {
    match s {
        "q0" => Ok(QuadraticForm::Q0),
        "q" => Ok(QuadraticForm::Q),
        _ => {
            let m = s.strip_prefix("qM:").ok_or_else(|| GqError::Parse(format!("unknown form {s:?}")))?;
            let atlas = Atlas::global();
            let x = match atlas.by_label(m) {
                Some(x) => x,
                None => m.parse::<SymMat3>()?,
            };
            match atlas.label_of(x) {
                Some(l) if l.class != MatrixClass::Identity => Ok(QuadraticForm::QM(x)),
                _ => Err(GqError::NotInS(x.to_string(), x.det().as_u8())),
            }
        }
    }
}

/// Renders an export. `form` only applies to `What::Quadric` and defaults to `q`.
pub fn render(what: What, format: Format, form: Option<QuadraticForm>) -> Result<String> {
    let unsupported = || GqError::UnsupportedFormat { what: what.to_string(), format: format.to_string() };
    match (what, format) {
        (What::Atlas, Format::Json) => Ok(pretty(&Atlas::global().records())),
        (What::Atlas, Format::Csv) => Ok(atlas_csv()),
        (What::Incidence, Format::Json) => Ok(incidence_json()),
        (What::Incidence, Format::Dot) => Ok(incidence_dot()),
        (What::Quadric, Format::Json) => Ok(quadric_json(form.unwrap_or(QuadraticForm::Q))),
        (What::Planes, Format::Json) => Ok(planes_json()),
        (What::Planes, Format::Csv) => Ok(planes_csv()),
        (What::Isomorphism, Format::Json) => Ok(isomorphism_json()),
        _ => Err(unsupported()),
    }
}

pub fn write_export(what: What, format: Format, form: Option<QuadraticForm>, out: &Path) -> Result<()> {
    let text = render(what, format, form)?;
    std::fs::write(out, text).map_err(|e| GqError::Io { path: out.display().to_string(), message: e.to_string() })
}

fn pretty<T: Serialize + ?Sized>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("export serializes");
    s.push('\n');
    s
}

fn atlas_csv() -> String {
    let mut out = String::from("label,bits,class,eigenspace_dim,involution\n");
    for r in Atlas::global().records() {
        writeln!(out, "{},{},{},{},{}", r.label, r.bits, r.class, r.eigenspace_dim, r.involution).unwrap();
    }
    out
}

fn incidence_json() -> String {
    let gq = build_gq_s();
    let order = verify_gq_axioms(&gq).expect("GQ(S) is a generalized quadrangle");
    let lines: Vec<Vec<&str>> = gq.lines.iter().map(|l| gq.line_labels(l)).collect();
    pretty(&json!({ "points": gq.points, "lines": lines, "order": { "s": order.s, "t": order.t } }))
}

fn incidence_dot() -> String {
    let gq = build_gq_s();
    let atlas = Atlas::global();
    let coll = gq.collinearity();
    let mut out = String::from("graph collinearity {\n");
    for p in &gq.points {
        let class = atlas.label_of(atlas.by_label(p).unwrap()).unwrap().class;
        writeln!(out, "  {p} [class={class}];").unwrap();
    }
    for (i, row) in coll.iter().enumerate() {
        for j in (i + 1..gq.point_count()).filter(|&j| row[j]) {
            writeln!(out, "  {} -- {};", gq.points[i], gq.points[j]).unwrap();
        }
    }
    out.push_str("}\n");
    out
}

fn quadric_json(form: QuadraticForm) -> String {
    let atlas = Atlas::global();
    let qd = quadric_points(form);
    let points: Vec<String> = qd.points.iter().map(|p| p.to_string()).collect();
    let lines: Vec<Vec<String>> = qd.lines().iter().map(|l| l.iter().map(|p| p.to_string()).collect()).collect();
    pretty(&json!({ "form": form.tag(|m| atlas.name(m)), "points": points, "lines_contained": lines }))
}

fn planes_json() -> String {
    let atlas = Atlas::global();
    let records: Vec<Value> = atlas
        .s()
        .into_iter()
        .map(|x| {
            let p = plane_of_sym(x);
            let rows: Vec<String> = block_rows(x.to_mat3(), Mat3::IDENTITY).iter().map(|r| r.to_string()).collect();
            let echelon: Vec<String> = p.echelon().iter().map(|r| r.to_string()).collect();
            json!({ "label": atlas.name(x), "matrix_rows": rows, "echelon": echelon, "class": atlas.label_of(x).unwrap().class })
        })
        .collect();
    pretty(&records)
}

/// For X outside U the profile is taken against cal-U, for X in U against cal-V.
fn planes_csv() -> String {
    let atlas = Atlas::global();
    let mut out = String::from("label,meets_point,meets_line,skew,class\n");
    for x in atlas.s() {
        let class = atlas.label_of(x).unwrap().class;
        let family = if class == MatrixClass::U { MatrixClass::V } else { MatrixClass::U };
        let p = intersection_profile(x, family).expect("valid domain");
        writeln!(out, "{},{},{},{},{}", atlas.name(x), p.point, p.line, p.skew, class).unwrap();
    }
    out
}

fn isomorphism_json() -> String {
    let map: serde_json::Map<String, Value> = ISO_TABLE.iter().map(|&(a, b)| (a.to_string(), Value::String(b.to_string()))).collect();
    pretty(&map)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unsupported_combinations() {
        for (w, f) in [(What::Atlas, Format::Dot), (What::Quadric, Format::Csv), (What::Isomorphism, Format::Dot), (What::Planes, Format::Dot)] {
            assert!(matches!(render(w, f, None), Err(GqError::UnsupportedFormat { .. })));
        }
    }

    #[test]
    fn forms_parse() {
        assert_eq!(parse_form("q0").unwrap(), QuadraticForm::Q0);
        assert_eq!(parse_form("qM:D1").unwrap(), QuadraticForm::QM(SymMat3::from_bits(0b001100)));
        assert_eq!(parse_form("qM:001100").unwrap(), QuadraticForm::QM(SymMat3::from_bits(0b001100)));
        assert!(parse_form("qM:I").is_err());
        assert!(parse_form("r").is_err());
    }

    #[test]
    fn planes_csv_profiles() {
        let csv = planes_csv();
        assert!(csv.contains("\nD1,4,0,2,D\n"));
        assert!(csv.contains("\nD4,3,1,2,D\n"));
        assert!(csv.contains("\nU1,4,1,1,U\n"));
        assert_eq!(csv.lines().count(), 28);
    }
}
