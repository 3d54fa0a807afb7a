//! Body files and report lines.
//!
//! Bodies are stored as
//! `{"type":"polytope","dim":3,"vertices":[[x,y,z],...]}` or
//! `{"type":"profile","dim":n,"knots":[[t,r],...]}`. Reports are written as
//! JSON lines, one [`VerifyReport`] per line. Reals use the shortest
//! representation that round-trips.

use serde::{Deserialize, Serialize};

use crate::bodies::{validate, AnalyticProfile, Body, Polytope};
use crate::error::{Error, Result};
use crate::verify::VerifyReport;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
enum BodyFile {
    Polytope { dim: usize, vertices: Vec<Vec<f64>> },
    Profile { dim: usize, knots: Vec<[f64; 2]> },
}

/// Parses and validates a body file.
///
/// Malformed JSON gives [`Error::Parse`]; a well-formed file describing an
/// invalid body gives [`Error::InvalidBody`] with every diagnostic.
pub fn parse_body(text: &str) -> Result<Body> {
    let file: BodyFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let body: Body = match file {
        BodyFile::Polytope { dim, vertices } => Polytope::new(dim, vertices)?.into(),
        BodyFile::Profile { dim, knots } => {
            let knots = knots.into_iter().map(|[t, r]| (t, r)).collect();
            AnalyticProfile::new_unchecked(dim, knots).into()
        }
    };
    let diags = validate(&body);
    if diags.is_empty() {
        Ok(body)
    } else {
        Err(Error::InvalidBody(diags))
    }
}

/// Serializes a body. Numeric profiles have no file representation.
pub fn body_to_json(body: &Body) -> Result<String> {
    let file = match body {
        Body::Polytope(p) => BodyFile::Polytope {
            dim: p.dim(),
            vertices: p.vertices().to_vec(),
        },
        Body::Profile(p) => BodyFile::Profile {
            dim: p.dim(),
            knots: p.knots().iter().map(|&(t, r)| [t, r]).collect(),
        },
        Body::Numeric(_) => return Err(Error::NotSerializable),
    };
    serde_json::to_string(&file).map_err(|e| Error::Parse(e.to_string()))
}

/// One JSON object per report, each followed by a newline.
pub fn reports_to_lines(reports: &[VerifyReport]) -> String {
    let mut out = String::new();
    for r in reports {
        out.push_str(&serde_json::to_string(r).unwrap_or_default());
        out.push('\n');
    }
    out
}

/// Inverse of [`reports_to_lines`]; blank lines are skipped.
pub fn parse_report_lines(text: &str) -> Result<Vec<VerifyReport>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| serde_json::from_str(l).map_err(|e| Error::Parse(e.to_string())))
        .collect()
}
