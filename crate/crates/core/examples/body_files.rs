//! Body files in, JSON-lines reports out.

use grunbaum::bodies::{CutSpec, Direction};
use grunbaum::{json, verify};

fn main() -> grunbaum::Result<()> {
    let text = r#"{"type":"polytope","dim":2,"vertices":[[0,0],[4,0],[1,3],[0,2]]}"#;
    let body = json::parse_body(text)?;
    let cut = CutSpec::new(Direction::new(vec![1.0, 1.0])?, 0.25)?;
    let reports = verify::verify_body(&body, &cut, verify::EXACT_TOL, 100_000, 5)?;
    print!("{}", json::reports_to_lines(&reports));

    let broken = r#"{"type":"profile","dim":3,"knots":[[0,0],[0.5,0.2],[1,1]]}"#;
    if let Err(e) = json::parse_body(broken) {
        println!("rejected: {e}");
    }
    Ok(())
}
