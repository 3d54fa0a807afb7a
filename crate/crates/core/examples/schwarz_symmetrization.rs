//! Replaces a polytope by the body of revolution with the same sections.

use grunbaum::bodies::{Body, CutSpec, Direction};
use grunbaum::{cli, json, measure, oracle, verify};

fn main() -> grunbaum::Result<()> {
    let poly = Body::Polytope(oracle::random_polytope(3, 12, 2024)?);
    let dir = Direction::new(vec![0.3, -0.2, 1.0])?;
    let sym = measure::schwarz_symmetral(&poly, &dir)?;
    let axis = Direction::axis(3, 0)?;

    println!("volume: polytope {:.12}, symmetral {:.12}", measure::volume(&poly), measure::volume(&sym));
    for alpha in [-0.5, 0.0, 0.5, 1.5] {
        println!(
            "alpha {alpha:+.1}: cut ratio {:.12} vs {:.12}",
            verify::cut_ratio(&poly, &CutSpec::new(dir.clone(), alpha)?)?,
            verify::cut_ratio(&sym, &CutSpec::new(axis.clone(), alpha)?)?
        );
    }

    if let Body::Numeric(p) = &sym {
        let profile = cli::resample(p, 65)?;
        println!("resampled to {} knots: {}", profile.knots().len(), &json::body_to_json(&Body::Profile(profile.clone()))?[..80]);
        println!("resampled volume {:.12}", profile.volume());
    }
    Ok(())
}
