//! Exact measurements next to seeded Monte Carlo estimates.

use std::f64::consts::PI;

use grunbaum::bodies::{AnalyticProfile, Body, Direction};
use grunbaum::{oracle, verify};

fn main() -> grunbaum::Result<()> {
    let cone = Body::Profile(AnalyticProfile::new(3, vec![(0.0, 1.0), (1.0, 0.0)])?);
    let e1 = Direction::axis(3, 0)?;
    println!("unit cone, pi/3 = {:.6}", PI / 3.0);
    for row in verify::oracle_comparison(&cone, &e1, 0.5, 1_000_000, 1)? {
        println!(
            "  {:<10} exact {:.6}  mc {:.6} +- {:.6}  within 4 sigma: {}",
            row.quantity, row.exact, row.estimate.value, row.estimate.std_error, row.within
        );
    }

    let poly = Body::Polytope(oracle::random_polytope(3, 10, 77)?);
    let dir = oracle::random_direction(3, 78)?;
    println!("random polytope");
    for row in verify::oracle_comparison(&poly, &dir, 0.0, 1_000_000, 2)? {
        println!(
            "  {:<10} exact {:.6}  mc {:.6} +- {:.6}  within 4 sigma: {}",
            row.quantity, row.exact, row.estimate.value, row.estimate.std_error, row.within
        );
    }
    Ok(())
}
