//! Exact parallel sections and cut-off volumes of a polytope.

use grunbaum::bodies::{Body, Direction, Polytope};
use grunbaum::measure;

fn main() -> grunbaum::Result<()> {
    let mut corners = Vec::new();
    for x in [0.0, 1.0] {
        for y in [0.0, 1.0] {
            for z in [0.0, 1.0] {
                corners.push(vec![x, y, z]);
            }
        }
    }
    let cube = Body::Polytope(Polytope::new(3, corners)?);
    let diag = Direction::new(vec![1.0, 1.0, 1.0])?;

    let curve = measure::section_curve(&cube, &diag)?;
    println!("support [{:.6}, {:.6}], breakpoints {:?}", curve.t_min(), curve.t_max(), curve.breakpoints());
    for i in 0..=8 {
        let t = curve.t_min() + (curve.t_max() - curve.t_min()) * i as f64 / 8.0;
        println!("t = {t:+.4}  A(t) = {:.6}  V(t) = {:.6}", curve.area(t), curve.cut_volume(t));
    }
    let (t0, a0) = measure::max_section(&cube, &diag)?;
    println!("largest section {a0:.6} at t = {t0:.6} (regular hexagon: {:.6})", 0.75 * 3f64.sqrt());
    println!("volume {:.15}, centroid {:?}", measure::volume(&cube), measure::centroid(&cube));
    Ok(())
}
