//! Builds the bodies that attain each bound and measures them.

use grunbaum::bodies::{Body, CutSpec, Direction};
use grunbaum::{constants, extremal, verify};

fn main() -> grunbaum::Result<()> {
    let n = 3;
    let e1 = Direction::axis(n, 0)?;

    for alpha in [-0.4, 0.0, 0.2] {
        let cut = CutSpec::new(e1.clone(), alpha)?;
        let lower = Body::Profile(extremal::lower_extremizer(alpha, n)?);
        let upper = Body::Profile(extremal::upper_extremizer(alpha, n, constants::DEFAULT_C2_TOL)?);
        println!(
            "alpha {alpha:+.2}: lower body cuts {:.9} (C1 = {:.9}), upper body cuts {:.9} (C2 = {:.9})",
            verify::cut_ratio(&lower, &cut)?,
            constants::c1(alpha, n)?,
            verify::cut_ratio(&upper, &cut)?,
            constants::c2(alpha, n, constants::DEFAULT_C2_TOL)?.value,
        );
    }

    for alpha in [-0.5, 0.0, 1.0 / 3.0] {
        let cone = Body::Profile(extremal::theorem5_equality_cone(alpha, n)?);
        let cut = CutSpec::new(e1.clone(), alpha)?;
        println!(
            "alpha {alpha:+.3}: section ratio {:.9}, D = {:.9}",
            verify::section_ratio(&cone, &cut)?,
            constants::d_const(alpha, n)?
        );
    }

    let d = extremal::double_cone(constants::beta0(0.2, n)?, n)?;
    println!("double cone knots {:?}, volume {:.12}", d.knots(), d.volume());
    Ok(())
}
