//! The truncated-cone objective whose supremum is C2.
//!
//! Prints phi against the homothety ratio lambda and the located maximum.

use grunbaum::constants;

fn main() -> grunbaum::Result<()> {
    let n = 3;
    for alpha in [0.25, 1.0, 2.5] {
        let best = constants::c2(alpha, n, constants::DEFAULT_C2_TOL)?;
        println!(
            "alpha = {alpha}: C2 = {:.9} at lambda = {:.6} ({})",
            best.value,
            best.argmax_lambda,
            best.method.as_str()
        );
        for k in 0..=10 {
            let s = k as f64 / 10.0;
            let bar = "#".repeat((60.0 * constants::phi_s(s, alpha, n)).round() as usize);
            println!("  lambda {:>8.3}  {bar}", constants::lambda_of_s(s));
        }
    }
    Ok(())
}
