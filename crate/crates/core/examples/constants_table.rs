//! Tabulates C1, C2 and D for a few dimensions.
//!
//! ```text
//! cargo run --example constants_table
//! ```

use grunbaum::constants;

fn main() -> grunbaum::Result<()> {
    println!("{:>3} {:>6} {:>10} {:>10} {:>10} {:>12}  method", "n", "alpha", "C1", "C2", "D", "lambda0");
    for n in 2..=5 {
        let nf = n as f64;
        for alpha in [-0.5, 0.0, 0.5 / nf, 1.0 / nf, 1.0, nf - 0.5] {
            let b = constants::bounds(alpha, n, constants::DEFAULT_C2_TOL)?;
            println!(
                "{n:>3} {alpha:>6.3} {:>10.6} {:>10.6} {:>10.6} {:>12.6}  {}",
                b.c1,
                b.c2.value,
                b.d,
                b.c2.argmax_lambda,
                b.c2.method.as_str()
            );
        }
    }

    println!();
    for n in 2..=6 {
        println!(
            "n = {n}: centroid cut in [{:.6}, {:.6}], centroid section >= {:.6} x max",
            constants::grunbaum_bound(n),
            1.0 - constants::grunbaum_bound(n),
            constants::makai_martini_bound(n)
        );
    }
    Ok(())
}
