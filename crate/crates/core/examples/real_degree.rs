//! Real-degree numbers through the polygamma series, and their continuity
//! at integer degrees.
use gstirling::realdeg::{continuity_deviation, real_identity_checks, stirling_real, RealDegree};

fn main() -> gstirling::Result<()> {
    for a in [0.5, 1.5, -0.5, -2.5, std::f64::consts::PI] {
        let row: Vec<String> = (0..=5).map(|k| stirling_real(a, k).map(|v| format!("{v:+.10e}"))).collect::<Result<_, _>>()?;
        println!("a={a:<8} {}", row.join(" "));
    }
    let report = real_identity_checks(RealDegree::new(0.25)?, 8, 1e-8)?;
    println!("recurrence residual at a=0.25: {:.2e}", report.recurrence_residual);
    for n in [-3, 0, 2] {
        for eps in [1e-3, 1e-5] {
            println!("n={n} eps={eps:e}: max deviation {:.3e}", continuity_deviation(n, eps, 6)?);
        }
    }
    Ok(())
}
