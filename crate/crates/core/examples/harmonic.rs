//! Nested harmonic sums against the negative-degree numbers, plus the
//! alternating-sum and tail-limit identities.
use gstirling::exact::factorial;
use gstirling::stirling::identities::{alternating_sum, nested_harmonic, tail_limit_check};
use gstirling::stirling::stirling;
use gstirling::{Method, Rational};

fn main() -> gstirling::Result<()> {
    for n in 1..=6u32 {
        for r in 1..=3u32 {
            let lhs = Rational::sign_power(r as i64) * Rational::from_integer(factorial(n as u64))
                * stirling(-(n as i64), r as usize, Method::Recurrence)?;
            println!("n={n} r={r}  T={}  (-1)^r n! s(-n,r)={lhs}", nested_harmonic(n, r));
        }
    }
    for n in 1..=6 {
        println!("alternating sum n={n}: {}", alternating_sum(n));
    }
    let tail = tail_limit_check(4, 60, 1e-4);
    println!("tail m=4: gap at k=60 is {:.3e}, {}", tail.gap.to_f64(), tail.check);
    Ok(())
}
