//! |s(n, k)| counts permutations of n elements with k cycles.
use gstirling::stirling::identities::cycle_counts_by_enumeration;
use gstirling::stirling::stirling;
use gstirling::Method;

fn main() -> gstirling::Result<()> {
    for n in 1..=7usize {
        let counts = cycle_counts_by_enumeration(n);
        let exact: Vec<String> = (0..=n).map(|k| stirling(n as i64, k, Method::Recurrence).map(|v| v.abs().to_string())).collect::<Result<_, _>>()?;
        println!("n={n}  enumerated {counts:?}  |s| [{}]", exact.join(", "));
    }
    Ok(())
}
