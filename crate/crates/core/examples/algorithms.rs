//! Computes a few cells with every exact method and shows they agree.
use gstirling::stirling::stirling;
use gstirling::Method;

fn main() -> gstirling::Result<()> {
    for (n, k) in [(-3, 2), (-5, 6), (-7, 4), (4, 2), (6, 3)] {
        print!("s({n},{k}):");
        for m in Method::ALL {
            match stirling(n, k, m) {
                Ok(v) => print!("  {}={}", m.name(), v),
                Err(_) => print!("  {}=n/a", m.name()),
            }
        }
        println!();
    }
    Ok(())
}
