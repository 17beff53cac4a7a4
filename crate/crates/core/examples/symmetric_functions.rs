//! Complete and elementary symmetric functions, and their Stirling specialisations.
use gstirling::stirling::{stirling, symfunc_route};
use gstirling::symfunc::{complete_h, elementary_e, SymArgs};
use gstirling::{Method, Rational};

fn main() -> gstirling::Result<()> {
    let xs = SymArgs::new(vec![Rational::new(1, 2)?, Rational::new(-1, 3)?, Rational::from_integer(2)]);
    for k in 0..=4 {
        println!("h_{k} = {}   e_{k} = {}", complete_h(k, &xs), elementary_e(k, &xs));
    }
    let m = 4;
    let hs = SymArgs::negative_reciprocals(m);
    println!("h_3(-1, -1/2, -1/3, -1/4) = {}", complete_h(3, &hs));
    for n in [-4, 4] {
        for k in 0..=4 {
            println!("s({n},{k}) via symmetric functions {} / recurrence {}", symfunc_route(n, k), stirling(n, k, Method::Recurrence)?);
        }
    }
    Ok(())
}
