//! Times each method per cell and reports where the recurrence stops winning.
use gstirling::bench::{crossover, run, to_csv};
use gstirling::{Method, Region};

fn main() -> gstirling::Result<()> {
    let records = run(Region::new(-8, 0, 6)?, &Method::ALL, 3, true);
    print!("{}", to_csv(&records));
    for (k, n) in crossover(&records) {
        match n {
            Some(n) => println!("k={k}: recurrence beaten from n={n}"),
            None => println!("k={k}: no crossover"),
        }
    }
    Ok(())
}
