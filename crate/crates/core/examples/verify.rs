//! Runs the full identity battery, then again with a corrupted cell.
use gstirling::stirling::identities::verify_table;
use gstirling::verify::{run, VerifyOptions};
use gstirling::{Method, Rational, Region, StirlingTable};

fn main() -> gstirling::Result<()> {
    let report = run(&VerifyOptions::default());
    println!("{report}");

    let mut table = StirlingTable::build(Region::new(-4, 4, 5)?, Method::Recurrence)?;
    table.set(-2, 2, Rational::new(1, 2)?);
    let broken = verify_table(&table);
    println!("after corrupting s(-2,2): {} failing checks", broken.failures());
    for check in broken.checks.iter().filter(|c| !c.passed()) {
        println!("  {check}");
    }
    Ok(())
}
