//! Prints the classic table of s(n, k) for n in -5..=6, k in 0..=6 as LaTeX.
use gstirling::format::{to_latex, LatexOptions};
use gstirling::{Method, Region, StirlingTable};

fn main() -> gstirling::Result<()> {
    let table = StirlingTable::build(Region::new(-5, 6, 6)?, Method::Recurrence)?;
    let opts = LatexOptions { group_digits: true, legacy_minus_six: true };
    print!("{}", to_latex(&table, opts));
    Ok(())
}
