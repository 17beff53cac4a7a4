//! Writes a table to the native text format, reads it back, and emits CSV and JSON.
use gstirling::format::{from_json, to_csv, to_json, TableFile};
use gstirling::{Method, Region, StirlingTable};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let table = StirlingTable::build(Region::new(-3, 3, 3)?, Method::Recurrence)?;
    let file = TableFile::new(table, 0);
    let native = file.to_native();
    let path = std::env::temp_dir().join("gstirling-example.native");
    std::fs::write(&path, &native)?;
    let back = TableFile::from_native(&std::fs::read_to_string(&path)?)?;
    assert_eq!(back, file);
    println!("{native}");
    print!("{}", to_csv(&back.table));
    let json = to_json(&back);
    assert_eq!(from_json(&json)?, file);
    println!("json bytes: {}", json.len());
    std::fs::remove_file(path)?;
    Ok(())
}
