//! Writes every standard definition to `fixtures/<name>.json`.
//!
//! cargo run --example export_fixtures [output-dir]

use std::path::PathBuf;

use hopfcalc::cli::catalog::catalog;

fn main() -> std::io::Result<()> {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures"));
    std::fs::create_dir_all(&dir)?;
    for (name, doc) in catalog() {
        let path = dir.join(format!("{name}.json"));
        std::fs::write(&path, doc.to_json())?;
        println!("wrote {}", path.display());
    }
    Ok(())
}
