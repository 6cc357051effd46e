//! The `λ = (3,3,3)` values on three minimal-length 9-cycles, next to the
//! published table. Prints the canonical document kept under
//! `tests/golden/n9_examples.json`.

use alt_hecke::scalars::pretty::render_tower;
use alt_hecke::verify::{
    example_document, example_verdict, first_example_reference, second_example,
};

fn main() -> alt_hecke::Result<()> {
    let rows = second_example()?;
    eprintln!(
        "published χ(T_v τ) = {}",
        render_tower(&first_example_reference())
    );
    for r in &rows {
        eprintln!(
            "{} in class {}: χ(T_x τ) = {}",
            r.name,
            r.class,
            render_tower(&r.tau)
        );
    }
    eprintln!("{:#?}", example_verdict(&rows));
    println!(
        "{}",
        serde_json::to_string_pretty(&example_document(&rows)).expect("document")
    );
    Ok(())
}
