//! Character table of the alternating Hecke algebra, exactly and at `q = 1`.
//! Usage: `cargo run --example char_table -- 4`.

use alt_hecke::chars::{char_table, Convention};
use alt_hecke::scalars::pretty::render_tower;
use alt_hecke::verify::{at_q_one, classical_deviation};

fn main() -> alt_hecke::Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(4);
    let table = char_table(n, Convention::Oracle)?;
    let labels: Vec<String> = table.cols.iter().map(|(c, _)| c.to_string()).collect();
    println!("columns: {}", labels.join("  "));
    for (row, cells) in table.rows.iter().zip(&table.cells) {
        println!("{row}");
        for (label, v) in labels.iter().zip(cells) {
            let z = at_q_one(v)?;
            println!(
                "  {label}: {}   [q=1: {:.4}{:+.4}i]",
                render_tower(v),
                z.re,
                z.im
            );
        }
    }
    println!(
        "deviation from the classical table: {:.1e}",
        classical_deviation(n)?
    );
    Ok(())
}
