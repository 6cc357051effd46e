//! Seminormal representations: generator matrices of `S(λ)`, the
//! conjugation map `τ`, and traces of `T_w` and `T_w τ`.

use alt_hecke::combinat::Partition;
use alt_hecke::scalars::pretty::render_tower;
use alt_hecke::specht::{char_t, char_ttau_oracle, mat_mul, semirep};
use alt_hecke::symgroup::Permutation;

fn main() -> alt_hecke::Result<()> {
    let lam = Partition::parse("2,1")?;
    let rep = semirep(&lam)?;
    println!("S{lam} has dimension {}", rep.dim());
    for t in rep.basis() {
        println!("basis tableau {t}");
    }
    for i in 1..lam.size() {
        println!("M(T_{i}):");
        for row in rep.gen_matrix(i)? {
            println!(
                "  [{}]",
                row.iter().map(render_tower).collect::<Vec<_>>().join(", ")
            );
        }
    }
    let tau = rep.tau_matrix()?;
    println!(
        "τ² = 1: {}",
        mat_mul(&tau, &tau) == alt_hecke::specht::identity_matrix(rep.dim())
    );
    for w in Permutation::all(lam.size()) {
        println!(
            "w = {w}: χ(T_w) = {}, χ(T_w τ) = {}",
            render_tower(&char_t(&lam, &w)?),
            render_tower(&char_ttau_oracle(&lam, &w)?)
        );
    }
    Ok(())
}
