//! Diagonal hooks, symmetric coverings and transposable tableaux.

use alt_hecke::chars::equiv_class_check;
use alt_hecke::combinat::{compositions_of, symmetric_covering, transposable_tableaux, Partition};

fn main() -> alt_hecke::Result<()> {
    let lam = Partition::parse("4,2,1,1")?;
    let (h, d) = lam.diagonal_hooks()?;
    println!(
        "λ = {lam}: d = {d}, h = {h:?}, conjugate {}",
        lam.conjugate()
    );
    for kappa in compositions_of(lam.size()) {
        if let Some(chain) = symmetric_covering(&lam, &kappa)? {
            let shown: Vec<String> = chain.iter().map(ToString::to_string).collect();
            println!("κ = {kappa:?}: covering {}", shown.join(" ⊂ "));
        }
    }
    let big = Partition::parse("6,3,2,1,1,1")?;
    let kappa = [7, 7];
    println!(
        "{big} with κ = {kappa:?}: {} transposable tableaux",
        transposable_tableaux(&big, &kappa).len()
    );
    for z in 1..=2 {
        let r = equiv_class_check(&big, &kappa, z)?;
        println!(
            "  z = {z}: {} classes (largest {}), {} match the Greene value",
            r.classes(),
            r.largest_class(),
            r.matched
        );
    }
    Ok(())
}
