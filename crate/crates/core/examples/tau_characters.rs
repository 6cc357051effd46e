//! `χ^λ(T_{w_κ} τ)` three ways: the closed formula, the sum of γ-products
//! over transposable tableaux, and the matrix trace.

use alt_hecke::chars::{gamma_of_tableau, tau_char_closed, tau_char_sum, Convention};
use alt_hecke::combinat::{compositions_of, transposable_tableaux, Partition};
use alt_hecke::scalars::pretty::render_tower;
use alt_hecke::specht::char_ttau_oracle;
use alt_hecke::symgroup::w_of_composition;

fn main() -> alt_hecke::Result<()> {
    let lam = Partition::parse(&std::env::args().nth(1).unwrap_or_else(|| "3,2,1".into()))?;
    let (h, _) = lam.diagonal_hooks()?;
    println!("λ = {lam}, h(λ) = {h:?}");
    for kappa in compositions_of(lam.size()) {
        let closed = tau_char_closed(&lam, &kappa, Convention::Oracle)?;
        let sum = tau_char_sum(&lam, &kappa)?;
        let oracle = char_ttau_oracle(&lam, &w_of_composition(&kappa)?)?;
        if !oracle.is_zero() {
            println!(
                "κ = {kappa:?}: {}  (sum agrees {}, closed agrees {})",
                render_tower(&oracle),
                sum == oracle,
                closed == oracle
            );
        }
    }
    let kappa = h.clone();
    println!("γ-factors for κ = {kappa:?}:");
    for t in transposable_tableaux(&lam, &kappa) {
        if let Some(g) = gamma_of_tableau(&t, &kappa)? {
            let fs: Vec<String> = g
                .factors
                .iter()
                .map(|f| format!("{}:{}", f.index, f.case))
                .collect();
            println!(
                "  {t}  [{}]  product {}",
                fs.join(" "),
                render_tower(&g.product)
            );
        }
    }
    Ok(())
}
