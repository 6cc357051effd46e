//! Class polynomials: `χ(T_w)` from the values on minimal-length class
//! representatives, and the alternating analogue on `A_w`.

use alt_hecke::chars::{alt_class_polys, class_polys, tau_char_general, Convention};
use alt_hecke::combinat::Partition;
use alt_hecke::scalars::pretty::render_tower;
use alt_hecke::symgroup::{parse_word, Permutation};

fn main() -> alt_hecke::Result<()> {
    let n = 4;
    let w = Permutation::from_word(n, &parse_word("1,2,3,2,1,3")?)?;
    println!("w = {w}, length {}", w.length());
    for (ct, f) in class_polys(&w).iter() {
        println!("  f[{ct:?}] = {f}");
    }
    for (class, g) in alt_class_polys(&w)? {
        println!("  g[{class}] = {g}");
    }
    let lam = Partition::parse("2,2")?;
    let t = tau_char_general(&lam, &w, Convention::Oracle)?;
    println!(
        "χ^{lam}(T_w τ) = {} with a = {}, reached w_{:?} in {} steps",
        render_tower(&t.value),
        t.a,
        t.sigma,
        t.path.len()
    );
    Ok(())
}
