//! Exact scalars: rational functions in `q` over `Q(i)` and the tower of
//! square roots `y_k = √([k]/q)` where character values live.

use alt_hecke::scalars::json::tower_to_json;
use alt_hecke::scalars::pretty::render_tower;
use alt_hecke::scalars::{alpha_coeff, qint, RatFunc, TowerElem};

fn main() -> alt_hecke::Result<()> {
    let q3 = qint(3);
    println!("[3] = {q3}");
    println!("[-3] = {}", qint(-3));
    let f = &q3 / &qint(2);
    println!("[3]/[2] = {f}, bar = {}", f.bar());

    let y3 = TowerElem::y(3)?;
    println!("y_3 = {}  (y_3² = {})", render_tower(&y3), &y3 * &y3);
    let a = alpha_coeff(2)?;
    println!("α_2 = {}", render_tower(&a));
    let x = &TowerElem::from_ratfunc(RatFunc::q_minus_qinv()) + &y3.scale(&RatFunc::i());
    println!("x = {}", render_tower(&x));
    println!("x² = {}", render_tower(&(&x * &x)));
    println!("json: {}", tower_to_json(&x));
    Ok(())
}
