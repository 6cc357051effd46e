//! The B-basis of the alternating algebra, its parity triangularity and the
//! left action of `B_r`.

use alt_hecke::hecke::{b_basis, b_elem};
use alt_hecke::symgroup::Permutation;
use alt_hecke::verify::{b_action_rhs, b_action_tally};

fn main() {
    let n = 3;
    let bb = b_basis(n);
    for z in bb.order() {
        println!("B_{z} = {}", bb.get(z));
    }
    let z = Permutation::from_word(n, &[1, 2]).expect("word");
    let lhs = &*b_elem(&Permutation::from_word(n, &[1]).expect("word")) * &*b_elem(&z);
    println!("B_1 B_{z} = {lhs}");
    println!(
        "rule with B_rz unconditional holds: {}",
        lhs == b_action_rhs(1, &z, true)
    );
    for m in 2..=4 {
        let t = b_action_tally(m);
        println!(
            "n ≤ {m}: gated rule {}/{}, unconditional rule {}/{}",
            t.gated, t.total, t.unconditional, t.total
        );
    }
}
