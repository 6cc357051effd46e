//! Greene's identity on random semilinear posets, and the cute identity.

use alt_hecke::chars::{cute_identity, greene_identity};
use alt_hecke::verify::random_greene_case;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> alt_hecke::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..5 {
        let (p, c) = random_greene_case(&mut rng);
        let (lhs, rhs) = greene_identity(&p, &c)?;
        println!(
            "{:?} with contents {c:?}: {} extensions, identity holds {}",
            p.relations(),
            p.linear_extensions().len(),
            lhs == rhs
        );
        println!("  value {rhs}");
    }
    for m in 0..=4 {
        let (lhs, rhs) = cute_identity(m)?;
        println!("cute identity m = {m}: {rhs} ({})", lhs == rhs);
    }
    Ok(())
}
