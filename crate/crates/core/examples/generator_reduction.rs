//! Reducing a generator matrix of a GF(q)-linear code over GF(q^t).

use qposet::code::{additive_singleton_holds, min_distance, reduce_generator};
use qposet::{AdditiveCode, Alphabet, Field, Linearity, Poset};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> qposet::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let alphabet = Alphabet::new(Field::prime(2)?, 3)?;
    let code = AdditiveCode::random(alphabet.clone(), Linearity::BaseQ, 4, 5, &mut rng)?;
    let r = reduce_generator(&code)?;
    println!(
        "GF(2)-dimension {} in GF(8)^4, reduction numbers {:?}",
        r.k(),
        r.rrn
    );
    for row in &r.rows {
        println!("  {:?}", row.iter().map(|e| e.0).collect::<Vec<_>>());
    }
    println!("reduced-form properties: {:?}", r.properties(&alphabet));
    for poset in [
        Poset::antichain(4),
        Poset::chain(4),
        Poset::random(4, &mut rng),
    ] {
        println!(
            "{poset}: d_P = {} <= n - ceil(k/t) + 1 = {}: {}",
            min_distance(&poset, &code)?,
            4 - r.s(3) + 1,
            additive_singleton_holds(&poset, &code)?
        );
    }
    Ok(())
}
