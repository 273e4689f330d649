//! MDS additive poset codes are exactly the I-perfect ones.

use qposet::code::{mds_iff_perfect_verify, q_dimension};
use qposet::{AdditiveCode, Alphabet, Field, Linearity, Poset};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> qposet::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let gf4 = Alphabet::new(Field::prime(2)?, 2)?;
    let mut mds = 0;
    let mut total = 0;
    for _ in 0..200 {
        let n = rng.random_range(2..=4);
        let k = rng.random_range(1..=n);
        let code = AdditiveCode::random(gf4.clone(), Linearity::Prime, n, k, &mut rng)?;
        let poset = Poset::random(n, &mut rng);
        let Some(report) = mds_iff_perfect_verify(&poset, &code)? else {
            continue;
        };
        assert!(report.agree);
        total += 1;
        if report.is_mds {
            mds += 1;
            if mds <= 3 {
                println!(
                    "MDS: n = {n}, dimension {} over GF(4), d_P = {}, perfect on all {} ideals of size {} of {poset}",
                    q_dimension(&code),
                    report.min_distance,
                    report.ideals_checked,
                    report.ideal_size.unwrap_or_default(),
                );
            }
        }
    }
    println!("{total} random additive codes over GF(4): {mds} MDS, both sides agree on every one");
    Ok(())
}
