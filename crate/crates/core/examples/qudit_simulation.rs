//! Dense simulation of a stabilizer code: the fixed space and the lightest
//! undetected error agree with the symplectic computation.

use qposet::qsim::{fixed_space, nice_basis_rank, simulate};
use qposet::stabilizer::{params, random_self_orthogonal};
use qposet::{Field, Poset, StabilizerGroup};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> qposet::Result<()> {
    let f = Field::prime(3)?;
    println!(
        "error basis over GF(3) spans {} matrices",
        nice_basis_rank(&f)?
    );
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in 2..=3 {
        let c = random_self_orthogonal(&f, n, 1, &mut rng)?;
        let stab = StabilizerGroup::from_code(c)?;
        let poset = Poset::chain(n);
        let basis = fixed_space(&stab)?;
        let sim = simulate(&poset, &stab)?;
        let p = params(&poset, &stab)?;
        println!(
            "n = {n}: fixed space {} x {}, simulated min undetected weight {:?}, d_P = {} ({p})",
            basis.nrows(),
            basis.ncols(),
            sim.min_undetected_weight,
            p.d_p
        );
    }
    Ok(())
}
