//! Parameters of stabilizer poset codes, including an impure code that
//! exceeds the quantum Singleton bound.

use qposet::stabilizer::{params, singleton_dual_check, singleton_q_check};
use qposet::{AdditiveCode, Alphabet, Elem, Field, Linearity, Poset, StabilizerGroup};

fn main() -> qposet::Result<()> {
    // ψ(span{(1, 1, 0)}) over GF(4) on the poset with the single cover 1 < 3.
    let gf4 = Alphabet::new(Field::prime(2)?, 2)?;
    let e = AdditiveCode::new(
        gf4,
        Linearity::Full,
        3,
        vec![vec![Elem(1), Elem(1), Elem(0)]],
    )?;
    let stab = StabilizerGroup::from_additive(&e)?;
    for g in stab.generators() {
        println!("generator: phase {} a = {:?} b = {:?}", g.phase, g.a, g.b);
    }
    let poset = Poset::from_covers(3, &[(0, 2)])?;
    let p = params(&poset, &stab)?;
    println!(
        "{p} on {poset}: pure {}, bound holds {}",
        p.pure,
        singleton_q_check(&p)?
    );

    // C = span{(01|01)}: the stabilizer is Y on qudit 2, with 2 < 1.
    let gf2 = Alphabet::new(Field::prime(2)?, 1)?;
    let c = AdditiveCode::new(
        gf2,
        Linearity::Prime,
        4,
        vec![[0, 1, 0, 1].map(Elem).to_vec()],
    )?;
    let stab = StabilizerGroup::from_code(c)?;
    let poset = Poset::from_covers(2, &[(1, 0)])?;
    let p = params(&poset, &stab)?;
    println!(
        "{p} on {poset}: pure {}, log_q K <= n - 2d + 2 holds {}, with the distance {} of C^perp_s it holds {}",
        p.pure,
        singleton_q_check(&p)?,
        p.dual_distance,
        singleton_dual_check(&p)?,
    );
    Ok(())
}
