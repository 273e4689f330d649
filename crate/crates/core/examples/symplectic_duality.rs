//! The map ψ, trace forms, duals and the symplectic MacWilliams identity.

use qposet::code::poset_weight;
use qposet::stabilizer::random_self_orthogonal;
use qposet::symplectic::{dual, form_alt, form_symp, macwilliams_check, psi, wt_symp};
use qposet::{AdditiveCode, Alphabet, Elem, Field, Form, Linearity, Poset, QuadExt};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> qposet::Result<()> {
    let qe = QuadExt::new(&Field::prime(3)?)?;
    let poset = Poset::chain(3);
    let v = vec![Elem(4), Elem(0), Elem(3)];
    let w = vec![Elem(1), Elem(7), Elem(0)];
    let (sv, sw) = (psi(&qe, &v), psi(&qe, &w));
    println!("ψ(v) = {:?} | {:?}", sv.a, sv.b);
    println!(
        "wt_P(v) = {}, symplectic weight of ψ(v) = {}",
        poset_weight(&poset, &v)?,
        wt_symp(&poset, &sv)?
    );
    println!(
        "<v|w>_a = {:?}, <ψv, ψw>_s = {:?}",
        form_alt(&qe, &v, &w)?,
        form_symp(qe.base(), &sv, &sw)?
    );

    let gf9 = Alphabet::new(Field::prime(3)?, 2)?;
    let d = AdditiveCode::new(
        gf9,
        Linearity::Full,
        3,
        vec![vec![Elem(1), Elem(3), Elem(5)]],
    )?;
    let alt = dual(&d, Form::Alt)?;
    let herm = dual(&d, Form::Herm)?;
    println!("D = {d}");
    println!(
        "D^perp_a has {} words and equals D^perp_h: {}",
        alt.size(),
        alt == herm
    );

    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let c = random_self_orthogonal(&Field::prime(2)?, 3, 2, &mut rng)?;
    let r = macwilliams_check(&c)?;
    println!(
        "self-orthogonal C with {} words: A = {:?}, B = {:?}, identity holds: {}",
        c.size(),
        r.a,
        r.b,
        r.holds()
    );
    Ok(())
}
