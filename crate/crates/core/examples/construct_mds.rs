//! Finding a poset that turns a self-orthogonal additive code into a pure
//! MDS stabilizer code.

use qposet::stabilizer::construct_mds;
use qposet::{AdditiveCode, Alphabet, Elem, Field, Linearity};

fn main() -> qposet::Result<()> {
    let gf4 = Alphabet::new(Field::prime(2)?, 2)?;
    let e = AdditiveCode::new(
        gf4.clone(),
        Linearity::Full,
        3,
        vec![vec![Elem(1), Elem(1), Elem(0)]],
    )?;
    let found = construct_mds(&e, 0, 0)?;
    println!("E = {e}");
    println!(
        "{} after {} posets: {}",
        found.poset, found.posets_tried, found.params
    );

    let gf9 = Alphabet::new(Field::prime(3)?, 2)?;
    let e = AdditiveCode::new(
        gf9,
        Linearity::Full,
        4,
        vec![vec![Elem(1), Elem(1), Elem(1), Elem(0)]],
    )?;
    match construct_mds(&e, 0, 0) {
        Ok(found) => println!(
            "{} after {} posets: {}",
            found.poset, found.posets_tried, found.params
        ),
        Err(err) => println!("GF(9) example: {err}"),
    }
    Ok(())
}
