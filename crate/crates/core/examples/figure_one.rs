//! Order ideals and the poset weight on the eight-point example poset.

use qposet::code::{poset_weight, support_ideal};
use qposet::{Elem, Poset};

fn main() -> qposet::Result<()> {
    let covers = [
        (1, 2),
        (1, 3),
        (2, 4),
        (2, 5),
        (3, 5),
        (4, 6),
        (4, 7),
        (5, 7),
        (6, 8),
        (7, 8),
    ];
    let covers: Vec<_> = covers.iter().map(|&(i, j)| (i - 1, j - 1)).collect();
    let poset = Poset::from_covers(8, &covers)?;
    println!("{poset}");
    println!(
        "minimal elements (1-based): {:?}",
        poset
            .minimal_elements()
            .iter()
            .map(|i| i + 1)
            .collect::<Vec<_>>()
    );
    for k in 0..=poset.len() {
        let ideals: Vec<String> = poset.ideals_of_size(k).map(|i| i.to_string()).collect();
        println!("ideals of size {k}: {}", ideals.join(" "));
    }

    let v: Vec<Elem> = [0, 0, 0, 0, 1, 1, 0, 0].map(Elem).to_vec();
    let ideal = support_ideal(&poset, &v)?;
    let w = poset_weight(&poset, &v)?;
    println!("v = (0,0,0,0,1,1,0,0): support ideal {ideal}, poset weight {w}");
    assert_eq!(w, 6);

    match Poset::from_covers(3, &[(0, 1), (1, 2), (2, 0)]) {
        Err(e) => println!("cyclic covers are rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
