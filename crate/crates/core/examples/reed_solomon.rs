//! Reed-Solomon codes are MDS for the Hamming metric (the antichain poset).

use qposet::code::{is_mds, min_distance, reed_solomon};
use qposet::{Field, Poset};

fn main() -> qposet::Result<()> {
    for (p, m) in [(2, 2), (5, 1), (7, 1), (2, 3)] {
        let f = Field::gf(p, m)?;
        let q = f.size() as usize;
        let hamming = Poset::antichain(q - 1);
        let mut row = Vec::new();
        for k in 1..q {
            let c = reed_solomon(&f, k)?;
            let d = min_distance(&hamming, &c)?;
            assert_eq!(d, q - k);
            assert!(is_mds(&hamming, &c)?);
            row.push(format!("k={k}: d={d}"));
        }
        println!("GF({q}), length {}: {}", q - 1, row.join(", "));
    }
    println!("every code meets d = n - k + 1");
    Ok(())
}
