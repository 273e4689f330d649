use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};

use super::{AdditiveCode, Alphabet, Linearity};

/// The Reed–Solomon code of order `k`: evaluations of every polynomial of
/// degree below `k` at 1, α, .., α^(q-2) for a primitive α.
pub fn reed_solomon(field: &Arc<Field>, k: usize) -> Result<AdditiveCode> {
    let n = field.size() as usize - 1;
    if k > n {
        return Err(Error::KOutOfRange { k, max: n });
    }
    let alpha = field.primitive_element();
    let points: Vec<Elem> = (0..n).map(|i| field.pow(alpha, i as u64)).collect();
    let rows = (0..k)
        .map(|j| points.iter().map(|&x| field.pow(x, j as u64)).collect())
        .collect();
    let alphabet = Alphabet::from_parts(field.clone(), field.clone()).expect("same field");
    AdditiveCode::new(alphabet, Linearity::Full, n, rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{is_mds, min_distance};
    use crate::poset::Poset;

    #[test]
    fn small_cases() {
        let f = Field::gf(2, 2).unwrap();
        assert!(reed_solomon(&f, 0).unwrap().is_zero());
        assert_eq!(
            reed_solomon(&f, 4).unwrap_err(),
            Error::KOutOfRange { k: 4, max: 3 }
        );
        let full = reed_solomon(&f, 3).unwrap();
        assert_eq!(full.size(), 64);
        let rs2 = reed_solomon(&f, 2).unwrap();
        let a = Poset::antichain(3);
        assert_eq!(min_distance(&a, &rs2).unwrap(), 2);
        assert!(is_mds(&a, &rs2).unwrap());
        let f5 = Field::prime(5).unwrap();
        assert_eq!(
            min_distance(&Poset::antichain(4), &reed_solomon(&f5, 2).unwrap()).unwrap(),
            3
        );
    }
}
