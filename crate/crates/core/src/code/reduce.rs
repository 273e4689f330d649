//! Column-by-column reduction of a GF(q)-generator matrix over GF(q^t).

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::linalg;

use super::{descend, scale, AdditiveCode, Alphabet, Linearity};

/// A generator matrix in reduced form together with its row reduction numbers.
///
/// Rows `k_1 + .. + k_{i-1}` up to `k_1 + .. + k_i` (exclusive) carry
/// GF(q)-independent entries in column `i`, and every later row is zero there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedGenerator {
    pub rows: Vec<Vec<Elem>>,
    pub rrn: Vec<usize>,
}

fn coords(x: Elem, q: u32, t: u32) -> Vec<Elem> {
    descend(&[x], q, t)
}

/// Reduces a GF(q)-independent generator matrix.
pub fn reduce_rows(alphabet: &Alphabet, rows: Vec<Vec<Elem>>) -> Result<ReducedGenerator> {
    let f = alphabet.field();
    let base = alphabet.base();
    let (q, t) = (alphabet.q(), alphabet.t());
    let n = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|r| r.len() != n) {
        return Err(Error::MixedLengths);
    }
    let mut rows = rows;
    let k = rows.len();
    let mut rrn = Vec::new();
    let mut start = 0;
    for col in 0..n {
        if start == k {
            break;
        }
        let mut cur = start;
        for j in 0..t as usize {
            let Some(sel) = (cur..k).find(|&r| !coords(rows[r][col], q, t)[j].is_zero()) else {
                continue;
            };
            rows.swap(cur, sel);
            let lead = coords(rows[cur][col], q, t)[j];
            let lead_inv = base.inv(lead).expect("nonzero coordinate");
            for r in cur + 1..k {
                let c = coords(rows[r][col], q, t)[j];
                if c.is_zero() {
                    continue;
                }
                let factor = base.neg(base.mul(c, lead_inv));
                let add = scale(f, factor, &rows[cur]);
                super::add_into(f, &mut rows[r], &add);
            }
            cur += 1;
        }
        rrn.push(cur - start);
        start = cur;
    }
    if start < k {
        return Err(Error::DependentRows);
    }
    while rrn.last() == Some(&0) {
        rrn.pop();
    }
    Ok(ReducedGenerator { rows, rrn })
}

/// Reduces a GF(q)-basis of `code`, which must be closed under GF(q).
pub fn reduce_generator(code: &AdditiveCode) -> Result<ReducedGenerator> {
    if !code.is_closed_under(Linearity::BaseQ) {
        return Err(Error::LinearityMismatch(
            "reduction needs a GF(q)-linear code",
        ));
    }
    reduce_rows(code.alphabet(), code.base_basis()?)
}

impl ReducedGenerator {
    /// GF(q)-dimension k.
    pub fn k(&self) -> usize {
        self.rows.len()
    }

    /// The five structural properties of a reduced form, in order:
    /// bounded numbers, nonzero last number, conservation, block
    /// independence, zeros below each block.
    pub fn properties(&self, alphabet: &Alphabet) -> [bool; 5] {
        let t = alphabet.t() as usize;
        let bounded = self.rrn.iter().all(|&ki| ki <= t);
        let last_nonzero = self.rrn.last().is_none_or(|&kr| kr != 0);
        let conserved = self.rrn.iter().sum::<usize>() == self.k();
        let mut independent = true;
        let mut zeros_below = true;
        let mut start = 0;
        for (i, &ki) in self.rrn.iter().enumerate() {
            let end = (start + ki).min(self.k());
            independent &= block_rank(alphabet, &self.rows[start..end], i) == end - start;
            zeros_below &= self.rows[end..].iter().all(|r| r[i].is_zero());
            start = end;
        }
        [bounded, last_nonzero, conserved, independent, zeros_below]
    }

    pub fn verify(&self, alphabet: &Alphabet) -> bool {
        self.properties(alphabet).iter().all(|&b| b)
    }

    /// s = ⌈k/t⌉.
    pub fn s(&self, t: u32) -> usize {
        self.k().div_ceil(t as usize)
    }
}

fn block_rank(alphabet: &Alphabet, rows: &[Vec<Elem>], col: usize) -> usize {
    let base: &Field = alphabet.base();
    let v = rows
        .iter()
        .map(|r| coords(r[col], alphabet.q(), alphabet.t()))
        .collect();
    linalg::rank(base, v, alphabet.t() as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Field;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn e(v: &[u32]) -> Vec<Elem> {
        v.iter().map(|&x| Elem(x)).collect()
    }

    #[test]
    fn hand_example() {
        let a = Alphabet::new(Field::prime(2).unwrap(), 2).unwrap();
        let r = reduce_rows(&a, vec![e(&[1, 0]), e(&[2, 0]), e(&[0, 1])]).unwrap();
        assert_eq!(r.rrn, vec![2, 1]);
        assert!(r.verify(&a));
        let zero = reduce_rows(&a, vec![]).unwrap();
        assert!(zero.rrn.is_empty() && zero.rows.is_empty());
        assert_eq!(
            reduce_rows(&a, vec![e(&[1, 1]), e(&[1, 1])]).unwrap_err(),
            Error::DependentRows
        );
    }

    #[test]
    fn random_reductions_keep_the_code() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for trial in 0..100 {
            let t = 2 + trial % 2;
            let q = [2, 3][(trial / 2) % 2];
            let a = Alphabet::new(Field::prime(q).unwrap(), t as u32).unwrap();
            let n = rng.random_range(1..=4);
            let k = rng.random_range(0..=3);
            let c = AdditiveCode::random(a.clone(), Linearity::BaseQ, n, k, &mut rng).unwrap();
            let r = reduce_generator(&c).unwrap();
            assert!(r.verify(&a), "{:?}", r);
            assert_eq!(r.k() as u32, c.log_p_size());
            let again = AdditiveCode::new(a.clone(), Linearity::BaseQ, n, r.rows.clone()).unwrap();
            assert_eq!(again, c);
        }
    }
}
