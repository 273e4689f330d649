//! Row reduction over a `Field`. Small dense matrices only.

use crate::gf::{Elem, Field};

/// A matrix in reduced row echelon form: every row has a leading 1 at
/// `pivots[i]`, and every pivot column is zero outside its row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    pub rows: Vec<Vec<Elem>>,
    pub pivots: Vec<usize>,
    pub width: usize,
}

fn axpy(f: &Field, dst: &mut [Elem], scale: Elem, src: &[Elem]) {
    if scale.is_zero() {
        return;
    }
    for (d, &s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *d = f.add(*d, f.mul(scale, s));
        }
    }
}

impl Echelon {
    pub fn new(f: &Field, rows: Vec<Vec<Elem>>, width: usize) -> Echelon {
        let mut rows: Vec<Vec<Elem>> = rows
            .into_iter()
            .filter(|r| r.iter().any(|e| !e.is_zero()))
            .collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..width {
            let Some(sel) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
                continue;
            };
            rows.swap(r, sel);
            let inv = f.inv(rows[r][col]).expect("nonzero pivot");
            for e in rows[r].iter_mut() {
                *e = f.mul(*e, inv);
            }
            let pivot_row = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != r && !row[col].is_zero() {
                    let s = f.neg(row[col]);
                    axpy(f, row, s, &pivot_row);
                }
            }
            pivots.push(col);
            r += 1;
            if r == rows.len() {
                break;
            }
        }
        rows.truncate(r);
        Echelon {
            rows,
            pivots,
            width,
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Residue of `v` after eliminating every pivot column.
    pub fn reduce(&self, f: &Field, v: &[Elem]) -> Vec<Elem> {
        let mut out = v.to_vec();
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            if !out[c].is_zero() {
                let s = f.neg(out[c]);
                axpy(f, &mut out, s, row);
            }
        }
        out
    }

    pub fn contains(&self, f: &Field, v: &[Elem]) -> bool {
        self.reduce(f, v).iter().all(|e| e.is_zero())
    }

    /// Basis of `{x : row · x = 0 for every row}`.
    pub fn kernel(&self, f: &Field) -> Vec<Vec<Elem>> {
        let mut is_pivot = vec![false; self.width];
        for &c in &self.pivots {
            is_pivot[c] = true;
        }
        (0..self.width)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut x = vec![Elem::ZERO; self.width];
                x[free] = Elem::ONE;
                for (row, &c) in self.rows.iter().zip(&self.pivots) {
                    x[c] = f.neg(row[free]);
                }
                x
            })
            .collect()
    }
}

pub fn rank(f: &Field, rows: Vec<Vec<Elem>>, width: usize) -> usize {
    Echelon::new(f, rows, width).rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_is_orthogonal_to_rows() {
        let f = Field::prime(3).unwrap();
        let rows = vec![
            vec![Elem(1), Elem(2), Elem(0), Elem(1)],
            vec![Elem(2), Elem(1), Elem(1), Elem(0)],
            vec![Elem(0), Elem(0), Elem(1), Elem(1)],
        ];
        let e = Echelon::new(&f, rows.clone(), 4);
        let k = e.kernel(&f);
        assert_eq!(e.rank() + k.len(), 4);
        for x in &k {
            for r in &rows {
                let dot = r
                    .iter()
                    .zip(x)
                    .fold(Elem::ZERO, |acc, (&a, &b)| f.add(acc, f.mul(a, b)));
                assert_eq!(dot, Elem::ZERO);
            }
        }
        for r in &rows {
            assert!(e.contains(&f, r));
        }
    }
}
