//! Dense matrix realisation of error operators on (C^q)^⊗n, used as an
//! oracle independent of the symplectic bookkeeping.
//!
//! Basis vectors |x⟩ are indexed by x ∈ GF(q)^n read as a base-q number with
//! slot 1 most significant, matching the Kronecker product order.

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::poset::Poset;
use crate::stabilizer::{ErrorOperator, StabilizerGroup};
use crate::symplectic::SympVector;

/// Largest Hilbert space dimension realised as a matrix.
pub const MAX_DIM: usize = 1024;
/// Largest dimension for the exhaustive undetected-error scan.
pub const MAX_SCAN_DIM: usize = 256;
/// Largest q for the nice-basis rank check.
pub const MAX_RANK_Q: u32 = 16;

pub const UNITARY_TOL: f64 = 1e-9;
pub const DETECTION_TOL: f64 = 1e-8;
pub const RANK_TOL: f64 = 1e-9;
const GRAM_SCHMIDT_TOL: f64 = 1e-6;

/// A monomial matrix: column `j` has the single entry ζ^phase[j] in row
/// `perm[j]`, with ζ = e^{iπ/p}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseOperator {
    p: u32,
    perm: Vec<usize>,
    phase: Vec<u32>,
}

fn zeta(p: u32, e: u32) -> Complex64 {
    Complex64::from_polar(1.0, std::f64::consts::PI * e as f64 / p as f64)
}

fn check_dim(dim: usize, cap: usize) -> Result<()> {
    if dim > cap {
        return Err(Error::DimensionCap { dim, cap });
    }
    Ok(())
}

fn hilbert_dim(q: u32, n: usize) -> usize {
    (q as usize).checked_pow(n as u32).unwrap_or(usize::MAX)
}

impl DenseOperator {
    pub fn identity(p: u32, dim: usize) -> DenseOperator {
        DenseOperator {
            p,
            perm: (0..dim).collect(),
            phase: vec![0; dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.perm.len()
    }

    /// X(a)Z(b) on one slot: |x⟩ ↦ ξ^{tr(bx)} |x + a⟩.
    fn slot(f: &Field, a: Elem, b: Elem) -> DenseOperator {
        let (perm, phase) = f
            .elements()
            .map(|x| (f.add(x, a).0 as usize, 2 * f.trace_to_prime(f.mul(b, x)).0))
            .unzip();
        DenseOperator {
            p: f.characteristic(),
            perm,
            phase,
        }
    }

    pub fn kron(&self, other: &DenseOperator) -> DenseOperator {
        let m = other.dim();
        let mut perm = Vec::with_capacity(self.dim() * m);
        let mut phase = Vec::with_capacity(self.dim() * m);
        for j in 0..self.dim() {
            for k in 0..m {
                perm.push(self.perm[j] * m + other.perm[k]);
                phase.push((self.phase[j] + other.phase[k]) % (2 * self.p));
            }
        }
        DenseOperator {
            p: self.p,
            perm,
            phase,
        }
    }

    /// The product `self · other`.
    pub fn mul(&self, other: &DenseOperator) -> DenseOperator {
        let (perm, phase) = (0..self.dim())
            .map(|j| {
                let mid = other.perm[j];
                (
                    self.perm[mid],
                    (other.phase[j] + self.phase[mid]) % (2 * self.p),
                )
            })
            .unzip();
        DenseOperator {
            p: self.p,
            perm,
            phase,
        }
    }

    pub fn to_matrix(&self) -> DMatrix<Complex64> {
        let mut m = DMatrix::zeros(self.dim(), self.dim());
        for (j, (&r, &e)) in self.perm.iter().zip(&self.phase).enumerate() {
            m[(r, j)] = zeta(self.p, e);
        }
        m
    }

    /// `self · m` without forming a dense product.
    pub fn apply(&self, m: &DMatrix<Complex64>) -> DMatrix<Complex64> {
        let mut out = DMatrix::zeros(m.nrows(), m.ncols());
        for (j, (&r, &e)) in self.perm.iter().zip(&self.phase).enumerate() {
            let z = zeta(self.p, e);
            for c in 0..m.ncols() {
                out[(r, c)] = z * m[(j, c)];
            }
        }
        out
    }

    /// Max-norm distance of M†M from the identity.
    pub fn unitarity_defect(&self) -> f64 {
        let m = self.to_matrix();
        let prod = m.adjoint() * &m;
        let id = DMatrix::<Complex64>::identity(self.dim(), self.dim());
        (prod - id).iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Exactly one entry per row and column, each a root of unity by construction.
    pub fn is_monomial(&self) -> bool {
        let mut seen = vec![false; self.dim()];
        self.perm
            .iter()
            .all(|&r| r < seen.len() && !std::mem::replace(&mut seen[r], true))
    }
}

/// ζ^c ⊗_i X(a_i)Z(b_i).
pub fn realize(f: &Field, g: &ErrorOperator) -> Result<DenseOperator> {
    check_dim(hilbert_dim(f.size(), g.len()), MAX_DIM)?;
    let p = f.characteristic();
    let mut op = DenseOperator::identity(p, 1);
    for (&a, &b) in g.a.iter().zip(&g.b) {
        op = op.kron(&DenseOperator::slot(f, a, b));
    }
    op.phase
        .iter_mut()
        .for_each(|e| *e = (*e + g.phase) % (2 * p));
    Ok(op)
}

/// Numerical rank of the q² matrices X(a)Z(b) on C^q.
pub fn nice_basis_rank(f: &Field) -> Result<usize> {
    let q = f.size();
    if q > MAX_RANK_Q {
        return Err(Error::DimensionCap {
            dim: q as usize,
            cap: MAX_RANK_Q as usize,
        });
    }
    let qs = q as usize;
    let mut rows = DMatrix::<Complex64>::zeros(qs * qs, qs * qs);
    for a in f.elements() {
        for b in f.elements() {
            let m = DenseOperator::slot(f, a, b).to_matrix();
            let r = a.0 as usize * qs + b.0 as usize;
            for (c, z) in m.iter().enumerate() {
                rows[(r, c)] = *z;
            }
        }
    }
    let sv = rows.singular_values();
    Ok(sv.iter().filter(|&&s| s > RANK_TOL).count())
}

/// Orthonormal basis (as columns) of the joint +1 eigenspace of the lifted
/// stabilizer, from the projector Π_g (1/p) Σ_j g^j.
pub fn fixed_space(stab: &StabilizerGroup) -> Result<DMatrix<Complex64>> {
    let f = stab.field();
    let dim = hilbert_dim(f.size(), stab.n());
    check_dim(dim, MAX_DIM)?;
    let p = f.characteristic();
    let mut proj = DMatrix::<Complex64>::identity(dim, dim);
    for g in stab.generators() {
        let g = realize(f, g)?;
        let mut power = DenseOperator::identity(p, dim);
        let mut acc = DMatrix::<Complex64>::zeros(dim, dim);
        for _ in 0..p {
            acc += power.apply(&proj);
            power = g.mul(&power);
        }
        proj = acc / Complex64::new(p as f64, 0.0);
    }
    Ok(orthonormal_columns(&proj))
}

fn orthonormal_columns(m: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    let mut basis: Vec<nalgebra::DVector<Complex64>> = Vec::new();
    for c in 0..m.ncols() {
        let mut v = m.column(c).into_owned();
        for b in &basis {
            let coeff = b.dotc(&v);
            v -= b * coeff;
        }
        let norm = v.norm();
        if norm > GRAM_SCHMIDT_TOL {
            basis.push(v / Complex64::new(norm, 0.0));
        }
    }
    if basis.is_empty() {
        return DMatrix::zeros(m.nrows(), 0);
    }
    DMatrix::from_columns(&basis)
}

/// Outcome of the detection test on a code space.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Detection {
    /// V†gV = λI.
    Detected(Complex64),
    NotDetected,
}

impl Detection {
    pub fn is_detected(&self) -> bool {
        matches!(self, Detection::Detected(_))
    }
}

/// Whether ⟨c₁|g|c₂⟩ = λ⟨c₁|c₂⟩ on the code space spanned by the columns of `basis`.
pub fn detects(basis: &DMatrix<Complex64>, g: &DenseOperator) -> Result<Detection> {
    check_dim(g.dim(), MAX_DIM)?;
    if basis.nrows() != g.dim() {
        return Err(Error::LengthMismatch {
            expected: g.dim(),
            found: basis.nrows(),
        });
    }
    let k = basis.ncols();
    if k == 0 {
        return Ok(Detection::Detected(Complex64::new(0.0, 0.0)));
    }
    let m = basis.adjoint() * g.apply(basis);
    let lambda = m.trace() / Complex64::new(k as f64, 0.0);
    let residual = (0..k)
        .flat_map(|i| (0..k).map(move |j| (i, j)))
        .map(|(i, j)| {
            let expect = if i == j {
                lambda
            } else {
                Complex64::new(0.0, 0.0)
            };
            (m[(i, j)] - expect).norm()
        })
        .fold(0.0, f64::max);
    Ok(if residual < DETECTION_TOL {
        Detection::Detected(lambda)
    } else {
        Detection::NotDetected
    })
}

/// Code space dimension and the least operator P-weight of an undetected error.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SimulationReport {
    pub dim_q: usize,
    /// Absent when every error is detected (K = 1).
    pub min_undetected_weight: Option<usize>,
    /// (a|b) of the first undetected error of that weight, entries as indices.
    pub witness: Option<(Vec<u32>, Vec<u32>)>,
}

/// Scans every X(a)Z(b) by ascending operator P-weight.
pub fn simulate(poset: &Poset, stab: &StabilizerGroup) -> Result<SimulationReport> {
    let f = stab.field();
    let n = stab.n();
    if poset.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            found: poset.len(),
        });
    }
    check_dim(hilbert_dim(f.size(), n), MAX_SCAN_DIM)?;
    let basis = fixed_space(stab)?;
    let q = f.size();
    let total = (q as u64).pow(2 * n as u32);
    let mut by_weight: Vec<Vec<SympVector>> = vec![Vec::new(); n + 1];
    for idx in 1..total {
        let mut x = idx;
        let v: Vec<Elem> = (0..2 * n)
            .map(|_| {
                let d = (x % q as u64) as u32;
                x /= q as u64;
                Elem(d)
            })
            .collect();
        let sv = SympVector::from_concat(&v)?;
        let w = crate::symplectic::wt_symp(poset, &sv)?;
        by_weight[w].push(sv);
    }
    for (w, vs) in by_weight.iter().enumerate() {
        for sv in vs {
            let g = ErrorOperator::new(sv.a.clone(), sv.b.clone())?;
            if !detects(&basis, &realize(f, &g)?)?.is_detected() {
                let idx = |v: &[Elem]| v.iter().map(|e| e.0).collect();
                return Ok(SimulationReport {
                    dim_q: basis.ncols(),
                    min_undetected_weight: Some(w),
                    witness: Some((idx(&sv.a), idx(&sv.b))),
                });
            }
        }
    }
    Ok(SimulationReport {
        dim_q: basis.ncols(),
        min_undetected_weight: None,
        witness: None,
    })
}

/// The least operator P-weight of an undetected error, by dense simulation.
pub fn min_undetected_weight(poset: &Poset, stab: &StabilizerGroup) -> Result<Option<usize>> {
    Ok(simulate(poset, stab)?.min_undetected_weight)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{AdditiveCode, Alphabet, Linearity};
    use crate::stabilizer::{self, op_mul, params, random_self_orthogonal};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn e(v: &[u32]) -> Vec<Elem> {
        v.iter().map(|&x| Elem(x)).collect()
    }

    #[test]
    fn single_slot_operators() {
        let f = Field::prime(2).unwrap();
        let id = realize(&f, &ErrorOperator::identity(2)).unwrap();
        assert_eq!(id.to_matrix(), DMatrix::identity(4, 4));
        let x = realize(&f, &ErrorOperator::new(e(&[1]), e(&[0])).unwrap())
            .unwrap()
            .to_matrix();
        assert_eq!(x[(1, 0)], Complex64::new(1.0, 0.0));
        assert_eq!(x[(0, 1)], Complex64::new(1.0, 0.0));
        let z = realize(&f, &ErrorOperator::new(e(&[0]), e(&[1])).unwrap())
            .unwrap()
            .to_matrix();
        assert!((z[(1, 1)] + Complex64::new(1.0, 0.0)).norm() < 1e-12);
        assert!(matches!(
            realize(&f, &ErrorOperator::identity(11)),
            Err(Error::DimensionCap {
                dim: 2048,
                cap: 1024
            })
        ));
    }

    #[test]
    fn realization_is_a_homomorphism() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for (p, m) in [(2, 1), (2, 2), (3, 1)] {
            let f = Field::gf(p, m).unwrap();
            let s = f.size();
            for _ in 0..20 {
                let mut op = || ErrorOperator {
                    phase: rng.random_range(0..2 * p),
                    a: (0..2).map(|_| Elem(rng.random_range(0..s))).collect(),
                    b: (0..2).map(|_| Elem(rng.random_range(0..s))).collect(),
                };
                let (g, h) = (op(), op());
                let (rg, rh) = (realize(&f, &g).unwrap(), realize(&f, &h).unwrap());
                assert!(rg.is_monomial() && rg.unitarity_defect() < UNITARY_TOL);
                let prod = realize(&f, &op_mul(&f, &g, &h).unwrap()).unwrap();
                assert_eq!(prod, rg.mul(&rh));
                let dense = rg.to_matrix() * rh.to_matrix();
                assert!((dense - prod.to_matrix()).iter().all(|z| z.norm() < 1e-9));
            }
        }
    }

    #[test]
    fn nice_basis_is_independent() {
        assert_eq!(nice_basis_rank(&Field::prime(2).unwrap()).unwrap(), 4);
        assert_eq!(nice_basis_rank(&Field::prime(3).unwrap()).unwrap(), 9);
        assert_eq!(nice_basis_rank(&Field::gf(2, 2).unwrap()).unwrap(), 16);
    }

    #[test]
    fn fixed_space_examples() {
        let f = Field::prime(2).unwrap();
        assert_eq!(
            fixed_space(&StabilizerGroup::trivial(&f, 2).unwrap())
                .unwrap()
                .ncols(),
            4
        );
        let alph = Alphabet::from_parts(f.clone(), f.clone()).unwrap();
        let c = AdditiveCode::new(alph, Linearity::Full, 4, vec![e(&[1, 1, 0, 0])]).unwrap();
        let s = StabilizerGroup::from_code(c).unwrap();
        let v = fixed_space(&s).unwrap();
        assert_eq!(v.ncols(), 2);
        let g = realize(&f, &s.generators()[0]).unwrap();
        assert!(
            matches!(detects(&v, &g).unwrap(), Detection::Detected(l) if (l - Complex64::new(1.0, 0.0)).norm() < 1e-9)
        );
        let scalar = realize(&f, &ErrorOperator::scalar(2, 1)).unwrap();
        assert!(
            matches!(detects(&v, &scalar).unwrap(), Detection::Detected(l) if (l + Complex64::new(1.0, 0.0)).norm() < 1e-9)
        );
    }

    #[test]
    fn three_one_two() {
        let (poset, stab) = stabilizer::tests::three_one_two();
        let r = simulate(&poset, &stab).unwrap();
        assert_eq!((r.dim_q, r.min_undetected_weight), (2, Some(2)));
        let f = Field::prime(2).unwrap();
        assert_eq!(
            simulate(
                &Poset::antichain(2),
                &StabilizerGroup::trivial(&f, 2).unwrap()
            )
            .unwrap()
            .min_undetected_weight,
            Some(1)
        );
    }

    #[test]
    fn simulation_matches_params() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for q in [2, 3] {
            let f = Field::prime(q).unwrap();
            for _ in 0..15 {
                let n = rng.random_range(1..=2);
                let k = rng.random_range(0..n);
                let c = random_self_orthogonal(&f, n, k, &mut rng).unwrap();
                let s = StabilizerGroup::from_code(c.clone()).unwrap();
                let basis = fixed_space(&s).unwrap();
                assert_eq!(basis.ncols() as u64, (q as u64).pow(s.log_p_k()));
                let poset = Poset::random(n, &mut rng);
                let prm = params(&poset, &s).unwrap();
                if prm.k_above_one() {
                    assert_eq!(min_undetected_weight(&poset, &s).unwrap(), Some(prm.d_p));
                }
            }
        }
    }
}
