//! Symplectic weights on GF(q)^2n, the trace-symplectic, trace-alternating
//! and Hermitian forms, duals under each, the isometry ψ between GF(q²)^n
//! and GF(q)^2n, and symplectic weight enumerators.

use serde::Serialize;

use crate::code::{ascend, descend, AdditiveCode, Alphabet, Linearity, Metric};
use crate::error::{Error, Result};
use crate::gf::{Elem, Field, QuadExt};
use crate::linalg::Echelon;
use crate::poset::Poset;

/// A vector `(a|b)` of GF(q)^2n.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SympVector {
    pub a: Vec<Elem>,
    pub b: Vec<Elem>,
}

impl SympVector {
    pub fn new(a: Vec<Elem>, b: Vec<Elem>) -> Result<SympVector> {
        if a.len() != b.len() {
            return Err(Error::LengthMismatch {
                expected: a.len(),
                found: b.len(),
            });
        }
        Ok(SympVector { a, b })
    }

    pub fn zero(n: usize) -> SympVector {
        SympVector {
            a: vec![Elem::ZERO; n],
            b: vec![Elem::ZERO; n],
        }
    }

    /// Splits a length-2n vector into its halves.
    pub fn from_concat(v: &[Elem]) -> Result<SympVector> {
        if !v.len().is_multiple_of(2) {
            return Err(Error::LengthMismatch {
                expected: v.len() + 1,
                found: v.len(),
            });
        }
        let (a, b) = v.split_at(v.len() / 2);
        Ok(SympVector {
            a: a.to_vec(),
            b: b.to_vec(),
        })
    }

    pub fn concat(&self) -> Vec<Elem> {
        self.a.iter().chain(&self.b).copied().collect()
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    pub fn add(&self, f: &Field, other: &SympVector) -> SympVector {
        let sum = |x: &[Elem], y: &[Elem]| x.iter().zip(y).map(|(&u, &v)| f.add(u, v)).collect();
        SympVector {
            a: sum(&self.a, &other.a),
            b: sum(&self.b, &other.b),
        }
    }
}

fn dot(f: &Field, x: &[Elem], y: &[Elem]) -> Elem {
    x.iter()
        .zip(y)
        .fold(Elem::ZERO, |acc, (&u, &v)| f.add(acc, f.mul(u, v)))
}

fn same_len(n: usize, m: usize) -> Result<()> {
    if n != m {
        return Err(Error::LengthMismatch {
            expected: n,
            found: m,
        });
    }
    Ok(())
}

/// |⟨supp a⟩ ∪ ⟨supp b⟩|.
pub fn wt_symp(poset: &Poset, v: &SympVector) -> Result<usize> {
    same_len(poset.len(), v.len())?;
    Ok(Metric::Symplectic(poset).weight(&v.concat()))
}

/// tr(b·a' − b'·a).
pub fn form_symp(f: &Field, u: &SympVector, v: &SympVector) -> Result<Elem> {
    same_len(u.len(), v.len())?;
    Ok(f.trace_to_prime(f.sub(dot(f, &u.b, &v.a), dot(f, &v.b, &u.a))))
}

/// tr_{q/p}((v^q·w − v·w^q) / (γ^q − γ)).
///
/// The numerator is ordered so that ψ carries this form exactly onto the
/// trace-symplectic one; the opposite order gives its negative when p is odd.
pub fn form_alt(qe: &QuadExt, v: &[Elem], w: &[Elem]) -> Result<Elem> {
    same_len(v.len(), w.len())?;
    let f = qe.field();
    let conj = |x: &[Elem]| x.iter().map(|&e| qe.conj(e)).collect::<Vec<_>>();
    let num = f.sub(dot(f, &conj(v), w), dot(f, v, &conj(w)));
    let gamma = qe.gamma();
    let den = f.sub(qe.conj(gamma), gamma);
    let quotient = f.div(num, den)?;
    if quotient.0 >= qe.q() {
        return Err(Error::QuotientNotInBaseField);
    }
    Ok(qe.base().trace_to_prime(quotient))
}

/// Σ a_i^q b_i.
pub fn form_herm(qe: &QuadExt, a: &[Elem], b: &[Elem]) -> Result<Elem> {
    same_len(a.len(), b.len())?;
    let f = qe.field();
    Ok(a.iter()
        .zip(b)
        .fold(Elem::ZERO, |acc, (&x, &y)| f.add(acc, f.mul(qe.conj(x), y))))
}

/// Splits every entry as `a + bγ`.
pub fn psi(qe: &QuadExt, v: &[Elem]) -> SympVector {
    let (a, b) = v.iter().map(|&x| qe.split(x)).unzip();
    SympVector { a, b }
}

pub fn psi_inv(qe: &QuadExt, s: &SympVector) -> Vec<Elem> {
    s.a.iter().zip(&s.b).map(|(&a, &b)| qe.join(a, b)).collect()
}

/// The alphabet GF(q) of a symplectic ambient space.
pub fn symp_alphabet(qe: &QuadExt) -> Alphabet {
    Alphabet::from_parts(qe.base().clone(), qe.base().clone()).expect("same field")
}

/// The alphabet GF(q²) over GF(q).
pub fn quad_alphabet(qe: &QuadExt) -> Alphabet {
    Alphabet::from_parts(qe.base().clone(), qe.field().clone()).expect("degree-2 extension")
}

/// The GF(q²) ⊃ GF(q) pair of an alphabet of relative degree 2.
pub fn quad_of(alphabet: &Alphabet) -> Option<QuadExt> {
    if alphabet.t() != 2 {
        return None;
    }
    QuadExt::from_field(alphabet.field().clone())
}

/// ψ(D) ⊆ GF(q)^2n for D ⊆ GF(q²)^n, with the widest linearity it keeps.
pub fn psi_code(qe: &QuadExt, d: &AdditiveCode) -> Result<AdditiveCode> {
    let gens = d
        .prime_basis()
        .iter()
        .map(|v| psi(qe, v).concat())
        .collect();
    let c = AdditiveCode::new(symp_alphabet(qe), Linearity::Prime, 2 * d.len(), gens)?;
    Ok(c.with_cap(d.cap()).detect_linearity())
}

/// ψ⁻¹(C) ⊆ GF(q²)^n for C ⊆ GF(q)^2n.
pub fn psi_inv_code(qe: &QuadExt, c: &AdditiveCode) -> Result<AdditiveCode> {
    let mut gens = Vec::new();
    for v in c.prime_basis() {
        gens.push(psi_inv(qe, &SympVector::from_concat(&v)?));
    }
    let d = AdditiveCode::new(quad_alphabet(qe), Linearity::Prime, c.len() / 2, gens)?;
    Ok(d.with_cap(c.cap()).detect_linearity())
}

/// The pairing a dual is taken against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Form {
    /// Trace-symplectic on GF(q)^2n.
    Symp,
    /// Trace-alternating on GF(q²)^n.
    Alt,
    /// Hermitian on GF(q²)^n; only GF(q²)-linear codes.
    Herm,
}

impl Form {
    fn name(self) -> &'static str {
        match self {
            Form::Symp => "symp",
            Form::Alt => "alt",
            Form::Herm => "herm",
        }
    }
}

type Pairing = Box<dyn Fn(&[Elem], &[Elem]) -> Result<Elem>>;

/// All vectors pairing to zero with every codeword under `form`, as a
/// GF(p)-linear code.
pub fn dual(d: &AdditiveCode, form: Form) -> Result<AdditiveCode> {
    let mismatch = |reason| Error::FormAmbientMismatch {
        form: form.name(),
        reason,
    };
    let alphabet = d.alphabet().clone();
    let f = alphabet.field().clone();
    let (p, deg) = (f.characteristic(), f.degree());
    let n = d.len();
    let pairing: Pairing = match form {
        Form::Symp => {
            if alphabet.t() != 1 || !n.is_multiple_of(2) {
                return Err(mismatch("needs GF(q)^2n"));
            }
            let f = f.clone();
            Box::new(move |x, y| {
                form_symp(
                    &f,
                    &SympVector::from_concat(x)?,
                    &SympVector::from_concat(y)?,
                )
            })
        }
        Form::Alt | Form::Herm => {
            let qe = quad_of(&alphabet).ok_or_else(|| mismatch("needs GF(q²)^n"))?;
            if form == Form::Herm {
                if !d.is_closed_under(Linearity::Full) {
                    return Err(mismatch("needs a GF(q²)-linear code"));
                }
                Box::new(move |x, y| form_herm(&qe, x, y))
            } else {
                Box::new(move |x, y| form_alt(&qe, x, y))
            }
        }
    };
    // Constraint matrix: one row per (basis word, output digit), one column
    // per GF(p)-coordinate of the ambient space.
    let width = n * deg as usize;
    let units: Vec<Vec<Elem>> = (0..width)
        .map(|c| {
            let mut v = vec![Elem::ZERO; width];
            v[c] = Elem::ONE;
            ascend(&v, p, deg)
        })
        .collect();
    let mut rows = Vec::new();
    for w in d.prime_basis() {
        let values = units
            .iter()
            .map(|u| pairing(&w, u))
            .collect::<Result<Vec<_>>>()?;
        let digits: Vec<Vec<Elem>> = values.iter().map(|&x| descend(&[x], p, deg)).collect();
        for j in 0..deg as usize {
            rows.push(digits.iter().map(|ds| ds[j]).collect());
        }
    }
    let pf = f.prime_field();
    let kernel = Echelon::new(&pf, rows, width).kernel(&pf);
    let gens = kernel.iter().map(|x| ascend(x, p, deg)).collect();
    Ok(AdditiveCode::new(alphabet, Linearity::Prime, n, gens)?.with_cap(d.cap()))
}

/// Whether the code lies inside its own dual under `form`.
pub fn is_self_orthogonal(c: &AdditiveCode, form: Form) -> Result<bool> {
    Ok(c.is_subcode_of(&dual(c, form)?))
}

/// Counts A_w of codewords of antichain symplectic weight w.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightEnumerator {
    pub coeffs: Vec<u64>,
}

impl WeightEnumerator {
    pub fn total(&self) -> u64 {
        self.coeffs.iter().sum()
    }
}

pub fn weight_enumerator_symp(c: &AdditiveCode) -> Result<WeightEnumerator> {
    if c.alphabet().t() != 1 || !c.len().is_multiple_of(2) {
        return Err(Error::FormAmbientMismatch {
            form: "symp",
            reason: "needs GF(q)^2n",
        });
    }
    let n = c.len() / 2;
    let poset = Poset::antichain(n);
    let metric = Metric::Symplectic(&poset);
    let mut coeffs = vec![0u64; n + 1];
    c.for_each_word(|w| coeffs[metric.weight(w)] += 1)?;
    Ok(WeightEnumerator { coeffs })
}

/// Both enumerators and the verdict of the MacWilliams identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MacWilliamsReport {
    pub a: Vec<u64>,
    pub b: Vec<u64>,
    /// |C|·B(z) = Σ A_w (1−z)^w (1+(q²−1)z)^(n−w), coefficientwise.
    pub identity_holds: bool,
    /// B(1) = q^2n / |C|.
    pub count_holds: bool,
}

impl MacWilliamsReport {
    pub fn holds(&self) -> bool {
        self.identity_holds && self.count_holds
    }
}

fn poly_mul(x: &[i128], y: &[i128]) -> Vec<i128> {
    let mut out = vec![0i128; x.len() + y.len() - 1];
    for (i, &a) in x.iter().enumerate() {
        for (j, &b) in y.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    out
}

fn poly_pow(x: &[i128], e: usize) -> Vec<i128> {
    (0..e).fold(vec![1], |acc, _| poly_mul(&acc, x))
}

/// Verifies the symplectic MacWilliams identity between C and C^⊥s exactly.
pub fn macwilliams_check(c: &AdditiveCode) -> Result<MacWilliamsReport> {
    let cd = dual(c, Form::Symp)?;
    if !c.is_subcode_of(&cd) {
        return Err(Error::NotSelfOrthogonal);
    }
    let a = weight_enumerator_symp(c)?.coeffs;
    let b = weight_enumerator_symp(&cd)?.coeffs;
    let n = c.len() / 2;
    let q2 = (c.field().size() as i128).pow(2);
    let mut rhs = vec![0i128; n + 1];
    for (w, &aw) in a.iter().enumerate() {
        let term = poly_mul(&poly_pow(&[1, -1], w), &poly_pow(&[1, q2 - 1], n - w));
        for (r, t) in rhs.iter_mut().zip(term) {
            *r += aw as i128 * t;
        }
    }
    let size = c.size() as i128;
    let identity_holds = b.iter().zip(&rhs).all(|(&bw, &r)| size * bw as i128 == r);
    let total: u64 = b.iter().sum();
    let count_holds = (total as i128) * size == q2.pow(n as u32);
    Ok(MacWilliamsReport {
        a,
        b,
        identity_holds,
        count_holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::tests::figure_one;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn e(v: &[u32]) -> Vec<Elem> {
        v.iter().map(|&x| Elem(x)).collect()
    }

    fn gf(p: u32) -> std::sync::Arc<Field> {
        Field::prime(p).unwrap()
    }

    #[test]
    fn weights() {
        let p = figure_one();
        let mut a = vec![Elem::ZERO; 8];
        let mut b = vec![Elem::ZERO; 8];
        a[4] = Elem::ONE;
        b[5] = Elem::ONE;
        assert_eq!(wt_symp(&p, &SympVector::new(a, b).unwrap()).unwrap(), 6);
        assert_eq!(wt_symp(&p, &SympVector::zero(8)).unwrap(), 0);
        let s = SympVector::new(e(&[1, 0, 0]), e(&[1, 0, 1])).unwrap();
        assert_eq!(wt_symp(&Poset::antichain(3), &s).unwrap(), 2);
    }

    #[test]
    fn symp_examples() {
        let f = gf(2);
        let u = SympVector::new(e(&[1]), e(&[0])).unwrap();
        let v = SympVector::new(e(&[0]), e(&[1])).unwrap();
        assert_eq!(form_symp(&f, &u, &v).unwrap(), Elem(1));
        assert_eq!(form_symp(&f, &u, &u).unwrap(), Elem(0));
    }

    #[test]
    fn alt_and_herm_examples() {
        let qe = QuadExt::new(&gf(2)).unwrap();
        let g = qe.gamma();
        let w = Elem(2);
        assert_eq!(form_herm(&qe, &[w], &[w]).unwrap(), Elem::ONE);
        // Direct evaluation: (1·γ² − 1·γ)/(γ² − γ) = 1, trace over GF(2) of 1 is 1.
        assert_eq!(form_alt(&qe, &[Elem::ONE], &[g]).unwrap(), Elem::ONE);
        assert_eq!(form_alt(&qe, &[g], &[g]).unwrap(), Elem::ZERO);
        assert_eq!(
            psi(&qe, &[Elem::ONE, g]),
            SympVector::new(e(&[1, 0]), e(&[0, 1])).unwrap()
        );
    }

    #[test]
    fn duals() {
        let qe = QuadExt::new(&gf(2)).unwrap();
        let alph = quad_alphabet(&qe);
        let d = AdditiveCode::new(alph.clone(), Linearity::Full, 2, vec![e(&[1, 1])]).unwrap();
        let h = dual(&d, Form::Herm).unwrap();
        assert_eq!(h, d);
        assert_eq!(dual(&d, Form::Alt).unwrap(), d);
        let zero = AdditiveCode::zero(alph.clone(), 2).unwrap();
        let full = AdditiveCode::full(alph.clone(), 2).unwrap();
        assert_eq!(dual(&zero, Form::Alt).unwrap(), full);
        assert!(dual(&full, Form::Alt).unwrap().is_zero());
        assert!(matches!(
            dual(&d, Form::Symp),
            Err(Error::FormAmbientMismatch { .. })
        ));
        let additive = AdditiveCode::new(alph, Linearity::Prime, 2, vec![e(&[1, 2])]).unwrap();
        assert!(matches!(
            dual(&additive, Form::Herm),
            Err(Error::FormAmbientMismatch { .. })
        ));
    }

    #[test]
    fn dual_is_involution_and_counts() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for q in [2, 3] {
            let qe = QuadExt::new(&gf(q)).unwrap();
            for _ in 0..20 {
                let n = rng.random_range(1..=3);
                let k = rng.random_range(0..=2 * n);
                let c =
                    AdditiveCode::random(symp_alphabet(&qe), Linearity::Prime, 2 * n, k, &mut rng)
                        .unwrap();
                let cd = dual(&c, Form::Symp).unwrap();
                assert_eq!(c.log_p_size() + cd.log_p_size(), 2 * n as u32);
                assert_eq!(dual(&cd, Form::Symp).unwrap(), c);
                let d = AdditiveCode::random(quad_alphabet(&qe), Linearity::Prime, n, k, &mut rng)
                    .unwrap();
                let da = dual(&d, Form::Alt).unwrap();
                assert_eq!(dual(&da, Form::Alt).unwrap(), d);
                assert_eq!(
                    psi_code(&qe, &da).unwrap(),
                    dual(&psi_code(&qe, &d).unwrap(), Form::Symp).unwrap()
                );
            }
        }
    }

    #[test]
    fn enumerators() {
        let qe = QuadExt::new(&gf(2)).unwrap();
        let alph = symp_alphabet(&qe);
        let full = AdditiveCode::full(alph.clone(), 2).unwrap();
        assert_eq!(weight_enumerator_symp(&full).unwrap().coeffs, vec![1, 3]);
        let zero = AdditiveCode::zero(alph.clone(), 4).unwrap();
        assert_eq!(weight_enumerator_symp(&zero).unwrap().coeffs, vec![1, 0, 0]);
        let r = macwilliams_check(&zero).unwrap();
        assert!(r.holds());
        assert_eq!(r.b, vec![1, 6, 9]);
        let c =
            AdditiveCode::new(alph.clone(), Linearity::Full, 4, vec![e(&[1, 1, 0, 0])]).unwrap();
        let r = macwilliams_check(&c).unwrap();
        assert!(r.holds());
        assert_eq!(r.b.iter().sum::<u64>(), 8);
        let bad =
            AdditiveCode::new(alph, Linearity::Full, 2, vec![e(&[1, 0]), e(&[0, 1])]).unwrap();
        assert_eq!(
            macwilliams_check(&bad).unwrap_err(),
            Error::NotSelfOrthogonal
        );
    }

    proptest! {
        #[test]
        fn symp_form_is_bilinear_and_alternating(
            xs in proptest::collection::vec(0u32..9, 18),
        ) {
            let f = Field::gf(3, 2).unwrap();
            let v = |i: usize| SympVector::new(e(&xs[i..i + 3]), e(&xs[i + 3..i + 6])).unwrap();
            let (u, w, z) = (v(0), v(6), v(12));
            let lhs = form_symp(&f, &u.add(&f, &w), &z).unwrap();
            let rhs = f.add(form_symp(&f, &u, &z).unwrap(), form_symp(&f, &w, &z).unwrap());
            prop_assert_eq!(lhs, rhs);
            prop_assert_eq!(form_symp(&f, &u, &u).unwrap(), Elem::ZERO);
            prop_assert_eq!(form_symp(&f, &u, &w).unwrap(), f.neg(form_symp(&f, &w, &u).unwrap()));
        }

        #[test]
        fn herm_is_sesquilinear(xs in proptest::collection::vec(0u32..9, 7)) {
            let qe = QuadExt::new(&gf(3)).unwrap();
            let f = qe.field().clone();
            let (a, b, c) = (e(&xs[0..2]), e(&xs[2..4]), e(&xs[4..6]));
            let s = Elem(xs[6]);
            let sum: Vec<Elem> = a.iter().zip(&c).map(|(&x, &y)| f.add(x, y)).collect();
            let sa: Vec<Elem> = a.iter().map(|&x| f.mul(s, x)).collect();
            prop_assert_eq!(
                form_herm(&qe, &sum, &b).unwrap(),
                f.add(form_herm(&qe, &a, &b).unwrap(), form_herm(&qe, &c, &b).unwrap())
            );
            prop_assert_eq!(form_herm(&qe, &sa, &b).unwrap(), f.mul(qe.conj(s), form_herm(&qe, &a, &b).unwrap()));
            prop_assert_eq!(form_herm(&qe, &b, &sa).unwrap(), f.mul(s, form_herm(&qe, &b, &a).unwrap()));
        }
    }
}
