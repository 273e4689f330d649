//! Error operators, stabilizer groups built from self-orthogonal codes, their
//! [[n, K, d_P]] parameters, and verifiers for the quantum Singleton bound,
//! the MDS characterizations and the MDS construction by poset search.
//!
//! Phases are stored as exponents of ζ = e^{iπ/p} modulo 2p, so ξ = ζ².
//! Over odd p only even exponents ever arise. Over p = 2 the lift of a
//! vector (a|b) with tr(a·b) = 1 needs a factor i = ζ to have order 2.

use std::collections::BTreeSet;
use std::sync::Arc;

use num_rational::Ratio;
use rand::Rng;
use serde::Serialize;

use crate::code::{self, AdditiveCode, Alphabet, Linearity, Metric};
use crate::error::{Error, Result};
use crate::gf::{Elem, Field, QuadExt};
use crate::poset::{Ideal, Poset};
use crate::symplectic::{self, dual, form_symp, Form, SympVector};

/// ζ^phase X(a) Z(b) with ζ = e^{iπ/p}.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ErrorOperator {
    pub phase: u32,
    pub a: Vec<Elem>,
    pub b: Vec<Elem>,
}

fn trace_dot(f: &Field, x: &[Elem], y: &[Elem]) -> u32 {
    let d = x
        .iter()
        .zip(y)
        .fold(Elem::ZERO, |acc, (&u, &v)| f.add(acc, f.mul(u, v)));
    f.trace_to_prime(d).0
}

impl ErrorOperator {
    pub fn identity(n: usize) -> ErrorOperator {
        ErrorOperator {
            phase: 0,
            a: vec![Elem::ZERO; n],
            b: vec![Elem::ZERO; n],
        }
    }

    /// ξ^c · I.
    pub fn scalar(n: usize, c: u32) -> ErrorOperator {
        ErrorOperator {
            phase: 2 * c,
            ..ErrorOperator::identity(n)
        }
    }

    /// X(a)Z(b) with trivial phase.
    pub fn new(a: Vec<Elem>, b: Vec<Elem>) -> Result<ErrorOperator> {
        if a.len() != b.len() {
            return Err(Error::LengthMismatch {
                expected: a.len(),
                found: b.len(),
            });
        }
        Ok(ErrorOperator { phase: 0, a, b })
    }

    /// The canonical lift of `v`: trivial phase for odd p, and ζ^{tr(a·b)}
    /// for p = 2 so that the lift has order p.
    pub fn lift(f: &Field, v: &SympVector) -> ErrorOperator {
        let phase = if f.characteristic() == 2 {
            trace_dot(f, &v.a, &v.b)
        } else {
            0
        };
        ErrorOperator {
            phase,
            a: v.a.clone(),
            b: v.b.clone(),
        }
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    pub fn is_scalar(&self) -> bool {
        self.a.iter().chain(&self.b).all(|x| x.is_zero())
    }

    /// φ: forget the phase.
    pub fn phi(&self) -> SympVector {
        SympVector {
            a: self.a.clone(),
            b: self.b.clone(),
        }
    }

    /// Operator P-weight: the symplectic P-weight of φ(g).
    pub fn weight(&self, poset: &Poset) -> Result<usize> {
        symplectic::wt_symp(poset, &self.phi())
    }
}

/// g·h, using Z(b)X(a') = ξ^{tr(b·a')} X(a')Z(b).
pub fn op_mul(f: &Field, g: &ErrorOperator, h: &ErrorOperator) -> Result<ErrorOperator> {
    if g.len() != h.len() {
        return Err(Error::LengthMismatch {
            expected: g.len(),
            found: h.len(),
        });
    }
    let p = f.characteristic();
    let sum = |x: &[Elem], y: &[Elem]| x.iter().zip(y).map(|(&u, &v)| f.add(u, v)).collect();
    Ok(ErrorOperator {
        phase: (g.phase + h.phase + 2 * trace_dot(f, &g.b, &h.a)) % (2 * p),
        a: sum(&g.a, &h.a),
        b: sum(&g.b, &h.b),
    })
}

pub fn op_pow(f: &Field, g: &ErrorOperator, e: u32) -> ErrorOperator {
    (0..e).fold(ErrorOperator::identity(g.len()), |acc, _| {
        op_mul(f, &acc, g).expect("same length")
    })
}

/// Result of comparing gh with hg.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Commutation {
    pub commute: bool,
    /// e with gh = ξ^e hg.
    pub phase: u32,
}

pub fn commute_check(f: &Field, g: &ErrorOperator, h: &ErrorOperator) -> Result<Commutation> {
    let e = form_symp(f, &g.phi(), &h.phi())?.0;
    Ok(Commutation {
        commute: e == 0,
        phase: e,
    })
}

/// An abelian subgroup of the error group, given by a self-orthogonal code
/// C ⊆ GF(q)^2n and the canonical lifts of a GF(p)-basis of C.
#[derive(Clone, Debug)]
pub struct StabilizerGroup {
    code: AdditiveCode,
    quad: QuadExt,
    generators: Vec<ErrorOperator>,
}

impl StabilizerGroup {
    pub fn from_code(c: AdditiveCode) -> Result<StabilizerGroup> {
        if !symplectic::is_self_orthogonal(&c, Form::Symp)? {
            return Err(Error::NotSelfOrthogonal);
        }
        let f = c.field().clone();
        let quad = QuadExt::new(&f)?;
        let mut generators = Vec::new();
        for v in c.prime_basis() {
            generators.push(ErrorOperator::lift(&f, &SympVector::from_concat(&v)?));
        }
        Ok(StabilizerGroup {
            code: c,
            quad,
            generators,
        })
    }

    /// The stabilizer with φ(S) = ψ(D) for an additive D ⊆ GF(q²)^n.
    pub fn from_additive(d: &AdditiveCode) -> Result<StabilizerGroup> {
        let quad = symplectic::quad_of(d.alphabet()).ok_or(Error::FormAmbientMismatch {
            form: "alt",
            reason: "needs GF(q²)^n",
        })?;
        StabilizerGroup::from_code(symplectic::psi_code(&quad, d)?)
    }

    pub fn trivial(field: &Arc<Field>, n: usize) -> Result<StabilizerGroup> {
        let alphabet = Alphabet::from_parts(field.clone(), field.clone()).expect("same field");
        StabilizerGroup::from_code(AdditiveCode::zero(alphabet, 2 * n)?)
    }

    /// C = φ(S).
    pub fn code(&self) -> &AdditiveCode {
        &self.code
    }

    pub fn field(&self) -> &Arc<Field> {
        self.code.field()
    }

    pub fn quad(&self) -> &QuadExt {
        &self.quad
    }

    pub fn generators(&self) -> &[ErrorOperator] {
        &self.generators
    }

    pub fn n(&self) -> usize {
        self.code.len() / 2
    }

    /// log_p K = n·m − log_p |C|.
    pub fn log_p_k(&self) -> u32 {
        self.n() as u32 * self.field().degree() - self.code.log_p_size()
    }

    /// D = ψ⁻¹(C) ⊆ GF(q²)^n.
    pub fn additive(&self) -> Result<AdditiveCode> {
        symplectic::psi_inv_code(&self.quad, &self.code)
    }

    /// Every element of S, in odometer order over generator exponents.
    pub fn elements(&self) -> Vec<ErrorOperator> {
        let f = self.field();
        let mut out = vec![ErrorOperator::identity(self.n())];
        for g in &self.generators {
            let powers: Vec<ErrorOperator> =
                (1..f.characteristic()).map(|e| op_pow(f, g, e)).collect();
            let mut next = out.clone();
            for s in &out {
                for gp in &powers {
                    next.push(op_mul(f, s, gp).expect("same length"));
                }
            }
            out = next;
        }
        out
    }
}

/// Random self-orthogonal C ⊆ GF(q)^2n with up to `k` GF(p)-generators,
/// grown one vector of C^⊥s \ C at a time.
pub fn random_self_orthogonal<R: Rng + ?Sized>(
    field: &Arc<Field>,
    n: usize,
    k: usize,
    rng: &mut R,
) -> Result<AdditiveCode> {
    let alphabet = Alphabet::from_parts(field.clone(), field.clone()).expect("same field");
    let p = field.characteristic();
    let mut c = AdditiveCode::zero(alphabet.clone(), 2 * n)?;
    for _ in 0..k {
        let perp = dual(&c, Form::Symp)?;
        if perp == c {
            break;
        }
        let basis = perp.prime_basis();
        let v = loop {
            let mut v = vec![Elem::ZERO; 2 * n];
            for b in &basis {
                let s = Elem(rng.random_range(0..p));
                code::add_into(field, &mut v, &code::scale(field, s, b));
            }
            if !c.contains(&v) {
                break v;
            }
        };
        let mut gens = c.prime_basis();
        gens.push(v);
        c = AdditiveCode::new(alphabet.clone(), Linearity::Prime, 2 * n, gens)?;
    }
    Ok(c)
}

/// Distinct symplectic supports of the nonzero words of C and of C^⊥s \ C.
///
/// Weights under any poset only depend on these masks, so one scan serves
/// every poset.
#[derive(Clone, Debug)]
pub struct SupportProfile {
    pub inside: BTreeSet<u64>,
    pub outside: BTreeSet<u64>,
    pub dual_nonzero: BTreeSet<u64>,
}

impl SupportProfile {
    pub fn new(stab: &StabilizerGroup) -> Result<SupportProfile> {
        let c = stab.code();
        let perp = dual(c, Form::Symp)?;
        let n = stab.n();
        let antichain = Poset::antichain(n);
        let metric = Metric::Symplectic(&antichain);
        let (mut inside, mut outside, mut dual_nonzero) =
            (BTreeSet::new(), BTreeSet::new(), BTreeSet::new());
        perp.for_each_word(|w| {
            let s = metric.support(w);
            if s == 0 {
                return;
            }
            dual_nonzero.insert(s);
            if c.contains(w) {
                inside.insert(s);
            } else {
                outside.insert(s);
            }
        })?;
        Ok(SupportProfile {
            inside,
            outside,
            dual_nonzero,
        })
    }

    fn min_weight(poset: &Poset, masks: &BTreeSet<u64>) -> Option<usize> {
        masks.iter().map(|&m| poset.ideal_of_mask(m).len()).min()
    }

    pub fn params(&self, poset: &Poset, stab: &StabilizerGroup) -> Result<StabCodeParams> {
        let n = stab.n();
        if poset.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                found: poset.len(),
            });
        }
        let log_p_k = stab.log_p_k();
        let k_one = log_p_k == 0;
        let source = if k_one {
            &self.dual_nonzero
        } else {
            &self.outside
        };
        let d_p = Self::min_weight(poset, source).ok_or(Error::TrivialCode)?;
        let pure = Self::min_weight(poset, &self.inside).is_none_or(|w| w >= d_p);
        let f = stab.field();
        Ok(StabCodeParams {
            n,
            p: f.characteristic(),
            m: f.degree(),
            log_p_k,
            d_p,
            pure,
            k_one_convention: k_one,
            dual_distance: Self::min_weight(poset, &self.dual_nonzero).ok_or(Error::TrivialCode)?,
        })
    }
}

/// [[n, K, d_P]]_q with K = p^log_p_k.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabCodeParams {
    pub n: usize,
    pub p: u32,
    /// q = p^m.
    pub m: u32,
    pub log_p_k: u32,
    pub d_p: usize,
    pub pure: bool,
    /// K = 1: d_p is the minimum nonzero weight of C^⊥s = C.
    pub k_one_convention: bool,
    /// Minimum nonzero symplectic P-weight of all of C^⊥s. Equals d_p for
    /// pure codes and can be smaller otherwise.
    pub dual_distance: usize,
}

impl StabCodeParams {
    pub fn q(&self) -> u32 {
        self.p.pow(self.m)
    }

    pub fn log_q_k(&self) -> Ratio<u32> {
        Ratio::new(self.log_p_k, self.m)
    }

    pub fn k_above_one(&self) -> bool {
        self.log_p_k > 0
    }

    fn slack(&self, d: usize) -> Result<i64> {
        if !self.k_above_one() {
            return Err(Error::KNotAboveOne);
        }
        let bound = self.m as i64 * (self.n as i64 - 2 * d as i64 + 2);
        Ok(bound - self.log_p_k as i64)
    }

    fn singleton_slack(&self) -> Result<i64> {
        self.slack(self.d_p)
    }
}

impl std::fmt::Display for StabCodeParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "[[{}, {}^{}, {}]]_{}",
            self.n,
            self.p,
            self.log_p_k,
            self.d_p,
            self.q()
        )
    }
}

/// Parameters of the stabilizer code of `stab` under `poset`.
pub fn params(poset: &Poset, stab: &StabilizerGroup) -> Result<StabCodeParams> {
    SupportProfile::new(stab)?.params(poset, stab)
}

/// log_q K ≤ n − 2 d_P + 2.
pub fn singleton_q_check(params: &StabCodeParams) -> Result<bool> {
    Ok(params.singleton_slack()? >= 0)
}

/// log_q K ≤ n − 2 d + 2 with d the minimum weight of all of C^⊥s.
///
/// This weaker form holds for every stabilizer code. The bound in terms of
/// d_P can fail for impure codes: on two slots with 2 below 1, S = ⟨Y(e_2)⟩
/// has d_P = 2 and K = 2 > q^0.
pub fn singleton_dual_check(params: &StabCodeParams) -> Result<bool> {
    Ok(params.slack(params.dual_distance)? >= 0)
}

/// Equality in the quantum Singleton bound.
pub fn is_mds_stabilizer(params: &StabCodeParams) -> Result<bool> {
    Ok(params.singleton_slack()? == 0)
}

fn require_pure(params: &StabCodeParams) -> Result<()> {
    if !params.k_above_one() {
        return Err(Error::KNotAboveOne);
    }
    if !params.pure {
        return Err(Error::NotPure);
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Theorem3Report {
    pub params: StabCodeParams,
    pub mds_stabilizer: bool,
    pub dual_is_mds: bool,
    /// Part (1): the stabilizer is MDS iff D^⊥a is an MDS additive code.
    pub part1_holds: bool,
    /// d_P(D), absent when D = {0}.
    pub d_p_of_d: Option<usize>,
    /// Part (2) premise: MDS and n − d_P + 2 ≤ d_P(D).
    pub part2_applies: bool,
    pub d_is_mds: Option<bool>,
    pub part2_holds: bool,
}

impl Theorem3Report {
    pub fn holds(&self) -> bool {
        self.part1_holds && self.part2_holds
    }
}

pub fn theorem3_verify(poset: &Poset, stab: &StabilizerGroup) -> Result<Theorem3Report> {
    let params = params(poset, stab)?;
    require_pure(&params)?;
    let d = stab.additive()?;
    let da = dual(&d, Form::Alt)?;
    let mds_stabilizer = is_mds_stabilizer(&params)?;
    let dual_is_mds = code::is_mds(poset, &da)?;
    let d_p_of_d = if d.is_zero() {
        None
    } else {
        Some(code::min_distance(poset, &d)?)
    };
    let part2_applies =
        mds_stabilizer && d_p_of_d.is_some_and(|dd| params.n + 2 <= dd + params.d_p);
    let d_is_mds = if part2_applies {
        Some(code::is_mds(poset, &d)?)
    } else {
        None
    };
    Ok(Theorem3Report {
        part1_holds: mds_stabilizer == dual_is_mds,
        part2_holds: d_is_mds != Some(false),
        params,
        mds_stabilizer,
        dual_is_mds,
        d_p_of_d,
        part2_applies,
        d_is_mds,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Theorem5Report {
    pub params: StabCodeParams,
    pub mds_stabilizer: bool,
    pub log_q_k_integral: bool,
    /// log_{q²} |D^⊥a|, as a reduced fraction.
    pub dual_dimension: (u32, u32),
    /// n − log_{q²}|D^⊥a| when that is an integer.
    pub ideal_size: Option<usize>,
    pub ideals_checked: usize,
    pub all_perfect: bool,
    /// First ideal of the right size on which D^⊥a is not perfect.
    pub witness: Option<Ideal>,
    pub agree: bool,
}

/// MDS ⇔ [log_q K integral and D^⊥a is I-perfect for every ideal of size
/// n − log_{q²}|D^⊥a|], where the size must itself be an integer.
pub fn theorem5_verify(poset: &Poset, stab: &StabilizerGroup) -> Result<Theorem5Report> {
    let params = params(poset, stab)?;
    require_pure(&params)?;
    let da = dual(&stab.additive()?, Form::Alt)?;
    let mds_stabilizer = is_mds_stabilizer(&params)?;
    let log_q_k_integral = params.log_q_k().is_integer();
    let dim = code::q_dimension(&da);
    let mut report = Theorem5Report {
        params,
        mds_stabilizer,
        log_q_k_integral,
        dual_dimension: (*dim.numer(), *dim.denom()),
        ideal_size: None,
        ideals_checked: 0,
        all_perfect: false,
        witness: None,
        agree: false,
    };
    if dim.is_integer() && dim.to_integer() as usize <= report.params.n {
        let size = report.params.n - dim.to_integer() as usize;
        report.ideal_size = Some(size);
        report.all_perfect = true;
        for ideal in poset.ideals_of_size(size) {
            report.ideals_checked += 1;
            if !code::is_i_perfect(&da, poset, ideal) {
                report.all_perfect = false;
                report.witness = Some(ideal);
                break;
            }
        }
    }
    report.agree = report.mds_stabilizer == (log_q_k_integral && report.all_perfect);
    Ok(report)
}

/// A poset and the pure MDS stabilizer code it makes of ψ(E).
#[derive(Clone, Debug)]
pub struct MdsConstruction {
    pub poset: Poset,
    pub stabilizer: StabilizerGroup,
    pub params: StabCodeParams,
    pub posets_tried: usize,
}

/// Largest n for which the search runs over every labeled poset.
pub const EXHAUSTIVE_SEARCH_MAX_N: usize = 5;

/// Searches posets on [n] for which the stabilizer of ψ(E) is pure and MDS,
/// for a GF(q²)-linear E ⊆ E^⊥a of dimension k' with n − 2k' ≥ 1. The
/// result has parameters [[n, q^(n−2k'), k'+1]]_q.
///
/// Labeled posets are scanned exhaustively in a fixed order for
/// n ≤ [`EXHAUSTIVE_SEARCH_MAX_N`]; beyond that, `search_limit` random posets
/// are drawn from a ChaCha8 stream seeded with `seed`.
pub fn construct_mds(e: &AdditiveCode, search_limit: usize, seed: u64) -> Result<MdsConstruction> {
    use rand::SeedableRng;

    if !e.is_closed_under(Linearity::Full) || symplectic::quad_of(e.alphabet()).is_none() {
        return Err(Error::LinearityMismatch(
            "construction needs a GF(q²)-linear code",
        ));
    }
    if !symplectic::is_self_orthogonal(e, Form::Alt)? {
        return Err(Error::NotSelfOrthogonal);
    }
    let stab = StabilizerGroup::from_additive(e)?;
    if stab.log_p_k() == 0 {
        return Err(Error::KNotAboveOne);
    }
    let n = e.len();
    let profile = SupportProfile::new(&stab)?;
    let mut tried = 0;
    let mut attempt = |poset: Poset| -> Result<Option<MdsConstruction>> {
        tried += 1;
        let params = profile.params(&poset, &stab)?;
        if params.pure && is_mds_stabilizer(&params)? {
            return Ok(Some(MdsConstruction {
                poset,
                stabilizer: stab.clone(),
                params,
                posets_tried: tried,
            }));
        }
        Ok(None)
    };
    if n <= EXHAUSTIVE_SEARCH_MAX_N {
        for poset in Poset::all_labeled(n) {
            if let Some(found) = attempt(poset)? {
                return Ok(found);
            }
        }
    } else {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..search_limit {
            if let Some(found) = attempt(Poset::random(n, &mut rng))? {
                return Ok(found);
            }
        }
    }
    Err(Error::SearchExhausted { tried })
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn e(v: &[u32]) -> Vec<Elem> {
        v.iter().map(|&x| Elem(x)).collect()
    }

    fn f2() -> Arc<Field> {
        Field::prime(2).unwrap()
    }

    /// ψ(span_{F4}{(1,1,0)}) and the poset with the single cover 1 < 3.
    pub(crate) fn three_one_two() -> (Poset, StabilizerGroup) {
        let alphabet = Alphabet::new(f2(), 2).unwrap();
        let d = AdditiveCode::new(alphabet, Linearity::Full, 3, vec![e(&[1, 1, 0])]).unwrap();
        (
            Poset::from_covers(3, &[(0, 2)]).unwrap(),
            StabilizerGroup::from_additive(&d).unwrap(),
        )
    }

    #[test]
    fn products_and_commutation() {
        let f = f2();
        let x = ErrorOperator::new(e(&[1]), e(&[0])).unwrap();
        let z = ErrorOperator::new(e(&[0]), e(&[1])).unwrap();
        let xz = op_mul(&f, &x, &z).unwrap();
        let zx = op_mul(&f, &z, &x).unwrap();
        // Phases in ζ units: one ξ is two.
        assert_eq!((zx.phase + 4 - xz.phase) % 4, 2);
        assert_eq!(
            commute_check(&f, &x, &z).unwrap(),
            Commutation {
                commute: false,
                phase: 1
            }
        );
        assert!(commute_check(&f, &x, &x).unwrap().commute);
        assert_eq!(op_mul(&f, &xz, &ErrorOperator::identity(1)).unwrap(), xz);
        // Y = iXZ squares to the identity.
        let y = ErrorOperator::lift(&f, &SympVector::new(e(&[1]), e(&[1])).unwrap());
        assert_eq!(op_pow(&f, &y, 2), ErrorOperator::identity(1));
        let disjoint = ErrorOperator::new(e(&[0, 1]), e(&[0, 0])).unwrap();
        let other = ErrorOperator::new(e(&[0, 0]), e(&[1, 0])).unwrap();
        assert!(commute_check(&f, &disjoint, &other).unwrap().commute);
    }

    #[test]
    fn multiplication_is_associative_and_phi_is_a_homomorphism() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for (p, m) in [(2, 1), (2, 2), (3, 1), (3, 2), (5, 1)] {
            let f = Field::gf(p, m).unwrap();
            let s = f.size();
            let rand_op = |rng: &mut ChaCha8Rng| ErrorOperator {
                phase: rng.random_range(0..2 * p),
                a: (0..3).map(|_| Elem(rng.random_range(0..s))).collect(),
                b: (0..3).map(|_| Elem(rng.random_range(0..s))).collect(),
            };
            for _ in 0..50 {
                let (g, h, k) = (rand_op(&mut rng), rand_op(&mut rng), rand_op(&mut rng));
                let left = op_mul(&f, &op_mul(&f, &g, &h).unwrap(), &k).unwrap();
                let right = op_mul(&f, &g, &op_mul(&f, &h, &k).unwrap()).unwrap();
                assert_eq!(left, right);
                assert_eq!(op_mul(&f, &g, &h).unwrap().phi(), g.phi().add(&f, &h.phi()));
                assert_eq!(
                    op_pow(&f, &ErrorOperator::lift(&f, &g.phi()), p),
                    ErrorOperator::identity(3)
                );
            }
        }
    }

    #[test]
    fn stabilizer_examples() {
        let f = f2();
        let triv = StabilizerGroup::trivial(&f, 2).unwrap();
        assert_eq!(triv.log_p_k(), 2);
        let p = params(&Poset::antichain(2), &triv).unwrap();
        assert_eq!((p.d_p, p.pure), (1, true));
        assert!(is_mds_stabilizer(&p).unwrap());

        let alph = Alphabet::from_parts(f.clone(), f.clone()).unwrap();
        let c =
            AdditiveCode::new(alph.clone(), Linearity::Full, 4, vec![e(&[1, 1, 0, 0])]).unwrap();
        let s = StabilizerGroup::from_code(c).unwrap();
        assert_eq!(s.log_p_k(), 1);
        assert_eq!(s.elements().len(), 2);
        let bad =
            AdditiveCode::new(alph, Linearity::Full, 2, vec![e(&[1, 0]), e(&[0, 1])]).unwrap();
        assert_eq!(
            StabilizerGroup::from_code(bad).unwrap_err(),
            Error::NotSelfOrthogonal
        );
    }

    #[test]
    fn three_one_two_parameters() {
        let (poset, stab) = three_one_two();
        let p = params(&poset, &stab).unwrap();
        assert_eq!((p.n, p.log_p_k, p.d_p, p.pure), (3, 1, 2, true));
        assert_eq!(p.to_string(), "[[3, 2^1, 2]]_2");
        assert!(singleton_q_check(&p).unwrap());
        assert!(is_mds_stabilizer(&p).unwrap());
        let t3 = theorem3_verify(&poset, &stab).unwrap();
        assert!(t3.holds() && t3.dual_is_mds);
        let t5 = theorem5_verify(&poset, &stab).unwrap();
        assert!(t5.agree && t5.all_perfect);
        assert_eq!(t5.ideal_size, Some(1));
    }

    /// Brute force over all 2^6 vectors: d_P from the definition of C^⊥s.
    #[test]
    fn params_match_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let f = f2();
        for _ in 0..40 {
            let n = rng.random_range(1..=3);
            let k = rng.random_range(0..n);
            let c = random_self_orthogonal(&f, n, k, &mut rng).unwrap();
            let stab = StabilizerGroup::from_code(c.clone()).unwrap();
            let poset = Poset::random(n, &mut rng);
            let got = params(&poset, &stab).unwrap();
            let words: Vec<Vec<Elem>> = c.codewords().unwrap().collect();
            let mut best = usize::MAX;
            let mut best_in = usize::MAX;
            for bits in 1u32..(1 << (2 * n)) {
                let v: Vec<Elem> = (0..2 * n).map(|i| Elem(bits >> i & 1)).collect();
                let sv = SympVector::from_concat(&v).unwrap();
                let orth = words.iter().all(|w| {
                    form_symp(&f, &sv, &SympVector::from_concat(w).unwrap())
                        .unwrap()
                        .is_zero()
                });
                let w = symplectic::wt_symp(&poset, &sv).unwrap();
                if c.contains(&v) {
                    best_in = best_in.min(w);
                } else if orth {
                    best = best.min(w);
                }
            }
            if got.k_above_one() {
                assert_eq!(got.d_p, best);
                assert_eq!(got.pure, best_in >= best);
                assert!(singleton_dual_check(&got).unwrap());
                if got.pure {
                    assert!(
                        singleton_q_check(&got).unwrap(),
                        "{got:?} {:?} {poset}",
                        c.prime_basis()
                    );
                }
            }
        }
    }

    #[test]
    fn impure_code_exceeds_the_singleton_bound() {
        let f = f2();
        let alph = Alphabet::from_parts(f.clone(), f).unwrap();
        let c = AdditiveCode::new(alph, Linearity::Full, 4, vec![e(&[0, 1, 0, 1])]).unwrap();
        let s = StabilizerGroup::from_code(c).unwrap();
        let poset = Poset::from_covers(2, &[(1, 0)]).unwrap();
        let p = params(&poset, &s).unwrap();
        assert_eq!(
            (p.log_p_k, p.d_p, p.dual_distance, p.pure),
            (1, 2, 1, false)
        );
        assert!(!singleton_q_check(&p).unwrap());
        assert!(singleton_dual_check(&p).unwrap());
    }

    #[test]
    fn construction() {
        let alphabet = Alphabet::new(f2(), 2).unwrap();
        let d =
            AdditiveCode::new(alphabet.clone(), Linearity::Full, 3, vec![e(&[1, 1, 0])]).unwrap();
        let found = construct_mds(&d, 0, 0).unwrap();
        assert_eq!(
            (found.params.log_p_k, found.params.d_p, found.params.pure),
            (1, 2, true)
        );
        let zero = AdditiveCode::zero(Alphabet::new(f2(), 2).unwrap(), 1).unwrap();
        let trivial = construct_mds(&zero, 0, 0).unwrap();
        assert_eq!((trivial.params.log_p_k, trivial.params.d_p), (1, 1));
        let bad = AdditiveCode::new(alphabet, Linearity::Full, 3, vec![e(&[1, 0, 0])]).unwrap();
        assert_eq!(
            construct_mds(&bad, 0, 0).unwrap_err(),
            Error::NotSelfOrthogonal
        );
    }

    #[test]
    fn gating() {
        let f = f2();
        let alph = Alphabet::from_parts(f.clone(), f.clone()).unwrap();
        // C = C^⊥s on one qubit: K = 1.
        let c = AdditiveCode::new(alph.clone(), Linearity::Full, 2, vec![e(&[1, 0])]).unwrap();
        let s = StabilizerGroup::from_code(c).unwrap();
        let p = params(&Poset::antichain(1), &s).unwrap();
        assert!(p.k_one_convention);
        assert_eq!(p.d_p, 1);
        assert_eq!(singleton_q_check(&p).unwrap_err(), Error::KNotAboveOne);
        assert_eq!(
            theorem3_verify(&Poset::antichain(1), &s).unwrap_err(),
            Error::KNotAboveOne
        );
        // C = span{(10|00)} on two qubits under the chain 1 < 2: every word
        // of C^⊥s \ C touches slot 2, so d_P = 2 while X(e_1) has weight 1.
        let c = AdditiveCode::new(alph, Linearity::Full, 4, vec![e(&[1, 0, 0, 0])]).unwrap();
        let s = StabilizerGroup::from_code(c).unwrap();
        let p = params(&Poset::chain(2), &s).unwrap();
        assert_eq!((p.d_p, p.pure), (2, false));
        assert_eq!(
            theorem5_verify(&Poset::chain(2), &s).unwrap_err(),
            Error::NotPure
        );
    }
}
