//! Additive codes in GF(q^t)^n with poset weights, I-balls, I-perfectness
//! and MDS checks.
//!
//! A code is stored twice: as an echelon basis over its scalar subfield (the
//! generators callers see and enumerate), and as a reduced echelon basis of
//! GF(p)-coordinate vectors, which is canonical and drives membership tests,
//! equality and linear-algebra shortcuts.

mod reduce;
mod rs;

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use num_rational::Ratio;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::linalg::Echelon;
use crate::poset::{Ideal, Poset};

pub use reduce::{reduce_generator, reduce_rows, ReducedGenerator};
pub use rs::reed_solomon;

/// Default cap on the number of codewords any exhaustive scan may visit.
pub const DEFAULT_CAP: u64 = 1 << 24;

/// The alphabet GF(q^t), remembered together with its subfield GF(q).
#[derive(Clone, Debug, PartialEq)]
pub struct Alphabet {
    base: Arc<Field>,
    field: Arc<Field>,
    t: u32,
}

impl Alphabet {
    /// GF(q^t) built over `base` = GF(q) with the smallest irreducible of degree `t`.
    pub fn new(base: Arc<Field>, t: u32) -> Result<Alphabet> {
        let field = Field::smallest_extension(&base, t)?;
        Ok(Alphabet { base, field, t })
    }

    /// Uses `field` as GF(q^t); it must be `base` itself or built directly over it.
    pub fn from_parts(base: Arc<Field>, field: Arc<Field>) -> Option<Alphabet> {
        if base == field {
            return Some(Alphabet { base, field, t: 1 });
        }
        let over = field.base().is_some_and(|b| **b == *base);
        over.then(|| {
            let t = field.relative_degree();
            Alphabet { base, field, t }
        })
    }

    pub fn base(&self) -> &Arc<Field> {
        &self.base
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn q(&self) -> u32 {
        self.base.size()
    }

    pub fn p(&self) -> u32 {
        self.field.characteristic()
    }

    /// Degree of the alphabet over GF(p).
    pub fn degree(&self) -> u32 {
        self.field.degree()
    }

    pub fn scalars(&self, linearity: Linearity) -> Arc<Field> {
        match linearity {
            Linearity::Prime => self.field.prime_field(),
            Linearity::BaseQ => self.base.clone(),
            Linearity::Full => self.field.clone(),
        }
    }
}

/// The subfield over which a code is closed under scaling.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Linearity {
    Prime,
    BaseQ,
    Full,
}

/// Base-`s` digits of `x`: its coordinates over the subfield of size `s`.
fn digits(x: Elem, s: u32, count: u32) -> impl Iterator<Item = Elem> {
    let mut v = x.0;
    (0..count).map(move |_| {
        let d = v % s;
        v /= s;
        Elem(d)
    })
}

fn undigits(ds: &[Elem], s: u32) -> Elem {
    Elem(ds.iter().rev().fold(0, |acc, d| acc * s + d.0))
}

/// Coordinates of `v` over the subfield of size `s`, `count` per entry.
pub(crate) fn descend(v: &[Elem], s: u32, count: u32) -> Vec<Elem> {
    v.iter().flat_map(|&x| digits(x, s, count)).collect()
}

pub(crate) fn ascend(v: &[Elem], s: u32, count: u32) -> Vec<Elem> {
    v.chunks(count as usize).map(|c| undigits(c, s)).collect()
}

pub(crate) fn add_into(f: &Field, dst: &mut [Elem], src: &[Elem]) {
    for (d, &s) in dst.iter_mut().zip(src) {
        *d = f.add(*d, s);
    }
}

pub(crate) fn scale(f: &Field, c: Elem, v: &[Elem]) -> Vec<Elem> {
    v.iter().map(|&x| f.mul(c, x)).collect()
}

/// A p-subgroup of GF(q^t)^n closed under scaling by its `linearity` subfield.
#[derive(Clone, Debug)]
pub struct AdditiveCode {
    alphabet: Alphabet,
    linearity: Linearity,
    n: usize,
    gens: Vec<Vec<Elem>>,
    prime: Echelon,
    cap: u64,
}

impl PartialEq for AdditiveCode {
    /// Equality as sets of vectors.
    fn eq(&self, other: &Self) -> bool {
        self.alphabet == other.alphabet && self.n == other.n && self.prime == other.prime
    }
}

impl AdditiveCode {
    /// The span of `gens` over the `linearity` subfield.
    pub fn new(
        alphabet: Alphabet,
        linearity: Linearity,
        n: usize,
        gens: Vec<Vec<Elem>>,
    ) -> Result<AdditiveCode> {
        if n == 0 {
            return Err(Error::EmptyAmbient);
        }
        for g in &gens {
            if g.len() != n {
                return Err(Error::MixedLengths);
            }
            for &x in g {
                alphabet.field.check(x)?;
            }
        }
        let scalars = alphabet.scalars(linearity);
        let s = scalars.size();
        let per = alphabet.degree() / scalars.degree();
        let rows = gens.iter().map(|g| descend(g, s, per)).collect();
        let ech = Echelon::new(&scalars, rows, n * per as usize);
        let gens: Vec<Vec<Elem>> = ech.rows.iter().map(|r| ascend(r, s, per)).collect();

        let p = alphabet.p();
        let deg = alphabet.degree();
        let prime_field = alphabet.field.prime_field();
        let mut prime_rows = Vec::new();
        for g in &gens {
            for i in 0..scalars.degree() {
                let beta = Elem(p.pow(i));
                prime_rows.push(descend(&scale(&alphabet.field, beta, g), p, deg));
            }
        }
        let prime = Echelon::new(&prime_field, prime_rows, n * deg as usize);
        debug_assert_eq!(prime.rank(), gens.len() * scalars.degree() as usize);
        Ok(AdditiveCode {
            alphabet,
            linearity,
            n,
            gens,
            prime,
            cap: DEFAULT_CAP,
        })
    }

    pub fn zero(alphabet: Alphabet, n: usize) -> Result<AdditiveCode> {
        AdditiveCode::new(alphabet, Linearity::Full, n, Vec::new())
    }

    /// The whole space GF(q^t)^n.
    pub fn full(alphabet: Alphabet, n: usize) -> Result<AdditiveCode> {
        let gens = (0..n)
            .map(|i| {
                let mut v = vec![Elem::ZERO; n];
                v[i] = Elem::ONE;
                v
            })
            .collect();
        AdditiveCode::new(alphabet, Linearity::Full, n, gens)
    }

    /// Random generators; the dimension may come out below `k` on collisions.
    pub fn random<R: Rng + ?Sized>(
        alphabet: Alphabet,
        linearity: Linearity,
        n: usize,
        k: usize,
        rng: &mut R,
    ) -> Result<AdditiveCode> {
        let size = alphabet.field.size();
        let gens = (0..k)
            .map(|_| (0..n).map(|_| Elem(rng.random_range(0..size))).collect())
            .collect();
        AdditiveCode::new(alphabet, linearity, n, gens)
    }

    /// Sets the enumeration cap used by every exhaustive scan of this code.
    pub fn with_cap(mut self, cap: u64) -> AdditiveCode {
        self.cap = cap;
        self
    }

    pub fn cap(&self) -> u64 {
        self.cap
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.alphabet.field
    }

    pub fn linearity(&self) -> Linearity {
        self.linearity
    }

    /// Code length n.
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Echelon generators over the linearity subfield.
    pub fn generators(&self) -> &[Vec<Elem>] {
        &self.gens
    }

    /// Dimension over GF(p), i.e. log_p |D|.
    pub fn log_p_size(&self) -> u32 {
        self.prime.rank() as u32
    }

    /// |D|, saturating at `u128::MAX`.
    pub fn size(&self) -> u128 {
        (self.alphabet.p() as u128)
            .checked_pow(self.log_p_size())
            .unwrap_or(u128::MAX)
    }

    pub fn is_zero(&self) -> bool {
        self.prime.rank() == 0
    }

    /// A GF(p)-basis, as vectors over the alphabet.
    pub fn prime_basis(&self) -> Vec<Vec<Elem>> {
        let (p, deg) = (self.alphabet.p(), self.alphabet.degree());
        self.prime.rows.iter().map(|r| ascend(r, p, deg)).collect()
    }

    /// A GF(q)-basis; requires closure under GF(q).
    pub fn base_basis(&self) -> Result<Vec<Vec<Elem>>> {
        match self.linearity {
            Linearity::Full => {
                let q = self.alphabet.q();
                Ok(self
                    .gens
                    .iter()
                    .flat_map(|g| {
                        (0..self.alphabet.t)
                            .map(move |j| scale(&self.alphabet.field, Elem(q.pow(j)), g))
                    })
                    .collect())
            }
            Linearity::BaseQ => Ok(self.gens.clone()),
            Linearity::Prime => {
                let c = self.clone().with_linearity(Linearity::BaseQ)?;
                Ok(c.gens)
            }
        }
    }

    fn prime_coords(&self, v: &[Elem]) -> Vec<Elem> {
        descend(v, self.alphabet.p(), self.alphabet.degree())
    }

    pub fn contains(&self, v: &[Elem]) -> bool {
        v.len() == self.n && v.iter().all(|&x| self.alphabet.field.contains(x)) && {
            let pf = self.alphabet.field.prime_field();
            self.prime.contains(&pf, &self.prime_coords(v))
        }
    }

    pub fn is_subcode_of(&self, other: &AdditiveCode) -> bool {
        self.alphabet == other.alphabet
            && self.n == other.n
            && self.prime_basis().iter().all(|b| other.contains(b))
    }

    /// Whether scaling by every element of `sub` maps the code into itself.
    pub fn is_closed_under(&self, linearity: Linearity) -> bool {
        let sub = self.alphabet.scalars(linearity);
        let p = self.alphabet.p();
        self.prime_basis().iter().all(|b| {
            (0..sub.degree())
                .all(|i| self.contains(&scale(&self.alphabet.field, Elem(p.pow(i)), b)))
        })
    }

    /// The same set of vectors, regarded as linear over a different subfield.
    pub fn with_linearity(self, linearity: Linearity) -> Result<AdditiveCode> {
        if !self.is_closed_under(linearity) {
            return Err(Error::LinearityMismatch(
                "code is not closed under the requested subfield",
            ));
        }
        let cap = self.cap;
        let basis = self.prime_basis();
        // Over a larger subfield the GF(p)-basis still spans, just redundantly.
        Ok(AdditiveCode::new(self.alphabet, linearity, self.n, basis)?.with_cap(cap))
    }

    /// The largest subfield the code is closed under.
    pub fn detect_linearity(self) -> AdditiveCode {
        for lin in [Linearity::Full, Linearity::BaseQ] {
            if self.linearity < lin && self.is_closed_under(lin) {
                return self.with_linearity(lin).expect("closure checked");
            }
        }
        self
    }

    fn check_cap(&self) -> Result<()> {
        if self.size() > self.cap as u128 {
            return Err(Error::CodeTooLarge {
                p: self.alphabet.p(),
                log_p_size: self.log_p_size(),
                cap: self.cap,
            });
        }
        Ok(())
    }

    /// Every codeword once, in lexicographic order of the coordinates over
    /// the linearity subfield (first generator most significant).
    pub fn codewords(&self) -> Result<Codewords<'_>> {
        self.check_cap()?;
        let f = &self.alphabet.field;
        let sub = self.alphabet.scalars(self.linearity);
        let mults = self
            .gens
            .iter()
            .map(|g| sub.elements().map(|c| scale(f, c, g)).collect())
            .collect();
        Ok(Codewords {
            field: f,
            mults,
            digits: vec![0; self.gens.len()],
            current: vec![Elem::ZERO; self.n],
            s: sub.size(),
            done: false,
        })
    }

    /// Calls `visit` on every codeword, in an unspecified order.
    pub fn for_each_word<F: FnMut(&[Elem])>(&self, mut visit: F) -> Result<()> {
        self.check_cap()?;
        let f = &self.alphabet.field;
        let basis = self.prime_basis();
        let p = self.alphabet.p();
        let mut digits = vec![0u32; basis.len()];
        let mut cur = vec![Elem::ZERO; self.n];
        loop {
            visit(&cur);
            // p-ary odometer; wrapping a digit has already cancelled its p
            // additions, so only the carry needs work.
            let mut i = 0;
            loop {
                if i == basis.len() {
                    return Ok(());
                }
                add_into(f, &mut cur, &basis[i]);
                digits[i] += 1;
                if digits[i] < p {
                    break;
                }
                digits[i] = 0;
                i += 1;
            }
        }
    }

    /// Distinct supports (under `metric`) of the nonzero codewords.
    pub fn nonzero_supports(&self, metric: Metric<'_>) -> Result<BTreeSet<u64>> {
        metric.check_len(self.n)?;
        let mut out = BTreeSet::new();
        self.for_each_word(|w| {
            let s = metric.support(w);
            if s != 0 {
                out.insert(s);
            }
        })?;
        Ok(out)
    }
}

impl fmt::Display for AdditiveCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:?}-linear code of length {} over GF({}) with {}^{} words",
            self.linearity,
            self.n,
            self.alphabet.field.size(),
            self.alphabet.p(),
            self.log_p_size()
        )
    }
}

/// Iterator returned by [`AdditiveCode::codewords`].
pub struct Codewords<'a> {
    field: &'a Field,
    mults: Vec<Vec<Vec<Elem>>>,
    digits: Vec<u32>,
    current: Vec<Elem>,
    s: u32,
    done: bool,
}

impl Iterator for Codewords<'_> {
    type Item = Vec<Elem>;

    fn next(&mut self) -> Option<Vec<Elem>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        let mut i = self.digits.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            let old = self.digits[i] as usize;
            for (c, &x) in self.current.iter_mut().zip(&self.mults[i][old]) {
                *c = self.field.sub(*c, x);
            }
            if self.digits[i] + 1 < self.s {
                self.digits[i] += 1;
                add_into(self.field, &mut self.current, &self.mults[i][old + 1]);
                break;
            }
            self.digits[i] = 0;
        }
        Some(out)
    }
}

/// How a vector's support is read off: plain coordinates over the poset, or
/// the union of both halves of a length-2n symplectic vector.
#[derive(Clone, Copy, Debug)]
pub enum Metric<'a> {
    Poset(&'a Poset),
    Symplectic(&'a Poset),
}

impl<'a> Metric<'a> {
    pub fn poset(&self) -> &'a Poset {
        match *self {
            Metric::Poset(p) | Metric::Symplectic(p) => p,
        }
    }

    pub fn vector_len(&self) -> usize {
        match self {
            Metric::Poset(p) => p.len(),
            Metric::Symplectic(p) => 2 * p.len(),
        }
    }

    pub fn check_len(&self, len: usize) -> Result<()> {
        if len != self.vector_len() {
            return Err(Error::LengthMismatch {
                expected: self.vector_len(),
                found: len,
            });
        }
        Ok(())
    }

    /// Bitmask over the poset's ground set.
    pub fn support(&self, v: &[Elem]) -> u64 {
        let mask = |w: &[Elem]| {
            w.iter()
                .enumerate()
                .fold(0u64, |m, (i, x)| if x.is_zero() { m } else { m | 1 << i })
        };
        match self {
            Metric::Poset(_) => mask(v),
            Metric::Symplectic(p) => {
                let (a, b) = v.split_at(p.len());
                mask(a) | mask(b)
            }
        }
    }

    pub fn weight(&self, v: &[Elem]) -> usize {
        self.poset().ideal_of_mask(self.support(v)).len()
    }
}

/// The ideal generated by the nonzero positions of `v`.
pub fn support_ideal(poset: &Poset, v: &[Elem]) -> Result<Ideal> {
    let m = Metric::Poset(poset);
    m.check_len(v.len())?;
    Ok(poset.ideal_of_mask(m.support(v)))
}

/// |support_ideal(v)|.
pub fn poset_weight(poset: &Poset, v: &[Elem]) -> Result<usize> {
    Ok(support_ideal(poset, v)?.len())
}

/// Minimum `metric` weight over the nonzero codewords.
pub fn min_weight(metric: Metric<'_>, code: &AdditiveCode) -> Result<usize> {
    metric.check_len(code.len())?;
    if code.is_zero() {
        return Err(Error::TrivialCode);
    }
    let supports = code.nonzero_supports(metric)?;
    Ok(supports
        .iter()
        .map(|&s| metric.poset().ideal_of_mask(s).len())
        .min()
        .expect("nonzero code"))
}

/// d_P(D): minimum P-weight over nonzero codewords.
pub fn min_distance(poset: &Poset, code: &AdditiveCode) -> Result<usize> {
    min_weight(Metric::Poset(poset), code)
}

/// The I-ball around `u`: every `v` whose difference from `u` has support
/// ideal inside `ideal`.
pub fn ball(poset: &Poset, field: &Field, ideal: Ideal, u: &[Elem]) -> Result<Vec<Vec<Elem>>> {
    if u.len() != poset.len() {
        return Err(Error::LengthMismatch {
            expected: poset.len(),
            found: u.len(),
        });
    }
    let positions: Vec<usize> = ideal.iter().filter(|&i| i < poset.len()).collect();
    let mut out = Vec::new();
    let mut digits = vec![0u32; positions.len()];
    loop {
        let mut v = u.to_vec();
        for (&pos, &d) in positions.iter().zip(&digits) {
            v[pos] = field.add(v[pos], Elem(d));
        }
        out.push(v);
        let mut i = 0;
        loop {
            if i == digits.len() {
                return Ok(out);
            }
            digits[i] += 1;
            if digits[i] < field.size() {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

/// Whether the I-balls around the codewords tile GF(q^t)^n.
///
/// Uses the counting condition |D| (q^t)^|I| = (q^t)^n together with
/// disjointness, which for an additive code means no nonzero codeword is
/// supported inside `ideal`.
pub fn is_i_perfect(code: &AdditiveCode, poset: &Poset, ideal: Ideal) -> bool {
    let deg = code.alphabet.degree() as usize;
    if code.log_p_size() as usize + deg * ideal.len() != deg * code.n {
        return false;
    }
    // Disjoint iff projecting away the coordinates in `ideal` is injective.
    let pf = code.field().prime_field();
    let rows: Vec<Vec<Elem>> = code
        .prime
        .rows
        .iter()
        .map(|r| {
            r.iter()
                .enumerate()
                .map(|(c, &x)| {
                    if ideal.contains(c / deg) {
                        Elem::ZERO
                    } else {
                        x
                    }
                })
                .collect()
        })
        .collect();
    debug_assert!(ideal.iter().all(|i| i < poset.len()));
    crate::linalg::rank(&pf, rows, code.n * deg) == code.prime.rank()
}

/// |D| = (q^t)^(n - d_P + 1).
pub fn is_mds(poset: &Poset, code: &AdditiveCode) -> Result<bool> {
    let d = min_distance(poset, code)?;
    Ok(code.log_p_size() as usize == code.alphabet.degree() as usize * (code.n + 1 - d))
}

/// log_{q^t} |D| as an exact fraction.
pub fn q_dimension(code: &AdditiveCode) -> Ratio<u32> {
    Ratio::new(code.log_p_size(), code.alphabet.degree())
}

/// Both sides of the MDS ⇔ I-perfect characterization for one code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MdsPerfectReport {
    pub min_distance: usize,
    pub is_mds: bool,
    pub integral_dimension: bool,
    /// n - log_{q^t}|D| when integral.
    pub ideal_size: Option<usize>,
    pub ideals_checked: usize,
    pub all_perfect: bool,
    /// First ideal (in enumeration order) that fails to be perfect.
    pub witness: Option<Ideal>,
    pub agree: bool,
}

/// Checks `is_mds(D)` against `[log_{q^t}|D| integral and D is I-perfect for
/// every ideal of size n - log_{q^t}|D|]`. Returns `None` for the zero code.
pub fn mds_iff_perfect_verify(
    poset: &Poset,
    code: &AdditiveCode,
) -> Result<Option<MdsPerfectReport>> {
    if code.is_zero() {
        return Ok(None);
    }
    let d = min_distance(poset, code)?;
    let mds = code.log_p_size() as usize == code.alphabet.degree() as usize * (code.n + 1 - d);
    let qdim = q_dimension(code);
    let integral = qdim.is_integer();
    let mut report = MdsPerfectReport {
        min_distance: d,
        is_mds: mds,
        integral_dimension: integral,
        ideal_size: None,
        ideals_checked: 0,
        all_perfect: false,
        witness: None,
        agree: false,
    };
    if integral {
        let size = code.n - qdim.to_integer() as usize;
        report.ideal_size = Some(size);
        report.all_perfect = true;
        for ideal in poset.ideals_of_size(size) {
            report.ideals_checked += 1;
            if !is_i_perfect(code, poset, ideal) {
                report.all_perfect = false;
                report.witness = Some(ideal);
                break;
            }
        }
    }
    report.agree = report.is_mds == (integral && report.all_perfect);
    Ok(Some(report))
}

/// d_P(D) ≤ n - ⌈k/t⌉ + 1 for a GF(q)-linear code of GF(q)-dimension k.
/// Vacuous for the zero code.
pub fn additive_singleton_holds(poset: &Poset, code: &AdditiveCode) -> Result<bool> {
    if !code.is_closed_under(Linearity::BaseQ) {
        return Err(Error::LinearityMismatch("bound needs a GF(q)-linear code"));
    }
    if code.is_zero() {
        return Ok(true);
    }
    let d = min_distance(poset, code)?;
    let m = code.alphabet.base.degree();
    let k = code.log_p_size() / m;
    let s = k.div_ceil(code.alphabet.t) as usize;
    Ok(d + s <= code.n + 1)
}

fn check_nested(big: &AdditiveCode, small: &AdditiveCode) -> Result<()> {
    if big.alphabet != small.alphabet || big.n != small.n {
        return Err(Error::AmbientMismatch);
    }
    if !small.is_subcode_of(big) {
        return Err(Error::NotNested);
    }
    if small.log_p_size() == big.log_p_size() {
        return Err(Error::EqualCodes);
    }
    Ok(())
}

/// Minimum `metric` weight over `big \ small`.
pub fn min_weight_over_difference(
    metric: Metric<'_>,
    big: &AdditiveCode,
    small: &AdditiveCode,
) -> Result<usize> {
    check_nested(big, small)?;
    metric.check_len(big.n)?;
    big.check_cap()?;
    let mut best = usize::MAX;
    let mut seen = BTreeSet::new();
    big.for_each_word(|w| {
        let s = metric.support(w);
        if s != 0 && !seen.contains(&s) && !small.contains(w) {
            seen.insert(s);
            best = best.min(metric.poset().ideal_of_mask(s).len());
        }
    })?;
    Ok(best)
}

/// Minimum pairwise `metric` distance between distinct words of `big \ small`,
/// by scanning pairs.
pub fn min_distance_within_difference(
    metric: Metric<'_>,
    big: &AdditiveCode,
    small: &AdditiveCode,
) -> Result<Option<usize>> {
    check_nested(big, small)?;
    metric.check_len(big.n)?;
    let mut outside = Vec::new();
    big.for_each_word(|w| {
        if !small.contains(w) {
            outside.push(w.to_vec());
        }
    })?;
    let f = big.field();
    let mut best: Option<usize> = None;
    for (i, u) in outside.iter().enumerate() {
        for v in &outside[i + 1..] {
            let diff: Vec<Elem> = u.iter().zip(v).map(|(&a, &b)| f.sub(a, b)).collect();
            let w = metric.weight(&diff);
            best = Some(best.map_or(w, |b| b.min(w)));
        }
    }
    Ok(best)
}
