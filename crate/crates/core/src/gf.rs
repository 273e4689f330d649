//! Exact arithmetic in GF(p), GF(p^m) and towers GF(q^t) over GF(q).
//!
//! Elements are packed integers: the element with polynomial-basis
//! coefficients `c_0, c_1, ..` (ascending powers) over GF(p) is stored as
//! `c_0 + c_1 p + c_2 p^2 + ..`. An extension built over a non-prime base
//! stores `a_0 + a_1 q + a_2 q^2 + ..` where the `a_j` are packed base
//! elements, so every subfield in a tower is the prefix `0..|subfield|` and
//! base-`s` digits of an index are coordinates over the subfield of size `s`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest field size (in elements) any constructor will build.
pub const MAX_FIELD_SIZE: u64 = 1 << 20;

const ADD_TABLE_LIMIT: u32 = 256;

/// A field element, packed as described in the module docs.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem(pub u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A finite field, either prime or a simple extension of another `Field`.
pub struct Field {
    p: u32,
    degree: u32,
    size: u32,
    base: Option<Arc<Field>>,
    modulus: Vec<Elem>,
    exp: Vec<u32>,
    log: Vec<u32>,
    add_table: Option<Vec<u32>>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.base {
            None => write!(f, "GF({})", self.p),
            Some(b) => write!(
                f,
                "GF({}) = {:?}[y]/({:?})",
                self.size,
                b,
                self.modulus.iter().map(|e| e.0).collect::<Vec<_>>()
            ),
        }
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p
            && self.degree == other.degree
            && self.modulus == other.modulus
            && match (&self.base, &other.base) {
                (None, None) => true,
                (Some(a), Some(b)) => Arc::ptr_eq(a, b) || **a == **b,
                _ => false,
            }
    }
}

impl Eq for Field {}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl Field {
    /// The prime field GF(p).
    pub fn prime(p: u32) -> Result<Arc<Field>> {
        if !is_prime(p) {
            return Err(Error::NonPrimeModulus(p));
        }
        if p as u64 > MAX_FIELD_SIZE {
            return Err(Error::FieldTooLarge { p, degree: 1 });
        }
        let mut f = Field {
            p,
            degree: 1,
            size: p,
            base: None,
            modulus: Vec::new(),
            exp: Vec::new(),
            log: Vec::new(),
            add_table: None,
        };
        f.build_add_table();
        Ok(Arc::new(f))
    }

    /// GF(p^m) as GF(p)[x]/(poly); `poly` is monic of degree `m`, ascending.
    pub fn new(p: u32, m: u32, poly: &[u32]) -> Result<Arc<Field>> {
        let prime = Field::prime(p)?;
        if m == 0 || poly.len() != m as usize + 1 || poly[m as usize] != 1 {
            return Err(Error::BadPolynomial(poly.to_vec()));
        }
        if poly.iter().any(|&c| c >= p) {
            return Err(Error::BadPolynomial(poly.to_vec()));
        }
        if m == 1 {
            return Ok(prime);
        }
        let modulus: Vec<Elem> = poly.iter().map(|&c| Elem(c)).collect();
        Field::extension(&prime, &modulus)
    }

    /// GF(p^m) using the lexicographically smallest monic irreducible of degree `m`.
    pub fn gf(p: u32, m: u32) -> Result<Arc<Field>> {
        let prime = Field::prime(p)?;
        if m <= 1 {
            return Ok(prime);
        }
        Field::smallest_extension(&prime, m)
    }

    /// `base[y]/(modulus)`, where `modulus` is monic over `base`, ascending.
    pub fn extension(base: &Arc<Field>, modulus: &[Elem]) -> Result<Arc<Field>> {
        let t = modulus.len().saturating_sub(1);
        let raw = || modulus.iter().map(|e| e.0).collect::<Vec<_>>();
        if t == 0 || *modulus.last().unwrap() != Elem::ONE {
            return Err(Error::BadPolynomial(raw()));
        }
        if modulus.iter().any(|e| e.0 >= base.size) {
            return Err(Error::BadPolynomial(raw()));
        }
        let degree = base.degree * t as u32;
        let size = (base.size as u64).checked_pow(t as u32).unwrap_or(u64::MAX);
        if size > MAX_FIELD_SIZE {
            return Err(Error::FieldTooLarge { p: base.p, degree });
        }
        if !poly::is_irreducible(base, modulus) {
            return Err(Error::ReduciblePolynomial(raw()));
        }
        let mut f = Field {
            p: base.p,
            degree,
            size: size as u32,
            base: Some(base.clone()),
            modulus: modulus.to_vec(),
            exp: Vec::new(),
            log: Vec::new(),
            add_table: None,
        };
        f.build_log_tables();
        f.build_add_table();
        Ok(Arc::new(f))
    }

    /// Extension of degree `t` by the lexicographically smallest monic
    /// irreducible, comparing coefficient tuples `(c_0, c_1, ..)` in order.
    pub fn smallest_extension(base: &Arc<Field>, t: u32) -> Result<Arc<Field>> {
        if t == 0 {
            return Err(Error::BadPolynomial(Vec::new()));
        }
        if t == 1 {
            return Ok(base.clone());
        }
        let s = base.size as u64;
        if s.checked_pow(t).is_none_or(|v| v > MAX_FIELD_SIZE) {
            return Err(Error::FieldTooLarge {
                p: base.p,
                degree: base.degree * t,
            });
        }
        let t = t as usize;
        let mut coeffs = vec![0u32; t];
        loop {
            let mut modulus: Vec<Elem> = coeffs.iter().map(|&c| Elem(c)).collect();
            modulus.push(Elem::ONE);
            if coeffs[0] != 0 && poly::is_irreducible(base, &modulus) {
                return Field::extension(base, &modulus);
            }
            // c_0 is the most significant position of the tuple order.
            let mut i = t;
            loop {
                if i == 0 {
                    unreachable!("irreducible polynomials of every degree exist");
                }
                i -= 1;
                coeffs[i] += 1;
                if coeffs[i] < base.size {
                    break;
                }
                coeffs[i] = 0;
            }
        }
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    /// Degree over the prime field.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn size(&self) -> u32 {
        self.size
    }

    /// The field this one was built over, if any.
    pub fn base(&self) -> Option<&Arc<Field>> {
        self.base.as_ref()
    }

    /// Degree over `base()` (1 for a prime field).
    pub fn relative_degree(&self) -> u32 {
        match &self.base {
            None => 1,
            Some(b) => self.degree / b.degree,
        }
    }

    /// Defining polynomial over the base, ascending; empty for a prime field.
    pub fn modulus(&self) -> &[Elem] {
        &self.modulus
    }

    pub fn is_prime_field(&self) -> bool {
        self.base.is_none()
    }

    /// Walks the tower down to GF(p).
    pub fn prime_field(self: &Arc<Self>) -> Arc<Field> {
        let mut f = self.clone();
        while let Some(b) = f.base.clone() {
            f = b;
        }
        f
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.size).map(Elem)
    }

    pub fn contains(&self, x: Elem) -> bool {
        x.0 < self.size
    }

    pub fn check(&self, x: Elem) -> Result<Elem> {
        if self.contains(x) {
            Ok(x)
        } else {
            Err(Error::ElementOutOfRange(x.0))
        }
    }

    /// Base-`p` digits of `x`, ascending: its GF(p)-coordinates.
    pub fn coeffs(&self, x: Elem) -> Vec<u32> {
        let mut v = x.0;
        (0..self.degree)
            .map(|_| {
                let d = v % self.p;
                v /= self.p;
                d
            })
            .collect()
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<Elem> {
        if coeffs.len() != self.degree as usize || coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::BadPolynomial(coeffs.to_vec()));
        }
        Ok(Elem(
            coeffs.iter().rev().fold(0, |acc, &c| acc * self.p + c),
        ))
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if let Some(t) = &self.add_table {
            return Elem(t[(a.0 * self.size + b.0) as usize]);
        }
        self.add_digits(a, b)
    }

    fn add_digits(&self, a: Elem, b: Elem) -> Elem {
        if self.p == 2 {
            return Elem(a.0 ^ b.0);
        }
        if self.degree == 1 {
            return Elem((a.0 + b.0) % self.p);
        }
        let (mut x, mut y, mut out, mut place) = (a.0, b.0, 0u32, 1u32);
        while x > 0 || y > 0 {
            out += ((x % self.p + y % self.p) % self.p) * place;
            x /= self.p;
            y /= self.p;
            place *= self.p;
        }
        Elem(out)
    }

    pub fn neg(&self, a: Elem) -> Elem {
        if self.p == 2 {
            return a;
        }
        let (mut x, mut out, mut place) = (a.0, 0u32, 1u32);
        while x > 0 {
            out += ((self.p - x % self.p) % self.p) * place;
            x /= self.p;
            place *= self.p;
        }
        Elem(out)
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.0 == 0 || b.0 == 0 {
            return Elem::ZERO;
        }
        if self.base.is_none() {
            return Elem(((a.0 as u64 * b.0 as u64) % self.p as u64) as u32);
        }
        let order = self.size - 1;
        let l = (self.log[a.0 as usize] + self.log[b.0 as usize]) % order;
        Elem(self.exp[l as usize])
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        if self.base.is_none() {
            return Ok(self.pow(a, (self.p - 2) as u64));
        }
        let order = self.size - 1;
        let l = (order - self.log[a.0 as usize]) % order;
        Ok(Elem(self.exp[l as usize]))
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return Elem::ONE;
        }
        if a.0 == 0 {
            return Elem::ZERO;
        }
        if self.base.is_some() {
            let order = (self.size - 1) as u64;
            let l = (self.log[a.0 as usize] as u64 * (e % order)) % order;
            return Elem(self.exp[l as usize]);
        }
        let (mut acc, mut base, mut e) = (Elem::ONE, a, e);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// x ↦ x^p.
    pub fn frobenius(&self, a: Elem) -> Elem {
        self.pow(a, self.p as u64)
    }

    /// Absolute trace to GF(p): the sum of `x^(p^i)` for `i < degree`.
    pub fn trace_to_prime(&self, x: Elem) -> Elem {
        let mut acc = Elem::ZERO;
        let mut y = x;
        for _ in 0..self.degree {
            acc = self.add(acc, y);
            y = self.frobenius(y);
        }
        debug_assert!(acc.0 < self.p, "trace left the prime field");
        acc
    }

    /// A generator of the multiplicative group.
    pub fn primitive_element(&self) -> Elem {
        if self.size == 2 {
            return Elem::ONE;
        }
        if self.base.is_some() {
            return Elem(self.exp[1]);
        }
        let order = self.size - 1;
        let factors = prime_factors(order);
        (2..self.size)
            .map(Elem)
            .find(|&g| {
                factors
                    .iter()
                    .all(|&r| self.pow(g, (order / r) as u64) != Elem::ONE)
            })
            .expect("cyclic multiplicative group")
    }

    fn build_add_table(&mut self) {
        if self.size > ADD_TABLE_LIMIT {
            return;
        }
        let s = self.size;
        let mut t = vec![0u32; (s * s) as usize];
        for a in 0..s {
            for b in 0..s {
                t[(a * s + b) as usize] = self.add_digits(Elem(a), Elem(b)).0;
            }
        }
        self.add_table = Some(t);
    }

    fn build_log_tables(&mut self) {
        let base = self.base.clone().expect("extension field");
        let order = self.size - 1;
        let factors = prime_factors(order);
        let coords = |x: u32| poly::to_coords(&base, x, self.modulus.len() - 1);
        let pow = |g: &[Elem], mut e: u32| -> Vec<Elem> {
            let t = self.modulus.len() - 1;
            let mut acc = vec![Elem::ZERO; t];
            acc[0] = Elem::ONE;
            let mut b = g.to_vec();
            while e > 0 {
                if e & 1 == 1 {
                    acc = poly::mulmod(&base, &acc, &b, &self.modulus);
                }
                b = poly::mulmod(&base, &b, &b, &self.modulus);
                e >>= 1;
            }
            acc
        };
        let one = coords(1);
        let g = (1..self.size)
            .map(coords)
            .find(|g| factors.iter().all(|&r| pow(g, order / r) != one))
            .expect("cyclic multiplicative group");
        let mut exp = vec![0u32; order as usize];
        let mut log = vec![0u32; self.size as usize];
        let mut cur = one;
        for (i, slot) in exp.iter_mut().enumerate() {
            let idx = poly::from_coords(&base, &cur);
            *slot = idx;
            log[idx as usize] = i as u32;
            cur = poly::mulmod(&base, &cur, &g, &self.modulus);
        }
        self.exp = exp;
        self.log = log;
    }
}

/// GF(q²) over GF(q) with the distinguished basis {1, γ}.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadExt {
    field: Arc<Field>,
}

impl QuadExt {
    /// Uses the lexicographically smallest monic irreducible quadratic; γ is
    /// the class of its variable.
    pub fn new(base: &Arc<Field>) -> Result<QuadExt> {
        Ok(QuadExt {
            field: Field::smallest_extension(base, 2)?,
        })
    }

    /// Wraps an existing degree-2 extension.
    pub fn from_field(field: Arc<Field>) -> Option<QuadExt> {
        (field.base().is_some() && field.relative_degree() == 2).then_some(QuadExt { field })
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn base(&self) -> &Arc<Field> {
        self.field.base().expect("quadratic extension has a base")
    }

    pub fn q(&self) -> u32 {
        self.base().size()
    }

    pub fn gamma(&self) -> Elem {
        Elem(self.q())
    }

    /// The unique `(a, b)` over GF(q) with `v = a + bγ`.
    pub fn split(&self, v: Elem) -> (Elem, Elem) {
        let q = self.q();
        (Elem(v.0 % q), Elem(v.0 / q))
    }

    pub fn join(&self, a: Elem, b: Elem) -> Elem {
        Elem(a.0 + b.0 * self.q())
    }

    /// v ↦ v^q, the nontrivial automorphism over GF(q).
    pub fn conj(&self, v: Elem) -> Elem {
        self.field.pow(v, self.q() as u64)
    }
}

/// Dense polynomials over a `Field`, coefficients ascending.
pub(crate) mod poly {
    use super::{Elem, Field};

    pub fn to_coords(base: &Field, mut x: u32, t: usize) -> Vec<Elem> {
        (0..t)
            .map(|_| {
                let d = x % base.size();
                x /= base.size();
                Elem(d)
            })
            .collect()
    }

    pub fn from_coords(base: &Field, c: &[Elem]) -> u32 {
        c.iter().rev().fold(0, |acc, e| acc * base.size() + e.0)
    }

    fn trim(mut a: Vec<Elem>) -> Vec<Elem> {
        while a.last().is_some_and(|e| e.is_zero()) {
            a.pop();
        }
        a
    }

    /// Remainder of `a` modulo a monic `m`.
    pub fn rem(f: &Field, a: &[Elem], m: &[Elem]) -> Vec<Elem> {
        let dm = m.len() - 1;
        let mut r = trim(a.to_vec());
        while r.len() > dm {
            let lead = *r.last().unwrap();
            let shift = r.len() - 1 - dm;
            for (i, &c) in m.iter().enumerate() {
                let t = f.mul(lead, c);
                r[shift + i] = f.sub(r[shift + i], t);
            }
            r = trim(r);
        }
        r
    }

    pub fn mulmod(f: &Field, a: &[Elem], b: &[Elem], m: &[Elem]) -> Vec<Elem> {
        let t = m.len() - 1;
        let mut prod = vec![Elem::ZERO; a.len() + b.len()];
        for (i, &x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = f.add(prod[i + j], f.mul(x, y));
            }
        }
        let mut r = rem(f, &prod, m);
        r.resize(t, Elem::ZERO);
        r
    }

    /// Exhaustive search for a monic factor of degree ≤ deg/2.
    pub fn is_irreducible(f: &Field, m: &[Elem]) -> bool {
        let deg = m.len() - 1;
        if deg == 1 {
            return true;
        }
        if m[0].is_zero() {
            return false;
        }
        for d in 1..=deg / 2 {
            let count = (f.size() as u64).pow(d as u32);
            for idx in 0..count {
                let mut c = Vec::with_capacity(d + 1);
                let mut v = idx;
                for _ in 0..d {
                    c.push(Elem((v % f.size() as u64) as u32));
                    v /= f.size() as u64;
                }
                c.push(Elem::ONE);
                if rem(f, m, &c).is_empty() {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_fields() {
        let f = Field::new(2, 1, &[0, 1]).unwrap();
        assert_eq!(f.size(), 2);
        let f3 = Field::new(3, 1, &[0, 1]).unwrap();
        assert_eq!(f3.inv(Elem(2)).unwrap(), Elem(2));
        assert_eq!(f3.add(Elem(2), Elem::ZERO), Elem(2));
        assert_eq!(Field::prime(4).unwrap_err(), Error::NonPrimeModulus(4));
        assert_eq!(Field::prime(1).unwrap_err(), Error::NonPrimeModulus(1));
    }

    #[test]
    fn gf4_arithmetic() {
        let f = Field::new(2, 2, &[1, 1, 1]).unwrap();
        let w = Elem(2);
        assert_eq!(f.mul(w, w), Elem(3));
        assert_eq!(f.trace_to_prime(w), Elem::ONE);
        assert_eq!(f.trace_to_prime(Elem::ZERO), Elem::ZERO);
        assert_eq!(f.inv(Elem::ZERO).unwrap_err(), Error::DivisionByZero);
        assert_eq!(f.coeffs(w), vec![0, 1]);
        assert_eq!(f.from_coeffs(&[1, 1]).unwrap(), Elem(3));
    }

    #[test]
    fn reducible_and_malformed_polynomials() {
        assert!(matches!(
            Field::new(2, 2, &[1, 0, 1]),
            Err(Error::ReduciblePolynomial(_))
        ));
        assert!(matches!(
            Field::new(2, 2, &[0, 1, 1]),
            Err(Error::ReduciblePolynomial(_))
        ));
        assert!(matches!(
            Field::new(2, 2, &[1, 1, 0]),
            Err(Error::BadPolynomial(_))
        ));
        assert!(matches!(
            Field::new(3, 2, &[1, 3, 1]),
            Err(Error::BadPolynomial(_))
        ));
        // x^4 + x^2 + 1 = (x^2 + x + 1)^2 has no roots.
        assert!(matches!(
            Field::new(2, 4, &[1, 0, 1, 0, 1]),
            Err(Error::ReduciblePolynomial(_))
        ));
        assert!(Field::new(2, 4, &[1, 1, 0, 0, 1]).is_ok());
    }

    #[test]
    fn quadratic_extensions_pick_smallest_polynomial() {
        let f2 = Field::prime(2).unwrap();
        let q = QuadExt::new(&f2).unwrap();
        assert_eq!(q.field().modulus(), &[Elem(1), Elem(1), Elem(1)]);
        let f3 = Field::prime(3).unwrap();
        let q9 = QuadExt::new(&f3).unwrap();
        // y^2 + 1 is irreducible over GF(3): -1 is not a square.
        assert_eq!(q9.field().modulus(), &[Elem(1), Elem(0), Elem(1)]);
        for q in [&q, &q9] {
            let g = q.gamma();
            assert_ne!(q.conj(g), g);
        }
    }

    #[test]
    fn split_examples() {
        let f2 = Field::prime(2).unwrap();
        let q = QuadExt::new(&f2).unwrap();
        assert_eq!(q.split(Elem::ZERO), (Elem(0), Elem(0)));
        assert_eq!(q.split(q.gamma()), (Elem(0), Elem(1)));
        assert_eq!(q.split(Elem(3)), (Elem(1), Elem(1)));
    }

    fn sample_fields() -> Vec<Arc<Field>> {
        let f2 = Field::prime(2).unwrap();
        let f3 = Field::prime(3).unwrap();
        let f4 = Field::gf(2, 2).unwrap();
        vec![
            f2.clone(),
            f3.clone(),
            Field::prime(7).unwrap(),
            f4.clone(),
            Field::gf(2, 3).unwrap(),
            Field::gf(3, 2).unwrap(),
            Field::gf(5, 2).unwrap(),
            Field::gf(2, 8).unwrap(),
            Field::smallest_extension(&f4, 2).unwrap(),
            Field::smallest_extension(&f4, 3).unwrap(),
            Field::smallest_extension(&Field::gf(3, 2).unwrap(), 2).unwrap(),
        ]
    }

    #[test]
    fn field_axioms_exhaustive_on_small_fields() {
        for f in sample_fields().into_iter().filter(|f| f.size() <= 81) {
            for a in f.elements() {
                assert_eq!(f.add(a, f.neg(a)), Elem::ZERO);
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), Elem::ONE, "{f:?}");
                }
                for b in f.elements() {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in f.elements().step_by(5) {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                        assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
                    }
                }
            }
        }
    }

    #[test]
    fn trace_lands_in_prime_field_and_is_onto() {
        for f in sample_fields() {
            let mut hit = vec![false; f.characteristic() as usize];
            for x in f.elements() {
                let t = f.trace_to_prime(x);
                assert!(t.0 < f.characteristic());
                assert_eq!(f.frobenius(t), t);
                hit[t.0 as usize] = true;
            }
            assert!(hit.iter().all(|&h| h), "{f:?}");
        }
    }

    #[test]
    fn frobenius_is_an_automorphism() {
        for f in sample_fields() {
            let step = (f.size() / 40).max(1) as usize;
            for a in f.elements().step_by(step) {
                for b in f.elements().step_by(step) {
                    let fr = |x| f.frobenius(x);
                    assert_eq!(fr(f.add(a, b)), f.add(fr(a), fr(b)));
                    assert_eq!(fr(f.mul(a, b)), f.mul(fr(a), fr(b)));
                }
            }
        }
    }

    #[test]
    fn split_is_a_bijection() {
        for base in [
            Field::prime(2).unwrap(),
            Field::prime(3).unwrap(),
            Field::gf(2, 2).unwrap(),
        ] {
            let q = QuadExt::new(&base).unwrap();
            for v in q.field().elements() {
                let (a, b) = q.split(v);
                assert!(base.contains(a) && base.contains(b));
                let back = q.field().add(a, q.field().mul(b, q.gamma()));
                assert_eq!(back, v);
            }
        }
    }

    #[test]
    fn subfields_are_prefixes() {
        let f4 = Field::gf(2, 2).unwrap();
        let f16 = Field::smallest_extension(&f4, 2).unwrap();
        for a in f4.elements() {
            for b in f4.elements() {
                assert_eq!(f16.mul(a, b), f4.mul(a, b));
                assert_eq!(f16.add(a, b), f4.add(a, b));
            }
        }
        assert_eq!(f16.prime_field().size(), 2);
    }

    #[test]
    fn primitive_elements_generate() {
        for f in sample_fields() {
            let g = f.primitive_element();
            let mut x = Elem::ONE;
            let mut seen = 0;
            loop {
                x = f.mul(x, g);
                seen += 1;
                if x == Elem::ONE {
                    break;
                }
            }
            assert_eq!(seen, f.size() - 1);
        }
    }
}
