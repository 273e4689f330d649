//! Finite field arithmetic: prime fields, extensions, towers and the trace.

use qposet::{Elem, Field, QuadExt};

fn main() -> qposet::Result<()> {
    let f8 = Field::gf(2, 3)?;
    let a = f8.primitive_element();
    println!(
        "GF(8): modulus {:?}, primitive element {:?}",
        f8.modulus(),
        f8.coeffs(a)
    );
    let powers: Vec<u32> = (0..7).map(|e| f8.pow(a, e).0).collect();
    println!("powers of the primitive element: {powers:?}");
    for x in f8.elements().filter(|x| !x.is_zero()) {
        assert_eq!(f8.mul(x, f8.inv(x)?), Elem::ONE);
    }
    println!("every nonzero element has an inverse");

    let traces: Vec<u32> = f8.elements().map(|x| f8.trace_to_prime(x).0).collect();
    println!("tr: GF(8) -> GF(2) = {traces:?}");

    // GF(9) as a quadratic extension of GF(3) with basis {1, γ}.
    let qe = QuadExt::new(&Field::prime(3)?)?;
    let g = qe.gamma();
    println!(
        "GF(9) over GF(3): γ = {:?}, γ^3 = {:?}",
        qe.field().coeffs(g),
        qe.field().coeffs(qe.conj(g))
    );
    let v = qe.join(Elem(2), Elem(1));
    println!("2 + γ splits back into {:?}", qe.split(v));

    // A tower GF(16) over GF(4): indices of the subfield are a prefix.
    let f4 = Field::gf(2, 2)?;
    let f16 = Field::smallest_extension(&f4, 2)?;
    println!(
        "GF(16) over GF(4): relative degree {}, absolute degree {}",
        f16.relative_degree(),
        f16.degree()
    );
    for x in f4.elements() {
        for y in f4.elements() {
            assert_eq!(f16.mul(x, y), f4.mul(x, y));
        }
    }
    println!("GF(4) multiplication agrees inside GF(16)");
    Ok(())
}
