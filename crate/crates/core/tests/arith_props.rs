mod common;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

use contour::arith::{
    cyclotomic_modulus, det_bareiss, det_cofactor, CycPolynomial, CyclotomicNumber, Field, Matrix, Rational, Ring,
};

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn totient(m: u32) -> usize {
    (1..=m).filter(|&k| num_integer_gcd(k, m) == 1).count()
}

fn num_integer_gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        num_integer_gcd(b, a % b)
    }
}

#[test]
fn moduli_multiply_to_x_m_minus_one() {
    for m in 1..=12u32 {
        let product = (1..=m)
            .filter(|e| m % e == 0)
            .fold(vec![BigInt::one()], |acc, e| poly_mul(&acc, &cyclotomic_modulus(e)));
        let mut want = vec![BigInt::zero(); m as usize + 1];
        want[0] = -BigInt::one();
        want[m as usize] = BigInt::one();
        assert_eq!(product, want, "m = {}", m);
        assert_eq!(cyclotomic_modulus(m).len() - 1, totient(m));
    }
    for p in [2u32, 3, 5, 7, 11] {
        assert!(cyclotomic_modulus(p).iter().all(|c| c.is_one()));
    }
}

fn cyc(m: u32) -> impl Strategy<Value = CyclotomicNumber> {
    prop::collection::vec((-6i64..=6, 1i64..=4), m as usize).prop_map(move |v| {
        let coeffs = v.into_iter().map(|(a, b)| Rational::new(a.into(), b.into())).collect();
        CyclotomicNumber::from_coeffs(m, coeffs)
    })
}

fn order_and_pair() -> impl Strategy<Value = (CyclotomicNumber, CyclotomicNumber)> {
    (2u32..=6).prop_flat_map(|m| (cyc(m), cyc(m)))
}

fn small_poly(m: u32) -> impl Strategy<Value = CycPolynomial> {
    prop::collection::vec((-3i64..=3, prop::collection::vec(0u32..=2, m as usize)), 0..=3).prop_map(move |terms| {
        terms.into_iter().fold(CycPolynomial::zero(m), |acc, (c, e)| {
            acc.add(&CycPolynomial::monomial(CyclotomicNumber::from_integer(m, c), e))
        })
    })
}

fn poly_matrix() -> impl Strategy<Value = Matrix<CycPolynomial>> {
    (1u32..=3, 0usize..=5).prop_flat_map(|(m, n)| {
        prop::collection::vec(prop::collection::vec(small_poly(m), n), n)
            .prop_map(move |rows| Matrix::from_rows(rows, &CycPolynomial::zero(m)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn inverse_is_two_sided((x, _) in order_and_pair()) {
        prop_assume!(!x.is_zero());
        let y = x.inv().unwrap();
        prop_assert!(x.mul(&y).is_one());
        prop_assert!(y.mul(&x).is_one());
    }

    #[test]
    fn conjugation_is_an_involutive_homomorphism((x, y) in order_and_pair()) {
        prop_assert_eq!(x.conjugate().conjugate(), x.clone());
        prop_assert_eq!(x.mul(&y).conjugate(), x.conjugate().mul(&y.conjugate()));
        prop_assert_eq!(x.add(&y).conjugate(), x.conjugate().add(&y.conjugate()));
        prop_assert!(x.one_like().conjugate().is_one());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn fraction_free_determinant_matches_expansions(a in poly_matrix()) {
        let zero = a.zero_element().clone();
        let bareiss = det_bareiss(&a).unwrap();
        prop_assert_eq!(&bareiss, &det_cofactor(&a).unwrap());
        prop_assert_eq!(&bareiss, &common::leibniz(&a, &zero));
    }
}
