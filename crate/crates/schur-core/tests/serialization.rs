//! Round-trip and golden-file checks for the text grammar and JSON form.

use proptest::prelude::*;
use schur_core::{
    canonicalize_pair, format_element, from_json, one, parse_element, to_json_string,
    AlgebraContext, AlgebraElement, BigRational, CoeffField, Fp, FpContext, RatContext,
};

fn rat(n: i64, r: usize) -> RatContext {
    AlgebraContext::rational(n, r).unwrap()
}

#[test]
fn golden_identity_element_json() {
    let ctx = rat(2, 2);
    let expected = include_str!("golden/one_n2_r2_rational.json");
    assert_eq!(to_json_string(&one(&ctx)), expected.trim_end());
    assert_eq!(from_json(expected, &ctx).unwrap(), one(&ctx));
}

#[test]
fn golden_prime_field_element_json() {
    let ctx: FpContext = AlgebraContext::gf(2, 2, 5).unwrap();
    let e = parse_element::<Fp>("7*xi(1,1;1,1) + 8*xi(2,1;4,-1)", &ctx).unwrap();
    let expected = include_str!("golden/double_diagonal_gf5.json");
    assert_eq!(to_json_string(&e), expected.trim_end());
    assert_eq!(from_json(expected, &ctx).unwrap(), e);
}

#[test]
fn golden_text_rendering() {
    let ctx = rat(2, 2);
    let e = parse_element("xi(1,2;0,5) - xi(1,1;1,2) - 1/3*xi(1,1;1,1)", &ctx).unwrap();
    assert_eq!(
        format_element(&e),
        "-1/3*xi(1,1;1,1) - xi(1,1;1,2) + xi(1,2;0,5)"
    );
}

/// Random elements over Q built from raw pairs and fractional coefficients.
fn rational_element_strategy(
    n: i64,
    r: usize,
    bound: i64,
) -> impl Strategy<Value = AlgebraElement<BigRational>> {
    let term = (
        prop::collection::vec(1..=n, r),
        prop::collection::vec((1 - bound)..=(n + bound), r),
        -6i64..=6,
        1i64..=4,
    );
    prop::collection::vec(term, 0..5).prop_map(move |terms| {
        let ctx = AlgebraContext::rational(n, r).unwrap();
        let mut acc = AlgebraElement::zero(&ctx);
        for (top, bottom, num, den) in terms {
            let (sym, _) = canonicalize_pair(&top, &bottom, n).unwrap();
            let coeff = BigRational::from_fraction(
                &(),
                &num_bigint::BigInt::from(num),
                &num_bigint::BigUint::from(den as u64),
            )
            .unwrap();
            let term = AlgebraElement::from_term(sym, coeff, &ctx).unwrap();
            acc = acc.add(&term).unwrap();
        }
        acc
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn text_round_trip(e in rational_element_strategy(3, 3, 3)) {
        let ctx = rat(3, 3);
        let rendered = format_element(&e);
        let back = parse_element(&rendered, &ctx).unwrap();
        prop_assert_eq!(&back, &e);
        // Rendering is a normal form: parse(format(e)) formats identically.
        prop_assert_eq!(format_element(&back), rendered);
    }

    #[test]
    fn json_round_trip(e in rational_element_strategy(3, 3, 3)) {
        let ctx = rat(3, 3);
        let s = to_json_string(&e);
        let back = from_json(&s, &ctx).unwrap();
        prop_assert_eq!(&back, &e);
        prop_assert_eq!(to_json_string(&back), s);
    }
}
