use proptest::prelude::*;
use qarith::{LaurentPoly, LinComb, RationalFunction};
use uqrep::*;

fn coefficient() -> impl Strategy<Value = RationalFunction> {
    prop::collection::vec((-3i64..=3, -4i64..=4), 1..3)
        .prop_map(|terms| RationalFunction::from(LaurentPoly::from_terms(terms)))
}

fn vector() -> impl Strategy<Value = TensorVector> {
    prop::collection::vec(1u32..=3, 1..=4).prop_flat_map(|parts| {
        let comp = Composition::new(parts).unwrap();
        let len = comp.len();
        prop::collection::vec((prop::collection::vec(0u8..=1, len), coefficient()), 0..5).prop_map(move |terms| {
            let support: LinComb<Bits> = terms.into_iter().map(|(b, c)| (Bits::new(b).unwrap(), c)).collect();
            TensorVector::from_lincomb(&comp, support).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bar_is_antilinear_and_involutive(x in vector(), c in coefficient()) {
        prop_assert_eq!(x.bar().bar(), x.clone());
        prop_assert_eq!(x.scale(&c).bar(), x.bar().scale(&c.bar()));
    }

    #[test]
    fn form_is_symmetric(x in vector(), y in vector()) {
        if x.comp() == y.comp() {
            prop_assert_eq!(x.form(&y).unwrap(), y.form(&x).unwrap());
        }
    }

    #[test]
    fn json_roundtrip(x in vector()) {
        let js = serde_json::to_string(&TensorVectorJson::from(&x)).unwrap();
        let back: TensorVectorJson = serde_json::from_str(&js).unwrap();
        prop_assert_eq!(back.into_vector().unwrap(), x);
    }

    #[test]
    fn canonical_coordinates_invert_expansion(x in vector()) {
        let coords = to_canonical_coordinates(&x).unwrap();
        let mut rebuilt = TensorVector::zero(x.comp());
        for (eta, c) in coords.iter() {
            rebuilt = rebuilt.add(&canonical_basis(x.comp(), eta).unwrap().scale(c)).unwrap();
        }
        prop_assert_eq!(rebuilt, x);
    }
}
