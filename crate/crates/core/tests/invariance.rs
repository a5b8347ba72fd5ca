//! Classification does not depend on the chosen projective coordinates.

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use trigonal::algebra::{ExactMatrix, MultiPoly};
use trigonal::curves::{canonical_system, generate_degy3, generate_on_scroll, random_invertible, CanonicalCurve, CanonicalModel, PlaneCurve};
use trigonal::format::parse_poly;
use trigonal::pipeline::{classify_canonical, classify_plane, ClassifyOptions};
use trigonal::scroll::substitute_linear;

fn mix_forms(k: &CanonicalCurve, t: &ExactMatrix) -> CanonicalCurve {
    let CanonicalModel::Forms { forms, source } = &k.model else { panic!("forms expected") };
    let mixed: Vec<MultiPoly> = (0..forms.len())
        .map(|i| forms.iter().enumerate().fold(MultiPoly::zero(3), |acc, (j, f)| acc.add(&f.scale(&t[(i, j)]))))
        .collect();
    CanonicalCurve::from_forms(mixed, source.clone())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 6, ..ProptestConfig::default() })]

    #[test]
    fn canonical_coordinates(seed in 0u64..1000) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (c, _) = generate_degy3(3 + (seed % 2) as u32, 5, seed).unwrap();
        let k = canonical_system(&c).unwrap();
        let t = random_invertible(&mut rng, k.genus(), 3);
        let a = classify_canonical(&k, &ClassifyOptions::default()).unwrap();
        let b = classify_canonical(&mix_forms(&k, &t), &ClassifyOptions::default()).unwrap();
        prop_assert_eq!(a.case, b.case);
        prop_assert_eq!(a.scroll_params, b.scroll_params);
    }

    #[test]
    fn scroll_coordinates(seed in 0u64..1000) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (k, _) = generate_on_scroll(2, 2, 3, seed).unwrap();
        let t = random_invertible(&mut rng, k.genus(), 3);
        let b = classify_canonical(&mix_forms(&k, &t), &ClassifyOptions::default()).unwrap();
        prop_assert_eq!(b.scroll_params, Some((2, 2)));
    }

    #[test]
    fn plane_coordinates(seed in 0u64..1000) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let t = random_invertible(&mut rng, 3, 3);
        let tinv = t.inverse().unwrap();
        let quintic = parse_poly("x^5 + y^5 + z^5 + x^2*y^2*z", &["x", "y", "z"]).unwrap();
        let r = classify_plane(&PlaneCurve::new(substitute_linear(&quintic, &t)), &ClassifyOptions::default()).unwrap();
        prop_assert_eq!(r.case.as_str(), "plane_quintic");
        prop_assert_eq!(r.lsa_dim, Some(8));

        // (0 : 0 : 1) lies on the quartic, so T⁻¹(0, 0, 1) lies on its pullback
        let quartic = parse_poly("x^4 + y^4 + x^2*z^2 + y*z^3", &["x", "y", "z"]).unwrap();
        let point: Vec<_> = (0..3).map(|i| tinv[(i, 2)].clone()).collect();
        let opts = ClassifyOptions { point: Some(point), ..ClassifyOptions::default() };
        let r = classify_plane(&PlaneCurve::new(substitute_linear(&quartic, &t)), &opts).unwrap();
        prop_assert_eq!(r.case.as_str(), "genus3_trigonal");
    }
}
