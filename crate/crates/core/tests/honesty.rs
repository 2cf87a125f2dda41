//! The exactness honesty policy, exercised on both sides of the line it
//! draws: answers are claimed exact only when no spectral-sequence
//! differential could connect two nonzero first-page entries.

use num_bigint::BigInt;

use bbw::cohom::{cohomology, ext, ExtAnswer};
use bbw::models;

/// Hom(F_2, F_0(−7·H_Y)) on TY(6) through the two-term complex form of the
/// target: the two columns carry nonzero entries at adjacent total degrees
/// that cancel only in the cone, so the honest answer is bounds with Euler
/// characteristic zero — while the tautological-quotient form of the same
/// object resolves the cancellation and certifies the vanishing exactly.
#[test]
fn complex_form_yields_bounds_where_the_sheaf_form_decides() {
    let source = models::f_object(6, 2);
    let complex_target = models::f_object(6, 0).twisted(0, -7).unwrap();
    let sheaf_target = models::f_target(6, 0).twisted(0, -7).unwrap();

    let hedged = ext(&source, &complex_target).unwrap();
    match &hedged {
        ExtAnswer::Bounds {
            lower,
            upper,
            euler,
        } => {
            assert!(lower.is_zero(), "nothing survives in the lower bound");
            assert!(!upper.is_zero(), "the upper bound sees the cancelling pair");
            assert!(euler.is_zero(), "the Euler characteristic already vanishes");
        }
        ExtAnswer::Exact(_) => panic!("the two-term form cannot certify this cell"),
    }

    let decided = ext(&source, &sheaf_target).unwrap();
    assert!(decided.is_exactly_zero());
}

/// Both representations of F_0 always agree at the Euler-characteristic
/// level, which no differential can change.
#[test]
fn the_two_f0_forms_share_euler_characteristics() {
    for n in [6usize, 7] {
        for t in -9..=2i64 {
            let complex_form = cohomology(&models::f_object(n, 0).twisted(0, t).unwrap())
                .unwrap()
                .euler();
            let sheaf_form = cohomology(&models::f_target(n, 0).twisted(0, t).unwrap())
                .unwrap()
                .euler();
            assert_eq!(complex_form, sheaf_form, "n = {n}, t = {t}");
        }
    }
}

/// Serialized shapes: exactness flag, the dual-space convention marker, and
/// decimal-string big integers.
#[test]
fn report_json_shapes() {
    let ans = ext(&models::e_object(6, 1), &models::e_object(6, 0)).unwrap();
    let json = serde_json::to_value(&ans).unwrap();
    assert_eq!(json["exact"], serde_json::json!(true));
    assert_eq!(json["graded"]["dual_convention"], serde_json::json!("W*"));
    assert_eq!(
        json["graded"]["degrees"]["0"]["terms"][0]["mult"],
        serde_json::json!("1")
    );
    assert_eq!(
        json["graded"]["degrees"]["0"]["terms"][0]["weight"][0],
        serde_json::json!("1")
    );

    let obj = bbw::pushforward::line_pushforward(6, -8).unwrap();
    let json = serde_json::to_value(&obj).unwrap();
    let terms = json["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 2);
    for t in terms {
        assert_eq!(t["shift"], serde_json::json!(5));
        assert_eq!(t["fiber_quotient"], serde_json::json!(false));
    }

    // multiplicities survive as exact decimal strings well past u64
    let big = bbw::schur::weyl_dimension(
        &bbw::weights::DominantWeight::new(vec![40, 30, 20, 10, 0, -10, -20]).unwrap(),
    );
    assert!(big > BigInt::from(u64::MAX));
}
