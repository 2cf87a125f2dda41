//! Cross-checks tying the two sides of the duality together at the
//! Euler-characteristic level, plus the dual-side form of the vanishing
//! table and the full merged verification run.

use num_bigint::BigInt;
use num_traits::One;

use bbw::cohom::ext;
use bbw::models;
use bbw::schur::VirtualRep;
use bbw::verify;
use bbw::weights::DominantWeight;

/// χ Hom('F_k, 'F_l) on the resolution follows the same S^{k−l}W* pattern as
/// Hom(E_k, E_l) on the Grassmannian; both sides are computed independently.
#[test]
fn mutated_triple_follows_the_grassmannian_hom_pattern() {
    for n in [6usize, 7] {
        for k in 0..3usize {
            for l in 0..3usize {
                let f_side = ext(&models::f_prime(n, k), &models::f_prime(n, l))
                    .unwrap()
                    .euler();
                let e_side = ext(&models::e_object(n, k), &models::e_object(n, l))
                    .unwrap()
                    .euler();
                assert_eq!(f_side, e_side, "n = {n}, ('F_{k}, 'F_{l})");
                let expected = if k >= l {
                    let mut w = vec![0i64; n];
                    w[0] = (k - l) as i64;
                    VirtualRep::single(DominantWeight::new(w).unwrap(), BigInt::one())
                } else {
                    VirtualRep::zero(n)
                };
                assert_eq!(
                    f_side,
                    expected,
                    "n = {n}, S^{}W* pattern",
                    k as i64 - l as i64
                );
            }
        }
    }
}

/// The vanishing table read on the dual bundles: Hom(F_l^*, F_k^*(−t·H_Y))
/// agrees with the primal form for a sample of cells.
#[test]
fn dual_side_vanishing_samples() {
    // F_1^* and F_2^* dualize directly; spot-check the dual form of cells
    for (k, l, t) in [(1usize, 1usize, 4i64), (2, 1, 3), (1, 2, 8), (2, 2, 6)] {
        let ans = ext(
            &models::f_dual(6, l),
            &models::f_dual(6, k).twisted(0, -t).unwrap(),
        )
        .unwrap();
        assert!(ans.is_exactly_zero(), "Hom(F_{l}*, F_{k}*(-{t}H_Y))");
    }
}

/// The merged per-rank verification (vanishing + collection + quiver) runs
/// clean for both ambient ranks.
#[test]
fn full_lefschetz_verification_has_zero_failures() {
    for n in [6usize, 7] {
        let log = verify::verify_lefschetz(n).unwrap();
        assert!(log.is_success(), "{log}");
        assert_eq!(log.failures(), 0);
    }
}
