//! The concrete objects the duality verification works with: the exceptional
//! triple E_k on Gr(2,n), the triple F_k on the Pfaffian resolution, their
//! duals, and the mutated complexes 'F_k.

use num_bigint::BigInt;
use num_traits::One;

use crate::bundles::{EquivariantObject, Space};
use crate::schur::VirtualRep;
use crate::weights::DominantWeight;
use crate::Error;

/// Gr(2, n), the Grassmannian of lines carrying the E-side collection.
pub fn x_space(n: usize) -> Space {
    Space::grassmannian(2, n).expect("Gr(2,n) with n >= 3")
}

/// The resolution total space P(Λ²K⊥) → Gr(n−4, n).
pub fn resolution_space(n: usize) -> Space {
    Space::resolution(n).expect("resolution needs n >= 6")
}

/// The base Gr(n−4, n) of the resolution, as a plain Grassmannian.
pub fn resolution_base(n: usize) -> Space {
    Space::grassmannian(n - 4, n).expect("base of the resolution")
}

/// E_0 = O, E_1 = U, E_2 = S²U on Gr(2,n).
pub fn e_object(n: usize, k: usize) -> EquivariantObject {
    let x = x_space(n);
    match k {
        0 => EquivariantObject::structure(x),
        1 => EquivariantObject::tautological_sub(x),
        2 => EquivariantObject::sym_sub(x, 2),
        _ => panic!("E_k defined for k = 0, 1, 2"),
    }
}

/// F_2 = O, F_1 = W/K, and F_0 as the two-term complex
/// [O(H_G−H_Y) → Λ²(W/K)] on the resolution of Pf(4, n).
///
/// The equivariant structure of the O(H_G) factor is (det K⊥)^{−1}: it comes
/// from the subline embedding O(−H_Y) ⊂ Λ²K⊥ = Λ²(W/K) ⊗ det K⊥.
pub fn f_object(n: usize, k: usize) -> EquivariantObject {
    let ty = resolution_space(n);
    match k {
        2 => EquivariantObject::structure(ty),
        1 => EquivariantObject::quotient(ty),
        0 => {
            let head = EquivariantObject::schur(
                ty,
                DominantWeight::zero(n - 4),
                DominantWeight::new(vec![-1; 4]).expect("dominant"),
            )
            .expect("well formed")
            .twisted(0, -1)
            .expect("fiber twist on the resolution")
            .shifted(1);
            let tail = EquivariantObject::wedge_quotient(ty, 2);
            head.plus(&tail).expect("same space")
        }
        _ => panic!("F_k defined for k = 0, 1, 2"),
    }
}

/// F_k^*.
pub fn f_dual(n: usize, k: usize) -> EquivariantObject {
    f_object(n, k).dual()
}

/// F_k in target position. For k = 0 this is the sheaf form
/// F_0 = Q ⊗ (det K⊥)^{−1} with Q the rank-5 tautological quotient of the
/// fibration, which the pushforward resolves through the split tautological
/// sequence; Hom(−, F_0) computed this way reproduces the cone of the
/// two-term complex exactly, where the termwise bound alone could not
/// exclude cancellation.
pub fn f_target(n: usize, k: usize) -> EquivariantObject {
    if k != 0 {
        return f_object(n, k);
    }
    let ty = resolution_space(n);
    let bundle = crate::bundles::SchurBundle::new(
        ty.base(),
        DominantWeight::zero(n - 4),
        DominantWeight::new(vec![-1; 4]).expect("dominant"),
    )
    .expect("ranks match");
    EquivariantObject::from_terms(
        ty,
        vec![crate::bundles::Term {
            outer: VirtualRep::trivial(n),
            bundle,
            twist_g: 0,
            twist_y: 0,
            shift: 0,
            fiber_quotient: true,
        }],
    )
    .expect("well formed")
}

/// The mutated complexes 'F_k:
/// 'F_0 = F_0^*, 'F_1 = [W⊗F_0^* → F_1^*], 'F_2 = [S²W⊗F_0^* → W⊗F_1^* → F_2^*],
/// each placed with its head in degree 0, so that Hom('F_k, 'F_l) follows
/// the degree-0 Hom pattern of the Grassmannian triple.
pub fn f_prime(n: usize, k: usize) -> EquivariantObject {
    let w = VirtualRep::single(standard_weight(n, 1), BigInt::one());
    let s2w = VirtualRep::single(standard_weight(n, 2), BigInt::one());
    match k {
        0 => f_dual(n, 0),
        1 => {
            let head = f_dual(n, 0).with_outer(&w).expect("rank n");
            head.plus(&f_dual(n, 1).shifted(-1)).expect("same space")
        }
        2 => {
            let head = f_dual(n, 0).with_outer(&s2w).expect("rank n");
            let mid = f_dual(n, 1).with_outer(&w).expect("rank n").shifted(-1);
            head.plus(&mid)
                .and_then(|x| x.plus(&f_dual(n, 2).shifted(-2)))
                .expect("same space")
        }
        _ => panic!("'F_k defined for k = 0, 1, 2"),
    }
}

/// The weight of S^m W.
fn standard_weight(n: usize, m: i64) -> DominantWeight {
    let mut e = vec![0i64; n];
    e[0] = m;
    DominantWeight::new(e).expect("dominant")
}

/// The weight of Λ^m W (on W, not W*).
pub fn wedge_w_weight(n: usize, m: usize) -> DominantWeight {
    let mut e = vec![0i64; n];
    for x in e.iter_mut().take(m) {
        *x = 1;
    }
    DominantWeight::new(e).expect("dominant")
}

/// The weight of S^m W* as recorded on W*: (m, 0, …, 0).
pub fn sym_w_dual_weight(n: usize, m: i64) -> DominantWeight {
    standard_weight(n, m)
}

/// Λ^m(W/K) on the resolution base, for the quiver Hom table.
pub fn wedge_quotient_base(n: usize, m: usize) -> EquivariantObject {
    EquivariantObject::wedge_quotient(resolution_base(n), m)
}

/// Resolves a label used in Lefschetz models to a concrete object.
///
/// Grassmannian side: `O`, `U`, `S^m(U)`, `E0..E2`; resolution side:
/// `F0*`, `F1*`, `F2*`.
pub fn resolve_label(n: usize, label: &str) -> Result<EquivariantObject, Error> {
    match label {
        "O" => Ok(EquivariantObject::structure(x_space(n))),
        "U" => Ok(EquivariantObject::tautological_sub(x_space(n))),
        "E0" => Ok(e_object(n, 0)),
        "E1" => Ok(e_object(n, 1)),
        "E2" => Ok(e_object(n, 2)),
        "F0*" => Ok(f_dual(n, 0)),
        "F1*" => Ok(f_dual(n, 1)),
        "F2*" => Ok(f_dual(n, 2)),
        _ => {
            if let Some(rest) = label.strip_prefix("S^") {
                if let Some(m) = rest.strip_suffix("(U)") {
                    if let Ok(m) = m.parse::<usize>() {
                        return Ok(EquivariantObject::sym_sub(x_space(n), m));
                    }
                }
            }
            Err(Error::UnknownLabel(label.to_string()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f0_is_a_two_term_complex() {
        let f0 = f_object(6, 0);
        assert_eq!(f0.terms().len(), 2);
        let shifts: Vec<i64> = f0.terms().iter().map(|t| t.shift).collect();
        assert_eq!(shifts, vec![-1, 0]);
    }

    #[test]
    fn f_prime_counts() {
        assert_eq!(f_prime(7, 0).terms().len(), 2);
        assert_eq!(f_prime(7, 1).terms().len(), 3);
        assert_eq!(f_prime(7, 2).terms().len(), 4);
    }

    #[test]
    fn labels_resolve() {
        assert_eq!(resolve_label(6, "E1").unwrap(), e_object(6, 1));
        assert_eq!(
            resolve_label(6, "S^2(U)").unwrap(),
            EquivariantObject::sym_sub(x_space(6), 2)
        );
        assert!(resolve_label(6, "nope").is_err());
    }
}
