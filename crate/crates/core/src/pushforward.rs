//! Pushforward along the projective bundle ζ : P(Λ²K⊥) → Gr(n−4, n).
//!
//! The fiber is P(V) for V = Λ²K⊥ of rank 6, with the convention that
//! O(−H_Y) ⊂ V is the tautological subline. Consequently
//!
//! * ζ_* O(t·H_Y) = S^t V^∨ = S^t Λ²(W/K)            for t ≥ 0,
//! * ζ_* O(t·H_Y) = 0                                 for −5 ≤ t ≤ −1,
//! * ζ_* O(t·H_Y) = S^{−t−6} V ⊗ det V  in degree 5   for t ≤ −6,
//!
//! where det Λ²K⊥ = (det K⊥)³, of H_G degree −3. The symmetric powers of Λ²
//! expand through [`crate::schur::sym_power_of_wedge2`].

use num_bigint::BigInt;

use crate::bundles::{EquivariantObject, Space, Term};
use crate::schur::{sym_power_of_wedge2, VirtualRep};
use crate::weights::DominantWeight;
use crate::Error;

/// Rank of the fiber bundle Λ²K⊥; only K⊥ of rank 4 is supported.
pub const FIBER_RANK: usize = 6;

/// ζ_* O(t·H_Y) as an object on the plain base Grassmannian Gr(n−4, n).
pub fn line_pushforward(n: usize, t: i64) -> Result<EquivariantObject, Error> {
    if n < 6 {
        return Err(Error::BadResolutionRank(n));
    }
    let base = Space::grassmannian(n - 4, n)?;
    let k = n - 4;
    let r = FIBER_RANK as i64;
    // det-shift 3 encodes ⊗ det Λ²K⊥ = (det K⊥)³ inside the γ slot
    let (power, det_shift, shift, dual_side) = if t >= 0 {
        (t, 0, 0, true)
    } else if t > -r {
        return Ok(EquivariantObject::zero(base));
    } else {
        (-t - r, 3, r - 1, false)
    };
    let mut terms = Vec::new();
    for lambda in sym_power_of_wedge2(power as usize, 4) {
        let gamma = if dual_side {
            lambda.dual()
        } else {
            lambda.det_shift(det_shift)
        };
        terms.push(Term::plain(
            VirtualRep::trivial(n),
            crate::bundles::SchurBundle::new(base.base(), DominantWeight::zero(k), gamma)?,
            0,
            0,
            shift,
        ));
    }
    EquivariantObject::from_terms(base, terms)
}

/// ζ_*(E ⊗ O(t·H_Y)) for E pulled back from the base Grassmannian.
pub fn pushforward(n: usize, t: i64, e: &EquivariantObject) -> Result<EquivariantObject, Error> {
    let expected = Space::grassmannian(n - 4, n)?;
    if e.space() != expected {
        return Err(Error::SpaceMismatch);
    }
    e.tensor(&line_pushforward(n, t)?)
}

/// ζ_*(Q(s·H_Y)) for the rank-5 tautological quotient Q = Λ²K⊥/O(−H_Y).
///
/// Pushing the twisted tautological sequence, the connecting map between the
/// two line-bundle pushforwards is the comultiplication S^{m+1}V → V ⊗ S^m V
/// (degree-5 range) resp. the map dual to the contraction V^∨ ⊗ S^s V →
/// S^{s−1}V (degree-0 range); both are split in characteristic zero, so the
/// pushforward is the genuine direct-sum complement and equals the exact
/// class difference, with provably nonnegative multiplicities.
pub fn quotient_line_pushforward(n: usize, s: i64) -> Result<EquivariantObject, Error> {
    if n < 6 {
        return Err(Error::BadResolutionRank(n));
    }
    let base = Space::grassmannian(n - 4, n)?;
    let r = FIBER_RANK as i64;

    // sym powers of V = Λ²K⊥ (or its dual) as a γ-slot representation
    let sym = |m: i64, dual: bool| -> VirtualRep {
        let mut rep = VirtualRep::zero(4);
        if m < 0 {
            return rep;
        }
        for lambda in sym_power_of_wedge2(m as usize, 4) {
            let w = if dual { lambda.dual() } else { lambda };
            rep.add_term(w, num_traits::One::one());
        }
        rep
    };
    let wedge = VirtualRep::single(
        DominantWeight::new(vec![1, 1, 0, 0]).expect("dominant"),
        num_traits::One::one(),
    );

    let (gammas, shift, det_shift) = if s >= 0 {
        // coker(S^{s−1}V^∨ → V ⊗ S^s V^∨) in degree 0
        let class = wedge.tensor(&sym(s, true))?.sub(&sym(s - 1, true))?;
        (class, 0, 0)
    } else if s == -(r - 1) {
        // the boundary case: all of R⁵ζ_*O(−6·H_Y) = det V survives in R⁴
        (VirtualRep::trivial(4), r - 2, 3)
    } else if s > -r {
        (VirtualRep::zero(4), 0, 0)
    } else {
        // coker(S^{m+1}V → V ⊗ S^m V) ⊗ det V in degree 5, m = −s−6
        let m = -s - r;
        let class = wedge.tensor(&sym(m, false))?.sub(&sym(m + 1, false))?;
        (class, r - 1, 3)
    };

    assert!(
        gammas.is_effective() || gammas.is_zero(),
        "quotient pushforward must be an honest sheaf class"
    );
    let mut terms = Vec::new();
    for (gamma, mult) in gammas.terms() {
        terms.push(Term::plain(
            VirtualRep::trivial(n).scale(mult),
            crate::bundles::SchurBundle::new(
                base.base(),
                DominantWeight::zero(n - 4),
                gamma.det_shift(det_shift),
            )?,
            0,
            0,
            shift,
        ));
    }
    EquivariantObject::from_terms(base, terms)
}

/// Pushes a full object on the resolution down to the base Grassmannian,
/// term by term through the H_Y twists.
pub fn pushforward_to_base(obj: &EquivariantObject) -> Result<EquivariantObject, Error> {
    let Space::Resolution { n } = obj.space() else {
        return Err(Error::SpaceMismatch);
    };
    let base = Space::grassmannian(n - 4, n)?;
    let mut acc = EquivariantObject::zero(base);
    for term in obj.terms() {
        let stripped = EquivariantObject::from_terms(
            base,
            vec![Term {
                twist_y: 0,
                fiber_quotient: false,
                ..term.clone()
            }],
        )?;
        let fiber = if term.fiber_quotient {
            quotient_line_pushforward(n, term.twist_y)?
        } else {
            line_pushforward(n, term.twist_y)?
        };
        acc = acc.plus(&stripped.tensor(&fiber)?)?;
    }
    Ok(acc)
}

/// χ(TY, O(t·H_Y)) as an exact integer.
pub fn chi(n: usize, t: i64) -> Result<BigInt, Error> {
    chi_of(n, &EquivariantObject::line(Space::resolution(n)?, 0, t)?)
}

/// Euler characteristic of an arbitrary object on the resolution.
pub fn chi_of(_n: usize, obj: &EquivariantObject) -> Result<BigInt, Error> {
    Ok(crate::cohom::cohomology(obj)?.euler().dimension())
}

/// The projectivization convention is pinned by ζ_*O(H_Y) = Λ²(W/K); this
/// check runs at CLI startup and in the test suite.
pub fn convention_self_test(n: usize) -> Result<(), Error> {
    let lhs = line_pushforward(n, 1)?;
    let rhs = EquivariantObject::wedge_quotient(Space::grassmannian(n - 4, n)?, 2);
    if lhs == rhs {
        Ok(())
    } else {
        Err(Error::ConventionCheckFailed)
    }
}
