//! Formal equivariant objects: finite complexes of Schur bundles
//! Σ^β U* ⊗ Σ^γ U⊥ on a Grassmannian, with Picard twists, homological
//! shifts, and external multiplicity representations of GL(W).

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::schur::{lr_product, VirtualRep};
use crate::weights::DominantWeight;
use crate::Error;

/// The Grassmannian Gr(k, n) of k-dimensional subspaces of an n-space, with
/// tautological subbundle U of rank k and perp bundle U⊥ of rank n−k.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct Grassmannian {
    pub k: usize,
    pub n: usize,
}

impl Grassmannian {
    pub fn new(k: usize, n: usize) -> Result<Self, Error> {
        if k >= 1 && k < n {
            Ok(Grassmannian { k, n })
        } else {
            Err(Error::BadGrassmannian { k, n })
        }
    }

    pub fn dim(&self) -> usize {
        self.k * (self.n - self.k)
    }

    pub fn perp_rank(&self) -> usize {
        self.n - self.k
    }
}

impl fmt::Display for Grassmannian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gr({},{})", self.k, self.n)
    }
}

/// Where an object lives: a plain Grassmannian, or the total space
/// P(Λ²K⊥) → Gr(n−4, n) resolving the Pfaffian Pf(4, n).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum Space {
    Grassmannian(Grassmannian),
    /// The projectivization of Λ²K⊥ over Gr(n−4, n); carries the extra
    /// Picard class H_Y.
    Resolution {
        n: usize,
    },
}

impl Space {
    pub fn grassmannian(k: usize, n: usize) -> Result<Self, Error> {
        Ok(Space::Grassmannian(Grassmannian::new(k, n)?))
    }

    pub fn resolution(n: usize) -> Result<Self, Error> {
        if n < 6 {
            return Err(Error::BadResolutionRank(n));
        }
        Ok(Space::Resolution { n })
    }

    /// The Grassmannian carrying the Schur-bundle data: the space itself, or
    /// the base Gr(n−4, n) of the resolution.
    pub fn base(&self) -> Grassmannian {
        match self {
            Space::Grassmannian(g) => *g,
            Space::Resolution { n } => Grassmannian { k: n - 4, n: *n },
        }
    }

    pub fn has_fiber_class(&self) -> bool {
        matches!(self, Space::Resolution { .. })
    }

    pub fn ambient_rank(&self) -> usize {
        self.base().n
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Space::Grassmannian(g) => g.fmt(f),
            Space::Resolution { n } => write!(f, "TY({n})"),
        }
    }
}

/// A single Schur bundle Σ^β U* ⊗ Σ^γ U⊥ on the base Grassmannian.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct SchurBundle {
    pub beta: DominantWeight,
    pub gamma: DominantWeight,
}

impl SchurBundle {
    pub fn new(
        base: Grassmannian,
        beta: DominantWeight,
        gamma: DominantWeight,
    ) -> Result<Self, Error> {
        if beta.rank() != base.k {
            return Err(Error::RankMismatch {
                left: beta.rank(),
                right: base.k,
            });
        }
        if gamma.rank() != base.perp_rank() {
            return Err(Error::RankMismatch {
                left: gamma.rank(),
                right: base.perp_rank(),
            });
        }
        Ok(SchurBundle { beta, gamma })
    }
}

/// One summand of a formal complex: an external GL(W) multiplicity factor, a
/// Schur bundle, Picard twists a·H_G + b·H_Y, and a homological degree.
///
/// `outer` carries weights on W itself (not W*); plain integer multiplicities
/// are stored as multiples of the trivial weight. `fiber_quotient` tensors in
/// the rank-5 tautological quotient Λ²K⊥/O(−H_Y) of the resolution; it can
/// only occur in target position of an Ext (its dual is not representable
/// here) and is consumed by the pushforward.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Term {
    pub outer: VirtualRep,
    pub bundle: SchurBundle,
    pub twist_g: i64,
    pub twist_y: i64,
    pub shift: i64,
    pub fiber_quotient: bool,
}

impl Term {
    pub fn plain(
        outer: VirtualRep,
        bundle: SchurBundle,
        twist_g: i64,
        twist_y: i64,
        shift: i64,
    ) -> Self {
        Term {
            outer,
            bundle,
            twist_g,
            twist_y,
            shift,
            fiber_quotient: false,
        }
    }
}

impl Serialize for Term {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Term", 7)?;
        s.serialize_field("beta", &self.bundle.beta)?;
        s.serialize_field("gamma", &self.bundle.gamma)?;
        s.serialize_field("twist_g", &self.twist_g)?;
        s.serialize_field("twist_y", &self.twist_y)?;
        s.serialize_field("shift", &self.shift)?;
        s.serialize_field("fiber_quotient", &self.fiber_quotient)?;
        s.serialize_field("outer", &self.outer)?;
        s.end()
    }
}

/// A finite formal complex of Schur bundles on one space.
///
/// Terms are kept sorted, and terms that agree in everything but the outer
/// factor are merged. Weights are never moved between the β and γ slots:
/// `twist_g` always means a power of det U* (the Plücker O(1)), while
/// determinant factors of U⊥ stay inside γ — the two differ by the
/// equivariant character det W, which matters for recorded representations.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct EquivariantObject {
    space: Space,
    terms: Vec<Term>,
}

impl EquivariantObject {
    pub fn zero(space: Space) -> Self {
        EquivariantObject {
            space,
            terms: Vec::new(),
        }
    }

    pub fn from_terms(space: Space, terms: Vec<Term>) -> Result<Self, Error> {
        let base = space.base();
        for t in &terms {
            if t.bundle.beta.rank() != base.k || t.bundle.gamma.rank() != base.perp_rank() {
                return Err(Error::RankMismatch {
                    left: t.bundle.beta.rank(),
                    right: base.k,
                });
            }
            if (t.twist_y != 0 || t.fiber_quotient) && !space.has_fiber_class() {
                return Err(Error::FiberTwistOnGrassmannian);
            }
            if t.outer.rank() != base.n {
                return Err(Error::RankMismatch {
                    left: t.outer.rank(),
                    right: base.n,
                });
            }
        }
        let mut obj = EquivariantObject {
            space,
            terms: Vec::new(),
        };
        for t in terms {
            obj.push_term(t);
        }
        obj.normalize();
        Ok(obj)
    }

    /// The structure sheaf O.
    pub fn structure(space: Space) -> Self {
        Self::line(space, 0, 0).expect("O is well formed")
    }

    /// The line bundle O(g·H_G + y·H_Y).
    pub fn line(space: Space, g: i64, y: i64) -> Result<Self, Error> {
        let base = space.base();
        let bundle = SchurBundle::new(
            base,
            DominantWeight::zero(base.k),
            DominantWeight::zero(base.perp_rank()),
        )?;
        Self::from_terms(
            space,
            vec![Term::plain(VirtualRep::trivial(base.n), bundle, g, y, 0)],
        )
    }

    /// A single Schur bundle Σ^β U* ⊗ Σ^γ U⊥ in degree 0.
    pub fn schur(space: Space, beta: DominantWeight, gamma: DominantWeight) -> Result<Self, Error> {
        let bundle = SchurBundle::new(space.base(), beta, gamma)?;
        Self::from_terms(
            space,
            vec![Term::plain(
                VirtualRep::trivial(space.base().n),
                bundle,
                0,
                0,
                0,
            )],
        )
    }

    /// S^m U, as Σ^{(0,…,0,−m)} U*.
    pub fn sym_sub(space: Space, m: usize) -> Self {
        let k = space.base().k;
        let mut beta = vec![0i64; k];
        beta[k - 1] = -(m as i64);
        Self::schur(
            space,
            DominantWeight::new(beta).expect("dominant"),
            DominantWeight::zero(space.base().perp_rank()),
        )
        .expect("well formed")
    }

    /// Λ^m U; the zero object when m exceeds the rank of U.
    pub fn wedge_sub(space: Space, m: usize) -> Self {
        let k = space.base().k;
        if m > k {
            return Self::zero(space);
        }
        let mut beta = vec![0i64; k];
        for e in beta.iter_mut().skip(k - m) {
            *e = -1;
        }
        Self::schur(
            space,
            DominantWeight::new(beta).expect("dominant"),
            DominantWeight::zero(space.base().perp_rank()),
        )
        .expect("well formed")
    }

    /// S^m (W/U), as Σ^{(0,…,0,−m)} U⊥.
    pub fn sym_quotient(space: Space, m: usize) -> Self {
        let q = space.base().perp_rank();
        let mut gamma = vec![0i64; q];
        gamma[q - 1] = -(m as i64);
        Self::schur(
            space,
            DominantWeight::zero(space.base().k),
            DominantWeight::new(gamma).expect("dominant"),
        )
        .expect("well formed")
    }

    /// Λ^m (W/U); the zero object when m exceeds the rank of W/U.
    pub fn wedge_quotient(space: Space, m: usize) -> Self {
        let q = space.base().perp_rank();
        if m > q {
            return Self::zero(space);
        }
        let mut gamma = vec![0i64; q];
        for e in gamma.iter_mut().skip(q - m) {
            *e = -1;
        }
        Self::schur(
            space,
            DominantWeight::zero(space.base().k),
            DominantWeight::new(gamma).expect("dominant"),
        )
        .expect("well formed")
    }

    /// S^m U⊥, as Σ^{(m,0,…,0)} U⊥.
    pub fn sym_perp(space: Space, m: usize) -> Self {
        let q = space.base().perp_rank();
        let mut gamma = vec![0i64; q];
        gamma[0] = m as i64;
        Self::schur(
            space,
            DominantWeight::zero(space.base().k),
            DominantWeight::new(gamma).expect("dominant"),
        )
        .expect("well formed")
    }

    /// Λ^m U⊥; the zero object when m exceeds the rank of U⊥.
    pub fn wedge_perp(space: Space, m: usize) -> Self {
        let q = space.base().perp_rank();
        if m > q {
            return Self::zero(space);
        }
        let mut gamma = vec![0i64; q];
        for e in gamma.iter_mut().take(m) {
            *e = 1;
        }
        Self::schur(
            space,
            DominantWeight::zero(space.base().k),
            DominantWeight::new(gamma).expect("dominant"),
        )
        .expect("well formed")
    }

    /// The tautological subbundle U itself (called K on the resolution base).
    pub fn tautological_sub(space: Space) -> Self {
        Self::sym_sub(space, 1)
    }

    /// The quotient W/U.
    pub fn quotient(space: Space) -> Self {
        Self::sym_quotient(space, 1)
    }

    /// The perp bundle U⊥.
    pub fn perp(space: Space) -> Self {
        Self::sym_perp(space, 1)
    }

    /// The trivial bundle with fiber the GL(W)-representation `rep`.
    pub fn outer_rep(space: Space, rep: VirtualRep) -> Result<Self, Error> {
        Self::structure(space).with_outer(&rep)
    }

    pub fn space(&self) -> Space {
        self.space
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Termwise dual: duals in both Schur slots and the outer factor,
    /// negated twists and shifts.
    pub fn dual(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|t| {
                assert!(
                    !t.fiber_quotient,
                    "the tautological-quotient factor has no dual here; \
                     use the two-term complex representation in source position"
                );
                Term {
                    outer: t.outer.dualize(),
                    bundle: SchurBundle {
                        beta: t.bundle.beta.dual(),
                        gamma: t.bundle.gamma.dual(),
                    },
                    twist_g: -t.twist_g,
                    twist_y: -t.twist_y,
                    shift: -t.shift,
                    fiber_quotient: false,
                }
            })
            .collect();
        Self::from_terms(self.space, terms).expect("dual of a valid object is valid")
    }

    /// Twist by O(g·H_G + y·H_Y).
    pub fn twisted(&self, g: i64, y: i64) -> Result<Self, Error> {
        if y != 0 && !self.space.has_fiber_class() {
            return Err(Error::FiberTwistOnGrassmannian);
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                twist_g: t.twist_g + g,
                twist_y: t.twist_y + y,
                ..t.clone()
            })
            .collect();
        Self::from_terms(self.space, terms)
    }

    /// Homological shift `X[s]`: a term in degree d moves to degree d − s.
    pub fn shifted(&self, s: i64) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                shift: t.shift - s,
                ..t.clone()
            })
            .collect();
        Self::from_terms(self.space, terms).expect("shift of a valid object is valid")
    }

    pub fn plus(&self, other: &Self) -> Result<Self, Error> {
        if self.space != other.space {
            return Err(Error::SpaceMismatch);
        }
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Self::from_terms(self.space, terms)
    }

    /// Tensors every term's outer factor with `rep`.
    pub fn with_outer(&self, rep: &VirtualRep) -> Result<Self, Error> {
        let terms = self
            .terms
            .iter()
            .map(|t| {
                Ok(Term {
                    outer: t.outer.tensor(rep)?,
                    ..t.clone()
                })
            })
            .collect::<Result<Vec<_>, Error>>()?;
        Self::from_terms(self.space, terms)
    }

    pub fn scaled(&self, c: &BigInt) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                outer: t.outer.scale(c),
                ..t.clone()
            })
            .collect();
        Self::from_terms(self.space, terms).expect("scaling keeps validity")
    }

    /// Full tensor product, expanding Littlewood-Richardson products in both
    /// Schur slots and the GL(W) product in the outer factor.
    pub fn tensor(&self, other: &Self) -> Result<Self, Error> {
        if self.space != other.space {
            return Err(Error::SpaceMismatch);
        }
        let mut terms = Vec::new();
        for a in &self.terms {
            for b in &other.terms {
                let outer = a.outer.tensor(&b.outer)?;
                if outer.is_zero() {
                    continue;
                }
                let betas = lr_product(&a.bundle.beta, &b.bundle.beta)?;
                let gammas = lr_product(&a.bundle.gamma, &b.bundle.gamma)?;
                assert!(
                    !(a.fiber_quotient && b.fiber_quotient),
                    "at most one tautological-quotient factor per product"
                );
                for (beta, cb) in betas.terms() {
                    for (gamma, cg) in gammas.terms() {
                        terms.push(Term {
                            outer: outer.scale(&(cb * cg)),
                            bundle: SchurBundle {
                                beta: beta.clone(),
                                gamma: gamma.clone(),
                            },
                            twist_g: a.twist_g + b.twist_g,
                            twist_y: a.twist_y + b.twist_y,
                            shift: a.shift + b.shift,
                            fiber_quotient: a.fiber_quotient || b.fiber_quotient,
                        });
                    }
                }
            }
        }
        Self::from_terms(self.space, terms)
    }

    fn push_term(&mut self, t: Term) {
        if t.outer.is_zero() {
            return;
        }
        self.terms.push(t);
    }

    fn normalize(&mut self) {
        let key = |t: &Term| {
            (
                t.shift,
                t.bundle.beta.clone(),
                t.bundle.gamma.clone(),
                t.twist_g,
                t.twist_y,
                t.fiber_quotient,
            )
        };
        self.terms.sort_by(|a, b| key(a).cmp(&key(b)));
        let mut merged: Vec<Term> = Vec::with_capacity(self.terms.len());
        for t in self.terms.drain(..) {
            match merged.last_mut() {
                Some(prev) if key(prev) == key(&t) => {
                    prev.outer = prev.outer.add(&t.outer).expect("ranks agree");
                }
                _ => merged.push(t),
            }
        }
        merged.retain(|t| !t.outer.is_zero());
        self.terms = merged;
    }
}

impl fmt::Display for EquivariantObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for t in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mut factors: Vec<String> = Vec::new();
            if !t.outer.is_trivial_one() {
                if t.outer.num_terms() == 1 && t.outer.terms().next().unwrap().1.is_one() {
                    let w = t.outer.terms().next().unwrap().0;
                    factors.push(format!("S[{w}]W"));
                } else {
                    factors.push(format!("({})W", t.outer));
                }
            }
            if t.fiber_quotient {
                factors.push("Qfib".to_string());
            }
            if t.bundle.beta.entries().iter().any(|&e| e != 0) {
                factors.push(format!("S[{}]U*", t.bundle.beta));
            }
            // print the determinant part of γ as an H_G degree, the usual
            // line-bundle bookkeeping
            let det = *t.bundle.gamma.entries().last().unwrap_or(&0);
            let gamma_disp = t.bundle.gamma.det_shift(-det);
            let g_disp = t.twist_g - det;
            if gamma_disp.entries().iter().any(|&e| e != 0) {
                factors.push(format!("S[{gamma_disp}]Uperp"));
            }
            if factors.is_empty() {
                factors.push("O".to_string());
            }
            write!(f, "{}", factors.join("⊗"))?;
            match (g_disp, t.twist_y) {
                (0, 0) => {}
                (g, 0) => write!(f, "({g}G)")?,
                (0, y) => write!(f, "({y}Y)")?,
                (g, y) if y >= 0 => write!(f, "({g}G+{y}Y)")?,
                (g, y) => write!(f, "({g}G{y}Y)")?,
            }
            if t.shift != 0 {
                write!(f, "[{}]", -t.shift)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gr26() -> Space {
        Space::grassmannian(2, 6).unwrap()
    }

    #[test]
    fn det_slots_stay_distinct() {
        // Σ^{(1,1,1,1)}U⊥ and O(−H_G) = (det U*)^{−1} agree as line bundles
        // but differ by the character det W; they must not be identified.
        let a = EquivariantObject::schur(
            gr26(),
            DominantWeight::zero(2),
            DominantWeight::new(vec![1, 1, 1, 1]).unwrap(),
        )
        .unwrap();
        let b = EquivariantObject::line(gr26(), -1, 0).unwrap();
        assert_ne!(a, b);
        // the printed form reports the common H_G degree
        assert_eq!(a.to_string(), "O(-1G)");
        assert_eq!(b.to_string(), "O(-1G)");
    }

    #[test]
    fn dual_is_involutive() {
        let u = EquivariantObject::tautological_sub(gr26());
        assert_eq!(u.dual().dual(), u);
        let shifted = u.shifted(3).twisted(2, 0).unwrap();
        assert_eq!(shifted.dual().dual(), shifted);
    }

    #[test]
    fn sum_merges_terms() {
        let o = EquivariantObject::structure(gr26());
        let two = o.plus(&o).unwrap();
        assert_eq!(two.terms().len(), 1);
        assert_eq!(two.terms()[0].outer.dimension(), BigInt::from(2));
        let cancel = o.plus(&o.scaled(&BigInt::from(-1))).unwrap();
        assert!(cancel.is_zero());
    }

    #[test]
    fn tensor_of_sub_and_dual() {
        // U ⊗ U* on Gr(2,6): Σ^{(1,-1)} + O
        let u = EquivariantObject::tautological_sub(gr26());
        let prod = u.tensor(&u.dual()).unwrap();
        assert_eq!(prod.terms().len(), 2);
    }

    #[test]
    fn fiber_twist_needs_resolution() {
        assert!(EquivariantObject::structure(gr26()).twisted(0, 1).is_err());
        let ty = Space::resolution(6).unwrap();
        assert!(EquivariantObject::structure(ty).twisted(0, 1).is_ok());
    }

    #[test]
    fn wedge_beyond_rank_is_zero() {
        assert!(EquivariantObject::wedge_sub(gr26(), 3).is_zero());
        assert!(!EquivariantObject::wedge_sub(gr26(), 2).is_zero());
    }
}
