//! Cohomology of equivariant objects via Borel-Bott-Weil, Ext groups, Euler
//! characteristics, Serre-duality checks, and the exactness honesty policy.
//!
//! For a complex, the first-page table E_1^{p,q} = H^q of the degree-p term
//! is assembled termwise (each Schur bundle is BBW-concentrated). We claim an
//! exact answer only when no two nonzero entries sit at bidegrees connected
//! by a differential of any page — that is, entries (p,q), (p',q') with
//! p' > p and (p'+q') = (p+q)+1. Otherwise the answer is returned as bounds
//! together with the exact Euler characteristic, which no differential can
//! change.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::bundles::{EquivariantObject, Space};
use crate::pushforward;
use crate::schur::VirtualRep;
use crate::weights::{bbw_reduce, BbwOutcome};
use crate::Error;

/// A finitely supported map from cohomological degree to GL(W)-representation.
/// Weights are recorded on W*, following the dual in the BBW theorem.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedRep {
    rank: usize,
    degrees: BTreeMap<i64, VirtualRep>,
}

impl GradedRep {
    pub fn new(rank: usize) -> Self {
        GradedRep {
            rank,
            degrees: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn add(&mut self, degree: i64, rep: VirtualRep) {
        if rep.is_zero() {
            return;
        }
        assert_eq!(rep.rank(), self.rank);
        let entry = self
            .degrees
            .entry(degree)
            .or_insert_with(|| VirtualRep::zero(self.rank));
        *entry = entry.add(&rep).expect("ranks agree");
        if entry.is_zero() {
            self.degrees.remove(&degree);
        }
    }

    pub fn get(&self, degree: i64) -> Option<&VirtualRep> {
        self.degrees.get(&degree)
    }

    pub fn degrees(&self) -> impl Iterator<Item = (i64, &VirtualRep)> {
        self.degrees.iter().map(|(d, r)| (*d, r))
    }

    pub fn support(&self) -> Vec<i64> {
        self.degrees.keys().copied().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.degrees.is_empty()
    }

    /// Alternating sum over degrees.
    pub fn euler(&self) -> VirtualRep {
        let mut acc = VirtualRep::zero(self.rank);
        for (d, rep) in &self.degrees {
            let signed = if d.rem_euclid(2) == 0 {
                rep.clone()
            } else {
                rep.scale(&BigInt::from(-1))
            };
            acc = acc.add(&signed).expect("ranks agree");
        }
        acc
    }

    /// Dimension of each graded piece.
    pub fn dims(&self) -> BTreeMap<i64, BigInt> {
        self.degrees
            .iter()
            .map(|(d, r)| (*d, r.dimension()))
            .collect()
    }
}

impl Serialize for GradedRep {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let degrees: BTreeMap<String, &VirtualRep> = self
            .degrees
            .iter()
            .map(|(d, r)| (d.to_string(), r))
            .collect();
        let mut s = serializer.serialize_struct("GradedRep", 2)?;
        s.serialize_field("degrees", &degrees)?;
        s.serialize_field("dual_convention", "W*")?;
        s.end()
    }
}

/// Either an exact graded answer, or degreewise bounds plus the exact Euler
/// characteristic when spectral-sequence cancellation cannot be excluded.
#[derive(Clone, PartialEq, Debug)]
pub enum ExtAnswer {
    Exact(GradedRep),
    Bounds {
        lower: GradedRep,
        upper: GradedRep,
        euler: VirtualRep,
    },
}

impl ExtAnswer {
    pub fn is_exact(&self) -> bool {
        matches!(self, ExtAnswer::Exact(_))
    }

    pub fn exact(&self) -> Option<&GradedRep> {
        match self {
            ExtAnswer::Exact(g) => Some(g),
            ExtAnswer::Bounds { .. } => None,
        }
    }

    /// Exactly zero in all degrees (an exact answer with empty support).
    pub fn is_exactly_zero(&self) -> bool {
        self.exact().is_some_and(|g| g.is_zero())
    }

    pub fn euler(&self) -> VirtualRep {
        match self {
            ExtAnswer::Exact(g) => g.euler(),
            ExtAnswer::Bounds { euler, .. } => euler.clone(),
        }
    }
}

impl Serialize for ExtAnswer {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            ExtAnswer::Exact(g) => {
                let mut s = serializer.serialize_struct("ExtAnswer", 2)?;
                s.serialize_field("exact", &true)?;
                s.serialize_field("graded", g)?;
                s.end()
            }
            ExtAnswer::Bounds {
                lower,
                upper,
                euler,
            } => {
                let mut s = serializer.serialize_struct("ExtAnswer", 4)?;
                s.serialize_field("exact", &false)?;
                s.serialize_field("lower", lower)?;
                s.serialize_field("upper", upper)?;
                s.serialize_field("euler", euler)?;
                s.end()
            }
        }
    }
}

/// First-page table: (complex degree p, fiber degree q) → representation.
fn first_page(obj: &EquivariantObject) -> Result<BTreeMap<(i64, i64), VirtualRep>, Error> {
    let flat = match obj.space() {
        Space::Grassmannian(_) => obj.clone(),
        Space::Resolution { .. } => pushforward::pushforward_to_base(obj)?,
    };
    let n = flat.space().ambient_rank();
    let mut table: BTreeMap<(i64, i64), VirtualRep> = BTreeMap::new();
    for term in flat.terms() {
        let beta = term.bundle.beta.det_shift(term.twist_g);
        let alpha = beta.weight().concat(term.bundle.gamma.weight());
        let BbwOutcome::NonZero { degree, weight } = bbw_reduce(&alpha) else {
            continue;
        };
        // the outer factor lives on W; results are recorded on W*
        let cohom = VirtualRep::single(weight, BigInt::one());
        let rep = if term.outer.is_trivial_one() {
            cohom
        } else {
            term.outer.dualize().tensor(&cohom)?
        };
        let key = (term.shift, degree as i64);
        let entry = table.entry(key).or_insert_with(|| VirtualRep::zero(n));
        *entry = entry.add(&rep)?;
    }
    table.retain(|_, rep| !rep.is_zero());
    Ok(table)
}

fn connected(a: (i64, i64), b: (i64, i64)) -> bool {
    b.0 > a.0 && a.0 + a.1 + 1 == b.0 + b.1
}

fn assemble(rank: usize, table: BTreeMap<(i64, i64), VirtualRep>) -> ExtAnswer {
    let keys: Vec<(i64, i64)> = table.keys().copied().collect();
    let has_differential = keys.iter().any(|a| keys.iter().any(|b| connected(*a, *b)));

    if !has_differential {
        let mut graded = GradedRep::new(rank);
        for ((p, q), rep) in table {
            graded.add(p + q, rep);
        }
        return ExtAnswer::Exact(graded);
    }

    let mut upper = GradedRep::new(rank);
    let mut lower = GradedRep::new(rank);
    let mut euler = VirtualRep::zero(rank);
    for ((p, q), rep) in &table {
        upper.add(p + q, rep.clone());
        let signed = if (p + q).rem_euclid(2) == 0 {
            rep.clone()
        } else {
            rep.scale(&BigInt::from(-1))
        };
        euler = euler.add(&signed).expect("ranks agree");
        let isolated = !keys
            .iter()
            .any(|other| connected((*p, *q), *other) || connected(*other, (*p, *q)));
        if isolated {
            lower.add(p + q, rep.clone());
        }
    }
    ExtAnswer::Bounds {
        lower,
        upper,
        euler,
    }
}

/// Hypercohomology of an equivariant object (on a Grassmannian or on the
/// resolution total space), under the honesty policy above. Single-bundle
/// objects always come back exact.
pub fn cohomology(obj: &EquivariantObject) -> Result<ExtAnswer, Error> {
    let table = first_page(obj)?;
    Ok(assemble(obj.space().ambient_rank(), table))
}

/// Ext^•(E, F) = H^•(E^∨ ⊗ F), termwise through the representation ring.
pub fn ext(e: &EquivariantObject, f: &EquivariantObject) -> Result<ExtAnswer, Error> {
    if e.space() != f.space() {
        return Err(Error::SpaceMismatch);
    }
    cohomology(&e.dual().tensor(f)?)
}

/// Outcome of a Serre-duality comparison.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum SerreOutcome {
    Holds,
    Violated,
    /// One of the two sides came back as bounds; not decidable here.
    Indeterminate,
}

/// Checks dim Ext^i(E,F) = dim Ext^{d−i}(F, E(−n·H)) on Gr(k,n), where
/// d = k(n−k) is the dimension and ω = O(−n·H) the canonical bundle.
pub fn serre_check(e: &EquivariantObject, f: &EquivariantObject) -> Result<SerreOutcome, Error> {
    let Space::Grassmannian(g) = e.space() else {
        return Err(Error::SpaceMismatch);
    };
    let d = g.dim() as i64;
    let lhs = ext(e, f)?;
    let rhs = ext(f, &e.twisted(-(g.n as i64), 0)?)?;
    let (Some(l), Some(r)) = (lhs.exact(), rhs.exact()) else {
        return Ok(SerreOutcome::Indeterminate);
    };
    let ld = l.dims();
    let rd = r.dims();
    let zero = BigInt::from(0);
    let mut degrees: Vec<i64> = ld.keys().copied().collect();
    degrees.extend(rd.keys().map(|i| d - i));
    degrees.sort_unstable();
    degrees.dedup();
    for i in degrees {
        let a = ld.get(&i).unwrap_or(&zero);
        let b = rd.get(&(d - i)).unwrap_or(&zero);
        if a != b {
            return Ok(SerreOutcome::Violated);
        }
    }
    Ok(SerreOutcome::Holds)
}
