//! Exact Hilbert polynomials and degrees, by rational interpolation of twist
//! Euler characteristics.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::bundles::Grassmannian;
use crate::poly::{binomial, factorial, interpolate, RatPoly};
use crate::schur::weyl_dimension;
use crate::weights::DominantWeight;
use crate::{pushforward, Error};

/// An exact Hilbert polynomial with its dimension and degree.
#[derive(Clone, PartialEq, Debug)]
pub struct HilbertData {
    pub dim: usize,
    pub degree: BigInt,
    pub polynomial: RatPoly,
}

impl Serialize for HilbertData {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("HilbertData", 3)?;
        s.serialize_field("dim", &self.dim)?;
        s.serialize_field("degree", &self.degree.to_string())?;
        s.serialize_field("polynomial", &self.polynomial.to_string())?;
        s.end()
    }
}

fn degree_of(poly: &RatPoly, dim: usize) -> BigInt {
    if poly.is_zero() {
        return BigInt::from(0);
    }
    assert_eq!(
        poly.degree(),
        Some(dim),
        "Hilbert polynomial degree must equal the dimension"
    );
    let lead = poly.leading().expect("nonzero polynomial");
    let deg = lead * BigRational::from_integer(factorial(dim as u64));
    assert!(deg.is_integer(), "dim! · leading coefficient is an integer");
    deg.to_integer()
}

/// Hilbert data of Gr(k,n) in the Plücker embedding: χ(O(t)) is the
/// dimension of Σ^{(t,…,t,0,…,0)} W*, interpolated over dim+1 points.
pub fn grassmannian(k: usize, n: usize) -> Result<HilbertData, Error> {
    let g = Grassmannian::new(k, n)?;
    let dim = g.dim();
    let points: Vec<(i64, BigInt)> = (0..=dim as i64)
        .map(|t| {
            let mut entries = vec![t; k];
            entries.extend(std::iter::repeat(0).take(n - k));
            let w = DominantWeight::new(entries).expect("dominant");
            (t, weyl_dimension(&w))
        })
        .collect();
    let polynomial = interpolate(&points);
    let degree = degree_of(&polynomial, dim);
    Ok(HilbertData {
        dim,
        degree,
        polynomial,
    })
}

/// Dimension of the Pfaffian stratum Pf(2t, W*) inside P(Λ²W*).
pub fn pfaffian_stratum_dim(n: usize, t: usize) -> i64 {
    let amb = (n * (n - 1) / 2) as i64;
    let corank = (n - 2 * t) as i64;
    amb - corank * (corank - 1) / 2 - 1
}

/// Hilbert data of the Pfaffian Y = Pf(4, n) for n ∈ {6, 7}, computed on the
/// resolution: χ(TY, O(t·H_Y)) interpolated at t = 0..dim.
///
/// This identifies O_Y-cohomology with the structure pushforward of the
/// resolution; the χ-level consequences are pinned against independent
/// binomial resolutions by the `gsk-chi` verification suites.
pub fn pfaffian(n: usize) -> Result<HilbertData, Error> {
    if n != 6 && n != 7 {
        return Err(Error::UnsupportedAmbient(n));
    }
    let dim = pfaffian_stratum_dim(n, 2) as usize;
    let ts: Vec<i64> = (0..=dim as i64).collect();
    let values = crate::par::map_each(&ts, |t| pushforward::chi(n, *t));
    let mut points = Vec::with_capacity(ts.len());
    for (t, v) in ts.iter().zip(values) {
        points.push((*t, v?));
    }
    let polynomial = interpolate(&points);
    let degree = degree_of(&polynomial, dim);
    Ok(HilbertData {
        dim,
        degree,
        polynomial,
    })
}

/// Hilbert polynomial of a transverse linear section cut by `cuts`
/// hyperplanes: the Koszul alternating sum Σ (−1)^i C(cuts, i) P(t−i).
pub fn section(ambient: &RatPoly, cuts: usize) -> RatPoly {
    let Some(deg) = ambient.degree() else {
        return RatPoly::zero();
    };
    let value = |t: i64| -> BigInt {
        let mut acc = BigInt::from(0);
        for i in 0..=cuts as i64 {
            let c = binomial(cuts as i64, i as u64);
            let v = ambient.eval(t - i);
            assert!(v.is_integer());
            if i % 2 == 0 {
                acc += c * v.to_integer();
            } else {
                acc -= c * v.to_integer();
            }
        }
        acc
    };
    let points: Vec<(i64, BigInt)> = (0..=deg as i64).map(|t| (t, value(t))).collect();
    interpolate(&points)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projective_space_has_degree_one() {
        for m in 1..=5 {
            let h = grassmannian(1, m + 1).unwrap();
            assert_eq!(h.dim, m);
            assert_eq!(h.degree, BigInt::from(1));
        }
    }

    #[test]
    fn gr26_is_degree_14() {
        let h = grassmannian(2, 6).unwrap();
        assert_eq!(h.dim, 8);
        assert_eq!(h.degree, BigInt::from(14));
    }

    #[test]
    fn grassmannian_of_lines_degrees_are_catalan() {
        // deg Gr(2,n) = C(2n−4, n−2)/(n−1), the (n−2)nd Catalan number
        for n in 4..=8usize {
            let h = grassmannian(2, n).unwrap();
            let m = (n - 2) as i64;
            let catalan = binomial(2 * m, m as u64) / BigInt::from(m + 1);
            assert_eq!(h.degree, catalan, "n = {n}");
        }
    }

    #[test]
    fn stratum_dims() {
        assert_eq!(pfaffian_stratum_dim(6, 2), 13);
        assert_eq!(pfaffian_stratum_dim(7, 2), 17);
        assert_eq!(pfaffian_stratum_dim(6, 1), 8);
        assert_eq!(pfaffian_stratum_dim(6, 3), 14);
    }

    #[test]
    fn koszul_section_of_projective_space() {
        // cutting P^4 by 3 hyperplanes leaves P^1
        let p4 = grassmannian(1, 5).unwrap().polynomial;
        let p1 = grassmannian(1, 2).unwrap().polynomial;
        assert_eq!(section(&p4, 3), p1);
        // cutting by dim+1 hyperplanes leaves nothing
        assert!(section(&p1, 2).is_zero());
    }
}
