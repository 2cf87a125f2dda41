//! Machine verification sweeps: the Hom-vanishing tables behind the dual
//! Lefschetz collection on the Pfaffian resolution, exceptionality and
//! semiorthogonality of the Grassmannian collection, the quiver Hom table,
//! and the χ consistency checks against independent binomial resolutions.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::bundles::EquivariantObject;
use crate::cohom::ext;
use crate::models;
use crate::par::map_each;
use crate::poly::binomial;
use crate::pushforward;
use crate::schur::VirtualRep;
use crate::Error;

/// How a claim was established.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Method {
    /// Computed outright through the cohomology engine.
    Direct,
    /// Derived from a direct case by the Serre-functor twist rule; recorded,
    /// not recomputed.
    SerreRule,
}

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct ClaimRecord {
    pub claim: String,
    pub method: Method,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// An order-independent set of claim outcomes, serialized canonically.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct VerificationLog {
    pub suite: String,
    pub records: Vec<ClaimRecord>,
}

impl VerificationLog {
    fn new(suite: impl Into<String>, mut records: Vec<ClaimRecord>) -> Self {
        records.sort_by(|a, b| a.claim.cmp(&b.claim));
        VerificationLog {
            suite: suite.into(),
            records,
        }
    }

    pub fn merge(suite: impl Into<String>, logs: Vec<VerificationLog>) -> Self {
        let records = logs.into_iter().flat_map(|l| l.records).collect();
        VerificationLog::new(suite, records)
    }

    pub fn passes(&self) -> usize {
        self.records.iter().filter(|r| r.pass).count()
    }

    pub fn failures(&self) -> usize {
        self.records.len() - self.passes()
    }

    pub fn direct_passes(&self) -> usize {
        self.records
            .iter()
            .filter(|r| r.pass && r.method == Method::Direct)
            .count()
    }

    pub fn rule_records(&self) -> usize {
        self.records
            .iter()
            .filter(|r| r.method == Method::SerreRule)
            .count()
    }

    pub fn is_success(&self) -> bool {
        self.failures() == 0
    }
}

impl fmt::Display for VerificationLog {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "suite {}: {} checks, {} direct passed, {} by rule, {} FAILED",
            self.suite,
            self.records.len(),
            self.direct_passes(),
            self.rule_records(),
            self.failures()
        )?;
        for r in self.records.iter().filter(|r| !r.pass) {
            writeln!(f, "  FAIL: {}", r.claim)?;
        }
        Ok(())
    }
}

/// One cell of the vanishing table: Hom^•(F_k, F_l(−t·H_Y)) = 0.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct VanishingClaim {
    pub n: usize,
    pub k: usize,
    pub l: usize,
    pub t: i64,
}

impl fmt::Display for VanishingClaim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "TY({}): Hom(F_{}, F_{}(-{}H_Y)) = 0",
            self.n, self.k, self.l, self.t
        )
    }
}

/// The directly verifiable range: t ∈ 1..=8 for n = 6, t ∈ 1..=7 for n = 7.
pub fn direct_vanishing_claims(n: usize) -> Vec<VanishingClaim> {
    let t_max = match n {
        6 => 8,
        7 => 7,
        _ => 0,
    };
    let mut claims = Vec::new();
    for t in 1..=t_max {
        for k in 0..3 {
            for l in 0..3 {
                claims.push(VanishingClaim { n, k, l, t });
            }
        }
    }
    claims
}

/// Computes one vanishing cell; true means the Hom space is exactly zero.
/// Sources use the two-term complex form of F_0, targets its tautological
/// quotient form, mirroring the long-exact-sequence argument on one side and
/// the sheaf pushforward on the other.
pub fn check_vanishing(c: &VanishingClaim) -> Result<bool, Error> {
    let source = models::f_object(c.n, c.k);
    let target = models::f_target(c.n, c.l).twisted(0, -c.t)?;
    Ok(ext(&source, &target)?.is_exactly_zero())
}

/// The vanishing table suite (`fkl6` / `fkl7`): every direct cell is
/// computed; the remaining twists are recorded as consequences of the Serre
/// functor rule applied to an already-verified direct cell.
pub fn vanishing_suite(n: usize) -> Result<VerificationLog, Error> {
    if n != 6 && n != 7 {
        return Err(Error::UnsupportedAmbient(n));
    }
    let claims = direct_vanishing_claims(n);
    let outcomes = map_each(&claims, check_vanishing);
    let mut direct = HashMap::new();
    let mut records = Vec::new();
    for (c, outcome) in claims.iter().zip(outcomes) {
        let pass = outcome?;
        direct.insert((c.k, c.l, c.t), pass);
        records.push(ClaimRecord {
            claim: c.to_string(),
            method: Method::Direct,
            pass,
            note: None,
        });
    }

    // rule-derived cells: Hom(F_l*, F_k*(−t)) reduces to the direct cell
    // (l, k, period − t) under F ↦ F(−period·H_Y)[dim+… shift]
    let (period, shift, rule_cells): (i64, i64, Vec<(usize, usize, i64)>) = match n {
        6 => {
            let mut cells = Vec::new();
            for t in 9..=11 {
                for l in 0..3 {
                    cells.push((2usize, l, t));
                }
            }
            (12, 13, cells)
        }
        _ => {
            let mut cells = Vec::new();
            for t in 8..=13 {
                for k in 0..3 {
                    for l in 0..3 {
                        cells.push((k, l, t));
                    }
                }
            }
            (14, 17, cells)
        }
    };
    for (k, l, t) in rule_cells {
        let reduced = (l, k, period - t);
        let pass = *direct.get(&reduced).unwrap_or(&false);
        records.push(ClaimRecord {
            claim: format!("TY({n}): Hom(F_{l}*, F_{k}*(-{t}H_Y)) = 0"),
            method: Method::SerreRule,
            pass,
            note: Some(format!(
                "by the Serre twist rule F -> F(-{period}H_Y)[{shift}]; dual to the direct cell Hom(F_{}, F_{}(-{}H_Y))",
                reduced.0, reduced.1, reduced.2
            )),
        });
    }
    Ok(VerificationLog::new(format!("fkl{n}"), records))
}

/// Exceptionality of (E_0, E_1, E_2) plus the full staircase
/// semiorthogonality sweep on Gr(2,n) (`ldx6` / `ldx7`).
pub fn collection_suite(n: usize) -> Result<VerificationLog, Error> {
    if n != 6 && n != 7 {
        return Err(Error::UnsupportedAmbient(n));
    }
    let mut records = Vec::new();

    // Hom(E_k, E_l) = S^{k−l}W* concentrated in degree 0 for k ≥ l, zero for k < l
    for k in 0..3usize {
        for l in 0..3usize {
            let ans = ext(&models::e_object(n, k), &models::e_object(n, l))?;
            let pass = if k >= l {
                let m = (k - l) as i64;
                let expected = VirtualRep::single(models::sym_w_dual_weight(n, m), BigInt::one());
                ans.exact()
                    .is_some_and(|g| g.support() == vec![0] && g.get(0) == Some(&expected))
            } else {
                ans.is_exactly_zero()
            };
            let claim = if k >= l {
                format!("Gr(2,{n}): Hom(E_{k}, E_{l}) = S^{}W* in degree 0", k - l)
            } else {
                format!("Gr(2,{n}): Hom(E_{k}, E_{l}) = 0")
            };
            records.push(ClaimRecord {
                claim,
                method: Method::Direct,
                pass,
                note: None,
            });
        }
    }

    // semiorthogonality: Hom(A_i(i), A_j(j)) = 0 for i > j
    let model = crate::hpd::builtin_lefschetz(&format!("ldx{n}"))?;
    let mut sweep = Vec::new();
    for i in 0..model.blocks.len() {
        for j in 0..i {
            for p in &model.blocks[i] {
                for q in &model.blocks[j] {
                    sweep.push((i, j, p.clone(), q.clone()));
                }
            }
        }
    }
    let outcomes = map_each(&sweep, |(i, j, p, q)| -> Result<bool, Error> {
        let source = models::resolve_label(n, p)?;
        let target = models::resolve_label(n, q)?.twisted(*j as i64 - *i as i64, 0)?;
        Ok(ext(&source, &target)?.is_exactly_zero())
    });
    for ((i, j, p, q), outcome) in sweep.iter().zip(outcomes) {
        records.push(ClaimRecord {
            claim: format!("Gr(2,{n}): Hom({p}({i}), {q}({j})) = 0"),
            method: Method::Direct,
            pass: outcome?,
            note: None,
        });
    }
    Ok(VerificationLog::new(format!("ldx{n}"), records))
}

/// The quiver Hom table on the resolution base:
/// Hom^•(Λ^k(W/K), Λ^l(W/K)) = Λ^{l−k}W in degree 0 for k ≤ l, zero above.
pub fn quiver_suite(n: usize) -> Result<VerificationLog, Error> {
    if n != 6 && n != 7 {
        return Err(Error::UnsupportedAmbient(n));
    }
    let mut records = Vec::new();
    for k in 0..3usize {
        for l in 0..3usize {
            let ans = ext(
                &models::wedge_quotient_base(n, k),
                &models::wedge_quotient_base(n, l),
            )?;
            let (claim, pass) = if k <= l {
                let expected =
                    VirtualRep::single(models::wedge_w_weight(n, l - k).dual(), BigInt::one());
                (
                    format!(
                        "Gr({},{n}): Hom(L^{k}(W/K), L^{l}(W/K)) = L^{}W in degree 0",
                        n - 4,
                        l - k
                    ),
                    ans.exact()
                        .is_some_and(|g| g.support() == vec![0] && g.get(0) == Some(&expected)),
                )
            } else {
                (
                    format!("Gr({},{n}): Hom(L^{k}(W/K), L^{l}(W/K)) = 0", n - 4),
                    ans.is_exactly_zero(),
                )
            };
            records.push(ClaimRecord {
                claim,
                method: Method::Direct,
                pass,
                note: None,
            });
        }
    }
    Ok(VerificationLog::new(format!("quiver{n}"), records))
}

/// χ consistency against the binomial resolutions on projective space
/// (`gsk-chi6` / `gsk-chi7`).
pub fn chi_suite(n: usize) -> Result<VerificationLog, Error> {
    let mut records = Vec::new();
    match n {
        6 => {
            let ts: Vec<i64> = (0..=20).collect();
            let computed = map_each(&ts, |t| pushforward::chi(6, *t));
            for (t, value) in ts.iter().zip(computed) {
                let expected = binomial(t + 14, 14) - binomial(t + 11, 14);
                records.push(ClaimRecord {
                    claim: format!("chi(TY(6), O({t}H_Y)) = C(t+14,14) - C(t+11,14)"),
                    method: Method::Direct,
                    pass: value? == expected,
                    note: None,
                });
            }
            // the structure pushforward tensored with K has its own
            // two-step resolution on P^14
            let k_bundle = EquivariantObject::tautological_sub(models::resolution_space(6));
            for t in 0..=20i64 {
                let value = pushforward::chi_of(6, &k_bundle.twisted(0, t)?)?;
                let expected = BigInt::from(6) * (binomial(t + 12, 14) - binomial(t + 11, 14));
                records.push(ClaimRecord {
                    claim: format!("chi(TY(6), K({t}H_Y)) = 6C(t+12,14) - 6C(t+11,14)"),
                    method: Method::Direct,
                    pass: value == expected,
                    note: None,
                });
            }
        }
        7 => {
            let ts: Vec<i64> = (0..=25).collect();
            let computed = map_each(&ts, |t| pushforward::chi(7, *t));
            for (t, value) in ts.iter().zip(computed) {
                let expected = binomial(t + 20, 20) - BigInt::from(7) * binomial(t + 17, 20)
                    + BigInt::from(7) * binomial(t + 16, 20)
                    - binomial(t + 13, 20);
                records.push(ClaimRecord {
                    claim: format!(
                        "chi(TY(7), O({t}H_Y)) = C(t+20,20) - 7C(t+17,20) + 7C(t+16,20) - C(t+13,20)"
                    ),
                    method: Method::Direct,
                    pass: value? == expected,
                    note: None,
                });
            }
        }
        _ => return Err(Error::UnsupportedAmbient(n)),
    }
    Ok(VerificationLog::new(format!("gsk-chi{n}"), records))
}

/// The full Lefschetz verification for one rank: vanishing table, collection
/// sweep, and the quiver Hom table.
pub fn verify_lefschetz(n: usize) -> Result<VerificationLog, Error> {
    let logs = vec![vanishing_suite(n)?, collection_suite(n)?, quiver_suite(n)?];
    Ok(VerificationLog::merge(format!("lefschetz{n}"), logs))
}

/// Runs the named suite; `all` runs every suite.
pub fn suite_by_name(name: &str) -> Result<Vec<VerificationLog>, Error> {
    match name {
        "ldx6" => Ok(vec![collection_suite(6)?]),
        "ldx7" => Ok(vec![collection_suite(7)?]),
        "fkl6" => Ok(vec![vanishing_suite(6)?]),
        "fkl7" => Ok(vec![vanishing_suite(7)?]),
        "gsk-chi6" => Ok(vec![chi_suite(6)?]),
        "gsk-chi7" => Ok(vec![chi_suite(7)?]),
        "all" => Ok(vec![
            collection_suite(6)?,
            collection_suite(7)?,
            vanishing_suite(6)?,
            vanishing_suite(7)?,
            quiver_suite(6)?,
            quiver_suite(7)?,
            chi_suite(6)?,
            chi_suite(7)?,
        ]),
        _ => Err(Error::UnknownModel(name.to_string())),
    }
}
