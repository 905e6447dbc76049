//! Finite generating sets for `S(M(alpha, beta, gamma))`.
//!
//! Every manifold in the family is first brought to one of two canonical
//! sign patterns, `(a, b, c)` or `(a, -b, c)`. A monomial is then discarded
//! from the candidate grid when some handle-slide relation has it as greatest
//! left term (with unit coefficient) and a strictly smaller greatest right
//! term.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use crate::laurent::LaurentPoly;
use crate::monomial::{Monomial, MonomialOrder, ParamError, SignPattern, SurgeryParams};
use crate::relations::{
    greatest_left_term, greatest_right_term, left_param_candidates, RelationKind, RelationParams,
};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum NormalizationMove {
    /// `M(alpha, beta, gamma)` and `M(-alpha, -beta, -gamma)` have isomorphic
    /// skein modules.
    GlobalNegation,
    /// Slide the right handle over the left: `M(alpha, beta, gamma) = M(gamma, alpha, beta)`.
    SlideRightOverLeft,
    /// Slide the left handle over the right: `M(alpha, beta, gamma) = M(beta, gamma, alpha)`.
    SlideLeftOverRight,
}

impl fmt::Display for NormalizationMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NormalizationMove::GlobalNegation => "negate all coefficients",
            NormalizationMove::SlideRightOverLeft => "(alpha,beta,gamma) -> (gamma,alpha,beta)",
            NormalizationMove::SlideLeftOverRight => "(alpha,beta,gamma) -> (beta,gamma,alpha)",
        })
    }
}

/// Surgery parameters in the form `(a, b, c)` or `(a, -b, c)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct CanonicalParams(SurgeryParams);

impl CanonicalParams {
    pub fn new(sp: SurgeryParams) -> Option<Self> {
        match sp.sign_pattern() {
            SignPattern::Other => None,
            _ => Some(Self(sp)),
        }
    }

    pub fn params(&self) -> &SurgeryParams {
        &self.0
    }

    pub fn is_mixed(&self) -> bool {
        self.0.sign_pattern() == SignPattern::MiddleNegative
    }

    pub fn order(&self) -> MonomialOrder {
        self.0.order()
    }

    fn abc(&self) -> (i64, i64, i64) {
        (self.0.a() as i64, self.0.b() as i64, self.0.c() as i64)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Normalization {
    pub input: [i64; 3],
    pub canonical: CanonicalParams,
    pub moves: Vec<NormalizationMove>,
}

pub fn normalize_params(alpha: i64, beta: i64, gamma: i64) -> Result<Normalization, ParamError> {
    SurgeryParams::new(alpha, beta, gamma)?;
    let mut moves = Vec::new();
    let mut p = [alpha, beta, gamma];
    let negatives = p.iter().filter(|v| **v < 0).count();
    if negatives >= 2 {
        moves.push(NormalizationMove::GlobalNegation);
        p = p.map(|v| -v);
    }
    let [a, b, c] = p;
    if a < 0 {
        moves.push(NormalizationMove::SlideRightOverLeft);
        p = [c, a, b];
    } else if c < 0 {
        moves.push(NormalizationMove::SlideLeftOverRight);
        p = [b, c, a];
    }
    let sp = SurgeryParams::new(p[0], p[1], p[2])?;
    let canonical = CanonicalParams::new(sp).expect("sign pattern normalized above");
    Ok(Normalization {
        input: [alpha, beta, gamma],
        canonical,
        moves,
    })
}

/// The monomials that survive the finiteness argument before any refinement:
/// `i < a`, `j < b` and either `k < c` (same signs) or `b k <= 2 c (b - 1)`
/// (mixed signs).
pub fn in_candidate_region(m: Monomial, cp: &CanonicalParams) -> bool {
    let (a, b, c) = cp.abc();
    let (i, j, k) = (i64::from(m.i), i64::from(m.j), i64::from(m.k));
    if i >= a || j >= b {
        return false;
    }
    if cp.is_mixed() {
        b * k <= 2 * c * (b - 1)
    } else {
        k < c
    }
}

pub fn candidate_grid(cp: &CanonicalParams) -> Vec<Monomial> {
    let (a, b, c) = cp.abc();
    let k_max = if cp.is_mixed() { 2 * c * (b - 1) / b } else { c - 1 };
    let mut out = Vec::new();
    for i in 0..a as u32 {
        for j in 0..b as u32 {
            for k in 0..=k_max as u32 {
                out.push(Monomial::new(i, j, k));
            }
        }
    }
    out
}

/// Evidence that a monomial can be expressed through smaller ones.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Rewrite {
    pub relation: RelationParams,
    pub right: Monomial,
    /// Coefficient of the monomial on the left side; always a unit.
    pub lead_coeff: LaurentPoly,
}

fn witness(m: Monomial, relation: RelationParams, cp: &CanonicalParams) -> Option<Rewrite> {
    let (lead, lead_coeff) = greatest_left_term(&relation).ok()?;
    let right = greatest_right_term(&relation, cp.params()).ok()?;
    (lead == m && cp.order().cmp(m, right).is_gt()).then_some(Rewrite {
        relation,
        right,
        lead_coeff,
    })
}

/// First relation (Type I candidates, then Type II) whose right side is
/// strictly below `m`.
pub fn is_rewritable(m: Monomial, cp: &CanonicalParams) -> Option<Rewrite> {
    [RelationKind::TypeI, RelationKind::TypeII]
        .into_iter()
        .flat_map(|kind| left_param_candidates(m, kind))
        .find_map(|rel| witness(m, rel, cp))
}

/// Extra rewritable monomials for the all-positive pattern, decided from
/// `(i/a + j/b)` and `(j/b + k/c)` alone.
pub fn refine_same_sign(m: Monomial, cp: &CanonicalParams) -> bool {
    let (a, b, c) = cp.abc();
    let (i, j, k) = (i64::from(m.i), i64::from(m.j), i64::from(m.k));
    // sign of i/a + j/b - 1 and of j/b + k/c - 1
    let xy = i * b + j * a - a * b;
    let yz = j * c + k * b - b * c;
    (i < a && j < b && (xy > 0 || (xy == 0 && 2 * i > a)))
        || (j < b && k < c && (yz > 0 || (yz == 0 && 2 * k > c)))
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GeneratingSetReport {
    pub params: [i64; 3],
    pub canonical: CanonicalParams,
    pub candidates: Vec<Monomial>,
    /// Sorted ascending by the monomial order.
    pub generators: Vec<Monomial>,
    pub rewrites: BTreeMap<Monomial, Rewrite>,
    /// Candidates flagged by [`refine_same_sign`] for which no relation has a
    /// strictly smaller right side. They stay generators.
    pub refinement_unverified: Vec<Monomial>,
}

impl GeneratingSetReport {
    pub fn to_json(&self) -> Value {
        let rewrites: serde_json::Map<String, Value> = self
            .rewrites
            .iter()
            .map(|(m, w)| {
                (
                    format!("{},{},{}", m.i, m.j, m.k),
                    json!({
                        "kind": w.relation.kind,
                        "rst": w.relation.rst(),
                        "right": w.right,
                    }),
                )
            })
            .collect();
        json!({
            "params": self.params,
            "canonical": self.canonical.params().signed(),
            "candidates": self.candidates,
            "generators": self.generators,
            "rewrites": rewrites,
            "refinement_unverified": self.refinement_unverified,
        })
    }

    /// Generators listed by exponent vector, `1, z, z^2, y, x, ...`.
    pub fn generators_by_exponent(&self) -> Vec<Monomial> {
        let mut out = self.generators.clone();
        out.sort();
        out
    }
}

/// Monomials outside the candidate region that no relation rewrites.
///
/// For same-sign parameters `z^c` ties with `y^b` in weight and loses the
/// later tie-breaks, and every other relation with `z^c` on top has a larger
/// right side, so it must be kept. Mixed-sign parameters have none.
pub fn exceptional_monomials(cp: &CanonicalParams) -> Vec<Monomial> {
    if cp.is_mixed() {
        return Vec::new();
    }
    let zc = Monomial::new(0, 0, cp.params().c() as u32);
    if is_rewritable(zc, cp).is_some() {
        Vec::new()
    } else {
        vec![zc]
    }
}

pub fn generating_set(cp: &CanonicalParams) -> GeneratingSetReport {
    let mut candidates = candidate_grid(cp);
    candidates.extend(exceptional_monomials(cp));
    generating_set_over(cp, candidates)
}

/// Same as [`generating_set`] with the candidates supplied in any order.
pub fn generating_set_over(cp: &CanonicalParams, candidates: Vec<Monomial>) -> GeneratingSetReport {
    let mut generators = Vec::new();
    let mut rewrites = BTreeMap::new();
    let mut refinement_unverified = Vec::new();
    for &m in &candidates {
        match is_rewritable(m, cp) {
            Some(w) => {
                rewrites.insert(m, w);
            }
            None => {
                if !cp.is_mixed() && refine_same_sign(m, cp) {
                    refinement_unverified.push(m);
                }
                generators.push(m);
            }
        }
    }
    cp.order().sort(&mut generators);
    refinement_unverified.sort();
    GeneratingSetReport {
        params: cp.params().signed(),
        canonical: *cp,
        candidates,
        generators,
        rewrites,
        refinement_unverified,
    }
}

/// Normalizes arbitrary parameters first; the report keeps the original ones.
pub fn generating_set_for(alpha: i64, beta: i64, gamma: i64) -> Result<GeneratingSetReport, ParamError> {
    let norm = normalize_params(alpha, beta, gamma)?;
    let mut report = generating_set(&norm.canonical);
    report.params = norm.input;
    Ok(report)
}

// ---------------------------------------------------------------------------
// Termination

/// The relation the finiteness argument uses for a monomial outside the
/// candidate region, with the label of the case that picks it.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ProofStep {
    pub case: &'static str,
    pub relation: RelationParams,
}

pub fn proof_case(m: Monomial, cp: &CanonicalParams) -> Option<ProofStep> {
    if in_candidate_region(m, cp) {
        return None;
    }
    let (a, b, c) = cp.abc();
    let (i, j, k) = (i64::from(m.i), i64::from(m.j), i64::from(m.k));
    let step = |case, relation| Some(ProofStep { case, relation });
    let type_i = RelationParams::type_i;
    let type_ii = RelationParams::type_ii;
    if cp.is_mixed() {
        if i >= a {
            step("1", type_i(i, j, k))
        } else if j >= b {
            if k > 0 {
                step("2.1", type_i(i + 1, -j - 1, k - 1))
            } else if i > 0 {
                step("2.2.1", type_ii(i - 1, -j - 1, 1))
            } else {
                step("2.2.2", type_ii(0, -j, 0))
            }
        } else if i > 0 {
            step("3.1", type_ii(i - 1, -j - 1, k + 1))
        } else if j == b - 1 {
            step("3.2.1", type_i(1, -b, k - 1))
        } else {
            step("3.2.2", type_ii(0, j, k))
        }
    } else if i >= a {
        let case = if j >= b || i == a { "1.1" } else { "1.2" };
        step(case, type_i(i, j, k))
    } else if j >= b {
        step(if j > b { "2.1" } else { "2.2" }, type_i(i, j, k))
    } else {
        step(if k > c { "3.1" } else { "3.2" }, type_ii(i, j, k))
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Violation {
    pub monomial: Monomial,
    pub case: &'static str,
    pub relation: RelationParams,
    pub reason: String,
    /// Another relation that does rewrite the monomial, if any.
    pub fallback: Option<Rewrite>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TerminationReport {
    pub params: [i64; 3],
    pub bound: u32,
    /// Monomials outside the candidate region that were checked.
    pub checked: usize,
    /// How many proof steps had a unit leading coefficient.
    pub unit_leads: usize,
    pub violations: Vec<Violation>,
}

impl TerminationReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    /// Violating monomials that no relation rewrites.
    pub fn stuck(&self) -> Vec<Monomial> {
        self.violations
            .iter()
            .filter(|v| v.fallback.is_none())
            .map(|v| v.monomial)
            .collect()
    }

    pub fn to_json(&self) -> Value {
        let violations: Vec<Value> = self
            .violations
            .iter()
            .map(|v| {
                let fallback = v.fallback.as_ref().map(|w| {
                    json!({ "kind": w.relation.kind, "rst": w.relation.rst(), "right": w.right })
                });
                json!({
                    "monomial": v.monomial,
                    "case": v.case,
                    "kind": v.relation.kind,
                    "rst": v.relation.rst(),
                    "reason": v.reason,
                    "fallback": fallback,
                })
            })
            .collect();
        json!({
            "params": self.params,
            "bound": self.bound,
            "checked": self.checked,
            "unit_leads": self.unit_leads,
            "violations": violations,
            "stuck": self.stuck(),
        })
    }
}

/// Checks one proof step: `m` must be the greatest left term with a unit
/// coefficient, and strictly exceed the greatest right term.
pub fn check_step(m: Monomial, step: &ProofStep, cp: &CanonicalParams) -> Result<Rewrite, String> {
    let (lead, lead_coeff) = greatest_left_term(&step.relation).map_err(|e| e.to_string())?;
    if lead != m {
        return Err(format!("{} has greatest left term {lead}", step.relation));
    }
    if lead_coeff.is_unit().is_none() {
        return Err(format!("leading coefficient {lead_coeff} is not a unit"));
    }
    let right = greatest_right_term(&step.relation, cp.params()).map_err(|e| e.to_string())?;
    if !cp.order().cmp(m, right).is_gt() {
        return Err(format!("right side term {right} is not below {m}"));
    }
    Ok(Rewrite {
        relation: step.relation,
        right,
        lead_coeff,
    })
}

pub fn check_termination_cases(cp: &CanonicalParams, bound: u32) -> TerminationReport {
    let mut report = TerminationReport {
        params: cp.params().signed(),
        bound,
        checked: 0,
        unit_leads: 0,
        violations: Vec::new(),
    };
    for i in 0..=bound {
        for j in 0..=bound {
            for k in 0..=bound {
                let m = Monomial::new(i, j, k);
                let Some(step) = proof_case(m, cp) else {
                    continue;
                };
                report.checked += 1;
                match check_step(m, &step, cp) {
                    Ok(rw) => {
                        if rw.lead_coeff.is_unit().is_some() {
                            report.unit_leads += 1;
                        }
                    }
                    Err(reason) => report.violations.push(Violation {
                        monomial: m,
                        case: step.case,
                        relation: step.relation,
                        reason,
                        fallback: is_rewritable(m, cp),
                    }),
                }
            }
        }
    }
    report
}

pub fn default_bound(cp: &CanonicalParams) -> u32 {
    let p = cp.params();
    (4 * p.a().max(p.b()).max(p.c())) as u32
}

/// Follows rewrites from `m` until the candidate region is reached, using
/// the proof step where it is valid and any other reducing relation
/// otherwise. Returns the visited monomials (starting with `m`), or `None` if
/// some monomial cannot be rewritten or `max_steps` is exceeded.
pub fn reduction_chain(m: Monomial, cp: &CanonicalParams, max_steps: usize) -> Option<Vec<Monomial>> {
    let mut chain = vec![m];
    let mut current = m;
    while let Some(step) = proof_case(current, cp) {
        if chain.len() > max_steps {
            return None;
        }
        let rw = check_step(current, &step, cp)
            .ok()
            .or_else(|| is_rewritable(current, cp))?;
        current = rw.right;
        chain.push(current);
    }
    Some(chain)
}
