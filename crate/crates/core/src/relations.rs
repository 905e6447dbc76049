//! Handle-slide relations as leading-term rewrite rules.
//!
//! A Type I relation with parameters `(r, s, t)` equates a component twisted
//! `r` times about the `x` cable and `s` times about the `y` cable, next to
//! `t` copies of `z`, with the same picture for `(alpha - r, beta - s, t)`.
//! Type II does the same about the `y` and `z` cables with `r` copies of `x`,
//! and `(beta - s, gamma - t)` on the right.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::laurent::LaurentPoly;
use crate::monomial::{Monomial, MonomialOrder, SurgeryParams};
use crate::twist::{expand_closed_twist, expand_double_twist, DoubleFamily};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub enum RelationKind {
    #[serde(rename = "I")]
    TypeI,
    #[serde(rename = "II")]
    TypeII,
}

impl fmt::Display for RelationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RelationKind::TypeI => "I",
            RelationKind::TypeII => "II",
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct RelationParams {
    pub kind: RelationKind,
    pub r: i64,
    pub s: i64,
    pub t: i64,
}

impl RelationParams {
    pub fn type_i(r: i64, s: i64, t: i64) -> Self {
        Self {
            kind: RelationKind::TypeI,
            r,
            s,
            t,
        }
    }

    pub fn type_ii(r: i64, s: i64, t: i64) -> Self {
        Self {
            kind: RelationKind::TypeII,
            r,
            s,
            t,
        }
    }

    pub fn rst(&self) -> [i64; 3] {
        [self.r, self.s, self.t]
    }

    /// The two twist counts and the count of plain loops on the left side.
    fn left_twists(&self) -> (i64, i64, i64) {
        match self.kind {
            RelationKind::TypeI => (self.r, self.s, self.t),
            RelationKind::TypeII => (self.s, self.t, self.r),
        }
    }

    fn right_twists(&self, sp: &SurgeryParams) -> (i64, i64, i64) {
        match self.kind {
            RelationKind::TypeI => (sp.alpha() - self.r, sp.beta() - self.s, self.t),
            RelationKind::TypeII => (sp.beta() - self.s, sp.gamma() - self.t, self.r),
        }
    }
}

impl fmt::Display for RelationParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Type {} (r,s,t)=({},{},{})", self.kind, self.r, self.s, self.t)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum RelationError {
    #[error("{0}: both twist counts are zero, the leading coefficient is not a unit")]
    Degenerate(RelationParams),
    #[error("{0}: negative number of plain loops")]
    NegativeLoops(RelationParams),
}

pub type SkeinCombination = BTreeMap<Monomial, LaurentPoly>;

/// Greatest monomial of a combination together with its coefficient.
pub fn leading_term<'a>(
    order: &MonomialOrder,
    comb: &'a SkeinCombination,
) -> Option<(Monomial, &'a LaurentPoly)> {
    comb.iter()
        .max_by(|(u, _), (v, _)| order.cmp(**u, **v))
        .map(|(m, c)| (*m, c))
}

/// Exponents `(first cable, second cable, extra bridge loop)` of the greatest
/// term produced by twisting `u` and `v` times.
fn twist_pair_peak(u: i64, v: i64) -> (i64, i64, i64) {
    if (u > 0 && v < 0) || (u < 0 && v > 0) {
        (u.abs() - 1, v.abs() - 1, 1)
    } else {
        (u.abs(), v.abs(), 0)
    }
}

fn place(kind: RelationKind, (first, second, bridge): (i64, i64, i64), loops: i64) -> Monomial {
    let m = match kind {
        RelationKind::TypeI => Monomial::from_signed(first, second, loops + bridge),
        RelationKind::TypeII => Monomial::from_signed(loops + bridge, first, second),
    };
    m.expect("exponents are nonnegative once the loop count is")
}

/// The greatest term on the left side and its (unit) coefficient.
pub fn greatest_left_term(p: &RelationParams) -> Result<(Monomial, LaurentPoly), RelationError> {
    let (u, v, loops) = p.left_twists();
    if u == 0 && v == 0 {
        return Err(RelationError::Degenerate(*p));
    }
    if loops < 0 {
        return Err(RelationError::NegativeLoops(*p));
    }
    let coeff = if u >= 0 && v >= 0 {
        LaurentPoly::monomial(-1, u + v + 2)
    } else if u <= 0 && v <= 0 {
        LaurentPoly::monomial(-1, u + v - 2)
    } else {
        LaurentPoly::a_pow(u + v)
    };
    Ok((place(p.kind, twist_pair_peak(u, v), loops), coeff))
}

/// The greatest term on the right side, with the signed surgery coefficients
/// substituted. When both twist counts vanish the right side is a trivial
/// loop times the plain loops, and that monomial is returned.
pub fn greatest_right_term(p: &RelationParams, sp: &SurgeryParams) -> Result<Monomial, RelationError> {
    let (u, v, loops) = p.right_twists(sp);
    if loops < 0 {
        return Err(RelationError::NegativeLoops(*p));
    }
    Ok(place(p.kind, twist_pair_peak(u, v), loops))
}

/// Parameters for which `m` is the greatest left term of a relation of the
/// given kind.
pub fn left_param_candidates(m: Monomial, kind: RelationKind) -> Vec<RelationParams> {
    let (i, j, k) = (i64::from(m.i), i64::from(m.j), i64::from(m.k));
    let mut out = Vec::with_capacity(4);
    match kind {
        RelationKind::TypeI => {
            if i > 0 || j > 0 {
                out.push(RelationParams::type_i(i, j, k));
                out.push(RelationParams::type_i(-i, -j, k));
            }
            if k > 0 {
                out.push(RelationParams::type_i(i + 1, -j - 1, k - 1));
                out.push(RelationParams::type_i(-i - 1, j + 1, k - 1));
            }
        }
        RelationKind::TypeII => {
            if j > 0 || k > 0 {
                out.push(RelationParams::type_ii(i, j, k));
                out.push(RelationParams::type_ii(i, -j, -k));
            }
            if i > 0 {
                out.push(RelationParams::type_ii(i - 1, j + 1, -k - 1));
                out.push(RelationParams::type_ii(i - 1, -j - 1, k + 1));
            }
        }
    }
    out
}

/// Full expansion of one side: the twist region rewritten in loops, with the
/// loop around both cables turned into one more plain loop.
fn expand_side(kind: RelationKind, u: i64, v: i64, loops: i64) -> SkeinCombination {
    let mut out = SkeinCombination::new();
    let mut add = |exps: (i64, i64, i64), c: LaurentPoly| {
        let slot = out.entry(place(kind, exps, loops)).or_default();
        *slot += &c;
    };
    match (u, v) {
        (0, 0) => add((0, 0, 0), LaurentPoly::delta()),
        (u, 0) => {
            for (s, c) in expand_closed_twist(u).expect("nonzero").iter() {
                add((i64::from(s.loops), 0, 0), c.clone());
            }
        }
        (0, v) => {
            for (s, c) in expand_closed_twist(v).expect("nonzero").iter() {
                add((0, i64::from(s.loops), 0), c.clone());
            }
        }
        (u, v) => {
            for (s, c) in expand_double_twist(u, v).expect("nonzero").iter() {
                let bridge = match s.family {
                    DoubleFamily::LoopLoop => 0,
                    DoubleFamily::BridgeBridge => 1,
                };
                add(
                    (i64::from(s.left_loops), i64::from(s.right_loops), bridge),
                    c.clone(),
                );
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationExpansion {
    pub left: SkeinCombination,
    pub right: SkeinCombination,
}

/// Both sides of a relation written out in the loop basis.
pub fn expand_relation_full(
    p: &RelationParams,
    sp: &SurgeryParams,
) -> Result<RelationExpansion, RelationError> {
    let (u, v, loops) = p.left_twists();
    if u == 0 && v == 0 {
        return Err(RelationError::Degenerate(*p));
    }
    let (ru, rv, rloops) = p.right_twists(sp);
    if loops < 0 || rloops < 0 {
        return Err(RelationError::NegativeLoops(*p));
    }
    Ok(RelationExpansion {
        left: expand_side(p.kind, u, v, loops),
        right: expand_side(p.kind, ru, rv, rloops),
    })
}
