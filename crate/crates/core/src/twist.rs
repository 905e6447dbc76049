//! Expansion of twisted strands into loops encircling the strands they twist
//! about.
//!
//! A single strand running through a twist box with a cable is modelled in the
//! relative skein module of the cable's complement. That module is free of
//! rank two over `Z[A^±1][w]`, where `w` is a small loop around the cable.
//! Three crossingless arcs appear in the expansions:
//!
//! * the straight arc (no twisting, the "clasp" family),
//! * the arc hooked once around the cable by a positive full twist,
//! * the arc hooked once by a negative full twist.
//!
//! Only two are independent:
//! `negative hook = A^-1 w · straight - A^-2 · positive hook`.
//!
//! One more positive full twist acts by
//! `straight -> positive hook` and
//! `positive hook -> A w · positive hook - A^2 · straight`
//! (one smoothing leaves a loop, the other a kink worth `-A^3`).

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::laurent::LaurentPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum TwistError {
    #[error("a twist region needs a nonzero number of full twists")]
    ZeroTwist,
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub enum OpenFamily {
    /// Strand hooked once around the cable, plus loops.
    Pass,
    /// Strand not linked with the cable, plus loops.
    Clasp,
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub struct OpenTwistState {
    pub family: OpenFamily,
    pub loops: u32,
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub struct ClosedState {
    pub loops: u32,
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub enum DoubleFamily {
    /// Only loops around each of the two cables.
    LoopLoop,
    /// Loops around each cable plus one big loop around both.
    BridgeBridge,
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub struct DoubleState {
    pub family: DoubleFamily,
    pub left_loops: u32,
    pub right_loops: u32,
}

impl OpenTwistState {
    pub fn pass(loops: u32) -> Self {
        Self {
            family: OpenFamily::Pass,
            loops,
        }
    }

    pub fn clasp(loops: u32) -> Self {
        Self {
            family: OpenFamily::Clasp,
            loops,
        }
    }
}

impl ClosedState {
    pub fn loops(loops: u32) -> Self {
        Self { loops }
    }
}

impl DoubleState {
    pub fn loop_loop(left_loops: u32, right_loops: u32) -> Self {
        Self {
            family: DoubleFamily::LoopLoop,
            left_loops,
            right_loops,
        }
    }

    pub fn bridge_bridge(left_loops: u32, right_loops: u32) -> Self {
        Self {
            family: DoubleFamily::BridgeBridge,
            left_loops,
            right_loops,
        }
    }
}

impl fmt::Display for OpenTwistState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}({})", self.family, self.loops)
    }
}

impl fmt::Display for ClosedState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Loops({})", self.loops)
    }
}

impl fmt::Display for DoubleState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:?}({},{})",
            self.family, self.left_loops, self.right_loops
        )
    }
}

/// A `Z[A^±1]`-linear combination of states. Zero coefficients are never
/// stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TwistExpansion<S: Ord> {
    terms: BTreeMap<S, LaurentPoly>,
}

impl<S: Ord> Default for TwistExpansion<S> {
    fn default() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }
}

impl<S: Ord + Copy> TwistExpansion<S> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, state: S, coeff: &LaurentPoly) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(state).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&state);
        }
    }

    pub fn coeff(&self, state: &S) -> LaurentPoly {
        self.terms.get(state).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&S, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn states(&self) -> impl Iterator<Item = S> + '_ {
        self.terms.keys().copied()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Applies [`LaurentPoly::mirror`] to every coefficient.
    pub fn mirror(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(s, c)| (*s, c.mirror())).collect(),
        }
    }
}

impl<S: Ord + Copy> FromIterator<(S, LaurentPoly)> for TwistExpansion<S> {
    fn from_iter<T: IntoIterator<Item = (S, LaurentPoly)>>(iter: T) -> Self {
        let mut out = Self::new();
        for (s, c) in iter {
            out.add_term(s, &c);
        }
        out
    }
}

/// One line per state, `family(j) : <coefficient>`.
impl<S: Ord + fmt::Display> fmt::Display for TwistExpansion<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (s, c) in &self.terms {
            writeln!(f, "{s} : {c}")?;
        }
        Ok(())
    }
}

/// A twist box and its 180° rotation. The rotated picture has identical
/// coefficient data; the flag only records which side of the cable the strand
/// enters from.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Orientation {
    #[default]
    Standard,
    Rotated,
}

/// `f_j` (pass family) and `g_j` (clasp family) for `n > 0` positive full
/// twists.
fn positive_open_coeffs(n: u32) -> (Vec<LaurentPoly>, Vec<LaurentPoly>) {
    let a = LaurentPoly::a_pow(1);
    let minus_a2 = LaurentPoly::monomial(-1, 2);
    let mut f = vec![LaurentPoly::one()];
    let mut g: Vec<LaurentPoly> = Vec::new();
    for _ in 1..n {
        // one more twist: f'_j = A f_{j-1} + g_j, g'_j = -A^2 f_j
        let next_f = (0..=f.len())
            .map(|j| {
                let from_pass = if j > 0 { &a * &f[j - 1] } else { LaurentPoly::zero() };
                let from_clasp = g.get(j).cloned().unwrap_or_default();
                from_pass + from_clasp
            })
            .collect();
        g = f.iter().map(|c| &minus_a2 * c).collect();
        f = next_f;
    }
    (f, g)
}

pub fn expand_open_twist(n: i64) -> Result<TwistExpansion<OpenTwistState>, TwistError> {
    expand_open_twist_oriented(n, Orientation::Standard)
}

/// `n` full twists of one strand with a cable. For `n < 0` the states are the
/// crossing-reversed diagrams and every coefficient is mirrored.
pub fn expand_open_twist_oriented(
    n: i64,
    _orientation: Orientation,
) -> Result<TwistExpansion<OpenTwistState>, TwistError> {
    if n == 0 {
        return Err(TwistError::ZeroTwist);
    }
    let count = u32::try_from(n.unsigned_abs()).expect("twist count fits in u32");
    let (f, g) = positive_open_coeffs(count);
    let pass = f
        .into_iter()
        .enumerate()
        .map(|(j, c)| (OpenTwistState::pass(j as u32), c));
    let clasp = g
        .into_iter()
        .enumerate()
        .map(|(j, c)| (OpenTwistState::clasp(j as u32), c));
    let positive: TwistExpansion<_> = pass.chain(clasp).collect();
    Ok(if n > 0 { positive } else { positive.mirror() })
}

/// `n` full twists of a closed component about a cable, as a combination of
/// parallel loops around the cable.
pub fn expand_closed_twist(n: i64) -> Result<TwistExpansion<ClosedState>, TwistError> {
    expand_closed_twist_oriented(n, Orientation::Standard)
}

pub fn expand_closed_twist_oriented(
    n: i64,
    orientation: Orientation,
) -> Result<TwistExpansion<ClosedState>, TwistError> {
    let open = expand_open_twist_oriented(n, orientation)?;
    let mut out = TwistExpansion::new();
    for (state, coeff) in open.iter() {
        let (closed, factor) = close_arc(arc_of(*state, n), state.loops);
        out.add_term(closed, &(coeff * &factor));
    }
    Ok(out)
}

/// A component twisted `m` times about one cable and `n` times about another.
/// `LoopLoop(i, j)` is `i` loops around the first cable and `j` around the
/// second; `BridgeBridge(i, j)` adds one loop around both.
pub fn expand_double_twist(m: i64, n: i64) -> Result<TwistExpansion<DoubleState>, TwistError> {
    let first = expand_open_twist_oriented(m, Orientation::Standard)?;
    let second = expand_open_twist_oriented(n, Orientation::Rotated)?;
    let mut out = TwistExpansion::new();
    for (s1, c1) in first.iter() {
        for (s2, c2) in second.iter() {
            let product = c1 * c2;
            for (state, factor) in close_arc_pair(arc_of(*s1, m), arc_of(*s2, n)) {
                let shifted = DoubleState {
                    left_loops: state.left_loops + s1.loops,
                    right_loops: state.right_loops + s2.loops,
                    ..state
                };
                out.add_term(shifted, &(&product * &factor));
            }
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Arc model

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub(crate) enum Arc {
    Straight,
    PositiveHook,
    NegativeHook,
}

fn arc_of(state: OpenTwistState, twists: i64) -> Arc {
    match (state.family, twists > 0) {
        (OpenFamily::Clasp, _) => Arc::Straight,
        (OpenFamily::Pass, true) => Arc::PositiveHook,
        (OpenFamily::Pass, false) => Arc::NegativeHook,
    }
}

/// Closing the strand up without encircling the cable.
fn close_arc(arc: Arc, loops: u32) -> (ClosedState, LaurentPoly) {
    match arc {
        Arc::Straight => (ClosedState::loops(loops), LaurentPoly::delta()),
        Arc::PositiveHook => (ClosedState::loops(loops + 1), LaurentPoly::monomial(-1, 3)),
        Arc::NegativeHook => (ClosedState::loops(loops + 1), LaurentPoly::monomial(-1, -3)),
    }
}

/// Joining a strand through the first twist box to a strand through the
/// second one into a single component.
fn close_arc_pair(first: Arc, second: Arc) -> Vec<(DoubleState, LaurentPoly)> {
    use Arc::*;
    let ll = DoubleState::loop_loop;
    let bb = DoubleState::bridge_bridge(0, 0);
    let unit = |c: i64, e: i64| LaurentPoly::monomial(c, e);
    match (first, second) {
        (Straight, Straight) => vec![(ll(0, 0), LaurentPoly::delta())],
        (PositiveHook, Straight) => vec![(ll(1, 0), unit(-1, 3))],
        (NegativeHook, Straight) => vec![(ll(1, 0), unit(-1, -3))],
        (Straight, PositiveHook) => vec![(ll(0, 1), unit(-1, 3))],
        (Straight, NegativeHook) => vec![(ll(0, 1), unit(-1, -3))],
        (PositiveHook, PositiveHook) => vec![(ll(1, 1), unit(-1, 4)), (bb, unit(-1, 2))],
        (NegativeHook, NegativeHook) => vec![(ll(1, 1), unit(-1, -4)), (bb, unit(-1, -2))],
        (PositiveHook, NegativeHook) | (NegativeHook, PositiveHook) => {
            vec![(bb, LaurentPoly::one())]
        }
    }
}

/// Element of the strand module: `(arc, loops around the cable) -> coefficient`.
pub(crate) type StrandVector = BTreeMap<(Arc, u32), LaurentPoly>;

fn push(v: &mut StrandVector, key: (Arc, u32), c: &LaurentPoly) {
    if c.is_zero() {
        return;
    }
    let slot = v.entry(key).or_default();
    *slot += c;
    if slot.is_zero() {
        v.remove(&key);
    }
}

pub(crate) fn strand_vector(twists: i64, exp: &TwistExpansion<OpenTwistState>) -> StrandVector {
    let mut v = StrandVector::new();
    for (s, c) in exp.iter() {
        push(&mut v, (arc_of(*s, twists), s.loops), c);
    }
    v
}

/// Rewrites negative hooks in the basis `{straight, positive hook}`.
pub(crate) fn canonicalize(v: &StrandVector) -> StrandVector {
    let a_inv = LaurentPoly::a_pow(-1);
    let minus_a_inv2 = LaurentPoly::monomial(-1, -2);
    let mut out = StrandVector::new();
    for (&(arc, loops), c) in v {
        match arc {
            Arc::NegativeHook => {
                push(&mut out, (Arc::Straight, loops + 1), &(c * &a_inv));
                push(&mut out, (Arc::PositiveHook, loops), &(c * &minus_a_inv2));
            }
            _ => push(&mut out, (arc, loops), c),
        }
    }
    out
}

/// Stacks one more full twist (`positive`) or inverse twist onto every arc.
pub(crate) fn twist_step(v: &StrandVector, positive: bool) -> StrandVector {
    let (hook, undo) = if positive {
        (Arc::PositiveHook, Arc::NegativeHook)
    } else {
        (Arc::NegativeHook, Arc::PositiveHook)
    };
    let sign = if positive { 1 } else { -1 };
    let mut out = StrandVector::new();
    for (&(arc, loops), c) in v {
        if arc == Arc::Straight {
            push(&mut out, (hook, loops), c);
        } else if arc == undo {
            push(&mut out, (Arc::Straight, loops), c);
        } else {
            // a second hook of the same handedness: loop + kink smoothings
            push(&mut out, (hook, loops + 1), &(c * &LaurentPoly::a_pow(sign)));
            push(&mut out, (Arc::Straight, loops), &(c * &LaurentPoly::monomial(-1, 2 * sign)));
        }
    }
    out
}

fn untwisted() -> StrandVector {
    StrandVector::from([((Arc::Straight, 0), LaurentPoly::one())])
}

fn strand_for(twists: i64) -> StrandVector {
    match expand_open_twist(twists) {
        Ok(exp) => strand_vector(twists, &exp),
        Err(TwistError::ZeroTwist) => untwisted(),
    }
}

/// Stacks `n` twists on top of the expansion of `m` twists by applying the
/// local one-twist rule `|n|` times to every arc, and compares with the
/// expansion of `m + n` twists after both are written in the same basis.
pub fn verify_twist_additivity(m: i64, n: i64) -> bool {
    let mut stacked = strand_for(m);
    for _ in 0..n.unsigned_abs() {
        stacked = twist_step(&stacked, n > 0);
    }
    canonicalize(&stacked) == canonicalize(&strand_for(m + n))
}

/// One closed-form coefficient check: the coefficient of the extreme state of
/// an expansion against its expected unit.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LemmaCheck {
    pub family: &'static str,
    pub m: i64,
    pub n: i64,
    pub expected: LaurentPoly,
    pub actual: LaurentPoly,
}

impl LemmaCheck {
    pub fn ok(&self) -> bool {
        self.expected == self.actual
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LemmaReport {
    pub max_twist: u32,
    pub additivity_bound: u32,
    pub checks: Vec<LemmaCheck>,
    pub mirror_checked: usize,
    /// `(family, m, n)` where `expansion(-m, -n) != mirror(expansion(m, n))`.
    pub mirror_failures: Vec<(&'static str, i64, i64)>,
    pub additivity_checked: usize,
    pub additivity_failures: Vec<(i64, i64)>,
}

impl LemmaReport {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(LemmaCheck::ok)
            && self.mirror_failures.is_empty()
            && self.additivity_failures.is_empty()
    }

    pub fn failed_checks(&self) -> impl Iterator<Item = &LemmaCheck> {
        self.checks.iter().filter(|c| !c.ok())
    }
}

fn max_loops<S: Ord + Copy>(exp: &TwistExpansion<S>, loops: impl Fn(&S) -> u32) -> u32 {
    exp.states().map(|s| loops(&s)).max().unwrap_or(0)
}

/// Verifies the extreme coefficients of every expansion with `1 <= |m|, |n| <=
/// max_twist`, their mirror symmetry, and twist additivity for
/// `|m|, |n| <= additivity_bound`.
pub fn check_twist_lemmas(max_twist: u32, additivity_bound: u32) -> LemmaReport {
    let a = LaurentPoly::a_pow;
    let neg_a = |e| LaurentPoly::monomial(-1, e);
    let mut report = LemmaReport {
        max_twist,
        additivity_bound,
        ..Default::default()
    };
    let top = i64::from(max_twist);
    let mut check = |family, m, n, expected: LaurentPoly, actual: LaurentPoly| {
        report.checks.push(LemmaCheck {
            family,
            m,
            n,
            expected,
            actual,
        });
    };
    for n in 1..=top {
        for orientation in [Orientation::Standard, Orientation::Rotated] {
            for sign in [1, -1] {
                let open = expand_open_twist_oriented(sign * n, orientation).unwrap();
                let top_pass = OpenTwistState::pass((n - 1) as u32);
                let support_ok = max_loops(&open, |s| s.loops) == (n - 1) as u32;
                let actual = if support_ok { open.coeff(&top_pass) } else { LaurentPoly::zero() };
                let family = if sign > 0 { "f+" } else { "f-" };
                check(family, 0, sign * n, a(sign * (n - 1)), actual);

                let closed = expand_closed_twist_oriented(sign * n, orientation).unwrap();
                let support_ok = max_loops(&closed, |s| s.loops) == n as u32;
                let actual = if support_ok {
                    closed.coeff(&ClosedState::loops(n as u32))
                } else {
                    LaurentPoly::zero()
                };
                let family = if sign > 0 { "h+" } else { "h-" };
                check(family, 0, sign * n, neg_a(sign * (n + 2)), actual);
            }
        }
        for m in 1..=top {
            let (mu, nu) = (m as u32, n as u32);
            let pp = expand_double_twist(m, n).unwrap();
            check("f++", m, n, neg_a(m + n + 2), pp.coeff(&DoubleState::loop_loop(mu, nu)));
            let nn = expand_double_twist(-m, -n).unwrap();
            check("f--", -m, -n, neg_a(-m - n - 2), nn.coeff(&DoubleState::loop_loop(mu, nu)));
            let pn = expand_double_twist(m, -n).unwrap();
            check("g+-", m, -n, a(m - n), pn.coeff(&DoubleState::bridge_bridge(mu - 1, nu - 1)));
            let np = expand_double_twist(-m, n).unwrap();
            check("g-+", -m, n, a(n - m), np.coeff(&DoubleState::bridge_bridge(mu - 1, nu - 1)));
        }
    }

    for n in 1..=top {
        report.mirror_checked += 2;
        if expand_open_twist(-n).unwrap() != expand_open_twist(n).unwrap().mirror() {
            report.mirror_failures.push(("open", 0, n));
        }
        if expand_closed_twist(-n).unwrap() != expand_closed_twist(n).unwrap().mirror() {
            report.mirror_failures.push(("closed", 0, n));
        }
        for m in -top..=top {
            if m == 0 {
                continue;
            }
            report.mirror_checked += 1;
            if expand_double_twist(-m, -n).unwrap() != expand_double_twist(m, n).unwrap().mirror() {
                report.mirror_failures.push(("double", m, n));
            }
        }
    }

    let bound = i64::from(additivity_bound);
    for m in -bound..=bound {
        for n in -bound..=bound {
            report.additivity_checked += 1;
            if !verify_twist_additivity(m, n) {
                report.additivity_failures.push((m, n));
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(e: i64) -> LaurentPoly {
        LaurentPoly::a_pow(e)
    }

    fn neg_a(e: i64) -> LaurentPoly {
        LaurentPoly::monomial(-1, e)
    }

    #[test]
    fn zero_twists_rejected() {
        assert_eq!(expand_open_twist(0), Err(TwistError::ZeroTwist));
        assert_eq!(expand_closed_twist(0), Err(TwistError::ZeroTwist));
        assert_eq!(expand_double_twist(0, 2), Err(TwistError::ZeroTwist));
        assert_eq!(expand_double_twist(3, 0), Err(TwistError::ZeroTwist));
    }

    #[test]
    fn small_open_twists() {
        let one = expand_open_twist(1).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one.coeff(&OpenTwistState::pass(0)), LaurentPoly::one());

        let two = expand_open_twist(2).unwrap();
        assert_eq!(two.len(), 2);
        assert_eq!(two.coeff(&OpenTwistState::pass(1)), a(1));
        assert_eq!(two.coeff(&OpenTwistState::clasp(0)), neg_a(2));

        let minus_two = expand_open_twist(-2).unwrap();
        assert_eq!(minus_two.coeff(&OpenTwistState::pass(1)), a(-1));
        assert_eq!(minus_two.coeff(&OpenTwistState::clasp(0)), neg_a(-2));
    }

    #[test]
    fn three_twists_by_hand() {
        // A w (A w e1 - A^2 e0) - A^2 e1 = A^2 w^2 e1 - A^3 w e0 - A^2 e1
        let three = expand_open_twist(3).unwrap();
        assert_eq!(three.coeff(&OpenTwistState::pass(2)), a(2));
        assert_eq!(three.coeff(&OpenTwistState::pass(0)), neg_a(2));
        assert_eq!(three.coeff(&OpenTwistState::clasp(1)), neg_a(3));
        assert_eq!(three.len(), 3);
    }

    #[test]
    fn open_support_bounds() {
        for n in 1..=8i64 {
            for sign in [1, -1] {
                let exp = expand_open_twist(sign * n).unwrap();
                for s in exp.states() {
                    match s.family {
                        OpenFamily::Pass => assert!(i64::from(s.loops) < n),
                        OpenFamily::Clasp => assert!(i64::from(s.loops) < n - 1),
                    }
                }
                let orig = expand_open_twist_oriented(sign * n, Orientation::Rotated).unwrap();
                assert_eq!(orig, exp);
            }
        }
    }

    #[test]
    fn closed_twists() {
        let one = expand_closed_twist(1).unwrap();
        assert_eq!(one.coeff(&ClosedState::loops(1)), neg_a(3));
        // the closure of a single hook is one framed loop; nothing at i = 0
        assert!(one.coeff(&ClosedState::loops(0)).is_zero());
        assert_eq!(one.len(), 1);

        let minus_one = expand_closed_twist(-1).unwrap();
        assert_eq!(minus_one.coeff(&ClosedState::loops(1)), neg_a(-3));

        let two = expand_closed_twist(2).unwrap();
        assert_eq!(two.coeff(&ClosedState::loops(2)), neg_a(4));
        assert_eq!(
            two.coeff(&ClosedState::loops(0)),
            LaurentPoly::from_terms([(4, 1), (0, 1)])
        );
    }

    #[test]
    fn closing_a_negative_hook_is_basis_independent() {
        let neg = StrandVector::from([((Arc::NegativeHook, 0), LaurentPoly::one())]);
        let close = |v: &StrandVector| {
            let mut out = TwistExpansion::<ClosedState>::new();
            for (&(arc, loops), c) in v {
                let (s, f) = close_arc(arc, loops);
                out.add_term(s, &(c * &f));
            }
            out
        };
        assert_eq!(close(&neg), close(&canonicalize(&neg)));
    }

    #[test]
    fn double_twist_small_cases() {
        let pp = expand_double_twist(1, 1).unwrap();
        assert_eq!(pp.coeff(&DoubleState::loop_loop(1, 1)), neg_a(4));
        assert_eq!(pp.coeff(&DoubleState::bridge_bridge(0, 0)), neg_a(2));
        assert_eq!(pp.len(), 2);

        let pn = expand_double_twist(1, -1).unwrap();
        assert_eq!(pn.coeff(&DoubleState::bridge_bridge(0, 0)), LaurentPoly::one());
        assert_eq!(pn.len(), 1);

        let nn = expand_double_twist(-2, -3).unwrap();
        assert_eq!(nn.coeff(&DoubleState::loop_loop(2, 3)), neg_a(-7));
    }

    #[test]
    fn double_twist_closure_table_is_basis_independent() {
        // Recompute every double twist using only straight and positive-hook
        // arcs, so the mixed and negative closure entries are checked against
        // the positive ones.
        for m in [-3i64, -2, -1, 1, 2, 3] {
            for n in [-3i64, -2, -1, 1, 2, 3] {
                let first = canonicalize(&strand_for(m));
                let second = canonicalize(&strand_for(n));
                let mut via_basis = TwistExpansion::<DoubleState>::new();
                for (&(arc1, l1), c1) in &first {
                    for (&(arc2, l2), c2) in &second {
                        for (s, f) in close_arc_pair(arc1, arc2) {
                            let s = DoubleState {
                                left_loops: s.left_loops + l1,
                                right_loops: s.right_loops + l2,
                                ..s
                            };
                            via_basis.add_term(s, &(&(c1 * c2) * &f));
                        }
                    }
                }
                assert_eq!(via_basis, expand_double_twist(m, n).unwrap(), "({m},{n})");
            }
        }
    }

    #[test]
    fn double_twist_is_symmetric_in_the_two_cables() {
        for m in [-3i64, -1, 2, 4] {
            for n in [-2i64, 1, 3] {
                let mn = expand_double_twist(m, n).unwrap();
                let nm = expand_double_twist(n, m).unwrap();
                let swapped: TwistExpansion<DoubleState> = nm
                    .iter()
                    .map(|(s, c)| {
                        (
                            DoubleState {
                                family: s.family,
                                left_loops: s.right_loops,
                                right_loops: s.left_loops,
                            },
                            c.clone(),
                        )
                    })
                    .collect();
                assert_eq!(mn, swapped);
            }
        }
    }

    #[test]
    fn additivity_anchors() {
        assert!(verify_twist_additivity(1, 1));
        assert!(verify_twist_additivity(2, -2));
        assert!(verify_twist_additivity(0, 3));
        assert!(verify_twist_additivity(0, -3));
        assert!(verify_twist_additivity(-3, 5));
    }

    #[test]
    fn additivity_detects_a_wrong_expansion() {
        let mut broken = strand_for(2);
        push(&mut broken, (Arc::Straight, 0), &LaurentPoly::one());
        assert_ne!(canonicalize(&twist_step(&broken, true)), canonicalize(&strand_for(3)));
    }

    #[test]
    fn lemma_report_small() {
        let r = check_twist_lemmas(3, 2);
        assert!(r.ok(), "{:?}", r.failed_checks().collect::<Vec<_>>());
        // 4 single-strand forms x 2 orientations x 3, plus 4 double forms x 9
        assert_eq!(r.checks.len(), 24 + 36);
        assert_eq!(r.additivity_checked, 25);
    }

    #[test]
    fn dump_format() {
        let text = expand_open_twist(2).unwrap().to_string();
        assert_eq!(text, "Pass(1) : A\nClasp(0) : -A^2\n");
        let text = expand_double_twist(1, 1).unwrap().to_string();
        assert_eq!(text, "LoopLoop(1,1) : -A^4\nBridgeBridge(0,0) : -A^2\n");
    }
}
