//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use skein::charvar::{
    build_representations, character_table, check_group_relations, independence_determinant, ClassRep,
    TRACE_RELATIONS,
};
use skein::cyclo::{Cyclotomic5, Mat2};
use skein::gens::{check_termination_cases, generating_set, normalize_params, CanonicalParams, Rewrite};
use skein::twist::{
    expand_closed_twist, expand_double_twist, expand_open_twist, verify_twist_additivity, ClosedState,
    DoubleState, OpenTwistState,
};
use skein::{LaurentPoly, Monomial, MonomialOrder};

struct Outcome {
    ok: bool,
    detail: String,
    notes: Vec<String>,
}

impl Outcome {
    fn pass(detail: impl Into<String>) -> Self {
        Self { ok: true, detail: detail.into(), notes: Vec::new() }
    }
}

fn m(i: u32, j: u32, k: u32) -> Monomial {
    Monomial::new(i, j, k)
}

fn canon(a: i64, b: i64, c: i64) -> CanonicalParams {
    normalize_params(a, b, c).unwrap().canonical
}

/// `+-A^n` with exactly one term.
fn is_signed_power(p: &LaurentPoly) -> bool {
    let terms = p.terms();
    terms.len() == 1 && (terms[0].1 == BigInt::from(1) || terms[0].1 == BigInt::from(-1))
}

// 1 ------------------------------------------------------------------------

fn generating_sets(rewrites: &mut Vec<Rewrite>) -> Outcome {
    let goldens: [((i64, i64, i64), Vec<Monomial>); 3] = [
        ((2, -2, 2), vec![m(0, 0, 0), m(0, 0, 1), m(0, 0, 2), m(0, 1, 0), m(1, 0, 0)]),
        (
            (3, -2, 3),
            vec![m(0, 0, 0), m(0, 0, 1), m(0, 0, 2), m(0, 0, 3), m(0, 1, 0), m(1, 0, 0), m(2, 0, 0)],
        ),
        (
            (3, -2, 5),
            vec![
                m(0, 0, 0),
                m(0, 0, 1),
                m(0, 0, 2),
                m(0, 0, 3),
                m(0, 0, 4),
                m(0, 0, 5),
                m(0, 1, 0),
                m(1, 0, 0),
                m(2, 0, 0),
            ],
        ),
    ];
    let mut out = Outcome::pass("");
    let mut sizes = Vec::new();
    for ((a, b, c), expected) in goldens {
        let start = Instant::now();
        let report = generating_set(&canon(a, b, c));
        let elapsed = start.elapsed();
        let got: BTreeSet<Monomial> = report.generators.iter().copied().collect();
        let want: BTreeSet<Monomial> = expected.into_iter().collect();
        if got != want {
            out.ok = false;
            out.notes.push(format!("M({a}, {b}, {c}): got {got:?}"));
        }
        if elapsed >= Duration::from_secs(1) {
            out.ok = false;
            out.notes.push(format!("M({a}, {b}, {c}) took {elapsed:?}"));
        }
        rewrites.extend(report.rewrites.values().cloned());
        sizes.push(got.len().to_string());
    }
    out.detail = format!("sizes {}", sizes.join("/"));
    out
}

// 2 ------------------------------------------------------------------------

/// Straight from the definition, in exact rationals.
struct OracleKey {
    weight: BigRational,
    ik: u64,
    max_yz: BigRational,
    j: u32,
    k: u32,
}

fn oracle_key(x: Monomial, a: u64, b: u64, c: u64) -> OracleKey {
    let q = |n: u32, d: u64| BigRational::new(BigInt::from(n), BigInt::from(d));
    let (jb, kc) = (q(x.j, b), q(x.k, c));
    OracleKey {
        weight: q(x.i, a) + &jb + &kc,
        ik: u64::from(x.i) * (u64::from(x.k) + 1),
        max_yz: if jb > kc { jb } else { kc },
        j: x.j,
        k: x.k,
    }
}

fn oracle_less(u: &OracleKey, v: &OracleKey) -> bool {
    if u.weight != v.weight {
        return u.weight < v.weight;
    }
    if u.ik != v.ik {
        return u.ik < v.ik;
    }
    if u.max_yz != v.max_yz {
        return u.max_yz < v.max_yz;
    }
    if u.j != v.j {
        return u.j < v.j;
    }
    u.k < v.k
}

fn ordering_suite() -> Outcome {
    let mut out = Outcome::pass("");
    let mut pairs = 0u64;
    let mut triples = 0u64;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for (a, b, c) in [(2u64, 2, 2), (3, 2, 3), (3, 2, 5), (4, 3, 5)] {
        let order = MonomialOrder::new(a, b, c);
        let mut grid = Vec::new();
        for i in 0..3 * a as u32 {
            for j in 0..3 * b as u32 {
                for k in 0..3 * c as u32 {
                    grid.push(m(i, j, k));
                }
            }
        }
        let keys: Vec<OracleKey> = grid.iter().map(|&x| oracle_key(x, a, b, c)).collect();
        let mut bad = 0u64;
        for (p, &u) in grid.iter().enumerate() {
            if order.cmp(u, u) != Ordering::Equal {
                bad += 1;
            }
            for (q, &v) in grid.iter().enumerate() {
                if p == q {
                    continue;
                }
                let got = order.cmp(u, v);
                let less = oracle_less(&keys[p], &keys[q]);
                let greater = oracle_less(&keys[q], &keys[p]);
                // totality and agreement
                let want = match (less, greater) {
                    (true, false) => Ordering::Less,
                    (false, true) => Ordering::Greater,
                    _ => {
                        bad += 1;
                        continue;
                    }
                };
                if got != want || order.cmp(v, u) != got.reverse() {
                    bad += 1;
                }
                pairs += 1;
            }
        }
        for _ in 0..100_000 {
            let (x, y, z) = (
                grid[rng.gen_range(0..grid.len())],
                grid[rng.gen_range(0..grid.len())],
                grid[rng.gen_range(0..grid.len())],
            );
            triples += 1;
            if order.cmp(x, y).is_lt() && order.cmp(y, z).is_lt() && !order.cmp(x, z).is_lt() {
                bad += 1;
            }
        }
        // a strict total order sorts consistently: every earlier element is below every later one
        let mut sorted = grid.clone();
        order.sort(&mut sorted);
        for p in 0..sorted.len() {
            for q in p + 1..sorted.len() {
                if !order.cmp(sorted[p], sorted[q]).is_lt() {
                    bad += 1;
                }
            }
        }
        if bad > 0 {
            out.ok = false;
            out.notes.push(format!("({a},{b},{c}): {bad} failures"));
        }
    }
    out.detail = format!("{pairs} ordered pairs against the oracle, {triples} sampled triples");
    out
}

// 3 ------------------------------------------------------------------------

fn twist_lemmas() -> Outcome {
    let a = LaurentPoly::a_pow;
    let neg_a = |e| LaurentPoly::monomial(-1, e);
    let mut failures = Vec::new();
    let mut checks = 0;
    let mut expect = |what: String, got: LaurentPoly, want: LaurentPoly| {
        checks += 1;
        if got != want {
            failures.push(format!("{what}: expected {want}, got {got}"));
        }
    };
    for n in 1..=8i64 {
        let nu = n as u32;
        expect(
            format!("f+ {n}"),
            expand_open_twist(n).unwrap().coeff(&OpenTwistState::pass(nu - 1)),
            a(n - 1),
        );
        expect(
            format!("f- {n}"),
            expand_open_twist(-n).unwrap().coeff(&OpenTwistState::pass(nu - 1)),
            a(1 - n),
        );
        expect(
            format!("h+ {n}"),
            expand_closed_twist(n).unwrap().coeff(&ClosedState::loops(nu)),
            neg_a(n + 2),
        );
        expect(
            format!("h- {n}"),
            expand_closed_twist(-n).unwrap().coeff(&ClosedState::loops(nu)),
            neg_a(-n - 2),
        );
        for mm in 1..=8i64 {
            let mu = mm as u32;
            let ll = DoubleState::loop_loop(mu, nu);
            let bb = DoubleState::bridge_bridge(mu - 1, nu - 1);
            expect(format!("f++ {mm},{n}"), expand_double_twist(mm, n).unwrap().coeff(&ll), neg_a(mm + n + 2));
            expect(format!("g+- {mm},{n}"), expand_double_twist(mm, -n).unwrap().coeff(&bb), a(mm - n));
            expect(format!("g-+ {mm},{n}"), expand_double_twist(-mm, n).unwrap().coeff(&bb), a(n - mm));
            expect(
                format!("f-- {mm},{n}"),
                expand_double_twist(-mm, -n).unwrap().coeff(&ll),
                neg_a(-mm - n - 2),
            );
        }
    }
    let mut mirrors = 0;
    for n in 1..=8i64 {
        mirrors += 2;
        if expand_open_twist(-n).unwrap() != expand_open_twist(n).unwrap().mirror() {
            failures.push(format!("open mirror {n}"));
        }
        if expand_closed_twist(-n).unwrap() != expand_closed_twist(n).unwrap().mirror() {
            failures.push(format!("closed mirror {n}"));
        }
        for mm in (-8..=8i64).filter(|v| *v != 0) {
            mirrors += 1;
            if expand_double_twist(-mm, -n).unwrap() != expand_double_twist(mm, n).unwrap().mirror() {
                failures.push(format!("double mirror {mm},{n}"));
            }
        }
    }
    let mut additive = 0;
    for mm in -4..=4i64 {
        for n in -4..=4i64 {
            additive += 1;
            if !verify_twist_additivity(mm, n) {
                failures.push(format!("additivity {mm},{n}"));
            }
        }
    }
    Outcome {
        ok: failures.is_empty(),
        detail: format!("{checks} closed forms, {mirrors} mirror pairs, {additive} additivity pairs"),
        notes: failures,
    }
}

// 4 ------------------------------------------------------------------------

fn termination(rewrites: &mut Vec<Rewrite>) -> Outcome {
    let mut out = Outcome::pass("");
    let mut parts = Vec::new();
    let runs = [((2, -2, 2), 12), ((3, -2, 3), 12), ((3, -2, 5), 12), ((2, 2, 2), 8), ((3, 3, 3), 8)];
    for ((a, b, c), bound) in runs {
        let cp = canon(a, b, c);
        let report = check_termination_cases(&cp, bound);
        parts.push(format!("M({a},{b},{c}) {} checked", report.checked));
        if !report.ok() {
            out.ok = false;
            let fallback = report.violations.iter().filter(|v| v.fallback.is_some()).count();
            let stuck: Vec<String> = report.stuck().iter().map(|x| x.to_string()).collect();
            out.notes.push(format!(
                "M({a},{b},{c}) bound {bound}: {} violations, {fallback} rewritable by another relation, \
                 stuck: [{}]",
                report.violations.len(),
                stuck.join(", ")
            ));
            let mut cases: Vec<&str> = report.violations.iter().map(|v| v.case).collect();
            cases.dedup();
            out.notes.push(format!("  failing cases: {}", cases.join(", ")));
        }
        for v in &report.violations {
            if let Some(w) = &v.fallback {
                rewrites.push(w.clone());
            }
        }
        // the steps that did verify also feed criterion 6
        for i in 0..=bound {
            for j in 0..=bound {
                for k in 0..=bound {
                    let x = m(i, j, k);
                    if let Some(step) = skein::gens::proof_case(x, &cp) {
                        if let Ok(w) = skein::gens::check_step(x, &step, &cp) {
                            rewrites.push(w);
                        }
                    }
                }
            }
        }
    }
    out.detail = parts.join(", ");
    out
}

// 5 ------------------------------------------------------------------------

fn e5(powers: [i64; 5]) -> Cyclotomic5 {
    Cyclotomic5::from_powers(powers)
}

fn charvar() -> Outcome {
    let mut notes = Vec::new();
    let two = e5([2, 0, 0, 0, 0]);
    let c = |n: i64| e5([n, 0, 0, 0, 0]);
    let expected: [[Cyclotomic5; 9]; 3] = [
        std::array::from_fn(|_| two.clone()),
        [
            two.clone(),
            e5([0, -1, 0, 0, -1]),
            e5([0, 0, 1, 1, 0]),
            e5([0, 0, -1, -1, 0]),
            e5([0, 1, 0, 0, 1]),
            c(-2),
            c(0),
            c(1),
            c(-1),
        ],
        [
            two.clone(),
            e5([0, 0, -1, -1, 0]),
            e5([0, 1, 0, 0, 1]),
            e5([0, -1, 0, 0, -1]),
            e5([0, 0, 1, 1, 0]),
            c(-2),
            c(0),
            c(1),
            c(-1),
        ],
    ];
    let table = character_table();
    for (row, want) in expected.iter().enumerate() {
        for (g, w) in ClassRep::ALL.iter().zip(want) {
            if table.tau(*g, row) != w {
                notes.push(format!("chi_{row}({}) = {}, expected {w}", g.label(), table.tau(*g, row)));
            }
        }
    }
    for rel in TRACE_RELATIONS {
        if !rel.holds(&table) {
            notes.push(format!("{rel} fails"));
        }
    }
    let reps = build_representations();
    for rep in &reps[1..] {
        for (name, mat) in [("R", &rep.image_r), ("S", &rep.image_s)] {
            if mat.det() != Cyclotomic5::one() {
                notes.push(format!("det {name} of {} is {}", rep.name, mat.det()));
            }
        }
        let g = check_group_relations(rep);
        if !g.ok() || g.central != -&Mat2::identity() || g.central.pow(2) != Mat2::identity() {
            notes.push(format!("group relations fail for {}", rep.name));
        }
    }
    let det = independence_determinant(&table);
    if det.is_zero() {
        notes.push("independence determinant vanishes".into());
    }
    Outcome {
        ok: notes.is_empty(),
        detail: format!("27 entries, 6 relations, det = {det}"),
        notes,
    }
}

// 6 ------------------------------------------------------------------------

fn unit_coefficients(rewrites: &[Rewrite]) -> Outcome {
    let bad: Vec<String> = rewrites
        .iter()
        .filter(|w| w.lead_coeff.is_unit().is_none() || !is_signed_power(&w.lead_coeff))
        .map(|w| format!("{}: {}", w.relation, w.lead_coeff))
        .collect();
    Outcome {
        ok: bad.is_empty(),
        detail: format!("{} rewrites", rewrites.len()),
        notes: bad,
    }
}

fn report(n: u32, name: &str, limit: Option<Duration>, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let mut out = f();
    let elapsed = start.elapsed();
    if let Some(limit) = limit {
        if elapsed >= limit {
            out.ok = false;
            out.notes.push(format!("took {elapsed:.2?}, limit {limit:?}"));
        }
    }
    let status = if out.ok { "PASS" } else { "FAIL" };
    println!("{status} [{n}] {name}: {} ({elapsed:.2?})", out.detail);
    for note in &out.notes {
        println!("       {note}");
    }
    out.ok
}

fn main() -> ExitCode {
    let mut rewrites = Vec::new();
    let mut ok = true;
    ok &= report(1, "generating sets", None, || generating_sets(&mut rewrites));
    ok &= report(2, "monomial order", None, ordering_suite);
    ok &= report(3, "twist expansions", Some(Duration::from_secs(10)), twist_lemmas);
    ok &= report(4, "termination cases", Some(Duration::from_secs(30)), || termination(&mut rewrites));
    ok &= report(5, "character variety", Some(Duration::from_secs(1)), charvar);
    ok &= report(6, "unit leading coefficients", None, || unit_coefficients(&rewrites));
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
