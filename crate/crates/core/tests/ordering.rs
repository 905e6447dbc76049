use std::cmp::Ordering;

use num_rational::Ratio;
use proptest::prelude::*;

use skein::{cmp_monomials, Monomial, SurgeryParams};

/// The definition in `i64` ratios.
fn reference(a: i64, b: i64, c: i64, u: Monomial, v: Monomial) -> Ordering {
    let key = |x: Monomial| {
        let (i, j, k) = (i64::from(x.i), i64::from(x.j), i64::from(x.k));
        let (jb, kc) = (Ratio::new(j, b), Ratio::new(k, c));
        (Ratio::new(i, a) + jb + kc, i * (k + 1), jb.max(kc), j, k)
    };
    key(u).cmp(&key(v))
}

fn params() -> impl Strategy<Value = SurgeryParams> {
    (2i64..12, 2i64..12, 2i64..12, any::<bool>())
        .prop_filter_map("hypotheses", |(a, b, c, mixed)| {
            SurgeryParams::new(a, if mixed { -b } else { b }, c).ok()
        })
}

fn mono() -> impl Strategy<Value = Monomial> {
    (0u32..30, 0u32..30, 0u32..30).prop_map(|(i, j, k)| Monomial::new(i, j, k))
}

proptest! {
    #[test]
    fn agrees_with_reference(sp in params(), u in mono(), v in mono()) {
        let (a, b, c) = (sp.a() as i64, sp.b() as i64, sp.c() as i64);
        prop_assert_eq!(cmp_monomials(&sp, u, v), reference(a, b, c, u, v));
    }

    #[test]
    fn antisymmetric(sp in params(), u in mono(), v in mono()) {
        prop_assert_eq!(cmp_monomials(&sp, u, v), cmp_monomials(&sp, v, u).reverse());
        prop_assert_eq!(cmp_monomials(&sp, u, v) == Ordering::Equal, u == v);
    }

    #[test]
    fn transitive(sp in params(), u in mono(), v in mono(), w in mono()) {
        let mut xs = [u, v, w];
        xs.sort_by(|p, q| cmp_monomials(&sp, *p, *q));
        prop_assert!(cmp_monomials(&sp, xs[0], xs[2]) != Ordering::Greater);
    }
}
