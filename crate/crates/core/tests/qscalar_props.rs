use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use uqdyn::qscalar::{qnum, qpochhammer, QScalar, ZPoly};

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn pow(x: &BigRational, e: i32) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..e.unsigned_abs() {
        acc *= x;
    }
    if e < 0 {
        acc.recip()
    } else {
        acc
    }
}

fn eval_poly(p: &ZPoly, t: &BigRational, y: &BigRational) -> BigRational {
    p.terms().iter().fold(BigRational::zero(), |acc, ((a, b), c)| acc + BigRational::from(c.to_big()) * pow(t, *a) * pow(y, *b))
}

/// Independent oracle: exact evaluation of the canonical pair at a rational point.
fn eval(s: &QScalar, t: &BigRational, y: &BigRational) -> BigRational {
    let (n, d) = s.num_den();
    eval_poly(&n, t, y) / eval_poly(&d, t, y)
}

fn points() -> Vec<(BigRational, BigRational)> {
    vec![(rat(3, 7), rat(5, 11)), (rat(-13, 5), rat(2, 9))]
}

fn atom() -> impl Strategy<Value = QScalar> {
    prop_oneof![
        (-3i64..=3, -6i32..=6, -4i32..=4).prop_map(|(c, a, b)| QScalar::monomial(if c == 0 { 1 } else { c }, a, b)),
        (-8i32..=8, -4i32..=4, prop::bool::ANY).prop_map(|(a, b, plus)| {
            let m = QScalar::monomial(if plus { 1 } else { -1 }, a, b);
            let v = QScalar::one().add(&m);
            if v.is_zero() { QScalar::from_int(2) } else { v }
        }),
        (1i64..6).prop_map(qnum),
    ]
}

fn scalar() -> impl Strategy<Value = QScalar> {
    prop::collection::vec((atom(), atom(), 0u8..3), 1..4).prop_map(|parts| {
        let mut acc = QScalar::zero();
        for (x, y, op) in parts {
            let term = match op {
                0 => x.mul(&y),
                1 => x.div(&y).unwrap(),
                _ => x.add(&y),
            };
            acc = acc.add(&term);
        }
        acc
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn arithmetic_matches_point_evaluation(a in scalar(), b in scalar()) {
        for (t, y) in points() {
            let (ea, eb) = (eval(&a, &t, &y), eval(&b, &t, &y));
            prop_assert_eq!(eval(&a.add(&b), &t, &y), &ea + &eb);
            prop_assert_eq!(eval(&a.mul(&b), &t, &y), &ea * &eb);
            if !b.is_zero() && !eb.is_zero() {
                prop_assert_eq!(eval(&a.div(&b).unwrap(), &t, &y), &ea / &eb);
            }
        }
    }

    #[test]
    fn field_axioms_hold_structurally(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.add(&b).sub(&b), a.clone());
        if !a.is_zero() {
            prop_assert!(a.mul(&a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn canonical_string_round_trips(a in scalar()) {
        let s = a.canonical_string();
        let back = QScalar::parse(&s).unwrap();
        prop_assert_eq!(back.canonical_string(), s);
        prop_assert_eq!(back, a);
    }

    #[test]
    fn shift_is_substitution(a in scalar(), k in -3i32..=3) {
        for (t, y) in points() {
            let shifted = a.shift_y(k);
            let y2 = &y * pow(&t, k);
            let expect = eval(&a, &t, &y2);
            prop_assert_eq!(eval(&shifted, &t, &y), expect);
        }
        prop_assert_eq!(a.shift_y(k).shift_y(-k), a);
    }

    #[test]
    fn pochhammer_splits(m in -5i64..=5, n in -5i64..=5, a in -3i32..=3, b in 1i32..=2) {
        let x = QScalar::monomial(1, 2 * a + 1, b);
        let q = QScalar::q_pow(1);
        let lhs = qpochhammer(&x, &q, m + n).unwrap();
        let rhs = qpochhammer(&x, &q, m).unwrap().mul(&qpochhammer(&x.mul(&q.pow(m as i32).unwrap()), &q, n).unwrap());
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn qnum_three_term_recurrence() {
    let q = QScalar::q_pow(1);
    let s = q.add(&q.inv().unwrap());
    for z in -20..=20 {
        assert_eq!(qnum(z + 1).add(&qnum(z - 1)), s.mul(&qnum(z)), "z = {z}");
    }
}

#[test]
fn canonical_form_examples() {
    assert_eq!(QScalar::zero().canonical_string(), "0 / 1");
    assert_eq!(QScalar::monomial(1, 2, 2).canonical_string(), "t^2*y^2 / 1");
    let r = QScalar::one().sub(&QScalar::y_pow(-1)).inv().unwrap();
    assert_eq!(r.canonical_string(), "y / y - 1");
    let half = QScalar::from_rational(&rat(1, 2));
    assert_eq!(half.canonical_string(), "1 / 2");
    assert_eq!(qnum(2).canonical_string(), "t^4 + t^-4 / 1");
}
