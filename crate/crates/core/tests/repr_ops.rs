use proptest::prelude::*;
use uqdyn::qscalar::{qnum, Base, QScalar};
use uqdyn::repr::{build_irrep, coproduct_generators, h_diagonal, Operator, RepSpace};

fn s(text: &str) -> QScalar {
    QScalar::parse(text).unwrap()
}

#[test]
fn irreps_of_low_dimension() {
    let g0 = build_irrep(0);
    assert!(g0.h.is_zero() && g0.e.is_zero() && g0.f.is_zero());

    let g1 = build_irrep(1);
    assert_eq!(g1.h, Operator::diag(&RepSpace::single(1), vec![QScalar::from_int(1), QScalar::from_int(-1)]).unwrap());
    assert!(g1.e.get(0, 1).is_one());
    assert!(g1.f.get(1, 0).is_one());

    let g2 = build_irrep(2);
    assert_eq!(g2.f.get(2, 1), &qnum(2));
    assert_eq!(g2.f.get(2, 1), &s("t^4 + t^-4"));
}

#[test]
fn coproduct_on_small_pairs() {
    let g = coproduct_generators(1, 1);
    let expected: Vec<QScalar> = [2, 0, 0, -2].iter().map(|&k| QScalar::from_int(k)).collect();
    assert_eq!(g.h, Operator::diag(&RepSpace::new(&[1, 1]), expected).unwrap());

    // A trivial first leg leaves a copy of the second leg's generators.
    for p in 0..=3 {
        let pair = coproduct_generators(0, p);
        let single = build_irrep(p);
        assert_eq!(pair.e.entries(), single.e.entries());
        assert_eq!(pair.f.entries(), single.f.entries());
        assert_eq!(pair.h.entries(), single.h.entries());
    }
}

#[test]
fn weight_functions() {
    let v1 = RepSpace::single(1);
    assert!(h_diagonal(&v1, &[0], |_| QScalar::one()).unwrap().is_identity());
    let b = h_diagonal(&v1, &[0], |w| QScalar::monomial(1, 2 * w[0] * w[0], 2 * w[0])).unwrap();
    assert_eq!(b.get(0, 0), &s("t^2*y^2"));
    assert_eq!(b.get(1, 1), &s("t^2*y^-2"));

    // (x;q)_μ on V_2 with x = y², q = t⁴.
    let v2 = RepSpace::single(2);
    let p = h_diagonal(&v2, &[0], |w| uqdyn::elements::pochh_x_scalar(w[0] as i64).unwrap()).unwrap();
    let x = QScalar::y_pow(2);
    let one = QScalar::one();
    let top = one.sub(&x).mul(&one.sub(&x.mul(&QScalar::q_pow(1))));
    let bottom = one.sub(&x.mul(&QScalar::q_pow(-1))).mul(&one.sub(&x.mul(&QScalar::q_pow(-2)))).inv().unwrap();
    assert_eq!(p.get(0, 0), &top);
    assert!(p.get(1, 1).is_one());
    assert_eq!(p.get(2, 2), &bottom);
}

#[test]
fn inversion_and_exponentials() {
    let space = RepSpace::new(&[1, 1]);
    let g1 = build_irrep(1);
    let ef = Operator::kron(&g1.e, &g1.f);
    let c = s("t^4 - t^-4");
    let id = Operator::identity(&space);
    let a = id.add(&ef.scale(&c)).unwrap();
    assert_eq!(a.invert().unwrap(), id.sub(&ef.scale(&c)).unwrap());
    assert_eq!(ef.scale(&c).qexp_nilpotent(Base::QInv).unwrap(), a);
    assert!(Operator::zero(&space).qexp_nilpotent(Base::Q).unwrap().is_identity());
    assert!(id.qexp_nilpotent(Base::Q).is_err());
    assert!(Operator::zero(&space).invert().is_err());

    let d = Operator::diag(&RepSpace::single(1), vec![s("y^2"), s("1 - t^4")]).unwrap();
    let di = Operator::diag(&RepSpace::single(1), vec![s("y^-2"), s("1 - t^4").inv().unwrap()]).unwrap();
    assert_eq!(d.invert().unwrap(), di);
}

#[test]
fn leg_permutations() {
    let g = coproduct_generators(1, 2);
    assert_eq!(g.h.permute_legs(&[0, 1]).unwrap(), g.h);
    let sym = coproduct_generators(2, 2);
    assert_eq!(sym.h.permute_legs(&[1, 0]).unwrap(), sym.h);
    let ef = Operator::kron(&build_irrep(1).e, &build_irrep(2).f);
    let swapped = ef.permute_legs(&[1, 0]).unwrap();
    assert_eq!(swapped.space().leg_dims(), vec![2, 1]);
    assert_eq!(swapped.permute_legs(&[1, 0]).unwrap(), ef);
}

#[test]
fn shifts() {
    let space = RepSpace::new(&[1, 1]);
    let b1 = uqdyn::elements::big_b().eval(&space, &[vec![0]]).unwrap();
    let shifted = b1.shift(&[1]).unwrap();
    // (x q^{μ₂})^{μ₁} q^{μ₁²/2}: y → y t^{2μ₂}.
    for idx in 0..4 {
        let (m1, m2) = (space.leg_weight(idx, 0), space.leg_weight(idx, 1));
        assert_eq!(shifted.get(idx, idx), &QScalar::monomial(1, 2 * m1 * m1 + 4 * m1 * m2, 2 * m1));
    }
    let constant = uqdyn::elements::u_elem().eval(&space, &[vec![0]]).unwrap();
    assert_eq!(constant.shift(&[1]).unwrap(), constant);
    let trivial = RepSpace::new(&[2, 0]);
    let b = uqdyn::elements::big_b().eval(&trivial, &[vec![0]]).unwrap();
    assert_eq!(b.shift(&[1]).unwrap(), b);
}

#[test]
fn dump_round_trip() {
    let op = uqdyn::elements::f_series().eval(&RepSpace::new(&[1, 2]), &[vec![0], vec![1]]).unwrap();
    let dump = op.dump();
    let json = serde_json::to_string(&dump).unwrap();
    let back: uqdyn::repr::OperatorDump = serde_json::from_str(&json).unwrap();
    assert_eq!(Operator::from_dump(&back).unwrap(), op);
}

fn small_scalar() -> impl Strategy<Value = QScalar> {
    (-3i64..=3, -4i32..=4, -2i32..=2).prop_map(|(c, a, b)| QScalar::monomial(c, a, b))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn unitriangular_inverse(entries in proptest::collection::vec(small_scalar(), 6)) {
        let space = RepSpace::single(3);
        let mut it = entries.into_iter();
        let mut op = Operator::identity(&space);
        for r in 0..4 {
            for c in r + 1..4 {
                op.set(r, c, it.next().unwrap());
            }
        }
        let inv = op.invert().unwrap();
        prop_assert!(op.mul(&inv).unwrap().is_identity());
        prop_assert!(inv.mul(&op).unwrap().is_identity());
    }

    #[test]
    fn swap_is_involution(p1 in 0u32..=2, p2 in 0u32..=2, c in small_scalar()) {
        let e = Operator::kron(&build_irrep(p1).e, &build_irrep(p2).f.scale(&c));
        prop_assert_eq!(e.permute_legs(&[1, 0]).unwrap().permute_legs(&[1, 0]).unwrap(), e);
    }

    #[test]
    fn weights_of_generators(p in 0u32..=5) {
        let g = build_irrep(p);
        prop_assert_eq!(g.h.commutator(&g.e).unwrap(), g.e.scale(&QScalar::from_int(2)));
        prop_assert_eq!(g.h.commutator(&g.f).unwrap(), g.f.scale(&QScalar::from_int(-2)));
    }
}
