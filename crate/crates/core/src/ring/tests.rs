use super::*;
use proptest::prelude::*;

fn qp(s: &str) -> LaurentPoly {
    LaurentPoly::parse(&Vars::q(), s).unwrap()
}

fn st(s: &str) -> LaurentPoly {
    LaurentPoly::parse(&Vars::st(), s).unwrap()
}

fn qw(s: &str) -> LaurentPoly {
    LaurentPoly::parse(&Vars::qw(), s).unwrap()
}

#[test]
fn add_examples() {
    assert!((qp("q") + qp("-q")).is_zero());
    assert_eq!(qp("q - q^-1") + qp("q^-1"), qp("q"));
    assert_eq!(st("1 - s*t") + st("s*t"), st("1"));
}

#[test]
fn mul_examples() {
    assert!((qp("q") * qp("q^-1")).is_one());
    assert_eq!(qp("q - q^-1") * qp("q + q^-1"), qp("q^2 - q^-2"));
    // [2]_q expanded by hand is q + q^-1
    assert_eq!(quantum_int(2) * qp("q - 1/q"), qp("q^2 - q^-2"));
}

#[test]
fn mismatched_vars_are_rejected() {
    let e = qp("q").checked_add(&st("s")).unwrap_err();
    assert!(matches!(e, RingError::VarMismatch(..)));
}

#[test]
fn quantum_int_examples() {
    assert!(quantum_int(0).is_zero());
    assert_eq!(quantum_int(2), qp("q + q^-1"));
    assert_eq!(quantum_int(-1), qp("-1"));
    assert_eq!(quantum_int(3), qp("q^2 + 1 + q^-2"));
    assert_eq!(quantum_int(-3), qp("-q^2 - 1 - q^-2"));
    for z in -6..=6 {
        let lhs = quantum_int(z) * qp("q - q^-1");
        let rhs = qp("q").pow(z as i32).unwrap() - qp("q").pow(-z as i32).unwrap();
        assert_eq!(lhs, rhs, "z = {z}");
    }
}

#[test]
fn substitute_examples() {
    let qwv = Vars::qw();
    let assign = [("s", qw("w^-1*q^-2")), ("t", qw("w"))];
    let p = st("1 - 1/s - 1/t");
    assert_eq!(p.substitute(&assign, &qwv).unwrap(), qw("1 - q^2*w - 1/w"));
    let t = LaurentPoly::parse(&Vars::t(), "t").unwrap();
    assert_eq!(t.substitute(&[("t", qp("q^-2"))], &Vars::q()).unwrap(), qp("q^-2"));
    let gap = st("-1/(s^2*t^2) + 1/(s^2*t) + 1/(s*t^2) - 1/s - 1/t + 1");
    assert_eq!(gap.substitute(&assign, &qwv).unwrap(), qw("-q^4 + q^4*w + q^2/w - q^2*w - 1/w + 1"));
}

#[test]
fn substitute_rejects_non_monomials() {
    let e = st("s").substitute(&[("s", qw("q + w")), ("t", qw("w"))], &Vars::qw()).unwrap_err();
    assert!(matches!(e, RingError::NonMonomial(_)));
}

#[test]
fn unit_examples() {
    let pat = UnitPattern::signed(&Vars::q(), &["q"]);
    assert_eq!(equal_up_to_unit(&qp("q^2 - 1"), &qp("1 - q^-2"), &pat), Some(qp("q^2")));
    let z = LaurentPoly::zero(&Vars::q());
    assert_eq!(equal_up_to_unit(&z, &z, &pat), Some(qp("1")));
    let tv = Vars::t();
    let a = LaurentPoly::parse(&tv, "1 - 2*t + 2*t^2").unwrap();
    let b = LaurentPoly::parse(&tv, "t^2*(2 - 2/t + 1/t^2)").unwrap();
    let tpat = UnitPattern::signed(&tv, &["t"]);
    assert_eq!(equal_up_to_unit(&a, &b, &tpat), Some(LaurentPoly::one(&tv)));
    // t^2(1 - 2/t + 2/t^2) is the image of a under t -> 1/t, not a unit multiple
    let mirrored = LaurentPoly::parse(&tv, "t^2*(1 - 2/t + 2/t^2)").unwrap();
    assert_eq!(equal_up_to_unit(&a, &mirrored, &tpat), None);
    assert_eq!(equal_up_to_unit(&qp("q"), &qp("-q"), &UnitPattern::positive(&Vars::q(), &["q"])), None);
    assert_eq!(equal_up_to_unit(&qp("q+1"), &qp("q+2"), &pat), None);
}

#[test]
fn normalize_unit_shifts_and_fixes_sign() {
    let g = st("-1/(s^2*t^2) + 1/(s^2*t) + 1/(s*t^2) - 1/s - 1/t + 1").normalize_unit();
    assert_eq!(g.trailing().unwrap().0, [0, 0, 0, 0]);
    assert_eq!(g.min_exps(), [0; 4]);
    assert!(g.terms()[0].1.signum() > 0);
}

#[test]
fn rendering_is_canonical() {
    assert_eq!(LaurentPoly::zero(&Vars::q()).to_string(), "0");
    assert_eq!(qw("q^4*w - q^4 - q^2*w + q^2/w - 1/w + 1").to_string(), "-w^-1+1+q^2*w^-1-q^2*w-q^4+q^4*w");
    assert_eq!(qp("3*q^-2 - 1").to_string(), "3*q^-2-1");
    let back = LaurentPoly::parse(&Vars::qw(), "-w^-1+1+q^2*w^-1-q^2*w-q^4+q^4*w").unwrap();
    assert_eq!(back, qw("q^4*w - q^4 - q^2*w + q^2/w - 1/w + 1"));
}

#[test]
fn big_coefficients_survive() {
    let p = qp("(q + 1)^80");
    let back = p.div_exact(&qp("(q+1)^79")).unwrap();
    assert_eq!(back, qp("q + 1"));
    let rendered = p.to_string();
    assert_eq!(LaurentPoly::parse(&Vars::q(), &rendered).unwrap(), p);
}

#[test]
fn inexact_division_is_reported() {
    assert_eq!(qp("q^2 + 1").div_exact(&qp("q + 1")), Err(RingError::InexactDivision));
    assert_eq!(qw("q + w").div_exact(&qw("q - w")), Err(RingError::InexactDivision));
}

#[test]
fn q_to_t_halving() {
    // 1 - 2/t + 2/t^2 under t = q^-2
    let (t, e) = q_to_t_half(&qp("1 - 2*q^2 + 2*q^4")).unwrap();
    assert_eq!(e, 0);
    assert_eq!(t, LaurentPoly::parse(&Vars::t(), "1 - 2/t + 2/t^2").unwrap());
    let (t, e) = q_to_t_half(&qp("q - 2*q^3")).unwrap();
    assert_eq!((t, e), (LaurentPoly::parse(&Vars::t(), "1 - 2/t").unwrap(), 1));
    assert_eq!(q_to_t_half(&qp("1 + q")), Err(RingError::MixedParity));
}

#[test]
fn determinant_examples() {
    let i3 = PolyMatrix::identity(&Vars::q(), 3);
    assert!(det_bareiss(&i3).unwrap().is_one());
    let sv = Vars::st();
    let m = PolyMatrix::parse(&sv, &[&["1 - s*t", "s"], &["t", "0"]]).unwrap();
    let m = m.checked_sub(&PolyMatrix::identity(&sv, 2)).unwrap();
    assert!(det_bareiss(&m).unwrap().is_zero());
    // generalized Burau image of the virtual trefoil, minus the identity
    let chi = PolyMatrix::parse(&sv, &[&["0", "1"], &["1", "0"]]).unwrap();
    let si = PolyMatrix::parse(&sv, &[&["0", "1/t"], &["1/s", "1 - 1/(s*t)"]]).unwrap();
    let rho = chi.checked_mul(&si).unwrap().checked_mul(&si).unwrap();
    let a = rho.checked_sub(&PolyMatrix::identity(&sv, 2)).unwrap();
    let expected = st("-1/(s^2*t^2) + 1/(s^2*t) + 1/(s*t^2) - 1/s - 1/t + 1");
    assert_eq!(det_bareiss(&a).unwrap(), expected);
    assert_eq!(det_cofactor(&a).unwrap(), expected);
    assert!(det_bareiss(&PolyMatrix::zeros(&sv, 0, 0)).unwrap().is_one());
}

#[test]
fn determinant_needs_pivoting() {
    let m = PolyMatrix::parse(&Vars::q(), &[&["0", "q", "1"], &["q", "0", "2"], &["1", "1", "q^-1"]]).unwrap();
    assert_eq!(det_bareiss(&m).unwrap(), det_cofactor(&m).unwrap());
}

fn small_poly(ring: Vars, max_terms: usize) -> impl Strategy<Value = LaurentPoly> {
    let n = ring.len();
    prop::collection::vec((prop::collection::vec(-3i32..=3, n), -4i64..=4), 0..=max_terms).prop_map(move |ts| {
        LaurentPoly::from_terms(
            &ring,
            ts.into_iter().map(|(e, c)| {
                let mut x = [0; MAX_VARS];
                x[..e.len()].copy_from_slice(&e);
                (x, Coeff::from(c))
            }),
        )
    })
}

fn small_matrix(n: usize) -> impl Strategy<Value = PolyMatrix> {
    prop::collection::vec(small_poly(Vars::qw(), 2), n * n).prop_map(move |es| {
        let rows = es.chunks(n).map(|c| c.to_vec()).collect();
        PolyMatrix::from_rows(&Vars::qw(), rows).unwrap()
    })
}

proptest! {
    #[test]
    fn ring_axioms(a in small_poly(Vars::qw(), 3), b in small_poly(Vars::qw(), 3), c in small_poly(Vars::qw(), 3)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
    }

    #[test]
    fn division_inverts_multiplication(a in small_poly(Vars::qw(), 4), b in small_poly(Vars::qw(), 3)) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
    }

    #[test]
    fn substitute_is_homomorphism(a in small_poly(Vars::st(), 3), b in small_poly(Vars::st(), 3)) {
        let tgt = Vars::qw();
        let assign = [("s", qw("w^-1*q^-2")), ("t", qw("-w"))];
        let lhs = (&a * &b).substitute(&assign, &tgt).unwrap();
        let rhs = a.substitute(&assign, &tgt).unwrap() * b.substitute(&assign, &tgt).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn unit_equality_symmetric(a in small_poly(Vars::qw(), 3), e in -3i32..=3, f in -3i32..=3, neg in any::<bool>()) {
        let pat = UnitPattern::any();
        let u = LaurentPoly::monomial(&Vars::qw(), [e, f, 0, 0], Coeff::from(if neg { -1 } else { 1 }));
        let b = &u * &a;
        prop_assert_eq!(equal_up_to_unit(&a, &a, &pat), Some(LaurentPoly::one(&Vars::qw())));
        let fwd = equal_up_to_unit(&b, &a, &pat).unwrap();
        let back = equal_up_to_unit(&a, &b, &pat).unwrap();
        prop_assert!((&fwd * &back).is_one());
        if !a.is_zero() {
            prop_assert_eq!(fwd, u);
        }
    }

    #[test]
    fn bareiss_matches_cofactor_2(m in small_matrix(2)) {
        prop_assert_eq!(det_bareiss(&m).unwrap(), det_cofactor(&m).unwrap());
    }

    #[test]
    fn bareiss_matches_cofactor_3(m in small_matrix(3)) {
        prop_assert_eq!(det_bareiss(&m).unwrap(), det_cofactor(&m).unwrap());
    }

    #[test]
    fn bareiss_matches_cofactor_4(m in small_matrix(4)) {
        prop_assert_eq!(det_bareiss(&m).unwrap(), det_cofactor(&m).unwrap());
    }

    #[test]
    fn render_parse_round_trip(a in small_poly(Vars::qw(), 5)) {
        prop_assert_eq!(LaurentPoly::parse(&Vars::qw(), &a.to_string()).unwrap(), a);
    }
}
