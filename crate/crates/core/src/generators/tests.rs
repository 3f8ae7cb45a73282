use super::*;
use crate::ring::{quantum_int_in, PolyMatrix};
use crate::tangle::parse_tangle;

fn d(m: usize, n: usize) -> SuperDim {
    SuperDim::new(m, n).unwrap()
}

fn p(vars: &Vars, s: &str) -> LaurentPoly {
    LaurentPoly::parse(vars, s).unwrap()
}

fn eval(doc: &str, sd: SuperDim, vars: &Vars) -> Morphism {
    evaluate_dense(&parse_tangle(doc).unwrap(), sd, vars).unwrap()
}

fn small_dims() -> Vec<SuperDim> {
    let mut out = Vec::new();
    for m in 0..=4 {
        for n in 0..=4 - m {
            if m + n > 0 {
                out.push(d(m, n));
            }
        }
    }
    out
}

const SUITE: [(usize, usize); 4] = [(1, 1), (2, 0), (2, 1), (2, 2)];

#[test]
fn rmatrix_gl11_matches_display() {
    let v = Vars::q();
    let r = rmatrix(d(1, 1), Sign::Plus, &v).unwrap();
    let want = PolyMatrix::parse(&v, &[&["q", "0", "0", "0"], &["0", "q-q^-1", "1", "0"], &["0", "1", "0", "0"], &[
        "0", "0", "0", "-q^-1",
    ]])
    .unwrap();
    assert_eq!(r.to_matrix(), want);
}

#[test]
fn rmatrix_inverse_pair() {
    let v = Vars::q();
    for sd in small_dims() {
        let a = rmatrix(sd, Sign::Plus, &v).unwrap();
        let b = rmatrix(sd, Sign::Minus, &v).unwrap();
        assert!(a.compose(&b).unwrap().is_identity(), "{sd}");
        assert!(b.compose(&a).unwrap().is_identity(), "{sd}");
    }
}

#[test]
fn rmatrix_purely_even_has_no_signs() {
    let v = Vars::q();
    for sign in [Sign::Plus, Sign::Minus] {
        let r = rmatrix(d(2, 0), sign, &v).unwrap();
        let mut seen = 0;
        for c in 0..r.ncols() as u64 {
            for (_, e) in r.column(c) {
                if e.len() == 1 {
                    assert!(e.terms()[0].1.signum() > 0, "{e}");
                    seen += 1;
                }
            }
        }
        assert!(seen > 0);
    }
}

#[test]
fn tau_examples() {
    let v = Vars::q();
    let t = tau_q(d(1, 1), &v).unwrap();
    assert_eq!(t.entry(&BasisWord(vec![2, 1]), &BasisWord(vec![1, 2])), p(&v, "q^-1"));
    assert_eq!(t.entry(&BasisWord(vec![1, 2]), &BasisWord(vec![2, 1])), p(&v, "q"));
    assert_eq!(t.entry(&BasisWord(vec![2, 2]), &BasisWord(vec![2, 2])), p(&v, "-1"));
    for m in 1..=3 {
        let plain = tau_q(d(m, 0), &v).unwrap();
        for c in 0..plain.ncols() as u64 {
            let w = BasisWord::from_flat(c, 2, d(m, 0));
            let sw = BasisWord(vec![w.0[1], w.0[0]]);
            assert_eq!(plain.column(c), &[(sw.flat_index(d(m, 0)), LaurentPoly::one(&v))]);
        }
    }
    for sd in small_dims() {
        let t = tau_q(sd, &v).unwrap();
        assert!(t.compose(&t).unwrap().is_identity());
    }
}

#[test]
fn cup_examples() {
    let v = Vars::q();
    let r = cup(d(1, 1), Side::Right, &v).unwrap();
    assert_eq!(r.entry(&BasisWord(vec![1, 1]), &BasisWord(vec![])), p(&v, "1"));
    assert_eq!(r.entry(&BasisWord(vec![2, 2]), &BasisWord(vec![])), p(&v, "1"));
    assert_eq!(r.nnz(), 2);
    let l = cup(d(1, 1), Side::Left, &v).unwrap();
    assert_eq!(l.entry(&BasisWord(vec![1, 1]), &BasisWord(vec![])), p(&v, "q^-1"));
    assert_eq!(l.entry(&BasisWord(vec![2, 2]), &BasisWord(vec![])), p(&v, "-q^-1"));
    let l10 = cup(d(1, 0), Side::Left, &v).unwrap();
    assert_eq!(l10.entry(&BasisWord(vec![1, 1]), &BasisWord(vec![])), p(&v, "1"));
}

#[test]
fn cap_examples() {
    let v = Vars::q();
    let r = cap(d(1, 1), Side::Right, &v).unwrap();
    assert_eq!(r.entry(&BasisWord(vec![]), &BasisWord(vec![1, 1])), p(&v, "q"));
    assert_eq!(r.entry(&BasisWord(vec![]), &BasisWord(vec![2, 2])), p(&v, "-q"));
    let l = cap(d(1, 1), Side::Left, &v).unwrap();
    assert_eq!(l.entry(&BasisWord(vec![]), &BasisWord(vec![2, 2])), p(&v, "1"));
    assert_eq!(l.entry(&BasisWord(vec![]), &BasisWord(vec![1, 2])), p(&v, "0"));
}

#[test]
fn zig_zags_are_identities() {
    let v = Vars::q();
    for m in 0..=3 {
        for n in 0..=3 {
            if m + n == 0 {
                continue;
            }
            for doc in [
                "signs: u\ncupL 2\ncapR 1",
                "signs: u\ncupR 1\ncapL 2",
                "signs: d\ncupR 2\ncapL 1",
                "signs: d\ncupL 1\ncapR 2",
            ] {
                assert!(eval(doc, d(m, n), &v).is_identity(), "{m}|{n} {doc}");
            }
        }
    }
}

#[test]
fn mu_examples_and_unknot() {
    let v = Vars::q();
    let diag = |sd| mu(sd, &v).unwrap().diagonal().unwrap();
    assert_eq!(diag(d(1, 1)), vec![p(&v, "q"), p(&v, "-q")]);
    assert_eq!(diag(d(2, 0)), vec![p(&v, "q^-1"), p(&v, "q")]);
    for m in 0..=4 {
        for n in 0..=4 {
            if m + n == 0 {
                continue;
            }
            let sd = d(m, n);
            let direct: LaurentPoly = (1..=sd.dim() as u8).fold(LaurentPoly::zero(&v), |acc, k| &acc + &mu_entry(sd, k, &v));
            assert_eq!(mu(sd, &v).unwrap().trace(), direct);
            assert_eq!(direct, quantum_int_in(&v, m as i64 - n as i64), "{sd}");
            let unknot = eval("signs: \ncupR 1\ncapR 1", sd, &v);
            assert_eq!(unknot.scalar().unwrap(), direct);
        }
    }
}

#[test]
fn omega_examples() {
    let v = Vars::qw();
    let plus = omega_over(d(1, 1), Sign::Plus, Orient::Up, &v).unwrap();
    let minus = omega_over(d(1, 1), Sign::Minus, Orient::Up, &v).unwrap();
    assert_eq!(plus.diagonal().unwrap(), vec![p(&v, "1"), p(&v, "w")]);
    assert_eq!(minus.diagonal().unwrap(), vec![p(&v, "1"), p(&v, "w^-1")]);
    assert!(plus.compose(&minus).unwrap().is_identity());
    for orient in [Orient::Up, Orient::Down] {
        for sign in [Sign::Plus, Sign::Minus] {
            let o = omega_over(d(2, 2), sign, orient, &v).unwrap();
            let a = alpha_over(d(2, 2), sign, orient, &v).unwrap();
            assert!(o.compose(&a).unwrap().is_identity());
        }
    }
    assert!(omega_over(d(1, 1), Sign::Plus, Orient::Up, &Vars::q()).is_err());
}

#[test]
fn x_power_is_omega_power() {
    let v = Vars::qw();
    let x2 = x_power(d(1, 2), 2, &v).unwrap();
    assert_eq!(x2.diagonal().unwrap(), vec![p(&v, "1"), p(&v, "w^2"), p(&v, "w^2")]);
}

#[test]
fn rotate_up_up_is_primitive() {
    let t = rotate_crossing(GenKind::Virtual, Orient::Up, Orient::Up);
    assert!(matches!(t, TangleExpr::Gen(ref g) if g.dom == seq("uu")));
    for kind in [GenKind::Cross(Sign::Plus), GenKind::Cross(Sign::Minus), GenKind::Virtual] {
        for (a, b) in [(Orient::Down, Orient::Up), (Orient::Up, Orient::Down), (Orient::Down, Orient::Down)] {
            let t = rotate_crossing(kind, a, b);
            t.check().unwrap();
            assert_eq!(t.dom(), orient_seq(a, b));
            assert_eq!(t.cod(), orient_seq(b, a));
        }
    }
}

#[test]
fn yang_baxter() {
    let v = Vars::q();
    for sd in small_dims() {
        for (a, b) in [("xp", "xp"), ("xm", "xm"), ("v", "v")] {
            let lhs = eval(&format!("signs: uuu\n{a} 1\n{b} 2\n{a} 1"), sd, &v);
            let rhs = eval(&format!("signs: uuu\n{a} 2\n{b} 1\n{a} 2"), sd, &v);
            assert_eq!(lhs, rhs, "{sd} {a}");
        }
    }
}

#[test]
fn mixed_relation() {
    let v = Vars::q();
    for sd in small_dims() {
        for x in ["xp", "xm"] {
            let lhs = eval(&format!("signs: uuu\nv 1\nv 2\n{x} 1"), sd, &v);
            let rhs = eval(&format!("signs: uuu\n{x} 2\nv 1\nv 2"), sd, &v);
            assert_eq!(lhs, rhs, "{sd}");
        }
    }
}

#[test]
fn reidemeister_two_all_orientations() {
    let v = Vars::q();
    for (m, n) in SUITE {
        let sd = d(m, n);
        for signs in ["uu", "ud", "du", "dd"] {
            for (a, b) in [("xp", "xm"), ("xm", "xp"), ("v", "v")] {
                let m = eval(&format!("signs: {signs}\n{a} 1\n{b} 1"), sd, &v);
                assert!(m.is_identity(), "{sd} {signs} {a}{b}");
            }
        }
    }
}

/// A word of crossings in which the bottom-left strand always passes over,
/// labelled by writhe: the label flips when the two strands are antiparallel.
fn left_over_word(signs: &str, positions: &[usize]) -> String {
    let mut cur: Vec<char> = signs.chars().collect();
    let mut doc = format!("signs: {signs}\n");
    for &p in positions {
        let x = if cur[p - 1] == cur[p] { "xp" } else { "xm" };
        doc.push_str(&format!("{x} {p}\n"));
        cur.swap(p - 1, p);
    }
    doc
}

#[test]
fn yang_baxter_mixed_orientations() {
    let v = Vars::q();
    for sd in [d(1, 1), d(2, 1)] {
        for signs in ["duu", "udu", "uud", "ddu", "dud", "udd", "ddd"] {
            let lhs = eval(&left_over_word(signs, &[1, 2, 1]), sd, &v);
            let rhs = eval(&left_over_word(signs, &[2, 1, 2]), sd, &v);
            assert_eq!(lhs, rhs, "{sd} {signs}");
        }
    }
}

fn left_curl(x: &str) -> String {
    format!("signs: u\ncupL 1\n{x} 2\ncapL 1")
}

fn right_curl(x: &str) -> String {
    format!("signs: u\ncupR 2\n{x} 1\ncapR 2")
}

#[test]
fn virtual_curls() {
    let v = Vars::q();
    for (m, n) in [(1, 1), (2, 0), (2, 1), (2, 2), (1, 3), (3, 2)] {
        let sd = d(m, n);
        let left = eval(&left_curl("v"), sd, &v).diagonal().unwrap();
        let (mi, ni) = (m as i32, n as i32);
        for (i, e) in left.iter().enumerate() {
            let i = i as i32 + 1;
            let want = if i <= mi { mi - ni + 1 - 2 * i } else { -ni - 3 * mi - 1 + 2 * i };
            assert_eq!(*e, q(&v, want, 1), "{sd} i={i}");
        }
        let both = format!("signs: u\ncupL 1\nv 2\ncapL 1\ncupR 2\nv 1\ncapR 2");
        assert!(eval(&both, sd, &v).is_identity(), "{sd}");
    }
}

#[test]
fn classical_curls_are_scalars_and_framed_r1_holds() {
    let v = Vars::q();
    for (m, n) in SUITE {
        let sd = d(m, n);
        for x in ["xp", "xm"] {
            for doc in [left_curl(x), right_curl(x)] {
                assert!(eval(&doc, sd, &v).as_scalar_identity().is_some(), "{sd} {doc}");
            }
        }
        let lp = eval(&left_curl("xp"), sd, &v);
        let rm = eval(&right_curl("xm"), sd, &v);
        assert!(lp.compose(&rm).unwrap().is_identity(), "{sd}");
        let lm = eval(&left_curl("xm"), sd, &v);
        let rp = eval(&right_curl("xp"), sd, &v);
        assert!(lm.compose(&rp).unwrap().is_identity(), "{sd}");
    }
}

#[test]
fn semi_welded_moves() {
    let v = Vars::qw();
    for (m, n) in SUITE {
        let sd = d(m, n);
        // SW1: the ω arc passes over a virtual crossing
        let a = eval("signs: Uuu\nv 2\noxp 1\noxp 2", sd, &v);
        let b = eval("signs: Uuu\noxp 1\noxp 2\nv 1", sd, &v);
        assert_eq!(a, b, "{sd}");
        // SW2: ω slides over cups
        for (cup, downs) in [("cupR", "u d"), ("cupL", "d u")] {
            let a = eval(&format!("signs: U\n{cup} 2\noxp 1\noxp 2"), sd, &v);
            let b = eval(&format!("signs: U\n{cup} 1"), sd, &v);
            assert_eq!(a, b, "{sd} {cup} {downs}");
        }
        // SW3: ω slides over caps
        for (cap, signs) in [("capR", "udU"), ("capL", "duU")] {
            let a = eval(&format!("signs: {signs}\noxm 2\noxm 1\n{cap} 2"), sd, &v);
            let b = eval(&format!("signs: {signs}\n{cap} 1"), sd, &v);
            assert_eq!(a, b, "{sd} {cap}");
        }
    }
}

#[test]
fn omega_gens_trivial_at_w_one() {
    let v = Vars::qw();
    let sd = d(2, 1);
    for doc in ["signs: Uu\noxp 1", "signs: uU\nxom 1", "signs: d\noxm 1", "signs: UD\nxp 1", "signs: Ud\nv 1"] {
        let m = eval(doc, sd, &v);
        let at1 = m.map_entries(&v, |e| e.at_one("w")).unwrap();
        assert_eq!(at1.to_matrix(), PolyMatrix::identity(&v, at1.nrows()), "{doc}");
    }
}

#[test]
fn generators_preserve_parity() {
    let v = Vars::qw();
    for sd in small_dims() {
        let ms = [
            rmatrix(sd, Sign::Plus, &v).unwrap(),
            rmatrix(sd, Sign::Minus, &v).unwrap(),
            tau_q(sd, &v).unwrap(),
            cup(sd, Side::Left, &v).unwrap(),
            cup(sd, Side::Right, &v).unwrap(),
            cap(sd, Side::Left, &v).unwrap(),
            cap(sd, Side::Right, &v).unwrap(),
            omega_over(sd, Sign::Plus, Orient::Down, &v).unwrap(),
            mu(sd, &v).unwrap(),
        ];
        for m in &ms {
            assert!(m.is_parity_preserving(), "{sd}");
        }
    }
}
