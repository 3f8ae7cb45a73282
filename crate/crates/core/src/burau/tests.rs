use super::*;
use crate::engine::evaluate;
use crate::generators::tau_q;
use crate::ring::Vars;
use crate::schema::{exterior_word_codec_reversed, BasisWord};
use crate::tangle::parse_braid;
use crate::testutil::{d, random_braid, random_classical, rng};
use crate::zh::{gen_rep, rep};

fn b(s: &str) -> BraidWord {
    parse_braid(s).unwrap()
}

fn p(v: &Vars, s: &str) -> LaurentPoly {
    LaurentPoly::parse(v, s).unwrap()
}

fn trefoil() -> BraidWord {
    b("N=2 v1 S1 S1")
}

#[test]
fn generator_blocks() {
    let t = Vars::t();
    assert_eq!(burau(&b("N=2 s1"), BurauForm::Classical), PolyMatrix::parse(&t, &[&["1-t", "t"], &["1", "0"]]).unwrap());
    assert_eq!(burau(&b("N=2 v1"), BurauForm::Classical), PolyMatrix::parse(&t, &[&["0", "1"], &["1", "0"]]).unwrap());
    assert_eq!(burau(&b("N=2 s1 S1"), BurauForm::Classical), PolyMatrix::identity(&t, 2));
    let st = Vars::st();
    assert_eq!(
        gen_burau(&b("N=2 s1"), GenBurauForm::Classical),
        PolyMatrix::parse(&st, &[&["1-s*t", "s"], &["t", "0"]]).unwrap()
    );
    let qw = Vars::qw();
    assert_eq!(
        gen_burau(&b("N=2 s1"), GenBurauForm::Qw),
        PolyMatrix::parse(&qw, &[&["1-q^-2", "1/(w*q)"], &["w/q", "0"]]).unwrap()
    );
}

#[test]
fn inverse_blocks_invert() {
    for w in ["N=2 s1 S1", "N=2 S1 s1", "N=2 v1 v1"] {
        assert_eq!(burau(&b(w), BurauForm::Classical), PolyMatrix::identity(&Vars::t(), 2));
        assert_eq!(burau(&b(w), BurauForm::Q), PolyMatrix::identity(&Vars::q(), 2));
        assert_eq!(gen_burau(&b(w), GenBurauForm::Classical), PolyMatrix::identity(&Vars::st(), 2));
        assert_eq!(gen_burau(&b(w), GenBurauForm::Qw), PolyMatrix::identity(&Vars::qw(), 2));
    }
}

#[test]
fn virtual_braid_relations() {
    let rels = [
        ("N=3 s1 s2 s1", "N=3 s2 s1 s2"),
        ("N=3 S1 S2 S1", "N=3 S2 S1 S2"),
        ("N=3 v1 v2 v1", "N=3 v2 v1 v2"),
        ("N=3 s1 v2 v1", "N=3 v2 v1 s2"),
        ("N=3 S1 v2 v1", "N=3 v2 v1 S2"),
        ("N=4 s1 s3", "N=4 s3 s1"),
        ("N=4 s1 v3", "N=4 v3 s1"),
        ("N=4 v1 S3", "N=4 S3 v1"),
    ];
    for (l, r) in rels {
        assert_eq!(burau(&b(l), BurauForm::Classical), burau(&b(r), BurauForm::Classical), "{l}");
        assert_eq!(burau(&b(l), BurauForm::Q), burau(&b(r), BurauForm::Q), "{l}");
        assert_eq!(gen_burau(&b(l), GenBurauForm::Classical), gen_burau(&b(r), GenBurauForm::Classical), "{l}");
        assert_eq!(gen_burau(&b(l), GenBurauForm::Qw), gen_burau(&b(r), GenBurauForm::Qw), "{l}");
    }
}

#[test]
fn qw_form_at_w_one_is_q_form() {
    let mut r = rng(11);
    for _ in 0..20 {
        let beta = random_braid(&mut r, 3, 6);
        let g = gen_burau(&beta, GenBurauForm::Qw);
        let at1 = g.map(&Vars::q(), |e| e.at_one("w").and_then(|x| x.with_vars(&Vars::q()))).unwrap();
        assert_eq!(at1, burau(&beta, BurauForm::Q));
    }
}

#[test]
fn gap_of_virtual_trefoil() {
    let st = Vars::st();
    let want = p(&st, "-1/(s^2*t^2)+1/(s^2*t)+1/(s*t^2)-1/s-1/t+1");
    assert_eq!(gap_raw(&trefoil()), want);
    assert_eq!(gap(&trefoil()), want.normalize_unit());
}

#[test]
fn gap_vanishes_on_classical_words() {
    let mut r = rng(12);
    for n in 2..=4 {
        for _ in 0..10 {
            assert!(gap(&random_classical(&mut r, n, 6)).is_zero());
        }
    }
    assert!(gap(&b("N=3")).is_zero());
}

#[test]
fn gap_conjugation_invariance() {
    let mut r = rng(13);
    for _ in 0..15 {
        let beta = random_braid(&mut r, 3, 5);
        let gamma = random_braid(&mut r, 3, 3);
        let conj = gamma.concat(&beta).concat(&gamma.inverse());
        assert_eq!(gap(&conj), gap(&beta), "{beta} by {gamma}");
    }
}

#[test]
fn alexander_examples() {
    let t = Vars::t();
    assert_eq!(alexander(&b("N=1")), LaurentPoly::one(&t));
    assert_eq!(alexander(&b("N=2 s1 s1 s1")), p(&t, "1-t+t^2"));
    assert_eq!(alexander(&b("N=3 v1 S1 v1 S2 v1 S1 v1 S2")), p(&t, "1-2*t+2*t^2"));
}

#[test]
fn alexander_is_a_conjugacy_invariant_on_classical_words() {
    let mut r = rng(14);
    for _ in 0..10 {
        let beta = random_classical(&mut r, 3, 5);
        let gamma = random_classical(&mut r, 3, 3);
        let conj = gamma.concat(&beta).concat(&gamma.inverse());
        assert_eq!(alexander(&conj), alexander(&beta));
    }
}

#[test]
fn exterior_of_chi_is_tau() {
    let m = burau(&b("N=2 v1"), BurauForm::Q);
    assert_eq!(exterior_all(&m).unwrap(), tau_q(d(1, 1), &Vars::q()).unwrap());
}

#[test]
fn exterior_of_identity() {
    for n in 1..=4 {
        let e = exterior_all(&PolyMatrix::identity(&Vars::t(), n)).unwrap();
        assert!(e.is_identity());
    }
}

#[test]
fn exterior_supertrace_is_det_of_one_minus() {
    use rand::Rng;
    let t = Vars::t();
    let mut r = rng(15);
    let pool = ["0", "1", "-1", "t", "1-t", "2/t", "t^2-3"];
    for _ in 0..10 {
        let rows: Vec<Vec<LaurentPoly>> =
            (0..3).map(|_| (0..3).map(|_| p(&t, pool[r.gen_range(0..pool.len())])).collect()).collect();
        let m = PolyMatrix::from_rows(&t, rows).unwrap();
        let e = exterior_all(&m).unwrap();
        let sd = d(1, 1);
        let mut str_ = LaurentPoly::zero(&t);
        for c in 0..e.ncols() as u64 {
            let odd = BasisWord::from_flat(c, 3, sd).0.iter().filter(|&&x| x == 2).count();
            let diag = e.entry_flat(c, c);
            str_.add_assign_ref(&if odd % 2 == 0 { diag } else { diag.neg() });
        }
        let id = PolyMatrix::identity(&t, 3);
        assert_eq!(str_, det_bareiss(&id.checked_sub(&m).unwrap()).unwrap());
    }
}

fn q_pow(v: &Vars, e: i64) -> LaurentPoly {
    LaurentPoly::var_pow(v, "q", e as i32).unwrap()
}

#[test]
fn quantum_functor_is_exterior_burau() {
    let q = Vars::q();
    let mut r = rng(16);
    for n in 2..=4 {
        for _ in 0..8 {
            let beta = random_braid(&mut r, n, 5);
            let lhs = rep(&beta, d(1, 1)).unwrap();
            let ext = exterior_all_with(&burau(&reverse_braid(&beta), BurauForm::Q), exterior_word_codec_reversed).unwrap();
            assert_eq!(lhs, ext.scale(&q_pow(&q, beta.writhe())), "{beta}");
        }
    }
}

#[test]
fn semiwelded_functor_is_exterior_gen_burau() {
    let qw = Vars::qw();
    let mut r = rng(17);
    for n in 2..=4 {
        for _ in 0..8 {
            let beta = random_braid(&mut r, n, 5);
            let lhs = gen_rep(&beta, d(1, 1)).unwrap();
            let m = gen_burau(&reverse_braid(&beta), GenBurauForm::Qw);
            let ext = exterior_all_with(&m, exterior_word_codec_reversed).unwrap();
            assert_eq!(lhs, ext.scale(&q_pow(&qw, beta.writhe())), "{beta}");
        }
    }
}

#[test]
fn standard_codec_suffices_on_two_strands() {
    let mut r = rng(18);
    for _ in 0..8 {
        let beta = random_braid(&mut r, 2, 5);
        let ext = exterior_all(&burau(&beta, BurauForm::Q)).unwrap();
        assert_eq!(rep(&beta, d(1, 1)).unwrap(), ext.scale(&q_pow(&Vars::q(), beta.writhe())));
    }
}

#[test]
fn standard_codec_fails_on_three_strands() {
    let beta = b("N=3 s1");
    let ext = exterior_all(&burau(&beta, BurauForm::Q)).unwrap();
    assert_ne!(rep(&beta, d(1, 1)).unwrap(), ext.scale(&q_pow(&Vars::q(), 1)));
}

#[test]
fn gap_recovered_from_trace() {
    let qw = Vars::qw();
    let want = p(&qw, "-q^4+q^4*w+q^2/w-q^2*w-1/w+1");
    assert_eq!(recover_gap_via_trace(&trefoil()).unwrap(), want);
    assert!(recover_gap_via_trace(&b("N=2")).unwrap().is_zero());
    let mut r = rng(19);
    for _ in 0..15 {
        let beta = random_braid(&mut r, 3, 6);
        if let Err(e) = recover_gap_via_trace(&beta) {
            panic!("{beta}: {e}");
        }
    }
}

#[test]
fn trace_route_matches_direct_closure() {
    let opts = EvalOptions::new(d(1, 1)).semiwelded(true);
    let direct = evaluate(&crate::zh::zh_tangle(&crate::tangle::closure(&trefoil())), &opts).unwrap().scalar().unwrap();
    assert_eq!(direct, recover_gap_via_trace(&trefoil()).unwrap());
}
