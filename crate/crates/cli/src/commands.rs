//! One function per subcommand, each returning the text for stdout.

use anyhow::{bail, Result};
use superbraid::burau::{gap_qw, reverse_braid, BurauError};
use superbraid::tangle::{skein_triple, skein_triple_braid};
use superbraid::{
    ac_obstruction_braid, alexander, build_arc_graph, build_arc_graph_braid, closure_trace, evaluate, gap,
    recover_gap_via_trace, solve_numbering, zh_tangle, EvalOptions, LaurentPoly, SuperDim, TangleExpr, Vars, Verdict,
};
use superbraid::ac::Obstruction;

use crate::input::Input;
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    Direct,
    Trace,
}

pub struct InvariantArgs {
    pub d: SuperDim,
    pub semiwelded: bool,
    pub deframe: bool,
    pub route: Route,
}

fn prepare(t: TangleExpr, semiwelded: bool) -> Result<TangleExpr> {
    match (semiwelded, t.has_omega()) {
        (true, false) => Ok(zh_tangle(&t)),
        (true, true) => Ok(t),
        (false, true) => bail!("the input has ω generators; pass --semi-welded"),
        (false, false) => Ok(t),
    }
}

/// `Q`, `Q̃`, `f` or `f̃` of the input, rendered.
pub fn invariant(input: &Input, a: &InvariantArgs) -> Result<String> {
    let opts = EvalOptions::new(a.d).semiwelded(a.semiwelded).deframe(a.deframe);
    if a.route == Route::Trace {
        let Some(beta) = input.braid() else { bail!("--trace needs a braid word") };
        return Ok(closure_trace(beta, &opts)?.to_string());
    }
    let t = prepare(input.tangle()?, a.semiwelded)?;
    Ok(evaluate(&t, &opts)?.to_string().trim_end().to_string())
}

/// The deframed `f̃` of a closed input, by the trace formula for braids.
pub fn closed_value(input: &Input, d: SuperDim) -> Result<LaurentPoly> {
    let opts = EvalOptions::new(d).semiwelded(true).deframe(true);
    if let Some(beta) = input.braid() {
        return Ok(closure_trace(beta, &opts)?);
    }
    let t = prepare(input.tangle()?, true)?;
    match evaluate(&t, &opts)?.scalar() {
        Some(v) => Ok(v),
        None => bail!("the input is not a closed diagram"),
    }
}

pub fn writhe(input: &Input) -> Result<i64> {
    Ok(match input.braid() {
        Some(b) => b.writhe(),
        None => input.tangle()?.writhe(),
    })
}

fn need_braid(input: &Input) -> Result<&superbraid::BraidWord> {
    input.braid().ok_or_else(|| anyhow::anyhow!("this command needs a braid word"))
}

pub fn gap_cmd(input: &Input, qw: bool, verify: bool) -> Result<String> {
    let beta = need_braid(input)?;
    if verify {
        match recover_gap_via_trace(beta) {
            Ok(_) => eprintln!("verified: determinant and trace routes agree"),
            Err(BurauError::Mismatch { det, trace }) => {
                return Err(CliError::Inconsistent(format!("determinant route {det}, trace route {trace}")).into())
            }
            Err(e) => return Err(e.into()),
        }
    }
    Ok(if qw { gap_qw(&reverse_braid(beta))?.to_string() } else { gap(beta).to_string() })
}

pub fn alexander_cmd(input: &Input, check: bool) -> Result<String> {
    let beta = need_braid(input)?;
    if check {
        match solve_numbering(&build_arc_graph_braid(beta)) {
            Some(n) if n.conservative => {}
            Some(_) => eprintln!("warning: no conservative numbering on this diagram; the value may not be an invariant"),
            None => eprintln!("warning: this diagram is not Alexander numerable; the value may not be an invariant"),
        }
    }
    Ok(alexander(beta).to_string())
}

fn tuple(v: &[i64]) -> String {
    format!("({})", v.iter().map(i64::to_string).collect::<Vec<_>>().join(","))
}

pub fn ac_cmd(input: &Input, d: SuperDim) -> Result<String> {
    let graph = match input.braid() {
        Some(b) => build_arc_graph_braid(b),
        None => build_arc_graph(&input.tangle()?),
    };
    let mut out = String::from("numbering: ");
    out += &match solve_numbering(&graph) {
        Some(n) if n.conservative => {
            format!("conservative numbering, potential {}", tuple(n.potential.as_deref().unwrap_or_default()))
        }
        Some(_) => "numerable, not conservative on this diagram".to_string(),
        None => "not Alexander numerable on this diagram".to_string(),
    };
    if let Some(beta) = input.braid() {
        out += &format!("\nobstruction {d}: ");
        out += &match ac_obstruction_braid(beta, d)? {
            Verdict::Obstructed(why) => {
                let reason = match why {
                    Obstruction::Support { row, col } => format!("support differs at ({row}, {col})"),
                    Obstruction::NotWPower { row, col } => format!("entry ratio at ({row}, {col}) is not a power of w"),
                    Obstruction::Inconsistent => "no integer k solves the exponent equations".to_string(),
                };
                format!("obstructed: not almost classical ({reason})")
            }
            Verdict::Consistent(fam) => {
                let span: Vec<String> = fam.kernel.iter().map(|v| tuple(v)).collect();
                format!(
                    "consistent with conjugation for k = {} + span{{{}}} (this proves nothing)",
                    tuple(&fam.particular),
                    span.join(", ")
                )
            }
        };
    }
    Ok(out)
}

pub fn skein_cmd(input: &Input, site: usize, d: SuperDim) -> Result<String> {
    let opts = EvalOptions::new(d).semiwelded(true).deframe(true);
    let vals: Vec<LaurentPoly> = match input.braid() {
        Some(beta) => {
            let (p, m, z) = skein_triple_braid(beta, site)?;
            [p, m, z].iter().map(|b| closure_trace(b, &opts)).collect::<Result<_, _>>()?
        }
        None => {
            let (p, m, z) = skein_triple(&input.tangle()?, site)?;
            let mut out = Vec::new();
            for t in [p, m, z] {
                let v = evaluate(&zh_tangle(&t), &opts)?.scalar();
                out.push(v.ok_or_else(|| anyhow::anyhow!("the input is not a closed diagram"))?);
            }
            out
        }
    };
    let v = Vars::qw();
    let e = d.m as i32 - d.n as i32;
    let qp = LaurentPoly::var_pow(&v, "q", e)?;
    let qm = LaurentPoly::var_pow(&v, "q", -e)?;
    let qq = LaurentPoly::parse(&v, "q-q^-1")?;
    let residual = &(&(&qp * &vals[0]) - &(&qm * &vals[1])) - &(&qq * &vals[2]);
    let text = format!("T+\t{}\nT-\t{}\nT0\t{}\nresidual\t{residual}", vals[0], vals[1], vals[2]);
    if !residual.is_zero() {
        println!("{text}");
        return Err(CliError::Inconsistent("skein residual is not zero".into()).into());
    }
    Ok(text)
}
