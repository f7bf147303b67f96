use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use skein::census::{load_census, run_search};
use skein::checks::{verify_all, Inputs};
use skein_core::diagrams::{braid_jones, component_count, partial_closure, BraidWord};
use skein_core::genus1::generators;
use skein_core::ideal::{laurent_trivial, TrivialityCertificate};
use skein_core::tangleops::{
    ball_ideal, partial_closure_ideal, partial_closure_ideals_agree, partial_closure_is_connected,
    BallTangle,
};
use skein_core::tl::{bracket_reduced, eval_word, MorphismWord};
use skein_core::LaurentPoly;

/// Kauffman bracket ideals of tangles in a ball and in a solid torus.
///
/// Every command prints one JSON object `{command, inputs, outputs, verdict}`.
/// Exit status is 0 on success, 1 on bad input and 2 when verification fails.
#[derive(Parser)]
#[command(name = "skein", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Bracket of a closed diagram given as a slice file.
    Bracket { word_file: PathBuf },
    /// Jones polynomial of a braid closure, e.g. `3: 1,-2,1,-2`.
    Jones { braid: String },
    /// Generators and Groebner basis of the ideal of a braid's partial closure.
    #[command(name = "genus1-ideal")]
    Genus1Ideal { braid: String },
    /// Ideal of a ball tangle: a braid word or a slice file with `STRANDS n`.
    #[command(name = "ball-ideal")]
    BallIdeal { tangle: String },
    /// Eleven-closure screen over a census file.
    Search {
        census: PathBuf,
        /// Only entries with this many strands.
        #[arg(long)]
        strands: Option<usize>,
    },
    /// Runs the acceptance criteria on the bundled data.
    #[command(name = "verify-paper")]
    VerifyPaper,
}

type Run = Result<(Value, Value, String, bool), String>;

fn strs<T: ToString>(v: &[T]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn certificate(cert: &TrivialityCertificate) -> (Value, String) {
    let gb: Vec<String> = cert
        .gb()
        .basis()
        .iter()
        .map(|g| g.display_with("A", "u").to_string())
        .collect();
    let verdict = if cert.is_trivial() {
        "trivial"
    } else {
        "nontrivial"
    };
    (
        json!({ "groebner_basis": gb, "witness": cert.witness() }),
        verdict.into(),
    )
}

fn parse_braid(s: &str) -> Result<BraidWord, String> {
    s.parse().map_err(|e: skein_core::Error| e.to_string())
}

fn bracket(path: &PathBuf) -> Run {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let w: MorphismWord = text.parse().map_err(|e: skein_core::Error| e.to_string())?;
    let b = eval_word(&w).map_err(|e| e.to_string())?;
    let r = bracket_reduced(&w).ok().map(|p| p.to_string());
    let out = json!({ "bracket": b.to_string(), "reduced": r, "crossings": w.crossing_count() });
    Ok((json!({ "word_file": path }), out, "ok".into(), true))
}

fn jones(s: &str) -> Run {
    let b = parse_braid(s)?;
    let j = braid_jones(&b).map_err(|e| e.to_string())?;
    let t = jones_in_t(&j);
    let out = json!({ "jones_a": j.to_string(), "jones_t": t, "writhe": b.writhe() });
    Ok((json!({ "braid": b.to_string() }), out, "ok".into(), true))
}

/// Reads a polynomial in `A` as one in `t = A^-4` when every power allows it.
fn jones_in_t(j: &LaurentPoly) -> Option<String> {
    let terms = j.terms();
    if terms.iter().any(|(e, _)| e % 4 != 0) {
        return None;
    }
    Some(
        LaurentPoly::from_terms(terms.iter().map(|(e, c)| (-e / 4, c.clone())))
            .to_string()
            .replace('A', "t"),
    )
}

fn genus1_ideal(s: &str) -> Run {
    let b = parse_braid(s)?;
    let g = partial_closure(&b).map_err(|e| e.to_string())?;
    let gens = generators(&g).map_err(|e| e.to_string())?;
    let cert = laurent_trivial(&gens.nonzero()).map_err(|e| e.to_string())?;
    let (ideal, verdict) = certificate(&cert);
    let out = json!({
        "components": component_count(&g),
        "gen_x": strs(&gens.gen_x),
        "gen_y": strs(&gens.gen_y),
        "ideal": ideal,
    });
    Ok((json!({ "braid": b.to_string() }), out, verdict, true))
}

fn ball_tangle(s: &str) -> Result<BallTangle, String> {
    if let Ok(b) = s.parse::<BraidWord>() {
        return Ok(BallTangle::from_braid(&b));
    }
    let text = std::fs::read_to_string(s)
        .map_err(|e| format!("{s}: not a braid word or readable file ({e})"))?;
    let w: MorphismWord = text.parse().map_err(|e: skein_core::Error| e.to_string())?;
    BallTangle::new(w).map_err(|e| e.to_string())
}

fn ball_ideal_cmd(s: &str) -> Run {
    let t = ball_tangle(s)?;
    let closures = ball_ideal(&t).map_err(|e| e.to_string())?;
    let cert = laurent_trivial(&closures).map_err(|e| e.to_string())?;
    let (ideal, verdict) = certificate(&cert);
    let mut out =
        json!({ "endpoints": t.endpoints(), "catalan_closures": strs(&closures), "ideal": ideal });
    if t.endpoints() == 4 {
        out["partial_closure_ideal"] =
            json!(strs(&partial_closure_ideal(&t).map_err(|e| e.to_string())?));
        let connected = partial_closure_is_connected(&t).map_err(|e| e.to_string())?;
        out["partial_closure_connected"] = json!(connected);
        if connected {
            out["ideals_agree"] =
                json!(partial_closure_ideals_agree(&t).map_err(|e| e.to_string())?);
        }
    }
    Ok((json!({ "tangle": s }), out, verdict, true))
}

fn search_cmd(path: &PathBuf, strands: Option<usize>) -> Run {
    let mut entries = load_census(path).map_err(|e| e.to_string())?;
    if let Some(k) = strands {
        entries.retain(|e| e.strands() == k);
    }
    let reports: Vec<Value> = run_search(&entries)
        .into_iter()
        .map(|(name, r)| match r {
            Ok(r) => json!({
                "name": name,
                "verdict": if r.nontrivial { "nontrivial" } else { "trivial" },
                "witness": r.witness,
                "groebner_basis": r.gb.basis().iter().map(|g| g.display_with("q", "u").to_string()).collect::<Vec<_>>(),
                "polys": r.polys.iter().map(|p| p.to_string().replace('A', "q")).collect::<Vec<_>>(),
            }),
            Err(e) => json!({ "name": name, "verdict": "error", "error": e.to_string() }),
        })
        .collect();
    let flagged: Vec<&Value> = reports
        .iter()
        .filter(|r| r["verdict"] == "nontrivial")
        .map(|r| &r["name"])
        .collect();
    let verdict = if flagged.is_empty() {
        "all trivial".to_string()
    } else {
        format!("{} nontrivial", flagged.len())
    };
    let out = json!({ "entries": reports.len(), "nontrivial": flagged, "reports": reports });
    Ok((
        json!({ "census": path, "strands": strands }),
        out,
        verdict,
        true,
    ))
}

fn verify() -> Run {
    let outcomes = verify_all(&Inputs::bundled());
    let ok = outcomes.iter().all(|o| o.passed);
    let list: Vec<Value> = outcomes
        .iter()
        .map(|o| json!({ "id": o.id, "name": o.name, "passed": o.passed, "detail": o.detail, "seconds": o.seconds }))
        .collect();
    Ok((
        json!({}),
        json!({ "criteria": list }),
        if ok { "pass" } else { "fail" }.into(),
        ok,
    ))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (name, run) = match &cli.command {
        Command::Bracket { word_file } => ("bracket", bracket(word_file)),
        Command::Jones { braid } => ("jones", jones(braid)),
        Command::Genus1Ideal { braid } => ("genus1-ideal", genus1_ideal(braid)),
        Command::BallIdeal { tangle } => ("ball-ideal", ball_ideal_cmd(tangle)),
        Command::Search { census, strands } => ("search", search_cmd(census, *strands)),
        Command::VerifyPaper => ("verify-paper", verify()),
    };
    let (doc, code) = match run {
        Ok((inputs, outputs, verdict, ok)) => (
            json!({ "command": name, "inputs": inputs, "outputs": outputs, "verdict": verdict }),
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            },
        ),
        Err(e) => (
            json!({ "command": name, "inputs": {}, "outputs": { "error": e }, "verdict": "error" }),
            ExitCode::FAILURE,
        ),
    };
    println!(
        "{}",
        serde_json::to_string_pretty(&doc).expect("serializable")
    );
    code
}
