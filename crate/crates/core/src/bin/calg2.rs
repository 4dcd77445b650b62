//! Command-line surface: JSON in, JSON out, deterministic verification.
//!
//! Exit codes: 0 success, 1 failed check, 2 invalid input, 3 unsupported case.

use std::fs;
use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use calg2::algebra::{det_form, Algebra};
use calg2::arith::parse_rat;
use calg2::classify::{
    automorphism_group, classify_gl, classify_sl, equivalent_gl, equivalent_sl, is_associative,
    is_division, Equivalence, SLEquivalence,
};
use calg2::construct::{
    from_cubic_exceptional, from_eisenstein, from_moduli_cardano, from_moduli_generic,
    from_triple_data, EisensteinPoint, TripleData,
};
use calg2::gauss::{compose_algebra_classes, form_class, slxsl_equivalent};
use calg2::invariants::{bundle, check_discd_identity, check_eisenstein};
use calg2::verify::{run as run_verify, VerifyConfig};
use calg2::Error;

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(name = "calg2", about = "Exact invariants and classification of 2-dimensional commutative algebras over Q")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the invariant bundle of an algebra and check the identities.
    Invariants {
        /// Algebra JSON file, or `-` for stdin.
        input: String,
    },
    /// Classify an algebra up to basis change.
    Classify {
        input: String,
        /// Also compute the SL-classification (generic algebras only).
        #[arg(long)]
        sl: bool,
    },
    /// Build an algebra realizing prescribed data.
    Construct {
        mode: ConstructMode,
        /// Parameter JSON file, or `-` for stdin.
        params: String,
    },
    /// Test equivalence of two algebras.
    Equiv {
        a: String,
        b: String,
        /// Compare SL-classes instead of GL-classes.
        #[arg(long, conflicts_with = "slxsl")]
        sl: bool,
        /// Compare SL×SL-classes through the determinant form.
        #[arg(long)]
        slxsl: bool,
    },
    /// Gauss-compose the SL×SL classes of two algebras.
    Compose { a: String, b: String },
    /// Run the deterministic verification suites.
    Verify {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 10_000)]
        count: usize,
        #[arg(long, default_value_t = 20)]
        coeff_bound: i64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ConstructMode {
    /// {"p3": "...", "p2": "..."} off the Cardano curve.
    Moduli,
    /// {"p3": "...", "p2": "...", "ext": "..."} on the Cardano curve.
    Cardano,
    /// {"d2": "...", "d3": "..."} — exceptional algebra of x³ + d₂x − d₃.
    Cubic,
    /// {"A": ..., "B": ..., "D": ..., "C": ...} on the Eisenstein surface.
    Eisenstein,
    /// {"kind": "rational"|"pair", ...} prescribed reduced idemvalues.
    Triple,
}

fn read_input(path: &str) -> Result<String, Error> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::Input(format!("reading stdin: {e}")))?;
        Ok(buf)
    } else {
        fs::read_to_string(path).map_err(|e| Error::Input(format!("reading {path}: {e}")))
    }
}

fn parse_json<T: serde::de::DeserializeOwned>(text: &str) -> Result<T, Error> {
    serde_json::from_str(text).map_err(|e| Error::Input(format!("invalid JSON: {e}")))
}

fn read_algebra(path: &str) -> Result<Algebra, Error> {
    parse_json(&read_input(path)?)
}

fn emit<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable report"));
}

fn exit_code_for(e: &Error) -> ExitCode {
    match e {
        Error::Input(_) | Error::Domain(_) => ExitCode::from(2),
        Error::Unsupported(_) => ExitCode::from(3),
        Error::Internal(_) => ExitCode::from(1),
    }
}

fn cmd_invariants(input: &str) -> Result<ExitCode, Error> {
    let m = read_algebra(input)?;
    let b = bundle(&m);
    let checks = vec![
        json!({"name": "eisenstein_identity", "pass": check_eisenstein(&m)}),
        json!({"name": "disc_d_identity", "pass": check_discd_identity(&m)}),
    ];
    let ok = checks.iter().all(|c| c["pass"] == json!(true));
    emit(&json!({
        "schema_version": SCHEMA_VERSION,
        "input": m,
        "bundle": b,
        "checks": checks,
    }));
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_classify(input: &str, sl: bool) -> Result<ExitCode, Error> {
    let m = read_algebra(input)?;
    let descriptor = classify_gl(&m)?;
    let mut report = json!({
        "schema_version": SCHEMA_VERSION,
        "input": m,
        "class": descriptor,
        "associative": is_associative(&m),
    });
    if let Ok(d) = is_division(&m) {
        report["division"] = json!(d);
    }
    if let Ok(aut) = automorphism_group(&m) {
        report["automorphisms"] = serde_json::to_value(aut).unwrap();
    }
    if sl {
        report["sl_class"] = serde_json::to_value(classify_sl(&m)?).unwrap();
    }
    emit(&report);
    Ok(ExitCode::SUCCESS)
}

fn cmd_construct(mode: ConstructMode, params: &str) -> Result<ExitCode, Error> {
    let text = read_input(params)?;
    let m = match mode {
        ConstructMode::Moduli => {
            let v: serde_json::Value = parse_json(&text)?;
            let p3 = parse_rat(v["p3"].as_str().ok_or_else(|| Error::Input("missing p3".into()))?)?;
            let p2 = parse_rat(v["p2"].as_str().ok_or_else(|| Error::Input("missing p2".into()))?)?;
            from_moduli_generic(&p3, &p2)?
        }
        ConstructMode::Cardano => {
            let v: serde_json::Value = parse_json(&text)?;
            let p3 = parse_rat(v["p3"].as_str().ok_or_else(|| Error::Input("missing p3".into()))?)?;
            let p2 = parse_rat(v["p2"].as_str().ok_or_else(|| Error::Input("missing p2".into()))?)?;
            let ext = parse_rat(v["ext"].as_str().ok_or_else(|| Error::Input("missing ext".into()))?)?;
            from_moduli_cardano(&p3, &p2, &ext)?
        }
        ConstructMode::Cubic => {
            let v: serde_json::Value = parse_json(&text)?;
            let d2 = parse_rat(v["d2"].as_str().ok_or_else(|| Error::Input("missing d2".into()))?)?;
            let d3 = parse_rat(v["d3"].as_str().ok_or_else(|| Error::Input("missing d3".into()))?)?;
            from_cubic_exceptional(&d2, &d3)?
        }
        ConstructMode::Eisenstein => {
            let pt: EisensteinPoint = parse_json(&text)?;
            let pt = EisensteinPoint::new(pt.a, pt.b, pt.d, pt.c)?;
            from_eisenstein(&pt)?
        }
        ConstructMode::Triple => {
            let data: TripleData = parse_json(&text)?;
            from_triple_data(&data)?
        }
    };
    // every constructed algebra must pass the identity checks before emission
    if !check_eisenstein(&m) || !check_discd_identity(&m) {
        return Err(Error::Internal("constructed algebra fails the identity checks".into()));
    }
    emit(&json!({
        "schema_version": SCHEMA_VERSION,
        "algebra": m,
        "bundle": bundle(&m),
    }));
    Ok(ExitCode::SUCCESS)
}

fn cmd_equiv(a: &str, b: &str, sl: bool, slxsl: bool) -> Result<ExitCode, Error> {
    let ma = read_algebra(a)?;
    let mb = read_algebra(b)?;
    let (result, heuristic) = if slxsl {
        let eq = slxsl_equivalent(&ma, &mb)?;
        (if eq { "yes" } else { "no" }, false)
    } else if sl {
        match equivalent_sl(&ma, &mb)? {
            SLEquivalence::Yes => ("yes", false),
            SLEquivalence::No => ("no", false),
            SLEquivalence::YesUpToZ2 => ("yes-up-to-z2", true),
        }
    } else {
        match equivalent_gl(&ma, &mb)? {
            Equivalence::Yes => ("yes", false),
            Equivalence::No => ("no", false),
            Equivalence::HeuristicYes => ("heuristic-yes", true),
        }
    };
    emit(&json!({
        "schema_version": SCHEMA_VERSION,
        "result": result,
        "heuristic": heuristic,
    }));
    Ok(ExitCode::SUCCESS)
}

fn cmd_compose(a: &str, b: &str) -> Result<ExitCode, Error> {
    let ma = read_algebra(a)?;
    let mb = read_algebra(b)?;
    let m = compose_algebra_classes(&ma, &mb)?;
    let q = det_form(&m);
    let class = form_class(&q)?;
    emit(&json!({
        "schema_version": SCHEMA_VERSION,
        "algebra": m,
        "det_form": q,
        "class": class,
    }));
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(seed: u64, count: usize, coeff_bound: i64) -> Result<ExitCode, Error> {
    let cfg = VerifyConfig { seed, count, coeff_bound };
    let summary = run_verify(&cfg)?;
    emit(&json!({
        "schema_version": SCHEMA_VERSION,
        "seed": seed,
        "count": count,
        "coeff_bound": coeff_bound,
        "checks_run": summary.checks_run,
        "failures": summary.failures,
    }));
    Ok(if summary.ok() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Invariants { input } => cmd_invariants(&input),
        Command::Classify { input, sl } => cmd_classify(&input, sl),
        Command::Construct { mode, params } => cmd_construct(mode, &params),
        Command::Equiv { a, b, sl, slxsl } => cmd_equiv(&a, &b, sl, slxsl),
        Command::Compose { a, b } => cmd_compose(&a, &b),
        Command::Verify { seed, count, coeff_bound } => cmd_verify(seed, count, coeff_bound),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}
