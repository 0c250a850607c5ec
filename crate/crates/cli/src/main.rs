//! Command-line front end.
//!
//! Exit codes: 0 NOT_AMITSUR_SMALL (or a successful probe/factor run),
//! 1 usage or parse error, 2 division certification failure,
//! 3 CONTRADICTION (a verified counterexample trace — report it upstream).

use std::fs;
use std::process::exit;

use amitsur_core::pipeline::{
    recheck_report, run_factor_over_fj, run_factor_rational, run_probe, run_verify, InstanceConfig,
    Report,
};
use amitsur_core::Error;

const USAGE: &str = "\
usage:
  amitsur verify -c <config.json> [--probes N] [--seed S] [--report <out.json>] [--traces]
  amitsur probe  -c <config.json> --element <text>
  amitsur factor --rational <text>
  amitsur factor --over-fj -c <config.json> <text>
  amitsur recheck --report <report.json>

Configs are JSON objects with fields p, modulus, sigma, beta and optional
division_witness_prime, norm_element, probes, seed. Polynomial text uses
terms like \"3/2*x^2\", \"-x\", \"+1\" with variables x, y, i, j, t as the
context permits.

exit codes: 0 verified / ok, 1 usage or parse error,
            2 division not certified, 3 contradiction found.";

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let code = match args.first().map(String::as_str) {
        Some("verify") => cmd_verify(&args[1..]),
        Some("probe") => cmd_probe(&args[1..]),
        Some("factor") => cmd_factor(&args[1..]),
        Some("recheck") => cmd_recheck(&args[1..]),
        Some("--help") | Some("-h") | Some("help") => {
            println!("{USAGE}");
            0
        }
        Some(other) => usage_error(&format!("unknown command {other:?}")),
        None => usage_error("missing command"),
    };
    exit(code);
}

fn usage_error(msg: &str) -> i32 {
    eprintln!("error: {msg}\n\n{USAGE}");
    1
}

fn fail(msg: &str) -> i32 {
    eprintln!("error: {msg}");
    1
}

fn read_config(path: &str) -> Result<InstanceConfig, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?;
    InstanceConfig::from_json(&text).map_err(|e| format!("{path}: {e}"))
}

struct Flags {
    config: Option<String>,
    probes: Option<u64>,
    seed: Option<u64>,
    report: Option<String>,
    traces: bool,
    element: Option<String>,
    rational: Option<String>,
    over_fj: bool,
    positional: Vec<String>,
}

fn parse_flags(args: &[String]) -> Result<Flags, String> {
    let mut flags = Flags {
        config: None,
        probes: None,
        seed: None,
        report: None,
        traces: false,
        element: None,
        rational: None,
        over_fj: false,
        positional: vec![],
    };
    let mut iter = args.iter();
    while let Some(arg) = iter.next() {
        let mut take = |name: &str| -> Result<String, String> {
            iter.next()
                .cloned()
                .ok_or_else(|| format!("{name} expects a value"))
        };
        match arg.as_str() {
            "-c" | "--config" => flags.config = Some(take(arg)?),
            "--probes" => {
                flags.probes = Some(
                    take(arg)?
                        .parse()
                        .map_err(|_| "--probes expects a nonnegative integer".to_string())?,
                )
            }
            "--seed" => {
                flags.seed = Some(
                    take(arg)?
                        .parse()
                        .map_err(|_| "--seed expects a nonnegative integer".to_string())?,
                )
            }
            "--report" => flags.report = Some(take(arg)?),
            "--traces" => flags.traces = true,
            "--element" => flags.element = Some(take(arg)?),
            "--rational" => flags.rational = Some(take(arg)?),
            "--over-fj" => flags.over_fj = true,
            other if other.starts_with('-') => return Err(format!("unknown flag {other:?}")),
            other => flags.positional.push(other.to_string()),
        }
    }
    Ok(flags)
}

fn cmd_verify(args: &[String]) -> i32 {
    let flags = match parse_flags(args) {
        Ok(f) => f,
        Err(e) => return usage_error(&e),
    };
    let Some(config_path) = flags.config else {
        return usage_error("verify requires -c <config.json>");
    };
    let config = match read_config(&config_path) {
        Ok(c) => c,
        Err(e) => return fail(&e),
    };
    match run_verify(&config, flags.probes, flags.seed, flags.traces) {
        Ok((report, verdict)) => {
            let json = report.to_json_pretty();
            match &flags.report {
                Some(path) => {
                    if let Err(e) = fs::write(path, json + "\n") {
                        return fail(&format!("cannot write {path}: {e}"));
                    }
                    println!("report written to {path}");
                }
                None => println!("{json}"),
            }
            eprintln!("verdict: {}", report.verdict);
            verdict.exit_code()
        }
        Err(e) => fail(&e.to_string()),
    }
}

fn cmd_probe(args: &[String]) -> i32 {
    let flags = match parse_flags(args) {
        Ok(f) => f,
        Err(e) => return usage_error(&e),
    };
    let (Some(config_path), Some(element)) = (flags.config, flags.element) else {
        return usage_error("probe requires -c <config.json> and --element <text>");
    };
    let config = match read_config(&config_path) {
        Ok(c) => c,
        Err(e) => return fail(&e),
    };
    match run_probe(&config, &element) {
        Ok((trace, _)) => {
            println!(
                "{}",
                serde_json::to_string_pretty(&trace).expect("trace serializes")
            );
            if trace.outcome == "CONTRADICTION" {
                3
            } else {
                0
            }
        }
        Err(Error::DivisionNotCertified) => {
            eprintln!("error: {}", Error::DivisionNotCertified);
            2
        }
        Err(e) => fail(&e.to_string()),
    }
}

fn cmd_factor(args: &[String]) -> i32 {
    let flags = match parse_flags(args) {
        Ok(f) => f,
        Err(e) => return usage_error(&e),
    };
    if flags.over_fj {
        let Some(config_path) = flags.config else {
            return usage_error("factor --over-fj requires -c <config.json>");
        };
        let [text] = flags.positional.as_slice() else {
            return usage_error("factor --over-fj requires exactly one polynomial argument");
        };
        let config = match read_config(&config_path) {
            Ok(c) => c,
            Err(e) => return fail(&e),
        };
        match run_factor_over_fj(&config, text) {
            Ok(result) => {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&result).expect("result serializes")
                );
                0
            }
            Err(e) => fail(&e.to_string()),
        }
    } else if let Some(text) = flags.rational {
        match run_factor_rational(&text) {
            Ok(result) => {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&result).expect("result serializes")
                );
                0
            }
            Err(e) => fail(&e.to_string()),
        }
    } else {
        usage_error("factor requires --rational <text> or --over-fj -c <config> <text>")
    }
}

fn cmd_recheck(args: &[String]) -> i32 {
    let flags = match parse_flags(args) {
        Ok(f) => f,
        Err(e) => return usage_error(&e),
    };
    let Some(path) = flags.report else {
        return usage_error("recheck requires --report <report.json>");
    };
    let text = match fs::read_to_string(&path) {
        Ok(t) => t,
        Err(e) => return fail(&format!("cannot read {path}: {e}")),
    };
    let report = match Report::from_json(&text) {
        Ok(r) => r,
        Err(e) => return fail(&format!("{path}: {e}")),
    };
    match recheck_report(&report) {
        Ok(()) => {
            println!("all embedded certificates verified");
            0
        }
        Err(msg) => {
            eprintln!("recheck failed: {msg}");
            3
        }
    }
}
