//! Instance configuration, machine-readable reports, and the end-to-end
//! entry points shared by the CLI and the browser demo.
//!
//! Reports are deterministic for a given config and seed: two runs differ
//! only in the `timings` field. Every certificate embedded in a report can
//! be re-parsed and re-checked by [`recheck_report`].

use serde::{Deserialize, Serialize};

use crate::amitsur::{
    full_report, probe_maximality, LemmaOutcome, ProbeOutcome, ProbeTrace, RunOptions, RunResult,
    Verdict, Witness,
};
use crate::arith::{rational_irreducible, zassenhaus_factor, QPoly, Rational};
use crate::cycalg::{certify_division, AlgElement, CyclicAlgebra, DivisionWitness};
use crate::error::Error;
use crate::factor::{nf_irreducible, trager_factor, NfPoly};
use crate::numfield::{Automorphism, NumberField};
use crate::skewpoly::{BiPoly, SkewPoly};
use crate::textparse;

/// A verification instance, as read from a JSON config file. Unknown fields
/// are rejected so configs stay diffable and replayable.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceConfig {
    pub p: u64,
    /// Coefficients of the monic modulus m, ascending, length p+1.
    pub modulus: Vec<String>,
    /// Coefficients of σ(t), ascending, length ≤ p.
    pub sigma: Vec<String>,
    pub beta: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub division_witness_prime: Option<u64>,
    /// Element t with N(t) = β⁻¹ for the split-case zero-divisor demo.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub norm_element: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub probes: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl InstanceConfig {
    pub fn from_json(text: &str) -> Result<Self, Error> {
        serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    fn parse_coeffs(strings: &[String]) -> Result<QPoly, Error> {
        let coeffs: Result<Vec<Rational>, Error> =
            strings.iter().map(|s| s.parse::<Rational>()).collect();
        Ok(QPoly::new(coeffs?))
    }

    pub fn build_algebra(&self) -> Result<CyclicAlgebra, Error> {
        let p = self.p as usize;
        if self.modulus.len() != p + 1 {
            return Err(Error::Config(format!(
                "modulus must list p+1 = {} coefficients, got {}",
                p + 1,
                self.modulus.len()
            )));
        }
        if self.sigma.len() > p {
            return Err(Error::Config(format!(
                "sigma must list at most p = {p} coefficients, got {}",
                self.sigma.len()
            )));
        }
        if let Some(t) = &self.norm_element {
            if t.len() > p {
                return Err(Error::Config(format!(
                    "norm_element must list at most p = {p} coefficients"
                )));
            }
        }
        let modulus = Self::parse_coeffs(&self.modulus)?;
        let field = NumberField::new(modulus)?;
        let sigma_image = field.element(Self::parse_coeffs(&self.sigma)?);
        let sigma = Automorphism::new(field.clone(), sigma_image)?;
        let beta: Rational = self.beta.parse()?;
        CyclicAlgebra::new(field, sigma, beta)
    }

    pub fn norm_element_poly(&self) -> Result<Option<QPoly>, Error> {
        match &self.norm_element {
            None => Ok(None),
            Some(strings) => Ok(Some(Self::parse_coeffs(strings)?)),
        }
    }

    /// Effective run options after CLI overrides.
    pub fn run_options(
        &self,
        probe_override: Option<u64>,
        seed_override: Option<u64>,
    ) -> Result<RunOptions, Error> {
        Ok(RunOptions {
            probes: probe_override.or(self.probes).unwrap_or(100) as usize,
            seed: seed_override.or(self.seed).unwrap_or(0),
            division_hint: self.division_witness_prime,
            norm_element: self.norm_element_poly()?,
        })
    }
}

/// Echo of the instance with the options that were actually used.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceEcho {
    pub p: u64,
    pub modulus: Vec<String>,
    pub sigma: Vec<String>,
    pub beta: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub division_witness_prime: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub norm_element: Option<Vec<String>>,
    pub probes: u64,
    pub seed: u64,
}

pub type AlgJson = Vec<Vec<String>>;
pub type SkewJson = Vec<AlgJson>;
pub type BiJson = Vec<SkewJson>;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DivisionWitnessJson {
    pub prime_q: u64,
    pub residual_factor: Vec<String>,
    pub beta_valuation: i64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ZeroDivisorJson {
    pub norm_element: Vec<String>,
    pub u_minus_1: AlgJson,
    pub cofactor: AlgJson,
    pub identity: String,
    pub product_is_zero: bool,
    pub factors_nonzero: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DivisionSection {
    pub certified: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<DivisionWitnessJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub zero_divisor: Option<ZeroDivisorJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DegreeArgumentJson {
    pub generator_degree: usize,
    pub deg_f: usize,
    pub strict_containment: bool,
    pub proper_ideal: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ContractionJson {
    pub h: SkewJson,
    pub identity: String,
    pub degree_argument: DegreeArgumentJson,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MaximalityJson {
    pub status: String,
    pub fj_modulus: Vec<String>,
    pub fj_irreducible: bool,
    pub f_irreducible_over_fj: bool,
    pub norm_shift_used: i64,
    /// Degrees of the factors of f over `F[j]` — only on CONTRADICTION.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f_over_fj_factor_degrees: Option<Vec<usize>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChainStepJson {
    pub generator: SkewJson,
    pub commutator: SkewJson,
    pub remainder: SkewJson,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TraceJson {
    pub input: BiJson,
    pub input_display: String,
    pub reduced: SkewJson,
    pub gcd_chain: Vec<ChainStepJson>,
    pub outcome: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stable_generator: Option<SkewJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProbesSection {
    pub count: usize,
    pub member: usize,
    pub unit_ideal: usize,
    pub contradiction: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub traces: Option<Vec<TraceJson>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Timings {
    pub division_ms: u128,
    pub certificates_ms: u128,
    pub probes_ms: u128,
    pub total_ms: u128,
}

/// The full machine-readable report.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Report {
    pub instance: InstanceEcho,
    pub division: DivisionSection,
    pub contraction: Option<ContractionJson>,
    pub maximality: Option<MaximalityJson>,
    pub probes: ProbesSection,
    pub verdict: String,
    pub timings: Timings,
}

impl Report {
    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self, Error> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}

fn trace_to_json(trace: &ProbeTrace) -> TraceJson {
    let (outcome, stable) = match &trace.outcome {
        ProbeOutcome::Member => ("MEMBER".to_string(), None),
        ProbeOutcome::UnitIdeal => ("UNIT_IDEAL".to_string(), None),
        ProbeOutcome::Contradiction(g) => ("CONTRADICTION".to_string(), Some(g.to_json_coeffs())),
    };
    TraceJson {
        input: trace.input.to_json_coeffs(),
        input_display: trace.input.to_string(),
        reduced: trace.reduced.to_json_coeffs(),
        gcd_chain: trace
            .gcd_chain
            .iter()
            .map(|s| ChainStepJson {
                generator: s.generator.to_json_coeffs(),
                commutator: s.commutator.to_json_coeffs(),
                remainder: s.remainder.to_json_coeffs(),
            })
            .collect(),
        outcome,
        stable_generator: stable,
    }
}

fn qpoly_strings(f: &QPoly) -> Vec<String> {
    f.coeffs().iter().map(Rational::to_string).collect()
}

fn witness_to_json(w: &DivisionWitness) -> DivisionWitnessJson {
    DivisionWitnessJson {
        prime_q: w.prime_q,
        residual_factor: w
            .residual_factor
            .coeffs()
            .iter()
            .map(u64::to_string)
            .collect(),
        beta_valuation: w.beta_valuation,
    }
}

fn result_to_report(
    config: &InstanceConfig,
    options: &RunOptions,
    result: &RunResult,
    include_traces: bool,
    timings: Timings,
) -> Report {
    let instance = InstanceEcho {
        p: config.p,
        modulus: config.modulus.clone(),
        sigma: config.sigma.clone(),
        beta: config.beta.clone(),
        division_witness_prime: config.division_witness_prime,
        norm_element: config.norm_element.clone(),
        probes: options.probes as u64,
        seed: options.seed,
    };
    let division = DivisionSection {
        certified: result.division.is_some(),
        witness: result.division.as_ref().map(witness_to_json),
        zero_divisor: result.zero_divisor.as_ref().map(|d| {
            let u = &d.u_minus_1;
            let c = &d.cofactor;
            ZeroDivisorJson {
                norm_element: qpoly_strings(d.norm_element.rep()),
                u_minus_1: u.to_string_matrix(),
                cofactor: c.to_string_matrix(),
                identity: format!("({u})*({c}) = 0"),
                product_is_zero: d.product_is_zero,
                factors_nonzero: d.factors_nonzero,
            }
        }),
    };
    let contraction = result.contraction.as_ref().map(|cert| ContractionJson {
        h: cert.h.to_json_coeffs(),
        identity: "f = h*(x - i)".to_string(),
        degree_argument: DegreeArgumentJson {
            generator_degree: cert.degree_argument.generator_degree,
            deg_f: cert.degree_argument.deg_f,
            strict_containment: cert.degree_argument.strict_containment,
            proper_ideal: cert.degree_argument.proper_ideal,
        },
    });
    let maximality = result.lemma.as_ref().map(|outcome| match outcome {
        LemmaOutcome::Maximal(cert) => MaximalityJson {
            status: "MAXIMAL".to_string(),
            fj_modulus: qpoly_strings(&cert.fj_modulus),
            fj_irreducible: true,
            f_irreducible_over_fj: true,
            norm_shift_used: cert.f_over_fj.shift_used,
            f_over_fj_factor_degrees: None,
        },
        LemmaOutcome::Contradiction(fac) => MaximalityJson {
            status: "CONTRADICTION".to_string(),
            fj_modulus: qpoly_strings(&fac.field_modulus),
            fj_irreducible: true,
            f_irreducible_over_fj: false,
            norm_shift_used: fac.shift_used,
            f_over_fj_factor_degrees: Some(
                fac.factors
                    .iter()
                    .map(|(g, _)| g.degree().unwrap_or(0))
                    .collect(),
            ),
        },
    });
    let mut member = result.member_resamples;
    let mut unit_ideal = 0usize;
    let mut contradiction = 0usize;
    for t in &result.probes {
        match t.outcome {
            ProbeOutcome::Member => member += 1,
            ProbeOutcome::UnitIdeal => unit_ideal += 1,
            ProbeOutcome::Contradiction(_) => contradiction += 1,
        }
    }
    let probes = ProbesSection {
        count: result.probes.len() + result.member_resamples,
        member,
        unit_ideal,
        contradiction,
        traces: include_traces.then(|| result.probes.iter().map(trace_to_json).collect()),
    };
    Report {
        instance,
        division,
        contraction,
        maximality,
        probes,
        verdict: result.verdict.as_str().to_string(),
        timings,
    }
}

/// Runs the whole pipeline for a config; returns the report and verdict.
pub fn run_verify(
    config: &InstanceConfig,
    probe_override: Option<u64>,
    seed_override: Option<u64>,
    include_traces: bool,
) -> Result<(Report, Verdict), Error> {
    let watch = crate::clock::Stopwatch::start();
    let alg = config.build_algebra()?;
    let options = config.run_options(probe_override, seed_override)?;
    let result = full_report(&alg, &options)?;
    let timings = Timings {
        division_ms: result.timings.division_ms,
        certificates_ms: result.timings.certificates_ms,
        probes_ms: result.timings.probes_ms,
        total_ms: watch.elapsed_ms(),
    };
    let verdict = result.verdict;
    Ok((
        result_to_report(config, &options, &result, include_traces, timings),
        verdict,
    ))
}

/// Single-probe entry point: parse the element, probe, return the trace.
pub fn run_probe(config: &InstanceConfig, element: &str) -> Result<(TraceJson, Verdict), Error> {
    let alg = config.build_algebra()?;
    let division = certify_division(&alg, config.division_witness_prime, 100)?
        .ok_or(Error::DivisionNotCertified)?;
    let witness = Witness::build(&alg, &division)?;
    let u = textparse::parse_bipoly(element, &alg)?;
    let trace = probe_maximality(&witness, &u)?;
    let verdict = match trace.outcome {
        ProbeOutcome::Contradiction(_) => Verdict::Contradiction,
        _ => Verdict::NotAmitsurSmall,
    };
    Ok((trace_to_json(&trace), verdict))
}

/// Factorization result for the CLI/demo, in the shared serialization
/// conventions (coefficient-string arrays, ascending degree).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FactorReportQ {
    pub input: Vec<String>,
    pub unit: String,
    pub irreducible: bool,
    pub factors: Vec<FactorEntryQ>,
    pub display: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FactorEntryQ {
    pub coeffs: Vec<String>,
    pub multiplicity: usize,
}

/// Factors a rational polynomial given in text syntax.
pub fn run_factor_rational(text: &str) -> Result<FactorReportQ, Error> {
    let f = textparse::parse_qpoly(text)?;
    let fac = zassenhaus_factor(&f)?;
    let display = if fac.is_irreducible() {
        "irreducible".to_string()
    } else {
        let mut parts: Vec<String> = Vec::new();
        if !fac.unit.is_one() {
            parts.push(format!("({})", fac.unit));
        }
        for (g, m) in &fac.factors {
            let base = format!("({})", g.display_var("x"));
            parts.push(if *m == 1 { base } else { format!("{base}^{m}") });
        }
        parts.join("*")
    };
    Ok(FactorReportQ {
        input: qpoly_strings(&f),
        unit: fac.unit.to_string(),
        irreducible: fac.is_irreducible(),
        factors: fac
            .factors
            .iter()
            .map(|(g, m)| FactorEntryQ {
                coeffs: qpoly_strings(g),
                multiplicity: *m,
            })
            .collect(),
        display,
    })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FactorReportFj {
    pub field_modulus: Vec<String>,
    pub input: Vec<Vec<String>>,
    pub irreducible: bool,
    pub factors: Vec<FactorEntryFj>,
    pub shift_used: i64,
    pub display: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FactorEntryFj {
    pub coeffs: Vec<Vec<String>>,
    pub multiplicity: usize,
}

fn nfpoly_strings(f: &NfPoly) -> Vec<Vec<String>> {
    f.coeffs().iter().map(|c| qpoly_strings(c.rep())).collect()
}

/// Factors a polynomial over `F[j]` = `ℚ[s]/(sᵖ−β)`, with K' built from the
/// instance config.
pub fn run_factor_over_fj(config: &InstanceConfig, text: &str) -> Result<FactorReportFj, Error> {
    let alg = config.build_algebra()?;
    let p = alg.degree();
    let mut coeffs = vec![Rational::zero(); p + 1];
    coeffs[0] = -alg.beta();
    coeffs[p] = Rational::one();
    let fj_modulus = QPoly::new(coeffs);
    if !rational_irreducible(&fj_modulus)? {
        return Err(Error::FjNotAField);
    }
    let kprime = NumberField::new(fj_modulus)?;
    let f = textparse::parse_nfpoly(text, &kprime)?;
    let fac = trager_factor(&f)?;
    let display = if fac.is_irreducible() {
        "irreducible".to_string()
    } else {
        fac.factors
            .iter()
            .map(|(g, m)| {
                let base = format!("({})", g.display_vars("x", "j"));
                if *m == 1 {
                    base
                } else {
                    format!("{base}^{m}")
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    };
    Ok(FactorReportFj {
        field_modulus: qpoly_strings(&fac.field_modulus),
        input: nfpoly_strings(&fac.input),
        irreducible: fac.is_irreducible(),
        factors: fac
            .factors
            .iter()
            .map(|(g, m)| FactorEntryFj {
                coeffs: nfpoly_strings(g),
                multiplicity: *m,
            })
            .collect(),
        shift_used: fac.shift_used,
        display,
    })
}

/// Re-parses an emitted report and re-checks every embedded certificate:
/// division witness, contraction product identity, irreducibility records,
/// and probe traces (replayed step by step). Returns the first failure.
pub fn recheck_report(report: &Report) -> Result<(), String> {
    let config = InstanceConfig {
        p: report.instance.p,
        modulus: report.instance.modulus.clone(),
        sigma: report.instance.sigma.clone(),
        beta: report.instance.beta.clone(),
        division_witness_prime: report.instance.division_witness_prime,
        norm_element: report.instance.norm_element.clone(),
        probes: Some(report.instance.probes),
        seed: Some(report.instance.seed),
    };
    let alg = config
        .build_algebra()
        .map_err(|e| format!("instance echo does not build: {e}"))?;
    // Division section.
    let witness = match (&report.division.certified, &report.division.witness) {
        (true, Some(wjson)) => {
            let q = wjson.prime_q;
            let recomputed = crate::cycalg::division_witness(&alg, q)
                .map_err(|e| format!("division recheck: {e}"))?
                .ok_or_else(|| format!("prime {q} no longer certifies division"))?;
            let res_strings: Vec<String> = recomputed
                .residual_factor
                .coeffs()
                .iter()
                .map(u64::to_string)
                .collect();
            if res_strings != wjson.residual_factor
                || recomputed.beta_valuation != wjson.beta_valuation
            {
                return Err("division witness mismatch on recheck".into());
            }
            Some(recomputed)
        }
        (false, None) => None,
        _ => return Err("inconsistent division section".into()),
    };
    // Zero-divisor demo.
    if let Some(zd) = &report.division.zero_divisor {
        let u = AlgElement::from_string_matrix(&alg, &zd.u_minus_1)
            .map_err(|e| format!("zero-divisor parse: {e}"))?;
        let c = AlgElement::from_string_matrix(&alg, &zd.cofactor)
            .map_err(|e| format!("zero-divisor parse: {e}"))?;
        if !u.mul(&c).is_zero() || u.is_zero() || c.is_zero() {
            return Err("zero-divisor identity failed on recheck".into());
        }
    }
    let Some(division) = witness else {
        return Ok(());
    };
    let w = Witness::build(&alg, &division).map_err(|e| format!("witness rebuild: {e}"))?;
    // Contraction certificate.
    if let Some(cj) = &report.contraction {
        let h = SkewPoly::from_string_coeffs(&alg, &cj.h)
            .map_err(|e| format!("contraction parse: {e}"))?;
        let linear = SkewPoly::new(alg.clone(), vec![alg.gen_i().neg(), alg.one()]);
        if h.mul(&linear) != *w.f() {
            return Err("contraction identity f = h*(x - i) failed on recheck".into());
        }
        if !h.is_monic() || h.degree() != Some(alg.degree() - 1) {
            return Err("contraction cofactor shape wrong".into());
        }
        if cj.degree_argument.deg_f != alg.degree() || !cj.degree_argument.strict_containment {
            return Err("contraction degree argument wrong".into());
        }
    }
    // Maximality certificate.
    if let Some(mj) = &report.maximality {
        let fj = InstanceConfig::parse_coeffs(&mj.fj_modulus)
            .map_err(|e| format!("fj modulus parse: {e}"))?;
        let fj_irr = rational_irreducible(&fj).map_err(|e| format!("fj recheck: {e}"))?;
        if fj_irr != mj.fj_irreducible {
            return Err("fj irreducibility record failed on recheck".into());
        }
        if fj_irr {
            let kprime = NumberField::new(fj).map_err(|e| format!("fj field: {e}"))?;
            let f_over = NfPoly::from_qpoly(&kprime, alg.field().modulus());
            let irr = nf_irreducible(&f_over).map_err(|e| format!("lemma recheck: {e}"))?;
            if irr != mj.f_irreducible_over_fj {
                return Err("F[j]-irreducibility record failed on recheck".into());
            }
        }
    }
    // Probe traces: replay each one.
    if let Some(traces) = &report.probes.traces {
        for (idx, tj) in traces.iter().enumerate() {
            let input = BiPoly::from_string_coeffs(&alg, &tj.input)
                .map_err(|e| format!("trace {idx} parse: {e}"))?;
            let replay =
                probe_maximality(&w, &input).map_err(|e| format!("trace {idx} replay: {e}"))?;
            let rejson = trace_to_json(&replay);
            if rejson.reduced != tj.reduced
                || rejson.outcome != tj.outcome
                || rejson.gcd_chain.len() != tj.gcd_chain.len()
            {
                return Err(format!("trace {idx} mismatch on replay"));
            }
            let mut last: Option<usize> = None;
            for (sj, rj) in tj.gcd_chain.iter().zip(&rejson.gcd_chain) {
                if sj.generator != rj.generator
                    || sj.commutator != rj.commutator
                    || sj.remainder != rj.remainder
                {
                    return Err(format!("trace {idx} chain step mismatch"));
                }
                let gen = SkewPoly::from_string_coeffs(&alg, &sj.generator)
                    .map_err(|e| format!("trace {idx} generator parse: {e}"))?;
                let d = gen.degree().unwrap_or(0);
                if let Some(prev) = last {
                    if d >= prev {
                        return Err(format!("trace {idx} chain degree did not descend"));
                    }
                }
                last = Some(d);
            }
        }
    }
    // Verdict consistency.
    if report.verdict == "NOT_AMITSUR_SMALL"
        && (report.probes.contradiction != 0
            || report.contraction.is_none()
            || report.maximality.as_ref().map(|m| m.status.as_str()) != Some("MAXIMAL"))
    {
        return Err("verdict inconsistent with report contents".into());
    }
    Ok(())
}
