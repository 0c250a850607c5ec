//! The verification engine for the witness ideal I = ⟨f, y−j⟩ ⊂ `D[x,y]`.
//!
//! Three independent pieces of evidence are produced for a division-certified
//! instance:
//!
//! * a contraction certificate — f = h·(x−i) exactly, so I ∩ `D[x]` = ⟨f⟩ sits
//!   strictly inside the proper ideal ⟨x−i⟩ and is not maximal;
//! * a maximality certificate — s^p−β is irreducible over ℚ and f stays
//!   irreducible over F\[j\] ≅ ℚ\[s\]/(s^p−β), which rules out every proper
//!   enlargement of I (any stable enlargement would hand f a monic
//!   F\[j\]-coefficient divisor of intermediate degree);
//! * randomized probes — each adjoins a random element u to I and drives the
//!   commutator descent until the ideal collapses to ⟨1⟩ (or u was already a
//!   member). A descent that stalls at an intermediate degree would directly
//!   contradict the maximality certificate, so it is reported as a
//!   first-class CONTRADICTION outcome with a replayable trace.

use crate::arith::{zassenhaus_factor_with, QFactorization, QPoly, Rational};
use crate::clock::Stopwatch;
use crate::cycalg::{
    certify_division, zero_divisor_witness, AlgElement, CyclicAlgebra, DivisionWitness,
};
use crate::error::Error;
use crate::factor::{trager_factor_with, NFFactorization, NfPoly};
use crate::numfield::{NFElement, NumberField};
use crate::rng::SplitMix64;
use crate::skewpoly::{left_ideal_gcd, BiPoly, SkewPoly, SplitResult};

/// The witness ideal I = ⟨f, y−j⟩ over a division-certified algebra, with
/// f the minimal polynomial of i embedded in `D[x]`.
#[derive(Debug, Clone)]
pub struct Witness {
    algebra: CyclicAlgebra,
    f: SkewPoly,
    gen2: BiPoly,
}

impl Witness {
    /// Refuses to build unless the division certificate verifies — the
    /// Euclidean engine needs invertible leading coefficients.
    pub fn build(alg: &CyclicAlgebra, division: &DivisionWitness) -> Result<Witness, Error> {
        if !division.verify(alg) {
            return Err(Error::DivisionNotCertified);
        }
        let f = SkewPoly::from_qpoly(alg, alg.field().modulus());
        // f has central coefficients, so it commutes with j.
        if !f.j_commutator(&alg.gen_j()).is_zero() {
            return Err(Error::internal("embedded modulus fails to centralize j"));
        }
        Ok(Witness {
            algebra: alg.clone(),
            f,
            gen2: BiPoly::y_minus_j(alg),
        })
    }

    pub fn algebra(&self) -> &CyclicAlgebra {
        &self.algebra
    }

    pub fn f(&self) -> &SkewPoly {
        &self.f
    }

    pub fn gen2(&self) -> &BiPoly {
        &self.gen2
    }
}

/// Evidence that I ∩ `D[x]` = ⟨f⟩ is not maximal: f = h·(x−i) exactly, and
/// the degree argument ⟨f⟩ ⊊ ⟨x−i⟩ ⊊ `D[x]`.
#[derive(Debug, Clone)]
pub struct ContractionCertificate {
    pub h: SkewPoly,
    pub degree_argument: DegreeArgument,
}

/// ⟨x−i⟩ is proper (all nonzero members have degree ≥ 1) and strictly
/// larger than ⟨f⟩ (deg f = p > 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeArgument {
    pub generator_degree: usize,
    pub deg_f: usize,
    pub strict_containment: bool,
    pub proper_ideal: bool,
}

impl ContractionCertificate {
    pub fn verify(&self, w: &Witness) -> bool {
        let alg = w.algebra();
        let p = alg.degree();
        let linear = SkewPoly::new(alg.clone(), vec![alg.gen_i().neg(), alg.one()]);
        self.h.is_monic()
            && self.h.degree() == Some(p - 1)
            && self.h.mul(&linear) == *w.f()
            && self.degree_argument
                == DegreeArgument {
                    generator_degree: 1,
                    deg_f: p,
                    strict_containment: p > 1,
                    proper_ideal: true,
                }
    }
}

/// Splits f at its right root i and records the two strictness facts.
pub fn contraction_certificate(w: &Witness) -> Result<ContractionCertificate, Error> {
    let alg = w.algebra();
    let p = alg.degree();
    let i = alg.gen_i();
    let h = match w.f().wedderburn_split(&i)? {
        SplitResult::Split(h) => h,
        SplitResult::NotARoot(_) => {
            return Err(Error::internal("m(i) = 0 must split f at i"));
        }
    };
    let cert = ContractionCertificate {
        h,
        degree_argument: DegreeArgument {
            generator_degree: 1,
            deg_f: p,
            strict_containment: p > 1,
            proper_ideal: true,
        },
    };
    if !cert.verify(w) {
        return Err(Error::internal("contraction certificate failed to verify"));
    }
    Ok(cert)
}

/// Evidence that I is maximal, by the factorization criterion over
/// `F[j]` ≅ `ℚ[s]/(s^p−β)`.
#[derive(Debug, Clone)]
pub struct MaximalityCertificate {
    pub fj_modulus: QPoly,
    pub fj_factorization: QFactorization,
    pub f_over_fj: NFFactorization,
}

impl MaximalityCertificate {
    /// Recheck: both records certify irreducibility and multiply back.
    pub fn verify(&self, w: &Witness) -> bool {
        let p = w.algebra().degree();
        let expected_modulus = fj_modulus(w.algebra());
        self.fj_modulus == expected_modulus
            && self.fj_factorization.is_irreducible()
            && self.fj_factorization.expand() == self.fj_modulus
            && self.f_over_fj.is_irreducible()
            && self.f_over_fj.input.degree() == Some(p)
            && self.f_over_fj.expand() == self.f_over_fj.input
            && self.f_over_fj.field_modulus == expected_modulus
    }
}

/// Outcome of the deterministic maximality check.
#[derive(Debug, Clone)]
pub enum LemmaOutcome {
    Maximal(MaximalityCertificate),
    /// f factored over `F[j]` on a division-certified instance. This cannot
    /// happen if the theorem holds; the factorization is the evidence.
    Contradiction(NFFactorization),
}

fn fj_modulus(alg: &CyclicAlgebra) -> QPoly {
    let p = alg.degree();
    let mut coeffs = vec![Rational::zero(); p + 1];
    coeffs[0] = -alg.beta();
    coeffs[p] = Rational::one();
    QPoly::new(coeffs)
}

/// Checks that s^p−β is irreducible over ℚ and that f stays irreducible
/// over K' = `ℚ[s]/(s^p−β)` ≅ `F[j]`.
pub fn lemma_maximality(w: &Witness, rng: &mut SplitMix64) -> Result<LemmaOutcome, Error> {
    lemma_for_algebra(w.algebra(), rng)
}

fn lemma_for_algebra(alg: &CyclicAlgebra, rng: &mut SplitMix64) -> Result<LemmaOutcome, Error> {
    let modulus = fj_modulus(alg);
    let fj_factorization = zassenhaus_factor_with(&modulus, rng)?;
    if !fj_factorization.is_irreducible() {
        // β is then a p-th power, which makes the algebra split — this
        // cannot coexist with a division certificate.
        return Err(Error::FjNotAField);
    }
    let kprime = NumberField::new(modulus.clone())?;
    let f_over = NfPoly::from_qpoly(&kprime, alg.field().modulus());
    let f_over_fj = trager_factor_with(&f_over, rng)?;
    if f_over_fj.is_irreducible() {
        Ok(LemmaOutcome::Maximal(MaximalityCertificate {
            fj_modulus: modulus,
            fj_factorization,
            f_over_fj,
        }))
    } else {
        Ok(LemmaOutcome::Contradiction(f_over_fj))
    }
}

/// One step of the commutator descent: the generator before the step, its
/// commutator with j, and the commutator's remainder mod the generator.
#[derive(Debug, Clone)]
pub struct ChainStep {
    pub generator: SkewPoly,
    pub commutator: SkewPoly,
    pub remainder: SkewPoly,
}

/// Outcome of a membership probe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProbeOutcome {
    /// u ∈ I already.
    Member,
    /// ⟨I, u⟩ = `D[x,y]`.
    UnitIdeal,
    /// The descent stalled at a generator of intermediate degree — evidence
    /// against the theorem, carried for inspection.
    Contradiction(SkewPoly),
}

/// Replayable record of one probe.
#[derive(Debug, Clone)]
pub struct ProbeTrace {
    pub input: BiPoly,
    pub reduced: SkewPoly,
    pub gcd_chain: Vec<ChainStep>,
    pub outcome: ProbeOutcome,
}

impl ProbeTrace {
    /// Replays the probe and checks the recorded trace step by step.
    pub fn verify(&self, w: &Witness) -> Result<bool, Error> {
        let recomputed = probe_maximality(w, &self.input)?;
        if recomputed.reduced != self.reduced || recomputed.outcome != self.outcome {
            return Ok(false);
        }
        if recomputed.gcd_chain.len() != self.gcd_chain.len() {
            return Ok(false);
        }
        let mut last_degree: Option<usize> = None;
        for (a, b) in self.gcd_chain.iter().zip(&recomputed.gcd_chain) {
            if a.generator != b.generator
                || a.commutator != b.commutator
                || a.remainder != b.remainder
            {
                return Ok(false);
            }
            let d = a.generator.degree().unwrap_or(0);
            if let Some(prev) = last_degree {
                if d >= prev {
                    return Ok(false);
                }
            }
            last_degree = Some(d);
        }
        Ok(true)
    }
}

/// Closes `D[x]`·g0 under right multiplication by j: iterates
/// g ← gcd(g, [g, j]) while the commutator fails to reduce to zero.
/// Returns the recorded chain and the stable generator. Each step strictly
/// decreases the degree, so the chain length is at most deg g0.
pub fn saturate(w: &Witness, g0: &SkewPoly) -> Result<(Vec<ChainStep>, SkewPoly), Error> {
    saturate_from(w.algebra(), g0)
}

fn saturate_from(alg: &CyclicAlgebra, g0: &SkewPoly) -> Result<(Vec<ChainStep>, SkewPoly), Error> {
    if g0.is_zero() {
        return Err(Error::DivisionByZeroPoly);
    }
    let j = alg.gen_j();
    let mut g = g0.monicize()?;
    let mut chain = Vec::new();
    loop {
        let commutator = g.j_commutator(&j);
        let remainder = if commutator.is_zero() {
            SkewPoly::zero(alg.clone())
        } else {
            commutator.divmod(&g)?.1
        };
        if remainder.is_zero() {
            return Ok((chain, g));
        }
        let cert = left_ideal_gcd(&g, &commutator)?;
        let next = cert.g;
        if next.degree() >= g.degree() {
            return Err(Error::internal("saturation failed to decrease the degree"));
        }
        chain.push(ChainStep {
            generator: g,
            commutator,
            remainder,
        });
        g = next;
    }
}

/// Tests whether u enlarges I: reduce mod (y−j) then mod f, and drive the
/// leftover generator through the commutator descent.
pub fn probe_maximality(w: &Witness, u: &BiPoly) -> Result<ProbeTrace, Error> {
    let reduced = u.reduce_y();
    let rem_f = if reduced.is_zero() {
        SkewPoly::zero(w.algebra().clone())
    } else {
        reduced.divmod(w.f())?.1
    };
    if rem_f.is_zero() {
        return Ok(ProbeTrace {
            input: u.clone(),
            reduced,
            gcd_chain: vec![],
            outcome: ProbeOutcome::Member,
        });
    }
    let first = left_ideal_gcd(w.f(), &reduced)?;
    let (chain, stable) = saturate_from(w.algebra(), &first.g)?;
    let outcome = if stable.degree() == Some(0) {
        ProbeOutcome::UnitIdeal
    } else {
        ProbeOutcome::Contradiction(stable)
    };
    Ok(ProbeTrace {
        input: u.clone(),
        reduced,
        gcd_chain: chain,
        outcome,
    })
}

/// Probe distribution: y-degree ≤ 2, x-degree ≤ p, sparse coefficients
/// drawn from {0, ±1, ±2, i, j}.
pub fn random_probe(alg: &CyclicAlgebra, rng: &mut SplitMix64) -> BiPoly {
    let p = alg.degree();
    let choices: [AlgElement; 6] = [
        alg.from_rational(Rational::from_int(1)),
        alg.from_rational(Rational::from_int(-1)),
        alg.from_rational(Rational::from_int(2)),
        alg.from_rational(Rational::from_int(-2)),
        alg.gen_i(),
        alg.gen_j(),
    ];
    let mut y_coeffs = Vec::with_capacity(3);
    for _ in 0..=2 {
        let mut x_coeffs = Vec::with_capacity(p + 1);
        for _ in 0..=p {
            if rng.below(3) == 0 {
                x_coeffs.push(choices[rng.below(6) as usize].clone());
            } else {
                x_coeffs.push(alg.zero());
            }
        }
        y_coeffs.push(SkewPoly::new(alg.clone(), x_coeffs));
    }
    BiPoly::new(alg.clone(), y_coeffs)
}

/// Options for a full verification run.
#[derive(Debug, Clone)]
pub struct RunOptions {
    pub probes: usize,
    pub seed: u64,
    pub division_hint: Option<u64>,
    /// Element t with N(t) = β⁻¹, for the zero-divisor demonstration when
    /// division certification fails.
    pub norm_element: Option<QPoly>,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            probes: 100,
            seed: 0,
            division_hint: None,
            norm_element: None,
        }
    }
}

/// Overall verdict of a run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    NotAmitsurSmall,
    DivisionNotCertified,
    Contradiction,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::NotAmitsurSmall => "NOT_AMITSUR_SMALL",
            Verdict::DivisionNotCertified => "DIVISION_NOT_CERTIFIED",
            Verdict::Contradiction => "CONTRADICTION",
        }
    }

    /// Process exit code: 0 success, 2 division failure, 3 contradiction.
    pub fn exit_code(&self) -> i32 {
        match self {
            Verdict::NotAmitsurSmall => 0,
            Verdict::DivisionNotCertified => 2,
            Verdict::Contradiction => 3,
        }
    }
}

/// Zero-divisor demonstration for split instances.
#[derive(Debug, Clone)]
pub struct ZeroDivisorDemo {
    pub norm_element: NFElement,
    pub u_minus_1: AlgElement,
    pub cofactor: AlgElement,
    pub product_is_zero: bool,
    pub factors_nonzero: bool,
}

/// Wall-clock milliseconds spent in each phase (zero where no clock exists).
#[derive(Debug, Clone, Copy, Default)]
pub struct PhaseTimings {
    pub division_ms: u128,
    pub certificates_ms: u128,
    pub probes_ms: u128,
}

/// Everything a verification run produced.
#[derive(Debug, Clone)]
pub struct RunResult {
    pub division: Option<DivisionWitness>,
    pub zero_divisor: Option<ZeroDivisorDemo>,
    pub contraction: Option<ContractionCertificate>,
    pub lemma: Option<LemmaOutcome>,
    pub probes: Vec<ProbeTrace>,
    pub member_resamples: usize,
    pub verdict: Verdict,
    pub timings: PhaseTimings,
}

/// The full pipeline: division search, witness, contraction certificate,
/// maximality certificate, and seeded random probes (members resampled).
pub fn full_report(alg: &CyclicAlgebra, options: &RunOptions) -> Result<RunResult, Error> {
    let mut rng = SplitMix64::new(options.seed);
    let mut timings = PhaseTimings::default();
    let watch = Stopwatch::start();
    let division = certify_division(alg, options.division_hint, 100)?;
    timings.division_ms = watch.elapsed_ms();
    let Some(division) = division else {
        let zero_divisor = match &options.norm_element {
            Some(rep) => {
                let t = alg.field().element(rep.clone());
                let (u_minus_1, cofactor) = zero_divisor_witness(alg, &t)?;
                let product_is_zero = u_minus_1.mul(&cofactor).is_zero();
                let factors_nonzero = !u_minus_1.is_zero() && !cofactor.is_zero();
                Some(ZeroDivisorDemo {
                    norm_element: t,
                    u_minus_1,
                    cofactor,
                    product_is_zero,
                    factors_nonzero,
                })
            }
            None => None,
        };
        return Ok(RunResult {
            division: None,
            zero_divisor,
            contraction: None,
            lemma: None,
            probes: vec![],
            member_resamples: 0,
            verdict: Verdict::DivisionNotCertified,
            timings,
        });
    };
    let watch = Stopwatch::start();
    let witness = Witness::build(alg, &division)?;
    let contraction = contraction_certificate(&witness)?;
    let lemma = lemma_maximality(&witness, &mut rng)?;
    timings.certificates_ms = watch.elapsed_ms();
    let watch = Stopwatch::start();
    let mut probes = Vec::with_capacity(options.probes);
    let mut member_resamples = 0usize;
    let mut contradictions = 0usize;
    let resample_cap = 100 + 10 * options.probes;
    while probes.len() < options.probes {
        let u = random_probe(alg, &mut rng);
        let trace = probe_maximality(&witness, &u)?;
        match trace.outcome {
            ProbeOutcome::Member => {
                member_resamples += 1;
                if member_resamples > resample_cap {
                    return Err(Error::internal("probe resampling failed to terminate"));
                }
                continue;
            }
            ProbeOutcome::Contradiction(_) => contradictions += 1,
            ProbeOutcome::UnitIdeal => {}
        }
        probes.push(trace);
    }
    timings.probes_ms = watch.elapsed_ms();
    let lemma_ok = matches!(lemma, LemmaOutcome::Maximal(_));
    let verdict = if lemma_ok && contradictions == 0 {
        Verdict::NotAmitsurSmall
    } else {
        Verdict::Contradiction
    };
    Ok(RunResult {
        division: Some(division),
        zero_divisor: None,
        contraction: Some(contraction),
        lemma: Some(lemma),
        probes,
        member_resamples,
        verdict,
        timings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycalg::division_witness;
    use crate::cycalg::fixtures::{fix3, fix3s, fix5};

    fn fix3_witness() -> Witness {
        let alg = fix3();
        let div = division_witness(&alg, 2).unwrap().unwrap();
        Witness::build(&alg, &div).unwrap()
    }

    #[test]
    fn witness_construction() {
        let w = fix3_witness();
        assert_eq!(w.f().degree(), Some(3));
        assert!(w.f().is_monic());
        // FIX5: degree 5.
        let alg5 = fix5();
        let div5 = division_witness(&alg5, 2).unwrap().unwrap();
        let w5 = Witness::build(&alg5, &div5).unwrap();
        assert_eq!(w5.f().degree(), Some(5));
        // FIX3S: no division certificate can be built at all, and a stale
        // witness from another algebra does not verify.
        let split = fix3s();
        let stale = division_witness(&fix3(), 2).unwrap().unwrap();
        assert!(matches!(
            Witness::build(&split, &stale),
            Err(Error::DivisionNotCertified)
        ));
    }

    #[test]
    fn contraction_certificates() {
        let w = fix3_witness();
        let cert = contraction_certificate(&w).unwrap();
        assert!(cert.verify(&w));
        // h = x² + (1+i)x + (i²+i−2).
        let alg = w.algebra();
        let i = alg.gen_i();
        assert_eq!(cert.h.coeff(1), alg.one().add(&i));
        assert_eq!(
            cert.h.coeff(0),
            i.mul(&i)
                .add(&i)
                .sub(&alg.from_rational(Rational::from_int(2)))
        );
        // Right-evaluation of f at i is zero for any witness.
        assert!(w.f().right_eval(&i).is_zero());
        // FIX5: monic h of degree 4.
        let alg5 = fix5();
        let div5 = division_witness(&alg5, 2).unwrap().unwrap();
        let w5 = Witness::build(&alg5, &div5).unwrap();
        let cert5 = contraction_certificate(&w5).unwrap();
        assert_eq!(cert5.h.degree(), Some(4));
        assert!(cert5.verify(&w5));
    }

    #[test]
    fn lemma_maximality_fix3() {
        let w = fix3_witness();
        let mut rng = SplitMix64::new(0);
        match lemma_maximality(&w, &mut rng).unwrap() {
            LemmaOutcome::Maximal(cert) => {
                assert_eq!(cert.fj_modulus, QPoly::from_ints(&[-2, 0, 0, 1]));
                assert!(cert.verify(&w));
            }
            LemmaOutcome::Contradiction(_) => panic!("FIX3 lemma check must pass"),
        }
    }

    #[test]
    fn lemma_rejects_degenerate_beta() {
        // β = 1: s³−1 factors, F[j] is not a field. The low-level check
        // reports it; a division certificate can never coexist with it.
        let alg = fix3s();
        let mut rng = SplitMix64::new(0);
        assert!(matches!(
            lemma_for_algebra(&alg, &mut rng),
            Err(Error::FjNotAField)
        ));
    }

    #[test]
    fn saturation_examples() {
        let w = fix3_witness();
        let alg = w.algebra().clone();
        // g0 = f: central coefficients, stable immediately.
        let (chain, stable) = saturate(&w, w.f()).unwrap();
        assert!(chain.is_empty());
        assert_eq!(&stable, w.f());
        // Stable generators have F[j] coefficients (rational here).
        for c in stable.coeffs() {
            assert!(c.in_f_of_j().is_some());
        }
        // g0 = x−i: [x−i, j] = (σ(i)−i)j is a nonzero constant → ⟨1⟩ in one step.
        let xi = SkewPoly::new(alg.clone(), vec![alg.gen_i().neg(), alg.one()]);
        let (chain, stable) = saturate(&w, &xi).unwrap();
        assert_eq!(chain.len(), 1);
        assert_eq!(stable, SkewPoly::one(alg.clone()));
        assert_eq!(chain[0].generator, xi);
        assert_eq!(chain[0].commutator.degree(), Some(0));
        // g0 = 1: stable at once.
        let (chain, stable) = saturate(&w, &SkewPoly::one(alg.clone())).unwrap();
        assert!(chain.is_empty());
        assert_eq!(stable, SkewPoly::one(alg));
    }

    #[test]
    fn probe_examples() {
        let w = fix3_witness();
        let alg = w.algebra().clone();
        // u = y·f → MEMBER (y·f ∈ D[x,y]·f ⊆ I).
        let yf = BiPoly::y(alg.clone()).mul(&BiPoly::from_skew(w.f().clone()));
        let trace = probe_maximality(&w, &yf).unwrap();
        assert_eq!(trace.outcome, ProbeOutcome::Member);
        assert!(trace.verify(&w).unwrap());
        // u = y − i reduces to j − i, invertible → UNIT_IDEAL.
        let y_minus_i = BiPoly::new(
            alg.clone(),
            vec![
                SkewPoly::constant(alg.gen_i().neg()),
                SkewPoly::one(alg.clone()),
            ],
        );
        let j_minus_i = alg.gen_j().sub(&alg.gen_i());
        assert!(!j_minus_i.reduced_norm().unwrap().is_zero());
        let trace = probe_maximality(&w, &y_minus_i).unwrap();
        assert_eq!(trace.outcome, ProbeOutcome::UnitIdeal);
        assert_eq!(trace.reduced, SkewPoly::constant(j_minus_i));
        assert!(trace.verify(&w).unwrap());
        // u = x − i → UNIT_IDEAL through the (σ(i)−i)j descent.
        let xi = BiPoly::from_skew(SkewPoly::new(
            alg.clone(),
            vec![alg.gen_i().neg(), alg.one()],
        ));
        let trace = probe_maximality(&w, &xi).unwrap();
        assert_eq!(trace.outcome, ProbeOutcome::UnitIdeal);
        assert_eq!(trace.gcd_chain.len(), 1);
        assert!(trace.verify(&w).unwrap());
    }

    #[test]
    fn full_report_fix3_small() {
        let alg = fix3();
        let options = RunOptions {
            probes: 10,
            seed: 42,
            division_hint: Some(2),
            norm_element: None,
        };
        let result = full_report(&alg, &options).unwrap();
        assert_eq!(result.verdict, Verdict::NotAmitsurSmall);
        assert_eq!(result.probes.len(), 10);
        assert!(result
            .probes
            .iter()
            .all(|t| t.outcome == ProbeOutcome::UnitIdeal));
        assert!(result.division.unwrap().prime_q == 2);
    }

    #[test]
    fn full_report_split_case() {
        let alg = fix3s();
        let options = RunOptions {
            probes: 5,
            seed: 0,
            division_hint: None,
            norm_element: Some(QPoly::one()),
        };
        let result = full_report(&alg, &options).unwrap();
        assert_eq!(result.verdict, Verdict::DivisionNotCertified);
        let demo = result.zero_divisor.unwrap();
        assert!(demo.product_is_zero && demo.factors_nonzero);
        assert!(result.contraction.is_none());
        assert!(result.probes.is_empty());
    }

    #[test]
    fn stable_generators_centralize_j() {
        // Whatever saturation stabilizes on, its commutator with j has
        // already reduced to zero, so every coefficient must lie in F[j]
        // (the centralizer of j). Exercised on random starting generators.
        use crate::cycalg::fixtures::random_element;
        let w = fix3_witness();
        let alg = w.algebra().clone();
        let mut rng = SplitMix64::new(0xCAFE);
        let mut nontrivial = 0;
        for _ in 0..50 {
            let deg = rng.below(4) as usize;
            let coeffs: Vec<_> = (0..=deg).map(|_| random_element(&alg, &mut rng)).collect();
            let g0 = SkewPoly::new(alg.clone(), coeffs);
            if g0.is_zero() {
                continue;
            }
            let (chain, stable) = saturate(&w, &g0).unwrap();
            assert!(stable.j_commutator(&alg.gen_j()).divmod(&stable).is_ok());
            let comm = stable.j_commutator(&alg.gen_j());
            let rem = if comm.is_zero() {
                comm.clone()
            } else {
                comm.divmod(&stable).unwrap().1
            };
            assert!(rem.is_zero(), "stable generator must absorb its commutator");
            if stable.degree().unwrap_or(0) >= 1 {
                assert!(comm.is_zero());
                for c in stable.coeffs() {
                    assert!(
                        c.in_f_of_j().is_some(),
                        "stable generator coefficient {c} must centralize j"
                    );
                }
                nontrivial += 1;
            }
            // Chain degrees strictly descend.
            let mut last = usize::MAX;
            for step in &chain {
                let d = step.generator.degree().unwrap();
                assert!(d < last || last == usize::MAX);
                last = d;
            }
        }
        // Random dense generators essentially always saturate to ⟨1⟩; the
        // nontrivial stable cases come from inputs that already centralize
        // j, such as multiples of f. Force one to keep the branch covered.
        let (chain, stable) = saturate(&w, w.f()).unwrap();
        assert!(chain.is_empty());
        assert_eq!(&stable, w.f());
        let _ = nontrivial;
    }
}
