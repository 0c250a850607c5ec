//! Acceptance suite: one test per criterion, each printing a PASS line.
//! Criteria 1–3 and 7 drive the compiled binary end to end; 4–6 exercise
//! the library directly. All checks are exact — zero tolerance.

use std::process::{Command, Output};
use std::time::{Duration, Instant};

use amitsur_core::amitsur::{saturate, Witness};
use amitsur_core::arith::{rational_irreducible, zassenhaus_factor_with, QPoly, Rational};
use amitsur_core::cycalg::{division_witness, AlgElement, CyclicAlgebra};
use amitsur_core::factor::{nf_irreducible, NfPoly};
use amitsur_core::numfield::{Automorphism, NFElement, NumberField};
use amitsur_core::rng::SplitMix64;
use amitsur_core::skewpoly::{left_ideal_gcd, BiPoly, SkewPoly};
use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_amitsur"))
}

fn config_path(name: &str) -> String {
    format!("{}/../../configs/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run_verify(config: &str, report_path: &str, extra: &[&str]) -> Output {
    let mut cmd = bin();
    cmd.arg("verify")
        .arg("-c")
        .arg(config_path(config))
        .arg("--report")
        .arg(report_path);
    for arg in extra {
        cmd.arg(arg);
    }
    cmd.output().expect("binary runs")
}

fn read_report(path: &str) -> Value {
    let text = std::fs::read_to_string(path).expect("report written");
    serde_json::from_str(&text).expect("report is JSON")
}

fn fix3_algebra() -> CyclicAlgebra {
    let k = NumberField::new(QPoly::from_ints(&[-1, -2, 1, 1])).unwrap();
    let sigma = Automorphism::new(k.clone(), k.element(QPoly::from_ints(&[-2, 0, 1]))).unwrap();
    CyclicAlgebra::new(k, sigma, Rational::from_int(2)).unwrap()
}

fn random_element(alg: &CyclicAlgebra, rng: &mut SplitMix64) -> AlgElement {
    let p = alg.degree();
    let coords: Vec<NFElement> = (0..p)
        .map(|_| {
            let coeffs: Vec<Rational> = (0..p).map(|_| Rational::from_int(rng.signed(4))).collect();
            alg.field().element(QPoly::new(coeffs))
        })
        .collect();
    alg.element(coords)
}

fn random_spoly(alg: &CyclicAlgebra, max_deg: usize, rng: &mut SplitMix64) -> SkewPoly {
    let deg = rng.below(max_deg as u64 + 1) as usize;
    let coeffs: Vec<AlgElement> = (0..=deg).map(|_| random_element(alg, rng)).collect();
    SkewPoly::new(alg.clone(), coeffs)
}

#[test]
fn criterion_1_fix3_end_to_end() {
    let start = Instant::now();
    let report_path = std::env::temp_dir().join("acceptance_fix3.json");
    let report_path = report_path.to_str().unwrap();
    let out = run_verify("p3_division.json", report_path, &[]);
    assert_eq!(out.status.code(), Some(0), "verify must exit 0 on FIX3");
    let report = read_report(report_path);
    // Division witness at q = 2.
    assert_eq!(report["division"]["certified"], true);
    assert_eq!(report["division"]["witness"]["prime_q"], 2);
    // Contraction certificate: h = x² + (1+i)x + (i²+i−2), exactly.
    let expected_h = serde_json::json!([
        [["-2", "1", "1"], ["0", "0", "0"], ["0", "0", "0"]],
        [["1", "1", "0"], ["0", "0", "0"], ["0", "0", "0"]],
        [["1", "0", "0"], ["0", "0", "0"], ["0", "0", "0"]]
    ]);
    assert_eq!(report["contraction"]["h"], expected_h);
    // …and f = h·(x−i) verifies exactly in-process.
    let alg = fix3_algebra();
    let h_json: Vec<Vec<Vec<String>>> =
        serde_json::from_value(report["contraction"]["h"].clone()).unwrap();
    let h = SkewPoly::from_string_coeffs(&alg, &h_json).unwrap();
    let linear = SkewPoly::new(alg.clone(), vec![alg.gen_i().neg(), alg.one()]);
    let f = SkewPoly::from_qpoly(&alg, alg.field().modulus());
    assert_eq!(h.mul(&linear), f, "f = h*(x - i) must hold exactly");
    // Maximality certificate: s³−2 irreducible over ℚ, m irreducible over F[j].
    assert_eq!(report["maximality"]["status"], "MAXIMAL");
    assert_eq!(
        report["maximality"]["fj_modulus"],
        serde_json::json!(["-2", "0", "0", "1"])
    );
    assert_eq!(report["maximality"]["fj_irreducible"], true);
    assert_eq!(report["maximality"]["f_irreducible_over_fj"], true);
    // 100 seeded probes, none a contradiction.
    assert_eq!(report["instance"]["probes"], 100);
    assert_eq!(report["probes"]["unit_ideal"], 100);
    assert_eq!(report["probes"]["contradiction"], 0);
    assert_eq!(report["verdict"], "NOT_AMITSUR_SMALL");
    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(60),
        "FIX3 end-to-end took {elapsed:?}, budget 60s"
    );
    println!("ACCEPTANCE 1 PASS: FIX3 verify exits 0 with all certificates in {elapsed:?}");
}

#[test]
fn criterion_2_fix5_end_to_end() {
    let start = Instant::now();
    let report_path = std::env::temp_dir().join("acceptance_fix5.json");
    let report_path = report_path.to_str().unwrap();
    let out = run_verify("p5_division.json", report_path, &[]);
    assert_eq!(out.status.code(), Some(0), "verify must exit 0 on FIX5");
    let report = read_report(report_path);
    assert_eq!(report["division"]["witness"]["prime_q"], 2);
    assert_eq!(report["maximality"]["status"], "MAXIMAL");
    assert_eq!(report["probes"]["unit_ideal"], 25);
    assert_eq!(report["probes"]["contradiction"], 0);
    assert_eq!(report["verdict"], "NOT_AMITSUR_SMALL");
    // The Trager step really factors a degree-25 norm: deg_x(m(x−c·s)) = 5
    // over a degree-5 field, and a nonzero shift was needed (the unshifted
    // norm m(x)⁵ is never squarefree).
    let shift = report["maximality"]["norm_shift_used"].as_i64().unwrap();
    assert_ne!(shift, 0, "degree-25 norm requires a nonzero shift");
    // Re-run the whole lemma (including the degree-25 Zassenhaus) in-process.
    let kprime = NumberField::new(QPoly::from_ints(&[-2, 0, 0, 0, 0, 1])).unwrap();
    let m5 = QPoly::from_ints(&[1, 3, -3, -4, 1, 1]);
    let f_over = NfPoly::from_qpoly(&kprime, &m5);
    assert_eq!(kprime.degree() * f_over.degree().unwrap(), 25);
    assert!(nf_irreducible(&f_over).unwrap());
    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(600),
        "FIX5 end-to-end took {elapsed:?}, budget 10min"
    );
    println!("ACCEPTANCE 2 PASS: FIX5 verify exits 0, degree-25 norm factored, in {elapsed:?}");
}

#[test]
fn criterion_3_split_case_soundness() {
    let report_path = std::env::temp_dir().join("acceptance_fix3s.json");
    let report_path = report_path.to_str().unwrap();
    let out = run_verify("p3_split.json", report_path, &[]);
    assert_eq!(out.status.code(), Some(2), "split case must exit 2");
    let report = read_report(report_path);
    assert_eq!(report["verdict"], "DIVISION_NOT_CERTIFIED");
    let zd = &report["division"]["zero_divisor"];
    // The exact identity (j−1)·(j²+j+1) = 0, bit-exact in coordinates.
    assert_eq!(zd["identity"], "(-1 + j)*(1 + j + j^2) = 0");
    assert_eq!(
        zd["u_minus_1"],
        serde_json::json!([["-1", "0", "0"], ["1", "0", "0"], ["0", "0", "0"]])
    );
    assert_eq!(
        zd["cofactor"],
        serde_json::json!([["1", "0", "0"], ["1", "0", "0"], ["1", "0", "0"]])
    );
    assert_eq!(zd["product_is_zero"], true);
    assert_eq!(zd["factors_nonzero"], true);
    // Re-verify the product in exact arithmetic.
    let k = NumberField::new(QPoly::from_ints(&[-1, -2, 1, 1])).unwrap();
    let sigma = Automorphism::new(k.clone(), k.element(QPoly::from_ints(&[-2, 0, 1]))).unwrap();
    let alg = CyclicAlgebra::new(k, sigma, Rational::one()).unwrap();
    let u: Vec<Vec<String>> = serde_json::from_value(zd["u_minus_1"].clone()).unwrap();
    let c: Vec<Vec<String>> = serde_json::from_value(zd["cofactor"].clone()).unwrap();
    let u = AlgElement::from_string_matrix(&alg, &u).unwrap();
    let c = AlgElement::from_string_matrix(&alg, &c).unwrap();
    assert!(!u.is_zero() && !c.is_zero());
    assert!(u.mul(&c).is_zero());
    println!("ACCEPTANCE 3 PASS: split case exits 2 with the exact zero-divisor identity");
}

#[test]
fn criterion_4_paper_mechanics() {
    // g = x−i: [g, j] = (σ(i)−i)·j exactly, and saturation reaches degree 0
    // in a single gcd step.
    let alg = fix3_algebra();
    let div = division_witness(&alg, 2).unwrap().unwrap();
    let w = Witness::build(&alg, &div).unwrap();
    let g = SkewPoly::new(alg.clone(), vec![alg.gen_i().neg(), alg.one()]);
    let comm = g.j_commutator(&alg.gen_j());
    let sigma_i = alg.embed_field(alg.sigma().apply(&alg.field().generator()));
    let expected = sigma_i.sub(&alg.gen_i()).mul(&alg.gen_j());
    assert_eq!(comm, SkewPoly::constant(expected));
    let (chain, stable) = saturate(&w, &g).unwrap();
    assert_eq!(chain.len(), 1, "descent must take exactly one gcd step");
    assert_eq!(stable.degree(), Some(0));
    assert!(stable.is_monic());
    println!("ACCEPTANCE 4 PASS: [x-i, j] = (sigma(i)-i)j and one-step descent to degree 0");
}

#[test]
fn criterion_5_algebra_property_suite() {
    let alg = fix3_algebra();
    let mut rng = SplitMix64::new(0xACCE5);
    // Nrd multiplicativity, 200 random pairs.
    for _ in 0..200 {
        let a = random_element(&alg, &mut rng);
        let b = random_element(&alg, &mut rng);
        assert_eq!(
            a.mul(&b).reduced_norm().unwrap(),
            &a.reduced_norm().unwrap() * &b.reduced_norm().unwrap()
        );
    }
    // Nonzero elements of a division-certified instance are invertible:
    // Nrd ≠ 0 and the inverse round-trips, 200 random nonzero elements.
    let mut done = 0;
    while done < 200 {
        let a = random_element(&alg, &mut rng);
        if a.is_zero() {
            continue;
        }
        assert!(!a.reduced_norm().unwrap().is_zero());
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).is_one() && inv.mul(&a).is_one());
        done += 1;
    }
    // min_poly degree ∈ {1, 3} on 100 random elements.
    let mut done = 0;
    while done < 100 {
        let a = random_element(&alg, &mut rng);
        if a.is_zero() {
            continue;
        }
        let d = a.min_poly().degree().unwrap();
        assert!(d == 1 || d == 3, "min poly degree {d}");
        done += 1;
    }
    // spoly_divmod round-trip on 200 random pairs.
    let mut done = 0;
    while done < 200 {
        let a = random_spoly(&alg, 5, &mut rng);
        let g = random_spoly(&alg, 3, &mut rng);
        if g.is_zero() {
            continue;
        }
        let (q, r) = a.divmod(&g).unwrap();
        assert_eq!(q.mul(&g).add(&r), a);
        assert!(r.degree().is_none_or(|dr| dr < g.degree().unwrap()));
        done += 1;
    }
    // bipoly_reduce_y round-trip on 200 random inputs.
    let gen2 = BiPoly::y_minus_j(&alg);
    for _ in 0..200 {
        let deg_y = rng.below(3) as usize;
        let coeffs: Vec<SkewPoly> = (0..=deg_y)
            .map(|_| random_spoly(&alg, 3, &mut rng))
            .collect();
        let p = BiPoly::new(alg.clone(), coeffs);
        let (q, r) = p.reduce_y_extended();
        assert_eq!(q.mul(&gen2).add(&BiPoly::from_skew(r)), p);
    }
    // left_ideal_gcd Bézout certificates exact on 200 random pairs.
    let mut done = 0;
    while done < 200 {
        let f1 = random_spoly(&alg, 4, &mut rng);
        let f2 = random_spoly(&alg, 3, &mut rng);
        if f1.is_zero() && f2.is_zero() {
            continue;
        }
        let cert = left_ideal_gcd(&f1, &f2).unwrap();
        assert!(cert.verify(&f1, &f2).unwrap());
        done += 1;
    }
    println!("ACCEPTANCE 5 PASS: exact algebra property suite (all zero-tolerance checks)");
}

/// Rational square test: num and den must both be perfect squares.
fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r < &Rational::zero() {
        return None;
    }
    let num = r.numerator().sqrt();
    let den = r.denominator().sqrt();
    if &(&num * &num) == r.numerator() && &(&den * &den) == r.denominator() {
        Some(Rational::new(num, den))
    } else {
        None
    }
}

/// Brute-force root search for monic x² + bx + c over ℚ(√2): a root exists
/// iff the discriminant b²−4c is a square u+v·s, solved from
/// (u+vs)² = (u²+2v²) + (2uv)s by rational case analysis.
fn quadratic_has_root_sqrt2(b: &NFElement, c: &NFElement) -> bool {
    let four = Rational::from_int(4);
    let disc = b.mul(b).sub(&c.scale(&four));
    let d0 = disc.rep().coeff(0);
    let d1 = disc.rep().coeff(1);
    if d1.is_zero() {
        // u² = d0 or 2v² = d0.
        return rational_sqrt(&d0).is_some()
            || rational_sqrt(&(&d0 / &Rational::from_int(2))).is_some();
    }
    // u ≠ 0, v = d1/(2u): 2u⁴ − 2d0·u² + d1² = 0 ⇒ u² = (d0 ± √(d0²−2d1²))/2.
    let inner = &(&d0 * &d0) - &(&(&d1 * &d1) * &Rational::from_int(2));
    let Some(root) = rational_sqrt(&inner) else {
        return false;
    };
    for sign in [Rational::one(), Rational::from_int(-1)] {
        let u_sq = &(&d0 + &(&root * &sign)) / &Rational::from_int(2);
        if rational_sqrt(&u_sq).is_some() && !u_sq.is_zero() {
            return true;
        }
    }
    false
}

#[test]
fn criterion_6_factorization_oracles() {
    // 200 random products of irreducibles with total degree ≤ 25,
    // multiply-back exact.
    let mut rng = SplitMix64::new(0xFAC);
    let pool = [
        QPoly::from_ints(&[-1, 1]),
        QPoly::from_ints(&[1, 1]),
        QPoly::from_ints(&[2, 1]),
        QPoly::from_ints(&[-3, 1]),
        QPoly::from_ints(&[1, 0, 1]),
        QPoly::from_ints(&[-2, 0, 1]),
        QPoly::from_ints(&[1, 1, 1]),
        QPoly::from_ints(&[-1, -2, 1, 1]),
        QPoly::from_ints(&[2, 0, 0, 1]),
        QPoly::from_ints(&[1, 0, 0, 0, 1]),
        QPoly::from_ints(&[-2, 0, 0, 0, 0, 1]),
    ];
    for _ in 0..200 {
        let mut f = QPoly::constant(Rational::from_int(1 + rng.signed(3).abs()));
        let mut total = 0usize;
        loop {
            let pick = &pool[rng.below(pool.len() as u64) as usize];
            let d = pick.degree().unwrap();
            if total + d > 25 {
                break;
            }
            f = &f * pick;
            total += d;
            if rng.below(3) == 0 || total >= 20 {
                break;
            }
        }
        let fac = zassenhaus_factor_with(&f, &mut rng).unwrap();
        assert_eq!(fac.expand(), f, "multiply-back failed for {f}");
    }
    // x⁴+1 is irreducible.
    assert!(rational_irreducible(&QPoly::from_ints(&[1, 0, 0, 0, 1])).unwrap());
    // Trager agreement with brute-force root search for monic quadratics
    // over ℚ[s]/(s²−2).
    let k = NumberField::new(QPoly::from_ints(&[-2, 0, 1])).unwrap();
    let mut agreements = 0;
    let mut reducible_seen = 0;
    for _ in 0..60 {
        let b = k.element(QPoly::new(vec![
            Rational::from_int(rng.signed(4)),
            Rational::from_int(rng.signed(2)),
        ]));
        let c = k.element(QPoly::new(vec![
            Rational::from_int(rng.signed(6)),
            Rational::from_int(rng.signed(3)),
        ]));
        let f = NfPoly::new(k.clone(), vec![c.clone(), b.clone(), k.one()]);
        let has_root = quadratic_has_root_sqrt2(&b, &c);
        let reducible = !nf_irreducible(&f).unwrap();
        assert_eq!(
            reducible, has_root,
            "Trager and root search disagree on x^2 + ({b})x + ({c})"
        );
        agreements += 1;
        if reducible {
            reducible_seen += 1;
        }
    }
    // Include cases known to split so the comparison is two-sided.
    let s = k.generator();
    for root in [
        s.clone(),
        s.scale(&Rational::from_int(3)),
        s.add(&k.from_rational(Rational::from_int(2))),
    ] {
        let b = root.neg().sub(&root); // -(r + r)… x² −2r x + r² = (x−r)²
        let c = root.mul(&root);
        let f = NfPoly::new(k.clone(), vec![c.clone(), b.clone(), k.one()]);
        assert!(!nf_irreducible(&f).unwrap());
        assert!(quadratic_has_root_sqrt2(&b, &c));
        reducible_seen += 1;
    }
    assert!(agreements == 60 && reducible_seen > 0);
    println!(
        "ACCEPTANCE 6 PASS: factorization oracles agree (Zassenhaus + Trager vs. root search)"
    );
}

#[test]
fn criterion_7_determinism() {
    let path_a = std::env::temp_dir().join("acceptance_det_a.json");
    let path_b = std::env::temp_dir().join("acceptance_det_b.json");
    let out_a = run_verify("p3_division.json", path_a.to_str().unwrap(), &["--traces"]);
    let out_b = run_verify("p3_division.json", path_b.to_str().unwrap(), &["--traces"]);
    assert_eq!(out_a.status.code(), Some(0));
    assert_eq!(out_b.status.code(), Some(0));
    let mut a: Value = read_report(path_a.to_str().unwrap());
    let mut b: Value = read_report(path_b.to_str().unwrap());
    a.as_object_mut().unwrap().remove("timings");
    b.as_object_mut().unwrap().remove("timings");
    let a = serde_json::to_string(&a).unwrap();
    let b = serde_json::to_string(&b).unwrap();
    assert_eq!(a, b, "reports must be byte-identical modulo timings");
    println!("ACCEPTANCE 7 PASS: same config + seed gives byte-identical reports modulo timings");
}
