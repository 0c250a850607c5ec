//! Rational polynomial factorization: squarefree decomposition, good-prime
//! reduction, Cantor–Zassenhaus modular factoring, Hensel lifting to a
//! Mignotte-bound exponent, and brute-force subset recombination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{FFPoly, QPoly, Rational};
use crate::error::Error;
use crate::rng::SplitMix64;

/// Complete factorization over ℚ: input = unit · ∏ factorᵏ with every
/// factor monic irreducible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QFactorization {
    pub unit: Rational,
    pub factors: Vec<(QPoly, usize)>,
}

impl QFactorization {
    /// Multiplies the factorization back out.
    pub fn expand(&self) -> QPoly {
        let mut acc = QPoly::constant(self.unit.clone());
        for (g, m) in &self.factors {
            for _ in 0..*m {
                acc = &acc * g;
            }
        }
        acc
    }

    /// True iff the factorization certifies irreducibility of a polynomial
    /// of the given degree.
    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }
}

/// Factors f over ℚ with a caller-supplied generator for the randomized
/// equal-degree splitting step.
pub fn zassenhaus_factor_with(f: &QPoly, rng: &mut SplitMix64) -> Result<QFactorization, Error> {
    if f.is_zero() {
        return Err(Error::FactorZeroInput);
    }
    let unit = f.leading_coeff().unwrap().clone();
    let mut factors: Vec<(QPoly, usize)> = Vec::new();
    for (part, mult) in f.squarefree_decomposition()? {
        for irr in factor_squarefree(&part, rng)? {
            factors.push((irr, mult));
        }
    }
    factors.sort_by(|a, b| {
        a.0.degree()
            .cmp(&b.0.degree())
            .then_with(|| a.0.coeffs().cmp(b.0.coeffs()))
    });
    Ok(QFactorization { unit, factors })
}

/// Factors f over ℚ (deterministic; fixed internal seed).
pub fn zassenhaus_factor(f: &QPoly) -> Result<QFactorization, Error> {
    zassenhaus_factor_with(f, &mut SplitMix64::new(0x5DEECE66D))
}

/// True iff f (degree ≥ 1) is irreducible over ℚ.
pub fn rational_irreducible(f: &QPoly) -> Result<bool, Error> {
    if f.degree().unwrap_or(0) == 0 {
        return Ok(false);
    }
    Ok(zassenhaus_factor(f)?.is_irreducible())
}

/// Factors a monic squarefree rational polynomial into monic irreducibles.
fn factor_squarefree(part: &QPoly, rng: &mut SplitMix64) -> Result<Vec<QPoly>, Error> {
    let deg = part.degree().unwrap_or(0);
    if deg <= 1 {
        return Ok(vec![part.clone()]);
    }
    let (_, mut fint) = part.primitive_integer();
    let mut out = Vec::new();
    // Strip a factor of x (squarefree, so at most one).
    if fint[0].is_zero() {
        out.push(QPoly::x());
        fint.remove(0);
        if fint.len() == 1 {
            return Ok(out);
        }
    }
    let p = good_prime(&fint)?;
    let fbar = ffpoly_from_int(&fint, p).monic();
    let modular: Vec<FFPoly> = fbar
        .factor_with(rng)?
        .into_iter()
        .map(|(g, m)| {
            debug_assert_eq!(m, 1, "good prime must keep f squarefree");
            g
        })
        .collect();
    if modular.len() == 1 {
        out.push(QPoly::from_integer_coeffs(&fint).monic());
        return Ok(out);
    }
    let exponent = mignotte_exponent(&fint, p);
    let lifted = lift_chain(&fint, &modular, p, exponent)?;
    let modulus = BigInt::from(p).pow(exponent);
    out.extend(recombine(&fint, lifted, &modulus)?);
    Ok(out)
}

/// Smallest prime dividing neither the leading coefficient nor the
/// discriminant of the (squarefree) input — tested as "stays squarefree mod p".
fn good_prime(fint: &[BigInt]) -> Result<u64, Error> {
    let lc = fint.last().unwrap();
    let mut p = 2u64;
    loop {
        if super::is_prime_u64(p) && !(lc % BigInt::from(p)).is_zero() {
            let fbar = ffpoly_from_int(fint, p);
            if fbar.degree() == Some(fint.len() - 1) {
                let d = fbar.derivative();
                if !d.is_zero() && fbar.gcd(&d)?.degree() == Some(0) {
                    return Ok(p);
                }
            }
        }
        p += 1;
        if p > 100_000 {
            return Err(Error::internal("no good prime below 100000"));
        }
    }
}

fn ffpoly_from_int(fint: &[BigInt], p: u64) -> FFPoly {
    let pb = BigInt::from(p);
    FFPoly::new_unchecked(
        p,
        fint.iter()
            .map(|c| c.mod_floor(&pb).to_u64().unwrap())
            .collect(),
    )
}

/// Exponent e with p^e > 2·(2^n · ‖f‖₂ · |lc|), the Mignotte coefficient
/// bound for (leading-coefficient-scaled) factors.
fn mignotte_exponent(fint: &[BigInt], p: u64) -> u32 {
    let n = fint.len() - 1;
    let norm_sq: BigInt = fint.iter().map(|c| c * c).sum();
    let norm = norm_sq.sqrt() + 1;
    let lc = fint.last().unwrap().abs();
    let bound: BigInt = (BigInt::one() << n) * norm * lc * 2 + 1;
    let pb = BigInt::from(p);
    let mut e = 1u32;
    let mut pe = pb.clone();
    while pe < bound {
        pe *= &pb;
        e += 1;
    }
    e
}

/// Symmetric representative of c modulo m.
fn sym(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

fn zpoly_trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn zpoly_mul_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] = sym(&(&out[i + j] + ai * bj), m);
        }
    }
    zpoly_trim(&mut out);
    out
}

fn zpoly_sub(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let zero = BigInt::zero();
    let mut out: Vec<BigInt> = (0..n)
        .map(|k| a.get(k).unwrap_or(&zero) - b.get(k).unwrap_or(&zero))
        .collect();
    zpoly_trim(&mut out);
    out
}

fn bigint_modinv(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let (mut t, mut new_t) = (BigInt::zero(), BigInt::one());
    let (mut r, mut new_r) = (m.clone(), a.mod_floor(m));
    while !new_r.is_zero() {
        let q = &r / &new_r;
        let tmp_t = &t - &q * &new_t;
        t = std::mem::replace(&mut new_t, tmp_t);
        let tmp_r = &r - &q * &new_r;
        r = std::mem::replace(&mut new_r, tmp_r);
    }
    if r.is_one() {
        Some(t.mod_floor(m))
    } else {
        None
    }
}

/// Lifts a two-factor splitting f ≡ g0·h0 (mod prime) to
/// f ≡ g·h (mod prime^target_exponent), with g ≡ g0 and h ≡ h0 (mod prime).
/// f must have integer coefficients with leading coefficient invertible
/// mod prime; g0 and h0 must be coprime mod prime.
pub fn hensel_lift(
    f: &QPoly,
    g0: &FFPoly,
    h0: &FFPoly,
    prime: u64,
    target_exponent: u32,
) -> Result<(QPoly, QPoly), Error> {
    if f.coeffs().iter().any(|c| !c.is_integer()) {
        return Err(Error::internal("hensel_lift requires integer coefficients"));
    }
    let fint: Vec<BigInt> = f.coeffs().iter().map(|c| c.numerator().clone()).collect();
    let (g, h) = hensel_pair(&fint, g0, h0, prime, target_exponent)?;
    Ok((
        QPoly::from_integer_coeffs(&g),
        QPoly::from_integer_coeffs(&h),
    ))
}

fn hensel_pair(
    fint: &[BigInt],
    g0: &FFPoly,
    h0: &FFPoly,
    prime: u64,
    target_exponent: u32,
) -> Result<(Vec<BigInt>, Vec<BigInt>), Error> {
    if g0.modulus() != prime || h0.modulus() != prime {
        return Err(Error::internal(
            "seed factors live modulo a different prime",
        ));
    }
    let lc = fint.last().ok_or(Error::FactorZeroInput)?;
    if (lc % BigInt::from(prime)).is_zero() {
        return Err(Error::LeadingCoeffNotInvertible(prime));
    }
    // Normalize so the first seed factor is monic.
    let (g0, h0) = if g0.leading_coeff() == 1 {
        (g0.clone(), h0.clone())
    } else {
        let scale = g0.leading_coeff();
        (g0.monic(), h0.scale(scale))
    };
    let fbar = ffpoly_from_int(fint, prime);
    if fbar.sub(&g0.mul(&h0)) != FFPoly::zero(prime) {
        return Err(Error::SeedProductMismatch(prime));
    }
    let (gcd, _, v) = g0.xgcd(&h0)?;
    if gcd.degree() != Some(0) {
        return Err(Error::SeedsNotCoprime(prime));
    }
    // v·h0 ≡ 1 (mod g0, prime)
    let pb = BigInt::from(prime);
    let mut g: Vec<BigInt> = g0.coeffs().iter().map(|&c| BigInt::from(c)).collect();
    let mut h: Vec<BigInt> = h0.coeffs().iter().map(|&c| BigInt::from(c)).collect();
    let mut modulus = pb.clone();
    for _ in 1..target_exponent {
        let next = &modulus * &pb;
        // Error term, divided by the current modulus, reduced mod prime.
        let gh = zpoly_mul(&g, &h);
        let err = zpoly_sub(fint, &gh);
        debug_assert!(err.iter().all(|c| (c % &modulus).is_zero()));
        let err_scaled: Vec<BigInt> = err.iter().map(|c| c / &modulus).collect();
        let ebar = ffpoly_from_int(&err_scaled, prime);
        if !ebar.is_zero() {
            let ve = v.mul(&ebar);
            let (_, dg) = ve.divmod(&g0)?;
            let num = ebar.sub(&h0.mul(&dg));
            let dh = num.exact_div(&g0)?;
            add_scaled(&mut g, &dg, &modulus, &pb);
            add_scaled(&mut h, &dh, &modulus, &pb);
        }
        for c in g.iter_mut().chain(h.iter_mut()) {
            *c = sym(c, &next);
        }
        zpoly_trim(&mut g);
        zpoly_trim(&mut h);
        modulus = next;
    }
    for c in g.iter_mut().chain(h.iter_mut()) {
        *c = sym(c, &modulus);
    }
    Ok((g, h))
}

fn zpoly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    zpoly_trim(&mut out);
    out
}

fn add_scaled(target: &mut Vec<BigInt>, delta: &FFPoly, modulus: &BigInt, pb: &BigInt) {
    for (k, &c) in delta.coeffs().iter().enumerate() {
        let c = sym(&BigInt::from(c), pb);
        if target.len() <= k {
            target.resize(k + 1, BigInt::zero());
        }
        target[k] += modulus * c;
    }
}

/// Lifts every modular factor of fint to the target exponent by chained
/// two-factor lifts. Returns monic factors modulo p^e.
fn lift_chain(
    fint: &[BigInt],
    modular: &[FFPoly],
    p: u64,
    exponent: u32,
) -> Result<Vec<Vec<BigInt>>, Error> {
    let me = BigInt::from(p).pow(exponent);
    let mut lifted = Vec::with_capacity(modular.len());
    let mut current: Vec<BigInt> = fint.to_vec();
    for idx in 0..modular.len() - 1 {
        let g0 = &modular[idx];
        let mut h0 = FFPoly::one(p);
        for rest in &modular[idx + 1..] {
            h0 = h0.mul(rest);
        }
        let cbar = ffpoly_from_int(&current, p);
        h0 = h0.scale(cbar.leading_coeff());
        let (g, h) = hensel_pair(&current, g0, &h0, p, exponent)?;
        lifted.push(g);
        current = h;
    }
    // Last factor: monicize the remaining cofactor mod p^e.
    let lc = current.last().unwrap().clone();
    let inv = bigint_modinv(&lc, &me)
        .ok_or_else(|| Error::internal("leading coefficient not invertible mod p^e"))?;
    let last: Vec<BigInt> = current.iter().map(|c| sym(&(c * &inv), &me)).collect();
    lifted.push(last);
    Ok(lifted)
}

/// Brute-force subset recombination of lifted modular factors into true
/// rational factors.
fn recombine(
    fint: &[BigInt],
    lifted: Vec<Vec<BigInt>>,
    modulus: &BigInt,
) -> Result<Vec<QPoly>, Error> {
    let mut out = Vec::new();
    let mut remaining = QPoly::from_integer_coeffs(fint);
    let mut rem_int: Vec<BigInt> = fint.to_vec();
    let mut active: Vec<Vec<BigInt>> = lifted;
    let mut card = 1usize;
    'outer: while 2 * card <= active.len() {
        let mut combo = Combinations::new(active.len(), card);
        while let Some(subset) = combo.next() {
            let lc = rem_int.last().unwrap();
            // Cheap rejection: the candidate's constant term must divide lc·f(0).
            let mut t = lc.clone();
            for &i in subset {
                let c0 = active[i].first().cloned().unwrap_or_else(BigInt::zero);
                t = sym(&(&t * &c0), modulus);
            }
            let f0 = &rem_int[0];
            if !t.is_zero() && !((lc * f0) % &t).is_zero() {
                continue;
            }
            // Full candidate.
            let mut cand = vec![lc.clone()];
            for &i in subset {
                cand = zpoly_mul_mod(&cand, &active[i], modulus);
            }
            let cand_q = QPoly::from_integer_coeffs(&cand);
            if cand_q.is_zero() {
                continue;
            }
            let (_, cand_prim) = cand_q.primitive_integer();
            let cand_q = QPoly::from_integer_coeffs(&cand_prim);
            let (quot, rem) = remaining.divmod(&cand_q)?;
            if rem.is_zero() {
                out.push(cand_q.monic());
                let (_, next_int) = quot.primitive_integer();
                rem_int = next_int;
                remaining = QPoly::from_integer_coeffs(&rem_int);
                // Drop the used modular factors and restart this cardinality.
                let mut keep = Vec::new();
                for (i, fac) in active.into_iter().enumerate() {
                    if !subset.contains(&i) {
                        keep.push(fac);
                    }
                }
                active = keep;
                continue 'outer;
            }
        }
        card += 1;
    }
    if remaining.degree().unwrap_or(0) >= 1 {
        out.push(remaining.monic());
    }
    Ok(out)
}

/// Lexicographic k-subset index iterator.
struct Combinations {
    n: usize,
    idx: Vec<usize>,
    started: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Combinations {
            n,
            idx: (0..k).collect(),
            started: false,
        }
    }

    fn next(&mut self) -> Option<&[usize]> {
        let k = self.idx.len();
        if k > self.n {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.idx);
        }
        // Advance to the next combination.
        let mut i = k;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if self.idx[i] != i + self.n - k {
                break;
            }
        }
        self.idx[i] += 1;
        for j in i + 1..k {
            self.idx[j] = self.idx[j - 1] + 1;
        }
        Some(&self.idx)
    }
}
