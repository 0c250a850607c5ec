//! Factorization over number fields by Trager's norm method: shift the
//! input until its norm (a resultant against the field modulus) is
//! squarefree, factor the norm over ℚ, and pull each rational factor back
//! through a gcd over the field.

use std::cmp::Ordering;
use std::fmt;

use crate::arith::{resultant, zassenhaus_factor_with, QPoly, Rational};
use crate::error::Error;
use crate::numfield::{NFElement, NumberField};
use crate::rng::SplitMix64;

/// Dense univariate polynomial with number-field coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NfPoly {
    field: NumberField,
    coeffs: Vec<NFElement>,
}

impl NfPoly {
    pub fn new(field: NumberField, mut coeffs: Vec<NFElement>) -> Self {
        while coeffs.last().is_some_and(NFElement::is_zero) {
            coeffs.pop();
        }
        NfPoly { field, coeffs }
    }

    pub fn zero(field: NumberField) -> Self {
        NfPoly {
            field,
            coeffs: vec![],
        }
    }

    pub fn one(field: NumberField) -> Self {
        let one = field.one();
        NfPoly::new(field, vec![one])
    }

    pub fn x(field: NumberField) -> Self {
        let coeffs = vec![field.zero(), field.one()];
        NfPoly::new(field, coeffs)
    }

    pub fn constant(c: NFElement) -> Self {
        let field = c.field().clone();
        NfPoly::new(field, vec![c])
    }

    /// Embeds a rational polynomial coefficient-wise.
    pub fn from_qpoly(field: &NumberField, f: &QPoly) -> Self {
        NfPoly::new(
            field.clone(),
            f.coeffs()
                .iter()
                .map(|c| field.from_rational(c.clone()))
                .collect(),
        )
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn coeffs(&self) -> &[NFElement] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> NFElement {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&NFElement> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(NFElement::is_one)
    }

    pub fn add(&self, other: &NfPoly) -> NfPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        NfPoly::new(
            self.field.clone(),
            (0..n).map(|k| self.coeff(k).add(&other.coeff(k))).collect(),
        )
    }

    pub fn sub(&self, other: &NfPoly) -> NfPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        NfPoly::new(
            self.field.clone(),
            (0..n).map(|k| self.coeff(k).sub(&other.coeff(k))).collect(),
        )
    }

    pub fn neg(&self) -> NfPoly {
        NfPoly::new(
            self.field.clone(),
            self.coeffs.iter().map(NFElement::neg).collect(),
        )
    }

    pub fn mul(&self, other: &NfPoly) -> NfPoly {
        if self.is_zero() || other.is_zero() {
            return NfPoly::zero(self.field.clone());
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        NfPoly::new(self.field.clone(), out)
    }

    pub fn scale(&self, c: &NFElement) -> NfPoly {
        NfPoly::new(
            self.field.clone(),
            self.coeffs.iter().map(|a| a.mul(c)).collect(),
        )
    }

    pub fn monic(&self) -> Result<NfPoly, Error> {
        match self.leading_coeff() {
            None => Ok(self.clone()),
            Some(lc) => Ok(self.scale(&lc.inv()?)),
        }
    }

    pub fn divmod(&self, b: &NfPoly) -> Result<(NfPoly, NfPoly), Error> {
        let db = b.degree().ok_or(Error::DivisionByZeroPoly)?;
        let lb_inv = b.leading_coeff().unwrap().inv()?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= db {
            return Ok((NfPoly::zero(self.field.clone()), self.clone()));
        }
        let mut quot = vec![self.field.zero(); rem.len() - db];
        while rem.len() > db {
            let d = rem.len() - 1;
            let c = rem[d].mul(&lb_inv);
            if !c.is_zero() {
                for (k, bc) in b.coeffs.iter().enumerate() {
                    let idx = d - db + k;
                    rem[idx] = rem[idx].sub(&c.mul(bc));
                }
            }
            quot[d - db] = c;
            rem.pop();
            while rem.last().is_some_and(NFElement::is_zero) {
                rem.pop();
            }
        }
        Ok((
            NfPoly::new(self.field.clone(), quot),
            NfPoly::new(self.field.clone(), rem),
        ))
    }

    pub fn exact_div(&self, b: &NfPoly) -> Result<NfPoly, Error> {
        let (q, r) = self.divmod(b)?;
        if !r.is_zero() {
            return Err(Error::internal("exact_div over K left a remainder"));
        }
        Ok(q)
    }

    pub fn gcd(&self, other: &NfPoly) -> Result<NfPoly, Error> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdBothZero);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divmod(&b)?;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> NfPoly {
        NfPoly::new(
            self.field.clone(),
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.scale(&Rational::from_int(k as i64)))
                .collect(),
        )
    }

    pub fn eval(&self, at: &NFElement) -> NFElement {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(at).add(c);
        }
        acc
    }

    /// Substitutes x → x + shift·s, where s is the field generator.
    pub fn shift_by_generator(&self, shift: i64) -> NfPoly {
        if shift == 0 || self.is_zero() {
            return self.clone();
        }
        let s_term = self.field.generator().scale(&Rational::from_int(shift));
        let linear = NfPoly::new(self.field.clone(), vec![s_term, self.field.one()]);
        let mut acc = NfPoly::zero(self.field.clone());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&linear).add(&NfPoly::constant(c.clone()));
        }
        acc
    }

    /// Squarefree decomposition (Yun; characteristic zero).
    pub fn squarefree_decomposition(&self) -> Result<Vec<(NfPoly, usize)>, Error> {
        let f = self.monic()?;
        if f.is_constant() {
            return Ok(vec![]);
        }
        let df = f.derivative();
        let mut out = Vec::new();
        let u = f.gcd(&df)?;
        let mut v = f.exact_div(&u)?;
        let mut w = df.exact_div(&u)?;
        let mut i = 1usize;
        loop {
            let diff = w.sub(&v.derivative());
            if diff.is_zero() {
                if v.degree().unwrap_or(0) > 0 {
                    out.push((v.monic()?, i));
                }
                break;
            }
            let h = v.gcd(&diff)?;
            if h.degree().unwrap_or(0) > 0 {
                out.push((h.clone(), i));
            }
            v = v.exact_div(&h)?;
            w = diff.exact_div(&h)?;
            i += 1;
            if v.is_constant() {
                break;
            }
        }
        Ok(out)
    }

    /// Deterministic ordering key so factor lists are stable.
    fn cmp_key(&self, other: &NfPoly) -> Ordering {
        self.coeffs.len().cmp(&other.coeffs.len()).then_with(|| {
            for (a, b) in self.coeffs.iter().zip(&other.coeffs) {
                let ord = a.rep().coeffs().cmp(b.rep().coeffs());
                if ord != Ordering::Equal {
                    return ord;
                }
            }
            Ordering::Equal
        })
    }

    pub fn display_vars(&self, var: &str, gen: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let coeff = c.rep().display_var(gen);
                let coeff = if c.rep().is_constant() || k == 0 {
                    coeff
                } else {
                    format!("({coeff})")
                };
                match k {
                    0 => coeff,
                    1 if c.is_one() => var.to_string(),
                    1 => format!("{coeff}*{var}"),
                    _ if c.is_one() => format!("{var}^{k}"),
                    _ => format!("{coeff}*{var}^{k}"),
                }
            })
            .collect();
        terms.join(" + ")
    }
}

impl fmt::Display for NfPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_vars("x", "s"))
    }
}

/// Complete factorization over a number field K'.
#[derive(Debug, Clone)]
pub struct NFFactorization {
    pub field_modulus: QPoly,
    pub input: NfPoly,
    pub factors: Vec<(NfPoly, usize)>,
    pub shift_used: i64,
}

impl NFFactorization {
    /// Multiplies the factorization back out (unit · ∏ factorᵏ).
    pub fn expand(&self) -> NfPoly {
        let unit = self
            .input
            .leading_coeff()
            .cloned()
            .unwrap_or_else(|| self.input.field().one());
        let mut acc = NfPoly::constant(unit);
        for (g, m) in &self.factors {
            for _ in 0..*m {
                acc = acc.mul(g);
            }
        }
        acc
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1
            && self.factors[0].1 == 1
            && self.factors[0].0.degree() == self.input.degree()
    }
}

/// Factors f into monic irreducibles over its coefficient field.
///
/// The multiplicity structure comes from a squarefree decomposition; each
/// squarefree part is factored by the norm method: find an integer shift c
/// making Res_s(m(s), f(x − c·s)) squarefree, factor that norm over ℚ, and
/// recover the field factors as gcds.
pub fn trager_factor(f: &NfPoly) -> Result<NFFactorization, Error> {
    trager_factor_with(f, &mut SplitMix64::new(0x5DEECE66D))
}

/// As [`trager_factor`], with a caller-supplied generator for the modular
/// equal-degree splitting inside the rational factorization step.
pub fn trager_factor_with(f: &NfPoly, rng: &mut SplitMix64) -> Result<NFFactorization, Error> {
    if f.is_zero() {
        return Err(Error::FactorZeroInput);
    }
    let field = f.field().clone();
    let mut factors: Vec<(NfPoly, usize)> = Vec::new();
    let mut shift_used = 0i64;
    for (part, mult) in f.squarefree_decomposition()? {
        let (irreducibles, shift) = factor_squarefree_part(&part, rng)?;
        if shift != 0 {
            shift_used = shift;
        }
        for g in irreducibles {
            factors.push((g, mult));
        }
    }
    factors.sort_by(|a, b| a.0.cmp_key(&b.0));
    let result = NFFactorization {
        field_modulus: field.modulus().clone(),
        input: f.clone(),
        factors,
        shift_used,
    };
    // Invariant: the factorization multiplies back to the input, exactly.
    if result.expand() != *f {
        return Err(Error::internal(
            "norm-method factorization failed to verify",
        ));
    }
    let degree_sum: usize = result
        .factors
        .iter()
        .map(|(g, m)| g.degree().unwrap_or(0) * m)
        .sum();
    if degree_sum != f.degree().unwrap_or(0) {
        return Err(Error::internal(
            "factor degrees do not sum to the input degree",
        ));
    }
    Ok(result)
}

/// True iff f is irreducible over its coefficient field.
pub fn nf_irreducible(f: &NfPoly) -> Result<bool, Error> {
    Ok(trager_factor(f)?.is_irreducible())
}

/// As [`nf_irreducible`], with a caller-supplied generator.
pub fn nf_irreducible_with(f: &NfPoly, rng: &mut SplitMix64) -> Result<bool, Error> {
    Ok(trager_factor_with(f, rng)?.is_irreducible())
}

fn factor_squarefree_part(
    part: &NfPoly,
    rng: &mut SplitMix64,
) -> Result<(Vec<NfPoly>, i64), Error> {
    if part.degree().unwrap_or(0) <= 1 {
        return Ok((vec![part.clone()], 0));
    }
    for shift in shift_sequence() {
        let shifted = part.shift_by_generator(-shift);
        let norm = norm_poly(&shifted)?;
        if !norm.is_squarefree() {
            continue;
        }
        let rational_factors = zassenhaus_factor_with(&norm, rng)?;
        if rational_factors.is_irreducible() {
            return Ok((vec![part.clone()], shift));
        }
        let mut out = Vec::new();
        for (ni, _) in &rational_factors.factors {
            let lifted = NfPoly::from_qpoly(part.field(), ni);
            let g = shifted.gcd(&lifted)?;
            if g.degree().unwrap_or(0) == 0 {
                continue;
            }
            out.push(g.shift_by_generator(shift));
        }
        return Ok((out, shift));
    }
    Err(Error::internal("no squarefree-norm shift found"))
}

/// 0, 1, −1, 2, −2, … — deterministic shift search order.
fn shift_sequence() -> impl Iterator<Item = i64> {
    (0..100).map(|k: i64| {
        if k == 0 {
            0
        } else if k % 2 == 1 {
            k / 2 + 1
        } else {
            -(k / 2)
        }
    })
}

/// Norm of f: Res_s(m(s), f(s, x)) ∈ `ℚ[x]`, computed by evaluation at
/// enough rational points and Lagrange interpolation. Since m is monic the
/// resultant at each sample is the product of evaluations over the roots
/// of m, so degree drops in s are harmless.
fn norm_poly(f: &NfPoly) -> Result<QPoly, Error> {
    let field = f.field();
    let m = field.modulus();
    let deg_f = f.degree().ok_or(Error::FactorZeroInput)?;
    let total = field.degree() * deg_f;
    let mut points = Vec::with_capacity(total + 1);
    for i in 0..=total {
        let x0 = Rational::from_int(i as i64);
        // G(s) = Σ_k rep(c_k)·x0^k
        let mut g = QPoly::zero();
        let mut x_pow = Rational::one();
        for c in f.coeffs() {
            g = &g + &c.rep().scale(&x_pow);
            x_pow = &x_pow * &x0;
        }
        let value = if g.is_zero() {
            Rational::zero()
        } else {
            resultant(m, &g)?
        };
        points.push((x0, value));
    }
    Ok(lagrange_interpolate(&points))
}

/// Interpolates the unique polynomial of degree < points.len() through the
/// given (x, y) pairs (x values distinct).
fn lagrange_interpolate(points: &[(Rational, Rational)]) -> QPoly {
    // P = ∏ (x − x_j); L_i = (P / (x − x_i)) / P'(x_i).
    let mut master = QPoly::one();
    for (x, _) in points {
        master = &master * &QPoly::new(vec![-x, Rational::one()]);
    }
    let dmaster = master.derivative();
    let mut acc = QPoly::zero();
    for (x, y) in points {
        if y.is_zero() {
            continue;
        }
        let linear = QPoly::new(vec![-x, Rational::one()]);
        let basis = master.exact_div(&linear).expect("linear factor divides");
        let denom = dmaster.eval(x);
        acc = &acc + &basis.scale(&(y / &denom));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational_irreducible;

    fn sqrt2_field() -> NumberField {
        NumberField::new(QPoly::from_ints(&[-2, 0, 1])).unwrap()
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let f = QPoly::from_ints(&[3, -2, 0, 5]);
        let points: Vec<(Rational, Rational)> = (0..=3)
            .map(|i| {
                let x = Rational::from_int(i);
                (x.clone(), f.eval(&x))
            })
            .collect();
        assert_eq!(lagrange_interpolate(&points), f);
    }

    #[test]
    fn splits_x2_minus_2_over_sqrt2() {
        // x²−2 over ℚ[s]/(s²−2) → (x−s)(x+s).
        let k = sqrt2_field();
        let f = NfPoly::from_qpoly(&k, &QPoly::from_ints(&[-2, 0, 1]));
        let fac = trager_factor(&f).unwrap();
        assert_eq!(fac.factors.len(), 2);
        let s = k.generator();
        let x_minus_s = NfPoly::new(k.clone(), vec![s.neg(), k.one()]);
        let x_plus_s = NfPoly::new(k.clone(), vec![s.clone(), k.one()]);
        assert_eq!(fac.factors[0].0, x_minus_s);
        assert_eq!(fac.factors[1].0, x_plus_s);
        assert!(!nf_irreducible(&f).unwrap());
    }

    #[test]
    fn x2_minus_3_stays_irreducible_over_sqrt2() {
        // Oracle: any root a+bs of x²−3 would force a²+2b² = 3 and 2ab = 0,
        // impossible over ℚ; Trager must agree.
        let k = sqrt2_field();
        let f = NfPoly::from_qpoly(&k, &QPoly::from_ints(&[-3, 0, 1]));
        assert!(nf_irreducible(&f).unwrap());
    }

    #[test]
    fn fix3_modulus_irreducible_over_cbrt2() {
        // t³+t²−2t−1 over ℚ[s]/(s³−2): a cyclic cubic field and a non-Galois
        // cubic field share no root.
        let k = NumberField::new(QPoly::from_ints(&[-2, 0, 0, 1])).unwrap();
        let f = NfPoly::from_qpoly(&k, &QPoly::from_ints(&[-1, -2, 1, 1]));
        assert!(nf_irreducible(&f).unwrap());
    }

    #[test]
    fn degree_one_trivially_irreducible() {
        let k = sqrt2_field();
        let f = NfPoly::new(k.clone(), vec![k.one().neg(), k.one()]);
        assert!(nf_irreducible(&f).unwrap());
    }

    #[test]
    fn root_in_field_detected() {
        // x²−2 has the root s itself.
        let k = sqrt2_field();
        let f = NfPoly::from_qpoly(&k, &QPoly::from_ints(&[-2, 0, 1]));
        let s = k.generator();
        assert!(f.eval(&s).is_zero());
        assert!(!nf_irreducible(&f).unwrap());
    }

    #[test]
    fn refactoring_emitted_factors_is_idempotent() {
        let k = sqrt2_field();
        // (x²−2)(x²−3)·(x−1)² mixes split, inert, and repeated parts.
        let a = NfPoly::from_qpoly(&k, &QPoly::from_ints(&[-2, 0, 1]));
        let b = NfPoly::from_qpoly(&k, &QPoly::from_ints(&[-3, 0, 1]));
        let c = NfPoly::from_qpoly(&k, &QPoly::from_ints(&[-1, 1]));
        let f = a.mul(&b).mul(&c).mul(&c);
        let fac = trager_factor(&f).unwrap();
        let total: usize = fac
            .factors
            .iter()
            .map(|(g, m)| g.degree().unwrap() * m)
            .sum();
        assert_eq!(total, f.degree().unwrap());
        assert_eq!(fac.expand(), f);
        for (g, _) in &fac.factors {
            let refac = trager_factor(g).unwrap();
            assert!(refac.is_irreducible());
            assert_eq!(refac.factors[0].0, *g);
        }
        // (x−1) appears with multiplicity 2.
        assert!(fac
            .factors
            .iter()
            .any(|(g, m)| *m == 2 && g.degree() == Some(1)));
    }

    #[test]
    fn rational_inputs_agree_with_zassenhaus() {
        // A rational polynomial of prime degree q ≠ 3 that factors over
        // ℚ[s]/(s³−2) must already factor over ℚ.
        let k = NumberField::new(QPoly::from_ints(&[-2, 0, 0, 1])).unwrap();
        for coeffs in [
            vec![-1i64, 0, 1],
            vec![1, 1, 1],
            vec![-4, 0, 1],
            vec![2, 3, 1],
            vec![7, 0, 1],
        ] {
            let q = QPoly::from_ints(&coeffs);
            let f = NfPoly::from_qpoly(&k, &q);
            let nf_red = !nf_irreducible(&f).unwrap();
            let q_red = !rational_irreducible(&q).unwrap();
            assert_eq!(
                nf_red, q_red,
                "ℚ-factorability must match over ℚ[s]/(s³−2) for {q}"
            );
        }
    }

    #[test]
    fn zero_input_errors() {
        let k = sqrt2_field();
        assert!(trager_factor(&NfPoly::zero(k)).is_err());
    }

    #[test]
    fn refactoring_is_idempotent_on_random_inputs() {
        use crate::rng::SplitMix64;
        let k = sqrt2_field();
        let mut rng = SplitMix64::new(0x1D);
        for _ in 0..50 {
            let deg = 1 + rng.below(3) as usize;
            let mut coeffs: Vec<NFElement> = (0..=deg)
                .map(|_| {
                    k.element(QPoly::new(vec![
                        Rational::from_int(rng.signed(3)),
                        Rational::from_int(rng.signed(2)),
                    ]))
                })
                .collect();
            if coeffs.last().unwrap().is_zero() {
                *coeffs.last_mut().unwrap() = k.one();
            }
            let f = NfPoly::new(k.clone(), coeffs);
            let fac = trager_factor(&f).unwrap();
            assert_eq!(fac.expand(), f);
            for (g, _) in &fac.factors {
                let refac = trager_factor(g).unwrap();
                assert!(
                    refac.is_irreducible(),
                    "emitted factor {g} must refactor to itself"
                );
                assert_eq!(refac.factors[0].0, *g);
            }
        }
    }
}
