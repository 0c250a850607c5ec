//! Number fields K = `ℚ[t]/(m)` with an explicit Galois generator.
//!
//! Elements are residue classes of rational polynomials of degree < deg m.
//! Automorphisms are given by the image of the generator and validated as
//! root-to-root maps; the verifier never computes Galois groups, it only
//! checks a supplied generator.

use std::fmt;
use std::sync::Arc;

use crate::arith::{zassenhaus_factor, QPoly, Rational};
use crate::error::Error;

#[derive(Debug)]
struct FieldInner {
    modulus: QPoly,
    degree: usize,
}

/// K = `ℚ[t]/(m)`, m monic irreducible. Cheap to clone, compared by modulus.
#[derive(Debug, Clone)]
pub struct NumberField(Arc<FieldInner>);

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.modulus == other.0.modulus
    }
}

impl Eq for NumberField {}

impl NumberField {
    /// Constructs `ℚ[t]`/(modulus), verifying monicity and irreducibility.
    pub fn new(modulus: QPoly) -> Result<Self, Error> {
        if !modulus.is_monic() || modulus.degree().unwrap_or(0) < 1 {
            return Err(Error::NonMonicModulus);
        }
        let fac = zassenhaus_factor(&modulus)?;
        if !fac.is_irreducible() {
            return Err(Error::ReducibleModulus);
        }
        Ok(NumberField(Arc::new(FieldInner {
            degree: modulus.degree().unwrap(),
            modulus,
        })))
    }

    pub fn modulus(&self) -> &QPoly {
        &self.0.modulus
    }

    pub fn degree(&self) -> usize {
        self.0.degree
    }

    /// Embeds a rational polynomial as an element (reduced mod m).
    pub fn element(&self, rep: QPoly) -> NFElement {
        let rep = if rep.degree().unwrap_or(0) >= self.degree() {
            rep.divmod(self.modulus()).expect("modulus is nonzero").1
        } else {
            rep
        };
        NFElement {
            field: self.clone(),
            rep,
        }
    }

    /// The class of t.
    pub fn generator(&self) -> NFElement {
        self.element(QPoly::x())
    }

    pub fn from_rational(&self, c: Rational) -> NFElement {
        self.element(QPoly::constant(c))
    }

    pub fn zero(&self) -> NFElement {
        self.from_rational(Rational::zero())
    }

    pub fn one(&self) -> NFElement {
        self.from_rational(Rational::one())
    }
}

/// An element of a number field, as a reduced representative polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NFElement {
    field: NumberField,
    rep: QPoly,
}

impl NFElement {
    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn rep(&self) -> &QPoly {
        &self.rep
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.rep == QPoly::one()
    }

    /// Some(c) iff the element lies in ℚ.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.rep.is_constant() {
            Some(self.rep.coeff(0))
        } else {
            None
        }
    }

    fn check_field(&self, other: &NFElement) {
        assert!(self.field == other.field, "elements of different fields");
    }

    pub fn add(&self, other: &NFElement) -> NFElement {
        self.check_field(other);
        self.field.element(&self.rep + &other.rep)
    }

    pub fn sub(&self, other: &NFElement) -> NFElement {
        self.check_field(other);
        self.field.element(&self.rep - &other.rep)
    }

    pub fn neg(&self) -> NFElement {
        self.field.element(-&self.rep)
    }

    pub fn mul(&self, other: &NFElement) -> NFElement {
        self.check_field(other);
        self.field.element(&self.rep * &other.rep)
    }

    pub fn scale(&self, c: &Rational) -> NFElement {
        self.field.element(self.rep.scale(c))
    }

    /// Multiplicative inverse by the extended Euclidean algorithm against m.
    pub fn inv(&self) -> Result<NFElement, Error> {
        if self.is_zero() {
            return Err(Error::ZeroInverse);
        }
        let (g, u, _) = self.rep.xgcd(self.field.modulus())?;
        if g != QPoly::one() {
            // Impossible over an irreducible modulus.
            return Err(Error::internal("gcd with irreducible modulus was not 1"));
        }
        Ok(self.field.element(u))
    }

    pub fn div(&self, other: &NFElement) -> Result<NFElement, Error> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, mut e: u32) -> NFElement {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Evaluates a rational polynomial at this element.
    pub fn eval_qpoly(&self, f: &QPoly) -> NFElement {
        let mut acc = self.field.zero();
        for c in f.coeffs().iter().rev() {
            acc = acc.mul(self).add(&self.field.from_rational(c.clone()));
        }
        acc
    }
}

impl fmt::Display for NFElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rep.display_var("t"))
    }
}

/// A field automorphism of K/ℚ, stored as the image of the generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Automorphism {
    field: NumberField,
    image: NFElement,
}

impl Automorphism {
    /// Validates that the image is a root of the modulus.
    pub fn new(field: NumberField, image: NFElement) -> Result<Self, Error> {
        assert!(image.field == field, "image from a different field");
        if !image.eval_qpoly(field.modulus()).is_zero() {
            return Err(Error::NotAnAutomorphism);
        }
        Ok(Automorphism { field, image })
    }

    pub fn identity(field: NumberField) -> Self {
        let image = field.generator();
        Automorphism { field, image }
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn image_of_generator(&self) -> &NFElement {
        &self.image
    }

    /// σ(a), by evaluating the representative at the generator's image.
    pub fn apply(&self, a: &NFElement) -> NFElement {
        assert!(a.field == self.field, "element from a different field");
        self.image.eval_qpoly(&a.rep)
    }

    /// σ∘τ.
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        Automorphism {
            field: self.field.clone(),
            image: self.apply(&other.image),
        }
    }

    /// Least k ≥ 1 with σ^k = id. Bounded by the field degree.
    pub fn order(&self) -> Result<usize, Error> {
        let id = self.field.generator();
        let mut current = self.image.clone();
        for k in 1..=self.field.degree() {
            if current == id {
                return Ok(k);
            }
            current = self.apply(&current);
        }
        Err(Error::internal(
            "automorphism order exceeds the field degree",
        ))
    }

    /// Images of the generator under σ^0, σ^1, …, σ^{count−1}.
    pub fn power_images(&self, count: usize) -> Vec<NFElement> {
        let mut out = Vec::with_capacity(count);
        let mut current = self.field.generator();
        for _ in 0..count {
            out.push(current.clone());
            current = self.apply(&current);
        }
        out
    }
}

/// ∏_{k=0}^{n−1} σᵏ(a) where n = deg K; requires σ of order n, and asserts
/// the product landed in ℚ.
pub fn field_norm(sigma: &Automorphism, a: &NFElement) -> Result<Rational, Error> {
    let n = sigma.field.degree();
    let mut prod = sigma.field.one();
    let mut conj = a.clone();
    for _ in 0..n {
        prod = prod.mul(&conj);
        conj = sigma.apply(&conj);
    }
    prod.as_rational().ok_or(Error::NormNotRational)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;

    fn fix3_field() -> NumberField {
        NumberField::new(QPoly::from_ints(&[-1, -2, 1, 1])).unwrap()
    }

    fn fix3_sigma(k: &NumberField) -> Automorphism {
        Automorphism::new(k.clone(), k.element(QPoly::from_ints(&[-2, 0, 1]))).unwrap()
    }

    #[test]
    fn constructor_validates() {
        // t³+t²−2t−1: no rational root (±1 fail), so the cubic is irreducible.
        assert!(fix3_field().degree() == 3);
        // t²−1 = (t−1)(t+1)
        assert!(matches!(
            NumberField::new(QPoly::from_ints(&[-1, 0, 1])),
            Err(Error::ReducibleModulus)
        ));
        // FIX5 modulus accepted.
        assert!(NumberField::new(QPoly::from_ints(&[1, 3, -3, -4, 1, 1])).is_ok());
        // Non-monic rejected.
        assert!(NumberField::new(QPoly::from_ints(&[1, 0, 2])).is_err());
    }

    #[test]
    fn inverse_of_generator() {
        // t·(t²+t−2) = t³+t²−2t = m+1 ≡ 1, so t⁻¹ = t²+t−2.
        let k = fix3_field();
        let t = k.generator();
        let inv = t.inv().unwrap();
        assert_eq!(inv, k.element(QPoly::from_ints(&[-2, 1, 1])));
        assert!(t.mul(&inv).is_one());
        assert!(k.one().inv().unwrap().is_one());
        let minus_one = k.from_rational(Rational::from_int(-1));
        assert_eq!(minus_one.inv().unwrap(), minus_one);
        assert!(k.zero().inv().is_err());
    }

    #[test]
    fn automorphism_applies() {
        let k = fix3_field();
        let sigma = fix3_sigma(&k);
        let t = k.generator();
        // σ(t) = t²−2; oracle: m(t²−2) ≡ 0 mod m (checked by the constructor).
        assert_eq!(sigma.apply(&t), k.element(QPoly::from_ints(&[-2, 0, 1])));
        // σ(σ(t)) = −t²−t+1, and the three conjugates sum to −1.
        let tt = sigma.apply(&sigma.apply(&t));
        assert_eq!(tt, k.element(QPoly::from_ints(&[1, -1, -1])));
        let sum = t.add(&sigma.apply(&t)).add(&tt);
        assert_eq!(sum.as_rational().unwrap(), Rational::from_int(-1));
        // Fixes ℚ.
        let five = k.from_rational(Rational::from_int(5));
        assert_eq!(sigma.apply(&five), five);
    }

    #[test]
    fn automorphism_rejects_non_root() {
        let k = fix3_field();
        assert!(matches!(
            Automorphism::new(k.clone(), k.element(QPoly::from_ints(&[0, 2]))),
            Err(Error::NotAnAutomorphism)
        ));
    }

    #[test]
    fn orders() {
        let k = fix3_field();
        assert_eq!(fix3_sigma(&k).order().unwrap(), 3);
        assert_eq!(Automorphism::identity(k).order().unwrap(), 1);
        let k5 = NumberField::new(QPoly::from_ints(&[1, 3, -3, -4, 1, 1])).unwrap();
        let sigma5 =
            Automorphism::new(k5.clone(), k5.element(QPoly::from_ints(&[-2, 0, 1]))).unwrap();
        assert_eq!(sigma5.order().unwrap(), 5);
    }

    #[test]
    fn norms() {
        let k = fix3_field();
        let sigma = fix3_sigma(&k);
        // N(t) = (−1)³·m(0) = 1; oracle: direct product of conjugates mod m.
        let t = k.generator();
        let direct = t.mul(&sigma.apply(&t)).mul(&sigma.apply(&sigma.apply(&t)));
        assert_eq!(direct.as_rational().unwrap(), Rational::from_int(1));
        assert_eq!(field_norm(&sigma, &t).unwrap(), Rational::from_int(1));
        // N(c) = c³ for rational c.
        let c = k.from_rational(Rational::from_int(7));
        assert_eq!(field_norm(&sigma, &c).unwrap(), Rational::from_int(343));
        // N(0) = 0.
        assert_eq!(field_norm(&sigma, &k.zero()).unwrap(), Rational::zero());
    }

    fn random_element(k: &NumberField, rng: &mut SplitMix64) -> NFElement {
        let coeffs: Vec<Rational> = (0..k.degree())
            .map(|_| Rational::from_int(rng.signed(6)))
            .collect();
        k.element(QPoly::new(coeffs))
    }

    #[test]
    fn norm_multiplicative_and_inv_round_trip() {
        let k = fix3_field();
        let sigma = fix3_sigma(&k);
        let mut rng = SplitMix64::new(99);
        for _ in 0..200 {
            let a = random_element(&k, &mut rng);
            let b = random_element(&k, &mut rng);
            let nab = field_norm(&sigma, &a.mul(&b)).unwrap();
            let na = field_norm(&sigma, &a).unwrap();
            let nb = field_norm(&sigma, &b).unwrap();
            assert_eq!(nab, &na * &nb);
            // Automorphism is a ring homomorphism.
            assert_eq!(
                sigma.apply(&a.mul(&b)),
                sigma.apply(&a).mul(&sigma.apply(&b))
            );
            assert_eq!(
                sigma.apply(&a.add(&b)),
                sigma.apply(&a).add(&sigma.apply(&b))
            );
            if !a.is_zero() {
                assert!(a.mul(&a.inv().unwrap()).is_one());
            }
        }
    }
}
