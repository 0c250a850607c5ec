//! Polynomial rings `D[x]` and `D[x,y]` over a cyclic algebra, with CENTRAL
//! variables: x and y commute with everything, only the coefficients fail
//! to commute among themselves.
//!
//! The left-ideal convention is fixed throughout: quotients multiply on the
//! left of divisors ("g divides f" means f ∈ `D[x]`·g, i.e. f = h·g), and
//! monicization multiplies by lc⁻¹ on the left, which preserves `D[x]`·g.

use std::fmt;

use crate::arith::QPoly;
use crate::cycalg::{AlgElement, CyclicAlgebra};
use crate::error::Error;

/// Dense polynomial in one central variable over D, ascending degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewPoly {
    algebra: CyclicAlgebra,
    coeffs: Vec<AlgElement>,
}

impl SkewPoly {
    pub fn new(algebra: CyclicAlgebra, mut coeffs: Vec<AlgElement>) -> Self {
        while coeffs.last().is_some_and(AlgElement::is_zero) {
            coeffs.pop();
        }
        SkewPoly { algebra, coeffs }
    }

    pub fn zero(algebra: CyclicAlgebra) -> Self {
        SkewPoly {
            algebra,
            coeffs: vec![],
        }
    }

    pub fn one(algebra: CyclicAlgebra) -> Self {
        let one = algebra.one();
        SkewPoly::new(algebra, vec![one])
    }

    pub fn x(algebra: CyclicAlgebra) -> Self {
        let coeffs = vec![algebra.zero(), algebra.one()];
        SkewPoly::new(algebra, coeffs)
    }

    pub fn constant(c: AlgElement) -> Self {
        let algebra = c.algebra().clone();
        SkewPoly::new(algebra, vec![c])
    }

    /// Embeds a rational polynomial with central coefficients.
    pub fn from_qpoly(algebra: &CyclicAlgebra, f: &QPoly) -> Self {
        SkewPoly::new(
            algebra.clone(),
            f.coeffs()
                .iter()
                .map(|c| algebra.from_rational(c.clone()))
                .collect(),
        )
    }

    pub fn algebra(&self) -> &CyclicAlgebra {
        &self.algebra
    }

    pub fn coeffs(&self) -> &[AlgElement] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> AlgElement {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| self.algebra.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&AlgElement> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(AlgElement::is_one)
    }

    pub fn add(&self, other: &SkewPoly) -> SkewPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        SkewPoly::new(
            self.algebra.clone(),
            (0..n).map(|k| self.coeff(k).add(&other.coeff(k))).collect(),
        )
    }

    pub fn sub(&self, other: &SkewPoly) -> SkewPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> SkewPoly {
        SkewPoly::new(
            self.algebra.clone(),
            self.coeffs.iter().map(AlgElement::neg).collect(),
        )
    }

    /// Product; x is central, so coefficients convolve via the algebra
    /// product in left-to-right order.
    pub fn mul(&self, other: &SkewPoly) -> SkewPoly {
        if self.is_zero() || other.is_zero() {
            return SkewPoly::zero(self.algebra.clone());
        }
        let mut out = vec![self.algebra.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        SkewPoly::new(self.algebra.clone(), out)
    }

    /// c·f — multiplies every coefficient on the left.
    pub fn scale_left(&self, c: &AlgElement) -> SkewPoly {
        SkewPoly::new(
            self.algebra.clone(),
            self.coeffs.iter().map(|a| c.mul(a)).collect(),
        )
    }

    /// f·c — multiplies every coefficient on the right.
    pub fn scale_right(&self, c: &AlgElement) -> SkewPoly {
        SkewPoly::new(
            self.algebra.clone(),
            self.coeffs.iter().map(|a| a.mul(c)).collect(),
        )
    }

    /// lc⁻¹·f, the left-monicization (`D[x]`·f is unchanged).
    pub fn monicize(&self) -> Result<SkewPoly, Error> {
        match self.leading_coeff() {
            None => Ok(self.clone()),
            Some(lc) => Ok(self.scale_left(&lc.inverse()?)),
        }
    }

    /// Euclidean division with the quotient on the LEFT: self = q·g + r,
    /// deg r < deg g. Requires an invertible leading coefficient of g.
    pub fn divmod(&self, g: &SkewPoly) -> Result<(SkewPoly, SkewPoly), Error> {
        let db = g.degree().ok_or(Error::DivisionByZeroPoly)?;
        let lc = g.leading_coeff().unwrap();
        let lc_inv = if lc.is_one() {
            lc.clone()
        } else {
            lc.inverse()?
        };
        let mut rem = self.coeffs.clone();
        if rem.len() <= db {
            return Ok((SkewPoly::zero(self.algebra.clone()), self.clone()));
        }
        let mut quot = vec![self.algebra.zero(); rem.len() - db];
        while rem.len() > db {
            let d = rem.len() - 1;
            // c·lc(g) = rem_lc  ⇔  c = rem_lc·lc(g)⁻¹.
            let c = rem[d].mul(&lc_inv);
            if !c.is_zero() {
                for (k, gc) in g.coeffs.iter().enumerate() {
                    let idx = d - db + k;
                    rem[idx] = rem[idx].sub(&c.mul(gc));
                }
            }
            quot[d - db] = c;
            rem.pop();
            while rem.last().is_some_and(AlgElement::is_zero) {
                rem.pop();
            }
        }
        Ok((
            SkewPoly::new(self.algebra.clone(), quot),
            SkewPoly::new(self.algebra.clone(), rem),
        ))
    }

    /// Right evaluation ∑ aₗ·rˡ — the remainder of division by (x − r).
    pub fn right_eval(&self, r: &AlgElement) -> AlgElement {
        let mut acc = self.algebra.zero();
        let mut r_pow = self.algebra.one();
        for (l, a) in self.coeffs.iter().enumerate() {
            if l > 0 {
                r_pow = r_pow.mul(r);
            }
            acc = acc.add(&a.mul(&r_pow));
        }
        acc
    }

    /// Splits off a right root: if the right evaluation at r is zero,
    /// returns h with self = h·(x − r).
    pub fn wedderburn_split(&self, r: &AlgElement) -> Result<SplitResult, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZeroPoly);
        }
        let linear = SkewPoly::new(self.algebra.clone(), vec![r.neg(), self.algebra.one()]);
        let (h, rem) = self.divmod(&linear)?;
        if rem.is_zero() {
            Ok(SplitResult::Split(h))
        } else {
            debug_assert_eq!(rem.coeff(0), self.right_eval(r));
            Ok(SplitResult::NotARoot(rem.coeff(0)))
        }
    }

    /// [self, d] = self·d − d·self = ∑ (aₗd − daₗ)xˡ; for monic self this
    /// drops the leading term, so the degree strictly decreases.
    pub fn j_commutator(&self, d: &AlgElement) -> SkewPoly {
        SkewPoly::new(
            self.algebra.clone(),
            self.coeffs
                .iter()
                .map(|a| a.mul(d).sub(&d.mul(a)))
                .collect(),
        )
    }

    pub fn to_string_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("({c})"),
                1 if c.is_one() => var.into(),
                1 => format!("({c})*{var}"),
                _ if c.is_one() => format!("{var}^{k}"),
                _ => format!("({c})*{var}^{k}"),
            })
            .collect();
        terms.join(" + ")
    }

    pub fn to_json_coeffs(&self) -> Vec<Vec<Vec<String>>> {
        self.coeffs
            .iter()
            .map(AlgElement::to_string_matrix)
            .collect()
    }

    pub fn from_string_coeffs(
        alg: &CyclicAlgebra,
        coeffs: &[Vec<Vec<String>>],
    ) -> Result<Self, Error> {
        let parsed: Result<Vec<AlgElement>, Error> = coeffs
            .iter()
            .map(|rows| AlgElement::from_string_matrix(alg, rows))
            .collect();
        Ok(SkewPoly::new(alg.clone(), parsed?))
    }
}

impl fmt::Display for SkewPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_var("x"))
    }
}

/// Result of trying to split off a right root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SplitResult {
    /// f = h·(x − r).
    Split(SkewPoly),
    /// The right evaluation at r (nonzero).
    NotARoot(AlgElement),
}

/// Monic generator of `D[x]f₁ + D[x]f₂` together with exact Bézout cofactors
/// g = u·f₁ + v·f₂.
#[derive(Debug, Clone)]
pub struct BezoutCertificate {
    pub g: SkewPoly,
    pub u: SkewPoly,
    pub v: SkewPoly,
}

impl BezoutCertificate {
    /// Rechecks the defining identities against the original inputs.
    pub fn verify(&self, f1: &SkewPoly, f2: &SkewPoly) -> Result<bool, Error> {
        let combo = self.u.mul(f1).add(&self.v.mul(f2));
        if combo != self.g {
            return Ok(false);
        }
        if !self.g.is_zero() {
            for f in [f1, f2] {
                if !f.is_zero() && !f.divmod(&self.g)?.1.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Extended Euclid in `D[x]`: monic g with `D[x]f₁ + D[x]f₂ = D[x]g`, plus the
/// Bézout cofactors. Cofactor updates multiply on the left, matching the
/// left-ideal convention.
pub fn left_ideal_gcd(f1: &SkewPoly, f2: &SkewPoly) -> Result<BezoutCertificate, Error> {
    if f1.is_zero() && f2.is_zero() {
        return Err(Error::GcdBothZero);
    }
    let alg = f1.algebra().clone();
    let mut r0 = f1.clone();
    let mut r1 = f2.clone();
    let mut u0 = SkewPoly::one(alg.clone());
    let mut u1 = SkewPoly::zero(alg.clone());
    let mut v0 = SkewPoly::zero(alg.clone());
    let mut v1 = SkewPoly::one(alg.clone());
    while !r1.is_zero() {
        // Normalizing each remainder keeps D[x]·r₁ unchanged and curbs the
        // coefficient growth of the quotient sequence; the cofactors are
        // scaled by the same left unit to preserve r = u·f₁ + v·f₂.
        if !r1.is_monic() {
            let lc_inv = r1.leading_coeff().unwrap().inverse()?;
            r1 = r1.scale_left(&lc_inv);
            u1 = u1.scale_left(&lc_inv);
            v1 = v1.scale_left(&lc_inv);
        }
        let (q, r) = r0.divmod(&r1)?;
        let u = u0.sub(&q.mul(&u1));
        let v = v0.sub(&q.mul(&v1));
        (r0, r1) = (r1, r);
        (u0, u1) = (u1, u);
        (v0, v1) = (v1, v);
    }
    let lc_inv = r0
        .leading_coeff()
        .expect("nonzero by the both-zero guard")
        .inverse()?;
    let cert = BezoutCertificate {
        g: r0.scale_left(&lc_inv),
        u: u0.scale_left(&lc_inv),
        v: v0.scale_left(&lc_inv),
    };
    if !cert.verify(f1, f2)? {
        return Err(Error::internal("Bézout certificate failed to verify"));
    }
    Ok(cert)
}

/// Polynomial in the second central variable y over `D[x]`: ∑ₖ Cₖ(x)·yᵏ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiPoly {
    algebra: CyclicAlgebra,
    y_coeffs: Vec<SkewPoly>,
}

impl BiPoly {
    pub fn new(algebra: CyclicAlgebra, mut y_coeffs: Vec<SkewPoly>) -> Self {
        while y_coeffs.last().is_some_and(SkewPoly::is_zero) {
            y_coeffs.pop();
        }
        BiPoly { algebra, y_coeffs }
    }

    pub fn zero(algebra: CyclicAlgebra) -> Self {
        BiPoly {
            algebra,
            y_coeffs: vec![],
        }
    }

    pub fn from_skew(c: SkewPoly) -> Self {
        let algebra = c.algebra().clone();
        BiPoly::new(algebra, vec![c])
    }

    pub fn y(algebra: CyclicAlgebra) -> Self {
        let coeffs = vec![
            SkewPoly::zero(algebra.clone()),
            SkewPoly::one(algebra.clone()),
        ];
        BiPoly::new(algebra, coeffs)
    }

    /// The ideal generator y − j.
    pub fn y_minus_j(algebra: &CyclicAlgebra) -> Self {
        BiPoly::new(
            algebra.clone(),
            vec![
                SkewPoly::constant(algebra.gen_j()).neg(),
                SkewPoly::one(algebra.clone()),
            ],
        )
    }

    pub fn algebra(&self) -> &CyclicAlgebra {
        &self.algebra
    }

    pub fn y_coeffs(&self) -> &[SkewPoly] {
        &self.y_coeffs
    }

    pub fn coeff_y(&self, k: usize) -> SkewPoly {
        self.y_coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| SkewPoly::zero(self.algebra.clone()))
    }

    pub fn is_zero(&self) -> bool {
        self.y_coeffs.is_empty()
    }

    pub fn degree_y(&self) -> Option<usize> {
        self.y_coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &BiPoly) -> BiPoly {
        let n = self.y_coeffs.len().max(other.y_coeffs.len());
        BiPoly::new(
            self.algebra.clone(),
            (0..n)
                .map(|k| self.coeff_y(k).add(&other.coeff_y(k)))
                .collect(),
        )
    }

    pub fn sub(&self, other: &BiPoly) -> BiPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> BiPoly {
        BiPoly::new(
            self.algebra.clone(),
            self.y_coeffs.iter().map(SkewPoly::neg).collect(),
        )
    }

    pub fn mul(&self, other: &BiPoly) -> BiPoly {
        if self.is_zero() || other.is_zero() {
            return BiPoly::zero(self.algebra.clone());
        }
        let mut out = vec![
            SkewPoly::zero(self.algebra.clone());
            self.y_coeffs.len() + other.y_coeffs.len() - 1
        ];
        for (i, a) in self.y_coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.y_coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        BiPoly::new(self.algebra.clone(), out)
    }

    /// Reduction modulo the left multiples of (y − j): the unique r ∈ `D[x]`
    /// with self − r ∈ `D[x,y]`·(y − j), namely ∑ₖ Cₖ(x)·jᵏ.
    pub fn reduce_y(&self) -> SkewPoly {
        let j = self.algebra.gen_j();
        let mut acc = SkewPoly::zero(self.algebra.clone());
        let mut j_pow = self.algebra.one();
        for (k, c) in self.y_coeffs.iter().enumerate() {
            if k > 0 {
                j_pow = j_pow.mul(&j);
            }
            acc = acc.add(&c.scale_right(&j_pow));
        }
        acc
    }

    /// Extended reduction: (Q, r) with self = Q·(y − j) + r, via the
    /// telescoping identity Cₖ·(yᵏ − jᵏ) = Cₖ·(∑ₐ yᵃ·j^{k−1−a})·(y − j).
    pub fn reduce_y_extended(&self) -> (BiPoly, SkewPoly) {
        let r = self.reduce_y();
        let j = self.algebra.gen_j();
        let deg = self.y_coeffs.len();
        let mut j_pows = Vec::with_capacity(deg.max(1));
        j_pows.push(self.algebra.one());
        for _ in 1..deg {
            let next = j_pows.last().unwrap().mul(&j);
            j_pows.push(next);
        }
        let mut q_coeffs: Vec<SkewPoly> =
            vec![SkewPoly::zero(self.algebra.clone()); deg.saturating_sub(1)];
        for (k, c) in self.y_coeffs.iter().enumerate() {
            for (a, slot) in q_coeffs.iter_mut().enumerate().take(k) {
                let term = c.scale_right(&j_pows[k - 1 - a]);
                *slot = slot.add(&term);
            }
        }
        (BiPoly::new(self.algebra.clone(), q_coeffs), r)
    }

    pub fn to_string_vars(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let terms: Vec<String> = self
            .y_coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("[{}]", c.to_string_var("x")),
                1 => format!("[{}]*y", c.to_string_var("x")),
                _ => format!("[{}]*y^{k}", c.to_string_var("x")),
            })
            .collect();
        terms.join(" + ")
    }

    pub fn to_json_coeffs(&self) -> Vec<Vec<Vec<Vec<String>>>> {
        self.y_coeffs.iter().map(SkewPoly::to_json_coeffs).collect()
    }

    pub fn from_string_coeffs(
        alg: &CyclicAlgebra,
        coeffs: &[Vec<Vec<Vec<String>>>],
    ) -> Result<Self, Error> {
        let parsed: Result<Vec<SkewPoly>, Error> = coeffs
            .iter()
            .map(|c| SkewPoly::from_string_coeffs(alg, c))
            .collect();
        Ok(BiPoly::new(alg.clone(), parsed?))
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_vars())
    }
}
