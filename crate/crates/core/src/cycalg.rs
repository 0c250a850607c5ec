//! The cyclic algebra D = (K/ℚ, σ, β) of odd prime degree p: generated by
//! K = ℚ(i) and an element j with j·c = σ(c)·j for c ∈ K and jᵖ = β.
//!
//! Elements are stored as ∑ₖ jᵏ·cₖ with the K-coefficients on the right, so
//! left multiplication is right-K-linear and its determinant is the reduced
//! norm. The commutation rule in these coordinates is c·jᵇ = jᵇ·σ^{−b}(c).

use std::fmt;
use std::sync::Arc;

use num_traits::Zero;

use crate::arith::{is_prime_u64, FFPoly, QPoly, Rational};
use crate::error::Error;
use crate::numfield::{field_norm, Automorphism, NFElement, NumberField};

#[derive(Debug)]
struct AlgebraInner {
    p: usize,
    field: NumberField,
    sigma: Automorphism,
    beta: Rational,
    /// Image of the field generator under σᵏ, k = 0..p−1.
    sigma_images: Vec<NFElement>,
}

/// Shared handle to a validated cyclic algebra.
#[derive(Debug, Clone)]
pub struct CyclicAlgebra(Arc<AlgebraInner>);

impl PartialEq for CyclicAlgebra {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p
                && self.0.field == other.0.field
                && self.0.sigma == other.0.sigma
                && self.0.beta == other.0.beta)
    }
}

impl Eq for CyclicAlgebra {}

fn is_odd_prime(p: usize) -> bool {
    p % 2 == 1 && is_prime_u64(p as u64)
}

impl CyclicAlgebra {
    /// Validates p odd prime, deg m = p, σ of order p, β ≠ 0.
    pub fn new(field: NumberField, sigma: Automorphism, beta: Rational) -> Result<Self, Error> {
        let p = field.degree();
        if !is_odd_prime(p) {
            return Err(Error::DegreeNotOddPrime(p));
        }
        if beta.is_zero() {
            return Err(Error::ZeroBeta);
        }
        assert!(sigma.field() == &field, "automorphism of a different field");
        let order = sigma.order()?;
        if order != p {
            return Err(Error::AutomorphismOrderMismatch {
                got: order,
                want: p,
            });
        }
        let sigma_images = sigma.power_images(p);
        Ok(CyclicAlgebra(Arc::new(AlgebraInner {
            p,
            field,
            sigma,
            beta,
            sigma_images,
        })))
    }

    pub fn degree(&self) -> usize {
        self.0.p
    }

    pub fn field(&self) -> &NumberField {
        &self.0.field
    }

    pub fn sigma(&self) -> &Automorphism {
        &self.0.sigma
    }

    pub fn beta(&self) -> &Rational {
        &self.0.beta
    }

    /// σᵏ(a) with k reduced mod p, via the precomputed generator images.
    pub fn apply_sigma_pow(&self, k: usize, a: &NFElement) -> NFElement {
        let k = k % self.0.p;
        if k == 0 {
            return a.clone();
        }
        self.0.sigma_images[k].eval_qpoly(a.rep())
    }

    pub fn element(&self, coords: Vec<NFElement>) -> AlgElement {
        assert_eq!(coords.len(), self.0.p, "coordinate vector of wrong length");
        for c in &coords {
            assert!(
                c.field() == &self.0.field,
                "coefficient from a different field"
            );
        }
        AlgElement {
            algebra: self.clone(),
            coords,
        }
    }

    pub fn zero(&self) -> AlgElement {
        self.element(vec![self.0.field.zero(); self.0.p])
    }

    pub fn one(&self) -> AlgElement {
        self.from_rational(Rational::one())
    }

    pub fn from_rational(&self, c: Rational) -> AlgElement {
        self.embed_field(self.0.field.from_rational(c))
    }

    /// K ⊂ D as the coefficient of j⁰.
    pub fn embed_field(&self, c: NFElement) -> AlgElement {
        let mut coords = vec![self.0.field.zero(); self.0.p];
        coords[0] = c;
        self.element(coords)
    }

    /// The generator i (class of t in K).
    pub fn gen_i(&self) -> AlgElement {
        self.embed_field(self.0.field.generator())
    }

    /// The generator j.
    pub fn gen_j(&self) -> AlgElement {
        let mut coords = vec![self.0.field.zero(); self.0.p];
        coords[1] = self.0.field.one();
        self.element(coords)
    }
}

/// An element ∑ₖ jᵏ·cₖ of a cyclic algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgElement {
    algebra: CyclicAlgebra,
    coords: Vec<NFElement>,
}

impl AlgElement {
    pub fn algebra(&self) -> &CyclicAlgebra {
        &self.algebra
    }

    pub fn coords(&self) -> &[NFElement] {
        &self.coords
    }

    pub fn coord(&self, k: usize) -> &NFElement {
        &self.coords[k]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(NFElement::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(NFElement::is_zero)
    }

    fn check_algebra(&self, other: &AlgElement) -> Result<(), Error> {
        if self.algebra == other.algebra {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    pub fn add(&self, other: &AlgElement) -> AlgElement {
        self.checked_add(other).expect("algebra mismatch")
    }

    pub fn checked_add(&self, other: &AlgElement) -> Result<AlgElement, Error> {
        self.check_algebra(other)?;
        Ok(self.algebra.element(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a.add(b))
                .collect(),
        ))
    }

    pub fn sub(&self, other: &AlgElement) -> AlgElement {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> AlgElement {
        self.algebra
            .element(self.coords.iter().map(NFElement::neg).collect())
    }

    /// The product, via jᵃc · jᵇd = j^{a+b}·σ^{−b}(c)·d and jᵖ = β.
    pub fn mul(&self, other: &AlgElement) -> AlgElement {
        self.checked_mul(other).expect("algebra mismatch")
    }

    pub fn checked_mul(&self, other: &AlgElement) -> Result<AlgElement, Error> {
        self.check_algebra(other)?;
        let p = self.algebra.degree();
        let beta = self.algebra.beta();
        let mut coords = vec![self.algebra.field().zero(); p];
        for (a, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (b, d) in other.coords.iter().enumerate() {
                if d.is_zero() {
                    continue;
                }
                let k = a + b;
                let mut term = self.algebra.apply_sigma_pow(p - b, c).mul(d);
                let idx = if k >= p {
                    term = term.scale(beta);
                    k - p
                } else {
                    k
                };
                coords[idx] = coords[idx].add(&term);
            }
        }
        Ok(self.algebra.element(coords))
    }

    /// Right multiplication by a field element: (∑ jᵏcₖ)·d = ∑ jᵏ(cₖd).
    pub fn scale_field(&self, d: &NFElement) -> AlgElement {
        self.algebra
            .element(self.coords.iter().map(|c| c.mul(d)).collect())
    }

    pub fn scale_rational(&self, c: &Rational) -> AlgElement {
        self.algebra
            .element(self.coords.iter().map(|a| a.scale(c)).collect())
    }

    pub fn pow(&self, e: u32) -> AlgElement {
        let mut acc = self.algebra.one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Matrix of left multiplication by self on D as a right K-space with
    /// basis (j⁰, …, j^{p−1}): column b holds the coordinates of self·jᵇ.
    #[allow(clippy::needless_range_loop)]
    pub fn left_regular_matrix(&self) -> Vec<Vec<NFElement>> {
        let p = self.algebra.degree();
        let beta = self.algebra.beta();
        let mut mat = vec![vec![self.algebra.field().zero(); p]; p];
        for b in 0..p {
            for (a, c) in self.coords.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let k = a + b;
                let mut entry = self.algebra.apply_sigma_pow(p - b, c);
                let row = if k >= p {
                    entry = entry.scale(beta);
                    k - p
                } else {
                    k
                };
                mat[row][b] = mat[row][b].add(&entry);
            }
        }
        mat
    }

    /// Determinant of the left-regular matrix; lands in ℚ.
    pub fn reduced_norm(&self) -> Result<Rational, Error> {
        let det = det_over_field(self.algebra.field(), self.left_regular_matrix())?;
        det.as_rational().ok_or(Error::ReducedNormNotRational)
    }

    /// Trace of the left-regular matrix; lands in ℚ.
    pub fn reduced_trace(&self) -> Result<Rational, Error> {
        let mat = self.left_regular_matrix();
        let mut tr = self.algebra.field().zero();
        for (k, row) in mat.iter().enumerate() {
            tr = tr.add(&row[k]);
        }
        tr.as_rational().ok_or(Error::ReducedNormNotRational)
    }

    /// Two-sided inverse, by solving the left-regular system over K.
    pub fn inverse(&self) -> Result<AlgElement, Error> {
        if self.is_one() {
            return Ok(self.clone());
        }
        let p = self.algebra.degree();
        let mat = self.left_regular_matrix();
        let mut rhs = vec![self.algebra.field().zero(); p];
        rhs[0] = self.algebra.field().one();
        let sol = solve_over_field(self.algebra.field(), mat, rhs)?.ok_or(Error::NotInvertible)?;
        let inv = self.algebra.element(sol);
        if !self.mul(&inv).is_one() || !inv.mul(self).is_one() {
            return Err(Error::internal("inverse verification failed"));
        }
        Ok(inv)
    }

    /// Flattens to p² rational coordinates (j-power major, t-power minor).
    pub fn flatten(&self) -> Vec<Rational> {
        let p = self.algebra.degree();
        let mut out = Vec::with_capacity(p * p);
        for c in &self.coords {
            for l in 0..p {
                out.push(c.rep().coeff(l));
            }
        }
        out
    }

    /// Monic least-degree rational polynomial vanishing at self, found as
    /// the first linear dependence among 1, a, a², … in ℚ^{p²}.
    pub fn min_poly(&self) -> QPoly {
        let p = self.algebra.degree();
        let dim = p * p;
        let mut powers: Vec<AlgElement> = vec![self.algebra.one()];
        let mut cols: Vec<Vec<Rational>> = vec![powers[0].flatten()];
        for k in 1..=dim {
            let next = powers[k - 1].mul(self);
            let target = next.flatten();
            if let Some(lambda) = solve_columns(&cols, &target) {
                // a^k = Σ λ_i a^i  ⇒  min poly = x^k − Σ λ_i x^i.
                let mut coeffs: Vec<Rational> = lambda.into_iter().map(|l| -&l).collect();
                coeffs.push(Rational::one());
                return QPoly::new(coeffs);
            }
            powers.push(next);
            cols.push(target);
        }
        unreachable!("powers of an element cannot stay independent past dim");
    }

    /// Coordinates (λ₀…λ_{p−1}) with self = ∑ λₖ jᵏ, if self lies in the
    /// ℚ-span of the powers of j. Since the jᵏ are basis vectors with
    /// K-coefficients, this holds iff every coordinate is rational.
    pub fn in_f_of_j(&self) -> Option<Vec<Rational>> {
        let mut out = Vec::with_capacity(self.coords.len());
        for c in &self.coords {
            out.push(c.as_rational()?);
        }
        Some(out)
    }

    /// Serializes as p rows of p rational strings (row k = coefficient of
    /// jᵏ, ascending powers of t).
    pub fn to_string_matrix(&self) -> Vec<Vec<String>> {
        let p = self.algebra.degree();
        self.coords
            .iter()
            .map(|c| (0..p).map(|l| c.rep().coeff(l).to_string()).collect())
            .collect()
    }

    pub fn from_string_matrix(alg: &CyclicAlgebra, rows: &[Vec<String>]) -> Result<Self, Error> {
        let p = alg.degree();
        if rows.len() != p {
            return Err(Error::Parse(format!("expected {p} coordinate rows")));
        }
        let mut coords = Vec::with_capacity(p);
        for row in rows {
            if row.len() > p {
                return Err(Error::Parse(format!("coordinate row longer than {p}")));
            }
            let mut coeffs = Vec::with_capacity(row.len());
            for s in row {
                coeffs.push(s.parse::<Rational>()?);
            }
            coords.push(alg.field().element(QPoly::new(coeffs)));
        }
        Ok(alg.element(coords))
    }
}

impl fmt::Display for AlgElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let rep = c.rep().display_var("t");
                match k {
                    0 => rep,
                    1 if c.is_one() => "j".into(),
                    1 => format!("({rep})*j"),
                    _ if c.is_one() => format!("j^{k}"),
                    _ => format!("({rep})*j^{k}"),
                }
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// Exact determinant over K by Gaussian elimination.
#[allow(clippy::needless_range_loop)]
fn det_over_field(field: &NumberField, mut mat: Vec<Vec<NFElement>>) -> Result<NFElement, Error> {
    let n = mat.len();
    let mut det = field.one();
    let mut negate = false;
    for col in 0..n {
        let pivot_row = match (col..n).find(|&r| !mat[r][col].is_zero()) {
            Some(r) => r,
            None => return Ok(field.zero()),
        };
        if pivot_row != col {
            mat.swap(pivot_row, col);
            negate = !negate;
        }
        let pivot = mat[col][col].clone();
        det = det.mul(&pivot);
        let pivot_inv = pivot.inv()?;
        for row in col + 1..n {
            if mat[row][col].is_zero() {
                continue;
            }
            let factor = mat[row][col].mul(&pivot_inv);
            for k in col..n {
                let sub = factor.mul(&mat[col][k]);
                mat[row][k] = mat[row][k].sub(&sub);
            }
        }
    }
    Ok(if negate { det.neg() } else { det })
}

/// Solves mat·x = rhs over K. Ok(None) when the matrix is singular.
#[allow(clippy::needless_range_loop)]
fn solve_over_field(
    field: &NumberField,
    mut mat: Vec<Vec<NFElement>>,
    mut rhs: Vec<NFElement>,
) -> Result<Option<Vec<NFElement>>, Error> {
    let n = mat.len();
    let _ = field;
    for col in 0..n {
        let pivot_row = match (col..n).find(|&r| !mat[r][col].is_zero()) {
            Some(r) => r,
            None => return Ok(None),
        };
        mat.swap(pivot_row, col);
        rhs.swap(pivot_row, col);
        let pivot_inv = mat[col][col].inv()?;
        for k in col..n {
            mat[col][k] = mat[col][k].mul(&pivot_inv);
        }
        rhs[col] = rhs[col].mul(&pivot_inv);
        for row in 0..n {
            if row == col || mat[row][col].is_zero() {
                continue;
            }
            let factor = mat[row][col].clone();
            for k in col..n {
                let sub = factor.mul(&mat[col][k]);
                mat[row][k] = mat[row][k].sub(&sub);
            }
            let sub = factor.mul(&rhs[col]);
            rhs[row] = rhs[row].sub(&sub);
        }
    }
    Ok(Some(rhs))
}

/// Solves Σ λ_i·cols[i] = rhs over ℚ, if consistent.
#[allow(clippy::needless_range_loop)]
fn solve_columns(cols: &[Vec<Rational>], rhs: &[Rational]) -> Option<Vec<Rational>> {
    let rows = rhs.len();
    let n = cols.len();
    let mut mat: Vec<Vec<Rational>> = (0..rows)
        .map(|r| {
            let mut row: Vec<Rational> = cols.iter().map(|c| c[r].clone()).collect();
            row.push(rhs[r].clone());
            row
        })
        .collect();
    let mut pivots: Vec<usize> = Vec::new();
    let mut row = 0usize;
    for col in 0..n {
        let pivot_row = match (row..rows).find(|&r| !mat[r][col].is_zero()) {
            Some(r) => r,
            None => continue,
        };
        mat.swap(pivot_row, row);
        let inv = mat[row][col].inv().unwrap();
        for k in col..=n {
            mat[row][k] = &mat[row][k] * &inv;
        }
        for r in 0..rows {
            if r == row || mat[r][col].is_zero() {
                continue;
            }
            let factor = mat[r][col].clone();
            for k in col..=n {
                let sub = &factor * &mat[row][k];
                mat[r][k] = &mat[r][k] - &sub;
            }
        }
        pivots.push(col);
        row += 1;
        if row == rows {
            break;
        }
    }
    for r in row..rows {
        if !mat[r][n].is_zero() {
            return None;
        }
    }
    let mut sol = vec![Rational::zero(); n];
    for (r, &col) in pivots.iter().enumerate() {
        sol[col] = mat[r][n].clone();
    }
    // Exact recheck of the solution.
    for (r_idx, y) in rhs.iter().enumerate() {
        let mut acc = Rational::zero();
        for (i, c) in cols.iter().enumerate() {
            acc = &acc + &(&sol[i] * &c[r_idx]);
        }
        if &acc != y {
            return None;
        }
    }
    Some(sol)
}

/// Finds a nonzero rational kernel vector of the matrix whose columns are
/// given, or None when the kernel is trivial.
#[allow(clippy::needless_range_loop)]
fn kernel_vector(cols: &[Vec<Rational>], rows: usize) -> Option<Vec<Rational>> {
    let n = cols.len();
    let mut mat: Vec<Vec<Rational>> = (0..rows)
        .map(|r| cols.iter().map(|c| c[r].clone()).collect())
        .collect();
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; n];
    let mut row = 0usize;
    for col in 0..n {
        let pivot_row = match (row..rows).find(|&r| !mat[r][col].is_zero()) {
            Some(r) => r,
            None => continue,
        };
        mat.swap(pivot_row, row);
        let inv = mat[row][col].inv().unwrap();
        for k in col..n {
            mat[row][k] = &mat[row][k] * &inv;
        }
        for r in 0..rows {
            if r == row || mat[r][col].is_zero() {
                continue;
            }
            let factor = mat[r][col].clone();
            for k in col..n {
                let sub = &factor * &mat[row][k];
                mat[r][k] = &mat[r][k] - &sub;
            }
        }
        pivot_of_col[col] = Some(row);
        row += 1;
        if row == rows {
            break;
        }
    }
    let free_col = pivot_of_col.iter().position(Option::is_none)?;
    let mut vec = vec![Rational::zero(); n];
    vec[free_col] = Rational::one();
    for (col, pivot) in pivot_of_col.iter().enumerate() {
        if let Some(r) = pivot {
            vec[col] = -&mat[*r][free_col];
        }
    }
    Some(vec)
}

/// Finds invertible c with c·a = r·c, by solving X·a − r·X = 0 over the
/// rational basis of D.
pub fn conjugating_element(a: &AlgElement, r: &AlgElement) -> Result<AlgElement, Error> {
    a.check_algebra(r)?;
    let alg = a.algebra();
    let p = alg.degree();
    let dim = p * p;
    let mut cols = Vec::with_capacity(dim);
    let mut basis = Vec::with_capacity(dim);
    for k in 0..p {
        for l in 0..p {
            let mut coords = vec![alg.field().zero(); p];
            coords[k] = alg.field().element(QPoly::monomial(Rational::one(), l));
            let e = alg.element(coords);
            let image = e.mul(a).sub(&r.mul(&e));
            cols.push(image.flatten());
            basis.push(e);
        }
    }
    let combo = kernel_vector(&cols, dim).ok_or(Error::NotConjugate)?;
    let mut c = alg.zero();
    for (lambda, e) in combo.iter().zip(&basis) {
        if !lambda.is_zero() {
            c = c.add(&e.scale_rational(lambda));
        }
    }
    if c.is_zero() {
        return Err(Error::NotConjugate);
    }
    if c.mul(a) != r.mul(&c) {
        return Err(Error::internal("conjugator fails its defining identity"));
    }
    if c.reduced_norm()?.is_zero() {
        return Err(Error::NotInvertible);
    }
    Ok(c)
}

/// With N(t) = β⁻¹ and u = t·j: verifies uᵖ = 1 and returns the zero-divisor
/// pair (u − 1, 1 + u + … + u^{p−1}), whose product is exactly zero.
pub fn zero_divisor_witness(
    alg: &CyclicAlgebra,
    t: &NFElement,
) -> Result<(AlgElement, AlgElement), Error> {
    let norm = field_norm(alg.sigma(), t)?;
    let beta_inv = alg.beta().inv().ok_or(Error::ZeroBeta)?;
    if norm != beta_inv {
        return Err(Error::NormPrecondition);
    }
    let p = alg.degree();
    let u = alg.embed_field(t.clone()).mul(&alg.gen_j());
    if !u.pow(p as u32).is_one() {
        return Err(Error::internal("(t·j)^p must be N(t)·β = 1"));
    }
    let u_minus_1 = u.sub(&alg.one());
    let mut cofactor = alg.one();
    let mut u_pow = alg.one();
    for _ in 1..p {
        u_pow = u_pow.mul(&u);
        cofactor = cofactor.add(&u_pow);
    }
    if u_minus_1.is_zero() || cofactor.is_zero() {
        return Err(Error::WitnessDegenerate);
    }
    if !u_minus_1.mul(&cofactor).is_zero() {
        return Err(Error::internal(
            "telescoping product (u−1)(1+…+u^{p−1}) ≠ 0",
        ));
    }
    Ok((u_minus_1, cofactor))
}

/// Certificate that D is a division algebra: q stays inert in K (m mod q
/// irreducible and separable) while v_q(β) is not a multiple of p, so β is
/// not a norm from K and the algebra has no zero divisors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisionWitness {
    pub prime_q: u64,
    pub residual_factor: FFPoly,
    pub beta_valuation: i64,
}

impl DivisionWitness {
    /// Rechecks the certificate against an algebra.
    pub fn verify(&self, alg: &CyclicAlgebra) -> bool {
        match division_witness(alg, self.prime_q) {
            Ok(Some(w)) => w == *self,
            _ => false,
        }
    }
}

/// Attempts to certify division at the prime q. Returns Ok(None) when q
/// does not certify (bad reduction, reducible residual, or p | v_q(β)).
pub fn division_witness(alg: &CyclicAlgebra, q: u64) -> Result<Option<DivisionWitness>, Error> {
    if !is_prime_u64(q) {
        return Err(Error::NotPrime(q));
    }
    let p = alg.degree();
    let m = alg.field().modulus();
    // Reduction must be defined: no coefficient denominator divisible by q.
    let qb = num_bigint::BigInt::from(q);
    for c in m.coeffs() {
        if (c.denominator() % &qb).is_zero() {
            return Ok(None);
        }
    }
    let residual = ffpoly_from_qpoly(m, q);
    if residual.degree() != Some(p) {
        return Ok(None);
    }
    // Separability (automatic for irreducibles over a finite field, but
    // checked as stated).
    let deriv = residual.derivative();
    if deriv.is_zero() || residual.gcd(&deriv)?.degree() != Some(0) {
        return Ok(None);
    }
    if !residual.is_irreducible()? {
        return Ok(None);
    }
    let v = alg.beta().valuation(q)?;
    if v.rem_euclid(p as i64) == 0 {
        return Ok(None);
    }
    Ok(Some(DivisionWitness {
        prime_q: q,
        residual_factor: residual,
        beta_valuation: v,
    }))
}

/// Reduces a rational polynomial mod q (denominators invertible mod q).
fn ffpoly_from_qpoly(f: &QPoly, q: u64) -> FFPoly {
    use num_traits::ToPrimitive;
    let qb = num_bigint::BigInt::from(q);
    let coeffs: Vec<u64> = f
        .coeffs()
        .iter()
        .map(|c| {
            let num = num_integer::Integer::mod_floor(c.numerator(), &qb)
                .to_u64()
                .unwrap();
            let den = num_integer::Integer::mod_floor(c.denominator(), &qb)
                .to_u64()
                .unwrap();
            let mut inv = 1u64;
            let mut base = den % q;
            let mut e = q - 2;
            while e > 0 {
                if e & 1 == 1 {
                    inv = (inv as u128 * base as u128 % q as u128) as u64;
                }
                base = (base as u128 * base as u128 % q as u128) as u64;
                e >>= 1;
            }
            (num as u128 * inv as u128 % q as u128) as u64
        })
        .collect();
    FFPoly::new_unchecked(q, coeffs)
}

/// Scans small primes (an optional hint first) for a division witness.
pub fn certify_division(
    alg: &CyclicAlgebra,
    hint: Option<u64>,
    bound: u64,
) -> Result<Option<DivisionWitness>, Error> {
    if let Some(q) = hint {
        if let Some(w) = division_witness(alg, q)? {
            return Ok(Some(w));
        }
    }
    let mut q = 2u64;
    while q < bound {
        if is_prime_u64(q) {
            if let Some(w) = division_witness(alg, q)? {
                return Ok(Some(w));
            }
        }
        q += 1;
    }
    Ok(None)
}
