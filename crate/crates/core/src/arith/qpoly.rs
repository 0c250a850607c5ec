//! Dense univariate polynomials over the rationals, coefficients in
//! ascending degree. The zero polynomial is the empty coefficient vector.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Rational;
use crate::error::Error;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: Vec<Rational>,
}

impl QPoly {
    /// Builds a polynomial from ascending coefficients, trimming leading zeros.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn zero() -> Self {
        QPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        QPoly::constant(Rational::one())
    }

    pub fn x() -> Self {
        QPoly::new(vec![Rational::zero(), Rational::one()])
    }

    pub fn constant(c: Rational) -> Self {
        QPoly::new(vec![c])
    }

    pub fn monomial(c: Rational, deg: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); deg];
        coeffs.push(c);
        QPoly::new(coeffs)
    }

    /// Convenience constructor from small integers, ascending degree.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        QPoly::new(coeffs.iter().map(|&c| Rational::from_int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of x^k (zero beyond the stored length).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(Rational::is_one)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return QPoly::zero();
        }
        QPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => QPoly::zero(),
            Some(lc) => self.scale(&lc.inv().unwrap()),
        }
    }

    pub fn derivative(&self) -> Self {
        QPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * &Rational::from_int(k as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * x + c;
        }
        acc
    }

    /// Euclidean division: a = q·b + r with deg r < deg b.
    pub fn divmod(&self, b: &QPoly) -> Result<(QPoly, QPoly), Error> {
        let db = b.degree().ok_or(Error::DivisionByZeroPoly)?;
        let lb_inv = b.leading_coeff().unwrap().inv().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= db {
            return Ok((QPoly::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - db];
        while rem.len() > db {
            let d = rem.len() - 1;
            let c = &rem[d] * &lb_inv;
            if !c.is_zero() {
                for (k, bc) in b.coeffs.iter().enumerate() {
                    let idx = d - db + k;
                    rem[idx] = &rem[idx] - &(&c * bc);
                }
            }
            quot[d - db] = c;
            rem.pop();
            while rem.last().is_some_and(Rational::is_zero) {
                rem.pop();
            }
        }
        Ok((QPoly::new(quot), QPoly::new(rem)))
    }

    /// Exact division; error is internal because callers only divide known factors.
    pub fn exact_div(&self, b: &QPoly) -> Result<QPoly, Error> {
        let (q, r) = self.divmod(b)?;
        if !r.is_zero() {
            return Err(Error::internal("exact_div left a remainder"));
        }
        Ok(q)
    }

    /// Monic greatest common divisor. Errors when both inputs are zero.
    pub fn gcd(&self, other: &QPoly) -> Result<QPoly, Error> {
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
        Ok(a.monic())
    }

    /// Extended gcd: returns (g, u, v) with g monic and u·a + v·b = g.
    pub fn xgcd(&self, other: &QPoly) -> Result<(QPoly, QPoly, QPoly), Error> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdBothZero);
        }
        let mut r0 = self.clone();
        let mut r1 = other.clone();
        let mut u0 = QPoly::one();
        let mut u1 = QPoly::zero();
        let mut v0 = QPoly::zero();
        let mut v1 = QPoly::one();
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1)?;
            let u = &u0 - &(&q * &u1);
            let v = &v0 - &(&q * &v1);
            r0 = r1;
            r1 = r;
            u0 = u1;
            u1 = u;
            v0 = v1;
            v1 = v;
        }
        let lc_inv = r0.leading_coeff().unwrap().inv().unwrap();
        Ok((r0.scale(&lc_inv), u0.scale(&lc_inv), v0.scale(&lc_inv)))
    }

    /// True iff gcd with the derivative is constant.
    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None | Some(0) => true,
            _ => self
                .gcd(&self.derivative())
                .map(|g| g.is_constant())
                .unwrap_or(false),
        }
    }

    /// Squarefree decomposition by Yun's algorithm: returns monic pairs
    /// (part, multiplicity) with the input equal to lc · ∏ part^mult.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(QPoly, usize)>, Error> {
        let f = self.monic();
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
            let diff = &w - &v.derivative();
            if diff.is_zero() {
                if v.degree().unwrap_or(0) > 0 {
                    out.push((v.monic(), i));
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

    /// Clears denominators and integer content: returns (c, F) with
    /// self = c·F, F a primitive integer polynomial with positive leading
    /// coefficient.
    pub fn primitive_integer(&self) -> (Rational, Vec<BigInt>) {
        if self.is_zero() {
            return (Rational::one(), vec![]);
        }
        let mut den_lcm = BigInt::one();
        for c in &self.coeffs {
            let g = num_integer::Integer::gcd(&den_lcm, c.denominator());
            den_lcm = &den_lcm / &g * c.denominator();
        }
        let mut ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numerator() * (&den_lcm / c.denominator()))
            .collect();
        let mut content = BigInt::zero();
        for c in &ints {
            content = num_integer::Integer::gcd(&content, c);
        }
        if ints.last().unwrap().is_negative() {
            content = -content;
        }
        for c in ints.iter_mut() {
            *c = &*c / &content;
        }
        (Rational::new(content, den_lcm), ints)
    }

    pub fn from_integer_coeffs(coeffs: &[BigInt]) -> Self {
        QPoly::new(
            coeffs
                .iter()
                .map(|c| Rational::new(c.clone(), BigInt::one()))
                .collect(),
        )
    }

    /// Renders the polynomial in the given variable, e.g. "x^2 - 2".
    pub fn display_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts: Vec<String> = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let body = match (k, mag.is_one()) {
                (0, _) => mag.to_string(),
                (1, true) => var.to_string(),
                (1, false) => format!("{mag}*{var}"),
                (_, true) => format!("{var}^{k}"),
                (_, false) => format!("{mag}*{var}^{k}"),
            };
            if parts.is_empty() {
                parts.push(if c < &Rational::zero() {
                    format!("-{body}")
                } else {
                    body
                });
            } else {
                parts.push(format!(
                    "{} {}",
                    if c < &Rational::zero() { "-" } else { "+" },
                    body
                ));
            }
        }
        parts.join(" ")
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_var("x"))
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::new((0..n).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect())
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::new((0..n).map(|k| &self.coeff(k) - &rhs.coeff(k)).collect())
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        QPoly::new(out)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_poly_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for QPoly {
            type Output = QPoly;
            fn $method(self, rhs: QPoly) -> QPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&QPoly> for QPoly {
            type Output = QPoly;
            fn $method(self, rhs: &QPoly) -> QPoly {
                (&self).$method(rhs)
            }
        }
        impl $trait<QPoly> for &QPoly {
            type Output = QPoly;
            fn $method(self, rhs: QPoly) -> QPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_poly_binop!(Add, add);
forward_poly_binop!(Sub, sub);
forward_poly_binop!(Mul, mul);

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        -&self
    }
}

/// Determinant of the Sylvester matrix of (a, b), both nonzero.
pub fn resultant(a: &QPoly, b: &QPoly) -> Result<Rational, Error> {
    let m = a.degree().ok_or(Error::ResultantZeroInput)?;
    let n = b.degree().ok_or(Error::ResultantZeroInput)?;
    let size = m + n;
    if size == 0 {
        // Two nonzero constants: empty Sylvester matrix.
        return Ok(Rational::one());
    }
    let mut mat = vec![vec![Rational::zero(); size]; size];
    // n rows of a's coefficients, descending degree, shifted right.
    for row in 0..n {
        for k in 0..=m {
            mat[row][row + k] = a.coeff(m - k);
        }
    }
    // m rows of b's coefficients.
    for row in 0..m {
        for k in 0..=n {
            mat[n + row][row + k] = b.coeff(n - k);
        }
    }
    Ok(determinant(mat))
}

/// Exact determinant by Gaussian elimination with pivoting.
#[allow(clippy::needless_range_loop)]
pub(crate) fn determinant(mut mat: Vec<Vec<Rational>>) -> Rational {
    let n = mat.len();
    let mut det = Rational::one();
    for col in 0..n {
        let pivot_row = match (col..n).find(|&r| !mat[r][col].is_zero()) {
            Some(r) => r,
            None => return Rational::zero(),
        };
        if pivot_row != col {
            mat.swap(pivot_row, col);
            det = -det;
        }
        let pivot = mat[col][col].clone();
        det = &det * &pivot;
        let pivot_inv = pivot.inv().unwrap();
        for row in col + 1..n {
            if mat[row][col].is_zero() {
                continue;
            }
            let factor = &mat[row][col] * &pivot_inv;
            for k in col..n {
                let sub = &factor * &mat[col][k];
                mat[row][k] = &mat[row][k] - &sub;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::super::Rational;
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn divmod_exact_factorization() {
        // (x²−1, x−1) → (x+1, 0)
        let a = QPoly::from_ints(&[-1, 0, 1]);
        let b = QPoly::from_ints(&[-1, 1]);
        let (quot, rem) = a.divmod(&b).unwrap();
        assert_eq!(quot, QPoly::from_ints(&[1, 1]));
        assert!(rem.is_zero());
    }

    #[test]
    fn divmod_monomials() {
        // (x³, x) → (x², 0)
        let (quot, rem) = QPoly::monomial(q(1), 3).divmod(&QPoly::x()).unwrap();
        assert_eq!(quot, QPoly::monomial(q(1), 2));
        assert!(rem.is_zero());
    }

    #[test]
    fn divmod_with_remainder() {
        // (x²+1, x−1) → (x+1, 2); oracle: multiply back and compare.
        let a = QPoly::from_ints(&[1, 0, 1]);
        let b = QPoly::from_ints(&[-1, 1]);
        let (quot, rem) = a.divmod(&b).unwrap();
        assert_eq!(quot, QPoly::from_ints(&[1, 1]));
        assert_eq!(rem, QPoly::from_ints(&[2]));
        assert_eq!(&(&quot * &b) + &rem, a);
    }

    #[test]
    fn divmod_by_zero_errors() {
        assert!(QPoly::one().divmod(&QPoly::zero()).is_err());
    }

    #[test]
    fn gcd_examples() {
        let a = QPoly::from_ints(&[-1, 0, 1]);
        let b = QPoly::from_ints(&[-1, 1]);
        assert_eq!(a.gcd(&b).unwrap(), b);

        // (x²+1, x²+2) → 1; oracle: resultant ≠ 0 means no common root.
        let c = QPoly::from_ints(&[1, 0, 1]);
        let d = QPoly::from_ints(&[2, 0, 1]);
        assert!(!resultant(&c, &d).unwrap().is_zero());
        assert_eq!(c.gcd(&d).unwrap(), QPoly::one());

        // (f, 0) → monic(f)
        let f = QPoly::from_ints(&[2, 0, 4]);
        assert_eq!(f.gcd(&QPoly::zero()).unwrap(), f.monic());
        assert!(QPoly::zero().gcd(&QPoly::zero()).is_err());
    }

    #[test]
    fn xgcd_identity() {
        let a = QPoly::from_ints(&[-1, -2, 1, 1]);
        let b = QPoly::from_ints(&[3, 1, 2]);
        let (g, u, v) = a.xgcd(&b).unwrap();
        assert_eq!(&(&u * &a) + &(&v * &b), g);
    }

    #[test]
    fn resultant_linear_pair() {
        // (x−1, x−2): 2×2 Sylvester determinant oracle [[1,−1],[1,−2]] → −1.
        let a = QPoly::from_ints(&[-1, 1]);
        let b = QPoly::from_ints(&[-2, 1]);
        let oracle = determinant(vec![vec![q(1), q(-1)], vec![q(1), q(-2)]]);
        assert_eq!(oracle, q(-1));
        assert_eq!(resultant(&a, &b).unwrap(), q(-1));
    }

    #[test]
    fn resultant_quadratic_pair() {
        // (x²−2, x²−3): 4×4 Sylvester determinant oracle.
        let a = QPoly::from_ints(&[-2, 0, 1]);
        let b = QPoly::from_ints(&[-3, 0, 1]);
        let oracle = determinant(vec![
            vec![q(1), q(0), q(-2), q(0)],
            vec![q(0), q(1), q(0), q(-2)],
            vec![q(1), q(0), q(-3), q(0)],
            vec![q(0), q(1), q(0), q(-3)],
        ]);
        assert_eq!(resultant(&a, &b).unwrap(), oracle);
        assert_eq!(resultant(&a, &b).unwrap(), q(1));
    }

    #[test]
    fn resultant_constant_convention() {
        // (a, 1) → 1 (empty product).
        let a = QPoly::from_ints(&[5, 1, 7]);
        assert_eq!(resultant(&a, &QPoly::one()).unwrap(), q(1));
        assert!(resultant(&a, &QPoly::zero()).is_err());
    }

    #[test]
    fn squarefree_decomposition_recovers_multiplicities() {
        // (x−1)²(x+2)³
        let f1 = QPoly::from_ints(&[-1, 1]);
        let f2 = QPoly::from_ints(&[2, 1]);
        let f = &(&f1 * &f1) * &(&(&f2 * &f2) * &f2);
        let parts = f.squarefree_decomposition().unwrap();
        assert_eq!(parts, vec![(f1, 2), (f2, 3)]);
    }

    #[test]
    fn primitive_integer_normalization() {
        let f = QPoly::new(vec![
            "1/2".parse().unwrap(),
            "3/4".parse().unwrap(),
            "-1".parse().unwrap(),
        ]);
        let (c, ints) = f.primitive_integer();
        let back = QPoly::from_integer_coeffs(&ints).scale(&c);
        assert_eq!(back, f);
        assert_eq!(
            ints,
            vec![BigInt::from(-2), BigInt::from(-3), BigInt::from(4)]
        );
    }

    fn any_poly(max_deg: usize) -> impl Strategy<Value = QPoly> {
        prop::collection::vec((-9i64..10, 1i64..5), 0..=max_deg + 1).prop_map(|cs| {
            QPoly::new(
                cs.into_iter()
                    .map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
                    .collect(),
            )
        })
    }

    proptest! {
        #[test]
        fn divmod_round_trip(a in any_poly(8), b in any_poly(5)) {
            prop_assume!(!b.is_zero());
            let (quot, rem) = a.divmod(&b).unwrap();
            prop_assert_eq!(&(&quot * &b) + &rem, a);
            prop_assert!(rem.degree().is_none_or(|dr| dr < b.degree().unwrap()));
        }

        #[test]
        fn resultant_zero_iff_common_factor(a in any_poly(5), b in any_poly(5)) {
            prop_assume!(!a.is_zero() && !b.is_zero());
            let res = resultant(&a, &b).unwrap();
            let g = a.gcd(&b).unwrap();
            prop_assert_eq!(res.is_zero(), !g.is_constant());
        }
    }
}
