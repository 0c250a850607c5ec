//! Dense polynomials over the prime field F_p, used by the factorization
//! subroutines (distinct-degree / Cantor–Zassenhaus splitting) and by the
//! division certificates.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::rng::SplitMix64;

/// Deterministic Miller–Rabin, valid for all u64.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    let pow = |base: u64, mut exp: u64| -> u64 {
        let m = n as u128;
        let mut acc: u128 = 1;
        let mut b = base as u128 % m;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * b % m;
            }
            b = b * b % m;
            exp >>= 1;
        }
        acc as u64
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = ((x as u128 * x as u128) % n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FFPoly {
    p: u64,
    coeffs: Vec<u64>,
}

impl FFPoly {
    /// Builds a polynomial over F_p from ascending residues. Errors unless p is prime.
    pub fn new(p: u64, coeffs: Vec<u64>) -> Result<Self, Error> {
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Self::new_unchecked(p, coeffs))
    }

    pub(crate) fn new_unchecked(p: u64, coeffs: Vec<u64>) -> Self {
        let mut coeffs: Vec<u64> = coeffs.into_iter().map(|c| c % p).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FFPoly { p, coeffs }
    }

    pub fn zero(p: u64) -> Self {
        FFPoly { p, coeffs: vec![] }
    }

    pub fn one(p: u64) -> Self {
        FFPoly::new_unchecked(p, vec![1])
    }

    pub fn x(p: u64) -> Self {
        FFPoly::new_unchecked(p, vec![0, 1])
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> u64 {
        self.coeffs.get(k).copied().unwrap_or(0)
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

    pub fn leading_coeff(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    fn mul_mod(&self, a: u64, b: u64) -> u64 {
        (a as u128 * b as u128 % self.p as u128) as u64
    }

    fn inv_mod(&self, a: u64) -> u64 {
        let (mut t, mut new_t): (i128, i128) = (0, 1);
        let (mut r, mut new_r): (i128, i128) = (self.p as i128, (a % self.p) as i128);
        while new_r != 0 {
            let q = r / new_r;
            (t, new_t) = (new_t, t - q * new_t);
            (r, new_r) = (new_r, r - q * new_r);
        }
        assert_eq!(r, 1, "not invertible mod p");
        t.rem_euclid(self.p as i128) as u64
    }

    pub fn add(&self, rhs: &FFPoly) -> FFPoly {
        assert_eq!(self.p, rhs.p);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        FFPoly::new_unchecked(
            self.p,
            (0..n)
                .map(|k| (self.coeff(k) + rhs.coeff(k)) % self.p)
                .collect(),
        )
    }

    pub fn sub(&self, rhs: &FFPoly) -> FFPoly {
        assert_eq!(self.p, rhs.p);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        FFPoly::new_unchecked(
            self.p,
            (0..n)
                .map(|k| (self.coeff(k) + self.p - rhs.coeff(k)) % self.p)
                .collect(),
        )
    }

    pub fn mul(&self, rhs: &FFPoly) -> FFPoly {
        assert_eq!(self.p, rhs.p);
        if self.is_zero() || rhs.is_zero() {
            return FFPoly::zero(self.p);
        }
        let mut out = vec![0u64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + self.mul_mod(a, b)) % self.p;
            }
        }
        FFPoly::new_unchecked(self.p, out)
    }

    pub fn scale(&self, c: u64) -> FFPoly {
        FFPoly::new_unchecked(
            self.p,
            self.coeffs.iter().map(|&a| self.mul_mod(a, c)).collect(),
        )
    }

    pub fn monic(&self) -> FFPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(self.inv_mod(self.leading_coeff()))
    }

    pub fn divmod(&self, b: &FFPoly) -> Result<(FFPoly, FFPoly), Error> {
        assert_eq!(self.p, b.p);
        let db = b.degree().ok_or(Error::DivisionByZeroPoly)?;
        let lb_inv = self.inv_mod(b.leading_coeff());
        let mut rem = self.coeffs.clone();
        if rem.len() <= db {
            return Ok((FFPoly::zero(self.p), self.clone()));
        }
        let mut quot = vec![0u64; rem.len() - db];
        while rem.len() > db {
            let d = rem.len() - 1;
            let c = self.mul_mod(rem[d], lb_inv);
            if c != 0 {
                for (k, &bc) in b.coeffs.iter().enumerate() {
                    let idx = d - db + k;
                    rem[idx] = (rem[idx] + self.p - self.mul_mod(c, bc)) % self.p;
                }
            }
            quot[d - db] = c;
            rem.pop();
            while rem.last() == Some(&0) {
                rem.pop();
            }
        }
        Ok((
            FFPoly::new_unchecked(self.p, quot),
            FFPoly::new_unchecked(self.p, rem),
        ))
    }

    pub fn exact_div(&self, b: &FFPoly) -> Result<FFPoly, Error> {
        let (q, r) = self.divmod(b)?;
        if !r.is_zero() {
            return Err(Error::internal("exact_div over F_p left a remainder"));
        }
        Ok(q)
    }

    pub fn gcd(&self, other: &FFPoly) -> Result<FFPoly, Error> {
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

    /// Extended gcd: (g, u, v) with u·a + v·b = g monic.
    pub fn xgcd(&self, other: &FFPoly) -> Result<(FFPoly, FFPoly, FFPoly), Error> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdBothZero);
        }
        let p = self.p;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut u0, mut u1) = (FFPoly::one(p), FFPoly::zero(p));
        let (mut v0, mut v1) = (FFPoly::zero(p), FFPoly::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1)?;
            let u = u0.sub(&q.mul(&u1));
            let v = v0.sub(&q.mul(&v1));
            (r0, r1) = (r1, r);
            (u0, u1) = (u1, u);
            (v0, v1) = (v1, v);
        }
        let lc_inv = self.inv_mod(r0.leading_coeff());
        Ok((r0.scale(lc_inv), u0.scale(lc_inv), v0.scale(lc_inv)))
    }

    pub fn derivative(&self) -> FFPoly {
        FFPoly::new_unchecked(
            self.p,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| self.mul_mod(c, (k as u64) % self.p))
                .collect(),
        )
    }

    pub fn eval(&self, x: u64) -> u64 {
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = (self.mul_mod(acc, x) + c) % self.p;
        }
        acc
    }

    /// self^e mod f, with a big-integer exponent.
    pub fn powmod(&self, e: &BigUint, f: &FFPoly) -> Result<FFPoly, Error> {
        let mut base = self.divmod(f)?.1;
        let mut acc = FFPoly::one(self.p);
        let mut e = e.clone();
        while !e.is_zero() {
            if (&e % 2u32) == BigUint::one() {
                acc = acc.mul(&base).divmod(f)?.1;
            }
            base = base.mul(&base).divmod(f)?.1;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Deterministic irreducibility test (Rabin): x^{p^n} ≡ x mod f and
    /// gcd(x^{p^{n/q}} − x, f) = 1 for every prime q dividing n.
    pub fn is_irreducible(&self) -> Result<bool, Error> {
        let n = match self.degree() {
            None | Some(0) => return Ok(false),
            Some(1) => return Ok(true),
            Some(n) => n,
        };
        let f = self.monic();
        let x = FFPoly::x(self.p);
        let q_big = BigUint::from(self.p);
        for d in prime_divisors(n) {
            let e = q_big.pow((n / d) as u32);
            let xe = x.powmod(&e, &f)?;
            let g = f.gcd(&xe.sub(&x))?;
            if g.degree() != Some(0) {
                return Ok(false);
            }
        }
        let e = q_big.pow(n as u32);
        let xe = x.powmod(&e, &f)?;
        Ok(xe == x.divmod(&f)?.1)
    }

    /// Squarefree decomposition over F_p: monic parts with multiplicities.
    fn squarefree_decomposition(&self) -> Result<Vec<(FFPoly, usize)>, Error> {
        let f = self.monic();
        if f.is_constant() {
            return Ok(vec![]);
        }
        let df = f.derivative();
        if df.is_zero() {
            // f = g(x)^p over F_p.
            let inner = f.pth_root().squarefree_decomposition()?;
            return Ok(inner
                .into_iter()
                .map(|(g, m)| (g, m * self.p as usize))
                .collect());
        }
        let mut out = Vec::new();
        let mut c = f.gcd(&df)?;
        let mut w = f.exact_div(&c)?;
        let mut i = 1usize;
        while !w.is_constant() {
            let y = w.gcd(&c)?;
            let z = w.exact_div(&y)?;
            if !z.is_constant() {
                out.push((z, i));
            }
            c = c.exact_div(&y)?;
            w = y;
            i += 1;
        }
        if !c.is_constant() {
            // Remaining part is a p-th power.
            for (g, m) in c.pth_root().squarefree_decomposition()? {
                out.push((g, m * self.p as usize));
            }
        }
        Ok(out)
    }

    /// p-th root of a polynomial with zero derivative: keep indices divisible by p.
    fn pth_root(&self) -> FFPoly {
        let step = self.p as usize;
        FFPoly::new_unchecked(self.p, self.coeffs.iter().step_by(step).copied().collect())
    }

    /// Distinct-degree decomposition of a monic squarefree polynomial:
    /// pairs (product of all irreducible factors of degree d, d).
    fn distinct_degree(&self) -> Result<Vec<(FFPoly, usize)>, Error> {
        let mut out = Vec::new();
        let mut f = self.monic();
        let x = FFPoly::x(self.p);
        let mut h = x.divmod(&f)?.1;
        let mut d = 0usize;
        while f.degree().unwrap_or(0) >= 2 * (d + 1) {
            d += 1;
            h = h.powmod(&BigUint::from(self.p), &f)?;
            let g = f.gcd(&h.sub(&x))?;
            if g.degree().unwrap_or(0) > 0 {
                out.push((g.clone(), d));
                f = f.exact_div(&g)?;
                h = h.divmod(&f)?.1;
            }
        }
        if f.degree().unwrap_or(0) > 0 {
            let deg = f.degree().unwrap();
            out.push((f, deg));
        }
        Ok(out)
    }

    /// Cantor–Zassenhaus equal-degree splitting of a monic product of
    /// irreducible factors all of degree d.
    fn equal_degree(&self, d: usize, rng: &mut SplitMix64) -> Result<Vec<FFPoly>, Error> {
        let n = self.degree().unwrap_or(0);
        if n == d {
            return Ok(vec![self.monic()]);
        }
        let p = self.p;
        loop {
            let deg = 1 + rng.below((n as u64).max(2) - 1) as usize;
            let coeffs: Vec<u64> = (0..=deg).map(|_| rng.below(p)).collect();
            let h = FFPoly::new_unchecked(p, coeffs);
            if h.is_constant() {
                continue;
            }
            let g = self.gcd(&h)?;
            let cand = if g.degree().unwrap_or(0) > 0 {
                g
            } else if p == 2 {
                // Trace map over F_2: h + h² + h⁴ + … + h^{2^{d−1}}.
                let mut t = h.divmod(self)?.1;
                let mut acc = t.clone();
                for _ in 1..d {
                    t = t.mul(&t).divmod(self)?.1;
                    acc = acc.add(&t);
                }
                self.gcd(&acc)?
            } else {
                let e = (BigUint::from(p).pow(d as u32) - BigUint::one()) / BigUint::from(2u32);
                let w = h.powmod(&e, self)?;
                self.gcd(&w.sub(&FFPoly::one(p)))?
            };
            let dc = cand.degree().unwrap_or(0);
            if dc == 0 || dc == n {
                continue;
            }
            let rest = self.exact_div(&cand)?;
            let mut left = cand.equal_degree(d, rng)?;
            let mut right = rest.equal_degree(d, rng)?;
            left.append(&mut right);
            return Ok(left);
        }
    }

    /// Full factorization into monic irreducibles with multiplicities,
    /// using the given generator for equal-degree splitting. The factor
    /// list is sorted, so the output does not depend on the random path.
    pub fn factor_with(&self, rng: &mut SplitMix64) -> Result<Vec<(FFPoly, usize)>, Error> {
        if self.is_zero() {
            return Err(Error::FactorZeroInput);
        }
        let mut out: Vec<(FFPoly, usize)> = Vec::new();
        for (part, mult) in self.squarefree_decomposition()? {
            for (prod, d) in part.distinct_degree()? {
                for irr in prod.equal_degree(d, rng)? {
                    out.push((irr, mult));
                }
            }
        }
        out.sort_by(|a, b| {
            a.0.degree()
                .cmp(&b.0.degree())
                .then_with(|| a.0.coeffs.cmp(&b.0.coeffs))
        });
        Ok(out)
    }

    /// Factorization with a fixed internal seed; fully deterministic.
    pub fn factor(&self) -> Result<Vec<(FFPoly, usize)>, Error> {
        self.factor_with(&mut SplitMix64::new(0x5DEECE66D))
    }
}

fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl fmt::Display for FFPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0 (mod {})", self.p);
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| match k {
                0 => format!("{c}"),
                1 if c == 1 => "x".into(),
                1 => format!("{c}*x"),
                _ if c == 1 => format!("x^{k}"),
                _ => format!("{c}*x^{k}"),
            })
            .collect();
        write!(f, "{} (mod {})", terms.join(" + "), self.p)
    }
}
