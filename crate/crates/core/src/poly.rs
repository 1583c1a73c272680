//! Dense univariate polynomials over the integers.
//!
//! This is the arithmetic substrate for everything spectral: characteristic
//! polynomials, squarefree decomposition, Sturm chains. All operations are
//! exact; division-style operations either verify exactness or work with
//! pseudo-remainders that scale by a controlled positive factor.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// A polynomial with `BigInt` coefficients stored in ascending degree order
/// with no trailing zeros; the zero polynomial has an empty coefficient list.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactPolynomial {
    coeffs: Vec<BigInt>,
}

impl ExactPolynomial {
    pub fn zero() -> Self {
        ExactPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        ExactPolynomial {
            coeffs: vec![BigInt::one()],
        }
    }

    pub fn constant(c: BigInt) -> Self {
        ExactPolynomial { coeffs: vec![c] }.trimmed()
    }

    /// From ascending coefficients; trailing zeros are trimmed.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        ExactPolynomial { coeffs }.trimmed()
    }

    pub fn from_i64_coeffs(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The monomial `x^d`.
    pub fn monomial(d: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); d + 1];
        coeffs[d] = BigInt::one();
        ExactPolynomial { coeffs }
    }

    /// The linear polynomial `x - r`.
    pub fn x_minus(r: &BigInt) -> Self {
        ExactPolynomial {
            coeffs: vec![-r.clone(), BigInt::one()],
        }
    }

    fn trimmed(mut self) -> Self {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of a nonzero polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        matches!(self.coeffs.last(), Some(c) if c.is_one())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect();
        Self::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - other.coeff(i)).collect();
        Self::from_coeffs(coeffs)
    }

    pub fn neg(&self) -> Self {
        ExactPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        ExactPolynomial { coeffs }
    }

    pub fn mul_scalar(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        ExactPolynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        ExactPolynomial { coeffs }
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        Self::from_coeffs(coeffs)
    }

    pub fn evaluate(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn evaluate_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from(c.clone());
        }
        acc
    }

    /// Sign of the value at a rational point, computed homogeneously so no
    /// rational arithmetic is needed: for `x = p/q` in lowest terms with
    /// `q > 0`, the sign of `f(x)` equals the sign of `sum c_i p^i q^(d-i)`.
    pub fn sign_at(&self, x: &BigRational) -> i32 {
        if self.is_zero() {
            return 0;
        }
        let p = x.numer();
        let q = x.denom();
        debug_assert!(q.is_positive());
        let d = self.coeffs.len() - 1;
        let mut qpow = BigInt::one();
        let mut terms = vec![BigInt::zero(); d + 1];
        for i in (0..=d).rev() {
            terms[i] = &self.coeffs[i] * &qpow;
            qpow *= q;
        }
        let mut acc = BigInt::zero();
        for i in (0..=d).rev() {
            acc = acc * p + &terms[i];
        }
        match acc.sign() {
            num_bigint::Sign::Minus => -1,
            num_bigint::Sign::NoSign => 0,
            num_bigint::Sign::Plus => 1,
        }
    }

    /// Sign of the leading coefficient, which is the sign of `f(x)` as
    /// `x -> +infinity`.
    pub fn sign_at_plus_infinity(&self) -> i32 {
        match self.coeffs.last() {
            None => 0,
            Some(c) if c.is_positive() => 1,
            _ => -1,
        }
    }

    /// Greatest common divisor of the coefficients, as a nonnegative integer;
    /// zero only for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the content, preserving the sign of the leading
    /// coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let g = self.content();
        if g.is_one() {
            return self.clone();
        }
        ExactPolynomial {
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
        }
    }

    /// Primitive part with the leading coefficient forced positive; the
    /// canonical representative used for gcds and squarefree factors.
    pub fn normalized(&self) -> Self {
        let p = self.primitive_part();
        match p.coeffs.last() {
            Some(c) if c.is_negative() => p.neg(),
            _ => p,
        }
    }

    /// Exact quotient in `Z[x]`: `Some(q)` with `self = q * d` when the
    /// division comes out exactly, `None` otherwise.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (sd, dd) = (self.degree().unwrap(), d.degree().unwrap());
        if sd < dd {
            return None;
        }
        let dl = d.leading().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            let lead = std::mem::take(&mut rem[k + dd]);
            if lead.is_zero() {
                continue;
            }
            let (q, r) = lead.div_rem(dl);
            if !r.is_zero() {
                return None;
            }
            for (i, dc) in d.coeffs.iter().enumerate().take(dd) {
                rem[k + i] -= &q * dc;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_coeffs(quot))
    }

    /// Pseudo-remainder scaled so the result is a *positive* rational
    /// multiple of the true remainder `self mod d`. Each elimination step
    /// multiplies the running remainder by `|lc(d)|`, which keeps the sign
    /// relationship intact; Sturm chains depend on that.
    pub fn pseudo_rem(&self, d: &Self) -> Self {
        assert!(!d.is_zero(), "pseudo-remainder by the zero polynomial");
        let dd = d.degree().unwrap();
        let dl = d.leading().unwrap();
        let dl_abs = dl.abs();
        let dl_sign = if dl.is_negative() { -1i32 } else { 1 };
        let mut r = self.clone();
        while !r.is_zero() && r.degree().unwrap() >= dd {
            let rd = r.degree().unwrap();
            let lead = r.leading().unwrap().clone();
            r = r.mul_scalar(&dl_abs);
            // After scaling, the leading coefficient is lead*|lc(d)|, and the
            // multiple of d that cancels it is lead*sign(lc(d))*x^(rd-dd)*d.
            let q = if dl_sign < 0 { -&lead } else { lead };
            r = r.sub(&d.shift_up(rd - dd).mul_scalar(&q));
            debug_assert!(r.is_zero() || r.degree().unwrap() < rd);
        }
        r
    }

    /// Whether `self` divides `other` over the rationals. For a monic `self`
    /// this coincides with divisibility in `Z[x]`.
    pub fn divides(&self, other: &Self) -> bool {
        assert!(!self.is_zero(), "the zero polynomial divides nothing");
        other.pseudo_rem(self).is_zero()
    }

    /// Polynomial gcd by the primitive pseudo-remainder sequence; the result
    /// is primitive with a positive leading coefficient (or zero when both
    /// inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.normalized();
        let mut b = other.normalized();
        if a.is_zero() {
            return b;
        }
        if b.is_zero() {
            return a;
        }
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).normalized();
            a = b;
            b = r;
        }
        a.normalized()
    }

    /// The radical: the product of the distinct irreducible factors, i.e.
    /// `self / gcd(self, self')`, normalized primitive with positive leading
    /// coefficient.
    pub fn squarefree_part(&self) -> Self {
        assert!(!self.is_zero(), "squarefree part of the zero polynomial");
        let f = self.normalized();
        if f.degree() == Some(0) {
            return Self::one();
        }
        let g = f.gcd(&f.derivative());
        if g.degree() == Some(0) {
            return f;
        }
        f.div_exact(&g)
            .expect("gcd(f, f') divides f")
            .normalized()
    }

    /// Squarefree decomposition by Yun's algorithm: returns pairs
    /// `(h, i)` with `h` squarefree, pairwise coprime, primitive with
    /// positive leading coefficient, and `self = c * prod h^i` for a nonzero
    /// rational constant `c`. Factors of degree zero are omitted and the
    /// multiplicities are strictly increasing.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, usize)> {
        assert!(!self.is_zero(), "decomposition of the zero polynomial");
        let f = self.normalized();
        if f.degree() == Some(0) {
            return Vec::new();
        }
        let fp = f.derivative();
        let g = f.gcd(&fp);
        let mut out = Vec::new();
        if g.degree() == Some(0) {
            out.push((f, 1));
            return out;
        }
        // Yun's recurrence: c tracks the product of the factors still to be
        // emitted, d the matching derivative combination.
        let mut c = f.div_exact(&g).expect("gcd divides f").normalized();
        let mut d = fp
            .div_exact(&g)
            .expect("gcd divides f'")
            .sub(&c.derivative());
        let mut i = 1usize;
        while c.degree() != Some(0) {
            let h = c.gcd(&d);
            if h.degree() != Some(0) {
                out.push((h.clone(), i));
            }
            c = c.div_exact(&h).expect("factor divides c").normalized();
            d = d.div_exact(&h).expect("factor divides d").sub(&c.derivative());
            i += 1;
        }
        debug_assert_eq!(
            out.iter()
                .fold(Self::one(), |acc, (h, m)| acc.mul(&h.pow(*m))),
            self.normalized(),
            "squarefree factors must multiply back to the input"
        );
        out
    }

    /// A strict bound `B` with every real root of `self` in `(-B, B)`;
    /// Cauchy's bound rounded up.
    pub fn root_bound(&self) -> BigInt {
        assert!(!self.is_zero());
        let lc = self.leading().unwrap().abs();
        let mut max_q = BigInt::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            let q = c.abs() / &lc;
            if q > max_q {
                max_q = q;
            }
        }
        max_q + 2
    }
}

impl fmt::Debug for ExactPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ExactPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coeff = mag.is_one() && i > 0;
            if !unit_coeff {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}
