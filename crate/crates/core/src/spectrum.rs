//! Exact adjacency spectra.
//!
//! The characteristic polynomial is computed by Hessenberg reduction modulo
//! a fixed list of word-sized primes and reassembled by the Chinese remainder
//! theorem against a proven coefficient bound, so the result is exact for
//! every graph this crate handles. Two independent slower routes, a
//! fraction-free determinant and Faddeev-LeVerrier, exist for cross-checking
//! and for small dense matrices such as quotient matrices.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::ExactPolynomial;
use crate::roots::{isolate_real_roots, RootInterval, SturmChain};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::cmp::Ordering;
use std::fmt;

mod modular {
    /// Primes just above 2^62: large enough that ~61 bits of information
    /// land per prime, small enough that products fit in u128.
    pub(super) const PRIMES: [u64; 48] = [
        4611686018427388039, 4611686018427388073, 4611686018427388081, 4611686018427388091,
        4611686018427388093, 4611686018427388097, 4611686018427388157, 4611686018427388181,
        4611686018427388207, 4611686018427388247, 4611686018427388273, 4611686018427388279,
        4611686018427388289, 4611686018427388291, 4611686018427388319, 4611686018427388331,
        4611686018427388349, 4611686018427388361, 4611686018427388387, 4611686018427388429,
        4611686018427388447, 4611686018427388463, 4611686018427388477, 4611686018427388513,
        4611686018427388519, 4611686018427388601, 4611686018427388609, 4611686018427388699,
        4611686018427388721, 4611686018427388787, 4611686018427388793, 4611686018427388853,
        4611686018427388919, 4611686018427388963, 4611686018427389063, 4611686018427389189,
        4611686018427389201, 4611686018427389207, 4611686018427389243, 4611686018427389269,
        4611686018427389281, 4611686018427389299, 4611686018427389323, 4611686018427389399,
        4611686018427389423, 4611686018427389509, 4611686018427389527, 4611686018427389569,
    ];

    #[inline]
    pub(super) fn mul(a: u64, b: u64, p: u64) -> u64 {
        ((a as u128 * b as u128) % p as u128) as u64
    }

    #[inline]
    pub(super) fn add(a: u64, b: u64, p: u64) -> u64 {
        let s = a + b;
        if s >= p {
            s - p
        } else {
            s
        }
    }

    #[inline]
    pub(super) fn sub(a: u64, b: u64, p: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + p - b
        }
    }

    fn pow(mut a: u64, mut e: u64, p: u64) -> u64 {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul(acc, a, p);
            }
            a = mul(a, a, p);
            e >>= 1;
        }
        acc
    }

    pub(super) fn inv(a: u64, p: u64) -> u64 {
        debug_assert!(a % p != 0);
        pow(a % p, p - 2, p)
    }

    /// Characteristic polynomial of an integer matrix modulo `p`, ascending
    /// coefficients of degree `n`. Reduces to upper Hessenberg form by
    /// similarity transformations, then runs the standard recurrence on the
    /// characteristic polynomials of the leading principal blocks.
    pub(super) fn char_poly_mod(mat: &[Vec<u64>], p: u64) -> Vec<u64> {
        let n = mat.len();
        let mut h: Vec<Vec<u64>> = mat
            .iter()
            .map(|row| row.iter().map(|&x| x % p).collect())
            .collect();

        for j in 0..n.saturating_sub(2) {
            let Some(pivot) = (j + 1..n).find(|&r| h[r][j] != 0) else {
                continue;
            };
            if pivot != j + 1 {
                h.swap(pivot, j + 1);
                for row in h.iter_mut() {
                    row.swap(pivot, j + 1);
                }
            }
            let piv_inv = inv(h[j + 1][j], p);
            for i in j + 2..n {
                if h[i][j] == 0 {
                    continue;
                }
                let factor = mul(h[i][j], piv_inv, p);
                // Similarity: subtract factor*row(j+1) from row(i), then add
                // factor*col(i) to col(j+1).
                for c in 0..n {
                    let t = mul(factor, h[j + 1][c], p);
                    h[i][c] = sub(h[i][c], t, p);
                }
                for r in 0..n {
                    let t = mul(factor, h[r][i], p);
                    h[r][j + 1] = add(h[r][j + 1], t, p);
                }
            }
        }

        // ps[i] = charpoly of the leading i x i block.
        let mut ps: Vec<Vec<u64>> = Vec::with_capacity(n + 1);
        ps.push(vec![1]);
        for i in 1..=n {
            let hii = h[i - 1][i - 1];
            let prev = &ps[i - 1];
            let mut cur = vec![0u64; i + 1];
            for (d, &c) in prev.iter().enumerate() {
                cur[d + 1] = add(cur[d + 1], c, p);
                cur[d] = sub(cur[d], mul(hii, c, p), p);
            }
            // Correction terms: for each k < i, subtract
            // h(k,i) * prod_{m=k+1..=i} h(m,m-1) * p_{k-1} (1-based indices).
            let mut prod = 1u64;
            for k in (1..i).rev() {
                prod = mul(prod, h[k][k - 1], p);
                if prod == 0 {
                    break;
                }
                let coeff = mul(h[k - 1][i - 1], prod, p);
                if coeff != 0 {
                    for (d, &c) in ps[k - 1].iter().enumerate() {
                        cur[d] = sub(cur[d], mul(coeff, c, p), p);
                    }
                }
            }
            ps.push(cur);
        }
        ps.pop().unwrap()
    }
}

/// Exact characteristic polynomial of the adjacency matrix, `det(xI - A)`,
/// monic of degree `n`.
pub fn char_poly(g: &Graph) -> Result<ExactPolynomial> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let n = g.n();

    // Coefficient bound: the x^(n-i) coefficient is a signed sum of the
    // C(n,i) principal i x i minors, each at most i^(i/2) in magnitude by
    // Hadamard's inequality on 0/1 rows. So every coefficient fits in
    // n + (n/2)*log2(n) bits, plus one sign bit.
    let bits = n as f64 + (n as f64 / 2.0) * (n as f64).max(2.0).log2() + 2.0;
    let needed = (bits / 61.0).ceil() as usize + 1;
    assert!(
        needed <= modular::PRIMES.len(),
        "graph too large for the fixed prime list (n = {n})"
    );

    let base: Vec<Vec<u64>> = (0..n)
        .map(|u| (0..n).map(|v| u64::from(g.has_edge(u, v))).collect())
        .collect();

    let mut acc: Vec<BigInt> = vec![BigInt::zero(); n + 1];
    let mut modulus = BigInt::one();
    for &p in &modular::PRIMES[..needed] {
        let residues = modular::char_poly_mod(&base, p);
        let pb = BigInt::from(p);
        let m_mod_p: u64 = (&modulus % &pb)
            .try_into()
            .expect("reduced modulus fits in u64");
        let m_inv = modular::inv(m_mod_p, p);
        for (a, &r) in acc.iter_mut().zip(&residues) {
            let a_mod_p: u64 = (((a.clone() % &pb) + &pb) % &pb)
                .try_into()
                .expect("reduced residue fits in u64");
            let delta = modular::mul(modular::sub(r, a_mod_p, p), m_inv, p);
            *a += &modulus * BigInt::from(delta);
        }
        modulus *= &pb;
    }
    let half = &modulus / 2;
    for a in acc.iter_mut() {
        if *a > half {
            *a -= &modulus;
        }
    }

    let cp = ExactPolynomial::from_coeffs(acc);
    debug_assert!(cp.is_monic() && cp.degree() == Some(n));
    debug_assert!(cp.coeff(n.wrapping_sub(1)).is_zero() || n == 0);
    debug_assert_eq!(cp.coeff(n.saturating_sub(2)), -BigInt::from(g.edge_count()));
    Ok(cp)
}

/// Characteristic polynomial of a dense integer matrix by the
/// Faddeev-LeVerrier recurrence; every division is exact. Quadratic memory
/// and quartic time, so reserve it for small matrices: quotient matrices and
/// cross-checks of the modular route.
pub fn char_poly_dense(mat: &[Vec<BigInt>]) -> ExactPolynomial {
    let n = mat.len();
    assert!(mat.iter().all(|r| r.len() == n), "matrix must be square");
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut m: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect();
    for k in 1..=n {
        let am = mat_mul(mat, &m);
        let tr: BigInt = (0..n).map(|i| am[i][i].clone()).sum();
        let (c, rem) = num_integer::Integer::div_rem(&-tr, &BigInt::from(k));
        debug_assert!(rem.is_zero(), "Faddeev-LeVerrier trace divides exactly");
        coeffs[n - k] = c.clone();
        m = am;
        for (i, row) in m.iter_mut().enumerate() {
            row[i] += &c;
            let _ = i;
        }
    }
    ExactPolynomial::from_coeffs(coeffs)
}

/// Characteristic polynomial of a graph by the dense reference route.
pub fn char_poly_reference(g: &Graph) -> Result<ExactPolynomial> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    Ok(char_poly_dense(&adjacency_bigint(g)))
}

pub(crate) fn adjacency_bigint(g: &Graph) -> Vec<Vec<BigInt>> {
    (0..g.n())
        .map(|u| {
            (0..g.n())
                .map(|v| BigInt::from(u64::from(g.has_edge(u, v))))
                .collect()
        })
        .collect()
}

pub(crate) fn mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = a.len();
    let mut out = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for (k, aik) in a[i].iter().enumerate() {
            if aik.is_zero() {
                continue;
            }
            for (j, bkj) in b[k].iter().enumerate() {
                if !bkj.is_zero() {
                    out[i][j] += aik * bkj;
                }
            }
        }
    }
    out
}

/// Exact determinant of an integer matrix by Bareiss fraction-free
/// elimination; independent of both characteristic polynomial routes.
pub fn det_integer(mat: &[Vec<BigInt>]) -> BigInt {
    let n = mat.len();
    assert!(mat.iter().all(|r| r.len() == n), "matrix must be square");
    if n == 0 {
        return BigInt::one();
    }
    let mut m: Vec<Vec<BigInt>> = mat.to_vec();
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                let (q, r) = num_integer::Integer::div_rem(&num, &prev);
                debug_assert!(r.is_zero(), "Bareiss division is exact");
                m[i][j] = q;
            }
        }
        prev = m[k][k].clone();
    }
    let det = std::mem::take(&mut m[n - 1][n - 1]);
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// One distinct eigenvalue with its multiplicity.
#[derive(Clone, Debug)]
pub struct SpectrumEntry {
    pub value: RootInterval,
    pub multiplicity: usize,
}

/// The full adjacency spectrum: distinct eigenvalues in descending order,
/// each an exactly compared algebraic number, with multiplicities summing
/// to `n`.
#[derive(Clone)]
pub struct Spectrum {
    char_poly: ExactPolynomial,
    entries: Vec<SpectrumEntry>,
}

impl Spectrum {
    /// Computes the spectrum of a nonempty graph: characteristic polynomial,
    /// squarefree (Yun) decomposition, and per-factor root isolation. The
    /// maximum degree bounds every eigenvalue, which lets the isolator strip
    /// all integer eigenvalues exactly.
    pub fn of(g: &Graph) -> Result<Self> {
        let cp = char_poly(g)?;
        let bound = BigInt::from(g.max_degree().max(1));
        Ok(Self::from_char_poly_internal(cp, Some(&bound)))
    }

    fn from_char_poly_internal(cp: ExactPolynomial, bound: Option<&BigInt>) -> Self {
        let n = cp.degree().expect("characteristic polynomial is nonzero");
        let mut entries = Vec::new();
        for (factor, mult) in cp.squarefree_decomposition() {
            let roots = isolate_real_roots(&factor, bound);
            debug_assert_eq!(
                roots.len(),
                factor.degree().unwrap(),
                "adjacency matrices are symmetric, all roots real"
            );
            for value in roots {
                entries.push(SpectrumEntry {
                    value,
                    multiplicity: mult,
                });
            }
        }
        entries.sort_by(|a, b| b.value.compare(&a.value));
        let spec = Spectrum {
            char_poly: cp,
            entries,
        };
        debug_assert_eq!(spec.n(), n);
        spec
    }

    pub fn char_poly(&self) -> &ExactPolynomial {
        &self.char_poly
    }

    /// Distinct eigenvalues, descending.
    pub fn entries(&self) -> &[SpectrumEntry] {
        &self.entries
    }

    /// Number of vertices (sum of multiplicities).
    pub fn n(&self) -> usize {
        self.entries.iter().map(|e| e.multiplicity).sum()
    }

    pub fn distinct_count(&self) -> usize {
        self.entries.len()
    }

    /// The i-th distinct eigenvalue, descending, zero-based.
    pub fn theta(&self, i: usize) -> &RootInterval {
        &self.entries[i].value
    }

    pub fn theta_min(&self) -> &RootInterval {
        &self.entries.last().expect("spectrum is nonempty").value
    }

    pub fn largest(&self) -> &RootInterval {
        &self.entries[0].value
    }

    /// The i-th eigenvalue counted with multiplicity, descending, one-based
    /// (interlacing statements are traditionally phrased this way).
    pub fn nth_with_multiplicity(&self, i: usize) -> &RootInterval {
        assert!(i >= 1 && i <= self.n(), "index out of range");
        let mut remaining = i;
        for e in &self.entries {
            if remaining <= e.multiplicity {
                return &e.value;
            }
            remaining -= e.multiplicity;
        }
        unreachable!("multiplicities sum to n")
    }

    /// Multiplicity of an exactly given rational eigenvalue (zero if it is
    /// not an eigenvalue).
    pub fn multiplicity_at(&self, r: &BigRational) -> usize {
        self.entries
            .iter()
            .find(|e| e.value.is_rational(r))
            .map_or(0, |e| e.multiplicity)
    }

    /// Value-wise equality: same multiset of eigenvalues. Implied by (and
    /// checked against) equality of characteristic polynomials.
    pub fn equals(&self, other: &Self) -> bool {
        self.char_poly == other.char_poly
            && self.entries.len() == other.entries.len()
            && self
                .entries
                .iter()
                .zip(&other.entries)
                .all(|(a, b)| a.multiplicity == b.multiplicity && a.value.equals(&b.value))
    }
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}^{}", e.value, e.multiplicity)?;
        }
        write!(f, "}}")
    }
}

/// Number of distinct adjacency eigenvalues: the degree of the squarefree
/// part of the characteristic polynomial, which for a symmetric matrix is
/// its minimal polynomial.
pub fn distinct_eigenvalue_count(g: &Graph) -> Result<usize> {
    let cp = char_poly(g)?;
    Ok(cp.squarefree_part().degree().unwrap())
}

/// Exact trichotomy comparing the smallest eigenvalue against a rational
/// threshold, without isolating any root: Sturm-counts the roots of the
/// squarefree characteristic polynomial below `r`, then tests `r` itself.
pub fn cmp_min_eigenvalue(g: &Graph, r: &BigRational) -> Result<Ordering> {
    let cp = char_poly(g)?;
    let sf = cp.squarefree_part();
    let chain = SturmChain::new(&sf);
    if chain.count_roots_below(r) > 0 {
        return Ok(Ordering::Less);
    }
    if sf.sign_at(r) == 0 {
        return Ok(Ordering::Equal);
    }
    Ok(Ordering::Greater)
}

/// Whether `child` interlaces `parent`: with eigenvalues (with multiplicity)
/// `l_1 >= ... >= l_n` and `m_1 >= ... >= m_m`, checks
/// `l_i >= m_i >= l_{n-m+i}` for every `i`. The spectrum of any induced
/// subgraph interlaces its host's; a violation certifies non-embeddability.
pub fn interlaces(parent: &Spectrum, child: &Spectrum) -> Result<bool> {
    let n = parent.n();
    let m = child.n();
    if m > n {
        return Err(Error::precondition(
            "interlaces",
            format!("child order {m} exceeds parent order {n}"),
        ));
    }
    for i in 1..=m {
        let mu = child.nth_with_multiplicity(i);
        if parent.nth_with_multiplicity(i).compare(mu) == Ordering::Less {
            return Ok(false);
        }
        if mu.compare(parent.nth_with_multiplicity(n - m + i)) == Ordering::Less {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Spectrum of the `s`-clique extension, computed from the base spectrum
/// alone: every base eigenvalue `t` maps to `s(t+1)-1` with the same
/// multiplicity, and `-1` gains multiplicity `(s-1)n`. No extension graph is
/// ever built.
pub fn clique_extension_spectrum(base: &Spectrum, s: usize) -> Spectrum {
    assert!(s >= 1, "clique extension needs s >= 1");
    if s == 1 {
        return base.clone();
    }
    let n = base.n();
    let sb = BigInt::from(s);

    // Map each squarefree factor h(x) of the base characteristic polynomial
    // to the monic polynomial with roots s(t+1)-1 for roots t of h:
    // H(y) = s^deg(h) * h((y+1-s)/s).
    let map_poly = |h: &ExactPolynomial| -> ExactPolynomial {
        let d = h.degree().unwrap();
        let mut spow = BigInt::one();
        let mut scaled = Vec::with_capacity(d + 1);
        for j in (0..=d).rev() {
            scaled.push((h.coeff(j), spow.clone()));
            spow *= &sb;
        }
        // Horner in the polynomial ring with argument (y + (1-s)).
        let arg = ExactPolynomial::from_coeffs(vec![BigInt::one() - &sb, BigInt::one()]);
        let mut acc = ExactPolynomial::zero();
        for (c, sp) in scaled {
            acc = acc
                .mul(&arg)
                .add(&ExactPolynomial::constant(c * sp));
        }
        acc
    };

    let mut entries: Vec<SpectrumEntry> = Vec::new();
    let mut cp = ExactPolynomial::one();
    for (factor, mult) in base.char_poly.squarefree_decomposition() {
        let mapped = map_poly(&factor);
        debug_assert!(mapped.is_monic());
        cp = cp.mul(&mapped.pow(mult));
        // The affine map is a bijection on roots, so isolating the mapped
        // factor recovers exactly the images s(t+1)-1 of this factor's
        // roots, with the factor's multiplicity.
        for value in isolate_real_roots(&mapped, None) {
            entries.push(SpectrumEntry {
                value,
                multiplicity: mult,
            });
        }
    }
    let minus_one = ExactPolynomial::from_i64_coeffs(&[1, 1]);
    cp = cp.mul(&minus_one.pow((s - 1) * n));
    entries.push(SpectrumEntry {
        value: RootInterval::new_exact(minus_one, BigRational::from(BigInt::from(-1))),
        multiplicity: (s - 1) * n,
    });

    entries.sort_by(|a, b| b.value.compare(&a.value));
    let mut merged: Vec<SpectrumEntry> = Vec::new();
    for e in entries {
        match merged.last_mut() {
            Some(last) if last.value.equals(&e.value) => {
                last.multiplicity += e.multiplicity;
                if last.value.exact_value().is_none() && e.value.exact_value().is_some() {
                    last.value = e.value;
                }
            }
            _ => merged.push(e),
        }
    }
    let out = Spectrum {
        char_poly: cp,
        entries: merged,
    };
    debug_assert_eq!(out.n(), s * n);
    out
}

/// Outcome of the all-ones-matrix identity for a connected regular graph
/// with exactly four distinct eigenvalues `k > t1 > t2 > t3`: with
/// `g(x) = (x-t1)(x-t2)(x-t3)` (an integer cubic), the identity
/// `n * g(A) = g(k) * J` must hold entry by entry.
#[derive(Clone, Debug)]
pub struct HoffmanReport {
    pub holds: bool,
    /// The monic integer cubic with the three non-principal eigenvalues as
    /// roots: squarefree characteristic polynomial divided by `x - k`.
    pub adjacency_cubic: ExactPolynomial,
    /// Its value at the degree `k`; equals `n * g(A)_xy` for every pair when
    /// the identity holds.
    pub value_at_degree: BigInt,
    /// Largest deviation `|n * g(A)_xy - g(k)|` over all entries; zero
    /// exactly when the identity holds.
    pub max_abs_residual: BigInt,
}

/// Verifies the all-ones-matrix identity exactly over the integers.
/// Requires a connected regular graph with exactly four distinct
/// eigenvalues.
pub fn hoffman_residual(g: &Graph) -> Result<HoffmanReport> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let Some(k) = g.regular_degree() else {
        return Err(Error::precondition("hoffman_residual", "graph must be regular"));
    };
    if !g.is_connected() {
        return Err(Error::precondition(
            "hoffman_residual",
            "graph must be connected",
        ));
    }
    let cp = char_poly(g)?;
    let sf = cp.squarefree_part();
    let d = sf.degree().unwrap();
    if d != 4 {
        return Err(Error::precondition(
            "hoffman_residual",
            format!("graph must have exactly 4 distinct eigenvalues, found {d}"),
        ));
    }
    let kb = BigInt::from(k);
    let cubic = sf
        .div_exact(&ExactPolynomial::x_minus(&kb))
        .expect("the degree of a connected regular graph is an eigenvalue");
    let gk = cubic.evaluate(&kb);

    // g(A) = A^3 + c2 A^2 + c1 A + c0 I, evaluated in i64: entries of A^3
    // are at most k^2 and the cubic's coefficients are at most ~k^3, far
    // inside i64 for any graph the modular charpoly accepts.
    let n = g.n();
    let c0: i64 = (&cubic.coeff(0)).try_into().expect("small coefficient");
    let c1: i64 = (&cubic.coeff(1)).try_into().expect("small coefficient");
    let c2: i64 = (&cubic.coeff(2)).try_into().expect("small coefficient");
    let a: Vec<Vec<i64>> = (0..n)
        .map(|u| (0..n).map(|v| i64::from(g.has_edge(u, v))).collect())
        .collect();
    let mul_i64 = |x: &[Vec<i64>], y: &[Vec<i64>]| -> Vec<Vec<i64>> {
        let mut out = vec![vec![0i64; n]; n];
        for i in 0..n {
            for k2 in 0..n {
                let v = x[i][k2];
                if v != 0 {
                    for j in 0..n {
                        out[i][j] += v * y[k2][j];
                    }
                }
            }
        }
        out
    };
    let a2 = mul_i64(&a, &a);
    let a3 = mul_i64(&a2, &a);

    let nn = n as i64;
    let gk_i: i64 = (&gk).try_into().expect("g(k) fits in i64");
    let mut max_abs = 0i64;
    for i in 0..n {
        for j in 0..n {
            let diag = if i == j { c0 } else { 0 };
            let lhs = nn * (a3[i][j] + c2 * a2[i][j] + c1 * a[i][j] + diag);
            let res = (lhs - gk_i).abs();
            max_abs = max_abs.max(res);
        }
    }

    Ok(HoffmanReport {
        holds: max_abs == 0,
        adjacency_cubic: cubic,
        value_at_degree: gk,
        max_abs_residual: BigInt::from(max_abs),
    })
}
