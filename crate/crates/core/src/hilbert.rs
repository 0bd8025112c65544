//! Hilbert polynomials in Gotzmann form, the lexicographic ideal, and the
//! closed-form invariants of saturated strongly stable ideals.
//!
//! A Hilbert polynomial of degree `d` is stored as its unique chain
//! `b_0 >= b_1 >= ... >= b_d > 0` with
//!
//! ```text
//! p(z) = sum_{i=0}^{d} [ C(z+i, i+1) - C(z+i-b_i, i+1) ]
//! ```
//!
//! where `C(x, k)` is the polynomial binomial `x(x-1)...(x-k+1)/k!`.
//! Hilbert series are written as a numerator over `(1-t)^{n+1}` (the
//! non-reduced form); `SeriesNumerator` always means that numerator.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::ideal::StronglyStableIdeal;
use crate::monomial::Monomial;
use crate::poly::RationalPoly;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct HilbertPolynomial {
    b: Vec<u64>,
}

/// `C(z+i, i+1) - C(z+i-b, i+1)`.
fn bracket(i: usize, b: u64) -> RationalPoly {
    let i_signed = i as i64;
    &RationalPoly::binomial(i_signed, i + 1) - &RationalPoly::binomial(i_signed - b as i64, i + 1)
}

fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Polynomial binomial `x(x-1)...(x-k+1)/k!` at an integer `x`.
pub fn binomial_poly_value(x: &BigInt, k: usize) -> BigInt {
    let mut num = BigInt::one();
    for i in 0..k {
        num *= x - BigInt::from(i);
    }
    num / factorial(k)
}

/// Combinatorial binomial; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

impl HilbertPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Builds from a Gotzmann chain, checking `b_0 >= ... >= b_d > 0`.
    pub fn from_gotzmann(b: Vec<u64>) -> Result<Self> {
        if let Some(i) = b.iter().position(|&x| x == 0) {
            return Err(Error::NotHilbertPolynomial(format!(
                "b_{i} = 0 is not positive"
            )));
        }
        if let Some(i) = b.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::NotHilbertPolynomial(format!(
                "b_{i} = {} is smaller than b_{} = {}",
                b[i],
                i + 1,
                b[i + 1]
            )));
        }
        Ok(Self { b })
    }

    /// Recovers the Gotzmann chain from rational coefficients (`coeffs[i]` is
    /// the coefficient of `z^i`) by peeling off the top bracket repeatedly.
    pub fn decompose(coeffs: &[BigRational]) -> Result<Self> {
        let mut rest = RationalPoly::new(coeffs.to_vec());
        let Some(d) = rest.degree() else {
            return Ok(Self::zero());
        };
        let mut b = vec![0u64; d + 1];
        for i in (0..=d).rev() {
            match rest.degree() {
                Some(k) if k == i => {}
                Some(k) => {
                    return Err(Error::NotHilbertPolynomial(format!(
                        "remainder has degree {k} where degree {i} is needed, so b_{i} would vanish"
                    )))
                }
                None => {
                    return Err(Error::NotHilbertPolynomial(format!(
                        "remainder vanishes before b_{i}, so b_{i} = 0 is not positive"
                    )))
                }
            }
            // the top bracket of index i has leading coefficient b_i / i!
            let value =
                rest.leading_coeff().expect("nonzero") * BigRational::from_integer(factorial(i));
            if !value.is_integer() {
                return Err(Error::NotHilbertPolynomial(format!(
                    "b_{i} = {value} is not an integer"
                )));
            }
            let value = value.to_integer();
            if !value.is_positive() {
                return Err(Error::NotHilbertPolynomial(format!(
                    "b_{i} = {value} is not positive"
                )));
            }
            let value = value.to_u64().ok_or_else(|| {
                Error::NotHilbertPolynomial(format!("b_{i} = {value} is too large"))
            })?;
            if i < d && value < b[i + 1] {
                return Err(Error::NotHilbertPolynomial(format!(
                    "b_{i} = {value} is smaller than b_{} = {}",
                    i + 1,
                    b[i + 1]
                )));
            }
            b[i] = value;
            rest = &rest - &bracket(i, value);
        }
        debug_assert!(rest.is_zero());
        Ok(Self { b })
    }

    pub fn from_poly(p: &RationalPoly) -> Result<Self> {
        Self::decompose(p.coeffs())
    }

    pub fn is_zero(&self) -> bool {
        self.b.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.b.len().checked_sub(1)
    }

    pub fn gotzmann(&self) -> &[u64] {
        &self.b
    }

    /// `b_0`, the Gotzmann number (zero for the zero polynomial).
    pub fn gotzmann_number(&self) -> u64 {
        self.b.first().copied().unwrap_or(0)
    }

    /// `a_i = b_i - b_{i+1}`, `a_d = b_d`.
    pub fn a_vector(&self) -> Vec<u64> {
        (0..self.b.len())
            .map(|i| self.b[i] - self.b.get(i + 1).copied().unwrap_or(0))
            .collect()
    }

    pub fn coefficients(&self) -> RationalPoly {
        self.b
            .iter()
            .enumerate()
            .fold(RationalPoly::zero(), |acc, (i, &bi)| &acc + &bracket(i, bi))
    }

    pub fn evaluate(&self, z: i64) -> BigInt {
        let z = BigInt::from(z);
        self.b
            .iter()
            .enumerate()
            .map(|(i, &bi)| {
                let top = &z + BigInt::from(i);
                binomial_poly_value(&top, i + 1)
                    - binomial_poly_value(&(top - BigInt::from(bi)), i + 1)
            })
            .sum()
    }

    /// `Δ^j p`; its chain is `[b_j, ..., b_d]`. Beyond the degree this is zero.
    pub fn delta(&self, j: usize) -> Self {
        Self {
            b: self.b.get(j..).map(<[u64]>::to_vec).unwrap_or_default(),
        }
    }

    /// `p - a_0`: the chain with `b_0` replaced by `b_1` (zero when `d = 0`).
    pub fn without_a0(&self) -> Self {
        match self.b.len() {
            0 | 1 => Self::zero(),
            _ => {
                let mut b = self.b.clone();
                b[0] = b[1];
                Self { b }
            }
        }
    }
}

impl fmt::Display for HilbertPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.coefficients())
    }
}

/// Numerator of the non-reduced Hilbert series; coefficient of `t^i` at `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SeriesNumerator {
    coeffs: Vec<BigInt>,
}

impl SeriesNumerator {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Least index with a nonzero coefficient.
    pub fn sd(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// `1 - self`.
    pub fn one_minus(&self) -> Self {
        let len = self.coeffs.len().max(1);
        let mut out: Vec<BigInt> = (0..len).map(|i| -self.coeff(i)).collect();
        out[0] += 1;
        Self::new(out)
    }

    /// Subtracts `(1-t)^l t^d`, the contribution of one generator with max
    /// index `l` and degree `d`.
    pub fn subtract_generator(&mut self, l: usize, d: usize) {
        if self.coeffs.len() < d + l + 1 {
            self.coeffs.resize(d + l + 1, BigInt::zero());
        }
        for k in 0..=l {
            let c = BigInt::from(binomial(l as u64, k as u64));
            if k % 2 == 0 {
                self.coeffs[d + k] -= c;
            } else {
                self.coeffs[d + k] += c;
            }
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl fmt::Display for SeriesNumerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if c.is_negative() {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            let abs = c.abs();
            match i {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{abs}*")?;
                    }
                    if i == 1 {
                        f.write_str("t")?;
                    } else {
                        write!(f, "t^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// The saturated lexsegment ideal `L_p`. For `p = 0` this is the unit ideal.
pub fn lex_ideal(p: &HilbertPolynomial, num_vars: usize) -> Result<StronglyStableIdeal> {
    let Some(d) = p.degree() else {
        return Ok(StronglyStableIdeal::unit(num_vars));
    };
    let n = num_vars.saturating_sub(1);
    if num_vars == 0 || d + 1 > n {
        return Err(Error::DimensionExceedsRing {
            degree: d,
            num_vars,
        });
    }
    let a = p.a_vector();
    let mut gens: Vec<Monomial> = (0..n - d - 1).map(|i| Monomial::var(num_vars, i)).collect();
    let mut prefix = Monomial::one(num_vars);
    for t in 0..d {
        let var = n - d - 1 + t;
        let exp = a[d - t] as u32;
        gens.push(prefix.mul_var_pow(var, exp + 1));
        prefix = prefix.mul_var_pow(var, exp);
    }
    gens.push(prefix.mul_var_pow(n - 1, a[0] as u32));
    StronglyStableIdeal::from_generators(num_vars, gens)
        .map_err(|e| Error::Internal(format!("lex ideal construction failed: {e}")))
}

/// `C(z+n, n) - sum_i C(z+n-d_i-l_i, n-l_i)` in coefficient form.
pub fn hilbert_poly_coeffs(ideal: &StronglyStableIdeal) -> RationalPoly {
    if ideal.is_unit() {
        return RationalPoly::zero();
    }
    let n = ideal.n();
    ideal
        .shape()
        .into_iter()
        .fold(RationalPoly::binomial(n as i64, n), |acc, (l, d)| {
            &acc - &RationalPoly::binomial(n as i64 - d as i64 - l as i64, n - l)
        })
}

/// Hilbert polynomial of `R/I` for a saturated strongly stable ideal.
pub fn hilbert_polynomial_of(ideal: &StronglyStableIdeal) -> Result<HilbertPolynomial> {
    HilbertPolynomial::from_poly(&hilbert_poly_coeffs(ideal)).map_err(|e| {
        Error::Internal(format!(
            "Hilbert polynomial of {ideal} did not decompose: {e}"
        ))
    })
}

/// `1 - sum_i (1-t)^{l_i} t^{d_i}`; zero for the unit ideal.
pub fn series_numerator_of(ideal: &StronglyStableIdeal) -> SeriesNumerator {
    if ideal.is_unit() {
        return SeriesNumerator::default();
    }
    let mut g = SeriesNumerator::one();
    for (l, d) in ideal.shape() {
        g.subtract_generator(l, d as usize);
    }
    g
}

/// Total Betti numbers `β_j = sum_i C(l_i, j)`; empty for the zero ideal.
pub fn betti_numbers(ideal: &StronglyStableIdeal) -> Vec<u64> {
    let shape = ideal.shape();
    let Some(max_l) = shape.iter().map(|&(l, _)| l).max() else {
        return Vec::new();
    };
    (0..=max_l)
        .map(|j| {
            shape
                .iter()
                .map(|&(l, _)| {
                    binomial(l as u64, j as u64)
                        .to_u64()
                        .expect("small binomial")
                })
                .sum()
        })
        .collect()
}

/// Castelnuovo-Mumford regularity: the largest generator degree (0 for the zero ideal).
pub fn regularity(ideal: &StronglyStableIdeal) -> u32 {
    ideal
        .generators()
        .iter()
        .map(Monomial::degree)
        .max()
        .unwrap_or(0)
}

/// `b_0 + d - 1`: from this many variables on, counts no longer grow.
pub fn stability_threshold(p: &HilbertPolynomial) -> u64 {
    (p.gotzmann_number() + p.degree().unwrap_or(0) as u64).saturating_sub(1)
}

/// `prod_{j=0}^{d} C( C(c - j + b_0 - 1, b_0 - 1) + 1, a_j )` with
/// `c = min(n, b_0 + d - 1)`, `n = num_vars - 1`.
pub fn count_upper_bound(p: &HilbertPolynomial, num_vars: usize) -> BigUint {
    let Some(d) = p.degree() else {
        return BigUint::one();
    };
    let b0 = p.gotzmann_number();
    let n = num_vars.saturating_sub(1) as u64;
    let c = n.min(stability_threshold(p));
    let a = p.a_vector();
    (0..=d)
        .map(|j| {
            let top = (c + b0 - 1).checked_sub(j as u64);
            let monomials = top.map(|t| binomial(t, b0 - 1)).unwrap_or_default();
            let monomials = monomials.to_u64().expect("monomial count fits in u64");
            binomial(monomials + 1, a[j])
        })
        .product()
}

/// The Hilbert polynomial `sum_i g_i C(z - i + n, n)` implied by a series numerator.
pub fn numerator_to_polynomial(g: &SeriesNumerator, num_vars: usize) -> Result<HilbertPolynomial> {
    let n = num_vars.saturating_sub(1);
    let p = g
        .coeffs()
        .iter()
        .enumerate()
        .fold(RationalPoly::zero(), |acc, (i, gi)| {
            let term = RationalPoly::binomial(n as i64 - i as i64, n);
            &acc + &term.scale(&BigRational::from_integer(gi.clone()))
        });
    HilbertPolynomial::from_poly(&p)
}
