//! Brute-force counterparts of the closed formulas and the enumerations.
//!
//! Everything here works from first principles (counting monomials, trying
//! every Borel move, breadth-first search with a hash set) and is meant to
//! be slow and obviously right.

use std::collections::HashSet;

use num_bigint::BigInt;

use crate::error::Result;
use crate::hilbert::{
    betti_numbers, binomial, hilbert_poly_coeffs, hilbert_polynomial_of, regularity,
    series_numerator_of, HilbertPolynomial, SeriesNumerator,
};
use crate::ideal::StronglyStableIdeal;
use crate::monomial::Monomial;

fn count_free(degree: u32, vars: usize) -> u128 {
    if vars == 0 {
        return u128::from(degree == 0);
    }
    let c = binomial(u64::from(degree) + vars as u64 - 1, vars as u64 - 1);
    u128::try_from(c).expect("monomial count fits in u128")
}

/// Number of degree-`j` monomials outside `I`.
///
/// Exponents are chosen variable by variable up to the largest variable any
/// generator uses; a branch stops as soon as its partial monomial lies in the
/// ideal, and the variables no generator uses are counted in closed form.
pub fn hilbert_function(ideal: &StronglyStableIdeal, j: u32) -> u128 {
    let nv = ideal.num_vars();
    let active = ideal
        .generators()
        .iter()
        .filter_map(|g| g.max_index().ok())
        .map(|l| l + 1)
        .max()
        .unwrap_or(0);
    if ideal.is_unit() {
        return 0;
    }
    let mut exps = vec![0u32; nv];
    count_from(ideal, &mut exps, 0, active, j, nv)
}

fn count_from(
    ideal: &StronglyStableIdeal,
    exps: &mut Vec<u32>,
    var: usize,
    active: usize,
    left: u32,
    nv: usize,
) -> u128 {
    if ideal.contains(&Monomial::new(exps.clone())) {
        return 0;
    }
    if var == active {
        return count_free(left, nv - active);
    }
    let mut total = 0;
    for e in 0..=left {
        exps[var] = e;
        total += count_from(ideal, exps, var + 1, active, left - e, nv);
    }
    exps[var] = 0;
    total
}

/// `h(0), ..., h(D)` of `R/I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertFunctionTable {
    pub values: Vec<u128>,
    pub num_vars: usize,
    pub ideal: StronglyStableIdeal,
}

impl HilbertFunctionTable {
    pub fn new(ideal: &StronglyStableIdeal, max_degree: u32) -> Self {
        Self {
            values: (0..=max_degree)
                .map(|j| hilbert_function(ideal, j))
                .collect(),
            num_vars: ideal.num_vars(),
            ideal: ideal.clone(),
        }
    }
}

fn monomials_of_degree(nv: usize, degree: u32) -> Vec<Monomial> {
    fn rec(exps: &mut Vec<u32>, var: usize, left: u32, out: &mut Vec<Monomial>) {
        if var + 1 == exps.len() {
            exps[var] = left;
            out.push(Monomial::new(exps.clone()));
            return;
        }
        for e in (0..=left).rev() {
            exps[var] = e;
            rec(exps, var + 1, left - e, out);
        }
    }
    let mut out = Vec::new();
    if nv > 0 {
        rec(&mut vec![0; nv], 0, degree, &mut out);
    }
    out
}

/// Every monomial of `I` of degree at most `max_degree` stays in `I` under
/// every move `x_j -> x_i`, `i < j`.
pub fn full_stability_check(ideal: &StronglyStableIdeal, max_degree: u32) -> bool {
    let nv = ideal.num_vars();
    (0..=max_degree).all(|deg| {
        monomials_of_degree(nv, deg)
            .into_iter()
            .filter(|m| ideal.contains(m))
            .all(|m| {
                (1..nv)
                    .filter(|&j| m.exponent(j) > 0)
                    .all(|j| (0..j).all(|i| ideal.contains(&m.shift(j, i))))
            })
    })
}

/// `sum_{j<=D} h(j) t^j` times `(1-t)^{n+1}`, truncated at `D`, equals the
/// numerator truncated at `D`.
pub fn series_consistency_check(ideal: &StronglyStableIdeal, max_degree: u32) -> bool {
    let nv = ideal.num_vars() as u64;
    let h: Vec<BigInt> = (0..=max_degree)
        .map(|j| BigInt::from(hilbert_function(ideal, j)))
        .collect();
    let numerator = series_numerator_of(ideal);
    (0..=max_degree as usize).all(|k| {
        let mut c = BigInt::from(0);
        for i in 0..=k.min(nv as usize) {
            let term = BigInt::from(binomial(nv, i as u64)) * &h[k - i];
            if i % 2 == 0 {
                c += term;
            } else {
                c -= term;
            }
        }
        c == numerator.coeff(k)
    })
}

fn expansion_stages(
    moves: impl Fn(&StronglyStableIdeal) -> Vec<Monomial>,
    start: StronglyStableIdeal,
    budget: impl Fn(&StronglyStableIdeal) -> Option<u64>,
) -> Result<HashSet<StronglyStableIdeal>> {
    let Some(steps) = budget(&start) else {
        return Ok(HashSet::new());
    };
    let mut level: HashSet<StronglyStableIdeal> = HashSet::from([start]);
    for _ in 0..steps {
        let mut next = HashSet::new();
        for ideal in &level {
            for m in moves(ideal) {
                next.insert(ideal.expand(&m)?);
            }
        }
        level = next;
    }
    Ok(level)
}

fn constant_gap(target: &HilbertPolynomial, ideal: &StronglyStableIdeal) -> Option<u64> {
    let diff = &target.coefficients() - &hilbert_poly_coeffs(ideal);
    assert!(
        diff.degree().unwrap_or(0) == 0,
        "stage difference is not constant"
    );
    let c = diff.coeff(0);
    u64::try_from(c.to_integer()).ok()
}

fn all_expandable(ideal: &StronglyStableIdeal) -> Vec<Monomial> {
    ideal
        .generators()
        .iter()
        .filter(|m| ideal.is_expandable(m))
        .cloned()
        .collect()
}

/// Stagewise search over every expansion order, deduplicated by hashing.
pub fn naive_enumerate_by_hp(
    p: &HilbertPolynomial,
    num_vars: usize,
) -> Result<Vec<StronglyStableIdeal>> {
    let Some(d) = p.degree() else {
        return Ok(Vec::new());
    };
    if d + 1 >= num_vars {
        return Ok(Vec::new());
    }
    let mut current = vec![StronglyStableIdeal::unit(num_vars - d)];
    for j in (0..=d).rev() {
        let target = p.delta(j);
        let mut found = HashSet::new();
        for ideal in current {
            let start = ideal.extend(num_vars - j)?;
            found.extend(expansion_stages(all_expandable, start, |i| {
                constant_gap(&target, i)
            })?);
        }
        current = found.into_iter().collect();
    }
    current.sort();
    Ok(current)
}

/// The ideals of `naive_enumerate_by_hp` that pass `brute_force_is_almost_lex`.
pub fn naive_enumerate_almost_lex(
    p: &HilbertPolynomial,
    num_vars: usize,
) -> Result<Vec<StronglyStableIdeal>> {
    Ok(naive_enumerate_by_hp(p, num_vars)?
        .into_iter()
        .filter(brute_force_is_almost_lex)
        .collect())
}

/// The ideals with Hilbert polynomial implied by `g` whose numerator is `g`.
pub fn naive_enumerate_by_series(
    g: &SeriesNumerator,
    num_vars: usize,
) -> Result<Vec<StronglyStableIdeal>> {
    let Ok(p) = crate::hilbert::numerator_to_polynomial(g, num_vars) else {
        return Ok(Vec::new());
    };
    if p.is_zero() {
        return Ok(Vec::new());
    }
    Ok(naive_enumerate_by_hp(&p, num_vars)?
        .into_iter()
        .filter(|i| &series_numerator_of(i) == g)
        .collect())
}

/// Degree by degree, the monomials of `I` in the first `n` variables form
/// an initial lex segment, for every degree up to the regularity.
pub fn brute_force_is_almost_lex(ideal: &StronglyStableIdeal) -> bool {
    if ideal.is_unit() || ideal.is_zero() {
        return true;
    }
    let nv = ideal.num_vars();
    (0..=regularity(ideal)).all(|deg| {
        // lex-descending order
        let inside: Vec<bool> = monomials_of_degree(nv - 1, deg)
            .into_iter()
            .map(|m| ideal.contains(&m.padded(nv)))
            .collect();
        inside.windows(2).all(|w| w[0] || !w[1])
    })
}

/// Checks one ideal claimed to have Hilbert polynomial `p` against the
/// brute-force oracles. Returns a description of the first failure.
pub fn verify_ideal(
    ideal: &StronglyStableIdeal,
    p: &HilbertPolynomial,
) -> std::result::Result<(), String> {
    if !ideal.is_saturated() {
        return Err(format!("{ideal} is not saturated"));
    }
    let top = regularity(ideal);
    if !full_stability_check(ideal, top) {
        return Err(format!(
            "{ideal} fails the monomial-by-monomial stability check"
        ));
    }
    let own = hilbert_polynomial_of(ideal).map_err(|e| e.to_string())?;
    if &own != p {
        return Err(format!("{ideal} has Hilbert polynomial {own}, not {p}"));
    }
    let b0 = p.gotzmann_number();
    let d = p.degree().unwrap_or(0) as u64;
    for j in b0..=b0 + d + 1 {
        let j = u32::try_from(j).map_err(|_| "degree too large".to_string())?;
        let h = BigInt::from(hilbert_function(ideal, j));
        let expected = p.evaluate(i64::from(j));
        if h != expected {
            return Err(format!("{ideal}: h({j}) = {h} but p({j}) = {expected}"));
        }
    }
    let numerator = series_numerator_of(ideal);
    let span = numerator.coeffs().len() as u32 + 1;
    if !series_consistency_check(ideal, span) {
        return Err(format!(
            "{ideal}: series numerator {numerator} disagrees with h"
        ));
    }
    // sum_j (-1)^j beta_j = #{generators with max index 0} = 1 - g(1)
    let betti = betti_numbers(ideal);
    let alternating: i128 = betti
        .iter()
        .enumerate()
        .map(|(j, &b)| if j % 2 == 0 { b as i128 } else { -(b as i128) })
        .sum();
    let at_one: BigInt = numerator.coeffs().iter().sum();
    if BigInt::from(1 - alternating) != at_one {
        return Err(format!(
            "{ideal}: Betti numbers {betti:?} disagree with numerator {numerator}"
        ));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(nv: usize, s: &str) -> StronglyStableIdeal {
        StronglyStableIdeal::parse(s, nv).unwrap()
    }

    #[test]
    fn hilbert_function_examples() {
        let i = ideal(5, "(x0^2, x0*x1, x0*x2, x1^2, x1*x2, x2^2)");
        assert_eq!(hilbert_function(&i, 2), 9);
        assert_eq!(hilbert_function(&i, 3), 13);
        let z = StronglyStableIdeal::zero(4);
        for j in 0..6 {
            assert_eq!(hilbert_function(&z, j), count_free(j, 4));
        }
        assert_eq!(hilbert_function(&StronglyStableIdeal::unit(3), 0), 0);
    }

    #[test]
    fn table_starts_at_one() {
        let t = HilbertFunctionTable::new(&ideal(3, "(x0, x1^3)"), 4);
        assert_eq!(t.values, vec![1, 2, 3, 3, 3]);
    }

    #[test]
    fn stability_check_rejects_non_stable_sets() {
        // (x1) is not strongly stable, so build it without validation
        let bad = StronglyStableIdeal::raw_for_tests(3, vec![Monomial::var(3, 1)]);
        assert!(!full_stability_check(&bad, 2));
        assert!(full_stability_check(&ideal(4, "(x0^2, x0*x1, x1^3)"), 4));
    }

    #[test]
    fn series_check_examples() {
        assert!(series_consistency_check(
            &ideal(5, "(x0^2, x0*x1, x0*x2, x1^2, x1*x2, x2^2)"),
            6
        ));
        assert!(series_consistency_check(&StronglyStableIdeal::zero(3), 4));
    }

    #[test]
    fn almost_lex_brute_force() {
        assert!(brute_force_is_almost_lex(&ideal(
            4,
            "(x0^2, x0*x1, x0*x2, x1^2)"
        )));
        assert!(!brute_force_is_almost_lex(&ideal(
            4,
            "(x0^2, x0*x1, x0*x2^2, x1^2)"
        )));
    }

    #[test]
    fn naive_small_cases() {
        let p8 = HilbertPolynomial::from_gotzmann(vec![8]).unwrap();
        assert_eq!(naive_enumerate_by_hp(&p8, 4).unwrap().len(), 12);
        let p3z = HilbertPolynomial::from_gotzmann(vec![3, 3]).unwrap();
        assert_eq!(naive_enumerate_by_hp(&p3z, 5).unwrap().len(), 1);
    }
}
