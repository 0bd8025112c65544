//! Enumeration of saturated strongly stable ideals by Hilbert polynomial,
//! of almost lexsegment ideals by Hilbert polynomial, and of saturated
//! strongly stable ideals by Hilbert series.
//!
//! Every result list is sorted by the ideal ordering (number of generators,
//! then canonical generator sequence) so that output does not depend on the
//! number of workers.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::hilbert::{
    betti_numbers, hilbert_poly_coeffs, lex_ideal, numerator_to_polynomial, HilbertPolynomial,
    SeriesNumerator,
};
use crate::ideal::StronglyStableIdeal;
use crate::monomial::Monomial;

/// A node of the expansion search inside the ring `R^{(stage)}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationNode {
    pub ideal: StronglyStableIdeal,
    pub stage: usize,
    /// The generator expanded to reach this node, if it was reached within the stage.
    pub last_expanded: Option<Monomial>,
    pub remaining: u64,
}

/// Children of `node` under the canonical fence.
///
/// Expanding `m` is accepted only when `m` is the canonical contraction of the
/// child: `m * x_v` must come first, in (degree ascending, lex descending)
/// order, among the child's generators divisible by the marker variable
/// `x_v`, the second-to-last variable of the current ring. Each ideal of the
/// stage then has exactly one expansion path from the stage start.
pub fn canonical_expansions(node: &EnumerationNode) -> Vec<EnumerationNode> {
    if node.remaining == 0 {
        return Vec::new();
    }
    node.ideal
        .generators()
        .iter()
        .filter(|m| node.ideal.is_expandable(m))
        .filter_map(|m| {
            let child = node.ideal.expand(m).ok()?;
            (child.canonical_contraction().as_ref() == Some(m)).then(|| EnumerationNode {
                ideal: child,
                stage: node.stage,
                last_expanded: Some(m.clone()),
                remaining: node.remaining - 1,
            })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerateOptions {
    /// Worker threads; 0 uses the available parallelism.
    pub workers: usize,
    /// Sort the result; unsorted output follows the search and may vary with `workers`.
    pub sorted: bool,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        Self {
            workers: 0,
            sorted: true,
        }
    }
}

/// Result of `enumerate_by_hp_with` together with search statistics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HpEnumeration {
    pub ideals: Vec<StronglyStableIdeal>,
    /// `stage_budgets[j]` is the largest expansion budget met in `R^{(j)}`.
    pub stage_budgets: Vec<u64>,
    /// Largest total number of expansions along one search path.
    pub max_path_expansions: u64,
}

fn check_ring(p: &HilbertPolynomial, num_vars: usize) -> Result<usize> {
    let Some(d) = p.degree() else {
        return Err(Error::NotHilbertPolynomial(
            "the zero polynomial is not admissible here".into(),
        ));
    };
    if num_vars < 2 || d + 1 >= num_vars {
        return Err(Error::RingTooSmall {
            degree: d,
            num_vars,
        });
    }
    Ok(d)
}

fn thread_pool(workers: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::Internal(format!("cannot start worker pool: {e}")))
}

/// `Δ^j p - p_{R^{(j)}/I}`, which must be a non-negative constant for a usable stage start.
fn stage_budget(target: &HilbertPolynomial, ideal: &StronglyStableIdeal) -> Result<Option<u64>> {
    let diff = &target.coefficients() - &hilbert_poly_coeffs(ideal);
    match diff.degree() {
        None => Ok(Some(0)),
        Some(0) => {
            let c = diff.coeff(0);
            if !c.is_integer() {
                return Err(Error::Internal(format!(
                    "stage budget {c} for {ideal} is not an integer"
                )));
            }
            let c = c.to_integer();
            if c.is_negative() {
                return Ok(None);
            }
            c.to_u64()
                .map(Some)
                .ok_or_else(|| Error::Internal(format!("stage budget {c} is too large")))
        }
        Some(k) => Err(Error::Internal(format!(
            "difference between target and {ideal} has degree {k}, expected a constant"
        ))),
    }
}

/// Depth-first search of one stage; `spent` counts expansions along the path.
fn exhaust(start: EnumerationNode, spent: u64) -> Vec<(StronglyStableIdeal, u64)> {
    let mut out = Vec::new();
    let mut stack = vec![(start, spent)];
    while let Some((node, spent)) = stack.pop() {
        if node.remaining == 0 {
            out.push((node.ideal, spent));
            continue;
        }
        stack.extend(
            canonical_expansions(&node)
                .into_iter()
                .map(|c| (c, spent + 1)),
        );
    }
    out
}

/// Breadth-first until the frontier is wide enough to share, then parallel depth-first.
fn exhaust_all(
    starts: Vec<(EnumerationNode, u64)>,
    workers: usize,
) -> Vec<(StronglyStableIdeal, u64)> {
    let wide = 8 * workers.max(1);
    let mut done = Vec::new();
    let mut frontier = starts;
    while !frontier.is_empty() && frontier.len() < wide {
        let mut next = Vec::new();
        for (node, spent) in frontier {
            if node.remaining == 0 {
                done.push((node.ideal, spent));
            } else {
                next.extend(
                    canonical_expansions(&node)
                        .into_iter()
                        .map(|c| (c, spent + 1)),
                );
            }
        }
        frontier = next;
    }
    let rest: Vec<_> = frontier
        .into_par_iter()
        .flat_map_iter(|(node, spent)| exhaust(node, spent))
        .collect();
    done.extend(rest);
    done
}

/// All saturated strongly stable ideals of a ring with `num_vars` variables
/// with Hilbert polynomial `p`, sorted.
pub fn enumerate_by_hp(p: &HilbertPolynomial, num_vars: usize) -> Result<Vec<StronglyStableIdeal>> {
    enumerate_by_hp_with(p, num_vars, EnumerateOptions::default()).map(|e| e.ideals)
}

/// Stagewise search: start from `(1)` in `R^{(d)}`, and in each ring
/// `R^{(j)}` exhaust `Δ^j p - p_{R^{(j)}/I}` expansions.
pub fn enumerate_by_hp_with(
    p: &HilbertPolynomial,
    num_vars: usize,
    options: EnumerateOptions,
) -> Result<HpEnumeration> {
    let d = check_ring(p, num_vars)?;
    let pool = thread_pool(options.workers)?;
    let workers = pool.current_num_threads();
    let mut stage_budgets = vec![0u64; d + 1];
    let mut current = vec![(StronglyStableIdeal::unit(num_vars - d), 0u64)];
    for j in (0..=d).rev() {
        let ring_vars = num_vars - j;
        let target = p.delta(j);
        let mut starts = Vec::new();
        for (ideal, spent) in current {
            let ideal = ideal.extend(ring_vars)?;
            let Some(budget) = stage_budget(&target, &ideal)? else {
                continue;
            };
            stage_budgets[j] = stage_budgets[j].max(budget);
            starts.push((
                EnumerationNode {
                    ideal,
                    stage: j,
                    last_expanded: None,
                    remaining: budget,
                },
                spent,
            ));
        }
        current = pool.install(|| exhaust_all(starts, workers));
    }
    let max_path_expansions = current.iter().map(|&(_, s)| s).max().unwrap_or(0);
    let mut ideals: Vec<_> = current.into_iter().map(|(i, _)| i).collect();
    if options.sorted {
        pool.install(|| ideals.par_sort());
    }
    Ok(HpEnumeration {
        ideals,
        stage_budgets,
        max_path_expansions,
    })
}

/// For each occupied generator degree, the lex-smallest generator of that degree.
pub fn lex_expansion_candidates(ideal: &StronglyStableIdeal) -> Vec<Monomial> {
    let gens = ideal.generators();
    // canonical order lists each degree lex-descending, so the last of a run is lex-smallest
    gens.iter()
        .enumerate()
        .filter(|&(i, g)| {
            gens.get(i + 1)
                .is_none_or(|next| next.degree() != g.degree())
        })
        .map(|(_, g)| g.clone())
        .filter(|g| ideal.is_expandable(g))
        .collect()
}

/// All almost lexsegment ideals with Hilbert polynomial `p`, sorted.
///
/// Starts from the lexicographic ideal of `p - a_0` and performs `a_0` lex
/// expansions; only sequences whose expansion degrees never decrease are
/// followed, which reaches each ideal once.
pub fn enumerate_almost_lex(
    p: &HilbertPolynomial,
    num_vars: usize,
) -> Result<Vec<StronglyStableIdeal>> {
    check_ring(p, num_vars)?;
    let a0 = p.a_vector()[0];
    let start = lex_ideal(&p.without_a0(), num_vars)?;
    let mut out = Vec::new();
    let mut stack = vec![(start, 0u32, a0)];
    while let Some((ideal, min_degree, remaining)) = stack.pop() {
        if remaining == 0 {
            out.push(ideal);
            continue;
        }
        for m in lex_expansion_candidates(&ideal) {
            if m.degree() < min_degree {
                continue;
            }
            let child = ideal.expand(&m)?;
            stack.push((child, m.degree(), remaining - 1));
        }
    }
    out.sort();
    Ok(out)
}

/// Whether the degree-`j` part of `I ∩ K[x_0, ..., x_{n-1}]` is an initial
/// lex segment in every degree. Assumes `I` saturated and strongly stable.
///
/// For a strongly stable ideal it suffices that, for every generator `u`,
/// each degree-`deg u` monomial lex-greater than `u` lies in the ideal; and
/// the lex-smallest such monomial sharing a given prefix with `u` is the one
/// that puts the rest of the degree on the last variable.
pub fn is_almost_lex(ideal: &StronglyStableIdeal) -> bool {
    if ideal.is_unit() || ideal.is_zero() {
        return true;
    }
    let nv = ideal.num_vars();
    let last = nv - 2;
    ideal.generators().iter().all(|u| {
        let e = u.exponents();
        let degree = u.degree();
        let mut prefix = 0u32;
        (0..last).all(|k| {
            let ok = prefix + e[k] + 1 > degree || {
                let mut v = vec![0u32; nv];
                v[..k].copy_from_slice(&e[..k]);
                v[k] = e[k] + 1;
                v[last] = degree - prefix - e[k] - 1;
                ideal.contains(&Monomial::new(v))
            };
            prefix += e[k];
            ok
        })
    })
}

/// A node of the series search: the ideal built so far, the part of the
/// numerator still to be produced, and the monomials that may be added next.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesNode {
    pub ideal: StronglyStableIdeal,
    pub remaining_numerator: SeriesNumerator,
    /// Lex-descending, all of degree `sd` of the remaining numerator.
    pub candidates: Vec<Monomial>,
}

/// Monomials of `degree` in `x_0, ..., x_{n-1}` that may be added next: not
/// in the ideal, every left shift in the ideal, and lex-smaller than the last
/// generator when that generator has the same degree. Lex-descending.
pub fn addable_monomials(ideal: &StronglyStableIdeal, degree: u32) -> Vec<Monomial> {
    let nv = ideal.num_vars();
    let bound = ideal.generators().last().filter(|g| g.degree() == degree);
    let mut out = Vec::new();
    let mut exps = vec![0u32; nv];
    collect_addable(ideal, bound, &mut exps, 0, degree, &mut out);
    out
}

fn collect_addable(
    ideal: &StronglyStableIdeal,
    bound: Option<&Monomial>,
    exps: &mut Vec<u32>,
    var: usize,
    left: u32,
    out: &mut Vec<Monomial>,
) {
    // every completion of a prefix already in the ideal is in the ideal
    if ideal.contains(&Monomial::new(exps.clone())) {
        return;
    }
    let last = exps.len() - 2;
    if var == last {
        exps[var] = left;
        let m = Monomial::new(exps.clone());
        let below_bound = bound.is_none_or(|b| m.exponents() < b.exponents());
        let shifts_inside = m.is_one()
            || m.left_shifts()
                .is_ok_and(|s| s.iter().all(|x| ideal.contains(x)));
        if below_bound && shifts_inside && !ideal.contains(&m) {
            out.push(m);
        }
        exps[var] = 0;
        return;
    }
    for e in (0..=left).rev() {
        exps[var] = e;
        collect_addable(ideal, bound, exps, var + 1, left - e, out);
    }
    exps[var] = 0;
}

impl SeriesNode {
    fn new(ideal: StronglyStableIdeal, remaining_numerator: SeriesNumerator) -> Self {
        let candidates = match remaining_numerator.sd() {
            Some(sd) => addable_monomials(&ideal, sd as u32),
            None => Vec::new(),
        };
        Self {
            ideal,
            remaining_numerator,
            candidates,
        }
    }

    /// Children obtained by adding each candidate as a new generator; branches
    /// whose next degree passes `cap` or whose numerator can no longer be
    /// matched are dropped.
    fn children(&self, cap: usize) -> Vec<SeriesNode> {
        let nv = self.ideal.num_vars();
        let mut out = Vec::new();
        for b in &self.candidates {
            let mut f = self.remaining_numerator.clone();
            f.subtract_generator(b.max_index().unwrap_or(0), b.degree() as usize);
            if let Some(sd) = f.sd() {
                // later generators only lower the coefficient at sd
                if sd > cap || f.coeff(sd).is_negative() {
                    continue;
                }
            }
            let mut gens = self.ideal.generators().to_vec();
            gens.push(b.clone());
            let ideal = StronglyStableIdeal::from_canonical_unchecked(nv, gens);
            out.push(SeriesNode::new(ideal, f));
        }
        out
    }
}

/// All saturated strongly stable ideals whose Hilbert series has numerator
/// `g` over `(1-t)^{num_vars}`, sorted.
///
/// Generators are added one at a time in order of degree and, within a
/// degree, lex-descending, always at the least degree where the numerator
/// still differs. Branches are cut once that degree exceeds the Gotzmann
/// number of the implied Hilbert polynomial.
pub fn enumerate_by_series(
    g: &SeriesNumerator,
    num_vars: usize,
) -> Result<Vec<StronglyStableIdeal>> {
    if num_vars < 2 {
        return Err(Error::InvalidRing(
            "at least two variables are needed".into(),
        ));
    }
    if g.coeff(0) != BigInt::from(1) {
        return Err(Error::InvalidNumerator(format!(
            "constant term of {g} must be 1"
        )));
    }
    let f0 = g.one_minus();
    let Some(sd0) = f0.sd() else {
        return Ok(vec![StronglyStableIdeal::zero(num_vars)]);
    };
    let Ok(p) = numerator_to_polynomial(g, num_vars) else {
        return Ok(Vec::new());
    };
    if p.is_zero() {
        return Ok(Vec::new());
    }
    let cap = p.gotzmann_number() as usize;
    if sd0 > cap || f0.coeff(sd0).is_negative() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut stack = vec![SeriesNode::new(StronglyStableIdeal::zero(num_vars), f0)];
    while let Some(node) = stack.pop() {
        if node.remaining_numerator.is_zero() {
            out.push(node.ideal);
            continue;
        }
        stack.extend(node.children(cap));
    }
    out.sort();
    Ok(out)
}

/// Ideals whose total Betti vector is componentwise at least that of every
/// other input (shorter vectors padded with zeros).
pub fn max_betti_filter(ideals: &[StronglyStableIdeal]) -> Vec<StronglyStableIdeal> {
    let bettis: Vec<Vec<u64>> = ideals.iter().map(betti_numbers).collect();
    let len = bettis.iter().map(Vec::len).max().unwrap_or(0);
    let padded: Vec<Vec<u64>> = bettis
        .into_iter()
        .map(|mut b| {
            b.resize(len, 0);
            b
        })
        .collect();
    let distinct: BTreeSet<&Vec<u64>> = padded.iter().collect();
    ideals
        .iter()
        .zip(&padded)
        .filter(|(_, b)| {
            distinct
                .iter()
                .all(|o| b.iter().zip(o.iter()).all(|(x, y)| x >= y))
        })
        .map(|(i, _)| i.clone())
        .collect()
}
