//! Strongly stable monomial ideals held as canonical minimal generating sets,
//! and the expansion/contraction moves between saturated ones.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// A strongly stable monomial ideal.
///
/// Generators are minimal and listed in canonical order (degree ascending,
/// lex descending within a degree). The unit ideal is `{1}`, the zero ideal
/// has no generators. Saturation is a property, not a type invariant:
/// `saturate` accepts any strongly stable ideal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "IdealRepr", into = "IdealRepr")]
pub struct StronglyStableIdeal {
    num_vars: usize,
    gens: Vec<Monomial>,
}

/// A Borel move `g * x_to / x_from` (with `to < from`) leaving the ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BorelViolation {
    pub generator: Monomial,
    pub from: usize,
    pub to: usize,
    pub moved: Monomial,
}

impl fmt::Display for BorelViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} * x{} / x{} = {} is not in the ideal",
            self.generator, self.to, self.from, self.moved
        )
    }
}

/// Divisibility-reduced generators in canonical order.
pub fn minimalize(gens: impl IntoIterator<Item = Monomial>) -> Vec<Monomial> {
    let mut all: Vec<Monomial> = gens.into_iter().collect();
    all.sort_by(|a, b| a.canonical_cmp(b));
    all.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(all.len());
    // A proper divisor has strictly smaller degree, hence is already in `kept`.
    for g in all {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept
}

fn in_ideal(gens: &[Monomial], m: &Monomial) -> bool {
    gens.iter().any(|g| g.divides(m))
}

/// The first Borel move on a generator that leaves the ideal, if any.
pub fn borel_violation(gens: &[Monomial]) -> Option<BorelViolation> {
    for g in gens {
        for from in 1..g.num_vars() {
            if g.exponent(from) == 0 {
                continue;
            }
            for to in 0..from {
                let moved = g.shift(from, to);
                if !in_ideal(gens, &moved) {
                    return Some(BorelViolation {
                        generator: g.clone(),
                        from,
                        to,
                        moved,
                    });
                }
            }
        }
    }
    None
}

/// Strong stability checked on minimal generators.
pub fn is_strongly_stable(gens: &[Monomial]) -> bool {
    borel_violation(gens).is_none()
}

impl StronglyStableIdeal {
    /// Minimalizes `gens` and checks strong stability.
    pub fn from_generators(
        num_vars: usize,
        gens: impl IntoIterator<Item = Monomial>,
    ) -> Result<Self> {
        if num_vars == 0 {
            return Err(Error::InvalidRing(
                "a ring needs at least one variable".into(),
            ));
        }
        let gens: Vec<Monomial> = gens.into_iter().collect();
        if let Some(g) = gens.iter().find(|g| g.num_vars() != num_vars) {
            return Err(Error::RingMismatch {
                left: num_vars,
                right: g.num_vars(),
            });
        }
        let gens = minimalize(gens);
        if let Some(v) = borel_violation(&gens) {
            return Err(Error::NotStronglyStable(v.to_string()));
        }
        Ok(Self { num_vars, gens })
    }

    /// Builds from exponent vectors.
    pub fn from_exponents(num_vars: usize, gens: &[&[u32]]) -> Result<Self> {
        Self::from_generators(num_vars, gens.iter().map(|e| Monomial::new(e.to_vec())))
    }

    /// Trusts the caller: `gens` must already be minimal, canonical and strongly stable.
    pub(crate) fn from_canonical_unchecked(num_vars: usize, gens: Vec<Monomial>) -> Self {
        debug_assert!(gens
            .windows(2)
            .all(|w| w[0].canonical_cmp(&w[1]) == Ordering::Less));
        debug_assert!(is_strongly_stable(&gens));
        Self { num_vars, gens }
    }

    #[cfg(test)]
    pub(crate) fn raw_for_tests(num_vars: usize, gens: Vec<Monomial>) -> Self {
        Self { num_vars, gens }
    }

    fn from_unminimal(num_vars: usize, gens: impl IntoIterator<Item = Monomial>) -> Self {
        Self::from_canonical_unchecked(num_vars, minimalize(gens))
    }

    pub fn unit(num_vars: usize) -> Self {
        Self {
            num_vars,
            gens: vec![Monomial::one(num_vars)],
        }
    }

    pub fn zero(num_vars: usize) -> Self {
        Self {
            num_vars,
            gens: Vec::new(),
        }
    }

    /// `(x_0, ..., x_{k-1})`.
    pub fn first_variables(num_vars: usize, k: usize) -> Self {
        Self {
            num_vars,
            gens: (0..k).map(|i| Monomial::var(num_vars, i)).collect(),
        }
    }

    /// Parses the text form `(x0^2, x0*x1)`; `(1)` and `(0)`/`()` are accepted.
    pub fn parse(text: &str, num_vars: usize) -> Result<Self> {
        let s = text.trim();
        let inner = s
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("ideal {text:?}: expected parentheses")))?
            .trim();
        if inner.is_empty() || inner == "0" {
            return Ok(Self::zero(num_vars));
        }
        let gens = inner
            .split(',')
            .map(|part| Monomial::parse(part, num_vars))
            .collect::<Result<Vec<_>>>()?;
        Self::from_generators(num_vars, gens)
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    /// Index of the last variable.
    pub fn n(&self) -> usize {
        self.num_vars - 1
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        in_ideal(&self.gens, m)
    }

    pub fn is_generator(&self, m: &Monomial) -> bool {
        self.gens.binary_search_by(|g| g.canonical_cmp(m)).is_ok()
    }

    /// `(max index, degree)` of every generator; the data the closed-form
    /// invariants depend on. Not defined for the unit ideal.
    pub fn shape(&self) -> Vec<(usize, u32)> {
        self.gens
            .iter()
            .map(|g| (g.max_index().unwrap_or(0), g.degree()))
            .collect()
    }

    fn divisible_by_var(&self, var: usize) -> impl Iterator<Item = &Monomial> {
        self.gens.iter().filter(move |g| g.exponent(var) > 0)
    }

    /// No generator involves `x_n`.
    pub fn is_saturated(&self) -> bool {
        self.divisible_by_var(self.n()).next().is_none()
    }

    /// No generator involves `x_{n-1}` or `x_n`.
    pub fn is_doubly_saturated(&self) -> bool {
        self.is_saturated()
            && (self.n() == 0 || self.divisible_by_var(self.n() - 1).next().is_none())
    }

    /// Sets `x_n = 1`.
    pub fn saturate(&self) -> Self {
        let n = self.n();
        Self::from_unminimal(
            self.num_vars,
            self.gens.iter().map(|g| g.substitute_one(n..n + 1)),
        )
    }

    /// Sets `x_{n-1} = x_n = 1`.
    pub fn double_saturate(&self) -> Self {
        let start = self.n().saturating_sub(1);
        Self::from_unminimal(
            self.num_vars,
            self.gens
                .iter()
                .map(|g| g.substitute_one(start..self.num_vars)),
        )
    }

    /// The ideal `I^{(j)}` of `K[x_0, ..., x_{n-j}]` obtained by setting
    /// `x_{n-j} = ... = x_{n-1} = 1` in the generators.
    pub fn restrict(&self, j: usize) -> Result<Self> {
        if j == 0 {
            return Ok(self.clone());
        }
        if j >= self.num_vars {
            return Err(Error::InvalidRing(format!(
                "cannot restrict a ring with {} variables by {j}",
                self.num_vars
            )));
        }
        let new_vars = self.num_vars - j;
        let n = self.n();
        // x_{n-j}, ..., x_n all vanish; the new last variable x_{n-j} is absent.
        let gens = self.gens.iter().map(|g| {
            let mut e = g.substitute_one(n - j..self.num_vars).exponents().to_vec();
            e.truncate(new_vars);
            Monomial::new(e)
        });
        Ok(Self::from_unminimal(new_vars, gens))
    }

    /// The extension ideal in a ring with `num_vars` variables.
    pub fn extend(&self, num_vars: usize) -> Result<Self> {
        if num_vars < self.num_vars {
            return Err(Error::InvalidRing(format!(
                "cannot extend from {} to {num_vars} variables",
                self.num_vars
            )));
        }
        Ok(Self {
            num_vars,
            gens: self.gens.iter().map(|g| g.padded(num_vars)).collect(),
        })
    }

    /// `m` is a minimal generator none of whose right shifts is a minimal generator.
    /// For the unit ideal, `m = 1` is expandable.
    pub fn is_expandable(&self, m: &Monomial) -> bool {
        if m.num_vars() != self.num_vars {
            return false;
        }
        if m.is_one() {
            return self.is_unit();
        }
        if !self.is_generator(m) || m.exponent(self.n()) > 0 {
            return false;
        }
        m.right_shifts()
            .map(|shifts| shifts.iter().all(|s| !self.is_generator(s)))
            .unwrap_or(false)
    }

    /// Replaces `m` by `m * x_r, ..., m * x_{n-1}` where `r = max(m)`.
    pub fn expand(&self, m: &Monomial) -> Result<Self> {
        if !self.is_expandable(m) {
            return Err(Error::NotExpandable(format!("{m} in {self}")));
        }
        if m.is_one() {
            return Ok(Self::first_variables(self.num_vars, self.n()));
        }
        let r = m.max_index()?;
        let gens = self
            .gens
            .iter()
            .filter(|g| *g != m)
            .cloned()
            .chain((r..self.n()).map(|k| m.mul_var(k)));
        Ok(Self::from_unminimal(self.num_vars, gens))
    }

    /// `m * x_{n-1}` is a minimal generator and every left shift of `m` lies in
    /// the ideal. `m = 1` is contractible exactly when `x_{n-1}` is a generator.
    pub fn is_contractible(&self, m: &Monomial) -> bool {
        if m.num_vars() != self.num_vars || self.n() == 0 {
            return false;
        }
        let n = self.n();
        if m.exponent(n) > 0 || !self.is_generator(&m.mul_var(n - 1)) {
            return false;
        }
        if m.is_one() {
            return true;
        }
        m.left_shifts()
            .map(|shifts| shifts.iter().all(|s| self.contains(s)))
            .unwrap_or(false)
    }

    /// Adds `m` and drops `m * x_r, ..., m * x_{n-1}` where `r = max(m)`.
    pub fn contract(&self, m: &Monomial) -> Result<Self> {
        if !self.is_contractible(m) {
            return Err(Error::NotContractible(format!("{m} in {self}")));
        }
        if m.is_one() {
            return Ok(Self::unit(self.num_vars));
        }
        let r = m.max_index()?;
        let removed: Vec<Monomial> = (r..self.n()).map(|k| m.mul_var(k)).collect();
        let gens = self
            .gens
            .iter()
            .filter(|g| !removed.contains(g))
            .cloned()
            .chain(std::iter::once(m.clone()));
        Ok(Self::from_unminimal(self.num_vars, gens))
    }

    /// The contraction taking one step towards the double saturation: among
    /// generators divisible by `x_{n-1}`, the least-degree, lex-largest one,
    /// divided by `x_{n-1}`.
    pub fn canonical_contraction(&self) -> Option<Monomial> {
        if self.n() == 0 {
            return None;
        }
        let var = self.n() - 1;
        // canonical order lists least degree, lex-largest first
        self.divisible_by_var(var)
            .next()
            .and_then(|g| g.div_var(var))
    }

    /// Contractions leading to the double saturation, each paired with the
    /// ideal it produces.
    pub fn contraction_sequence_to_double_saturation(&self) -> Vec<(Monomial, Self)> {
        let mut steps = Vec::new();
        let mut current = self.clone();
        while let Some(m) = current.canonical_contraction() {
            current = current
                .contract(&m)
                .expect("least-degree lex-largest candidate is always contractible");
            steps.push((m, current.clone()));
        }
        steps
    }
}

impl PartialOrd for StronglyStableIdeal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Ring size, then number of generators, then generator sequences compared
/// element-wise in canonical monomial order.
impl Ord for StronglyStableIdeal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.num_vars
            .cmp(&other.num_vars)
            .then(self.gens.len().cmp(&other.gens.len()))
            .then_with(|| {
                self.gens
                    .iter()
                    .zip(&other.gens)
                    .map(|(a, b)| a.canonical_cmp(b))
                    .find(|o| o.is_ne())
                    .unwrap_or(Ordering::Equal)
            })
    }
}

impl fmt::Display for StronglyStableIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return f.write_str("(0)");
        }
        f.write_str("(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

/// JSON form `{"vars": n+1, "gens": [[e0, ..., en], ...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IdealRepr {
    pub vars: usize,
    pub gens: Vec<Vec<u32>>,
}

impl From<StronglyStableIdeal> for IdealRepr {
    fn from(ideal: StronglyStableIdeal) -> Self {
        IdealRepr {
            vars: ideal.num_vars,
            gens: ideal.gens.iter().map(|g| g.exponents().to_vec()).collect(),
        }
    }
}

impl TryFrom<IdealRepr> for StronglyStableIdeal {
    type Error = Error;

    fn try_from(repr: IdealRepr) -> Result<Self> {
        StronglyStableIdeal::from_generators(repr.vars, repr.gens.into_iter().map(Monomial::new))
    }
}
