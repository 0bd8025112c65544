//! Monomials of `K[x_0, ..., x_n]` stored as dense exponent vectors.
//!
//! Throughout, `n = num_vars - 1` is the index of the last variable. Shifts
//! never move a variable into or out of `x_n`: the last shiftable index is
//! `n - 1`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// The polynomial ring `K[x_0, ..., x_n]`, identified by its number of variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AmbientRing {
    num_vars: usize,
}

impl AmbientRing {
    /// Restricted rings `R^{(j)}` may have a single variable, so only zero is rejected.
    pub fn new(num_vars: usize) -> Result<Self> {
        if num_vars == 0 {
            return Err(Error::InvalidRing(
                "a ring needs at least one variable".into(),
            ));
        }
        Ok(Self { num_vars })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    /// Index of the last variable.
    pub fn n(&self) -> usize {
        self.num_vars - 1
    }

    /// The ring with the last `j` variables removed.
    pub fn restricted(&self, j: usize) -> Result<Self> {
        if j >= self.num_vars {
            return Err(Error::InvalidRing(format!(
                "cannot remove {j} variables from a ring with {} variables",
                self.num_vars
            )));
        }
        Ok(Self {
            num_vars: self.num_vars - j,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Self { exps }
    }

    pub fn one(num_vars: usize) -> Self {
        Self {
            exps: vec![0; num_vars],
        }
    }

    /// The variable `x_i` in a ring with `num_vars` variables.
    pub fn var(num_vars: usize, i: usize) -> Self {
        let mut exps = vec![0; num_vars];
        exps[i] = 1;
        Self { exps }
    }

    pub fn num_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Largest index of a variable dividing the monomial.
    pub fn max_index(&self) -> Result<usize> {
        self.exps
            .iter()
            .rposition(|&e| e > 0)
            .ok_or(Error::UnitMonomial)
    }

    /// Exponent-wise `self <= other`. Both monomials must live in the same ring.
    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul_var(&self, i: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps[i] += 1;
        Monomial { exps }
    }

    /// `self / x_i`, or `None` when `x_i` does not divide.
    pub fn div_var(&self, i: usize) -> Option<Monomial> {
        if self.exps[i] == 0 {
            return None;
        }
        let mut exps = self.exps.clone();
        exps[i] -= 1;
        Some(Monomial { exps })
    }

    /// `self * x_to / x_from`; `x_from` must divide.
    pub fn shift(&self, from: usize, to: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps[from] -= 1;
        exps[to] += 1;
        Monomial { exps }
    }

    pub fn mul_var_pow(&self, i: usize, k: u32) -> Monomial {
        let mut exps = self.exps.clone();
        exps[i] += k;
        Monomial { exps }
    }

    /// Substitutes `x_i = 1` for every `i` in `vars`.
    pub fn substitute_one(&self, vars: std::ops::Range<usize>) -> Monomial {
        let mut exps = self.exps.clone();
        for i in vars {
            exps[i] = 0;
        }
        Monomial { exps }
    }

    /// Same monomial in a ring with `num_vars >= self.num_vars()` variables.
    pub fn padded(&self, num_vars: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps.resize(num_vars, 0);
        Monomial { exps }
    }

    /// Drops trailing variables; the dropped exponents must be zero.
    pub fn truncated(&self, num_vars: usize) -> Monomial {
        debug_assert!(self.exps[num_vars..].iter().all(|&e| e == 0));
        Monomial {
            exps: self.exps[..num_vars].to_vec(),
        }
    }

    /// Lexicographic comparison: `a > b` iff the first nonzero entry of `a - b`
    /// is positive.
    pub fn lex_cmp(&self, other: &Monomial) -> Result<Ordering> {
        if self.exps.len() != other.exps.len() {
            return Err(Error::RingMismatch {
                left: self.exps.len(),
                right: other.exps.len(),
            });
        }
        Ok(self.exps.cmp(&other.exps))
    }

    /// Degree first, then lexicographic.
    pub fn graded_lex_cmp(&self, other: &Monomial) -> Result<Ordering> {
        let lex = self.lex_cmp(other)?;
        Ok(self.degree().cmp(&other.degree()).then(lex))
    }

    /// The generator listing order: degree ascending, lex descending within a degree.
    /// `Less` means `self` is listed first.
    pub fn canonical_cmp(&self, other: &Monomial) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }

    /// `{ m * x_{i+1} / x_i : x_i | m, 0 <= i < n - 1 }`.
    pub fn right_shifts(&self) -> Result<Vec<Monomial>> {
        if self.is_one() {
            return Err(Error::UnitMonomial);
        }
        let last = self.exps.len().saturating_sub(2);
        Ok((0..last)
            .filter(|&i| self.exps[i] > 0)
            .map(|i| self.shift(i, i + 1))
            .collect())
    }

    /// `{ m * x_{i-1} / x_i : x_i | m, 0 < i <= n - 1 }`.
    pub fn left_shifts(&self) -> Result<Vec<Monomial>> {
        if self.is_one() {
            return Err(Error::UnitMonomial);
        }
        let last = self.exps.len().saturating_sub(2);
        Ok((1..=last)
            .filter(|&i| self.exps[i] > 0)
            .map(|i| self.shift(i, i - 1))
            .collect())
    }

    /// Parses `x0^2*x1`, `x0^2 x1`, or `1` in a ring with `num_vars` variables.
    pub fn parse(text: &str, num_vars: usize) -> Result<Monomial> {
        let err = |msg: &str| Error::Parse(format!("monomial {text:?}: {msg}"));
        let mut exps = vec![0u32; num_vars];
        let s = text.trim();
        if s == "1" {
            return Ok(Monomial { exps });
        }
        let bytes = s.as_bytes();
        let mut pos = 0;
        let read_number = |pos: &mut usize| -> Option<u32> {
            let start = *pos;
            while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
                *pos += 1;
            }
            s[start..*pos].parse().ok()
        };
        let mut seen_factor = false;
        while pos < bytes.len() {
            match bytes[pos] {
                b' ' | b'\t' | b'*' => pos += 1,
                b'x' => {
                    pos += 1;
                    let index =
                        read_number(&mut pos).ok_or_else(|| err("expected variable index"))?;
                    let index = index as usize;
                    if index >= num_vars {
                        return Err(err(&format!(
                            "variable x{index} outside ring with {num_vars} variables"
                        )));
                    }
                    let mut power = 1;
                    if pos < bytes.len() && bytes[pos] == b'^' {
                        pos += 1;
                        power = read_number(&mut pos).ok_or_else(|| err("expected exponent"))?;
                    }
                    exps[index] += power;
                    seen_factor = true;
                }
                other => return Err(err(&format!("unexpected character {:?}", other as char))),
            }
        }
        if !seen_factor {
            return Err(err("empty monomial"));
        }
        Ok(Monomial { exps })
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    fn sorted(mut v: Vec<Monomial>) -> Vec<Monomial> {
        v.sort_by(|a, b| a.exps.cmp(&b.exps));
        v
    }

    #[test]
    fn lex_compare_examples() {
        // x0*x2 > x1^2
        assert_eq!(
            m(&[1, 0, 1]).lex_cmp(&m(&[0, 2, 0])).unwrap(),
            Ordering::Greater
        );
        assert_eq!(
            m(&[1, 2, 0]).lex_cmp(&m(&[1, 2, 0])).unwrap(),
            Ordering::Equal
        );
        // x1^2*x2 > x1*x2^2
        assert_eq!(
            m(&[0, 2, 1]).lex_cmp(&m(&[0, 1, 2])).unwrap(),
            Ordering::Greater
        );
        assert!(matches!(
            m(&[1, 0]).lex_cmp(&m(&[1, 0, 0])),
            Err(Error::RingMismatch { .. })
        ));
    }

    #[test]
    fn graded_and_canonical_orders() {
        let x0 = m(&[1, 0, 0]);
        let x1sq = m(&[0, 2, 0]);
        assert_eq!(x0.graded_lex_cmp(&x1sq).unwrap(), Ordering::Less);
        assert_eq!(x0.lex_cmp(&x1sq).unwrap(), Ordering::Greater);
        assert_eq!(x0.canonical_cmp(&x1sq), Ordering::Less);
        // same degree: lex-larger is listed first
        assert_eq!(m(&[1, 1, 0]).canonical_cmp(&m(&[0, 2, 0])), Ordering::Less);
    }

    #[test]
    fn max_index_examples() {
        assert_eq!(m(&[0, 2, 0, 1, 0, 0]).max_index().unwrap(), 3);
        assert_eq!(m(&[5, 0, 0]).max_index().unwrap(), 0);
        assert_eq!(m(&[0, 3, 1, 0]).max_index().unwrap(), 2);
        assert_eq!(Monomial::one(4).max_index(), Err(Error::UnitMonomial));
    }

    #[test]
    fn right_shift_examples() {
        let a = m(&[0, 2, 0, 1, 0, 0]);
        assert_eq!(
            sorted(a.right_shifts().unwrap()),
            sorted(vec![m(&[0, 1, 1, 1, 0, 0]), m(&[0, 2, 0, 0, 1, 0])])
        );
        // x_{n-1}^k in 4 variables
        assert!(m(&[0, 0, 3, 0]).right_shifts().unwrap().is_empty());
        // x2 is the second-to-last variable, so it does not move to x3
        assert_eq!(
            m(&[1, 0, 1, 0]).right_shifts().unwrap(),
            vec![m(&[0, 1, 1, 0])]
        );
    }

    #[test]
    fn left_shift_examples() {
        let a = m(&[0, 2, 0, 1, 0, 0]);
        assert_eq!(
            sorted(a.left_shifts().unwrap()),
            sorted(vec![m(&[1, 1, 0, 1, 0, 0]), m(&[0, 2, 1, 0, 0, 0])])
        );
        assert!(m(&[4, 0, 0, 0]).left_shifts().unwrap().is_empty());
        assert_eq!(
            sorted(m(&[0, 1, 1, 0]).left_shifts().unwrap()),
            sorted(vec![m(&[1, 0, 1, 0]), m(&[0, 2, 0, 0])])
        );
        assert_eq!(Monomial::one(3).left_shifts(), Err(Error::UnitMonomial));
    }

    #[test]
    fn render_and_parse() {
        assert_eq!(m(&[2, 1, 0]).to_string(), "x0^2*x1");
        assert_eq!(Monomial::one(3).to_string(), "1");
        assert_eq!(Monomial::parse("x0^2*x1", 3).unwrap(), m(&[2, 1, 0]));
        assert_eq!(Monomial::parse(" x1 x2^3 ", 4).unwrap(), m(&[0, 1, 3, 0]));
        assert_eq!(Monomial::parse("1", 2).unwrap(), Monomial::one(2));
        assert!(Monomial::parse("x5", 3).is_err());
        assert!(Monomial::parse("y1", 3).is_err());
        assert!(Monomial::parse("", 3).is_err());
    }

    #[test]
    fn ring_restriction() {
        let r = AmbientRing::new(5).unwrap();
        assert_eq!(r.n(), 4);
        assert_eq!(r.restricted(2).unwrap().num_vars(), 3);
        assert!(r.restricted(5).is_err());
        assert!(AmbientRing::new(0).is_err());
    }

    fn arb_monomial() -> impl Strategy<Value = Monomial> {
        (2usize..7)
            .prop_flat_map(|nv| proptest::collection::vec(0u32..4, nv))
            .prop_filter("positive degree", |e| e.iter().any(|&x| x > 0))
            .prop_map(Monomial::new)
    }

    proptest! {
        #[test]
        fn shifts_are_ordered_and_degree_preserving(a in arb_monomial()) {
            let left = a.left_shifts().unwrap();
            let right = a.right_shifts().unwrap();
            let support = a.exps.iter().filter(|&&e| e > 0).count();
            prop_assert!(left.len() <= support);
            prop_assert!(right.len() <= support);
            for l in &left {
                prop_assert_eq!(l.degree(), a.degree());
                prop_assert_eq!(l.lex_cmp(&a).unwrap(), Ordering::Greater);
                prop_assert!(!right.contains(l));
            }
            for r in &right {
                prop_assert_eq!(r.degree(), a.degree());
                prop_assert_eq!(r.lex_cmp(&a).unwrap(), Ordering::Less);
            }
        }

        #[test]
        fn left_then_right_recovers(a in arb_monomial()) {
            let n = a.num_vars() - 1;
            for i in 1..n {
                if a.exps[i] > 0 {
                    let moved = a.shift(i, i - 1);
                    prop_assert!(moved.right_shifts().unwrap().contains(&a));
                }
            }
        }

        #[test]
        fn display_parse_round_trip(a in arb_monomial()) {
            prop_assert_eq!(Monomial::parse(&a.to_string(), a.num_vars()).unwrap(), a);
        }
    }
}
