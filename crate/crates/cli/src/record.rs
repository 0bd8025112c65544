//! One output record per ideal, in JSON and text form.

use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::{json, Value};
use stable_ideals::{
    betti_numbers, hilbert_polynomial_of, is_almost_lex, regularity, series_numerator_of,
    HilbertPolynomial, SeriesNumerator, StronglyStableIdeal,
};

#[derive(Debug, Clone, Serialize)]
pub struct PolynomialRecord {
    pub gotzmann: Vec<u64>,
    pub a_vector: Vec<u64>,
    pub coefficients: String,
}

impl PolynomialRecord {
    pub fn new(p: &HilbertPolynomial) -> Self {
        Self {
            gotzmann: p.gotzmann().to_vec(),
            a_vector: p.a_vector(),
            coefficients: p.to_string(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct OutputRecord {
    pub ideal: StronglyStableIdeal,
    pub text: String,
    pub betti: Vec<u64>,
    pub regularity: u32,
    pub series_numerator: Vec<Value>,
    pub hilbert_polynomial: PolynomialRecord,
    pub almost_lex: bool,
}

/// Integer coefficients as JSON numbers, or strings when they do not fit in 64 bits.
pub fn numerator_json(g: &SeriesNumerator) -> Vec<Value> {
    g.coeffs()
        .iter()
        .map(|c| {
            c.to_i64()
                .map_or_else(|| json!(c.to_string()), |v| json!(v))
        })
        .collect()
}

impl OutputRecord {
    pub fn new(ideal: &StronglyStableIdeal) -> Self {
        let p = hilbert_polynomial_of(ideal)
            .expect("a saturated strongly stable ideal has an admissible Hilbert polynomial");
        Self {
            ideal: ideal.clone(),
            text: ideal.to_string(),
            betti: betti_numbers(ideal),
            regularity: regularity(ideal),
            series_numerator: numerator_json(&series_numerator_of(ideal)),
            hilbert_polynomial: PolynomialRecord::new(&p),
            almost_lex: is_almost_lex(ideal),
        }
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }

    /// Multi-line description used by `analyze` in text mode.
    pub fn describe(&self) -> String {
        let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(" ");
        let p = &self.hilbert_polynomial;
        format!(
            "ideal: {}\nvariables: {}\nbetti: {}\nregularity: {}\nseries numerator: {}\nhilbert polynomial: {} (gotzmann {})\nalmost lexsegment: {}",
            self.text,
            self.ideal.num_vars(),
            join(&self.betti),
            self.regularity,
            series_numerator_of(&self.ideal),
            p.coefficients,
            join(&p.gotzmann),
            self.almost_lex
        )
    }
}
