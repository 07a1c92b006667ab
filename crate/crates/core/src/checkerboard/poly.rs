use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use crate::algebra::Quaternion;

use super::group::{right_mul_unit, GroupUnit};

/// A corner-count polynomial: quaternion coefficients indexed by the number
/// of corners `C`.
///
/// Invariant: no stored coefficient is zero, so equality of maps is equality
/// of polynomials.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct AmplitudePoly {
    coeffs: BTreeMap<u32, Quaternion>,
}

impl AmplitudePoly {
    pub fn zero() -> AmplitudePoly {
        AmplitudePoly::default()
    }

    pub fn one() -> AmplitudePoly {
        let mut poly = AmplitudePoly::zero();
        poly.coeffs.insert(0, Quaternion::one());
        poly
    }

    pub fn from_coeffs<I>(coeffs: I) -> AmplitudePoly
    where
        I: IntoIterator<Item = (u32, Quaternion)>,
    {
        let mut poly = AmplitudePoly::zero();
        for (c, q) in coeffs {
            poly.add_term(c, &q);
        }
        poly
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, corners: u32) -> Option<&Quaternion> {
        self.coeffs.get(&corners)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, &Quaternion)> {
        self.coeffs.iter().map(|(c, q)| (*c, q))
    }

    pub fn term_count(&self) -> usize {
        self.coeffs.len()
    }

    /// Highest corner count with a nonzero coefficient.
    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn add_term(&mut self, corners: u32, value: &Quaternion) {
        if value.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(corners).or_insert_with(Quaternion::zero);
        *entry = &*entry + value;
        if entry.is_zero() {
            self.coeffs.remove(&corners);
        }
    }

    pub fn add_unit_term(&mut self, corners: u32, unit: GroupUnit) {
        self.add_term(corners, &unit.quaternion());
    }

    pub fn add_assign(&mut self, rhs: &AmplitudePoly) {
        for (c, q) in &rhs.coeffs {
            self.add_term(*c, q);
        }
    }

    /// `μ^1 · (self · unit)`: multiply every coefficient on the right by a
    /// group unit and shift corner counts up by one. This is the transfer
    /// step applied when a path turns.
    pub fn shifted_right_mul(&self, unit: GroupUnit) -> AmplitudePoly {
        let mut out = AmplitudePoly::zero();
        for (c, q) in &self.coeffs {
            out.coeffs.insert(c + 1, right_mul_unit(q, unit));
        }
        out
    }

    /// JSON form: a list of `{"C": n, "coeff": {...}}` objects in ascending
    /// corner order, with zero quaternion components omitted and the nonzero
    /// ones rendered as exact integer strings.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .coeffs
            .iter()
            .map(|(c, q)| {
                let mut coeff = serde_json::Map::new();
                for (key, component) in
                    [("re", &q.re), ("i", &q.i), ("j", &q.j), ("k", &q.k)]
                {
                    if !component.is_zero() {
                        coeff.insert(key.to_string(), Value::String(component.to_string()));
                    }
                }
                json!({ "C": c, "coeff": Value::Object(coeff) })
            })
            .collect();
        Value::Array(terms)
    }
}

impl fmt::Display for AmplitudePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (c, q) in &self.coeffs {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({q})·u^{c}")?;
        }
        Ok(())
    }
}
