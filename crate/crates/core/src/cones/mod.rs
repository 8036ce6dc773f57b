//! Exact rational polyhedral cones.
//!
//! A cone is kept as primitive integer vectors on either or both sides:
//! generators (nonnegative combinations) and inequality covectors `v`
//! meaning `<λ, v> ≥ 0`. Completion fills in both sides in a canonical,
//! minimal form.

pub mod dd;
pub mod fm;

use std::collections::BTreeSet;

use num_traits::{Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::arith::{
    clear_denominators, dot, int_rows_to_q, is_zero_vec, primitive, project_out, q_inverse, q_rank, q_transpose,
    span_basis, to_big, Int, QMatrix, Rat,
};
use crate::{Error, Result};

/// Largest supported ambient dimension.
pub const MAX_DIM: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cone {
    dim: usize,
    generators: Option<Vec<Vec<Int>>>,
    inequalities: Option<Vec<Vec<Int>>>,
}

fn normalize(rows: Vec<Vec<Int>>) -> Vec<Vec<Int>> {
    let set: BTreeSet<Vec<Int>> = rows.into_iter().filter(|r| !is_zero_vec(r)).map(primitive).collect();
    set.into_iter().collect()
}

fn check_rows(dim: usize, rows: &[Vec<Int>]) -> Result<()> {
    match rows.iter().find(|r| r.len() != dim) {
        Some(r) => Err(Error::DimensionMismatch { expected: dim, found: r.len() }),
        None => Ok(()),
    }
}

fn negated(v: &[Int]) -> Vec<Int> {
    v.iter().map(|x| -x).collect()
}

/// Canonical lineality basis and extreme rays of `{x : <a, x> ≥ 0}`.
fn canonical_pair(dim: usize, rows: &[Vec<Int>]) -> (Vec<Vec<Int>>, Vec<Vec<Int>>) {
    let (lin, rays) = dd::double_description(dim, rows);
    let basis = span_basis(&lin);
    let rays = normalize(rays.iter().map(|r| project_out(r, &basis)).collect());
    (basis, rays)
}

fn with_both_signs(basis: &[Vec<Int>], rays: Vec<Vec<Int>>) -> Vec<Vec<Int>> {
    let mut out = rays;
    for b in basis {
        out.push(b.clone());
        out.push(negated(b));
    }
    normalize(out)
}

impl Cone {
    pub fn from_generators(dim: usize, gens: Vec<Vec<Int>>) -> Result<Cone> {
        check_rows(dim, &gens)?;
        Ok(Cone { dim, generators: Some(normalize(gens)), inequalities: None })
    }

    pub fn from_inequalities(dim: usize, ineqs: Vec<Vec<Int>>) -> Result<Cone> {
        check_rows(dim, &ineqs)?;
        Ok(Cone { dim, generators: None, inequalities: Some(normalize(ineqs)) })
    }

    pub fn from_generators_i64(dim: usize, gens: &[Vec<i64>]) -> Result<Cone> {
        Cone::from_generators(dim, gens.iter().map(|g| to_big(g)).collect())
    }

    pub fn from_inequalities_i64(dim: usize, ineqs: &[Vec<i64>]) -> Result<Cone> {
        Cone::from_inequalities(dim, ineqs.iter().map(|g| to_big(g)).collect())
    }

    pub fn from_rational_generators(dim: usize, gens: &[Vec<Rat>]) -> Result<Cone> {
        Cone::from_generators(dim, gens.iter().map(|g| clear_denominators(g)).collect())
    }

    pub fn from_rational_inequalities(dim: usize, ineqs: &[Vec<Rat>]) -> Result<Cone> {
        Cone::from_inequalities(dim, ineqs.iter().map(|g| clear_denominators(g)).collect())
    }

    /// The whole space.
    pub fn full(dim: usize) -> Cone {
        Cone { dim, generators: None, inequalities: Some(Vec::new()) }
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn stored_generators(&self) -> Option<&[Vec<Int>]> {
        self.generators.as_deref()
    }

    pub fn stored_inequalities(&self) -> Option<&[Vec<Int>]> {
        self.inequalities.as_deref()
    }

    pub fn is_complete(&self) -> bool {
        self.generators.is_some() && self.inequalities.is_some()
    }

    /// Both representations in canonical minimal form.
    pub fn complete(&self) -> Result<Cone> {
        if self.dim > MAX_DIM {
            return Err(Error::DimensionTooLarge(self.dim));
        }
        let (gens, ineqs) = match (&self.generators, &self.inequalities) {
            (_, Some(h)) => {
                let (lin, rays) = canonical_pair(self.dim, h);
                let gens = with_both_signs(&lin, rays);
                let (eqs, facets) = canonical_pair(self.dim, &gens);
                (gens, with_both_signs(&eqs, facets))
            }
            (Some(v), None) => {
                let (eqs, facets) = canonical_pair(self.dim, v);
                let ineqs = with_both_signs(&eqs, facets);
                let (lin, rays) = canonical_pair(self.dim, &ineqs);
                (with_both_signs(&lin, rays), ineqs)
            }
            (None, None) => return Err(Error::Internal("cone without representation".into())),
        };
        Ok(Cone { dim: self.dim, generators: Some(gens), inequalities: Some(ineqs) })
    }

    /// Generators, computing them if needed.
    pub fn generators(&self) -> Result<Vec<Vec<Int>>> {
        match &self.generators {
            Some(g) => Ok(g.clone()),
            None => Ok(self.complete()?.generators.expect("completed")),
        }
    }

    /// Inequalities, computing them if needed.
    pub fn inequalities(&self) -> Result<Vec<Vec<Int>>> {
        match &self.inequalities {
            Some(h) => Ok(h.clone()),
            None => Ok(self.complete()?.inequalities.expect("completed")),
        }
    }

    /// Inequalities that are not part of an opposite pair (the facets of a completed cone).
    pub fn facets(&self) -> Result<Vec<Vec<Int>>> {
        let h = self.inequalities()?;
        let set: BTreeSet<&Vec<Int>> = h.iter().collect();
        Ok(h.iter().filter(|v| !set.contains(&negated(v))).cloned().collect())
    }

    /// Equation covectors `v` with `<λ, v> = 0` on the cone, one per opposite pair.
    pub fn equations(&self) -> Result<Vec<Vec<Int>>> {
        let h = self.inequalities()?;
        let set: BTreeSet<&Vec<Int>> = h.iter().collect();
        Ok(h.iter()
            .filter(|v| set.contains(&negated(v)) && v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_positive()))
            .cloned()
            .collect())
    }

    /// Generators that are not part of an opposite pair (extreme rays of a completed cone).
    pub fn rays(&self) -> Result<Vec<Vec<Int>>> {
        let g = self.generators()?;
        let set: BTreeSet<&Vec<Int>> = g.iter().collect();
        Ok(g.iter().filter(|v| !set.contains(&negated(v))).cloned().collect())
    }

    pub fn member(&self, lam: &[Int]) -> Result<bool> {
        if lam.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: lam.len() });
        }
        Ok(self.inequalities()?.iter().all(|v| !dot(lam, v).is_negative()))
    }

    pub fn member_i64(&self, lam: &[i64]) -> Result<bool> {
        self.member(&to_big(lam))
    }

    /// `self ⊇ inner`.
    pub fn contains(&self, inner: &Cone) -> Result<bool> {
        Ok(self.find_violation(inner)?.is_none())
    }

    /// A generator of `inner` and an inequality of `self` it violates, if any.
    pub fn find_violation(&self, inner: &Cone) -> Result<Option<(Vec<Int>, Vec<Int>)>> {
        if inner.dim != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: inner.dim });
        }
        let h = self.inequalities()?;
        for g in inner.generators()? {
            if let Some(v) = h.iter().find(|v| dot(&g, v).is_negative()) {
                return Ok(Some((g, v.clone())));
            }
        }
        Ok(None)
    }

    pub fn equal(&self, other: &Cone) -> Result<bool> {
        Ok(self.contains(other)? && other.contains(self)?)
    }

    pub fn intersect(&self, other: &Cone) -> Result<Cone> {
        if other.dim != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: other.dim });
        }
        let mut h = self.inequalities()?;
        h.extend(other.inequalities()?);
        Cone::from_inequalities(self.dim, h)?.complete()
    }

    /// Image under a linear map given by its rows (possibly non-square).
    pub fn image_under(&self, map: &QMatrix) -> Result<Cone> {
        if map.iter().any(|r| r.len() != self.dim) {
            return Err(Error::DimensionMismatch { expected: self.dim, found: map[0].len() });
        }
        let gens: Vec<Vec<Rat>> = self
            .generators()?
            .iter()
            .map(|g| map.iter().map(|row| row.iter().zip(g).fold(Rat::zero(), |a, (m, x)| a + m * Rat::from_integer(x.clone()))).collect())
            .collect();
        Cone::from_rational_generators(map.len(), &gens)?.complete()
    }

    /// Image under an invertible square map through the H-representation:
    /// covectors transform by the inverse transpose.
    pub fn pushforward_h(&self, map: &QMatrix) -> Result<Cone> {
        if map.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: map.len() });
        }
        let inv = q_inverse(map).ok_or(Error::SingularMap)?;
        let it = q_transpose(&inv);
        let ineqs: Vec<Vec<Rat>> = self
            .inequalities()?
            .iter()
            .map(|v| it.iter().map(|row| row.iter().zip(v).fold(Rat::zero(), |a, (m, x)| a + m * Rat::from_integer(x.clone()))).collect())
            .collect();
        Cone::from_rational_inequalities(self.dim, &ineqs)?.complete()
    }

    /// Dimension of the linear span.
    pub fn dim(&self) -> Result<usize> {
        Ok(q_rank(&int_rows_to_q(&self.generators()?)))
    }

    pub fn to_json(&self) -> Result<Value> {
        let c = if self.is_complete() { self.clone() } else { self.complete()? };
        Ok(json!({
            "schema": "cone.v1",
            "dim": c.dim,
            "generators": rows_to_json(c.generators.as_deref().unwrap_or_default()),
            "inequalities": rows_to_json(c.inequalities.as_deref().unwrap_or_default()),
        }))
    }

    pub fn from_json(v: &Value) -> Result<Cone> {
        let dim = v["dim"].as_u64().ok_or_else(|| Error::Parse("cone.v1 needs `dim`".into()))? as usize;
        let gens = v.get("generators").filter(|g| !g.is_null()).map(rows_from_json).transpose()?;
        let ineqs = v.get("inequalities").filter(|g| !g.is_null()).map(rows_from_json).transpose()?;
        match (gens, ineqs) {
            (_, Some(h)) => Cone::from_inequalities(dim, h),
            (Some(g), None) => Cone::from_generators(dim, g),
            (None, None) => Err(Error::Parse("cone.v1 needs generators or inequalities".into())),
        }
    }
}

fn int_to_json(x: &Int) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

fn rows_to_json(rows: &[Vec<Int>]) -> Value {
    Value::Array(rows.iter().map(|r| Value::Array(r.iter().map(int_to_json).collect())).collect())
}

fn int_from_json(v: &Value) -> Result<Int> {
    match v {
        Value::Number(n) => n.as_i64().map(Int::from).ok_or_else(|| Error::Parse(format!("not an integer: {n}"))),
        Value::String(s) => s.parse().map_err(|_| Error::Parse(format!("not an integer: {s}"))),
        _ => Err(Error::Parse(format!("not an integer: {v}"))),
    }
}

fn rows_from_json(v: &Value) -> Result<Vec<Vec<Int>>> {
    let rows = v.as_array().ok_or_else(|| Error::Parse("expected an array of rows".into()))?;
    rows.iter()
        .map(|r| {
            r.as_array()
                .ok_or_else(|| Error::Parse("expected a row".into()))?
                .iter()
                .map(int_from_json)
                .collect()
        })
        .collect()
}
