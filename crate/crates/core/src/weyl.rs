//! Weyl group elements as lattice automorphisms of the character lattice.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::arith::{dot_i64, IMat};
use crate::par::{self, Exec};
use crate::rootdata::{FrobeniusDatum, RootDatum};
use crate::{Error, Result};

/// Default enumeration cap, overridable with `ZIPCONE_ENUM_CAP`.
pub const DEFAULT_ENUM_CAP: usize = 5_000_000;

/// Enumeration cap from the environment, or [`DEFAULT_ENUM_CAP`].
pub fn default_cap() -> usize {
    std::env::var("ZIPCONE_ENUM_CAP")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_ENUM_CAP)
}

/// A Weyl group element. Two elements are equal when their matrices are.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct WeylElement {
    pub matrix: IMat,
    pub word: Vec<usize>,
    pub length: usize,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl Eq for WeylElement {}

impl WeylElement {
    pub fn identity(n: usize) -> Self {
        WeylElement { matrix: IMat::identity(n), word: Vec::new(), length: 0 }
    }

    /// Rebuild an element from its matrix, recovering a reduced word from right descents.
    pub fn from_matrix(rd: &RootDatum, matrix: IMat) -> Result<Self> {
        let mut w = matrix.clone();
        let mut rev = Vec::new();
        let limit = rd.positive_roots().len();
        while let Some(i) = (0..rd.semisimple_rank()).find(|&i| !rd.is_positive_root(&w.apply(rd.simple_root(i)))) {
            if rev.len() >= limit {
                return Err(Error::Internal("matrix is not a Weyl group element".into()));
            }
            w = w.mul(&reflection_matrix(rd, i));
            rev.push(i);
        }
        if !w.is_identity() {
            return Err(Error::Internal("matrix is not a Weyl group element".into()));
        }
        rev.reverse();
        Ok(WeylElement { matrix, length: rev.len(), word: rev })
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn inverse(&self) -> WeylElement {
        let matrix = self.matrix.inverse().expect("Weyl elements are unimodular");
        let mut word = self.word.clone();
        word.reverse();
        WeylElement { matrix, word, length: self.length }
    }

    /// The product `self · other` with a fresh reduced word.
    pub fn compose(&self, rd: &RootDatum, other: &WeylElement) -> Result<WeylElement> {
        WeylElement::from_matrix(rd, self.matrix.mul(&other.matrix))
    }
}

/// `s_α(λ) = λ − <λ, α^∨> α`.
pub fn reflect(rd: &RootDatum, alpha: usize, lam: &[i64]) -> Result<Vec<i64>> {
    rd.check_index(alpha)?;
    rd.check_dim(lam)?;
    let c = dot_i64(lam, rd.simple_coroot(alpha));
    Ok(lam.iter().zip(rd.simple_root(alpha)).map(|(x, a)| x - c * a).collect())
}

/// Matrix of the simple reflection `s_i`.
pub fn reflection_matrix(rd: &RootDatum, i: usize) -> IMat {
    let n = rd.rank();
    let a = rd.simple_root(i);
    let c = rd.simple_coroot(i);
    let rows: Vec<Vec<i64>> = (0..n)
        .map(|r| (0..n).map(|s| i64::from(r == s) - a[r] * c[s]).collect())
        .collect();
    IMat::from_rows(&rows).expect("square")
}

/// Element given by a word in the simple reflections.
pub fn from_word(rd: &RootDatum, word: &[usize]) -> Result<WeylElement> {
    let mut m = IMat::identity(rd.rank());
    for &i in word {
        rd.check_index(i)?;
        m = m.mul(&reflection_matrix(rd, i));
    }
    WeylElement::from_matrix(rd, m)
}

pub fn act(w: &WeylElement, lam: &[i64]) -> Result<Vec<i64>> {
    if lam.len() != w.matrix.dim() {
        return Err(Error::DimensionMismatch { expected: w.matrix.dim(), found: lam.len() });
    }
    Ok(w.matrix.apply(lam))
}

pub fn length(w: &WeylElement) -> usize {
    w.length
}

/// `|{β ∈ Φ+ : w(β) ∈ Φ−}|`.
pub fn inversion_count(rd: &RootDatum, w: &IMat) -> usize {
    rd.positive_roots().iter().filter(|b| !rd.is_positive_root(&w.apply(b))).count()
}

/// Sorted, deduplicated and range-checked copy of a set of simple-root indices.
pub fn check_parabolic(rd: &RootDatum, k: &[usize]) -> Result<Vec<usize>> {
    let mut v = k.to_vec();
    v.sort_unstable();
    v.dedup();
    for &i in &v {
        rd.check_index(i)?;
    }
    Ok(v)
}

/// Longest element of `W_K`: multiply on the right by `s_i` (i in K) while `w(α_i)` stays positive.
pub fn longest_element(rd: &RootDatum, k: &[usize]) -> Result<WeylElement> {
    let k = check_parabolic(rd, k)?;
    let mut m = IMat::identity(rd.rank());
    let mut word = Vec::new();
    while let Some(&i) = k.iter().find(|&&i| rd.is_positive_root(&m.apply(rd.simple_root(i)))) {
        m = m.mul(&reflection_matrix(rd, i));
        word.push(i);
    }
    Ok(WeylElement { matrix: m, length: word.len(), word })
}

/// All elements of `W_K`, ordered by length and then by matrix.
pub fn enumerate_parabolic(rd: &RootDatum, k: &[usize], cap: usize) -> Result<Vec<WeylElement>> {
    enumerate_parabolic_with(rd, k, cap, Exec::default())
}

/// [`enumerate_parabolic`] with an explicit execution strategy.
pub fn enumerate_parabolic_with(
    rd: &RootDatum,
    k: &[usize],
    cap: usize,
    exec: Exec,
) -> Result<Vec<WeylElement>> {
    let k = check_parabolic(rd, k)?;
    let refl: Vec<IMat> = k.iter().map(|&i| reflection_matrix(rd, i)).collect();
    let mut all = vec![WeylElement::identity(rd.rank())];
    let mut level = all.clone();
    if cap < 1 {
        return Err(Error::CapExceeded { partial: 0, cap });
    }
    while !level.is_empty() {
        // Right multiplication by s_i raises the length exactly when w(α_i) > 0.
        let children: Vec<Vec<WeylElement>> = par::map(exec, &level, |w| {
            k.iter()
                .zip(&refl)
                .filter(|(&i, _)| rd.is_positive_root(&w.matrix.apply(rd.simple_root(i))))
                .map(|(&i, s)| {
                    let mut word = w.word.clone();
                    word.push(i);
                    WeylElement { matrix: w.matrix.mul(s), word, length: w.length + 1 }
                })
                .collect()
        });
        let mut seen = HashSet::new();
        let mut next: Vec<WeylElement> =
            children.into_iter().flatten().filter(|w| seen.insert(w.matrix.clone())).collect();
        next.sort_by(|a, b| a.matrix.cmp(&b.matrix));
        if all.len() + next.len() > cap {
            return Err(Error::CapExceeded { partial: all.len() + next.len(), cap });
        }
        all.extend(next.iter().cloned());
        level = next;
    }
    Ok(all)
}

/// Elements commuting with `σ` as lattice maps.
pub fn sigma_fixed(elements: &[WeylElement], frob: &FrobeniusDatum) -> Vec<WeylElement> {
    let s = frob.sigma();
    elements.iter().filter(|w| s.mul(&w.matrix) == w.matrix.mul(s)).cloned().collect()
}

/// The opposition involution `α ↦ −w₀,K(α)` of `K`, as a map on all simple
/// indices that is the identity outside `K`.
pub fn opposition_involution(rd: &RootDatum, k: &[usize]) -> Result<Vec<usize>> {
    let k = check_parabolic(rd, k)?;
    let w0 = longest_element(rd, &k)?;
    let mut tau: Vec<usize> = (0..rd.semisimple_rank()).collect();
    for &i in &k {
        let img: Vec<i64> = w0.matrix.apply(rd.simple_root(i)).iter().map(|x| -x).collect();
        match rd.simple_index(&img) {
            Some(j) if k.contains(&j) => tau[i] = j,
            _ => return Err(Error::Internal("−w₀ does not preserve K".into())),
        }
    }
    Ok(tau)
}

/// Minimal-length representatives of `W_K \ W_ambient`: elements `w` with
/// `w⁻¹(α) > 0` for every `α` in `K`.
pub fn min_coset_reps(rd: &RootDatum, k: &[usize], ambient: &[usize], cap: usize) -> Result<Vec<WeylElement>> {
    let k = check_parabolic(rd, k)?;
    let all = enumerate_parabolic(rd, ambient, cap)?;
    Ok(all
        .into_iter()
        .filter(|w| {
            let inv = w.inverse();
            k.iter().all(|&i| rd.is_positive_root(&inv.matrix.apply(rd.simple_root(i))))
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{build_root_datum, validate_frobenius};

    #[test]
    fn reflect_examples() {
        let gl2 = build_root_datum("GL2").unwrap();
        assert_eq!(reflect(&gl2, 0, &[1, 0]).unwrap(), vec![0, 1]);
        let b2 = build_root_datum("B2").unwrap();
        assert_eq!(reflect(&b2, 1, &[5, 7]).unwrap(), vec![5, -7]);
        assert_eq!(reflect(&gl2, 0, &[3, 3]).unwrap(), vec![3, 3]);
        assert!(reflect(&gl2, 1, &[1, 0]).is_err());
    }

    #[test]
    fn longest_element_examples() {
        let b2 = build_root_datum("B2").unwrap();
        let e = longest_element(&b2, &[]).unwrap();
        assert_eq!(e.length, 0);
        assert!(e.matrix.is_identity());
        let w0 = longest_element(&b2, &[0, 1]).unwrap();
        assert_eq!(w0.length, 4);
        assert_eq!(w0.matrix, IMat::identity(2).scale(-1));
        assert_eq!(act(&w0, &[3, -2]).unwrap(), vec![-3, 2]);
        let gl3 = build_root_datum("GL3").unwrap();
        let s = longest_element(&gl3, &[0]).unwrap();
        assert_eq!(s.length, 1);
        assert_eq!(act(&s, &[1, 2, 3]).unwrap(), vec![2, 1, 3]);
    }

    #[test]
    fn act_matches_stepwise_reflection() {
        let a2 = build_root_datum("A2").unwrap();
        let w = from_word(&a2, &[0, 1]).unwrap();
        let alpha = a2.simple_root(0).to_vec();
        let step = reflect(&a2, 0, &reflect(&a2, 1, &alpha).unwrap()).unwrap();
        assert_eq!(act(&w, &alpha).unwrap(), step);
        assert!(act(&w, &[1, 2]).is_err());
    }

    #[test]
    fn enumeration_sizes() {
        let b2 = build_root_datum("B2").unwrap();
        assert_eq!(enumerate_parabolic(&b2, &[], 10).unwrap().len(), 1);
        let all = enumerate_parabolic(&b2, &[0, 1], 100).unwrap();
        let lens: Vec<usize> = all.iter().map(|w| w.length).collect();
        assert_eq!(lens, vec![0, 1, 1, 2, 2, 3, 3, 4]);
        let a2 = build_root_datum("A2").unwrap();
        assert_eq!(enumerate_parabolic(&a2, &[0, 1], 100).unwrap().len(), 6);
        let err = enumerate_parabolic(&a2, &[0, 1], 4).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { cap: 4, .. }));
    }

    #[test]
    fn b2_matches_signed_permutations() {
        let b2 = build_root_datum("B2").unwrap();
        let got: HashSet<IMat> = enumerate_parabolic(&b2, &[0, 1], 100).unwrap().into_iter().map(|w| w.matrix).collect();
        let mut want = HashSet::new();
        for perm in [[0usize, 1], [1, 0]] {
            for s0 in [1i64, -1] {
                for s1 in [1i64, -1] {
                    let mut rows = vec![vec![0i64; 2]; 2];
                    rows[perm[0]][0] = s0;
                    rows[perm[1]][1] = s1;
                    want.insert(IMat::from_rows(&rows).unwrap());
                }
            }
        }
        assert_eq!(got, want);
    }

    #[test]
    fn sigma_fixed_examples() {
        let gl3 = build_root_datum("GL3").unwrap();
        let inert = validate_frobenius(&gl3, 2, &[vec![0, 0, -1], vec![0, -1, 0], vec![-1, 0, 0]]).unwrap();
        let triv = enumerate_parabolic(&gl3, &[], 10).unwrap();
        assert_eq!(sigma_fixed(&triv, &inert).len(), 1);
        let split = validate_frobenius(&gl3, 2, &IMat::identity(3).rows()).unwrap();
        let full = enumerate_parabolic(&gl3, &[0, 1], 10).unwrap();
        assert_eq!(sigma_fixed(&full, &split), full);

        // A3 as GL4 with the flip (a1..a4) -> (-a4..-a1). The fixed points of the
        // graph automorphism form a Weyl group of type B2, of order 8.
        let gl4 = build_root_datum("GL4").unwrap();
        let mut flip = vec![vec![0i64; 4]; 4];
        for (i, row) in flip.iter_mut().enumerate() {
            row[3 - i] = -1;
        }
        let frob = validate_frobenius(&gl4, 2, &flip).unwrap();
        let w = enumerate_parabolic(&gl4, &[0, 1, 2], 100).unwrap();
        assert_eq!(w.len(), 24);
        let brute = w
            .iter()
            .filter(|x| (0..4).all(|j| {
                let e: Vec<i64> = (0..4).map(|k| i64::from(k == j)).collect();
                frob.sigma().apply(&x.matrix.apply(&e)) == x.matrix.apply(&frob.sigma().apply(&e))
            }))
            .count();
        assert_eq!(brute, 8);
        assert_eq!(sigma_fixed(&w, &frob).len(), 8);
    }

    #[test]
    fn opposition_examples() {
        let b2 = build_root_datum("B2").unwrap();
        assert_eq!(opposition_involution(&b2, &[0, 1]).unwrap(), vec![0, 1]);
        let a2 = build_root_datum("A2").unwrap();
        assert_eq!(opposition_involution(&a2, &[0, 1]).unwrap(), vec![1, 0]);
        assert_eq!(opposition_involution(&a2, &[1]).unwrap(), vec![0, 1]);
    }

    #[test]
    fn coset_representatives() {
        let b3 = build_root_datum("B3").unwrap();
        assert_eq!(min_coset_reps(&b3, &[0, 1, 2], &[0, 1, 2], 100).unwrap().len(), 1);
        assert_eq!(min_coset_reps(&b3, &[], &[0, 1, 2], 100).unwrap().len(), 48);
        // Inside I = {α2, α3} of type B2, the roots orthogonal to α1^∨ form {α3}.
        assert_eq!(min_coset_reps(&b3, &[2], &[1, 2], 100).unwrap().len(), 4);
    }

    #[test]
    fn from_matrix_round_trip() {
        let d4 = build_root_datum("D4").unwrap();
        for w in enumerate_parabolic(&d4, &[0, 1, 2, 3], 1000).unwrap().iter().step_by(17) {
            let again = WeylElement::from_matrix(&d4, w.matrix.clone()).unwrap();
            assert_eq!(again.length, w.length);
            assert_eq!(from_word(&d4, &again.word).unwrap(), *w);
        }
        assert!(WeylElement::from_matrix(&d4, IMat::identity(4).scale(2)).is_err());
    }
}
