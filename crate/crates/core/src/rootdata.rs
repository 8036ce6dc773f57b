//! Based root data over the integers and Frobenius data.
//!
//! Characters live in `Z^n` and cocharacters in the dual `Z^n`; the pairing is
//! the standard dot product. Dominance means `<λ, α^∨> ≥ 0` for every simple
//! root `α`.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::arith::{dot_i64, q_det, rat_int, IMat, Rat};
use crate::{Error, Result};

/// Hard cap on the number of positive roots produced by the closure.
pub const ROOT_CAP: usize = 10_000;

/// A based root datum: simple roots and coroots in a lattice of rank `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootDatum {
    rank: usize,
    simple_roots: Vec<Vec<i64>>,
    simple_coroots: Vec<Vec<i64>>,
    label: Option<String>,
    cartan: Vec<Vec<i64>>,
    positive_roots: Vec<Vec<i64>>,
    positive_coroots: Vec<Vec<i64>>,
    positive_coeffs: Vec<Vec<i64>>,
    root_index: HashMap<Vec<i64>, usize>,
}

impl RootDatum {
    /// Validate explicit simple roots and coroots.
    pub fn new(
        rank: usize,
        simple_roots: Vec<Vec<i64>>,
        simple_coroots: Vec<Vec<i64>>,
        label: Option<String>,
    ) -> Result<Self> {
        if simple_roots.len() != simple_coroots.len() {
            return Err(Error::DimensionMismatch {
                expected: simple_roots.len(),
                found: simple_coroots.len(),
            });
        }
        if simple_roots.len() > rank {
            return Err(Error::InvalidCartan(format!(
                "{} simple roots in a lattice of rank {rank}",
                simple_roots.len()
            )));
        }
        for v in simple_roots.iter().chain(&simple_coroots) {
            if v.len() != rank {
                return Err(Error::DimensionMismatch { expected: rank, found: v.len() });
            }
        }
        let r = simple_roots.len();
        let cartan: Vec<Vec<i64>> = (0..r)
            .map(|i| (0..r).map(|j| dot_i64(&simple_roots[j], &simple_coroots[i])).collect())
            .collect();
        check_cartan(&cartan)?;
        let (positive_coeffs, positive_coroots) = closure(&cartan, &simple_roots, &simple_coroots)?;
        let positive_roots: Vec<Vec<i64>> = positive_coeffs
            .iter()
            .map(|c| {
                let mut v = vec![0; rank];
                for (j, &cj) in c.iter().enumerate() {
                    for (x, a) in v.iter_mut().zip(&simple_roots[j]) {
                        *x += cj * a;
                    }
                }
                v
            })
            .collect();
        let root_index = positive_roots.iter().enumerate().map(|(i, v)| (v.clone(), i)).collect();
        Ok(RootDatum {
            rank,
            simple_roots,
            simple_coroots,
            label,
            cartan,
            positive_roots,
            positive_coroots,
            positive_coeffs,
            root_index,
        })
    }

    /// Root datum with lattice equal to the weight lattice of a Cartan matrix:
    /// the simple coroots are the standard basis and the simple roots are the
    /// columns of the matrix.
    pub fn from_cartan(cartan: &[Vec<i64>], label: Option<String>) -> Result<Self> {
        let r = cartan.len();
        let roots = (0..r).map(|j| (0..r).map(|i| cartan[i][j]).collect()).collect();
        let coroots = (0..r).map(|i| unit(r, i)).collect();
        RootDatum::new(r, roots, coroots, label)
    }

    /// Direct sum of root data, lattices concatenated.
    pub fn product(parts: &[RootDatum]) -> Result<Self> {
        let rank: usize = parts.iter().map(|p| p.rank).sum();
        let mut roots = Vec::new();
        let mut coroots = Vec::new();
        let mut offset = 0;
        for p in parts {
            for (a, c) in p.simple_roots.iter().zip(&p.simple_coroots) {
                let mut va = vec![0; rank];
                let mut vc = vec![0; rank];
                va[offset..offset + p.rank].copy_from_slice(a);
                vc[offset..offset + p.rank].copy_from_slice(c);
                roots.push(va);
                coroots.push(vc);
            }
            offset += p.rank;
        }
        let label = parts.iter().map(|p| p.label().to_string()).collect::<Vec<_>>().join("x");
        RootDatum::new(rank, roots, coroots, Some(label))
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn semisimple_rank(&self) -> usize {
        self.simple_roots.len()
    }

    pub fn label(&self) -> &str {
        self.label.as_deref().unwrap_or("custom")
    }

    pub fn simple_roots(&self) -> &[Vec<i64>] {
        &self.simple_roots
    }

    pub fn simple_coroots(&self) -> &[Vec<i64>] {
        &self.simple_coroots
    }

    pub fn simple_root(&self, i: usize) -> &[i64] {
        &self.simple_roots[i]
    }

    pub fn simple_coroot(&self, i: usize) -> &[i64] {
        &self.simple_coroots[i]
    }

    /// `C[i][j] = <α_j, α_i^∨>`.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Positive roots sorted by height, then by simple-root coordinates in
    /// decreasing lexicographic order (so the simple roots come first, in index order).
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    /// Coroots matching [`RootDatum::positive_roots`].
    pub fn positive_coroots(&self) -> &[Vec<i64>] {
        &self.positive_coroots
    }

    /// Simple-root coordinates matching [`RootDatum::positive_roots`].
    pub fn positive_root_coeffs(&self) -> &[Vec<i64>] {
        &self.positive_coeffs
    }

    pub fn is_positive_root(&self, v: &[i64]) -> bool {
        self.root_index.contains_key(v)
    }

    pub fn is_root(&self, v: &[i64]) -> bool {
        self.is_positive_root(v) || self.root_index.contains_key(&negate(v))
    }

    /// Coroot of an arbitrary root, `None` if `v` is not a root.
    pub fn coroot_of(&self, v: &[i64]) -> Option<Vec<i64>> {
        if let Some(&i) = self.root_index.get(v) {
            return Some(self.positive_coroots[i].clone());
        }
        self.root_index.get(&negate(v)).map(|&i| negate(&self.positive_coroots[i]))
    }

    /// Index of a simple root given as a character.
    pub fn simple_index(&self, v: &[i64]) -> Option<usize> {
        self.simple_roots.iter().position(|a| a == v)
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i < self.semisimple_rank() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index: i, len: self.semisimple_rank() })
        }
    }

    pub fn check_dim(&self, v: &[i64]) -> Result<()> {
        if v.len() == self.rank {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: self.rank, found: v.len() })
        }
    }

    pub fn to_json(&self) -> RootDatumJson {
        RootDatumJson {
            schema: "rootdatum.v1".into(),
            rank: self.rank,
            simple_roots: self.simple_roots.clone(),
            simple_coroots: self.simple_coroots.clone(),
            label: self.label.clone(),
        }
    }

    pub fn from_json(j: &RootDatumJson) -> Result<Self> {
        RootDatum::new(j.rank, j.simple_roots.clone(), j.simple_coroots.clone(), j.label.clone())
    }
}

/// Serialized form `rootdatum.v1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootDatumJson {
    #[serde(default = "rootdatum_schema")]
    pub schema: String,
    pub rank: usize,
    pub simple_roots: Vec<Vec<i64>>,
    pub simple_coroots: Vec<Vec<i64>>,
    #[serde(default)]
    pub label: Option<String>,
}

fn rootdatum_schema() -> String {
    "rootdatum.v1".into()
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

fn negate(v: &[i64]) -> Vec<i64> {
    v.iter().map(|x| -x).collect()
}

/// Pairing `<λ, δ>` of a character with a cocharacter.
pub fn pair(lam: &[i64], cochar: &[i64]) -> Result<i64> {
    if lam.len() != cochar.len() {
        return Err(Error::DimensionMismatch { expected: lam.len(), found: cochar.len() });
    }
    Ok(dot_i64(lam, cochar))
}

/// Pairing with a rational cocharacter.
pub fn pair_rational(lam: &[i64], cochar: &[Rat]) -> Result<Rat> {
    if lam.len() != cochar.len() {
        return Err(Error::DimensionMismatch { expected: lam.len(), found: cochar.len() });
    }
    Ok(lam.iter().zip(cochar).fold(Rat::from_integer(0.into()), |acc, (&a, d)| acc + d * rat_int(a)))
}

/// Connected components of the Dynkin diagram restricted to `verts`.
pub fn diagram_components(cartan: &[Vec<i64>], verts: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; cartan.len()];
    let inside: Vec<bool> = (0..cartan.len()).map(|v| verts.contains(&v)).collect();
    let mut comps = Vec::new();
    for &start in verts {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut k = 0;
        while k < comp.len() {
            let u = comp[k];
            for v in 0..cartan.len() {
                if inside[v] && !seen[v] && cartan[u][v] != 0 {
                    seen[v] = true;
                    comp.push(v);
                }
            }
            k += 1;
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps.sort();
    comps
}

fn check_cartan(c: &[Vec<i64>]) -> Result<()> {
    let r = c.len();
    for i in 0..r {
        if c[i][i] != 2 {
            return Err(Error::InvalidCartan(format!("diagonal entry {i} is {}", c[i][i])));
        }
        for j in 0..r {
            if i != j && (c[i][j] > 0 || (c[i][j] == 0) != (c[j][i] == 0)) {
                return Err(Error::InvalidCartan(format!("bad off-diagonal pair ({i},{j})")));
            }
        }
    }
    // Finite type: symmetrizable with positive definite symmetrization.
    let all: Vec<usize> = (0..r).collect();
    for comp in diagram_components(c, &all) {
        let mut d: HashMap<usize, Rat> = HashMap::new();
        d.insert(comp[0], rat_int(1));
        let mut stack = vec![comp[0]];
        while let Some(u) = stack.pop() {
            for &v in &comp {
                if u != v && c[u][v] != 0 {
                    // d_u c[u][v] = d_v c[v][u]
                    let dv = &d[&u] * rat_int(c[u][v]) / rat_int(c[v][u]);
                    match d.get(&v) {
                        Some(old) if *old != dv => {
                            return Err(Error::InvalidCartan("not symmetrizable".into()))
                        }
                        Some(_) => {}
                        None => {
                            d.insert(v, dv);
                            stack.push(v);
                        }
                    }
                }
            }
        }
        for k in 1..=comp.len() {
            let minor: Vec<Vec<Rat>> = comp[..k]
                .iter()
                .map(|&i| comp[..k].iter().map(|&j| &d[&i] * rat_int(c[i][j])).collect())
                .collect();
            if q_det(&minor) <= rat_int(0) {
                return Err(Error::InvalidCartan("not of finite type".into()));
            }
        }
    }
    Ok(())
}

type Closure = (Vec<Vec<i64>>, Vec<Vec<i64>>);

fn closure(cartan: &[Vec<i64>], roots: &[Vec<i64>], coroots: &[Vec<i64>]) -> Result<Closure> {
    let r = cartan.len();
    let mut coeffs: Vec<Vec<i64>> = (0..r).map(|i| unit(r, i)).collect();
    let mut cor: Vec<Vec<i64>> = coroots.to_vec();
    let mut seen: HashMap<Vec<i64>, usize> = coeffs.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
    let mut k = 0;
    while k < coeffs.len() {
        for i in 0..r {
            let beta = coeffs[k].clone();
            let c: i64 = (0..r).map(|j| beta[j] * cartan[i][j]).sum();
            if c == 0 {
                continue;
            }
            let mut next = beta;
            next[i] -= c;
            if next.iter().any(|&x| x < 0) || seen.contains_key(&next) {
                continue;
            }
            let b_cor = &cor[k];
            let t = dot_i64(&roots[i], b_cor);
            let new_cor: Vec<i64> = b_cor.iter().zip(&coroots[i]).map(|(x, y)| x - t * y).collect();
            seen.insert(next.clone(), coeffs.len());
            coeffs.push(next);
            cor.push(new_cor);
            if coeffs.len() > ROOT_CAP {
                return Err(Error::NonFiniteSystem(ROOT_CAP));
            }
        }
        k += 1;
    }
    let mut order: Vec<usize> = (0..coeffs.len()).collect();
    order.sort_by(|&a, &b| {
        let ha: i64 = coeffs[a].iter().sum();
        let hb: i64 = coeffs[b].iter().sum();
        ha.cmp(&hb).then_with(|| coeffs[b].cmp(&coeffs[a]))
    });
    Ok((
        order.iter().map(|&i| coeffs[i].clone()).collect(),
        order.iter().map(|&i| cor[i].clone()).collect(),
    ))
}

/// Cartan matrix of a connected Dynkin type in Bourbaki numbering.
pub fn cartan_matrix(letter: char, n: usize) -> Result<Vec<Vec<i64>>> {
    let bad = || Error::UnknownLabel(format!("{letter}{n}"));
    let mut c = vec![vec![0i64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let link = |c: &mut Vec<Vec<i64>>, i: usize, j: usize| {
        c[i][j] = -1;
        c[j][i] = -1;
    };
    match (letter, n) {
        ('A', n) if n >= 1 => (1..n).for_each(|i| link(&mut c, i - 1, i)),
        ('B', n) if n >= 2 => {
            (1..n).for_each(|i| link(&mut c, i - 1, i));
            c[n - 1][n - 2] = -2;
        }
        ('C', n) if n >= 2 => {
            (1..n).for_each(|i| link(&mut c, i - 1, i));
            c[n - 2][n - 1] = -2;
        }
        ('D', n) if n >= 3 => {
            (1..n - 1).for_each(|i| link(&mut c, i - 1, i));
            link(&mut c, n - 3, n - 1);
        }
        ('E', n) if (6..=8).contains(&n) => {
            link(&mut c, 0, 2);
            link(&mut c, 1, 3);
            (3..n).for_each(|i| link(&mut c, i - 1, i));
        }
        ('F', 4) => {
            link(&mut c, 0, 1);
            link(&mut c, 1, 2);
            link(&mut c, 2, 3);
            c[2][1] = -2;
        }
        ('G', 2) => {
            c[0][1] = -3;
            c[1][0] = -1;
        }
        _ => return Err(bad()),
    }
    Ok(c)
}

/// Dynkin type of a connected set of vertices, e.g. `"B3"` or `"E6"`.
/// Two-vertex doubly laced diagrams are reported as `"B2"`.
pub fn diagram_type(cartan: &[Vec<i64>], verts: &[usize]) -> String {
    let k = verts.len();
    if k == 0 {
        return String::from("-");
    }
    if k == 1 {
        return String::from("A1");
    }
    let adj = |u: usize, v: usize| u != v && cartan[u][v] != 0;
    let degree = |u: usize| verts.iter().filter(|&&v| adj(u, v)).count();
    let mut double = None;
    for &u in verts {
        for &v in verts {
            if adj(u, v) {
                let m = cartan[u][v] * cartan[v][u];
                if m == 3 {
                    return String::from("G2");
                }
                if m == 2 && cartan[u][v] == -2 {
                    double = Some((u, v));
                }
            }
        }
    }
    if let Some((short, long)) = double {
        if k == 2 {
            return String::from("B2");
        }
        if degree(short) == 1 {
            return format!("B{k}");
        }
        if degree(long) == 1 {
            return format!("C{k}");
        }
        return String::from("F4");
    }
    let Some(&branch) = verts.iter().find(|&&u| degree(u) == 3) else {
        return format!("A{k}");
    };
    let mut arms: Vec<usize> = verts
        .iter()
        .filter(|&&v| adj(branch, v))
        .map(|&start| {
            let (mut prev, mut cur, mut len) = (branch, start, 1);
            loop {
                let next = verts.iter().copied().find(|&w| w != prev && adj(cur, w));
                match next {
                    Some(w) => {
                        prev = cur;
                        cur = w;
                        len += 1;
                    }
                    None => break len,
                }
            }
        })
        .collect();
    arms.sort_unstable();
    match arms.as_slice() {
        [1, 1, _] => format!("D{k}"),
        [1, 2, 2] => String::from("E6"),
        [1, 2, 3] => String::from("E7"),
        [1, 2, 4] => String::from("E8"),
        _ => format!("?{k}"),
    }
}

fn classical(letter: char, n: usize) -> Result<RootDatum> {
    let e = |i: usize| unit(n, i);
    let diff = |i: usize| {
        let mut v = e(i);
        v[i + 1] = -1;
        v
    };
    let scale = |v: Vec<i64>, s: i64| v.into_iter().map(|x| x * s).collect::<Vec<_>>();
    let label = Some(format!("{letter}{n}"));
    match letter {
        'B' => {
            let mut roots: Vec<_> = (0..n - 1).map(diff).collect();
            let mut coroots = roots.clone();
            roots.push(e(n - 1));
            coroots.push(scale(e(n - 1), 2));
            RootDatum::new(n, roots, coroots, label)
        }
        'C' => {
            let mut roots: Vec<_> = (0..n - 1).map(diff).collect();
            let mut coroots = roots.clone();
            roots.push(scale(e(n - 1), 2));
            coroots.push(e(n - 1));
            RootDatum::new(n, roots, coroots, label)
        }
        'D' => {
            let mut roots: Vec<_> = (0..n - 1).map(diff).collect();
            let mut last = e(n - 2);
            last[n - 1] = 1;
            roots.push(last);
            let coroots = roots.clone();
            RootDatum::new(n, roots, coroots, label)
        }
        _ => Err(Error::UnknownLabel(format!("{letter}{n}"))),
    }
}

/// `GL_n` in its standard coordinates: simple roots `e_i − e_{i+1}` in `Z^n`.
fn general_linear(n: usize, label: String) -> Result<RootDatum> {
    let roots: Vec<Vec<i64>> = (0..n.saturating_sub(1))
        .map(|i| {
            let mut v = unit(n, i);
            v[i + 1] = -1;
            v
        })
        .collect();
    RootDatum::new(n, roots.clone(), roots, Some(label))
}

fn parse_factor(tok: &str) -> Result<RootDatum> {
    let bad = || Error::UnknownLabel(tok.to_string());
    let num = |s: &str| s.parse::<usize>().map_err(|_| bad());
    if let Some(rest) = tok.strip_prefix("GL") {
        let n = num(rest)?;
        if n == 0 {
            return Err(bad());
        }
        return general_linear(n, tok.to_string());
    }
    if let Some(rest) = tok.strip_prefix("SO") {
        let m = num(rest)?;
        let rd = match m {
            3 => RootDatum::new(1, vec![vec![1]], vec![vec![2]], None)?,
            m if m >= 5 && m % 2 == 1 => classical('B', (m - 1) / 2)?,
            m if m >= 6 && m % 2 == 0 => classical('D', m / 2)?,
            _ => return Err(bad()),
        };
        return relabel(rd, tok);
    }
    if let Some(rest) = tok.strip_prefix("Sp") {
        let m = num(rest)?;
        if m < 2 || m % 2 == 1 {
            return Err(bad());
        }
        let rd = if m == 2 {
            RootDatum::new(1, vec![vec![2]], vec![vec![1]], None)?
        } else {
            classical('C', m / 2)?
        };
        return relabel(rd, tok);
    }
    let mut chars = tok.chars();
    let letter = chars.next().ok_or_else(bad)?;
    let n = num(chars.as_str())?;
    match (letter, n) {
        ('A', n) if n >= 1 => general_linear(n + 1, tok.to_string()),
        ('B', n) if n >= 2 => classical('B', n),
        ('C', n) if n >= 2 => classical('C', n),
        ('D', n) if n >= 2 => classical('D', n),
        ('E', 6..=8) | ('F', 4) | ('G', 2) => {
            RootDatum::from_cartan(&cartan_matrix(letter, n)?, Some(tok.to_string()))
        }
        _ => Err(bad()),
    }
}

fn relabel(mut rd: RootDatum, label: &str) -> Result<RootDatum> {
    rd.label = Some(label.to_string());
    Ok(rd)
}

/// Build a root datum from a type label.
///
/// Accepted factors: `An` (as `GL_{n+1}`), `Bn`, `Cn`, `Dn` (standard
/// coordinates in `Z^n`), `E6`–`E8`, `F4`, `G2` (weight-lattice coordinates),
/// `GLn`, `SOm`, `Sp2n`. Factors are joined with `x`, and `X^k` repeats a factor.
pub fn build_root_datum(label: &str) -> Result<RootDatum> {
    let label = label.trim();
    if label.is_empty() {
        return Err(Error::UnknownLabel(String::new()));
    }
    let mut parts = Vec::new();
    for tok in label.split('x') {
        let (base, times) = match tok.split_once('^') {
            Some((b, k)) => (b, k.parse::<usize>().map_err(|_| Error::UnknownLabel(tok.into()))?),
            None => (tok, 1),
        };
        let rd = parse_factor(base)?;
        for _ in 0..times {
            parts.push(rd.clone());
        }
    }
    if parts.len() == 1 {
        return Ok(parts.pop().expect("one factor"));
    }
    let mut rd = RootDatum::product(&parts)?;
    rd.label = Some(label.to_string());
    Ok(rd)
}

/// Frobenius datum: the integer `q` and a finite-order lattice automorphism
/// `σ` permuting the simple roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusDatum {
    q: u64,
    sigma: IMat,
    sigma_inv: IMat,
    dual: IMat,
    order: usize,
    perm: Vec<usize>,
}

/// Largest accepted order of `σ`.
pub const SIGMA_ORDER_CAP: usize = 48;

impl FrobeniusDatum {
    pub fn q(&self) -> u64 {
        self.q
    }

    /// Matrix of `σ` on characters.
    pub fn sigma(&self) -> &IMat {
        &self.sigma
    }

    pub fn sigma_inv(&self) -> &IMat {
        &self.sigma_inv
    }

    /// Matrix of the dual action on cocharacters, the inverse transpose of `σ`.
    pub fn dual(&self) -> &IMat {
        &self.dual
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `σ(α_i) = α_{perm[i]}`.
    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    /// Permutation induced by `σ^k` for any integer `k`.
    pub fn perm_pow(&self, k: i64) -> Vec<usize> {
        let e = k.rem_euclid(self.order as i64) as usize;
        (0..self.perm.len())
            .map(|i| (0..e).fold(i, |x, _| self.perm[x]))
            .collect()
    }

    pub fn is_split(&self) -> bool {
        self.order == 1
    }

    pub fn to_json(&self) -> FrobeniusJson {
        FrobeniusJson { schema: "frobenius.v1".into(), q: self.q, sigma: self.sigma.rows() }
    }
}

/// Serialized form `frobenius.v1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrobeniusJson {
    #[serde(default = "frobenius_schema")]
    pub schema: String,
    pub q: u64,
    pub sigma: Vec<Vec<i64>>,
}

fn frobenius_schema() -> String {
    "frobenius.v1".into()
}

/// Validate `σ` against a root datum.
pub fn validate_frobenius(rd: &RootDatum, q: u64, sigma: &[Vec<i64>]) -> Result<FrobeniusDatum> {
    if q < 2 {
        return Err(Error::BadParams(format!("q must be at least 2, got {q}")));
    }
    if sigma.len() != rd.rank() {
        return Err(Error::DimensionMismatch { expected: rd.rank(), found: sigma.len() });
    }
    let s = IMat::from_rows(sigma)?;
    let order = s
        .order(SIGMA_ORDER_CAP)
        .ok_or_else(|| Error::NotAnAutomorphism(format!("no finite order up to {SIGMA_ORDER_CAP}")))?;
    let sigma_inv = s.pow(order - 1);
    let dual = sigma_inv.transpose();
    let mut perm = Vec::with_capacity(rd.semisimple_rank());
    for i in 0..rd.semisimple_rank() {
        let img = s.apply(rd.simple_root(i));
        let j = rd.simple_index(&img).ok_or(Error::DoesNotPreserveBase)?;
        if dual.apply(rd.simple_coroot(i)) != rd.simple_coroot(j) {
            return Err(Error::DoesNotPreserveBase);
        }
        perm.push(j);
    }
    Ok(FrobeniusDatum { q, sigma: s, sigma_inv, dual, order, perm })
}

/// The split Frobenius datum, `σ = id`.
pub fn split_frobenius(rd: &RootDatum, q: u64) -> Result<FrobeniusDatum> {
    validate_frobenius(rd, q, &IMat::identity(rd.rank()).rows())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn b2_preset_matches_standard_coordinates() {
        let rd = build_root_datum("B2").unwrap();
        assert_eq!(rd.simple_roots(), &[vec![1, -1], vec![0, 1]]);
        assert_eq!(rd.simple_coroots(), &[vec![1, -1], vec![0, 2]]);
        assert_eq!(rd.positive_roots(), &[vec![1, -1], vec![0, 1], vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn gl3_preset() {
        let rd = build_root_datum("GL3").unwrap();
        assert_eq!(rd.simple_roots(), &[vec![1, -1, 0], vec![0, 1, -1]]);
        assert_eq!(rd.rank(), 3);
        assert_eq!(rd.semisimple_rank(), 2);
    }

    #[test]
    fn explicit_gl2_form_of_a1() {
        let rd = RootDatum::new(2, vec![vec![1, -1]], vec![vec![1, -1]], None).unwrap();
        assert_eq!(rd.positive_roots().len(), 1);
    }

    #[test]
    fn invalid_cartan_is_rejected() {
        // Affine A1: <α_1, α_2^∨> = -2 both ways.
        let err = RootDatum::from_cartan(&[vec![2, -2], vec![-2, 2]], None).unwrap_err();
        assert!(matches!(err, Error::InvalidCartan(_)));
        let err = RootDatum::new(2, vec![vec![1, 0]], vec![vec![1, 0, 0]], None).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { .. }));
    }

    #[test]
    fn positive_root_counts() {
        let a2 = build_root_datum("A2").unwrap();
        assert_eq!(a2.positive_roots().len(), 3);
        let g2 = build_root_datum("G2").unwrap();
        assert_eq!(g2.positive_roots().len(), 6);
        for (label, n) in [("E6", 36), ("E7", 63), ("E8", 120), ("F4", 24), ("D4", 12), ("C3", 9)] {
            assert_eq!(build_root_datum(label).unwrap().positive_roots().len(), n, "{label}");
        }
    }

    #[test]
    fn pairing_examples() {
        assert_eq!(pair(&[1, 0, 0], &[1, -1, 0]).unwrap(), 1);
        assert_eq!(pair(&[3, 1], &[0, 2]).unwrap(), 2);
        assert_eq!(pair(&[0, 0], &[5, -7]).unwrap(), 0);
        assert!(pair(&[1], &[1, 2]).is_err());
    }

    #[test]
    fn frobenius_examples() {
        let rd = build_root_datum("GL3").unwrap();
        let u = validate_frobenius(&rd, 3, &[vec![0, 0, -1], vec![0, -1, 0], vec![-1, 0, 0]]).unwrap();
        assert_eq!(u.order(), 2);
        assert_eq!(u.perm(), &[1, 0]);
        let id = split_frobenius(&rd, 2).unwrap();
        assert_eq!(id.order(), 1);
        assert_eq!(id.perm(), &[0, 1]);
        let neg = validate_frobenius(&rd, 2, &[vec![-1, 0, 0], vec![0, -1, 0], vec![0, 0, -1]]);
        assert_eq!(neg.unwrap_err(), Error::DoesNotPreserveBase);
        let shear = validate_frobenius(&rd, 2, &[vec![1, 1, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert!(matches!(shear.unwrap_err(), Error::NotAnAutomorphism(_)));
    }

    #[test]
    fn classical_cartan_agrees_with_bourbaki_table() {
        for (letter, n) in [('B', 2), ('B', 5), ('C', 3), ('C', 4), ('D', 4), ('D', 6)] {
            let rd = build_root_datum(&format!("{letter}{n}")).unwrap();
            assert_eq!(rd.cartan(), cartan_matrix(letter, n).unwrap().as_slice(), "{letter}{n}");
        }
    }

    #[test]
    fn diagram_types_are_recognised() {
        let cases = [
            ('A', 5, "A5"),
            ('B', 2, "B2"),
            ('B', 4, "B4"),
            ('C', 2, "B2"),
            ('C', 4, "C4"),
            ('D', 4, "D4"),
            ('D', 7, "D7"),
            ('E', 6, "E6"),
            ('E', 7, "E7"),
            ('E', 8, "E8"),
            ('F', 4, "F4"),
            ('G', 2, "G2"),
        ];
        for (l, n, name) in cases {
            let c = cartan_matrix(l, n).unwrap();
            let all: Vec<usize> = (0..n).collect();
            assert_eq!(diagram_type(&c, &all), name);
        }
        // D3 inside D_n is of type A3.
        let d5 = cartan_matrix('D', 5).unwrap();
        assert_eq!(diagram_type(&d5, &[2, 3, 4]), "A3");
        // Sub-diagrams of F4.
        let f4 = cartan_matrix('F', 4).unwrap();
        assert_eq!(diagram_type(&f4, &[0, 1, 2]), "B3");
        assert_eq!(diagram_type(&f4, &[1, 2, 3]), "C3");
    }

    #[test]
    fn products_and_powers() {
        let rd = build_root_datum("A1^3").unwrap();
        assert_eq!(rd.rank(), 6);
        assert_eq!(rd.semisimple_rank(), 3);
        assert_eq!(rd.positive_roots().len(), 3);
        let so7 = build_root_datum("SO7").unwrap();
        assert_eq!(so7.cartan(), build_root_datum("B3").unwrap().cartan());
    }

    #[test]
    fn coroots_of_non_simple_roots() {
        let rd = build_root_datum("B2").unwrap();
        // e1 is short with coroot 2e1; e1+e2 is long with coroot e1+e2.
        assert_eq!(rd.coroot_of(&[1, 0]).unwrap(), vec![2, 0]);
        assert_eq!(rd.coroot_of(&[1, 1]).unwrap(), vec![1, 1]);
        assert_eq!(rd.coroot_of(&[-1, -1]).unwrap(), vec![-1, -1]);
        assert!(rd.coroot_of(&[2, 0]).is_none());
    }
}
