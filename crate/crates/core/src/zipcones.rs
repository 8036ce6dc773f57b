//! Weight cones of a zip context `(root datum, Frobenius, Levi type I)`.
//!
//! Cocharacters are acted on by the dual of `σ` (inverse transpose), so that
//! `<σλ, σ·δ> = <λ, δ>`.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::arith::{int_pow, lcm_usize, rat_int, to_big, IMat, Int, Rat};
use crate::cones::Cone;
use crate::hasse;
use crate::par::{self, Exec};
use crate::rootdata::{validate_frobenius, FrobeniusDatum, FrobeniusJson, RootDatum, RootDatumJson};
use crate::weyl::{self, WeylElement};
use crate::{Error, Result};

/// Cap on the order of `w₀,I σ⁻¹` when computing the period of `K_α`.
const PERIOD_CAP: usize = 100_000;

#[derive(Clone, Debug)]
pub struct ZipContext {
    rd: RootDatum,
    frob: FrobeniusDatum,
    levi: Vec<usize>,
    levi0: Vec<usize>,
    delta_p: Vec<usize>,
    delta_p0: Vec<usize>,
    w0_levi: WeylElement,
    w0_levi0: WeylElement,
    orbit_len: Vec<usize>,
    m_alpha: Vec<Option<usize>>,
    k_period: usize,
}

/// Serialized form `zipcontext.v1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZipContextJson {
    #[serde(default = "context_schema")]
    pub schema: String,
    pub rootdatum: RootDatumJson,
    pub frobenius: FrobeniusJson,
    pub levi_indices: Vec<usize>,
}

fn context_schema() -> String {
    "zipcontext.v1".into()
}

pub fn make_context(rd: RootDatum, frob: FrobeniusDatum, levi: &[usize]) -> Result<ZipContext> {
    let levi = weyl::check_parabolic(&rd, levi)?;
    let r = rd.semisimple_rank();
    let order = frob.order();
    let in_levi = |j: usize| levi.contains(&j);
    let inverse_powers: Vec<Vec<usize>> = (0..=order).map(|m| frob.perm_pow(-(m as i64))).collect();
    let levi0: Vec<usize> = levi.iter().copied().filter(|&j| (0..order).all(|m| in_levi(inverse_powers[m][j]))).collect();
    let delta_p: Vec<usize> = (0..r).filter(|j| !in_levi(*j)).collect();
    let delta_p0: Vec<usize> = (0..r).filter(|j| !levi0.contains(j)).collect();
    let orbit_len: Vec<usize> = (0..r)
        .map(|j| (1..=order).find(|&k| frob.perm_pow(k as i64)[j] == j).expect("σ has finite order"))
        .collect();
    let m_alpha: Vec<Option<usize>> = (0..r)
        .map(|j| if in_levi(j) { None } else { (1..=order).find(|&m| !in_levi(inverse_powers[m][j])) })
        .collect();
    let w0_levi = weyl::longest_element(&rd, &levi)?;
    let w0_levi0 = weyl::longest_element(&rd, &levi0)?;
    let twist = w0_levi.matrix.mul(frob.sigma_inv());
    let t_order = twist
        .order(PERIOD_CAP)
        .ok_or_else(|| Error::Internal("w₀,I σ⁻¹ has unexpectedly large order".into()))?;
    let k_period = lcm_usize(2 * order, t_order);
    Ok(ZipContext { rd, frob, levi, levi0, delta_p, delta_p0, w0_levi, w0_levi0, orbit_len, m_alpha, k_period })
}

impl ZipContext {
    pub fn rd(&self) -> &RootDatum {
        &self.rd
    }

    pub fn frob(&self) -> &FrobeniusDatum {
        &self.frob
    }

    pub fn q(&self) -> u64 {
        self.frob.q()
    }

    pub fn dim(&self) -> usize {
        self.rd.rank()
    }

    /// The Levi type `I`.
    pub fn levi(&self) -> &[usize] {
        &self.levi
    }

    /// `I₀`, the largest σ-stable subset of `I`.
    pub fn levi0(&self) -> &[usize] {
        &self.levi0
    }

    /// `Δ^P = Δ ∖ I`.
    pub fn delta_p(&self) -> &[usize] {
        &self.delta_p
    }

    /// `Δ^{P₀} = Δ ∖ I₀`.
    pub fn delta_p0(&self) -> &[usize] {
        &self.delta_p0
    }

    pub fn w0_levi(&self) -> &WeylElement {
        &self.w0_levi
    }

    pub fn w0_levi0(&self) -> &WeylElement {
        &self.w0_levi0
    }

    /// Length `r_α` of the σ-orbit of each simple root.
    pub fn orbit_len(&self, alpha: usize) -> usize {
        self.orbit_len[alpha]
    }

    /// `m_α = min{m ≥ 1 : σ^{-m}(α) ∉ I}` for `α ∈ Δ^P`.
    pub fn m_alpha(&self, alpha: usize) -> Option<usize> {
        self.m_alpha[alpha]
    }

    /// Order of `σ`.
    pub fn split_degree(&self) -> usize {
        self.frob.order()
    }

    /// Number of terms in the sum defining `K_α`.
    pub fn k_period(&self) -> usize {
        self.k_period
    }

    /// `σ^{-(m_α-1)}(Δ^P)` for `α ∈ Δ^P`.
    pub fn delta_p1(&self, alpha: usize) -> Option<Vec<usize>> {
        let m = self.m_alpha(alpha)?;
        let perm = self.frob.perm_pow(-(m as i64 - 1));
        let mut out: Vec<usize> = self.delta_p.iter().map(|&j| perm[j]).collect();
        out.sort_unstable();
        Some(out)
    }

    /// Dual action of `σ^k` on a cocharacter.
    pub fn sigma_dual_pow(&self, k: usize, cochar: &[i64]) -> Vec<i64> {
        (0..k).fold(cochar.to_vec(), |v, _| self.frob.dual().apply(&v))
    }

    pub fn to_json(&self) -> ZipContextJson {
        ZipContextJson {
            schema: context_schema(),
            rootdatum: self.rd.to_json(),
            frobenius: self.frob.to_json(),
            levi_indices: self.levi.clone(),
        }
    }

    pub fn from_json(j: &ZipContextJson) -> Result<Self> {
        let rd = RootDatum::from_json(&j.rootdatum)?;
        let frob = validate_frobenius(&rd, j.frobenius.q, &j.frobenius.sigma)?;
        make_context(rd, frob, &j.levi_indices)
    }
}

/// `δ ↦ δ − qσ(δ)` on rational cocharacters.
pub fn lang_dual(ctx: &ZipContext, delta: &[Rat]) -> Vec<Rat> {
    let d = ctx.frob.dual();
    let q = Rat::from_integer(Int::from(ctx.q()));
    (0..delta.len())
        .map(|i| {
            let s = (0..delta.len()).fold(Rat::zero(), |acc, j| acc + &delta[j] * rat_int(d.get(i, j)));
            &delta[i] - &q * s
        })
        .collect()
}

/// The rational cocharacter `δ_α` with `δ_α − qσ(δ_α) = α^∨`, for any root `α`.
pub fn delta_alpha(ctx: &ZipContext, alpha: &[i64]) -> Result<Vec<Rat>> {
    ctx.rd.check_dim(alpha)?;
    let coroot = ctx.rd.coroot_of(alpha).ok_or_else(|| Error::BadParams(format!("{alpha:?} is not a root")))?;
    let mut orbit = vec![coroot.clone()];
    loop {
        let next = ctx.frob.dual().apply(orbit.last().expect("nonempty"));
        if next == coroot {
            break;
        }
        orbit.push(next);
    }
    let r = orbit.len();
    let q = ctx.q();
    let denom = Rat::from_integer(int_pow(q, r) - 1);
    let n = ctx.dim();
    Ok((0..n)
        .map(|i| {
            let s = orbit.iter().enumerate().fold(Int::zero(), |acc, (j, v)| acc + int_pow(q, j) * v[i]);
            -Rat::from_integer(s) / &denom
        })
        .collect())
}

/// `δ_α` for the simple root with index `alpha`.
pub fn delta_simple(ctx: &ZipContext, alpha: usize) -> Result<Vec<Rat>> {
    ctx.rd.check_index(alpha)?;
    delta_alpha(ctx, ctx.rd.simple_root(alpha))
}

fn coroot_rows(ctx: &ZipContext, idx: &[usize], sign: i64) -> Vec<Vec<i64>> {
    idx.iter().map(|&i| ctx.rd.simple_coroot(i).iter().map(|x| sign * x).collect()).collect()
}

fn h_cone(ctx: &ZipContext, rows: Vec<Vec<i64>>) -> Result<Cone> {
    Cone::from_inequalities_i64(ctx.dim(), &rows)?.complete()
}

/// `X*₊(T)`.
pub fn dominant_cone(ctx: &ZipContext) -> Result<Cone> {
    let all: Vec<usize> = (0..ctx.rd.semisimple_rank()).collect();
    h_cone(ctx, coroot_rows(ctx, &all, 1))
}

/// `X*₊,I(T)`.
pub fn i_dominant_cone(ctx: &ZipContext) -> Result<Cone> {
    h_cone(ctx, coroot_rows(ctx, &ctx.levi, 1))
}

/// `X*₋(L)`: orthogonal to the coroots of `I`, nonpositive on those of `Δ^P`.
pub fn neg_levi_cone(ctx: &ZipContext) -> Result<Cone> {
    let mut rows = coroot_rows(ctx, &ctx.levi, 1);
    rows.extend(coroot_rows(ctx, &ctx.levi, -1));
    rows.extend(coroot_rows(ctx, &ctx.delta_p, -1));
    h_cone(ctx, rows)
}

/// Griffiths–Schmid cone: `I`-dominant and nonpositive on every positive
/// coroot whose root is not supported in `I`.
pub fn gs_cone(ctx: &ZipContext) -> Result<Cone> {
    let mut rows = coroot_rows(ctx, &ctx.levi, 1);
    for (coeffs, coroot) in ctx.rd.positive_root_coeffs().iter().zip(ctx.rd.positive_coroots()) {
        let in_levi = coeffs.iter().enumerate().all(|(j, &c)| c == 0 || ctx.levi.contains(&j));
        if !in_levi {
            rows.push(coroot.iter().map(|x| -x).collect());
        }
    }
    h_cone(ctx, rows)
}

/// Matrix of `h_Z: λ ↦ λ − q w₀,I σ⁻¹ λ`.
pub fn hz_map(ctx: &ZipContext) -> IMat {
    let n = ctx.dim();
    let t = ctx.w0_levi.matrix.mul(ctx.frob.sigma_inv());
    IMat::identity(n).sub(&t.scale(ctx.q() as i64))
}

/// Partial Hasse invariant cone `h_Z(X*₊(T))`, computed as the image of the
/// dominant generators and independently as the preimage condition on
/// `h_Z⁻¹λ`; the two must agree.
pub fn pha_cone(ctx: &ZipContext) -> Result<Cone> {
    let h = hz_map(ctx).to_rational();
    let dominant = dominant_cone(ctx)?;
    let by_image = dominant.image_under(&h)?;
    let by_preimage = dominant.pushforward_h(&h)?;
    if !by_image.equal(&by_preimage)? {
        return Err(Error::Internal("partial Hasse cone routes disagree".into()));
    }
    Ok(by_image)
}

/// `K_α(λ) = Σ_{0≤i<N} q^i <(w₀,I σ⁻¹)^i λ, α^∨>` with `N` a common period of
/// `σ` (doubled) and `w₀,I σ⁻¹`. Then `K_α(λ) ≤ 0` for all `α` iff `h_Z⁻¹λ` is dominant.
pub fn k_alpha(ctx: &ZipContext, lam: &[i64], alpha: usize) -> Result<Int> {
    ctx.rd.check_index(alpha)?;
    ctx.rd.check_dim(lam)?;
    let t = ctx.w0_levi.matrix.mul(ctx.frob.sigma_inv());
    let coroot = ctx.rd.simple_coroot(alpha);
    let mut v = lam.to_vec();
    let mut qi = Int::one();
    let mut acc = Int::zero();
    for _ in 0..ctx.k_period {
        let p: i64 = v.iter().zip(coroot).map(|(x, y)| x * y).sum();
        acc += &qi * p;
        qi *= ctx.q();
        v = t.apply(&v);
    }
    Ok(acc)
}

fn sigma_fixed_levi0(ctx: &ZipContext, cap: usize) -> Result<Vec<WeylElement>> {
    let all = weyl::enumerate_parabolic(&ctx.rd, &ctx.levi0, cap)?;
    Ok(weyl::sigma_fixed(&all, &ctx.frob))
}

/// Covector `c` with `<λ, c> = Σ_w Σ_{i<r_α} q^{i+ℓ(w)} <wλ, σ^i α^∨>`.
fn norm_covector(ctx: &ZipContext, fixed: &[WeylElement], alpha: usize, exec: Exec) -> Vec<Int> {
    let n = ctx.dim();
    let q = ctx.q();
    let r = ctx.orbit_len(alpha);
    let twisted: Vec<Vec<i64>> = (0..r).map(|i| ctx.sigma_dual_pow(i, ctx.rd.simple_coroot(alpha))).collect();
    let parts = par::map(exec, fixed, |w| {
        let wt = w.matrix.transpose();
        let mut acc = vec![Int::zero(); n];
        for (i, d) in twisted.iter().enumerate() {
            let c = int_pow(q, i + w.length);
            for (a, x) in acc.iter_mut().zip(wt.apply(d)) {
                *a += &c * x;
            }
        }
        acc
    });
    parts.into_iter().fold(vec![Int::zero(); n], |mut acc, p| {
        for (a, x) in acc.iter_mut().zip(p) {
            *a += x;
        }
        acc
    })
}

/// The norm inequalities for `α ∈ Δ^P`, as covectors in the `≥ 0` convention.
pub fn hw_covectors(ctx: &ZipContext, cap: usize) -> Result<Vec<(usize, Vec<Int>)>> {
    let fixed = sigma_fixed_levi0(ctx, cap)?;
    Ok(ctx
        .delta_p
        .iter()
        .map(|&a| (a, norm_covector(ctx, &fixed, a, Exec::default()).into_iter().map(|x| -x).collect()))
        .collect())
}

fn i_dominant_rows(ctx: &ZipContext) -> Vec<Vec<Int>> {
    coroot_rows(ctx, &ctx.levi, 1).iter().map(|r| to_big(r)).collect()
}

/// Highest weight cone.
pub fn hw_cone(ctx: &ZipContext, cap: usize) -> Result<Cone> {
    let mut rows = i_dominant_rows(ctx);
    rows.extend(hw_covectors(ctx, cap)?.into_iter().map(|(_, c)| c));
    Cone::from_inequalities(ctx.dim(), rows)?.complete()
}

/// The lowest-weight inequalities for `α ∈ Δ^{P₀}`, pulled back along
/// `λ ↦ w₀,I₀ w₀,I λ`, in the `≥ 0` convention.
pub fn lw_covectors(ctx: &ZipContext, cap: usize) -> Result<Vec<(usize, Vec<Int>)>> {
    let fixed = sigma_fixed_levi0(ctx, cap)?;
    let m = ctx.w0_levi0.matrix.mul(&ctx.w0_levi.matrix).transpose();
    Ok(ctx
        .delta_p0
        .iter()
        .map(|&a| {
            let c = norm_covector(ctx, &fixed, a, Exec::default());
            (a, m.apply_big(&c).into_iter().map(|x| -x).collect())
        })
        .collect())
}

/// Lowest weight cone and whether the commutation condition certifies it as an inner bound.
pub fn lw_cone(ctx: &ZipContext, cap: usize) -> Result<(Cone, bool)> {
    let mut rows = i_dominant_rows(ctx);
    rows.extend(lw_covectors(ctx, cap)?.into_iter().map(|(_, c)| c));
    let cone = Cone::from_inequalities(ctx.dim(), rows)?.complete()?;
    let certified = ctx.delta_p.iter().all(|&a| check_cond_commute(ctx, a));
    Ok((cone, certified))
}

/// For `α ∈ Δ^P` and `1 ≤ i < j ≤ m_α − 1`, the roots `σ^{-i}α` and `σ^{-j}α`
/// are orthogonal both ways and no `aσ^{-i}α + bσ^{-j}α` (`a, b ≥ 1`) is a root.
pub fn check_cond_commute(ctx: &ZipContext, alpha: usize) -> bool {
    let Some(m) = ctx.m_alpha(alpha) else { return true };
    let idx = |i: usize| ctx.frob.perm_pow(-(i as i64))[alpha];
    let rd = &ctx.rd;
    for i in 1..m {
        for j in i + 1..m {
            let (bi, bj) = (idx(i), idx(j));
            let pair = |a: usize, b: usize| -> i64 {
                rd.simple_root(a).iter().zip(rd.simple_coroot(b)).map(|(x, y)| x * y).sum()
            };
            if pair(bi, bj) != 0 || pair(bj, bi) != 0 {
                return false;
            }
            for a in 1..=3i64 {
                for b in 1..=3i64 {
                    let v: Vec<i64> =
                        rd.simple_root(bi).iter().zip(rd.simple_root(bj)).map(|(x, y)| a * x + b * y).collect();
                    if rd.is_root(&v) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Context over `F_{q^r}`: Frobenius `σ^r`, parameter `q^r`, Levi type `I₀`.
pub fn split_context(ctx: &ZipContext, r: usize) -> Result<ZipContext> {
    if r == 0 {
        return Err(Error::InvalidR(r));
    }
    let q = ctx.q().checked_pow(r as u32).ok_or_else(|| Error::BadParams("q^r overflows".into()))?;
    let sigma = ctx.frob.sigma().pow(r);
    let frob = validate_frobenius(&ctx.rd, q, &sigma.rows())?;
    make_context(ctx.rd.clone(), frob, &ctx.levi0)
}

/// Smallest `r ≥ 1` with `σ^r` fixing every index of `I`.
pub fn minimal_r(ctx: &ZipContext) -> usize {
    (1..=ctx.split_degree())
        .find(|&r| {
            let p = ctx.frob.perm_pow(r as i64);
            ctx.levi.iter().all(|&i| p[i] == i)
        })
        .expect("σ^order is the identity")
}

/// `X*₊,I(T) ∩ w₀,I w₀,I₀ · inner`, for `inner` a cone of the context over `F_{q^r}`.
pub fn weil_transport(ctx: &ZipContext, r: usize, inner: &Cone) -> Result<Cone> {
    let p = ctx.frob.perm_pow(r as i64);
    if r == 0 || ctx.levi.iter().any(|&i| p[i] != i) {
        return Err(Error::InvalidR(r));
    }
    let m = ctx.w0_levi.matrix.mul(&ctx.w0_levi0.matrix).to_rational();
    i_dominant_cone(ctx)?.intersect(&inner.image_under(&m)?)
}

/// Computed cones with their inclusion relations and flags.
#[derive(Clone, Debug)]
pub struct ZipReport {
    pub cones: Vec<(String, Cone)>,
    /// Pairs `[inner, outer]` with `inner ⊆ outer`, distinct names.
    pub inclusions: Vec<(String, String)>,
    /// Cones known to lie inside the zip cone.
    pub inner_bounds: Vec<String>,
    pub outer_bound: String,
    pub hasse_type: bool,
    pub exact_zip: bool,
    pub certified_lw: bool,
}

impl ZipReport {
    pub fn cone(&self, name: &str) -> Option<&Cone> {
        self.cones.iter().find(|(n, _)| n == name).map(|(_, c)| c)
    }

    pub fn to_json(&self) -> Result<Value> {
        let mut cones = serde_json::Map::new();
        for (name, c) in &self.cones {
            cones.insert(name.clone(), c.to_json()?);
        }
        Ok(json!({
            "schema": "zipreport.v1",
            "cones": cones,
            "inclusions": self.inclusions.iter().map(|(a, b)| json!([a, b])).collect::<Vec<_>>(),
            "inner_bounds": self.inner_bounds,
            "outer_bound": self.outer_bound,
            "hasse_type": self.hasse_type,
            "exact_zip": self.exact_zip,
            "certified_lw": self.certified_lw,
        }))
    }
}

/// Names accepted by [`cone_by_name`].
pub const CONE_NAMES: [&str; 7] = ["dominant", "idominant", "neglevi", "gs", "pha", "hw", "lw"];

pub fn cone_by_name(ctx: &ZipContext, name: &str, cap: usize) -> Result<Cone> {
    match name {
        "dominant" => dominant_cone(ctx),
        "idominant" => i_dominant_cone(ctx),
        "neglevi" => neg_levi_cone(ctx),
        "gs" => gs_cone(ctx),
        "pha" => pha_cone(ctx),
        "hw" => hw_cone(ctx, cap),
        "lw" => Ok(lw_cone(ctx, cap)?.0),
        other => Err(Error::BadParams(format!("unknown cone `{other}`"))),
    }
}

pub fn zip_report(ctx: &ZipContext, cap: usize) -> Result<ZipReport> {
    let hasse_type = hasse::is_hasse_type(ctx);
    let (lw, certified_lw) = lw_cone(ctx, cap)?;
    let r = minimal_r(ctx);
    let split = split_context(ctx, r)?;
    let weil_hw = weil_transport(ctx, r, &hw_cone(&split, cap)?)?;
    let cones = vec![
        ("dominant".to_string(), dominant_cone(ctx)?),
        ("idominant".to_string(), i_dominant_cone(ctx)?),
        ("neglevi".to_string(), neg_levi_cone(ctx)?),
        ("gs".to_string(), gs_cone(ctx)?),
        ("pha".to_string(), pha_cone(ctx)?),
        ("hw".to_string(), hw_cone(ctx, cap)?),
        ("lw".to_string(), lw),
        ("weil_hw".to_string(), weil_hw),
    ];
    let pairs: Vec<(usize, usize)> = (0..cones.len())
        .flat_map(|i| (0..cones.len()).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let flags = par::map(Exec::default(), &pairs, |&(i, j)| cones[j].1.contains(&cones[i].1));
    let mut inclusions = Vec::new();
    for (&(i, j), f) in pairs.iter().zip(flags) {
        if f? {
            inclusions.push((cones[i].0.clone(), cones[j].0.clone()));
        }
    }
    let mut inner_bounds: Vec<String> = ["pha", "hw", "gs", "neglevi"].iter().map(|s| s.to_string()).collect();
    if certified_lw {
        inner_bounds.push("lw".into());
    }
    inner_bounds.push("weil_hw".into());
    Ok(ZipReport {
        cones,
        inclusions,
        inner_bounds,
        outer_bound: "idominant".into(),
        hasse_type,
        exact_zip: hasse_type,
        certified_lw,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{build_root_datum, split_frobenius};

    fn u21(q: u64) -> ZipContext {
        let rd = build_root_datum("GL3").unwrap();
        let frob = validate_frobenius(&rd, q, &[vec![0, 0, -1], vec![0, -1, 0], vec![-1, 0, 0]]).unwrap();
        make_context(rd, frob, &[0]).unwrap()
    }

    fn so5(q: u64) -> ZipContext {
        let rd = build_root_datum("B2").unwrap();
        let frob = split_frobenius(&rd, q).unwrap();
        make_context(rd, frob, &[1]).unwrap()
    }

    #[test]
    fn derived_data_inert_unitary() {
        let ctx = u21(3);
        assert!(ctx.levi0().is_empty());
        assert_eq!(ctx.delta_p(), &[1]);
        assert_eq!(ctx.orbit_len(1), 2);
        assert_eq!(ctx.m_alpha(1), Some(2));
        assert_eq!(ctx.split_degree(), 2);
    }

    #[test]
    fn derived_data_split_and_degenerate() {
        let ctx = so5(2);
        assert_eq!(ctx.levi0(), &[1]);
        assert_eq!(ctx.m_alpha(0), Some(1));
        assert_eq!(ctx.orbit_len(0), 1);
        let rd = build_root_datum("GL3").unwrap();
        let frob = validate_frobenius(&rd, 2, &[vec![0, 0, -1], vec![0, -1, 0], vec![-1, 0, 0]]).unwrap();
        let full = make_context(rd, frob, &[0, 1]).unwrap();
        assert!(full.delta_p().is_empty());
        assert_eq!(full.levi0(), &[0, 1]);
    }

    #[test]
    fn delta_alpha_examples() {
        let ctx = so5(3);
        let d = delta_simple(&ctx, 0).unwrap();
        // -α^∨/(q-1) with α^∨ = (1,-1).
        assert_eq!(d, vec![Rat::new((-1).into(), 2.into()), Rat::new(1.into(), 2.into())]);
        let q = 5u64;
        let ctx = u21(q);
        let d = delta_simple(&ctx, 1).unwrap();
        let den = Int::from(q * q - 1);
        let want: Vec<Rat> = [q as i64, 1 - q as i64, -1].iter().map(|&x| -Rat::new(Int::from(x), den.clone())).collect();
        assert_eq!(d, want);
        for a in 0..2 {
            let d = delta_simple(&ctx, a).unwrap();
            let back: Vec<Rat> = ctx.rd().simple_coroot(a).iter().map(|&x| rat_int(x)).collect();
            assert_eq!(lang_dual(&ctx, &d), back);
        }
    }

    #[test]
    fn hz_sends_first_basis_vector_as_expected() {
        let q = 7;
        let ctx = u21(q);
        assert_eq!(hz_map(&ctx).apply(&[1, 0, 0]), vec![1, 0, q as i64]);
    }

    #[test]
    fn k_alpha_so5() {
        let q = 3;
        let ctx = so5(q);
        for lam in [[4i64, -2], [0, 0], [-5, 7]] {
            let want = (q as i64 + 1) * lam[0] + (q as i64 - 1) * lam[1];
            let k = k_alpha(&ctx, &lam, 0).unwrap();
            // With split degree one the sum has two terms.
            assert_eq!(k, Int::from(want));
        }
    }

    #[test]
    fn cone_sizes_u21() {
        let ctx = u21(2);
        let gs = gs_cone(&ctx).unwrap();
        assert_eq!(gs.facets().unwrap().len(), 2);
        assert_eq!(gs.equations().unwrap().len(), 0);
        assert!(neg_levi_cone(&ctx).unwrap().member_i64(&[-1, -1, 0]).unwrap());
        assert!(i_dominant_cone(&ctx).unwrap().member_i64(&[5, 5, -3]).unwrap());
    }

    #[test]
    fn cond_commute_trivial_when_m_small() {
        let ctx = u21(2);
        assert!(check_cond_commute(&ctx, 1));
        assert!(check_cond_commute(&so5(2), 0));
    }

    #[test]
    fn invalid_r_rejected() {
        let ctx = u21(2);
        let zero = Cone::from_generators(3, vec![]).unwrap();
        assert_eq!(weil_transport(&ctx, 1, &zero).unwrap_err(), Error::InvalidR(1));
        let t = weil_transport(&ctx, 2, &zero).unwrap();
        assert_eq!(t.dim().unwrap(), 0);
    }
}
