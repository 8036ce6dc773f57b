//! Preset contexts and reproduction of the worked examples: computed cones are
//! compared with expected inequality templates whose coefficients are
//! integer polynomials in `q`.

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::arith::{int_pow, q_kernel, span_basis, to_big, Int, QMatrix, Rat};
use crate::cones::Cone;
use crate::rootdata::{build_root_datum, split_frobenius, validate_frobenius, RootDatum};
use crate::weyl;
use crate::zipcones::{self, make_context, ZipContext, ZipReport};
use crate::{Error, Result};

/// Names accepted by [`preset`].
pub const PRESET_NAMES: [&str; 6] = ["U21-inert", "SOodd", "GL3-split", "Sp4", "HilbertA1m", "ResSplit"];

/// Parameters of a preset; unused fields are ignored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresetParams {
    pub q: u64,
    /// Rank for `SOodd`.
    pub n: Option<usize>,
    /// Number of factors for `HilbertA1m`.
    pub m: Option<usize>,
    /// Degree of the field extension for `ResSplit`.
    pub r: Option<usize>,
    /// Base type for `ResSplit`, e.g. `"A3"`.
    pub base: Option<String>,
}

impl PresetParams {
    pub fn with_q(q: u64) -> Self {
        PresetParams { q, n: None, m: None, r: None, base: None }
    }

    pub fn n(mut self, n: usize) -> Self {
        self.n = Some(n);
        self
    }

    pub fn m(mut self, m: usize) -> Self {
        self.m = Some(m);
        self
    }

    pub fn r(mut self, r: usize) -> Self {
        self.r = Some(r);
        self
    }

    pub fn base(mut self, base: &str) -> Self {
        self.base = Some(base.to_string());
        self
    }
}

fn check_q(q: u64) -> Result<()> {
    if q < 2 {
        return Err(Error::BadParams(format!("q must be at least 2, got {q}")));
    }
    Ok(())
}

fn in_range(name: &str, v: usize, lo: usize, hi: usize) -> Result<usize> {
    if v < lo || v > hi {
        return Err(Error::BadParams(format!("{name} must lie in {lo}..={hi}, got {v}")));
    }
    Ok(v)
}

/// Matrix sending block `c` of a `copies`-fold product to block `c + 1`.
pub fn cyclic_block_shift(block_dim: usize, copies: usize) -> Vec<Vec<i64>> {
    let n = block_dim * copies;
    let mut m = vec![vec![0; n]; n];
    for c in 0..copies {
        let next = (c + 1) % copies;
        for k in 0..block_dim {
            m[next * block_dim + k][c * block_dim + k] = 1;
        }
    }
    m
}

/// Base type and copy count of a `ResSplit` preset.
pub fn res_split_shape(params: &PresetParams) -> Result<(RootDatum, usize)> {
    let base = build_root_datum(params.base.as_deref().unwrap_or("A3"))?;
    let r = in_range("r", params.r.unwrap_or(2), 1, 4)?;
    if base.rank() * r > crate::cones::MAX_DIM {
        return Err(Error::BadParams(format!("{} copies of rank {} exceed the supported dimension", r, base.rank())));
    }
    Ok((base, r))
}

pub fn preset(name: &str, params: &PresetParams) -> Result<ZipContext> {
    check_q(params.q)?;
    let q = params.q;
    match name {
        "U21-inert" => {
            let rd = build_root_datum("GL3")?;
            let frob = validate_frobenius(&rd, q, &[vec![0, 0, -1], vec![0, -1, 0], vec![-1, 0, 0]])?;
            make_context(rd, frob, &[0])
        }
        "SOodd" => {
            let n = in_range("n", params.n.unwrap_or(2), 2, 7)?;
            let rd = build_root_datum(&format!("SO{}", 2 * n + 1))?;
            let frob = split_frobenius(&rd, q)?;
            let levi: Vec<usize> = (1..n).collect();
            make_context(rd, frob, &levi)
        }
        "GL3-split" => {
            let rd = build_root_datum("GL3")?;
            let frob = split_frobenius(&rd, q)?;
            make_context(rd, frob, &[0])
        }
        "Sp4" => {
            let rd = build_root_datum("Sp4")?;
            let frob = split_frobenius(&rd, q)?;
            make_context(rd, frob, &[0])
        }
        "HilbertA1m" => {
            let m = in_range("m", params.m.unwrap_or(2), 1, 6)?;
            let rd = build_root_datum(&format!("A1^{m}"))?;
            let frob = validate_frobenius(&rd, q, &cyclic_block_shift(2, m))?;
            make_context(rd, frob, &[])
        }
        "ResSplit" => {
            let (base, r) = res_split_shape(params)?;
            let label = params.base.as_deref().unwrap_or("A3");
            let rd = build_root_datum(&format!("{label}^{r}"))?;
            let frob = validate_frobenius(&rd, q, &cyclic_block_shift(base.rank(), r))?;
            let s = base.semisimple_rank();
            // Copy j drops base vertex j (mod the base rank) from I.
            let levi: Vec<usize> = (0..r).flat_map(|j| (0..s).filter(move |&v| v != j % s).map(move |v| j * s + v)).collect();
            make_context(rd, frob, &levi)
        }
        other => Err(Error::UnknownPreset(other.to_string())),
    }
}

/// Types of the parabolics `P'_j = ⋂_i σ^{-i}(P_{i+j})` for a `ResSplit`
/// context, in base labels, computed three ways.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeilLeviCheck {
    /// Following vertices through powers of σ.
    pub direct: Vec<Vec<usize>>,
    /// Intersecting the per-copy types with shifted indices.
    pub index_chasing: Vec<Vec<usize>>,
    /// Reading the copy `j` part of `I₀`.
    pub from_levi0: Vec<Vec<usize>>,
    /// `Δ^{P'_j}` in base labels.
    pub delta_p_prime: Vec<Vec<usize>>,
}

impl WeilLeviCheck {
    pub fn agrees(&self) -> bool {
        self.direct == self.index_chasing && self.direct == self.from_levi0
    }
}

pub fn weil_levi_check(ctx: &ZipContext, base_rank: usize, copies: usize) -> WeilLeviCheck {
    let levi = ctx.levi();
    let in_levi = |g: usize| levi.contains(&g);
    let copy_type = |c: usize| -> Vec<usize> { (0..base_rank).filter(|&v| in_levi(c * base_rank + v)).collect() };
    let powers: Vec<Vec<usize>> = (0..copies).map(|i| ctx.frob().perm_pow(i as i64)).collect();
    let mut check = WeilLeviCheck { direct: vec![], index_chasing: vec![], from_levi0: vec![], delta_p_prime: vec![] };
    for j in 0..copies {
        let direct: Vec<usize> =
            (0..base_rank).filter(|&v| powers.iter().all(|p| in_levi(p[j * base_rank + v]))).collect();
        let chased: Vec<usize> =
            (0..base_rank).filter(|v| (0..copies).all(|i| copy_type((i + j) % copies).contains(v))).collect();
        let from_levi0: Vec<usize> =
            (0..base_rank).filter(|&v| ctx.levi0().contains(&(j * base_rank + v))).collect();
        check.delta_p_prime.push((0..base_rank).filter(|v| !direct.contains(v)).collect());
        check.direct.push(direct);
        check.index_chasing.push(chased);
        check.from_levi0.push(from_levi0);
    }
    check
}

/// Integer polynomial in `q`, coefficients in increasing degree.
pub type Poly = Vec<i64>;

pub fn eval_poly(p: &[i64], q: u64) -> Int {
    p.iter().enumerate().fold(Int::zero(), |acc, (k, &c)| acc + int_pow(q, k) * c)
}

/// Expected cone as `≥ 0` covectors and `= 0` covectors with polynomial entries.
#[derive(Clone, Debug)]
pub struct Template {
    /// Row name in the report.
    pub name: String,
    /// Name of the computed cone compared against it.
    pub computed: String,
    pub inequalities: Vec<Vec<Poly>>,
    pub equations: Vec<Vec<Poly>>,
    pub note: Option<String>,
}

impl Template {
    pub fn evaluate(&self, dim: usize, q: u64) -> Result<Cone> {
        let eval = |row: &Vec<Poly>| row.iter().map(|p| eval_poly(p, q)).collect::<Vec<Int>>();
        let mut rows: Vec<Vec<Int>> = self.inequalities.iter().map(eval).collect();
        for e in &self.equations {
            let v = eval(e);
            rows.push(v.iter().map(|x| -x).collect());
            rows.push(v);
        }
        Cone::from_inequalities(dim, rows)?.complete()
    }
}

fn tpl(name: &str, computed: &str, inequalities: Vec<Vec<Poly>>, equations: Vec<Vec<Poly>>) -> Template {
    Template { name: name.into(), computed: computed.into(), inequalities, equations, note: None }
}

/// A worked example: preset, optional quotient map and expected cones.
#[derive(Clone, Debug)]
pub struct PaperExample {
    pub name: String,
    pub params: PresetParams,
    /// Rows of the quotient map `X*(T) → Z^k`.
    pub quotient: Option<Vec<Vec<i64>>>,
    /// Declared lineality that the quotient map kills.
    pub lineality: Vec<Vec<i64>>,
    pub templates: Vec<Template>,
}

fn unitary_example(params: &PresetParams) -> PaperExample {
    // Quotient coordinates (a1 − a3, a2 − a3).
    let dom = vec![vec![1], vec![-1]];
    let zip = vec![vec![1, -1], vec![-1]];
    let mut templates = vec![
        tpl("idominant", "idominant", vec![dom.clone()], vec![]),
        tpl("neglevi", "neglevi", vec![vec![vec![-1], vec![0]]], vec![vec![vec![1], vec![-1]]]),
        tpl("gs", "gs", vec![dom.clone(), vec![vec![-1], vec![0]]], vec![]),
        tpl("zip", "lw", vec![dom.clone(), zip.clone()], vec![]),
        tpl("pha", "pha", vec![dom.clone(), vec![vec![0, 1], vec![1, -1]], zip.clone()], vec![]),
        tpl("hw", "hw", vec![dom.clone(), vec![vec![0, -1], vec![-1, 1]]], vec![]),
        tpl("lw", "lw", vec![dom, zip], vec![]),
    ];
    templates[3].note = Some("compared with the lowest weight cone, which the example identifies with the zip cone".into());
    PaperExample {
        name: "U21-inert".into(),
        params: params.clone(),
        quotient: Some(vec![vec![1, 0, -1], vec![0, 1, -1]]),
        lineality: vec![vec![1, 1, 1]],
        templates,
    }
}

fn monomial(k: usize, c: i64) -> Poly {
    let mut p = vec![0; k + 1];
    p[k] = c;
    p
}

fn poly_add(a: &[i64], b: &[i64]) -> Poly {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] += x;
    }
    out
}

/// Highest weight covector of `SOodd` in the `≥ 0` convention:
/// `(1 − q^{2n−2}) a₁ + Σ_{i≥2} (q−1)(q^{i−2} − q^{2n−1−i}) a_i`.
pub fn odd_orthogonal_hw_covector(n: usize) -> Vec<Poly> {
    let mut row = vec![poly_add(&[1], &monomial(2 * n - 2, -1))];
    for i in 2..=n {
        // (q − 1)(q^{i−2} − q^{2n−1−i})
        let a = poly_add(&monomial(i - 1, 1), &monomial(i - 2, -1));
        let b = poly_add(&monomial(2 * n - i, -1), &monomial(2 * n - 1 - i, 1));
        row.push(poly_add(&a, &b));
    }
    row
}

fn odd_orthogonal_example(params: &PresetParams) -> PaperExample {
    let n = params.n.unwrap_or(2);
    let unit = |i: usize, c: i64| -> Vec<Poly> { (0..n).map(|k| if k == i { vec![c] } else { vec![0] }).collect() };
    let mut dom: Vec<Vec<Poly>> = (1..n - 1)
        .map(|i| (0..n).map(|k| if k == i { vec![1] } else if k == i + 1 { vec![-1] } else { vec![0] }).collect())
        .collect();
    dom.push(unit(n - 1, 1));
    let with = |extra: Vec<Vec<Poly>>| -> Vec<Vec<Poly>> { dom.iter().cloned().chain(extra).collect() };
    let mut gs = unit(0, -1);
    gs[1] = vec![-1];
    let mut pha = unit(0, 0);
    pha[0] = vec![-1, -1];
    pha[1] = vec![1, -1];
    let hw = odd_orthogonal_hw_covector(n);
    let mut templates = vec![
        tpl("idominant", "idominant", dom.clone(), vec![]),
        tpl("neglevi", "neglevi", vec![unit(0, -1)], (1..n).map(|i| unit(i, 1)).collect()),
        tpl("gs", "gs", with(vec![gs]), vec![]),
        tpl("pha", "pha", with(vec![pha.clone()]), vec![]),
        tpl("zip", "pha", with(vec![pha]), vec![]),
        tpl("hw", "hw", with(vec![hw.clone()]), vec![]),
        tpl("lw", "lw", with(vec![hw]), vec![]),
    ];
    templates[4].note = Some("Hasse type: the zip cone is the partial Hasse invariant cone".into());
    PaperExample { name: "SOodd".into(), params: params.clone(), quotient: None, lineality: vec![], templates }
}

/// The worked example behind a preset, if there is one.
pub fn example(name: &str, params: &PresetParams) -> Result<PaperExample> {
    match name {
        "U21-inert" => Ok(unitary_example(params)),
        "SOodd" => Ok(odd_orthogonal_example(params)),
        "ResSplit" => {
            Ok(PaperExample { name: name.into(), params: params.clone(), quotient: None, lineality: vec![], templates: vec![] })
        }
        n if PRESET_NAMES.contains(&n) => Err(Error::BadParams(format!("preset `{n}` has no expected data"))),
        other => Err(Error::UnknownPreset(other.to_string())),
    }
}

/// One line of a reproduction report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReportRow {
    pub name: String,
    pub pass: bool,
    pub computed: Vec<String>,
    pub expected: Vec<String>,
    pub note: Option<String>,
}

impl ReportRow {
    fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "status": if self.pass { "PASS" } else { "FAIL" },
            "computed": self.computed,
            "expected": self.expected,
            "note": self.note,
        })
    }
}

#[derive(Clone, Debug)]
pub struct ReproductionReport {
    pub example: String,
    pub params: PresetParams,
    pub rows: Vec<ReportRow>,
    pub zip: ZipReport,
    /// Whether the cones in the rows are shown in quotient coordinates.
    pub quotient_coordinates: bool,
}

impl ReproductionReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }

    pub fn to_json(&self) -> Result<Value> {
        let mut v = self.zip.to_json()?;
        let obj = v.as_object_mut().expect("report is an object");
        obj.insert("example".into(), json!(self.example));
        obj.insert(
            "params".into(),
            json!({"q": self.params.q, "n": self.params.n, "m": self.params.m, "r": self.params.r, "base": self.params.base}),
        );
        obj.insert("quotient_coordinates".into(), json!(self.quotient_coordinates));
        obj.insert("diff".into(), Value::Array(self.rows.iter().map(ReportRow::to_json).collect()));
        obj.insert("passed".into(), json!(self.passed()));
        Ok(v)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("example {} q={}", self.example, self.params.q);
        if let Some(n) = self.params.n {
            out.push_str(&format!(" n={n}"));
        }
        if self.quotient_coordinates {
            out.push_str(" (cones in quotient coordinates)");
        }
        out.push('\n');
        for r in &self.rows {
            out.push_str(&format!("{} {}\n", if r.pass { "PASS" } else { "FAIL" }, r.name));
            if !r.computed.is_empty() || !r.expected.is_empty() {
                out.push_str(&format!("  computed: {}\n", r.computed.join("; ")));
                out.push_str(&format!("  expected: {}\n", r.expected.join("; ")));
            }
            if let Some(n) = &r.note {
                out.push_str(&format!("  note: {n}\n"));
            }
        }
        out.push_str(if self.passed() { "overall PASS\n" } else { "overall FAIL\n" });
        out
    }
}

/// `c₁a1 + c₂a2 + … >= 0` (or `= 0`).
pub fn format_covector(c: &[Int], rel: &str) -> String {
    let mut s = String::new();
    for (i, x) in c.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let neg = x < &Int::zero();
        let abs = if neg { -x } else { x.clone() };
        if s.is_empty() {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        if !abs.is_one() {
            s.push_str(&abs.to_string());
        }
        s.push_str(&format!("a{}", i + 1));
    }
    if s.is_empty() {
        s.push('0');
    }
    format!("{s} {rel} 0")
}

/// Facets and equations of a cone as readable lines.
pub fn describe_cone(c: &Cone) -> Result<Vec<String>> {
    let mut out: Vec<String> = c.equations()?.iter().map(|e| format_covector(e, "=")).collect();
    out.extend(c.facets()?.iter().map(|f| format_covector(f, ">=")));
    Ok(out)
}

fn quotient_matrix(rows: &[Vec<i64>]) -> QMatrix {
    rows.iter().map(|r| r.iter().map(|&x| Rat::from_integer(Int::from(x))).collect()).collect()
}

fn row(name: &str, pass: bool, note: impl Into<String>) -> ReportRow {
    ReportRow { name: name.into(), pass, computed: vec![], expected: vec![], note: Some(note.into()) }
}

fn rat(n: Int, d: Int) -> BigRational {
    BigRational::new(n, d)
}

/// Compute every cone of the example and compare with its templates.
pub fn reproduce(name: &str, params: &PresetParams, cap: usize) -> Result<ReproductionReport> {
    let ex = example(name, params)?;
    let ctx = preset(name, params)?;
    let zip = zipcones::zip_report(&ctx, cap)?;
    let q = params.q;
    let mut rows = Vec::new();
    let project = |c: &Cone| -> Result<Cone> {
        match &ex.quotient {
            Some(m) => c.image_under(&quotient_matrix(m))?.complete(),
            None => Ok(c.clone()),
        }
    };
    let out_dim = ex.quotient.as_ref().map_or(ctx.dim(), |m| m.len());

    if let Some(m) = &ex.quotient {
        let kernel = q_kernel(&quotient_matrix(m), ctx.dim());
        let declared = span_basis(&ex.lineality.iter().map(|v| to_big(v)).collect::<Vec<_>>());
        let ok = span_basis(&kernel) == declared;
        rows.push(row("quotient_kernel", ok, "kernel of the quotient map equals the declared lineality"));
        let lin_ok = zip.cones.iter().all(|(_, c)| {
            ex.lineality.iter().all(|v| {
                let neg: Vec<i64> = v.iter().map(|x| -x).collect();
                c.member_i64(v).unwrap_or(false) && c.member_i64(&neg).unwrap_or(false)
            })
        });
        rows.push(row("lineality_in_all_cones", lin_ok, "the declared lineality lies in every computed cone"));
    }

    for t in &ex.templates {
        let computed = zip.cone(&t.computed).ok_or_else(|| Error::Internal(format!("missing cone {}", t.computed)))?;
        let got = project(computed)?;
        let want = t.evaluate(out_dim, q)?;
        let canonical = got.facets()? == want.facets()? && got.equations()? == want.equations()?;
        let pass = canonical || got.equal(&want)?;
        rows.push(ReportRow {
            name: t.name.clone(),
            pass,
            computed: describe_cone(&got)?,
            expected: describe_cone(&want)?,
            note: t.note.clone(),
        });
    }

    match name {
        "U21-inert" => {
            rows.push(row("hasse_type", !zip.hasse_type, "not of Hasse type"));
            let gs = zip.cone("gs").expect("gs");
            let lw = zip.cone("lw").expect("lw");
            let hw = zip.cone("hw").expect("hw");
            rows.push(row("gs_in_lw", lw.contains(gs)?, "the Griffiths–Schmid cone lies in the lowest weight cone"));
            rows.push(row("gs_not_in_hw", !hw.contains(gs)?, "the Griffiths–Schmid cone is not in the highest weight cone"));
        }
        "SOodd" => {
            let n = params.n.unwrap_or(2);
            rows.push(row("hasse_type", zip.hasse_type && zip.exact_zip, "Hasse type, zip cone exact"));
            let hw = zip.cone("hw").expect("hw");
            let pha = zip.cone("pha").expect("pha");
            if n == 2 {
                rows.push(row("hw_equals_pha", hw.equal(pha)?, "equal cones at n = 2"));
            } else {
                let witness = hw.find_violation(pha)?;
                let strict = pha.contains(hw)? && witness.is_some();
                let mut r = row("hw_strictly_in_pha", strict, "strict inclusion");
                if let Some((ray, _)) = witness {
                    r.note = Some(format!("strict inclusion, witness ray {:?}", ray.iter().map(|x| x.to_string()).collect::<Vec<_>>()));
                }
                rows.push(r);
            }
            if n == 3 {
                rows.extend(figure_rows(&zip, q)?);
            }
        }
        "ResSplit" => {
            let (base, r) = res_split_shape(params)?;
            let check = weil_levi_check(&ctx, base.semisimple_rank(), r);
            rows.push(row(
                "weil_levi_types",
                check.agrees(),
                format!("P'_j types {:?}, Δ^(P'_j) {:?}", check.direct, check.delta_p_prime),
            ));
        }
        _ => {}
    }

    Ok(ReproductionReport { example: ex.name, params: params.clone(), rows, zip, quotient_coordinates: ex.quotient.is_some() })
}

/// The `n = 3` slice `a1 = −(q−1)`: `q−1 < a < b < q+1`, `(a,a)` and `(b,0)` on
/// the highest weight boundary, `(q−1,·)` and `(q+1,·)` on the other two.
fn figure_rows(zip: &ZipReport, q: u64) -> Result<Vec<ReportRow>> {
    let qi = Int::from(q);
    let one = Int::one();
    let num = int_pow(q, 4) - &one;
    let den_a = int_pow(q, 3) + int_pow(q, 2) - &qi - &one;
    let den_b = int_pow(q, 3) - &one;
    let a = rat(num.clone(), den_a.clone());
    let b = rat(num.clone(), den_b.clone());
    let lo = rat(&qi - &one, one.clone());
    let hi = rat(&qi + &one, one.clone());
    let mut rows = vec![row("figure_order", lo < a && a < b && b < hi, "q-1 < a < b < q+1")];
    let hw = zip.cone("hw").expect("hw");
    let pha = zip.cone("pha").expect("pha");
    let gs = zip.cone("gs").expect("gs");
    let on_boundary = |c: &Cone, den: &Int, x: &Int, y: &Int| -> Result<bool> {
        let p = vec![-(&qi - &one) * den, x.clone(), y.clone()];
        let out = vec![p[0].clone(), x + &one, y + if y.is_zero() { Int::zero() } else { one.clone() }];
        Ok(c.member(&p)? && !c.member(&out)?)
    };
    rows.push(row("figure_point_a", on_boundary(hw, &den_a, &num, &num)?, "(a, a) is a boundary point of the highest weight slice"));
    rows.push(row("figure_point_b", on_boundary(hw, &den_b, &num, &Int::zero())?, "(b, 0) is a boundary point of the highest weight slice"));
    let qm = &qi - &one;
    let qp = &qi + &one;
    rows.push(row(
        "figure_gs",
        on_boundary(gs, &one, &qm, &qm)? && on_boundary(gs, &one, &qm, &Int::zero())?,
        "(q-1, q-1) and (q-1, 0) bound the Griffiths–Schmid slice",
    ));
    rows.push(row(
        "figure_pha",
        on_boundary(pha, &one, &qp, &qp)? && on_boundary(pha, &one, &qp, &Int::zero())?,
        "(q+1, q+1) and (q+1, 0) bound the partial Hasse invariant slice",
    ));
    Ok(rows)
}

/// The catalog used by the property suites.
pub fn catalog_contexts() -> Result<Vec<(String, ZipContext)>> {
    let entries: Vec<(&str, PresetParams)> = vec![
        ("U21-inert", PresetParams::with_q(2)),
        ("U21-inert", PresetParams::with_q(3)),
        ("SOodd", PresetParams::with_q(2).n(2)),
        ("SOodd", PresetParams::with_q(3).n(3)),
        ("SOodd", PresetParams::with_q(2).n(4)),
        ("GL3-split", PresetParams::with_q(2)),
        ("Sp4", PresetParams::with_q(3)),
        ("HilbertA1m", PresetParams::with_q(2).m(1)),
        ("HilbertA1m", PresetParams::with_q(3).m(2)),
        ("HilbertA1m", PresetParams::with_q(2).m(3)),
        ("ResSplit", PresetParams::with_q(2).base("A3").r(2)),
    ];
    entries
        .into_iter()
        .map(|(name, p)| {
            let label = format!("{name}{}", describe_params(&p));
            preset(name, &p).map(|c| (label, c))
        })
        .collect()
}

fn describe_params(p: &PresetParams) -> String {
    let mut s = format!("(q={}", p.q);
    for (k, v) in [("n", p.n), ("m", p.m), ("r", p.r)] {
        if let Some(v) = v {
            s.push_str(&format!(",{k}={v}"));
        }
    }
    if let Some(b) = &p.base {
        s.push_str(&format!(",base={b}"));
    }
    s.push(')');
    s
}

/// The context with the same root datum and Frobenius and Levi type `I₀`.
pub fn levi0_context(ctx: &ZipContext) -> Result<ZipContext> {
    make_context(ctx.rd().clone(), ctx.frob().clone(), ctx.levi0())
}

/// `w₀,I w₀,I₀` applied to the Griffiths–Schmid cone of the `I₀` context.
pub fn transported_gs(ctx: &ZipContext) -> Result<Cone> {
    let inner = zipcones::gs_cone(&levi0_context(ctx)?)?;
    let m = ctx.w0_levi().matrix.mul(&ctx.w0_levi0().matrix).to_rational();
    inner.image_under(&m)?.complete()
}

/// Whether `σ` fixes every index of `I`.
pub fn fixes_levi_pointwise(ctx: &ZipContext) -> bool {
    let p = ctx.frob().perm();
    ctx.levi().iter().all(|&i| p[i] == i)
}

/// Reduced word lengths of an enumeration agree with inversion counts.
pub fn lengths_agree(rd: &RootDatum, cap: usize) -> Result<(usize, bool)> {
    let all: Vec<usize> = (0..rd.semisimple_rank()).collect();
    let elems = weyl::enumerate_parabolic(rd, &all, cap)?;
    let ok = elems.iter().all(|w| w.word.len() == w.length && weyl::inversion_count(rd, &w.matrix) == w.length);
    Ok((elems.len(), ok))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_build() {
        assert_eq!(catalog_contexts().unwrap().len(), 11);
        assert!(matches!(preset("nope", &PresetParams::with_q(2)), Err(Error::UnknownPreset(_))));
        assert!(matches!(preset("SOodd", &PresetParams::with_q(1)), Err(Error::BadParams(_))));
        let h = preset("HilbertA1m", &PresetParams::with_q(3).m(2)).unwrap();
        assert_eq!(h.frob().perm(), &[1, 0]);
        assert!(h.levi().is_empty());
    }

    #[test]
    fn polynomial_templates() {
        assert_eq!(eval_poly(&[1, -1], 3), Int::from(-2));
        // n = 2: (1 − q²) a1 − (q − 1)² a2.
        let c: Vec<Int> = odd_orthogonal_hw_covector(2).iter().map(|p| eval_poly(p, 3)).collect();
        assert_eq!(c, to_big(&[-8, -4]));
    }

    #[test]
    fn unitary_reproduces() {
        let rep = reproduce("U21-inert", &PresetParams::with_q(2), weyl::default_cap()).unwrap();
        assert!(rep.passed(), "{}", rep.to_text());
    }

    #[test]
    fn weil_levi_types() {
        let p = PresetParams::with_q(2).base("A3").r(2);
        let ctx = preset("ResSplit", &p).unwrap();
        let check = weil_levi_check(&ctx, 3, 2);
        assert!(check.agrees());
        assert_eq!(check.direct, vec![vec![2], vec![2]]);
    }

    #[test]
    fn formatting() {
        assert_eq!(format_covector(&to_big(&[1, -2, 0]), ">="), "a1 - 2a2 >= 0");
        assert_eq!(format_covector(&to_big(&[-1, 0]), "="), "-a1 = 0");
    }
}
