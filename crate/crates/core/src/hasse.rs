//! Hasse-type detection and the brute-force classification of Dynkin triples
//! `(D, I, σ)` whose σ agrees with the opposition involution on `I`.

use std::collections::{BTreeSet, HashSet};

use serde::Serialize;
use serde_json::{json, Value};

use crate::par::{self, Exec};
use crate::rootdata::{cartan_matrix, diagram_components, diagram_type, RootDatum};
use crate::weyl;
use crate::zipcones::{self, ZipContext};
use crate::{Error, Result};

/// Largest rank handled by [`classify`].
pub const MAX_CLASSIFY_RANK: usize = 8;

/// `σ(I) = I` and `σ(α) = −w₀,I(α)` for every `α ∈ I`.
pub fn is_hasse_type(ctx: &ZipContext) -> bool {
    let perm = ctx.frob().perm();
    let levi = ctx.levi();
    if levi.iter().any(|&i| !levi.contains(&perm[i])) {
        return false;
    }
    match weyl::opposition_involution(ctx.rd(), levi) {
        Ok(tau) => levi.iter().all(|&i| perm[i] == tau[i]),
        Err(_) => false,
    }
}

/// Which of the equivalent Hasse-type criteria hold for a context.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HasseReport {
    pub hasse_type: bool,
    /// `σ(I) = I`, i.e. the parabolic is defined over `F_q`.
    pub levi_sigma_stable: bool,
    /// `σ` agrees with `−w₀,I` on `I`.
    pub sigma_is_opposition: bool,
    /// The Griffiths–Schmid cone lies in the partial Hasse invariant cone.
    pub gs_in_pha: bool,
}

pub fn hasse_report(ctx: &ZipContext) -> Result<HasseReport> {
    let perm = ctx.frob().perm();
    let levi = ctx.levi();
    let levi_sigma_stable = levi.iter().all(|&i| levi.contains(&perm[i]));
    let tau = weyl::opposition_involution(ctx.rd(), levi)?;
    let sigma_is_opposition = levi.iter().all(|&i| perm[i] == tau[i]);
    let gs_in_pha = zipcones::pha_cone(ctx)?.contains(&zipcones::gs_cone(ctx)?)?;
    Ok(HasseReport { hasse_type: levi_sigma_stable && sigma_is_opposition, levi_sigma_stable, sigma_is_opposition, gs_in_pha })
}

/// A Dynkin diagram (by its Cartan matrix), an automorphism and a σ-stable vertex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DynkinTriple {
    pub cartan: Vec<Vec<i64>>,
    pub sigma: Vec<usize>,
    pub levi: Vec<usize>,
}

impl DynkinTriple {
    pub fn new(cartan: Vec<Vec<i64>>, sigma: Vec<usize>, levi: Vec<usize>) -> Result<Self> {
        let n = cartan.len();
        if sigma.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: sigma.len() });
        }
        if !is_automorphism(&cartan, &sigma) {
            return Err(Error::NotAnAutomorphism("vertex permutation does not preserve the diagram".into()));
        }
        let mut levi = levi;
        levi.sort_unstable();
        levi.dedup();
        if let Some(&bad) = levi.iter().find(|&&i| i >= n) {
            return Err(Error::IndexOutOfRange { index: bad, len: n });
        }
        if levi.iter().any(|&i| !levi.contains(&sigma[i])) {
            return Err(Error::BadParams("I is not σ-stable".into()));
        }
        Ok(DynkinTriple { cartan, sigma, levi })
    }

    /// The triple attached to a zip context.
    pub fn from_context(ctx: &ZipContext) -> Self {
        DynkinTriple { cartan: ctx.rd().cartan().to_vec(), sigma: ctx.frob().perm().to_vec(), levi: ctx.levi().to_vec() }
    }
}

fn is_automorphism(cartan: &[Vec<i64>], perm: &[usize]) -> bool {
    let n = cartan.len();
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || seen[p] {
            return false;
        }
        seen[p] = true;
    }
    (0..n).all(|i| (0..n).all(|j| cartan[perm[i]][perm[j]] == cartan[i][j]))
}

fn sub_cartan(cartan: &[Vec<i64>], verts: &[usize]) -> Vec<Vec<i64>> {
    verts.iter().map(|&i| verts.iter().map(|&j| cartan[i][j]).collect()).collect()
}

/// σ restricted to `I` equals the opposition involution of `I`, checked
/// component by component on the sub-root-system of each component.
pub fn opposition_condition(t: &DynkinTriple) -> bool {
    if t.levi.iter().any(|&i| !t.levi.contains(&t.sigma[i])) {
        return false;
    }
    for comp in diagram_components(&t.cartan, &t.levi) {
        if comp.iter().any(|&i| !comp.contains(&t.sigma[i])) {
            return false;
        }
        let Ok(rd) = RootDatum::from_cartan(&sub_cartan(&t.cartan, &comp), None) else { return false };
        let all: Vec<usize> = (0..comp.len()).collect();
        let Ok(tau) = weyl::opposition_involution(&rd, &all) else { return false };
        if comp.iter().enumerate().any(|(li, &gi)| t.sigma[gi] != comp[tau[li]]) {
            return false;
        }
    }
    true
}

/// Every connected component meets `I` in all or all but one of its vertices.
pub fn is_maximal(t: &DynkinTriple) -> bool {
    let all: Vec<usize> = (0..t.cartan.len()).collect();
    diagram_components(&t.cartan, &all).iter().all(|c| {
        let inside = c.iter().filter(|v| t.levi.contains(v)).count();
        inside + 1 >= c.len()
    })
}

/// Vertices of `I` lying in components of `I` with at least two vertices.
pub fn levi_ge2(t: &DynkinTriple) -> Vec<usize> {
    let mut out: Vec<usize> =
        diagram_components(&t.cartan, &t.levi).into_iter().filter(|c| c.len() >= 2).flatten().collect();
    out.sort_unstable();
    out
}

/// Isolated vertices of `I`.
pub fn isolated(t: &DynkinTriple) -> Vec<usize> {
    diagram_components(&t.cartan, &t.levi).into_iter().filter(|c| c.len() == 1).flatten().collect()
}

/// σ-orbits of connected components of the diagram.
fn component_orbits(t: &DynkinTriple) -> Vec<Vec<Vec<usize>>> {
    let all: Vec<usize> = (0..t.cartan.len()).collect();
    let comps = diagram_components(&t.cartan, &all);
    let mut used = vec![false; comps.len()];
    let mut orbits = Vec::new();
    for start in 0..comps.len() {
        if used[start] {
            continue;
        }
        let mut orbit = Vec::new();
        let mut cur = start;
        while !used[cur] {
            used[cur] = true;
            orbit.push(comps[cur].clone());
            let img = t.sigma[comps[cur][0]];
            cur = comps.iter().position(|c| c.contains(&img)).expect("σ permutes components");
        }
        orbits.push(orbit);
    }
    orbits
}

/// The literal allow-list of maximal Hodge-type cases, applied to every σ-orbit
/// of components: `A1^m` with empty `I`; `A2` with `A1`; `B_n` with `B_{n−1}`;
/// `D_{2m+1}` with `D_{2m}`; the last three with trivial σ.
pub fn hodge_filter(t: &DynkinTriple) -> bool {
    component_orbits(t).iter().all(|orbit| {
        let verts: Vec<usize> = orbit.iter().flatten().copied().collect();
        let levi: Vec<usize> = verts.iter().copied().filter(|v| t.levi.contains(v)).collect();
        if orbit.iter().all(|c| c.len() == 1) {
            return levi.is_empty();
        }
        if orbit.len() != 1 || verts.iter().any(|&v| t.sigma[v] != v) || levi.len() + 1 != verts.len() {
            return false;
        }
        let ty = diagram_type(&t.cartan, &verts);
        let comps = diagram_components(&t.cartan, &levi);
        if comps.len() != 1 {
            return false;
        }
        let sub = diagram_type(&t.cartan, &levi);
        let rank = verts.len();
        match ty.as_bytes()[0] {
            b'A' => rank == 2,
            b'B' if rank == 2 => {
                // The vertex kept in I must be the short one.
                let v = levi[0];
                verts.iter().any(|&w| w != v && t.cartan[v][w] == -2)
            }
            b'B' => ty == format!("B{rank}") && sub == format!("B{}", rank - 1),
            b'D' => rank % 2 == 1 && rank >= 5 && sub == format!("D{}", rank - 1),
            _ => false,
        }
    })
}

/// One enumerated triple with its flags.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Classified {
    pub rank: usize,
    pub diagram_type: String,
    pub sigma_desc: String,
    pub levi: Vec<usize>,
    pub sigma: Vec<usize>,
    pub connected: bool,
    pub passes: bool,
    pub maximal: bool,
    pub hodge: bool,
    /// Whether `levi` is the chosen representative of its class under the centralizer of σ.
    pub canonical: bool,
    pub i_desc: String,
    pub table_sigma: String,
    cartan: Vec<Vec<i64>>,
}

impl Classified {
    pub fn triple(&self) -> DynkinTriple {
        DynkinTriple { cartan: self.cartan.clone(), sigma: self.sigma.clone(), levi: self.levi.clone() }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "diagram_type": self.diagram_type,
            "rank": self.rank,
            "sigma_desc": self.sigma_desc,
            "I_desc": self.i_desc,
            "maximal": self.maximal,
            "hodge": self.hodge,
        })
    }

    /// Key for the expected tables, with `I` replaced by `I^{≥2}` when `reduced`.
    pub fn key(&self, reduced: bool) -> TableKey {
        let levi = if reduced { levi_ge2(&self.triple()) } else { self.levi.clone() };
        TableKey { diagram: self.diagram_type.clone(), sigma: self.table_sigma.clone(), levi: levi.iter().map(|v| v + 1).collect() }
    }
}

/// Options for [`classify`].
#[derive(Clone, Copy, Debug, Default)]
pub struct ClassifyOptions {
    /// Keep only triples whose isolated `I`-vertices are σ-fixed.
    pub fixed_isolated_only: bool,
    /// Keep only triples with `I = I^{≥2}`.
    pub no_isolated: bool,
    pub maximal_only: bool,
    pub connected_only: bool,
    pub hodge_only: bool,
}

/// Cycle notation on 1-based labels, `"id"` for the identity.
pub fn cycle_notation(perm: &[usize]) -> String {
    let mut seen = vec![false; perm.len()];
    let mut out = String::new();
    for s in 0..perm.len() {
        if seen[s] || perm[s] == s {
            continue;
        }
        let mut cyc = Vec::new();
        let mut c = s;
        while !seen[c] {
            seen[c] = true;
            cyc.push((c + 1).to_string());
            c = perm[c];
        }
        out.push('(');
        out.push_str(&cyc.join(" "));
        out.push(')');
    }
    if out.is_empty() {
        "id".into()
    } else {
        out
    }
}

/// `"B2{3,4}+A1{1}"` style description of a vertex set, `"-"` when empty.
pub fn levi_description(cartan: &[Vec<i64>], levi: &[usize]) -> String {
    let comps = diagram_components(cartan, levi);
    if comps.is_empty() {
        return "-".into();
    }
    comps
        .iter()
        .map(|c| {
            let labels: Vec<String> = c.iter().map(|v| (v + 1).to_string()).collect();
            format!("{}{{{}}}", diagram_type(cartan, c), labels.join(","))
        })
        .collect::<Vec<_>>()
        .join("+")
}

/// All vertex permutations preserving the Cartan matrix, sorted.
pub fn automorphisms(cartan: &[Vec<i64>]) -> Vec<Vec<usize>> {
    let n = cartan.len();
    let mut out = Vec::new();
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn rec(k: usize, c: &[Vec<i64>], perm: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        let n = c.len();
        if k == n {
            out.push(perm.clone());
            return;
        }
        for img in 0..n {
            if used[img] || c[img][img] != c[k][k] {
                continue;
            }
            if (0..k).all(|j| c[img][perm[j]] == c[k][j] && c[perm[j]][img] == c[j][k]) {
                used[img] = true;
                perm[k] = img;
                rec(k + 1, c, perm, used, out);
                used[img] = false;
            }
        }
        perm[k] = usize::MAX;
    }
    rec(0, cartan, &mut perm, &mut used, &mut out);
    out.sort();
    out
}

fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&x| a[x]).collect()
}

fn invert(a: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; a.len()];
    for (i, &x) in a.iter().enumerate() {
        inv[x] = i;
    }
    inv
}

/// A diagram to classify over, with representatives of the σ classes to use.
struct Diagram {
    label: String,
    cartan: Vec<Vec<i64>>,
    connected: bool,
    sigmas: Vec<(Vec<usize>, String)>,
}

fn block_diagonal(block: &[Vec<i64>], k: usize) -> Vec<Vec<i64>> {
    let d = block.len();
    let n = d * k;
    let mut c = vec![vec![0; n]; n];
    for b in 0..k {
        for i in 0..d {
            for j in 0..d {
                c[b * d + i][b * d + j] = block[i][j];
            }
        }
    }
    c
}

fn connected_types(max_rank: usize) -> Vec<(char, usize)> {
    let mut out = Vec::new();
    for n in 1..=max_rank {
        out.push(('A', n));
        if n >= 2 {
            out.push(('B', n));
        }
        if n >= 3 {
            out.push(('C', n));
        }
        if n >= 4 {
            out.push(('D', n));
        }
        if (6..=8).contains(&n) {
            out.push(('E', n));
        }
        if n == 4 {
            out.push(('F', 4));
        }
        if n == 2 {
            out.push(('G', 2));
        }
    }
    out
}

/// Conjugacy class representatives of a permutation group: the lexicographically
/// smallest element of each class.
fn class_representatives(group: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut reps = Vec::new();
    for s in group {
        let minimal = group.iter().all(|g| compose(&compose(g, s), &invert(g)) >= *s);
        if minimal {
            reps.push(s.clone());
        }
    }
    reps
}

fn one_line(perm: &[usize]) -> String {
    if perm.iter().enumerate().all(|(i, &p)| i == p) {
        return "id".into();
    }
    perm.iter().map(|p| (p + 1).to_string()).collect::<Vec<_>>().join(",")
}

fn diagrams(max_rank: usize, connected_only: bool) -> Vec<Diagram> {
    let mut out = Vec::new();
    let types = connected_types(max_rank);
    for &(l, n) in &types {
        let cartan = cartan_matrix(l, n).expect("valid type");
        let sigmas = class_representatives(&automorphisms(&cartan)).into_iter().map(|s| {
            let key = one_line(&s);
            (s, key)
        });
        out.push(Diagram { label: format!("{l}{n}"), sigmas: sigmas.collect(), cartan, connected: true });
    }
    if connected_only {
        return out;
    }
    // Single σ-orbits of k ≥ 2 copies of a connected diagram: σ cycles the copies
    // and applies τ on the way back, τ running over classes of Aut of one copy.
    for &(l, d) in &types {
        let block = cartan_matrix(l, d).expect("valid type");
        let taus = class_representatives(&automorphisms(&block));
        for k in 2..=max_rank / d {
            let cartan = block_diagonal(&block, k);
            let sigmas = taus
                .iter()
                .map(|tau| {
                    let mut s = vec![0; d * k];
                    for b in 0..k {
                        for v in 0..d {
                            s[b * d + v] = if b + 1 < k { (b + 1) * d + v } else { tau[v] };
                        }
                    }
                    let key = if tau.iter().enumerate().all(|(i, &t)| i == t) {
                        "cyc".to_string()
                    } else {
                        format!("cyc/{}", one_line(tau))
                    };
                    (s, key)
                })
                .collect();
            out.push(Diagram { label: format!("{l}{d}^{k}"), cartan, connected: false, sigmas });
        }
    }
    out
}

/// σ-stable vertex sets, as sorted index lists.
fn sigma_stable_sets(sigma: &[usize]) -> Vec<Vec<usize>> {
    let n = sigma.len();
    let mut seen = vec![false; n];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut o = Vec::new();
        let mut c = s;
        while !seen[c] {
            seen[c] = true;
            o.push(c);
            c = sigma[c];
        }
        orbits.push(o);
    }
    (0u32..1 << orbits.len())
        .map(|mask| {
            let mut v: Vec<usize> =
                orbits.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).flat_map(|(_, o)| o.clone()).collect();
            v.sort_unstable();
            v
        })
        .collect()
}

/// Every σ-stable `I` for every class representative σ of every diagram of
/// rank at most `max_rank`, with the opposition condition evaluated.
pub fn enumerate_triples(max_rank: usize, connected_only: bool, exec: Exec) -> Result<Vec<Classified>> {
    if max_rank > MAX_CLASSIFY_RANK {
        return Err(Error::RankTooLarge(max_rank));
    }
    let ds = diagrams(max_rank, connected_only);
    let jobs: Vec<(usize, usize)> =
        ds.iter().enumerate().flat_map(|(i, d)| (0..d.sigmas.len()).map(move |j| (i, j))).collect();
    let chunks = par::map(exec, &jobs, |&(di, si)| {
        let d = &ds[di];
        let (sigma, table_sigma) = &d.sigmas[si];
        let aut = automorphisms(&d.cartan);
        let centralizer: Vec<&Vec<usize>> = aut.iter().filter(|g| compose(g, sigma) == compose(sigma, g)).collect();
        sigma_stable_sets(sigma)
            .into_iter()
            .map(|levi| {
                let canonical = centralizer.iter().all(|g| {
                    let mut img: Vec<usize> = levi.iter().map(|&v| g[v]).collect();
                    img.sort_unstable();
                    img >= levi
                });
                let t = DynkinTriple { cartan: d.cartan.clone(), sigma: sigma.clone(), levi: levi.clone() };
                let passes = opposition_condition(&t);
                let maximal = is_maximal(&t);
                let hodge = passes && maximal && hodge_filter(&t);
                Classified {
                    rank: d.cartan.len(),
                    diagram_type: d.label.clone(),
                    sigma_desc: cycle_notation(sigma),
                    i_desc: levi_description(&d.cartan, &levi),
                    levi,
                    sigma: sigma.clone(),
                    connected: d.connected,
                    passes,
                    maximal,
                    hodge,
                    canonical,
                    table_sigma: table_sigma.clone(),
                    cartan: d.cartan.clone(),
                }
            })
            .collect::<Vec<_>>()
    });
    let mut all: Vec<Classified> = chunks.into_iter().flatten().collect();
    all.sort();
    Ok(all)
}

/// Triples satisfying the opposition condition, one per class, after filters.
pub fn classify(max_rank: usize, opts: ClassifyOptions) -> Result<Vec<Classified>> {
    classify_with(max_rank, opts, Exec::default())
}

pub fn classify_with(max_rank: usize, opts: ClassifyOptions, exec: Exec) -> Result<Vec<Classified>> {
    let all = enumerate_triples(max_rank, opts.connected_only, exec)?;
    Ok(all
        .into_iter()
        .filter(|c| c.passes && c.canonical)
        .filter(|c| {
            let t = c.triple();
            let iso = isolated(&t);
            (!opts.fixed_isolated_only || iso.iter().all(|&v| t.sigma[v] == v))
                && (!opts.no_isolated || iso.is_empty())
                && (!opts.maximal_only || c.maximal)
                && (!opts.hodge_only || c.hodge)
        })
        .collect())
}

/// A row of an expected table: diagram label, σ key and 1-based vertex set.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TableKey {
    pub diagram: String,
    pub sigma: String,
    pub levi: Vec<usize>,
}

impl std::fmt::Display for TableKey {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let levi: Vec<String> = self.levi.iter().map(|v| v.to_string()).collect();
        let levi = if levi.is_empty() { "-".to_string() } else { levi.join(",") };
        write!(f, "{} σ={} I={}", self.diagram, self.sigma, levi)
    }
}

impl TableKey {
    /// Rank of the diagram named by the key.
    pub fn rank(&self) -> usize {
        let (base, k) = match self.diagram.split_once('^') {
            Some((b, k)) => (b, k.parse::<usize>().unwrap_or(1)),
            None => (self.diagram.as_str(), 1),
        };
        base[1..].parse::<usize>().unwrap_or(0) * k
    }
}

/// Which expected table to load.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Table {
    /// Connected diagrams, keyed by `I^{≥2}`.
    Reduced,
    /// Maximal triples.
    Maximal,
    /// Maximal triples of Hodge type.
    Hodge,
}

fn table_source(t: Table) -> &'static str {
    match t {
        Table::Reduced => include_str!("../data/hasse_reduced.tsv"),
        Table::Maximal => include_str!("../data/hasse_maximal.tsv"),
        Table::Hodge => include_str!("../data/hasse_hodge.tsv"),
    }
}

/// Parse a table: tab-separated `diagram`, `sigma`, `levi`; `#` starts a comment.
pub fn parse_table(src: &str) -> Result<Vec<TableKey>> {
    let mut out = Vec::new();
    for (lineno, line) in src.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let cols: Vec<&str> = line.split('\t').collect();
        if cols.len() != 3 {
            return Err(Error::Parse(format!("table line {}: expected 3 columns", lineno + 1)));
        }
        let levi = if cols[2] == "-" {
            Vec::new()
        } else {
            cols[2]
                .split(',')
                .map(|s| s.trim().parse::<usize>().map_err(|_| Error::Parse(format!("table line {}", lineno + 1))))
                .collect::<Result<Vec<_>>>()?
        };
        out.push(TableKey { diagram: cols[0].to_string(), sigma: cols[1].to_string(), levi });
    }
    Ok(out)
}

pub fn expected_table(t: Table) -> Vec<TableKey> {
    parse_table(table_source(t)).expect("bundled tables parse")
}

/// Differences between a computed set of keys and an expected table.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Comparison {
    /// Computed but not in the table.
    pub unexpected: Vec<TableKey>,
    /// In the table but not computed.
    pub missing: Vec<TableKey>,
    /// Number of table rows considered.
    pub expected_rows: usize,
    /// Number of computed keys.
    pub computed_rows: usize,
}

impl Comparison {
    pub fn is_match(&self) -> bool {
        self.unexpected.is_empty() && self.missing.is_empty()
    }

    pub fn to_json(&self) -> Value {
        let show = |v: &[TableKey]| v.iter().map(|k| k.to_string()).collect::<Vec<_>>();
        json!({
            "match": self.is_match(),
            "expected_rows": self.expected_rows,
            "computed_rows": self.computed_rows,
            "unexpected": show(&self.unexpected),
            "missing": show(&self.missing),
        })
    }
}

fn diff(computed: BTreeSet<TableKey>, expected: BTreeSet<TableKey>) -> Comparison {
    Comparison {
        unexpected: computed.difference(&expected).cloned().collect(),
        missing: expected.difference(&computed).cloned().collect(),
        expected_rows: expected.len(),
        computed_rows: computed.len(),
    }
}

/// Connected diagrams, σ-stable `I` with σ-fixed isolated vertices and
/// `I^{≥2} ≠ ∅`: the condition must hold exactly when `(σ, I^{≥2})` is tabulated.
pub fn compare_reduced(triples: &[Classified], max_rank: usize) -> Comparison {
    let table: HashSet<TableKey> = expected_table(Table::Reduced).into_iter().filter(|k| k.rank() <= max_rank).collect();
    let mut computed = BTreeSet::new();
    let mut contradicted = BTreeSet::new();
    for c in triples.iter().filter(|c| c.connected) {
        let t = c.triple();
        if isolated(&t).iter().any(|&v| t.sigma[v] != v) || levi_ge2(&t).is_empty() {
            continue;
        }
        let key = c.key(true);
        if c.passes {
            computed.insert(key);
        } else if table.contains(&key) {
            contradicted.insert(key);
        }
    }
    let mut cmp = diff(computed, table.into_iter().collect());
    // A tabulated I^{≥2} that fails with some extra fixed isolated vertices is reported as unexpected.
    cmp.unexpected.extend(contradicted);
    cmp.unexpected.sort();
    cmp.unexpected.dedup();
    cmp
}

/// Maximal triples satisfying the condition against the maximal table.
pub fn compare_maximal(triples: &[Classified], max_rank: usize) -> Comparison {
    let table = expected_table(Table::Maximal).into_iter().filter(|k| k.rank() <= max_rank).collect();
    let computed = triples.iter().filter(|c| c.passes && c.canonical && c.maximal).map(|c| c.key(false)).collect();
    diff(computed, table)
}

/// Maximal Hodge-type triples against the Hodge table.
pub fn compare_hodge(triples: &[Classified], max_rank: usize) -> Comparison {
    let table = expected_table(Table::Hodge).into_iter().filter(|k| k.rank() <= max_rank).collect();
    let computed = triples.iter().filter(|c| c.canonical && c.hodge).map(|c| c.key(false)).collect();
    diff(computed, table)
}

/// For diagrams whose σ moves components, the condition holds iff `I` is empty.
/// Returns the counterexamples.
pub fn check_permuted_components(triples: &[Classified]) -> Vec<Classified> {
    triples.iter().filter(|c| !c.connected && c.passes != c.levi.is_empty()).cloned().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triple(l: char, n: usize, sigma: &[usize], levi: &[usize]) -> DynkinTriple {
        DynkinTriple::new(cartan_matrix(l, n).unwrap(), sigma.to_vec(), levi.to_vec()).unwrap()
    }

    #[test]
    fn opposition_examples() {
        // B3 with I = {α2, α3} of type B2.
        assert!(opposition_condition(&triple('B', 3, &[0, 1, 2], &[1, 2])));
        // A3 with I of type A2 and trivial σ.
        assert!(!opposition_condition(&triple('A', 3, &[0, 1, 2], &[0, 1])));
        // A3, I everything, σ the flip.
        assert!(opposition_condition(&triple('A', 3, &[2, 1, 0], &[0, 1, 2])));
    }

    #[test]
    fn automorphism_group_orders() {
        let orders: Vec<usize> = [('A', 1), ('A', 4), ('B', 3), ('D', 4), ('D', 5), ('E', 6), ('E', 7), ('F', 4), ('G', 2)]
            .iter()
            .map(|&(l, n)| automorphisms(&cartan_matrix(l, n).unwrap()).len())
            .collect();
        assert_eq!(orders, vec![1, 2, 1, 6, 2, 2, 1, 1, 1]);
        assert_eq!(class_representatives(&automorphisms(&cartan_matrix('D', 4).unwrap())).len(), 3);
    }

    #[test]
    fn maximal_and_hodge_examples() {
        let b = triple('B', 4, &[0, 1, 2, 3], &[1, 2, 3]);
        assert!(is_maximal(&b) && hodge_filter(&b));
        let c = triple('C', 4, &[0, 1, 2, 3], &[1, 2, 3]);
        assert!(is_maximal(&c) && !hodge_filter(&c));
        let e = triple('E', 8, &(0..8).collect::<Vec<_>>(), &(0..7).collect::<Vec<_>>());
        assert!(is_maximal(&e) && opposition_condition(&e) && !hodge_filter(&e));
        let b2 = triple('B', 2, &[0, 1], &[1]);
        assert!(hodge_filter(&b2));
        let b2_long = triple('B', 2, &[0, 1], &[0]);
        assert!(!hodge_filter(&b2_long));
    }

    #[test]
    fn descriptions() {
        assert_eq!(cycle_notation(&[0, 1, 3, 2]), "(3 4)");
        assert_eq!(cycle_notation(&[0, 1]), "id");
        let c = cartan_matrix('B', 4).unwrap();
        assert_eq!(levi_description(&c, &[0, 2, 3]), "A1{1}+B2{3,4}");
        assert_eq!(levi_description(&c, &[]), "-");
    }

    #[test]
    fn permuted_components_need_empty_levi() {
        let c = block_diagonal(&cartan_matrix('A', 1).unwrap(), 2);
        assert!(opposition_condition(&DynkinTriple::new(c.clone(), vec![1, 0], vec![]).unwrap()));
        assert!(!opposition_condition(&DynkinTriple::new(c, vec![1, 0], vec![0, 1]).unwrap()));
    }

    #[test]
    fn rank_cap() {
        assert_eq!(classify(9, ClassifyOptions::default()).unwrap_err(), Error::RankTooLarge(9));
    }

    #[test]
    fn tables_parse() {
        assert_eq!(expected_table(Table::Reduced).len(), 107);
        assert_eq!(expected_table(Table::Maximal).len(), 35);
        assert_eq!(expected_table(Table::Hodge).len(), 18);
    }
}
