//! Acceptance suite: one PASS/FAIL line per criterion, each with its time budget.

use std::time::{Duration, Instant};

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use zipcone::arith::{int_pow, q_apply, q_inverse, to_big, Int, Rat};
use zipcone::catalog::{self, PresetParams};
use zipcone::cones::{fm, Cone};
use zipcone::hasse;
use zipcone::par::Exec;
use zipcone::rootdata::build_root_datum;
use zipcone::weyl;
use zipcone::zipcones::{self, ZipContext};

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn e<T: std::fmt::Debug>(x: T) -> String {
    format!("{x:?}")
}

fn cap() -> usize {
    weyl::default_cap()
}

fn criterion_1() -> Outcome {
    for q in [2u64, 3, 5] {
        let rep = catalog::reproduce("U21-inert", &PresetParams::with_q(q), cap()).map_err(e)?;
        check(rep.passed(), format!("q={q}:\n{}", rep.to_text()))?;
    }
    Ok("q in {2,3,5}: all seven cones match in quotient coordinates".into())
}

fn criterion_2() -> Outcome {
    for n in 2..=5 {
        for q in [2u64, 3] {
            let rep = catalog::reproduce("SOodd", &PresetParams::with_q(q).n(n), cap()).map_err(e)?;
            check(rep.passed(), format!("n={n} q={q}:\n{}", rep.to_text()))?;
            let strict = rep.rows.iter().any(|r| r.name == if n == 2 { "hw_equals_pha" } else { "hw_strictly_in_pha" });
            check(strict, format!("n={n}: missing strictness row"))?;
        }
    }
    Ok("n in 2..5, q in {2,3}: pha, hw formulas, Hasse flag, equality at n=2 and strictness at n>=3".into())
}

fn criterion_3() -> Outcome {
    let conn = hasse::enumerate_triples(8, true, Exec::default()).map_err(e)?;
    let all = hasse::enumerate_triples(8, false, Exec::default()).map_err(e)?;
    let reduced = hasse::compare_reduced(&conn, 8);
    let maximal = hasse::compare_maximal(&all, 8);
    let hodge = hasse::compare_hodge(&all, 8);
    let permuted = hasse::check_permuted_components(&all);
    let mut lines = vec![
        format!("reduced tables: {} ({} rows)", verdict(reduced.is_match()), reduced.expected_rows),
        format!(
            "maximal table: {} ({} expected, {} computed, {} unexpected, {} missing)",
            verdict(maximal.is_match()),
            maximal.expected_rows,
            maximal.computed_rows,
            maximal.unexpected.len(),
            maximal.missing.len()
        ),
        format!("hodge allow-list: {} ({} rows)", verdict(hodge.is_match()), hodge.expected_rows),
        format!("permuted components need empty I: {}", verdict(permuted.is_empty())),
    ];
    for k in reduced.unexpected.iter().chain(&maximal.unexpected).chain(&hodge.unexpected) {
        lines.push(format!("  unexpected {k}"));
    }
    for k in reduced.missing.iter().chain(&maximal.missing).chain(&hodge.missing) {
        lines.push(format!("  missing {k}"));
    }
    let text = lines.join("\n    ");
    if reduced.is_match() && maximal.is_match() && hodge.is_match() && permuted.is_empty() {
        Ok(text)
    } else {
        Err(text)
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "match"
    } else {
        "MISMATCH"
    }
}

fn catalog_contexts() -> Result<Vec<(String, ZipContext)>, String> {
    catalog::catalog_contexts().map_err(e)
}

fn criterion_4() -> Outcome {
    let ctxs = catalog_contexts()?;
    check(ctxs.len() >= 10, "catalog has fewer than 10 contexts")?;
    let mut pointwise = 0;
    for (name, ctx) in &ctxs {
        let c = |w: &str| zipcones::cone_by_name(ctx, w, cap()).map_err(e);
        let (hw, lw, gs, neglevi, idom, pha) = (c("hw")?, c("lw")?, c("gs")?, c("neglevi")?, c("idominant")?, c("pha")?);
        check(hw.contains(&neglevi).map_err(e)?, format!("{name}: neglevi not in hw"))?;
        check(lw.contains(&gs).map_err(e)?, format!("{name}: gs not in lw"))?;
        check(idom.contains(&pha).map_err(e)?, format!("{name}: pha not in idominant"))?;
        if catalog::fixes_levi_pointwise(ctx) {
            pointwise += 1;
            check(hw.equal(&lw).map_err(e)?, format!("{name}: hw != lw"))?;
            check(hw.contains(&gs).map_err(e)?, format!("{name}: gs not in hw"))?;
        }
    }
    Ok(format!("{} contexts, {} with σ fixing I pointwise", ctxs.len(), pointwise))
}

fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x5eed)
}

/// Whether `h_Z⁻¹ λ` is dominant, by rational inversion, independent of the `K_α` sums.
fn preimage_dominant(ctx: &ZipContext, inv: &zipcone::arith::QMatrix, lam: &[i64]) -> bool {
    let v: Vec<Rat> = lam.iter().map(|&x| Rat::from_integer(Int::from(x))).collect();
    let mu = q_apply(inv, &v);
    let rd = ctx.rd();
    (0..rd.semisimple_rank()).all(|a| {
        let s = rd.simple_coroot(a).iter().zip(&mu).fold(Rat::zero(), |acc, (c, x)| acc + x * Rat::from_integer(Int::from(*c)));
        s >= Rat::zero()
    })
}

fn criterion_5() -> Outcome {
    let mut r = rng();
    let mut agree_pos = 0;
    for (name, ctx) in &catalog_contexts()? {
        let inv = q_inverse(&zipcones::hz_map(ctx).to_rational()).ok_or("h_Z is singular")?;
        for _ in 0..1000 {
            let lam: Vec<i64> = (0..ctx.dim()).map(|_| r.gen_range(-50..=50)).collect();
            let all_nonpos = (0..ctx.rd().semisimple_rank())
                .map(|a| zipcones::k_alpha(ctx, &lam, a).map(|k| k <= Int::zero()))
                .collect::<Result<Vec<_>, _>>()
                .map_err(e)?
                .into_iter()
                .all(|b| b);
            let dominant = preimage_dominant(ctx, &inv, &lam);
            check(all_nonpos == dominant, format!("{name}: disagreement at {lam:?}"))?;
            agree_pos += usize::from(dominant);
        }
    }
    Ok(format!("1000 weights per context agree ({agree_pos} with dominant preimage)"))
}

/// Random weight of a cone: nonnegative combination of rays plus lineality.
fn random_in_cone(c: &Cone, r: &mut ChaCha8Rng) -> Result<Vec<i64>, String> {
    let c = c.complete().map_err(e)?;
    let gens = c.generators().map_err(e)?;
    let rays = c.rays().map_err(e)?;
    let dim = c.ambient_dim();
    let mut v = vec![Int::zero(); dim];
    for g in &gens {
        let coef: i64 = if rays.contains(g) { r.gen_range(0..=20) } else { r.gen_range(-20..=20) };
        for (a, x) in v.iter_mut().zip(g) {
            *a += x * coef;
        }
    }
    v.iter().map(|x| i64::try_from(x).map_err(e)).collect()
}

fn criterion_6() -> Outcome {
    let mut r = rng();
    let mut used = 0;
    for (name, ctx) in &catalog_contexts()? {
        if !hasse::is_hasse_type(ctx) {
            continue;
        }
        used += 1;
        let idom = zipcones::i_dominant_cone(ctx).map_err(e)?;
        for _ in 0..1000 {
            let lam = random_in_cone(&idom, &mut r)?;
            check(idom.member_i64(&lam).map_err(e)?, "sampled weight outside the cone")?;
            for &a in ctx.levi() {
                let k = zipcones::k_alpha(ctx, &lam, a).map_err(e)?;
                check(k <= Int::zero(), format!("{name}: K_{a}({lam:?}) = {k} > 0"))?;
            }
        }
    }
    Ok(format!("{used} Hasse-type contexts, 1000 weights each"))
}

fn criterion_7() -> Outcome {
    let mut count = 0;
    for (name, ctx) in &catalog_contexts()? {
        let n = ctx.dim();
        // Oracle: solve (1 − q·σ*) δ = α^∨ directly.
        let d = ctx.frob().dual();
        let q = Rat::from_integer(Int::from(ctx.q()));
        let m: Vec<Vec<Rat>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let id = if i == j { Rat::one() } else { Rat::zero() };
                        id - &q * Rat::from_integer(Int::from(d.get(i, j)))
                    })
                    .collect()
            })
            .collect();
        let inv = q_inverse(&m);
        for a in 0..ctx.rd().semisimple_rank() {
            let delta = zipcones::delta_simple(ctx, a).map_err(e)?;
            let coroot: Vec<Rat> = ctx.rd().simple_coroot(a).iter().map(|&x| Rat::from_integer(Int::from(x))).collect();
            check(zipcones::lang_dual(ctx, &delta) == coroot, format!("{name}: identity fails for α{a}"))?;
            if let Some(inv) = &inv {
                check(q_apply(inv, &coroot) == delta, format!("{name}: oracle disagrees for α{a}"))?;
            }
            count += 1;
        }
    }
    Ok(format!("{count} simple roots"))
}

fn criterion_8() -> Outcome {
    let ctxs = catalog_contexts()?;
    for (name, ctx) in &ctxs {
        let moved = catalog::transported_gs(ctx).map_err(e)?;
        check(moved.equal(&zipcones::gs_cone(ctx).map_err(e)?).map_err(e)?, format!("{name}: transport differs"))?;
    }
    Ok(format!("{} contexts", ctxs.len()))
}

fn criterion_9() -> Outcome {
    let mut r = rng();
    for t in 0..200 {
        let dim = r.gen_range(1..=6);
        let m = r.gen_range(1..=8);
        let gens: Vec<Vec<i64>> = (0..m).map(|_| (0..dim).map(|_| r.gen_range(-4..=4)).collect()).collect();
        let big: Vec<Vec<Int>> = gens.iter().map(|g| to_big(g)).collect();
        let cone = Cone::from_generators(dim, big.clone()).map_err(e)?.complete().map_err(e)?;
        let (ineqs, eqs) = fm::v_to_h(dim, &big);
        let mut rows = ineqs;
        for q in eqs {
            rows.push(q.iter().map(|x| -x).collect());
            rows.push(q);
        }
        let by_fm = Cone::from_inequalities(dim, rows).map_err(e)?;
        check(cone.equal(&by_fm).map_err(e)?, format!("trial {t}: DD and FM disagree on {gens:?}"))?;
        let mut h = cone.facets().map_err(e)?;
        for q in cone.equations().map_err(e)? {
            h.push(q.iter().map(|x| -x).collect());
            h.push(q);
        }
        let back = Cone::from_inequalities(dim, h).map_err(e)?.complete().map_err(e)?;
        check(back.generators().map_err(e)? == cone.generators().map_err(e)?, format!("trial {t}: round trip changed the cone"))?;
        for ray in back.rays().map_err(e)? {
            check(fm::in_cone(&big, &ray), format!("trial {t}: ray outside by elimination"))?;
        }
    }
    Ok("200 random cones".into())
}

/// `Σ_{w ∈ ^{I_α}W_I} q^{ℓ(w)} <wλ, α^∨>` against the closed form, and the
/// highest weight covector against the Poincaré polynomial of `W_{I_α}` times it.
fn factorization(n: usize, q: u64) -> Result<(), String> {
    let ctx = catalog::preset("SOodd", &PresetParams::with_q(q).n(n)).map_err(e)?;
    let rd = ctx.rd();
    let coroot = rd.simple_coroot(0).to_vec();
    let levi = ctx.levi().to_vec();
    let centralizer: Vec<usize> = levi
        .iter()
        .copied()
        .filter(|&b| rd.simple_root(b).iter().zip(&coroot).map(|(x, y)| x * y).sum::<i64>() == 0)
        .collect();
    let reps = weyl::min_coset_reps(rd, &centralizer, &levi, cap()).map_err(e)?;
    check(reps.len() == 2 * (n - 1), format!("B{n}: {} coset representatives", reps.len()))?;
    let mut sum = vec![Int::zero(); n];
    for w in &reps {
        let c = w.matrix.transpose().apply(&coroot);
        for (s, x) in sum.iter_mut().zip(c) {
            *s += int_pow(q, w.length) * x;
        }
    }
    let mut closed = vec![(0..=2 * n - 3).fold(Int::zero(), |acc, k| acc + int_pow(q, k))];
    for i in 2..=n {
        closed.push(int_pow(q, 2 * n - 1 - i) - int_pow(q, i - 2));
    }
    check(sum == closed, format!("B{n} q={q}: coset sum {sum:?} != {closed:?}"))?;
    let poincare = weyl::enumerate_parabolic(rd, &centralizer, cap())
        .map_err(e)?
        .iter()
        .fold(Int::zero(), |acc, w| acc + int_pow(q, w.length));
    let hw = zipcones::hw_covectors(&ctx, cap()).map_err(e)?;
    let expected: Vec<Int> = closed.iter().map(|x| -(x * &poincare)).collect();
    check(hw.len() == 1 && hw[0].1 == expected, format!("B{n} q={q}: hw covector does not factor"))
}

fn criterion_10() -> Outcome {
    for (label, order) in [("A3", 24usize), ("B3", 48), ("D4", 192), ("B4", 384), ("G2", 12), ("F4", 1152)] {
        let rd = build_root_datum(label).map_err(e)?;
        let (size, ok) = catalog::lengths_agree(&rd, cap()).map_err(e)?;
        check(size == order, format!("|W({label})| = {size}, expected {order}"))?;
        check(ok, format!("{label}: word length differs from inversion count"))?;
    }
    for n in 2..=4 {
        for q in [2u64, 3, 5] {
            factorization(n, q)?;
        }
    }
    Ok("W(A3), W(B3), W(D4) plus B4, G2, F4; factorization on B2..B4 at q in {2,3,5}".into())
}

#[test]
fn acceptance_suite() {
    let criteria: [(usize, fn() -> Outcome, Duration); 10] = [
        (1, criterion_1, Duration::from_secs(1)),
        (2, criterion_2, Duration::from_secs(10)),
        (3, criterion_3, Duration::from_secs(300)),
        (4, criterion_4, Duration::from_secs(30)),
        (5, criterion_5, Duration::from_secs(10)),
        (6, criterion_6, Duration::from_secs(5)),
        (7, criterion_7, Duration::from_secs(60)),
        (8, criterion_8, Duration::from_secs(60)),
        (9, criterion_9, Duration::from_secs(60)),
        (10, criterion_10, Duration::from_secs(60)),
    ];
    let mut failed = Vec::new();
    for (id, run, budget) in criteria {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(d) if took <= budget => (true, d),
            Ok(d) => (false, format!("{d}; took {took:.2?}, budget {budget:?}")),
            Err(d) => (false, d),
        };
        println!("criterion {id:2}: {} [{took:.2?}] {detail}", if ok { "PASS" } else { "FAIL" });
        if !ok {
            failed.push(id);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
