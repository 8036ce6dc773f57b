use std::fs;
use std::path::PathBuf;
use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use zipcone::arith::Int;
use zipcone::catalog::{self, PresetParams};
use zipcone::cones::Cone;
use zipcone::hasse::{self, ClassifyOptions, Table};
use zipcone::par::Exec;
use zipcone::weyl;
use zipcone::zipcones::{self, ZipContext, ZipContextJson};
use zipcone::Error;

#[derive(Parser)]
#[command(name = "zipcone", version, about = "Weight cones of zip data and Hasse-type classification")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct ContextArgs {
    /// Context file in the zipcontext.v1 format.
    #[arg(long, conflicts_with = "preset")]
    context: Option<PathBuf>,
    /// Preset name instead of a context file.
    #[arg(long)]
    preset: Option<String>,
    #[arg(long, default_value_t = 2)]
    q: u64,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    base: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Root datum, Frobenius orbits, Levi data and the δ_α table.
    Describe {
        #[command(flatten)]
        ctx: ContextArgs,
    },
    /// Emit one cone in the cone.v1 format.
    Cone {
        #[command(flatten)]
        ctx: ContextArgs,
        #[arg(long)]
        which: String,
    },
    /// Membership of a weight in a cone.
    Member {
        #[command(flatten)]
        ctx: ContextArgs,
        #[arg(long)]
        which: String,
        /// Comma-separated integers in the character basis.
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Inclusion of one cone in another.
    Include {
        #[command(flatten)]
        ctx: ContextArgs,
        #[arg(long)]
        outer: String,
        #[arg(long)]
        inner: String,
    },
    /// Hasse-type test with the individual criteria.
    Hasse {
        #[command(flatten)]
        ctx: ContextArgs,
    },
    /// Enumerate Dynkin triples satisfying the opposition condition.
    Classify {
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
        #[arg(long)]
        maximal: bool,
        #[arg(long)]
        hodge: bool,
        #[arg(long)]
        connected: bool,
        /// Keep only triples whose isolated vertices of I are σ-fixed.
        #[arg(long)]
        fixed_isolated: bool,
        /// Keep only triples without isolated vertices in I.
        #[arg(long)]
        no_isolated: bool,
        /// Compare with the bundled expected table and exit 2 on mismatch.
        #[arg(long)]
        compare_expected: bool,
    },
    /// Reproduce a worked example.
    Reproduce {
        #[arg(long)]
        example: String,
        #[arg(long, default_value_t = 2)]
        q: u64,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        base: Option<String>,
    },
}

enum Failure {
    Lib(Error),
    User(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Out = Result<(Value, String, bool), Failure>;

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::InvalidCartan(_) => "InvalidCartan",
        Error::DimensionMismatch { .. } => "DimensionMismatch",
        Error::NonFiniteSystem(_) => "NonFiniteSystem",
        Error::NotAnAutomorphism(_) => "NotAnAutomorphism",
        Error::DoesNotPreserveBase => "DoesNotPreserveBase",
        Error::UnknownLabel(_) => "UnknownLabel",
        Error::IndexOutOfRange { .. } => "IndexOutOfRange",
        Error::CapExceeded { .. } => "CapExceeded",
        Error::DimensionTooLarge(_) => "DimensionTooLarge",
        Error::SingularMap => "SingularMap",
        Error::InvalidR(_) => "InvalidR",
        Error::RankTooLarge(_) => "RankTooLarge",
        Error::UnknownPreset(_) => "UnknownPreset",
        Error::BadParams(_) => "BadParams",
        Error::Parse(_) => "Parse",
        Error::Internal(_) => "Internal",
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::CapExceeded { .. } => 3,
        Error::Internal(_) => 2,
        _ => 1,
    }
}

fn load_context(a: &ContextArgs) -> Result<ZipContext, Failure> {
    match (&a.context, &a.preset) {
        (Some(path), _) => {
            let text = fs::read_to_string(path).map_err(|e| Failure::User(format!("cannot read {}: {e}", path.display())))?;
            let j: ZipContextJson = serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
            Ok(ZipContext::from_json(&j)?)
        }
        (None, Some(name)) => {
            let p = PresetParams { q: a.q, n: a.n, m: a.m, r: a.r, base: a.base.clone() };
            Ok(catalog::preset(name, &p)?)
        }
        (None, None) => Err(Failure::User("one of --context or --preset is required".into())),
    }
}

fn check_cone_name(name: &str) -> Result<(), Failure> {
    if zipcones::CONE_NAMES.contains(&name) {
        Ok(())
    } else {
        Err(Failure::User(format!("unknown cone `{name}`, expected one of {}", zipcones::CONE_NAMES.join("|"))))
    }
}

fn parse_lambda(s: &str) -> Result<Vec<i64>, Failure> {
    s.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| Failure::User(format!("bad integer `{t}` in --lambda"))))
        .collect()
}

fn strs(v: &[Int]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

fn describe(ctx: &ZipContext) -> Out {
    let rd = ctx.rd();
    let s = rd.semisimple_rank();
    let perm = ctx.frob().perm();
    let mut seen = vec![false; s];
    let mut orbits = Vec::new();
    for i in 0..s {
        if seen[i] {
            continue;
        }
        let mut o = Vec::new();
        let mut c = i;
        while !seen[c] {
            seen[c] = true;
            o.push(c);
            c = perm[c];
        }
        orbits.push(o);
    }
    let mut deltas = Vec::new();
    let mut text = format!(
        "root datum {} rank {} semisimple rank {}\nq = {}, sigma permutes simple roots as {:?}\nsigma orbits {:?}\nI = {:?}\nI0 = {:?}\nDelta^P = {:?}\n",
        rd.label(),
        rd.rank(),
        s,
        ctx.q(),
        perm,
        orbits,
        ctx.levi(),
        ctx.levi0(),
        ctx.delta_p()
    );
    text.push_str("alpha  root  delta_alpha  r_alpha  m_alpha\n");
    for a in 0..s {
        let d = zipcones::delta_simple(ctx, a)?;
        let ds: Vec<String> = d.iter().map(|x| x.to_string()).collect();
        text.push_str(&format!(
            "{a}  {:?}  [{}]  {}  {}\n",
            rd.simple_root(a),
            ds.join(", "),
            ctx.orbit_len(a),
            ctx.m_alpha(a).map_or("-".to_string(), |m| m.to_string())
        ));
        deltas.push(json!({
            "alpha": a,
            "root": rd.simple_root(a),
            "delta": ds,
            "r_alpha": ctx.orbit_len(a),
            "m_alpha": ctx.m_alpha(a),
        }));
    }
    let v = json!({
        "schema": "describe.v1",
        "context": serde_json::to_value(ctx.to_json()).map_err(|e| Error::Internal(e.to_string()))?,
        "sigma_orbits": orbits,
        "levi": ctx.levi(),
        "levi0": ctx.levi0(),
        "delta_p": ctx.delta_p(),
        "delta_p0": ctx.delta_p0(),
        "simple_roots": deltas,
    });
    Ok((v, text, true))
}

fn cone_text(c: &Cone) -> Result<String, Failure> {
    let mut t = String::new();
    for l in catalog::describe_cone(c)? {
        t.push_str(&l);
        t.push('\n');
    }
    t.push_str("rays:\n");
    for r in c.rays()? {
        t.push_str(&format!("  [{}]\n", strs(&r).join(", ")));
    }
    Ok(t)
}

fn run(cli: &Cli) -> Out {
    let cap = weyl::default_cap();
    match &cli.command {
        Command::Describe { ctx } => describe(&load_context(ctx)?),
        Command::Cone { ctx, which } => {
            check_cone_name(which)?;
            let ctx = load_context(ctx)?;
            let c = zipcones::cone_by_name(&ctx, which, cap)?;
            Ok((c.to_json()?, cone_text(&c)?, true))
        }
        Command::Member { ctx, which, lambda } => {
            check_cone_name(which)?;
            let lam = parse_lambda(lambda)?;
            let ctx = load_context(ctx)?;
            if lam.len() != ctx.dim() {
                return Err(Error::DimensionMismatch { expected: ctx.dim(), found: lam.len() }.into());
            }
            let c = zipcones::cone_by_name(&ctx, which, cap)?;
            let big: Vec<Int> = lam.iter().map(|&x| Int::from(x)).collect();
            let member = c.member(&big)?;
            let value = |f: &Vec<Int>| f.iter().zip(&big).map(|(a, b)| a * b).sum::<Int>();
            let zero = Int::from(0);
            let mut binding = Vec::new();
            let mut violated = Vec::new();
            for f in c.facets()? {
                let v = value(&f);
                if v == zero {
                    binding.push(f);
                } else if v < zero {
                    violated.push(f);
                }
            }
            for e in c.equations()? {
                if value(&e) != zero {
                    violated.push(e);
                }
            }
            let show = |v: &[Vec<Int>], rel: &str| v.iter().map(|f| catalog::format_covector(f, rel)).collect::<Vec<_>>();
            let mut text = format!("{}\n", if member { "yes" } else { "no" });
            for l in show(&binding, ">=") {
                text.push_str(&format!("binding: {l}\n"));
            }
            for l in show(&violated, ">=") {
                text.push_str(&format!("violated: {l}\n"));
            }
            let v = json!({
                "member": member,
                "binding": binding.iter().map(|f| strs(f)).collect::<Vec<_>>(),
                "violated": violated.iter().map(|f| strs(f)).collect::<Vec<_>>(),
            });
            Ok((v, text, true))
        }
        Command::Include { ctx, outer, inner } => {
            check_cone_name(outer)?;
            check_cone_name(inner)?;
            let ctx = load_context(ctx)?;
            let o = zipcones::cone_by_name(&ctx, outer, cap)?;
            let i = zipcones::cone_by_name(&ctx, inner, cap)?;
            let witness = o.find_violation(&i)?;
            let mut text = format!("{}\n", if witness.is_none() { "yes" } else { "no" });
            let v = match &witness {
                None => json!({"included": true}),
                Some((ray, ineq)) => {
                    text.push_str(&format!("witness ray: [{}]\n", strs(ray).join(", ")));
                    text.push_str(&format!("violates: {}\n", catalog::format_covector(ineq, ">=")));
                    json!({"included": false, "witness_ray": strs(ray), "violated": strs(ineq)})
                }
            };
            Ok((v, text, true))
        }
        Command::Hasse { ctx } => {
            let ctx = load_context(ctx)?;
            let r = hasse::hasse_report(&ctx)?;
            let text = format!(
                "{}\nlevi_sigma_stable: {}\nsigma_is_opposition: {}\ngs_in_pha: {}\n",
                r.hasse_type, r.levi_sigma_stable, r.sigma_is_opposition, r.gs_in_pha
            );
            let v = serde_json::to_value(&r).map_err(|e| Error::Internal(e.to_string()))?;
            Ok((v, text, true))
        }
        Command::Classify { max_rank, maximal, hodge, connected, fixed_isolated, no_isolated, compare_expected } => {
            let opts = ClassifyOptions {
                fixed_isolated_only: *fixed_isolated,
                no_isolated: *no_isolated,
                maximal_only: *maximal,
                connected_only: *connected,
                hodge_only: *hodge,
            };
            let list = hasse::classify(*max_rank, opts)?;
            let mut text = String::new();
            for c in &list {
                text.push_str(&format!(
                    "{}\tsigma={}\tI={}\tmaximal={}\thodge={}\n",
                    c.diagram_type, c.sigma_desc, c.i_desc, c.maximal, c.hodge
                ));
            }
            let mut v = json!({
                "schema": "classification.v1",
                "triples": list.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
            });
            let mut ok = true;
            if *compare_expected {
                let (table, cmp) = if *hodge || *maximal {
                    let all = hasse::enumerate_triples(*max_rank, false, Exec::default())?;
                    if *hodge {
                        (Table::Hodge, hasse::compare_hodge(&all, *max_rank))
                    } else {
                        (Table::Maximal, hasse::compare_maximal(&all, *max_rank))
                    }
                } else {
                    let all = hasse::enumerate_triples(*max_rank, true, Exec::default())?;
                    (Table::Reduced, hasse::compare_reduced(&all, *max_rank))
                };
                ok = cmp.is_match();
                text.push_str(&format!(
                    "comparison with {:?} table: {} ({} expected rows, {} computed)\n",
                    table,
                    if ok { "match" } else { "MISMATCH" },
                    cmp.expected_rows,
                    cmp.computed_rows
                ));
                for k in &cmp.unexpected {
                    text.push_str(&format!("  unexpected: {k}\n"));
                }
                for k in &cmp.missing {
                    text.push_str(&format!("  missing: {k}\n"));
                }
                v["comparison"] = cmp.to_json();
            }
            Ok((v, text, ok))
        }
        Command::Reproduce { example, q, n, r, base } => {
            let p = PresetParams { q: *q, n: *n, m: None, r: *r, base: base.clone() };
            let rep = catalog::reproduce(example, &p, cap)?;
            Ok((rep.to_json()?, rep.to_text(), rep.passed()))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json_out = cli.format == Format::Json;
    let emit_error = |kind: &str, msg: &str| {
        if json_out {
            eprintln!("{}", json!({"error": {"kind": kind, "message": msg}}));
        } else {
            eprintln!("error: {msg}");
        }
    };
    match run(&cli) {
        Ok((v, text, ok)) => {
            let body = if json_out { serde_json::to_string_pretty(&v).expect("json") + "\n" } else { text };
            // A closed pipe (e.g. `| head`) is not an error.
            let _ = std::io::stdout().lock().write_all(body.as_bytes());
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
        Err(Failure::Lib(e)) => {
            emit_error(error_kind(&e), &e.to_string());
            ExitCode::from(exit_code(&e))
        }
        Err(Failure::User(msg)) => {
            emit_error("UserError", &msg);
            ExitCode::from(1)
        }
    }
}
