use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use permstar::db::{parse_dbs, TransitiveDbEntry};
use permstar::format::{read_group, write_group, GroupDoc, LabelBlock};
use permstar::maximal::{build_expression, maximal_table_check, quotients_without_star};
use permstar::{lemmas, maximal, table};
use permstar_core::actions::{all_minimal_block_systems, minimal_block_system, BlockSystem};
use permstar_core::constructions::{
    affine_group, diagonal_action, external_lines_action, gammal1_sylow, pgl2_pdivisible_example, psl2_action,
    Psl2Variant,
};
use permstar_core::fixtures::fixture;
use permstar_core::star::has_star_p_with;
use permstar_core::sylow::sylow_subgroup;
use permstar_core::wreath::{wreath_imprimitive, wreath_product_action};
use permstar_core::{Config, PermGroup};

#[derive(Parser)]
#[command(name = "permstar", version, about = "Sylow orbit lengths and property (*)_p for permutation groups")]
struct Cli {
    /// Largest group order enumerated element by element.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    max_enum: u128,
    /// Seed for randomized steps.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest degree of an induced action.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    max_degree_cap: usize,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportKind {
    Human,
    Machine,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Imprimitive,
    Product,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print degree and order.
    Order { file: PathBuf },
    /// Decide (*)_p.
    Star {
        file: PathBuf,
        #[arg(long)]
        p: u128,
        /// Force the orbit-length test on every constituent.
        #[arg(long)]
        no_shortcuts: bool,
        #[arg(long, value_enum, default_value = "human")]
        report: ReportKind,
    },
    /// Compute a Sylow p-subgroup.
    Sylow {
        file: PathBuf,
        #[arg(long)]
        p: u128,
        /// Print the orbit lengths instead of generators.
        #[arg(long)]
        orbits: bool,
    },
    /// Minimal block systems, or the one through two points (1-based).
    Blocks {
        file: PathBuf,
        #[arg(long, value_delimiter = ',')]
        through: Option<Vec<usize>>,
    },
    /// Build a wreath product of two group files.
    Wreath {
        #[arg(long, value_enum)]
        mode: Mode,
        h: PathBuf,
        k: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a named construction.
    ///
    /// Names: psl2 Q [psl|pgl|pgammal|sl], external-lines Q [psl|pgammal],
    /// tuple-action Q, tuple-quotient Q, diagonal EXPR, affine P D,
    /// semilinear R D F P, fixture NAME, expr EXPR.
    Construct {
        name: String,
        params: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Count database groups with (*)_p per degree and compare with the published table.
    Table {
        #[arg(long, required = true)]
        db: Vec<PathBuf>,
        /// Inclusive range `A..B`.
        #[arg(long)]
        degrees: String,
        /// Primes to count; defaults to 2 and 3.
        #[arg(long)]
        p: Vec<u128>,
        #[arg(long)]
        no_shortcuts: bool,
    },
    /// Construct the listed maximal (*)_2 groups and check them.
    Maximal {
        #[arg(long)]
        db: Vec<PathBuf>,
        #[arg(long, default_value = "2..20")]
        degrees: String,
    },
    /// Run a built-in self-check suite.
    VerifyLemmas {
        /// One of ppd, morenum, semilinear, sporadic, families, wreath, maximal, all.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        db: Vec<PathBuf>,
    },
}

fn parse_range(s: &str) -> anyhow::Result<std::ops::RangeInclusive<usize>> {
    let (a, b) = s.split_once("..").ok_or_else(|| anyhow!("expected A..B, got {s:?}"))?;
    let a: usize = a.trim().parse().with_context(|| format!("bad range start in {s:?}"))?;
    let b: usize = b.trim().trim_start_matches('=').parse().with_context(|| format!("bad range end in {s:?}"))?;
    if a > b {
        bail!("empty range {s:?}");
    }
    Ok(a..=b)
}

fn variant(s: Option<&String>, default: Psl2Variant) -> anyhow::Result<Psl2Variant> {
    Ok(match s.map(String::as_str) {
        None => default,
        Some("psl") => Psl2Variant::Psl,
        Some("pgl") => Psl2Variant::Pgl,
        Some("pgammal") => Psl2Variant::PGammaL,
        Some("sl") => Psl2Variant::SlAsPsl,
        Some(v) => bail!("unknown variant {v:?}"),
    })
}

fn num<T: std::str::FromStr>(params: &[String], i: usize, what: &str) -> anyhow::Result<T> {
    let s = params.get(i).ok_or_else(|| anyhow!("missing parameter {what}"))?;
    s.parse().map_err(|_| anyhow!("bad {what} {s:?}"))
}

fn load_db(paths: &[PathBuf]) -> anyhow::Result<Vec<TransitiveDbEntry>> {
    if paths.is_empty() {
        return Ok(Vec::new());
    }
    Ok(parse_dbs(paths)?)
}

fn emit(out: &mut String, doc: &GroupDoc, path: Option<&Path>) -> anyhow::Result<()> {
    match path {
        Some(p) => write_group(p, doc)?,
        None => out.push_str(&doc.to_json()),
    }
    Ok(())
}

fn blocks_line(b: &BlockSystem) -> String {
    let blocks: Vec<String> = b
        .blocks()
        .iter()
        .map(|blk| format!("{{{}}}", blk.iter().map(|x| (x + 1).to_string()).collect::<Vec<_>>().join(",")))
        .collect();
    format!("size={} count={} blocks={}", b.block_size(), b.block_count(), blocks.join(""))
}

fn construct(name: &str, params: &[String], cfg: &Config) -> anyhow::Result<GroupDoc> {
    let expr_param = || -> anyhow::Result<String> {
        if params.is_empty() {
            bail!("missing expression");
        }
        Ok(params.join(" "))
    };
    let mut labels = None;
    let (g, label): (PermGroup, String) = match name {
        "psl2" => {
            let q = num(params, 0, "q")?;
            let v = variant(params.get(1), Psl2Variant::Psl)?;
            (psl2_action(q, v, cfg)?, format!("{}(2,{q})", v.name()))
        }
        "external-lines" => {
            let q = num(params, 0, "q")?;
            let v = variant(params.get(1), Psl2Variant::Psl)?;
            (external_lines_action(q, v, cfg)?, format!("{}(2,{q}) on external lines", v.name()))
        }
        "tuple-action" | "tuple-quotient" => {
            let q = num(params, 0, "q")?;
            let ex = pgl2_pdivisible_example(q, cfg)?;
            let a = if name == "tuple-action" { ex.y } else { ex.quotient };
            labels = Some(LabelBlock::from_labels(&a.labels));
            (a.target, format!("PGL(2,{q}) {name}"))
        }
        "diagonal" => {
            let e = expr_param()?;
            let t = build_expression(&e, None, cfg)?;
            (diagonal_action(&t, cfg)?, format!("diagonal action of {e}"))
        }
        "affine" => {
            let (p, d): (u32, u32) = (num(params, 0, "p")?, num(params, 1, "d")?);
            (affine_group(p, d, cfg)?, format!("{p}:{d}"))
        }
        "semilinear" => {
            let (r, d, f, p) = (num(params, 0, "r")?, num(params, 1, "d")?, num(params, 2, "f")?, num(params, 3, "p")?);
            let s = gammal1_sylow(r, d, f, p, cfg)?;
            (s.x, format!("Sylow {p}-subgroup of GammaL(1,{r}^{})", d * f))
        }
        "fixture" => {
            let n = params.first().ok_or_else(|| anyhow!("missing fixture name"))?;
            (fixture(n)?, n.clone())
        }
        "expr" => {
            let e = expr_param()?;
            (build_expression(&e, None, cfg)?, e)
        }
        _ => return Err(permstar::CliError::UnknownConstruction(name.into()).into()),
    };
    let mut doc = GroupDoc::from_group(&g, Some(&label));
    doc.labels = labels;
    if let Some(s) = g.structure() {
        doc.encoding = Some(s.encoding().into());
    }
    Ok(doc)
}

fn run(cli: Cli, out: &mut String) -> anyhow::Result<bool> {
    let cfg =
        Config { max_enum: cli.max_enum, seed: cli.seed, max_action_degree: cli.max_degree_cap, ..Config::default() };
    match cli.cmd {
        Cmd::Order { file } => {
            let (g, _) = read_group(&file)?;
            out.push_str(&format!("degree={} order={}\n", g.degree(), g.order()?));
        }
        Cmd::Star { file, p, no_shortcuts, report } => {
            let (g, _) = read_group(&file)?;
            let r = has_star_p_with(&g, p, !no_shortcuts, &cfg)?;
            match report {
                ReportKind::Machine => out.push_str(&r.machine_line()),
                ReportKind::Human => out.push_str(&r.human()),
            }
            if !out.ends_with('\n') {
                out.push('\n');
            }
        }
        Cmd::Sylow { file, p, orbits } => {
            let (g, _) = read_group(&file)?;
            let s = sylow_subgroup(&g, p, &cfg)?;
            out.push_str(&format!("p={p} order={} method={}\n", s.order, s.method.name()));
            if orbits {
                let l: Vec<String> = s.orbit_lengths().iter().map(usize::to_string).collect();
                out.push_str(&format!("orbits=[{}]\n", l.join(",")));
            } else {
                for x in s.subgroup.generators() {
                    out.push_str(&x.to_cycle_string());
                    out.push('\n');
                }
            }
        }
        Cmd::Blocks { file, through } => {
            let (g, _) = read_group(&file)?;
            match through {
                Some(pts) => {
                    if pts.len() != 2 || pts.iter().any(|&x| x == 0 || x > g.degree()) {
                        bail!("--through needs two points in 1..={}", g.degree());
                    }
                    let b = minimal_block_system(&g, pts[0] - 1, pts[1] - 1)?;
                    out.push_str(&blocks_line(&b));
                    out.push('\n');
                }
                None => {
                    let systems = all_minimal_block_systems(&g)?;
                    if systems.is_empty() {
                        out.push_str("primitive\n");
                    }
                    for b in systems {
                        out.push_str(&blocks_line(&b));
                        out.push('\n');
                    }
                }
            }
        }
        Cmd::Wreath { mode, h, k, out: path } => {
            let (hg, hd) = read_group(&h)?;
            let (kg, kd) = read_group(&k)?;
            let g = match mode {
                Mode::Imprimitive => wreath_imprimitive(&hg, &kg)?,
                Mode::Product => wreath_product_action(&hg, &kg, &cfg)?,
            };
            let name = |d: &GroupDoc, p: &Path| d.name.clone().unwrap_or_else(|| p.display().to_string());
            let mut doc = GroupDoc::from_group(&g, Some(&format!("{} Wr {}", name(&hd, &h), name(&kd, &k))));
            doc.encoding = g.structure().map(|s| s.encoding().to_string());
            emit(out, &doc, path.as_deref())?;
        }
        Cmd::Construct { name, params, out: path } => {
            let doc = construct(&name, &params, &cfg)?;
            emit(out, &doc, path.as_deref())?;
        }
        Cmd::Table { db, degrees, p, no_shortcuts } => {
            let range = parse_range(&degrees)?;
            let primes = if p.is_empty() { vec![2, 3] } else { p };
            let entries = load_db(&db)?;
            let rows = table::table_counts(&entries, range, &primes, !no_shortcuts, &cfg)?;
            let (text, ok) = table::render(&rows, &primes);
            out.push_str(&text);
            return Ok(ok);
        }
        Cmd::Maximal { db, degrees } => {
            let entries = load_db(&db)?;
            let resolve =
                |n: usize, i: usize| entries.iter().find(|e| (e.degree, e.index) == (n, i)).map(|e| e.group.clone());
            let res: Option<maximal::Resolver<'_>> = if entries.is_empty() { None } else { Some(&resolve) };
            let rows = maximal_table_check(parse_range(&degrees)?, res, &cfg);
            let (text, mut ok) = maximal::render(&rows);
            out.push_str(&text);
            if let Some(g) = res.and_then(|r| r(20, 89)) {
                let bad = quotients_without_star(&g, 2, &cfg)?;
                out.push_str(&format!("20_89 block quotients without (*)_2 (size,count): {bad:?}\n"));
                ok &= !bad.is_empty();
            }
            return Ok(ok);
        }
        Cmd::VerifyLemmas { suite, db } => {
            let entries = load_db(&db)?;
            let resolve =
                |n: usize, i: usize| entries.iter().find(|e| (e.degree, e.index) == (n, i)).map(|e| e.group.clone());
            let res: Option<maximal::Resolver<'_>> = if entries.is_empty() { None } else { Some(&resolve) };
            let results = lemmas::run_suite(&suite, res, &cfg).ok_or_else(|| {
                anyhow!("unknown suite {suite:?}; expected one of {} or all", lemmas::SUITES.join(", "))
            })??;
            let mut ok = true;
            for (name, checks) in results {
                for c in checks {
                    ok &= c.passed;
                    let tag = if c.passed { "PASS" } else { "FAIL" };
                    out.push_str(&format!("{tag} [{name}] {}: {}\n", c.name, c.detail));
                }
            }
            return Ok(ok);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let result = run(cli, &mut out);
    // nothing is printed unless the command completed
    match result {
        Ok(ok) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::FAILURE;
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
