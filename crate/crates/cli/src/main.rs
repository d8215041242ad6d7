//! `permstat`: evaluate, tabulate and audit permutation statistics.

use std::io::{self, BufWriter, Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use permstat::bench::bench_decode;
use permstat::fisher_yates::{decode_pair, Sampler};
use permstat::verify::{self, Status, TableId, VerificationReport};
use permstat::{
    group, registry, Engine, Enumerator, Error, GroupElement, Kind, Permutation, VincularPattern,
};

/// Mahonian statistics treated as the well-known comparison set.
const KNOWN_MAHONIAN: [&str; 6] = ["inv", "maj", "den", "mak_val", "mad_val", "hag"];

#[derive(Parser)]
#[command(
    name = "permstat",
    version,
    about = "Fisher-Yates permutation statistics and distribution audits"
)]
struct Cli {
    /// Emit canonical JSON instead of TSV.
    #[arg(long, global = true)]
    json: bool,

    /// Worker threads for exhaustive enumeration.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate statistics on one permutation.
    Eval {
        perm: String,
        /// Comma-separated statistic names, or `*` for the whole registry.
        #[arg(long, default_value = "*")]
        stats: String,
    },
    /// Fisher-Yates coordinates of a permutation and of its inverse (`-` reads stdin).
    Decode { perm: String },
    /// Recompute an embedded reference table and diff it.
    Verify {
        #[arg(value_parser = ["table1", "table2", "joint5", "claims", "all"])]
        table: String,
    },
    /// Distribution of a statistic over S_n.
    Dist {
        #[arg(long)]
        stat: String,
        #[arg(long)]
        n: usize,
    },
    /// Joint distribution of an (Eulerian, Mahonian) pair over S_n.
    Joint {
        /// `eulerian:mahonian`, e.g. `des:stat`.
        #[arg(long)]
        pair: String,
        #[arg(long)]
        n: usize,
    },
    /// Certify a distributional property for every n up to --max-n.
    Check(CheckArgs),
    /// Search for (S, g) with S(p^g) = target(p) on all of S_2..S_max-n.
    SearchEquiv {
        #[arg(long)]
        target: String,
        /// Candidate statistics (defaults to inv,maj,den,mak_val,mad_val,hag).
        #[arg(long)]
        stats: Option<String>,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
    },
    /// Group statistics by their joint distribution with an Eulerian statistic.
    Classes {
        /// Statistics to classify (defaults to every Mahonian registry entry).
        #[arg(long)]
        stats: Option<String>,
        #[arg(long = "ref", default_value = "des")]
        reference: String,
        #[arg(long)]
        n: usize,
    },
    /// Images of a permutation under inverse/reverse/complement.
    Orbit { perm: String },
    /// Count vincular pattern occurrences, e.g. `pattern 654321 cb-a`.
    Pattern {
        perm: String,
        #[arg(required = true)]
        patterns: Vec<String>,
    },
    /// Seeded uniform random permutations.
    Sample {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// `id` prints the permutation itself; a statistic name prints its value.
        #[arg(long, default_value = "id")]
        emit: String,
    },
    /// Time the linear-time decoder.
    Bench {
        #[arg(value_enum)]
        op: BenchOp,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        runs: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum BenchOp {
    Decode,
}

#[derive(Clone, Copy, ValueEnum)]
enum Property {
    Mahonian,
    Eulerian,
    EulerMahonian,
}

#[derive(Args)]
struct CheckArgs {
    #[arg(value_enum)]
    property: Property,
    #[arg(long)]
    stat: Option<String>,
    #[arg(long)]
    pair: Option<String>,
    #[arg(long = "ref", default_value = "des:maj")]
    reference: String,
    #[arg(long, default_value_t = 6)]
    max_n: usize,
}

/// Failures that end the process with a nonzero status.
enum Failure {
    Usage(String),
    Check,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CmdResult = Result<(), Failure>;

struct Ctx {
    json: bool,
    engine: Engine,
    out: BufWriter<io::StdoutLock<'static>>,
}

impl Ctx {
    fn emit_json(&mut self, value: &Value) -> io::Result<()> {
        // serde_json's default map is sorted, which fixes key order
        writeln!(
            self.out,
            "{}",
            serde_json::to_string(value).expect("serializable")
        )
    }
}

fn split_names(list: &str) -> Vec<String> {
    list.split(',')
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect()
}

fn parse_pair(text: &str) -> Result<(String, String), Failure> {
    match text.split_once(':') {
        Some((e, m)) if !e.is_empty() && !m.is_empty() => Ok((e.to_string(), m.to_string())),
        _ => Err(Failure::Usage(format!("expected NAME:NAME, got {text:?}"))),
    }
}

fn read_perm(text: &str) -> Result<Permutation, Failure> {
    if text == "-" {
        let mut buf = String::new();
        io::stdin().read_to_string(&mut buf)?;
        return Ok(Permutation::parse(buf.trim())?);
    }
    Ok(Permutation::parse(text)?)
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn cmd_eval(ctx: &mut Ctx, perm: &str, stats: &str) -> CmdResult {
    let p = read_perm(perm)?;
    let names: Vec<String> = if stats.trim() == "*" {
        registry().names().map(String::from).collect()
    } else {
        split_names(stats)
    };
    let mut values = Vec::with_capacity(names.len());
    for name in &names {
        values.push(registry().eval(name, &p)?);
    }
    if ctx.json {
        let stats: serde_json::Map<String, Value> = names
            .iter()
            .zip(&values)
            .map(|(k, v)| (k.clone(), json!(v)))
            .collect();
        ctx.emit_json(&json!({ "perm": p.to_string(), "stats": stats }))?;
    } else {
        for (name, value) in names.iter().zip(values) {
            writeln!(ctx.out, "{name}\t{value}")?;
        }
    }
    Ok(())
}

fn cmd_decode(ctx: &mut Ctx, perm: &str) -> CmdResult {
    let p = read_perm(perm)?;
    let (j, j_inv) = decode_pair(&p);
    let (d, d_inv) = (j.distances(), j_inv.distances());
    let ska = permstat::fisher_yates::ska_of(&d);
    if ctx.json {
        ctx.emit_json(&json!({
            "perm": p.to_string(),
            "j": j.as_slice(),
            "d": d.as_slice(),
            "stat": d.total(),
            "ska": ska,
            "inverse": {
                "perm": p.inverse().to_string(),
                "j": j_inv.as_slice(),
                "d": d_inv.as_slice(),
                "stat": d_inv.total(),
            },
        }))?;
    } else {
        let out = &mut ctx.out;
        writeln!(out, "perm\t{p}")?;
        writeln!(out, "j\t{}", join(j.as_slice()))?;
        writeln!(out, "d\t{}", join(d.as_slice()))?;
        writeln!(out, "stat\t{}", d.total())?;
        writeln!(out, "ska\t{ska}")?;
        writeln!(out, "inverse\t{}", p.inverse())?;
        writeln!(out, "j_inv\t{}", join(j_inv.as_slice()))?;
        writeln!(out, "d_inv\t{}", join(d_inv.as_slice()))?;
        writeln!(out, "stati\t{}", d_inv.total())?;
    }
    Ok(())
}

fn print_report(ctx: &mut Ctx, report: &VerificationReport) -> io::Result<()> {
    if ctx.json {
        let value = serde_json::to_value(report).expect("serializable");
        return ctx.emit_json(&value);
    }
    let out = &mut ctx.out;
    writeln!(out, "table\t{}", report.table)?;
    writeln!(out, "status\t{}", report.status)?;
    writeln!(out, "checked\t{}", report.checked)?;
    writeln!(out, "diffs\t{}", report.diffs.len())?;
    if !report.diffs.is_empty() {
        writeln!(out, "row\tcolumn\tvariant\texpected\tcomputed")?;
        for d in &report.diffs {
            writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}",
                d.row, d.column, d.variant, d.expected, d.computed
            )?;
        }
    }
    Ok(())
}

fn cmd_verify(ctx: &mut Ctx, table: &str) -> CmdResult {
    let tables: Vec<TableId> = if table == "all" {
        TableId::ALL.to_vec()
    } else {
        vec![table.parse()?]
    };
    let mut ok = true;
    for t in tables {
        let report = verify::verify(t, &ctx.engine)?;
        ok &= report.status != Status::Failure;
        print_report(ctx, &report)?;
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn cmd_dist(ctx: &mut Ctx, stat: &str, n: usize) -> CmdResult {
    let d = ctx.engine.distribution(stat, n)?;
    if ctx.json {
        let mut v = json!({ "n": d.n, "stat": stat, "coeffs": d.coeffs });
        if d.offset != 0 {
            v["offset"] = json!(d.offset);
        }
        ctx.emit_json(&v)?;
    } else {
        writeln!(ctx.out, "value\tcount")?;
        for (k, c) in d.coeffs.iter().enumerate() {
            writeln!(ctx.out, "{}\t{c}", d.offset + k as i64)?;
        }
    }
    Ok(())
}

fn cmd_joint(ctx: &mut Ctx, pair: &str, n: usize) -> CmdResult {
    let (e, m) = parse_pair(pair)?;
    let j = ctx.engine.joint(&e, &m, n)?;
    if ctx.json {
        let mut v = json!({ "n": n, "eulerian": e, "mahonian": m, "rows": j.rows });
        if j.row_offset != 0 || j.col_offset != 0 {
            v["row_offset"] = json!(j.row_offset);
            v["col_offset"] = json!(j.col_offset);
        }
        ctx.emit_json(&v)?;
    } else {
        for row in &j.rows {
            writeln!(
                ctx.out,
                "{}",
                row.iter()
                    .map(u64::to_string)
                    .collect::<Vec<_>>()
                    .join("\t")
            )?;
        }
    }
    Ok(())
}

fn cmd_check(ctx: &mut Ctx, args: &CheckArgs) -> CmdResult {
    let mut all_ok = true;
    let mut lines = Vec::new();
    let (label, results): (String, Vec<(usize, bool)>) = match args.property {
        Property::Mahonian | Property::Eulerian => {
            let stat = args
                .stat
                .as_deref()
                .ok_or_else(|| Failure::Usage("--stat is required".into()))?;
            let mahonian = matches!(args.property, Property::Mahonian);
            let mut res = Vec::new();
            for n in 1..=args.max_n {
                let ok = if mahonian {
                    ctx.engine.is_mahonian(stat, n)?
                } else {
                    ctx.engine.is_eulerian(stat, n)?
                };
                res.push((n, ok));
            }
            let kind = if mahonian { "mahonian" } else { "eulerian" };
            (format!("{kind} {stat}"), res)
        }
        Property::EulerMahonian => {
            let pair = args
                .pair
                .as_deref()
                .ok_or_else(|| Failure::Usage("--pair is required".into()))?;
            let (e, m) = parse_pair(pair)?;
            let (re, rm) = parse_pair(&args.reference)?;
            let mut res = Vec::new();
            for n in 1..=args.max_n {
                res.push((n, ctx.engine.equidistributed((&e, &m), (&re, &rm), n)?));
            }
            (format!("euler-mahonian {e}:{m} ~ {re}:{rm}"), res)
        }
    };
    for &(n, ok) in &results {
        all_ok &= ok;
        lines.push(json!({ "n": n, "pass": ok }));
    }
    let verdict = if all_ok { "PASS" } else { "FAIL" };
    if ctx.json {
        ctx.emit_json(&json!({ "check": label, "pass": all_ok, "results": lines }))?;
    } else {
        for (n, ok) in &results {
            writeln!(ctx.out, "n={n}\t{}", if *ok { "pass" } else { "fail" })?;
        }
        writeln!(ctx.out, "{verdict}\t{label}\tmax-n={}", args.max_n)?;
    }
    if all_ok {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn cmd_search(ctx: &mut Ctx, target: &str, stats: Option<&str>, max_n: usize) -> CmdResult {
    let cands: Vec<String> = match stats {
        Some(list) => split_names(list),
        None => KNOWN_MAHONIAN.iter().map(|s| s.to_string()).collect(),
    };
    let refs: Vec<&str> = cands.iter().map(String::as_str).collect();
    let found = ctx.engine.equiv_search(target, &refs, max_n)?;
    if ctx.json {
        ctx.emit_json(&json!({
            "target": target,
            "candidates": cands,
            "max_n": max_n,
            "found": serde_json::to_value(&found).expect("serializable"),
        }))?;
    } else if found.is_empty() {
        writeln!(
            ctx.out,
            "no equivalent found\t{target}\tcandidates={}\tmax-n={max_n}",
            cands.join(",")
        )?;
    } else {
        writeln!(ctx.out, "candidate\telement")?;
        for f in &found {
            writeln!(ctx.out, "{}\t{}", f.candidate, f.element)?;
        }
    }
    Ok(())
}

fn cmd_classes(ctx: &mut Ctx, stats: Option<&str>, reference: &str, n: usize) -> CmdResult {
    let names: Vec<String> = match stats {
        Some(list) => split_names(list),
        None => registry()
            .of_kind(Kind::Mahonian)
            .map(|d| d.name.to_string())
            .collect(),
    };
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let classes = ctx.engine.partition_classes(&refs, reference, n)?;
    if ctx.json {
        ctx.emit_json(&json!({ "n": n, "eulerian": reference, "classes": classes }))?;
    } else {
        for (k, class) in classes.iter().enumerate() {
            writeln!(ctx.out, "{k}\t{}", class.join(","))?;
        }
    }
    Ok(())
}

fn cmd_orbit(ctx: &mut Ctx, perm: &str) -> CmdResult {
    let p = read_perm(perm)?;
    let orbit = group::orbit(&p);
    if ctx.json {
        let images: serde_json::Map<String, Value> = GroupElement::ALL
            .iter()
            .map(|g| (g.name().to_string(), json!(g.apply(&p).to_string())))
            .collect();
        let orbit: Vec<String> = orbit.iter().map(Permutation::to_string).collect();
        ctx.emit_json(&json!({ "perm": p.to_string(), "images": images, "orbit": orbit }))?;
    } else {
        for g in GroupElement::ALL {
            writeln!(ctx.out, "{g}\t{}", g.apply(&p))?;
        }
        writeln!(ctx.out, "orbit\t{}", orbit.len())?;
    }
    Ok(())
}

fn cmd_pattern(ctx: &mut Ctx, perm: &str, patterns: &[String]) -> CmdResult {
    let p = read_perm(perm)?;
    let mut counts = Vec::new();
    for text in patterns {
        let pat = VincularPattern::parse(text)?;
        counts.push((pat.to_string(), pat.count(&p)));
    }
    if ctx.json {
        let map: serde_json::Map<String, Value> =
            counts.into_iter().map(|(k, v)| (k, json!(v))).collect();
        ctx.emit_json(&json!({ "perm": p.to_string(), "counts": map }))?;
    } else {
        for (pat, c) in counts {
            writeln!(ctx.out, "{pat}\t{c}")?;
        }
    }
    Ok(())
}

fn cmd_sample(ctx: &mut Ctx, n: usize, count: usize, seed: u64, emit: &str) -> CmdResult {
    if n == 0 || count == 0 {
        return Err(Failure::Usage("--n and --count must be at least 1".into()));
    }
    let stat = if emit == "id" {
        None
    } else {
        Some(registry().lookup(emit)?)
    };
    for p in Sampler::new(n, seed).take(count) {
        match stat {
            None if ctx.json => writeln!(ctx.out, "{}", json!(p.word()))?,
            None => writeln!(ctx.out, "{p}")?,
            Some(d) => writeln!(ctx.out, "{}", d.eval(&p))?,
        }
    }
    Ok(())
}

fn cmd_bench(ctx: &mut Ctx, n: usize, seed: u64, runs: usize) -> CmdResult {
    if n == 0 {
        return Err(Failure::Usage("--n must be at least 1".into()));
    }
    let report = bench_decode(n, seed, runs);
    if ctx.json {
        let value = serde_json::to_value(&report).expect("serializable");
        ctx.emit_json(&value)?;
    } else {
        writeln!(ctx.out, "op\tdecode")?;
        writeln!(ctx.out, "n\t{}", report.n)?;
        writeln!(ctx.out, "runs\t{}", report.runs)?;
        writeln!(ctx.out, "median_secs\t{:.6}", report.median_secs)?;
        writeln!(ctx.out, "per_element_ns\t{:.3}", report.per_element_ns)?;
    }
    Ok(())
}

fn run(cli: Cli) -> CmdResult {
    let enumerator = Enumerator::from_env().with_threads(cli.threads);
    let mut ctx = Ctx {
        json: cli.json,
        engine: Engine::new(enumerator),
        out: BufWriter::new(io::stdout().lock()),
    };
    let result = match &cli.command {
        Command::Eval { perm, stats } => cmd_eval(&mut ctx, perm, stats),
        Command::Decode { perm } => cmd_decode(&mut ctx, perm),
        Command::Verify { table } => cmd_verify(&mut ctx, table),
        Command::Dist { stat, n } => cmd_dist(&mut ctx, stat, *n),
        Command::Joint { pair, n } => cmd_joint(&mut ctx, pair, *n),
        Command::Check(args) => cmd_check(&mut ctx, args),
        Command::SearchEquiv {
            target,
            stats,
            max_n,
        } => cmd_search(&mut ctx, target, stats.as_deref(), *max_n),
        Command::Classes {
            stats,
            reference,
            n,
        } => cmd_classes(&mut ctx, stats.as_deref(), reference, *n),
        Command::Orbit { perm } => cmd_orbit(&mut ctx, perm),
        Command::Pattern { perm, patterns } => cmd_pattern(&mut ctx, perm, patterns),
        Command::Sample {
            n,
            count,
            seed,
            emit,
        } => cmd_sample(&mut ctx, *n, *count, *seed, emit),
        Command::Bench {
            op: BenchOp::Decode,
            n,
            seed,
            runs,
        } => cmd_bench(&mut ctx, *n, *seed, *runs),
    };
    ctx.out.flush()?;
    result
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("permstat: {msg}");
            ExitCode::from(2)
        }
    }
}
