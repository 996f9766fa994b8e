use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::Path;

use rayon::prelude::*;

use fdel_core::family::parse_family_file;
use fdel_core::generators::{gnp, grid_with_pendant_tree, pendant_triangle_chain};
use fdel_core::oracle::opt_deletion;
use fdel_core::pipeline::{kernelize_with, solve_with, KernelMode, SolveOptions, TableCache};
use fdel_core::replacer::parse_table;
use fdel_core::{
    approximate, build_table, find_minimal_minor_model, is_f_minor_free, parse_graph, validate_family, write_graph,
    write_table, Graph, MinorFamily, Preset, ProtrusionParams,
};

use crate::report::{InstanceStats, RunReport, Timer};
use crate::{Common, Failure, Generator, Mode, ParamArgs, EXIT_NONE, EXIT_OK, EXIT_USAGE};

type CmdResult = Result<i32, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

pub fn load_family(arg: &str, eta: Option<usize>) -> Result<MinorFamily, Failure> {
    let family = match arg.strip_prefix("custom:") {
        Some(file) => {
            let members = parse_family_file(&read(Path::new(file))?)?;
            validate_family(members, eta)?
        }
        None => {
            let preset = Preset::from_tag(arg)
                .ok_or_else(|| Failure::usage(format!("unknown family {arg:?}; expected vc, fvs, tw2 or custom:<file>")))?;
            let f = preset.family();
            match eta {
                Some(e) => f.with_eta(e),
                None => f,
            }
        }
    };
    Ok(family)
}

fn load(common: &Common, report: &mut RunReport, timer: &Timer) -> Result<(Graph, MinorFamily), Failure> {
    let text = read(&common.input)?;
    let g = timer.time(report, "parse", || parse_graph(&text))?;
    let f = load_family(&common.family, common.eta)?;
    report.instance = Some(InstanceStats { n: g.n(), m: g.m() });
    report.family = Some(f.tag());
    Ok((g, f))
}

fn params_for(f: &MinorFamily, a: &ParamArgs) -> Result<ProtrusionParams, Failure> {
    let mut p = ProtrusionParams::for_family(f);
    if let Some(r) = a.r {
        p.r = r;
    }
    if let Some(v) = a.rep_size {
        p.rep_size = v;
        p.min_size = p.min_size.max(v + 1);
    }
    if let Some(v) = a.min_size {
        p.min_size = v;
    }
    if let Some(v) = a.max_interior {
        p.max_interior = v;
    }
    if let Some(v) = a.test_size {
        p.test_size = v;
    }
    p.max_interior = p.max_interior.max(p.min_size);
    p.validate()?;
    Ok(p)
}

fn mode(m: Mode) -> KernelMode {
    match m {
        Mode::Naive => KernelMode::Naive,
        Mode::Fast => KernelMode::Fast,
    }
}

fn one_based(set: &[usize]) -> Vec<usize> {
    set.iter().map(|v| v + 1).collect()
}

fn solution_text(set: &[usize]) -> String {
    let ids: Vec<String> = one_based(set).iter().map(ToString::to_string).collect();
    format!("s {}\n{}\n", set.len(), ids.join(" "))
}

fn emit(report: &mut RunReport, json: bool, text: &str, exit: i32) -> CmdResult {
    report.exit = exit;
    let body = if json {
        format!("{}\n", serde_json::to_string_pretty(report).expect("report serializes"))
    } else {
        text.to_string()
    };
    // A closed pipe downstream is not our failure.
    let _ = std::io::stdout().lock().write_all(body.as_bytes());
    Ok(exit)
}

pub fn solve(
    mut report: RunReport,
    common: &Common,
    params: &ParamArgs,
    k: Option<usize>,
    no_kernel: bool,
    m: Mode,
) -> CmdResult {
    let timer = Timer::new(!common.no_timing);
    let (g, f) = load(common, &mut report, &timer)?;
    let p = params_for(&f, params)?;
    let k = k.unwrap_or(g.n());
    let opts = SolveOptions { kernelize: !no_kernel, mode: mode(m), ..Default::default() };
    let sol = timer.time(&mut report, "solve", || solve_with(&g, &f, k, &p, &opts, &mut TableCache::new()))?;
    match sol {
        Some(s) => {
            report.outcome.opt = Some(s.set.len());
            report.outcome.witness = Some(one_based(&s.set));
            report.outcome.feasible = Some(s.feasible);
            report.outcome.provenance = Some(format!("{:?}", s.provenance).to_lowercase());
            let text = solution_text(&s.set);
            emit(&mut report, common.json, &text, EXIT_OK)
        }
        None => {
            report.outcome.feasible = Some(false);
            emit(&mut report, common.json, &format!("c no solution of size at most {k}\n"), EXIT_NONE)
        }
    }
}

pub fn kernelize(
    mut report: RunReport,
    common: &Common,
    params: &ParamArgs,
    m: Mode,
    tables: &[std::path::PathBuf],
    out: Option<&Path>,
    trace: Option<&Path>,
) -> CmdResult {
    let timer = Timer::new(!common.no_timing);
    let (g, f) = load(common, &mut report, &timer)?;
    let p = params_for(&f, params)?;
    let mut cache = TableCache::new();
    for path in tables {
        cache.insert(parse_table(&read(path)?)?);
    }
    let (res, failure) = match timer.time(&mut report, "kernelize", || kernelize_with(&g, &f, &p, mode(m), &mut cache)) {
        Ok(res) => (res, None),
        Err(e) => {
            let failure = Failure::from(e.error);
            (*e.partial, Some(failure))
        }
    };
    if let Some(path) = out {
        write(path, &write_graph(&res.kernel))?;
    }
    if let Some(path) = trace {
        write(path, &serde_json::to_string_pretty(&res.traces).expect("traces serialize"))?;
    }
    report.outcome.kernel_n = Some(res.kernel.n());
    report.outcome.kernel_m = Some(res.kernel.m());
    report.outcome.delta = Some(res.total_offset);
    report.outcome.rounds = Some(res.traces.len());
    let text = format!(
        "c kernel n={} m={} delta={} rounds={} skipped={}\n",
        res.kernel.n(),
        res.kernel.m(),
        res.total_offset,
        res.traces.len(),
        res.stats.skipped
    );
    match failure {
        None => emit(&mut report, common.json, &text, EXIT_OK),
        Some(fail) => {
            eprintln!("error: {} (partial kernel kept)", fail.msg);
            emit(&mut report, common.json, &text, fail.exit)
        }
    }
}

pub fn approx(mut report: RunReport, common: &Common, oracle_check: bool) -> CmdResult {
    let timer = Timer::new(!common.no_timing);
    let (g, f) = load(common, &mut report, &timer)?;
    let s = timer.time(&mut report, "approx", || approximate(&g, &f))?;
    report.outcome.witness = Some(one_based(&s.set));
    report.outcome.feasible = Some(s.feasible);
    report.outcome.provenance = Some("approx".into());
    let mut text = solution_text(&s.set);
    if oracle_check {
        match timer.time(&mut report, "oracle", || opt_deletion(&g, &f, None)) {
            Ok(Some(best)) => {
                let ratio = if best.opt == 0 { 1.0 } else { s.set.len() as f64 / best.opt as f64 };
                report.outcome.opt = Some(best.opt);
                report.outcome.ratio = Some(ratio);
                writeln!(text, "c opt {} ratio {ratio:.3}", best.opt).unwrap();
            }
            Ok(None) => unreachable!("uncapped oracle always finds a solution"),
            Err(e) if e.is_resource() => log::warn!("oracle check skipped: {e}"),
            Err(e) => return Err(e.into()),
        }
    }
    emit(&mut report, common.json, &text, EXIT_OK)
}

#[allow(clippy::too_many_arguments)]
pub fn table(
    mut report: RunReport,
    boundary: usize,
    family: &str,
    eta: Option<usize>,
    test_size: usize,
    rep_size: usize,
    out: Option<&Path>,
    json: bool,
    no_timing: bool,
) -> CmdResult {
    let timer = Timer::new(!no_timing);
    let f = load_family(family, eta)?;
    report.family = Some(f.tag());
    let p = ProtrusionParams {
        r: ProtrusionParams::for_family(&f).r.max(boundary),
        test_size,
        rep_size,
        ..ProtrusionParams::for_family(&f)
    };
    let table = timer.time(&mut report, "build", || build_table(boundary, &f, &p))?;
    report.outcome.classes = Some(table.len());
    let body = write_table(&table);
    let text = match out {
        Some(path) => {
            write(path, &body)?;
            format!("c table t={boundary} classes={}\n", table.len())
        }
        None => body,
    };
    emit(&mut report, json, &text, EXIT_OK)
}

/// Claimed solution: a solve report, or `s <size>` followed by ids.
fn parse_solution(text: &str) -> Result<(Vec<usize>, Option<usize>), Failure> {
    if text.trim_start().starts_with('{') {
        let v: serde_json::Value =
            serde_json::from_str(text).map_err(|e| Failure::usage(format!("solution report: {e}")))?;
        let witness = v["outcome"]["witness"]
            .as_array()
            .ok_or_else(|| Failure::usage("report has no witness"))?
            .iter()
            .map(|x| x.as_u64().map(|x| x as usize).ok_or_else(|| Failure::usage("bad witness id")))
            .collect::<Result<Vec<_>, _>>()?;
        let claimed = v["outcome"]["opt"].as_u64().map(|x| x as usize);
        let claimed = claimed.unwrap_or(witness.len());
        return Ok((witness, Some(claimed)));
    }
    let mut ids = Vec::new();
    let mut claimed = None;
    for line in text.lines().map(str::trim) {
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if let Some(size) = line.strip_prefix("s ") {
            claimed = Some(size.trim().parse().map_err(|_| Failure::usage(format!("bad size line {line:?}")))?);
            continue;
        }
        for tok in line.split_whitespace() {
            ids.push(tok.parse().map_err(|_| Failure::usage(format!("bad vertex id {tok:?}")))?);
        }
    }
    Ok((ids, claimed))
}

pub fn verify(mut report: RunReport, common: &Common, solution: &Path, k: Option<usize>) -> CmdResult {
    let timer = Timer::new(!common.no_timing);
    let (g, f) = load(common, &mut report, &timer)?;
    let (ids, claimed) = parse_solution(&read(solution)?)?;
    let mut set = Vec::with_capacity(ids.len());
    for id in ids {
        if id == 0 || id > g.n() {
            return Err(Failure::usage(format!("vertex {id} out of range 1..={}", g.n())));
        }
        set.push(id - 1);
    }
    set.sort_unstable();
    set.dedup();
    let bound = k.or(claimed).unwrap_or(set.len());
    let (rest, map) = g.remove_vertices(&set);
    let model = timer.time(&mut report, "verify", || find_minimal_minor_model(&rest, &f))?;
    report.outcome.witness = Some(one_based(&set));
    report.outcome.opt = claimed;
    let mut violation = None;
    if let Some(model) = model {
        let sets: Vec<String> = model
            .branch_sets
            .iter()
            .map(|b| format!("{{{}}}", b.iter().map(|&v| (map[v] + 1).to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        violation = Some(format!("remaining minor model with branch sets {}", sets.join(" ")));
    } else if set.len() > bound {
        violation = Some(format!("set has {} vertices, claimed at most {bound}", set.len()));
    }
    debug_assert!(violation.is_some() || is_f_minor_free(&rest, &f).unwrap_or(false));
    report.outcome.feasible = Some(violation.is_none());
    match violation {
        None => emit(&mut report, common.json, &format!("c ok size {}\n", set.len()), EXIT_OK),
        Some(v) => {
            eprintln!("violation: {v}");
            report.outcome.violation = Some(v.clone());
            emit(&mut report, common.json, &format!("c violation: {v}\n"), EXIT_NONE)
        }
    }
}

pub const BENCH_HEADER: &str = "generator,k,n,m,kernel_n,kernel_m,delta,opt,solve_ms_kernel,solve_ms_plain";

fn bench_params() -> ProtrusionParams {
    ProtrusionParams {
        r: 2,
        min_size: 3,
        max_interior: 3,
        test_size: 4,
        rep_size: 2,
        separator_budget: 2_000_000,
    }
}

fn bench_instance(gen: Generator, k: usize, seed: u64) -> Graph {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed.wrapping_mul(1_000_003).wrapping_add(k as u64));
    match gen {
        Generator::Chain => pendant_triangle_chain(k),
        Generator::Grid => grid_with_pendant_tree(2, k, 2 * k, &mut rng),
        Generator::Gnp => gnp(k + 6, 0.3, &mut rng),
    }
}

fn gen_name(gen: Generator) -> &'static str {
    match gen {
        Generator::Chain => "chain",
        Generator::Grid => "grid",
        Generator::Gnp => "gnp",
    }
}

/// Node budget for the unkernelized solve, which can blow up on the larger rows.
const PLAIN_NODE_BUDGET: u64 = 50_000;

fn bench_row(gen: Generator, k: usize, seed: u64, f: &MinorFamily, plain: bool, timing: bool) -> Result<String, Failure> {
    let g = bench_instance(gen, k, seed);
    let p = bench_params();
    let mut tables = TableCache::new();
    let res = kernelize_with(&g, f, &p, KernelMode::Fast, &mut tables).map_err(|e| Failure::from(e.error))?;
    let clock = std::time::Instant::now();
    let with = solve_with(&g, f, g.n(), &p, &SolveOptions::default(), &mut tables)?;
    let ms_kernel = clock.elapsed().as_secs_f64() * 1e3;
    let clock = std::time::Instant::now();
    let plain_opts = SolveOptions { kernelize: false, node_budget: PLAIN_NODE_BUDGET, ..Default::default() };
    let plain = match plain.then(|| solve_with(&g, f, g.n(), &p, &plain_opts, &mut tables)) {
        Some(Ok(s)) => Some(s),
        Some(Err(e)) if !e.is_resource() => return Err(e.into()),
        _ => None,
    };
    let ms_plain = clock.elapsed().as_secs_f64() * 1e3;
    let opt = with.as_ref().map_or(0, |s| s.set.len());
    if let Some(Some(s)) = &plain {
        if s.set.len() != opt {
            return Err(Failure { exit: EXIT_USAGE, msg: format!("{} k={k}: solve sizes differ", gen_name(gen)) });
        }
    }
    let fmt_ms = |ms: f64| if timing { format!("{ms:.3}") } else { "0".to_string() };
    Ok(format!(
        "{},{k},{},{},{},{},{},{opt},{},{}",
        gen_name(gen),
        g.n(),
        g.m(),
        res.kernel.n(),
        res.kernel.m(),
        res.total_offset,
        fmt_ms(ms_kernel),
        if plain.is_some() { fmt_ms(ms_plain) } else { "NA".to_string() },
    ))
}

#[allow(clippy::too_many_arguments)]
pub fn bench(
    mut report: RunReport,
    family: &str,
    gens: &[Generator],
    min_k: usize,
    max_k: usize,
    seed: u64,
    plain: bool,
    out: Option<&Path>,
    json: bool,
    no_timing: bool,
) -> CmdResult {
    if min_k < 2 || min_k > max_k {
        return Err(Failure::usage("need 2 <= min-k <= max-k"));
    }
    let f = load_family(family, None)?;
    report.family = Some(f.tag());
    let timer = Timer::new(!no_timing);
    let jobs: Vec<(Generator, usize)> = gens.iter().flat_map(|&g| (min_k..=max_k).map(move |k| (g, k))).collect();
    let rows: Vec<Result<String, Failure>> = timer.time(&mut report, "bench", || {
        jobs.par_iter().map(|&(g, k)| bench_row(g, k, seed, &f, plain, !no_timing)).collect()
    });
    let mut csv = format!("{BENCH_HEADER}\n");
    for row in rows {
        writeln!(csv, "{}", row?).unwrap();
    }
    report.outcome.rows = Some(jobs.len());
    let text = match out {
        Some(path) => {
            write(path, &csv)?;
            format!("c wrote {} rows to {}\n", jobs.len(), path.display())
        }
        None => csv,
    };
    emit(&mut report, json, &text, EXIT_OK)
}
