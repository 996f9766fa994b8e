use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use fdel_core::generators::{cycle, petersen, triangles_on_path};
use fdel_core::{write_graph, Graph};
use tempfile::TempDir;

fn fdel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fdel")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn graph_file(dir: &TempDir, name: &str, g: &Graph) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, write_graph(g)).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn solve_c5() {
    let dir = TempDir::new().unwrap();
    let c5 = graph_file(&dir, "c5.txt", &cycle(5));
    let out = fdel(&["solve", "--input", s(&c5), "--family", "fvs", "--k", "1"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("s 1\n"));
    let out = fdel(&["solve", "--input", s(&c5), "--family", "fvs", "--k", "0"]);
    assert_eq!(code(&out), 1);
}

#[test]
fn verify_accepts_solve_output() {
    let dir = TempDir::new().unwrap();
    for (i, g) in [petersen(), triangles_on_path(3), cycle(6)].iter().enumerate() {
        let input = graph_file(&dir, &format!("g{i}.txt"), g);
        for family in ["vc", "fvs", "tw2"] {
            let out = fdel(&["solve", "--input", s(&input), "--family", family, "--json", "--no-timing"]);
            assert_eq!(code(&out), 0);
            let report = dir.path().join(format!("r{i}{family}.json"));
            fs::write(&report, &out.stdout).unwrap();
            let v = fdel(&["verify", "--input", s(&input), "--family", family, "--solution", s(&report)]);
            assert_eq!(code(&v), 0, "{}", String::from_utf8_lossy(&v.stderr));
            // Same check through the text format.
            let text = fdel(&["solve", "--input", s(&input), "--family", family]);
            let sol = dir.path().join(format!("s{i}{family}.txt"));
            fs::write(&sol, &text.stdout).unwrap();
            assert_eq!(code(&fdel(&["verify", "--input", s(&input), "--family", family, "--solution", s(&sol)])), 0);
        }
    }
}

#[test]
fn verify_rejects_non_hitting_set() {
    let dir = TempDir::new().unwrap();
    let input = graph_file(&dir, "p.txt", &petersen());
    let sol = dir.path().join("bad.txt");
    fs::write(&sol, "s 2\n1 2\n").unwrap();
    let out = fdel(&["verify", "--input", s(&input), "--family", "fvs", "--solution", s(&sol)]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("remaining minor model"));
    // Feasible but larger than claimed.
    fs::write(&sol, "s 2\n1 2 3 4 5 6 7\n").unwrap();
    let out = fdel(&["verify", "--input", s(&input), "--family", "fvs", "--solution", s(&sol)]);
    assert_eq!(code(&out), 1);
}

#[test]
fn usage_errors_exit_2() {
    let dir = TempDir::new().unwrap();
    let c5 = graph_file(&dir, "c5.txt", &cycle(5));
    assert_eq!(code(&fdel(&["solve", "--input", s(&c5), "--bogus"])), 2);
    assert_eq!(code(&fdel(&["solve", "--input", s(&c5), "--family", "planar"])), 2);
    let broken = dir.path().join("broken.txt");
    fs::write(&broken, "3 2\n1 2\n").unwrap();
    let out = fdel(&["solve", "--input", s(&broken)]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("E_PARSE"));
    assert_eq!(code(&fdel(&["solve", "--input", "/nonexistent/graph.txt"])), 2);
}

#[test]
fn json_is_deterministic_and_round_trips() {
    let dir = TempDir::new().unwrap();
    let input = graph_file(&dir, "t.txt", &triangles_on_path(4));
    let args = ["solve", "--input", s(&input), "--json", "--no-timing"];
    let a = fdel(&args);
    let b = fdel(&args);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["family"], "fvs");
    assert_eq!(v["outcome"]["opt"], 4);
    let again = serde_json::to_string_pretty(&v).unwrap();
    assert_eq!(serde_json::from_str::<serde_json::Value>(&again).unwrap(), v);
}

#[test]
fn kernelize_writes_kernel_and_traces() {
    let dir = TempDir::new().unwrap();
    let input = graph_file(&dir, "t6.txt", &triangles_on_path(6));
    let kernel = dir.path().join("kernel.txt");
    let trace = dir.path().join("trace.json");
    let params = ["--r", "2", "--rep-size", "1", "--min-size", "2", "--max-interior", "3"];
    let mut args = vec!["kernelize", "--input", s(&input), "--json", "--no-timing", "--out", s(&kernel), "--trace", s(&trace)];
    args.extend(params);
    let out = fdel(&args);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["outcome"]["delta"], 6);
    let g = fdel_core::parse_graph(&fs::read_to_string(&kernel).unwrap()).unwrap();
    assert_eq!(v["outcome"]["kernel_n"], g.n());
    let traces: serde_json::Value = serde_json::from_str(&fs::read_to_string(&trace).unwrap()).unwrap();
    assert_eq!(traces.as_array().unwrap().len() as u64, v["outcome"]["rounds"].as_u64().unwrap());

    let mut naive = vec!["kernelize", "--input", s(&input), "--json", "--no-timing", "--mode", "naive"];
    naive.extend(params);
    let n: serde_json::Value = serde_json::from_slice(&fdel(&naive).stdout).unwrap();
    assert_eq!(n["outcome"]["kernel_n"], v["outcome"]["kernel_n"]);
    assert_eq!(n["outcome"]["delta"], v["outcome"]["delta"]);
}

#[test]
fn prebuilt_tables() {
    let dir = TempDir::new().unwrap();
    let input = graph_file(&dir, "t4.txt", &triangles_on_path(4));
    let table = dir.path().join("t1.table");
    let out = fdel(&["table", "--boundary", "1", "--family", "fvs", "--rep-size", "1", "--out", s(&table)]);
    assert_eq!(code(&out), 0);
    assert!(fs::read_to_string(&table).unwrap().starts_with("fdel-table v1\n"));
    let params = ["--r", "2", "--rep-size", "1", "--min-size", "2", "--max-interior", "3", "--json", "--no-timing"];
    let mut with = vec!["kernelize", "--input", s(&input), "--table", s(&table)];
    with.extend(params);
    let mut without = vec!["kernelize", "--input", s(&input)];
    without.extend(params);
    let a: serde_json::Value = serde_json::from_slice(&fdel(&with).stdout).unwrap();
    let b: serde_json::Value = serde_json::from_slice(&fdel(&without).stdout).unwrap();
    assert_eq!(a["outcome"], b["outcome"]);

    let vc_table = dir.path().join("vc.table");
    fdel(&["table", "--boundary", "1", "--family", "vc", "--rep-size", "1", "--out", s(&vc_table)]);
    let mut wrong = vec!["kernelize", "--input", s(&input), "--table", s(&vc_table)];
    wrong.extend(params);
    let out = fdel(&wrong);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("E_TABLE_MISMATCH"));
}

#[test]
fn custom_family_file() {
    let dir = TempDir::new().unwrap();
    let input = graph_file(&dir, "p.txt", &petersen());
    let fam = dir.path().join("k3.fam");
    fs::write(&fam, "3 3\n1 2\n2 3\n1 3\n").unwrap();
    let fam_arg = format!("custom:{}", s(&fam));
    let out = fdel(&["solve", "--input", s(&input), "--family", &fam_arg, "--json", "--no-timing"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    // A member list equal to a preset is reported under the preset's tag.
    assert_eq!(v["family"], "fvs");
    assert_eq!(v["outcome"]["opt"], 3);
    fs::write(&fam, "4 4\n1 2\n2 3\n3 4\n4 1\n").unwrap();
    let out = fdel(&["solve", "--input", s(&input), "--family", &fam_arg, "--json", "--no-timing"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["family"].as_str().unwrap().starts_with("custom-"));
    let c4 = fdel_core::validate_family(vec![cycle(4)], None).unwrap();
    let want = fdel_core::opt_deletion(&petersen(), &c4, None).unwrap().unwrap().opt;
    assert_eq!(v["outcome"]["opt"], want);
    fs::write(&fam, "5 10\n1 2\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n3 4\n3 5\n4 5\n").unwrap();
    let out = fdel(&["solve", "--input", s(&input), "--family", &fam_arg]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("E_NO_PLANAR_MEMBER"));
}

#[test]
fn approx_reports_ratio() {
    let dir = TempDir::new().unwrap();
    let input = graph_file(&dir, "p.txt", &petersen());
    let out = fdel(&["approx", "--input", s(&input), "--oracle-check", "--json", "--no-timing"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["outcome"]["opt"], 3);
    let ratio = v["outcome"]["ratio"].as_f64().unwrap();
    assert!((1.0..=3.0).contains(&ratio));
    let report = dir.path().join("a.json");
    fs::write(&report, &out.stdout).unwrap();
    // The approximate set is feasible but may exceed the optimum it reports.
    let v = fdel(&["verify", "--input", s(&input), "--solution", s(&report), "--k", "10"]);
    assert_eq!(code(&v), 0);
}

#[test]
fn bench_chain_kernel_is_affine() {
    let out = fdel(&["bench", "--generator", "chain", "--min-k", "2", "--max-k", "8", "--no-plain", "--no-timing"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "generator,k,n,m,kernel_n,kernel_m,delta,opt,solve_ms_kernel,solve_ms_plain");
    let pts: Vec<(f64, f64)> = lines
        .map(|l| {
            let cols: Vec<&str> = l.split(',').collect();
            assert_eq!(cols[9], "NA");
            (cols[1].parse().unwrap(), cols[4].parse().unwrap())
        })
        .collect();
    assert_eq!(pts.len(), 7);
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let syy: f64 = pts.iter().map(|p| (p.1 - my).powi(2)).sum();
    assert!(sxy * sxy / (sxx * syy) >= 0.99);
}
