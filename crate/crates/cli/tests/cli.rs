use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cuntz"))
}

fn script_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("scripts").join(name)
}

fn run_script(n: usize, body: &str, extra: &[&str]) -> Output {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(body.as_bytes()).unwrap();
    bin()
        .args(["--n", &n.to_string(), "--script"])
        .arg(f.path())
        .args(extra)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn criteria_script_exits_zero() {
    let o = bin()
        .args(["--n", "8", "--script"])
        .arg(script_path("criteria.cuntz"))
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("normalizer: yes (exact)"));
    assert!(out.contains("e_1: 1/2 -> 1/4"));
    assert!(out.contains("no solution; certificate gcd(3,2)=1"));
}

#[test]
fn corrupted_unitary_exits_four() {
    let o = bin()
        .args(["--n", "2", "--script"])
        .arg(script_path("corrupted.cuntz"))
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(4));
    assert!(stderr(&o).contains("normalizer check failed"));
}

#[test]
fn verb_outputs() {
    let o = run_script(2, "tau(S1*adj(S1))\nex21(2,1,1,1)\ncutoff(cornersum(S1*adj(S1), S2*adj(S2)))\n", &[]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o), "1/2\nno solution; certificate gcd(3,2)=1\n2\n");
}

#[test]
fn commutant_verbs() {
    let body = "let e = S1*adj(S1)\nlet A = cornersum(e, I - e)\ncommutantF(A, 3)\nlet R = commutantO(A, 4, 3)\nR\nlabels(R)\nirreducible(A, 3, 2)\n";
    let o = run_script(2, body, &[]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("degree 0 at level 3: dimension 2"));
    assert!(out.contains("dimensions (0, 0, 0, 2, 0, 0, 0)"));
    assert!(out.contains("labels [0, 0]"));
    assert!(out.ends_with("false\n"));
}

#[test]
fn exit_codes() {
    assert_eq!(run_script(2, "S1 + \n", &[]).status.code(), Some(2));
    assert_eq!(run_script(2, "S3\n", &[]).status.code(), Some(2));
    assert_eq!(run_script(2, "y\n", &[]).status.code(), Some(2));
    assert_eq!(run_script(2, "frobnicate(S1)\n", &[]).status.code(), Some(2));
    assert_eq!(run_script(2, "phik(S1, 0)\n", &[]).status.code(), Some(3));
    assert_eq!(run_script(2, "cornersum(S1*adj(S1))\n", &[]).status.code(), Some(3));
    assert_eq!(run_script(2, "assert(eq(S1, S2))\n", &[]).status.code(), Some(4));
    let clamp = run_script(2, "commutantF(cornersum(I), 4)\n", &["--max-level", "3"]);
    assert_eq!(clamp.status.code(), Some(3));
    assert!(stderr(&clamp).contains("--max-level"));
    let parse = run_script(2, "\n(S1 * S2\n", &[]);
    assert!(stderr(&parse).contains("line 2: parse error at column 9"), "{}", stderr(&parse));
}

#[test]
fn json_output() {
    let o = run_script(2, "-1/2*S1*adj(S2)\ntau(I)\n", &["--json"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(
        lines[0],
        serde_json::json!({"n": 2, "terms": [{"coeff": "-1/2", "mu": [1], "nu": [2]}]})
    );
    assert_eq!(lines[1], serde_json::json!({"scalar": "1/1"}));
}

#[test]
fn save_and_load() {
    let dir = tempfile::tempdir().unwrap();
    let x = dir.path().join("x.json");
    let r = dir.path().join("r.json");
    let body = format!(
        "let x = S1*S2*adj(S5*S8*S8*S3)\nsave(x, \"{x}\")\nassert(eq(load(\"{x}\"), x))\nex22()\nsave(normcheck(U, A, 6), \"{r}\")\nassert(exact(load(\"{r}\")))\n",
        x = x.display(),
        r = r.display()
    );
    let o = run_script(8, &body, &[]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let saved: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&x).unwrap()).unwrap();
    assert_eq!(saved["n"], 8);

    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"n": 2, "terms": [{"coeff": "3/0", "mu": [1], "nu": []}]}"#).unwrap();
    let o = run_script(2, &format!("load(\"{}\")\n", bad.display()), &[]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("terms[0].coeff"), "{}", stderr(&o));
}

#[test]
fn golden_normalizer_report() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let o = run_script(2, &format!("ex22()\nsave(normcheck(U, A, 6), \"{}\")\n", out.display()), &[]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let golden = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden/swap_normalizer.json");
    let got: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let want: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(golden).unwrap()).unwrap();
    assert_eq!(got, want);
}

#[test]
fn repl_reads_stdin_and_continues_after_errors() {
    let mut child = bin()
        .args(["--n", "2"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"let e = S1*adj(S1)\nS9\ntau(e)\nE(S1 + e)\n")
        .unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(stdout(&o), "1/2\nS1*adj(S1)\n");
    assert!(stderr(&o).contains("unknown generator S9"));
    assert_eq!(o.status.code(), Some(2));
}
