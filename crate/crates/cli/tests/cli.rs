use std::process::{Command, Output};

fn tpe(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tpe")).args(args).env_remove("TPE_FORMAT").output().expect("run tpe")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn enumerate_coprime_352() {
    let o = tpe(&["enumerate", "3", "5", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("3^3 + 5 = 2^5"));
    assert!(s.contains("solutions: 3, N = 3"));
    assert!(s.contains("coprime-352"));
}

#[test]
fn enumerate_7_7_98() {
    let s = stdout(&tpe(&["enumerate", "7", "7", "98"]));
    assert!(s.contains("solutions: 3, N = 2"));
}

#[test]
fn enumerate_shows_anomalous() {
    let o = tpe(&["--format", "json", "enumerate", "5", "275", "280"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["n"], 2);
    assert_eq!(v["solutions"][1]["x"], 7);
    assert_eq!(v["classification"]["classification"], "anomalous");
}

#[test]
fn enumerate_bound_warning_exit_code() {
    let o = tpe(&["--max-bits", "4", "enumerate", "3", "5", "100"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("warning"));
}

#[test]
fn family_gen_iii() {
    let o = tpe(&["family", "gen", "III", "g=7", "j=1", "u=2", "d=1", "k=3"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("(7, 49, 98, 2, 1, 1, 7, 3, 3)"));
    assert!(s.contains("7^7 + 49^3 = 98^3"));
}

#[test]
fn family_gen_iv_rejects_d_one() {
    let o = tpe(&["family", "gen", "IV", "g=3", "i=1", "j=1", "u=1", "d=1", "k=2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("d != 1"));
}

#[test]
fn family_check_anomalous() {
    let o = tpe(&["family", "check", "2", "6", "38", "1", "2", "1", "5", "1", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("anomalous"));
}

#[test]
fn classify_family_member() {
    let o = tpe(&["--format", "json", "classify", "2", "2", "6", "2", "1", "1", "5", "2", "2"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["classification"], "family");
    assert_eq!(v["family"], "I");
}

#[test]
fn usage_errors() {
    assert_eq!(tpe(&["bogus"]).status.code(), Some(1));
    assert_eq!(tpe(&["enumerate", "3"]).status.code(), Some(1));
    assert_eq!(tpe(&["family", "gen", "III", "g=7"]).status.code(), Some(1));
    assert_eq!(tpe(&["enumerate", "1", "2", "3"]).status.code(), Some(2));
}

#[test]
fn pipeline_missing_file() {
    let o = tpe(&["search", "pipeline", "definitely-missing.txt"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn pipeline_file_with_diagnostics() {
    let dir = std::env::temp_dir().join(format!("tpe-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("eqs.txt");
    std::fs::write(&path, "# pairs\n3 2 5\n1 24 25\n2 2 4\n16 3 19\n1 18 19\n").unwrap();
    let o = tpe(&["--format", "json", "search", "pipeline", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains(r#"{"a":3,"b":6,"c":15,"x1":2,"y1":1,"z1":1,"x2":2,"y2":3,"z2":2,"classification":"anomalous""#));
    assert!(s.contains(r#""a":2,"b":6,"c":38"#));
    assert!(String::from_utf8_lossy(&o.stderr).contains(":4: gcd"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn pipeline_deterministic_across_workers() {
    let args = ["--format", "json", "search", "pipeline", "--gen-rad", "100", "--gen-height", "100000"];
    let one = tpe(&[&["--workers", "1"][..], &args[..]].concat());
    let four = tpe(&[&["--workers", "4"][..], &args[..]].concat());
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
    assert!(stdout(&one).lines().last().unwrap().starts_with(r#"{"summary""#));
}

#[test]
fn direct_search_csv_and_checkpoint() {
    let dir = std::env::temp_dir().join(format!("tpe-cli-cp-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cp = dir.join("cp.json");
    let args = ["--format", "csv", "search", "direct", "--a1-max", "3", "--g-max", "5", "--b1-max", "20", "--exp-max", "4"];
    let plain = tpe(&args);
    let with_cp = tpe(&[&args[..], &["--checkpoint", cp.to_str().unwrap()][..]].concat());
    let resumed = tpe(&[&args[..], &["--checkpoint", cp.to_str().unwrap()][..]].concat());
    assert!(cp.exists());
    assert_eq!(plain.stdout, with_cp.stdout);
    assert_eq!(plain.stdout, resumed.stdout);
    let s = stdout(&plain);
    assert!(s.starts_with("a,b,c,x1,y1,z1,x2,y2,z2,classification,family,params,bound_bits"));
    assert!(s.contains("3,6,15,2,1,1,2,3,2,anomalous"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn env_override() {
    let o = Command::new(env!("CARGO_BIN_EXE_tpe"))
        .args(["enumerate", "3", "5", "2"])
        .env("TPE_FORMAT", "json")
        .env("TPE_MAX_BITS", "64")
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["max_bits"], 64);
}

#[test]
fn verify_single_criterion() {
    let o = tpe(&["verify-paper", "--criterion", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("criterion 1"));
    assert!(stdout(&o).contains("PASS"));
}
