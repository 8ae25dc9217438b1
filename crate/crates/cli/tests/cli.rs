use std::path::PathBuf;
use std::process::{Command, Output};

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn scratch(name: &str) -> PathBuf {
    let d = std::env::temp_dir().join(format!("pickylab-cli-{}-{name}", std::process::id()));
    let _ = std::fs::remove_dir_all(&d);
    std::fs::create_dir_all(&d).unwrap();
    d
}

fn run(cache: &PathBuf, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pickylab"))
        .current_dir(root())
        .env("PICKYLAB_CACHE", cache)
        .args(args)
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
fn lambda_values_of_s4() {
    let cache = scratch("lambda");
    let o = run(&cache, &["lambda", "--group", "sym:4", "--prime", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    let mut lambdas: Vec<u64> = out
        .lines()
        .filter(|l| !l.starts_with(' '))
        .filter_map(|l| l.split_once(": lambda "))
        .map(|(_, v)| v.parse().unwrap())
        .collect();
    lambdas.sort();
    assert_eq!(lambdas, vec![1, 1, 3]);
    assert!(out.contains("casolo sym:4 p=2: holds"));
}

#[test]
fn expected_verdicts_exit_zero() {
    let cache = scratch("verdicts");
    let o = run(
        &cache,
        &[
            "check",
            "picky",
            "--group",
            "psl2:7",
            "--prime",
            "7",
            "--mode",
            "strong-global",
        ],
    );
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("picky-strong-global psl2:7 p=7: holds"));

    for (family, q) in [("sz", "8"), ("psu3", "3")] {
        let o = run(&cache, &["check", "family", "--family", family, "--q", q]);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
        assert!(
            stdout(&o).starts_with("global: holds; strong(good): holds; strong(bad): fails\n"),
            "{}",
            stdout(&o)
        );
    }

    // strong failure on the bad class is expected for PSU3(3)
    let o = run(
        &cache,
        &[
            "check",
            "picky",
            "--group",
            "file:data/psu3_3.gens",
            "--prime",
            "3",
            "--mode",
            "strong-A",
        ],
    );
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("holds-nonstrict-only"));
}

#[test]
fn table_cache_hit_poison_and_bypass() {
    let cache = scratch("cache");
    let args = ["table", "--group", "file:data/sz8.gens"];
    let first = run(&cache, &args);
    assert_eq!(first.status.code(), Some(0));
    assert!(stderr(&first).contains("cache: miss"));
    let second = run(&cache, &args);
    assert!(stderr(&second).contains("cache: hit"));
    assert_eq!(stdout(&first), stdout(&second));

    let entry = std::fs::read_dir(&cache)
        .unwrap()
        .next()
        .unwrap()
        .unwrap()
        .path();
    let text = std::fs::read_to_string(&entry).unwrap();
    let poisoned = text.replacen("chi 14 14 | -2", "chi 14 14 | 2", 1);
    assert_ne!(poisoned, text);
    std::fs::write(&entry, poisoned).unwrap();
    let third = run(&cache, &args);
    assert_eq!(third.status.code(), Some(0));
    assert!(stderr(&third).contains("rejected"));
    assert_eq!(std::fs::read_to_string(&entry).unwrap(), text);

    let o = run(
        &cache,
        &["table", "--group", "file:data/sz8.gens", "--no-cache"],
    );
    assert!(stderr(&o).contains("cache: disabled"));
}

#[test]
fn reports_are_byte_identical() {
    let cache = scratch("determinism");
    let a = cache.join("a.json");
    let b = cache.join("b.json");
    // the first run computes the table, the second reads it from the cache
    let o = run(
        &cache,
        &[
            "check",
            "all",
            "--group",
            "alt:5",
            "--prime",
            "2",
            "--json",
            a.to_str().unwrap(),
        ],
    );
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = run(
        &cache,
        &[
            "check",
            "all",
            "--group",
            "alt:5",
            "--prime",
            "2",
            "--json",
            b.to_str().unwrap(),
        ],
    );
    assert!(stderr(&o).contains("cache: hit"));
    let (ta, tb) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(ta, tb);
    let v: serde_json::Value = serde_json::from_slice(&ta).unwrap();
    for key in ["version", "spec", "prime", "checks", "determinism"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["spec"], "alt:5");
    assert!(v["determinism"]["dixon_prime"].is_u64());
    assert!(v["determinism"]["finite_field"].is_string());
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.iter().any(|c| c["name"] == "picky-global"
        && c["verdict"] == "holds"
        && c.get("witness").is_some()));
}

#[test]
fn table_only_hall_fixture() {
    let cache = scratch("hall");
    let o = run(
        &cache,
        &[
            "check",
            "extensions",
            "--group",
            "ctx:data/j4_hall_fixture.ctx",
            "--mode",
            "hall",
            "--pi",
            "5,7",
            "--normalizer",
            "file:data/j4_hall_normalizer.gens",
        ],
    );
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("25 vs 25"));
    assert!(out.contains("30 != 25"));
    assert!(out.contains("fixture"));
}

#[test]
fn exit_codes_for_errors_and_unexpected_verdicts() {
    let cache = scratch("errors");
    assert_eq!(
        run(&cache, &["table", "--group", "nosuch:3"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&cache, &["check", "picky", "--group", "sym:4"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(
            &cache,
            &[
                "check",
                "picky",
                "--group",
                "ctx:data/m11.ctx",
                "--prime",
                "3"
            ]
        )
        .status
        .code(),
        Some(2)
    );
    assert_eq!(run(&cache, &["bogus"]).status.code(), Some(2));

    let bad = cache.join("bad.ctx");
    let text = std::fs::read_to_string(root().join("data/m11.ctx")).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    let i = lines.iter().position(|l| l.starts_with("chi 10 ")).unwrap();
    let mut corrupted: Vec<String> = lines.iter().map(|s| s.to_string()).collect();
    corrupted[i] = corrupted[i].replacen(" | 2 |", " | -2 |", 1);
    assert_ne!(corrupted[i], lines[i]);
    std::fs::write(&bad, corrupted.join("\n")).unwrap();
    let spec = format!("ctx:{}", bad.display());
    assert_eq!(
        run(&cache, &["table", "--group", &spec]).status.code(),
        Some(2)
    );
    // trusted load, then the table check reports the violation as an unexpected verdict
    assert_eq!(
        run(&cache, &["table", "--group", &spec, "--trust"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn family_data() {
    let cache = scratch("family");
    let o = run(&cache, &["family", "--family", "ree", "--q", "27"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(!stdout(&o).is_empty());
    assert_eq!(
        run(&cache, &["family", "--family", "sz", "--q", "4"])
            .status
            .code(),
        Some(2)
    );
}
