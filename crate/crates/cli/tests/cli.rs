use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str], cache: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polypair"))
        .args(args)
        .env("POLYPAIR_CACHE", cache)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn check_reports_verdicts() {
    let tmp = tempfile::tempdir().unwrap();
    let o = run(&["check", "--kind", "f0,f03", "6", "24"], tmp.path());
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "Exceptional (sporadic pair)");

    let o = run(&["check", "--kind", "f1,f2", "27", "21"], tmp.path());
    assert!(stdout(&o).starts_with("Exceptional (on excluded curve)"));

    let o = run(&["check", "--dim", "6", "8", "14"], tmp.path());
    assert!(stdout(&o).contains("known small exceptional pair"));

    let o = run(&["check", "--kind", "f3,f0", "7", "14"], tmp.path());
    assert!(stdout(&o).starts_with("Polytopal"));

    let o = run(&["check", "--kind", "f0,f03", "9", "108"], tmp.path());
    assert!(stdout(&o).contains("hint: cyclic(4,9)"));

    let o = run(&["check", "--kind", "f0,f02", "6", "55"], tmp.path());
    assert_eq!(stdout(&o).trim(), "OutOfBounds (necessary bounds only)");
}

#[test]
fn usage_errors_exit_with_two() {
    let tmp = tempfile::tempdir().unwrap();
    assert_eq!(run(&["check", "--kind", "f9,f0", "6", "24"], tmp.path()).status.code(), Some(2));
    assert_eq!(run(&["check", "six"], tmp.path()).status.code(), Some(2));
    assert_eq!(run(&["witness", "6", "24"], tmp.path()).status.code(), Some(2));
    assert_eq!(run(&["witness", "--kind", "f0,f1", "9", "50"], tmp.path()).status.code(), Some(2));
    assert_eq!(run(&["seeds", "dump", "P99"], tmp.path()).status.code(), Some(2));
}

#[test]
fn witness_writes_recipe_and_facets_then_verifies() {
    let tmp = tempfile::tempdir().unwrap();
    let out = tmp.path().join("out");
    let cache = tmp.path().join("cache");
    let o = run(&["witness", "--out", out.to_str().unwrap(), "12", "150"], &cache);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("pair (12,150)"));
    assert!(cache.join("f0_f03").join("12_150.facets").exists());

    let recipe = out.join("12_150.recipe.json");
    let o = run(&["verify", recipe.to_str().unwrap()], &cache);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("f03 = 150"));
    assert!(text.contains("expected (12, 150): PASS"));
    assert!(!text.contains("FAIL"));

    let facets = out.join("12_150.facets");
    let o = run(&["verify", facets.to_str().unwrap()], &cache);
    assert!(o.status.success());
    assert!(stdout(&o).contains("diamond: PASS"));

    // served from the cache the second time
    let o = run(&["witness", "--out", out.to_str().unwrap(), "--kind", "f03,f0", "150", "12"], &cache);
    assert!(o.status.success());
}

#[test]
fn verify_flags_a_broken_complex() {
    let tmp = tempfile::tempdir().unwrap();
    let file = tmp.path().join("bad.fl");
    std::fs::write(&file, "dim=3\n0 1 2\n0 1 3\n0 2 3\n1 2 3\n0 1 4\n").unwrap();
    let o = run(&["verify", file.to_str().unwrap()], tmp.path());
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn region_writes_csv_and_svg() {
    let tmp = tempfile::tempdir().unwrap();
    let csv_path = tmp.path().join("r.csv");
    let svg_path = tmp.path().join("r.svg");
    let o = run(
        &[
            "region",
            "--max-f03",
            "60",
            "--csv",
            csv_path.to_str().unwrap(),
            "--svg",
            svg_path.to_str().unwrap(),
        ],
        tmp.path(),
    );
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let mut rd = csv::Reader::from_path(&csv_path).unwrap();
    assert_eq!(rd.headers().unwrap(), vec!["a", "b", "verdict", "reason", "recipe"]);
    let rows: Vec<csv::StringRecord> = rd.records().map(Result::unwrap).collect();
    let exceptional = rows.iter().filter(|r| &r[2] == "Exceptional").count();
    assert!(rows.iter().filter(|r| &r[2] == "Polytopal").all(|r| !r[4].is_empty()));
    assert!(rows.iter().any(|r| &r[0] == "6" && &r[1] == "24" && &r[2] == "Exceptional"));
    let svg = std::fs::read_to_string(&svg_path).unwrap();
    assert!(svg.starts_with("<svg"));
    assert_eq!(svg.matches("class=\"exceptional\"").count(), exceptional);
    assert!(stdout(&o).contains(&format!("{} cells", rows.len())));
}

#[test]
fn cyclic_and_seeds() {
    let tmp = tempfile::tempdir().unwrap();
    let o = run(&["cyclic", "--dim", "6", "11", "--spectrum"], tmp.path());
    let text = stdout(&o);
    assert!(text.contains("facets 77"));
    assert!(text.contains("spectrum 27 30 31 33 34"));

    let o = run(&["cyclic", "--dim", "4", "7", "--facets"], tmp.path());
    assert_eq!(stdout(&o).lines().filter(|l| l.split(' ').all(|t| t.parse::<u32>().is_ok())).count(), 14);

    let o = run(&["seeds", "list"], tmp.path());
    assert_eq!(stdout(&o).lines().count(), 63);

    let o = run(&["seeds", "dump", "P1", "--bracket"], tmp.path());
    assert_eq!(stdout(&o).trim().matches('[').count(), 8);

    let dir = tmp.path().join("seeds");
    let o = run(&["seeds", "export", "--out", dir.to_str().unwrap()], tmp.path());
    assert!(o.status.success());
    let p1 = dir.join("P1.fl");
    let o = run(&["verify", p1.to_str().unwrap()], tmp.path());
    assert!(stdout(&o).contains("f-vector (7,17,18,8)"));
}
