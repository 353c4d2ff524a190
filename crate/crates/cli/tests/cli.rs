use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_permstar"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("permstar-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn write(name: &str, text: &str) -> PathBuf {
    let p = tmp(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn order_and_star() {
    let f = write("s4.txt", "# S4\ndegree 4\n(1,2,3,4)\n(1,2)\n");
    let o = run(&["order", s(&f)]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "degree=4 order=24\n");
    let o = run(&["star", s(&f), "--p", "2", "--report", "machine"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "degree=4 p=2 verdict=true rule=shortcut-prime-power-degree orbits=-\n");
    let o = run(&["star", s(&f), "--p", "2", "--report", "machine", "--no-shortcuts"]);
    assert_eq!(stdout(&o), "degree=4 p=2 verdict=true rule=orbit-length-test orbits=[4]\n");
    // a negative verdict is an answer, not a failure
    let o = run(&["star", s(&f), "--p", "3", "--report", "machine"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "degree=4 p=3 verdict=false rule=orbit-length-test orbits=[1,3]\n");
}

#[test]
fn constructions_round_trip_through_files() {
    let out = tmp("m12.json");
    assert!(run(&["construct", "fixture", "M12-deg12", "--out", s(&out)]).status.success());
    let o = run(&["star", s(&out), "--p", "3", "--report", "machine"]);
    assert_eq!(stdout(&o), "degree=12 p=3 verdict=false rule=orbit-length-test orbits=[3,9]\n");
    let o = run(&["sylow", s(&out), "--p", "2", "--orbits"]);
    assert!(stdout(&o).ends_with("orbits=[4,8]\n"), "{}", stdout(&o));

    let ext = tmp("ext8.json");
    assert!(run(&["construct", "external-lines", "8", "pgammal", "--out", s(&ext)]).status.success());
    assert_eq!(stdout(&run(&["order", s(&ext)])), "degree=28 order=1512\n");

    let quot = tmp("quot.json");
    assert!(run(&["construct", "tuple-quotient", "4", "--out", s(&quot)]).status.success());
    let text = std::fs::read_to_string(&quot).unwrap();
    assert!(text.contains(r#""labels": {"kind":"blocks""#), "{text}");
    let o = run(&["star", s(&quot), "--p", "2", "--report", "machine"]);
    assert!(stdout(&o).contains("verdict=false"));
}

#[test]
fn wreath_files() {
    let h = write("s3.txt", "degree 3\n(1,2,3)\n(1,2)\n");
    let k = write("c2.txt", "degree 2\n(1,2)\n");
    let out = tmp("s3wrc2.json");
    let o = run(&["wreath", "--mode", "product", s(&h), s(&k), "--out", s(&out)]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.contains("\"encoding\""));
    assert_eq!(stdout(&run(&["order", s(&out)])), "degree=9 order=72\n");
    let o = run(&["star", s(&out), "--p", "2", "--report", "machine"]);
    assert!(stdout(&o).contains("verdict=false"));
    let o = run(&["wreath", "--mode", "imprimitive", s(&h), s(&k)]);
    assert!(stdout(&o).contains("\"degree\": 6"));
}

#[test]
fn blocks_output() {
    let f = write("d12.txt", "degree 12\n(1,2,3,4,5,6)(7,12,11,10,9,8)\n(1,7)(2,8)(3,9)(4,10)(5,11)(6,12)\n");
    let o = run(&["blocks", s(&f), "--through", "1,4"]);
    assert_eq!(stdout(&o), "size=2 count=6 blocks={1,4}{2,5}{3,6}{7,10}{8,11}{9,12}\n");
    let prim = write("a5.txt", "degree 5\n(1,2,3,4,5)\n(1,2,3)\n");
    assert_eq!(stdout(&run(&["blocks", s(&prim)])), "primitive\n");
    assert!(!run(&["blocks", s(&prim), "--through", "1,9"]).status.success());
}

#[test]
fn byte_stable() {
    let args = ["verify-lemmas", "--suite", "families"];
    let (a, b) = (run(&args), run(&args));
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let args = ["construct", "diagonal", "A5"];
    let (a, b) = (run(&args), run(&args));
    assert_eq!(a.stdout, b.stdout);
    let seeded = ["--seed", "7", "construct", "diagonal", "A5"];
    assert!(run(&seeded).status.success());
}

#[test]
fn failures_exit_nonzero_without_output() {
    let bad = write("bad.txt", "degree 3\n(1,2)\n(1,5)\n");
    let o = run(&["order", s(&bad)]);
    assert!(!o.status.success());
    assert!(o.stdout.is_empty());
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("bad.txt:3:"), "{err}");

    let wrong = write("wrong.json", r#"{"degree": 3, "generators": [[2,3,1]], "expect": {"order": 6}}"#);
    assert!(!run(&["order", s(&wrong)]).status.success());
    assert!(!run(&["construct", "nonsense"]).status.success());
    assert!(!run(&["verify-lemmas", "--suite", "nonsense"]).status.success());

    let db = write("db.txt", "2 1 : (1,2)\n3 1 : (1,2,3)\n");
    let o = run(&["table", "--db", s(&db), "--degrees", "2..4"]);
    assert!(!o.status.success());
    assert!(o.stdout.is_empty());
}

#[test]
fn table_flags_mismatches() {
    // a wrong database: degree 3 lists only the cyclic group
    let db = write("short.txt", "3 1 : (1,2,3)\n");
    let o = run(&["table", "--db", s(&db), "--degrees", "3..3"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stdout(&o), "n\tt(n)\t(*)_2\t(*)_3\tstatus\n3\t1\t1\t1\tt(n) published 2; (*)_3 published 2\n");
}

#[test]
fn table_and_maximal_on_shipped_data() {
    let data = concat!(env!("CARGO_MANIFEST_DIR"), "/data/transitive_2_16.db");
    let o = run(&["table", "--db", data, "--degrees", "10..12", "--p", "2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "n\tt(n)\t(*)_2\tstatus\n10\t45\t5\tmatch\n11\t8\t2\tmatch\n12\t301\t96\tmatch\n");
    let o = run(&["maximal", "--degrees", "6..6"]);
    assert_eq!(stdout(&o), "6\t3 Wr 2\torder=18\tPASS\n6\t2 Wr 3\torder=24\tPASS\n6\tPSL(2,5)\torder=60\tPASS\n");
}
