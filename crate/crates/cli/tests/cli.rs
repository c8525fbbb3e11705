use std::fs;
use std::path::Path;
use std::process::{Command, Output};

const N5: &str = "lattice n5
elements 0 a b c 1
covers 0<a a<b b<1 0<c c<1
";

const O6: &str = "lattice o6
elements 0 p q q' p' 1
covers 0<p 0<q p<q' q<p' q'<1 p'<1
ortho 0:1 p:p' q:q'
prob 0=0 p=1/3 q=1/2 q'=1/2 p'=2/3 1=1
";

fn primlat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_primlat")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn reduce_four_atoms() {
    let o = primlat(&["reduce", "--n", "4"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(out.lines().last(), Some("count: 10"));
    assert_eq!(out.lines().count(), 11);
}

#[test]
fn reduce_above_five_needs_opt_in() {
    assert_eq!(primlat(&["reduce", "--n", "6"]).status.code(), Some(1));
}

#[test]
fn enumerate_six() {
    let o = primlat(&["enumerate", "--n", "6"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "lattices: 15 modular: 8 distributive: 5");
}

#[test]
fn enumerate_list_round_trips_through_classify() {
    let dir = tempfile::tempdir().unwrap();
    let out = stdout(&primlat(&["enumerate", "--n", "5", "--list"]));
    let docs: Vec<&str> = out.split("\n\n").filter(|d| d.starts_with("lattice ")).collect();
    assert_eq!(docs.len(), 5);
    for (i, d) in docs.iter().enumerate() {
        let f = write(dir.path(), &format!("l{i}.lat"), d);
        assert!(primlat(&["classify", &f]).status.success(), "{d}");
    }
}

#[test]
fn classify_n5() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "n5.lat", N5);
    let o = primlat(&["classify", &f]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("modular: false"));
    assert!(out.contains("distributive: false"));
}

#[test]
fn format_errors_carry_positions() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "bad.lat", "lattice x\nelements a a\n");
    let o = primlat(&["classify", &f]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("bad.lat:2:12:"), "{}", stderr(&o));
}

#[test]
fn usage_and_missing_files_exit_two() {
    assert_eq!(primlat(&["reduce"]).status.code(), Some(2));
    assert_eq!(primlat(&["classify", "/nonexistent/x.lat"]).status.code(), Some(2));
    assert_eq!(primlat(&["project", "--n", "3", "--level", "L9", "/dev/null"]).status.code(), Some(2));
}

#[test]
fn ortho_and_negation_on_o6() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "o6.lat", O6);
    let out = stdout(&primlat(&["ortho", &f]));
    assert!(out.contains("class: orthocomplemented"));
    let out = stdout(&primlat(&["negation", &f]));
    let orth = out.lines().find(|l| l.starts_with("orthogonal:")).unwrap();
    assert_eq!(orth.split_whitespace().count() - 1, 9);
    let n5 = write(dir.path(), "n5.lat", N5);
    assert_eq!(stdout(&primlat(&["ortho", &n5])).trim(), "orthocomplementations: 0");
}

#[test]
fn metric_rejects_o6_height_and_lists_cube_balls() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "o6.lat", O6);
    assert_eq!(primlat(&["metric", &f]).status.code(), Some(1));
    let cube = "lattice cube
elements 0 a b c ab ac bc 1
covers 0<a 0<b 0<c a<ab a<ac b<ab b<bc c<ac c<bc ab<1 ac<1 bc<1
";
    let f = write(dir.path(), "cube.lat", cube);
    let o = primlat(&["metric", &f, "--ball", "b", "--radius", "1"]);
    assert!(o.status.success());
    let ball = stdout(&o).lines().find(|l| l.starts_with("ball")).unwrap().to_string();
    assert_eq!(ball, "ball\tb\t1\t0 b ab bc");
}

#[test]
fn probability_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "o6.lat", O6);
    let o = primlat(&["probability", &f]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("additive"));
    assert!(primlat(&["probability", &f, "--seed", "3"]).status.success());
}

#[test]
fn dposet_and_primorial() {
    let o = primlat(&["dposet", "--n", "4"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("triples: 20"));
    let out = stdout(&primlat(&["primorial", "--n", "3"]));
    assert!(out.starts_with("L1\t{} {1,2,3}\n"));
    assert!(out.contains("\nD3\t"));
}

#[test]
fn primorial_choices_file() {
    let dir = tempfile::tempdir().unwrap();
    let c = write(dir.path(), "choices.txt", "1\n0\n");
    let a = stdout(&primlat(&["primorial", "--n", "3", "--choices", &c]));
    let b = stdout(&primlat(&["primorial", "--n", "3"]));
    assert_ne!(a, b);
    let bad = write(dir.path(), "bad.txt", "1\n{} {1,2,3}\n");
    assert_eq!(primlat(&["primorial", "--n", "3", "--choices", &bad]).status.code(), Some(1));
}

#[test]
fn project_sequence_file() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "seq.txt", "{1} {2,3} # tail\n{1,2,3}\n");
    let o = primlat(&["project", "--n", "3", "--level", "L1", "--method", "zero", &f]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "position\tinput\tL1:zero\n1\t{1}\t{}\n2\t{2,3}\t{}\n3\t{1,2,3}\t{1,2,3}\n");
}

#[test]
fn analyze_is_deterministic_and_reports_bad_symbols() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "s.fa", ">r1\nACGTAC\n>r2\nggcc\n");
    let a = primlat(&["analyze", "--preset", "acgt-atcg", "--fasta", &f, "--method", "ceiling"]);
    let b = primlat(&["analyze", "--preset", "acgt-atcg", "--fasta", &f, "--method", "ceiling"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let out = stdout(&a);
    assert!(out.starts_with("record\tposition\tinput\tL1:ceiling"));
    assert_eq!(out.lines().count(), 11);
    let l2 = out.lines().nth(1).unwrap().split('\t').nth(4).unwrap().to_string();
    assert_eq!(l2, "A|T");
    let bad = write(dir.path(), "bad.fa", ">x\nACZT\n");
    let o = primlat(&["analyze", "--preset", "acgt-atcg", "--fasta", &bad]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains('Z'));
}

#[test]
fn hasse_outputs_cover_edges() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "n5.lat", N5);
    let out = stdout(&primlat(&["hasse", &f]));
    assert!(out.starts_with("digraph \"n5\""));
    assert_eq!(out.matches(" -> ").count(), 5);
    assert!(stdout(&primlat(&["hasse", "--primorial", "3"])).contains("\"L1\""));
}
