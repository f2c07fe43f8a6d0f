use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_colourful"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write_temp(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("colourful-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, contents).unwrap();
    p
}

const TWO_BALLS: &str = "cgf 3 4\n3 4\n3 4\n3 4\n4 3\n";
const TORUS: &str = "cgf 2 6\n4 5 6\n5 6 4\n6 4 5\n";
const LENS_LIKE: &str = "cgf 3 4\n3 4\n4 3\n3 4\n4 3\n";

#[test]
fn manifold_check_on_two_balls() {
    let p = write_temp("two_balls.cgf", TWO_BALLS);
    let o = run(&["check-manifold", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "manifold: yes (d=3 exact)\n");
    let o = run(&["check-sphere", p.to_str().unwrap(), "--certificate"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("certificate: trace: [(1,1,4)]"));
}

#[test]
fn reduce_dipole() {
    let o = run_stdin(&["reduce", "-"], "cgf 3 2\n2\n2\n2\n2\n");
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("trace: []"));
    assert!(s.contains("reached dipole: true"));
}

#[test]
fn generated_graphs_pipe_into_checks() {
    let g = run(&["gen", "--d", "3", "--k", "2", "--random-perms", "--seed", "7"]);
    assert_eq!(g.status.code(), Some(0));
    let text = stdout(&g);
    let o = run_stdin(&["check-manifold", "-"], &text);
    assert_eq!(o.status.code(), Some(0));
    for cmd in ["validate", "kappa", "genus", "export-dot"] {
        let o = run_stdin(&[cmd, "-"], &text);
        assert_eq!(o.status.code(), Some(0), "{cmd}");
    }
    assert_eq!(text, stdout(&run(&["gen", "--d", "3", "--k", "2", "--random-perms", "--seed", "7"])));
    let ext = run(&["gen", "--d", "3", "--k", "2", "--sigma", "1,2", "--tau", "1,2", "--planar-extend", "5"]);
    assert_eq!(ext.status.code(), Some(0));
    assert!(stdout(&ext).contains("cgf 5 24"));
}

#[test]
fn verdict_exit_codes() {
    let o = run_stdin(&["check-sphere", "-", "--certificate"], TORUS);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("genus: ({1,2,3}, 1, 1)"));
    let o = run_stdin(&["check-sphere", "-"], LENS_LIKE);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stdout(&o), "sphere: unknown (d=3 partial)\n");
    let o = run_stdin(&["check-sphere", "-"], "cgf 3 4\n3 4\n3 4\n3 4\n3 4\n");
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn error_exit_codes() {
    let o = run_stdin(&["validate", "-"], "cgf 3 4\n3 4\n3 x\n");
    assert_eq!(o.status.code(), Some(65));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3, token 2"));
    assert_eq!(run(&["validate", "/nonexistent/graph.cgf"]).status.code(), Some(66));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(64));
    assert_eq!(run(&["gen", "--d", "3", "--k", "2", "--sigma", "2,1", "--tau", "1,2"]).status.code(), Some(64));
    assert_eq!(run(&["random", "--d", "3", "--n", "5"]).status.code(), Some(64));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn census_rows_are_stable() {
    let o = run(&["census", "--d", "3", "--n", "4", "--csv"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.starts_with("all,16\npropertyP,16\nmanifold,16\n"));
    assert!(s.contains("labelled_manifold,45\n"));
    assert_eq!(s, stdout(&run(&["census", "--d", "3", "--n", "4", "--csv"])));
}

#[test]
fn lemma_and_bound_commands() {
    let o = run(&["verify-lemmas", "--d", "3", "--n", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("pair bound n/6: checked 64 violations 0"));
    let c = write_temp("hexagon.cgf", "cgf 1 6\n4 5 6\n5 6 4\n");
    let o = run(&["bound-check", "--cgf2", c.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("violations: 0"));
    let o = run(&["stats-vn", "--kmax", "2", "--samples", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 3);
}

#[test]
fn residues_and_betti() {
    let o = run_stdin(&["residues", "-", "--colours", "1,2,3"], TWO_BALLS);
    assert_eq!(stdout(&o), "colours: {1,2,3}\nkappa: 2\n1: w1 b1\n2: w2 b2\n");
    let o = run_stdin(&["betti", "-"], TWO_BALLS);
    assert_eq!(stdout(&o), "betti: (1, 0, 0, 1)\n");
    let o = run_stdin(&["export-dot", "-"], TWO_BALLS);
    assert!(stdout(&o).contains("w2 -- b1 [color=orange, label=\"4\"];"));
}
