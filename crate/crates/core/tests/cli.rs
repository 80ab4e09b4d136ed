use cocohopf::tasks::{Report, Status};
use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    if name == "tutorial.hopf" {
        root.join("fixtures").join(name)
    } else {
        root.join("tests/fixtures").join(name)
    }
}

fn run(file: &str, args: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cocohopf"))
        .arg(fixture(file))
        .args(args.split_whitespace())
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn center_of_s3_is_trivial() {
    let o = run("tutorial.hopf", "--task center --algebra KS3");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("centralizer: trivial"));
}

#[test]
fn classifier_of_c3() {
    let o = run("tutorial.hopf", "--task classifier --algebra KC3");
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("derivation dimension 0"));
    assert!(text.contains("automorphism group order 2"));
}

#[test]
fn unknown_object_exits_with_2() {
    let o = run("tutorial.hopf", "--task center --algebra NOPE");
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("unknown object"));
}

#[test]
fn unknown_task_exits_with_2() {
    let o = run("tutorial.hopf", "--task frobnicate --algebra KS3");
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("unknown task"));
}

#[test]
fn syntax_errors_report_a_location() {
    let o = run("error.hopf", "--task check-hopf --algebra KS3");
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("2:"), "{}", stderr(&o));
}

#[test]
fn missing_file_exits_with_2() {
    let o = run("absent.hopf", "");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn mathematical_failure_exits_with_1() {
    let o = run("fail.hopf", "--task quotient --algebra KS3 --sub T");
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("not normal"));
}

#[test]
fn passing_fixture_exits_with_0() {
    let o = run("pass.hopf", "--task check-hopf --algebra KC2");
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn json_reports_keep_input_order() {
    let o = run(
        "tutorial.hopf",
        "--json --degree 2 --task hz-compare --algebra Uh3 --task automorphisms --algebra KC4 --task functor-q --algebra Ux",
    );
    assert_eq!(o.status.code(), Some(0));
    let reports: Vec<Report> = serde_json::from_str(&stdout(&o)).unwrap();
    let tasks: Vec<&str> = reports.iter().map(|r| r.task.as_str()).collect();
    assert_eq!(tasks, ["hz-compare", "automorphisms", "functor-q"]);
    assert!(reports.iter().all(|r| r.status == Status::Pass));
    assert!(reports[0].payload.get().contains("\"degree\":2"));
}
