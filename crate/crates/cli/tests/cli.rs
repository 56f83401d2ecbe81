use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use cigraph::format::{parse_edge_list, parse_graph6, to_graph6, PosetDocument};
use cigraph::poset::Poset;
use cigraph::report::{Report, Status};
use tempfile::TempDir;

fn cigraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cigraph")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn json_report(o: &Output) -> Report {
    serde_json::from_str(&stdout(o)).expect("valid report JSON")
}

const CLAW: &str = "4 3\n0 1\n0 2\n0 3\n";
const P4: &str = "4 3\n0 1\n1 2\n2 3\n";

#[test]
fn gen_path_is_the_path_edge_list() {
    let o = cigraph(&["gen", "path", "4"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "4 3\n0 1\n1 2\n2 3\n");
}

#[test]
fn gen_fan_is_the_four_fan() {
    let o = cigraph(&["gen", "fan", "4"]);
    let g = parse_edge_list(&stdout(&o)).unwrap();
    assert_eq!((g.n(), g.m()), (5, 7));
    assert_eq!(g.degree(4), 4);
}

#[test]
fn claw_is_rejected_by_the_chordal_pipeline() {
    let dir = TempDir::new().unwrap();
    let claw = write(&dir, "claw.txt", CLAW);
    let o = cigraph(&["recognize", "--pipeline", "chordal", "--format", "json", s(&claw)]);
    assert_eq!(code(&o), 1);
    let r = json_report(&o);
    assert_eq!(r.verdicts.len(), 1);
    assert_eq!(r.verdicts[0].status, Status::NotCi);
    // three leaves of the star, pairwise non-adjacent and simplicial
    assert_eq!(r.verdicts[0].witness.as_deref(), Some(&["1".to_string(), "2".into(), "3".into()][..]));
}

#[test]
fn four_fan_is_recognised_and_its_certificate_verifies() {
    let dir = TempDir::new().unwrap();
    let fan = dir.path().join("fan4.txt");
    assert_eq!(code(&cigraph(&["gen", "fan", "4", "-o", s(&fan)])), 0);
    assert_eq!(code(&cigraph(&["recognize", s(&fan)])), 0);
    let cert = dir.path().join("fan4.poset");
    assert_eq!(code(&cigraph(&["certify", s(&fan), "-o", s(&cert)])), 0);
    let o = cigraph(&["verify", s(&fan), s(&cert)]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
}

#[test]
fn c4_graph6_is_not_ci_on_the_cograph_pipeline() {
    let dir = TempDir::new().unwrap();
    let c4 = write(&dir, "c4.g6", "Cl\n");
    let g = parse_graph6("Cl").unwrap();
    assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 3), (1, 2), (2, 3)]);
    let o = cigraph(&["recognize", "--pipeline", "cograph", "--format", "json", s(&c4)]);
    assert_eq!(code(&o), 1);
    assert_eq!(json_report(&o).verdicts[0].status, Status::NotCi);
    let o = cigraph(&["recognize", "--pipeline", "chordal", "--format", "json", s(&c4)]);
    assert_eq!(code(&o), 1);
    assert_eq!(json_report(&o).verdicts[0].status, Status::NotChordal);
}

#[test]
fn certify_complete_graph_gives_an_antichain() {
    let dir = TempDir::new().unwrap();
    let k4 = dir.path().join("k4.txt");
    cigraph(&["gen", "complete", "4", "-o", s(&k4)]);
    let o = cigraph(&["certify", "--format", "json", s(&k4)]);
    assert_eq!(code(&o), 0);
    let doc: PosetDocument = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc.elements.len(), 4);
    assert!(doc.covers.is_empty());
}

#[test]
fn verify_reports_the_first_mismatching_pair() {
    let dir = TempDir::new().unwrap();
    let p4 = write(&dir, "p4.txt", P4);
    let chain = write(&dir, "chain.poset", "elements 0 1 2 3\ncover 0 1\ncover 1 2\ncover 2 3\n");
    assert_eq!(code(&cigraph(&["verify", s(&p4), s(&chain)])), 0);
    let anti = write(&dir, "anti.poset", "elements 0 1 2 3\n");
    let o = cigraph(&["verify", s(&p4), s(&anti)]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("mismatch at pair (0, 2)"), "{}", stdout(&o));
    let small = write(&dir, "small.poset", "elements 0 1 2\n");
    assert_eq!(code(&cigraph(&["verify", s(&p4), s(&small)])), 1);
    let junk = write(&dir, "junk.poset", "elements 0 1 2 3\ncover 0 9\n");
    assert_eq!(code(&cigraph(&["verify", s(&p4), s(&junk)])), 2);
}

#[test]
fn random_ci_is_deterministic_and_verifies_against_its_poset() {
    let dir = TempDir::new().unwrap();
    let g1 = dir.path().join("g1.txt");
    let p1 = dir.path().join("p1.json");
    let o = cigraph(&["gen", "random-ci", "30", "--seed", "7", "-o", s(&g1), "--poset-out", s(&p1)]);
    assert_eq!(code(&o), 0);
    let o = cigraph(&["gen", "random-ci", "30", "--seed", "7"]);
    assert_eq!(stdout(&o), std::fs::read_to_string(&g1).unwrap());
    let o = cigraph(&["verify", s(&g1), s(&p1)]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let o = cigraph(&["gen", "random-ci", "30", "--seed", "8"]);
    assert_ne!(stdout(&o), std::fs::read_to_string(&g1).unwrap());
}

#[test]
fn generated_graphs_round_trip_through_both_formats() {
    for kind in
        ["path", "fan", "bowtie-chain", "random-chordal-ci", "random-chordal", "random-ci-cograph", "random-cograph"]
    {
        let el = stdout(&cigraph(&["gen", kind, "9", "--seed", "3"]));
        let g6 = stdout(&cigraph(&["gen", kind, "9", "--seed", "3", "--graph-format", "graph6"]));
        let a = parse_edge_list(&el).unwrap();
        let b = parse_graph6(&g6).unwrap();
        assert!(a.same_edges(&b), "{kind}");
    }
}

#[test]
fn generated_yes_instances_are_recognised() {
    let dir = TempDir::new().unwrap();
    for (kind, seed) in
        [("random-chordal-ci", "1"), ("random-chordal-ci", "2"), ("random-ci-cograph", "1"), ("bowtie-chain", "0")]
    {
        let g = dir.path().join(format!("{kind}-{seed}.txt"));
        cigraph(&["gen", kind, "25", "--seed", seed, "-o", s(&g)]);
        let cert = dir.path().join(format!("{kind}-{seed}.poset"));
        assert_eq!(code(&cigraph(&["certify", s(&g), "-o", s(&cert), "--format", "json"])), 0, "{kind}");
        assert_eq!(code(&cigraph(&["verify", s(&g), s(&cert)])), 0, "{kind}");
    }
}

#[test]
fn auto_reports_both_pipelines_on_a_chordal_cograph() {
    let dir = TempDir::new().unwrap();
    let bowtie = dir.path().join("bowtie.txt");
    cigraph(&["gen", "bowtie-chain", "1", "-o", s(&bowtie)]);
    let o = cigraph(&["recognize", "--format", "json", s(&bowtie)]);
    assert_eq!(code(&o), 0);
    let r = json_report(&o);
    let statuses: Vec<Status> = r.verdicts.iter().map(|v| v.status).collect();
    assert_eq!(statuses, vec![Status::ChordalCi, Status::CographCi]);
    let d = r.verdicts[1].decomposition.as_ref().unwrap();
    assert_eq!(d.len(), 1);
}

#[test]
fn auto_falls_back_to_the_cograph_pipeline() {
    let dir = TempDir::new().unwrap();
    // K1 joined with C4: not chordal, and a cograph whose root has one universal vertex
    let wheel = write(&dir, "w4.txt", "5 8\n0 1\n1 2\n2 3\n3 0\n4 0\n4 1\n4 2\n4 3\n");
    let o = cigraph(&["recognize", "--format", "json", s(&wheel)]);
    let r = json_report(&o);
    assert_eq!(r.verdicts[0].status, Status::NotChordal);
    assert_eq!(r.verdicts[1].status, Status::NotCi);
    assert_eq!(code(&o), 1);
}

#[test]
fn disconnected_input_has_its_own_status() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "two.txt", "4 2\n0 1\n2 3\n");
    let o = cigraph(&["recognize", "--format", "json", s(&g)]);
    assert_eq!(code(&o), 1);
    assert_eq!(json_report(&o).verdicts[0].status, Status::Disconnected);
}

#[test]
fn malformed_input_and_bad_usage_exit_2() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.txt", "3 2\n0 1\n");
    assert_eq!(code(&cigraph(&["recognize", s(&bad)])), 2);
    let bad6 = write(&dir, "bad.g6", "C\n");
    assert_eq!(code(&cigraph(&["recognize", s(&bad6)])), 2);
    assert_eq!(code(&cigraph(&["recognize", "/no/such/file"])), 2);
    assert_eq!(code(&cigraph(&["gen", "path", "0"])), 2);
    assert_eq!(code(&cigraph(&["frobnicate"])), 2);
    assert_eq!(code(&cigraph(&["recognize", "--pipeline", "bogus", s(&bad)])), 2);
}

#[test]
fn oracle_limits_and_cache() {
    let dir = TempDir::new().unwrap();
    let p7 = dir.path().join("p7.txt");
    cigraph(&["gen", "path", "7", "-o", s(&p7)]);
    assert_eq!(code(&cigraph(&["oracle", s(&p7)])), 2);
    assert_eq!(code(&cigraph(&["oracle", "--oracle-max-n", "8", s(&p7)])), 2);
    let cache = dir.path().join("cache.json");
    let first = cigraph(&["oracle", "--oracle-max-n", "7", "--cache", s(&cache), s(&p7)]);
    assert_eq!(code(&first), 0);
    let text = std::fs::read_to_string(&cache).unwrap();
    let key = to_graph6(&parse_edge_list(&std::fs::read_to_string(&p7).unwrap()).unwrap());
    assert!(text.contains(&format!("{key:?}")), "{text}");
    let second = cigraph(&["oracle", "--oracle-max-n", "7", "--cache", s(&cache), s(&p7)]);
    assert_eq!(stdout(&first), stdout(&second));
    let claw = write(&dir, "claw.txt", CLAW);
    assert_eq!(code(&cigraph(&["recognize", "--pipeline", "oracle", s(&claw)])), 1);
}

#[test]
fn oracle_answer_is_independent_of_worker_count() {
    let dir = TempDir::new().unwrap();
    let fan = dir.path().join("fan.txt");
    cigraph(&["gen", "fan", "5", "-o", s(&fan)]);
    let one = cigraph(&["oracle", "--format", "json", s(&fan)]);
    let four = cigraph(&["oracle", "--format", "json", "--workers", "4", s(&fan)]);
    assert_eq!(code(&one), 0);
    assert_eq!(stdout(&one), stdout(&four));
}

#[test]
fn recognition_is_deterministic_and_engine_independent() {
    let dir = TempDir::new().unwrap();
    let g = dir.path().join("g.txt");
    cigraph(&["gen", "random-chordal-ci", "40", "--seed", "5", "-o", s(&g)]);
    let a = cigraph(&["recognize", "--format", "json", s(&g)]);
    let b = cigraph(&["recognize", "--format", "json", s(&g)]);
    assert_eq!(stdout(&a), stdout(&b));
    let c = cigraph(&["recognize", "--format", "json", "--mcs", s(&g)]);
    assert_eq!(code(&a), code(&c));
}

#[test]
fn labelled_edge_lists_keep_their_labels() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "bowtie.txt", "5 6\na b\na c\nb c\nc d\nc e\nd e\n");
    let o = cigraph(&["certify", "--format", "json", s(&g)]);
    assert_eq!(code(&o), 0);
    let doc: PosetDocument = serde_json::from_str(&stdout(&o)).unwrap();
    let mut names = doc.elements.clone();
    names.sort();
    assert_eq!(names, ["a", "b", "c", "d", "e"]);
    let p: Poset = doc.to_poset().unwrap();
    assert_eq!(p.height(), 3);
    let dot = stdout(&cigraph(&["recognize", "--pipeline", "chordal", "--format", "dot", s(&g)]));
    assert!(dot.starts_with("digraph hasse"));
    assert!(dot.contains("\"c\""));
}

#[test]
fn stdin_input() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_cigraph"))
        .args(["recognize", "-"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    use std::io::Write as _;
    child.stdin.take().unwrap().write_all(P4.as_bytes()).unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("status: chordal_ci"));
}
