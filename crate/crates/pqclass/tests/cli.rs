use std::process::{Command, Output};

fn pqclass(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pqclass")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn pattern_accepts_negative_entries() {
    let o = pqclass(&["perm", "pattern", "10", "-4", "7", "0"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "4132");
}

#[test]
fn poset_lines_are_canonical() {
    let o = pqclass(&["poset", "31524"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines, ["1 < 2", "1 < 4", "3 < 1", "3 < 2", "3 < 4", "5 < 2", "5 < 4"]);
}

#[test]
fn allowable_exit_codes() {
    for method in ["sim", "pairs", "poset"] {
        let yes = pqclass(&["allowable", "21", "12", "--method", method]);
        assert_eq!(yes.status.code(), Some(0), "{method}");
        let no = pqclass(&["allowable", "12", "21", "--method", method]);
        assert_eq!(no.status.code(), Some(1), "{method}");
    }
    assert_eq!(pqclass(&["allowable", "12", "321"]).status.code(), Some(2));
    assert_eq!(pqclass(&["allowable", "1x", "12"]).status.code(), Some(2));
}

#[test]
fn outputs_and_inputs_agree() {
    let outs = stdout(&pqclass(&["outputs", "321"]));
    assert_eq!(outs.lines().count(), 5);
    for tau in outs.lines() {
        assert!(stdout(&pqclass(&["inputs", tau])).lines().any(|l| l == "321"));
    }
}

#[test]
fn membership_exit_codes() {
    assert_eq!(pqclass(&["member", "--class", "231", "2431"]).status.code(), Some(1));
    assert_eq!(pqclass(&["member", "--class", "231", "2413"]).status.code(), Some(0));
    assert_eq!(pqclass(&["dual-member", "--class", "123", "321"]).status.code(), Some(0));
    assert_eq!(pqclass(&["dual-member", "--class", "123", "123"]).status.code(), Some(1));
    assert_eq!(pqclass(&["dual-member", "--class", "123", "1 2 3 4 5 6 7 8 9 10 11"]).status.code(), Some(2));
}

#[test]
fn basis_json() {
    let o = pqclass(&["basis", "--class", "312", "--max-len", "6", "--json", "--jobs", "2"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["basis"], serde_json::json!(["3142", "4132"]));
    assert_eq!(v["complete_up_to"], 6);
    assert!(v["examined"].as_u64().unwrap() > 0);
}

#[test]
fn family_member() {
    let o = pqclass(&["family", "--m", "12"]);
    assert_eq!(stdout(&o).trim(), "2 13 4 1 6 3 8 5 10 12 7 11 9");
    assert_eq!(pqclass(&["family", "--m", "8", "--verify"]).status.code(), Some(0));
    assert_eq!(pqclass(&["family", "--m", "7"]).status.code(), Some(2));
}

#[test]
fn verify_exit_codes() {
    let o = pqclass(&["verify", "singles", "--max-len", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("singles: 6/6 checks passed"));
    let o = pqclass(&["verify", "singles", "--max-len", "5", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["suite_name"], "singles");
    assert_eq!(pqclass(&["verify", "no-such-suite"]).status.code(), Some(2));
}
