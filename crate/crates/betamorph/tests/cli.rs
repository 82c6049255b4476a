use std::io::Write;
use std::process::{Command, Output};

fn betamorph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_betamorph")).args(args).output().expect("run betamorph")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn certify_headlines() {
    let o = betamorph(&["certify", "--beta", "multinacci:4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("ISOMORPHIC (n=4): identical 4×4 Markov matrices\n"));

    let o = betamorph(&["certify", "--beta", "rational:3/2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("NOT ISOMORPHIC: n=3, witness k=2, λ(I⁺)=1/4, λ(I⁻)=0\n"));

    let o = betamorph(&["certify", "--beta", "rational:17/10"]);
    assert!(stdout(&o).starts_with("NOT ISOMORPHIC: n=3, witness k=6,"));
}

#[test]
fn exit_codes_for_bad_input() {
    for args in [
        &["certify", "--beta", "rational:5/2"][..],
        &["certify", "--beta", "multinacci:1"],
        &["certify", "--beta", "poly:x"],
        &["verify", "kappa", "--beta", "multinacci:3"],
        &["spectrum", "--beta", "rational:3/2", "--n", "40"],
        &["certify"],
    ] {
        assert_eq!(betamorph(args).status.code(), Some(2), "{args:?}");
    }
    assert_eq!(betamorph(&["verify", "nonsense", "--beta", "multinacci:3"]).status.code(), Some(2));
}

#[test]
fn reports_are_reproducible() {
    for args in [
        &["certify", "--beta", "multinacci:3", "--format", "json"][..],
        &["spectrum", "--beta", "rational:19/10", "--map", "S", "--n", "4", "--format", "csv"],
        &["verify", "iota", "--beta", "rational:17/10", "--format", "text"],
    ] {
        assert_eq!(betamorph(args).stdout, betamorph(args).stdout, "{args:?}");
    }
}

#[test]
fn json_reports_describe_themselves() {
    let o = betamorph(&["verify", "orbit-parity", "--beta", "multinacci:6", "--n", "6", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["beta_spec"], "multinacci:6");
    assert_eq!(v["regime"], "multinacci(n=6)");
    assert_eq!(v["command"], "verify orbit-parity");
    assert!(v["versions"]["betamorph-core"].is_string());
    assert_eq!(v["result"]["equality"], true);
    assert_eq!(v["result"]["passed"], true);
}

#[test]
fn census_and_spectrum_examples() {
    let o = betamorph(&["verify", "kappa", "--beta", "rational:19/10", "--n", "4", "--m", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("15 branches"));

    let o = betamorph(&["verify", "iota", "--beta", "rational:17/10", "--n", "3", "--m", "3", "--format", "csv"]);
    let text = stdout(&o);
    assert!(text.contains("\n3,\"(1,3,2,1)\",\"(1,3,2,1)\",7,true\n"), "{text}");

    let o = betamorph(&["spectrum", "--beta", "rational:3/2", "--map", "T", "--n", "3", "--format", "csv"]);
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).skip(1).collect();
    assert_eq!(rows.len(), 4);
    assert!(rows.contains(&"0.75,1,2,3/4,1,T^2(1),1"), "{text}");

    let o = betamorph(&["spectrum", "--beta", "rational:19/10", "--map", "S", "--n", "4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["result"]["max_value"], 15);
}

#[test]
fn batch_keeps_input_order() {
    let mut file = std::env::temp_dir();
    file.push(format!("betamorph-batch-{}.txt", std::process::id()));
    let specs = ["rational:19/10", "# comment", "", "multinacci:2", "rational:3/2", "rational:17/10", "multinacci:5"];
    std::fs::File::create(&file).unwrap().write_all(specs.join("\n").as_bytes()).unwrap();
    let o = betamorph(&["certify", "--beta-list", file.to_str().unwrap(), "--format", "json"]);
    std::fs::remove_file(&file).ok();
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let got: Vec<&str> = v.as_array().unwrap().iter().map(|d| d["beta_spec"].as_str().unwrap()).collect();
    assert_eq!(got, ["rational:19/10", "multinacci:2", "rational:3/2", "rational:17/10", "multinacci:5"]);
}

#[test]
fn out_writes_file() {
    let mut file = std::env::temp_dir();
    file.push(format!("betamorph-out-{}.csv", std::process::id()));
    let o = betamorph(&["orbit", "--beta", "rational:17/10", "--depth", "3", "--format", "csv", "--out", file.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&file).unwrap();
    std::fs::remove_file(&file).ok();
    assert!(text.ends_with("k,exact,decimal\n0,1,1\n1,3/10,0.3\n2,49/100,0.49\n3,167/1000,0.167\n"), "{text}");
}

#[test]
fn markov_command() {
    let o = betamorph(&["markov", "--beta", "multinacci:3", "--map", "T", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["result"]["T"]["matrix"], serde_json::json!([[1, 1, 1], [1, 0, 0], [0, 1, 0]]));
    let o = betamorph(&["markov", "--beta", "rational:3/2", "--map", "T", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["result"]["T"].is_null());
}
