use std::process::{Command, Output};

use dihedral_commutation::table::{parse_csv, parse_json, Verified};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dihedral-commutation"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn order_reports() {
    let text = stdout(&["order", "--m", "15"]);
    assert!(text.contains("|P(D_15)| = 75"));
    assert!(text.contains("|Λ(D_15)| = 75"));
    let csv = stdout(&["order", "--m", "36", "--format", "csv"]);
    assert_eq!(csv, "m,side,order,t\n36,right,63,5\n36,left,90,8\n");
    let json: serde_json::Value = serde_json::from_str(&stdout(&["order", "--m", "36", "--format", "json"])).unwrap();
    assert_eq!(json["p_order"], 63);
    assert_eq!(json["lambda_order"], 90);
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        vec!["order", "--m", "2"],
        vec!["table", "--from", "10", "--to", "3"],
        vec!["table", "--from", "3", "--to", "5000", "--verify", "pairs"],
        vec!["order", "--m", "7", "--side", "up"],
        vec!["frobnicate"],
        vec![],
    ] {
        assert_eq!(run(&args).status.code(), Some(1), "{args:?}");
    }
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn single_row_table() {
    let rows = parse_csv(stdout(&["table", "--from", "3", "--to", "3"]).as_bytes()).unwrap();
    assert_eq!(rows.len(), 1);
    assert_eq!((rows[0].p_order, rows[0].lambda_order), (6, 9));
}

#[test]
fn verification_levels() {
    let raw = parse_csv(stdout(&["table", "--from", "126", "--to", "130", "--verify", "raw"]).as_bytes()).unwrap();
    let levels: Vec<Verified> = raw.iter().map(|r| r.verified).collect();
    assert_eq!(levels[..3], [Verified::RawVerified; 3]);
    assert_eq!(levels[3..], [Verified::PairsVerified; 2]);
    let default = parse_csv(stdout(&["table", "--from", "511", "--to", "514"]).as_bytes()).unwrap();
    let levels: Vec<Verified> = default.iter().map(|r| r.verified).collect();
    assert_eq!(
        levels,
        [Verified::PairsVerified, Verified::PairsVerified, Verified::FormulaOnly, Verified::FormulaOnly]
    );
}

#[test]
fn output_is_deterministic_and_round_trips() {
    for format in ["csv", "json"] {
        for meta in [false, true] {
            let mut args = vec!["table", "--from", "3", "--to", "60", "--format", format];
            if meta {
                args.push("--meta");
            }
            let first = stdout(&args);
            assert_eq!(first, stdout(&args));
            let rows = if format == "csv" {
                parse_csv(first.as_bytes()).unwrap()
            } else {
                parse_json(first.as_bytes()).unwrap()
            };
            assert_eq!(rows.len(), 58);
            assert!(rows.windows(2).all(|w| w[0].m < w[1].m));
            assert_eq!(first.starts_with('#'), meta && format == "csv");
        }
    }
}

#[test]
fn decompositions() {
    let right = stdout(&["decompose", "--m", "8", "--side", "right", "--format", "csv"]);
    assert_eq!(
        right,
        "side,a,d,exponent,size,running_total\nright,0,1,0,4,4\nright,6,1,1,4,8\nright,4,2,2,2,10\n"
    );
    let left = stdout(&["decompose", "--m", "8", "--side", "left", "--format", "csv"]);
    assert!(left.contains("left,2,1,1,4,8"));
    let five = stdout(&["decompose", "--m", "5", "--side", "right", "--format", "csv"]);
    let sizes: Vec<&str> = five.lines().skip(1).map(|l| l.split(',').nth(4).unwrap()).collect();
    assert_eq!(sizes, ["5"; 5]);
    assert!(five.trim_end().ends_with(",25"));
}

#[test]
fn central_series_and_orbits() {
    assert_eq!(stdout(&["central-series", "--m", "12", "--format", "csv"]), "u,order\n0,1\n1,2\n2,4\n");
    assert_eq!(
        stdout(&["orbit", "--m", "12", "--format", "csv"]),
        "x,m,index,period,order\n10,12,2,1,\n2,12,2,2,\n"
    );
    assert_eq!(
        stdout(&["orbit", "--m", "7", "--x", "-2", "--format", "csv"]),
        "x,m,index,period,order\n5,7,1,6,6\n"
    );
}

#[test]
fn isomorphism_subcommand() {
    assert!(stdout(&["iso", "--m", "15"]).contains("not isomorphic"));
    assert!(stdout(&["iso", "--m", "10", "--with", "5", "--side", "left"]).contains(": isomorphic"));
    assert!(stdout(&["iso", "--m", "17", "--budget", "0"]).contains("inconclusive"));
}

#[test]
fn claims_pass() {
    let out = stdout(&["verify-claims"]);
    assert!(out.lines().all(|l| l.starts_with("PASS")), "{out}");
    assert!(out.contains("D_8 equal orders  (10 = 10)"));
}
