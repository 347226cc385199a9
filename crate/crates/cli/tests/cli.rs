use std::process::{Command, Output};

fn cyalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cyalg"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn lr_example() {
    let o = cyalg(&["lr", "2,1", "2,1", "3,1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "1");
    assert_eq!(stdout(&cyalg(&["lr", "2,1", "2,1", "2,1"])).trim(), "0");
}

#[test]
fn trace_of_degree_two_is_k1() {
    let o = cyalg(&["trace", "1,1"]);
    assert!(o.status.success());
    let env = cyalg::env::sl3_squared().unwrap();
    let g = cyalg::env::build_z2_generators(&env).unwrap();
    assert_eq!(stdout(&o).trim(), env.sys.to_text(&g.kl()[0]));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(cyalg(&["verify", "bogus"]).status.code(), Some(2));
    assert_eq!(cyalg(&["nonsense"]).status.code(), Some(2));
    assert_eq!(cyalg(&["lr", "9,9", "2,1", "2,1"]).status.code(), Some(2));
    assert_eq!(cyalg(&["trace", "1,3"]).status.code(), Some(2));
}

#[test]
fn failing_check_exits_1() {
    assert_eq!(cyalg(&["verify", "heun", "racah"]).status.code(), Some(1));
}

#[test]
fn group_report() {
    let o = cyalg(&["verify", "e6", "group", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let r: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(r["status"], "pass");
    assert_eq!(r["details"]["order"], 51840);
    assert_eq!(r["details"]["extended_order"], 103680);
}

#[test]
fn json_is_reproducible_for_a_seed() {
    let a = cyalg(&["verify", "differential", "--json", "--seed", "11"]);
    let b = cyalg(&["verify", "differential", "--json", "--seed", "11"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn omega_image_oracle_says_symbolic_not_run() {
    let o = cyalg(&["verify", "omega-image", "--json"]);
    assert!(o.status.success());
    let r: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(r["note"], "symbolic mode not run");
}

#[test]
fn group_cache_round_trip() {
    let dir = std::env::temp_dir().join(format!("cyalg-cache-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let d = dir.to_str().unwrap();
    for _ in 0..2 {
        let o = cyalg(&["verify", "e6", "group", "--cache-dir", d]);
        assert!(o.status.success());
    }
    assert!(dir.join("weyl-e6.txt").exists());
    std::fs::remove_dir_all(&dir).unwrap();
}
