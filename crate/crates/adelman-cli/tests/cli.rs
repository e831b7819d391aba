use std::path::PathBuf;

use adelman_cli::{run, Cli, Command, DiagramFile};

fn write_file(dir: &tempfile::TempDir, name: &str, contents: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn cli(command: Command) -> Cli {
    Cli {
        json: false,
        command,
    }
}

const OBJECT_A: &str = r#"{"kind": "adel-object",
 "x0": {"dom": 2, "cod": 2, "mat": [[4, 0], [0, 1]]},
 "x1": {"dom": 2, "cod": 1, "mat": [[1], [2]]}}"#;

const MORPHISM_010: &str = r#"{"kind": "adel-morphism",
 "source": {"x0": {"dom": 0, "cod": 1, "mat": {"rows": 0, "cols": 1}},
            "x1": {"dom": 1, "cod": 1, "mat": [[2]]}},
 "target": {"x0": {"dom": 0, "cod": 1, "mat": {"rows": 0, "cols": 1}},
            "x1": {"dom": 1, "cod": 0, "mat": {"rows": 1, "cols": 0}}},
 "f0": {"dom": 0, "cod": 0, "mat": {"rows": 0, "cols": 0}},
 "f1": {"dom": 1, "cod": 1, "mat": [[1]]},
 "f2": {"dom": 1, "cod": 0, "mat": {"rows": 1, "cols": 0}}}"#;

const ZERO_010: &str = r#"{"kind": "adel-morphism",
 "source": {"x0": {"dom": 0, "cod": 1, "mat": {"rows": 0, "cols": 1}},
            "x1": {"dom": 1, "cod": 1, "mat": [[2]]}},
 "target": {"x0": {"dom": 0, "cod": 1, "mat": {"rows": 0, "cols": 1}},
            "x1": {"dom": 1, "cod": 0, "mat": {"rows": 1, "cols": 0}}},
 "f0": {"dom": 0, "cod": 0, "mat": {"rows": 0, "cols": 0}},
 "f1": {"dom": 1, "cod": 1, "mat": [[0]]},
 "f2": {"dom": 1, "cod": 0, "mat": {"rows": 1, "cols": 0}}}"#;

#[test]
fn hat_e_reports_z_mod_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_file(&dir, "a.json", OBJECT_A);
    let out = run(&cli(Command::HatE { a: path })).unwrap();
    assert_eq!(out.text, vec!["Z/2".to_string()]);
    assert_eq!(out.json["display"], "Z/2");
    assert_eq!(out.json["invariant_factors"]["torsion"][0], 2);
}

#[test]
fn equal_detects_the_nonzero_class() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_file(&dir, "f.json", MORPHISM_010);
    let zero = write_file(&dir, "zero.json", ZERO_010);
    let out = run(&cli(Command::Equal { f: zero, g: f })).unwrap();
    assert_eq!(out.text[0], "NOT-EQUAL");
    assert_eq!(out.json["equal"], false);
}

#[test]
fn equal_prints_a_witness_for_equal_morphisms() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_file(&dir, "f.json", ZERO_010);
    let g = write_file(&dir, "g.json", ZERO_010);
    let out = run(&cli(Command::Equal { f, g })).unwrap();
    assert_eq!(out.text[0], "EQUAL");
    assert!(out.json["witness"].is_object());
}

#[test]
fn hat_e_mor_sends_the_class_to_zero() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_file(&dir, "f.json", MORPHISM_010);
    let out = run(&cli(Command::HatEMor { f })).unwrap();
    assert_eq!(out.json["is_zero"], true);
}

#[test]
fn snf_reports_the_invariant_diagonal() {
    let dir = tempfile::tempdir().unwrap();
    let m = write_file(&dir, "m.json", "[[4, 0], [0, 1]]");
    let out = run(&cli(Command::Snf { m })).unwrap();
    assert_eq!(out.json["d"], serde_json::json!([[1, 0], [0, 4]]));
}

#[test]
fn kernel_prints_the_block_formula_result() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_file(&dir, "f.json", MORPHISM_010);
    let out = run(&cli(Command::Kernel {
        f,
        simplify: true,
    }))
    .unwrap();
    assert!(out.json["object"].is_object());
    assert!(out.json["simplified"].is_object());
}

#[test]
fn mismatched_kind_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let g = write_file(&dir, "g.json", r#"{"kind": "group", "gens": 1, "rels": [[6]]}"#);
    assert!(run(&cli(Command::IsMono { f: g })).is_err());
}

#[test]
fn is_iso_accepts_the_identity() {
    let identity_triple = r#"{"kind": "adel-morphism",
     "source": {"x0": {"dom": 0, "cod": 1, "mat": {"rows": 0, "cols": 1}},
                "x1": {"dom": 1, "cod": 0, "mat": {"rows": 1, "cols": 0}}},
     "target": {"x0": {"dom": 0, "cod": 1, "mat": {"rows": 0, "cols": 1}},
                "x1": {"dom": 1, "cod": 0, "mat": {"rows": 1, "cols": 0}}},
     "f0": {"dom": 0, "cod": 0, "mat": {"rows": 0, "cols": 0}},
     "f1": {"dom": 1, "cod": 1, "mat": [[1]]},
     "f2": {"dom": 0, "cod": 0, "mat": {"rows": 0, "cols": 0}}}"#;
    let dir = tempfile::tempdir().unwrap();
    let f = write_file(&dir, "id.json", identity_triple);
    let out = run(&cli(Command::IsIso { f })).unwrap();
    assert_eq!(out.json["iso"], true);
    assert!(out.json["mono_witness"].is_object());
    assert!(out.json["epi_witness"].is_object());
}

#[test]
fn seed_env_var_is_honoured() {
    std::env::set_var("ADELMAN_SEED", "0x77");
    let out = run(&cli(Command::Axioms {
        seed: None,
        count: Some(2),
    }))
    .unwrap();
    std::env::remove_var("ADELMAN_SEED");
    assert_eq!(out.json["seed"], 0x77);
    // and an explicit --seed takes precedence over the environment
    let out = run(&cli(Command::Axioms {
        seed: Some("5".into()),
        count: Some(2),
    }))
    .unwrap();
    assert_eq!(out.json["seed"], 5);
}

#[test]
fn axioms_is_deterministic_and_clean() {
    let run_once = || {
        let out = run(&cli(Command::Axioms {
            seed: Some("0xADE1".into()),
            count: Some(3),
        }))
        .unwrap();
        (out.failures, out.json)
    };
    let (failures, first) = run_once();
    let (_, second) = run_once();
    assert_eq!(failures, 0);
    assert_eq!(first, second);
}

#[test]
fn axioms_with_default_counts_is_clean() {
    let out = run(&cli(Command::Axioms {
        seed: Some("0xADE1".into()),
        count: None,
    }))
    .unwrap();
    assert_eq!(out.failures, 0);
    assert_eq!(out.json["failures"], 0);
}

#[test]
fn diagram_files_round_trip() {
    let samples = [
        OBJECT_A,
        MORPHISM_010,
        r#"{"kind": "group", "gens": 2, "rels": [[4, 0], [0, 1]]}"#,
        r#"{"kind": "group-morphism",
            "dom": {"gens": 1, "rels": [[4]]},
            "cod": {"gens": 1, "rels": [[2]]},
            "mat": [[1]]}"#,
    ];
    for sample in samples {
        let parsed: DiagramFile = serde_json::from_str(sample).unwrap();
        let text = serde_json::to_string(&parsed).unwrap();
        let reparsed: DiagramFile = serde_json::from_str(&text).unwrap();
        let text_again = serde_json::to_string(&reparsed).unwrap();
        assert_eq!(text, text_again);
    }
}
