//! Runs every example binary that `cargo test` has built.

use std::path::PathBuf;
use std::process::Command;

const EXAMPLES: [&str; 9] = [
    "fields",
    "figure_one",
    "reed_solomon",
    "mds_perfect",
    "symplectic_duality",
    "stabilizer_params",
    "construct_mds",
    "qudit_simulation",
    "generator_reduction",
];

fn examples_dir() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    exe.parent()
        .and_then(|deps| deps.parent())
        .unwrap()
        .join("examples")
}

#[test]
fn every_example_runs() {
    let dir = examples_dir();
    let listed: Vec<String> = std::fs::read_dir(concat!(env!("CARGO_MANIFEST_DIR"), "/examples"))
        .unwrap()
        .filter_map(|e| {
            e.ok()?
                .file_name()
                .into_string()
                .ok()?
                .strip_suffix(".rs")
                .map(str::to_owned)
        })
        .collect();
    for name in &listed {
        assert!(
            EXAMPLES.contains(&name.as_str()),
            "example {name} is not exercised"
        );
    }
    for name in EXAMPLES {
        let bin = dir.join(name);
        if !bin.exists() {
            eprintln!("skipping {name}: not built (run `cargo test` without --test)");
            continue;
        }
        let out = Command::new(&bin).output().unwrap();
        assert!(
            out.status.success(),
            "{name} failed:\n{}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
}
