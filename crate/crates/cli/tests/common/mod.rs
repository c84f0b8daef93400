use std::path::PathBuf;

use acm_cli::{run, CommandResult};

pub struct Case {
    pub name: String,
    pub args: Vec<String>,
}

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub fn cases() -> Vec<Case> {
    let text = std::fs::read_to_string(golden_dir().join("cases.txt")).expect("cases.txt");
    text.lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| {
            let (name, args) = l.split_once(" | ").expect("name | arguments");
            Case {
                name: name.trim().into(),
                args: args.split_whitespace().map(String::from).collect(),
            }
        })
        .collect()
}

pub fn invoke(case: &Case, json: bool) -> CommandResult {
    let mut argv = vec!["acm".to_string()];
    if json {
        argv.push("--json".into());
    }
    argv.extend(case.args.iter().cloned());
    run(argv)
}

/// Compares both output modes with their golden files, rewriting them first
/// when `ACM_BLESS` is set.
pub fn check(case: &Case) -> Result<(), String> {
    for (json, ext) in [(false, "txt"), (true, "json")] {
        let r = invoke(case, json);
        if r.exit_code != 0 {
            return Err(format!("{}: exit {} {}", case.name, r.exit_code, r.stderr));
        }
        let path = golden_dir().join(format!("{}.{ext}", case.name));
        if std::env::var_os("ACM_BLESS").is_some() {
            std::fs::write(&path, &r.stdout).map_err(|e| e.to_string())?;
        }
        let expected = std::fs::read_to_string(&path)
            .map_err(|e| format!("{}: {e}", path.display()))?;
        if expected != r.stdout {
            return Err(format!(
                "{} differs from {}:\n{}",
                case.name,
                path.display(),
                r.stdout
            ));
        }
    }
    Ok(())
}
