mod args;
mod commands;

use args::Cli;
use clap::Parser;
use serde_json::{json, Value};
use std::io::Write;
use std::process::ExitCode;

/// Exit codes: 0 success, 1 input error, 2 cap exceeded (partial output), 3 verification failed.
fn main() -> ExitCode {
    let cli = Cli::parse();
    let (value, code) = match commands::dispatch(&cli) {
        Ok(out) => (out.value, out.code),
        Err(e) => {
            let code = if e.is_cap() { 2 } else { 1 };
            (json!({"error": e.code(), "detail": e.to_string()}), code)
        }
    };
    let value = with_seed(value, cli.common.seed);
    let text = serde_json::to_string_pretty(&value).expect("serializable") + "\n";
    let written = match &cli.common.out {
        Some(path) => std::fs::write(path, text).map_err(|e| e.to_string()),
        None => std::io::stdout().write_all(text.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        eprintln!("{}", json!({"error": "Io", "detail": e}));
        return ExitCode::from(1);
    }
    ExitCode::from(code)
}

fn with_seed(v: Value, seed: u64) -> Value {
    match v {
        Value::Object(mut m) => {
            m.insert("seed".into(), json!(seed));
            Value::Object(m)
        }
        other => json!({"seed": seed, "result": other}),
    }
}
