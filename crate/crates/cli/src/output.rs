use std::fs;
use std::io::Write;

use serde_json::{json, Value};

use crate::config::{Cli, RunConfig};

pub const TOOL: &str = "borcherds";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// `{tool, version, config, cache_hits}` for a run.
pub fn meta(cli: &Cli, cache_hits: &[i64]) -> Value {
    json!({
        "tool": TOOL,
        "version": VERSION,
        "config": RunConfig { command: &cli.command, global: &cli.global },
        "cache_hits": cache_hits,
    })
}

/// `# key: value` header lines for text and CSV output.
pub fn header(cli: &Cli, cache_hits: &[i64]) -> String {
    let config = serde_json::to_string(&RunConfig {
        command: &cli.command,
        global: &cli.global,
    })
    .expect("config serializes");
    let hits: Vec<String> = cache_hits.iter().map(|d| d.to_string()).collect();
    format!(
        "# {TOOL} {VERSION}\n# config: {config}\n# cache_hits: [{}]\n",
        hits.join(",")
    )
}

pub fn emit(cli: &Cli, text: &str) -> std::io::Result<()> {
    match &cli.global.out {
        Some(path) => fs::write(path, text),
        None => std::io::stdout().write_all(text.as_bytes()),
    }
}
