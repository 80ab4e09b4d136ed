use clap::Parser;
use cocohopf::tasks::{exit_code, parse_tasks, render_json, render_text, run_tasks};
use cocohopf::workspace::parse_workspace;
use std::path::PathBuf;
use std::process::ExitCode;

/// Run tasks over a workspace of cocommutative Hopf algebras.
///
/// Tasks follow the flags: `--task NAME --key value ...`, repeatable.
#[derive(Parser)]
#[command(name = "cocohopf", version)]
struct Cli {
    /// Workspace file.
    workspace: PathBuf,
    /// Verification degree bound; overrides the workspace's `degree` statement.
    #[arg(long)]
    degree: Option<u32>,
    /// Emit a JSON array of reports.
    #[arg(long)]
    json: bool,
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let split = argv.iter().position(|a| a == "--task").unwrap_or(argv.len());
    let cli = Cli::parse_from(&argv[..split]);
    let specs = match parse_tasks(&argv[split..]) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let text = match std::fs::read_to_string(&cli.workspace) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {}: {e}", cli.workspace.display());
            return ExitCode::from(2);
        }
    };
    let ws = match parse_workspace(&text) {
        Ok(ws) => ws,
        Err(e) => {
            eprintln!("error: {}: {e}", cli.workspace.display());
            return ExitCode::from(2);
        }
    };
    let reports = run_tasks(&ws, &specs, cli.degree.unwrap_or(ws.degree));
    if cli.json {
        println!("{}", render_json(&reports));
    } else {
        print!("{}", render_text(&reports));
    }
    for r in reports.iter().filter(|r| r.status != cocohopf::tasks::Status::Pass) {
        eprintln!("{} failed: {}", r.task, r.summary.first().map(String::as_str).unwrap_or(""));
    }
    ExitCode::from(exit_code(&reports))
}
