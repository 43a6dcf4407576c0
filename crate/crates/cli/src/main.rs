use std::fs;
use std::io::{self, BufRead, Write};
use std::process::ExitCode;

use clap::Parser;
use startrans::{default_vars, Workspace};

/// Exact calculator for complete monomial ideals in a regular local ring:
/// closures, transforms, inverse transforms, Rees valuations, base points
/// and *-factorization.  Reads one command per line from a script file or
/// standard input.
#[derive(Parser)]
#[command(name = "startrans", version, about)]
struct Args {
    /// Ambient dimension d >= 2
    #[arg(long, default_value_t = 3)]
    dim: usize,

    /// Comma-separated variable names (default x,y,z style for the dimension)
    #[arg(long)]
    vars: Option<String>,

    /// Emit one JSON record per command instead of text
    #[arg(long)]
    json: bool,

    /// Depth budget for base point trees
    #[arg(long, default_value_t = startrans_core::DEFAULT_MAX_DEPTH)]
    max_depth: usize,

    /// Cross-check inverse transforms against the membership route and
    /// closures against the bounded power test
    #[arg(long)]
    verify: bool,

    /// Script file; standard input when omitted
    script: Option<String>,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let vars = match &args.vars {
        Some(list) => list.split(',').map(|s| s.trim().to_string()).collect(),
        None => default_vars(args.dim),
    };
    let mut ws = match Workspace::new(args.dim, vars) {
        Ok(ws) => ws,
        Err(e) => return report(&e, args.json),
    };
    ws.max_depth = args.max_depth;
    ws.verify = args.verify;

    let input: Box<dyn BufRead> = match &args.script {
        Some(path) => match fs::File::open(path) {
            Ok(f) => Box::new(io::BufReader::new(f)),
            Err(e) => {
                eprintln!("cannot open {path}: {e}");
                return ExitCode::FAILURE;
            }
        },
        None => Box::new(io::BufReader::new(io::stdin())),
    };

    let stdout = io::stdout();
    for line in input.lines() {
        let line = match line {
            Ok(l) => l,
            Err(e) => {
                eprintln!("read error: {e}");
                return ExitCode::FAILURE;
            }
        };
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        match ws.run_command(trimmed) {
            Ok(out) => {
                let mut handle = stdout.lock();
                let payload = if args.json {
                    out.record.to_string()
                } else {
                    out.text
                };
                if writeln!(handle, "{payload}").is_err() {
                    return ExitCode::FAILURE;
                }
            }
            Err(e) => return report(&e, args.json),
        }
    }
    ExitCode::SUCCESS
}

fn report(e: &startrans::CliError, json: bool) -> ExitCode {
    if json {
        println!("{}", e.record());
    } else {
        eprintln!("{e}");
    }
    ExitCode::FAILURE
}
