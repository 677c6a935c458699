use std::io::{self, BufRead, IsTerminal, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use cuntz_cli::session::verb_help;
use cuntz_cli::syntax::is_blank;
use cuntz_cli::{CliError, Session, Value};

/// Exact computations in the Cuntz algebra O_n.
///
/// Exit codes: 0 success, 2 parse error, 3 engine error, 4 verification failure.
#[derive(Parser, Debug)]
#[command(name = "cuntz", version, after_help = format!("verbs:\n{}", verb_help()))]
struct Args {
    /// Number of generators S1..Sn.
    #[arg(long)]
    n: usize,
    /// Run a script file and stop at the first failing line.
    #[arg(long)]
    script: Option<PathBuf>,
    /// Print values as JSON.
    #[arg(long)]
    json: bool,
    /// Largest level M any verb may request.
    #[arg(long, default_value_t = 8)]
    max_level: usize,
}

fn show(value: &Value, json: bool) {
    if json {
        if !matches!(value, Value::Unit) {
            println!("{}", value.to_json());
        }
    } else {
        let text = value.to_string();
        if !text.is_empty() {
            println!("{text}");
        }
    }
}

fn report(err: &CliError, line_no: Option<usize>) {
    match line_no {
        Some(l) => eprintln!("line {l}: {err}"),
        None => eprintln!("{err}"),
    }
}

fn run_script(session: &mut Session, path: &PathBuf, json: bool) -> ExitCode {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("{}: {e}", path.display());
            return ExitCode::from(3);
        }
    };
    for (i, line) in text.lines().enumerate() {
        if is_blank(line) {
            continue;
        }
        match session.run(line) {
            Ok(v) => show(&v, json),
            Err(e) => {
                report(&e, Some(i + 1));
                return ExitCode::from(e.exit_code() as u8);
            }
        }
    }
    ExitCode::SUCCESS
}

/// Keeps going after errors; the exit code is that of the first failure.
fn repl(session: &mut Session, json: bool) -> ExitCode {
    let stdin = io::stdin();
    let interactive = stdin.is_terminal();
    let mut code = 0u8;
    let prompt = || {
        if interactive {
            print!("> ");
            let _ = io::stdout().flush();
        }
    };
    prompt();
    for line in stdin.lock().lines() {
        let Ok(line) = line else { break };
        if !is_blank(&line) {
            match session.run(&line) {
                Ok(v) => show(&v, json),
                Err(e) => {
                    report(&e, None);
                    if code == 0 {
                        code = e.exit_code() as u8;
                    }
                }
            }
        }
        prompt();
    }
    ExitCode::from(code)
}

fn main() -> ExitCode {
    let args = Args::parse();
    let mut session = match Session::new(args.n, args.max_level) {
        Ok(s) => s,
        Err(e) => {
            report(&e, None);
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    match &args.script {
        Some(path) => run_script(&mut session, path, args.json),
        None => repl(&mut session, args.json),
    }
}
