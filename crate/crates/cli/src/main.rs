use std::io::Write;

use clap::Parser;
use toric_cli::{run, Cli};

fn main() {
    let cli = Cli::parse();
    let mut stdout = std::io::stdout().lock();
    // Write errors (a closed pipe) are ignored: the exit status still reports.
    let code = match run(&cli) {
        Ok(out) => {
            let _ = if cli.json {
                writeln!(stdout, "{}", serde_json::to_string_pretty(&out.json).expect("json"))
            } else {
                write!(stdout, "{}", out.text)
            };
            out.code
        }
        Err(e) => {
            if cli.json {
                let _ = writeln!(stdout, "{}", e.to_json());
            } else {
                eprintln!("error: {e}");
            }
            e.exit_code()
        }
    };
    let _ = stdout.flush();
    std::process::exit(code);
}
