use std::io::{IsTerminal, Read, Write};
use std::process::ExitCode;

use lukas_cli::{run, Failure};

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let reads_stdin = args.iter().skip(1).any(|a| a == "tree");
    let mut input = String::new();
    if reads_stdin && !std::io::stdin().is_terminal() {
        if let Err(e) = std::io::stdin().read_to_string(&mut input) {
            eprintln!("error: cannot read standard input: {e}");
            return ExitCode::from(2);
        }
    }
    match run(args, &input) {
        Ok(text) => {
            let mut out = std::io::stdout().lock();
            if out
                .write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .is_err()
            {
                return ExitCode::from(2);
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(e)) => e.exit(),
        Err(f) => {
            eprintln!("{f}");
            ExitCode::from(f.exit_code() as u8)
        }
    }
}
