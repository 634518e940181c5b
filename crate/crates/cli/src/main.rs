use std::io::Write;

use clap::Parser;
use trimat_cli::{run, Cli};

fn main() {
    let cli = Cli::parse();
    let outcome = run(&cli);
    if outcome.output.starts_with("error:") {
        eprint!("{}", outcome.output);
    } else {
        print!("{}", outcome.output);
        let _ = std::io::stdout().flush();
    }
    std::process::exit(outcome.code);
}
