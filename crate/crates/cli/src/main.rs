mod args;
mod commands;
mod report;

use std::process::ExitCode;

use clap::Parser;

use args::Cli;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    let seed = match std::env::var("ORE_SEED") {
        Ok(s) => match s.trim().parse() {
            Ok(seed) => seed,
            Err(_) => {
                eprintln!("error: ORE_SEED must be an unsigned integer, got '{s}'");
                return ExitCode::from(2);
            }
        },
        Err(_) => cli.seed,
    };
    let report = match commands::run(&cli.noun, seed) {
        Ok(r) => r,
        Err(commands::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let (noun, verb) = cli.noun.names();
    if cli.json {
        let field =
            commands::descriptor(cli.noun.field()).map_or_else(|_| cli.noun.field().to_string(), |f| f.to_string());
        print!("{}", report.render_json(&format!("{noun} {verb}"), &field));
    } else {
        print!("{}", report.render_text());
    }
    ExitCode::from(report.status.exit_code() as u8)
}
