use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use homcert_cli::validate::parse_field;
use homcert_cli::{compile, fixtures, parse_syntax, render_text, run, Overrides, RunOptions};

/// Run a certification script and report the results.
#[derive(Parser, Debug)]
#[command(name = "certify", version)]
struct Args {
    /// Script file; `-` reads standard input.
    script: PathBuf,
    /// Write the JSON report here; `-` writes it to standard output.
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Highest homological degree for betti, tor and ext tasks.
    #[arg(long, value_name = "K")]
    max_i: Option<usize>,
    /// Field for rings declared over `k`: Q, Fp, or F(p).
    #[arg(long, value_parser = parse_field)]
    field: Option<homcert::arith::Field>,
    /// Make the fixture rings and modules available to the script.
    #[arg(long)]
    seed_fixtures: bool,
    /// Record wall-clock time per task (makes the report nondeterministic).
    #[arg(long)]
    timing: bool,
    /// Run tasks one after another.
    #[arg(long)]
    sequential: bool,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let name = args.script.display().to_string();
    let src = if name == "-" {
        std::io::read_to_string(std::io::stdin())
    } else {
        std::fs::read_to_string(&args.script)
    };
    let src = match src {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: cannot read {name}: {e}");
            return ExitCode::from(1);
        }
    };
    let overrides = Overrides {
        field: args.field,
        max_i: args.max_i,
    };
    let program = parse_syntax(&src)
        .and_then(|s| if args.seed_fixtures { fixtures::seed(s) } else { Ok(s) })
        .and_then(|s| compile(&s, &overrides));
    let program = match program {
        Ok(p) => p,
        Err(d) => {
            eprint!("{}", d.render(&src, &name));
            return ExitCode::from(2);
        }
    };
    let report = run(
        &program,
        RunOptions {
            timing: args.timing,
            sequential: args.sequential,
        },
    );
    match &args.json {
        Some(p) if p.as_os_str() == "-" => println!("{}", report.to_json()),
        Some(p) => {
            if let Err(e) = std::fs::write(p, report.to_json() + "\n") {
                eprintln!("error: cannot write {}: {e}", p.display());
                return ExitCode::from(1);
            }
            print!("{}", render_text(&report));
        }
        None => print!("{}", render_text(&report)),
    }
    ExitCode::SUCCESS
}
