use std::io;
use std::process::ExitCode;

use ramsey_cli::{run, RunContext};

fn main() -> ExitCode {
    let ctx = RunContext::from_env();
    let code = run(
        std::env::args_os(),
        &ctx,
        &mut io::stdin().lock(),
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
    );
    ExitCode::from(code)
}
