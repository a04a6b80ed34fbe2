use std::process::ExitCode;

use wreath_specht::cli::{run, Status, EXIT_VERIFICATION};

fn main() -> ExitCode {
    let result = run(std::env::args_os());
    let text = result.rendered();
    if result.json || result.status == Status::Ok || result.exit_code == EXIT_VERIFICATION {
        println!("{}", text.trim_end());
    } else {
        eprintln!("{}", text.trim_end());
    }
    ExitCode::from(result.exit_code as u8)
}
