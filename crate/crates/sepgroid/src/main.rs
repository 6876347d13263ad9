use std::process::ExitCode;

fn main() -> ExitCode {
    let (code, text) = sepgroid::cli::run(std::env::args_os());
    if code >= sepgroid::cli::EXIT_USAGE {
        eprintln!("{}", text.trim_end());
    } else {
        println!("{}", text.trim_end());
    }
    ExitCode::from(code as u8)
}
