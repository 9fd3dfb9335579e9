use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let result = fc_dyck_cli::run(std::env::args_os());
    if let Some(err) = result.payload.get("error") {
        let message = err["message"].as_str().unwrap_or_default();
        eprintln!("fc-dyck: {message}");
    }
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(result.stdout().as_bytes());
    let _ = out.flush();
    ExitCode::from(result.exit_code as u8)
}
