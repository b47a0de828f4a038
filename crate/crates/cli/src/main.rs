use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let out = qcpn_cli::run(std::env::args_os(), std::env::var(qcpn_cli::STEP_CAP_ENV).ok());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    let _ = std::io::stdout().flush();
    ExitCode::from(out.code as u8)
}
