use std::process::ExitCode;

fn main() -> ExitCode {
    if let Some(n) = std::env::var("NOGO_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        nogo_core::exec::configure_threads(n);
    }
    let (code, out) = nogo_cli::run(std::env::args_os());
    if code == 2 && !out.starts_with('{') {
        eprint!("{out}");
    } else {
        print!("{out}");
    }
    ExitCode::from(code as u8)
}
