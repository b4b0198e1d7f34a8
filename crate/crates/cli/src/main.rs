use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    // a second interrupt kills the process as usual
    let _ = ctrlc::set_handler(|| {
        if schinzel::interrupt::stop_requested() {
            std::process::exit(130);
        }
        schinzel::interrupt::request_stop();
    });
    let scale = std::env::var("SCHINZEL_BUDGET_SCALE").ok();
    let out = schinzel_cli::execute(std::env::args(), scale.as_deref());
    if !out.stdout.is_empty() {
        // a closed pipe downstream is not an error of ours
        let _ = writeln!(std::io::stdout().lock(), "{}", out.stdout.trim_end());
    }
    if !out.stderr.is_empty() {
        eprintln!("{}", out.stderr.trim_end());
    }
    ExitCode::from(out.code as u8)
}
