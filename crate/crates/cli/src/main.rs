use std::io::Write;

fn main() {
    let out = vfun_cli::run(std::env::args_os(), &mut vfun_cli::read_stdin);
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    std::process::exit(out.code);
}
