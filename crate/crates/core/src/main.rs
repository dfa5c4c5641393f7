use std::io;

fn main() {
    let status = hahnfield::cli::run(std::env::args_os(), io::stdin().lock(), &mut io::stdout(), &mut io::stderr());
    std::process::exit(status);
}
