use std::io;

fn main() {
    let code = bentsearch::harness::run_cli(
        std::env::args_os(),
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
    );
    std::process::exit(code);
}
