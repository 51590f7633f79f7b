use ltscalc::cli_io::cli_dispatch;

fn main() {
    let (code, out) = cli_dispatch(std::env::args_os());
    if !out.is_empty() {
        println!("{}", out);
    }
    std::process::exit(code);
}
