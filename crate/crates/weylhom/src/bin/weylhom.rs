use std::process::exit;

fn main() {
    exit(weylhom::cli::run())
}
