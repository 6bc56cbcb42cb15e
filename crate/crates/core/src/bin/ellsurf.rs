use clap::Parser;

use ellsurf::cli::{run_cli, Cli};

fn main() {
    let cli = Cli::parse();
    let (text, code) = run_cli(&cli);
    if let Some(text) = text {
        print!("{text}");
    }
    std::process::exit(code as i32);
}
