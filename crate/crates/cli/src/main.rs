use clap::Parser;

fn main() {
    let cli = poisson_di_cli::Cli::parse();
    if let Err(e) = poisson_di_cli::run(cli) {
        eprintln!("{}", e.record());
        std::process::exit(1);
    }
}
