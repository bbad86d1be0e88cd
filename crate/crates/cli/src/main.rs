use clap::Parser;

fn main() {
    let cli = rookery_cli::Cli::parse();
    std::process::exit(rookery_cli::run(cli));
}
