use clap::Parser;

fn main() {
    let cli = legctl::cli::Cli::parse();
    let outcome = legctl::cli::run(cli);
    println!("{}", outcome.text);
    std::process::exit(outcome.exit_code);
}
