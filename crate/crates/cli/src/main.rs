use clap::Parser;

fn main() {
    let cli = homyb_cli::Cli::parse();
    let code = homyb_cli::run(cli, &mut std::io::stdout().lock(), &mut std::io::stderr().lock());
    std::process::exit(code);
}
