use clap::Parser;

use hermitian_semigroups::cli::{run, Cli};

fn main() {
    // clap exits with status 2 on argument errors.
    let cli = Cli::parse();
    std::process::exit(run(cli));
}
