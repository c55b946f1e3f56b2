use clap::Parser;
use spinor_frames_cli::args::Cli;

fn main() {
    std::process::exit(spinor_frames_cli::run(Cli::parse()));
}
