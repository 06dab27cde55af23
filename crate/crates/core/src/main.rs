fn main() {
    std::process::exit(cograph_spectra::cli::run(std::env::args_os()));
}
