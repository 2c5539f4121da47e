fn main() {
    std::process::exit(xsigma::cli::run(std::env::args_os()));
}
