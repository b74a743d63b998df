fn main() {
    std::process::exit(skewlines::cli::run_cli());
}
