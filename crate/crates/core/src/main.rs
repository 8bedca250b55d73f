fn main() {
    std::process::exit(fusionkit::corpusio::run_cli(std::env::args_os()));
}
