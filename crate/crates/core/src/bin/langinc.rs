fn main() {
    std::process::exit(langinc::cli::run());
}
