fn main() {
    std::process::exit(lgms::cli::run());
}
