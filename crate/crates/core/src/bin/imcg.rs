fn main() {
    std::process::exit(imcg::cli::run(std::env::args()));
}
