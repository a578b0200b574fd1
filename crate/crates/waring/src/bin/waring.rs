fn main() {
    let (code, report) = waring::cli::run(std::env::args());
    println!("{report}");
    std::process::exit(code);
}
