fn main() {
    std::process::exit(hopfcalc::cli::main_entry());
}
