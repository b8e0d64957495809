fn main() {
    // Subcommands are wired up once the library surface is complete.
    eprintln!("schargraph: not yet implemented");
    std::process::exit(2);
}
