fn main() -> std::process::ExitCode {
    tfse::main_with(std::env::args_os())
}
