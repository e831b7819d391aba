use clap::Parser;

fn main() {
    let cli = adelman_cli::Cli::parse();
    match adelman_cli::run(&cli) {
        Ok(output) => {
            if !cli.json {
                for line in &output.text {
                    println!("{line}");
                }
            }
            println!("{}", output.json);
            if output.failures > 0 {
                std::process::exit(1);
            }
        }
        Err(err) => {
            println!("{}", serde_json::json!({ "error": format!("{err:#}") }));
            std::process::exit(1);
        }
    }
}
