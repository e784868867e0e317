// Drive the command-line front end without spawning a process.
//
// cargo run --example cli_in_process

use sepkit::cli::run;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let calls: [&[&str]; 4] = [
        &["hstar", "--signature", "2,2", "--method", "formula", "--format", "plain"],
        &["interlace", "--a", "1,4", "--b", "1,5", "--format", "plain"],
        &["roots", "--signature", "1,3", "--format", "csv"],
        &["hstar", "--signature", "9,9", "--method", "oracle"],
    ];
    for args in calls {
        let out = run(std::iter::once("sepkit").chain(args.iter().copied()));
        println!("$ sepkit {}  -> exit {}", args.join(" "), out.code);
        print!("{}{}", out.stdout, out.stderr);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
