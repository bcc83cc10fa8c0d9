//! Drive the command-line front end in-process, the way the binary does.
//!
//! ```bash
//! cargo run --example command_line
//! ```

use global_zeta::cli::parse_and_dispatch;

fn main() {
    let invocations: [&[&str]; 4] = [
        &["covolume", "--field", "Q(sqrt=-1)"],
        &[
            "check", "--field", "Q", "--s", "2", "--tol", "1e-9", "--format", "csv",
        ],
        &[
            "places",
            "--field",
            "Q(sqrt=5)",
            "--norm-bound",
            "11",
            "--format",
            "csv",
        ],
        &["check", "--field", "curve?q=5&L=1,3,7", "--s", "2"],
    ];
    for args in invocations {
        let out = parse_and_dispatch(std::iter::once("global-zeta").chain(args.iter().copied()));
        println!("$ global-zeta {}", args.join(" "));
        print!("{}{}", out.stdout, out.stderr);
        println!("[exit {}]\n", out.exit_code);
    }
}
