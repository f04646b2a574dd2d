// Driving the command-line front end in-process.

use oinf::cli::run;

pub fn run_example() -> oinf::Result<()> {
    let commands = [
        "mult --scheme nat --lam w:0 --mu w:s0",
        "ext --scheme nat --mu w:s0 --lam w:e",
        "borel-distinguish --upto 4",
        "kl --x [1,2,3,4] --w [3,4,1,2]",
        "cartan --scheme fin2 --gen w:e --slice w:e --slice w:s0",
        "oracle ext2 --n 4",
    ];
    for line in commands {
        let out = run(std::iter::once("oinf").chain(line.split_whitespace()));
        println!("$ oinf {line}\n{}", out.stdout.trim_end());
        assert_eq!(out.code, 0, "{}", out.stderr);
    }
    let bad = run(["oinf", "mult", "--lam", "nat:{0:-1}", "--mu", "w:0"]);
    println!("exit {} {}", bad.code, bad.stderr.trim_end());
    assert_eq!(bad.code, 3);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("cli_session");
}
