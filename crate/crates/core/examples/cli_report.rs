//! Drive the command-line front end in-process and inspect its JSON.

fn main() {
    let out = focal::cli::run(["focal", "tower", "s3_standard", "--json"]);
    let report: serde_json::Value = serde_json::from_str(&out.stdout).expect("JSON report");
    println!(
        "exit {}: sizes {} focal dims {}",
        out.code, report["tower"]["sizes"], report["tower"]["focal_dims"]
    );

    let text = focal::cli::run(["focal", "corpus", "two_dim_quotients"]);
    for line in text
        .stdout
        .lines()
        .filter(|l| l.ends_with(".pass: true") || l.ends_with(".pass: false"))
    {
        println!("{line}");
    }
    println!("corpus exit {}", text.code);
}
