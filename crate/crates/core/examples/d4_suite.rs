use unichar::verification::{suite_d4, SuiteConfig};

fn main() {
    let q = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(unichar::root_data::Kind::D4.paired_prime() as usize);
    let report = suite_d4(q, &SuiteConfig::default());
    print!("{}", report.to_text());
}
