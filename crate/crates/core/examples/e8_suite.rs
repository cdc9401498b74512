use unichar::verification::{suite_e8, SuiteConfig};

fn main() {
    let q = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(unichar::root_data::Kind::E8.paired_prime() as usize);
    let report = suite_e8(q, &SuiteConfig::default());
    print!("{}", report.to_text());
}
