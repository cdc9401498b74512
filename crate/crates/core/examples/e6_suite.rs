use unichar::verification::{suite_e6, SuiteConfig};

fn main() {
    let q = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(unichar::root_data::Kind::E6.paired_prime() as usize);
    let report = suite_e6(q, &SuiteConfig::default());
    print!("{}", report.to_text());
}
