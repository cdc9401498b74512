use unichar::root_data::Kind;
use unichar::verification::{property_suite, SuiteConfig};

fn main() {
    let cfg = SuiteConfig { samples: 2_000, ..SuiteConfig::default() };
    for kind in Kind::ALL {
        print!("{}", property_suite(kind, kind.paired_prime() as usize, &cfg).to_text());
    }
}
