use unichar::root_data::Kind;
use unichar::verification::{mutation_suite, SuiteConfig};

fn main() {
    for kind in Kind::ALL {
        print!("{}", mutation_suite(kind, kind.paired_prime() as usize, &SuiteConfig::default()).to_text());
    }
}
