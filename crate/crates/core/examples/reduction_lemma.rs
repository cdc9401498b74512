use unichar::character::clifford::D4Instance;
use unichar::verification::verify_reduction_lemma;

fn main() {
    for which in [D4Instance::Inert, D4Instance::Split, D4Instance::Mutant] {
        print!("{}", verify_reduction_lemma(which).to_text());
    }
}
