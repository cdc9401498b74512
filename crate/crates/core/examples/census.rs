use unichar::root_data::Kind;
use unichar::verification::count_family;

fn main() {
    for (kind, q) in [(Kind::D4, 2), (Kind::D4, 4), (Kind::E6, 3), (Kind::E8, 5)] {
        let c = count_family(kind, q).expect("census");
        println!("{kind} q={q}: per central character {:?}, torus orbit {}, totals {:?}", c.per_central, c.torus_orbit, c.totals);
        println!("  closed form agrees: {}", c.formula_agrees());
    }
}
