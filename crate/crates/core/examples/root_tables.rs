use unichar::root_data::{Kind, RootSystemTable};

fn main() {
    for kind in Kind::ALL {
        let t = RootSystemTable::load(kind).expect("embedded table");
        let v = t.validate();
        println!(
            "{kind}: {} roots, {} quotient roots, {} commutator entries, valid = {}",
            t.order().len(),
            v.quotient_roots,
            v.entries,
            v.passed()
        );
        println!("  central roots of the quotient: {:?}", t.central_roots());
    }
    let d4 = RootSystemTable::load(Kind::D4).expect("D4");
    println!("D4 [x1, x3] = {:?}", d4.commutator(1, 3));
}
