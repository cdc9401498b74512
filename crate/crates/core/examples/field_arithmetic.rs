use unichar::fqfield::FieldSpec;

fn main() {
    let k = FieldSpec::conway(3, 2).expect("F_9");
    let a = k.element(4);
    let b = k.element(7);
    println!("F_{} with modulus {:?}", k.q(), k.modulus());
    println!("{} + {} = {}", k.format(a), k.format(b), k.format(k.add(a, b)));
    println!("{} * {} = {}", k.format(a), k.format(b), k.format(k.mul(a, b)));
    println!("Tr({}) = {}", k.format(a), k.trace(a));
    let t_a: Vec<String> = k.t_a_set(a).iter().map(|&x| k.format(x)).collect();
    println!("T_a for a = {}: {:?}", k.format(a), t_a);
    let a_phi = k.find_a_phi(a).expect("a is nonzero");
    println!("a_phi = {} kills T_a under phi", k.format(a_phi));
}
