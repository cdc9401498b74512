use unichar::cyclotomic::{CycInt, ZetaSum};

fn main() {
    let p = 5;
    let z = CycInt::from_exponent(p, 1);
    let sum = (0..p).fold(CycInt::zero(p), |acc, e| acc.add(&CycInt::from_exponent(p, e)).expect("same p"));
    println!("1 + z + ... + z^4 = {:?}", sum.as_integer());
    let norm = z.mul(&z.conj()).expect("same p");
    println!("z * conj(z) = {:?}", norm.as_integer());
    let mut acc = ZetaSum::new(p);
    acc.add(0, 3);
    acc.add(2, 3);
    println!("3 + 3 z^2 has coefficients {:?}", acc.to_cyc().to_i64_coeffs());
}
