use unichar::character::d4::{lambda, representative_b};
use unichar::character::extension_set;
use unichar::root_data::Kind;
use unichar::unipotent::{Descriptor, GroupContext};

fn main() {
    let ctx = GroupContext::standard(Kind::D4, 2).expect("D4 over F_2");
    let f = ctx.field();
    let a = [f.one(); 3];
    let lam = lambda(a, representative_b(&ctx, a, f.one()));
    println!("lambda = {}", lam.to_json(&ctx));
    let x = ctx.parse_word("x1(1)").expect("word");
    let moved = lam.conjugate(&ctx, &x).expect("T normalizes H");
    println!("conjugate by x1(1) = {}", moved.to_json(&ctx));
    match extension_set(&ctx, &lam, &[Descriptor::coords(&[3])]).expect("engine") {
        Ok(ext) => println!("{} extensions to HX3", ext.len()),
        Err(o) => println!("obstructed by {o:?}"),
    }
}
