use unichar::root_data::Kind;
use unichar::unipotent::GroupContext;

fn main() {
    let ctx = GroupContext::standard(Kind::D4, 2).expect("D4 over F_2");
    let u = ctx.parse_word("x3(1)*x1(1)").expect("word");
    println!("x3(1)*x1(1) = {}", ctx.format(&u));
    let v = ctx.parse_word("x4(1)*x2(1)*x3(1)").expect("word");
    println!("[u, v] = {}", ctx.format(&ctx.commutator(&u, &v)));
    println!("u^-1 = {}", ctx.format(&ctx.inverse(&u)));
    println!("|U| = {}", ctx.order());

    let e8 = GroupContext::standard(Kind::E8, 5).expect("E8 over F_5");
    let w = e8.parse_word("x1(2)*x2(3)*x1(4)^-1").expect("word");
    println!("E8: {}", e8.format(&w));
    println!("as JSON: {}", e8.to_json(&w));
}
