use unichar::character::d4::{induced, D4Params};
use unichar::character::inner_product;
use unichar::root_data::Kind;
use unichar::unipotent::{Descriptor, GroupContext};

fn main() {
    let ctx = GroupContext::standard(Kind::D4, 2).expect("D4 over F_2");
    let f = ctx.field();
    let p = D4Params { a: [f.one(); 3], t0: f.zero(), b124: f.zero(), b3: f.zero() };
    let chi = induced(&ctx, &p).expect("induced character");
    println!("degree {}", chi.degree());
    let all = Descriptor::coords(ctx.roots());
    let norm = inner_product(&ctx, &all, |g| chi.value_sum(&ctx, g), |g| chi.value_sum(&ctx, g)).expect("exact");
    println!("<chi, chi> = {norm}");
    let g = ctx.parse_word("x8(1)").expect("word");
    println!("chi(x8(1)) = {:?}", chi.value(&ctx, &g).as_integer());
}
