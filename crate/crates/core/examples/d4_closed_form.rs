use unichar::character::d4::{half_degree_params, induced, theorem_d4_value, D4Reading};
use unichar::root_data::Kind;
use unichar::unipotent::GroupContext;

fn main() {
    let ctx = GroupContext::standard(Kind::D4, 2).expect("D4 over F_2");
    let f = ctx.field();
    let a = [f.one(); 3];
    for p in half_degree_params(&ctx, a, f.one()) {
        let chi = induced(&ctx, &p).expect("induced");
        let agree = (0..ctx.order()).all(|i| {
            let u = ctx.element_at(i);
            chi.value(&ctx, &u) == theorem_d4_value(&ctx, &p, &u, D4Reading::F124).to_cyc()
        });
        println!("b124 = {} b3 = {}: closed form agrees on all {} elements: {agree}", f.format(p.b124), f.format(p.b3), ctx.order());
    }
}
