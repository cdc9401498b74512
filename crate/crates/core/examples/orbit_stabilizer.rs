use unichar::character::{complement_pcgs, orbit_bfs, AbelianSection};
use unichar::constructions::tower;
use unichar::root_data::Kind;
use unichar::unipotent::GroupContext;

fn main() {
    let ctx = GroupContext::standard(Kind::E6, 3).expect("E6 over F_3");
    let spec = tower(Kind::E6);
    let roots: Vec<usize> = spec.levels[..2].concat();
    let section = AbelianSection::new(&ctx, &roots).expect("abelian section");
    let mut b = vec![ctx.field().zero(); roots.len()];
    b[..5].fill(ctx.field().one());
    let ell = section.functional(&ctx, &b);
    let gens = complement_pcgs(&ctx, &spec.complement);
    let mats: Vec<_> = gens.iter().map(|g| section.conj_matrix(&ctx, g).expect("normalizes")).collect();
    let rep = orbit_bfs(&section, &ell, &mats, 3u128.pow(7), 1_000_000).expect("orbit");
    println!("orbit {} stabilizer {} in |T| = {}", rep.orbit_size, rep.stabilizer_order, rep.group_order);
}
