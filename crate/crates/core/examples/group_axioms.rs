//! Group laws of H3 (exact) and E2 (floating point), plus generator algebra.
use liegen::groups::{axiom_suite, h3_generator, Axiom, Group, H3AlgebraElement};
use liegen::numeric::int;

fn main() {
    for group in [Group::H3, Group::E2] {
        let rep = axiom_suite(group, 100, 7);
        for axiom in Axiom::ALL {
            println!("{group} {axiom:?}: {:e}", rep.residual(axiom).to_f64());
        }
    }
    let m = H3AlgebraElement::new(int(1), int(0), int(1));
    println!("exp(A + C) = {}", m.exp());
    let (a, b, c) = (h3_generator(1), h3_generator(2), h3_generator(3));
    println!("[A, C] == B: {}", a.commutator(&c) == b);
}
