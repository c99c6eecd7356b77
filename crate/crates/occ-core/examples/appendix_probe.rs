use occ_core::clan::Clan;
use occ_core::groebner::{groebner_basis, ideal_equal, Ideal};
use occ_core::monomial::MonomialOrder;
use occ_core::scalar::FieldSpec;
use occ_core::slice::{ideal_y, slice_chart, theorem_a_conditions, wyser_yong_ideal};
use std::time::Instant;

fn main() {
    for field in [FieldSpec::prime(101).unwrap(), FieldSpec::Rationals] {
        let t0 = Instant::now();
        let c = Clan::parse("(12213443)").unwrap();
        let chart = slice_chart(&c, &field);
        let j1 = wyser_yong_ideal(&chart, &theorem_a_conditions());
        println!("[{:?}] J1 raw gens: {}", field, j1.generators().len());
        let t1 = Instant::now();
        let (a1m, a2m) = occ_core::slice::y_matrices(&field);
        let mut gens = a1m.minors(2);
        gens.extend(a2m.minors(2));
        let j2 = Ideal::new(&chart.ring, gens);
        let ord = MonomialOrder::Grevlex;
        let b2 = groebner_basis(&j2, &ord);
        println!("[{:?}] J2 basis size: {} ({:?})", field, b2.len(), t1.elapsed());
        let t2 = Instant::now();
        let b1 = groebner_basis(&j1, &ord);
        println!("[{:?}] J1 basis size: {} ({:?})", field, b1.len(), t2.elapsed());
        println!("[{:?}] equal: {} total {:?}", field, ideal_equal(&j1, &j2, &ord).unwrap(), t0.elapsed());
        let y = ideal_y(&field);
        println!("[{:?}] dim Y: {:?}", field, occ_core::groebner::ideal_dimension(&y, &ord));
    }
}
