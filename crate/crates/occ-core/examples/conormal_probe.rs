use occ_core::braden::conormal_zero_section_dim;
use occ_core::scalar::FieldSpec;
use std::time::Instant;

fn main() {
    let t0 = Instant::now();
    let d = conormal_zero_section_dim(&FieldSpec::prime(101).unwrap());
    println!("conormal zero-section fiber dim over GF(101): {:?} in {:?}", d, t0.elapsed());
}
