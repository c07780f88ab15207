//! Slice cohomology of every sign pattern for a small ideal.

use lclab::monocech::{cohomology_profile, slice_complex, MonomialIdeal, SignPattern};

fn main() {
    let ideal = MonomialIdeal::parse_standard(2, 1, &["Y1*Y2", "Y1*X1"]).unwrap();
    let ctx = ideal.context();
    let profile = cohomology_profile(&ideal);
    println!("nonzero slice cohomology of {ideal}:");
    for (s, h) in profile.entries() {
        println!("  {:<12} {h:?}", s.display(ctx));
    }

    let s = SignPattern::from_vars([0]);
    let c = slice_complex(&ideal, s);
    println!("slice at {} has levels {:?}", s.display(ctx), c.levels());
}
