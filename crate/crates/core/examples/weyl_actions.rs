//! Euler operator, Koszul and de Rham homology, and the degree-0 socle.

use lclab::monocech::{MonomialIdeal, VariableContext};
use lclab::weylact::{
    derham_homology, euler_eigencheck, four_term_check, koszul_homology_x, koszul_homology_y, CechModule, HomologyKind,
    LocalizationModule,
};

fn main() {
    let ring = LocalizationModule::ring(VariableContext::standard(0, 1).unwrap());
    let hull = CechModule::new(&MonomialIdeal::parse_standard(0, 1, &["X1"]).unwrap(), 1);
    for n in -2..=1 {
        let r = koszul_homology_x(&ring, 0, n).unwrap();
        let e = koszul_homology_x(&hull, 0, n).unwrap();
        let dr = derham_homology(&ring, 0, n).unwrap();
        let de = derham_homology(&hull, 0, n).unwrap();
        println!(
            "n = {n:>2}  X on R: ({}, {})  X on E: ({}, {})  d on R: ({}, {})  d on E: ({}, {})",
            r.h1, r.h0, e.h1, e.h0, dr.h1, dr.h0, de.h1, de.h0
        );
        assert_eq!(four_term_check(&hull, 0, HomologyKind::Mult, n).unwrap(), Some(true));
    }

    let top = CechModule::new(&MonomialIdeal::parse_standard(0, 2, &["X1", "X2"]).unwrap(), 2);
    println!(
        "Euler eigenvalue on H^2 at (-1,-1): {}",
        euler_eigencheck(&top, &[-1, -1]).unwrap()
    );

    let prime = MonomialIdeal::parse_standard(1, 1, &["Y1"]).unwrap();
    let socle: Vec<String> = (-2..=2)
        .map(|n| koszul_homology_y(&prime, 1, n).unwrap().to_string())
        .collect();
    println!("socle of H^1_(Y1) in degrees -2..2: {}", socle.join(" "));
}
