//! Classification: constant structures up to isomorphism correspond to
//! conjugacy classes of the automorphism group, and the full census of
//! structures on a small quandle splits into isomorphism classes.

use biquandles::*;

fn main() -> Result<()> {
    let q = dihedral_quandle(3)?;

    println!("constant biquandle structures on R_3, one line per class:");
    for (i, (rep, size)) in classify_constant_structures(&q).iter().enumerate() {
        println!("  class {i}: size={size} representative f = ({rep})");
    }
    println!(
        "class count equals the conjugacy-class count of Aut(R_3): {}\n",
        conjugacy_classes(&quandle_aut_group(&q)).len()
    );

    let census = enumerate_structures(&q)?;
    println!(
        "all biquandle structures on R_3: {} structures in {} isomorphism classes",
        census.count(),
        census.class_count()
    );
    for (i, class) in census.classes().iter().enumerate() {
        let rep = &census.all()[class[0]];
        let constant = rep.betas().windows(2).all(|w| w[0] == w[1]);
        println!(
            "  class {i}: size={} {} betas: {}",
            class.len(),
            if constant { "constant," } else { "mixed,   " },
            rep.betas()
                .iter()
                .map(|b| format!("({b})"))
                .collect::<Vec<_>>()
                .join(" ")
        );
    }

    // Isomorphic structures come with an explicit witness.
    let classes = census.classes();
    if let Some(class) = classes.iter().find(|c| c.len() > 1) {
        let a = &census.all()[class[0]];
        let b = &census.all()[class[1]];
        let iso = structures_isomorphic(a, b);
        println!(
            "\nwitness between two members of one class: {}",
            iso.witness().expect("same class")
        );
    }
    Ok(())
}
