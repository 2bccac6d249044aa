//! Automorphism groups: backtracking search, the inner group, and the
//! centralizer description of dihedral-biquandle automorphisms.

use biquandles::*;

fn main() -> Result<()> {
    let r3 = dihedral_quandle(3)?;
    let aut = quandle_aut_group(&r3);
    println!("Aut of the dihedral quandle R_3, order {}:", aut.order());
    for p in aut.elements() {
        println!("  {p}");
    }
    assert!(groups_isomorphic(&aut, &affine_group(3)?).found());
    println!("isomorphic to the affine group of Z_3\n");

    let inner = inner_group(&r3);
    println!(
        "inner group generated by the symmetries: order {} from {} generators\n",
        inner.order(),
        inner.generators().map(<[_]>::len).unwrap_or(0)
    );

    // For the dihedral biquandle with s+1 invertible, Aut is the
    // centralizer of i ↦ s·i inside the affine group.
    for (n, s) in [(5, 2), (7, 2), (7, 4)] {
        let formula = dihedral_biquandle_aut(n, s)?;
        let searched = biquandle_aut_group(&dihedral_biquandle(n, s)?)?;
        assert_eq!(formula.elements(), searched.elements());
        println!(
            "dihedral biquandle n={n} s={s}: Aut order {} (formula == search)",
            formula.order()
        );
    }

    // Outside that hypothesis the formula declines and the search answers.
    match dihedral_biquandle_aut(3, 2) {
        Err(e) => println!("\nn=3 s=2 has s+1 = 0: {e}"),
        Ok(_) => unreachable!(),
    }
    let general = biquandle_aut_group(&dihedral_biquandle(3, 2)?)?;
    println!("search finds Aut of order {} instead", general.order());

    // Constant structures: Aut(X_f) is the centralizer of f in Aut(Q).
    let q = dihedral_quandle(5)?;
    let aut_q = quandle_aut_group(&q);
    let f = affine_permutation(5, 2, 0)?;
    let b = realize(&constant_structure(&q, &f)?)?;
    let left = biquandle_aut_group(&b)?;
    let right = centralizer(&aut_q, &f)?;
    assert_eq!(left.elements(), right.elements());
    println!(
        "\nconstant structure by i ↦ 2i on R_5: Aut order {} = centralizer order {}",
        left.order(),
        right.order()
    );
    Ok(())
}
