//! A biquandle structure is a coherent family of quandle automorphisms;
//! realizing one gives a biquandle, and every biquandle decomposes back
//! into a structure on its underlying quandle. This example walks the
//! round trip on the Wada biquandle of Z_3.

use biquandles::*;

fn main() -> Result<()> {
    // The core quandle of Z_3 (same table as the dihedral quandle R_3).
    let z3 = FiniteGroup::cyclic(3)?;
    let base = core_quandle(&z3);
    println!("base quandle (a*b = b - a + b mod 3):\n{}\n", base.op());

    // The family β_y(a) = a - 2y is a biquandle structure on it.
    let betas: Vec<Permutation> = (0..3)
        .map(|y| Permutation::from_images((0..3).map(|a| (a + 6 - 2 * y) % 3).collect()))
        .collect::<Result<_>>()?;
    let structure = BiquandleStructure::new(base, betas)?;
    println!("structure verified: beta_y(a) = a - 2y");

    // Realizing it yields exactly the Wada biquandle of Z_3.
    let b = realize(&structure)?;
    assert_eq!(b, wada_biquandle(&z3));
    println!("realized under table:\n{}", b.under());
    println!("realized over table:\n{}\n", b.over());

    // And extraction undoes realization, table-exactly.
    let back = extract_structure(&b)?;
    assert_eq!(back, structure);
    println!("extract(realize(S)) == S: round trip exact");

    // The underlying quandle of an Alexander biquandle is an Alexander
    // quandle with twisted parameter.
    let ab = alexander_biquandle(5, 2, 3)?;
    let uq = underlying_quandle(&ab)?;
    println!("\nunderlying quandle of the (5, t=2, s=3) Alexander biquandle:");
    println!("{}", uq.op());
    assert_eq!(
        uq.op(),
        &OperationTable::from_fn(5, |x, y| (4 * x + 2 * y) % 5)
    );
    Ok(())
}
