//! Product biquandles: connectivity, the factor-pair automorphism group for
//! connected factors, and the blockwise decomposition over components.

use biquandles::products::product_aut_group_from_parts;
use biquandles::*;

fn main() -> Result<()> {
    // Connected factors: Aut of the product is Aut(Q) × Aut(K).
    let r3 = dihedral_quandle(3)?;
    let result = product_aut_group(&r3, &r3)?;
    println!(
        "product R_3 × R_3: Aut order {} (from factor pairs: {})",
        result.group.order(),
        result.from_factor_product
    );

    // A non-connected left factor: R_4 splits into two components.
    let r4 = dihedral_quandle(4)?;
    let parts = quandle_components(&r4);
    println!(
        "\nR_4 components: {:?}",
        parts.blocks().iter().collect::<Vec<_>>()
    );

    let pb = product_biquandle(&r4, &r3)?;
    let product_parts = biquandle_components(pb.biquandle());
    println!(
        "R_4 × R_3 product of order {}: {} components of sizes {:?}",
        pb.order(),
        product_parts.block_count(),
        product_parts
            .blocks()
            .iter()
            .map(Vec::len)
            .collect::<Vec<_>>()
    );

    let searched = biquandle_aut_group(pb.biquandle())?;
    println!("searched Aut order: {}", searched.order());

    // Every automorphism splits into maps per component block and a
    // bijection of block pairs; reassembly is exact.
    let sample = searched
        .elements()
        .iter()
        .find(|p| !p.is_identity())
        .expect("a non-trivial automorphism");
    let d = decompose_product_aut(&r4, &r3, sample)?;
    println!("\na sample automorphism: {sample}");
    for (i, f) in d.left_maps().iter().enumerate() {
        println!("  left map for right-component {i}: {f}");
    }
    for (j, g) in d.right_maps().iter().enumerate() {
        println!("  right map for left-component {j}: {g}");
    }
    for j in 0..d.left_components().block_count() {
        for i in 0..d.right_components().block_count() {
            println!("  block ({j},{i}) -> {:?}", d.block_image(j, i));
        }
    }
    assert_eq!(&d.reassemble(), sample);

    // The blockwise tuple construction reproduces the searched group.
    let assembled = product_aut_group_from_parts(&r4, &r3)?;
    assert_eq!(assembled, searched);
    println!(
        "\nblockwise tuple construction = searched group (order {})",
        assembled.order()
    );
    Ok(())
}
