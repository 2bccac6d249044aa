//! Builds every example family and runs the exhaustive axiom checkers,
//! then shows what a failing report looks like.

use biquandles::*;

fn main() -> Result<()> {
    println!("== quandle families ==");
    for n in 1..=6 {
        let q = dihedral_quandle(n)?;
        println!("dihedral n={n}: {}", verify_quandle(q.op()));
    }
    let a = alexander_quandle(5, 2)?;
    println!("alexander n=5 t=2: {}", verify_quandle(a.op()));

    let s3 = FiniteGroup::symmetric(3)?;
    println!(
        "conjugation quandle of the symmetric group (order {}): {}",
        s3.order(),
        verify_quandle(conjugation_quandle(&s3).op())
    );
    println!(
        "core quandle of Z_5: {}",
        verify_quandle(core_quandle(&FiniteGroup::cyclic(5)?).op())
    );

    println!("\n== biquandle families ==");
    let b = dihedral_biquandle(5, 2)?;
    println!(
        "dihedral biquandle n=5 s=2: {}",
        verify_biquandle(b.under(), b.over())?
    );
    let b = alexander_biquandle(5, 2, 3)?;
    println!(
        "alexander biquandle n=5 t=2 s=3: {}",
        verify_biquandle(b.under(), b.over())?
    );
    let w = wada_biquandle(&s3);
    println!(
        "Wada biquandle of the symmetric group: {}",
        verify_biquandle(w.under(), w.over())?
    );

    println!("\n== a broken table ==");
    let bad = OperationTable::from_rows(vec![vec![1, 0], vec![0, 1]])?;
    let report = verify_quandle(&bad);
    println!("report: {report}");
    for v in report.violations() {
        println!("  violation: {v}");
    }
    Ok(())
}
