//! Tables with no algebra behind them: hypergroups, a hemiring without a
//! scalar identity, and a non-entire table.

use focal::condensation::{beta_classes, condense, zeta_classes, Flags, ProductFamily};
use focal::semiring::{AtomSet, HyperTable};

fn table(names: &[&str], identity: Option<usize>, rows: &[&[&[usize]]]) -> HyperTable {
    let entries = rows
        .iter()
        .map(|r| r.iter().map(|e| e.iter().copied().collect::<AtomSet>()).collect())
        .collect();
    HyperTable::from_abstract(names.iter().map(|s| s.to_string()).collect(), identity, entries).unwrap()
}

fn show(label: &str, t: &HyperTable) {
    let flags = Flags::compute(t);
    let zeta = zeta_classes(&ProductFamily::new(t), t.len());
    print!("{label}: {flags:?}; ζ* classes {:?}", zeta.classes());
    // β needs every product nonempty; ζ* is defined regardless.
    match beta_classes(t) {
        Ok(beta) => print!("; β* = ζ*: {}", beta == zeta),
        Err(e) => print!("; no β: {e}"),
    }
    match condense(t) {
        Ok(r) => println!(
            "; |Q| = {}, group = {}, identity = {:?}",
            r.monoid.size(),
            r.monoid.is_group(),
            r.monoid.identity()
        ),
        Err(e) => println!("; {e}"),
    }
}

fn main() {
    // e, a, b with a∘a = {e, b}: a hypergroup whose quotient is trivial.
    show(
        "mixing",
        &table(
            &["e", "a", "b"],
            Some(0),
            &[&[&[0], &[1], &[2]], &[&[1], &[0, 2], &[1]], &[&[2], &[1], &[0, 2]]],
        ),
    );
    // Two idempotents, no identity: a hemiring whose quotient has no unit.
    show("hemiring", &table(&["u", "v"], None, &[&[&[0], &[1]], &[&[1], &[1]]]));
    // x∘x = ∅: not entire, so there is no condensation.
    show(
        "nilpotent",
        &table(&["k", "x"], Some(0), &[&[&[0], &[1]], &[&[1], &[]]]),
    );
}
