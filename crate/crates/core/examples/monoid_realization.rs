//! Every finite monoid M is the condensation monoid of the lines k·e_x in
//! its monoid algebra kM.

use focal::algebra::validate_monoid_table;
use focal::condensation::{condense, MonoidTable};
use focal::reptools::corpus::{monoid_algebra, monoid_list, realizes};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for m in monoid_list() {
        let item = monoid_algebra(&m)?;
        let table = item.table()?.expect("monoid items carry tables");
        let report = condense(&table)?;
        let original = MonoidTable::new(m.table.clone(), Some(validate_monoid_table(&m.table)?))?;
        println!(
            "{:<14} |M| = {}  group = {:<5}  x ↦ class(k e_x) iso: {}  abstractly iso: {}",
            m.name,
            m.table.len(),
            m.is_group,
            realizes(&report, &m.table),
            report.monoid.is_isomorphic(&original)
        );
    }
    Ok(())
}
