//! Parallel versions of the brute-force sweeps.

use rayon::prelude::*;
use steiner_core::identity::check_identity_partition;
use steiner_core::{CayleyTable, CheckReport, Identity, Result};

/// [`steiner_core::check_identity`] with the first variable split across
/// threads; the reported counterexample is still the lexicographically first.
pub fn check_identity<T: CayleyTable + Sync + ?Sized>(i: &Identity, table: &T) -> Result<CheckReport> {
    if i.variables().is_empty() {
        return steiner_core::check_identity(i, table);
    }
    let reports: Vec<CheckReport> = (0..table.order())
        .into_par_iter()
        .map(|first| check_identity_partition(i, table, first..first + 1))
        .collect::<Result<_>>()?;
    Ok(reports.into_iter().filter(|r| !r.holds).min_by_key(|r| r.assignments_checked).unwrap_or_else(|| {
        steiner_core::CheckReport {
            holds: true,
            counterexample: None,
            assignments_checked: steiner_core::identity::assignment_count(table.order(), i.variables().len()),
        }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use steiner_core::{parse_identity, steiner_loop_10, Builtin};

    #[test]
    fn matches_the_sequential_sweep() {
        let t = steiner_loop_10();
        for b in Builtin::ALL {
            let i = b.identity();
            assert_eq!(check_identity(&i, &t).unwrap(), steiner_core::check_identity(&i, &t).unwrap(), "{b}");
        }
        let closed = parse_identity("1=1").unwrap();
        assert!(check_identity(&closed, &t).unwrap().holds);
    }
}
