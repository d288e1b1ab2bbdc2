//! Writing a table and reading it back gives the same table.

use df_core::arithfun::{gen_table, TableFn, ValueTable};
use df_core::tables::{read_table, write_table};
use proptest::prelude::*;

#[test]
fn all_six_functions_round_trip_at_1000() {
    let dir = tempfile::tempdir().unwrap();
    for f in TableFn::ALL {
        let t = gen_table(f, 1000).unwrap();
        let path = dir.path().join(format!("{f}.prn"));
        assert_eq!(write_table(&t, &path).unwrap().count, 1000);
        assert_eq!(read_table(&path, f).unwrap(), t);
        let text = std::fs::read_to_string(&path).unwrap();
        assert!(text.ends_with('\n') && !text.ends_with("\n\n") && !text.contains('\r'));
    }
}

fn any_func() -> impl Strategy<Value = TableFn> {
    prop::sample::select(TableFn::ALL.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn prefixes_round_trip(f in any_func(), n in 0u64..3000) {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("t.prn");
        let t = gen_table(f, n).unwrap();
        write_table(&t, &path).unwrap();
        prop_assert_eq!(read_table(&path, f).unwrap(), t);
    }

    #[test]
    fn arbitrary_short_tables_round_trip(f in any_func(), values in prop::collection::vec(any::<u64>(), 0..6)) {
        // Below the first checked index any values are accepted.
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("t.prn");
        let t = ValueTable::from_values(f, values);
        write_table(&t, &path).unwrap();
        prop_assert_eq!(read_table(&path, f).unwrap(), t);
    }
}
