#[path = "support/rank_one.rs"]
mod rank_one;

#[path = "support/golden.rs"]
mod golden;

#[test]
fn oracle_is_associative_and_commutative() {
    assert!(rank_one::is_associative());
    for a in rank_one::modules() {
        for b in rank_one::modules() {
            assert_eq!(rank_one::fuse(a, b), rank_one::fuse(b, a));
        }
    }
}

#[test]
fn oracle_reproduces_frozen_table() {
    assert_eq!(rank_one::table_lines(), golden::RANK_ONE);
}
