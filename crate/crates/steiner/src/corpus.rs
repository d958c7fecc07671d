//! Named systems and loops used as test corpus and default explorer witnesses.

use steiner_core::{
    bose, elementary_abelian_loop, projective, steiner_loop_10, sts_to_loop, LoopTable, TripleSystem,
};

use crate::format::{parse_document, Document, Kind};

const STS13A: &str = include_str!("../data/sts13a.sts");
const STS13B: &str = include_str!("../data/sts13b.sts");

/// Canonical representatives of the two isomorphism classes of STS(13), as
/// produced by `steiner enumerate --order 13 --allow-slow`.
///
/// `sts13a` is the cyclic system; `sts13b` has fewer Pasch configurations.
pub fn sts13_classes() -> [TripleSystem; 2] {
    [STS13A, STS13B].map(|text| match parse_document(text, Some(Kind::Sts)) {
        Ok(Document::Sts(s)) => s,
        other => panic!("shipped STS(13) file is invalid: {other:?}"),
    })
}

/// Steiner loops used as witnesses when the explorer is given none.
pub fn default_witnesses() -> Vec<(String, LoopTable)> {
    let [a, b] = sts13_classes();
    vec![
        ("sts13a-loop".to_string(), sts_to_loop(&a).expect("valid")),
        ("sts13b-loop".to_string(), sts_to_loop(&b).expect("valid")),
        ("pg3-loop".to_string(), sts_to_loop(&projective(3).expect("in range")).expect("valid")),
        ("bose2-loop".to_string(), sts_to_loop(&bose(2).expect("in range")).expect("valid")),
    ]
}

/// Every Steiner loop of the verification corpus, smallest first.
pub fn loop_corpus() -> Vec<(String, LoopTable)> {
    let mut out: Vec<(String, LoopTable)> =
        (1..=3).map(|n| (format!("ea{n}"), elementary_abelian_loop(n).expect("in range"))).collect();
    out.push(("loop10".to_string(), steiner_loop_10()));
    out.extend(default_witnesses());
    out
}
