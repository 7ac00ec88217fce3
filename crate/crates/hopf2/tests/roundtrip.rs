//! Generate, serialize, parse, re-verify: the wire format loses nothing the
//! verifiers can see.

use hopf2::render::report_json;
use hopf2::verify::{verify_algebroid, verify_hopf, verify_hopf2, verify_pair, verify_quasigroup, verify_two_group};
use hopf2::wire::{
    decode_algebroid, decode_hopf, decode_hopf2, decode_pair, decode_quasigroup, encode_algebroid, encode_hopf,
    encode_hopf2, encode_pair, encode_quasigroup, Document,
};
use hopf2_core::cayley::cayley_dickson_cochain;
use hopf2_core::examples::{cayley_pair, function_algebra_gn, gn, hopf2_bundle_gn};

/// Serializes and parses `doc`, asserting the text is a fixed point.
fn reparse(doc: &Document) -> Document {
    let text = doc.to_json();
    let back = Document::from_json(&text).expect("generated documents parse");
    assert_eq!(back.to_json(), text, "serialization is not a fixed point");
    back
}

#[test]
fn quasigroups_round_trip_with_and_without_cochain() {
    for n in 1..=3 {
        let q = gn(n).unwrap();
        let f = cayley_dickson_cochain(n).unwrap();
        let (q2, f2) = decode_quasigroup(&reparse(&encode_quasigroup(&q, Some(&f)))).unwrap();
        assert_eq!(f2.as_ref(), Some(&f));
        assert_eq!(report_json(&verify_quasigroup(&q), 0), report_json(&verify_quasigroup(&q2), 0));
        assert_eq!(report_json(&verify_two_group(&q), 0), report_json(&verify_two_group(&q2), 0));
        let (_, none) = decode_quasigroup(&reparse(&encode_quasigroup(&q, None))).unwrap();
        assert!(none.is_none());
    }
}

#[test]
fn hopf_structures_round_trip() {
    for n in 1..=3 {
        let h = function_algebra_gn(n).unwrap();
        let back = decode_hopf(&reparse(&encode_hopf(&h))).unwrap();
        assert_eq!(report_json(&verify_hopf(&h), 0), report_json(&verify_hopf(&back), 0));
    }
}

#[test]
fn pairs_round_trip() {
    for n in 1..=3 {
        let p = cayley_pair(n).unwrap();
        let back = decode_pair(&reparse(&encode_pair(&p))).unwrap();
        assert_eq!(report_json(&verify_pair(&p), 0), report_json(&verify_pair(&back), 0));
    }
}

#[test]
fn algebroids_round_trip_alone_and_inside_bundles() {
    for n in 1..=2 {
        let bundle = hopf2_bundle_gn(n).unwrap();
        let expected = report_json(&verify_algebroid(&bundle.algebroid), 0);
        let alone = decode_algebroid(&reparse(&encode_algebroid(&bundle.algebroid))).unwrap();
        assert_eq!(report_json(&verify_algebroid(&alone), 0), expected);
        let inside = decode_algebroid(&reparse(&encode_hopf2(&bundle))).unwrap();
        assert_eq!(report_json(&verify_algebroid(&inside), 0), expected);
    }
}

#[test]
fn bundles_round_trip() {
    for n in 1..=2 {
        let bundle = hopf2_bundle_gn(n).unwrap();
        let back = decode_hopf2(&reparse(&encode_hopf2(&bundle))).unwrap();
        let subject = format!("n = {n}");
        let (a, b) = (verify_hopf2(&bundle, 1), verify_hopf2(&back, 2));
        assert_eq!(a.strict, b.strict);
        assert_eq!(report_json(&a.to_report(&subject), 0), report_json(&b.to_report(&subject), 0));
    }
}

#[test]
fn documents_report_their_kind() {
    let q = gn(1).unwrap();
    assert_eq!(encode_quasigroup(&q, None).kind(), "quasigroup");
    assert_eq!(encode_hopf2(&hopf2_bundle_gn(1).unwrap()).kind(), "hopf2");
}

#[test]
fn wrong_kind_is_rejected() {
    let doc = reparse(&encode_hopf(&function_algebra_gn(1).unwrap()));
    assert!(decode_pair(&doc).is_err());
    assert!(decode_hopf2(&doc).is_err());
    assert!(decode_quasigroup(&doc).is_err());
}
