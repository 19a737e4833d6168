//! Property tests for the serialization invariants.

use proptest::prelude::*;

use bart_core::conllu::extra::{decode_extra, encode_extra, EdgeInfo};
use bart_core::conllu::{parse_conllu, serialize_conllu};

fn label_strategy() -> impl Strategy<Value = String> {
    prop_oneof![
        Just("nsubj".to_string()),
        Just("dobj".to_string()),
        Just("nmod:by".to_string()),
        Just("nmod:such_as".to_string()),
        Just("acl:relcl".to_string()),
        Just("ev".to_string()),
        "[a-z]{2,8}(:[a-z]{2,8})?",
    ]
}

fn info_strategy() -> impl Strategy<Value = EdgeInfo> {
    let converted = (
        "[a-z]{2,10}",
        proptest::option::of("[a-z]{2,6}(_[a-z]{2,6})?"),
        any::<bool>(),
        proptest::option::of(0u32..100),
    )
        .prop_map(|(construction, subtype, unc, alt)| {
            let mut info = EdgeInfo::converted(&construction, subtype.as_deref());
            info.unc = unc;
            info.alt = alt;
            info
        });
    prop_oneof![Just(EdgeInfo::ud()), converted]
}

proptest! {
    #[test]
    fn decode_inverts_encode(label in label_strategy(), info in info_strategy()) {
        let encoded = encode_extra(&label, &info);
        let (l, i) = decode_extra(&encoded).unwrap();
        prop_assert_eq!((l, i), (label, info));
    }

    #[test]
    fn decode_never_panics_on_arbitrary_suffixes(label in "[a-z]{1,8}", junk in "[ -~]{0,20}") {
        let _ = decode_extra(&format!("{}@{}", label, junk));
    }

    #[test]
    fn parse_serialize_parse_is_identity(
        n in 1usize..9,
        labels in proptest::collection::vec(0usize..6, 8),
        heads in proptest::collection::vec(1usize..9, 8),
    ) {
        // a random single-rooted tree rendered as text
        let label_pool = ["nsubj", "dobj", "nmod", "det", "advmod", "conj"];
        let mut lines = Vec::new();
        for i in 1..=n {
            let (head, rel) = if i == 1 {
                (0, "root".to_string())
            } else {
                (heads[i - 2] % (i - 1) + 1, label_pool[labels[i - 2]].to_string())
            };
            lines.push(format!(
                "{}\tw{}\tw{}\tNOUN\tNN\t_\t{}\t{}\t_\t_",
                i, i, i, head, rel
            ));
        }
        let text = format!("{}\n", lines.join("\n"));
        let once = parse_conllu(&text).unwrap();
        let rendered = serialize_conllu(&once).unwrap();
        let twice = parse_conllu(&rendered).unwrap();
        prop_assert_eq!(&once, &twice);
        // determinism: equal sentences produce byte-equal output
        prop_assert_eq!(serialize_conllu(&twice).unwrap(), rendered);
    }
}
