//! Per-edge provenance metadata and its linearization into the dependency
//! label after a `@` separator.
//!
//! Grammar: `LABEL[@src=TYPE[_SUBTYPE][;unc][;alt=N]]`, keys in that fixed
//! order. An edge that comes from the original tree and carries no
//! uncertainty encodes as the bare label.

use std::fmt;

use crate::error::ExtraError;

/// Origin of an enhanced edge: either the original dependency tree, or the
/// construction (type plus optional subtype) whose conversion produced it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum EdgeSrc {
    Ud,
    Converted {
        construction: String,
        subtype: Option<String>,
    },
}

impl EdgeSrc {
    pub fn converted(construction: &str, subtype: Option<&str>) -> Self {
        debug_assert!(
            !construction.contains('_'),
            "construction types must not contain '_' (reserved for the subtype separator)"
        );
        EdgeSrc::Converted {
            construction: construction.to_string(),
            subtype: subtype.map(|s| s.to_string()),
        }
    }

    pub fn is_ud(&self) -> bool {
        matches!(self, EdgeSrc::Ud)
    }
}

impl fmt::Display for EdgeSrc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeSrc::Ud => write!(f, "UD"),
            EdgeSrc::Converted {
                construction,
                subtype: None,
            } => write!(f, "{}", construction),
            EdgeSrc::Converted {
                construction,
                subtype: Some(s),
            } => write!(f, "{}_{}", construction, s),
        }
    }
}

/// The extra information attached to every enhanced edge.
///
/// Invariant: `src == Ud` implies `unc == false` and `alt == None`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeInfo {
    pub src: EdgeSrc,
    pub unc: bool,
    pub alt: Option<u32>,
}

impl EdgeInfo {
    pub fn ud() -> Self {
        EdgeInfo {
            src: EdgeSrc::Ud,
            unc: false,
            alt: None,
        }
    }

    pub fn converted(construction: &str, subtype: Option<&str>) -> Self {
        EdgeInfo {
            src: EdgeSrc::converted(construction, subtype),
            unc: false,
            alt: None,
        }
    }

    pub fn with_unc(mut self) -> Self {
        self.unc = true;
        self
    }

    pub fn with_alt(mut self, group: u32) -> Self {
        self.alt = Some(group);
        self
    }

    pub fn is_valid(&self) -> bool {
        self.src != EdgeSrc::Ud || (!self.unc && self.alt.is_none())
    }
}

/// Renders a label plus its metadata as one DEPS-cell label string.
pub fn encode_extra(label: &str, info: &EdgeInfo) -> String {
    match &info.src {
        EdgeSrc::Ud => label.to_string(),
        src => {
            let mut out = format!("{}@src={}", label, src);
            if info.unc {
                out.push_str(";unc");
            }
            if let Some(alt) = info.alt {
                out.push_str(&format!(";alt={}", alt));
            }
            out
        }
    }
}

/// Inverse of [`encode_extra`]: splits a DEPS-cell label string into the
/// plain label and its metadata.
pub fn decode_extra(s: &str) -> Result<(String, EdgeInfo), ExtraError> {
    let Some((label, suffix)) = s.split_once('@') else {
        return Ok((s.to_string(), EdgeInfo::ud()));
    };
    if label.is_empty() {
        return Err(ExtraError::EmptyLabel(s.to_string()));
    }
    let mut src = None;
    let mut unc = false;
    let mut alt = None;
    // keys must appear in emission order: src, unc, alt
    let mut rank = 0u8;
    for key in suffix.split(';') {
        if let Some(value) = key.strip_prefix("src=") {
            if rank >= 1 {
                return Err(ExtraError::BadKeyOrder(key.to_string()));
            }
            rank = 1;
            if value.is_empty() || value == "UD" {
                return Err(ExtraError::BadValue("src".into(), value.to_string()));
            }
            let (construction, subtype) = match value.split_once('_') {
                Some((c, sub)) => (c, Some(sub)),
                None => (value, None),
            };
            if construction.is_empty() || subtype == Some("") {
                return Err(ExtraError::BadValue("src".into(), value.to_string()));
            }
            src = Some(EdgeSrc::converted(construction, subtype));
        } else if key == "unc" {
            if rank >= 2 {
                return Err(ExtraError::BadKeyOrder(key.to_string()));
            }
            rank = 2;
            unc = true;
        } else if let Some(value) = key.strip_prefix("alt=") {
            if rank >= 3 {
                return Err(ExtraError::BadKeyOrder(key.to_string()));
            }
            rank = 3;
            alt = Some(
                value
                    .parse()
                    .map_err(|_| ExtraError::BadValue("alt".into(), value.to_string()))?,
            );
        } else {
            return Err(ExtraError::UnknownKey(key.to_string()));
        }
    }
    let Some(src) = src else {
        // "unc"/"alt" without a construction would claim a UD edge is
        // uncertain, which the edge model forbids
        return Err(ExtraError::MissingSrc(s.to_string()));
    };
    Ok((label.to_string(), EdgeInfo { src, unc, alt }))
}

/// Strips the `@` metadata suffix, keeping the label and any subtype.
pub fn strip_extra(label: &str) -> &str {
    match label.split_once('@') {
        Some((l, _)) => l,
        None => label,
    }
}

/// Base relation without subtype or metadata (`nmod:by@src=...` → `nmod`).
pub fn base_label(label: &str) -> &str {
    let stripped = strip_extra(label);
    match stripped.split_once(':') {
        Some((b, _)) => b,
        None => stripped,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plain_ud_edge_encodes_as_bare_label() {
        assert_eq!(encode_extra("nsubj", &EdgeInfo::ud()), "nsubj");
    }

    #[test]
    fn src_unc_alt_render_in_fixed_order() {
        let info = EdgeInfo::converted("advcl", Some("while")).with_alt(0);
        assert_eq!(encode_extra("nsubj", &info), "nsubj@src=advcl_while;alt=0");

        let info = EdgeInfo::converted("compound", None).with_unc();
        assert_eq!(encode_extra("dobj", &info), "dobj@src=compound;unc");
    }

    #[test]
    fn decode_inverts_encode() {
        for (label, info) in [
            ("nsubj", EdgeInfo::ud()),
            ("nsubj", EdgeInfo::converted("advcl", Some("while")).with_alt(0)),
            ("dobj", EdgeInfo::converted("compound", None).with_unc()),
            ("nmod:poss", EdgeInfo::converted("conj", Some("and")).with_unc()),
            (
                "nsubj",
                EdgeInfo::converted("dep", None).with_unc().with_alt(3),
            ),
        ] {
            let encoded = encode_extra(label, &info);
            let (l, i) = decode_extra(&encoded).unwrap();
            assert_eq!((l.as_str(), i), (label, info));
        }
    }

    #[test]
    fn decode_names_the_offending_key() {
        let err = decode_extra("nsubj@bogus=1").unwrap_err();
        assert!(err.to_string().contains("bogus=1"), "{}", err);
        assert!(decode_extra("nsubj@unc").is_err());
        assert!(decode_extra("nsubj@src=advcl;alt=x").is_err());
        assert!(decode_extra("nsubj@alt=0;src=advcl").is_err());
        assert!(decode_extra("nsubj@src=advcl_").is_err());
    }

    #[test]
    fn subtype_with_underscores_splits_at_first_separator() {
        let (_, info) = decode_extra("dobj@src=nmod_such_as").unwrap();
        assert_eq!(info.src, EdgeSrc::converted("nmod", Some("such_as")));
    }

    #[test]
    fn base_label_ignores_subtype_and_metadata() {
        assert_eq!(base_label("nmod:by@src=conj_and;unc"), "nmod");
        assert_eq!(strip_extra("nmod:by@src=conj_and;unc"), "nmod:by");
        assert_eq!(base_label("ev"), "ev");
    }
}
