//! The fixed desk-scale catalog: every family at every parameter choice the
//! tooling exercises by default.

use crate::catalog::TypeLabel;
use crate::rational::Rational;

/// All standard labels, in catalog order. Every one constructs, verifies,
/// and classifies back to itself (up to the small-rank identifications).
pub fn standard_labels() -> Vec<TypeLabel> {
    use TypeLabel::*;
    let mut labels = Vec::new();
    labels.extend((1..=5).map(A));
    labels.extend((1..=5).map(B));
    labels.extend((2..=5).map(C));
    labels.extend((4..=5).map(D));
    labels.extend((1..=5).map(BC));
    labels.push(G2);
    labels.push(F4);
    labels.extend((2..=5).map(ImaginaryA));
    labels.extend((2..=5).map(ImaginaryC));
    labels.extend([(2, 3), (2, 4), (2, 5), (3, 4)].map(|(m, n)| ImaginaryAPair(m, n)));
    labels.extend([1, 2].map(APair));
    labels
        .extend([(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (3, 1), (3, 3)].map(|(t, u)| BPair(t, u)));
    labels.extend([(1, 1), (1, 2), (1, 3), (2, 2), (3, 3)].map(|(t, u)| BCPair(t, u)));
    labels.extend([(1, 2), (1, 3), (2, 2), (3, 3)].map(|(t, u)| CPair(t, u)));
    labels.extend([(1, 3), (1, 4), (2, 2), (2, 3), (3, 2), (4, 3)].map(|(t, u)| DPair(t, u)));
    labels.push(AB13);
    labels.push(G12);
    for lambda in [
        Rational::from_integer(1),
        Rational::from_integer(2),
        Rational::ratio(1, 2),
        Rational::from_integer(-2),
    ] {
        labels.push(D21(lambda));
    }
    labels
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_standard_label_is_valid_and_distinct() {
        let labels = standard_labels();
        assert_eq!(labels.len(), 65);
        let mut seen = std::collections::BTreeSet::new();
        for label in &labels {
            label.validate().unwrap();
            assert!(seen.insert(label.to_string()), "duplicate {label}");
        }
    }

    #[test]
    fn label_texts_round_trip() {
        for label in standard_labels() {
            let text = label.to_string();
            let parsed: TypeLabel = text.parse().unwrap();
            assert_eq!(parsed, label);
        }
    }
}
