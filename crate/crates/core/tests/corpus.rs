//! Exhaustive structural checks over the corpus of small braces.
//!
//! These tests sweep every skew brace of order at most 6 (every labelled
//! one, not just isomorphism-class representatives) plus the two built-in
//! examples, and verify the structural facts that the per-module unit
//! tests only spot-check.

use skewbrace::brace::Grade;
use skewbrace::construct::{enumerate_braces, example_a, example_b};
use skewbrace::series::{classify, series, socle, zeta, SeriesKind, StrongNilVerdict};
use skewbrace::SkewBrace;
use std::sync::LazyLock;

static CORPUS: LazyLock<Vec<SkewBrace>> = LazyLock::new(|| {
    let mut out = Vec::new();
    for n in 1..=6 {
        out.extend(enumerate_braces(n, None, false).unwrap());
    }
    out.push(example_a());
    out.push(example_b());
    out
});

#[test]
fn zeta_series_is_contained_in_socle_series_levelwise() {
    for b in CORPUS.iter() {
        let soc = series(b, SeriesKind::Socle);
        let zet = series(b, SeriesKind::Zeta);
        for (k, z) in zet.members.iter().enumerate() {
            let s = &soc.members[k.min(soc.members.len() - 1)];
            assert!(
                z.elements().iter().all(|x| s.contains(*x)),
                "zeta member {k} escapes the socle series"
            );
        }
    }
}

#[test]
fn socle_and_zeta_are_ideals_everywhere() {
    for b in CORPUS.iter() {
        assert_eq!(socle(b).unwrap().grade(), Grade::Ideal);
        assert_eq!(zeta(b).unwrap().grade(), Grade::Ideal);
    }
}

#[test]
fn descending_series_members_shrink_and_are_left_ideals() {
    for b in CORPUS.iter() {
        for kind in [SeriesKind::Right, SeriesKind::Left] {
            let s = series(b, kind);
            for w in s.members.windows(2) {
                assert!(w[1].len() <= w[0].len());
                assert!(w[1].elements().iter().all(|x| w[0].contains(*x)));
            }
            for m in &s.members[1..] {
                assert!(m.grade() >= Grade::LeftIdeal);
            }
        }
    }
}

#[test]
fn star_span_of_whole_brace_is_an_ideal() {
    for b in CORPUS.iter() {
        let everything: Vec<usize> = (0..b.order()).collect();
        let span = b.star_span(&everything, &everything);
        assert_eq!(b.grade_subset(span.elements()).grade(), Grade::Ideal);
    }
}

#[test]
fn every_ideal_gives_a_valid_quotient_of_the_right_order() {
    for b in CORPUS.iter() {
        for sub in b.add_group().all_subgroups() {
            let graded = b.grade_subset(sub.elements());
            if graded.grade() == Grade::Ideal {
                let (q, projection) = b.quotient(&graded).unwrap();
                assert_eq!(q.order(), b.order() / graded.len());
                assert_eq!(projection.len(), b.order());
                // The projection respects both operations.
                for x in 0..b.order() {
                    for y in 0..b.order() {
                        assert_eq!(projection[b.plus(x, y)], q.plus(projection[x], projection[y]));
                        assert_eq!(
                            projection[b.times(x, y)],
                            q.times(projection[x], projection[y])
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn every_sub_brace_restricts_to_a_valid_brace() {
    for b in CORPUS.iter() {
        for sub in b.add_group().all_subgroups() {
            let graded = b.grade_subset(sub.elements());
            if graded.grade() >= Grade::SubBrace {
                let (r, embedding) = b.restrict(&graded).unwrap();
                assert_eq!(r.order(), graded.len());
                for x in 0..r.order() {
                    for y in 0..r.order() {
                        assert_eq!(embedding[r.plus(x, y)], b.plus(embedding[x], embedding[y]));
                        assert_eq!(embedding[r.times(x, y)], b.times(embedding[x], embedding[y]));
                    }
                }
            }
        }
    }
}

#[test]
fn classification_flags_are_mutually_coherent() {
    for b in CORPUS.iter() {
        let r = classify(b);
        // Central nilpotency sits at the top of the hierarchy.
        if r.centrally_nilpotent {
            assert!(r.left_nilpotent && r.right_nilpotent);
        }
        // Ideal-level nilpotency forces the per-element versions.
        if r.right_nilpotent {
            assert!(r.right_nil);
        }
        if r.left_nilpotent {
            assert!(r.left_nil);
        }
        // A certified strong-nil window bounds every per-element index.
        if let StrongNilVerdict::Yes { window } = r.strong_nil {
            assert!(r.right_nil && r.left_nil);
            assert!(r.right_nil_max_index.unwrap() <= window);
            assert!(r.left_nil_max_index.unwrap() <= window);
        }
        // The trivial brace is as nilpotent as it gets.
        if r.trivial {
            assert!(r.left_nilpotent && r.right_nilpotent && r.square_zero);
            assert_eq!(r.socle_order, b.add_group().center().len());
        }
    }
}

#[test]
fn right_nil_separates_from_right_nilpotent_only_at_order_32() {
    // Over nilpotent additive groups, no brace of order <= 6 separates
    // the per-element notion from the ideal one...
    for b in CORPUS.iter().filter(|b| b.order() <= 6) {
        let r = classify(b);
        if r.additive_nilpotent && r.right_nil {
            assert!(
                r.right_nilpotent,
                "unexpected separation at order {}",
                b.order()
            );
        }
    }
    // ...which is exactly what makes the order-32 example interesting:
    // nilpotent (even elementary abelian) additive group, every element
    // right nil, yet not right nilpotent.
    let r = classify(&example_b());
    assert!(r.additive_nilpotent);
    assert!(r.right_nil);
    assert!(!r.right_nilpotent);
}
