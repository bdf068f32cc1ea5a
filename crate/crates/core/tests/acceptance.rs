//! Acceptance gate: one test per criterion, each printing a PASS/FAIL line
//! (run with `cargo test --test acceptance -- --nocapture` to see them).
//!
//! All arithmetic is exact over Z[t], so every comparison is exact equality;
//! the only tolerances are the stated wall-clock budgets.
//!
//! Criterion 6 is split per factorization mode. The `sm`/`ms` part is
//! expected to fail and is left failing on purpose: a diagram whose top row
//! (respectively bottom row) traps a strand endpoint under an arc admits no
//! permutation/Motzkin two-factor decomposition at all — see
//! `the_stuck_diagram_really_has_no_permutation_motzkin_factorization` in the
//! factorization module for an exhaustive-search proof of a witness. The
//! other five modes pass on every diagram.

use std::time::{Duration, Instant};

use diagcat::enumeration::{closure_check, count, enumerate};
use diagcat::text::{parse_diagram, parse_morphism, parse_word};
use diagcat::{
    decompose_rook, decompose_rook_brauer, decompose_skeleton, decompose_via_skeleton_family,
    from_matrix, synthesize_word, to_matrix, verify_presentation, CategoryName, Diagram, Error,
    Family, FactorMode, Involution, Morphism, RookBrauerMode, RookMatrix, Scalar,
};

fn pass(criterion: &str, detail: &str) {
    println!("criterion {criterion}: PASS - {detail}");
}

fn fail(criterion: &str, detail: &str) -> ! {
    println!("criterion {criterion}: FAIL - {detail}");
    panic!("criterion {criterion} failed: {detail}");
}

fn check(criterion: &str, ok: bool, detail: &str) {
    if ok {
        pass(criterion, detail);
    } else {
        fail(criterion, detail);
    }
}

fn running_example() -> Diagram {
    parse_diagram("7 -> 5 ; {1,3,1'},{2,4},{5,3',5'},{7,2'},{6},{4'}").unwrap()
}

#[test]
fn criterion_1_worked_composition() {
    let upper = running_example();
    let lower = parse_diagram("4 -> 7 ; {1,1'},{2},{3,7'},{4,5'},{2',4'},{3'},{6'}").unwrap();
    let expected = parse_diagram("4 -> 5 ; {1,1'},{2},{3,2'},{4,3',5'},{4'}").unwrap();
    let start = Instant::now();
    let c = upper.compose(&lower).unwrap();
    let elapsed = start.elapsed();
    check(
        "1",
        c.alpha == 2 && c.diagram == expected && elapsed < Duration::from_millis(1),
        &format!("composite is t^2 * ({expected}) in {elapsed:?}"),
    );
}

#[test]
fn criterion_2_worked_involutions() {
    let e = running_example();
    let star = parse_diagram("5 -> 7 ; {1,1',3'},{2,7'},{3,5,5'},{4},{2',4'},{6'}").unwrap();
    let sharp = parse_diagram("7 -> 5 ; {1,4'},{2},{3,1',3'},{4,6},{5,7,5'},{2'}").unwrap();
    check(
        "2",
        e.involute(Involution::Star) == star && e.involute(Involution::Sharp) == sharp,
        "both reflections reproduce the displayed diagrams exactly",
    );
}

#[test]
fn criterion_3_presentation_soundness() {
    // Relation instances per category after closing under the reflections
    // and deduplicating, derived relations included. Frozen golden counts.
    let golden: &[(CategoryName, usize)] = &[
        (CategoryName::Partition, 20),
        (CategoryName::PlanarRook, 2),
        (CategoryName::Rook, 9),
        (CategoryName::Brauer, 9),
        (CategoryName::RookBrauer, 20),
        (CategoryName::TemperleyLieb, 3),
        (CategoryName::Motzkin, 8),
        (CategoryName::SymmetricGroup, 2),
    ];
    let start = Instant::now();
    let mut total = 0;
    for &(category, expected_count) in golden {
        let reports = verify_presentation(category);
        for r in &reports {
            if !r.holds {
                fail(
                    "3",
                    &format!(
                        "{category}: relation {} evaluates unequally: {} vs {}",
                        r.name, r.lhs_value, r.rhs_value
                    ),
                );
            }
        }
        if reports.len() != expected_count {
            fail(
                "3",
                &format!(
                    "{category}: {} relation instances, expected {expected_count}",
                    reports.len()
                ),
            );
        }
        total += reports.len();
    }
    let elapsed = start.elapsed();
    check(
        "3",
        total == 73 && elapsed < Duration::from_secs(1),
        &format!("all 73 relation instances hold across 8 presentations in {elapsed:?}"),
    );
}

#[test]
fn criterion_4_basis_counts() {
    let start = Instant::now();
    let cases: &[(Family, usize, usize, usize)] = &[
        (Family::Partition, 2, 2, 15),
        (Family::RookBrauer, 2, 2, 10),
        (Family::Motzkin, 2, 2, 9),
        (Family::Rook, 2, 2, 7),
        (Family::Rook, 3, 3, 34),
        (Family::PlanarRook, 2, 2, 6),
        (Family::Brauer, 2, 2, 3),
        (Family::Brauer, 3, 3, 15),
        (Family::TemperleyLieb, 3, 3, 5),
    ];
    for &(family, k, l, expected) in cases {
        let got = count(family, k, l);
        if got != expected {
            fail("4", &format!("count({family}, {k}, {l}) = {got}, expected {expected}"));
        }
        // The per-family construction must agree with the generic filter.
        let direct = diagcat::enumeration::enumerate_direct(family, k, l).len();
        if direct != expected {
            fail("4", &format!("direct count({family}, {k}, {l}) = {direct}"));
        }
    }
    let elapsed = start.elapsed();
    check(
        "4",
        elapsed < Duration::from_secs(5),
        &format!("all 9 basis counts exact in {elapsed:?}"),
    );
}

fn family_sizes(family: Family) -> usize {
    match family {
        Family::Partition | Family::PlanarPartition => 3,
        _ => 4,
    }
}

#[test]
fn criterion_5_closure_lemmas() {
    let start = Instant::now();
    let families = [
        Family::PlanarRook,
        Family::Rook,
        Family::RookBrauer,
        Family::Motzkin,
        Family::Partition,
    ];
    let mut pairs = 0usize;
    for family in families {
        let cap = family_sizes(family);
        for bottom in 0..=cap {
            for mid in 0..=cap {
                for top in 0..=cap {
                    let report = closure_check(family, bottom, mid, top);
                    pairs += report.pairs;
                    if !report.is_clean() {
                        let (u, l, c) = &report.violations[0];
                        fail(
                            "5",
                            &format!("{family}: ({u}) o ({l}) left the family: {c}"),
                        );
                    }
                }
            }
        }
    }
    let elapsed = start.elapsed();
    check(
        "5",
        elapsed < Duration::from_secs(120),
        &format!("{pairs} pairwise compositions closed in their families in {elapsed:?}"),
    );
}

#[test]
fn criterion_6a_skeleton_roundtrip() {
    let start = Instant::now();
    let mut checked = 0usize;
    for bottom in 0..=3 {
        for top in 0..=3 {
            for d in enumerate(Family::Partition, bottom, top) {
                let f = decompose_skeleton(&d);
                let inner = f.core.compose(&f.lower).unwrap();
                let outer = f.upper.compose(&inner.diagram).unwrap();
                if inner.alpha + outer.alpha != 0 || outer.diagram != d {
                    fail("6a", &format!("skeleton factors of {d} do not recompose"));
                }
                if !f.lower.is_family(Family::PlanarRook) || !f.upper.is_family(Family::PlanarRook)
                {
                    fail("6a", &format!("outer factors of {d} are not planar rook"));
                }
                checked += 1;
            }
        }
    }
    // Specialized cores: permutation, Brauer, Temperley-Lieb respectively.
    for (family, core_family) in [
        (Family::Rook, Family::Permutation),
        (Family::RookBrauer, Family::Brauer),
        (Family::Motzkin, Family::TemperleyLieb),
    ] {
        for bottom in 0..=4 {
            for top in 0..=4 {
                for d in enumerate(family, bottom, top) {
                    let f = decompose_via_skeleton_family(&d, family).unwrap();
                    if !f.core.is_family(core_family) {
                        fail("6a", &format!("core of {d} is not {core_family}"));
                    }
                    let inner = f.core.compose(&f.lower).unwrap();
                    let outer = f.upper.compose(&inner.diagram).unwrap();
                    if inner.alpha + outer.alpha != 0 || outer.diagram != d {
                        fail("6a", &format!("family skeleton factors of {d} do not recompose"));
                    }
                    checked += 1;
                }
            }
        }
    }
    let elapsed = start.elapsed();
    check(
        "6a",
        elapsed < Duration::from_secs(120),
        &format!("{checked} skeleton decompositions recompose to t^0 * D in {elapsed:?}"),
    );
}

#[test]
fn criterion_6b_rook_factorizations() {
    let start = Instant::now();
    let mut checked = 0usize;
    for bottom in 0..=4 {
        for top in 0..=4 {
            for d in enumerate(Family::Rook, bottom, top) {
                let (s, p) = decompose_rook(&d, FactorMode::SP).unwrap();
                assert_factor_pair("6b-rook", &d, &s, &p, Family::Permutation, Family::PlanarRook);
                let (p, s) = decompose_rook(&d, FactorMode::PS).unwrap();
                assert_factor_pair("6b-rook", &d, &p, &s, Family::PlanarRook, Family::Permutation);
                checked += 2;
            }
        }
    }
    let elapsed = start.elapsed();
    check(
        "6b-rook",
        elapsed < Duration::from_secs(120),
        &format!("{checked} SP/PS factorizations recompose to t^0 * D in {elapsed:?}"),
    );
}

fn assert_factor_pair(
    criterion: &str,
    d: &Diagram,
    upper: &Diagram,
    lower: &Diagram,
    upper_family: Family,
    lower_family: Family,
) {
    if !upper.is_family(upper_family) || !lower.is_family(lower_family) {
        fail(
            criterion,
            &format!("factors of {d} are not ({upper_family}, {lower_family})"),
        );
    }
    let c = upper.compose(lower).unwrap();
    if c.alpha != 0 || c.diagram != *d {
        fail(criterion, &format!("factors of {d} recompose to t^{} * {}", c.alpha, c.diagram));
    }
}

#[test]
fn criterion_6b_rook_brauer_bp_pb() {
    let start = Instant::now();
    let mut checked = 0usize;
    for bottom in 0..=4 {
        for top in 0..=4 {
            for d in enumerate(Family::RookBrauer, bottom, top) {
                let (b, p) = decompose_rook_brauer(&d, RookBrauerMode::Bp).unwrap();
                assert_factor_pair("6b-rb", &d, &b, &p, Family::Brauer, Family::PlanarRook);
                let (p, b) = decompose_rook_brauer(&d, RookBrauerMode::Pb).unwrap();
                assert_factor_pair("6b-rb", &d, &p, &b, Family::PlanarRook, Family::Brauer);
                checked += 2;
            }
        }
    }
    let elapsed = start.elapsed();
    check(
        "6b-rb",
        elapsed < Duration::from_secs(120),
        &format!("{checked} BP/PB factorizations recompose to t^0 * D in {elapsed:?}"),
    );
}

/// Expected to fail; kept failing deliberately. Whenever the construction
/// succeeds the factors are validated; the criterion demands success on every
/// rook-Brauer diagram, which no algorithm can deliver (see the module
/// comment), so the tally of impossible diagrams is reported and asserted to
/// be zero — which it is not.
#[test]
fn criterion_6b_rook_brauer_sm_ms() {
    let start = Instant::now();
    let mut checked = 0usize;
    let mut impossible = 0usize;
    let mut witness: Option<Diagram> = None;
    for bottom in 0..=4 {
        for top in 0..=4 {
            for d in enumerate(Family::RookBrauer, bottom, top) {
                match decompose_rook_brauer(&d, RookBrauerMode::Sm) {
                    Ok((s, m)) => {
                        assert_factor_pair("6b-sm-ms", &d, &s, &m, Family::Permutation, Family::Motzkin);
                        checked += 1;
                    }
                    Err(Error::NoPlanarFactor(_)) => {
                        impossible += 1;
                        witness.get_or_insert_with(|| d.clone());
                    }
                    Err(other) => fail("6b-sm-ms", &format!("unexpected error on {d}: {other}")),
                }
                match decompose_rook_brauer(&d, RookBrauerMode::Ms) {
                    Ok((m, s)) => {
                        assert_factor_pair("6b-sm-ms", &d, &m, &s, Family::Motzkin, Family::Permutation);
                        checked += 1;
                    }
                    Err(Error::NoPlanarFactor(_)) => {
                        impossible += 1;
                        witness.get_or_insert_with(|| d.clone());
                    }
                    Err(other) => fail("6b-sm-ms", &format!("unexpected error on {d}: {other}")),
                }
            }
        }
    }
    let elapsed = start.elapsed();
    let witness = witness.map(|d| d.to_string()).unwrap_or_default();
    check(
        "6b-sm-ms",
        impossible == 0 && elapsed < Duration::from_secs(120),
        &format!(
            "{checked} SM/MS factorizations recompose, but {impossible} mode instances \
             admit no permutation/Motzkin factorization at all (first witness: {witness}); \
             left failing on purpose, see the suite header"
        ),
    );
}

#[test]
fn criterion_6c_synthesis_roundtrip() {
    let start = Instant::now();
    let mut checked = 0usize;
    for category in CategoryName::ALL {
        let family = category.family();
        let cap = family_sizes(family);
        for bottom in 0..=cap {
            for top in 0..=cap {
                for d in enumerate(family, bottom, top) {
                    let w = synthesize_word(&d, category).unwrap();
                    if w.evaluate() != Morphism::single(d.clone()) {
                        fail(
                            "6c",
                            &format!("{category}: word {w} does not evaluate back to {d}"),
                        );
                    }
                    let stray = w.slices().iter().flat_map(|s| s.0.iter()).find(|a| {
                        **a != diagcat::Atom::Id && !category.generators().contains(a)
                    });
                    if let Some(atom) = stray {
                        fail("6c", &format!("{category}: word for {d} uses `{atom}`"));
                    }
                    checked += 1;
                }
            }
        }
    }
    let elapsed = start.elapsed();
    check(
        "6c",
        elapsed < Duration::from_secs(120),
        &format!("{checked} synthesized words evaluate back to t^0 * D in {elapsed:?}"),
    );
}

#[test]
fn criterion_7_planar_iff_pseudo_echelon() {
    let start = Instant::now();
    for bottom in 0..=4 {
        for top in 0..=4 {
            for d in enumerate(Family::Rook, bottom, top) {
                let m = to_matrix(&d).unwrap();
                if d.is_planar() != m.is_pseudo_echelon() {
                    fail("7", &format!("planarity and pseudo-echelon disagree on {d}"));
                }
            }
        }
    }
    // The worked matrix pair, bit-exact.
    let d = parse_diagram("5 -> 4 ; {2,1'},{5,2'},{3,4'},{1},{4},{3'}").unwrap();
    let m = to_matrix(&d).unwrap();
    if m.to_string() != "01000\n00001\n00000\n00100" {
        fail("7", "the worked rook matrix does not match");
    }
    let (s, p) = m.factor(FactorMode::SP);
    if p.to_string() != "01000\n00100\n00000\n00001" {
        fail("7", "the worked pseudo-echelon factor does not match");
    }
    if s.mul(&p).unwrap() != m || from_matrix(&p) != decompose_rook(&d, FactorMode::SP).unwrap().1 {
        fail("7", "the worked factorization does not recompose");
    }
    let elapsed = start.elapsed();
    check(
        "7",
        elapsed < Duration::from_secs(120),
        &format!("planar <=> pseudo-echelon on all rook diagrams up to 4 in {elapsed:?}"),
    );
}

#[test]
fn criterion_8_property_suites_headless() {
    // Compact deterministic re-run of the law suites; the full versions live
    // in tests/properties.rs. Everything here is seeded or exhaustive.
    let start = Instant::now();

    // Involution laws and family invariance on every diagram up to 6 vertices.
    for bottom in 0..=3usize {
        for top in 0..=3usize {
            for d in enumerate(Family::Partition, bottom, top) {
                if d.star().star() != d || d.sharp().sharp() != d {
                    fail("8", &format!("an involution is not involutive on {d}"));
                }
                if d.star().sharp() != d.sharp().star() {
                    fail("8", &format!("the involutions do not commute on {d}"));
                }
                for family in Family::ALL {
                    if d.is_family(family) != d.star().is_family(family) {
                        fail("8", &format!("star moved {d} out of {family}"));
                    }
                }
            }
        }
    }

    // Interchange and associativity with alpha, exhaustively at size <= 2.
    for a in 0..=2usize {
        for b in 0..=2usize {
            for c in 0..=2usize {
                for d1 in enumerate(Family::Partition, b, c) {
                    for d2 in enumerate(Family::Partition, a, b) {
                        for d3 in enumerate(Family::Partition, c, c) {
                            let left_first = d3.compose(&d1).unwrap();
                            let left = left_first.diagram.compose(&d2).unwrap();
                            let right_first = d1.compose(&d2).unwrap();
                            let right = d3.compose(&right_first.diagram).unwrap();
                            if left_first.alpha + left.alpha != right_first.alpha + right.alpha
                                || left.diagram != right.diagram
                            {
                                fail("8", "associativity with alpha failed");
                            }
                        }
                    }
                }
                for f1 in enumerate(Family::Partition, a, b) {
                    for f2 in enumerate(Family::Partition, b, c) {
                        let lhs = f2.tensor(&f1).compose(&f1.tensor(&f2));
                        // Composable only when types line up; skip otherwise.
                        if let Ok(lhs) = lhs {
                            let l = f2.compose(&f1).unwrap();
                            let r = f1.compose(&f2).unwrap();
                            if lhs.alpha != l.alpha + r.alpha
                                || lhs.diagram != l.diagram.tensor(&r.diagram)
                            {
                                fail("8", "interchange law failed");
                            }
                        }
                    }
                }
            }
        }
    }

    // Parse/render round trips across all three text forms.
    for text in [
        "7 -> 5 ; {1,3,1'},{2,4},{5,3',5'},{7,2'},{6},{4'}",
        "0 -> 0 ;",
        "3 -> 2 ; {1,1'},{2,3},{2'}",
    ] {
        let d = parse_diagram(text).unwrap();
        if parse_diagram(&d.to_string()).unwrap() != d {
            fail("8", &format!("diagram text round trip failed on {text}"));
        }
    }
    let m = Morphism::with_coeff(Scalar::t_power(2), running_example());
    if parse_morphism(&m.to_string()).unwrap() != m {
        fail("8", "morphism text round trip failed");
    }
    let w = parse_word("5 : | eta eta eta | eta eps | eps").unwrap();
    if parse_word(&w.to_string()).unwrap() != w {
        fail("8", "word text round trip failed");
    }

    let elapsed = start.elapsed();
    check(
        "8",
        elapsed < Duration::from_secs(300),
        &format!("involution, interchange, associativity and round-trip suites in {elapsed:?}"),
    );
}

/// Matrix transpose mirrors the horizontal reflection; zero matrices and
/// permutation matrices behave.
#[test]
fn matrix_correspondences_hold() {
    for bottom in 0..=4 {
        for top in 0..=4 {
            for d in enumerate(Family::Rook, bottom, top) {
                let m = to_matrix(&d).unwrap();
                assert_eq!(from_matrix(&m), d);
                assert_eq!(to_matrix(&d.star()).unwrap(), m.transpose());
                let (s1, p1) = m.factor(FactorMode::SP);
                let (p2, s2) = m.factor(FactorMode::PS);
                assert_eq!(p1, p2, "both modes share the echelon factor for {d}");
                assert!(s1.is_permutation() && s2.is_permutation());
                assert_eq!(s1.mul(&p1).unwrap(), m);
                assert_eq!(p2.mul(&s2).unwrap(), m);
            }
        }
    }
    assert!(RookMatrix::zero(3, 2).is_pseudo_echelon());
}
