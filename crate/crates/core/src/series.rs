//! Series, nilpotency classifiers, and theorem checks.
//!
//! Four series are computed for a skew brace B:
//!
//! * **right**: descending, `R_0 = B`, `R_{k+1} = R_k ∗ B` (additive span);
//!   B is *right nilpotent* when some `R_m = {0}`.
//! * **left**: descending, `L_0 = B`, `L_{k+1} = B ∗ L_k`; *left
//!   nilpotent* when some `L_m = {0}`.
//! * **socle**: ascending, `S_0 = {0}`, `S_{k+1}` = preimage of
//!   `Soc(B/S_k)`, where `Soc(B) = Ker λ ∩ Z(B, +)`.
//! * **zeta**: ascending like the socle series but with
//!   `ζ(B) = Soc(B) ∩ Z(B, ·)`; B is *centrally nilpotent* when the series
//!   reaches B.
//!
//! Per-element notions: `b` is *right nil* when the sequence
//! `b, b∗b, (b∗b)∗b, ...` reaches 0 (symmetrically *left nil*), and
//! *strong nil* when **all** bracketed ∗-words in `b` of sufficient length
//! vanish, whatever the bracketing. Right/left nil indices are decided
//! exactly by cycle detection; the strong-nil property is semi-decided: a
//! bounded window of word lengths certifies "yes" (see
//! [`is_strong_nil`] for the argument), a recurrent nonzero word value
//! certifies "no", and the rare remainder is reported inconclusive rather
//! than guessed.

use crate::brace::{Grade, SkewBrace, SubSet};
use crate::io::serialize_brace;
use thiserror::Error;

/// Word-length bound used by [`classify`] for the strong-nil check.
pub const DEFAULT_MAX_WORD_LEN: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    /// A set that is an ideal by theorem failed to grade as one. This
    /// signals a bug in the engine, never bad input.
    #[error("internal: {context} failed to grade as an ideal")]
    InternalIdealViolation { context: &'static str },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesKind {
    Right,
    Left,
    Socle,
    Zeta,
}

impl SeriesKind {
    pub fn as_str(self) -> &'static str {
        match self {
            SeriesKind::Right => "right",
            SeriesKind::Left => "left",
            SeriesKind::Socle => "socle",
            SeriesKind::Zeta => "zeta",
        }
    }
}

/// A computed series. `members` lists the terms in order, starting from the
/// whole brace (right/left) or `{0}` (socle/zeta), up to and including the
/// first term that repeats its predecessor; `stabilized_at` is the index of
/// that predecessor. `reaches_target` says whether the stable term is the
/// series' destination: `{0}` for the descending series, all of B for the
/// ascending ones.
#[derive(Debug, Clone)]
pub struct SeriesResult {
    pub kind: SeriesKind,
    pub members: Vec<SubSet>,
    pub stabilized_at: usize,
    pub reaches_target: bool,
}

/// `Ker λ = {a : λ_a = id}`, graded.
pub fn kernel_lambda(b: &SkewBrace) -> SubSet {
    let n = b.order();
    let ker: Vec<usize> = (0..n)
        .filter(|&a| (0..n).all(|x| b.lambda(a, x) == x))
        .collect();
    b.grade_subset(&ker)
}

/// The socle `Soc(B) = Ker λ ∩ Z(B, +)`. Always an ideal; failure to grade
/// as one is an engine bug.
pub fn socle(b: &SkewBrace) -> Result<SubSet, SeriesError> {
    let ker = kernel_lambda(b);
    let z = b.add_group().center();
    let inter: Vec<usize> = ker
        .elements()
        .iter()
        .copied()
        .filter(|&x| z.contains(x))
        .collect();
    let s = b.grade_subset(&inter);
    if s.grade() != Grade::Ideal {
        return Err(SeriesError::InternalIdealViolation { context: "socle" });
    }
    Ok(s)
}

/// The brace center `ζ(B) = Soc(B) ∩ Z(B, ·)`. Always an ideal.
pub fn zeta(b: &SkewBrace) -> Result<SubSet, SeriesError> {
    let soc = socle(b)?;
    let z = b.mul_group().center();
    let inter: Vec<usize> = soc
        .elements()
        .iter()
        .copied()
        .filter(|&x| z.contains(x))
        .collect();
    let s = b.grade_subset(&inter);
    if s.grade() != Grade::Ideal {
        return Err(SeriesError::InternalIdealViolation { context: "zeta" });
    }
    Ok(s)
}

/// Computes one of the four series. See the module docs for definitions.
pub fn series(b: &SkewBrace, kind: SeriesKind) -> SeriesResult {
    let n = b.order();
    let all: Vec<usize> = (0..n).collect();
    let descending = matches!(kind, SeriesKind::Right | SeriesKind::Left);
    let mut members: Vec<SubSet> = vec![if descending {
        b.whole_subset()
    } else {
        b.zero_subset()
    }];
    loop {
        let cur = members.last().unwrap();
        let next_elems: Vec<usize> = match kind {
            SeriesKind::Right => b.star_span(cur.elements(), &all).elements().to_vec(),
            SeriesKind::Left => b.star_span(&all, cur.elements()).elements().to_vec(),
            SeriesKind::Socle | SeriesKind::Zeta => {
                let (q, proj) = b
                    .quotient(cur)
                    .expect("ascending series members are ideals");
                let target = match kind {
                    SeriesKind::Socle => socle(&q),
                    _ => zeta(&q),
                }
                .expect("socle/zeta of the quotient must be ideals");
                (0..n).filter(|&x| target.contains(proj[x])).collect()
            }
        };
        let next = b.grade_subset(&next_elems);
        match kind {
            // Every term of the descending series is a left ideal, and the
            // first derived term (the additive span of B ∗ B) is an ideal.
            SeriesKind::Right | SeriesKind::Left => {
                assert!(
                    next.grade() >= Grade::LeftIdeal,
                    "descending series member must be a left ideal, got {:?}",
                    next.grade()
                );
                if members.len() == 1 {
                    assert_eq!(
                        next.grade(),
                        Grade::Ideal,
                        "the star-square of the brace must be an ideal"
                    );
                }
            }
            // Ascending series terms are preimages of ideals, hence ideals.
            SeriesKind::Socle | SeriesKind::Zeta => {
                assert_eq!(
                    next.grade(),
                    Grade::Ideal,
                    "ascending series member must be an ideal"
                );
            }
        }
        let stable = next.elements() == cur.elements();
        members.push(next);
        if stable {
            break;
        }
    }
    let stabilized_at = members.len() - 2;
    let last = members.last().unwrap();
    let reaches_target = if descending {
        last.is_zero()
    } else {
        last.len() == n
    };
    SeriesResult {
        kind,
        members,
        stabilized_at,
        reaches_target,
    }
}

/// Which side the per-element nil sequence multiplies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NilSide {
    /// `b^(k+1) = b^(k) ∗ b`.
    Right,
    /// `b^(k+1) = b ∗ b^(k)`.
    Left,
}

/// The nil index of one element: the smallest `m` with `b^(m) = 0` where
/// `b^(1) = b`, or `None` if the sequence cycles without reaching 0. Exact:
/// the sequence lives in a finite set, so it either hits 0 or revisits a
/// nonzero value.
pub fn nil_index(b: &SkewBrace, side: NilSide, elem: usize) -> Option<usize> {
    assert!(elem < b.order(), "element out of range");
    let mut seen = vec![false; b.order()];
    let mut v = elem;
    let mut m = 1usize;
    loop {
        if v == 0 {
            return Some(m);
        }
        if seen[v] {
            return None;
        }
        seen[v] = true;
        v = match side {
            NilSide::Right => b.star(v, elem),
            NilSide::Left => b.star(elem, v),
        };
        m += 1;
    }
}

/// Outcome of the strong-nil decision procedure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StrongNilVerdict {
    /// Every ∗-word of length >= `window` in any single element evaluates
    /// to 0, regardless of bracketing.
    Yes { window: usize },
    /// A concrete nonzero word family of unbounded length exists.
    No { witness: String },
    /// Neither certificate was found within the length bound.
    Inconclusive { max_len: usize },
}

impl StrongNilVerdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            StrongNilVerdict::Yes { .. } => "yes",
            StrongNilVerdict::No { .. } => "no",
            StrongNilVerdict::Inconclusive { .. } => "inconclusive",
        }
    }
}

/// Decides (semi-decides) whether every element of `b` is strong nil: all
/// bracketed ∗-words in a single element vanish from some length on.
///
/// **Yes certificate.** For one element, let `W_ℓ` be the set of values of
/// length-`ℓ` words. If `W_ℓ = {0}` for every `ℓ` in `[m, 2m-2]` (a
/// nonempty window needs `m >= 2`; `m = 1` is the special case `b = 0`),
/// then *every* word of length >= m vanishes: by strong induction, a word
/// of length L >= 2m-1 splits as `u ∗ v` with one side of length in
/// `[m, L-1]` (the longer side has length >= ⌈L/2⌉ >= m), that side
/// evaluates to 0 by induction, and `0 ∗ x = x ∗ 0 = 0`. Checking windows
/// needs word lengths up to `2m-2 <= max_len`.
///
/// **No certificate.** The set of realized word values is the ∗-closure of
/// `{b}`. If some nonzero realized value `v` lies on a cycle of the graph
/// `v -> v∗t, v -> t∗v` (t realized), then following the cycle pumps a
/// word for `v` to unbounded lengths with the same nonzero value.
///
/// Elements certified neither way make the whole verdict
/// [`StrongNilVerdict::Inconclusive`]; a single "no" element makes it
/// [`StrongNilVerdict::No`].
pub fn is_strong_nil(b: &SkewBrace, max_len: usize) -> StrongNilVerdict {
    assert!(max_len >= 1, "max_len must be at least 1");
    let mut window = 1usize;
    let mut inconclusive = false;
    for elem in 0..b.order() {
        match strong_nil_element(b, elem, max_len) {
            ElementVerdict::Certified(m) => window = window.max(m),
            ElementVerdict::Recurrent(witness) => {
                return StrongNilVerdict::No { witness };
            }
            ElementVerdict::Unknown => inconclusive = true,
        }
    }
    if inconclusive {
        StrongNilVerdict::Inconclusive { max_len }
    } else {
        StrongNilVerdict::Yes { window }
    }
}

enum ElementVerdict {
    Certified(usize),
    Recurrent(String),
    Unknown,
}

fn strong_nil_element(b: &SkewBrace, elem: usize, max_len: usize) -> ElementVerdict {
    let n = b.order();
    // W[l] = set of values of length-l words, as a membership vector; l is
    // 1-based, W[0] unused.
    let mut w: Vec<Vec<bool>> = vec![vec![false; n]; max_len + 1];
    w[1][elem] = true;
    for l in 2..=max_len {
        for i in 1..l {
            let j = l - i;
            for u in 0..n {
                if !w[i][u] {
                    continue;
                }
                for v in 0..n {
                    if w[j][v] {
                        let uv = b.star(u, v);
                        w[l][uv] = true;
                    }
                }
            }
        }
    }
    let all_zero = |l: usize| -> bool { w[l].iter().enumerate().all(|(v, &m)| !m || v == 0) };
    let mut certified: Option<usize> = None;
    // m = 1 means even length-1 words vanish, i.e. the element is 0.
    if elem == 0 {
        certified = Some(1);
    } else {
        let mut m = 2;
        while 2 * m - 2 <= max_len {
            if (m..=2 * m - 2).all(all_zero) {
                certified = Some(m);
                break;
            }
            m += 1;
        }
    }
    let recurrent = find_recurrent_word(b, elem, max_len);
    // A certificate and a recurrence are mutually exclusive: recurrence
    // realizes nonzero words of every sufficient length.
    assert!(
        !(certified.is_some() && recurrent.is_some()),
        "strong-nil window certificate contradicts a recurrent nonzero word"
    );
    match (certified, recurrent) {
        (Some(m), _) => ElementVerdict::Certified(m),
        (None, Some(wit)) => ElementVerdict::Recurrent(wit),
        (None, None) => ElementVerdict::Unknown,
    }
}

/// Looks for a nonzero realized word value that recurs: reachable from
/// itself in the graph `v -> v∗t / t∗v` over realized values. Returns a
/// rendered witness if found.
fn find_recurrent_word(b: &SkewBrace, elem: usize, max_len: usize) -> Option<String> {
    let n = b.order();
    // ∗-closure of {elem}, remembering one word (and its length) per value.
    let mut reps: Vec<Option<(String, usize)>> = vec![None; n];
    let mut order: Vec<usize> = Vec::new();
    reps[elem] = Some((elem.to_string(), 1));
    order.push(elem);
    let mut i = 0;
    while i < order.len() {
        let x = order[i];
        let mut j = 0;
        while j < order.len() {
            let y = order[j];
            for (u, v) in [(x, y), (y, x)] {
                let uv = b.star(u, v);
                if reps[uv].is_none() {
                    let (ru, lu) = reps[u].clone().unwrap();
                    let (rv, lv) = reps[v].clone().unwrap();
                    reps[uv] = Some((format!("({ru}*{rv})"), lu + lv));
                    order.push(uv);
                }
            }
            j += 1;
        }
        i += 1;
    }
    // Cycle search over nonzero realized values; edges on the fly.
    #[derive(Clone, Copy, PartialEq)]
    enum Color {
        White,
        Gray,
        Black,
    }
    let realized: Vec<usize> = order.iter().copied().filter(|&v| v != 0).collect();
    let mut color = vec![Color::White; n];
    // Iterative DFS keeping the gray path with edge labels
    // (side, t, value): `stack` mirrors the recursion.
    for &start in &realized {
        if color[start] != Color::White {
            continue;
        }
        // Each frame: (node, edge iterator index over realized x {R, L}).
        let mut path: Vec<(usize, usize)> = vec![(start, 0)];
        let mut path_edges: Vec<(bool, usize)> = Vec::new(); // (is_right, t) leading INTO frame k+1
        color[start] = Color::Gray;
        let total_edges = realized.len() * 2;
        while let Some(&(node, edge_idx)) = path.last() {
            if edge_idx >= total_edges {
                color[node] = Color::Black;
                path.pop();
                path_edges.pop();
                continue;
            }
            path.last_mut().unwrap().1 += 1;
            let t = realized[edge_idx / 2];
            let is_right = edge_idx % 2 == 0;
            let next = if is_right { b.star(node, t) } else { b.star(t, node) };
            if next == 0 {
                continue;
            }
            match color[next] {
                Color::Gray => {
                    // Found a cycle: next is on the current path.
                    let cycle_start = path.iter().position(|&(v, _)| v == next).unwrap();
                    let mut edges: Vec<(bool, usize)> = path_edges[cycle_start..].to_vec();
                    edges.push((is_right, t));
                    return Some(render_recurrent_witness(b, &reps, next, &edges, max_len));
                }
                Color::White => {
                    color[next] = Color::Gray;
                    path_edges.push((is_right, t));
                    path.push((next, 0));
                }
                Color::Black => {}
            }
        }
    }
    None
}

/// Renders a pumped witness: starts from the stored word for `v0`, appends
/// whole cycles until the word is longer than `max_len`, and reports the
/// (unchanged, nonzero) value and period.
fn render_recurrent_witness(
    b: &SkewBrace,
    reps: &[Option<(String, usize)>],
    v0: usize,
    edges: &[(bool, usize)],
    max_len: usize,
) -> String {
    let (mut word, mut len) = reps[v0].clone().unwrap();
    let mut value = v0;
    let period: usize = edges
        .iter()
        .map(|&(_, t)| reps[t].as_ref().unwrap().1)
        .sum();
    while len <= max_len {
        for &(is_right, t) in edges {
            let (rt, lt) = reps[t].clone().unwrap();
            if is_right {
                value = b.star(value, t);
                word = format!("({word}*{rt})");
            } else {
                value = b.star(t, value);
                word = format!("({rt}*{word})");
            }
            len += lt;
        }
    }
    debug_assert_eq!(value, v0, "pumping whole cycles must preserve the value");
    debug_assert_ne!(value, 0);
    format!(
        "word {word} of length {len} evaluates to {value} != 0 and regrows by period {period} forever"
    )
}

/// One classifier's verdict inside a [`ClassificationReport`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub order: usize,
    pub additive_nilpotent: bool,
    pub additive_class: Option<usize>,
    pub multiplicative_nilpotent: bool,
    pub multiplicative_class: Option<usize>,
    pub trivial: bool,
    pub square_zero: bool,
    pub right_nilpotent: bool,
    pub right_class: Option<usize>,
    pub left_nilpotent: bool,
    pub left_class: Option<usize>,
    pub centrally_nilpotent: bool,
    pub central_class: Option<usize>,
    pub right_nil: bool,
    pub right_nil_max_index: Option<usize>,
    pub left_nil: bool,
    pub left_nil_max_index: Option<usize>,
    pub strong_nil: StrongNilVerdict,
    pub socle_order: usize,
    pub zeta_order: usize,
}

impl ClassificationReport {
    /// Renders as stable `key: value` lines, one per field, fixed order.
    /// Absent numeric values render as `-`.
    pub fn render(&self) -> String {
        let opt = |v: Option<usize>| v.map_or("-".to_string(), |x| x.to_string());
        let window = match &self.strong_nil {
            StrongNilVerdict::Yes { window } => Some(*window),
            _ => None,
        };
        let mut s = String::new();
        let mut line = |k: &str, v: String| {
            s.push_str(k);
            s.push_str(": ");
            s.push_str(&v);
            s.push('\n');
        };
        line("order", self.order.to_string());
        line("additive_nilpotent", self.additive_nilpotent.to_string());
        line("additive_class", opt(self.additive_class));
        line(
            "multiplicative_nilpotent",
            self.multiplicative_nilpotent.to_string(),
        );
        line("multiplicative_class", opt(self.multiplicative_class));
        line("trivial", self.trivial.to_string());
        line("square_zero", self.square_zero.to_string());
        line("right_nilpotent", self.right_nilpotent.to_string());
        line("right_class", opt(self.right_class));
        line("left_nilpotent", self.left_nilpotent.to_string());
        line("left_class", opt(self.left_class));
        line("centrally_nilpotent", self.centrally_nilpotent.to_string());
        line("central_class", opt(self.central_class));
        line("right_nil", self.right_nil.to_string());
        line("right_nil_max_index", opt(self.right_nil_max_index));
        line("left_nil", self.left_nil.to_string());
        line("left_nil_max_index", opt(self.left_nil_max_index));
        line("strong_nil", self.strong_nil.as_str().to_string());
        line("strong_nil_window", opt(window));
        line("socle_order", self.socle_order.to_string());
        line("zeta_order", self.zeta_order.to_string());
        s
    }
}

impl std::fmt::Display for ClassificationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.render())
    }
}

/// Runs every classifier on one brace. The strong-nil check uses word
/// lengths up to [`DEFAULT_MAX_WORD_LEN`].
pub fn classify(b: &SkewBrace) -> ClassificationReport {
    let n = b.order();
    let add_ucs = b.add_group().upper_central_series();
    let mul_ucs = b.mul_group().upper_central_series();
    let square_zero = (0..n).all(|x| b.star(x, x) == 0);
    let right = series(b, SeriesKind::Right);
    let left = series(b, SeriesKind::Left);
    let zeta_series = series(b, SeriesKind::Zeta);
    let nil_indices = |side: NilSide| -> (bool, Option<usize>) {
        let mut max = 0usize;
        for x in 0..n {
            match nil_index(b, side, x) {
                Some(m) => max = max.max(m),
                None => return (false, None),
            }
        }
        (true, Some(max))
    };
    let (right_nil, right_nil_max_index) = nil_indices(NilSide::Right);
    let (left_nil, left_nil_max_index) = nil_indices(NilSide::Left);
    ClassificationReport {
        order: n,
        additive_nilpotent: add_ucs.nilpotent,
        additive_class: add_ucs.class,
        multiplicative_nilpotent: mul_ucs.nilpotent,
        multiplicative_class: mul_ucs.class,
        trivial: b.is_trivial(),
        square_zero,
        right_nilpotent: right.reaches_target,
        right_class: right.reaches_target.then_some(right.stabilized_at),
        left_nilpotent: left.reaches_target,
        left_class: left.reaches_target.then_some(left.stabilized_at),
        centrally_nilpotent: zeta_series.reaches_target,
        central_class: zeta_series.reaches_target.then_some(zeta_series.stabilized_at),
        right_nil,
        right_nil_max_index,
        left_nil,
        left_nil_max_index,
        strong_nil: is_strong_nil(b, DEFAULT_MAX_WORD_LEN),
        socle_order: socle(b).expect("socle is an ideal").len(),
        zeta_order: zeta(b).expect("zeta is an ideal").len(),
    }
}

/// Status of one checked implication on one brace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PropertyStatus {
    Holds,
    /// The hypothesis fails, so the implication says nothing here.
    Vacuous,
    Violated {
        witness: String,
    },
}

#[derive(Debug, Clone)]
pub struct PropertyVerdict {
    pub id: &'static str,
    pub statement: &'static str,
    pub status: PropertyStatus,
}

/// Checks the five structural implications the engine exists to verify.
/// Each is evaluated as hypothesis → conclusion on the given brace;
/// braces failing the hypothesis yield [`PropertyStatus::Vacuous`].
pub fn check_theorems(b: &SkewBrace) -> Vec<PropertyVerdict> {
    let report = classify(b);
    let socle_reaches = series(b, SeriesKind::Socle).reaches_target;
    let witness = || -> String {
        format!("{}\n{}", report.render(), serialize_brace(b))
    };
    let verdict = |id, statement, hyp: bool, concl: bool| -> PropertyVerdict {
        let status = if !hyp {
            PropertyStatus::Vacuous
        } else if concl {
            PropertyStatus::Holds
        } else {
            PropertyStatus::Violated { witness: witness() }
        };
        PropertyVerdict {
            id,
            statement,
            status,
        }
    };
    let nil_type = report.additive_nilpotent;
    vec![
        verdict(
            "P1",
            "nilpotent additive group and square-zero star imply centrally nilpotent",
            nil_type && report.square_zero,
            report.centrally_nilpotent,
        ),
        verdict(
            "P2",
            "over a nilpotent additive group, right nilpotency is equivalent to the socle series reaching the whole brace",
            nil_type,
            report.right_nilpotent == socle_reaches,
        ),
        verdict(
            "P3",
            "nilpotent additive group plus left and right nilpotency imply centrally nilpotent",
            nil_type && report.left_nilpotent && report.right_nilpotent,
            report.centrally_nilpotent,
        ),
        verdict(
            "P4",
            "over a nilpotent additive group, left nilpotency is equivalent to multiplicative nilpotency",
            nil_type,
            report.left_nilpotent == report.multiplicative_nilpotent,
        ),
        verdict(
            "P5",
            "centrally nilpotent implies left and right nilpotent",
            report.centrally_nilpotent,
            report.left_nilpotent && report.right_nilpotent,
        ),
    ]
}
