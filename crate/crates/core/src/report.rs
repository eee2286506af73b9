//! Structured verification reports: one pass/fail entry per structural
//! claim about a Sidon set and its sum graph, plus informational
//! diagnostics that are reported without being asserted.

use serde::Serialize;

use crate::analysis::{
    classify_degenerate, is_maximal, predicted_complement, DifferenceProfile, TupleIndex,
};
use crate::budget::Budget;
use crate::construct::{verify_sidon, Provenance, SidonSet};
use crate::error::Result;
use crate::graph::SumGraph;
use crate::oracle;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    /// Closed-form checks only.
    Lemmas,
    /// Adds the brute-force differential checks.
    Full,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub schema: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub meta: Option<Meta>,
    pub construction: ConstructionInfo,
    pub checks: Vec<Check>,
    pub diagnostics: Vec<Diagnostic>,
    pub pass: bool,
}

#[derive(Debug, Serialize)]
pub struct Meta {
    pub tool: String,
    pub unix_time: u64,
}

#[derive(Debug, Serialize)]
pub struct ConstructionInfo {
    pub provenance: String,
    pub group: String,
    pub group_order: u64,
    pub set_size: u64,
    pub elements: Vec<u64>,
}

#[derive(Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub anchor: String,
    pub expected: String,
    pub observed: String,
    pub pass: bool,
}

/// Observations that are reported but never gate the exit status.
#[derive(Debug, Serialize)]
pub struct Diagnostic {
    pub name: String,
    pub observed: String,
    pub note: String,
}

struct Checker {
    checks: Vec<Check>,
    diagnostics: Vec<Diagnostic>,
}

impl Checker {
    fn push(
        &mut self,
        name: &str,
        anchor: &str,
        expected: impl ToString,
        observed: impl ToString,
        pass: bool,
    ) {
        self.checks.push(Check {
            name: name.into(),
            anchor: anchor.into(),
            expected: expected.to_string(),
            observed: observed.to_string(),
            pass,
        });
    }

    fn diag(&mut self, name: &str, observed: impl ToString, note: &str) {
        self.diagnostics.push(Diagnostic {
            name: name.into(),
            observed: observed.to_string(),
            note: note.into(),
        });
    }
}

/// Lower bound on |T(z)| guaranteed for the family (exact value for the
/// zero-deficiency family). Negative bounds are vacuous but kept signed so
/// gates read naturally.
fn family_tuple_bound(prov: Provenance) -> Option<(i64, bool)> {
    match prov {
        Provenance::BoseChowla { q, h: 2 } => Some((q as i64 - 1, false)),
        Provenance::Singer { q } => Some((q as i64 + 1, true)),
        Provenance::Ruzsa { p, .. } => Some((p as i64 - 3, false)),
        Provenance::Cartesian1 { p } => Some((p as i64 - 1, false)),
        Provenance::Cartesian2 { p } => Some((p as i64 - 3, false)),
        Provenance::Cartesian3 { p, .. } => Some((p as i64 - 5, false)),
        _ => None,
    }
}

/// Guaranteed number of 4-cycles created by any single-edge addition
/// (the family tuple bound minus three).
pub fn family_new_cycle_bound(prov: Provenance) -> Option<i64> {
    family_tuple_bound(prov).map(|(b, _)| b - 3)
}

/// Expected |A| by family.
fn family_cardinality(prov: Provenance) -> Option<u64> {
    match prov {
        Provenance::BoseChowla { q, .. } => Some(q),
        Provenance::Singer { q } => Some(q + 1),
        Provenance::Ruzsa { p, .. } => Some(p - 1),
        Provenance::Cartesian1 { p } => Some(p),
        Provenance::Cartesian2 { p } => Some(p - 1),
        Provenance::Cartesian3 { p, .. } => Some(p - 2),
        Provenance::Custom => None,
    }
}

/// Expected deficiency by family (h = 2 only for Bose-Chowla).
pub fn family_deficiency(prov: Provenance) -> Option<u64> {
    match prov {
        Provenance::BoseChowla { q, h: 2 } => Some(q - 2),
        Provenance::Singer { .. } => Some(0),
        Provenance::Ruzsa { p, .. } => Some(2 * p - 3),
        Provenance::Cartesian1 { p } => Some(p - 1),
        Provenance::Cartesian2 { p } => Some(2 * p - 3),
        Provenance::Cartesian3 { p, .. } => Some(3 * p - 6),
        _ => None,
    }
}

pub fn run_verification(
    set: &SidonSet,
    level: Level,
    include_meta: bool,
    budget: Budget,
) -> Result<Report> {
    let g = *set.group();
    let order = g.order();
    let k = set.len() as u64;
    let prov = set.provenance();
    let mut c = Checker {
        checks: Vec::new(),
        diagnostics: Vec::new(),
    };

    // Difference-set layer.
    c.push(
        "sidon_property",
        "sidon-definition",
        "all nonzero pairwise differences distinct",
        "recheck",
        verify_sidon(&g, set.elements()),
    );
    if let Some(want) = family_cardinality(prov) {
        c.push(
            "cardinality",
            "construction-cardinality",
            want,
            k,
            k == want,
        );
    }
    let profile = DifferenceProfile::compute(set);
    let want_punctured = k * k.saturating_sub(1);
    c.push(
        "punctured_difference_count",
        "sidon-difference-count",
        want_punctured,
        profile.punctured_count(),
        profile.punctured_count() == want_punctured,
    );
    // |A| < sqrt(|X|) + 1/2, exactly: (2k - 1)^2 < 4|X|.
    let bound_holds = k == 0 || (2 * k - 1) * (2 * k - 1) < 4 * order;
    c.push(
        "sidon_size_bound",
        "sidon-size-bound",
        "(2|A|-1)^2 < 4|X|",
        format!("|A|={k}, |X|={order}"),
        bound_holds,
    );
    if let Some(want) = family_deficiency(prov) {
        c.push(
            "deficiency_closed_form",
            "deficiency-table",
            want,
            profile.deficiency(),
            profile.deficiency() == want,
        );
    }
    if let Ok(predicted) = predicted_complement(set) {
        let observed = profile.punctured_complement(&g);
        let matches = observed == predicted;
        c.push(
            "complement_closed_form",
            "difference-complement-closed-form",
            format!("{} predicted elements", predicted.len()),
            format!("{} missing elements", observed.len()),
            matches,
        );
    }

    // Graph layer.
    let graph = SumGraph::build(set, budget)?;
    let absolute = graph.absolute_vertices().len() as u64;
    let handshake = 2 * graph.edge_count() == order * k - absolute;
    c.push(
        "handshake_identity",
        "handshake",
        format!("2|E| = |X||A| - |P| = {}", order * k - absolute),
        format!("2|E| = {}", 2 * graph.edge_count()),
        handshake,
    );
    let spectrum_ok = (0..order).all(|x| {
        let expected = k - u64::from(set.contains(g.double(x)));
        graph.degree(x) == expected
    });
    c.push(
        "degree_spectrum",
        "degree-spectrum",
        "deg(x) = |A| - [x absolute]",
        if spectrum_ok { "all match" } else { "mismatch" },
        spectrum_ok,
    );
    if let Ok(ex) = graph.extremal_check() {
        c.push(
            "absolute_count_closed_form",
            "absolute-count-table",
            ex.formula_absolute,
            ex.observed_absolute,
            ex.absolute_match(),
        );
        c.push(
            "edge_count_closed_form",
            "edge-count-table",
            ex.formula_edges,
            ex.observed_edges,
            ex.edges_match(),
        );
        match ex.turan {
            crate::graph::TuranStatus::KnownExact { n, value, matches } => {
                c.push(
                    "edge_count_is_turan_number",
                    "small-order-extremal-values",
                    format!("ex({n}, C4) = {value}"),
                    ex.observed_edges,
                    matches,
                );
            }
            crate::graph::TuranStatus::ProvenEqualForLargeQ => {
                c.diag(
                    "edge_count_is_turan_number",
                    format!("|E| = {}", ex.observed_edges),
                    "equals ex(q^2+q+1, C4) for prime powers q > 13; cited, not re-derived here",
                );
            }
            crate::graph::TuranStatus::LowerBoundOnly => {}
        }
    }
    let c4_free = graph.is_c4_free();
    c.push(
        "c4_free",
        "sum-graph-c4-free",
        true,
        c4_free,
        c4_free,
    );

    // Tuple layer.
    let index = TupleIndex::new(set);
    let mut min_t = u64::MAX;
    let mut max_t = 0u64;
    for z in 0..order {
        if set.contains(z) {
            continue;
        }
        let m = index.tuple_set(z).expect("z outside set").len() as u64;
        min_t = min_t.min(m);
        max_t = max_t.max(m);
    }
    let any_outside = min_t != u64::MAX;
    if any_outside {
        c.push(
            "tuple_count_range",
            "tuple-count-range",
            format!("0 <= |T(z)| <= {k}"),
            format!("min {min_t}, max {max_t}"),
            max_t <= k,
        );
        if let Some((bound, exact)) = family_tuple_bound(prov) {
            let effective = bound.max(0) as u64;
            let ok = if exact {
                min_t == effective && max_t == effective
            } else {
                min_t >= effective
            };
            c.push(
                "tuple_count_family_bound",
                "tuple-count-lower-bound",
                if exact {
                    format!("|T(z)| = {bound} for all z")
                } else {
                    format!("|T(z)| >= {bound} for all z")
                },
                format!("min {min_t}, max {max_t}"),
                ok,
            );
        }
        let equivalence = (profile.deficiency() == 0) == (min_t == k);
        c.push(
            "deficiency_tuple_equivalence",
            "deficiency-tuple-equivalence",
            "d(A) = 0 iff |T(z)| = |A| for all z",
            format!("d(A) = {}, min |T(z)| = {min_t}", profile.deficiency()),
            equivalence,
        );
    }

    // Saturation and maximality.
    let maximal = is_maximal(set);
    let saturated = graph.is_c4_saturated()?;
    let tuple_bound = family_tuple_bound(prov).map(|(b, _)| b);
    match tuple_bound {
        Some(b) if b >= 4 => {
            c.push(
                "saturation",
                "saturation-tuple-threshold",
                true,
                saturated,
                saturated,
            );
        }
        _ => {
            c.diag(
                "saturation_empirical",
                saturated,
                "below the |T(z)| >= 4 threshold; decided empirically, not asserted",
            );
        }
    }
    match tuple_bound {
        Some(b) if b >= 1 => {
            c.push(
                "maximality",
                "maximal-via-tuples",
                true,
                maximal,
                maximal,
            );
        }
        _ => {
            c.diag(
                "maximality_empirical",
                maximal,
                "no nonempty-tuple guarantee at these parameters; reported only",
            );
        }
    }
    c.push(
        "saturated_implies_maximal",
        "saturated-implies-maximal",
        "saturation forces maximality",
        format!("saturated={saturated}, maximal={maximal}"),
        !saturated || maximal,
    );
    c.diag(
        "saturation_iff_maximality",
        format!("saturated={saturated}, maximal={maximal}, equivalent={}", saturated == maximal),
        "the equivalence for the six families; reported only",
    );

    // Per-pair sweeps: degenerate classification, cycle-count bounds, and
    // the correspondence between tuples and adjacency-counted paths.
    if order <= 1024 && any_outside {
        sweep_non_edges(&mut c, set, &graph, &index, prov);
    }

    if level == Level::Full {
        oracle_checks(&mut c, set, &graph, &index);
    }

    let pass = c.checks.iter().all(|ch| ch.pass);
    Ok(Report {
        schema: 1,
        meta: include_meta.then(|| Meta {
            tool: format!("sidon-graphs {}", env!("CARGO_PKG_VERSION")),
            unix_time: std::time::SystemTime::now()
                .duration_since(std::time::UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0),
        }),
        construction: ConstructionInfo {
            provenance: prov.to_string(),
            group: g.to_string(),
            group_order: order,
            set_size: k,
            elements: set.elements().to_vec(),
        },
        checks: c.checks,
        diagnostics: c.diagnostics,
        pass,
    })
}

fn sweep_non_edges(
    c: &mut Checker,
    set: &SidonSet,
    graph: &SumGraph,
    index: &TupleIndex,
    prov: Provenance,
) {
    let g = *set.group();
    let order = g.order();
    let mut per_case_ok = true;
    let mut correspondence_ok = true;
    let mut min_new = u64::MAX;
    let mut max_degenerate = 0u64;
    let mut lower_ok = true;
    let admissible = family_tuple_bound(prov).map(|(b, _)| b >= 4).unwrap_or(false);
    for z in 0..order {
        if set.contains(z) {
            continue;
        }
        let ts = index.tuple_set(z).expect("z outside set");
        for x in 0..order {
            let y = g.diff(z, x);
            if y <= x {
                continue;
            }
            let cls = classify_degenerate(&ts, &g, x, y).expect("valid decomposition");
            let (b, cc, d) = cls.per_case_counts();
            per_case_ok &= b <= 1 && cc <= 1 && d <= 1;
            max_degenerate = max_degenerate.max(cls.degenerate_count());
            let genuine = cls.genuine_count();
            let counted = graph.new_c4_count(x, y).expect("non-edge");
            correspondence_ok &= genuine == counted;
            min_new = min_new.min(counted);
            if admissible {
                lower_ok &= counted >= 1 && counted >= (ts.len() as u64).saturating_sub(3);
            }
        }
    }
    if min_new == u64::MAX {
        return; // no non-edges at all
    }
    c.push(
        "degenerate_class_uniqueness",
        "single-degenerate-per-class",
        "each collision case names at most one tuple",
        if per_case_ok { "holds" } else { "violated" },
        per_case_ok,
    );
    c.push(
        "tuple_path_correspondence",
        "tuples-are-paths",
        "genuine tuples = 4-cycles through the new edge",
        if correspondence_ok { "equal on every non-edge" } else { "mismatch" },
        correspondence_ok,
    );
    if admissible {
        c.push(
            "new_edge_cycle_bound",
            "added-edge-cycle-count",
            "every new edge creates >= max(1, |T(z)|-3) cycles",
            format!("min over non-edges: {min_new}"),
            lower_ok,
        );
    }
    if let Some(bound) = family_new_cycle_bound(prov) {
        if bound >= 1 {
            c.push(
                "family_new_cycle_bound",
                "family-new-cycle-bound",
                format!("every new edge creates >= {bound} cycles"),
                format!("min over non-edges: {min_new}"),
                min_new >= bound as u64,
            );
        }
    }
    c.diag(
        "strict_single_degenerate",
        format!(
            "max degenerate tuples per decomposition: {max_degenerate}; strict reading {}",
            if max_degenerate <= 1 { "holds" } else { "fails" }
        ),
        "one tuple per collision case is asserted; at most one in total is reported only",
    );
}

fn oracle_checks(c: &mut Checker, set: &SidonSet, graph: &SumGraph, index: &TupleIndex) {
    let g = *set.group();
    let order = g.order();
    if set.len() <= 64 {
        let agrees = oracle::oracle_sidon(&g, set.elements()).expect("within budget");
        c.push(
            "oracle_sidon_agreement",
            "oracle-differential",
            true,
            agrees,
            agrees,
        );
    }
    if set.len() <= 30 {
        let mut equal = true;
        for z in 0..order {
            if set.contains(z) {
                continue;
            }
            let fast: Vec<(u64, u64, u64)> = index
                .tuple_set(z)
                .expect("z outside set")
                .tuples
                .iter()
                .map(|t| (t.a1, t.a2, t.a3))
                .collect();
            let slow = oracle::oracle_tuple_set(&g, set.elements(), z).expect("within budget");
            equal &= fast == slow;
        }
        c.push(
            "oracle_tuple_agreement",
            "oracle-differential",
            "tuple sets identical for every z",
            if equal { "identical" } else { "mismatch" },
            equal,
        );
    }
    if order <= 4096 {
        let count = oracle::oracle_count_c4(order, &graph.edges()).expect("within budget");
        c.push(
            "oracle_c4_count_zero",
            "sum-graph-c4-free",
            0,
            count,
            count == 0,
        );
    }
    if order <= 400 {
        // Adding one edge to a C4-free graph: the total count afterwards
        // must equal the per-edge count. Exhaustive for tiny orders, a
        // fixed pseudo-random sample above that.
        let exhaustive = order <= 64;
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        let mut equal = true;
        let mut tested = 0u64;
        let base_edges = graph.edges();
        for x in 0..order {
            for y in x + 1..order {
                if graph.has_edge(x, y) {
                    continue;
                }
                if !exhaustive && next() % 97 != 0 {
                    continue;
                }
                let mut edges = base_edges.clone();
                edges.push((x, y));
                let total = oracle::oracle_count_c4(order, &edges).expect("within budget");
                equal &= total == graph.new_c4_count(x, y).expect("non-edge");
                tested += 1;
            }
        }
        c.push(
            "oracle_new_edge_agreement",
            "oracle-differential",
            "oracle count after adding an edge equals the fast per-edge count",
            format!("{tested} non-edges agree: {equal}"),
            equal || tested == 0,
        );
    }
}
