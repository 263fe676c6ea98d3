//! Argmax search over the enumeration and the theorem/corollary harnesses.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::enumerate::{pair_list, partitions, EdgeMask, Enumerator, HARD_MAX_ORDER};
use super::{EnumerationQuery, SearchError, STRICT_MARGIN, TIE_WINDOW};
use crate::families::{construct_family, FamilyId, FamilySpec};
use crate::graph::{canonical_form, from_canonical, internal_paths, pendant_paths, CycleClass, Graph};
use crate::spectra::{alpha_spectral_radius, build_a_alpha, dominant_eigpair};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOptions {
    /// Worker threads; 0 uses every available core. Results do not depend on it.
    pub jobs: usize,
}

/// The graphs within [`TIE_WINDOW`] of the best radius seen so far, plus the
/// best radius among everything that fell out of the window.
#[derive(Debug, Clone)]
struct Leaders {
    best: f64,
    entries: Vec<(f64, EdgeMask)>,
    runner_up: f64,
}

impl Leaders {
    fn new() -> Self {
        Leaders { best: f64::NEG_INFINITY, entries: Vec::new(), runner_up: f64::NEG_INFINITY }
    }

    fn offer(&mut self, radius: f64, mask: EdgeMask) {
        if radius > self.best {
            self.best = radius;
            let cutoff = radius - TIE_WINDOW;
            let mut dropped = f64::NEG_INFINITY;
            self.entries.retain(|&(r, _)| {
                let keep = r >= cutoff;
                if !keep {
                    dropped = dropped.max(r);
                }
                keep
            });
            self.runner_up = self.runner_up.max(dropped);
            self.entries.push((radius, mask));
        } else if radius >= self.best - TIE_WINDOW {
            self.entries.push((radius, mask));
        } else {
            self.runner_up = self.runner_up.max(radius);
        }
    }

    /// A graph whose radius is below this can change neither the entries nor
    /// the runner-up.
    fn cutoff(&self) -> f64 {
        self.runner_up.min(self.best - TIE_WINDOW)
    }

    fn absorb(&mut self, other: Leaders) {
        self.runner_up = self.runner_up.max(other.runner_up);
        for (r, m) in other.entries {
            self.offer(r, m);
        }
    }
}

struct SearchOutcome {
    leaders: Vec<Leaders>,
    enumerated: u64,
}

fn pool(jobs: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool construction")
}

/// One pass over the enumeration, tracking leaders for every alpha in the
/// query. Partitions are merged in their natural order, so the result does not
/// depend on the number of workers.
fn run_search(q: &EnumerationQuery, opts: SearchOptions) -> Result<SearchOutcome, SearchError> {
    q.validate()?;
    if q.alphas.is_empty() {
        return Err(SearchError::Parameters("at least one alpha is required".into()));
    }
    for &alpha in &q.alphas {
        if !(0.0..1.0).contains(&alpha) {
            return Err(SearchError::Parameters(format!("alpha = {alpha} is outside [0, 1)")));
        }
    }
    let n = q.order;
    let work = |prefix: &[usize; 2]| -> Result<SearchOutcome, SearchError> {
        let mut e = Enumerator::new(q, prefix);
        let mut leaders = vec![Leaders::new(); q.alphas.len()];
        let mut enumerated = 0;
        while let Some(mask) = e.next_mask() {
            enumerated += 1;
            let adj = mask.neighbor_bits(n, e.pairs());
            let mut graph = None;
            for (slot, &alpha) in leaders.iter_mut().zip(&q.alphas) {
                if provably_below(&adj[..n], alpha, slot.cutoff()) {
                    continue;
                }
                let g = graph.get_or_insert_with(|| mask.to_graph(n, e.pairs()));
                let radius = dominant_eigpair(&build_a_alpha(g, alpha)?, true)?.radius;
                slot.offer(radius, mask);
            }
        }
        Ok(SearchOutcome { leaders, enumerated })
    };

    let parts = partitions(n);
    let results: Vec<Result<SearchOutcome, SearchError>> =
        pool(opts.jobs).install(|| parts.par_iter().map(work).collect());

    let mut total = SearchOutcome { leaders: vec![Leaders::new(); q.alphas.len()], enumerated: 0 };
    for part in results {
        let part = part?;
        total.enumerated += part.enumerated;
        for (acc, l) in total.leaders.iter_mut().zip(part.leaders) {
            acc.absorb(l);
        }
    }
    Ok(total)
}

/// Slack on the Collatz-Wielandt bound against rounding error.
const SCREEN_SLACK: f64 = 1e-9;
const SCREEN_STEPS: usize = 24;

/// Whether `rho_alpha` of the connected graph with neighbor bitmasks `adj` is
/// certainly below `cutoff`. For any positive `x`, `max_v (Mx)_v / x_v` bounds
/// the spectral radius of a nonnegative `M` from above, and shifted power
/// steps drive that bound down to the radius.
fn provably_below(adj: &[u16], alpha: f64, cutoff: f64) -> bool {
    if !cutoff.is_finite() {
        return false;
    }
    let n = adj.len();
    let mut deg = [0.0f64; HARD_MAX_ORDER];
    for (d, bits) in deg.iter_mut().zip(adj) {
        *d = f64::from(bits.count_ones());
    }
    let shift = 1.0 + alpha * deg[..n].iter().fold(0.0f64, |a, &b| a.max(b));
    let mut x = [1.0f64; HARD_MAX_ORDER];
    let mut mx = [0.0f64; HARD_MAX_ORDER];
    for _ in 0..SCREEN_STEPS {
        let mut bound = 0.0f64;
        let mut scale = 0.0f64;
        for v in 0..n {
            let mut s = 0.0;
            let mut bits = adj[v];
            while bits != 0 {
                s += x[bits.trailing_zeros() as usize];
                bits &= bits - 1;
            }
            mx[v] = alpha * deg[v] * x[v] + (1.0 - alpha) * s;
            bound = bound.max(mx[v] / x[v]);
            scale = scale.max(mx[v] + shift * x[v]);
        }
        if bound + SCREEN_SLACK < cutoff {
            return true;
        }
        for v in 0..n {
            x[v] = (mx[v] + shift * x[v]) / scale;
        }
    }
    false
}

/// Outcome of a maximization over one enumeration query at one alpha.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExtremalReport {
    pub alpha: f64,
    pub order: usize,
    pub pendants: Option<usize>,
    pub class: Option<CycleClass>,
    pub max_radius: f64,
    /// Isomorphism classes within the tie window of the maximum.
    pub maximizer_count: usize,
    /// Labeled graphs within the tie window of the maximum.
    pub maximizer_labeled: usize,
    /// Largest radius outside the tie window, if any graph fell outside it.
    pub runner_up: Option<f64>,
    /// One maximizer in canonical labeling, as an edge list.
    pub witness: String,
    /// Hex encoding of the witness's canonical form.
    pub witness_canonical: String,
    /// Family expected to win: `T_i` under a class filter, `T3` otherwise.
    pub target: Option<FamilyId>,
    pub target_radius: Option<f64>,
    /// Whether every maximizer is isomorphic to the target.
    pub unique_iso_to_target: Option<bool>,
    pub graphs_enumerated: u64,
    pub tie_window: f64,
    pub wall_time_s: f64,
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

fn target_graph(q: &EnumerationQuery) -> Option<(FamilyId, Graph)> {
    let family = q.class.map_or(FamilyId::T3, FamilyId::for_class);
    let spec = FamilySpec::new(family, q.order, q.pendants?).ok()?;
    Some((family, construct_family(&spec)))
}

/// Isomorphism classes among the leaders, keyed by canonical form.
fn leader_classes(leaders: &Leaders, n: usize) -> BTreeMap<Vec<u8>, Vec<f64>> {
    let pairs = pair_list(n);
    let mut classes: BTreeMap<Vec<u8>, Vec<f64>> = BTreeMap::new();
    for &(r, mask) in &leaders.entries {
        let code = canonical_form(&mask.to_graph(n, &pairs)).expect("order within canonical limit");
        classes.entry(code).or_default().push(r);
    }
    classes
}

fn build_report(
    q: &EnumerationQuery,
    alpha: f64,
    leaders: &Leaders,
    enumerated: u64,
    started: Instant,
) -> Result<ExtremalReport, SearchError> {
    if leaders.entries.is_empty() {
        return Err(SearchError::Empty);
    }
    let classes = leader_classes(leaders, q.order);
    let (code, _) = classes.iter().next().expect("nonempty");
    let witness = from_canonical(code).expect("canonical forms decode");
    let target = target_graph(q);
    let (target_id, target_radius, unique) = match &target {
        Some((id, t)) => {
            let code_t = canonical_form(t)?;
            let unique = classes.len() == 1 && classes.contains_key(&code_t);
            (Some(*id), Some(alpha_spectral_radius(t, alpha)?.radius), Some(unique))
        }
        None => (None, None, None),
    };
    Ok(ExtremalReport {
        alpha,
        order: q.order,
        pendants: q.pendants,
        class: q.class,
        max_radius: leaders.best,
        maximizer_count: classes.len(),
        maximizer_labeled: leaders.entries.len(),
        runner_up: leaders.runner_up.is_finite().then_some(leaders.runner_up),
        witness: witness.to_edge_list(),
        witness_canonical: hex(code),
        target: target_id,
        target_radius,
        unique_iso_to_target: unique,
        graphs_enumerated: enumerated,
        tie_window: TIE_WINDOW,
        wall_time_s: started.elapsed().as_secs_f64(),
    })
}

/// Maximum `rho_alpha` over the query, one report per alpha in `q.alphas`,
/// from a single pass over the enumeration.
pub fn argmax_radius_grid(q: &EnumerationQuery, opts: SearchOptions) -> Result<Vec<ExtremalReport>, SearchError> {
    let started = Instant::now();
    let outcome = run_search(q, opts)?;
    q.alphas
        .iter()
        .zip(&outcome.leaders)
        .map(|(&alpha, leaders)| build_report(q, alpha, leaders, outcome.enumerated, started))
        .collect()
}

pub fn argmax_radius(q: &EnumerationQuery, alpha: f64, opts: SearchOptions) -> Result<ExtremalReport, SearchError> {
    let q = EnumerationQuery { alphas: vec![alpha], ..q.clone() };
    Ok(argmax_radius_grid(&q, opts)?.remove(0))
}

fn check_theorem_params(n: usize, k: usize, alphas: &[f64]) -> Result<(), SearchError> {
    if k == 0 || k + 7 > n {
        return Err(SearchError::Parameters(format!("need 1 <= k <= n - 7, got n = {n}, k = {k}")));
    }
    if alphas.is_empty() {
        return Err(SearchError::Parameters("at least one alpha is required".into()));
    }
    for &alpha in alphas {
        if !(0.5..1.0).contains(&alpha) {
            return Err(SearchError::Parameters(format!("alpha = {alpha} is outside [1/2, 1)")));
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub extremal: ExtremalReport,
    /// `rho_alpha` of `T3`, `T4`, `T6`, `T7` at the same `(n, k)`.
    pub family_radii: Vec<(FamilyId, f64)>,
    /// `T3` beats the other three families by more than [`STRICT_MARGIN`].
    pub family_ordering_holds: bool,
    pub strict_margin: f64,
    pub passed: bool,
}

fn family_radii(n: usize, k: usize, alpha: f64) -> Result<Vec<(FamilyId, f64)>, SearchError> {
    FamilyId::ALL
        .iter()
        .map(|&id| {
            let g = construct_family(&FamilySpec::new(id, n, k)?);
            Ok((id, alpha_spectral_radius(&g, alpha)?.radius))
        })
        .collect()
}

/// Exhaustive check that `T3(n, k)` is the unique maximizer of `rho_alpha`
/// among tricyclic graphs of order `n` with `k` pendant vertices, for each
/// alpha in `alphas`.
pub fn verify_theorem_grid(
    n: usize,
    k: usize,
    alphas: &[f64],
    opts: SearchOptions,
) -> Result<Vec<TheoremReport>, SearchError> {
    check_theorem_params(n, k, alphas)?;
    let q = EnumerationQuery::new(n, k).with_alphas(alphas);
    argmax_radius_grid(&q, opts)?
        .into_iter()
        .map(|extremal| {
            let radii = family_radii(n, k, extremal.alpha)?;
            let t3 = radii[0].1;
            let ordering = radii[1..].iter().all(|&(_, r)| t3 > r + STRICT_MARGIN);
            let passed = ordering && extremal.unique_iso_to_target == Some(true);
            Ok(TheoremReport {
                extremal,
                family_radii: radii,
                family_ordering_holds: ordering,
                strict_margin: STRICT_MARGIN,
                passed,
            })
        })
        .collect()
}

pub fn verify_theorem(n: usize, k: usize, alpha: f64, opts: SearchOptions) -> Result<TheoremReport, SearchError> {
    Ok(verify_theorem_grid(n, k, &[alpha], opts)?.remove(0))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorollaryReport {
    pub alpha: f64,
    pub order: usize,
    pub pendants: usize,
    pub t3_radius: f64,
    pub graphs_checked: u64,
    /// Graphs not isomorphic to `T3` with `rho >= rho(T3) - STRICT_MARGIN`.
    pub violations: usize,
    pub first_violation: Option<String>,
    /// Graphs not isomorphic to `T3` inside the tie window but below the
    /// strictness margin; these need a higher-precision look.
    pub flagged: usize,
    /// `rho(T3)` minus the largest radius of any graph not isomorphic to `T3`.
    pub min_gap: f64,
    pub strict_margin: f64,
    pub passed: bool,
    pub wall_time_s: f64,
}

/// Contrapositive of the theorem: no tricyclic graph with `k` pendant
/// vertices other than `T3` reaches `rho_alpha(T3)`.
pub fn verify_corollary_grid(
    n: usize,
    k: usize,
    alphas: &[f64],
    opts: SearchOptions,
) -> Result<Vec<CorollaryReport>, SearchError> {
    check_theorem_params(n, k, alphas)?;
    let started = Instant::now();
    let q = EnumerationQuery::new(n, k).with_alphas(alphas);
    let outcome = run_search(&q, opts)?;
    let t3 = construct_family(&FamilySpec::new(FamilyId::T3, n, k)?);
    let t3_code = canonical_form(&t3)?;

    alphas
        .iter()
        .zip(&outcome.leaders)
        .map(|(&alpha, leaders)| {
            let t3_radius = alpha_spectral_radius(&t3, alpha)?.radius;
            let mut best_other = leaders.runner_up;
            let mut violations = 0;
            let mut flagged = 0;
            let mut first_violation = None;
            for (code, radii) in leader_classes(leaders, n) {
                if code == t3_code {
                    continue;
                }
                for &r in &radii {
                    best_other = best_other.max(r);
                    if r >= t3_radius - STRICT_MARGIN {
                        violations += 1;
                        first_violation.get_or_insert_with(|| {
                            from_canonical(&code).expect("canonical forms decode").to_edge_list()
                        });
                    } else {
                        flagged += 1;
                    }
                }
            }
            Ok(CorollaryReport {
                alpha,
                order: n,
                pendants: k,
                t3_radius,
                graphs_checked: outcome.enumerated,
                violations,
                first_violation,
                flagged,
                min_gap: t3_radius - best_other,
                strict_margin: STRICT_MARGIN,
                passed: violations == 0 && flagged == 0,
                wall_time_s: started.elapsed().as_secs_f64(),
            })
        })
        .collect()
}

pub fn verify_corollary(n: usize, k: usize, alpha: f64, opts: SearchOptions) -> Result<CorollaryReport, SearchError> {
    Ok(verify_corollary_grid(n, k, &[alpha], opts)?.remove(0))
}

/// Shape of the pendant part and internal paths of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructuralReport {
    /// Distinct anchors of pendant paths.
    pub anchors: Vec<usize>,
    pub path_lengths: Vec<usize>,
    /// All pendant vertices end pendant paths from a single anchor on a cycle.
    pub single_anchor: bool,
    pub nearly_equal: bool,
    /// Open internal paths have length at most 2, with adjacent ends at 2.
    pub open_paths_short: bool,
    /// Closed internal paths have length exactly 3.
    pub closed_paths_triangles: bool,
}

/// Vertices that survive repeated removal of degree-1 vertices.
fn two_core(g: &Graph) -> Vec<bool> {
    let mut deg = g.degrees();
    let mut alive = vec![true; g.order()];
    let mut stack: Vec<usize> = (0..g.order()).filter(|&v| deg[v] <= 1).collect();
    while let Some(v) = stack.pop() {
        if !alive[v] {
            continue;
        }
        alive[v] = false;
        for &w in g.neighbors(v) {
            if alive[w] {
                deg[w] -= 1;
                if deg[w] == 1 {
                    stack.push(w);
                }
            }
        }
    }
    alive
}

pub fn structural_check(g: &Graph) -> StructuralReport {
    let paths = pendant_paths(g);
    let mut anchors: Vec<usize> = paths.iter().map(|p| p.anchor).collect();
    anchors.sort_unstable();
    anchors.dedup();
    let core = two_core(g);
    let single_anchor = anchors.len() == 1 && core[anchors[0]] && paths.len() == g.pendant_count();
    let path_lengths: Vec<usize> = paths.iter().map(|p| p.len()).collect();
    let nearly_equal = match (path_lengths.iter().min(), path_lengths.iter().max()) {
        (Some(lo), Some(hi)) => hi - lo <= 1,
        _ => true,
    };
    let internal = internal_paths(g);
    let open_paths_short = internal
        .iter()
        .filter(|p| !p.is_closed())
        .all(|p| p.len() == 1 || (p.len() == 2 && g.has_edge(p.start, p.end)));
    let closed_paths_triangles = internal.iter().filter(|p| p.is_closed()).all(|p| p.len() == 3);
    StructuralReport { anchors, path_lengths, single_anchor, nearly_equal, open_paths_short, closed_paths_triangles }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn leaders_window_and_runner_up() {
        let mut l = Leaders::new();
        l.offer(1.0, EdgeMask(1));
        l.offer(2.0, EdgeMask(2));
        l.offer(2.0 - 1e-10, EdgeMask(3));
        l.offer(1.5, EdgeMask(4));
        assert_eq!(l.best, 2.0);
        assert_eq!(l.entries.len(), 2);
        assert_eq!(l.runner_up, 1.5);

        let mut other = Leaders::new();
        other.offer(3.0, EdgeMask(5));
        l.absorb(other);
        assert_eq!(l.best, 3.0);
        assert_eq!(l.entries, vec![(3.0, EdgeMask(5))]);
        assert_eq!(l.runner_up, 2.0);
    }

    #[test]
    fn family_structure() {
        for id in FamilyId::ALL {
            for k in 1..=3 {
                let g = construct_family(&FamilySpec::new(id, 8 + k, k).unwrap());
                let s = structural_check(&g);
                assert!(s.single_anchor && s.nearly_equal, "{id} {k}: {s:?}");
                assert!(s.open_paths_short && s.closed_paths_triangles, "{id} {k}: {s:?}");
                assert_eq!(s.anchors, vec![0]);
            }
        }
    }

    #[test]
    fn structural_check_detects_spread_pendants() {
        // K4 with pendants on two different vertices
        let g = Graph::complete(4).attach_pendant_paths(0, &[1]).unwrap().attach_pendant_paths(1, &[1]).unwrap();
        assert!(!structural_check(&g).single_anchor);
        // T3 base with unbalanced paths
        let g = crate::families::base_graph(crate::families::BaseId::G1).attach_pendant_paths(0, &[3, 1]).unwrap();
        assert!(!structural_check(&g).nearly_equal);
    }

    #[test]
    fn small_search_is_job_count_independent() {
        let q = EnumerationQuery::new(7, 1).with_alphas(&[0.5, 0.8]);
        let a = argmax_radius_grid(&q, SearchOptions { jobs: 1 }).unwrap();
        let b = argmax_radius_grid(&q, SearchOptions { jobs: 3 }).unwrap();
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.max_radius.to_bits(), y.max_radius.to_bits());
            assert_eq!(x.witness_canonical, y.witness_canonical);
            assert_eq!(x.graphs_enumerated, y.graphs_enumerated);
        }
    }

    #[test]
    fn screen_never_rejects_a_graph_at_or_above_the_cutoff() {
        let mut rng = crate::extremal::random::rng_from_seed(5);
        for _ in 0..300 {
            let g = crate::extremal::random::uniform_connected_graph(&mut rng, 4..=12);
            let mut adj = [0u16; HARD_MAX_ORDER];
            for &(u, v) in g.edges() {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
            for alpha in [0.0, 0.5, 0.9] {
                let rho = alpha_spectral_radius(&g, alpha).unwrap().radius;
                for cutoff in [rho - 1e-6, rho, rho + 1e-12] {
                    assert!(!provably_below(&adj[..g.order()], alpha, cutoff));
                }
                assert!(provably_below(&adj[..g.order()], alpha, rho + 0.5));
            }
        }
    }

    #[test]
    fn screened_search_matches_brute_force() {
        // oracle: every radius computed, no screening
        let alphas = [0.0, 0.5, 0.75];
        let q = EnumerationQuery::new(7, 2).with_alphas(&alphas);
        let reports = argmax_radius_grid(&q, SearchOptions { jobs: 1 }).unwrap();
        for (report, &alpha) in reports.iter().zip(&alphas) {
            let mut radii: Vec<(f64, Graph)> = crate::extremal::enumerate_tricyclic(&q)
                .unwrap()
                .map(|g| (alpha_spectral_radius(&g, alpha).unwrap().radius, g))
                .collect();
            radii.sort_by(|a, b| b.0.total_cmp(&a.0));
            let best = radii[0].0;
            let inside = radii.iter().filter(|(r, _)| *r >= best - TIE_WINDOW).count();
            let runner_up = radii.iter().map(|(r, _)| *r).find(|&r| r < best - TIE_WINDOW);
            assert_eq!(report.graphs_enumerated as usize, radii.len());
            assert_eq!(report.max_radius.to_bits(), best.to_bits());
            assert_eq!(report.maximizer_labeled, inside);
            assert_eq!(report.runner_up.map(f64::to_bits), runner_up.map(f64::to_bits));
        }
    }

    #[test]
    fn theorem_parameter_checks() {
        assert!(verify_theorem(8, 2, 0.5, SearchOptions::default()).is_err());
        assert!(verify_theorem(8, 1, 0.4, SearchOptions::default()).is_err());
        assert!(verify_theorem(8, 0, 0.5, SearchOptions::default()).is_err());
    }
}
