//! Sparse high-girth sampling, welcoming-path closure, and the blockaded
//! counterexample tournament built from it.

use std::collections::{BTreeSet, VecDeque};

use num_bigint::BigUint;
use num_rational::Ratio;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::backedge::tournament_from_backedges;
use crate::bits::{bit, low_mask, Bits};
use crate::blockade::{rainbow_copy, Blockade, Host};
use crate::catalog;
use crate::enumerate::backedge_census;
use crate::error::{Error, Result};
use crate::ordered::{walk_imbalance, OrderedGraph, Walk};
use crate::search::{max_anticomplete_pair, max_pure_pair, PurePair, PURE_PAIR_LIMIT};
use crate::tournament::Tournament;

/// Sampling happens on `2n` vertices, which must fit in one row word.
pub const CONSTRUCT_LIMIT: usize = 32;
pub const MAX_BLOCKS: usize = 8;
/// Closed walks up to this length must be balanced.
pub const WALK_LENGTH: usize = 6;

const STREAM_GIRTH: u64 = 1 << 32;
const STREAM_RESAMPLE: u64 = 2 << 32;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionParams {
    pub k: usize,
    pub c: Ratio<u64>,
    pub w: usize,
    pub seed: u64,
}

impl ConstructionParams {
    pub fn new(k: usize, c: Ratio<u64>, w: usize, seed: u64) -> Result<Self> {
        if k == 0 || k > MAX_BLOCKS {
            return Err(Error::InvalidArgument(format!("k must lie in 1..={MAX_BLOCKS}")));
        }
        if c <= Ratio::from_integer(0) || c >= Ratio::from_integer(1) {
            return Err(Error::InvalidArgument("c must lie strictly between 0 and 1".into()));
        }
        if w == 0 {
            return Err(Error::InvalidArgument("width must be positive".into()));
        }
        if k * w > CONSTRUCT_LIMIT {
            return Err(Error::TooLarge {
                what: "construction",
                n: k * w,
                limit: CONSTRUCT_LIMIT,
            });
        }
        Ok(ConstructionParams { k, c, w, seed })
    }

    pub fn n(&self) -> usize {
        self.k * self.w
    }

    pub fn c_prime(&self) -> Ratio<u64> {
        self.c / Ratio::from_integer(self.k as u64)
    }

    pub fn g(&self) -> usize {
        6 * 3usize.pow(self.k as u32)
    }

    pub fn d(&self) -> u64 {
        degree_bound(self.c_prime())
    }

    /// `d^(3^k)`.
    pub fn big_d(&self) -> BigUint {
        BigUint::from(self.d()).pow(3u32.pow(self.k as u32))
    }

    pub fn p(&self) -> f64 {
        edge_probability(self.c_prime(), self.n())
    }

    pub fn derived(&self) -> Derived {
        Derived {
            n: self.n(),
            c_prime: self.c_prime().to_string(),
            g: self.g(),
            d: self.d(),
            big_d: self.big_d().to_string(),
            p: self.p(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Derived {
    pub n: usize,
    pub c_prime: String,
    pub g: usize,
    pub d: u64,
    pub big_d: String,
    pub p: f64,
}

fn ratio_f64(c: Ratio<u64>) -> f64 {
    *c.numer() as f64 / *c.denom() as f64
}

/// Least `d ≥ 1` with `(d c² / 8e)^d ≥ 6`.
pub fn degree_bound(c: Ratio<u64>) -> u64 {
    let scale = ratio_f64(c).powi(2) / (8.0 * std::f64::consts::E);
    let mut d = (1.0 / scale).floor().max(1.0) as u64;
    while (d as f64) * (d as f64 * scale).ln() < 6f64.ln() {
        d += 1;
    }
    d
}

/// `4/(c² n)`, capped at `1/n` so that a desk-sized sample is not complete.
pub fn edge_probability(c: Ratio<u64>, n: usize) -> f64 {
    let n = n as f64;
    (4.0 / (ratio_f64(c).powi(2) * n)).min(1.0 / n)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "result")]
pub enum AnticompleteCheck {
    /// Largest anticomplete pair has order below `cn`.
    Verified { max_order: usize },
    Violated { pair: PurePair },
    Unverified,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GirthSample {
    pub graph: OrderedGraph,
    pub attempts: usize,
    pub deleted_for_cycles: usize,
    pub deleted_for_degree: usize,
    pub max_degree: usize,
    /// `None` for a forest.
    pub girth: Option<usize>,
    pub anticomplete: AnticompleteCheck,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SampleOptions {
    pub retries: usize,
    /// Resample until the anticomplete bound is verified.
    pub require_anticomplete: bool,
}

impl Default for SampleOptions {
    fn default() -> Self {
        SampleOptions {
            retries: 64,
            require_anticomplete: true,
        }
    }
}

/// A shortest cycle among `alive`, as a vertex list.
fn shortest_cycle(g: &OrderedGraph, alive: u64) -> Option<Vec<usize>> {
    let n = g.n();
    let mut best: Option<Vec<usize>> = None;
    for r in Bits(alive) {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[r] = 0;
        let mut queue = VecDeque::from([r]);
        while let Some(u) = queue.pop_front() {
            for w in Bits(g.neighbours(u) & alive) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if w != parent[u] && parent[w] != u {
                    let len = dist[u] + dist[w] + 1;
                    if best.as_ref().is_none_or(|b| len < b.len()) {
                        // Minimal over all roots, so the two tree paths meet only at r.
                        let path = |mut x: usize| {
                            let mut p = vec![x];
                            while x != r {
                                x = parent[x];
                                p.push(x);
                            }
                            p
                        };
                        let mut cyc = path(u);
                        let mut back = path(w);
                        back.pop();
                        back.reverse();
                        cyc.extend(back);
                        best = Some(cyc);
                    }
                }
            }
        }
    }
    best.filter(|c| {
        let distinct: BTreeSet<_> = c.iter().collect();
        distinct.len() == c.len()
    })
}

pub fn girth(g: &OrderedGraph) -> Option<usize> {
    shortest_cycle(g, low_mask(g.n())).map(|c| c.len())
}

fn anticomplete_check(g: &OrderedGraph, c: Ratio<u64>) -> Result<AnticompleteCheck> {
    if g.n() > PURE_PAIR_LIMIT {
        return Ok(AnticompleteCheck::Unverified);
    }
    let n = g.n() as u64;
    Ok(match max_anticomplete_pair(g)? {
        Some(p) if (p.order() as u64) * c.denom() >= c.numer() * n => {
            AnticompleteCheck::Violated { pair: p }
        }
        p => AnticompleteCheck::Verified {
            max_order: p.map_or(0, |p| p.order()),
        },
    })
}

/// Random graph on `2n` vertices, thinned to `n` vertices with no cycle of
/// length at most `g` and every degree below `degree_bound(c)`.
pub fn sample_girth_graph(
    n: usize,
    c: Ratio<u64>,
    g: usize,
    seed: u64,
    opts: SampleOptions,
) -> Result<GirthSample> {
    if !(2..=CONSTRUCT_LIMIT).contains(&n) {
        return Err(Error::SizeOutOfRange(n));
    }
    let d = degree_bound(c);
    let p = edge_probability(c, n);
    for attempt in 0..opts.retries {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(STREAM_GIRTH + attempt as u64);
        let mut full = OrderedGraph::empty(2 * n)?;
        for a in 0..2 * n {
            for b in a + 1..2 * n {
                if rng.gen_bool(p) {
                    full.add_edge(a, b);
                }
            }
        }
        let mut alive = low_mask(2 * n);
        let mut deleted_for_cycles = 0;
        while let Some(cyc) = shortest_cycle(&full, alive).filter(|c| c.len() <= g) {
            let v = *cyc
                .iter()
                .max_by_key(|&&v| ((full.neighbours(v) & alive).count_ones(), usize::MAX - v))
                .expect("cycles are nonempty");
            alive &= !bit(v);
            deleted_for_cycles += 1;
        }
        let heavy = Bits(alive)
            .filter(|&v| (full.neighbours(v) & alive).count_ones() as u64 >= d)
            .fold(0u64, |m, v| m | bit(v));
        alive &= !heavy;
        if (alive.count_ones() as usize) < n {
            continue;
        }
        let keep: Vec<usize> = Bits(alive).take(n).collect();
        let graph = full.induced_on(&keep);
        let anticomplete = anticomplete_check(&graph, c)?;
        if opts.require_anticomplete && matches!(anticomplete, AnticompleteCheck::Violated { .. }) {
            continue;
        }
        return Ok(GirthSample {
            max_degree: graph.max_degree(),
            girth: girth(&graph),
            graph,
            attempts: attempt + 1,
            deleted_for_cycles,
            deleted_for_degree: heavy.count_ones() as usize,
            anticomplete,
        });
    }
    Err(Error::RetryLimitExceeded(opts.retries))
}

/// Distance between the blocks of `u` and `v`.
pub fn b_length(b: &Blockade, u: usize, v: usize) -> Result<usize> {
    Ok(b.block_of(u)?.abs_diff(b.block_of(v)?))
}

/// A path on four distinct vertices, from the earlier end to the later,
/// whose edges are all longer than the gap between its ends, with
/// imbalance exactly `+1`.
pub fn is_welcoming(j: &OrderedGraph, b: &Blockade, path: &Walk) -> Result<bool> {
    if path.0.len() != 4 {
        return Err(Error::InvalidArgument(format!(
            "a welcoming path has 4 vertices, got {}",
            path.0.len()
        )));
    }
    let imbalance = walk_imbalance(j, path)?;
    let p = &path.0;
    let distinct: BTreeSet<_> = p.iter().collect();
    let (s, t) = (p[0], p[3]);
    if distinct.len() != 4 || s > t {
        return Ok(false);
    }
    let ends = b_length(b, s, t)?;
    if ends == 0 {
        return Ok(false);
    }
    for e in p.windows(2) {
        if b_length(b, e[0], e[1])? <= ends {
            return Ok(false);
        }
    }
    Ok(imbalance == 1)
}

/// Pairs `(s, t)`, `s < t`, at block distance exactly `i`, nonadjacent in
/// `j`, and joined by a welcoming path of `j`.
pub fn good_pairs(j: &OrderedGraph, b: &Blockade, i: usize) -> Result<BTreeSet<(usize, usize)>> {
    let mut out = BTreeSet::new();
    if i == 0 {
        return Ok(out);
    }
    // Every welcoming path is s-x-y-t for some ordered middle edge (x, y).
    for (x0, y0) in j.edges() {
        for (x, y) in [(x0, y0), (y0, x0)] {
            for s in Bits(j.neighbours(x) & !bit(y)) {
                for t in Bits(j.neighbours(y) & !bit(x) & !bit(s)) {
                    if s < t
                        && !j.adjacent(s, t)
                        && b_length(b, s, t)? == i
                        && is_welcoming(j, b, &Walk(vec![s, x, y, t]))?
                    {
                        out.insert((s, t));
                    }
                }
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelCensus {
    pub level: usize,
    pub added: Vec<(usize, usize)>,
    pub max_degree: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Closure {
    pub graph: OrderedGraph,
    /// Levels `k-1` down to `1`.
    pub levels: Vec<LevelCensus>,
}

/// Adds, for `i = k-1, ..., 1`, an edge for every `i`-good pair of the
/// previous level.
pub fn welcoming_closure(jk: &OrderedGraph, b: &Blockade) -> Result<Closure> {
    if !b.is_respectful() {
        return Err(Error::InvalidBlockade("closure needs a respectful blockade".into()));
    }
    if b.host_size() != jk.n() {
        return Err(Error::InvalidBlockade("blockade is over a different host".into()));
    }
    let mut graph = jk.clone();
    let mut levels = Vec::new();
    for i in (1..b.len()).rev() {
        let added: Vec<_> = good_pairs(&graph, b, i)?.into_iter().collect();
        graph = graph.with_edges(&added)?;
        levels.push(LevelCensus {
            level: i,
            added,
            max_degree: graph.max_degree(),
        });
    }
    Ok(Closure { graph, levels })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionCheck {
    pub id: String,
    pub statement: String,
    pub status: CheckStatus,
    /// Informational checks do not decide the verdict.
    pub required: bool,
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConstructionReport {
    pub params: ConstructionParams,
    pub derived: Derived,
    pub sample_attempts: usize,
    pub levels: Vec<LevelCensus>,
    pub checks: Vec<ConstructionCheck>,
}

impl ConstructionReport {
    pub fn passed(&self) -> bool {
        self.checks
            .iter()
            .all(|c| !c.required || c.status != CheckStatus::Fail)
    }

    pub fn failed_ids(&self) -> Vec<String> {
        self.checks
            .iter()
            .filter(|c| c.required && c.status == CheckStatus::Fail)
            .map(|c| c.id.clone())
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Construction {
    pub j: OrderedGraph,
    pub blockade: Blockade,
    pub g: Tournament,
    pub report: ConstructionReport,
}

/// Imbalances of closed walks of each simple cycle of length `3..=max_len`,
/// returning the first unbalanced one.
pub fn unbalanced_cycle(j: &OrderedGraph, max_len: usize) -> Option<Vec<usize>> {
    fn go(j: &OrderedGraph, max_len: usize, path: &mut Vec<usize>, used: u64) -> bool {
        let (first, last) = (path[0], *path.last().expect("nonempty"));
        if path.len() >= 3 && j.adjacent(last, first) && path[1] < last {
            let mut closed = path.clone();
            closed.push(first);
            if walk_imbalance(j, &Walk(closed)).expect("cycle is a walk") != 0 {
                return true;
            }
        }
        if path.len() == max_len {
            return false;
        }
        // Cycles are listed from their least vertex.
        for v in Bits(j.neighbours(last) & !used & !low_mask(first + 1)) {
            path.push(v);
            if go(j, max_len, path, used | bit(v)) {
                return true;
            }
            path.pop();
        }
        false
    }
    (0..j.n()).find_map(|s| {
        let mut path = vec![s];
        go(j, max_len, &mut path, bit(s)).then_some(path)
    })
}

/// Whether some closed walk of length at most `max_len` has nonzero
/// imbalance, by reachability over (vertex, imbalance) states.
pub fn has_unbalanced_closed_walk(j: &OrderedGraph, max_len: usize) -> bool {
    let off = max_len;
    (0..j.n()).any(|s| {
        let mut reach = vec![0u64; 2 * max_len + 1];
        reach[off] = bit(s);
        for _ in 0..max_len {
            let mut next = vec![0u64; 2 * max_len + 1];
            for (idx, &set) in reach.iter().enumerate() {
                for v in Bits(set) {
                    let nb = j.neighbours(v);
                    let fwd = nb & !low_mask(v + 1);
                    if idx + 1 < next.len() {
                        next[idx + 1] |= fwd;
                    }
                    if idx > 0 {
                        next[idx - 1] |= nb & low_mask(v);
                    }
                }
            }
            reach = next;
            if reach
                .iter()
                .enumerate()
                .any(|(idx, &set)| idx != off && set & bit(s) != 0)
            {
                return true;
            }
        }
        false
    })
}

fn check(
    id: &str,
    statement: &str,
    status: CheckStatus,
    required: bool,
    witness: String,
) -> ConstructionCheck {
    ConstructionCheck {
        id: id.into(),
        statement: statement.into(),
        status,
        required,
        witness,
    }
}

fn pass_if(ok: bool) -> CheckStatus {
    if ok {
        CheckStatus::Pass
    } else {
        CheckStatus::Fail
    }
}

/// Samples `J_k`, closes it under welcoming paths, and verifies the result.
/// A failed verification is reported in the checks, not as an error.
pub fn build_counterexample(params: &ConstructionParams) -> Result<Construction> {
    let n = params.n();
    let sample = sample_girth_graph(
        n,
        params.c_prime(),
        params.g(),
        params.seed,
        SampleOptions {
            retries: 64,
            require_anticomplete: false,
        },
    )?;
    let blockade = Blockade::intervals(params.k, params.w)?;
    let closure = welcoming_closure(&sample.graph, &blockade)?;
    let j = closure.graph.clone();
    let g = tournament_from_backedges(&j)?;
    let mut checks = Vec::new();

    let big_d = params.big_d();
    checks.push(check(
        "a",
        "maximum degree of J is at most D",
        pass_if(BigUint::from(j.max_degree()) <= big_d),
        true,
        format!("max degree {}", j.max_degree()),
    ));

    let cyc = unbalanced_cycle(&j, WALK_LENGTH);
    let walk = has_unbalanced_closed_walk(&j, WALK_LENGTH);
    checks.push(check(
        "b",
        "every cycle of J of length 3 to 6 is balanced, and so is every closed walk of length at most 6",
        pass_if(cyc.is_none() && !walk),
        true,
        match (&cyc, walk) {
            (None, false) => "no unbalanced cycle; no unbalanced closed walk".into(),
            (Some(c), _) if !walk => format!("routes disagree: cycle {c:?} but no walk"),
            (None, true) => "routes disagree: walk but no cycle".into(),
            (Some(c), _) => format!("unbalanced cycle {c:?}"),
        },
    ));

    let host_j = Host::Ordered(j.clone());
    let mut obs_hit = None;
    for (i, h) in catalog::obstructions().into_iter().enumerate() {
        if let Some(m) = rainbow_copy(&host_j, &blockade, &Host::Ordered(h))? {
            obs_hit = Some((i + 1, m));
            break;
        }
    }
    checks.push(check(
        "c",
        "J has no rainbow copy of OBS_1..OBS_4",
        pass_if(obs_hit.is_none()),
        true,
        obs_hit.map_or("none".into(), |(i, m)| format!("OBS_{i} at {m:?}")),
    ));

    let cw = params.c * Ratio::from_integer(params.w as u64);
    if n <= PURE_PAIR_LIMIT {
        let best = max_pure_pair(&g)?;
        let order = best.as_ref().map_or(0, |p| p.order());
        checks.push(check(
            "d",
            "G has no pure pair of order at least cW",
            pass_if(Ratio::from_integer(order as u64) < cw),
            true,
            format!("largest pure pair has order {order}; cW = {cw}; pair {}", best.map_or("none".into(), |p| p.to_string())),
        ));
    } else {
        checks.push(check(
            "d",
            "G has no pure pair of order at least cW",
            CheckStatus::Skipped,
            true,
            format!("n = {n} exceeds {PURE_PAIR_LIMIT}"),
        ));
    }

    let host_g = Host::Tournament(g.clone());
    let mut tour_hit = None;
    for (name, h) in [("D_5", catalog::d5()), ("P_7_minus", catalog::p7_minus())] {
        if let Some(m) = rainbow_copy(&host_g, &blockade, &Host::Tournament(h))? {
            tour_hit = Some(format!("{name} at {m:?}"));
            break;
        }
    }
    let mut census_hit = None;
    for (name, h) in [("D_5", catalog::d5()), ("P_7_minus", catalog::p7_minus())] {
        for bg in backedge_census(&h)? {
            if let Some(m) = rainbow_copy(&host_j, &blockade, &Host::Ordered(bg.clone()))? {
                census_hit = Some(format!("backedge graph {:?} of {name} at {m:?}", bg.edges_1based()));
                break;
            }
        }
        if census_hit.is_some() {
            break;
        }
    }
    checks.push(check(
        "e",
        "G has no rainbow copy of D_5 or P_7_minus, checked in G and via their backedge graphs in J",
        pass_if(tour_hit.is_none() && census_hit.is_none()),
        true,
        match (&tour_hit, &census_hit) {
            (None, None) => "none by either route".into(),
            (t, c) => format!("tournament route: {t:?}; backedge route: {c:?}"),
        },
    ));

    checks.push(check(
        "blockade",
        "the blockade is respectful with k blocks of width W",
        pass_if(blockade.is_respectful() && blockade.width() == params.w && blockade.len() == params.k),
        true,
        blockade.to_text().replace('\n', "; "),
    ));

    let mut degrees = vec![sample.graph.max_degree()];
    degrees.extend(closure.levels.iter().map(|l| l.max_degree));
    let growth_ok = degrees
        .windows(2)
        .all(|w| (w[1] as u128) <= (w[0] as u128).pow(3).max(w[0] as u128));
    checks.push(check(
        "degree_growth",
        "each closure level at most cubes the maximum degree",
        pass_if(growth_ok),
        true,
        format!("max degrees from J_k down: {degrees:?}"),
    ));

    let mut open = None;
    for i in 1..params.k {
        if let Some(&pair) = good_pairs(&j, &blockade, i)?.iter().next() {
            open = Some((i, pair));
            break;
        }
    }
    checks.push(check(
        "welcoming_ends",
        "the ends of every welcoming path of J are adjacent",
        pass_if(open.is_none()),
        true,
        open.map_or("none open".into(), |(i, p)| format!("level {i} pair {p:?}")),
    ));

    checks.push(check(
        "girth",
        "J_k has no cycle of length at most g and maximum degree below d",
        pass_if(
            sample.girth.is_none_or(|x| x > params.g()) && (sample.max_degree as u64) < params.d(),
        ),
        true,
        format!("girth {:?}, max degree {}", sample.girth, sample.max_degree),
    ));

    // cW = c'n with n = kW.
    let anti = anticomplete_check(&j, params.c_prime())?;
    checks.push(check(
        "j_anticomplete",
        "J has no anticomplete pair of order at least cW",
        match &anti {
            AnticompleteCheck::Verified { .. } => CheckStatus::Pass,
            AnticompleteCheck::Violated { .. } => CheckStatus::Fail,
            AnticompleteCheck::Unverified => CheckStatus::Skipped,
        },
        false,
        match &anti {
            AnticompleteCheck::Verified { max_order } => format!("largest anticomplete pair has order {max_order}"),
            AnticompleteCheck::Violated { pair } => format!("order {} pair {pair}", pair.order()),
            AnticompleteCheck::Unverified => "too large to search".into(),
        },
    ));

    let report = ConstructionReport {
        params: params.clone(),
        derived: params.derived(),
        sample_attempts: sample.attempts,
        levels: closure.levels,
        checks,
    };
    Ok(Construction {
        j,
        blockade,
        g,
        report,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifiedConstruction {
    pub construction: Construction,
    pub attempts: usize,
    /// Failed check ids of each rejected attempt, in order.
    pub rejected: Vec<Vec<String>>,
}

/// Resamples with derived seeds until every required check passes.
pub fn build_verified(params: &ConstructionParams, attempts: usize) -> Result<VerifiedConstruction> {
    let mut seeds = ChaCha8Rng::seed_from_u64(params.seed);
    seeds.set_stream(STREAM_RESAMPLE);
    let mut rejected = Vec::new();
    for a in 0..attempts {
        let seed = if a == 0 { params.seed } else { seeds.next_u64() };
        let p = ConstructionParams { seed, ..params.clone() };
        let c = build_counterexample(&p)?;
        if c.report.passed() {
            return Ok(VerifiedConstruction {
                construction: c,
                attempts: a + 1,
                rejected,
            });
        }
        rejected.push(c.report.failed_ids());
    }
    let failed: BTreeSet<String> = rejected.iter().flatten().cloned().collect();
    Err(Error::VerificationFailed {
        attempts,
        failed: failed.into_iter().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn obs1() -> OrderedGraph {
        catalog::obs(1).unwrap()
    }

    #[test]
    fn derived_parameters() {
        let p = ConstructionParams::new(3, Ratio::new(1, 3), 6, 0).unwrap();
        assert_eq!(p.c_prime(), Ratio::new(1, 9));
        assert_eq!(p.g(), 162);
        let d = p.d();
        let f = |d: u64| (d as f64 * (1.0f64 / 81.0) / (8.0 * std::f64::consts::E)).powf(d as f64);
        assert!(f(d) >= 6.0 && f(d - 1) < 6.0);
        assert_eq!(p.big_d(), BigUint::from(d).pow(27));
        assert!(ConstructionParams::new(0, Ratio::new(1, 2), 4, 0).is_err());
        assert!(ConstructionParams::new(2, Ratio::new(1, 1), 4, 0).is_err());
        assert!(ConstructionParams::new(4, Ratio::new(1, 2), 9, 0).is_err());
    }

    #[test]
    fn b_lengths() {
        let b = Blockade::intervals(3, 2).unwrap();
        assert_eq!(b_length(&b, 0, 1), Ok(0));
        assert_eq!(b_length(&b, 1, 2), Ok(1));
        assert_eq!(b_length(&b, 5, 0), Ok(2));
        let partial = Blockade::new(6, vec![0b11]).unwrap();
        assert_eq!(b_length(&partial, 0, 4), Err(Error::VertexNotInBlockade(4)));
    }

    #[test]
    fn welcoming_examples() {
        let b = Blockade::singletons(4).unwrap();
        let j = obs1();
        assert_eq!(is_welcoming(&j, &b, &Walk(vec![1, 3, 0, 2])), Ok(true));
        assert_eq!(is_welcoming(&j, &b, &Walk(vec![2, 0, 3, 1])), Ok(false));
        let path = OrderedGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(is_welcoming(&path, &b, &Walk(vec![0, 1, 2, 3])), Ok(false));
        assert!(is_welcoming(&j, &b, &Walk(vec![0, 1, 2, 3])).is_err());
        assert!(is_welcoming(&j, &b, &Walk(vec![0, 2])).is_err());
    }

    #[test]
    fn good_pair_examples() {
        let b = Blockade::singletons(4).unwrap();
        assert!(good_pairs(&obs1(), &b, 1).unwrap().contains(&(1, 2)));
        assert!(good_pairs(&OrderedGraph::empty(4).unwrap(), &b, 1).unwrap().is_empty());
        let wide = Blockade::intervals(2, 2).unwrap();
        assert!(good_pairs(&obs1(), &wide, 0).unwrap().is_empty());
    }

    #[test]
    fn closure_of_obs1() {
        let b = Blockade::singletons(4).unwrap();
        let c = welcoming_closure(&obs1(), &b).unwrap();
        assert_eq!(c.graph, obs1().with_edges(&[(1, 2)]).unwrap());
        let levels: Vec<_> = c.levels.iter().map(|l| (l.level, l.added.len())).collect();
        assert_eq!(levels, [(3, 0), (2, 0), (1, 1)]);
        for i in 1..4 {
            assert!(good_pairs(&c.graph, &b, i).unwrap().is_empty());
        }
        let empty = OrderedGraph::empty(6).unwrap();
        let c = welcoming_closure(&empty, &Blockade::intervals(3, 2).unwrap()).unwrap();
        assert_eq!(c.graph, empty);
    }

    #[test]
    fn balance_routes() {
        let tri = OrderedGraph::complete(3).unwrap();
        assert!(unbalanced_cycle(&tri, 6).is_some());
        assert!(has_unbalanced_closed_walk(&tri, 6));
        // 1-2-4-3-1: imbalance +1 +1 -1 -1.
        let square = OrderedGraph::from_edges(4, &[(0, 1), (1, 3), (2, 3), (0, 2)]).unwrap();
        assert!(unbalanced_cycle(&square, 6).is_none());
        assert!(!has_unbalanced_closed_walk(&square, 6));
        // 1-2-3-4-1: imbalance +1 +1 +1 -1.
        let crossed = OrderedGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert!(unbalanced_cycle(&crossed, 6).is_some());
        assert!(has_unbalanced_closed_walk(&crossed, 6));
        assert!(!has_unbalanced_closed_walk(&crossed, 3));
    }

    #[test]
    fn shortest_cycle_is_a_cycle() {
        let g = OrderedGraph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5), (5, 3)])
            .unwrap();
        assert_eq!(girth(&g), Some(3));
        assert_eq!(girth(&OrderedGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap()), None);
    }

    #[test]
    fn girth_sample_obeys_bounds() {
        let s = sample_girth_graph(
            12,
            Ratio::new(1, 4),
            5,
            7,
            SampleOptions {
                retries: 16,
                require_anticomplete: false,
            },
        )
        .unwrap();
        assert_eq!(s.graph.n(), 12);
        assert!(s.girth.is_none_or(|x| x > 5));
        assert!((s.max_degree as u64) < degree_bound(Ratio::new(1, 4)));
    }

    #[test]
    fn single_width_construction() {
        let p = ConstructionParams::new(3, Ratio::new(1, 3), 1, 5).unwrap();
        let c = build_counterexample(&p).unwrap();
        assert_eq!(c.blockade, Blockade::singletons(3).unwrap());
        for id in ["a", "b", "c", "e", "blockade"] {
            let chk = c.report.checks.iter().find(|x| x.id == id).unwrap();
            assert_eq!(chk.status, CheckStatus::Pass, "{id}");
        }
    }
}
