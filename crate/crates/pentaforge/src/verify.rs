//! Decides whether a design is a partial linear space, a pentagonal
//! geometry, a GDD or a resolvable GDD, and computes the deficiency-graph
//! analytics (girth, components, opposite line pairs) plus the two-part
//! difference calculus used by the block-size-3 construction.
//!
//! All verifiers accumulate violations instead of failing fast, so a broken
//! catalog entry reports everything wrong with it at once.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::design::{pent_params, Design, GddType, PentParams};
use crate::error::{Error, Result};

/// Simple undirected graph: symmetric adjacency, no self-loops.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); n];
        for &(a, b) in edges {
            if a == b {
                return Err(Error::Param(format!("self-loop at vertex {a}")));
            }
            if a >= n || b >= n {
                return Err(Error::Param(format!("edge ({a},{b}) out of range for n={n}")));
            }
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::Param("repeated edge".into()));
            }
        }
        Ok(Graph { adjacency })
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adjacency[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adjacency[u].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Common degree, or None if the graph is irregular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degree(0);
        if (0..self.n()).all(|u| self.degree(u) == d) {
            Some(d)
        } else {
            None
        }
    }
}

/// Length of the shortest cycle, None for a forest.
///
/// Breadth-first search from every vertex; each non-tree edge seen from root
/// s bounds a cycle through s, and the minimum over all roots is exact
/// because every shortest cycle is seen from each of its own vertices.
pub fn girth(g: &Graph) -> Option<usize> {
    (0..g.n()).into_par_iter().filter_map(|root| girth_from(g, root)).min()
}

fn girth_from(g: &Graph, root: usize) -> Option<usize> {
    let n = g.n();
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    dist[root] = 0;
    queue.push_back(root);
    let mut best: Option<usize> = None;
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                parent[w] = u;
                queue.push_back(w);
            } else if parent[u] != w {
                let cycle = dist[u] + dist[w] + 1;
                best = Some(best.map_or(cycle, |b| b.min(cycle)));
            }
        }
    }
    best
}

/// A connected component with its complete-bipartite flag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentInfo {
    pub vertices: Vec<usize>,
    pub is_kkk: bool,
}

/// Connected components, each flagged as K_{k,k} iff it has 2k vertices
/// forming a complete bipartite graph with sides of size k.
pub fn classify_components(g: &Graph, k: usize) -> Vec<ComponentInfo> {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut vertices = Vec::new();
        let mut color = HashMap::new();
        let mut bipartite = true;
        let mut queue = std::collections::VecDeque::new();
        seen[start] = true;
        color.insert(start, false);
        queue.push_back(start);
        while let Some(u) = queue.pop_front() {
            vertices.push(u);
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    color.insert(w, !color[&u]);
                    queue.push_back(w);
                } else if color[&w] == color[&u] {
                    bipartite = false;
                }
            }
        }
        vertices.sort_unstable();
        let side = vertices.iter().filter(|&&v| color[&v]).count();
        // sides of size k with every vertex of degree k force completeness
        let is_kkk = bipartite
            && vertices.len() == 2 * k
            && side == k
            && vertices.iter().all(|&v| g.degree(v) == k);
        out.push(ComponentInfo { vertices, is_kkk });
    }
    out
}

/// Triangular pair-coverage counter indexed by unordered point pairs.
struct PairTable {
    v: usize,
    counts: Vec<u8>,
}

impl PairTable {
    fn new(v: usize) -> Self {
        PairTable { v, counts: vec![0; v * v] }
    }

    fn mark_design(&mut self, d: &Design) {
        for block in d.blocks() {
            let pts = block.points();
            for i in 0..pts.len() {
                for j in i + 1..pts.len() {
                    let idx = pts[i] * self.v + pts[j];
                    self.counts[idx] = self.counts[idx].saturating_add(1);
                }
            }
        }
    }

    fn count(&self, x: usize, y: usize) -> u8 {
        let (a, b) = if x < y { (x, y) } else { (y, x) };
        self.counts[a * self.v + b]
    }
}

/// Pairs of points lying on more than one common line.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PlsReport {
    pub duplicate_pairs: Vec<(usize, usize)>,
}

impl PlsReport {
    pub fn is_valid(&self) -> bool {
        self.duplicate_pairs.is_empty()
    }
}

/// True partial-linear-space check: every unordered pair on at most one line.
pub fn verify_pls(d: &Design) -> PlsReport {
    let mut table = PairTable::new(d.v());
    table.mark_design(d);
    let mut duplicate_pairs = Vec::new();
    for x in 0..d.v() {
        for y in x + 1..d.v() {
            if table.count(x, y) > 1 {
                duplicate_pairs.push((x, y));
            }
        }
    }
    PlsReport { duplicate_pairs }
}

/// Graph on the points with an edge exactly where two points are not
/// collinear.
pub fn deficiency_graph(d: &Design) -> Graph {
    let mut table = PairTable::new(d.v());
    table.mark_design(d);
    let mut edges = Vec::new();
    for x in 0..d.v() {
        for y in x + 1..d.v() {
            if table.count(x, y) == 0 {
                edges.push((x, y));
            }
        }
    }
    Graph::from_edges(d.v(), &edges).expect("complement graph is simple by construction")
}

/// Deficiency-graph analytics of a design.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeficiencyReport {
    /// Common vertex degree, None if irregular.
    pub degree: Option<usize>,
    /// None for a forest.
    pub girth: Option<usize>,
    pub components: Vec<ComponentInfo>,
    /// Number of K_{k,k} components.
    pub olp_count: usize,
    pub connected: bool,
}

pub fn deficiency_report(d: &Design, k: usize) -> DeficiencyReport {
    let g = deficiency_graph(d);
    let components = classify_components(&g, k);
    let olp_count = components.iter().filter(|c| c.is_kkk).count();
    DeficiencyReport {
        degree: g.regular_degree(),
        girth: girth(&g),
        connected: components.len() == 1,
        olp_count,
        components,
    }
}

/// Outcome of the full pentagonal-geometry check.
#[derive(Clone, Debug)]
pub struct PentReport {
    pub is_pls: bool,
    pub is_uniform_k: bool,
    pub is_regular_r: bool,
    pub opposite_axiom_holds: bool,
    pub params: PentParams,
    pub deficiency: DeficiencyReport,
    /// For each point x, the index of the line holding exactly the points
    /// not collinear with x, when that line exists.
    pub opp_map: Vec<Option<usize>>,
    pub violations: Vec<String>,
}

impl PentReport {
    pub fn is_valid(&self) -> bool {
        self.is_pls && self.is_uniform_k && self.is_regular_r && self.opposite_axiom_holds
    }

    /// Opposite line pairs counted from the pairing itself: unordered
    /// disjoint line pairs (L, L') where every point of each line has the
    /// other line as its opposite.
    pub fn olp_pairs(&self, d: &Design) -> Vec<(usize, usize)> {
        let mut pairs = Vec::new();
        for (i, block) in d.blocks().iter().enumerate() {
            let target = match common_opposite(block.points(), &self.opp_map) {
                Some(t) => t,
                None => continue,
            };
            if target > i {
                let back = common_opposite(d.blocks()[target].points(), &self.opp_map);
                if back == Some(i) {
                    pairs.push((i, target));
                }
            }
        }
        pairs
    }
}

fn common_opposite(points: &[usize], opp_map: &[Option<usize>]) -> Option<usize> {
    let first = opp_map[points[0]]?;
    if points.iter().all(|&x| opp_map[x] == Some(first)) {
        Some(first)
    } else {
        None
    }
}

/// Full check against the defining axioms for the given (k, r).
///
/// The point count must match the unique admissible v; a wrong block count
/// is reported as a violation rather than an error, like every other axiom
/// failure.
pub fn verify_pent(d: &Design, k: usize, r: usize) -> Result<PentReport> {
    let params = pent_params(k, r)?;
    if d.v() != params.v {
        return Err(Error::Param(format!(
            "design has {} points but PENT({k},{r}) needs {}",
            d.v(),
            params.v
        )));
    }
    let v = d.v();
    let mut violations = Vec::new();

    if d.block_count() != params.b {
        violations.push(format!(
            "block count {} differs from required b={}",
            d.block_count(),
            params.b
        ));
    }

    let is_uniform_k = d.blocks().iter().all(|b| b.len() == k);
    if !is_uniform_k {
        for (i, b) in d.blocks().iter().enumerate() {
            if b.len() != k {
                violations.push(format!("block {i} has size {} instead of {k}", b.len()));
            }
        }
    }

    let mut table = PairTable::new(v);
    table.mark_design(d);
    let mut is_pls = true;
    for x in 0..v {
        for y in x + 1..v {
            if table.count(x, y) > 1 {
                is_pls = false;
                violations.push(format!("pair ({x},{y}) lies on more than one line"));
            }
        }
    }

    let mut degrees = vec![0usize; v];
    for b in d.blocks() {
        for &p in b.points() {
            degrees[p] += 1;
        }
    }
    let is_regular_r = degrees.iter().all(|&deg| deg == r);
    if !is_regular_r {
        for (x, &deg) in degrees.iter().enumerate() {
            if deg != r {
                violations.push(format!("point {x} lies on {deg} lines instead of {r}"));
            }
        }
    }

    let mut block_index: HashMap<&[usize], usize> = HashMap::new();
    for (i, b) in d.blocks().iter().enumerate() {
        if block_index.insert(b.points(), i).is_some() {
            // duplicate block: already reported as duplicated pairs above
            is_pls = false;
        }
    }

    let mut opp_map = Vec::with_capacity(v);
    let mut opposite_axiom_holds = true;
    for x in 0..v {
        let non_collinear: Vec<usize> =
            (0..v).filter(|&y| y != x && table.count(x, y) == 0).collect();
        match block_index.get(non_collinear.as_slice()) {
            Some(&i) => opp_map.push(Some(i)),
            None => {
                opposite_axiom_holds = false;
                opp_map.push(None);
                violations.push(format!(
                    "point {x}: the {} non-collinear points do not form a line",
                    non_collinear.len()
                ));
            }
        }
    }

    let deficiency = deficiency_report(d, k);
    let report = PentReport {
        is_pls,
        is_uniform_k,
        is_regular_r,
        opposite_axiom_holds,
        params,
        deficiency,
        opp_map,
        violations,
    };

    // independent counts of the same quantity must agree
    let paired = report.olp_pairs(d).len();
    let mut report = report;
    if report.is_valid() && paired != report.deficiency.olp_count {
        report.violations.push(format!(
            "opposite-line pairing found {paired} pairs but the deficiency graph has {} K_{{{k},{k}}} components",
            report.deficiency.olp_count
        ));
        report.opposite_axiom_holds = false;
    }
    Ok(report)
}

/// Outcome of the group-divisible-design check.
#[derive(Clone, Debug)]
pub struct GddReport {
    pub valid: bool,
    pub violations: Vec<String>,
    pub gdd_type: GddType,
}

/// Checks block size, group-disjointness and exact cross-pair coverage.
pub fn verify_gdd(d: &Design, k: usize, groups: &[Vec<usize>]) -> Result<GddReport> {
    let v = d.v();
    let gdd_type = crate::design::type_of_groups(v, groups)?;
    let mut violations = Vec::new();

    let mut group_of = vec![0usize; v];
    for (gi, g) in groups.iter().enumerate() {
        for &p in g {
            group_of[p] = gi;
        }
    }

    for (i, b) in d.blocks().iter().enumerate() {
        if b.len() != k {
            violations.push(format!("block {i} has size {} instead of {k}", b.len()));
        }
        let pts = b.points();
        for a in 0..pts.len() {
            for c in a + 1..pts.len() {
                if group_of[pts[a]] == group_of[pts[c]] {
                    violations.push(format!(
                        "block {i} contains points {} and {} from the same group",
                        pts[a], pts[c]
                    ));
                }
            }
        }
    }

    let mut table = PairTable::new(v);
    table.mark_design(d);
    for x in 0..v {
        for y in x + 1..v {
            let cnt = table.count(x, y);
            if group_of[x] == group_of[y] {
                continue; // within-group coverage already flagged per block
            }
            if cnt == 0 {
                violations.push(format!("cross-group pair ({x},{y}) is uncovered"));
            } else if cnt > 1 {
                violations.push(format!("cross-group pair ({x},{y}) is covered {cnt} times"));
            }
        }
    }

    Ok(GddReport { valid: violations.is_empty(), violations, gdd_type })
}

/// True iff `classes` partitions the block indices and every class covers
/// every point exactly once.
pub fn verify_resolution(d: &Design, classes: &[Vec<usize>]) -> bool {
    let b = d.block_count();
    let mut seen = vec![false; b];
    for class in classes {
        let mut cover = vec![0usize; d.v()];
        for &bi in class {
            if bi >= b || seen[bi] {
                return false;
            }
            seen[bi] = true;
            for &p in d.blocks()[bi].points() {
                cover[p] += 1;
            }
        }
        if cover.iter().any(|&c| c != 1) {
            return false;
        }
    }
    seen.iter().all(|&s| s)
}

/// A two-part cyclic difference: value in [0, q/2] with an ordered part
/// pair, normalized so that value 0 always carries parts (0, 1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Difference {
    pub value: usize,
    pub parts: (usize, usize),
}

impl fmt::Display for Difference {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{{{},{}}}", self.value, self.parts.0, self.parts.1)
    }
}

/// Difference of a pair of points of Z_q x {0,1}, q odd.
///
/// With x <= y and parts i, j: (y-x) with parts (j,i) when y-x < q/2,
/// (q-(y-x)) with parts (i,j) when y-x > q/2, and the normalized 0 with
/// parts (0,1) when x = y.
pub fn pair_difference(x: (usize, usize), y: (usize, usize), q: usize) -> Result<Difference> {
    if q < 3 || q % 2 == 0 {
        return Err(Error::Param(format!("modulus q={q} must be odd and at least 3")));
    }
    for (val, part) in [x, y] {
        if val >= q || part > 1 {
            return Err(Error::Param(format!("point ({val},{part}) out of Z_{q} x {{0,1}}")));
        }
    }
    if x == y {
        return Err(Error::Degenerate(format!("pair of equal points ({},{})", x.0, x.1)));
    }
    let (lo, hi) = if x <= y { (x, y) } else { (y, x) };
    let delta = hi.0 - lo.0;
    if delta == 0 {
        Ok(Difference { value: 0, parts: (0, 1) })
    } else if 2 * delta < q {
        Ok(Difference { value: delta, parts: (hi.1, lo.1) })
    } else {
        Ok(Difference { value: q - delta, parts: (lo.1, hi.1) })
    }
}

/// The difference multiset of a base-block system over Z_q x {0,1},
/// checked to cover {0_{0,1}} and every d_{i,j}, 1 <= d <= (q-1)/2,
/// exactly once. Lines contribute all their pairs, deficiency edges
/// contribute themselves.
pub fn difference_census(
    base_blocks: &[Vec<(usize, usize)>],
    opp_edges: &[((usize, usize), (usize, usize))],
    q: usize,
) -> Result<Vec<Difference>> {
    let mut counts: std::collections::BTreeMap<Difference, usize> = Default::default();
    for block in base_blocks {
        for i in 0..block.len() {
            for j in i + 1..block.len() {
                *counts.entry(pair_difference(block[i], block[j], q)?).or_insert(0) += 1;
            }
        }
    }
    for &(x, y) in opp_edges {
        *counts.entry(pair_difference(x, y, q)?).or_insert(0) += 1;
    }

    let mut target = vec![Difference { value: 0, parts: (0, 1) }];
    for d in 1..=(q - 1) / 2 {
        for i in 0..2 {
            for j in 0..2 {
                target.push(Difference { value: d, parts: (i, j) });
            }
        }
    }

    let mut missing = Vec::new();
    let mut doubled = Vec::new();
    for t in &target {
        match counts.get(t).copied().unwrap_or(0) {
            0 => missing.push(t.to_string()),
            1 => {}
            n => doubled.push(format!("{t} x{n}")),
        }
    }
    for (diff, &n) in &counts {
        if !target.contains(diff) && n > 0 {
            doubled.push(format!("{diff} outside the target set"));
        }
    }
    if !missing.is_empty() || !doubled.is_empty() {
        return Err(Error::Census(format!(
            "uncovered: [{}]; multiply covered or foreign: [{}]",
            missing.join(", "),
            doubled.join(", ")
        )));
    }
    let mut multiset: Vec<Difference> = counts.into_keys().collect();
    multiset.sort();
    Ok(multiset)
}

/// Machine-readable verification result, one shape for every design kind.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct VerifyReport {
    pub valid: bool,
    pub kind: String,
    pub k: Option<usize>,
    pub r: Option<usize>,
    pub v: usize,
    pub b: usize,
    pub olp_count: Option<usize>,
    pub girth: Option<usize>,
    pub connected: Option<bool>,
    pub violations: Vec<String>,
}

impl VerifyReport {
    pub fn from_pent(report: &PentReport) -> Self {
        VerifyReport {
            valid: report.is_valid(),
            kind: "PENT".into(),
            k: Some(report.params.k),
            r: Some(report.params.r),
            v: report.params.v,
            b: report.params.b,
            olp_count: Some(report.deficiency.olp_count),
            girth: report.deficiency.girth,
            connected: Some(report.deficiency.connected),
            violations: report.violations.clone(),
        }
    }

    pub fn from_gdd(report: &GddReport, d: &Design, k: usize) -> Self {
        VerifyReport {
            valid: report.valid,
            kind: "GDD".into(),
            k: Some(k),
            r: None,
            v: d.v(),
            b: d.block_count(),
            olp_count: None,
            girth: None,
            connected: None,
            violations: report.violations.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
