//! Elementary moves, the graph `G_σ` on `{υ ≤ σ}`, its degrees, and the
//! degree-based singular locus.
//!
//! The brute-force side lives in [`Universe`]: every pattern of `I(n,k)`
//! with its rank matrix and predecessor list, built once per `(n,k)` and
//! cached by an [`Oracle`]. Individual graphs are then cheap filters over
//! a universe.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::{self, Mutex, OnceLock};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linkpattern::LinkPattern;

/// Default bound on `n` for graph computations.
pub const DEFAULT_MAX_N: usize = 14;

/// Patterns are packed four bits per point, so universes stop here.
pub const HARD_MAX_N: usize = 16;

fn binom2(m: usize) -> usize {
    m * m.saturating_sub(1) / 2
}

/// The dimension bookkeeping for one `(n, k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GeometryNumbers {
    pub n: usize,
    pub k: usize,
    /// Dimension of the closed orbit, `C(n-2k,2) + C(k,2)`.
    pub d0: usize,
    /// Dimension of every component, `C(n-k,2) + C(k,2)`.
    pub top: usize,
}

impl GeometryNumbers {
    pub fn new(n: usize, k: usize) -> GeometryNumbers {
        GeometryNumbers {
            n,
            k,
            d0: binom2(n - 2 * k) + binom2(k),
            top: binom2(n - k) + binom2(k),
        }
    }

    pub fn of(sigma: &LinkPattern) -> GeometryNumbers {
        GeometryNumbers::new(sigma.n(), sigma.k())
    }

    /// `dim F_υ` from `b(υ) + c(υ)`.
    pub fn dim(&self, defect: usize) -> usize {
        self.top - defect
    }

    /// `p_σ = dim F_σ - d0`.
    pub fn p(&self, defect: usize) -> usize {
        self.dim(defect) - self.d0
    }

    /// Tangent space dimension at a vertex of degree `degree`.
    pub fn tangent_dim(&self, degree: usize) -> usize {
        degree + self.d0
    }
}

pub fn dim(sigma: &LinkPattern) -> usize {
    GeometryNumbers::of(sigma).dim(sigma.defect())
}

pub fn p_sigma(sigma: &LinkPattern) -> usize {
    GeometryNumbers::of(sigma).p(sigma.defect())
}

/// Calls `f` on every predecessor of the pattern with mate table `m`,
/// mutating `m` in place and restoring it afterwards. The two outputs of
/// one elementary move are always emitted consecutively.
pub(crate) fn for_each_predecessor(m: &mut [usize], f: &mut impl FnMut(&[usize])) {
    let n = m.len() - 1;
    for i in 1..=n {
        let j = m[i];
        if j <= i {
            continue;
        }
        for x in i + 1..j {
            let y = m[x];
            if y == x {
                // fixed point under (i,j)
                m[i] = x;
                m[x] = i;
                m[j] = j;
                f(m);
                m[i] = i;
                m[x] = j;
                m[j] = x;
                f(m);
                m[x] = x;
                m[i] = j;
                m[j] = i;
            } else if y > j {
                // (i,j) crosses (x,y)
                m[i] = x;
                m[x] = i;
                m[j] = y;
                m[y] = j;
                f(m);
                m[i] = y;
                m[y] = i;
                m[x] = j;
                m[j] = x;
                f(m);
                m[i] = j;
                m[j] = i;
                m[x] = y;
                m[y] = x;
            }
        }
    }
}

/// Calls `f` on every successor (inverse elementary move).
pub(crate) fn for_each_successor(m: &mut [usize], f: &mut impl FnMut(&[usize])) {
    let n = m.len() - 1;
    for x in 1..=n {
        let y = m[x];
        if y <= x {
            continue;
        }
        for z in 1..=n {
            if m[z] != z || (x < z && z < y) {
                continue;
            }
            if z > y {
                // (x,z) over the now fixed y
                m[x] = z;
                m[z] = x;
                m[y] = y;
                f(m);
                m[y] = x;
                m[x] = y;
                m[z] = z;
            } else {
                // (z,y) over the now fixed x
                m[z] = y;
                m[y] = z;
                m[x] = x;
                f(m);
                m[x] = y;
                m[y] = x;
                m[z] = z;
            }
        }
        for c in x + 1..=n {
            let d = m[c];
            if d <= c {
                continue;
            }
            if c > y {
                // (x,y)(c,d) -> (x,c)(y,d)
                m[x] = c;
                m[c] = x;
                m[y] = d;
                m[d] = y;
                f(m);
            } else if d < y {
                // (x,y) over (c,d) -> (x,d)(c,y)
                m[x] = d;
                m[d] = x;
                m[c] = y;
                m[y] = c;
                f(m);
            } else {
                continue;
            }
            m[x] = y;
            m[y] = x;
            m[c] = d;
            m[d] = c;
        }
    }
}

/// `(vertex, degree)` pairs.
type Vertices = Vec<(usize, usize)>;

type MoveFn = fn(&mut [usize], &mut dyn FnMut(&[usize]));

fn collect_moves(
    sigma: &LinkPattern,
    each: MoveFn,
) -> Vec<LinkPattern> {
    let mut m = sigma.mates();
    let mut out = Vec::new();
    each(&mut m, &mut |mm: &[usize]| out.push(LinkPattern::from_mates(mm)));
    out
}

fn preds_dyn(m: &mut [usize], f: &mut dyn FnMut(&[usize])) {
    for_each_predecessor(m, &mut |x: &[usize]| f(x))
}

fn succs_dyn(m: &mut [usize], f: &mut dyn FnMut(&[usize])) {
    for_each_successor(m, &mut |x: &[usize]| f(x))
}

/// All patterns reached from `υ` by one elementary move, in move order:
/// entries `2t` and `2t+1` come from the same move.
pub fn predecessors(upsilon: &LinkPattern) -> Vec<LinkPattern> {
    collect_moves(upsilon, preds_dyn)
}

/// Predecessors grouped by the move producing them.
pub fn predecessor_pairs(upsilon: &LinkPattern) -> Vec<(LinkPattern, LinkPattern)> {
    predecessors(upsilon)
        .chunks_exact(2)
        .map(|c| (c[0].clone(), c[1].clone()))
        .collect()
}

/// All `ω` with `υ` among the predecessors of `ω`, sorted.
pub fn successors(upsilon: &LinkPattern) -> Vec<LinkPattern> {
    let mut out = collect_moves(upsilon, succs_dyn);
    out.sort();
    out.dedup();
    out
}

fn encode(m: &[usize]) -> u64 {
    m[1..]
        .iter()
        .enumerate()
        .fold(0, |c, (p, &q)| c | (((q - 1) as u64) << (4 * p)))
}

fn decode(n: usize, code: u64) -> Vec<usize> {
    let mut m = vec![0; n + 1];
    for (p, slot) in m.iter_mut().enumerate().skip(1) {
        *slot = ((code >> (4 * (p - 1))) & 0xf) as usize + 1;
    }
    m
}

fn rank_row(m: &[usize], out: &mut [u8]) {
    // upper triangle, row-major over i < j; built bottom-up per column
    let n = m.len() - 1;
    let mut full = vec![0u8; (n + 2) * (n + 2)];
    let at = |i: usize, j: usize| i * (n + 2) + j;
    for i in (1..=n).rev() {
        for j in i + 1..=n {
            full[at(i, j)] = full[at(i + 1, j)] + u8::from(m[i] > i && m[i] <= j);
        }
    }
    let mut t = 0;
    for i in 1..=n {
        for j in i + 1..=n {
            out[t] = full[at(i, j)];
            t += 1;
        }
    }
}

/// Every pattern of `I(n,k)` with the data needed to build any `G_σ`.
#[derive(Debug)]
pub struct Universe {
    geometry: GeometryNumbers,
    codes: Vec<u64>,
    index: HashMap<u64, u32>,
    width: usize,
    ranks: Vec<u8>,
    defect: Vec<u16>,
    pred_start: Vec<u32>,
    preds: Vec<u32>,
    succ_count: Vec<u32>,
}

impl Universe {
    pub fn build(n: usize, k: usize) -> Result<Universe> {
        if n > HARD_MAX_N {
            return Err(Error::SizeLimit { n, max: HARD_MAX_N });
        }
        let patterns: Vec<LinkPattern> = LinkPattern::enumerate(n, k, false)?.collect();
        let codes: Vec<u64> = patterns.iter().map(|p| encode(&p.mates())).collect();
        let index: HashMap<u64, u32> = codes
            .iter()
            .enumerate()
            .map(|(i, &c)| (c, i as u32))
            .collect();
        let width = binom2(n);
        let mut ranks = vec![0u8; width * codes.len()];
        if width > 0 {
            ranks
                .par_chunks_mut(width)
                .zip(&patterns)
                .for_each(|(row, p)| rank_row(&p.mates(), row));
        }
        let defect = patterns.par_iter().map(|p| p.defect() as u16).collect();
        let lists: Vec<Vec<u32>> = codes
            .par_iter()
            .map(|&c| {
                let mut m = decode(n, c);
                let mut out = Vec::new();
                for_each_predecessor(&mut m, &mut |mm: &[usize]| {
                    out.push(index[&encode(mm)]);
                });
                out
            })
            .collect();
        let mut pred_start = Vec::with_capacity(codes.len() + 1);
        let mut preds = Vec::new();
        let mut succ_count = vec![0u32; codes.len()];
        pred_start.push(0);
        for l in &lists {
            for &w in l {
                succ_count[w as usize] += 1;
            }
            preds.extend_from_slice(l);
            pred_start.push(preds.len() as u32);
        }
        Ok(Universe {
            geometry: GeometryNumbers::new(n, k),
            codes,
            index,
            width,
            ranks,
            defect,
            pred_start,
            preds,
            succ_count,
        })
    }

    pub fn geometry(&self) -> GeometryNumbers {
        self.geometry
    }

    pub fn len(&self) -> usize {
        self.codes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }

    pub fn pattern(&self, v: usize) -> LinkPattern {
        LinkPattern::from_mates(&decode(self.geometry.n, self.codes[v]))
    }

    pub fn index_of(&self, sigma: &LinkPattern) -> Option<usize> {
        if sigma.n() != self.geometry.n || sigma.k() != self.geometry.k {
            return None;
        }
        self.index.get(&encode(&sigma.mates())).map(|&i| i as usize)
    }

    pub fn defect(&self, v: usize) -> usize {
        self.defect[v] as usize
    }

    /// Predecessor indices of `v`; consecutive pairs share a move.
    pub fn preds(&self, v: usize) -> &[u32] {
        &self.preds[self.pred_start[v] as usize..self.pred_start[v + 1] as usize]
    }

    pub fn successor_count(&self, v: usize) -> usize {
        self.succ_count[v] as usize
    }

    fn ranks(&self, v: usize) -> &[u8] {
        &self.ranks[v * self.width..(v + 1) * self.width]
    }

    /// Rank-matrix comparison `u ≤ v`.
    pub fn leq(&self, u: usize, v: usize) -> bool {
        self.defect[u] >= self.defect[v]
            && self.ranks(u).iter().zip(self.ranks(v)).all(|(a, b)| a <= b)
    }

    /// Membership bitmap of `{υ ≤ σ}`.
    pub fn down_set(&self, s: usize) -> Vec<bool> {
        (0..self.len()).map(|u| self.leq(u, s)).collect()
    }

    /// `a_{σ,υ}` given the down-set of `σ`.
    pub fn degree(&self, in_graph: &[bool], v: usize) -> usize {
        self.successor_count(v)
            + self
                .preds(v)
                .iter()
                .filter(|&&w| in_graph[w as usize])
                .count()
    }

    /// The singular vertices of `G_σ` and the maximal ones among them,
    /// as `(vertex, degree)` sorted by codimension then pattern.
    fn singular(&self, s: usize) -> (Vertices, Vertices) {
        let in_graph = self.down_set(s);
        let p = self.geometry.p(self.defect(s));
        let mut sing: Vec<(usize, usize)> = (0..self.len())
            .filter(|&v| in_graph[v])
            .map(|v| (v, self.degree(&in_graph, v)))
            .filter(|&(_, d)| d > p)
            .collect();
        // universe order is lexicographic, so a stable sort keeps ties ordered
        sing.sort_by_key(|&(v, _)| self.defect[v]);
        let mut top: Vec<(usize, usize)> = Vec::new();
        for &(v, d) in &sing {
            if !top.iter().any(|&(m, _)| self.leq(v, m)) {
                top.push((v, d));
            }
        }
        (sing, top)
    }
}

/// A vertex of `G_σ` with its codimension in `F_σ` and tangent dimension.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SingularPoint {
    pub pattern: LinkPattern,
    pub codim: usize,
    pub degree: usize,
    pub tangent_dim: usize,
}

/// The degree-based singular locus of `F_σ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SingularLocus {
    pub sigma: LinkPattern,
    pub p_sigma: usize,
    /// Every vertex with degree above `p_σ`.
    pub singular_set: Vec<SingularPoint>,
    /// The maximal elements of `singular_set`.
    pub components: Vec<SingularPoint>,
}

impl SingularLocus {
    pub fn is_smooth(&self) -> bool {
        self.singular_set.is_empty()
    }

    pub fn component_patterns(&self) -> Vec<LinkPattern> {
        self.components.iter().map(|c| c.pattern.clone()).collect()
    }
}

/// Caches one [`Universe`] per `(n, k)` and refuses sizes above `max_n`.
#[derive(Debug)]
pub struct Oracle {
    max_n: usize,
    universes: Mutex<HashMap<(usize, usize), sync::Arc<Universe>>>,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle::new(DEFAULT_MAX_N)
    }
}

impl Oracle {
    pub fn new(max_n: usize) -> Oracle {
        Oracle {
            max_n: max_n.min(HARD_MAX_N),
            universes: Mutex::new(HashMap::new()),
        }
    }

    /// A process-wide oracle with the default size guard.
    pub fn global() -> &'static Oracle {
        static GLOBAL: OnceLock<Oracle> = OnceLock::new();
        GLOBAL.get_or_init(Oracle::default)
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    pub fn check_size(&self, n: usize) -> Result<()> {
        if n > self.max_n {
            return Err(Error::SizeLimit { n, max: self.max_n });
        }
        Ok(())
    }

    pub fn universe(&self, n: usize, k: usize) -> Result<sync::Arc<Universe>> {
        self.check_size(n)?;
        if let Some(u) = self.universes.lock().unwrap().get(&(n, k)) {
            return Ok(u.clone());
        }
        // built outside the lock; a racing duplicate build is harmless
        let u = sync::Arc::new(Universe::build(n, k)?);
        Ok(self
            .universes
            .lock()
            .unwrap()
            .entry((n, k))
            .or_insert(u)
            .clone())
    }

    fn locate(&self, sigma: &LinkPattern) -> Result<(sync::Arc<Universe>, usize)> {
        let u = self.universe(sigma.n(), sigma.k())?;
        let s = u
            .index_of(sigma)
            .ok_or_else(|| Error::Finding(format!("{sigma} missing from its universe")))?;
        Ok((u, s))
    }

    pub fn graph(&self, sigma: &LinkPattern) -> Result<OrbitGraph> {
        let (u, s) = self.locate(sigma)?;
        Ok(OrbitGraph::from_universe(&u, s))
    }

    /// Singular vertices and components without materializing the graph.
    pub fn singular_locus(&self, sigma: &LinkPattern) -> Result<SingularLocus> {
        let (u, s) = self.locate(sigma)?;
        let g = u.geometry();
        let base = u.defect(s);
        let point = |(v, d): (usize, usize)| SingularPoint {
            pattern: u.pattern(v),
            codim: u.defect(v) - base,
            degree: d,
            tangent_dim: g.tangent_dim(d),
        };
        let (sing, top) = u.singular(s);
        Ok(SingularLocus {
            sigma: sigma.clone(),
            p_sigma: g.p(base),
            singular_set: sing.into_iter().map(point).collect(),
            components: top.into_iter().map(point).collect(),
        })
    }

    /// `Sing(σ)` by the degree criterion, sorted by codimension then pattern.
    pub fn sing_components(&self, sigma: &LinkPattern) -> Result<Vec<LinkPattern>> {
        let (u, s) = self.locate(sigma)?;
        let (_, top) = u.singular(s);
        Ok(top.into_iter().map(|(v, _)| u.pattern(v)).collect())
    }

    /// `G_σ` is `p_σ`-regular.
    pub fn is_smooth(&self, sigma: &LinkPattern) -> Result<bool> {
        let (u, s) = self.locate(sigma)?;
        let in_graph = u.down_set(s);
        let p = u.geometry().p(u.defect(s));
        Ok((0..u.len())
            .filter(|&v| in_graph[v])
            .all(|v| u.degree(&in_graph, v) == p))
    }
}

/// `G_σ`: the vertices `{υ ≤ σ}`, elementary-move edges and degrees.
#[derive(Clone, Debug)]
pub struct OrbitGraph {
    base: LinkPattern,
    geometry: GeometryNumbers,
    vertices: Vec<LinkPattern>,
    index: HashMap<LinkPattern, usize>,
    defect: Vec<usize>,
    degree: Vec<usize>,
    /// `(lower, upper)` with `upper` a predecessor of `lower`.
    edges: Vec<(usize, usize)>,
    root: usize,
}

impl OrbitGraph {
    /// Builds `G_σ` through the global oracle.
    pub fn build(sigma: &LinkPattern) -> Result<OrbitGraph> {
        Oracle::global().graph(sigma)
    }

    fn from_universe(u: &Universe, s: usize) -> OrbitGraph {
        let in_graph = u.down_set(s);
        let members: Vec<usize> = (0..u.len()).filter(|&v| in_graph[v]).collect();
        let local: HashMap<usize, usize> =
            members.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let vertices: Vec<LinkPattern> = members.iter().map(|&v| u.pattern(v)).collect();
        let mut edges = Vec::new();
        for (i, &v) in members.iter().enumerate() {
            for &w in u.preds(v) {
                if let Some(&j) = local.get(&(w as usize)) {
                    edges.push((i, j));
                }
            }
        }
        OrbitGraph {
            base: u.pattern(s),
            geometry: u.geometry(),
            index: vertices.iter().cloned().zip(0..).collect(),
            defect: members.iter().map(|&v| u.defect(v)).collect(),
            degree: members.iter().map(|&v| u.degree(&in_graph, v)).collect(),
            edges,
            root: local[&s],
            vertices,
        }
    }

    pub fn base(&self) -> &LinkPattern {
        &self.base
    }

    pub fn geometry(&self) -> GeometryNumbers {
        self.geometry
    }

    pub fn p_sigma(&self) -> usize {
        self.degree[self.root]
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[LinkPattern] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn index_of(&self, upsilon: &LinkPattern) -> Option<usize> {
        self.index.get(upsilon).copied()
    }

    fn require(&self, upsilon: &LinkPattern) -> Result<usize> {
        self.index_of(upsilon)
            .ok_or_else(|| Error::NotInGraph(upsilon.to_string()))
    }

    pub fn degree(&self, upsilon: &LinkPattern) -> Result<usize> {
        Ok(self.degree[self.require(upsilon)?])
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degree
    }

    pub fn degree_at(&self, v: usize) -> usize {
        self.degree[v]
    }

    pub fn codim_at(&self, v: usize) -> usize {
        self.defect[v] - self.defect[self.root]
    }

    pub fn dim(&self, upsilon: &LinkPattern) -> Result<usize> {
        Ok(self.geometry.dim(self.defect[self.require(upsilon)?]))
    }

    pub fn codim(&self, upsilon: &LinkPattern) -> Result<usize> {
        Ok(self.codim_at(self.require(upsilon)?))
    }

    pub fn tangent_dim(&self, upsilon: &LinkPattern) -> Result<usize> {
        Ok(self.geometry.tangent_dim(self.degree(upsilon)?))
    }

    pub fn is_smooth(&self) -> bool {
        let p = self.p_sigma();
        self.degree.iter().all(|&d| d == p)
    }

    /// Vertex indices with degree above `p_σ`, sorted by codim then pattern.
    pub fn singular_indices(&self) -> Vec<usize> {
        let p = self.p_sigma();
        let mut out: Vec<usize> = (0..self.len()).filter(|&v| self.degree[v] > p).collect();
        out.sort_by_key(|&v| self.defect[v]);
        out
    }

    pub fn singular_set(&self) -> Vec<LinkPattern> {
        self.singular_indices()
            .into_iter()
            .map(|v| self.vertices[v].clone())
            .collect()
    }

    /// The maximal elements of the singular set.
    pub fn components(&self) -> Vec<LinkPattern> {
        let ranks: Vec<_> = self.vertices.iter().map(LinkPattern::rank_matrix).collect();
        let mut top: Vec<usize> = Vec::new();
        for v in self.singular_indices() {
            if !top.iter().any(|&m| ranks[v].leq(&ranks[m])) {
                top.push(v);
            }
        }
        top.into_iter().map(|v| self.vertices[v].clone()).collect()
    }

    /// `Cov(σ)`: vertices below `σ` with nothing strictly in between.
    pub fn covers(&self) -> Vec<LinkPattern> {
        let ranks: Vec<_> = self.vertices.iter().map(LinkPattern::rank_matrix).collect();
        (0..self.len())
            .filter(|&v| v != self.root)
            .filter(|&v| {
                !(0..self.len()).any(|w| {
                    w != v
                        && w != self.root
                        && self.defect[w] < self.defect[v]
                        && ranks[v].leq(&ranks[w])
                })
            })
            .map(|v| self.vertices[v].clone())
            .collect()
    }

    /// Neighbours of vertex `v`, both directions.
    pub fn neighbours(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Graphviz source: one rank per codimension, singular vertices in red,
    /// vertices beyond `max_codim` dropped.
    pub fn to_dot(&self, max_codim: Option<usize>) -> String {
        let keep = |v: usize| max_codim.is_none_or(|m| self.codim_at(v) <= m);
        let p = self.p_sigma();
        let mut out = String::new();
        let _ = writeln!(out, "graph G {{");
        let _ = writeln!(out, "  label=\"G_sigma for {}, p_sigma = {}\";", self.base, p);
        let _ = writeln!(out, "  rankdir=LR;");
        let _ = writeln!(out, "  node [shape=box, fontname=\"monospace\"];");
        let top = self.defect.iter().map(|d| d - self.defect[self.root]).max().unwrap_or(0);
        for c in 0..=top {
            let layer: Vec<usize> = (0..self.len())
                .filter(|&v| self.codim_at(v) == c && keep(v))
                .collect();
            if layer.is_empty() {
                continue;
            }
            let _ = writeln!(out, "  subgraph codim_{c} {{");
            let _ = writeln!(out, "    rank=same;");
            for v in layer {
                let colour = if self.degree[v] > p { ", color=red, fontcolor=red" } else { "" };
                let _ = writeln!(
                    out,
                    "    v{v} [label=\"{}\\ndegree {}\"{colour}];",
                    self.vertices[v], self.degree[v]
                );
            }
            let _ = writeln!(out, "  }}");
        }
        for &(a, b) in &self.edges {
            if keep(a) && keep(b) {
                let _ = writeln!(out, "  v{b} -- v{a};");
            }
        }
        out.push_str("}\n");
        out
    }

    /// One line per vertex: index, pattern, codim, degree and neighbours.
    pub fn to_adjacency(&self) -> String {
        let mut out = String::new();
        let p = self.p_sigma();
        for v in 0..self.len() {
            let nb: Vec<String> = self.neighbours(v).iter().map(|w| format!("v{w}")).collect();
            let _ = writeln!(
                out,
                "v{v}\t{}\tcodim={}\tdegree={}{}\t-> {}",
                self.vertices[v],
                self.codim_at(v),
                self.degree[v],
                if self.degree[v] > p { "\tsingular" } else { "" },
                nb.join(" ")
            );
        }
        out
    }

    pub fn report(&self) -> GraphReport {
        GraphReport {
            sigma: self.base.clone(),
            n: self.base.n(),
            k: self.base.k(),
            p_sigma: self.p_sigma(),
            vertices: self.vertices.clone(),
            degrees: self.degree.clone(),
            singular_set: self.singular_set(),
            components: self.components(),
        }
    }
}

/// JSON shape of a graph dump.
#[derive(Clone, Debug, Serialize)]
pub struct GraphReport {
    pub sigma: LinkPattern,
    pub n: usize,
    pub k: usize,
    pub p_sigma: usize,
    pub vertices: Vec<LinkPattern>,
    pub degrees: Vec<usize>,
    pub singular_set: Vec<LinkPattern>,
    pub components: Vec<LinkPattern>,
}

pub fn smooth_by_graph(sigma: &LinkPattern) -> Result<bool> {
    Oracle::global().is_smooth(sigma)
}

pub fn singular_set(sigma: &LinkPattern) -> Result<Vec<LinkPattern>> {
    Ok(Oracle::global()
        .singular_locus(sigma)?
        .singular_set
        .into_iter()
        .map(|p| p.pattern)
        .collect())
}

pub fn sing_components_oracle(sigma: &LinkPattern) -> Result<Vec<LinkPattern>> {
    Oracle::global().sing_components(sigma)
}

fn check_below(sigma: &LinkPattern, upsilon: &LinkPattern) -> Result<()> {
    if !upsilon.leq(sigma)? {
        return Err(Error::NotInGraph(upsilon.to_string()));
    }
    Ok(())
}

/// `codim_{F_σ} Z_υ = (b+c)(υ) - (b+c)(σ)`.
pub fn codim(sigma: &LinkPattern, upsilon: &LinkPattern) -> Result<usize> {
    check_below(sigma, upsilon)?;
    Ok(upsilon.defect() - sigma.defect())
}

/// `dim T_{Z_υ}(F_σ) = a_{σ,υ} + d0`.
pub fn tangent_dim(sigma: &LinkPattern, upsilon: &LinkPattern) -> Result<usize> {
    check_below(sigma, upsilon)?;
    let (u, s) = Oracle::global().locate(sigma)?;
    let v = u
        .index_of(upsilon)
        .ok_or_else(|| Error::NotInGraph(upsilon.to_string()))?;
    Ok(u.geometry().tangent_dim(u.degree(&u.down_set(s), v)))
}

/// `Cov(σ)` through the global oracle.
pub fn covers(sigma: &LinkPattern) -> Result<Vec<LinkPattern>> {
    Ok(OrbitGraph::build(sigma)?.covers())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(s: &str) -> LinkPattern {
        s.parse().unwrap()
    }

    fn set(v: &[&str]) -> Vec<LinkPattern> {
        let mut out: Vec<LinkPattern> = v.iter().map(|s| lp(s)).collect();
        out.sort();
        out
    }

    fn sorted(mut v: Vec<LinkPattern>) -> Vec<LinkPattern> {
        v.sort();
        v
    }

    #[test]
    fn moves_examples() {
        assert_eq!(
            sorted(predecessors(&lp("n=3 (1,3)"))),
            set(&["n=3 (1,2)", "n=3 (2,3)"])
        );
        assert!(predecessors(&lp("n=6 (2,3)(4,5)")).is_empty());
        assert_eq!(successors(&lp("n=3 (1,2)")), set(&["n=3 (1,3)"]));
        assert_eq!(successors(&lp("n=6 (2,3)(4,5)")).len(), 5);
        assert!(successors(&LinkPattern::minimum(6, 2).unwrap()).is_empty());
        let crossing = lp("n=4 (1,3)(2,4)");
        assert_eq!(
            sorted(predecessors(&crossing)),
            set(&["n=4 (1,2)(3,4)", "n=4 (1,4)(2,3)"])
        );
        assert_eq!(predecessor_pairs(&crossing).len(), 1);
    }

    #[test]
    fn worked_example_graph() {
        let sigma = lp("n=6 (2,3)(4,5)");
        let g = OrbitGraph::build(&sigma).unwrap();
        assert_eq!(g.p_sigma(), 5);
        assert_eq!(dim(&sigma), 7);
        assert_eq!(g.degree(&sigma).unwrap(), 5);
        assert_eq!(g.degree(&lp("n=6 (1,5)(2,6)")).unwrap(), 9);
        assert_eq!(g.tangent_dim(&lp("n=6 (1,5)(2,6)")).unwrap(), 11);
        assert_eq!(g.tangent_dim(&lp("n=6 (1,6)(2,5)")).unwrap(), 11);
        assert_eq!(g.tangent_dim(&sigma).unwrap(), 7);
        assert_eq!(
            sorted(g.singular_set()),
            set(&["n=6 (1,6)(2,5)", "n=6 (1,5)(2,6)"])
        );
        assert_eq!(g.components(), set(&["n=6 (1,6)(2,5)"]));
        assert_eq!(g.covers().len(), 5);
        assert!(!g.is_smooth());
        let brute = LinkPattern::enumerate(6, 2, false)
            .unwrap()
            .filter(|u| u.leq(&sigma).unwrap())
            .count();
        assert_eq!(g.len(), brute);
        assert_eq!(
            tangent_dim(&sigma, &lp("n=6 (1,6)(2,5)")).unwrap(),
            11
        );
        assert!(matches!(
            g.degree(&lp("n=6 (1,2)(3,4)")),
            Err(Error::NotInGraph(_))
        ));
    }

    #[test]
    fn minimum_is_single_vertex() {
        let w = LinkPattern::minimum(7, 3).unwrap();
        let g = OrbitGraph::build(&w).unwrap();
        assert_eq!(g.len(), 1);
        assert!(g.edges().is_empty());
        assert!(g.is_smooth());
        assert!(g.covers().is_empty());
    }

    #[test]
    fn smoothness_examples() {
        assert!(smooth_by_graph(&lp("n=7 (1,7)(2,6)(4,5)")).unwrap());
        assert!(!smooth_by_graph(&lp("n=6 (2,6)(4,5)")).unwrap());
        assert!(!smooth_by_graph(&lp("n=6 (2,3)(4,5)")).unwrap());
    }

    #[test]
    fn sl8_example() {
        let s = lp("n=8 (1,8)(2,7)(3,4)(5,6)");
        let u = lp("n=8 (1,7)(2,8)(3,4)(5,6)");
        let w = lp("n=8 (1,4)(2,7)(3,6)(5,8)");
        assert_eq!(codim(&s, &u).unwrap(), 1);
        assert_eq!(codim(&u, &w).unwrap(), 3);
        let g = OrbitGraph::build(&u).unwrap();
        let inside = predecessors(&w)
            .into_iter()
            .filter(|x| g.index_of(x).is_some())
            .count();
        assert_eq!(inside, 4);
        assert!(sing_components_oracle(&u).unwrap().contains(&w));
        assert!(smooth_by_graph(&s).unwrap());
    }

    #[test]
    fn size_guard() {
        let o = Oracle::new(6);
        let big = LinkPattern::empty(7).add_arc(1, 2).unwrap();
        assert_eq!(o.graph(&big).unwrap_err(), Error::SizeLimit { n: 7, max: 6 });
    }

    #[test]
    fn dot_and_adjacency() {
        let g = OrbitGraph::build(&lp("n=6 (2,3)(4,5)")).unwrap();
        let dot = g.to_dot(None);
        assert!(dot.contains("n=6 (2,3)(4,5)\\ndegree 5"));
        assert!(dot.contains("n=6 (1,5)(2,6)\\ndegree 9\", color=red"));
        assert_eq!(dot.matches(" -- ").count(), g.edges().len());
        let cut = g.to_dot(Some(1));
        assert!(!cut.contains("(1,5)(2,6)"));
        assert_eq!(g.to_adjacency().lines().count(), g.len());
        let single = OrbitGraph::build(&LinkPattern::minimum(4, 1).unwrap()).unwrap();
        assert_eq!(single.to_dot(None).matches("[label=").count(), 1);
    }

    #[test]
    fn json_report_shape() {
        let g = OrbitGraph::build(&lp("n=6 (2,3)(4,5)")).unwrap();
        let v = serde_json::to_value(g.report()).unwrap();
        assert_eq!(v["sigma"], "n=6 (2,3)(4,5)");
        assert_eq!(v["p_sigma"], 5);
        assert_eq!(v["components"][0], "n=6 (1,6)(2,5)");
        assert_eq!(
            v["vertices"].as_array().unwrap().len(),
            v["degrees"].as_array().unwrap().len()
        );
    }
}
