//! `Sing(σ)` for maximal `σ` with `ρ(σ) ≥ 4`, read off from admissible
//! pairs of arcs without building `G_σ`.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linkpattern::{Arc, LinkPattern};
use crate::orbitgraph::{GeometryNumbers, Oracle};

/// Two arcs `(i,j)`, `(i',j')` of `σ` admissible at `[s,t]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AdmissiblePair {
    pub first: Arc,
    pub second: Arc,
    pub interval: (usize, usize),
    /// Fixed points of `π_{s,t}(σ)` in `[j, i']`.
    pub kappa: usize,
    /// Arcs of `π_{s,t}(σ)` over both.
    pub over: usize,
}

impl AdmissiblePair {
    /// Codimension of the generated component when `[s,t] = [1,n]`.
    pub fn basic_codim(&self) -> usize {
        4 + 2 * (self.kappa + self.over)
    }

    /// Tangent dimension minus `dim F_σ` when `[s,t] = [1,n]`.
    pub fn basic_tangent_excess(&self) -> usize {
        (self.kappa + 1) * (2 * self.over + 2) + 2
    }
}

impl fmt::Display for AdmissiblePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{} at [{},{}]",
            self.first, self.second, self.interval.0, self.interval.1
        )
    }
}

impl Serialize for AdmissiblePair {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire {
            arc1: String,
            arc2: String,
            interval: [usize; 2],
        }
        Wire {
            arc1: self.first.to_string(),
            arc2: self.second.to_string(),
            interval: [self.interval.0, self.interval.1],
        }
        .serialize(s)
    }
}

/// Checks the six admissibility conditions on `π_{s,t}(σ)`. The arcs may be
/// given in either order.
pub fn is_admissible(sigma: &LinkPattern, arc1: Arc, arc2: Arc, s: usize, t: usize) -> Result<bool> {
    Ok(admissible_pair(sigma, arc1, arc2, s, t)?.is_some())
}

/// Like [`is_admissible`], returning the pair with its `κ` and `r`.
pub fn admissible_pair(
    sigma: &LinkPattern,
    arc1: Arc,
    arc2: Arc,
    s: usize,
    t: usize,
) -> Result<Option<AdmissiblePair>> {
    for a in [arc1, arc2] {
        if !sigma.has_arc(a) {
            return Err(Error::ArcAbsent(a));
        }
    }
    if s == 0 || s >= t || t > sigma.n() {
        return Err(Error::BadInterval {
            a: s,
            b: t,
            n: sigma.n(),
        });
    }
    let (p, q) = if arc1 <= arc2 { (arc1, arc2) } else { (arc2, arc1) };
    Ok(check(sigma.arcs(), &sigma.mates(), p, q, s, t))
}

fn check(arcs: &[Arc], mates: &[usize], p: Arc, q: Arc, s: usize, t: usize) -> Option<AdmissiblePair> {
    let (i, j, i2, j2) = (p.left, p.right, q.left, q.right);
    if !(s < i && i < j && j < i2 && i2 < j2 && j2 < t) {
        return None;
    }
    // fixed in π_{s,t}: fixed in σ or arced outside [s,t]
    let pi_fixed = |x: usize| {
        let m = mates[x];
        m == x || m < s || m > t
    };
    if !pi_fixed(s) || !pi_fixed(t) {
        return None;
    }
    if (s + 1..j).chain(i2 + 1..t).any(pi_fixed) {
        return None;
    }
    let inner = || arcs.iter().filter(|a| a.within(s, t));
    let mut over = Vec::new();
    for a in inner() {
        if *a == p || *a == q {
            continue;
        }
        if a.crosses(&p) || a.crosses(&q) {
            return None;
        }
        let (r, x) = (a.left, a.right);
        let touches = (r < i && i < x) || (r < j2 && j2 < x) || (r < j && i2 < x);
        if touches && !(r < i && j2 < x) {
            return None;
        }
        if r < i && j2 < x {
            over.push(*a);
        }
    }
    // arcs over both are concentric
    if over.iter().any(|a| over.iter().any(|b| a != b && !a.is_over(b) && !b.is_over(a))) {
        return None;
    }
    let kappa = (j..=i2).filter(|&x| pi_fixed(x)).count();
    if kappa * over.len() != 0 {
        return None;
    }
    Some(AdmissiblePair {
        first: p,
        second: q,
        interval: (s, t),
        kappa,
        over: over.len(),
    })
}

/// `(1,n)(i,j')σ⁻` for a pair admissible at `[1,n]`.
pub fn basic_sing_element(sigma: &LinkPattern, arc1: Arc, arc2: Arc) -> Result<LinkPattern> {
    let n = sigma.n();
    let pair = admissible_pair(sigma, arc1, arc2, 1, n)?.ok_or(Error::NotAdmissible {
        first: arc1,
        second: arc2,
        s: 1,
        t: n,
    })?;
    assemble(sigma, &pair)
}

/// `υ(x)` for an admissible tuple `x`.
///
/// Inside `[s,t]` the pair is replaced by `(i,j')` and `(s,t)`. Arcs of `σ`
/// with one end in `[s,t]` keep their outer end and are reattached to the
/// free points of `[s,t]`: left-leaving arcs, nearest first, to the free
/// points from the left, right-leaving arcs, nearest first, from the right.
/// Everything else is copied.
pub fn assemble(sigma: &LinkPattern, pair: &AdmissiblePair) -> Result<LinkPattern> {
    let n = sigma.n();
    let (s, t) = pair.interval;
    let mut used = vec![false; n + 1];
    let mut arcs = Vec::with_capacity(sigma.k());
    let mut leaving_left = Vec::new();
    let mut leaving_right = Vec::new();
    let inside = |x: usize| s <= x && x <= t;
    for a in sigma.arcs() {
        if *a == pair.first || *a == pair.second {
            continue;
        }
        match (inside(a.left), inside(a.right)) {
            (false, true) => leaving_left.push(a.left),
            (true, false) => leaving_right.push(a.right),
            _ => arcs.push(*a),
        }
    }
    arcs.push(Arc::new(pair.first.left, pair.second.right));
    arcs.push(Arc::new(s, t));
    for a in &arcs {
        used[a.left] = true;
        used[a.right] = true;
    }
    let free: Vec<usize> = (s..=t).filter(|&x| !used[x]).collect();
    if leaving_left.len() + leaving_right.len() > free.len() {
        return Err(Error::Finding(format!(
            "no room to reattach arcs for {pair} in {sigma}"
        )));
    }
    leaving_left.sort_unstable_by(|a, b| b.cmp(a));
    leaving_right.sort_unstable();
    for (outer, &f) in leaving_left.iter().zip(&free) {
        arcs.push(Arc::new(*outer, f));
    }
    for (outer, &f) in leaving_right.iter().zip(free.iter().rev()) {
        arcs.push(Arc::new(f, *outer));
    }
    Ok(LinkPattern::from_arcs_unchecked(n, arcs))
}

fn require_scope(sigma: &LinkPattern) -> Result<usize> {
    let rho = sigma.rho()?;
    if rho < 4 {
        return Err(Error::RhoTooSmall(rho));
    }
    Ok(rho)
}

/// Every admissible tuple, found by testing all arc pairs on all intervals.
pub fn find_admissible_pairs_naive(sigma: &LinkPattern) -> Result<Vec<AdmissiblePair>> {
    require_scope(sigma)?;
    let arcs = sigma.arcs();
    let mates = sigma.mates();
    let mut out = Vec::new();
    for (x, &p) in arcs.iter().enumerate() {
        for &q in &arcs[x + 1..] {
            if p.right >= q.left {
                continue;
            }
            for s in 1..p.left {
                for t in q.right + 1..=sigma.n() {
                    out.extend(check(arcs, &mates, p, q, s, t));
                }
            }
        }
    }
    Ok(out)
}

/// Step (a): the window `[s,t]` of `σ` whose projection `σ̂` the interval
/// search runs on. `σ` is the `(s-1, n-t)`-completion of `σ̂`.
fn reduce(sigma: &LinkPattern) -> (usize, usize) {
    let n = sigma.n();
    let tau = sigma.tau_star();
    let (lo, hi) = (tau[0], tau[tau.len() - 1]);
    match (sigma.is_fixed(1), sigma.is_fixed(n)) {
        (true, true) => (1, n),
        (true, false) => (1, hi),
        (false, true) => (lo + 1, n),
        _ if sigma.has_arc(Arc { left: 1, right: n }) => (1, hi),
        _ => (lo + 1, hi),
    }
}

/// Every admissible tuple, found by the interval-search procedure on `σ̂`
/// and carried back to `σ` through the completion.
pub fn find_admissible_pairs(sigma: &LinkPattern) -> Result<Vec<AdmissiblePair>> {
    require_scope(sigma)?;
    let n = sigma.n();
    let (s0, t0) = reduce(sigma);
    let hat = sigma.window(s0, t0).pattern;
    let found = interval_search(&hat, sigma)?;
    if (s0, t0) == (1, n) {
        return Ok(found);
    }
    let (l, r) = (s0 - 1, n - t0);
    let arcs = sigma.arcs();
    let mates = sigma.mates();
    let mut out = Vec::new();
    for x in found {
        let target = assemble(&hat, &x)?.completion(l, r)?;
        let p = Arc::new(x.first.left + l, x.first.right + l);
        let q = Arc::new(x.second.left + l, x.second.right + l);
        let before = out.len();
        for s in 1..p.left {
            for t in q.right + 1..=n {
                if let Some(y) = check(arcs, &mates, p, q, s, t) {
                    if assemble(sigma, &y)? == target {
                        out.push(y);
                    }
                }
            }
        }
        if out.len() == before {
            return Err(Error::Finding(format!("{target} has no tuple over {p}{q} in {sigma}")));
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Step (b) on `σ̂`, in its own coordinates.
fn interval_search(hat: &LinkPattern, sigma: &LinkPattern) -> Result<Vec<AdmissiblePair>> {
    let n = hat.n();
    let m = hat.mates();
    let arcs = hat.arcs();
    let tau = hat.tau_star();
    let finding = |what: &str| Error::Finding(format!("{what} for {sigma}"));
    let in_tau = |lo: usize, hi: usize| tau.iter().any(|&l| lo <= l && l <= hi);
    // outermost arc over (l,l+1) passing the filter
    let outermost = |l: usize, keep: &dyn Fn(&Arc) -> bool| {
        arcs.iter()
            .filter(|a| a.left <= l && l < a.right && keep(a))
            .min_by_key(|a| a.left)
            .copied()
    };
    let fixed = |x: usize| m[x] == x;

    let mut out = Vec::new();
    for (x, &i) in tau.iter().enumerate() {
        for &j in &tau[x + 1..] {
            let ab = outermost(i, &|a| a.right < j && !in_tau(a.left, i - 1))
                .ok_or_else(|| finding("no left arc"))?;
            let cd = outermost(j, &|a| a.left > i && !in_tau(j + 1, a.right))
                .ok_or_else(|| finding("no right arc"))?;
            if ab.right >= cd.left {
                return Err(finding("overlapping arcs in the interval search"));
            }
            let m1 = (1..ab.left).rev().find(|&f| fixed(f)).ok_or_else(|| finding("no left fixed point"))?;
            let m2 = (cd.right + 1..=n).find(|&f| fixed(f)).ok_or_else(|| finding("no right fixed point"))?;

            let hug_left = arcs
                .iter()
                .filter(|e| e.left < ab.left && ab.right < e.right && e.right < j)
                .max_by_key(|e| e.left);
            let (lo, mut starts) = match hug_left {
                None => (m1, vec![m1]),
                Some(e) => (e.left, Vec::new()),
            };
            for &l in tau.iter().filter(|&&l| lo <= l && l < ab.left) {
                let e = outermost(l, &|a| a.right < ab.left).ok_or_else(|| finding("no arc for a left end"))?;
                starts.push(e.right);
            }

            let hug_right = arcs
                .iter()
                .filter(|e| i < e.left && e.left < cd.left && cd.right < e.right)
                .min_by_key(|e| e.right);
            let (hi, mut ends) = match hug_right {
                None => (m2, vec![m2]),
                Some(e) => (e.right, Vec::new()),
            };
            for &l in tau.iter().filter(|&&l| cd.right < l && l <= hi) {
                let e = outermost(l, &|a| a.left > cd.right).ok_or_else(|| finding("no arc for a right end"))?;
                ends.push(e.left);
            }

            // an arc around both may be cut by the interval, leaving one
            // end as the new boundary; candidates that cut it badly fail
            // the check
            for e in arcs.iter().filter(|e| m1 < e.left && e.left < ab.left && cd.right < e.right && e.right < m2) {
                starts.push(e.left);
                ends.push(e.right);
            }
            for &s in &starts {
                for &t in &ends {
                    out.extend(check(arcs, &m, ab, cd, s, t));
                }
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// How a [`SingReport`] was computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Direct,
    Graph,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Direct => "direct",
            Method::Graph => "graph",
        })
    }
}

/// Which search the direct method runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Search {
    #[default]
    Procedural,
    Naive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SingComponent {
    pub pattern: LinkPattern,
    /// The generating tuple; absent for graph-computed components.
    pub pair: Option<AdmissiblePair>,
    pub codim: usize,
    pub tangent_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SingReport {
    pub sigma: LinkPattern,
    pub n: usize,
    pub k: usize,
    /// Defined for maximal patterns only.
    pub rho: Option<usize>,
    pub smooth: bool,
    pub method: Method,
    pub components: Vec<SingComponent>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl SingReport {
    pub fn patterns(&self) -> Vec<LinkPattern> {
        self.components.iter().map(|c| c.pattern.clone()).collect()
    }

    fn empty(sigma: &LinkPattern, rho: Option<usize>, method: Method) -> SingReport {
        SingReport {
            sigma: sigma.clone(),
            n: sigma.n(),
            k: sigma.k(),
            rho,
            smooth: true,
            method,
            components: Vec::new(),
            note: None,
        }
    }
}

/// `Sing(σ)` from admissible pairs.
pub fn sing_direct(sigma: &LinkPattern) -> Result<SingReport> {
    sing_direct_with(sigma, Search::Procedural)
}

pub fn sing_direct_with(sigma: &LinkPattern, search: Search) -> Result<SingReport> {
    let rho = require_scope(sigma)?;
    let pairs = match search {
        Search::Procedural => find_admissible_pairs(sigma)?,
        Search::Naive => find_admissible_pairs_naive(sigma)?,
    };
    let g = GeometryNumbers::of(sigma);
    let dim = g.dim(sigma.defect());
    let mut components: Vec<SingComponent> = Vec::with_capacity(pairs.len());
    for pair in pairs {
        let pattern = assemble(sigma, &pair)?;
        if components.iter().any(|c| c.pattern == pattern) {
            continue;
        }
        let codim = pattern.defect() - sigma.defect();
        components.push(SingComponent {
            pattern,
            pair: Some(pair),
            codim,
            tangent_dim: dim + codim,
        });
    }
    components.sort_by(|a, b| (a.codim, &a.pattern).cmp(&(b.codim, &b.pattern)));
    Ok(SingReport {
        components,
        smooth: false,
        ..SingReport::empty(sigma, Some(rho), Method::Direct)
    })
}

/// `Sing(σ)` from the degrees of `G_σ`.
pub fn sing_by_graph(sigma: &LinkPattern, oracle: &Oracle) -> Result<SingReport> {
    let locus = oracle.singular_locus(sigma)?;
    let rho = sigma.rho().ok();
    Ok(SingReport {
        smooth: locus.is_smooth(),
        components: locus
            .components
            .into_iter()
            .map(|c| SingComponent {
                pattern: c.pattern,
                pair: None,
                codim: c.codim,
                tangent_dim: c.tangent_dim,
            })
            .collect(),
        ..SingReport::empty(sigma, rho, Method::Graph)
    })
}

/// Dispatches: direct for maximal `σ` with `ρ ≥ 4`, the smoothness
/// criterion for `ρ ≤ 3`, and the graph for everything else.
pub fn sing_any(sigma: &LinkPattern, oracle: &Oracle) -> Result<SingReport> {
    if sigma.is_maximal() {
        let rho = sigma.rho()?;
        if rho >= 4 {
            return sing_direct(sigma);
        }
        return Ok(SingReport {
            note: Some(format!("rho = {rho} <= 3, so the component is smooth")),
            ..SingReport::empty(sigma, Some(rho), Method::Direct)
        });
    }
    let mut report = sing_by_graph(sigma, oracle)?;
    report.note = Some(
        "not maximal: the admissible-pair construction does not apply, computed from G_sigma"
            .into(),
    );
    Ok(report)
}

/// Convenience: [`sing_any`] through the global oracle.
pub fn sing(sigma: &LinkPattern) -> Result<SingReport> {
    sing_any(sigma, Oracle::global())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(s: &str) -> LinkPattern {
        s.parse().unwrap()
    }

    fn arc(a: usize, b: usize) -> Arc {
        Arc::new(a, b)
    }

    const BIG: &str = "n=12 (2,9)(3,6)(4,5)(7,8)(10,11)";

    #[test]
    fn admissibility_examples() {
        let s = lp("n=6 (2,3)(4,5)");
        assert!(is_admissible(&s, arc(2, 3), arc(4, 5), 1, 6).unwrap());
        assert!(is_admissible(&s, arc(4, 5), arc(2, 3), 1, 6).unwrap());
        let big = lp(BIG);
        assert!(is_admissible(&big, arc(3, 6), arc(7, 8), 1, 10).unwrap());
        assert!(is_admissible(&big, arc(3, 6), arc(7, 8), 1, 12).unwrap());
        assert!(!is_admissible(&big, arc(7, 8), arc(10, 11), 1, 12).unwrap());
        assert!(is_admissible(&big, arc(7, 8), arc(10, 11), 6, 12).unwrap());
        assert_eq!(
            is_admissible(&s, arc(1, 2), arc(4, 5), 1, 6),
            Err(Error::ArcAbsent(arc(1, 2)))
        );
        assert!(matches!(
            is_admissible(&s, arc(2, 3), arc(4, 5), 6, 1),
            Err(Error::BadInterval { .. })
        ));
    }

    #[test]
    fn basic_case() {
        let s = lp("n=6 (2,3)(4,5)");
        let u = basic_sing_element(&s, arc(2, 3), arc(4, 5)).unwrap();
        assert_eq!(u, lp("n=6 (1,6)(2,5)"));
        let pair = admissible_pair(&s, arc(2, 3), arc(4, 5), 1, 6).unwrap().unwrap();
        assert_eq!((pair.kappa, pair.over), (0, 0));
        assert_eq!(pair.basic_codim(), 4);
        assert_eq!(pair.basic_tangent_excess(), 4);
        assert!(matches!(
            basic_sing_element(&lp("n=7 (2,3)(4,6)"), arc(2, 3), arc(4, 6)),
            Err(Error::NotAdmissible { .. })
        ));
    }

    #[test]
    fn interval_search_example() {
        let big = lp(BIG);
        let got: Vec<(Arc, Arc, (usize, usize))> = find_admissible_pairs(&big)
            .unwrap()
            .into_iter()
            .map(|p| (p.first, p.second, p.interval))
            .collect();
        let mut want = vec![
            (arc(3, 6), arc(7, 8), (1, 10)),
            (arc(3, 6), arc(7, 8), (1, 12)),
            (arc(2, 9), arc(10, 11), (1, 12)),
            (arc(7, 8), arc(10, 11), (6, 12)),
        ];
        want.sort();
        assert_eq!(got, want);
        let naive: Vec<_> = find_admissible_pairs_naive(&big)
            .unwrap()
            .into_iter()
            .map(|p| (p.first, p.second, p.interval))
            .collect();
        let mut naive = naive;
        naive.sort();
        assert_eq!(naive, want);
    }

    #[test]
    fn components_of_examples() {
        assert_eq!(
            sing_direct(&lp("n=6 (2,3)(4,5)")).unwrap().patterns(),
            vec![lp("n=6 (1,6)(2,5)")]
        );
        assert_eq!(
            sing_direct(&lp("n=8 (2,3)(4,5)(6,7)")).unwrap().components.len(),
            5
        );
        let mut got = sing_direct(&lp(BIG)).unwrap().patterns();
        got.sort();
        let mut want = vec![
            lp("n=12 (1,10)(2,9)(3,8)(4,5)(7,11)"),
            lp("n=12 (1,12)(2,9)(3,8)(4,5)(10,11)"),
            lp("n=12 (1,12)(2,11)(3,6)(4,5)(7,8)"),
            lp("n=12 (2,9)(3,8)(4,5)(6,12)(7,11)"),
        ];
        want.sort();
        assert_eq!(got, want);
        let all_pairs = lp("n=8 (1,2)(3,4)(5,6)(7,8)");
        assert!(sing_direct(&all_pairs)
            .unwrap()
            .patterns()
            .contains(&lp("n=8 (1,4)(2,7)(3,6)(5,8)")));
    }

    #[test]
    fn scope_errors() {
        assert_eq!(
            sing_direct(&lp("n=8 (1,8)(2,7)(3,4)(5,6)")),
            Err(Error::RhoTooSmall(3))
        );
        assert!(matches!(
            sing_direct(&lp("n=5 (1,4)(2,5)")),
            Err(Error::NotMaximal(_))
        ));
    }

    #[test]
    fn dispatch() {
        let smooth = sing(&lp("n=8 (1,8)(2,7)(3,4)(5,6)")).unwrap();
        assert!(smooth.smooth && smooth.components.is_empty());
        let upsilon = lp("n=8 (1,7)(2,8)(3,4)(5,6)");
        let r = sing(&upsilon).unwrap();
        assert_eq!(r.method, Method::Graph);
        let w = r
            .components
            .iter()
            .find(|c| c.pattern == lp("n=8 (1,4)(2,7)(3,6)(5,8)"))
            .unwrap();
        assert_eq!(w.codim, 3);
        let min = sing(&LinkPattern::minimum(6, 2).unwrap()).unwrap();
        assert!(min.smooth);
    }

    #[test]
    fn report_json() {
        let r = sing_direct(&lp("n=6 (2,3)(4,5)")).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["sigma"], "n=6 (2,3)(4,5)");
        assert_eq!(v["method"], "direct");
        assert_eq!(v["rho"], 4);
        assert_eq!(v["smooth"], false);
        let c = &v["components"][0];
        assert_eq!(c["pattern"], "n=6 (1,6)(2,5)");
        assert_eq!(c["pair"]["arc1"], "(2,3)");
        assert_eq!(c["pair"]["arc2"], "(4,5)");
        assert_eq!(c["pair"]["interval"], serde_json::json!([1, 6]));
        assert_eq!(c["codim"], 4);
        assert_eq!(c["tangent_dim"], 11);
    }
}
