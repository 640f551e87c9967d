//! Link patterns: involutions of `{1..n}` drawn as `n` points on a line
//! joined by `k` pairwise disjoint arcs.
//!
//! A [`LinkPattern`] is the value every other module passes around. It is
//! immutable; all surgery (projection, completion, contraction, ...)
//! returns a new pattern. Points are 1-based throughout.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, ParseError, Result};

/// An arc `(left, right)` with `left < right`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arc {
    pub left: usize,
    pub right: usize,
}

impl Arc {
    /// Builds an arc from two distinct endpoints in either order.
    pub fn new(a: usize, b: usize) -> Arc {
        debug_assert_ne!(a, b);
        Arc {
            left: a.min(b),
            right: a.max(b),
        }
    }

    /// `left < p < right`.
    #[inline]
    pub fn spans(&self, p: usize) -> bool {
        self.left < p && p < self.right
    }

    /// Strictly encloses `other`.
    #[inline]
    pub fn is_over(&self, other: &Arc) -> bool {
        self.left < other.left && other.right < self.right
    }

    #[inline]
    pub fn crosses(&self, other: &Arc) -> bool {
        (self.left < other.left && other.left < self.right && self.right < other.right)
            || (other.left < self.left && self.left < other.right && other.right < self.right)
    }

    /// Both endpoints lie in `[a, b]`.
    #[inline]
    pub fn within(&self, a: usize, b: usize) -> bool {
        a <= self.left && self.right <= b
    }

    #[inline]
    pub fn is_short(&self) -> bool {
        self.right == self.left + 1
    }

    fn shifted(&self, by: usize) -> Arc {
        Arc {
            left: self.left + by,
            right: self.right + by,
        }
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.left, self.right)
    }
}

impl From<(usize, usize)> for Arc {
    fn from((a, b): (usize, usize)) -> Arc {
        Arc::new(a, b)
    }
}

/// An involution of `{1..n}` with `k` two-cycles, stored as its arcs
/// sorted by left endpoint.
///
/// Equality and hashing are structural. The derived `Ord` is the
/// lexicographic order on `(n, arcs)`, which is the enumeration order;
/// it has nothing to do with the orbit order [`LinkPattern::leq`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinkPattern {
    n: usize,
    arcs: Vec<Arc>,
}

impl LinkPattern {
    /// Validates and normalizes a pattern on `n` points.
    pub fn new<I, A>(n: usize, arcs: I) -> Result<LinkPattern, ParseError>
    where
        I: IntoIterator<Item = A>,
        A: Into<(usize, usize)>,
    {
        let mut used = vec![false; n + 1];
        let mut out = Vec::new();
        for pair in arcs {
            let (a, b) = pair.into();
            if a == b {
                return Err(ParseError::DegenerateArc(a));
            }
            let arc = Arc::new(a, b);
            if arc.left == 0 || arc.right > n {
                return Err(ParseError::EndpointOutOfRange {
                    left: arc.left,
                    right: arc.right,
                    n,
                });
            }
            for p in [arc.left, arc.right] {
                if used[p] {
                    return Err(ParseError::DuplicateEndpoint(p));
                }
                used[p] = true;
            }
            out.push(arc);
        }
        out.sort_unstable();
        Ok(LinkPattern { n, arcs: out })
    }

    /// Caller guarantees disjoint, in-range, sorted-or-not arcs.
    pub(crate) fn from_arcs_unchecked(n: usize, mut arcs: Vec<Arc>) -> LinkPattern {
        arcs.sort_unstable();
        debug_assert!(LinkPattern::new(n, arcs.iter().map(|a| (a.left, a.right))).is_ok());
        LinkPattern { n, arcs }
    }

    /// Builds a pattern from a mate table (`mates[p] == p` for fixed points,
    /// index 0 unused).
    pub(crate) fn from_mates(mates: &[usize]) -> LinkPattern {
        let n = mates.len() - 1;
        let arcs = (1..=n)
            .filter(|&p| mates[p] > p)
            .map(|p| Arc {
                left: p,
                right: mates[p],
            })
            .collect();
        LinkPattern { n, arcs }
    }

    /// The pattern on `n` points with no arcs.
    pub fn empty(n: usize) -> LinkPattern {
        LinkPattern { n, arcs: Vec::new() }
    }

    /// `(1,n-k+1)(2,n-k+2)...(k,n)`, the unique minimum of `I(n,k)`.
    pub fn minimum(n: usize, k: usize) -> Result<LinkPattern> {
        if 2 * k > n {
            return Err(Error::TooManyArcs { n, k });
        }
        let arcs = (1..=k)
            .map(|i| Arc {
                left: i,
                right: n - k + i,
            })
            .collect();
        Ok(LinkPattern { n, arcs })
    }

    /// `con(k) = (1,2k)(2,2k-1)...(k,k+1)`: `k` concentric arcs on `2k` points.
    pub fn concentric(k: usize) -> LinkPattern {
        let arcs = (1..=k)
            .map(|i| Arc {
                left: i,
                right: 2 * k + 1 - i,
            })
            .collect();
        LinkPattern { n: 2 * k, arcs }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of arcs.
    #[inline]
    pub fn k(&self) -> usize {
        self.arcs.len()
    }

    #[inline]
    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn has_arc(&self, arc: Arc) -> bool {
        self.arcs.binary_search(&arc).is_ok()
    }

    /// Mate table of length `n + 1`; `mates[p] == p` for a fixed point.
    pub fn mates(&self) -> Vec<usize> {
        let mut m: Vec<usize> = (0..=self.n).collect();
        for a in &self.arcs {
            m[a.left] = a.right;
            m[a.right] = a.left;
        }
        m
    }

    /// The image of `p` under the involution.
    pub fn mate(&self, p: usize) -> usize {
        self.arcs
            .iter()
            .find_map(|a| {
                if a.left == p {
                    Some(a.right)
                } else if a.right == p {
                    Some(a.left)
                } else {
                    None
                }
            })
            .unwrap_or(p)
    }

    pub fn is_fixed(&self, p: usize) -> bool {
        (1..=self.n).contains(&p) && self.arcs.iter().all(|a| a.left != p && a.right != p)
    }

    /// Fixed points, ascending.
    pub fn fixed_points(&self) -> Vec<usize> {
        let m = self.mates();
        (1..=self.n).filter(|&p| m[p] == p).collect()
    }

    pub fn left_ends(&self) -> Vec<usize> {
        self.arcs.iter().map(|a| a.left).collect()
    }

    pub fn right_ends(&self) -> Vec<usize> {
        let mut r: Vec<usize> = self.arcs.iter().map(|a| a.right).collect();
        r.sort_unstable();
        r
    }

    /// Total number of crossing pairs `i < i' < j < j'`.
    pub fn crossings(&self) -> usize {
        let mut c = 0;
        for (x, a) in self.arcs.iter().enumerate() {
            for b in &self.arcs[x + 1..] {
                // b.left > a.left by sort order
                if b.left < a.right && a.right < b.right {
                    c += 1;
                }
            }
        }
        c
    }

    /// Total number of (arc, fixed point under it) incidences.
    pub fn bridges(&self) -> usize {
        let m = self.mates();
        self.arcs
            .iter()
            .map(|a| (a.left + 1..a.right).filter(|&p| m[p] == p).count())
            .sum()
    }

    /// `b(σ) + c(σ)`, the codimension of the orbit in the whole fiber.
    pub fn defect(&self) -> usize {
        self.bridges() + self.crossings()
    }

    pub fn statistics(&self) -> ArcStatistics {
        let m = self.mates();
        let arcs = self
            .arcs
            .iter()
            .map(|a| ArcStat {
                arc: *a,
                right_crossings: self
                    .arcs
                    .iter()
                    .filter(|b| a.left < b.left && b.left < a.right && a.right < b.right)
                    .count(),
                left_crossings: self
                    .arcs
                    .iter()
                    .filter(|b| b.left < a.left && a.left < b.right && b.right < a.right)
                    .count(),
                bridges: (a.left + 1..a.right).filter(|&p| m[p] == p).count(),
            })
            .collect();
        let fixed = (1..=self.n)
            .filter(|&p| m[p] == p)
            .map(|p| (p, self.arcs.iter().filter(|a| a.spans(p)).count()))
            .collect();
        ArcStatistics { arcs, fixed }
    }

    pub fn rank_matrix(&self) -> RankMatrix {
        RankMatrix::of(self)
    }

    /// The orbit order: `self <= other` iff the rank matrices compare entrywise.
    pub fn leq(&self, other: &LinkPattern) -> Result<bool> {
        self.check_same_universe(other)?;
        Ok(self.rank_matrix().leq(&other.rank_matrix()))
    }

    pub fn lt(&self, other: &LinkPattern) -> Result<bool> {
        Ok(self != other && self.leq(other)?)
    }

    fn check_same_universe(&self, other: &LinkPattern) -> Result<()> {
        if self.n != other.n || self.k() != other.k() {
            return Err(Error::Incomparable {
                n1: self.n,
                k1: self.k(),
                n2: other.n,
                k2: other.k(),
            });
        }
        Ok(())
    }

    fn check_interval(&self, a: usize, b: usize) -> Result<()> {
        if a == 0 || a >= b || b > self.n {
            return Err(Error::BadInterval { a, b, n: self.n });
        }
        Ok(())
    }

    /// Arcs with both ends in `[a, b]`, re-indexed to `1..=b-a+1`.
    pub fn projection(&self, a: usize, b: usize) -> Result<Projection> {
        self.check_interval(a, b)?;
        Ok(self.window(a, b))
    }

    /// Like [`projection`](Self::projection) but also accepts the empty
    /// window `b = a - 1` and single points, which assembly code needs.
    pub(crate) fn window(&self, a: usize, b: usize) -> Projection {
        let len = (b + 1).saturating_sub(a);
        let arcs = self
            .arcs
            .iter()
            .filter(|x| x.within(a, b))
            .map(|x| Arc {
                left: x.left + 1 - a,
                right: x.right + 1 - a,
            })
            .collect();
        Projection {
            pattern: LinkPattern { n: len, arcs },
            offset: a.saturating_sub(1),
        }
    }

    /// `σ⁻` with the listed arcs removed.
    pub fn delete_arcs(&self, arcs: &[Arc]) -> Result<LinkPattern> {
        for a in arcs {
            if !self.has_arc(*a) {
                return Err(Error::ArcAbsent(*a));
            }
        }
        Ok(LinkPattern {
            n: self.n,
            arcs: self
                .arcs
                .iter()
                .filter(|a| !arcs.contains(a))
                .copied()
                .collect(),
        })
    }

    /// `(i,j)σ`: joins two fixed points by a new arc.
    pub fn add_arc(&self, i: usize, j: usize) -> Result<LinkPattern> {
        if i == j {
            return Err(ParseError::DegenerateArc(i).into());
        }
        for p in [i, j] {
            if !self.is_fixed(p) {
                return Err(Error::NotFixed(p));
            }
        }
        let mut arcs = self.arcs.clone();
        arcs.push(Arc::new(i, j));
        Ok(LinkPattern::from_arcs_unchecked(self.n, arcs))
    }

    /// Moves every point `p` to `p + by` inside a pattern of `new_n` points:
    /// `by` fixed points are prepended and `new_n - n - by` appended.
    pub fn shift(&self, by: usize, new_n: usize) -> Result<LinkPattern> {
        if new_n < self.n + by {
            return Err(Error::ShiftTooSmall {
                n: self.n,
                shift: by,
                new_n,
            });
        }
        Ok(LinkPattern {
            n: new_n,
            arcs: self.arcs.iter().map(|a| a.shifted(by)).collect(),
        })
    }

    /// `σ υ₊ₙ`: `other` glued to the right of `self`.
    pub fn concat(&self, other: &LinkPattern) -> LinkPattern {
        let mut arcs = self.arcs.clone();
        arcs.extend(other.arcs.iter().map(|a| a.shifted(self.n)));
        LinkPattern {
            n: self.n + other.n,
            arcs,
        }
    }

    /// `(1, m₁+1) σ₊₁` where `m₁` is the smallest fixed point.
    pub fn complete_left(&self) -> Result<LinkPattern> {
        let m1 = *self.fixed_points().first().ok_or(Error::NoFixedPoint)?;
        let mut arcs: Vec<Arc> = self.arcs.iter().map(|a| a.shifted(1)).collect();
        arcs.push(Arc {
            left: 1,
            right: m1 + 1,
        });
        Ok(LinkPattern::from_arcs_unchecked(self.n + 1, arcs))
    }

    /// `(m₂, n+1) σ` where `m₂` is the largest fixed point.
    pub fn complete_right(&self) -> Result<LinkPattern> {
        let m2 = *self.fixed_points().last().ok_or(Error::NoFixedPoint)?;
        let mut arcs = self.arcs.clone();
        arcs.push(Arc {
            left: m2,
            right: self.n + 1,
        });
        Ok(LinkPattern::from_arcs_unchecked(self.n + 1, arcs))
    }

    /// The `(left, right)`-maximal completion.
    pub fn completion(&self, left: usize, right: usize) -> Result<LinkPattern> {
        let mut p = self.clone();
        for _ in 0..left {
            p = p.complete_left()?;
        }
        for _ in 0..right {
            p = p.complete_right()?;
        }
        Ok(p)
    }

    /// Removes `arc` together with its two endpoints, closing the gaps.
    pub fn contract_arc(&self, arc: Arc) -> Result<LinkPattern> {
        if !self.has_arc(arc) {
            return Err(Error::ArcAbsent(arc));
        }
        let relabel = |d: usize| {
            if d < arc.left {
                d
            } else if d < arc.right {
                d - 1
            } else {
                d - 2
            }
        };
        let arcs = self
            .arcs
            .iter()
            .filter(|a| **a != arc)
            .map(|a| Arc {
                left: relabel(a.left),
                right: relabel(a.right),
            })
            .collect();
        Ok(LinkPattern::from_arcs_unchecked(self.n - 2, arcs))
    }

    /// No crossings and no fixed point under an arc.
    pub fn is_maximal(&self) -> bool {
        self.crossings() == 0 && self.bridges() == 0
    }

    /// `{i : (i, i+1) is an arc}`, ascending.
    pub fn tau_star(&self) -> Vec<usize> {
        self.arcs
            .iter()
            .filter(|a| a.is_short())
            .map(|a| a.left)
            .collect()
    }

    /// The smoothness statistic of a maximal pattern.
    pub fn rho(&self) -> Result<usize> {
        if !self.is_maximal() {
            return Err(Error::NotMaximal(self.to_string()));
        }
        let tau = self.tau_star().len();
        if self.n == 0 {
            return Ok(tau);
        }
        let outer = Arc {
            left: 1,
            right: self.n,
        };
        Ok(match (self.is_fixed(1), self.is_fixed(self.n)) {
            (true, true) => tau + 2,
            (true, false) | (false, true) => tau + 1,
            _ if self.has_arc(outer) => tau + 1,
            _ => tau,
        })
    }

    /// All of `I(n,k)` (or its maximal elements) in lexicographic order of
    /// the sorted arc lists.
    pub fn enumerate(n: usize, k: usize, maximal_only: bool) -> Result<Enumerate> {
        if 2 * k > n {
            return Err(Error::TooManyArcs { n, k });
        }
        Ok(Enumerate {
            n,
            k,
            arcs: Vec::with_capacity(k),
            used: vec![false; n + 2],
            started: false,
            done: false,
            maximal_only,
        })
    }
}

/// `|I(n,k)| = n! / (2^k k! (n-2k)!)`.
pub fn involution_count(n: usize, k: usize) -> u128 {
    if 2 * k > n {
        return 0;
    }
    // C(n, 2k) * (2k-1)!!
    let mut c: u128 = 1;
    for i in 0..2 * k {
        c = c * (n - i) as u128 / (i + 1) as u128;
    }
    let mut dfact: u128 = 1;
    let mut m = 2 * k as u128;
    while m > 1 {
        dfact *= m - 1;
        m -= 2;
    }
    c * dfact
}

impl fmt::Display for LinkPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}", self.n)?;
        if !self.arcs.is_empty() {
            f.write_str(" ")?;
            for a in &self.arcs {
                write!(f, "{a}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for LinkPattern {
    type Err = ParseError;

    /// Grammar: `["n=" INT] ("(" INT "," INT ")")*`, whitespace allowed
    /// between tokens. `n=` may also trail the arcs. Without it, `n` is the
    /// largest endpoint.
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let mut p = Scanner { s: s.as_bytes(), pos: 0 };
        let mut n = None;
        let mut pairs = Vec::new();
        loop {
            p.skip_ws();
            match p.peek() {
                None => break,
                Some(b'n') => {
                    let at = p.pos;
                    p.pos += 1;
                    p.skip_ws();
                    p.expect(b'=')?;
                    p.skip_ws();
                    let v = p.int()?;
                    if n.replace(v).is_some() {
                        return Err(ParseError::Malformed {
                            pos: at,
                            msg: "n= given more than once".into(),
                        });
                    }
                }
                Some(b'(') => {
                    p.pos += 1;
                    p.skip_ws();
                    let a = p.int()?;
                    p.skip_ws();
                    p.expect(b',')?;
                    p.skip_ws();
                    let b = p.int()?;
                    p.skip_ws();
                    p.expect(b')')?;
                    pairs.push((a, b));
                }
                Some(c) => {
                    return Err(ParseError::Malformed {
                        pos: p.pos,
                        msg: format!("unexpected character {:?}", c as char),
                    })
                }
            }
        }
        let n = n.unwrap_or_else(|| pairs.iter().map(|&(a, b)| a.max(b)).max().unwrap_or(0));
        LinkPattern::new(n, pairs)
    }
}

struct Scanner<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Scanner<'_> {
    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(ParseError::Malformed {
                pos: self.pos,
                msg: format!("expected {:?}", c as char),
            })
        }
    }

    fn int(&mut self) -> Result<usize, ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .ok()
            .and_then(|t| t.parse().ok())
            .ok_or(ParseError::Malformed {
                pos: start,
                msg: "expected an integer".into(),
            })
    }
}

impl Serialize for LinkPattern {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for LinkPattern {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A projection `π_{a,b}(σ)` re-indexed to start at 1; `offset = a - 1`
/// restores absolute coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Projection {
    pub pattern: LinkPattern,
    pub offset: usize,
}

impl Projection {
    pub fn to_absolute(&self, arc: Arc) -> Arc {
        arc.shifted(self.offset)
    }
}

/// Strictly upper triangular matrix of arc counts: `entry(i, j)` is the
/// number of arcs inside `[i, j]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RankMatrix {
    n: usize,
    entries: Vec<u32>,
}

impl RankMatrix {
    pub fn of(sigma: &LinkPattern) -> RankMatrix {
        let n = sigma.n;
        let m = sigma.mates();
        let mut entries = vec![0u32; n * n];
        // R[i][j] = R[i+1][j] + [i is a left end whose mate is <= j]
        for i in (1..=n).rev() {
            for j in i + 1..=n {
                let below = if i < n { entries[i * n + (j - 1)] } else { 0 };
                let own = u32::from(m[i] > i && m[i] <= j);
                entries[(i - 1) * n + (j - 1)] = below + own;
            }
        }
        RankMatrix { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// 1-based; zero on and below the diagonal.
    pub fn entry(&self, i: usize, j: usize) -> u32 {
        if i >= j || i == 0 || j > self.n {
            0
        } else {
            self.entries[(i - 1) * self.n + (j - 1)]
        }
    }

    pub fn leq(&self, other: &RankMatrix) -> bool {
        self.n == other.n && self.entries.iter().zip(&other.entries).all(|(a, b)| a <= b)
    }

    /// Entries strictly above the diagonal, row by row.
    pub fn upper_triangle(&self) -> impl Iterator<Item = u32> + '_ {
        let n = self.n;
        (1..=n).flat_map(move |i| (i + 1..=n).map(move |j| self.entry(i, j)))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArcStat {
    pub arc: Arc,
    /// Arcs crossing this one on the right.
    pub right_crossings: usize,
    pub left_crossings: usize,
    /// Fixed points under the arc.
    pub bridges: usize,
}

/// Per-arc and per-fixed-point crossing and bridge counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArcStatistics {
    pub arcs: Vec<ArcStat>,
    /// `(fixed point, number of arcs over it)`.
    pub fixed: Vec<(usize, usize)>,
}

impl ArcStatistics {
    pub fn crossings(&self) -> usize {
        self.arcs.iter().map(|a| a.right_crossings).sum()
    }

    pub fn bridges(&self) -> usize {
        self.arcs.iter().map(|a| a.bridges).sum()
    }
}

/// Lazy lexicographic stream over `I(n,k)`; see [`LinkPattern::enumerate`].
#[derive(Clone, Debug)]
pub struct Enumerate {
    n: usize,
    k: usize,
    arcs: Vec<Arc>,
    used: Vec<bool>,
    started: bool,
    done: bool,
    maximal_only: bool,
}

impl Enumerate {
    fn mark(&mut self, a: Arc, v: bool) {
        self.used[a.left] = v;
        self.used[a.right] = v;
    }

    fn first_free(&self, from: usize) -> Option<usize> {
        (from..=self.n).find(|&p| !self.used[p])
    }

    fn min_left(&self) -> usize {
        self.arcs.last().map_or(1, |a| a.left + 1)
    }

    fn enough_room(&self, left: usize) -> bool {
        let free = (left..=self.n).filter(|&p| !self.used[p]).count();
        free >= 2 * (self.k - self.arcs.len())
    }

    /// Smallest arc with left end `>= from` leaving room for the rest.
    fn smallest_arc(&self, from: usize) -> Option<Arc> {
        let left = self.first_free(from)?;
        if !self.enough_room(left) {
            return None;
        }
        let right = self.first_free(left + 1)?;
        Some(Arc { left, right })
    }

    /// Next arc after `last` in lexicographic order, left end `>= from`.
    fn next_arc(&self, from: usize, last: Arc) -> Option<Arc> {
        if let Some(right) = self.first_free(last.right + 1) {
            return Some(Arc {
                left: last.left,
                right,
            });
        }
        self.smallest_arc(from.max(last.left + 1))
    }

    fn bump(&mut self) -> bool {
        while let Some(last) = self.arcs.pop() {
            self.mark(last, false);
            if let Some(a) = self.next_arc(self.min_left(), last) {
                self.mark(a, true);
                self.arcs.push(a);
                return true;
            }
        }
        false
    }

    fn settle(&mut self) -> bool {
        loop {
            if self.arcs.len() == self.k {
                return true;
            }
            match self.smallest_arc(self.min_left()) {
                Some(a) => {
                    self.mark(a, true);
                    self.arcs.push(a);
                }
                None => {
                    if !self.bump() {
                        return false;
                    }
                }
            }
        }
    }

    fn step(&mut self) -> Option<LinkPattern> {
        if self.done {
            return None;
        }
        let ok = if self.started {
            self.bump() && self.settle()
        } else {
            self.started = true;
            self.settle()
        };
        if !ok {
            self.done = true;
            return None;
        }
        Some(LinkPattern {
            n: self.n,
            arcs: self.arcs.clone(),
        })
    }
}

impl Iterator for Enumerate {
    type Item = LinkPattern;

    fn next(&mut self) -> Option<LinkPattern> {
        loop {
            let p = self.step()?;
            if !self.maximal_only || p.is_maximal() {
                return Some(p);
            }
        }
    }
}
