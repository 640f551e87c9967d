//! Standard Young tableaux of shape `(2^k, 1^(n-2k))`, stored column-wise.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result, TableauError};
use crate::linkpattern::{Arc, LinkPattern};

/// A two-column standard tableau. `first` holds `T1 = (a_1..a_{n-k})`,
/// `second` holds `T2 = (b_1..b_k)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwoColumnTableau {
    first: Vec<usize>,
    second: Vec<usize>,
}

impl TwoColumnTableau {
    /// Validates two columns; the entries must be exactly `1..=n`.
    pub fn new(first: Vec<usize>, second: Vec<usize>) -> Result<Self, TableauError> {
        let rows: Vec<Vec<usize>> = first
            .iter()
            .enumerate()
            .map(|(r, &a)| match second.get(r) {
                Some(&b) => vec![a, b],
                None => vec![a],
            })
            .collect();
        if second.len() > first.len() {
            return Err(TableauError::NotPartitionShape { row: first.len() + 1 });
        }
        Self::from_rows(&rows)
    }

    /// Validates a top-to-bottom list of rows.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self, TableauError> {
        if rows.is_empty() {
            return Err(TableauError::Empty);
        }
        let mut first = Vec::with_capacity(rows.len());
        let mut second = Vec::new();
        for (r, row) in rows.iter().enumerate() {
            match row.as_slice() {
                [a] => first.push(*a),
                [a, b] => {
                    if second.len() < first.len() {
                        return Err(TableauError::NotPartitionShape { row: r + 1 });
                    }
                    first.push(*a);
                    second.push(*b);
                }
                _ => {
                    return Err(TableauError::BadRowLength {
                        row: r + 1,
                        len: row.len(),
                    })
                }
            }
        }
        let n = first.len() + second.len();
        let mut seen = vec![false; n + 1];
        for &e in first.iter().chain(&second) {
            if e == 0 || e > n {
                // pigeonhole: something in 1..=n is missing
                continue;
            }
            if seen[e] {
                return Err(TableauError::RepeatedEntry(e));
            }
            seen[e] = true;
        }
        if let Some(m) = (1..=n).find(|&e| !seen[e]) {
            return Err(TableauError::MissingEntry(m, n));
        }
        for (r, (&a, &b)) in first.iter().zip(&second).enumerate() {
            if a >= b {
                return Err(TableauError::RowNotIncreasing {
                    row: r + 1,
                    left: a,
                    right: b,
                });
            }
        }
        for (column, col) in [(1, &first), (2, &second)] {
            if let Some(r) = col.windows(2).position(|w| w[0] >= w[1]) {
                return Err(TableauError::ColumnNotIncreasing { column, row: r + 2 });
            }
        }
        Ok(TwoColumnTableau { first, second })
    }

    /// `1..=n` in a single column.
    pub fn single_column(n: usize) -> Result<Self, TableauError> {
        Self::new((1..=n).collect(), Vec::new())
    }

    pub fn n(&self) -> usize {
        self.first.len() + self.second.len()
    }

    pub fn k(&self) -> usize {
        self.second.len()
    }

    pub fn first_column(&self) -> &[usize] {
        &self.first
    }

    pub fn second_column(&self) -> &[usize] {
        &self.second
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.first
            .iter()
            .enumerate()
            .map(|(r, &a)| match self.second.get(r) {
                Some(&b) => vec![a, b],
                None => vec![a],
            })
            .collect()
    }

    /// `{i ∈ T1 : i+1 ∈ T2}`, ascending.
    pub fn tau_star(&self) -> Vec<usize> {
        self.first
            .iter()
            .copied()
            .filter(|i| self.second.binary_search(&(i + 1)).is_ok())
            .collect()
    }

    pub fn rho(&self) -> usize {
        let tau = self.tau_star().len();
        let n = self.n();
        let k = self.k();
        let b = |i: usize| self.second[i - 1];
        let n_in_first = self.first.last() == Some(&n);
        if n_in_first {
            if (1..=k).all(|i| b(i) > 2 * i) {
                tau + 2
            } else {
                tau + 1
            }
        } else if (1..k).all(|i| b(i) > 2 * i) {
            tau + 1
        } else {
            tau
        }
    }

    /// Smooth iff `rho <= 3`.
    pub fn is_smooth(&self) -> bool {
        self.rho() <= 3
    }

    /// `σ_T = (i_1,b_1)...(i_k,b_k)` with `i_1 = b_1 - 1` and `i_s` the
    /// largest unused first-column entry below `b_s`.
    pub fn to_link_pattern(&self) -> LinkPattern {
        let mut unused = self.first.clone();
        let mut arcs = Vec::with_capacity(self.k());
        for &b in &self.second {
            // standardness guarantees a candidate; first-column entries are sorted
            let pos = unused.partition_point(|&a| a < b) - 1;
            let a = unused.remove(pos);
            arcs.push(Arc { left: a, right: b });
        }
        LinkPattern::from_arcs_unchecked(self.n(), arcs)
    }

    /// Inverse of [`to_link_pattern`](Self::to_link_pattern): the right ends
    /// form the second column.
    pub fn from_link_pattern(sigma: &LinkPattern) -> Result<Self> {
        if !sigma.is_maximal() {
            return Err(Error::NotMaximal(sigma.to_string()));
        }
        let second = sigma.right_ends();
        let first = (1..=sigma.n())
            .filter(|p| second.binary_search(p).is_err())
            .collect();
        if sigma.n() == 0 {
            return Err(TableauError::Empty.into());
        }
        Ok(TwoColumnTableau::new(first, second)?)
    }

    /// Rows joined by `" / "`, convenient on a command line.
    pub fn to_inline(&self) -> String {
        self.rows()
            .iter()
            .map(|r| join(r))
            .collect::<Vec<_>>()
            .join(" / ")
    }
}

fn join(row: &[usize]) -> String {
    row.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

impl fmt::Display for TwoColumnTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.rows().iter().enumerate() {
            if r > 0 {
                f.write_str("\n")?;
            }
            f.write_str(&join(row))?;
        }
        Ok(())
    }
}

impl FromStr for TwoColumnTableau {
    type Err = TableauError;

    /// One row per line (or rows separated by `/`), entries separated by
    /// whitespace. Blank rows are ignored.
    fn from_str(s: &str) -> Result<Self, TableauError> {
        let mut rows = Vec::new();
        for line in s.split(['\n', '/']) {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let row = line
                .split_whitespace()
                .map(|t| t.parse().map_err(|_| TableauError::BadEntry(t.into())))
                .collect::<Result<Vec<usize>, _>>()?;
            rows.push(row);
        }
        Self::from_rows(&rows)
    }
}

/// `dim F_x = Σ C(μ_i, 2)` over the conjugate partition `μ` of `λ`.
/// Parts may be given in any order; zero parts are ignored.
pub fn dim_springer_fiber(lambda: &[usize]) -> usize {
    let longest = lambda.iter().copied().max().unwrap_or(0);
    (1..=longest)
        .map(|c| lambda.iter().filter(|&&p| p >= c).count())
        .map(|mu| mu * mu.saturating_sub(1) / 2)
        .sum()
}

/// The partition `(2^k, 1^(n-2k))`.
pub fn two_column_shape(n: usize, k: usize) -> Vec<usize> {
    let mut p = vec![2; k];
    p.extend(std::iter::repeat_n(1, n.saturating_sub(2 * k)));
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXAMPLE: &str = "1 4\n2 5\n3 9\n6 10\n7\n8";

    fn lp(s: &str) -> LinkPattern {
        s.parse().unwrap()
    }

    #[test]
    fn parses_rows() {
        let t: TwoColumnTableau = EXAMPLE.parse().unwrap();
        assert_eq!(t.first_column(), &[1, 2, 3, 6, 7, 8]);
        assert_eq!(t.second_column(), &[4, 5, 9, 10]);
        let inline: TwoColumnTableau = "1 4 / 2 5 / 3 9 / 6 10 / 7 / 8".parse().unwrap();
        assert_eq!(inline, t);
        assert_eq!(t.to_string(), EXAMPLE);
        assert_eq!(t.to_inline(), "1 4 / 2 5 / 3 9 / 6 10 / 7 / 8");
        let single: TwoColumnTableau = "1 / 2".parse().unwrap();
        assert_eq!(single.k(), 0);
        assert_eq!(single.n(), 2);
    }

    #[test]
    fn rejects_bad_tableaux() {
        let e = |s: &str| s.parse::<TwoColumnTableau>().unwrap_err();
        assert_eq!(e("1 3 / 2 2"), TableauError::RepeatedEntry(2));
        assert_eq!(e("1 / 2 3"), TableauError::NotPartitionShape { row: 2 });
        assert_eq!(e("1 2 / 4"), TableauError::MissingEntry(3, 3));
        assert_eq!(
            e("2 1"),
            TableauError::RowNotIncreasing {
                row: 1,
                left: 2,
                right: 1
            }
        );
        assert_eq!(
            e("1 4 / 3 5 / 2"),
            TableauError::ColumnNotIncreasing { column: 1, row: 3 }
        );
        assert_eq!(
            e("1 3 / 2 4 / 5 6 7"),
            TableauError::BadRowLength { row: 3, len: 3 }
        );
        assert_eq!(e(""), TableauError::Empty);
        assert_eq!(e("1 x"), TableauError::BadEntry("x".into()));
    }

    #[test]
    fn rho_examples() {
        let t: TwoColumnTableau = EXAMPLE.parse().unwrap();
        assert_eq!(t.tau_star(), vec![3, 8]);
        assert_eq!(t.rho(), 3);
        assert!(t.is_smooth());

        let t = TwoColumnTableau::new(vec![1, 3, 5, 7], vec![2, 4, 6, 8]).unwrap();
        assert_eq!(t.tau_star(), vec![1, 3, 5, 7]);
        assert_eq!(t.rho(), 4);
        assert!(!t.is_smooth());

        let t = TwoColumnTableau::single_column(5).unwrap();
        assert!(t.tau_star().is_empty());
        assert_eq!(t.rho(), 2);
    }

    #[test]
    fn link_pattern_round_trip() {
        let t: TwoColumnTableau = EXAMPLE.parse().unwrap();
        let s = t.to_link_pattern();
        assert_eq!(s, lp("n=10 (3,4)(2,5)(8,9)(7,10)"));
        assert_eq!(TwoColumnTableau::from_link_pattern(&s).unwrap(), t);

        let t: TwoColumnTableau = "1 2/3 4/5 6/7 8".parse().unwrap();
        assert_eq!(t.to_link_pattern(), lp("n=8 (1,2)(3,4)(5,6)(7,8)"));
        assert_eq!(
            TwoColumnTableau::from_link_pattern(&lp("n=8 (1,2)(3,4)(5,6)(7,8)")).unwrap(),
            t
        );

        let s_tab = TwoColumnTableau::from_link_pattern(&lp("n=8 (1,8)(2,7)(3,4)(5,6)")).unwrap();
        assert_eq!(s_tab.to_link_pattern(), lp("n=8 (1,8)(2,7)(3,4)(5,6)"));
        assert!(s_tab.is_smooth());

        assert_eq!(
            TwoColumnTableau::from_link_pattern(&LinkPattern::empty(3)).unwrap(),
            TwoColumnTableau::single_column(3).unwrap()
        );
        assert!(TwoColumnTableau::from_link_pattern(&lp("n=5 (1,4)(2,5)")).is_err());
    }

    #[test]
    fn springer_fiber_dimension() {
        assert_eq!(dim_springer_fiber(&[2, 2, 1, 1]), 7);
        assert_eq!(dim_springer_fiber(&[1; 6]), 15);
        // conjugate of (2,2,2,2) is (4,4)
        assert_eq!(dim_springer_fiber(&[2, 2, 2, 2]), 12);
        for n in 0..12 {
            for k in 0..=n / 2 {
                let c2 = |m: usize| m * m.saturating_sub(1) / 2;
                assert_eq!(
                    dim_springer_fiber(&two_column_shape(n, k)),
                    c2(n - k) + c2(k)
                );
            }
        }
    }
}
