//! Permutations of `1..=n` in one-line notation, the operations on them,
//! and the named families used to build the antichain graphs.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    oneline: Vec<usize>,
}

impl Permutation {
    pub fn new(oneline: Vec<usize>) -> Result<Permutation> {
        let n = oneline.len();
        let mut seen = vec![false; n + 1];
        for &x in &oneline {
            if x == 0 || x > n {
                return Err(Error::InvalidPermutation(format!(
                    "value {x} outside 1..={n}"
                )));
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidPermutation(format!("value {x} repeated")));
            }
        }
        Ok(Permutation { oneline })
    }

    pub fn identity(n: usize) -> Permutation {
        Permutation {
            oneline: (1..=n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.oneline.len()
    }

    pub fn is_empty(&self) -> bool {
        self.oneline.is_empty()
    }

    /// `π(i)` for `1 <= i <= n`.
    pub fn apply(&self, i: usize) -> usize {
        self.oneline[i - 1]
    }

    pub fn oneline(&self) -> &[usize] {
        &self.oneline
    }

    /// `positions()[v]` is the 1-based position of value `v`; index 0 unused.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.len() + 1];
        for (i, &v) in self.oneline.iter().enumerate() {
            pos[v] = i + 1;
        }
        pos
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, v) in self.oneline.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `(4,2,6,1,5,3)` with optional whitespace.
    fn from_str(s: &str) -> Result<Permutation> {
        let bad = |msg: &str| Error::InvalidPermutation(format!("{msg}: `{s}`"));
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| bad("expected parentheses"))?;
        if inner.trim().is_empty() {
            return Permutation::new(vec![]);
        }
        let values = inner
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| bad("bad entry")))
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(values)
    }
}

/// `result(i) = outer(inner(i))`.
pub fn compose(outer: &Permutation, inner: &Permutation) -> Result<Permutation> {
    if outer.len() != inner.len() {
        return Err(Error::SizeMismatch {
            left: outer.len(),
            right: inner.len(),
        });
    }
    Ok(Permutation {
        oneline: inner.oneline.iter().map(|&i| outer.apply(i)).collect(),
    })
}

pub fn inverse(p: &Permutation) -> Permutation {
    Permutation {
        oneline: p.positions()[1..].to_vec(),
    }
}

/// Whether some subsequence of `host` is order-isomorphic to `pattern`.
pub fn contains_pattern(host: &Permutation, pattern: &Permutation) -> bool {
    find_pattern(host, pattern).is_some()
}

/// Positions (1-based, increasing) of the first occurrence of `pattern`
/// in `host`, in lexicographic order of position tuples.
pub fn find_pattern(host: &Permutation, pattern: &Permutation) -> Option<Vec<usize>> {
    let k = pattern.len();
    if k > host.len() {
        return None;
    }
    let mut chosen = Vec::with_capacity(k);
    extend_pattern(host.oneline(), pattern.oneline(), 0, &mut chosen)
        .then(|| chosen.iter().map(|i| i + 1).collect())
}

fn extend_pattern(host: &[usize], pattern: &[usize], from: usize, chosen: &mut Vec<usize>) -> bool {
    let j = chosen.len();
    if j == pattern.len() {
        return true;
    }
    // Leave room for the rest of the pattern.
    let last = host.len() - (pattern.len() - j);
    for i in from..=last {
        let v = host[i];
        let consistent = chosen
            .iter()
            .zip(pattern)
            .all(|(&c, &pv)| (pv < pattern[j]) == (host[c] < v));
        if consistent {
            chosen.push(i);
            if extend_pattern(host, pattern, i + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// Checks an occurrence returned by [`find_pattern`] pair by pair.
pub fn verify_occurrence(host: &Permutation, pattern: &Permutation, positions: &[usize]) -> bool {
    positions.len() == pattern.len()
        && positions.windows(2).all(|w| w[0] < w[1])
        && positions.iter().all(|&p| (1..=host.len()).contains(&p))
        && (0..positions.len()).all(|a| {
            (0..positions.len()).all(|b| {
                (pattern.oneline()[a] < pattern.oneline()[b])
                    == (host.apply(positions[a]) < host.apply(positions[b]))
            })
        })
}

/// For every `i`, the positions holding values `>= i` are consecutive.
pub fn is_convex(p: &Permutation) -> bool {
    let pos = p.positions();
    let (mut lo, mut hi) = (usize::MAX, 0);
    for (count, v) in (1..=p.len()).rev().enumerate() {
        lo = lo.min(pos[v]);
        hi = hi.max(pos[v]);
        if hi - lo != count {
            return false;
        }
    }
    true
}

/// A pair of convex permutations `mu`, `rho` with `mu ∘ rho⁻¹` equal to the
/// permutation it certifies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiconvexWitness {
    pub mu: Permutation,
    pub rho: Permutation,
}

pub fn verify_biconvex_witness(p: &Permutation, w: &BiconvexWitness) -> bool {
    if w.mu.len() != p.len() || w.rho.len() != p.len() {
        return false;
    }
    is_convex(&w.mu)
        && is_convex(&w.rho)
        && compose(&w.mu, &inverse(&w.rho)).is_ok_and(|c| &c == p)
}

/// Vertices are the values; `i < j` are adjacent iff `i` sits to the right
/// of `j`, i.e. they form an inversion.
pub fn permutation_graph(p: &Permutation) -> Graph {
    let pos = p.positions();
    let n = p.len();
    let mut b = GraphBuilder::new(n);
    for i in 1..=n {
        for j in (i + 1)..=n {
            if pos[i] > pos[j] {
                b.add_edge(i, j);
            }
        }
    }
    b.build()
}

fn check_even(n: usize, min: usize) -> Result<()> {
    if n < min || n % 2 != 0 {
        return Err(Error::InvalidParameter(format!(
            "n must be even and at least {min}, got {n}"
        )));
    }
    Ok(())
}

/// `(4, 2, 6, 1, 8, 3, …, n, n-5, n-1, n-3)`: prefix `(4, 2)`, pairs
/// `(2j, 2j-5)` for `j = 3..=n/2`, tail `(n-1, n-3)`. Even `n >= 6`.
pub fn star_perm_t(n: usize) -> Result<Permutation> {
    check_even(n, 6)?;
    let mut v = vec![4, 2];
    for j in 3..=n / 2 {
        v.extend([2 * j, 2 * j - 5]);
    }
    v.extend([n - 1, n - 3]);
    Permutation::new(v)
}

/// `(2, 3, 5, 1, 7, 4, 9, 6, …, n, n-4, n-1, n-2)`: prefix `(2, 3, 5, 1)`,
/// pairs `(2j+3, 2j)` for `j = 2..=n/2-3`, tail `(n, n-4, n-1, n-2)`.
/// Even `n >= 8`.
pub fn star_perm_s(n: usize) -> Result<Permutation> {
    check_even(n, 8)?;
    let mut v = vec![2, 3, 5, 1];
    for j in 2..=n / 2 - 3 {
        v.extend([2 * j + 3, 2 * j]);
    }
    v.extend([n, n - 4, n - 1, n - 2]);
    Permutation::new(v)
}

/// `(1, 2, odd 3..=n-1 ascending, n, even n-2..=4 descending)`.
pub fn rho_star(n: usize) -> Result<Permutation> {
    check_even(n, 8)?;
    let mut v = vec![1, 2];
    v.extend((3..n).step_by(2));
    v.push(n);
    v.extend((4..=n - 2).rev().step_by(2));
    Permutation::new(v)
}

/// `(2, odd 3..=n-3 ascending, n, n-1, even n-2..=4 descending, 1)`.
pub fn mu_star(n: usize) -> Result<Permutation> {
    check_even(n, 8)?;
    let mut v = vec![2];
    v.extend((3..=n - 3).step_by(2));
    v.extend([n, n - 1]);
    v.extend((4..=n - 2).rev().step_by(2));
    v.push(1);
    Permutation::new(v)
}

/// The convex factorization of [`star_perm_s`].
pub fn star_witness(n: usize) -> Result<BiconvexWitness> {
    Ok(BiconvexWitness {
        mu: mu_star(n)?,
        rho: rho_star(n)?,
    })
}
