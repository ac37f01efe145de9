//! Integer partitions and permutations of a fixed cycle type.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use super::multiset::ParseError;

/// A partition: weakly decreasing sequence of positive integers.
///
/// Partitions index the irreducible symmetric group modules, the shapes of
/// tableaux and the cycle types of permutations.  The derived `Ord` (lex on
/// the part vector) is only used for deterministic map ordering.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// The empty partition of 0.
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Build from parts that are already weakly decreasing and positive.
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "partition parts must be weakly decreasing: {parts:?}"
        );
        assert!(
            parts.iter().all(|&p| p > 0),
            "partition parts must be positive"
        );
        Partition(parts)
    }

    /// Build from an arbitrary vector: zeros are dropped, parts sorted.
    pub fn from_unsorted(parts: &[u32]) -> Self {
        let mut v: Vec<u32> = parts.iter().copied().filter(|&p| p > 0).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition(v)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of the parts.
    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    /// Part at `row` (0-based), or 0 past the last row.
    pub fn part(&self, row: usize) -> u32 {
        self.0.get(row).copied().unwrap_or(0)
    }

    /// Containment of Young diagrams: every row of `inner` fits in `self`.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.0.iter().enumerate().all(|(i, &p)| self.part(i) >= p)
    }

    /// Multiplicity of each part value: `(value, count)` pairs.
    pub fn part_multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((v, c)) if *v == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Append a part, keeping the weakly decreasing invariant.
    pub fn push(&mut self, part: u32) {
        assert!(part > 0 && self.0.last().map_or(true, |&l| l >= part));
        self.0.push(part);
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for Partition {
    type Err = ParseError;

    /// Parses the `[10,8,5,1]` syntax; `[]` is the empty partition.
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let s = s.trim();
        let inner = s
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| ParseError(format!("partition must be bracketed: {s}")))?;
        let inner = inner.trim();
        let mut parts = Vec::new();
        if !inner.is_empty() {
            for item in inner.split(',') {
                let p: u32 = item
                    .trim()
                    .parse()
                    .map_err(|_| ParseError(format!("bad part {item:?}")))?;
                if p == 0 {
                    return Err(ParseError("partition parts must be positive".into()));
                }
                parts.push(p);
            }
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(ParseError(format!("parts must be weakly decreasing: {s}")));
        }
        Ok(Partition(parts))
    }
}

/// All partitions of `k`, optionally with at most `max_length` parts, in
/// decreasing lexicographic order: `(k)` first, `(1,1,...,1)` last.
pub fn enumerate_partitions(k: usize, max_length: Option<usize>) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(
        remaining: usize,
        max_part: usize,
        slots: Option<usize>,
        current: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            out.push(Partition(current.clone()));
            return;
        }
        if slots == Some(0) {
            return;
        }
        let hi = remaining.min(max_part);
        // A lower bound on the next part: with s slots left we need parts
        // of size at least ceil(remaining / s) to fit.
        let lo = match slots {
            Some(s) => remaining.div_ceil(s),
            None => 1,
        };
        for p in (lo..=hi).rev() {
            current.push(p as u32);
            rec(remaining - p, p, slots.map(|s| s - 1), current, out);
            current.pop();
        }
    }
    rec(k, k.max(1), max_length, &mut current, &mut out);
    out
}

/// The centralizer order `z_mu = prod_i m_i! * i^{m_i}` where `m_i` counts
/// the parts of size `i`.  `|mu|! / z_mu` is the number of permutations of
/// cycle type `mu`.
pub fn z_mu(mu: &Partition) -> BigInt {
    let mut z = BigInt::one();
    for (value, count) in mu.part_multiplicities() {
        for c in 1..=count {
            z *= BigInt::from(c);
        }
        for _ in 0..count {
            z *= BigInt::from(value);
        }
    }
    z
}

/// A permutation of `{0, .., n-1}` in one-line notation (`i -> perm[i]`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn new(map: Vec<usize>) -> Self {
        let n = map.len();
        let mut seen = vec![false; n];
        for &v in &map {
            assert!(v < n && !seen[v], "not a permutation: {map:?}");
            seen[v] = true;
        }
        Permutation(map)
    }

    /// Transposition of `a` and `b` (0-based) in `S_n`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut map: Vec<usize> = (0..n).collect();
        map.swap(a, b);
        Permutation(map)
    }

    /// The long cycle `(0 1 2 ... n-1)`.
    pub fn long_cycle(n: usize) -> Self {
        Permutation((0..n).map(|i| (i + 1) % n).collect())
    }

    /// The canonical permutation of cycle type `mu`: cycles on consecutive
    /// blocks, largest part first.
    pub fn of_cycle_type(mu: &Partition, n: usize) -> Self {
        assert_eq!(mu.size(), n, "cycle type must be a partition of n");
        let mut map: Vec<usize> = (0..n).collect();
        let mut start = 0;
        for &p in mu.parts() {
            let p = p as usize;
            for i in 0..p {
                map[start + i] = start + (i + 1) % p;
            }
            start += p;
        }
        Permutation(map)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    /// Composition `self . other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len());
        Permutation(
            (0..self.len())
                .map(|i| self.apply(other.apply(i)))
                .collect(),
        )
    }

    /// All `n!` permutations, lexicographic in one-line notation.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut items: Vec<usize> = (0..n).collect();
        fn rec(items: &mut Vec<usize>, prefix: &mut Vec<usize>, out: &mut Vec<Permutation>) {
            if items.is_empty() {
                out.push(Permutation(prefix.clone()));
                return;
            }
            for idx in 0..items.len() {
                let v = items.remove(idx);
                prefix.push(v);
                rec(items, prefix, out);
                prefix.pop();
                items.insert(idx, v);
            }
        }
        rec(&mut items, &mut Vec::new(), &mut out);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn enumerate_small() {
        assert_eq!(enumerate_partitions(0, None), vec![Partition::empty()]);
        assert_eq!(
            enumerate_partitions(3, None),
            vec![pt("[3]"), pt("[2,1]"), pt("[1,1,1]")]
        );
        assert_eq!(
            enumerate_partitions(5, Some(2)),
            vec![pt("[5]"), pt("[4,1]"), pt("[3,2]")]
        );
    }

    #[test]
    fn enumerate_counts() {
        // p(1..9) = 1, 2, 3, 5, 7, 11, 15, 22, 30
        let expected = [1usize, 2, 3, 5, 7, 11, 15, 22, 30];
        for (k, &e) in expected.iter().enumerate() {
            assert_eq!(enumerate_partitions(k + 1, None).len(), e);
        }
    }

    #[test]
    fn z_mu_values() {
        assert_eq!(z_mu(&pt("[1,1,1]")), BigInt::from(6));
        assert_eq!(z_mu(&pt("[2,1]")), BigInt::from(2));
        assert_eq!(z_mu(&pt("[3,3,1]")), BigInt::from(18));
    }

    #[test]
    fn z_mu_counts_centralizer() {
        // z_mu * #{perms of cycle type mu} = n!, checked by brute count.
        for n in 1..=8usize {
            let mut fact = BigInt::one();
            for i in 1..=n {
                fact *= BigInt::from(i);
            }
            let mut counts = std::collections::BTreeMap::new();
            for sigma in Permutation::all(n) {
                *counts.entry(cycle_type(&sigma)).or_insert(0usize) += 1;
            }
            for mu in enumerate_partitions(n, None) {
                let by_formula = &fact / z_mu(&mu);
                assert_eq!(by_formula, BigInt::from(counts[&mu]), "mu={mu}");
            }
        }
    }

    fn cycle_type(sigma: &Permutation) -> Partition {
        let n = sigma.len();
        let mut seen = vec![false; n];
        let mut lens = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0u32;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = sigma.apply(i);
                len += 1;
            }
            lens.push(len);
        }
        Partition::from_unsorted(&lens)
    }

    #[test]
    fn partition_parse_and_display() {
        assert_eq!(pt("[10,8,5,1]").to_string(), "[10,8,5,1]");
        assert_eq!(pt("[]"), Partition::empty());
        assert!("[1,2]".parse::<Partition>().is_err());
    }

    #[test]
    fn cycle_type_permutation() {
        let sigma = Permutation::of_cycle_type(&pt("[2,1]"), 3);
        assert_eq!(sigma.apply(0), 1);
        assert_eq!(sigma.apply(1), 0);
        assert_eq!(sigma.apply(2), 2);
    }

    #[test]
    fn compose_applies_right_first() {
        let s = Permutation::transposition(3, 0, 1);
        let c = Permutation::long_cycle(3);
        let sc = s.compose(&c);
        // c: 0->1, then s: 1->0
        assert_eq!(sc.apply(0), 0);
    }

    #[test]
    fn all_permutations_count() {
        assert_eq!(Permutation::all(4).len(), 24);
    }
}
