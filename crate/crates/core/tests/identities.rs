//! Independent-oracle checks that complement the unit tests: floating point
//! eigenvalues for the power sum evaluations, brute-force set partition
//! refinement for the multiset partition enumerator, and the two tableau
//! counting paths against each other.

use supersym::combinat::{
    enumerate_multiset_partitions, enumerate_partitions, DegreeVector, Letter, Multiset,
    MultisetPartition, Partition,
};
use supersym::invariants::elementary_coefficient;
use supersym::superpoly::Dims;
use supersym::symfunc::power_sum_at_cycle_type;
use supersym::tableaux;
use supersym::verify::degree_grid;

/// Power sums of the actual (complex) eigenvalues of a permutation matrix:
/// each cycle of length `c` contributes the `c`-th roots of unity.
fn eigenvalue_power_sum(k: u32, mu: &Partition) -> (f64, f64) {
    let mut re = 0.0f64;
    let mut im = 0.0f64;
    for &c in mu.parts() {
        for t in 0..c {
            let angle = 2.0 * std::f64::consts::PI * (t as f64) * (k as f64) / (c as f64);
            re += angle.cos();
            im += angle.sin();
        }
    }
    (re, im)
}

#[test]
fn power_sum_evaluation_matches_complex_eigenvalues() {
    for size in 0..=6usize {
        for mu in enumerate_partitions(size, None) {
            for k in 1..=6u32 {
                let exact = power_sum_at_cycle_type(k, &mu);
                let (re, im) = eigenvalue_power_sum(k, &mu);
                assert!(
                    (re - exact as f64).abs() < 1e-9 && im.abs() < 1e-9,
                    "p_{k} at {mu}: exact {exact}, numeric {re}+{im}i"
                );
            }
        }
    }
}

/// Independent enumeration of multiset partitions: set partitions of the
/// letter positions (restricted growth strings), with blocks turned into
/// multisets, illegal blocks dropped and duplicates collapsed.
fn refinements_by_set_partitions(content: &DegreeVector, max_len: usize) -> Vec<MultisetPartition> {
    let mut letters: Vec<Letter> = Vec::new();
    for (j, &a) in content.alpha.iter().enumerate() {
        for _ in 0..a {
            letters.push(Letter::Unbarred(j as u32 + 1));
        }
    }
    for (j, &b) in content.beta.iter().enumerate() {
        for _ in 0..b {
            letters.push(Letter::Barred(j as u32 + 1));
        }
    }
    let k = letters.len();
    let mut out: Vec<MultisetPartition> = Vec::new();
    let mut assignment = vec![0usize; k];
    fn rec(
        pos: usize,
        blocks_used: usize,
        assignment: &mut Vec<usize>,
        letters: &[Letter],
        max_len: usize,
        out: &mut Vec<MultisetPartition>,
    ) {
        if pos == letters.len() {
            let mut blocks: Vec<Vec<Letter>> = vec![Vec::new(); blocks_used];
            for (i, &b) in assignment.iter().enumerate() {
                blocks[b].push(letters[i]);
            }
            // a block may not repeat a barred letter
            for block in &blocks {
                let barred: Vec<&Letter> = block
                    .iter()
                    .filter(|l| matches!(l, Letter::Barred(_)))
                    .collect();
                let mut dedup = barred.clone();
                dedup.sort();
                dedup.dedup();
                if dedup.len() != barred.len() {
                    return;
                }
            }
            if blocks_used <= max_len {
                out.push(MultisetPartition::from_parts(
                    blocks
                        .into_iter()
                        .map(|b| Multiset::from_letters(b))
                        .collect(),
                ));
            }
            return;
        }
        for b in 0..=blocks_used.min(letters.len() - 1) {
            assignment[pos] = b;
            let used = blocks_used.max(b + 1);
            rec(pos + 1, used, assignment, letters, max_len, out);
        }
    }
    if k == 0 {
        return vec![MultisetPartition::empty()];
    }
    rec(0, 0, &mut assignment, &letters, max_len, &mut out);
    out.sort();
    out.dedup();
    out
}

#[test]
fn refinement_enumeration_matches_set_partition_oracle() {
    for content in degree_grid(2, 2, 6) {
        if content.total() > 6 {
            continue;
        }
        let n = content.total().max(1);
        let fast = enumerate_multiset_partitions(&content, n, false);
        let slow = refinements_by_set_partitions(&content, n);
        assert_eq!(
            fast, slow,
            "alpha={:?} beta={:?}",
            content.alpha, content.beta
        );
        // super filter agrees too
        let fast_super: Vec<_> = enumerate_multiset_partitions(&content, n, true);
        let slow_super: Vec<_> = slow.into_iter().filter(|pi| pi.is_super()).collect();
        assert_eq!(fast_super, slow_super);
    }
}

#[test]
fn listing_and_counting_tableaux_agree() {
    // strip-chain listings against iterated Pieri coefficients
    for n in 1..=4usize {
        for shape in enumerate_partitions(n, None) {
            for content in degree_grid(2, 2, 3) {
                let listed = tableaux::enumerate(&shape, &content).len() as u64;
                let counted = tableaux::multiplicity(&shape, &content, n);
                assert_eq!(
                    listed, counted,
                    "shape {shape} alpha={:?} beta={:?}",
                    content.alpha, content.beta
                );
            }
        }
    }
}

#[test]
fn grouping_by_entries_partitions_the_tableaux() {
    let shape: Partition = "[3,2]".parse().unwrap();
    let content = DegreeVector::new(vec![2], vec![2]);
    let n = 5;
    let total = tableaux::multiplicity(&shape, &content, n);
    let mut by_groups = 0;
    for pi in enumerate_multiset_partitions(&content, n, false) {
        let listed = tableaux::enumerate_with_entries(&shape, &pi, n);
        assert_eq!(
            listed.len() as u64,
            tableaux::count_with_entry_multiset(&shape, &pi, n)
        );
        for t in &listed {
            assert_eq!(t.entry_multiset(), pi);
        }
        by_groups += listed.len() as u64;
    }
    assert_eq!(total, by_groups);
}

/// All partitions of `|lambda| + r` containing `lambda`, filtered by the
/// strip condition checked cell by cell: a horizontal strip has at most one
/// new cell per column, a vertical strip at most one per row.
fn strip_additions_by_filter(lambda: &Partition, r: u32, horizontal: bool) -> Vec<Partition> {
    let target = lambda.size() + r as usize;
    enumerate_partitions(target, None)
        .into_iter()
        .filter(|mu| mu.contains(lambda))
        .filter(|mu| {
            if horizontal {
                // at most one new cell in each column: mu_i <= lambda_{i-1}
                (0..mu.len()).all(|i| i == 0 || mu.part(i) <= lambda.part(i - 1))
            } else {
                // at most one new cell in each row
                (0..mu.len()).all(|i| mu.part(i) <= lambda.part(i) + 1)
            }
        })
        .collect()
}

#[test]
fn strip_enumeration_matches_cellwise_filter() {
    use supersym::symfunc::{pieri, Strip};
    for size in 0..=6usize {
        for lambda in enumerate_partitions(size, None) {
            for r in 0..=4u32 {
                let mut fast = pieri(Strip::Horizontal, r, &lambda);
                fast.sort();
                let mut slow = strip_additions_by_filter(&lambda, r, true);
                slow.sort();
                assert_eq!(fast, slow, "horizontal r={r} lambda={lambda}");
                let mut fast = pieri(Strip::Vertical, r, &lambda);
                fast.sort();
                let mut slow = strip_additions_by_filter(&lambda, r, false);
                slow.sort();
                assert_eq!(fast, slow, "vertical r={r} lambda={lambda}");
            }
        }
    }
}

#[test]
fn long_index_elementary_coefficients_realize_to_zero() {
    // the coefficient of a marker monomial with |S| > n vanishes in the
    // product generating function, which is what drives the reduction rule
    for n in 1..=2usize {
        let dims = Dims::new(n, 2, 2);
        for content in degree_grid(2, 2, 4) {
            let size = content.total();
            if size <= n || size == 0 || content.beta.iter().any(|&b| b > 1) {
                continue;
            }
            let barred: Vec<u32> = content
                .beta
                .iter()
                .enumerate()
                .filter(|&(_, &b)| b == 1)
                .map(|(j, _)| j as u32 + 1)
                .collect();
            let s = Multiset::new(&content.alpha, &barred);
            let realized = elementary_coefficient(&s).realize(dims);
            assert!(
                realized.is_zero(),
                "coefficient at {s} for n={n} is nonzero"
            );
        }
    }
}
