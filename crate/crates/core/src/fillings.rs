//! Row-constant fillings of a diagram `mu` and their signed counts.
//!
//! A filling labels some rows of `mu`, every cell of a labeled row carrying
//! the same label.  Three label regimes appear:
//!
//! * unbarred multiset labels, counted plainly — the count evaluates
//!   `h_alpha` at the eigenvalues of a permutation matrix of cycle type `mu`;
//! * barred set labels with a sign for rows of odd-size sets — the signed
//!   count evaluates `e_beta` there;
//! * merged mixed labels grouped by the multiset partition of cell labels —
//!   the per-group signed counts reproduce, group by group, the scalar
//!   products `<h_.. h_.. e_.., p_mu>` that drive the tableau expansion.
//!
//! Everything here is small-scale enumeration used to validate the symbolic
//! pipeline; nothing is asymptotically clever.

use std::collections::BTreeMap;

use crate::combinat::{DegreeVector, Multiset, MultisetPartition, Partition};

/// A row-constant filling of the diagram of `mu`: `labels[r]` is the common
/// label of the cells of row `r` (bottom row first), empty meaning unfilled.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowFilling {
    mu: Partition,
    labels: Vec<Multiset>,
}

impl RowFilling {
    pub fn new(mu: Partition, labels: Vec<Multiset>) -> Self {
        assert_eq!(labels.len(), mu.len(), "one label per row of mu");
        RowFilling { mu, labels }
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    pub fn row_labels(&self) -> &[Multiset] {
        &self.labels
    }

    /// Total content: row `r` contributes `mu_r` copies of its label.
    pub fn content(&self) -> DegreeVector {
        let mut alpha: Vec<u32> = Vec::new();
        let mut beta: Vec<u32> = Vec::new();
        for (r, label) in self.labels.iter().enumerate() {
            let copies = self.mu.part(r);
            for (j, &c) in label.unbarred_counts().iter().enumerate() {
                if alpha.len() <= j {
                    alpha.resize(j + 1, 0);
                }
                alpha[j] += c * copies;
            }
            for &b in label.barred_set() {
                let j = (b - 1) as usize;
                if beta.len() <= j {
                    beta.resize(j + 1, 0);
                }
                beta[j] += copies;
            }
        }
        DegreeVector::new(alpha, beta)
    }

    /// `(-1)` to the number of cells plus the number of rows whose label has
    /// an odd number of barred letters.
    pub fn weight(&self) -> i64 {
        let mut exponent = 0usize;
        for (r, label) in self.labels.iter().enumerate() {
            if label.has_odd_parity() {
                exponent += self.mu.part(r) as usize + 1;
            }
        }
        if exponent % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// The multiset partition of the cell labels: each labeled row of size
    /// `mu_r` contributes `mu_r` copies of its label.
    pub fn cell_label_partition(&self) -> MultisetPartition {
        let mut parts = Vec::new();
        for (r, label) in self.labels.iter().enumerate() {
            if label.is_empty() {
                continue;
            }
            for _ in 0..self.mu.part(r) {
                parts.push(label.clone());
            }
        }
        MultisetPartition::from_parts(parts)
    }

    /// Debug dump in diagram layout: topmost row first, one copy of the row
    /// label per cell, `.` for unfilled rows.
    pub fn render(&self) -> String {
        let mut lines = Vec::new();
        for (r, label) in self.labels.iter().enumerate().rev() {
            let cell = if label.is_empty() {
                ".".to_string()
            } else {
                label.letters().map(|l| l.to_string()).collect()
            };
            let row: Vec<String> = (0..self.mu.part(r)).map(|_| cell.clone()).collect();
            lines.push(row.join(" "));
        }
        lines.join("\n")
    }
}

/// Enumerate all row label assignments with total content `(alpha, beta)`.
/// `visit` receives each complete filling.
fn for_each_filling(
    alpha: &[u32],
    beta: &[u32],
    mu: &Partition,
    visit: &mut dyn FnMut(&RowFilling),
) {
    let mut rem_a = alpha.to_vec();
    let mut rem_b = beta.to_vec();
    let mut labels: Vec<Multiset> = Vec::new();
    rec(mu, 0, &mut rem_a, &mut rem_b, &mut labels, visit);

    fn rec(
        mu: &Partition,
        row: usize,
        rem_a: &mut Vec<u32>,
        rem_b: &mut Vec<u32>,
        labels: &mut Vec<Multiset>,
        visit: &mut dyn FnMut(&RowFilling),
    ) {
        if row == mu.len() {
            if rem_a.iter().all(|&a| a == 0) && rem_b.iter().all(|&b| b == 0) {
                visit(&RowFilling::new(mu.clone(), labels.clone()));
            }
            return;
        }
        let copies = mu.part(row);
        // all unbarred content vectors c with copies * c <= rem_a
        let caps: Vec<u32> = rem_a.iter().map(|&a| a / copies).collect();
        let mut c = vec![0u32; rem_a.len()];
        loop {
            // all barred subsets B with copies * 1_B <= rem_b
            let avail: Vec<u32> = rem_b
                .iter()
                .enumerate()
                .filter(|&(_, &b)| b >= copies)
                .map(|(j, _)| j as u32 + 1)
                .collect();
            for mask in 0..(1u32 << avail.len()) {
                let chosen: Vec<u32> = avail
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| mask & (1 << k) != 0)
                    .map(|(_, &b)| b)
                    .collect();
                for (j, &cj) in c.iter().enumerate() {
                    rem_a[j] -= cj * copies;
                }
                for &b in &chosen {
                    rem_b[(b - 1) as usize] -= copies;
                }
                labels.push(Multiset::new(&c, &chosen));
                rec(mu, row + 1, rem_a, rem_b, labels, visit);
                labels.pop();
                for (j, &cj) in c.iter().enumerate() {
                    rem_a[j] += cj * copies;
                }
                for &b in &chosen {
                    rem_b[(b - 1) as usize] += copies;
                }
            }
            // next content vector under caps
            let mut advanced = false;
            for j in 0..c.len() {
                if c[j] < caps[j] {
                    c[j] += 1;
                    for ck in c.iter_mut().take(j) {
                        *ck = 0;
                    }
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                break;
            }
        }
    }
}

/// Number of row-constant fillings of `mu` with unbarred labels of total
/// content `alpha`.  Equals `h_alpha` evaluated at the eigenvalues of a
/// permutation matrix of cycle type `mu`.
pub fn count_unbarred_fillings(alpha: &[u32], mu: &Partition) -> u64 {
    let mut count = 0u64;
    for_each_filling(alpha, &[], mu, &mut |_| count += 1);
    count
}

/// Signed count of row-constant fillings of `mu` with barred set labels of
/// total content `beta`.  Equals `e_beta` at the same eigenvalues.
pub fn signed_barred_fillings(beta: &[u32], mu: &Partition) -> i64 {
    let mut total = 0i64;
    for_each_filling(&[], beta, mu, &mut |f| total += f.weight());
    total
}

/// Signed counts of mixed fillings of content `(alpha, beta)`, grouped by
/// the multiset partition of cell labels.  The values sum to the product of
/// the two evaluations above.
pub fn mixed_fillings_by_msp(
    alpha: &[u32],
    beta: &[u32],
    mu: &Partition,
) -> BTreeMap<MultisetPartition, i64> {
    let mut groups = BTreeMap::new();
    for_each_filling(alpha, beta, mu, &mut |f| {
        *groups.entry(f.cell_label_partition()).or_insert(0) += f.weight();
    });
    groups.retain(|_, v| *v != 0);
    groups
}

/// Signed count of fillings of `mu` by `lambda_i` copies of the plain label
/// `i` and `tau_j` copies of the primed label `j'`, rows constant, unfilled
/// rows allowed; the sign is `(-1)` to the number of primed cells plus the
/// number of primed rows.  Equals the Hall pairing
/// `< h_{|mu|-|lambda|-|tau|} h_lambda e_tau , p_mu >`.
pub fn pairing_by_fillings(lambda: &Partition, tau: &Partition, mu: &Partition) -> i64 {
    assert!(
        lambda.size() + tau.size() <= mu.size(),
        "labels cannot outnumber cells"
    );
    // rows pick a label: 0 = unfilled, 1..=l plain, l+1..=l+t primed
    let l = lambda.len();
    let t = tau.len();
    let mut rem: Vec<u32> = lambda
        .parts()
        .iter()
        .chain(tau.parts().iter())
        .copied()
        .collect();
    let mut total = 0i64;
    rec(mu, 0, l, t, &mut rem, 0, &mut total);
    return total;

    fn rec(
        mu: &Partition,
        row: usize,
        l: usize,
        t: usize,
        rem: &mut Vec<u32>,
        sign_exp: usize,
        total: &mut i64,
    ) {
        if row == mu.len() {
            if rem.iter().all(|&r| r == 0) {
                *total += if sign_exp % 2 == 0 { 1 } else { -1 };
            }
            return;
        }
        let copies = mu.part(row);
        // unfilled
        rec(mu, row + 1, l, t, rem, sign_exp, total);
        for k in 0..l + t {
            if rem[k] >= copies {
                rem[k] -= copies;
                let extra = if k >= l { copies as usize + 1 } else { 0 };
                rec(mu, row + 1, l, t, rem, sign_exp + extra, total);
                rem[k] += copies;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn ms(s: &str) -> Multiset {
        s.parse().unwrap()
    }

    #[test]
    fn unbarred_counts() {
        assert_eq!(count_unbarred_fillings(&[1], &pt("[2]")), 0);
        assert_eq!(count_unbarred_fillings(&[1], &pt("[1,1]")), 2);
        assert_eq!(count_unbarred_fillings(&[2], &pt("[2]")), 1);
    }

    #[test]
    fn barred_signed_sums() {
        assert_eq!(signed_barred_fillings(&[1], &pt("[1]")), 1);
        assert_eq!(signed_barred_fillings(&[2], &pt("[2]")), -1);
        assert_eq!(signed_barred_fillings(&[1], &pt("[2]")), 0);
    }

    #[test]
    fn pairing_examples() {
        // empty labels: < h_{|mu|}, p_mu > = 1
        for mu in crate::combinat::enumerate_partitions(4, None) {
            assert_eq!(
                pairing_by_fillings(&Partition::empty(), &Partition::empty(), &mu),
                1
            );
        }
        assert_eq!(
            pairing_by_fillings(&pt("[1]"), &Partition::empty(), &pt("[1,1]")),
            2
        );
        assert_eq!(
            pairing_by_fillings(&Partition::empty(), &pt("[2]"), &pt("[2]")),
            -1
        );
    }

    #[test]
    fn mixed_groups_trivial_cases() {
        let single = mixed_fillings_by_msp(&[1], &[], &pt("[1]"));
        assert_eq!(single.len(), 1);
        assert_eq!(single[&"{{1}}".parse().unwrap()], 1);
        let empty = mixed_fillings_by_msp(&[], &[], &pt("[3,1]"));
        assert_eq!(empty.len(), 1);
        assert_eq!(empty[&MultisetPartition::empty()], 1);
    }

    /// The 24-cell example filling: mu = (5,5,3,2,2,2,2,1,1,1) with rows
    /// (bottom up) -, {1,3}, -, {1'}, {1,1'}, {1'}, {1,1',2'}, -, {2,2},
    /// {1,1,2}.
    fn big_example() -> RowFilling {
        RowFilling::new(
            pt("[5,5,3,2,2,2,2,1,1,1]"),
            vec![
                ms("{}"),
                ms("{1,3}"),
                ms("{}"),
                ms("{1'}"),
                ms("{1,1'}"),
                ms("{1'}"),
                ms("{1,1',2'}"),
                ms("{}"),
                ms("{2,2}"),
                ms("{1,1,2}"),
            ],
        )
    }

    #[test]
    fn render_layout() {
        let f = RowFilling::new(pt("[3,2,1]"), vec![ms("{}"), ms("{1,1'}"), ms("{2}")]);
        assert_eq!(f.render(), "2\n11' 11'\n. . .");
    }

    #[test]
    fn big_example_weight_content_and_groups() {
        let f = big_example();
        assert_eq!(f.weight(), -1);
        assert!(f
            .content()
            .same_content(&DegreeVector::new(vec![11, 3, 5], vec![8, 2])));
        let pi = f.cell_label_partition();
        let expected: MultisetPartition =
            "{{1,1,2},{1,3},{1,3},{1,3},{1,3},{1,3},{1,1'},{1,1'},{1,1',2'},{1,1',2'},{2,2},{1'},{1'},{1'},{1'}}"
                .parse()
                .unwrap();
        assert_eq!(pi, expected);
        let (even, odd) = pi.multiplicity_partitions();
        assert_eq!(even.parts(), &[5, 2, 1, 1]);
        assert_eq!(odd.parts(), &[4, 2]);
    }
}
