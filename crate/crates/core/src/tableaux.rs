//! Multiset tableaux: fillings of a partition shape by multisets, weakly
//! increasing along rows and up columns, where the cells sharing a label of
//! even barred parity form a horizontal strip and those sharing a label of
//! odd barred parity form a vertical strip.
//!
//! Diagrams are in French notation: row 1 is the longest row, at the bottom.
//! Blank cells carry the empty multiset, the smallest label; having even
//! parity, blanks form horizontal strips like any other even label.
//!
//! The number of tableaux of shape `lambda` and content `(alpha, beta)` is
//! the multiplicity of the irreducible indexed by `lambda` in the component
//! of that multidegree, which is what ties this module to [`crate::symfunc`]
//! and [`crate::superpoly`].

use std::collections::BTreeMap;
use std::fmt;

use crate::combinat::{
    enumerate_multiset_partitions, DegreeVector, Multiset, MultisetPartition, Partition,
};
use crate::symfunc::{pieri, Strip};

/// A filled diagram.  `rows[0]` is the bottom row; `rows[i].len()` equals
/// part `i` of the shape.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct MultisetTableau {
    shape: Partition,
    rows: Vec<Vec<Multiset>>,
}

/// Why a filling fails to be a multiset tableau.  Cells are reported as
/// 1-based `(row, column)` pairs, rows counted from the bottom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TableauViolation {
    /// The grid does not match the shape.
    Structural { detail: String },
    /// Entries decrease along a row.
    RowOrder { cells: [(usize, usize); 2] },
    /// Entries decrease up a column.
    ColumnOrder { cells: [(usize, usize); 2] },
    /// Two cells with the same even-parity label share a column.
    HorizontalStrip {
        label: Multiset,
        cells: [(usize, usize); 2],
    },
    /// Two cells with the same odd-parity label share a row.
    VerticalStrip {
        label: Multiset,
        cells: [(usize, usize); 2],
    },
}

impl fmt::Display for TableauViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableauViolation::Structural { detail } => write!(f, "structural: {detail}"),
            TableauViolation::RowOrder { cells } => {
                write!(
                    f,
                    "row order fails between {:?} and {:?}",
                    cells[0], cells[1]
                )
            }
            TableauViolation::ColumnOrder { cells } => {
                write!(
                    f,
                    "column order fails between {:?} and {:?}",
                    cells[0], cells[1]
                )
            }
            TableauViolation::HorizontalStrip { label, cells } => write!(
                f,
                "even-parity label {label} repeats in a column at {:?} and {:?}",
                cells[0], cells[1]
            ),
            TableauViolation::VerticalStrip { label, cells } => write!(
                f,
                "odd-parity label {label} repeats in a row at {:?} and {:?}",
                cells[0], cells[1]
            ),
        }
    }
}

impl std::error::Error for TableauViolation {}

impl MultisetTableau {
    /// Build from rows (bottom row first), checking only the grid shape.
    pub fn new(shape: Partition, rows: Vec<Vec<Multiset>>) -> Result<Self, TableauViolation> {
        if rows.len() != shape.len() {
            return Err(TableauViolation::Structural {
                detail: format!("{} rows for shape {shape}", rows.len()),
            });
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != shape.part(i) as usize {
                return Err(TableauViolation::Structural {
                    detail: format!(
                        "row {} has {} cells, shape wants {}",
                        i + 1,
                        row.len(),
                        shape.part(i)
                    ),
                });
            }
        }
        Ok(MultisetTableau { shape, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    /// Rows from the bottom up.
    pub fn rows(&self) -> &[Vec<Multiset>] {
        &self.rows
    }

    pub fn entry(&self, row: usize, col: usize) -> &Multiset {
        &self.rows[row - 1][col - 1]
    }

    /// Multiset union of all cell labels, as a degree vector.
    pub fn content(&self) -> DegreeVector {
        let mut alpha: Vec<u32> = Vec::new();
        let mut beta: Vec<u32> = Vec::new();
        for row in &self.rows {
            for cell in row {
                for (j, &c) in cell.unbarred_counts().iter().enumerate() {
                    if alpha.len() <= j {
                        alpha.resize(j + 1, 0);
                    }
                    alpha[j] += c;
                }
                for &b in cell.barred_set() {
                    let j = (b - 1) as usize;
                    if beta.len() <= j {
                        beta.resize(j + 1, 0);
                    }
                    beta[j] += 1;
                }
            }
        }
        DegreeVector::new(alpha, beta)
    }

    /// The multiset partition of non-blank labels.
    pub fn entry_multiset(&self) -> MultisetPartition {
        MultisetPartition::from_parts(
            self.rows
                .iter()
                .flatten()
                .filter(|c| !c.is_empty())
                .cloned()
                .collect(),
        )
    }

    /// Check the full tableau definition, reporting the first violation:
    /// weak increase along rows and up columns, then the horizontal strip
    /// condition on even-parity labels and the vertical strip condition on
    /// odd-parity ones.  (Barred letters cannot repeat inside a cell by
    /// construction of [`Multiset`].)
    pub fn validate(&self) -> Result<(), TableauViolation> {
        for (r, row) in self.rows.iter().enumerate() {
            for c in 1..row.len() {
                if row[c - 1] > row[c] {
                    return Err(TableauViolation::RowOrder {
                        cells: [(r + 1, c), (r + 1, c + 1)],
                    });
                }
            }
        }
        for r in 1..self.rows.len() {
            for c in 0..self.rows[r].len() {
                if self.rows[r - 1][c] > self.rows[r][c] {
                    return Err(TableauViolation::ColumnOrder {
                        cells: [(r, c + 1), (r + 1, c + 1)],
                    });
                }
            }
        }
        // group cells by label
        let mut by_label: BTreeMap<&Multiset, Vec<(usize, usize)>> = BTreeMap::new();
        for (r, row) in self.rows.iter().enumerate() {
            for (c, cell) in row.iter().enumerate() {
                by_label.entry(cell).or_default().push((r + 1, c + 1));
            }
        }
        for (label, cells) in by_label {
            if label.has_odd_parity() {
                for i in 0..cells.len() {
                    for j in i + 1..cells.len() {
                        if cells[i].0 == cells[j].0 {
                            return Err(TableauViolation::VerticalStrip {
                                label: label.clone(),
                                cells: [cells[i], cells[j]],
                            });
                        }
                    }
                }
            } else {
                for i in 0..cells.len() {
                    for j in i + 1..cells.len() {
                        if cells[i].1 == cells[j].1 {
                            return Err(TableauViolation::HorizontalStrip {
                                label: label.clone(),
                                cells: [cells[i], cells[j]],
                            });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// ASCII rendering, topmost row first, cells padded
    /// to column width, blanks shown as `.`, barred letters with `'`.
    pub fn render(&self) -> String {
        let widths: Vec<usize> = (0..self.shape.part(0) as usize)
            .map(|c| {
                self.rows
                    .iter()
                    .filter_map(|row| row.get(c))
                    .map(|m| cell_word(m).len())
                    .max()
                    .unwrap_or(1)
            })
            .collect();
        let mut lines = Vec::new();
        for row in self.rows.iter().rev() {
            let mut line = String::new();
            for (c, cell) in row.iter().enumerate() {
                if c > 0 {
                    line.push(' ');
                }
                let word = cell_word(cell);
                line.push_str(&word);
                if c + 1 < row.len() {
                    for _ in word.len()..widths[c] {
                        line.push(' ');
                    }
                }
            }
            lines.push(line);
        }
        lines.join("\n")
    }

    /// JSON form: `{shape, rows}` with rows bottom-up and cells in the
    /// braced multiset syntax.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "shape": self.shape.parts(),
            "rows": self
                .rows
                .iter()
                .map(|row| row.iter().map(|m| m.to_string()).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self, TableauViolation> {
        let bad = |d: &str| TableauViolation::Structural {
            detail: d.to_string(),
        };
        let shape_parts: Vec<u32> = value["shape"]
            .as_array()
            .ok_or_else(|| bad("shape must be an array"))?
            .iter()
            .map(|v| {
                v.as_u64()
                    .map(|u| u as u32)
                    .ok_or_else(|| bad("bad shape part"))
            })
            .collect::<Result<_, _>>()?;
        if !shape_parts.windows(2).all(|w| w[0] >= w[1]) || shape_parts.contains(&0) {
            return Err(bad("shape must be a partition"));
        }
        let rows_json = value["rows"]
            .as_array()
            .ok_or_else(|| bad("rows must be an array"))?;
        let mut rows = Vec::new();
        for row in rows_json {
            let cells = row.as_array().ok_or_else(|| bad("row must be an array"))?;
            let mut parsed = Vec::new();
            for cell in cells {
                let s = cell.as_str().ok_or_else(|| bad("cell must be a string"))?;
                parsed.push(s.parse::<Multiset>().map_err(|e| bad(&e.to_string()))?);
            }
            rows.push(parsed);
        }
        MultisetTableau::new(Partition::new(shape_parts), rows)
    }
}

/// Compact cell text: the reading word with no braces, `.` when blank.
fn cell_word(m: &Multiset) -> String {
    if m.is_empty() {
        return ".".to_string();
    }
    m.letters().map(|l| l.to_string()).collect()
}

/// The strip steps that build a tableau with non-blank labels `pi` inside a
/// diagram of `n` cells: blanks first (a horizontal strip), then each
/// distinct label in increasing order, horizontal for even parity, vertical
/// for odd.
fn strip_steps(pi: &MultisetPartition, n: usize) -> Vec<(Multiset, Strip, u32)> {
    assert!(pi.len() <= n, "more labels than cells");
    let blanks = (n - pi.len()) as u32;
    let mut steps = Vec::new();
    if blanks > 0 {
        steps.push((Multiset::empty(), Strip::Horizontal, blanks));
    }
    for (label, count) in pi.distinct_parts() {
        let strip = if label.has_odd_parity() {
            Strip::Vertical
        } else {
            Strip::Horizontal
        };
        steps.push((label.clone(), strip, count as u32));
    }
    steps
}

/// Number of tableaux of the given shape whose non-blank labels are exactly
/// the parts of `pi`, with `n - l(pi)` blanks.  Computed by iterated Pieri
/// expansion, pruned to subdiagrams of the target shape, so it stays cheap
/// even for shapes with dozens of cells.
pub fn count_with_entry_multiset(shape: &Partition, pi: &MultisetPartition, n: usize) -> u64 {
    assert_eq!(shape.size(), n, "shape must have n cells");
    if pi.len() > n {
        return 0;
    }
    let mut state: BTreeMap<Partition, u64> = BTreeMap::new();
    state.insert(Partition::empty(), 1);
    for (_, strip, r) in strip_steps(pi, n) {
        let mut next: BTreeMap<Partition, u64> = BTreeMap::new();
        for (nu, count) in state {
            for grown in pieri(strip, r, &nu) {
                if shape.contains(&grown) {
                    let slot = next.entry(grown).or_insert(0);
                    *slot = slot.checked_add(count).expect("tableau count overflow");
                }
            }
        }
        state = next;
    }
    state.get(shape).copied().unwrap_or(0)
}

/// All tableaux of the given shape whose non-blank labels are exactly the
/// parts of `pi`.  Tableaux are produced by growing strip chains, which by
/// construction yields each valid tableau exactly once.
pub fn enumerate_with_entries(
    shape: &Partition,
    pi: &MultisetPartition,
    n: usize,
) -> Vec<MultisetTableau> {
    assert_eq!(shape.size(), n, "shape must have n cells");
    if pi.len() > n {
        return Vec::new();
    }
    let steps = strip_steps(pi, n);
    let mut grid: Vec<Vec<Multiset>> = shape
        .parts()
        .iter()
        .map(|&p| vec![Multiset::empty(); p as usize])
        .collect();
    let mut out = Vec::new();
    fn rec(
        step: usize,
        steps: &[(Multiset, Strip, u32)],
        current: &Partition,
        shape: &Partition,
        grid: &mut Vec<Vec<Multiset>>,
        out: &mut Vec<MultisetTableau>,
    ) {
        if step == steps.len() {
            if current == shape {
                out.push(MultisetTableau {
                    shape: shape.clone(),
                    rows: grid.clone(),
                });
            }
            return;
        }
        let (label, strip, r) = &steps[step];
        for grown in pieri(*strip, *r, current) {
            if !shape.contains(&grown) {
                continue;
            }
            for row in 0..grown.len() {
                for col in current.part(row)..grown.part(row) {
                    grid[row][col as usize] = label.clone();
                }
            }
            rec(step + 1, steps, &grown, shape, grid, out);
            for row in 0..grown.len() {
                for col in current.part(row)..grown.part(row) {
                    grid[row][col as usize] = Multiset::empty();
                }
            }
        }
    }
    rec(0, &steps, &Partition::empty(), shape, &mut grid, &mut out);
    out
}

/// All tableaux of the given shape and content.
pub fn enumerate(shape: &Partition, content: &DegreeVector) -> Vec<MultisetTableau> {
    let n = shape.size();
    let mut out = Vec::new();
    for pi in enumerate_multiset_partitions(content, n, false) {
        out.extend(enumerate_with_entries(shape, &pi, n));
    }
    out
}

/// Multiplicity of the irreducible indexed by `shape` in the component of
/// multidegree `content`: the number of multiset tableaux of that shape and
/// content, summed over entry multisets by Pieri counting.
pub fn multiplicity(shape: &Partition, content: &DegreeVector, n: usize) -> u64 {
    assert_eq!(shape.size(), n, "shape must be a partition of n");
    enumerate_multiset_partitions(content, n, false)
        .iter()
        .map(|pi| count_with_entry_multiset(shape, pi, n))
        .sum()
}

/// Slow reference enumerator: assign labels (parts of each entry multiset
/// plus blanks) to cells in every distinct way and keep what validates.
/// Exponential; only sensible for small diagrams, where it provides an
/// implementation-independent check of the strip-chain enumeration.
pub fn enumerate_by_cell_assignment(
    shape: &Partition,
    content: &DegreeVector,
) -> Vec<MultisetTableau> {
    let n = shape.size();
    let mut out = Vec::new();
    for pi in enumerate_multiset_partitions(content, n, false) {
        let mut labels: Vec<(Multiset, usize)> = vec![(Multiset::empty(), n - pi.len())];
        for (label, count) in pi.distinct_parts() {
            labels.push((label.clone(), count));
        }
        labels.retain(|(_, c)| *c > 0);
        let mut grid: Vec<Vec<Multiset>> = shape
            .parts()
            .iter()
            .map(|&p| vec![Multiset::empty(); p as usize])
            .collect();
        // cells in row-major order from the bottom row up
        let cells: Vec<(usize, usize)> = shape
            .parts()
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| (0..p as usize).map(move |c| (r, c)))
            .collect();
        fn rec(
            idx: usize,
            cells: &[(usize, usize)],
            labels: &mut Vec<(Multiset, usize)>,
            shape: &Partition,
            grid: &mut Vec<Vec<Multiset>>,
            out: &mut Vec<MultisetTableau>,
        ) {
            if idx == cells.len() {
                let t = MultisetTableau {
                    shape: shape.clone(),
                    rows: grid.clone(),
                };
                if t.validate().is_ok() {
                    out.push(t);
                }
                return;
            }
            let (r, c) = cells[idx];
            for li in 0..labels.len() {
                if labels[li].1 == 0 {
                    continue;
                }
                // prune: weak increase against the left and lower neighbors
                let label = labels[li].0.clone();
                if c > 0 && grid[r][c - 1] > label {
                    continue;
                }
                if r > 0 && grid[r - 1][c] > label {
                    continue;
                }
                labels[li].1 -= 1;
                grid[r][c] = label;
                rec(idx + 1, cells, labels, shape, grid, out);
                grid[r][c] = Multiset::empty();
                labels[li].1 += 1;
            }
        }
        rec(0, &cells, &mut labels, shape, &mut grid, &mut out);
    }
    out.sort();
    out.dedup();
    out
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

    fn msp(s: &str) -> MultisetPartition {
        s.parse().unwrap()
    }

    fn dv(alpha: &[u32], beta: &[u32]) -> DegreeVector {
        DegreeVector::new(alpha.to_vec(), beta.to_vec())
    }

    /// The running example: shape (7,3,2,2,1), content {1^3, 2^4, 1'^6, 2'^6}.
    fn example_tableau() -> MultisetTableau {
        let rows = vec![
            vec![
                ms("{}"),
                ms("{}"),
                ms("{2}"),
                ms("{2}"),
                ms("{1',2'}"),
                ms("{1',2'}"),
                ms("{2'}"),
            ],
            vec![ms("{1,1'}"), ms("{2}"), ms("{1',2'}")],
            vec![ms("{1,1'}"), ms("{2'}")],
            vec![ms("{1,1'}"), ms("{2'}")],
            vec![ms("{2}")],
        ];
        MultisetTableau::new(pt("[7,3,2,2,1]"), rows).unwrap()
    }

    #[test]
    fn example_validates() {
        let t = example_tableau();
        assert_eq!(t.validate(), Ok(()));
        assert!(t.content().same_content(&dv(&[3, 4], &[6, 6])));
    }

    #[test]
    fn odd_label_cannot_repeat_in_a_row() {
        let t = MultisetTableau::new(pt("[2]"), vec![vec![ms("{1'}"), ms("{1'}")]]).unwrap();
        assert!(matches!(
            t.validate(),
            Err(TableauViolation::VerticalStrip { .. })
        ));
    }

    #[test]
    fn even_label_cannot_repeat_in_a_column() {
        let t = MultisetTableau::new(pt("[1,1]"), vec![vec![ms("{1}")], vec![ms("{1}")]]).unwrap();
        assert!(matches!(
            t.validate(),
            Err(TableauViolation::HorizontalStrip { .. })
        ));
    }

    #[test]
    fn row_order_is_checked() {
        let t = MultisetTableau::new(pt("[2]"), vec![vec![ms("{2}"), ms("{1}")]]).unwrap();
        assert!(matches!(
            t.validate(),
            Err(TableauViolation::RowOrder { .. })
        ));
    }

    #[test]
    fn structural_errors_are_reported() {
        assert!(MultisetTableau::new(pt("[2]"), vec![vec![ms("{1}")]]).is_err());
        assert!(MultisetTableau::new(pt("[2]"), vec![]).is_err());
    }

    #[test]
    fn blanks_participate_in_order_and_strips() {
        // blank above a non-blank breaks the column order
        let t = MultisetTableau::new(pt("[1,1]"), vec![vec![ms("{1}")], vec![ms("{}")]]).unwrap();
        assert!(matches!(
            t.validate(),
            Err(TableauViolation::ColumnOrder { .. })
        ));
        // two blanks stacked break the horizontal strip condition
        let t = MultisetTableau::new(pt("[1,1]"), vec![vec![ms("{}")], vec![ms("{}")]]).unwrap();
        assert!(matches!(
            t.validate(),
            Err(TableauViolation::HorizontalStrip { .. })
        ));
    }

    #[test]
    fn enumerate_examples() {
        // one commuting letter in two cells: blank then {1}
        let ts = enumerate(&pt("[2]"), &dv(&[1], &[]));
        assert_eq!(ts.len(), 1);
        assert_eq!(ts[0].render(), ". 1");
        // two copies of a barred letter are forced into a column
        let ts = enumerate(&pt("[1,1]"), &dv(&[], &[2]));
        assert_eq!(ts.len(), 1);
        assert_eq!(ts[0].render(), "1'\n1'");
        // and cannot sit in a row
        assert!(enumerate(&pt("[2]"), &dv(&[], &[2])).is_empty());
    }

    #[test]
    fn multiplicity_examples() {
        assert_eq!(multiplicity(&pt("[2]"), &dv(&[1], &[]), 2), 1);
        assert_eq!(multiplicity(&pt("[1,1]"), &dv(&[], &[2]), 2), 1);
        for n in 1..=5usize {
            let row = Partition::new(vec![n as u32]);
            assert_eq!(multiplicity(&row, &dv(&[], &[]), n), 1);
        }
    }

    #[test]
    fn count_with_entries_examples() {
        // a single row takes blanks then any one label
        for n in 2..=6usize {
            let row = Partition::new(vec![n as u32]);
            assert_eq!(count_with_entry_multiset(&row, &msp("{{1}}"), n), 1);
        }
        // an even label twice cannot form a column
        assert_eq!(
            count_with_entry_multiset(&pt("[1,1]"), &msp("{{1},{1}}"), 2),
            0
        );
    }

    #[test]
    fn enumeration_matches_validation_oracle() {
        // strip chains against brute-force assignment plus `validate`
        let cases: Vec<(Partition, DegreeVector)> = vec![
            (pt("[2,1]"), dv(&[2], &[1])),
            (pt("[2,2]"), dv(&[1, 1], &[1])),
            (pt("[3,1]"), dv(&[0], &[2, 1])),
            (pt("[2,1,1]"), dv(&[1], &[2])),
            (pt("[3,2]"), dv(&[2, 1], &[])),
            (pt("[4]"), dv(&[2], &[2])),
        ];
        for (shape, content) in cases {
            let mut fast = enumerate(&shape, &content);
            fast.sort();
            let slow = enumerate_by_cell_assignment(&shape, &content);
            assert_eq!(fast, slow, "shape {shape}");
        }
    }

    #[test]
    fn enumerated_tableaux_validate_and_have_content() {
        let content = dv(&[2, 1], &[1, 1]);
        for shape in crate::combinat::enumerate_partitions(4, None) {
            for t in enumerate(&shape, &content) {
                assert_eq!(t.validate(), Ok(()));
                assert!(t.content().same_content(&content));
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let t = example_tableau();
        let back = MultisetTableau::from_json(&t.to_json()).unwrap();
        assert_eq!(t, back);
    }

    #[test]
    fn render_layout() {
        let t = example_tableau();
        let expected = "\
2
11' 2'
11' 2'
11' 2  1'2'
.   .  2    2 1'2' 1'2' 2'";
        assert_eq!(t.render(), expected);
    }
}
