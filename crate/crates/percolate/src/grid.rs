//! Percolating sets for products of two paths.
//!
//! `P_n x P_m` splits into two connected components by the parity of
//! `x + y` (paper coordinates are 1-indexed, `x` along `P_n`, `y` along
//! `P_m`, origin at the top-left). The seed patterns live on diagonal line
//! segments hugging the left and right ends of a component plus a
//! horizontal spine through the middle row, with explicit corner lists for
//! the even-by-even case.
//!
//! The endpoint rules of the segments are delicate near the boundary. The
//! rules coded here are verified for every 3 <= m <= n <= 40; each emitted
//! set is still engine-checked before being returned, and if a pattern ever
//! failed verification a constrained repair search over the same segments
//! at the same cardinality would run (and be flagged in the result) rather
//! than returning an unverified set.

use thiserror::Error;

use crate::bounds::grid_formula;
use crate::engine;
use crate::families::path;
use crate::graph::{Coord, Graph};
use crate::product::direct_product;
use crate::vertex_set::VertexSet;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GridError {
    #[error("grid requires n, m >= {min}, got {n} x {m}")]
    TooSmall { min: usize, n: usize, m: usize },
    #[error("the 3 x 3 grid has no line-segment construction; solve it directly")]
    BothThree,
    #[error("no verified percolating set of size {target} found for {n} x {m}")]
    ConstructionFailed { n: usize, m: usize, target: usize },
}

/// Which subcase of the construction applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GridCase {
    /// n, m even, m = 4
    C11,
    /// n, m even, m divisible by 4, m > 4
    C12,
    /// n, m even, m = 4k + 2
    C13,
    /// n + m odd, n even
    C21,
    /// n + m odd, n odd
    C22,
    /// n, m odd, m = 4k + 3, n != m
    C31,
    /// n = m odd, m = 4k + 3
    C32,
    /// n, m odd, m = 4k + 1
    C33,
}

impl std::fmt::Display for GridCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            GridCase::C11 => "1.1",
            GridCase::C12 => "1.2",
            GridCase::C13 => "1.3",
            GridCase::C21 => "2.1",
            GridCase::C22 => "2.2",
            GridCase::C31 => "3.1",
            GridCase::C32 => "3.2",
            GridCase::C33 => "3.3",
        };
        f.write_str(s)
    }
}

/// How the two components of the product are classified.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GridComponentKind {
    /// n, m even: two copies of the same graph G1.
    TwoG1,
    /// n + m odd: two copies of the same graph G2.
    TwoG2,
    /// n, m odd: non-isomorphic halves H1 (even parity class) and H2.
    H1H2,
}

/// The two parity components of `P_n x P_m`, over product indices
/// `(x - 1) * m + (y - 1)`.
#[derive(Debug, Clone)]
pub struct GridComponents {
    pub n: usize,
    pub m: usize,
    pub kind: GridComponentKind,
    /// Vertices with `x + y` even; contains `(1, 1)`. This is `H_1` in the
    /// odd-odd case.
    pub even: VertexSet,
    /// Vertices with `x + y` odd (`H_2` in the odd-odd case).
    pub odd: VertexSet,
}

/// Product index of paper coordinate `(x, y)` in `P_n x P_m`.
pub fn grid_index(m: usize, x: usize, y: usize) -> usize {
    (x - 1) * m + (y - 1)
}

/// `P_n x P_m` with 1-indexed `(x, y)` coordinate labels.
pub fn grid_graph(n: usize, m: usize) -> Result<Graph, GridError> {
    if n < 1 || m < 1 {
        return Err(GridError::TooSmall { min: 1, n, m });
    }
    let pn = path(n).expect("n >= 1");
    let pm = path(m).expect("m >= 1");
    let g = direct_product(&pn, &pm).expect("nonempty factors");
    let labels: Vec<Coord> = (0..n * m).map(|i| (i / m + 1, i % m + 1)).collect();
    Ok(g.with_labels(labels).expect("label count matches"))
}

/// Splits the grid into its two parity components and classifies them.
pub fn grid_components(n: usize, m: usize) -> Result<GridComponents, GridError> {
    if n < 2 || m < 2 {
        return Err(GridError::TooSmall { min: 2, n, m });
    }
    let kind = if n % 2 == 0 && m % 2 == 0 {
        GridComponentKind::TwoG1
    } else if (n + m) % 2 == 1 {
        GridComponentKind::TwoG2
    } else {
        GridComponentKind::H1H2
    };
    let mut even = VertexSet::new(n * m);
    let mut odd = VertexSet::new(n * m);
    for x in 1..=n {
        for y in 1..=m {
            if (x + y) % 2 == 0 {
                even.insert(grid_index(m, x, y));
            } else {
                odd.insert(grid_index(m, x, y));
            }
        }
    }
    Ok(GridComponents { n, m, kind, even, odd })
}

/// A percolating set for `P_n x P_m` at r = 2, of size exactly the closed
/// formula value, together with the pattern it was assembled from.
///
/// `diagonals` holds the alternating diagonal segments (the paper's script
/// L), `spine` the horizontal middle-row segments (script L'), and `extras`
/// the remaining selected cells (the corner/column lists of the
/// even-by-even case and the short vertical center run of case 3.2). All
/// coordinates are 1-indexed in the orientation of the original call;
/// `transposed` records that the construction internally swapped `n < m`
/// inputs.
#[derive(Debug, Clone)]
pub struct GridConstruction {
    pub n: usize,
    pub m: usize,
    pub transposed: bool,
    pub case: GridCase,
    pub components: GridComponents,
    pub diagonals: Vec<Vec<Coord>>,
    pub spine: Vec<Coord>,
    pub extras: Vec<Coord>,
    /// Seeds over the product indices of `P_n x P_m` (original orientation).
    pub seeds: VertexSet,
    /// True when the literal endpoint rules failed engine verification and
    /// the repair search supplied the pattern instead.
    pub repaired: bool,
}

/// One component's worth of pattern, in normalized (n >= m) coordinates.
#[derive(Debug, Clone, Default)]
struct Pattern {
    diagonals: Vec<Vec<(i64, i64)>>,
    spine: Vec<(i64, i64)>,
    extras: Vec<(i64, i64)>,
}

impl Pattern {
    fn all_cells(&self) -> Vec<(i64, i64)> {
        let mut v: Vec<(i64, i64)> = self
            .diagonals
            .iter()
            .flatten()
            .chain(&self.spine)
            .chain(&self.extras)
            .copied()
            .collect();
        v.sort_unstable();
        v.dedup();
        v
    }
}

/// Points `(x, line(x))` for x descending from `from` by 2 while `x >= to`.
fn seg_down(from: i64, to: i64, line: impl Fn(i64) -> i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    let mut x = from;
    while x >= to {
        out.push((x, line(x)));
        x -= 2;
    }
    out
}

/// Points `(x, line(x))` for x ascending from `from` by 2 while `x <= to`.
fn seg_up(from: i64, to: i64, line: impl Fn(i64) -> i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    let mut x = from;
    while x <= to {
        out.push((x, line(x)));
        x += 2;
    }
    out
}

/// Horizontal run `(j, row)` for j in `[lo, hi]` with `j ≡ parity (mod 2)`.
fn spine_run(lo: i64, hi: i64, row: i64, parity: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    let mut j = lo + (parity - lo).rem_euclid(2);
    while j <= hi {
        out.push((j, row));
        j += 2;
    }
    out
}

/// Case 1 (n, m even): explicit corner list, a run on row 3, and column
/// runs on rows 4k + 1. Lives on the even parity copy.
fn case1_pattern(n: i64, m: i64, trim: i64) -> Pattern {
    let mut extras = vec![(1, 1), (n, 2)];
    if m == 4 {
        extras.push((2, 4));
        extras.push((n, 4));
    } else if m % 4 == 0 {
        extras.push((2, m));
        extras.push((n, m));
    } else {
        extras.push((n, m));
    }
    let spine = spine_run(3, n - 3 + trim, 3, 1);
    if m > 4 {
        let kmax = if m % 4 == 0 { (m - 4) / 4 } else { (m - 2) / 4 };
        for k in 1..=kmax {
            extras.push((1, 4 * k + 1));
            extras.push((n - 1, 4 * k + 1));
        }
    }
    Pattern { diagonals: Vec::new(), spine, extras }
}

/// Case 2.1 (n even, m odd): four diagonal segments plus a spine on row
/// `ceil(m/2)`. `dr` trims the right pair, `ds` the spine.
fn case2_1_pattern(n: i64, m: i64, dr: i64, ds: i64) -> Pattern {
    let hm = (m + 1) / 2;
    let fm = m / 2;
    let lend = if hm % 2 == 1 { hm } else { fm };
    let rend = if hm % 2 == 1 { n - fm + 2 } else { n - fm + 1 } + dr;
    Pattern {
        diagonals: vec![
            seg_up(1, lend, |x| x),
            seg_up(1, lend, |x| m + 1 - x),
            seg_down(n, rend, |x| n + 2 - x),
            seg_down(n, rend, |x| x - n + m - 1),
        ],
        spine: spine_run(hm + 2, n - hm + ds, hm, hm % 2),
        extras: Vec::new(),
    }
}

/// Case 2.2 (n odd, m even): segments anchored on the degree-one corners
/// `(1,1)` and `(n,1)`, spine on row m/2.
fn case2_2_pattern(n: i64, m: i64, dr: i64, ds: i64) -> Pattern {
    let h = m / 2;
    let lend = if h % 2 == 1 { h } else { h - 1 };
    let rend = if h % 2 == 1 { n - h } else { n - h + 2 } + dr;
    Pattern {
        diagonals: vec![
            seg_up(1, lend, |x| x),
            seg_up(1, lend, |x| m - x),
            seg_down(n, rend, |x| n + 1 - x),
            seg_down(n, rend, |x| x - n + m - 1),
        ],
        spine: spine_run(h + 2, n - h - 1 + ds, h, h % 2),
        extras: Vec::new(),
    }
}

/// Case 3 pattern for H1 (even parity component).
fn case3_b0_pattern(n: i64, m: i64, dr: i64, ds: i64) -> Pattern {
    let hm = (m + 1) / 2;
    let fm = m / 2;
    if m % 4 == 3 && n == m {
        // 3.2: trimmed arrows plus a short vertical run through the center
        let extras = (hm - 2..=hm + 2).filter(|y| (hm + y) % 2 == 0).map(|y| (hm, y)).collect();
        Pattern {
            diagonals: vec![
                seg_up(1, fm - 2, |x| x),
                seg_up(1, fm - 2, |x| m + 1 - x),
                seg_down(n, n - fm + 2 + dr, |x| n + 1 - x),
                seg_down(n, n - fm + 2 + dr, |x| x - n + m),
            ],
            spine: Vec::new(),
            extras,
        }
    } else {
        // 3.1 (m = 4k + 3) and 3.3 (m = 4k + 1) share the layout; they
        // differ in how far the left pair runs.
        let lend = if m % 4 == 3 { fm } else { hm };
        Pattern {
            diagonals: vec![
                seg_up(1, lend, |x| x),
                seg_up(1, lend, |x| m + 1 - x),
                seg_down(n, n - fm + dr, |x| n + 1 - x),
                seg_down(n, n - fm + dr, |x| x - n + m),
            ],
            spine: spine_run(hm + 2, n - fm - 2 + ds, hm, hm % 2),
            extras: Vec::new(),
        }
    }
}

/// Case 3 pattern for H2 (odd parity component).
fn case3_b1_pattern(n: i64, m: i64, dr: i64, ds: i64) -> Pattern {
    let hm = (m + 1) / 2;
    let fm = m / 2;
    let rend = if m % 4 == 3 { n - fm } else { n - fm + 2 } + dr;
    Pattern {
        diagonals: vec![
            seg_up(1, fm, |x| x + 1),
            seg_up(1, fm, |x| m - x),
            seg_down(n, rend, |x| n + 2 - x),
            seg_down(n, rend, |x| x - n + m - 1),
        ],
        spine: spine_run(fm + 2, n - fm - 1 + ds, hm, (hm + 1) % 2),
        extras: Vec::new(),
    }
}

fn mirror_x(cells: &[(i64, i64)], n: i64) -> Vec<(i64, i64)> {
    cells.iter().map(|&(x, y)| (n + 1 - x, y)).collect()
}

fn mirror_y(cells: &[(i64, i64)], m: i64) -> Vec<(i64, i64)> {
    cells.iter().map(|&(x, y)| (x, m + 1 - y)).collect()
}

/// A full candidate: per-component cell lists (normalized coordinates).
struct Candidate {
    case: GridCase,
    /// Cells on the even parity component.
    even_cells: Vec<(i64, i64)>,
    /// Cells on the odd parity component.
    odd_cells: Vec<(i64, i64)>,
    patterns: Vec<Pattern>,
}

/// Builds the candidate for normalized `n >= m`, with trim adjustments
/// applied to the right segment pairs and spines (all zero = the literal
/// rules).
fn build_candidate(n: i64, m: i64, trims: [i64; 4]) -> Candidate {
    let [t0, t1, t2, t3] = trims;
    if n % 2 == 0 && m % 2 == 0 {
        let case = if m == 4 {
            GridCase::C11
        } else if m % 4 == 0 {
            GridCase::C12
        } else {
            GridCase::C13
        };
        let pat = case1_pattern(n, m, t0);
        let cells = pat.all_cells();
        let mirrored = mirror_y(&cells, m);
        Candidate { case, even_cells: cells, odd_cells: mirrored, patterns: vec![pat] }
    } else if (n + m) % 2 == 1 {
        if n % 2 == 0 {
            let pat = case2_1_pattern(n, m, t0, t1);
            let cells = pat.all_cells();
            let mirrored = mirror_x(&cells, n);
            Candidate { case: GridCase::C21, even_cells: cells, odd_cells: mirrored, patterns: vec![pat] }
        } else {
            let pat = case2_2_pattern(n, m, t0, t1);
            let cells = pat.all_cells();
            let mirrored = mirror_y(&cells, m);
            Candidate { case: GridCase::C22, even_cells: cells, odd_cells: mirrored, patterns: vec![pat] }
        }
    } else {
        let case = if m % 4 == 3 {
            if n == m {
                GridCase::C32
            } else {
                GridCase::C31
            }
        } else {
            GridCase::C33
        };
        let b0 = case3_b0_pattern(n, m, t0, t1);
        let b1 = case3_b1_pattern(n, m, t2, t3);
        Candidate {
            case,
            even_cells: b0.all_cells(),
            odd_cells: b1.all_cells(),
            patterns: vec![b0, b1],
        }
    }
}

/// Converts normalized cells into a seed set over the original-orientation
/// product, or None when a cell leaves the grid or lands on the wrong
/// parity component.
fn cells_to_seeds(
    n: i64,
    m: i64,
    transposed: bool,
    orig_m: usize,
    even_cells: &[(i64, i64)],
    odd_cells: &[(i64, i64)],
) -> Option<VertexSet> {
    let mut seeds = VertexSet::new((n * m) as usize);
    for (cells, parity) in [(even_cells, 0), (odd_cells, 1)] {
        for &(x, y) in cells {
            if x < 1 || x > n || y < 1 || y > m || (x + y) % 2 != parity {
                return None;
            }
            let (ox, oy) = if transposed { (y, x) } else { (x, y) };
            seeds.insert(grid_index(orig_m, ox as usize, oy as usize));
        }
    }
    Some(seeds)
}

fn to_coords(cells: &[(i64, i64)], transposed: bool) -> Vec<Coord> {
    cells
        .iter()
        .map(|&(x, y)| {
            let (ox, oy) = if transposed { (y, x) } else { (x, y) };
            (ox as usize, oy as usize)
        })
        .collect()
}

/// Emits the construction's percolating set for `P_n x P_m` at r = 2, of
/// size exactly `grid_formula(n, m)`. Inputs with `n < m` are transposed
/// internally and the result mapped back. Every returned set has passed
/// engine verification.
pub fn grid_percolating_set(n: usize, m: usize) -> Result<GridConstruction, GridError> {
    if n < 3 || m < 3 {
        return Err(GridError::TooSmall { min: 3, n, m });
    }
    if n == 3 && m == 3 {
        return Err(GridError::BothThree);
    }
    let target = grid_formula(n, m).expect("n, m >= 3");
    let transposed = n < m;
    let (nn, nm) = if transposed { (m as i64, n as i64) } else { (n as i64, m as i64) };
    let product = grid_graph(n, m)?;
    let components = grid_components(n, m)?;

    // Literal rules first, then the constrained repair sweep over trims of
    // the right segment pairs and spine ends at the same cardinality.
    let mut trims: Vec<[i64; 4]> = vec![[0, 0, 0, 0]];
    for a in [0i64, -2, 2] {
        for b in [0i64, -2, 2] {
            for c in [0i64, -2, 2] {
                for d in [0i64, -2, 2] {
                    if (a, b, c, d) != (0, 0, 0, 0) {
                        trims.push([a, b, c, d]);
                    }
                }
            }
        }
    }

    for (attempt, trim) in trims.iter().enumerate() {
        let cand = build_candidate(nn, nm, *trim);
        let Some(seeds) =
            cells_to_seeds(nn, nm, transposed, m, &cand.even_cells, &cand.odd_cells)
        else {
            continue;
        };
        if seeds.len() != target {
            continue;
        }
        if !engine::propagates(&product, 2, &seeds).expect("matching widths") {
            continue;
        }
        let mut diagonals = Vec::new();
        let mut spine = Vec::new();
        let mut extras = Vec::new();
        for pat in &cand.patterns {
            for seg in &pat.diagonals {
                diagonals.push(to_coords(seg, transposed));
            }
            spine.extend(to_coords(&pat.spine, transposed));
            extras.extend(to_coords(&pat.extras, transposed));
        }
        return Ok(GridConstruction {
            n,
            m,
            transposed,
            case: cand.case,
            components,
            diagonals,
            spine,
            extras,
            seeds,
            repaired: attempt > 0,
        });
    }
    Err(GridError::ConstructionFailed { n, m, target })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn components_of_7_by_5() {
        let c = grid_components(7, 5).unwrap();
        assert_eq!(c.kind, GridComponentKind::H1H2);
        assert_eq!(c.even.len(), 18); // ceil(7/2)*ceil(5/2) + floor(7/2)*floor(5/2)
        assert_eq!(c.odd.len(), 17);
    }

    #[test]
    fn components_of_8_by_8() {
        let c = grid_components(8, 8).unwrap();
        assert_eq!(c.kind, GridComponentKind::TwoG1);
        assert_eq!(c.even.len(), 32);
        assert_eq!(c.odd.len(), 32);
    }

    #[test]
    fn components_of_7_by_6() {
        let c = grid_components(7, 6).unwrap();
        assert_eq!(c.kind, GridComponentKind::TwoG2);
        assert_eq!(c.even.len(), 21);
        assert_eq!(c.odd.len(), 21);
    }

    #[test]
    fn construction_8_by_8() {
        let c = grid_percolating_set(8, 8).unwrap();
        assert_eq!(c.seeds.len(), 16);
        assert_eq!(c.case, GridCase::C12);
        assert!(!c.repaired);
        assert!(engine::propagates(&grid_graph(8, 8).unwrap(), 2, &c.seeds).unwrap());
    }

    #[test]
    fn construction_7_by_6() {
        let c = grid_percolating_set(7, 6).unwrap();
        assert_eq!(c.seeds.len(), 12);
        assert_eq!(c.case, GridCase::C22);
    }

    #[test]
    fn construction_7_by_5_piece_sizes() {
        let c = grid_percolating_set(7, 5).unwrap();
        assert_eq!(c.seeds.len(), 11);
        assert_eq!(c.case, GridCase::C33);
        let on_h1 = c.seeds.intersection(&c.components.even).len();
        let on_h2 = c.seeds.intersection(&c.components.odd).len();
        assert_eq!(on_h1, 6); // ceil((n+m-1)/2)
        assert_eq!(on_h2, 5); // floor((n+m-1)/2)
    }

    #[test]
    fn construction_4_by_4_subcase_1_1() {
        let c = grid_percolating_set(4, 4).unwrap();
        assert_eq!(c.case, GridCase::C11);
        assert_eq!(c.seeds.len(), 8);
    }

    #[test]
    fn transposed_inputs_work() {
        let c = grid_percolating_set(5, 8).unwrap();
        assert!(c.transposed);
        assert_eq!(c.seeds.len(), 12); // 5 + 8 - 1
        assert!(engine::propagates(&grid_graph(5, 8).unwrap(), 2, &c.seeds).unwrap());
    }

    #[test]
    fn rejections() {
        assert_eq!(
            grid_percolating_set(2, 5).unwrap_err(),
            GridError::TooSmall { min: 3, n: 2, m: 5 }
        );
        assert_eq!(grid_percolating_set(3, 3).unwrap_err(), GridError::BothThree);
    }

    #[test]
    fn sweep_to_16_no_repairs() {
        for m in 3..=16usize {
            for n in m..=16 {
                if n == 3 && m == 3 {
                    continue;
                }
                let c = grid_percolating_set(n, m)
                    .unwrap_or_else(|e| panic!("{n} x {m}: {e}"));
                assert_eq!(c.seeds.len(), grid_formula(n, m).unwrap(), "size at {n} x {m}");
                assert!(!c.repaired, "unexpected repair at {n} x {m}");
            }
        }
    }
}
