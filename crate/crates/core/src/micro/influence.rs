//! Enemy influence map and attack-location selection.

use crate::error::{Error, Result};
use crate::geom::Vec2;

/// Grid geometry laid over the map.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub cell_size: f64,
    pub width: usize,
    pub height: usize,
}

impl GridSpec {
    /// Smallest grid of `cell_size` cells covering a `map` sized area.
    pub fn covering(map: Vec2, cell_size: f64) -> Self {
        GridSpec {
            cell_size,
            width: ((map.x / cell_size).ceil() as usize).max(1),
            height: ((map.y / cell_size).ceil() as usize).max(1),
        }
    }

    pub fn cell_of(&self, p: Vec2) -> Cell {
        let col = ((p.x / self.cell_size).floor().max(0.0) as usize).min(self.width - 1);
        let row = ((p.y / self.cell_size).floor().max(0.0) as usize).min(self.height - 1);
        Cell { row, col }
    }

    pub fn center(&self, cell: Cell) -> Vec2 {
        Vec2::new(
            (cell.col as f64 + 0.5) * self.cell_size,
            (cell.row as f64 + 0.5) * self.cell_size,
        )
    }

    pub fn cells(&self) -> usize {
        self.width * self.height
    }
}

/// Grid coordinate; the derived ordering is lexicographic `(row, col)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn chebyshev(self, other: Cell) -> usize {
        self.row.abs_diff(other.row).max(self.col.abs_diff(other.col))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct InfluenceGrid {
    pub spec: GridSpec,
    /// Row-major cell values.
    pub values: Vec<f64>,
    /// Inclusive `(first, last)` corners of the region any enemy touched;
    /// every cell outside it is zero.
    touched: Option<(Cell, Cell)>,
}

impl InfluenceGrid {
    pub fn zeros(spec: GridSpec) -> Self {
        InfluenceGrid {
            spec,
            values: vec![0.0; spec.cells()],
            touched: None,
        }
    }

    pub fn get(&self, cell: Cell) -> f64 {
        self.values[cell.row * self.spec.width + cell.col]
    }
}

/// Influence an enemy adds to a cell `distance` cells away, or `None` once
/// the distance exceeds `range`.
#[inline]
fn contribution(weight: f64, range: f64, distance: usize) -> Option<f64> {
    let d = distance as f64;
    (d <= range).then(|| weight * (range + 1.0 - d) / (range + 1.0))
}

/// Sums the linearly decaying influence of every enemy over the grid.
///
/// Each enemy adds `weight * (range + 1 - d) / (range + 1)` to all cells at
/// Chebyshev cell distance `d <= range` from the cell it occupies.
pub fn build_influence_grid(enemies: &[Vec2], weight: f64, range: f64, spec: GridSpec) -> InfluenceGrid {
    let mut grid = InfluenceGrid::zeros(spec);
    let reach = if range >= 0.0 { range.floor() as usize } else { return grid };
    for &p in enemies {
        let c = spec.cell_of(p);
        let r0 = c.row.saturating_sub(reach);
        let r1 = (c.row + reach).min(spec.height - 1);
        let c0 = c.col.saturating_sub(reach);
        let c1 = (c.col + reach).min(spec.width - 1);
        grid.touched = Some(match grid.touched {
            None => (Cell { row: r0, col: c0 }, Cell { row: r1, col: c1 }),
            Some((a, b)) => (
                Cell { row: a.row.min(r0), col: a.col.min(c0) },
                Cell { row: b.row.max(r1), col: b.col.max(c1) },
            ),
        });
        for row in r0..=r1 {
            let base = row * spec.width;
            for col in c0..=c1 {
                let d = c.chebyshev(Cell { row, col });
                if let Some(v) = contribution(weight, range, d) {
                    grid.values[base + col] += v;
                }
            }
        }
    }
    grid
}

/// Picks the attack location: the weakest positively influenced cell,
/// breaking ties by distance from the cell centre to the nearest enemy and
/// then by `(row, col)`.
///
/// With no positive cell (zero weight) the lexicographically first cell
/// holding an enemy is returned, so the choice is independent of the order of
/// `enemies`.
pub fn select_target_cell(grid: &InfluenceGrid, enemies: &[Vec2]) -> Result<Cell> {
    if enemies.is_empty() {
        return Err(Error::NoTarget);
    }
    let spec = grid.spec;
    let (lo, hi) = grid.touched.unwrap_or((Cell { row: 0, col: 0 }, Cell { row: spec.height - 1, col: spec.width - 1 }));
    let region = || {
        (lo.row..=hi.row).flat_map(move |row| (lo.col..=hi.col).map(move |col| Cell { row, col }))
    };
    let min_value = region()
        .map(|c| grid.get(c))
        .filter(|v| *v > 0.0)
        .fold(f64::INFINITY, f64::min);
    if !min_value.is_finite() {
        return Ok(enemies.iter().map(|p| spec.cell_of(*p)).min().expect("non-empty"));
    }
    let nearest_enemy = |cell: Cell| {
        let c = spec.center(cell);
        enemies
            .iter()
            .map(|p| c.distance_sq(*p))
            .fold(f64::INFINITY, f64::min)
    };
    let mut best: Option<(f64, Cell)> = None;
    for cell in region() {
        if grid.get(cell) != min_value {
            continue;
        }
        let d = nearest_enemy(cell);
        // Row-major scan visits cells in (row, col) order, so strict `<`
        // keeps the lexicographically first among equals.
        if best.is_none_or(|(bd, _)| d < bd) {
            best = Some((d, cell));
        }
    }
    Ok(best.expect("min value came from some cell").1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec() -> GridSpec {
        GridSpec::covering(Vec2::new(2048.0, 2048.0), 32.0)
    }

    #[test]
    fn default_grid_is_64_square() {
        let s = spec();
        assert_eq!((s.width, s.height), (64, 64));
        assert_eq!(s.cell_of(Vec2::new(2048.0, 2048.0)), Cell { row: 63, col: 63 });
        assert_eq!(s.cell_of(Vec2::new(33.0, 0.0)), Cell { row: 0, col: 1 });
    }

    #[test]
    fn zero_range_marks_only_own_cell() {
        let e = Vec2::new(100.0, 200.0);
        let g = build_influence_grid(&[e], 10.0, 0.0, spec());
        let own = spec().cell_of(e);
        for (i, v) in g.values.iter().enumerate() {
            let expect = if i == own.row * 64 + own.col { 10.0 } else { 0.0 };
            assert_eq!(*v, expect);
        }
    }

    #[test]
    fn same_cell_sums() {
        let g = build_influence_grid(&[Vec2::new(5.0, 5.0), Vec2::new(6.0, 7.0)], 10.0, 0.0, spec());
        assert_eq!(g.get(Cell { row: 0, col: 0 }), 20.0);
    }

    #[test]
    fn distance_one_at_range_three() {
        let e = Vec2::new(10.0 * 32.0 + 1.0, 10.0 * 32.0 + 1.0);
        let g = build_influence_grid(&[e], 8.0, 3.0, spec());
        assert_eq!(g.get(Cell { row: 11, col: 10 }), 6.0);
        assert_eq!(g.get(Cell { row: 9, col: 9 }), 6.0);
        assert_eq!(g.get(Cell { row: 10, col: 14 }), 0.0);
    }

    #[test]
    fn single_enemy_zero_range_targets_its_cell() {
        let e = Vec2::new(700.0, 300.0);
        let g = build_influence_grid(&[e], 5.0, 0.0, spec());
        assert_eq!(select_target_cell(&g, &[e]).unwrap(), spec().cell_of(e));
    }

    #[test]
    fn no_enemies_is_an_error() {
        let g = InfluenceGrid::zeros(spec());
        assert!(matches!(select_target_cell(&g, &[]), Err(Error::NoTarget)));
    }

    #[test]
    fn zero_weight_falls_back_to_first_enemy_cell() {
        let enemies = [Vec2::new(900.0, 900.0), Vec2::new(100.0, 900.0)];
        let g = build_influence_grid(&enemies, 0.0, 3.0, spec());
        assert_eq!(select_target_cell(&g, &enemies).unwrap(), Cell { row: 28, col: 3 });
    }
}
