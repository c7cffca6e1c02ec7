//! Builds an enemy influence map and shows where the attack location lands
//! for a few parameter settings. The attack goes to the weakest positively
//! influenced cell, so it drifts to the fringe of the lone straggler rather
//! than into the cluster.
//!
//!     cargo run --example influence_map

use rts_coevo::micro::{build_influence_grid, select_target_cell, GridSpec};
use rts_coevo::Vec2;

fn main() -> rts_coevo::Result<()> {
    let spec = GridSpec::covering(Vec2::new(2048.0, 2048.0), 32.0);
    // A tight cluster of four and a straggler.
    let enemies = [
        Vec2::new(1000.0, 1000.0),
        Vec2::new(1030.0, 1010.0),
        Vec2::new(990.0, 1040.0),
        Vec2::new(1020.0, 1050.0),
        Vec2::new(1400.0, 700.0),
    ];
    for (weight, range) in [(10.0, 0.0), (10.0, 2.0), (10.0, 6.0), (0.0, 3.0)] {
        let grid = build_influence_grid(&enemies, weight, range, spec);
        let cell = select_target_cell(&grid, &enemies)?;
        let c = spec.center(cell);
        println!(
            "W_e={weight:>4} R_e={range:>3}: attack cell ({:>2},{:>2}) centre ({:>6.1},{:>6.1}) value {:.3}",
            cell.row,
            cell.col,
            c.x,
            c.y,
            grid.get(cell)
        );
    }

    // A coarse picture of the map around the cluster.
    let grid = build_influence_grid(&enemies, 10.0, 3.0, spec);
    let centre = spec.cell_of(enemies[0]);
    for row in centre.row - 6..=centre.row + 6 {
        let line: String = (centre.col - 6..=centre.col + 16)
            .map(|col| {
                let v = grid.values[row * spec.width + col];
                match v {
                    0.0 => '.',
                    v if v < 5.0 => '-',
                    v if v < 15.0 => '+',
                    _ => '#',
                }
            })
            .collect();
        println!("{line}");
    }
    Ok(())
}
