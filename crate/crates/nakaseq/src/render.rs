//! Deterministic SVG and ASCII pictures of the fundamental domain, with the
//! Hom/Ext regions of a chosen module shaded.
//!
//! Lattice points map to pixels by `(a, b) -> (40a + 20b, -40b)` plus a
//! margin; all coordinates stay integral so output is byte-stable. Cells are
//! emitted row-major, top row (`b = k-1`) first.

use crate::algebra::NakayamaAlgebra;
use crate::modcat::{Indec, ModuleError};

/// Which region fills to draw.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RegionChoice {
    pub hom: bool,
    pub ext: bool,
}

const HOM_FILL: (u8, u8, u8) = (0xcf, 0xe8, 0xff);
const EXT_FILL: (u8, u8, u8) = (0xff, 0xd9, 0xcc);
const MARGIN: i64 = 40;
const CELL: i64 = 40;

fn blend(a: (u8, u8, u8), b: (u8, u8, u8)) -> (u8, u8, u8) {
    (
        ((a.0 as u16 + b.0 as u16) / 2) as u8,
        ((a.1 as u16 + b.1 as u16) / 2) as u8,
        ((a.2 as u16 + b.2 as u16) / 2) as u8,
    )
}

fn hex(c: (u8, u8, u8)) -> String {
    format!("#{:02x}{:02x}{:02x}", c.0, c.1, c.2)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Cell {
    Empty,
    Focus,
    Hom,
    Ext,
    Both,
}

/// Region membership for every fundamental-domain point, row-major with the
/// top row (`b = k-1`) first.
fn classify(
    alg: &NakayamaAlgebra,
    module: Indec,
    regions: RegionChoice,
) -> Result<(Vec<Vec<Cell>>, usize, usize), ModuleError> {
    if !alg.contains(module) {
        return Err(ModuleError::Nonexistent(module, alg.render_spec()));
    }
    let si = alg.try_selfinjective()?;
    let (n, k) = (si.n(), si.k());
    let focus = si.gamma(module);
    let mut rows = Vec::with_capacity(k);
    for b in (0..k).rev() {
        let mut row = Vec::with_capacity(n);
        for a in 0..n {
            let here = si.gamma_inv(a as i64, b)?;
            let cell = if focus.a == a as i64 && focus.b == b {
                Cell::Focus
            } else {
                let h = regions.hom && si.hom_region_contains(module, here)?;
                let e = regions.ext && si.ext_region_contains(module, here)?;
                match (h, e) {
                    (true, true) => Cell::Both,
                    (true, false) => Cell::Hom,
                    (false, true) => Cell::Ext,
                    (false, false) => Cell::Empty,
                }
            };
            row.push(cell);
        }
        rows.push(row);
    }
    Ok((rows, n, k))
}

/// One character per lattice point: `.` empty, `o` the chosen module,
/// `H`/`E`/`B` for Hom / Ext / both region membership.
pub fn render_ascii(
    alg: &NakayamaAlgebra,
    module: Indec,
    regions: RegionChoice,
) -> Result<String, ModuleError> {
    let (rows, _, _) = classify(alg, module, regions)?;
    let mut out = String::new();
    for row in rows {
        for cell in row {
            out.push(match cell {
                Cell::Empty => '.',
                Cell::Focus => 'o',
                Cell::Hom => 'H',
                Cell::Ext => 'E',
                Cell::Both => 'B',
            });
        }
        out.push('\n');
    }
    Ok(out)
}

/// SVG with shaded region cells behind 6px module dots; the chosen module
/// gets a ring. Pure string assembly, byte-identical across runs.
pub fn render_svg(
    alg: &NakayamaAlgebra,
    module: Indec,
    regions: RegionChoice,
) -> Result<String, ModuleError> {
    let (rows, n, k) = classify(alg, module, regions)?;
    let width = 2 * MARGIN + CELL * (n as i64 - 1) + (CELL / 2) * (k as i64 - 1);
    let height = 2 * MARGIN + CELL * (k as i64 - 1);
    let px = |a: usize, b: usize| -> (i64, i64) {
        (
            MARGIN + CELL * a as i64 + (CELL / 2) * b as i64,
            MARGIN + CELL * (k as i64 - 1) - CELL * b as i64,
        )
    };
    let mut svg = String::new();
    svg.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">\n"
    ));
    svg.push_str(&format!(
        "<rect x=\"0\" y=\"0\" width=\"{width}\" height=\"{height}\" fill=\"#ffffff\"/>\n"
    ));
    // region fills first, then dots, so membership never hides a module
    for (ri, row) in rows.iter().enumerate() {
        let b = k - 1 - ri;
        for (a, cell) in row.iter().enumerate() {
            let fill = match cell {
                Cell::Hom => hex(HOM_FILL),
                Cell::Ext => hex(EXT_FILL),
                Cell::Both => hex(blend(HOM_FILL, EXT_FILL)),
                Cell::Empty | Cell::Focus => continue,
            };
            let (x, y) = px(a, b);
            svg.push_str(&format!("<circle cx=\"{x}\" cy=\"{y}\" r=\"14\" fill=\"{fill}\"/>\n"));
        }
    }
    for (ri, row) in rows.iter().enumerate() {
        let b = k - 1 - ri;
        for (a, _) in row.iter().enumerate() {
            let (x, y) = px(a, b);
            svg.push_str(&format!("<circle cx=\"{x}\" cy=\"{y}\" r=\"3\" fill=\"#222222\"/>\n"));
        }
    }
    for (ri, row) in rows.iter().enumerate() {
        let b = k - 1 - ri;
        for (a, cell) in row.iter().enumerate() {
            if *cell == Cell::Focus {
                let (x, y) = px(a, b);
                svg.push_str(&format!(
                    "<circle cx=\"{x}\" cy=\"{y}\" r=\"7\" fill=\"none\" stroke=\"#d04040\" stroke-width=\"2\"/>\n"
                ));
            }
        }
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}
