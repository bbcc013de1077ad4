//! Pictorial representation of a numerical semigroup: a `(q+1) x m` grid
//! of consecutive integers with highlight layers, emitted as SVG or TikZ.
//!
//! The cell at row `r` (0 = top) and column `j` holds the integer
//! `-rho + (q-r)*m + j`, so the top row is exactly the threshold interval
//! `{c, ..., c+m-1}`, the bottom-left cell holds `-rho`, and all entries of
//! a column are congruent mod `m`. Elements, the conductor, the primitives
//! and (optionally) the pseudo-Frobenius numbers get their own layers; a
//! cell with two or more layers is drawn as a two-tone diagonal split so
//! the output bytes stay reproducible.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::semigroup::NumericalSemigroup;

/// Highlight layers of one cell, as a small bit set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct LayerSet(u8);

impl LayerSet {
    pub const BACKGROUND: LayerSet = LayerSet(1);
    pub const ELEMENT: LayerSet = LayerSet(1 << 1);
    pub const CONDUCTOR: LayerSet = LayerSet(1 << 2);
    pub const PRIMITIVE: LayerSet = LayerSet(1 << 3);
    pub const PSEUDO_FROBENIUS: LayerSet = LayerSet(1 << 4);

    pub fn contains(self, other: LayerSet) -> bool {
        self.0 & other.0 == other.0
    }

    pub fn insert(&mut self, other: LayerSet) {
        self.0 |= other.0;
    }
}

/// One grid cell: its integer value and its layers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cell {
    pub value: i64,
    pub layers: LayerSet,
}

/// Renderer-independent grid: `(q+1) x m` cells in row-major order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridModel {
    rows: usize,
    cols: usize,
    cells: Vec<Cell>,
    shape_only: bool,
}

impl GridModel {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape_only(&self) -> bool {
        self.shape_only
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn cell(&self, row: usize, col: usize) -> &Cell {
        &self.cells[row * self.cols + col]
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct RenderOptions {
    /// Also highlight the pseudo-Frobenius numbers (they are gaps).
    pub highlight_pf: bool,
    /// Suppress numerals and cell borders; filled cells only.
    pub shape_only: bool,
}

/// Build the grid for a semigroup.
pub fn grid_model(s: &NumericalSemigroup, opts: RenderOptions) -> GridModel {
    let m = s.multiplicity() as i64;
    let q = s.depth() as i64;
    let rho = s.rho() as i64;
    let c = s.conductor() as i64;
    let rows = (q + 1) as usize;
    let cols = m as usize;
    let prims: HashSet<i64> = s.minimal_generators().iter().map(|&p| p as i64).collect();
    let pf: HashSet<i64> = if opts.highlight_pf {
        s.pseudo_frobenius().iter().map(|&x| x as i64).collect()
    } else {
        HashSet::new()
    };
    let mut cells = Vec::with_capacity(rows * cols);
    for r in 0..rows as i64 {
        for j in 0..m {
            let value = -rho + (q - r) * m + j;
            let mut layers = LayerSet::BACKGROUND;
            if s.contains(value) {
                layers.insert(LayerSet::ELEMENT);
            }
            if value == c {
                layers.insert(LayerSet::CONDUCTOR);
            }
            if prims.contains(&value) {
                layers.insert(LayerSet::PRIMITIVE);
            }
            if pf.contains(&value) {
                layers.insert(LayerSet::PSEUDO_FROBENIUS);
            }
            cells.push(Cell { value, layers });
        }
    }
    GridModel {
        rows,
        cols,
        cells,
        shape_only: opts.shape_only,
    }
}

/// Fixed color constants mirroring the usual picture style: elements red,
/// conductor blue, primitives light red, pseudo-Frobenius numbers gray.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Palette {
    pub background: &'static str,
    pub element: &'static str,
    pub conductor: &'static str,
    pub primitive: &'static str,
    pub pseudo_frobenius: &'static str,
    pub grid_line: &'static str,
    pub text: &'static str,
}

impl Default for Palette {
    fn default() -> Self {
        Palette {
            background: "#FFFFFF",
            element: "#FF0000",
            conductor: "#0000FF",
            primitive: "#FF4D4D",
            pseudo_frobenius: "#999999",
            grid_line: "#CCCCCC",
            text: "#000000",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Highlight {
    PseudoFrobenius,
    Primitive,
    Conductor,
    Element,
}

impl Highlight {
    fn hex(self, palette: &Palette) -> &'static str {
        match self {
            Highlight::PseudoFrobenius => palette.pseudo_frobenius,
            Highlight::Primitive => palette.primitive,
            Highlight::Conductor => palette.conductor,
            Highlight::Element => palette.element,
        }
    }

    fn tikz_name(self) -> &'static str {
        match self {
            Highlight::PseudoFrobenius => "sgppf",
            Highlight::Primitive => "sgpprimitive",
            Highlight::Conductor => "sgpconductor",
            Highlight::Element => "sgpelement",
        }
    }
}

/// Highlights of a cell ordered by precedence:
/// pseudo-Frobenius > primitive > conductor > element.
fn cell_highlights(cell: &Cell) -> Vec<Highlight> {
    let mut hs = Vec::new();
    if cell.layers.contains(LayerSet::PSEUDO_FROBENIUS) {
        hs.push(Highlight::PseudoFrobenius);
    }
    if cell.layers.contains(LayerSet::PRIMITIVE) {
        hs.push(Highlight::Primitive);
    }
    if cell.layers.contains(LayerSet::CONDUCTOR) {
        hs.push(Highlight::Conductor);
    }
    if cell.layers.contains(LayerSet::ELEMENT) {
        hs.push(Highlight::Element);
    }
    hs
}

const CELL_PX: i64 = 24;

/// Deterministic SVG: byte-identical output for equal inputs. Cells with
/// one highlight are solid; cells with several split along the diagonal
/// into the two highest-precedence colors. Negative entries render at 30%
/// opacity.
pub fn emit_svg(grid: &GridModel, palette: &Palette) -> String {
    let w = grid.cols() as i64 * CELL_PX;
    let h = grid.rows() as i64 * CELL_PX;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">"
    );
    for r in 0..grid.rows() {
        for j in 0..grid.cols() {
            let cell = grid.cell(r, j);
            let x = j as i64 * CELL_PX;
            let y = r as i64 * CELL_PX;
            let opacity = if cell.value < 0 { " opacity=\"0.3\"" } else { "" };
            let highlights = cell_highlights(cell);
            match highlights.as_slice() {
                [] => {
                    let _ = writeln!(
                        out,
                        "  <rect x=\"{x}\" y=\"{y}\" width=\"{CELL_PX}\" height=\"{CELL_PX}\" fill=\"{}\"{opacity}/>",
                        palette.background
                    );
                }
                [solid] => {
                    let _ = writeln!(
                        out,
                        "  <rect x=\"{x}\" y=\"{y}\" width=\"{CELL_PX}\" height=\"{CELL_PX}\" fill=\"{}\"{opacity}/>",
                        solid.hex(palette)
                    );
                }
                [a, b, ..] => {
                    let _ = writeln!(
                        out,
                        "  <path d=\"M {x},{y} L {xe},{y} L {x},{ye} Z\" fill=\"{}\"{opacity}/>",
                        a.hex(palette),
                        xe = x + CELL_PX,
                        ye = y + CELL_PX
                    );
                    let _ = writeln!(
                        out,
                        "  <path d=\"M {xe},{y} L {xe},{ye} L {x},{ye} Z\" fill=\"{}\"{opacity}/>",
                        b.hex(palette),
                        xe = x + CELL_PX,
                        ye = y + CELL_PX
                    );
                }
            }
            if !grid.shape_only() {
                let _ = writeln!(
                    out,
                    "  <rect x=\"{x}\" y=\"{y}\" width=\"{CELL_PX}\" height=\"{CELL_PX}\" fill=\"none\" stroke=\"{}\" stroke-width=\"1\"/>",
                    palette.grid_line
                );
                let _ = writeln!(
                    out,
                    "  <text x=\"{cx}\" y=\"{cy}\" font-family=\"monospace\" font-size=\"8\" text-anchor=\"middle\" dominant-baseline=\"central\" fill=\"{tc}\"{opacity}>{v}</text>",
                    cx = x + CELL_PX / 2,
                    cy = y + CELL_PX / 2,
                    tc = palette.text,
                    v = cell.value
                );
            }
        }
    }
    out.push_str("</svg>\n");
    out
}

fn tikz_color(name: &str, hex: &str, out: &mut String) {
    let _ = writeln!(
        out,
        "\\definecolor{{{name}}}{{HTML}}{{{}}}",
        hex.trim_start_matches('#')
    );
}

/// Deterministic TikZ picture with the same layer semantics as the SVG
/// output; wraps everything in one `tikzpicture` environment.
pub fn emit_tikz(grid: &GridModel, palette: &Palette) -> String {
    let mut out = String::new();
    tikz_color("sgpbg", palette.background, &mut out);
    tikz_color("sgpelement", palette.element, &mut out);
    tikz_color("sgpconductor", palette.conductor, &mut out);
    tikz_color("sgpprimitive", palette.primitive, &mut out);
    tikz_color("sgppf", palette.pseudo_frobenius, &mut out);
    tikz_color("sgpline", palette.grid_line, &mut out);
    out.push_str("\\begin{tikzpicture}[x=0.6cm,y=0.6cm]\n");
    for r in 0..grid.rows() {
        for j in 0..grid.cols() {
            let cell = grid.cell(r, j);
            let x = j as i64;
            let y = (grid.rows() - 1 - r) as i64;
            let opacity = if cell.value < 0 { ",opacity=0.3" } else { "" };
            let highlights = cell_highlights(cell);
            match highlights.as_slice() {
                [] => {
                    let _ = writeln!(
                        out,
                        "  \\fill[sgpbg{opacity}] ({x},{y}) rectangle ++(1,1);"
                    );
                }
                [solid] => {
                    let _ = writeln!(
                        out,
                        "  \\fill[{}{opacity}] ({x},{y}) rectangle ++(1,1);",
                        solid.tikz_name()
                    );
                }
                [a, b, ..] => {
                    let _ = writeln!(
                        out,
                        "  \\fill[{}{opacity}] ({x},{yt}) -- ({xe},{yt}) -- ({x},{y}) -- cycle;",
                        a.tikz_name(),
                        xe = x + 1,
                        yt = y + 1
                    );
                    let _ = writeln!(
                        out,
                        "  \\fill[{}{opacity}] ({xe},{yt}) -- ({xe},{y}) -- ({x},{y}) -- cycle;",
                        b.tikz_name(),
                        xe = x + 1,
                        yt = y + 1
                    );
                }
            }
            if !grid.shape_only() {
                let _ = writeln!(out, "  \\draw[sgpline] ({x},{y}) rectangle ++(1,1);");
                let _ = writeln!(
                    out,
                    "  \\node at ({cx}.5,{cy}.5) {{\\tiny {v}}};",
                    cx = x,
                    cy = y,
                    v = cell.value
                );
            }
        }
    }
    out.push_str("\\end{tikzpicture}\n");
    out
}
