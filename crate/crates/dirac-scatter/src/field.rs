//! Grids, spinor fields, potentials, detector data, and the discrete norms
//! shared by both scattering models.

use crate::{Error, Result};
use num_complex::Complex64;
use std::io::{BufRead, Write};
use std::path::Path;

/// Uniform 2D grid. Node (ix, iy) sits at (x0 + ix·dx, y0 + iy·dy); data
/// arrays attached to the grid are row-major with ix as the row index.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid2D {
    pub nx: usize,
    pub ny: usize,
    pub x0: f64,
    pub y0: f64,
    pub dx: f64,
    pub dy: f64,
}

impl Grid2D {
    pub fn new(nx: usize, ny: usize, x0: f64, y0: f64, dx: f64, dy: f64) -> Self {
        assert!(nx > 0 && ny > 0 && dx > 0.0 && dy > 0.0);
        Self { nx, ny, x0, y0, dx, dy }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.nx * self.ny
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn idx(&self, ix: usize, iy: usize) -> usize {
        ix * self.ny + iy
    }

    #[inline]
    pub fn node(&self, ix: usize, iy: usize) -> (f64, f64) {
        (self.x0 + ix as f64 * self.dx, self.y0 + iy as f64 * self.dy)
    }

    #[inline]
    pub fn cell_area(&self) -> f64 {
        self.dx * self.dy
    }
}

/// Uniform 1D grid for transverse traces.
#[derive(Debug, Clone, PartialEq)]
pub struct LineGrid {
    pub n: usize,
    pub y0: f64,
    pub dy: f64,
}

impl LineGrid {
    pub fn new(n: usize, y0: f64, dy: f64) -> Self {
        assert!(n > 1 && dy > 0.0);
        Self { n, y0, dy }
    }

    #[inline]
    pub fn node(&self, i: usize) -> f64 {
        self.y0 + i as f64 * self.dy
    }
}

/// Two-component complex field on a 2D grid.
#[derive(Debug, Clone)]
pub struct SpinorField {
    pub grid: Grid2D,
    pub comp1: Vec<Complex64>,
    pub comp2: Vec<Complex64>,
}

impl SpinorField {
    pub fn zeros(grid: Grid2D) -> Self {
        let n = grid.len();
        Self {
            grid,
            comp1: vec![Complex64::new(0.0, 0.0); n],
            comp2: vec![Complex64::new(0.0, 0.0); n],
        }
    }

    pub fn new(grid: Grid2D, comp1: Vec<Complex64>, comp2: Vec<Complex64>) -> Result<Self> {
        if comp1.len() != grid.len() || comp2.len() != grid.len() {
            return Err(Error::Dimension("spinor components do not match grid".into()));
        }
        Ok(Self { grid, comp1, comp2 })
    }
}

/// Two-component complex trace on a 1D grid.
#[derive(Debug, Clone)]
pub struct LineField {
    pub grid: LineGrid,
    pub comp1: Vec<Complex64>,
    pub comp2: Vec<Complex64>,
}

impl LineField {
    pub fn zeros(grid: LineGrid) -> Self {
        let n = grid.n;
        Self {
            grid,
            comp1: vec![Complex64::new(0.0, 0.0); n],
            comp2: vec![Complex64::new(0.0, 0.0); n],
        }
    }
}

/// Real scattering potential on a grid, with its cached sup norm.
#[derive(Debug, Clone)]
pub struct Potential {
    pub grid: Grid2D,
    values: Vec<f64>,
    sup_norm: f64,
}

impl Potential {
    pub fn new(grid: Grid2D, values: Vec<f64>) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::Dimension("potential values do not match grid".into()));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::Domain("potential contains non-finite values".into()));
        }
        let sup_norm = values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        Ok(Self { grid, values, sup_norm })
    }

    pub fn zeros(grid: Grid2D) -> Self {
        let n = grid.len();
        Self { grid, values: vec![0.0; n], sup_norm: 0.0 }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn sup_norm(&self) -> f64 {
        self.sup_norm
    }

    #[inline]
    pub fn at(&self, ix: usize, iy: usize) -> f64 {
        self.values[self.grid.idx(ix, iy)]
    }

    pub fn scaled(&self, a: f64) -> Potential {
        Potential {
            grid: self.grid.clone(),
            values: self.values.iter().map(|v| a * v).collect(),
            sup_norm: self.sup_norm * a.abs(),
        }
    }

    pub fn add(&self, other: &Potential) -> Result<Potential> {
        if self.grid != other.grid {
            return Err(Error::Argument("potential grids differ".into()));
        }
        Potential::new(
            self.grid.clone(),
            self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect(),
        )
    }

    pub fn sub(&self, other: &Potential) -> Result<Potential> {
        self.add(&other.scaled(-1.0))
    }
}

/// Per-source complex detector data. Every per-source vector stacks both
/// spinor components component-major: comp1 at all detectors, then comp2.
#[derive(Debug, Clone)]
pub struct MeasurementSet {
    /// Ordered detector coordinates.
    pub detectors: Vec<(f64, f64)>,
    /// Spacing entering the discrete data-space norm.
    pub spacing: f64,
    /// `data[s]` has length `2 * detectors.len()`.
    pub data: Vec<Vec<Complex64>>,
}

impl MeasurementSet {
    pub fn new(detectors: Vec<(f64, f64)>, spacing: f64, data: Vec<Vec<Complex64>>) -> Result<Self> {
        let want = 2 * detectors.len();
        if data.is_empty() {
            return Err(Error::Argument("measurement set needs at least one source".into()));
        }
        if data.iter().any(|d| d.len() != want) {
            return Err(Error::Dimension(format!(
                "per-source data must have length {want} (2 x detectors)"
            )));
        }
        Ok(Self { detectors, spacing, data })
    }

    pub fn zeros_like(other: &MeasurementSet) -> Self {
        Self {
            detectors: other.detectors.clone(),
            spacing: other.spacing,
            data: other
                .data
                .iter()
                .map(|d| vec![Complex64::new(0.0, 0.0); d.len()])
                .collect(),
        }
    }

    pub fn n_sources(&self) -> usize {
        self.data.len()
    }

    pub fn n_detectors(&self) -> usize {
        self.detectors.len()
    }

    pub fn add_in_place(&mut self, other: &MeasurementSet) {
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
        }
    }

    pub fn sub(&self, other: &MeasurementSet) -> MeasurementSet {
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            for (x, y) in a.iter_mut().zip(b) {
                *x -= y;
            }
        }
        out
    }

    pub fn scaled(&self, a: f64) -> MeasurementSet {
        let mut out = self.clone();
        for d in out.data.iter_mut() {
            for x in d.iter_mut() {
                *x *= a;
            }
        }
        out
    }

    /// Source-major flattening used by the solvers.
    pub fn flatten(&self) -> Vec<Complex64> {
        self.data.iter().flat_map(|d| d.iter().copied()).collect()
    }

    pub fn from_flat(template: &MeasurementSet, flat: &[Complex64]) -> Result<MeasurementSet> {
        let per = 2 * template.n_detectors();
        if flat.len() != per * template.n_sources() {
            return Err(Error::Dimension("flat measurement length mismatch".into()));
        }
        let data = flat.chunks_exact(per).map(|c| c.to_vec()).collect();
        MeasurementSet::new(template.detectors.clone(), template.spacing, data)
    }
}

/// Discrete L² norms.
pub trait L2Norm {
    fn l2_norm(&self) -> f64;
}

impl L2Norm for Potential {
    fn l2_norm(&self) -> f64 {
        let w = self.grid.cell_area();
        (self.values.iter().map(|v| v * v).sum::<f64>() * w).sqrt()
    }
}

impl L2Norm for SpinorField {
    fn l2_norm(&self) -> f64 {
        let w = self.grid.cell_area();
        let s: f64 = self
            .comp1
            .iter()
            .map(|v| v.norm_sqr())
            .chain(self.comp2.iter().map(|v| v.norm_sqr()))
            .sum();
        (s * w).sqrt()
    }
}

impl L2Norm for LineField {
    fn l2_norm(&self) -> f64 {
        let s: f64 = self
            .comp1
            .iter()
            .map(|v| v.norm_sqr())
            .chain(self.comp2.iter().map(|v| v.norm_sqr()))
            .sum();
        (s * self.grid.dy).sqrt()
    }
}

impl L2Norm for MeasurementSet {
    fn l2_norm(&self) -> f64 {
        let s: f64 = self
            .data
            .iter()
            .flat_map(|d| d.iter().map(|v| v.norm_sqr()))
            .sum();
        (s * self.spacing).sqrt()
    }
}

/// ‖v_rec − v_true‖ / ‖v_true‖ in the discrete L²(Ω) norm.
pub fn relative_error(v_rec: &Potential, v_true: &Potential) -> Result<f64> {
    if v_rec.grid != v_true.grid {
        return Err(Error::Argument("relative_error: grids differ".into()));
    }
    let denom = v_true.l2_norm();
    if denom == 0.0 {
        return Err(Error::Domain("relative_error: reference potential is zero".into()));
    }
    Ok(v_rec.sub(v_true)?.l2_norm() / denom)
}

/// Linear interpolation of both trace components at the detector
/// coordinates, stacked component-major.
pub fn sample_line(field: &LineField, detector_ys: &[f64]) -> Result<Vec<Complex64>> {
    let g = &field.grid;
    let y_max = g.node(g.n - 1);
    let eps = 1e-9 * g.dy;
    let mut out = vec![Complex64::new(0.0, 0.0); 2 * detector_ys.len()];
    for (d, &y) in detector_ys.iter().enumerate() {
        if y < g.y0 - eps || y > y_max + eps {
            return Err(Error::Domain(format!(
                "detector y={y} outside [{}, {y_max}]",
                g.y0
            )));
        }
        let t = ((y - g.y0) / g.dy).clamp(0.0, (g.n - 1) as f64);
        let i = (t.floor() as usize).min(g.n - 2);
        let frac = t - i as f64;
        out[d] = field.comp1[i] * (1.0 - frac) + field.comp1[i + 1] * frac;
        out[detector_ys.len() + d] = field.comp2[i] * (1.0 - frac) + field.comp2[i + 1] * frac;
    }
    Ok(out)
}

fn fmt_f64(v: f64) -> String {
    format!("{v}")
}

/// Write a real potential as CSV: one header line `# nx,ny,x0,y0,dx,dy`,
/// then nx rows of ny values.
pub fn write_potential_csv(p: &Potential, path: &Path) -> Result<()> {
    let mut w = std::io::BufWriter::new(std::fs::File::create(path)?);
    let g = &p.grid;
    writeln!(w, "# {},{},{},{},{},{}", g.nx, g.ny, fmt_f64(g.x0), fmt_f64(g.y0), fmt_f64(g.dx), fmt_f64(g.dy))?;
    for ix in 0..g.nx {
        let row: Vec<String> = (0..g.ny).map(|iy| fmt_f64(p.at(ix, iy))).collect();
        writeln!(w, "{}", row.join(","))?;
    }
    Ok(())
}

/// Write a complex grid component as CSV with re/im value pairs in adjacent
/// columns.
pub fn write_complex_grid_csv(grid: &Grid2D, values: &[Complex64], path: &Path) -> Result<()> {
    if values.len() != grid.len() {
        return Err(Error::Dimension("complex grid csv: length mismatch".into()));
    }
    let mut w = std::io::BufWriter::new(std::fs::File::create(path)?);
    writeln!(
        w,
        "# {},{},{},{},{},{}",
        grid.nx, grid.ny, fmt_f64(grid.x0), fmt_f64(grid.y0), fmt_f64(grid.dx), fmt_f64(grid.dy)
    )?;
    for ix in 0..grid.nx {
        let row: Vec<String> = (0..grid.ny)
            .flat_map(|iy| {
                let v = values[grid.idx(ix, iy)];
                [fmt_f64(v.re), fmt_f64(v.im)]
            })
            .collect();
        writeln!(w, "{}", row.join(","))?;
    }
    Ok(())
}

/// Read back a potential written by [`write_potential_csv`].
pub fn read_potential_csv(path: &Path) -> Result<Potential> {
    let f = std::io::BufReader::new(std::fs::File::open(path)?);
    let mut lines = f.lines();
    let header = lines
        .next()
        .ok_or_else(|| Error::Config("empty potential csv".into()))??;
    let header = header
        .strip_prefix('#')
        .ok_or_else(|| Error::Config("potential csv missing # header".into()))?;
    let parts: Vec<&str> = header.trim().split(',').collect();
    if parts.len() != 6 {
        return Err(Error::Config("potential csv header needs 6 fields".into()));
    }
    let nx: usize = parts[0].trim().parse().map_err(|e| Error::Config(format!("{e}")))?;
    let ny: usize = parts[1].trim().parse().map_err(|e| Error::Config(format!("{e}")))?;
    let nums: Vec<f64> = parts[2..]
        .iter()
        .map(|s| s.trim().parse::<f64>().map_err(|e| Error::Config(format!("{e}"))))
        .collect::<Result<_>>()?;
    let grid = Grid2D::new(nx, ny, nums[0], nums[1], nums[2], nums[3]);
    let mut values = Vec::with_capacity(grid.len());
    for line in lines {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        for tok in line.split(',') {
            values.push(tok.trim().parse::<f64>().map_err(|e| Error::Config(format!("{e}")))?);
        }
    }
    Potential::new(grid, values)
}
