use std::io::Read;
use std::path::Path;

use crate::error::{Error, Result};
use crate::tensor::{Matrix, Vector, ZERO_MATRIX, ZERO_VECTOR};

/// Cell-centered coefficient samples on an `M^n` grid.
///
/// CSV header: `i,j[,k],a11,a12[,a13],a22[,a23,a33],b1,b2[,b3]`, one row per
/// cell in row-major order.
#[derive(Debug, Clone)]
pub struct CoefficientTable {
    dim: usize,
    cells: usize,
    diffusion: Vec<Matrix>,
    drift: Vec<Vector>,
}

fn expected_header(dim: usize) -> Vec<&'static str> {
    if dim == 2 {
        vec!["i", "j", "a11", "a12", "a22", "b1", "b2"]
    } else {
        vec![
            "i", "j", "k", "a11", "a12", "a13", "a22", "a23", "a33", "b1", "b2", "b3",
        ]
    }
}

impl CoefficientTable {
    pub fn from_path(path: impl AsRef<Path>) -> Result<Self> {
        let file = std::fs::File::open(path)?;
        Self::from_reader(file)
    }

    pub fn from_reader(reader: impl Read) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader);
        let header: Vec<String> = rdr.headers()?.iter().map(str::to_owned).collect();
        let dim = match header.len() {
            7 => 2,
            12 => 3,
            n => return Err(Error::Table(format!("unexpected column count {n}"))),
        };
        if header != expected_header(dim) {
            return Err(Error::Table(format!("unexpected header {header:?}")));
        }
        let mut rows = Vec::new();
        for rec in rdr.records() {
            let rec = rec?;
            let vals: Vec<f64> = rec
                .iter()
                .map(|s| s.parse::<f64>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|e| Error::Table(format!("bad number: {e}")))?;
            rows.push(vals);
        }
        let count = rows.len();
        let cells = (count as f64).powf(1.0 / dim as f64).round() as usize;
        if cells == 0 || cells.pow(dim as u32) != count {
            return Err(Error::Table(format!(
                "{count} rows do not form a {dim}-dimensional square grid"
            )));
        }
        let mut diffusion = vec![ZERO_MATRIX; count];
        let mut drift = vec![ZERO_VECTOR; count];
        let mut seen = vec![false; count];
        for row in rows {
            let idx: Vec<usize> = row[..dim].iter().map(|v| *v as usize).collect();
            if row[..dim].iter().any(|v| v.fract() != 0.0 || *v < 0.0)
                || idx.iter().any(|&i| i >= cells)
            {
                return Err(Error::Table(format!("bad cell index {:?}", &row[..dim])));
            }
            let lin = linear_index(&idx, cells);
            if seen[lin] {
                return Err(Error::Table(format!("duplicate cell {idx:?}")));
            }
            seen[lin] = true;
            let v = &row[dim..];
            let mut a = ZERO_MATRIX;
            let mut b = ZERO_VECTOR;
            if dim == 2 {
                a[0][0] = v[0];
                a[0][1] = v[1];
                a[1][0] = v[1];
                a[1][1] = v[2];
                b[0] = v[3];
                b[1] = v[4];
            } else {
                a[0][0] = v[0];
                a[0][1] = v[1];
                a[0][2] = v[2];
                a[1][1] = v[3];
                a[1][2] = v[4];
                a[2][2] = v[5];
                a[1][0] = v[1];
                a[2][0] = v[2];
                a[2][1] = v[4];
                b = [v[6], v[7], v[8]];
            }
            diffusion[lin] = a;
            drift[lin] = b;
        }
        Ok(Self {
            dim,
            cells,
            diffusion,
            drift,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn cells(&self) -> usize {
        self.cells
    }

    pub fn has_drift(&self) -> bool {
        self.drift.iter().flatten().any(|v| *v != 0.0)
    }

    fn cell_of(&self, x: &Vector) -> usize {
        let idx: Vec<usize> = (0..self.dim)
            .map(|d| ((x[d] * self.cells as f64).floor().max(0.0) as usize).min(self.cells - 1))
            .collect();
        linear_index(&idx, self.cells)
    }

    pub fn diffusion_at(&self, x: &Vector) -> Matrix {
        self.diffusion[self.cell_of(x)]
    }

    pub fn drift_at(&self, x: &Vector) -> Vector {
        self.drift[self.cell_of(x)]
    }
}

// row-major: first index slowest
fn linear_index(idx: &[usize], cells: usize) -> usize {
    idx.iter().fold(0, |acc, &i| acc * cells + i)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_two_by_two_table() {
        let csv = "i,j,a11,a12,a22,b1,b2\n\
                   0,0,1,0,1,0,0\n\
                   0,1,2,0,2,0,0\n\
                   1,0,3,0.5,3,0.1,0\n\
                   1,1,4,0,4,0,0\n";
        let t = CoefficientTable::from_reader(csv.as_bytes()).unwrap();
        assert_eq!(t.dim(), 2);
        assert_eq!(t.cells(), 2);
        assert!(t.has_drift());
        // i indexes x1, j indexes x2
        assert_eq!(t.diffusion_at(&[0.1, 0.9, 0.0])[0][0], 2.0);
        assert_eq!(t.diffusion_at(&[0.9, 0.1, 0.0])[0][1], 0.5);
        assert_eq!(t.drift_at(&[0.9, 0.1, 0.0])[0], 0.1);
    }

    #[test]
    fn rejects_bad_header_and_shape() {
        assert!(CoefficientTable::from_reader("i,j,a,b\n".as_bytes()).is_err());
        let csv = "i,j,a11,a12,a22,b1,b2\n0,0,1,0,1,0,0\n0,1,1,0,1,0,0\n";
        assert!(CoefficientTable::from_reader(csv.as_bytes()).is_err());
    }
}
