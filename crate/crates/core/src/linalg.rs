//! Dense linear algebra over `F_p`.

use crate::poly::PrimeField;

/// Row-major dense matrix with entries in `0..p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<u32>,
}

impl DenseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<u32>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let n = rows.len();
        let data = rows.into_iter().flat_map(|r| {
            assert_eq!(r.len(), cols);
            r
        });
        Self { rows: n, cols, data: data.collect() }
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v;
    }

    /// Reduces in place to reduced row echelon form; returns pivot columns.
    pub fn row_reduce(&mut self, field: PrimeField) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| self.get(r, col) != 0) else {
                continue;
            };
            if p != row {
                for c in 0..self.cols {
                    self.data.swap(p * self.cols + c, row * self.cols + c);
                }
            }
            let inv = field.inv(self.get(row, col));
            for c in col..self.cols {
                let v = field.mul(self.get(row, c), inv);
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r == row {
                    continue;
                }
                let factor = self.get(r, col);
                if factor == 0 {
                    continue;
                }
                for c in col..self.cols {
                    let v = field.sub(self.get(r, c), field.mul(factor, self.get(row, c)));
                    self.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self, field: PrimeField) -> usize {
        let mut m = self.clone();
        m.row_reduce(field).len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_small_matrices() {
        let f = PrimeField::new(5).unwrap();
        let m = DenseMatrix::from_rows(vec![vec![1, 2], vec![2, 4]]);
        assert_eq!(m.rank(f), 1);
        let m = DenseMatrix::from_rows(vec![vec![1, 2], vec![2, 0]]);
        assert_eq!(m.rank(f), 2);
        assert_eq!(DenseMatrix::zeros(3, 2).rank(f), 0);
    }
}
