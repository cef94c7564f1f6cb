use super::Composition;
use crate::error::{Error, Result};

/// Depth-first stream of the non-negative integer matrices with given row and
/// column sums.
///
/// Cells are filled row by row. A cell value `v` at `(i, j)` is admissible
/// when `v <= min(row_left_i, col_left_j)` and the rest of row `i` can still
/// be absorbed by the columns to the right. With equal totals that single
/// lower bound already makes every partial fill completable, so the search
/// never dead-ends.
pub struct ContingencyMatrices {
    rows: Vec<usize>,
    cols: Vec<usize>,
    cells: Vec<usize>,
    row_left: Vec<usize>,
    col_left: Vec<usize>,
    state: State,
}

#[derive(PartialEq, Eq)]
enum State {
    Fresh,
    Running,
    Done,
}

impl ContingencyMatrices {
    fn width(&self) -> usize {
        self.cols.len()
    }

    fn bounds(&self, idx: usize) -> (usize, usize) {
        let (i, j) = (idx / self.width(), idx % self.width());
        let right: usize = self.col_left[j + 1..].iter().sum();
        let hi = self.row_left[i].min(self.col_left[j]);
        let lo = self.row_left[i].saturating_sub(right);
        (lo, hi)
    }

    fn place(&mut self, idx: usize, v: usize) {
        let (i, j) = (idx / self.width(), idx % self.width());
        self.cells[idx] = v;
        self.row_left[i] -= v;
        self.col_left[j] -= v;
    }

    fn unplace(&mut self, idx: usize) {
        let (i, j) = (idx / self.width(), idx % self.width());
        let v = self.cells[idx];
        self.row_left[i] += v;
        self.col_left[j] += v;
        self.cells[idx] = 0;
    }

    fn fill_minimal(&mut self, from: usize) {
        for idx in from..self.cells.len() {
            let (lo, hi) = self.bounds(idx);
            debug_assert!(lo <= hi);
            self.place(idx, lo);
        }
    }

    fn snapshot(&self) -> Vec<Vec<usize>> {
        if self.width() == 0 {
            return vec![Vec::new(); self.rows.len()];
        }
        self.cells.chunks(self.width()).map(<[usize]>::to_vec).collect()
    }
}

impl Iterator for ContingencyMatrices {
    type Item = Vec<Vec<usize>>;

    fn next(&mut self) -> Option<Self::Item> {
        match self.state {
            State::Done => None,
            State::Fresh => {
                self.state = State::Running;
                self.fill_minimal(0);
                Some(self.snapshot())
            }
            State::Running => {
                for idx in (0..self.cells.len()).rev() {
                    let v = self.cells[idx];
                    self.unplace(idx);
                    let (_, hi) = self.bounds(idx);
                    if v < hi {
                        self.place(idx, v + 1);
                        self.fill_minimal(idx + 1);
                        return Some(self.snapshot());
                    }
                }
                self.state = State::Done;
                None
            }
        }
    }
}

/// Every `r × s` matrix with row sums `rows` and column sums `cols`.
pub fn contingency_matrices(rows: &Composition, cols: &Composition) -> Result<ContingencyMatrices> {
    if rows.weight() != cols.weight() {
        return Err(Error::WeightMismatch {
            left: rows.to_string(),
            left_weight: rows.weight(),
            right: cols.to_string(),
            right_weight: cols.weight(),
        });
    }
    let (r, s) = (rows.parts().len(), cols.parts().len());
    let degenerate = (r == 0 || s == 0) && rows.weight() > 0;
    Ok(ContingencyMatrices {
        rows: rows.parts().to_vec(),
        cols: cols.parts().to_vec(),
        cells: vec![0; r * s],
        row_left: rows.parts().to_vec(),
        col_left: cols.parts().to_vec(),
        state: if degenerate { State::Done } else { State::Fresh },
    })
}
