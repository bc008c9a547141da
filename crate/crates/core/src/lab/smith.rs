//! Dense integer matrices and Smith normal form.
//!
//! Elimination runs in `i128` with checked arithmetic; anything that does not
//! fit is reported as [`Error::Overflow`] rather than wrapping.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::field("rows", "rows have different lengths"));
        }
        Ok(IntMatrix {
            rows: rows.len(),
            cols,
            data: rows.concat(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn column(&self, c: usize) -> Vec<i64> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        self.data.chunks(self.cols.max(1)).take(self.rows).map(<[i64]>::to_vec).collect()
    }

    /// Builds a matrix from its columns (all of length `rows`).
    pub fn from_columns(rows: usize, columns: &[Vec<i64>]) -> Self {
        let mut m = IntMatrix::zeros(rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (r, &v) in col.iter().enumerate() {
                m.set(r, c, v);
            }
        }
        m
    }

    /// `[self | other]`.
    pub fn hcat(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.rows, other.rows);
        let mut m = IntMatrix::zeros(self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.set(r, c, self.get(r, c));
            }
            for c in 0..other.cols {
                m.set(r, self.cols + c, other.get(r, c));
            }
        }
        m
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::field(
                "matrix",
                format!("cannot multiply {}x{} by {}x{}", self.rows, self.cols, other.rows, other.cols),
            ));
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let cur = out.get(i, j);
                    let v = a
                        .checked_mul(other.get(k, j))
                        .and_then(|p| p.checked_add(cur))
                        .ok_or(Error::Overflow("matrix product"))?;
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// `U · A · V = D` with `D` diagonal, `d_1 | d_2 | …`, all positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Smith {
    /// The nonzero diagonal entries; their count is the rank.
    pub diagonal: Vec<i64>,
    pub u: Option<IntMatrix>,
    pub v: Option<IntMatrix>,
}

impl Smith {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }
}

struct Work {
    rows: usize,
    cols: usize,
    a: Vec<i128>,
    u: Option<Vec<i128>>,
    v: Option<Vec<i128>>,
}

fn ck(x: Option<i128>) -> Result<i128> {
    x.ok_or(Error::Overflow("Smith normal form"))
}

impl Work {
    #[inline]
    fn at(&self, r: usize, c: usize) -> i128 {
        self.a[r * self.cols + c]
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.a.swap(i * self.cols + c, j * self.cols + c);
        }
        if let Some(u) = &mut self.u {
            for c in 0..self.rows {
                u.swap(i * self.rows + c, j * self.rows + c);
            }
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for r in 0..self.rows {
            self.a.swap(r * self.cols + i, r * self.cols + j);
        }
        if let Some(v) = &mut self.v {
            for r in 0..self.cols {
                v.swap(r * self.cols + i, r * self.cols + j);
            }
        }
    }

    /// row_i += q · row_j
    fn add_row(&mut self, i: usize, j: usize, q: i128, from: usize) -> Result<()> {
        for c in from..self.cols {
            let x = self.a[j * self.cols + c];
            if x != 0 {
                let cell = &mut self.a[i * self.cols + c];
                *cell = ck(ck(q.checked_mul(x))?.checked_add(*cell))?;
            }
        }
        if let Some(u) = &mut self.u {
            for c in 0..self.rows {
                let x = u[j * self.rows + c];
                if x != 0 {
                    let cell = &mut u[i * self.rows + c];
                    *cell = ck(ck(q.checked_mul(x))?.checked_add(*cell))?;
                }
            }
        }
        Ok(())
    }

    /// col_i += q · col_j
    fn add_col(&mut self, i: usize, j: usize, q: i128, from: usize) -> Result<()> {
        for r in from..self.rows {
            let x = self.a[r * self.cols + j];
            if x != 0 {
                let cell = &mut self.a[r * self.cols + i];
                *cell = ck(ck(q.checked_mul(x))?.checked_add(*cell))?;
            }
        }
        if let Some(v) = &mut self.v {
            for r in 0..self.cols {
                let x = v[r * self.cols + j];
                if x != 0 {
                    let cell = &mut v[r * self.cols + i];
                    *cell = ck(ck(q.checked_mul(x))?.checked_add(*cell))?;
                }
            }
        }
        Ok(())
    }

    fn negate_row(&mut self, i: usize) {
        for c in 0..self.cols {
            self.a[i * self.cols + c] = -self.a[i * self.cols + c];
        }
        if let Some(u) = &mut self.u {
            for c in 0..self.rows {
                u[i * self.rows + c] = -u[i * self.rows + c];
            }
        }
    }

    /// Smallest nonzero |entry| in the trailing block, ties broken by position.
    fn pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(i128, usize, usize)> = None;
        for r in t..self.rows {
            for c in t..self.cols {
                let x = self.at(r, c).abs();
                if x != 0 && best.map_or(true, |(b, _, _)| x < b) {
                    best = Some((x, r, c));
                    if x == 1 {
                        return Some((r, c));
                    }
                }
            }
        }
        best.map(|(_, r, c)| (r, c))
    }

    fn step(&mut self, t: usize) -> Result<bool> {
        let Some((r, c)) = self.pivot(t) else {
            return Ok(false);
        };
        self.swap_rows(t, r);
        self.swap_cols(t, c);
        loop {
            let p = self.at(t, t);
            let mut dirty = false;
            for i in t + 1..self.rows {
                let x = self.at(i, t);
                if x != 0 {
                    self.add_row(i, t, -x.div_euclid(p), t)?;
                    if self.at(i, t) != 0 {
                        dirty = true;
                    }
                }
            }
            for j in t + 1..self.cols {
                let x = self.at(t, j);
                if x != 0 {
                    self.add_col(j, t, -x.div_euclid(p), t)?;
                    if self.at(t, j) != 0 {
                        dirty = true;
                    }
                }
            }
            if dirty {
                // bring the smallest remainder in row/column t to the pivot
                let mut best = (self.at(t, t).abs(), t, t);
                for i in t + 1..self.rows {
                    let x = self.at(i, t).abs();
                    if x != 0 && x < best.0 {
                        best = (x, i, t);
                    }
                }
                for j in t + 1..self.cols {
                    let x = self.at(t, j).abs();
                    if x != 0 && x < best.0 {
                        best = (x, t, j);
                    }
                }
                self.swap_rows(t, best.1);
                self.swap_cols(t, best.2);
                continue;
            }
            // divisibility: p must divide the trailing block
            let mut offender = None;
            'outer: for i in t + 1..self.rows {
                for j in t + 1..self.cols {
                    if self.at(i, j) % p != 0 {
                        offender = Some(i);
                        break 'outer;
                    }
                }
            }
            match offender {
                Some(i) => self.add_row(t, i, 1, t)?,
                None => break,
            }
        }
        if self.at(t, t) < 0 {
            self.negate_row(t);
        }
        Ok(true)
    }
}

fn narrow(v: Vec<i128>, rows: usize, cols: usize) -> Result<IntMatrix> {
    let data = v
        .into_iter()
        .map(|x| i64::try_from(x).map_err(|_| Error::Overflow("Smith normal form")))
        .collect::<Result<Vec<_>>>()?;
    Ok(IntMatrix { rows, cols, data })
}

/// Smith normal form; `transforms` also returns unimodular `U`, `V` with `U·A·V = D`.
pub fn smith_normal_form(m: &IntMatrix, transforms: bool) -> Result<Smith> {
    let (rows, cols) = (m.rows, m.cols);
    let ident = |n: usize| {
        let mut v = vec![0i128; n * n];
        for i in 0..n {
            v[i * n + i] = 1;
        }
        v
    };
    let mut w = Work {
        rows,
        cols,
        a: m.data.iter().map(|&x| x as i128).collect(),
        u: transforms.then(|| ident(rows)),
        v: transforms.then(|| ident(cols)),
    };
    let mut diagonal = Vec::new();
    for t in 0..rows.min(cols) {
        if !w.step(t)? {
            break;
        }
        diagonal.push(i64::try_from(w.at(t, t)).map_err(|_| Error::Overflow("Smith normal form"))?);
    }
    let u = w.u.take().map(|u| narrow(u, rows, rows)).transpose()?;
    let v = w.v.take().map(|v| narrow(v, cols, cols)).transpose()?;
    Ok(Smith { diagonal, u, v })
}
