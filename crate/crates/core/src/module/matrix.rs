//! Matrices over a base ring, stored by columns: column `j` is the image of
//! the `j`-th source basis vector.

use std::fmt;

use crate::error::{Error, Result};
use crate::module::base::{BaseRef, BaseRing};
use crate::poly::{parse_polynomial, Polynomial};

#[derive(Debug, Clone)]
pub struct ModuleMap {
    base: BaseRef,
    rows: usize,
    columns: Vec<Vec<Polynomial>>,
}

impl PartialEq for ModuleMap {
    fn eq(&self, other: &Self) -> bool {
        BaseRing::same(&self.base, &other.base) && self.rows == other.rows && self.columns == other.columns
    }
}

impl ModuleMap {
    pub fn from_columns(base: &BaseRef, rows: usize, columns: Vec<Vec<Polynomial>>) -> Result<ModuleMap> {
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::DimensionMismatch(format!("column {j} has {} entries, expected {rows}", c.len())));
            }
            for p in c {
                p.ensure_ring(base.ring())?;
            }
        }
        Ok(ModuleMap { base: base.clone(), rows, columns })
    }

    pub fn from_rows(base: &BaseRef, rows: Vec<Vec<Polynomial>>) -> Result<ModuleMap> {
        let cols = rows.first().map(|r| r.len()).unwrap_or(0);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("rows of unequal length".into()));
        }
        let columns = (0..cols).map(|j| rows.iter().map(|r| r[j].clone()).collect()).collect();
        ModuleMap::from_columns(base, rows.len(), columns)
    }

    /// Parses a row-major matrix of polynomial strings.
    pub fn parse(base: &BaseRef, rows: &[&[&str]]) -> Result<ModuleMap> {
        let parsed = rows
            .iter()
            .map(|r| r.iter().map(|s| parse_polynomial(s, base.ring())).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        ModuleMap::from_rows(base, parsed)
    }

    pub fn zero(base: &BaseRef, rows: usize, cols: usize) -> ModuleMap {
        let z = Polynomial::zero(base.ring());
        ModuleMap { base: base.clone(), rows, columns: vec![vec![z; rows]; cols] }
    }

    pub fn identity(base: &BaseRef, n: usize) -> ModuleMap {
        let mut m = ModuleMap::zero(base, n, n);
        for i in 0..n {
            m.columns[i][i] = Polynomial::one(base.ring());
        }
        m
    }

    pub fn base(&self) -> &BaseRef {
        &self.base
    }

    /// Target rank.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Source rank.
    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.columns[j][i]
    }

    pub fn column(&self, j: usize) -> &[Polynomial] {
        &self.columns[j]
    }

    pub fn columns(&self) -> &[Vec<Polynomial>] {
        &self.columns
    }

    pub fn into_columns(self) -> Vec<Vec<Polynomial>> {
        self.columns
    }

    pub fn row(&self, i: usize) -> Vec<Polynomial> {
        self.columns.iter().map(|c| c[i].clone()).collect()
    }

    /// Entries replaced by their normal forms modulo the quotient ideal.
    pub fn reduced(&self) -> ModuleMap {
        let columns = self.columns.iter().map(|c| c.iter().map(|p| self.base.reduce(p)).collect()).collect();
        ModuleMap { base: self.base.clone(), rows: self.rows, columns }
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(|c| c.iter().all(|p| self.base.is_zero(p)))
    }

    /// Drops columns that vanish modulo the quotient ideal.
    pub fn without_zero_columns(&self) -> ModuleMap {
        let columns =
            self.columns.iter().filter(|c| !c.iter().all(|p| self.base.is_zero(p))).cloned().collect();
        ModuleMap { base: self.base.clone(), rows: self.rows, columns }
    }

    pub fn transpose(&self) -> ModuleMap {
        let columns = (0..self.rows).map(|i| self.row(i)).collect();
        ModuleMap { base: self.base.clone(), rows: self.cols(), columns }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &ModuleMap) -> Result<ModuleMap> {
        if self.cols() != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot compose {}x{} after {}x{}",
                self.rows,
                self.cols(),
                other.rows,
                other.cols()
            )));
        }
        let columns = other.columns.iter().map(|c| self.apply(c)).collect();
        Ok(ModuleMap { base: self.base.clone(), rows: self.rows, columns })
    }

    /// Image of a source vector.
    pub fn apply(&self, v: &[Polynomial]) -> Vec<Polynomial> {
        debug_assert_eq!(v.len(), self.cols());
        let mut out = vec![Polynomial::zero(self.base.ring()); self.rows];
        for (j, a) in v.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (i, e) in self.columns[j].iter().enumerate() {
                if !e.is_zero() {
                    out[i] = out[i].add(&a.mul(e));
                }
            }
        }
        out
    }

    /// Columns of `self` followed by columns of `other`.
    pub fn hstack(&self, other: &ModuleMap) -> Result<ModuleMap> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch(format!("hstack of {} and {} rows", self.rows, other.rows)));
        }
        let mut columns = self.columns.clone();
        columns.extend(other.columns.iter().cloned());
        Ok(ModuleMap { base: self.base.clone(), rows: self.rows, columns })
    }

    /// Kronecker product: entry `((i,k),(j,l)) = self[i][j] * other[k][l]`,
    /// indexed `i * other.rows + k`, `j * other.cols + l`.
    pub fn kronecker(&self, other: &ModuleMap) -> ModuleMap {
        let (r, s) = (other.rows, other.cols());
        let zero = Polynomial::zero(self.base.ring());
        let mut columns = vec![vec![zero; self.rows * r]; self.cols() * s];
        for j in 0..self.cols() {
            for i in 0..self.rows {
                let a = &self.columns[j][i];
                if a.is_zero() {
                    continue;
                }
                for l in 0..s {
                    for k in 0..r {
                        let b = &other.columns[l][k];
                        if !b.is_zero() {
                            columns[j * s + l][i * r + k] = a.mul(b);
                        }
                    }
                }
            }
        }
        ModuleMap { base: self.base.clone(), rows: self.rows * r, columns }
    }

    /// Column-wise selection.
    pub fn select_columns(&self, cols: &[usize]) -> ModuleMap {
        ModuleMap { base: self.base.clone(), rows: self.rows, columns: cols.iter().map(|&j| self.columns[j].clone()).collect() }
    }

    /// Same entries over another base with the same polynomial ring.
    pub fn with_base(&self, base: &BaseRef) -> ModuleMap {
        ModuleMap { base: base.clone(), rows: self.rows, columns: self.columns.clone() }
    }

    /// Maximum of `deg(entry_i) + shifts[i]` over nonzero entries of column `j`.
    pub fn column_degree(&self, j: usize, shifts: &[i64]) -> i64 {
        self.columns[j]
            .iter()
            .zip(shifts)
            .filter_map(|(p, s)| p.total_degree().map(|d| d as i64 + s))
            .max()
            .unwrap_or(0)
    }
}

impl fmt::Display for ModuleMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.columns[j][i])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}
