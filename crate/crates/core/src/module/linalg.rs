//! Determinants, ranks and Fitting ideals.

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::module::matrix::ModuleMap;
use crate::poly::{Coeff, Field, Polynomial, RingRef};

/// Fraction-free (Bareiss) elimination on a row-major matrix. Returns the
/// rank and, for square input, the determinant.
fn bareiss(ring: &RingRef, mut m: Vec<Vec<Polynomial>>, cols: usize) -> Result<(usize, Polynomial)> {
    let rows = m.len();
    let mut prev = Polynomial::one(ring);
    let mut rank = 0;
    let mut sign_negative = false;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let pivot = (rank..rows).filter(|&r| !m[r][c].is_zero()).min_by_key(|&r| (m[r][c].len(), r));
        let Some(p) = pivot else { continue };
        if p != rank {
            m.swap(p, rank);
            sign_negative = !sign_negative;
        }
        for i in rank + 1..rows {
            for j in c + 1..cols {
                let num = m[rank][c].mul(&m[i][j]).sub(&m[i][c].mul(&m[rank][j]));
                m[i][j] = num
                    .exact_div(&prev)
                    .ok_or_else(|| Error::CrossCheck("fraction-free elimination hit an inexact division".into()))?;
            }
            m[i][c] = Polynomial::zero(ring);
        }
        prev = m[rank][c].clone();
        rank += 1;
    }
    let det = if rank == rows && rows == cols {
        if sign_negative {
            prev.neg()
        } else {
            prev
        }
    } else {
        Polynomial::zero(ring)
    };
    Ok((rank, det))
}

fn rows_of(map: &ModuleMap, rows: &[usize], cols: &[usize]) -> Vec<Vec<Polynomial>> {
    rows.iter().map(|&i| cols.iter().map(|&j| map.entry(i, j).clone()).collect()).collect()
}

/// Determinant of the submatrix on `rows` × `cols`, computed in the polynomial ring.
pub fn minor(map: &ModuleMap, rows: &[usize], cols: &[usize]) -> Result<Polynomial> {
    assert_eq!(rows.len(), cols.len());
    let ring = map.base().ring();
    if rows.is_empty() {
        return Ok(Polynomial::one(ring));
    }
    Ok(bareiss(ring, rows_of(map, rows, cols), cols.len())?.1)
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// All `r × r` minors, rows outer and columns inner, each in lexicographic order.
pub fn minors(map: &ModuleMap, r: usize) -> Result<Vec<Polynomial>> {
    let mut out = Vec::new();
    for rs in subsets(map.rows(), r) {
        for cs in subsets(map.cols(), r) {
            map.base().ring().limits().check_cancel()?;
            out.push(minor(map, &rs, &cs)?);
        }
    }
    Ok(out)
}

/// Largest `r` with a nonzero `r × r` minor. Requires a domain.
pub fn rank_of_map(map: &ModuleMap) -> Result<usize> {
    let base = map.base();
    if !base.is_domain() {
        return Err(Error::NotDomain);
    }
    if base.is_polynomial() {
        let rows = (0..map.rows()).map(|i| map.row(i)).collect();
        return Ok(bareiss(base.ring(), rows, map.cols())?.0);
    }
    let top = map.rows().min(map.cols());
    for r in (1..=top).rev() {
        for rs in subsets(map.rows(), r) {
            for cs in subsets(map.cols(), r) {
                if !base.is_zero(&minor(map, &rs, &cs)?) {
                    return Ok(r);
                }
            }
        }
    }
    Ok(0)
}

/// Ideal of `r × r` minors, as an ideal of the ambient polynomial ring
/// (together with the quotient ideal when the base is a quotient).
pub fn fitting_ideal(map: &ModuleMap, r: usize) -> Result<Ideal> {
    let top = map.rows().min(map.cols());
    let ring = map.base().ring();
    if r > top {
        return Err(Error::IndexOutOfRange { index: r, valid: format!("0..={top}") });
    }
    if r == 0 {
        return Ok(Ideal::unit(ring));
    }
    let mut gens = minors(map, r)?;
    gens.extend(map.base().quotient_gens().iter().cloned());
    Ideal::new(ring, gens)
}

/// Rank over the coefficient field of a constant matrix given row-major.
pub fn field_rank(field: Field, mut m: Vec<Vec<Coeff>>) -> usize {
    let rows = m.len();
    let cols = m.first().map(|r| r.len()).unwrap_or(0);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !field.is_zero(&m[r][c])) else { continue };
        m.swap(p, rank);
        let inv = field.inv(&m[rank][c]);
        for i in 0..rows {
            if i != rank && !field.is_zero(&m[i][c]) {
                let factor = field.mul(&m[i][c], &inv);
                for j in c..cols {
                    let t = field.mul(&factor, &m[rank][j]);
                    m[i][j] = field.sub(&m[i][j], &t);
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Largest rank of the matrix evaluated at `tries` fixed pseudo-random
/// points of a polynomial base: a lower bound for the rank.
pub fn rank_at_points(map: &ModuleMap, tries: usize) -> usize {
    let ring = map.base().ring();
    let field = ring.field();
    let mut state: u64 = 0x9e37_79b9_7f4a_7c15;
    let mut best = 0;
    for _ in 0..tries {
        let point: Vec<Polynomial> = (0..ring.nvars())
            .map(|_| {
                state = state.wrapping_mul(6_364_136_223_846_793_005).wrapping_add(1_442_695_040_888_963_407);
                Polynomial::constant(ring, field.from_i64(((state >> 33) % 2003) as i64 + 1))
            })
            .collect();
        let m: Vec<Vec<Coeff>> = (0..map.rows())
            .map(|i| (0..map.cols()).map(|j| map.entry(i, j).substitute(&point).constant_term()).collect())
            .collect();
        best = best.max(field_rank(field, m));
        if best == map.rows().min(map.cols()) {
            break;
        }
    }
    best
}

/// The matrix evaluated at the origin.
pub fn at_origin(map: &ModuleMap) -> Vec<Vec<Coeff>> {
    (0..map.rows()).map(|i| (0..map.cols()).map(|j| map.entry(i, j).constant_term()).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::base::BaseRing;
    use crate::poly::{MonomialOrder, Ring};

    fn base(vars: &[&str]) -> crate::module::base::BaseRef {
        BaseRing::polynomial(&Ring::new(Field::Rational, vars, MonomialOrder::GrevLex).unwrap())
    }

    #[test]
    fn ranks() {
        let b = base(&["x", "y", "z"]);
        assert_eq!(rank_of_map(&ModuleMap::zero(&b, 3, 2)).unwrap(), 0);
        assert_eq!(rank_of_map(&ModuleMap::identity(&b, 4)).unwrap(), 4);
        // Koszul phi_2 for (x, y, z)
        let k2 = ModuleMap::parse(&b, &[&["-y", "-z", "0"], &["x", "0", "-z"], &["0", "x", "y"]]).unwrap();
        assert_eq!(rank_of_map(&k2).unwrap(), 2);
        // oracle: the full determinant vanishes and a 2x2 minor is x^2
        assert!(minor(&k2, &[0, 1, 2], &[0, 1, 2]).unwrap().is_zero());
        assert_eq!(minor(&k2, &[1, 2], &[0, 1]).unwrap().to_string(), "x^2");
    }

    #[test]
    fn fitting_examples() {
        let b = base(&["x", "y"]);
        assert!(fitting_ideal(&ModuleMap::identity(&b, 2), 2).unwrap().is_unit().unwrap());
        let row = ModuleMap::parse(&b, &[&["x", "y"]]).unwrap();
        let f = fitting_ideal(&row, 1).unwrap();
        assert!(f.same_ideal(&Ideal::from_strs(b.ring(), &["x", "y"]).unwrap()).unwrap());
        let col = ModuleMap::parse(&b, &[&["y"], &["-x"]]).unwrap();
        let g = fitting_ideal(&col, 1).unwrap();
        assert!(g.same_ideal(&f).unwrap());
        assert!(fitting_ideal(&row, 2).is_err());
        assert!(fitting_ideal(&row, 0).unwrap().is_unit().unwrap());
    }

    #[test]
    fn determinant_sign() {
        let b = base(&["x"]);
        let m = ModuleMap::parse(&b, &[&["0", "1"], &["1", "0"]]).unwrap();
        assert_eq!(minor(&m, &[0, 1], &[0, 1]).unwrap().to_string(), "-1");
        let m = ModuleMap::parse(&b, &[&["x", "1", "0"], &["0", "x", "1"], &["1", "0", "x"]]).unwrap();
        // x^3 + 1 by cofactor expansion along the first row
        assert_eq!(minor(&m, &[0, 1, 2], &[0, 1, 2]).unwrap().to_string(), "x^3 + 1");
    }

    #[test]
    fn subsets_are_lexicographic() {
        assert_eq!(subsets(4, 2), vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(subsets(2, 0), vec![Vec::<usize>::new()]);
    }
}
