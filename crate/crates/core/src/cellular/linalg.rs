//! Dense exact linear algebra over a [`Field`], row-vector convention.

use crate::coefficients::{Field, Ring};

pub type Matrix<T> = Vec<Vec<T>>;

pub fn identity<F: Field>(n: usize, one: &F) -> Matrix<F> {
    (0..n).map(|i| (0..n).map(|j| if i == j { one.clone() } else { one.zero_like() }).collect()).collect()
}

pub fn transpose<T: Clone>(m: &Matrix<T>) -> Matrix<T> {
    let cols = m.first().map_or(0, |r| r.len());
    (0..cols).map(|j| m.iter().map(|r| r[j].clone()).collect()).collect()
}

pub fn mat_mul<F: Field>(a: &Matrix<F>, b: &Matrix<F>, zero: &F) -> Matrix<F> {
    let inner = b.len();
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    let mut s = zero.clone();
                    for k in 0..inner {
                        if !row[k].is_zero() && !b[k][j].is_zero() {
                            s = s.add(&row[k].mul(&b[k][j]));
                        }
                    }
                    s
                })
                .collect()
        })
        .collect()
}

/// Product of matrices over a [`Ring`].
pub fn ring_mat_mul<R: Ring>(a: &Matrix<R>, b: &Matrix<R>) -> Matrix<R> {
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    let mut s = R::zero();
                    for (k, x) in row.iter().enumerate() {
                        if !x.is_zero() && !b[k][j].is_zero() {
                            s = s.add(&x.mul(&b[k][j]));
                        }
                    }
                    s
                })
                .collect()
        })
        .collect()
}

pub fn map_matrix<S, T>(m: &Matrix<S>, f: impl Fn(&S) -> T) -> Matrix<T> {
    m.iter().map(|r| r.iter().map(&f).collect()).collect()
}

fn pick_pivot<F: Field>(m: &Matrix<F>, rows: std::ops::Range<usize>, col: usize) -> Option<usize> {
    rows.filter(|&i| !m[i][col].is_zero()).min_by_key(|&i| m[i][col].weight())
}

/// Determinant by Gaussian elimination; `one` fixes the field for the empty matrix.
pub fn det<F: Field>(m: &Matrix<F>, one: &F) -> F {
    let n = m.len();
    let mut a = m.clone();
    let mut d = one.clone();
    for c in 0..n {
        let Some(p) = pick_pivot(&a, c..n, c) else { return one.zero_like() };
        if p != c {
            a.swap(p, c);
            d = d.neg();
        }
        let piv = a[c][c].clone();
        d = d.mul(&piv);
        for r in c + 1..n {
            if a[r][c].is_zero() {
                continue;
            }
            let k = a[r][c].div(&piv);
            for j in c..n {
                if !a[c][j].is_zero() {
                    a[r][j] = a[r][j].sub(&k.mul(&a[c][j]));
                }
            }
        }
    }
    d
}

/// Reduced row echelon form and the pivot columns.
pub fn rref<F: Field>(m: &Matrix<F>) -> (Matrix<F>, Vec<usize>) {
    let mut a = m.clone();
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = pick_pivot(&a, r..rows, c) else { continue };
        a.swap(p, r);
        let inv = a[r][c].one_like().div(&a[r][c]);
        a[r] = a[r].iter().map(|x| x.mul(&inv)).collect();
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let k = a[i][c].clone();
                for j in c..cols {
                    if !a[r][j].is_zero() {
                        a[i][j] = a[i][j].sub(&k.mul(&a[r][j]));
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    (a, pivots)
}

pub fn rank<F: Field>(m: &Matrix<F>) -> usize {
    rref(m).1.len()
}

/// Basis of `{x : x·m = 0}`.
pub fn left_kernel<F: Field>(m: &Matrix<F>, one: &F) -> Matrix<F> {
    let t = transpose(m);
    let rows = m.len();
    let (r, pivots) = rref(&t);
    let free: Vec<usize> = (0..rows).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![one.zero_like(); rows];
            v[fc] = one.clone();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = r[i][fc].neg();
            }
            v
        })
        .collect()
}

pub fn inverse<F: Field>(m: &Matrix<F>, one: &F) -> Option<Matrix<F>> {
    let n = m.len();
    let aug: Matrix<F> = m.iter().zip(identity(n, one)).map(|(r, e)| r.iter().cloned().chain(e).collect()).collect();
    let (r, pivots) = rref(&aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(r.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Row vector times matrix.
pub fn vec_mat<F: Field>(v: &[F], m: &Matrix<F>) -> Vec<F> {
    let cols = m.first().map_or(0, |r| r.len());
    let mut out: Vec<F> = match v.first() {
        Some(x) => vec![x.zero_like(); cols],
        None => return Vec::new(),
    };
    for (x, row) in v.iter().zip(m) {
        if x.is_zero() {
            continue;
        }
        for (o, y) in out.iter_mut().zip(row) {
            if !y.is_zero() {
                *o = o.add(&x.mul(y));
            }
        }
    }
    out
}

/// Some `x` with `x·rows = v`, if one exists.
pub fn solve_left<F: Field>(rows: &Matrix<F>, v: &[F], one: &F) -> Option<Vec<F>> {
    let r = rows.len();
    let mut aug = transpose(rows);
    if aug.is_empty() {
        return v.iter().all(|x| x.is_zero()).then(Vec::new);
    }
    for (row, x) in aug.iter_mut().zip(v) {
        row.push(x.clone());
    }
    let (e, pivots) = rref(&aug);
    if pivots.last() == Some(&r) {
        return None;
    }
    let mut x = vec![one.zero_like(); r];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = e[i][r].clone();
    }
    Some(x)
}

/// `m^e` by repeated squaring.
pub fn mat_pow<F: Field>(m: &Matrix<F>, mut e: usize, one: &F) -> Matrix<F> {
    let zero = one.zero_like();
    let mut acc = identity(m.len(), one);
    let mut b = m.clone();
    while e > 0 {
        if e & 1 == 1 {
            acc = mat_mul(&acc, &b, &zero);
        }
        e >>= 1;
        if e > 0 {
            b = mat_mul(&b, &b, &zero);
        }
    }
    acc
}

/// Row space kept in reduced echelon form.
#[derive(Clone, Debug)]
pub struct Subspace<F: Field> {
    dim: usize,
    rows: Matrix<F>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn new(ambient: usize) -> Self {
        Subspace { dim: ambient, rows: vec![], pivots: vec![] }
    }

    pub fn ambient(&self) -> usize {
        self.dim
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &Matrix<F> {
        &self.rows
    }

    fn reduce(&self, v: &[F]) -> Vec<F> {
        let mut v = v.to_vec();
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            if !v[c].is_zero() {
                let k = v[c].clone();
                for j in 0..self.dim {
                    if !row[j].is_zero() {
                        v[j] = v[j].sub(&k.mul(&row[j]));
                    }
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[F]) -> bool {
        let r = self.reduce(v);
        let Some(c) = (0..self.dim).filter(|&j| !r[j].is_zero()).min_by_key(|&j| (r[j].weight(), j)) else {
            return false;
        };
        let inv = r[c].one_like().div(&r[c]);
        let r: Vec<F> = r.iter().map(|x| x.mul(&inv)).collect();
        for (row, _) in self.rows.iter_mut().zip(&self.pivots) {
            if !row[c].is_zero() {
                let k = row[c].clone();
                for j in 0..self.dim {
                    if !r[j].is_zero() {
                        row[j] = row[j].sub(&k.mul(&r[j]));
                    }
                }
            }
        }
        self.rows.push(r);
        self.pivots.push(c);
        true
    }

    pub fn equals(&self, o: &Subspace<F>) -> bool {
        self.dim() == o.dim() && o.rows.iter().all(|r| self.contains(r))
    }

    /// Closes the space under right multiplication by each matrix.
    /// Inserts `seeds` and closes under `mats`; returns the vectors that raised the dimension.
    pub fn extend_closure(&mut self, seeds: &[Vec<F>], mats: &[Matrix<F>]) -> Vec<Vec<F>> {
        let mut added = Vec::new();
        let mut queue: Vec<Vec<F>> = Vec::new();
        for s in seeds {
            if self.insert(s) {
                added.push(s.clone());
                queue.push(s.clone());
            }
        }
        while let Some(v) = queue.pop() {
            for m in mats {
                let w = vec_mat(&v, m);
                if self.insert(&w) {
                    added.push(w.clone());
                    queue.push(w);
                }
            }
        }
        added
    }

    pub fn close_under(&mut self, mats: &[Matrix<F>]) {
        let zero = match self.rows.first() {
            Some(r) => r[0].zero_like(),
            None => return,
        };
        let mut queue: Vec<Vec<F>> = self.rows.clone();
        while let Some(v) = queue.pop() {
            for m in mats {
                let w = mat_mul(&vec![v.clone()], m, &zero).remove(0);
                if self.insert(&w) {
                    queue.push(w);
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::Num;

    fn m(rows: &[&[i64]]) -> Matrix<Num> {
        rows.iter().map(|r| r.iter().map(|&x| Num::rational(x, 1)).collect()).collect()
    }

    #[test]
    fn det_rank_kernel() {
        let a = m(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        let one = Num::rational(1, 1);
        assert_eq!(det(&a, &one), Num::rational(18, 1));
        let b = m(&[&[1, 2], &[2, 4]]);
        assert_eq!(rank(&b), 1);
        let k = left_kernel(&b, &one);
        assert_eq!(k.len(), 1);
        let z = mat_mul(&k, &b, &one.zero_like());
        assert!(z[0].iter().all(|x| x.is_zero()));
        let inv = inverse(&a, &one).unwrap();
        assert_eq!(mat_mul(&a, &inv, &one.zero_like()), identity(3, &one));
    }

    #[test]
    fn left_solve_and_power() {
        let one = Num::rational(1, 1);
        let a = m(&[&[1, 1], &[0, 1]]);
        assert_eq!(mat_pow(&a, 5, &one), m(&[&[1, 5], &[0, 1]]));
        let x = solve_left(&a, &[Num::rational(2, 1), Num::rational(7, 1)], &one).unwrap();
        assert_eq!(x, vec![Num::rational(2, 1), Num::rational(5, 1)]);
        let b = m(&[&[1, 2], &[2, 4]]);
        assert!(solve_left(&b, &[one.clone(), one.zero_like()], &one).is_none());
    }

    #[test]
    fn subspace_closure() {
        let one = Num::rational(1, 1);
        let mut s = Subspace::new(3);
        assert!(s.insert(&[one.clone(), one.zero_like(), one.zero_like()]));
        let shift = m(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        s.close_under(&[shift]);
        assert_eq!(s.dim(), 3);
    }
}
