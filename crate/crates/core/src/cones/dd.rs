//! Double description method over the integers.
//!
//! Input is a list of covectors `a` describing `{x : <a, x> ≥ 0}`. Output is a
//! lineality basis together with the extreme rays of the pointed part.

use num_traits::{Signed, Zero};

use crate::arith::{dot, is_zero_vec, primitive, Int};

#[derive(Clone, Debug, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64).max(1)])
    }

    fn all_below(k: usize, n: usize) -> Self {
        let mut b = Bits::new(n);
        for i in 0..k {
            b.insert(i);
        }
        b
    }

    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn is_superset(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & b == *b)
    }
}

struct Ray {
    v: Vec<Int>,
    zeros: Bits,
}

fn combine(a: &Int, x: &[Int], b: &Int, y: &[Int]) -> Vec<Int> {
    primitive(x.iter().zip(y).map(|(p, q)| a * p - b * q).collect())
}

/// Lineality basis and extreme rays of `{x ∈ Q^dim : <a, x> ≥ 0 for all rows a}`.
pub fn double_description(dim: usize, rows: &[Vec<Int>]) -> (Vec<Vec<Int>>, Vec<Vec<Int>>) {
    let rows: Vec<&Vec<Int>> = rows.iter().filter(|r| !is_zero_vec(r)).collect();
    let nrows = rows.len();
    let mut lin: Vec<Vec<Int>> = (0..dim)
        .map(|i| (0..dim).map(|j| Int::from(i32::from(i == j))).collect())
        .collect();
    let mut rays: Vec<Ray> = Vec::new();
    for (k, a) in rows.iter().enumerate() {
        if let Some(pos) = lin.iter().position(|l| !dot(a, l).is_zero()) {
            let mut l = lin.remove(pos);
            let mut al = dot(a, &l);
            if al.is_negative() {
                l = l.into_iter().map(|x| -x).collect();
                al = -al;
            }
            for x in lin.iter_mut() {
                let ax = dot(a, x);
                if !ax.is_zero() {
                    *x = combine(&al, x, &ax, &l);
                }
            }
            for r in rays.iter_mut() {
                let ar = dot(a, &r.v);
                if !ar.is_zero() {
                    r.v = combine(&al, &r.v, &ar, &l);
                }
                r.zeros.insert(k);
            }
            rays.push(Ray { v: l, zeros: Bits::all_below(k, nrows) });
            continue;
        }
        let vals: Vec<Int> = rays.iter().map(|r| dot(a, &r.v)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_negative()).collect();
        if neg.is_empty() {
            for (r, v) in rays.iter_mut().zip(&vals) {
                if v.is_zero() {
                    r.zeros.insert(k);
                }
            }
            continue;
        }
        let mut fresh = Vec::new();
        for &p in &pos {
            for &n in &neg {
                let common = rays[p].zeros.and(&rays[n].zeros);
                let blocked = rays
                    .iter()
                    .enumerate()
                    .any(|(i, r)| i != p && i != n && r.zeros.is_superset(&common));
                if blocked {
                    continue;
                }
                let mut zeros = common;
                zeros.insert(k);
                let v = combine(&vals[p], &rays[n].v, &vals[n], &rays[p].v);
                fresh.push(Ray { v, zeros });
            }
        }
        let mut kept = Vec::with_capacity(rays.len() + fresh.len());
        for (r, v) in rays.into_iter().zip(&vals) {
            if v.is_positive() {
                kept.push(r);
            } else if v.is_zero() {
                let mut r = r;
                r.zeros.insert(k);
                kept.push(r);
            }
        }
        kept.extend(fresh);
        rays = kept;
    }
    (lin, rays.into_iter().map(|r| r.v).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::to_big;

    fn rows(v: &[&[i64]]) -> Vec<Vec<Int>> {
        v.iter().map(|r| to_big(r)).collect()
    }

    #[test]
    fn quadrant() {
        let (lin, mut rays) = double_description(2, &rows(&[&[1, 0], &[0, 1]]));
        rays.sort();
        assert!(lin.is_empty());
        assert_eq!(rays, rows(&[&[0, 1], &[1, 0]]));
    }

    #[test]
    fn half_plane_keeps_a_line() {
        let (lin, rays) = double_description(2, &rows(&[&[0, 1]]));
        assert_eq!(lin.len(), 1);
        assert_eq!(rays.len(), 1);
        assert!(dot(&rays[0], &to_big(&[0, 1])).is_positive());
    }

    #[test]
    fn opposite_halves_give_a_line() {
        let (lin, rays) = double_description(2, &rows(&[&[1, 0], &[-1, 0]]));
        assert_eq!(lin.len(), 1);
        assert!(rays.is_empty());
    }

    #[test]
    fn square_pyramid_has_four_rays() {
        let r = rows(&[&[1, 0, 1], &[-1, 0, 1], &[0, 1, 1], &[0, -1, 1]]);
        let (lin, rays) = double_description(3, &r);
        assert!(lin.is_empty());
        assert_eq!(rays.len(), 4);
    }
}
