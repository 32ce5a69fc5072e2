//! Boundary operators of the rack/quandle chain complexes.

use std::collections::BTreeMap;

use super::quandle::{Quandle, XSet};

/// A formal integer combination of generator tuples.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Chain {
    pub terms: BTreeMap<Vec<u8>, i64>,
}

impl Chain {
    pub fn zero() -> Self {
        Chain::default()
    }

    pub fn add(&mut self, tuple: Vec<u8>, coeff: i64) {
        if coeff == 0 {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(tuple) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Boundary of a single generator.
///
/// Without an X-set, `gen = (x1, .., xn)` and the sum runs over `i = 2..=n`;
/// with an X-set, `gen = (y, x1, .., xn)` and the sum runs over `i = 1..=n`.
/// Returns zero for `n <= 1`.
pub fn boundary(q: &Quandle, xset: Option<&XSet>, gen: &[u8]) -> Chain {
    let mut out = Chain::zero();
    match xset {
        None => {
            let n = gen.len();
            if n <= 1 {
                return out;
            }
            for i in 2..=n {
                let xi = gen[i - 1];
                let sign = if i % 2 == 0 { 1 } else { -1 };
                let mut omit: Vec<u8> = Vec::with_capacity(n - 1);
                omit.extend_from_slice(&gen[..i - 1]);
                omit.extend_from_slice(&gen[i..]);
                let mut acted: Vec<u8> = Vec::with_capacity(n - 1);
                acted.extend(gen[..i - 1].iter().map(|&x| q.op(x, xi)));
                acted.extend_from_slice(&gen[i..]);
                out.add(omit, sign);
                out.add(acted, -sign);
            }
        }
        Some(y) => {
            let n = gen.len() - 1;
            if n <= 1 {
                return out;
            }
            let (y0, xs) = (gen[0], &gen[1..]);
            for i in 1..=n {
                let xi = xs[i - 1];
                let sign = if i % 2 == 0 { 1 } else { -1 };
                let mut omit: Vec<u8> = Vec::with_capacity(n);
                omit.push(y0);
                omit.extend_from_slice(&xs[..i - 1]);
                omit.extend_from_slice(&xs[i..]);
                let mut acted: Vec<u8> = Vec::with_capacity(n);
                acted.push(y.act(y0, xi));
                acted.extend(xs[..i - 1].iter().map(|&x| q.op(x, xi)));
                acted.extend_from_slice(&xs[i..]);
                out.add(omit, sign);
                out.add(acted, -sign);
            }
        }
    }
    out
}

/// Boundary extended linearly to chains.
pub fn boundary_chain(q: &Quandle, xset: Option<&XSet>, c: &Chain) -> Chain {
    let mut out = Chain::zero();
    for (t, &coeff) in &c.terms {
        for (u, &c2) in &boundary(q, xset, t).terms {
            out.add(u.clone(), coeff * c2);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boundary_of_pair_r3() {
        // d2(0,1) = (0) - (0*1) = (0) - (2)
        let q = Quandle::dihedral(3);
        let b = boundary(&q, None, &[0, 1]);
        assert_eq!(b.terms.get(&vec![0u8]).copied(), Some(1));
        assert_eq!(b.terms.get(&vec![2u8]).copied(), Some(-1));
        assert_eq!(b.terms.len(), 2);
    }

    #[test]
    fn boundary_vanishes_low_degree() {
        let q = Quandle::dihedral(3);
        assert!(boundary(&q, None, &[1]).is_zero());
        let y = XSet::from_quandle(&q);
        assert!(boundary(&q, Some(&y), &[0, 1]).is_zero());
    }

    #[test]
    fn xset_boundary_of_pair() {
        // d2(y,x1,x2) = -[(y,x2) - (y*x1,x2)] + [(y,x1) - (y*x2,x1*x2)]
        let q = Quandle::dihedral(3);
        let ys = XSet::from_quandle(&q);
        let (y, x1, x2) = (0u8, 1u8, 2u8);
        let b = boundary(&q, Some(&ys), &[y, x1, x2]);
        let mut expect = Chain::zero();
        expect.add(vec![y, x2], -1);
        expect.add(vec![ys.act(y, x1), x2], 1);
        expect.add(vec![y, x1], 1);
        expect.add(vec![ys.act(y, x2), q.op(x1, x2)], -1);
        assert_eq!(b, expect);
    }

    #[test]
    fn boundary_squares_to_zero() {
        for q in [Quandle::dihedral(3), Quandle::dihedral(4), Quandle::tetrahedral()] {
            let ys = XSet::from_quandle(&q);
            for n in 2..=4usize {
                // plain
                for idx in 0..q.size().pow(n as u32) {
                    let mut t = Vec::with_capacity(n);
                    let mut k = idx;
                    for _ in 0..n {
                        t.push((k % q.size()) as u8);
                        k /= q.size();
                    }
                    let b = boundary(&q, None, &t);
                    assert!(boundary_chain(&q, None, &b).is_zero(), "dd != 0 at {t:?}");
                    let mut ty = vec![0u8];
                    ty.extend_from_slice(&t);
                    let b = boundary(&q, Some(&ys), &ty);
                    assert!(boundary_chain(&q, Some(&ys), &b).is_zero(), "dd != 0 at {ty:?}");
                }
            }
        }
    }
}
