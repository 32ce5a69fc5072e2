//! Finitely generated abelian coefficient groups, written multiplicatively.
//!
//! A group is `Z^r x Z/m1 x ... x Z/mk`; an element is its exponent vector.
//! Torsion coordinates are kept normalized to `[0, m)`.

use std::fmt;
use std::sync::Arc;

use crate::error::AlgebraError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffGroup {
    pub free_rank: usize,
    pub torsion: Vec<u32>,
    /// One display name per generator, free generators first.
    pub gen_names: Vec<String>,
}

impl CoeffGroup {
    pub fn new(free_rank: usize, torsion: Vec<u32>) -> Arc<Self> {
        assert!(torsion.iter().all(|&m| m >= 2), "torsion moduli must be >= 2");
        let gen_names = default_names(free_rank, torsion.len());
        Arc::new(CoeffGroup { free_rank, torsion, gen_names })
    }

    pub fn with_names(free_rank: usize, torsion: Vec<u32>, names: Vec<String>) -> Arc<Self> {
        assert_eq!(names.len(), free_rank + torsion.len());
        Arc::new(CoeffGroup { free_rank, torsion, gen_names: names })
    }

    /// The cyclic group Z/m = <u>.
    pub fn cyclic(m: u32) -> Arc<Self> {
        Self::new(0, vec![m])
    }

    /// The infinite cyclic group Z = <t>.
    pub fn infinite_cyclic() -> Arc<Self> {
        Self::new(1, vec![])
    }

    pub fn rank(&self) -> usize {
        self.free_rank + self.torsion.len()
    }

    pub fn identity(&self) -> GroupElem {
        GroupElem { exps: vec![0; self.rank()] }
    }

    /// The i-th generator (free generators first, then torsion).
    pub fn generator(&self, i: usize) -> GroupElem {
        let mut exps = vec![0; self.rank()];
        exps[i] = 1;
        GroupElem { exps }
    }

    pub fn normalize(&self, exps: &mut [i64]) {
        for (k, &m) in self.torsion.iter().enumerate() {
            let i = self.free_rank + k;
            exps[i] = exps[i].rem_euclid(m as i64);
        }
    }

    pub fn elem(&self, exps: Vec<i64>) -> GroupElem {
        assert_eq!(exps.len(), self.rank());
        let mut exps = exps;
        self.normalize(&mut exps);
        GroupElem { exps }
    }

    pub fn mul(&self, a: &GroupElem, b: &GroupElem) -> GroupElem {
        let mut exps: Vec<i64> = a.exps.iter().zip(&b.exps).map(|(x, y)| x + y).collect();
        self.normalize(&mut exps);
        GroupElem { exps }
    }

    pub fn inv(&self, a: &GroupElem) -> GroupElem {
        let mut exps: Vec<i64> = a.exps.iter().map(|x| -x).collect();
        self.normalize(&mut exps);
        GroupElem { exps }
    }

    pub fn pow(&self, a: &GroupElem, n: i64) -> GroupElem {
        let mut exps: Vec<i64> = a.exps.iter().map(|x| x * n).collect();
        self.normalize(&mut exps);
        GroupElem { exps }
    }

    /// Formats an element like `u`, `t^-2`, `u.v^2`, or `1` for the identity.
    pub fn format_elem(&self, a: &GroupElem) -> String {
        if a.is_identity() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (i, &e) in a.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if e == 1 {
                parts.push(self.gen_names[i].clone());
            } else {
                parts.push(format!("{}^{}", self.gen_names[i], e));
            }
        }
        parts.join(".")
    }

    /// Parses a single group element written as in `format_elem`.
    pub fn parse_elem(&self, s: &str) -> Result<GroupElem, AlgebraError> {
        let s = s.trim();
        let mut exps = vec![0i64; self.rank()];
        if s == "1" {
            return Ok(GroupElem { exps });
        }
        for part in s.split('.') {
            let (name, exp) = match part.split_once('^') {
                Some((n, e)) => {
                    let e: i64 = e
                        .parse()
                        .map_err(|_| AlgebraError::Parse(format!("bad exponent in '{part}'")))?;
                    (n, e)
                }
                None => (part, 1),
            };
            let idx = self
                .gen_names
                .iter()
                .position(|g| g == name)
                .ok_or_else(|| AlgebraError::Parse(format!("unknown generator '{name}'")))?;
            exps[idx] += exp;
        }
        self.normalize(&mut exps);
        Ok(GroupElem { exps })
    }
}

fn default_names(free_rank: usize, torsion_count: usize) -> Vec<String> {
    let free = ["t", "s", "r", "q", "p"];
    let tors = ["u", "v", "w", "a", "b"];
    let mut names = Vec::with_capacity(free_rank + torsion_count);
    for i in 0..free_rank {
        names.push(free.get(i).map(|s| s.to_string()).unwrap_or_else(|| format!("t{i}")));
    }
    for i in 0..torsion_count {
        names.push(tors.get(i).map(|s| s.to_string()).unwrap_or_else(|| format!("u{i}")));
    }
    names
}

/// An element of a [`CoeffGroup`], stored as a normalized exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElem {
    exps: Vec<i64>,
}

impl GroupElem {
    pub fn exps(&self) -> &[i64] {
        &self.exps
    }

    pub fn is_identity(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Display/sort key: identity first, then by (|e|, sign) per coordinate,
    /// so positive powers print before negative ones of the same magnitude.
    pub fn display_key(&self) -> Vec<(u64, bool)> {
        self.exps.iter().map(|&e| (e.unsigned_abs(), e < 0)).collect()
    }
}

impl fmt::Display for GroupElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn torsion_normalization() {
        let g = CoeffGroup::cyclic(3);
        let u = g.generator(0);
        let u3 = g.pow(&u, 3);
        assert!(u3.is_identity());
        assert_eq!(g.pow(&u, -1), g.pow(&u, 2));
    }

    #[test]
    fn infinite_cyclic_powers() {
        let g = CoeffGroup::infinite_cyclic();
        let t = g.generator(0);
        let t2 = g.mul(&t, &t);
        assert_eq!(g.format_elem(&t2), "t^2");
        assert_eq!(g.format_elem(&g.inv(&t2)), "t^-2");
        assert_eq!(g.format_elem(&g.identity()), "1");
    }

    #[test]
    fn parse_round_trip() {
        let g = CoeffGroup::new(1, vec![4]);
        for exps in [vec![0, 0], vec![3, 2], vec![-2, 1]] {
            let e = g.elem(exps);
            let s = g.format_elem(&e);
            assert_eq!(g.parse_elem(&s).unwrap(), e);
        }
    }
}
