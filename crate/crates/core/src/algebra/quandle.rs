//! Finite quandles, good involutions, and X-sets, all given by tables.

use crate::error::{AlgebraError, Axiom};

/// A finite quandle on `{0, .., n-1}` with its operation table.
/// `inv_table` holds the inverse operation `x * ybar`, derived on validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quandle {
    n: usize,
    table: Vec<u8>,
    inv_table: Vec<u8>,
    /// Optional display names for elements, e.g. `e1 e2 e1' e2'`.
    pub names: Option<Vec<String>>,
}

impl Quandle {
    /// Validates the three quandle axioms and derives the inverse table.
    pub fn from_table(rows: Vec<Vec<u8>>) -> Result<Self, AlgebraError> {
        let n = rows.len();
        assert!(n > 0 && n <= 128, "quandle size out of supported range");
        let mut table = vec![0u8; n * n];
        for (x, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(AlgebraError::BadTable { row: x, len: row.len(), expected: n });
            }
            for (y, &v) in row.iter().enumerate() {
                if (v as usize) >= n {
                    return Err(AlgebraError::EntryOutOfRange {
                        value: v as usize,
                        size: n,
                        at: vec![x, y],
                    });
                }
                table[x * n + y] = v;
            }
        }
        // (i) x*x = x
        for x in 0..n {
            if table[x * n + x] as usize != x {
                return Err(AlgebraError::AxiomViolation {
                    axiom: Axiom::Idempotence,
                    witness: vec![x as u8],
                });
            }
        }
        // (ii) x -> x*y is a bijection for each y; build the inverse
        let mut inv_table = vec![0u8; n * n];
        for y in 0..n {
            let mut seen = vec![false; n];
            for x in 0..n {
                let v = table[x * n + y] as usize;
                if seen[v] {
                    return Err(AlgebraError::AxiomViolation {
                        axiom: Axiom::RightInvertibility,
                        witness: vec![y as u8],
                    });
                }
                seen[v] = true;
                inv_table[v * n + y] = x as u8;
            }
        }
        // (iii) (x*y)*z = (x*z)*(y*z)
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let lhs = table[table[x * n + y] as usize * n + z];
                    let rhs = table
                        [table[x * n + z] as usize * n + table[y * n + z] as usize];
                    if lhs != rhs {
                        return Err(AlgebraError::AxiomViolation {
                            axiom: Axiom::SelfDistributivity,
                            witness: vec![x as u8, y as u8, z as u8],
                        });
                    }
                }
            }
        }
        Ok(Quandle { n, table, inv_table, names: None })
    }

    /// The dihedral quandle `R_n`: `i * j = 2j - i (mod n)`.
    pub fn dihedral(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (((2 * j + n) as i64 - i as i64).rem_euclid(n as i64)) as u8)
                    .collect()
            })
            .collect();
        Self::from_table(rows).expect("dihedral tables are quandles")
    }

    /// The 4-element tetrahedral quandle.
    pub fn tetrahedral() -> Self {
        let rows = vec![
            vec![0, 2, 3, 1],
            vec![3, 1, 0, 2],
            vec![1, 3, 2, 0],
            vec![2, 0, 1, 3],
        ];
        Self::from_table(rows).expect("tetrahedral table is a quandle")
    }

    /// The trivial quandle of size n: `x * y = x`.
    pub fn trivial(n: usize) -> Self {
        let rows = (0..n).map(|i| vec![i as u8; n]).collect();
        Self::from_table(rows).expect("trivial tables are quandles")
    }

    /// The conjugation quandle of a group given by its multiplication table:
    /// `x * y = y^-1 x y`.
    pub fn conjugation(mul: &[Vec<u8>]) -> Result<Self, AlgebraError> {
        let n = mul.len();
        let mut inv = vec![0u8; n];
        // identity = the unique e with e*x = x for all x
        let e = (0..n)
            .find(|&e| (0..n).all(|x| mul[e][x] as usize == x))
            .expect("not a group table: no identity");
        for x in 0..n {
            let xi = (0..n)
                .find(|&y| mul[x][y] as usize == e)
                .expect("not a group table: no inverse");
            inv[x] = xi as u8;
        }
        let rows = (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| {
                        let yi = inv[y] as usize;
                        mul[mul[yi][x] as usize][y]
                    })
                    .collect()
            })
            .collect();
        Self::from_table(rows)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> impl Iterator<Item = u8> {
        0..self.n as u8
    }

    /// `x * y`
    #[inline]
    pub fn op(&self, x: u8, y: u8) -> u8 {
        self.table[x as usize * self.n + y as usize]
    }

    /// `x * ybar`, the unique `u` with `u * y = x`.
    #[inline]
    pub fn inv_op(&self, x: u8, y: u8) -> u8 {
        self.inv_table[x as usize * self.n + y as usize]
    }

    pub fn name_of(&self, x: u8) -> String {
        match &self.names {
            Some(ns) => ns[x as usize].clone(),
            None => x.to_string(),
        }
    }
}

/// A quandle with a good involution `rho`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricQuandle {
    pub quandle: Quandle,
    rho: Vec<u8>,
}

impl SymmetricQuandle {
    /// Checks that `rho` is an involution with `rho(x*y) = rho(x)*y` and
    /// `x*rho(y) = x*ybar`.
    pub fn new(quandle: Quandle, rho: Vec<u8>) -> Result<Self, AlgebraError> {
        let n = quandle.size();
        assert_eq!(rho.len(), n, "rho length must match quandle size");
        for x in 0..n as u8 {
            let y = rho[rho[x as usize] as usize];
            if y != x {
                return Err(AlgebraError::NotInvolution { x, y });
            }
        }
        for x in 0..n as u8 {
            for y in 0..n as u8 {
                if rho[quandle.op(x, y) as usize] != quandle.op(rho[x as usize], y)
                    || quandle.op(x, rho[y as usize]) != quandle.inv_op(x, y)
                {
                    return Err(AlgebraError::NotGood { x, y });
                }
            }
        }
        Ok(SymmetricQuandle { quandle, rho })
    }

    /// `R_4` with the antipodal involution `i -> i+2`.
    pub fn dihedral4_antipodal() -> Self {
        let q = Quandle::dihedral(4);
        Self::new(q, vec![2, 3, 0, 1]).expect("antipodal map is good on R_4")
    }

    #[inline]
    pub fn rho(&self, x: u8) -> u8 {
        self.rho[x as usize]
    }
}

/// A finite set with a right action of a quandle's associated group,
/// specified by the generator actions `y * x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XSet {
    m: usize,
    n: usize,
    action: Vec<u8>,
    inv_action: Vec<u8>,
    pub symmetric: bool,
}

impl XSet {
    /// Validates bijectivity per generator and the defining relation
    /// `(y*a)*b = (y*b)*(a*b)`. If `sq` is supplied, additionally checks
    /// `(y*x)*rho(x) = y` and marks the set symmetric.
    pub fn new(
        q: &Quandle,
        rows: Vec<Vec<u8>>,
        sq: Option<&SymmetricQuandle>,
    ) -> Result<Self, AlgebraError> {
        let m = rows.len();
        let n = q.size();
        let mut action = vec![0u8; m * n];
        for (y, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(AlgebraError::BadTable { row: y, len: row.len(), expected: n });
            }
            for (x, &v) in row.iter().enumerate() {
                if (v as usize) >= m {
                    return Err(AlgebraError::EntryOutOfRange {
                        value: v as usize,
                        size: m,
                        at: vec![y, x],
                    });
                }
                action[y * n + x] = v;
            }
        }
        let mut inv_action = vec![0u8; m * n];
        for x in 0..n {
            let mut seen = vec![false; m];
            for y in 0..m {
                let v = action[y * n + x] as usize;
                if seen[v] {
                    return Err(AlgebraError::NotBijective { x: x as u8 });
                }
                seen[v] = true;
                inv_action[v * n + x] = y as u8;
            }
        }
        for y in 0..m as u8 {
            for a in 0..n as u8 {
                for b in 0..n as u8 {
                    let lhs = action[action[y as usize * n + a as usize] as usize * n + b as usize];
                    let rhs = action[action[y as usize * n + b as usize] as usize * n
                        + q.op(a, b) as usize];
                    if lhs != rhs {
                        return Err(AlgebraError::RelationViolation { y, a, b });
                    }
                }
            }
        }
        let mut symmetric = false;
        if let Some(sq) = sq {
            for y in 0..m as u8 {
                for x in 0..n as u8 {
                    let z = action[y as usize * n + x as usize];
                    if action[z as usize * n + sq.rho(x) as usize] != y {
                        return Err(AlgebraError::RhoViolation { y, x });
                    }
                }
            }
            symmetric = true;
        }
        Ok(XSet { m, n, action, inv_action, symmetric })
    }

    /// `Y = X` acting on itself by the quandle operation.
    pub fn from_quandle(q: &Quandle) -> Self {
        let rows = (0..q.size())
            .map(|y| (0..q.size()).map(|x| q.op(y as u8, x as u8)).collect())
            .collect();
        Self::new(q, rows, None).expect("a quandle acts on itself")
    }

    /// The one-element set, an (X,rho)-set for every symmetric quandle.
    pub fn singleton(q: &Quandle) -> Self {
        XSet { m: 1, n: q.size(), action: vec![0; q.size()], inv_action: vec![0; q.size()], symmetric: true }
    }

    pub fn size(&self) -> usize {
        self.m
    }

    pub fn quandle_size(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> impl Iterator<Item = u8> {
        0..self.m as u8
    }

    /// `y * x`
    #[inline]
    pub fn act(&self, y: u8, x: u8) -> u8 {
        self.action[y as usize * self.n + x as usize]
    }

    /// `y * xbar`
    #[inline]
    pub fn inv_act(&self, y: u8, x: u8) -> u8 {
        self.inv_action[y as usize * self.n + x as usize]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dihedral_examples() {
        let r3 = Quandle::dihedral(3);
        assert_eq!(r3.op(1, 0), 2); // 2*0 - 1 mod 3
        assert_eq!(r3.op(1, 2), 0); // (4 - 1) mod 3
        let r1 = Quandle::dihedral(1);
        assert_eq!(r1.op(0, 0), 0);
    }

    #[test]
    fn tetrahedral_table_row() {
        let s4 = Quandle::tetrahedral();
        assert_eq!(s4.op(0, 1), 2);
    }

    #[test]
    fn axiom_i_violation_detected() {
        let err = Quandle::from_table(vec![vec![1, 0], vec![1, 0]]).unwrap_err();
        match err {
            AlgebraError::AxiomViolation { axiom: Axiom::Idempotence, witness } => {
                assert_eq!(witness, vec![0]);
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn inverse_op_inverts() {
        for q in [Quandle::dihedral(5), Quandle::tetrahedral()] {
            for x in q.elements() {
                for y in q.elements() {
                    assert_eq!(q.op(q.inv_op(x, y), y), x);
                    assert_eq!(q.inv_op(q.op(x, y), y), x);
                }
            }
        }
    }

    #[test]
    fn antipodal_involution_is_good() {
        let sq = SymmetricQuandle::dihedral4_antipodal();
        assert_eq!(sq.rho(0), 2);
    }

    #[test]
    fn identity_involution_good_on_r3() {
        // R_3 translations have order 2, so x*y = x*ybar and id is good.
        let q = Quandle::dihedral(3);
        assert!(SymmetricQuandle::new(q, vec![0, 1, 2]).is_ok());
    }

    #[test]
    fn transposition_not_good_on_r4() {
        let q = Quandle::dihedral(4);
        let err = SymmetricQuandle::new(q, vec![1, 0, 2, 3]).unwrap_err();
        assert!(matches!(err, AlgebraError::NotGood { .. } | AlgebraError::NotInvolution { .. }));
    }

    #[test]
    fn quandle_acts_on_itself() {
        for q in [Quandle::dihedral(3), Quandle::tetrahedral()] {
            let y = XSet::from_quandle(&q);
            assert_eq!(y.size(), q.size());
        }
    }

    #[test]
    fn singleton_is_symmetric_xset() {
        let sq = SymmetricQuandle::dihedral4_antipodal();
        let y = XSet::singleton(&sq.quandle);
        assert!(y.symmetric);
        assert_eq!(y.act(0, 3), 0);
    }

    #[test]
    fn constant_action_not_bijective() {
        let q = Quandle::dihedral(3);
        let rows = vec![vec![1, 1, 1], vec![1, 1, 1]];
        assert!(matches!(XSet::new(&q, rows, None), Err(AlgebraError::NotBijective { .. })));
    }
}
