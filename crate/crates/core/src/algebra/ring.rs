//! Exact arithmetic in the integral group ring Z[A].

use std::collections::BTreeMap;
use std::sync::Arc;

use super::group::{CoeffGroup, GroupElem};
use crate::error::AlgebraError;

/// A finite integer combination of coefficient-group elements.
/// Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingElem {
    pub group: Arc<CoeffGroup>,
    terms: BTreeMap<GroupElem, i64>,
}

impl RingElem {
    pub fn zero(group: Arc<CoeffGroup>) -> Self {
        RingElem { group, terms: BTreeMap::new() }
    }

    pub fn one(group: Arc<CoeffGroup>) -> Self {
        Self::monomial(group, None, 1)
    }

    /// `coeff * g`, with `g = None` meaning the group identity.
    pub fn monomial(group: Arc<CoeffGroup>, g: Option<GroupElem>, coeff: i64) -> Self {
        let mut terms = BTreeMap::new();
        let g = g.unwrap_or_else(|| group.identity());
        if coeff != 0 {
            terms.insert(g, coeff);
        }
        RingElem { group, terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GroupElem, i64)> {
        self.terms.iter().map(|(g, &c)| (g, c))
    }

    pub fn coeff(&self, g: &GroupElem) -> i64 {
        self.terms.get(g).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, g: GroupElem, coeff: i64) {
        if coeff == 0 {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(g) {
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

    pub fn add(&self, other: &RingElem) -> Result<RingElem, AlgebraError> {
        if self.group != other.group {
            return Err(AlgebraError::GroupMismatch);
        }
        let mut out = self.clone();
        for (g, c) in other.terms() {
            out.add_term(g.clone(), c);
        }
        Ok(out)
    }

    pub fn scale(&self, n: i64) -> RingElem {
        let mut out = RingElem::zero(self.group.clone());
        for (g, c) in self.terms() {
            out.add_term(g.clone(), c * n);
        }
        out
    }

    /// Canonical text form: identity term first (as a bare integer), then the
    /// remaining terms ordered by exponent magnitude with positive powers first.
    pub fn format(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut keys: Vec<&GroupElem> = self.terms.keys().collect();
        keys.sort_by_key(|g| g.display_key());
        let mut out = String::new();
        for g in keys {
            let c = self.terms[g];
            let mag = c.abs();
            if out.is_empty() {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(if c < 0 { "-" } else { "+" });
            }
            if g.is_identity() {
                out.push_str(&mag.to_string());
            } else {
                if mag != 1 {
                    out.push_str(&mag.to_string());
                }
                out.push_str(&self.group.format_elem(g));
            }
        }
        out
    }

    /// Parses the output of [`RingElem::format`].
    pub fn parse(group: Arc<CoeffGroup>, s: &str) -> Result<RingElem, AlgebraError> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(AlgebraError::Parse("empty group-ring expression".into()));
        }
        if s == "0" {
            return Ok(RingElem::zero(group));
        }
        let mut out = RingElem::zero(group.clone());
        // split into signed terms
        let mut terms = Vec::new();
        let mut cur = String::new();
        for (i, ch) in s.chars().enumerate() {
            if (ch == '+' || ch == '-') && i != 0 && !cur.ends_with('^') {
                terms.push(cur.clone());
                cur.clear();
            }
            cur.push(ch);
        }
        terms.push(cur);
        for t in terms {
            let (sign, body) = match t.strip_prefix('-') {
                Some(b) => (-1i64, b),
                None => (1, t.strip_prefix('+').unwrap_or(&t)),
            };
            // leading integer coefficient
            let digits: String = body.chars().take_while(|c| c.is_ascii_digit()).collect();
            let rest = &body[digits.len()..];
            let coeff: i64 = if digits.is_empty() { 1 } else { digits.parse().unwrap() };
            let g = if rest.is_empty() { group.identity() } else { group.parse_elem(rest)? };
            out.add_term(g, sign * coeff);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn format_matches_published_forms() {
        let z3 = CoeffGroup::cyclic(3);
        let u = z3.generator(0);
        let mut e = RingElem::monomial(z3.clone(), None, 3);
        e.add_term(u, 6);
        assert_eq!(e.format(), "3+6u");

        let z = CoeffGroup::infinite_cyclic();
        let t = z.generator(0);
        let mut e = RingElem::monomial(z.clone(), None, 4);
        e.add_term(z.pow(&t, 2), 2);
        e.add_term(z.pow(&t, -2), 2);
        assert_eq!(e.format(), "4+2t^2+2t^-2");
    }

    #[test]
    fn add_zero_is_identity() {
        let z3 = CoeffGroup::cyclic(3);
        let e = RingElem::monomial(z3.clone(), Some(z3.generator(0)), 5);
        let z = RingElem::zero(z3.clone());
        assert_eq!(e.add(&z).unwrap(), e);
    }

    #[test]
    fn group_mismatch_rejected() {
        let a = RingElem::one(CoeffGroup::cyclic(3));
        let b = RingElem::one(CoeffGroup::cyclic(2));
        assert!(a.add(&b).is_err());
    }

    #[test]
    fn parse_round_trip() {
        let z = CoeffGroup::infinite_cyclic();
        let t = z.generator(0);
        let mut e = RingElem::monomial(z.clone(), None, -2);
        e.add_term(z.pow(&t, 3), 7);
        e.add_term(z.pow(&t, -1), -1);
        let s = e.format();
        assert_eq!(RingElem::parse(z.clone(), &s).unwrap(), e);
    }
}
