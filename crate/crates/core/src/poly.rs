//! A small exact sparse polynomial type in finitely many commuting
//! variables, enough for truncated Schur polynomials and kernel expansions.

use std::collections::BTreeMap;

/// Integer polynomial in `vars` commuting variables, stored as a sorted map
/// from exponent vectors to nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    vars: usize,
    terms: BTreeMap<Vec<u16>, i64>,
}

impl MultiPoly {
    pub fn zero(vars: usize) -> Self {
        MultiPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: usize) -> Self {
        let mut p = MultiPoly::zero(vars);
        p.add_term(vec![0; vars], 1);
        p
    }

    /// The monomial `var^power`.
    pub fn monomial(vars: usize, var: usize, power: u16) -> Self {
        let mut expo = vec![0u16; vars];
        expo[var] = power;
        let mut p = MultiPoly::zero(vars);
        p.add_term(expo, 1);
        p
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, expo: Vec<u16>, coeff: i64) {
        debug_assert_eq!(expo.len(), self.vars);
        if coeff == 0 {
            return;
        }
        match self.terms.entry(expo) {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
        }
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        debug_assert_eq!(self.vars, other.vars);
        let mut out = self.clone();
        for (e, &c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        out
    }

    /// Product, dropping every term whose total degree exceeds `max_degree`
    /// (pass `usize::MAX` for the full product).
    pub fn mul_truncated(&self, other: &MultiPoly, max_degree: usize) -> MultiPoly {
        debug_assert_eq!(self.vars, other.vars);
        let mut out = MultiPoly::zero(self.vars);
        for (ea, &ca) in &self.terms {
            for (eb, &cb) in &other.terms {
                let expo: Vec<u16> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                let total: usize = expo.iter().map(|&d| d as usize).sum();
                if total > max_degree {
                    continue;
                }
                out.add_term(expo, ca * cb);
            }
        }
        out
    }

    /// Tensor-style product of polynomials in disjoint variable sets: the
    /// result lives in `self.vars + other.vars` variables.
    pub fn mul_disjoint(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero(self.vars + other.vars);
        for (ea, &ca) in &self.terms {
            for (eb, &cb) in &other.terms {
                let mut expo = ea.clone();
                expo.extend_from_slice(eb);
                out.add_term(expo, ca * cb);
            }
        }
        out
    }

    pub fn eval_all_ones(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn coefficient(&self, expo: &[u16]) -> i64 {
        self.terms.get(expo).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u16>, i64)> {
        self.terms.iter().map(|(e, &c)| (e, c))
    }

    pub fn to_string_with(&self, names: &[&str]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (expo, coeff) in self.terms.iter().rev() {
            let mut factors = Vec::new();
            for (v, &d) in expo.iter().enumerate() {
                if d == 1 {
                    factors.push(names[v].to_string());
                } else if d > 1 {
                    factors.push(format!("{}^{}", names[v], d));
                }
            }
            let vars = factors.join("*");
            let term = match (*coeff, vars.is_empty()) {
                (1, false) => vars,
                (-1, false) => format!("-{vars}"),
                (c, false) => format!("{c}*{vars}"),
                (c, true) => format!("{c}"),
            };
            parts.push(term);
        }
        let mut out = String::new();
        for (k, t) in parts.iter().enumerate() {
            if k == 0 {
                out.push_str(t);
            } else if let Some(stripped) = t.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(stripped);
            } else {
                out.push_str(" + ");
                out.push_str(t);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let x = MultiPoly::monomial(2, 0, 1);
        let y = MultiPoly::monomial(2, 1, 1);
        let s = x.add(&y);
        let sq = s.mul_truncated(&s, usize::MAX);
        assert_eq!(sq.coefficient(&[1, 1]), 2);
        assert_eq!(sq.coefficient(&[2, 0]), 1);
        assert_eq!(sq.eval_all_ones(), 4);
        let truncated = s.mul_truncated(&s, 1);
        assert!(truncated.is_zero());
        assert_eq!(s.to_string_with(&["x", "y"]), "x + y");
    }

    #[test]
    fn cancellation_removes_terms() {
        let mut p = MultiPoly::monomial(1, 0, 2);
        p.add_term(vec![2], -1);
        assert!(p.is_zero());
    }
}
