use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;

use super::{AlgebraError, Root5Number};
use crate::geom::Scalar;

/// Exact coefficient ring for [`SparsePolynomial`].
pub trait Coefficient: Scalar + fmt::Display {}

impl Coefficient for BigRational {}
impl Coefficient for Root5Number {}

/// Multivariate polynomial in canonical form.
///
/// Variables are kept sorted by name; every exponent vector has one entry
/// per variable and no stored coefficient is zero. Two polynomials are equal
/// as polynomials exactly when they compare equal with `==`, provided they
/// range over the same variables (use [`SparsePolynomial::same_as`] to
/// ignore unused variables).
#[derive(Clone, Debug, PartialEq)]
pub struct SparsePolynomial<C> {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, C>,
}

impl<C: Coefficient> SparsePolynomial<C> {
    pub fn zero() -> Self {
        SparsePolynomial {
            vars: Vec::new(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        SparsePolynomial {
            vars: Vec::new(),
            terms,
        }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(C::from_i64(n))
    }

    pub fn var(name: &str) -> Self {
        SparsePolynomial {
            vars: vec![name.to_string()],
            terms: BTreeMap::from([(vec![1], C::one())]),
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms as (exponent vector aligned with [`vars`](Self::vars), coefficient).
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &C)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    /// Coefficient of the monomial given as (variable, exponent) pairs.
    pub fn coefficient(&self, monomial: &[(&str, u32)]) -> C {
        let mut exps = vec![0; self.vars.len()];
        for (name, e) in monomial {
            match self.vars.iter().position(|v| v == name) {
                Some(i) => exps[i] += e,
                None if *e == 0 => {}
                None => return C::zero(),
            }
        }
        self.terms.get(&exps).cloned().unwrap_or_else(C::zero)
    }

    /// Re-expresses `self` over `vars`, which must be a sorted superset.
    fn extended_to(&self, vars: &[String]) -> BTreeMap<Vec<u32>, C> {
        if self.vars == vars {
            return self.terms.clone();
        }
        let index: Vec<usize> = self
            .vars
            .iter()
            .map(|v| vars.iter().position(|w| w == v).expect("superset"))
            .collect();
        self.terms
            .iter()
            .map(|(e, c)| {
                let mut out = vec![0; vars.len()];
                for (k, &i) in index.iter().enumerate() {
                    out[i] = e[k];
                }
                (out, c.clone())
            })
            .collect()
    }

    fn union_vars(&self, other: &Self) -> Vec<String> {
        let mut vars: Vec<String> = self.vars.iter().chain(&other.vars).cloned().collect();
        vars.sort();
        vars.dedup();
        vars
    }

    fn insert_term(terms: &mut BTreeMap<Vec<u32>, C>, exps: Vec<u32>, c: C) {
        if c.is_zero() {
            return;
        }
        match terms.remove(&exps) {
            Some(old) => {
                let sum = old + c;
                if !sum.is_zero() {
                    terms.insert(exps, sum);
                }
            }
            None => {
                terms.insert(exps, c);
            }
        }
    }

    fn combine(&self, other: &Self, negate: bool) -> Self {
        let vars = self.union_vars(other);
        let mut terms = self.extended_to(&vars);
        for (e, c) in other.extended_to(&vars) {
            let c = if negate { -c } else { c };
            Self::insert_term(&mut terms, e, c);
        }
        SparsePolynomial { vars, terms }
    }

    pub fn mul_poly(&self, other: &Self) -> Self {
        let vars = self.union_vars(other);
        let lhs = self.extended_to(&vars);
        let rhs = other.extended_to(&vars);
        let mut terms = BTreeMap::new();
        for (e1, c1) in &lhs {
            for (e2, c2) in &rhs {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                Self::insert_term(&mut terms, e, c1.clone() * c2.clone());
            }
        }
        SparsePolynomial { vars, terms }
    }

    pub fn scale(&self, k: &C) -> Self {
        let mut out = SparsePolynomial {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (e, c) in &self.terms {
            Self::insert_term(&mut out.terms, e.clone(), c.clone() * k.clone());
        }
        out
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_poly(&base);
            }
            base = base.mul_poly(&base);
            e >>= 1;
        }
        acc
    }

    /// Exact value at `point`; every variable of `self` must be bound.
    pub fn eval(&self, point: &HashMap<String, C>) -> Result<C, AlgebraError> {
        let values: Vec<&C> = self
            .vars
            .iter()
            .map(|v| {
                point
                    .get(v)
                    .ok_or_else(|| AlgebraError::UnboundVariable(v.clone()))
            })
            .collect::<Result<_, _>>()?;
        let mut total = C::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (x, &k) in values.iter().zip(e) {
                for _ in 0..k {
                    term = term * (*x).clone();
                }
            }
            total = total + term;
        }
        Ok(total)
    }

    /// Replaces `var` by `g` and expands. Unchanged when `var` does not occur.
    pub fn substitute(&self, var: &str, g: &Self) -> Self {
        let Some(idx) = self.vars.iter().position(|v| v == var) else {
            return self.clone();
        };
        let rest_vars: Vec<String> = self.vars.iter().filter(|v| *v != var).cloned().collect();
        let max_deg = self.terms.keys().map(|e| e[idx]).max().unwrap_or(0);
        let mut powers = vec![Self::one()];
        for _ in 0..max_deg {
            let next = powers.last().unwrap().mul_poly(g);
            powers.push(next);
        }
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let rest_exps: Vec<u32> = e
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != idx)
                .map(|(_, &k)| k)
                .collect();
            let mono = SparsePolynomial {
                vars: rest_vars.clone(),
                terms: BTreeMap::from([(rest_exps, c.clone())]),
            };
            out = out + mono.mul_poly(&powers[e[idx] as usize]);
        }
        out
    }

    /// Drops variables that appear in no term.
    pub fn trimmed(&self) -> Self {
        let used: Vec<usize> = (0..self.vars.len())
            .filter(|&i| self.terms.keys().any(|e| e[i] > 0))
            .collect();
        SparsePolynomial {
            vars: used.iter().map(|&i| self.vars[i].clone()).collect(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (used.iter().map(|&i| e[i]).collect(), c.clone()))
                .collect(),
        }
    }

    /// Equality as polynomials, ignoring unused variables.
    pub fn same_as(&self, other: &Self) -> bool {
        self.trimmed() == other.trimmed()
    }

    /// Groups terms by their exponents in `outer`, returning for each outer
    /// monomial the coefficient polynomial in the remaining variables.
    pub fn collect_by(&self, outer: &[&str]) -> BTreeMap<Vec<u32>, SparsePolynomial<C>> {
        let outer_idx: Vec<Option<usize>> = outer
            .iter()
            .map(|name| self.vars.iter().position(|v| v == name))
            .collect();
        let inner_idx: Vec<usize> = (0..self.vars.len())
            .filter(|i| !outer_idx.contains(&Some(*i)))
            .collect();
        let inner_vars: Vec<String> = inner_idx.iter().map(|&i| self.vars[i].clone()).collect();
        let mut groups: BTreeMap<Vec<u32>, SparsePolynomial<C>> = BTreeMap::new();
        for (e, c) in &self.terms {
            let key: Vec<u32> = outer_idx.iter().map(|i| i.map_or(0, |i| e[i])).collect();
            let inner: Vec<u32> = inner_idx.iter().map(|&i| e[i]).collect();
            let entry = groups.entry(key).or_insert_with(|| SparsePolynomial {
                vars: inner_vars.clone(),
                terms: BTreeMap::new(),
            });
            Self::insert_term(&mut entry.terms, inner, c.clone());
        }
        groups
    }
}

impl<C: Coefficient> Add for SparsePolynomial<C> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.combine(&rhs, false)
    }
}

impl<C: Coefficient> Sub for SparsePolynomial<C> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.combine(&rhs, true)
    }
}

impl<C: Coefficient> Mul for SparsePolynomial<C> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.mul_poly(&rhs)
    }
}

impl<C: Coefficient> Add for &SparsePolynomial<C> {
    type Output = SparsePolynomial<C>;
    fn add(self, rhs: Self) -> SparsePolynomial<C> {
        self.combine(rhs, false)
    }
}

impl<C: Coefficient> Sub for &SparsePolynomial<C> {
    type Output = SparsePolynomial<C>;
    fn sub(self, rhs: Self) -> SparsePolynomial<C> {
        self.combine(rhs, true)
    }
}

impl<C: Coefficient> Mul for &SparsePolynomial<C> {
    type Output = SparsePolynomial<C>;
    fn mul(self, rhs: Self) -> SparsePolynomial<C> {
        self.mul_poly(rhs)
    }
}

impl<C: Coefficient> Neg for SparsePolynomial<C> {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(&-C::one())
    }
}

impl<C: Coefficient> fmt::Display for SparsePolynomial<C> {
    /// Highest-degree terms first, coefficients parenthesized:
    /// `(3)*a^2*b + (-1/2 + sqrt5)*c + (1)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})", c)?;
            for (v, &k) in self.vars.iter().zip(e) {
                match k {
                    0 => {}
                    1 => write!(f, "*{}", v)?,
                    _ => write!(f, "*{}^{}", v, k)?,
                }
            }
        }
        Ok(())
    }
}
