//! The bar resolution `F → Z`, its tensor square, and the structural maps on
//! them: boundaries, augmentation, right translations `τ_s`, the factor swap,
//! the Alexander–Whitney diagonal, the contracting homotopies `ψ_t` and
//! `ψ_{s,t}`, and the projection onto the normalized quotient.
//!
//! Degree `-1` stands for the augmentation target `Z`; its only basis symbol
//! is the empty tuple (and the pair of empty tuples in the tensor square).

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::group::{Elem, Group};
use crate::module::checked_add;

/// A basis symbol `(s_0, …, s_n)` of `F_n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct BarTuple(SmallVec<[Elem; 8]>);

impl BarTuple {
    pub fn new(entries: &[Elem]) -> Self {
        BarTuple(SmallVec::from_slice(entries))
    }

    /// The symbol of degree `-1`.
    pub fn empty() -> Self {
        BarTuple(SmallVec::new())
    }

    pub fn degree(&self) -> i64 {
        self.0.len() as i64 - 1
    }

    pub fn entries(&self) -> &[Elem] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Has two equal adjacent entries, i.e. lies in the degenerate subcomplex.
    pub fn is_degenerate(&self) -> bool {
        self.0.windows(2).any(|w| w[0] == w[1])
    }

    fn face(&self, i: usize) -> BarTuple {
        let mut v = self.0.clone();
        v.remove(i);
        BarTuple(v)
    }

    fn prepend(&self, t: Elem) -> BarTuple {
        let mut v = SmallVec::with_capacity(self.0.len() + 1);
        v.push(t);
        v.extend_from_slice(&self.0);
        BarTuple(v)
    }

    fn map(&self, f: impl Fn(Elem) -> Elem) -> BarTuple {
        BarTuple(self.0.iter().map(|&x| f(x)).collect())
    }
}

impl From<Vec<Elem>> for BarTuple {
    fn from(v: Vec<Elem>) -> Self {
        BarTuple(SmallVec::from_vec(v))
    }
}

impl fmt::Display for BarTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// A homogeneous integer combination of bar tuples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain {
    degree: i64,
    terms: BTreeMap<BarTuple, i64>,
}

impl Chain {
    pub fn zero(degree: i64) -> Self {
        Chain {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(tuple: BarTuple) -> Self {
        let mut c = Chain::zero(tuple.degree());
        c.terms.insert(tuple, 1);
        c
    }

    pub fn from_entries(entries: &[Elem]) -> Self {
        Chain::basis(BarTuple::new(entries))
    }

    /// The generator `1 ∈ Z` in degree `-1`.
    pub fn unit() -> Self {
        Chain::basis(BarTuple::empty())
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, t: &BarTuple) -> i64 {
        self.terms.get(t).copied().unwrap_or(0)
    }

    /// Terms in lexicographic order of their entries.
    pub fn iter(&self) -> btree_map::Iter<'_, BarTuple, i64> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, t: BarTuple, c: i64) {
        assert_eq!(t.degree(), self.degree, "tuple degree does not match chain");
        if c == 0 {
            return;
        }
        match self.terms.entry(t) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            btree_map::Entry::Occupied(mut e) => {
                let v = checked_add(*e.get(), c);
                if v == 0 {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Chain, c: i64) {
        if other.is_zero() || c == 0 {
            return;
        }
        assert_eq!(self.degree, other.degree, "adding chains of different degrees");
        for (t, &v) in &other.terms {
            self.add_term(t.clone(), crate::module::checked_mul(v, c));
        }
    }

    pub fn plus(&self, other: &Chain) -> Chain {
        let mut out = self.clone();
        out.add_scaled(other, 1);
        out
    }

    pub fn minus(&self, other: &Chain) -> Chain {
        let mut out = self.clone();
        out.add_scaled(other, -1);
        out
    }

    pub fn scaled(&self, c: i64) -> Chain {
        let mut out = Chain::zero(self.degree);
        out.add_scaled(self, c);
        out
    }

    /// Applies a linear map given on basis tuples.
    pub fn map_linear(&self, out_degree: i64, mut f: impl FnMut(&BarTuple) -> Chain) -> Chain {
        let mut out = Chain::zero(out_degree);
        for (t, &c) in &self.terms {
            out.add_scaled(&f(t), c);
        }
        out
    }
}

impl FromIterator<(BarTuple, i64)> for Chain {
    /// Collects terms; panics on an empty iterator since the degree is unknown.
    fn from_iter<I: IntoIterator<Item = (BarTuple, i64)>>(iter: I) -> Self {
        let mut iter = iter.into_iter().peekable();
        let degree = iter.peek().expect("degree of empty chain").0.degree();
        let mut c = Chain::zero(degree);
        for (t, v) in iter {
            c.add_term(t, v);
        }
        c
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms.iter().map(|(t, &c)| (t.to_string(), c)))
    }
}

fn write_terms(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (String, i64)>,
) -> fmt::Result {
    let mut first = true;
    for (t, c) in terms {
        let sign = if c < 0 { "-" } else if first { "" } else { "+" };
        let sep = if first { "" } else { " " };
        match c.abs() {
            1 => write!(f, "{sep}{sign}{t}")?,
            a => write!(f, "{sep}{sign}{a}{t}")?,
        }
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

/// A combination of pairs `x ⊗ y` of total degree `deg x + deg y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorChain {
    degree: i64,
    terms: BTreeMap<(BarTuple, BarTuple), i64>,
}

impl TensorChain {
    pub fn zero(degree: i64) -> Self {
        TensorChain {
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// The generator `1 ⊗ 1` of degree `-1`.
    pub fn unit() -> Self {
        let mut c = TensorChain::zero(-1);
        c.terms.insert((BarTuple::empty(), BarTuple::empty()), 1);
        c
    }

    pub fn basis(x: BarTuple, y: BarTuple) -> Self {
        let mut c = TensorChain::zero(pair_degree(&x, &y));
        c.add_term(x, y, 1);
        c
    }

    pub fn from_entries(x: &[Elem], y: &[Elem]) -> Self {
        TensorChain::basis(BarTuple::new(x), BarTuple::new(y))
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, x: &BarTuple, y: &BarTuple) -> i64 {
        self.terms.get(&(x.clone(), y.clone())).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, (BarTuple, BarTuple), i64> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, x: BarTuple, y: BarTuple, c: i64) {
        assert_eq!(pair_degree(&x, &y), self.degree, "pair degree does not match chain");
        if c == 0 {
            return;
        }
        match self.terms.entry((x, y)) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            btree_map::Entry::Occupied(mut e) => {
                let v = checked_add(*e.get(), c);
                if v == 0 {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &TensorChain, c: i64) {
        if other.is_zero() || c == 0 {
            return;
        }
        assert_eq!(self.degree, other.degree, "adding tensor chains of different degrees");
        for ((x, y), &v) in &other.terms {
            self.add_term(x.clone(), y.clone(), crate::module::checked_mul(v, c));
        }
    }

    pub fn plus(&self, other: &TensorChain) -> TensorChain {
        let mut out = self.clone();
        out.add_scaled(other, 1);
        out
    }

    pub fn minus(&self, other: &TensorChain) -> TensorChain {
        let mut out = self.clone();
        out.add_scaled(other, -1);
        out
    }

    pub fn scaled(&self, c: i64) -> TensorChain {
        let mut out = TensorChain::zero(self.degree);
        out.add_scaled(self, c);
        out
    }

    pub fn map_linear(
        &self,
        out_degree: i64,
        mut f: impl FnMut(&BarTuple, &BarTuple) -> TensorChain,
    ) -> TensorChain {
        let mut out = TensorChain::zero(out_degree);
        for ((x, y), &c) in &self.terms {
            out.add_scaled(&f(x, y), c);
        }
        out
    }
}

impl fmt::Display for TensorChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.terms.iter().map(|((x, y), &c)| (format!("{x}⊗{y}"), c)),
        )
    }
}

/// Total degree of `x ⊗ y`; the pair of empty symbols is `1 ⊗ 1` in degree `-1`.
fn pair_degree(x: &BarTuple, y: &BarTuple) -> i64 {
    match (x.is_empty(), y.is_empty()) {
        (true, true) => -1,
        (false, false) => x.degree() + y.degree(),
        _ => panic!("pair mixes the augmentation symbol with a bar tuple"),
    }
}

/// `x ⊗ y` for chains of degree `≥ 0`.
pub fn tensor(x: &Chain, y: &Chain) -> TensorChain {
    let mut out = TensorChain::zero(x.degree + y.degree);
    for (a, &c) in &x.terms {
        for (b, &d) in &y.terms {
            out.add_term(a.clone(), b.clone(), crate::module::checked_mul(c, d));
        }
    }
    out
}

fn sign(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

fn tuple_boundary(t: &BarTuple) -> Chain {
    let mut out = Chain::zero(t.degree() - 1);
    for i in 0..t.len() {
        out.add_term(t.face(i), sign(i as i64));
    }
    out
}

/// `∂(s_0, …, s_n) = Σ (-1)^i (s_0, …, ŝ_i, …, s_n)`, for degree `≥ 1`.
pub fn boundary(c: &Chain) -> Result<Chain> {
    if c.degree < 1 {
        return Err(Error::InvalidDegree {
            op: "boundary",
            degree: c.degree,
        });
    }
    Ok(c.map_linear(c.degree - 1, tuple_boundary))
}

/// Boundary of the unaugmented complex `F`: zero out of degree 0.
pub fn boundary_unaugmented(c: &Chain) -> Chain {
    if c.degree <= 0 {
        Chain::zero(c.degree - 1)
    } else {
        c.map_linear(c.degree - 1, tuple_boundary)
    }
}

/// Boundary of the augmented complex `F → Z`: `∂` above degree 0, `ε` in degree 0.
pub fn boundary_augmented(c: &Chain) -> Result<Chain> {
    match c.degree {
        0 => augmentation(c),
        d if d >= 1 => boundary(c),
        d => Err(Error::InvalidDegree {
            op: "augmented boundary",
            degree: d,
        }),
    }
}

/// `ε`: the coefficient sum of a degree-0 chain, as a degree `-1` chain.
pub fn augmentation(c: &Chain) -> Result<Chain> {
    if c.degree != 0 {
        return Err(Error::InvalidDegree {
            op: "augmentation",
            degree: c.degree,
        });
    }
    let total = c.terms.values().fold(0i64, |a, &b| checked_add(a, b));
    let mut out = Chain::zero(-1);
    out.add_term(BarTuple::empty(), total);
    Ok(out)
}

/// `τ_s`: right translation of every entry, `(s_0, …, s_n) ↦ (s_0 s, …, s_n s)`.
pub fn translate(g: &Group, s: Elem, c: &Chain) -> Chain {
    c.map_linear(c.degree, |t| Chain::basis(t.map(|x| g.mul(x, s))))
}

/// Left multiplication `u · (s_0, …, s_n) = (u s_0, …, u s_n)`; the module
/// structure of `F` over `ZG`. Identity on degree `-1`.
pub fn left_act(g: &Group, u: Elem, c: &Chain) -> Chain {
    c.map_linear(c.degree, |t| Chain::basis(t.map(|x| g.mul(u, x))))
}

pub fn left_act_tensor(g: &Group, u: Elem, c: &TensorChain) -> TensorChain {
    c.map_linear(c.degree, |x, y| {
        TensorChain::basis(x.map(|e| g.mul(u, e)), y.map(|e| g.mul(u, e)))
    })
}

fn pair_boundary(x: &BarTuple, y: &BarTuple) -> TensorChain {
    let (p, q) = (x.degree(), y.degree());
    let mut out = TensorChain::zero(p + q - 1);
    if p >= 1 {
        for i in 0..x.len() {
            out.add_term(x.face(i), y.clone(), sign(i as i64));
        }
    }
    if q >= 1 {
        let s = sign(p);
        for i in 0..y.len() {
            out.add_term(x.clone(), y.face(i), s * sign(i as i64));
        }
    }
    out
}

/// `∂(x ⊗ y) = ∂x ⊗ y + (-1)^p x ⊗ ∂y`, for total degree `≥ 1`; a factor of
/// degree 0 contributes no boundary term.
pub fn tensor_boundary(c: &TensorChain) -> Result<TensorChain> {
    if c.degree < 1 {
        return Err(Error::InvalidDegree {
            op: "tensor boundary",
            degree: c.degree,
        });
    }
    Ok(c.map_linear(c.degree - 1, pair_boundary))
}

/// Tensor boundary of the unaugmented complex: zero out of degree 0.
pub fn tensor_boundary_unaugmented(c: &TensorChain) -> TensorChain {
    if c.degree <= 0 {
        TensorChain::zero(c.degree - 1)
    } else {
        c.map_linear(c.degree - 1, pair_boundary)
    }
}

/// `ε ⊗ ε` in degree 0, the tensor boundary above.
pub fn tensor_boundary_augmented(c: &TensorChain) -> Result<TensorChain> {
    match c.degree {
        0 => {
            let total = c.terms.values().fold(0i64, |a, &b| checked_add(a, b));
            let mut out = TensorChain::zero(-1);
            out.add_term(BarTuple::empty(), BarTuple::empty(), total);
            Ok(out)
        }
        d if d >= 1 => tensor_boundary(c),
        d => Err(Error::InvalidDegree {
            op: "augmented tensor boundary",
            degree: d,
        }),
    }
}

/// `τ(x ⊗ y) = (-1)^{pq} y ⊗ x`.
pub fn swap(c: &TensorChain) -> TensorChain {
    c.map_linear(c.degree, |x, y| {
        let mut out = TensorChain::zero(c.degree);
        let s = if x.is_empty() { 1 } else { sign(x.degree() * y.degree()) };
        out.add_term(y.clone(), x.clone(), s);
        out
    })
}

/// Alexander–Whitney: `(s_0, …, s_n) ↦ Σ_i (s_0, …, s_i) ⊗ (s_i, …, s_n)`.
/// On degree `-1` it is `1 ↦ 1 ⊗ 1`.
pub fn alexander_whitney(c: &Chain) -> TensorChain {
    if c.degree < 0 {
        return c
            .terms
            .values()
            .fold(TensorChain::zero(-1), |acc, &v| acc.plus(&TensorChain::unit().scaled(v)));
    }
    c.map_linear_tensor(c.degree, |t| {
        let e = t.entries();
        let mut out = TensorChain::zero(t.degree());
        for i in 0..e.len() {
            out.add_term(BarTuple::new(&e[..=i]), BarTuple::new(&e[i..]), 1);
        }
        out
    })
}

impl Chain {
    pub(crate) fn map_linear_tensor(
        &self,
        out_degree: i64,
        mut f: impl FnMut(&BarTuple) -> TensorChain,
    ) -> TensorChain {
        let mut out = TensorChain::zero(out_degree);
        for (t, &c) in &self.terms {
            out.add_scaled(&f(t), c);
        }
        out
    }
}

/// The contracting homotopy `ψ_t`: `1 ↦ (t)` and `x ↦ (t, x)`.
pub fn psi(t: Elem, c: &Chain) -> Chain {
    c.map_linear(c.degree + 1, |x| Chain::basis(x.prepend(t)))
}

/// The contracting homotopy `ψ_{s,t}` of `F ⊗ F`:
/// `1 ↦ (s) ⊗ (t)`, `x ⊗ y ↦ (s, x) ⊗ y` when `deg x > 0`, and
/// `x ⊗ y ↦ (s, x) ⊗ y + (s) ⊗ (t, y)` when `deg x = 0`.
pub fn psi_pair(s: Elem, t: Elem, c: &TensorChain) -> TensorChain {
    c.map_linear(c.degree + 1, |x, y| {
        let mut out = TensorChain::zero(c.degree + 1);
        if x.is_empty() {
            out.add_term(BarTuple::new(&[s]), BarTuple::new(&[t]), 1);
            return out;
        }
        out.add_term(x.prepend(s), y.clone(), 1);
        if x.degree() == 0 {
            out.add_term(BarTuple::new(&[s]), y.prepend(t), 1);
        }
        out
    })
}

/// Projection onto `F / D`: drops tuples with equal adjacent entries.
pub fn normalize(c: &Chain) -> Chain {
    Chain {
        degree: c.degree,
        terms: c
            .terms
            .iter()
            .filter(|(t, _)| !t.is_degenerate())
            .map(|(t, &v)| (t.clone(), v))
            .collect(),
    }
}

/// Projection onto `F/D ⊗ F/D`: drops pairs with a degenerate factor.
pub fn normalize_tensor(c: &TensorChain) -> TensorChain {
    TensorChain {
        degree: c.degree,
        terms: c
            .terms
            .iter()
            .filter(|((x, y), _)| !x.is_degenerate() && !y.is_degenerate())
            .map(|(k, &v)| (k.clone(), v))
            .collect(),
    }
}

/// All `|G|^{n+1}` basis tuples of `F_n`, in lexicographic order.
pub fn basis_tuples(order: usize, degree: usize) -> impl Iterator<Item = BarTuple> {
    let len = degree + 1;
    let count = order.pow(len as u32);
    (0..count).map(move |mut idx| {
        let mut v: SmallVec<[Elem; 8]> = SmallVec::from_elem(0, len);
        for slot in v.iter_mut().rev() {
            *slot = (idx % order) as Elem;
            idx /= order;
        }
        BarTuple(v)
    })
}

/// All basis pairs `x ⊗ y` of total degree `n`, ordered by left degree then
/// lexicographically.
pub fn tensor_basis(order: usize, degree: usize) -> impl Iterator<Item = (BarTuple, BarTuple)> {
    (0..=degree).flat_map(move |p| {
        basis_tuples(order, p).flat_map(move |x| {
            basis_tuples(order, degree - p).map(move |y| (x.clone(), y))
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, GroupSpec};

    fn group(s: &str) -> Group {
        build_group(&s.parse::<GroupSpec>().unwrap()).unwrap()
    }

    fn ch(terms: &[(&[Elem], i64)]) -> Chain {
        terms
            .iter()
            .map(|(t, c)| (BarTuple::new(t), *c))
            .collect()
    }

    fn tc(degree: i64, terms: &[(&[Elem], &[Elem], i64)]) -> TensorChain {
        let mut out = TensorChain::zero(degree);
        for (x, y, c) in terms {
            out.add_term(BarTuple::new(x), BarTuple::new(y), *c);
        }
        out
    }

    #[test]
    fn boundary_examples() {
        // e = 0, g = 1
        let d = boundary(&Chain::from_entries(&[0, 1])).unwrap();
        assert_eq!(d, ch(&[(&[1], 1), (&[0], -1)]));
        let (a, b, c) = (3, 4, 5);
        let d = boundary(&Chain::from_entries(&[a, b, c])).unwrap();
        assert_eq!(d, ch(&[(&[b, c], 1), (&[a, c], -1), (&[a, b], 1)]));
        assert!(boundary(&d).unwrap().is_zero());
        assert!(matches!(
            boundary(&Chain::from_entries(&[0])),
            Err(Error::InvalidDegree { .. })
        ));
    }

    #[test]
    fn augmentation_examples() {
        let e = augmentation(&Chain::from_entries(&[1])).unwrap();
        assert_eq!(e, Chain::unit());
        let x = ch(&[(&[0], 1), (&[1], -1)]);
        assert!(augmentation(&x).unwrap().is_zero());
        for t in basis_tuples(3, 1) {
            let d = boundary(&Chain::basis(t)).unwrap();
            assert!(augmentation(&d).unwrap().is_zero());
        }
        assert!(augmentation(&Chain::from_entries(&[0, 1])).is_err());
    }

    #[test]
    fn translate_examples() {
        let g = group("cyclic:2");
        assert_eq!(
            translate(&g, 1, &Chain::from_entries(&[0, 1])),
            Chain::from_entries(&[1, 0])
        );
        let x = Chain::from_entries(&[0, 1, 1]);
        assert_eq!(translate(&g, g.id(), &x), x);
        assert_eq!(translate(&g, 1, &Chain::unit()), Chain::unit());
    }

    #[test]
    fn tensor_boundary_examples() {
        let (a, b, c, d) = (0, 1, 2, 3);
        let x = TensorChain::from_entries(&[a, b], &[c]);
        assert_eq!(
            tensor_boundary(&x).unwrap(),
            tc(0, &[(&[b], &[c], 1), (&[a], &[c], -1)])
        );
        let x = TensorChain::from_entries(&[a], &[c, d]);
        assert_eq!(
            tensor_boundary(&x).unwrap(),
            tc(0, &[(&[a], &[d], 1), (&[a], &[c], -1)])
        );
        for (x, y) in tensor_basis(3, 2) {
            let z = TensorChain::basis(x, y);
            let dd = tensor_boundary(&tensor_boundary(&z).unwrap()).unwrap_or(TensorChain::zero(0));
            assert!(dd.is_zero());
        }
        assert!(tensor_boundary(&TensorChain::from_entries(&[0], &[1])).is_err());
    }

    #[test]
    fn swap_examples() {
        let x = TensorChain::from_entries(&[0, 1], &[2, 3]);
        assert_eq!(swap(&x), tc(2, &[(&[2, 3], &[0, 1], -1)]));
        let x = TensorChain::from_entries(&[0], &[2, 3]);
        assert_eq!(swap(&x), tc(1, &[(&[2, 3], &[0], 1)]));
        for (x, y) in tensor_basis(2, 3) {
            let z = TensorChain::basis(x, y);
            assert_eq!(swap(&swap(&z)), z);
        }
    }

    #[test]
    fn alexander_whitney_examples() {
        let (s0, s1) = (4, 7);
        assert_eq!(
            alexander_whitney(&Chain::from_entries(&[s0])),
            TensorChain::from_entries(&[s0], &[s0])
        );
        assert_eq!(
            alexander_whitney(&Chain::from_entries(&[s0, s1])),
            tc(1, &[(&[s0], &[s0, s1], 1), (&[s0, s1], &[s1], 1)])
        );
        for t in basis_tuples(2, 2) {
            let x = Chain::basis(t);
            let lhs = tensor_boundary(&alexander_whitney(&x)).unwrap();
            let rhs = alexander_whitney(&boundary(&x).unwrap());
            assert_eq!(lhs, rhs);
        }
        // (ε ⊗ ε) Δ = ε on degree 0
        let x = ch(&[(&[0], 2), (&[1], -5)]);
        assert_eq!(
            tensor_boundary_augmented(&alexander_whitney(&x)).unwrap(),
            alexander_whitney(&augmentation(&x).unwrap())
        );
    }

    #[test]
    fn psi_examples() {
        let t = 2;
        assert_eq!(psi(t, &Chain::unit()), Chain::from_entries(&[t]));
        assert_eq!(psi(t, &Chain::from_entries(&[5])), Chain::from_entries(&[t, 5]));
        for s0 in 0..3 {
            let x = Chain::from_entries(&[s0]);
            let lhs = boundary(&psi(t, &x))
                .unwrap()
                .plus(&psi(t, &augmentation(&x).unwrap()));
            assert_eq!(lhs, x);
        }
    }

    #[test]
    fn psi_pair_examples() {
        let (s, t) = (1, 2);
        assert_eq!(psi_pair(s, t, &TensorChain::unit()), TensorChain::from_entries(&[s], &[t]));
        let (s0, y) = (4, BarTuple::new(&[5, 6]));
        let x = TensorChain::basis(BarTuple::new(&[s0]), y.clone());
        assert_eq!(
            psi_pair(s, t, &x),
            tc(2, &[(&[s, s0], &[5, 6], 1), (&[s], &[t, 5, 6], 1)])
        );
        let x = TensorChain::from_entries(&[3, 4], &[5]);
        assert_eq!(psi_pair(s, t, &x), TensorChain::from_entries(&[s, 3, 4], &[5]));
    }

    #[test]
    fn normalize_examples() {
        assert!(normalize(&Chain::from_entries(&[0, 0, 1])).is_zero());
        let x = Chain::from_entries(&[0, 1]);
        assert_eq!(normalize(&x), x);
        // ∂ preserves the degenerate subcomplex: the induced map on F/D is
        // normalize ∘ ∂ ∘ normalize, and it agrees with normalize ∘ ∂.
        for n in 1..=3 {
            for t in basis_tuples(2, n) {
                let x = Chain::basis(t);
                let direct = normalize(&boundary(&x).unwrap());
                let quotient = normalize(&boundary(&normalize(&x)).unwrap());
                assert_eq!(direct, quotient);
            }
        }
        let z = TensorChain::from_entries(&[0, 1], &[2, 2]);
        assert!(normalize_tensor(&z).is_zero());
    }

    #[test]
    fn basis_enumeration() {
        let all: Vec<_> = basis_tuples(2, 1).collect();
        assert_eq!(
            all,
            vec![
                BarTuple::new(&[0, 0]),
                BarTuple::new(&[0, 1]),
                BarTuple::new(&[1, 0]),
                BarTuple::new(&[1, 1])
            ]
        );
        assert_eq!(tensor_basis(3, 2).count(), 27 * 3 + 9 * 9 + 3 * 27);
    }

    #[test]
    fn display() {
        let x = ch(&[(&[0, 1], 1), (&[1, 0], -2)]);
        assert_eq!(x.to_string(), "(0,1) -2(1,0)");
        assert_eq!(Chain::zero(3).to_string(), "0");
    }
}
