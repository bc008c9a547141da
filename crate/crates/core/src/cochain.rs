//! Cochains `C^n(G, M) = Hom_G(F_n, M)` stored in inhomogeneous form, and the
//! operations on them.
//!
//! A cochain of degree `n` is a table `G^n → M`. The equivariant map on the
//! bar resolution it stands for is the homogeneous view
//! `ā(t_0, …, t_n) = t_0 · a(t_0⁻¹t_1, …, t_{n-1}⁻¹t_n)`.
//!
//! Most operations come in two forms: a direct formula on the table, and a
//! `*_by_pairing` form that evaluates the homogeneous view against the
//! corresponding chain-level map. The two are computed independently and are
//! compared in the test suites.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{Elem, Group};
use crate::homotopies::{lambda, lambda_alt, phi_s, phi_s_alt, SignConvention};
use crate::module::{
    checked_add, checked_mul, pure_tensor_coords, tensor_modules, twist_coords, GModule,
    ModuleElement,
};
use crate::resolution::{alexander_whitney, boundary, swap, translate, BarTuple, Chain, TensorChain};

/// Which homotopy family to use: the primary formulas or the alternates built
/// from `φ'_s = -τ_s φ_{s⁻¹}` and `λ' = -τλ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    #[default]
    Main,
    Alt,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::Main => "main",
            Variant::Alt => "alt",
        }
    }
}

impl std::str::FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "main" => Ok(Variant::Main),
            "alt" => Ok(Variant::Alt),
            other => Err(Error::field(
                "variant",
                format!("expected `main` or `alt`, got {other:?}"),
            )),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Cochain {
    module: Arc<GModule>,
    degree: usize,
    values: Vec<i64>,
}

impl PartialEq for Cochain {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.values == other.values && *self.module == *other.module
    }
}

impl Eq for Cochain {}

/// Calls `f(index, args)` for every `args ∈ G^n` in lexicographic order.
pub(crate) fn for_each_args(order: usize, n: usize, mut f: impl FnMut(usize, &[Elem])) {
    let mut args = vec![0 as Elem; n];
    let total = order.pow(n as u32);
    for idx in 0..total {
        f(idx, &args);
        for slot in args.iter_mut().rev() {
            *slot += 1;
            if (*slot as usize) < order {
                break;
            }
            *slot = 0;
        }
    }
}

/// `(1, s_1, s_1 s_2, …, s_1⋯s_n)`: the homogeneous tuple at which the
/// homogeneous view reproduces the inhomogeneous value.
pub fn homogeneous_point(g: &Group, args: &[Elem]) -> BarTuple {
    let mut v = Vec::with_capacity(args.len() + 1);
    let mut acc = g.id();
    v.push(acc);
    for &s in args {
        acc = g.mul(acc, s);
        v.push(acc);
    }
    v.into()
}

impl Cochain {
    pub fn zero(module: &Arc<GModule>, degree: usize) -> Self {
        let len = module.group().order().pow(degree as u32) * module.rank();
        Cochain {
            module: Arc::clone(module),
            degree,
            values: vec![0; len],
        }
    }

    /// The cochain that is generator `j` at `args` and zero elsewhere.
    pub fn basis(module: &Arc<GModule>, args: &[Elem], generator: usize) -> Self {
        let mut c = Cochain::zero(module, args.len());
        let k = module.rank();
        let i = c.index(args);
        c.values[i * k + generator] = 1;
        module.reduce_coords(&mut c.values[i * k..(i + 1) * k]);
        c
    }

    /// Every basis cochain of the given degree, with its position and generator.
    pub fn basis_all(module: &Arc<GModule>, degree: usize) -> Vec<(Vec<Elem>, usize, Cochain)> {
        let mut out = Vec::new();
        for_each_args(module.group().order(), degree, |_, args| {
            for j in 0..module.rank() {
                out.push((args.to_vec(), j, Cochain::basis(module, args, j)));
            }
        });
        out
    }

    /// Builds a cochain by evaluating `f(args, out)` at every point; `out`
    /// starts zeroed and is reduced afterwards.
    pub fn from_fn(
        module: &Arc<GModule>,
        degree: usize,
        mut f: impl FnMut(&[Elem], &mut [i64]),
    ) -> Self {
        let mut c = Cochain::zero(module, degree);
        let k = module.rank();
        let order = module.group().order();
        let values = &mut c.values;
        for_each_args(order, degree, |i, args| {
            let slot = &mut values[i * k..(i + 1) * k];
            f(args, slot);
            module.reduce_coords(slot);
        });
        c
    }

    pub fn group(&self) -> &Arc<Group> {
        self.module.group()
    }

    pub fn module(&self) -> &Arc<GModule> {
        &self.module
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&x| x == 0)
    }

    /// The flat table: entry `(args, j)` sits at `index(args) * rank + j`,
    /// with `args` ordered lexicographically.
    pub fn values(&self) -> &[i64] {
        &self.values
    }

    #[inline]
    fn index(&self, args: &[Elem]) -> usize {
        debug_assert_eq!(args.len(), self.degree);
        let order = self.group().order();
        args.iter().fold(0, |acc, &x| acc * order + x as usize)
    }

    #[inline]
    pub fn value(&self, args: &[Elem]) -> &[i64] {
        let k = self.module.rank();
        let i = self.index(args);
        &self.values[i * k..(i + 1) * k]
    }

    pub fn element(&self, args: &[Elem]) -> ModuleElement {
        self.module
            .element(self.value(args).to_vec())
            .expect("rank matches")
    }

    pub fn set(&mut self, args: &[Elem], coords: &[i64]) -> Result<()> {
        if args.len() != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree as i64,
                found: args.len() as i64,
            });
        }
        if coords.len() != self.module.rank() {
            return Err(Error::InvalidModule(format!(
                "{} coordinates for a module of rank {}",
                coords.len(),
                self.module.rank()
            )));
        }
        if args.iter().any(|&x| x as usize >= self.group().order()) {
            return Err(Error::UnknownElement(format!("{args:?}")));
        }
        let k = self.module.rank();
        let i = self.index(args);
        let slot = &mut self.values[i * k..(i + 1) * k];
        slot.copy_from_slice(coords);
        self.module.reduce_coords(slot);
        Ok(())
    }

    /// Nonzero entries in lexicographic order.
    pub fn entries(&self) -> Vec<(Vec<Elem>, Vec<i64>)> {
        let mut out = Vec::new();
        for_each_args(self.group().order(), self.degree, |_, args| {
            let v = self.value(args);
            if v.iter().any(|&x| x != 0) {
                out.push((args.to_vec(), v.to_vec()));
            }
        });
        out
    }

    /// First point where `self` and `other` differ.
    pub fn first_difference(&self, other: &Cochain) -> Option<(Vec<Elem>, Vec<i64>, Vec<i64>)> {
        let mut found = None;
        for_each_args(self.group().order(), self.degree, |_, args| {
            if found.is_none() && self.value(args) != other.value(args) {
                found = Some((
                    args.to_vec(),
                    self.value(args).to_vec(),
                    other.value(args).to_vec(),
                ));
            }
        });
        found
    }

    fn combine(&self, other: &Cochain, c: i64) -> Result<Cochain> {
        if *self.module != *other.module {
            return Err(Error::ModuleMismatch);
        }
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree as i64,
                found: other.degree as i64,
            });
        }
        let k = self.module.rank();
        let mut values: Vec<i64> = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(&a, &b)| checked_add(a, checked_mul(b, c)))
            .collect();
        for chunk in values.chunks_mut(k.max(1)) {
            self.module.reduce_coords(chunk);
        }
        Ok(Cochain {
            module: Arc::clone(&self.module),
            degree: self.degree,
            values,
        })
    }

    pub fn plus(&self, other: &Cochain) -> Result<Cochain> {
        self.combine(other, 1)
    }

    pub fn minus(&self, other: &Cochain) -> Result<Cochain> {
        self.combine(other, -1)
    }

    pub fn scaled(&self, c: i64) -> Cochain {
        let zero = Cochain::zero(&self.module, self.degree);
        zero.combine(self, c).expect("same shape")
    }

    /// `ā(t_0, …, t_n) = t_0 · a(t_0⁻¹t_1, …, t_{n-1}⁻¹t_n)`.
    pub fn homogeneous(&self, t: &[Elem]) -> Vec<i64> {
        assert_eq!(t.len(), self.degree + 1, "homogeneous view takes n+1 entries");
        let g = self.group();
        let args: Vec<Elem> = t.windows(2).map(|w| g.mul(g.inv(w[0]), w[1])).collect();
        self.module.act_coords(t[0], self.value(&args))
    }
}

impl fmt::Display for Cochain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C^{}[{}]{{", self.degree, self.module.label())?;
        for (i, (args, v)) in self.entries().into_iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{args:?}: {v:?}")?;
        }
        write!(f, "}}")
    }
}

fn sign(k: usize) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

#[inline]
fn add_into(acc: &mut [i64], v: &[i64], c: i64) {
    for (a, &x) in acc.iter_mut().zip(v) {
        *a = checked_add(*a, checked_mul(x, c));
    }
}

/// Evaluates the homogeneous view of `a` on a chain: `Σ c_x ā(x)`.
pub fn pair(a: &Cochain, c: &Chain) -> Result<ModuleElement> {
    if c.degree() != a.degree as i64 {
        return Err(Error::DegreeMismatch {
            expected: a.degree as i64,
            found: c.degree(),
        });
    }
    let mut acc = vec![0i64; a.module.rank()];
    for (t, &coef) in c.iter() {
        add_into(&mut acc, &a.homogeneous(t.entries()), coef);
    }
    a.module.element(acc)
}

fn pair_coords(a: &Cochain, c: &Chain) -> Vec<i64> {
    pair(a, c).expect("degree checked by caller").into_coords()
}

/// `da` by the inhomogeneous formula
/// `(da)(s_1, …, s_{n+1}) = s_1·a(s_2, …) + Σ_{i=1}^n (-1)^i a(…, s_i s_{i+1}, …)
/// + (-1)^{n+1} a(s_1, …, s_n)`.
pub fn differential(a: &Cochain) -> Cochain {
    let g = Arc::clone(a.group());
    let n = a.degree;
    let mut buf = vec![0 as Elem; n];
    let mut tmp = vec![0i64; a.module.rank()];
    Cochain::from_fn(&a.module, n + 1, |s, out| {
        a.module.act_into(s[0], a.value(&s[1..]), &mut tmp);
        add_into(out, &tmp, 1);
        for i in 1..=n {
            buf[..i - 1].copy_from_slice(&s[..i - 1]);
            buf[i - 1] = g.mul(s[i - 1], s[i]);
            buf[i..].copy_from_slice(&s[i + 1..]);
            add_into(out, a.value(&buf), sign(i));
        }
        add_into(out, a.value(&s[..n]), sign(n + 1));
    })
}

/// `da = a ∘ ∂`, through the homogeneous view.
pub fn differential_by_pairing(a: &Cochain) -> Cochain {
    let g = Arc::clone(a.group());
    Cochain::from_fn(&a.module, a.degree + 1, |s, out| {
        let x = Chain::basis(homogeneous_point(&g, s));
        let d = boundary(&x).expect("degree at least 1");
        out.copy_from_slice(&pair_coords(a, &d));
    })
}

/// `(s·a)(s_1, …, s_n) = s·a(s⁻¹s_1 s, …, s⁻¹s_n s)`.
pub fn g_action(s: Elem, a: &Cochain) -> Cochain {
    let g = Arc::clone(a.group());
    let mut buf = vec![0 as Elem; a.degree];
    Cochain::from_fn(&a.module, a.degree, |args, out| {
        for (b, &x) in buf.iter_mut().zip(args) {
            *b = g.conj(s, x);
        }
        a.module.act_into(s, a.value(&buf), out);
    })
}

/// `s·a = a ∘ τ_s`, through the homogeneous view.
pub fn g_action_by_pairing(s: Elem, a: &Cochain) -> Cochain {
    let g = Arc::clone(a.group());
    Cochain::from_fn(&a.module, a.degree, |args, out| {
        let x = Chain::basis(homogeneous_point(&g, args));
        out.copy_from_slice(&pair_coords(a, &translate(&g, s, &x)));
    })
}

fn check_same_group(a: &Cochain, b: &Cochain) -> Result<()> {
    if a.module.same_group(&b.module) {
        Ok(())
    } else {
        Err(Error::GroupMismatch)
    }
}

/// `(a × b)(x ⊗ y) = ā(x) ⊗ b̄(y)`, zero off bidegree `(deg a, deg b)`.
///
/// The result lives in `M ⊗ N`. A tensor chain whose total degree is not
/// `deg a + deg b` is rejected.
pub fn cross(a: &Cochain, b: &Cochain, tc: &TensorChain) -> Result<ModuleElement> {
    check_same_group(a, b)?;
    let target = tensor_modules(&a.module, &b.module)?;
    let total = (a.degree + b.degree) as i64;
    if tc.degree() != total {
        return Err(Error::DegreeMismatch {
            expected: total,
            found: tc.degree(),
        });
    }
    target.element(cross_coords(a, b, &target, tc))
}

fn cross_coords(a: &Cochain, b: &Cochain, target: &GModule, tc: &TensorChain) -> Vec<i64> {
    let mut acc = vec![0i64; target.rank()];
    for ((x, y), &c) in tc.iter() {
        if x.degree() == a.degree as i64 && y.degree() == b.degree as i64 {
            let v = pure_tensor_coords(target, &a.homogeneous(x.entries()), &b.homogeneous(y.entries()));
            add_into(&mut acc, &v, c);
        }
    }
    target.reduce_coords(&mut acc);
    acc
}

/// `(a ∪ b)(s_1, …, s_{p+q}) = a(s_1, …, s_p) ⊗ (s_1⋯s_p)·b(s_{p+1}, …, s_{p+q})`.
pub fn cup(a: &Cochain, b: &Cochain) -> Result<Cochain> {
    check_same_group(a, b)?;
    let target = tensor_modules(&a.module, &b.module)?;
    let g = Arc::clone(a.group());
    let p = a.degree;
    Ok(Cochain::from_fn(&target, p + b.degree, |s, out| {
        let tp = g.product(&s[..p]);
        let bv = b.module.act_coords(tp, b.value(&s[p..]));
        out.copy_from_slice(&pure_tensor_coords(&target, a.value(&s[..p]), &bv));
    }))
}

/// `a ∪ b = (a × b) ∘ Δ`.
pub fn cup_by_pairing(a: &Cochain, b: &Cochain) -> Result<Cochain> {
    check_same_group(a, b)?;
    let target = tensor_modules(&a.module, &b.module)?;
    let g = Arc::clone(a.group());
    Ok(Cochain::from_fn(&target, a.degree + b.degree, |s, out| {
        let d = alexander_whitney(&Chain::basis(homogeneous_point(&g, s)));
        out.copy_from_slice(&cross_coords(a, b, &target, &d));
    }))
}

/// `t_*`: applies the twist `N ⊗ M → M ⊗ N` pointwise.
pub fn twist_cochain(c: &Cochain) -> Result<Cochain> {
    let (n, m) = c.module.factors().ok_or(Error::NotTensor)?;
    let target = tensor_modules(m, n)?;
    let (kn, km) = (n.rank(), m.rank());
    Ok(Cochain::from_fn(&target, c.degree, |args, out| {
        out.copy_from_slice(&twist_coords(kn, km, c.value(args)));
    }))
}

/// `a ∪̄ b = (-1)^{pq} t_*(b ∪ a)`.
pub fn bar_cup(a: &Cochain, b: &Cochain) -> Result<Cochain> {
    let ba = twist_cochain(&cup(b, a)?)?;
    Ok(ba.scaled(sign(a.degree * b.degree)))
}

/// `a ∪̄ b = (a × b) ∘ τ ∘ Δ`.
pub fn bar_cup_by_pairing(a: &Cochain, b: &Cochain) -> Result<Cochain> {
    check_same_group(a, b)?;
    let target = tensor_modules(&a.module, &b.module)?;
    let g = Arc::clone(a.group());
    Ok(Cochain::from_fn(&target, a.degree + b.degree, |s, out| {
        let d = swap(&alexander_whitney(&Chain::basis(homogeneous_point(&g, s))));
        out.copy_from_slice(&cross_coords(a, b, &target, &d));
    }))
}

fn require_positive_degree(a: &Cochain) -> Result<usize> {
    if a.degree == 0 {
        return Err(Error::InvalidDegree {
            op: "action homotopy",
            degree: 0,
        });
    }
    Ok(a.degree - 1)
}

/// The cochain homotopy `h_s : s ≃ 1`, `C^{n+1} → C^n`.
///
/// * `Main`: `h_s(a)(s_1, …, s_n) = Σ_i (-1)^i a(s_1, …, s_i, s, s⁻¹s_{i+1}s, …, s⁻¹s_n s)`
/// * `Alt`: `h'_s(a)(s_1, …, s_n) = -Σ_i (-1)^i s·a(s⁻¹s_1 s, …, s⁻¹s_i s, s⁻¹, s_{i+1}, …, s_n)`
pub fn homotopy_action(s: Elem, a: &Cochain, variant: Variant) -> Result<Cochain> {
    let n = require_positive_degree(a)?;
    let g = Arc::clone(a.group());
    let k = a.module.rank();
    let mut buf = vec![0 as Elem; n + 1];
    let mut tmp = vec![0i64; k];
    Ok(Cochain::from_fn(&a.module, n, |args, out| {
        for i in 0..=n {
            match variant {
                Variant::Main => {
                    buf[..i].copy_from_slice(&args[..i]);
                    buf[i] = s;
                    for j in i..n {
                        buf[j + 1] = g.conj(s, args[j]);
                    }
                    add_into(out, a.value(&buf), sign(i));
                }
                Variant::Alt => {
                    for j in 0..i {
                        buf[j] = g.conj(s, args[j]);
                    }
                    buf[i] = g.inv(s);
                    buf[i + 1..].copy_from_slice(&args[i..]);
                    a.module.act_into(s, a.value(&buf), &mut tmp);
                    add_into(out, &tmp, -sign(i));
                }
            }
        }
    }))
}

/// `h_s(a) = a ∘ φ_s` (resp. `a ∘ φ'_s`), through the homogeneous view.
pub fn homotopy_action_by_pairing(s: Elem, a: &Cochain, variant: Variant) -> Result<Cochain> {
    let n = require_positive_degree(a)?;
    let g = Arc::clone(a.group());
    Ok(Cochain::from_fn(&a.module, n, |args, out| {
        let x = Chain::basis(homogeneous_point(&g, args));
        let h = match variant {
            Variant::Main => phi_s(&g, s, &x),
            Variant::Alt => phi_s_alt(&g, s, &x),
        };
        out.copy_from_slice(&pair_coords(a, &h));
    }))
}

/// The cochain homotopy `h : ∪̄ ≃ ∪` on a pair `a ∈ C^p(M)`, `b ∈ C^q(N)`,
/// landing in `C^{p+q-1}(M ⊗ N)`; zero when `p` or `q` is 0 (in degree
/// `max(p+q-1, 0)`). With `n = p+q-1` and `e` from `conv`:
///
/// * `Main`: `(-1)^{pq+q} Σ_{i<p} (-1)^{e(q,i)} a(s_1, …, s_i, s_{i+1}⋯s_{i+q}, s_{i+q+1}, …, s_n)
///   ⊗ (s_1⋯s_i)·b(s_{i+1}, …, s_{i+q})`
/// * `Alt`: `-(-1)^p Σ_{i<q} (-1)^{e(p,i)} (s_1⋯s_i)·a(s_{i+1}, …, s_{i+p})
///   ⊗ b(s_1, …, s_i, s_{i+1}⋯s_{i+p}, s_{i+p+1}, …, s_n)`
pub fn homotopy_cup(
    a: &Cochain,
    b: &Cochain,
    variant: Variant,
    conv: SignConvention,
) -> Result<Cochain> {
    check_same_group(a, b)?;
    let target = tensor_modules(&a.module, &b.module)?;
    let (p, q) = (a.degree, b.degree);
    if p == 0 || q == 0 {
        return Ok(Cochain::zero(&target, (p + q).saturating_sub(1)));
    }
    let n = p + q - 1;
    let g = Arc::clone(a.group());
    let mut abuf = vec![0 as Elem; p];
    let mut bbuf = vec![0 as Elem; q];
    Ok(Cochain::from_fn(&target, n, |s, out| match variant {
        Variant::Main => {
            let outer = sign(p * q + q);
            for i in 0..p {
                abuf[..i].copy_from_slice(&s[..i]);
                abuf[i] = g.product(&s[i..i + q]);
                abuf[i + 1..].copy_from_slice(&s[i + q..]);
                let ti = g.product(&s[..i]);
                let bv = b.module.act_coords(ti, b.value(&s[i..i + q]));
                let v = pure_tensor_coords(&target, a.value(&abuf), &bv);
                add_into(out, &v, outer * sign(conv.inner_exponent(q, i)));
            }
        }
        Variant::Alt => {
            let outer = -sign(p);
            for i in 0..q {
                bbuf[..i].copy_from_slice(&s[..i]);
                bbuf[i] = g.product(&s[i..i + p]);
                bbuf[i + 1..].copy_from_slice(&s[i + p..]);
                let ti = g.product(&s[..i]);
                let av = a.module.act_coords(ti, a.value(&s[i..i + p]));
                let v = pure_tensor_coords(&target, &av, b.value(&bbuf));
                add_into(out, &v, outer * sign(conv.inner_exponent(p, i)));
            }
        }
    }))
}

/// `h(a ⊗ b) = (a × b) ∘ λ` (resp. `λ'`), through the homogeneous views.
pub fn homotopy_cup_by_pairing(
    a: &Cochain,
    b: &Cochain,
    variant: Variant,
    conv: SignConvention,
) -> Result<Cochain> {
    check_same_group(a, b)?;
    let target = tensor_modules(&a.module, &b.module)?;
    let n = (a.degree + b.degree).saturating_sub(1);
    if a.degree + b.degree == 0 {
        return Ok(Cochain::zero(&target, 0));
    }
    let g = Arc::clone(a.group());
    Ok(Cochain::from_fn(&target, n, |s, out| {
        let x = Chain::basis(homogeneous_point(&g, s));
        let l = match variant {
            Variant::Main => lambda(&x, conv),
            Variant::Alt => lambda_alt(&x, conv),
        };
        out.copy_from_slice(&cross_coords(a, b, &target, &l));
    }))
}
