//! Finitely generated G-modules in diagonal form, their elements, tensor
//! products and the twist isomorphism.
//!
//! A module of rank `k` is `Z^k` modulo the diagonal relations `m_i e_i`
//! (`m_i = 0` meaning no relation), with `G` acting through integer matrices.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::group::{Elem, Group};

#[derive(Debug, Clone)]
pub struct GModule {
    group: Arc<Group>,
    rank: usize,
    moduli: Vec<i64>,
    /// One row-major `rank × rank` matrix per group element.
    action: Vec<Vec<i64>>,
    label: String,
    factors: Option<(Arc<GModule>, Arc<GModule>)>,
}

impl PartialEq for GModule {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.group, &other.group) || self.group == other.group)
            && self.moduli == other.moduli
            && self.action == other.action
    }
}

impl Eq for GModule {}

#[inline]
pub(crate) fn reduce(x: i64, m: i64) -> i64 {
    if m > 0 {
        x.rem_euclid(m)
    } else {
        x
    }
}

pub(crate) fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl GModule {
    /// Builds a module from moduli and per-element action matrices, checking
    /// that the action is a homomorphism into the automorphisms of the module.
    pub fn new(
        group: Arc<Group>,
        moduli: Vec<i64>,
        action: Vec<Vec<Vec<i64>>>,
        label: impl Into<String>,
    ) -> Result<Self> {
        let rank = moduli.len();
        if moduli.iter().any(|&m| m < 0) {
            return Err(Error::InvalidModule("negative modulus".into()));
        }
        if action.len() != group.order() {
            return Err(Error::InvalidModule(format!(
                "{} action matrices for a group of order {}",
                action.len(),
                group.order()
            )));
        }
        let mut flat = Vec::with_capacity(action.len());
        for (s, m) in action.into_iter().enumerate() {
            if m.len() != rank || m.iter().any(|row| row.len() != rank) {
                return Err(Error::InvalidModule(format!(
                    "action matrix of element {s} is not {rank}×{rank}"
                )));
            }
            let mut v: Vec<i64> = m.into_iter().flatten().collect();
            for (i, x) in v.iter_mut().enumerate() {
                *x = reduce(*x, moduli[i / rank.max(1)]);
            }
            flat.push(v);
        }
        let module = GModule {
            group,
            rank,
            moduli,
            action: flat,
            label: label.into(),
            factors: None,
        };
        module.validate()?;
        Ok(module)
    }

    fn validate(&self) -> Result<()> {
        let k = self.rank;
        let g = &self.group;
        // each matrix must send relations to relations
        for (s, a) in self.action.iter().enumerate() {
            for c in 0..k {
                let mc = self.moduli[c];
                if mc == 0 {
                    continue;
                }
                for r in 0..k {
                    let v = mc
                        .checked_mul(a[r * k + c])
                        .ok_or(Error::Overflow("module validation"))?;
                    if reduce(v, self.moduli[r]) != 0 {
                        return Err(Error::InvalidModule(format!(
                            "action of element {s} does not respect the relation on generator {c}"
                        )));
                    }
                }
            }
        }
        let identity = self.identity_matrix();
        if self.action[g.id() as usize] != identity {
            return Err(Error::InvalidModule(
                "identity element does not act as the identity".into(),
            ));
        }
        for s in g.elements() {
            for t in g.elements() {
                let prod = self.mat_mul(&self.action[s as usize], &self.action[t as usize])?;
                if prod != self.action[g.mul(s, t) as usize] {
                    return Err(Error::InvalidModule(format!(
                        "action is not a homomorphism at ({s}, {t})"
                    )));
                }
            }
            let prod = self.mat_mul(&self.action[s as usize], &self.action[g.inv(s) as usize])?;
            if prod != identity {
                return Err(Error::InvalidModule(format!(
                    "action of element {s} is not invertible"
                )));
            }
        }
        Ok(())
    }

    fn identity_matrix(&self) -> Vec<i64> {
        let k = self.rank;
        (0..k * k)
            .map(|i| reduce(i64::from(i / k == i % k), self.moduli[i / k]))
            .collect()
    }

    fn mat_mul(&self, a: &[i64], b: &[i64]) -> Result<Vec<i64>> {
        let k = self.rank;
        let mut out = vec![0i64; k * k];
        for r in 0..k {
            for c in 0..k {
                let mut acc = 0i64;
                for j in 0..k {
                    acc = a[r * k + j]
                        .checked_mul(b[j * k + c])
                        .and_then(|x| acc.checked_add(x))
                        .ok_or(Error::Overflow("module action"))?;
                }
                out[r * k + c] = reduce(acc, self.moduli[r]);
            }
        }
        Ok(out)
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn moduli(&self) -> &[i64] {
        &self.moduli
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// The `rank × rank` matrix of `s`, row-major.
    pub fn action_matrix(&self, s: Elem) -> &[i64] {
        &self.action[s as usize]
    }

    /// The parents `(M, N)` when this module is `M ⊗ N`.
    pub fn factors(&self) -> Option<&(Arc<GModule>, Arc<GModule>)> {
        self.factors.as_ref()
    }

    pub fn same_group(&self, other: &GModule) -> bool {
        Arc::ptr_eq(&self.group, &other.group) || self.group == other.group
    }

    /// Reduces coordinates to canonical representatives in place.
    pub fn reduce_coords(&self, coords: &mut [i64]) {
        for (x, &m) in coords.iter_mut().zip(&self.moduli) {
            *x = reduce(*x, m);
        }
    }

    /// `out = s · x`, reduced.
    pub fn act_into(&self, s: Elem, x: &[i64], out: &mut [i64]) {
        let k = self.rank;
        let a = &self.action[s as usize];
        for r in 0..k {
            let mut acc = 0i64;
            for j in 0..k {
                acc = checked_add(acc, checked_mul(a[r * k + j], x[j]));
            }
            out[r] = reduce(acc, self.moduli[r]);
        }
    }

    pub fn act_coords(&self, s: Elem, x: &[i64]) -> Vec<i64> {
        let mut out = vec![0; self.rank];
        self.act_into(s, x, &mut out);
        out
    }

    pub fn zero(self: &Arc<Self>) -> ModuleElement {
        ModuleElement {
            module: Arc::clone(self),
            coords: vec![0; self.rank],
        }
    }

    pub fn element(self: &Arc<Self>, coords: Vec<i64>) -> Result<ModuleElement> {
        if coords.len() != self.rank {
            return Err(Error::InvalidModule(format!(
                "{} coordinates for a module of rank {}",
                coords.len(),
                self.rank
            )));
        }
        let mut coords = coords;
        self.reduce_coords(&mut coords);
        Ok(ModuleElement {
            module: Arc::clone(self),
            coords,
        })
    }
}

impl fmt::Display for GModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (rank {}, moduli {:?})", self.label, self.rank, self.moduli)
    }
}

#[inline]
pub(crate) fn checked_add(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("integer overflow in exact arithmetic")
}

#[inline]
pub(crate) fn checked_mul(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("integer overflow in exact arithmetic")
}

/// An element of a G-module with canonical coordinates.
#[derive(Debug, Clone)]
pub struct ModuleElement {
    module: Arc<GModule>,
    coords: Vec<i64>,
}

impl PartialEq for ModuleElement {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords && *self.module == *other.module
    }
}

impl Eq for ModuleElement {}

impl ModuleElement {
    pub fn module(&self) -> &Arc<GModule> {
        &self.module
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&x| x == 0)
    }

    pub fn add(&self, other: &ModuleElement) -> Result<ModuleElement> {
        self.zip_with(other, |a, b| a.checked_add(b))
    }

    pub fn sub(&self, other: &ModuleElement) -> Result<ModuleElement> {
        self.zip_with(other, |a, b| a.checked_sub(b))
    }

    pub fn scale(&self, c: i64) -> Result<ModuleElement> {
        let coords = self
            .coords
            .iter()
            .map(|&x| x.checked_mul(c))
            .collect::<Option<Vec<_>>>()
            .ok_or(Error::Overflow("module element"))?;
        self.module.element(coords)
    }

    fn zip_with(
        &self,
        other: &ModuleElement,
        f: impl Fn(i64, i64) -> Option<i64>,
    ) -> Result<ModuleElement> {
        if *self.module != *other.module {
            return Err(Error::ModuleMismatch);
        }
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(&a, &b)| f(a, b))
            .collect::<Option<Vec<_>>>()
            .ok_or(Error::Overflow("module element"))?;
        self.module.element(coords)
    }
}

impl fmt::Display for ModuleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coords)
    }
}

/// `s · m`.
pub fn act(s: Elem, m: &ModuleElement) -> ModuleElement {
    ModuleElement {
        module: Arc::clone(&m.module),
        coords: m.module.act_coords(s, &m.coords),
    }
}

/// `M ⊗ N` over `Z`, with the diagonal action.
///
/// Generator `(i, j)` sits at index `i * rank(N) + j` with modulus
/// `gcd(m_i, n_j)` (so `Z/a ⊗ Z/b = Z/gcd(a, b)` and `Z ⊗ Z/b = Z/b`); the
/// action of `s` is the Kronecker product of the two action matrices.
pub fn tensor_modules(m: &Arc<GModule>, n: &Arc<GModule>) -> Result<Arc<GModule>> {
    if !m.same_group(n) {
        return Err(Error::GroupMismatch);
    }
    let (km, kn) = (m.rank, n.rank);
    let rank = km * kn;
    let moduli: Vec<i64> = (0..rank)
        .map(|x| gcd(m.moduli[x / kn], n.moduli[x % kn]))
        .collect();
    let action = m
        .action
        .iter()
        .zip(&n.action)
        .map(|(a, b)| {
            let mut out = vec![0i64; rank * rank];
            for r in 0..rank {
                let (ri, rj) = (r / kn, r % kn);
                for c in 0..rank {
                    let (ci, cj) = (c / kn, c % kn);
                    out[r * rank + c] = reduce(
                        checked_mul(a[ri * km + ci], b[rj * kn + cj]),
                        moduli[r],
                    );
                }
            }
            out
        })
        .collect();
    Ok(Arc::new(GModule {
        group: Arc::clone(&m.group),
        rank,
        moduli,
        action,
        label: format!("({})⊗({})", m.label, n.label),
        factors: Some((Arc::clone(m), Arc::clone(n))),
    }))
}

/// Coordinates of the pure tensor `x ⊗ y` in a module built by
/// [`tensor_modules`].
pub fn pure_tensor_coords(target: &GModule, x: &[i64], y: &[i64]) -> Vec<i64> {
    let mut out = Vec::with_capacity(x.len() * y.len());
    for &a in x {
        for &b in y {
            out.push(checked_mul(a, b));
        }
    }
    target.reduce_coords(&mut out);
    out
}

pub fn pure_tensor(
    target: &Arc<GModule>,
    x: &ModuleElement,
    y: &ModuleElement,
) -> Result<ModuleElement> {
    match target.factors() {
        Some((m, n)) if **m == *x.module && **n == *y.module => Ok(ModuleElement {
            module: Arc::clone(target),
            coords: pure_tensor_coords(target, &x.coords, &y.coords),
        }),
        Some(_) => Err(Error::ModuleMismatch),
        None => Err(Error::NotTensor),
    }
}

/// Coordinates of `t(x)` for `x ∈ N ⊗ M`, where `rank_n`/`rank_m` are the
/// parent ranks of the source module.
pub fn twist_coords(rank_n: usize, rank_m: usize, x: &[i64]) -> Vec<i64> {
    let mut out = vec![0; x.len()];
    for j in 0..rank_n {
        for i in 0..rank_m {
            out[i * rank_n + j] = x[j * rank_m + i];
        }
    }
    out
}

/// The twist `t: N ⊗ M → M ⊗ N`, `β ⊗ α ↦ α ⊗ β`.
pub fn twist(x: &ModuleElement) -> Result<ModuleElement> {
    let (n, m) = x.module.factors().ok_or(Error::NotTensor)?;
    let target = tensor_modules(m, n)?;
    Ok(ModuleElement {
        coords: twist_coords(n.rank, m.rank, &x.coords),
        module: target,
    })
}

/// Description of a module over a given group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModuleSpec {
    TrivialInt,
    TrivialMod(i64),
    /// `Z` with `s` acting by the group's declared sign character.
    Sign,
    Regular,
    Explicit {
        moduli: Vec<i64>,
        action: Vec<Vec<Vec<i64>>>,
        label: Option<String>,
    },
    Tensor(Box<ModuleSpec>, Box<ModuleSpec>),
}

impl ModuleSpec {
    pub fn label(&self) -> String {
        match self {
            ModuleSpec::TrivialInt => "trivial-int".into(),
            ModuleSpec::TrivialMod(m) => format!("trivial-mod:{m}"),
            ModuleSpec::Sign => "sign".into(),
            ModuleSpec::Regular => "regular".into(),
            ModuleSpec::Explicit { label, moduli, .. } => label
                .clone()
                .unwrap_or_else(|| format!("explicit:{}", moduli.len())),
            ModuleSpec::Tensor(a, b) => format!("({})⊗({})", a.label(), b.label()),
        }
    }

    /// Parses `{"kind": ..., "params": ...}`, the explicit form
    /// `{"moduli": [...], "action": [[[...]]], "label": ...}` (one matrix per
    /// group element, in element order), or a bare string.
    pub fn from_json(v: &Value) -> Result<Self> {
        match v {
            Value::String(s) => s.parse(),
            Value::Object(obj) => {
                if let Some(moduli) = obj.get("moduli") {
                    let moduli = serde_json::from_value(moduli.clone())
                        .map_err(|e| Error::field("moduli", e.to_string()))?;
                    let action = obj
                        .get("action")
                        .ok_or_else(|| Error::field("action", "missing"))?;
                    let action = serde_json::from_value(action.clone())
                        .map_err(|e| Error::field("action", e.to_string()))?;
                    let label = obj.get("label").and_then(Value::as_str).map(str::to_string);
                    return Ok(ModuleSpec::Explicit {
                        moduli,
                        action,
                        label,
                    });
                }
                let kind = obj
                    .get("kind")
                    .and_then(Value::as_str)
                    .ok_or_else(|| Error::field("kind", "missing or not a string"))?;
                let params = obj.get("params").cloned().unwrap_or(Value::Null);
                match kind {
                    "trivial-int" => Ok(ModuleSpec::TrivialInt),
                    "trivial-mod" => {
                        let m = params
                            .get("m")
                            .and_then(Value::as_i64)
                            .ok_or_else(|| Error::field("params.m", "missing or not an integer"))?;
                        if m <= 0 {
                            return Err(Error::field("params.m", "modulus must be positive"));
                        }
                        Ok(ModuleSpec::TrivialMod(m))
                    }
                    "sign" => Ok(ModuleSpec::Sign),
                    "regular" => Ok(ModuleSpec::Regular),
                    "tensor" => {
                        let left = params
                            .get("left")
                            .ok_or_else(|| Error::field("params.left", "missing"))?;
                        let right = params
                            .get("right")
                            .ok_or_else(|| Error::field("params.right", "missing"))?;
                        Ok(ModuleSpec::Tensor(
                            Box::new(ModuleSpec::from_json(left)?),
                            Box::new(ModuleSpec::from_json(right)?),
                        ))
                    }
                    other => Err(Error::field("kind", format!("unknown module kind {other:?}"))),
                }
            }
            _ => Err(Error::field("module", "expected a string or an object")),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            ModuleSpec::TrivialInt | ModuleSpec::Sign | ModuleSpec::Regular => {
                json!(self.label())
            }
            ModuleSpec::TrivialMod(m) => json!({"kind": "trivial-mod", "params": {"m": m}}),
            ModuleSpec::Explicit {
                moduli,
                action,
                label,
            } => {
                let mut v = json!({"moduli": moduli, "action": action});
                if let Some(l) = label {
                    v["label"] = json!(l);
                }
                v
            }
            ModuleSpec::Tensor(a, b) => json!({
                "kind": "tensor",
                "params": {"left": a.to_json(), "right": b.to_json()}
            }),
        }
    }
}

impl FromStr for ModuleSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "trivial-int" | "Z" => return Ok(ModuleSpec::TrivialInt),
            "sign" => return Ok(ModuleSpec::Sign),
            "regular" => return Ok(ModuleSpec::Regular),
            _ => {}
        }
        if let Some(m) = s.strip_prefix("trivial-mod:") {
            let m: i64 = m
                .trim()
                .parse()
                .map_err(|_| Error::field("module", format!("bad modulus in {s:?}")))?;
            if m <= 0 {
                return Err(Error::field("module", "modulus must be positive"));
            }
            return Ok(ModuleSpec::TrivialMod(m));
        }
        Err(Error::field("module", format!("unknown module {s:?}")))
    }
}

/// Builds and validates a module over `group`.
pub fn build_gmodule(spec: &ModuleSpec, group: &Arc<Group>) -> Result<Arc<GModule>> {
    let n = group.order();
    let label = spec.label();
    let module = match spec {
        ModuleSpec::TrivialInt => GModule::new(Arc::clone(group), vec![0], vec![vec![vec![1]]; n], label)?,
        ModuleSpec::TrivialMod(m) => {
            if *m <= 0 {
                return Err(Error::InvalidModule("modulus must be positive".into()));
            }
            GModule::new(Arc::clone(group), vec![*m], vec![vec![vec![1]]; n], label)?
        }
        ModuleSpec::Sign => {
            let sign = group.sign_character().ok_or_else(|| {
                Error::InvalidModule(format!(
                    "{} declares no index-2 subgroup for the sign module",
                    group.label()
                ))
            })?;
            let action = sign.iter().map(|&e| vec![vec![i64::from(e)]]).collect();
            GModule::new(Arc::clone(group), vec![0], action, label)?
        }
        ModuleSpec::Regular => {
            let action = group
                .elements()
                .map(|s| {
                    let mut m = vec![vec![0i64; n]; n];
                    for t in group.elements() {
                        m[group.mul(s, t) as usize][t as usize] = 1;
                    }
                    m
                })
                .collect();
            GModule::new(Arc::clone(group), vec![0; n], action, label)?
        }
        ModuleSpec::Explicit { moduli, action, .. } => {
            GModule::new(Arc::clone(group), moduli.clone(), action.clone(), label)?
        }
        ModuleSpec::Tensor(a, b) => {
            return tensor_modules(&build_gmodule(a, group)?, &build_gmodule(b, group)?)
        }
    };
    Ok(Arc::new(module))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, GroupSpec};
    use proptest::prelude::*;

    fn group(s: &str) -> Arc<Group> {
        Arc::new(build_group(&s.parse::<GroupSpec>().unwrap()).unwrap())
    }

    fn module(s: &str, g: &Arc<Group>) -> Arc<GModule> {
        build_gmodule(&s.parse().unwrap(), g).unwrap()
    }

    #[test]
    fn builtin_modules_over_cyclic_two() {
        let g = group("cyclic:2");
        let x = g.parse_element("g").unwrap();
        let triv = module("trivial-int", &g);
        assert_eq!(triv.rank(), 1);
        assert_eq!(triv.moduli(), &[0]);
        assert_eq!(triv.action_matrix(x), &[1]);

        let sign = module("sign", &g);
        assert_eq!(sign.action_matrix(x), &[-1]);
        assert_eq!(sign.action_matrix(g.id()), &[1]);
        let m = sign.element(vec![5]).unwrap();
        assert_eq!(act(x, &m).coords(), &[-5]);

        let reg = module("regular", &g);
        assert_eq!(reg.rank(), 2);
        let e_e = reg.element(vec![1, 0]).unwrap();
        assert_eq!(act(x, &e_e).coords(), &[0, 1]);
        assert_eq!(act(x, &triv.element(vec![7]).unwrap()).coords(), &[7]);
    }

    #[test]
    fn sign_requires_declared_subgroup() {
        let g = group("cyclic:3");
        assert!(matches!(
            build_gmodule(&ModuleSpec::Sign, &g),
            Err(Error::InvalidModule(_))
        ));
    }

    #[test]
    fn rejects_non_homomorphism() {
        let g = group("cyclic:2");
        // g ↦ [2] is not invertible over Z
        let spec = ModuleSpec::Explicit {
            moduli: vec![0],
            action: vec![vec![vec![1]], vec![vec![2]]],
            label: None,
        };
        assert!(build_gmodule(&spec, &g).is_err());
        // identity must act trivially
        let spec = ModuleSpec::Explicit {
            moduli: vec![0],
            action: vec![vec![vec![-1]], vec![vec![-1]]],
            label: None,
        };
        assert!(build_gmodule(&spec, &g).is_err());
        // mod 3 with g ↦ -1 is fine
        let spec = ModuleSpec::Explicit {
            moduli: vec![3],
            action: vec![vec![vec![1]], vec![vec![-1]]],
            label: None,
        };
        let m = build_gmodule(&spec, &g).unwrap();
        assert_eq!(m.action_matrix(1), &[2]);
    }

    #[test]
    fn tensor_structure() {
        let g = group("cyclic:2");
        let z = module("trivial-int", &g);
        let zz = tensor_modules(&z, &z).unwrap();
        assert_eq!((zz.rank(), zz.moduli()), (1, &[0][..]));

        let m4 = module("trivial-mod:4", &g);
        let m6 = module("trivial-mod:6", &g);
        let t = tensor_modules(&m4, &m6).unwrap();
        assert_eq!(t.moduli(), &[2]);

        let reg = module("regular", &g);
        let rz = tensor_modules(&reg, &z).unwrap();
        assert_eq!(rz.rank(), 2);
        assert_eq!(rz.action_matrix(1), &[0, 1, 1, 0]);

        let other = group("cyclic:3");
        assert_eq!(
            tensor_modules(&z, &module("trivial-int", &other)).unwrap_err(),
            Error::GroupMismatch
        );
    }

    /// `Z/4 ⊗ Z/6` has exactly `gcd(4, 6)` elements: enumerate the bilinear
    /// images `x ⊗ y = xy` in `Z/d` for every candidate `d` dividing 24 and
    /// keep the largest `d` for which `x ⊗ y ↦ xy mod d` is well defined.
    #[test]
    fn tensor_modulus_by_brute_force() {
        let mut best = 1;
        for d in 1..=24 {
            let well_defined = (0..4)
                .all(|x| (0..6).all(|y| ((x + 4) * y - x * y) % d == 0 && (x * (y + 6) - x * y) % d == 0));
            if well_defined {
                best = d;
            }
        }
        assert_eq!(best, 2);
    }

    #[test]
    fn twist_pure_tensors() {
        let g = group("symmetric:3");
        let reg = module("regular", &g);
        let m3 = module("trivial-mod:3", &g);
        let nm = tensor_modules(&m3, &reg).unwrap();
        let mn = tensor_modules(&reg, &m3).unwrap();
        let beta = m3.element(vec![2]).unwrap();
        let alpha = reg.element(vec![1, -2, 0, 3, 0, 5]).unwrap();
        let x = pure_tensor(&nm, &beta, &alpha).unwrap();
        let tx = twist(&x).unwrap();
        assert_eq!(tx, pure_tensor(&mn, &alpha, &beta).unwrap());

        let z = module("trivial-int", &g);
        let zz = tensor_modules(&z, &z).unwrap();
        let v = zz.element(vec![9]).unwrap();
        assert_eq!(twist(&v).unwrap().coords(), &[9]);
        assert_eq!(twist(&z.element(vec![1]).unwrap()).unwrap_err(), Error::NotTensor);
    }

    #[test]
    fn json_specs() {
        for s in ["trivial-int", "trivial-mod:4", "sign", "regular"] {
            let spec: ModuleSpec = s.parse().unwrap();
            assert_eq!(ModuleSpec::from_json(&spec.to_json()).unwrap(), spec);
        }
        let t = ModuleSpec::Tensor(Box::new(ModuleSpec::TrivialMod(4)), Box::new(ModuleSpec::Sign));
        assert_eq!(ModuleSpec::from_json(&t.to_json()).unwrap(), t);
        let err = ModuleSpec::from_json(&json!({"kind": "trivial-mod"})).unwrap_err();
        assert!(err.to_string().contains("params.m"));
    }

    fn arb_module() -> impl Strategy<Value = (&'static str, &'static str)> {
        prop_oneof![
            Just(("symmetric:3", "regular")),
            Just(("symmetric:3", "sign")),
            Just(("cyclic:4", "trivial-mod:4")),
            Just(("dihedral:3", "regular")),
            Just(("cyclic:2xcyclic:2", "regular")),
        ]
    }

    proptest! {
        #[test]
        fn action_is_compatible((gs, ms) in arb_module(), coords in prop::collection::vec(-50i64..50, 8), s in 0u16..6, t in 0u16..6) {
            let g = group(gs);
            let m = module(ms, &g);
            let s = s % g.order() as u16;
            let t = t % g.order() as u16;
            let x = m.element(coords[..m.rank()].to_vec()).unwrap();
            prop_assert_eq!(act(s, &act(t, &x)), act(g.mul(s, t), &x));
            prop_assert_eq!(act(g.id(), &x), x.clone());
            let mut twice = x.coords().to_vec();
            m.reduce_coords(&mut twice);
            prop_assert_eq!(&twice[..], x.coords());
        }

        #[test]
        fn twist_is_equivariant_involution(coords in prop::collection::vec(-20i64..20, 36), s in 0u16..6) {
            let g = group("symmetric:3");
            let reg = module("regular", &g);
            let sign = module("sign", &g);
            let nm = tensor_modules(&sign, &reg).unwrap();
            let x = nm.element(coords[..nm.rank()].to_vec()).unwrap();
            let tx = twist(&x).unwrap();
            prop_assert_eq!(twist(&tx).unwrap(), x.clone());
            prop_assert_eq!(twist(&act(s, &x)).unwrap(), act(s, &tx));
        }
    }
}
