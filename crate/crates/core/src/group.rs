//! Finite groups stored as dense multiplication tables.
//!
//! Elements are indices `0..order`. Every builtin family puts the identity at
//! index 0; explicit tables may put it anywhere.

use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::error::{Error, Result};

/// Index of a group element.
pub type Elem = u16;

const MAX_ORDER: usize = Elem::MAX as usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Group {
    order: usize,
    mul: Vec<Elem>,
    inv: Vec<Elem>,
    id: Elem,
    label: String,
    names: Vec<String>,
    sign: Option<Vec<i8>>,
}

impl Group {
    /// Validates a multiplication table and builds the group.
    ///
    /// `sign`, when given, declares a surjective homomorphism onto `{±1}`; it
    /// is what the `sign` module uses.
    pub fn from_table(
        table: Vec<Vec<usize>>,
        label: impl Into<String>,
        names: Option<Vec<String>>,
        sign: Option<Vec<i8>>,
    ) -> Result<Self> {
        let order = table.len();
        if order == 0 {
            return Err(Error::InvalidGroup("order 0".into()));
        }
        if order > MAX_ORDER {
            return Err(Error::InvalidGroup(format!("order {order} too large")));
        }
        let mut mul = Vec::with_capacity(order * order);
        for (r, row) in table.iter().enumerate() {
            if row.len() != order {
                return Err(Error::InvalidGroup(format!(
                    "row {r} has {} entries, expected {order}",
                    row.len()
                )));
            }
            for &x in row {
                if x >= order {
                    return Err(Error::InvalidGroup(format!(
                        "entry {x} in row {r} is out of range"
                    )));
                }
                mul.push(x as Elem);
            }
        }
        let at = |a: usize, b: usize| mul[a * order + b] as usize;

        let id = (0..order)
            .find(|&e| (0..order).all(|x| at(e, x) == x && at(x, e) == x))
            .ok_or_else(|| Error::InvalidGroup("no identity element".into()))?;

        let mut inv = Vec::with_capacity(order);
        for x in 0..order {
            let y = (0..order)
                .find(|&y| at(x, y) == id && at(y, x) == id)
                .ok_or_else(|| Error::InvalidGroup(format!("element {x} has no inverse")))?;
            inv.push(y as Elem);
        }

        for a in 0..order {
            for b in 0..order {
                let ab = at(a, b);
                for c in 0..order {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Err(Error::InvalidGroup(format!(
                            "not associative at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }

        let names = match names {
            Some(n) if n.len() != order => {
                return Err(Error::InvalidGroup(format!(
                    "{} element names for order {order}",
                    n.len()
                )))
            }
            Some(n) => n,
            None => (0..order).map(|i| i.to_string()).collect(),
        };

        if let Some(sign) = &sign {
            if sign.len() != order {
                return Err(Error::InvalidGroup("sign character has wrong length".into()));
            }
            if sign.iter().any(|&v| v != 1 && v != -1) {
                return Err(Error::InvalidGroup("sign character takes values ±1".into()));
            }
            if !sign.contains(&-1) {
                return Err(Error::InvalidGroup("sign character is trivial".into()));
            }
            for a in 0..order {
                for b in 0..order {
                    if sign[at(a, b)] != sign[a] * sign[b] {
                        return Err(Error::InvalidGroup(
                            "sign character is not a homomorphism".into(),
                        ));
                    }
                }
            }
        }

        Ok(Group {
            order,
            mul,
            inv,
            id: id as Elem,
            label: label.into(),
            names,
            sign,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a as usize * self.order + b as usize]
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inv[a as usize]
    }

    pub fn id(&self) -> Elem {
        self.id
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn name(&self, a: Elem) -> &str {
        &self.names[a as usize]
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (0..self.order as Elem).into_iter()
    }

    /// `s⁻¹ x s`.
    #[inline]
    pub fn conj(&self, s: Elem, x: Elem) -> Elem {
        self.mul(self.mul(self.inv(s), x), s)
    }

    /// Ordered product of a sequence; the identity for an empty one.
    pub fn product(&self, xs: &[Elem]) -> Elem {
        xs.iter().fold(self.id, |acc, &x| self.mul(acc, x))
    }

    pub fn sign_character(&self) -> Option<&[i8]> {
        self.sign.as_deref()
    }

    pub fn element_order(&self, a: Elem) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.id {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Resolves an element by name, falling back to a decimal index.
    pub fn parse_element(&self, s: &str) -> Result<Elem> {
        let s = s.trim();
        if let Some(i) = self.names.iter().position(|n| n == s) {
            return Ok(i as Elem);
        }
        match s.parse::<usize>() {
            Ok(i) if i < self.order => Ok(i as Elem),
            _ => Err(Error::UnknownElement(s.to_string())),
        }
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.mul
            .chunks(self.order)
            .map(|row| row.iter().map(|&x| x as usize).collect())
            .collect()
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (order {})", self.label, self.order)
    }
}

/// Description of a group, either a builtin family or an explicit table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    Dihedral(usize),
    Symmetric(usize),
    Product(Vec<GroupSpec>),
    Table {
        mul: Vec<Vec<usize>>,
        label: Option<String>,
        names: Option<Vec<String>>,
        sign: Option<Vec<i8>>,
    },
}

impl GroupSpec {
    pub fn label(&self) -> String {
        match self {
            GroupSpec::Cyclic(n) => format!("cyclic:{n}"),
            GroupSpec::Dihedral(n) => format!("dihedral:{n}"),
            GroupSpec::Symmetric(n) => format!("symmetric:{n}"),
            GroupSpec::Product(fs) => fs.iter().map(|f| f.label()).collect::<Vec<_>>().join("x"),
            GroupSpec::Table { label, mul, .. } => label
                .clone()
                .unwrap_or_else(|| format!("table:{}", mul.len())),
        }
    }

    /// Parses the JSON form: `{"kind": "...", "params": {...}}` for builtins or
    /// `{"mul": [[...]], "label": ..., "names": [...], "sign": [...]}`. A bare
    /// string is read with the short textual syntax.
    pub fn from_json(v: &Value) -> Result<Self> {
        match v {
            Value::String(s) => s.parse(),
            Value::Object(obj) => {
                if let Some(mul) = obj.get("mul") {
                    let mul: Vec<Vec<usize>> = serde_json::from_value(mul.clone())
                        .map_err(|e| Error::field("mul", e.to_string()))?;
                    let label = match obj.get("label") {
                        None => None,
                        Some(l) => Some(
                            l.as_str()
                                .ok_or_else(|| Error::field("label", "expected a string"))?
                                .to_string(),
                        ),
                    };
                    let names = match obj.get("names") {
                        None => None,
                        Some(n) => Some(
                            serde_json::from_value(n.clone())
                                .map_err(|e| Error::field("names", e.to_string()))?,
                        ),
                    };
                    let sign = match obj.get("sign") {
                        None => None,
                        Some(n) => Some(
                            serde_json::from_value(n.clone())
                                .map_err(|e| Error::field("sign", e.to_string()))?,
                        ),
                    };
                    return Ok(GroupSpec::Table {
                        mul,
                        label,
                        names,
                        sign,
                    });
                }
                let kind = obj
                    .get("kind")
                    .and_then(Value::as_str)
                    .ok_or_else(|| Error::field("kind", "missing or not a string"))?;
                let params = obj.get("params").cloned().unwrap_or(Value::Null);
                let n = || {
                    params
                        .get("n")
                        .and_then(Value::as_u64)
                        .map(|n| n as usize)
                        .ok_or_else(|| Error::field("params.n", "missing or not an integer"))
                };
                match kind {
                    "cyclic" => Ok(GroupSpec::Cyclic(n()?)),
                    "dihedral" => Ok(GroupSpec::Dihedral(n()?)),
                    "symmetric" => Ok(GroupSpec::Symmetric(n()?)),
                    "product" => {
                        let factors = params
                            .get("factors")
                            .and_then(Value::as_array)
                            .ok_or_else(|| Error::field("params.factors", "expected an array"))?;
                        let factors = factors
                            .iter()
                            .map(GroupSpec::from_json)
                            .collect::<Result<Vec<_>>>()?;
                        if factors.is_empty() {
                            return Err(Error::field("params.factors", "empty product"));
                        }
                        Ok(GroupSpec::Product(factors))
                    }
                    other => Err(Error::field("kind", format!("unknown group kind {other:?}"))),
                }
            }
            _ => Err(Error::field("group", "expected a string or an object")),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            GroupSpec::Cyclic(n) => json!({"kind": "cyclic", "params": {"n": n}}),
            GroupSpec::Dihedral(n) => json!({"kind": "dihedral", "params": {"n": n}}),
            GroupSpec::Symmetric(n) => json!({"kind": "symmetric", "params": {"n": n}}),
            GroupSpec::Product(fs) => json!({
                "kind": "product",
                "params": {"factors": fs.iter().map(GroupSpec::to_json).collect::<Vec<_>>()}
            }),
            GroupSpec::Table {
                mul,
                label,
                names,
                sign,
            } => {
                let mut v = json!({ "mul": mul });
                if let Some(l) = label {
                    v["label"] = json!(l);
                }
                if let Some(n) = names {
                    v["names"] = json!(n);
                }
                if let Some(s) = sign {
                    v["sign"] = json!(s);
                }
                v
            }
        }
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    /// `cyclic:n`, `dihedral:n`, `symmetric:n`, or a product of those joined
    /// with `x` or `×`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s
            .split(|c| c == 'x' || c == '×' || c == '*')
            .map(str::trim)
            .collect();
        if parts.len() > 1 {
            return Ok(GroupSpec::Product(
                parts.into_iter().map(str::parse).collect::<Result<_>>()?,
            ));
        }
        let (kind, n) = s
            .trim()
            .split_once(':')
            .ok_or_else(|| Error::field("group", format!("cannot parse {s:?}")))?;
        let n: usize = n
            .trim()
            .parse()
            .map_err(|_| Error::field("group", format!("bad size in {s:?}")))?;
        match kind.trim() {
            "cyclic" | "C" | "c" => Ok(GroupSpec::Cyclic(n)),
            "dihedral" | "D" => Ok(GroupSpec::Dihedral(n)),
            "symmetric" | "S" => Ok(GroupSpec::Symmetric(n)),
            other => Err(Error::field("group", format!("unknown group kind {other:?}"))),
        }
    }
}

/// Builds and validates a group.
pub fn build_group(spec: &GroupSpec) -> Result<Group> {
    let label = spec.label();
    match spec {
        GroupSpec::Cyclic(n) => {
            let n = *n;
            if n == 0 {
                return Err(Error::InvalidGroup("order 0".into()));
            }
            let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
            let names = (0..n)
                .map(|k| match k {
                    0 => "e".to_string(),
                    1 => "g".to_string(),
                    k => format!("g^{k}"),
                })
                .collect();
            let sign = (n % 2 == 0).then(|| (0..n).map(|k| if k % 2 == 0 { 1 } else { -1 }).collect());
            Group::from_table(table, label, Some(names), sign)
        }
        GroupSpec::Dihedral(n) => {
            let n = *n;
            if n == 0 {
                return Err(Error::InvalidGroup("order 0".into()));
            }
            // r^k s^j lives at index j*n + k; s r s = r^{-1}.
            let decode = |x: usize| (x % n, x / n);
            let table = (0..2 * n)
                .map(|x| {
                    let (a, i) = decode(x);
                    (0..2 * n)
                        .map(|y| {
                            let (b, j) = decode(y);
                            let k = if i == 0 { (a + b) % n } else { (a + n - b) % n };
                            ((i + j) % 2) * n + k
                        })
                        .collect()
                })
                .collect();
            let names = (0..2 * n)
                .map(|x| {
                    let (k, j) = decode(x);
                    let r = match k {
                        0 => String::new(),
                        1 => "r".to_string(),
                        k => format!("r^{k}"),
                    };
                    match (r.is_empty(), j) {
                        (true, 0) => "e".to_string(),
                        (false, 0) => r,
                        (_, _) => format!("{r}s"),
                    }
                })
                .collect();
            let sign = (0..2 * n).map(|x| if x < n { 1 } else { -1 }).collect();
            Group::from_table(table, label, Some(names), Some(sign))
        }
        GroupSpec::Symmetric(n) => {
            let n = *n;
            if n == 0 {
                return Err(Error::InvalidGroup("order 0".into()));
            }
            if n > 5 {
                return Err(Error::InvalidGroup(format!("symmetric:{n} is too large")));
            }
            let perms = permutations(n);
            let index = |p: &[usize]| perms.iter().position(|q| q == p).unwrap();
            let table = perms
                .iter()
                .map(|p| {
                    perms
                        .iter()
                        .map(|q| {
                            let pq: Vec<usize> = (0..n).map(|x| p[q[x]]).collect();
                            index(&pq)
                        })
                        .collect()
                })
                .collect();
            let names = perms
                .iter()
                .map(|p| p.iter().map(|x| (x + 1).to_string()).collect::<String>())
                .collect();
            let sign: Vec<i8> = perms.iter().map(|p| parity(p)).collect();
            let sign = (n >= 2).then_some(sign);
            Group::from_table(table, label, Some(names), sign)
        }
        GroupSpec::Product(factors) => {
            let groups = factors.iter().map(build_group).collect::<Result<Vec<_>>>()?;
            let mut acc = groups[0].clone();
            for g in &groups[1..] {
                acc = direct_product(&acc, g, &label)?;
            }
            acc.label = label;
            Ok(acc)
        }
        GroupSpec::Table {
            mul,
            names,
            sign,
            ..
        } => Group::from_table(mul.clone(), label, names.clone(), sign.clone()),
    }
}

fn direct_product(a: &Group, b: &Group, label: &str) -> Result<Group> {
    let (na, nb) = (a.order(), b.order());
    let table = (0..na * nb)
        .map(|x| {
            (0..na * nb)
                .map(|y| {
                    let p = a.mul((x / nb) as Elem, (y / nb) as Elem) as usize;
                    let q = b.mul((x % nb) as Elem, (y % nb) as Elem) as usize;
                    p * nb + q
                })
                .collect()
        })
        .collect();
    let names = (0..na * nb)
        .map(|x| format!("({},{})", a.name((x / nb) as Elem), b.name((x % nb) as Elem)))
        .collect();
    Group::from_table(table, label, Some(names), None)
}

/// Permutations of `0..n` in lexicographic order.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let n = used.len();
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for x in 0..n {
            if !used[x] {
                used[x] = true;
                prefix.push(x);
                go(prefix, used, out);
                prefix.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn parity(p: &[usize]) -> i8 {
    let inversions = (0..p.len())
        .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > p[j])
        .count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}
