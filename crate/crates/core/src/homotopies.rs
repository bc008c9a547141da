//! Closed-form chain homotopies on the bar resolution:
//!
//! * `φ_s : τ_s ≃ 1` on `F`, and the alternate `φ'_s = -τ_s φ_{s⁻¹}`;
//! * `φ : τ ≃ 1` on `F ⊗ F`, where `τ` is the Koszul-signed swap;
//! * `λ : τΔ ≃ Δ` from `F` to `F ⊗ F`, and the alternate `λ' = -τλ`.
//!
//! All of them satisfy `f - g = ∂h + h∂` as maps of the unaugmented complexes.

use serde::{Deserialize, Serialize};

use crate::group::{Elem, Group};
use crate::resolution::{BarTuple, Chain, TensorChain};

fn sign(k: usize) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Which exponent the inner sign of `λ_{p,q}` uses.
///
/// `λ_{p,q}(s_0, …, s_n) = (-1)^{pq+q} Σ_{i<p} (-1)^{e(q,i)}
/// (s_0, …, s_i, s_{i+q}, …, s_n) ⊗ (s_i, …, s_{i+q})`, where `e(q, i)` is
/// `(q+1)·i` for [`SignConvention::Ascending`] and `q·(i+1)` for
/// [`SignConvention::Offset`]. Only `Ascending` makes `λ` a homotopy; `Offset`
/// is kept so that the difference can be exhibited.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SignConvention {
    #[default]
    Ascending,
    Offset,
}

impl SignConvention {
    pub fn inner_exponent(self, other_degree: usize, i: usize) -> usize {
        match self {
            SignConvention::Ascending => (other_degree + 1) * i,
            SignConvention::Offset => other_degree * (i + 1),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SignConvention::Ascending => "ascending",
            SignConvention::Offset => "offset",
        }
    }
}

impl std::str::FromStr for SignConvention {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        match s {
            "ascending" => Ok(SignConvention::Ascending),
            "offset" => Ok(SignConvention::Offset),
            other => Err(crate::Error::field(
                "sign-convention",
                format!("expected `ascending` or `offset`, got {other:?}"),
            )),
        }
    }
}

/// `φ_s(s_0, …, s_n) = Σ_i (-1)^i (s_0, …, s_i, s_i s, …, s_n s)`.
pub fn phi_s(g: &Group, s: Elem, c: &Chain) -> Chain {
    c.map_linear(c.degree() + 1, |t| {
        let mut out = Chain::zero(t.degree() + 1);
        if t.is_empty() {
            return out;
        }
        let e = t.entries();
        let shifted: Vec<Elem> = e.iter().map(|&x| g.mul(x, s)).collect();
        for i in 0..e.len() {
            let mut v = Vec::with_capacity(e.len() + 1);
            v.extend_from_slice(&e[..=i]);
            v.extend_from_slice(&shifted[i..]);
            out.add_term(v.into(), sign(i));
        }
        out
    })
}

/// `φ'_s(s_0, …, s_n) = -Σ_i (-1)^i (s_0 s, …, s_i s, s_i, …, s_n)`.
pub fn phi_s_alt(g: &Group, s: Elem, c: &Chain) -> Chain {
    c.map_linear(c.degree() + 1, |t| {
        let mut out = Chain::zero(t.degree() + 1);
        if t.is_empty() {
            return out;
        }
        let e = t.entries();
        let shifted: Vec<Elem> = e.iter().map(|&x| g.mul(x, s)).collect();
        for i in 0..e.len() {
            let mut v = Vec::with_capacity(e.len() + 1);
            v.extend_from_slice(&shifted[..=i]);
            v.extend_from_slice(&e[i..]);
            out.add_term(v.into(), -sign(i));
        }
        out
    })
}

fn concat(a: &[Elem], b: &[Elem]) -> BarTuple {
    let mut v = Vec::with_capacity(a.len() + b.len());
    v.extend_from_slice(a);
    v.extend_from_slice(b);
    v.into()
}

/// `φ : τ ≃ 1` on `F ⊗ F`. For `x = (s_0, …, s_p)` and `y` of degree `q`:
///
/// `φ(x ⊗ y) = (-1)^{pq} Σ_{i≤p} (-1)^{(q+1)i} (s_0, …, s_i, y) ⊗ (s_i, …, s_p)
///            - (-1)^p Σ_{i≤p} (s_0, …, s_i) ⊗ (s_i, …, s_p, y)`
///
/// where `(s_0, …, s_i, y)` appends all entries of `y`.
pub fn phi_pair(c: &TensorChain) -> TensorChain {
    c.map_linear(c.degree() + 1, |x, y| {
        let mut out = TensorChain::zero(c.degree() + 1);
        if x.is_empty() {
            return out;
        }
        let (xs, ys) = (x.entries(), y.entries());
        let (p, q) = (x.len() - 1, y.len() - 1);
        let outer = sign(p * q);
        for i in 0..=p {
            out.add_term(
                concat(&xs[..=i], ys),
                BarTuple::new(&xs[i..]),
                outer * sign((q + 1) * i),
            );
        }
        for i in 0..=p {
            out.add_term(BarTuple::new(&xs[..=i]), concat(&xs[i..], ys), -sign(p));
        }
        out
    })
}

/// `λ : τΔ ≃ Δ`, summed over bidegrees `(p, q)` with `p, q > 0` and
/// `p + q = n + 1`; the `(0, n+1)` and `(n+1, 0)` components vanish.
pub fn lambda(c: &Chain, conv: SignConvention) -> TensorChain {
    c.map_linear_tensor(c.degree() + 1, |t| {
        let mut out = TensorChain::zero(t.degree() + 1);
        if t.is_empty() {
            return out;
        }
        let e = t.entries();
        let n = e.len() - 1;
        for p in 1..=n {
            let q = n + 1 - p;
            let outer = sign(p * q + q);
            for i in 0..p {
                out.add_term(
                    concat(&e[..=i], &e[i + q..]),
                    BarTuple::new(&e[i..=i + q]),
                    outer * sign(conv.inner_exponent(q, i)),
                );
            }
        }
        out
    })
}

/// `λ' = -τλ`. Its `(p, q)` component is
/// `-(-1)^p Σ_{i<q} (-1)^{e(p,i)} (s_i, …, s_{i+p}) ⊗ (s_0, …, s_i, s_{i+p}, …, s_n)`.
pub fn lambda_alt(c: &Chain, conv: SignConvention) -> TensorChain {
    c.map_linear_tensor(c.degree() + 1, |t| {
        let mut out = TensorChain::zero(t.degree() + 1);
        if t.is_empty() {
            return out;
        }
        let e = t.entries();
        let n = e.len() - 1;
        for p in 1..=n {
            let q = n + 1 - p;
            let outer = -sign(p);
            for i in 0..q {
                out.add_term(
                    BarTuple::new(&e[i..=i + p]),
                    concat(&e[..=i], &e[i + p..]),
                    outer * sign(conv.inner_exponent(p, i)),
                );
            }
        }
        out
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, GroupSpec};
    use crate::resolution::{
        alexander_whitney, basis_tuples, boundary_unaugmented, normalize, normalize_tensor, swap,
        tensor_basis, tensor_boundary_unaugmented, translate,
    };

    fn group(s: &str) -> Group {
        build_group(&s.parse::<GroupSpec>().unwrap()).unwrap()
    }

    fn tc(degree: i64, terms: &[(&[Elem], &[Elem], i64)]) -> TensorChain {
        let mut out = TensorChain::zero(degree);
        for (x, y, c) in terms {
            out.add_term(BarTuple::new(x), BarTuple::new(y), *c);
        }
        out
    }

    #[test]
    fn phi_s_examples() {
        let g = group("symmetric:3");
        for s in g.elements() {
            for s0 in g.elements() {
                assert_eq!(
                    phi_s(&g, s, &Chain::from_entries(&[s0])),
                    Chain::from_entries(&[s0, g.mul(s0, s)])
                );
            }
        }
        let c2 = group("cyclic:2");
        let mut want = Chain::from_entries(&[0, 1, 1]);
        want.add_term(BarTuple::new(&[0, 0, 1]), -1);
        assert_eq!(phi_s(&c2, 1, &Chain::from_entries(&[0, 0])), want);
        for n in 0..=3 {
            for t in basis_tuples(2, n) {
                assert!(normalize(&phi_s(&c2, c2.id(), &Chain::basis(t))).is_zero());
            }
        }
    }

    #[test]
    fn phi_s_alt_examples() {
        let g = group("cyclic:4");
        for s in g.elements() {
            let x = Chain::from_entries(&[2]);
            let mut want = Chain::zero(1);
            want.add_term(BarTuple::new(&[g.mul(2, s), 2]), -1);
            assert_eq!(phi_s_alt(&g, s, &x), want);
            for n in 0..=2 {
                for t in basis_tuples(4, n) {
                    let x = Chain::basis(t);
                    let via = translate(&g, s, &phi_s(&g, g.inv(s), &x)).scaled(-1);
                    assert_eq!(phi_s_alt(&g, s, &x), via);
                    if s == g.id() {
                        assert!(normalize(&phi_s_alt(&g, s, &x)).is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn phi_pair_examples() {
        let (s0, y) = (2, 5);
        let x = TensorChain::from_entries(&[s0], &[y]);
        assert_eq!(
            phi_pair(&x),
            tc(1, &[(&[s0, y], &[s0], 1), (&[s0], &[s0, y], -1)])
        );
        // on bidegree (1, 0) the second sum reaches (0, 2)
        let x = TensorChain::from_entries(&[1, 2], &[3]);
        let mut seen: Vec<(i64, i64)> = phi_pair(&x)
            .iter()
            .map(|((a, b), _)| (a.degree(), b.degree()))
            .collect();
        seen.sort();
        seen.dedup();
        assert_eq!(seen, vec![(0, 2), (1, 1), (2, 0)]);
    }

    #[test]
    fn phi_pair_homotopy_cyclic_three() {
        for n in 0..=3 {
            for (x, y) in tensor_basis(3, n) {
                let z = TensorChain::basis(x, y);
                let lhs = swap(&z).minus(&z);
                let h = phi_pair(&z);
                let rhs = tensor_boundary_unaugmented(&h)
                    .plus(&phi_pair(&tensor_boundary_unaugmented(&z)));
                assert_eq!(lhs, rhs, "at {z}");
            }
        }
    }

    #[test]
    fn lambda_examples() {
        let (s0, s1) = (3, 1);
        assert!(lambda(&Chain::from_entries(&[s0]), SignConvention::Ascending).is_zero());
        let x = Chain::from_entries(&[s0, s1]);
        assert_eq!(
            lambda(&x, SignConvention::Ascending),
            TensorChain::from_entries(&[s0, s1], &[s0, s1])
        );
        assert_eq!(
            lambda(&x, SignConvention::Offset),
            TensorChain::from_entries(&[s0, s1], &[s0, s1]).scaled(-1)
        );
        assert!(lambda_alt(&Chain::from_entries(&[s0]), SignConvention::Ascending).is_zero());
        assert_eq!(
            lambda_alt(&x, SignConvention::Ascending),
            TensorChain::from_entries(&[s0, s1], &[s0, s1])
        );
    }

    #[test]
    fn lambda_alt_is_negated_swap() {
        for conv in [SignConvention::Ascending, SignConvention::Offset] {
            for n in 0..=3 {
                for t in basis_tuples(3, n) {
                    let x = Chain::basis(t);
                    assert_eq!(lambda_alt(&x, conv), swap(&lambda(&x, conv)).scaled(-1));
                }
            }
        }
    }

    #[test]
    fn lambda_is_normalized_phi_of_diagonal() {
        for n in 0..=4 {
            for t in basis_tuples(3, n) {
                let x = Chain::basis(t);
                let diff = phi_pair(&alexander_whitney(&x)).minus(&lambda(&x, SignConvention::Ascending));
                assert!(normalize_tensor(&diff).is_zero());
            }
        }
    }

    #[test]
    fn lambda_homotopy_depends_on_convention() {
        let check = |x: &Chain, conv| {
            let d = alexander_whitney(x);
            let lhs = swap(&d).minus(&d);
            let rhs = tensor_boundary_unaugmented(&lambda(x, conv))
                .plus(&lambda(&boundary_unaugmented(x), conv));
            lhs == rhs
        };
        for n in 0..=3 {
            for t in basis_tuples(2, n) {
                assert!(check(&Chain::basis(t), SignConvention::Ascending));
            }
        }
        assert!(!check(&Chain::from_entries(&[0, 1]), SignConvention::Offset));
    }

    #[test]
    fn phi_s_homotopy() {
        let g = group("symmetric:3");
        for s in g.elements() {
            for n in 0..=2 {
                for t in basis_tuples(6, n) {
                    let x = Chain::basis(t);
                    let lhs = translate(&g, s, &x).minus(&x);
                    let rhs = boundary_unaugmented(&phi_s(&g, s, &x))
                        .plus(&phi_s(&g, s, &boundary_unaugmented(&x)));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}
