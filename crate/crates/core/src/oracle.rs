//! Homotopies built by the inductive lifting procedure, used as an oracle for
//! the closed forms in [`crate::homotopies`].
//!
//! For `f - g` an augmentation-preserving difference of chain maps, the lift
//! is `h_0(x) = ψ_{x_0}(f - g)(x)` and `h_n(x) = ψ_{x_0}(f - g - h_{n-1}∂)(x)`,
//! where `x_0` is the first entry of `x`. On `F` this yields `φ̃_s` from
//! `τ_s - 1`; on `F ⊗ F` it yields `φ̃` from `τ - 1` using `ψ̄_{x_0} = ψ_{x_0,x_0}`.
//!
//! In normalized mode every intermediate chain is projected to `F/D` (resp.
//! `F/D ⊗ F/D`), so the results are computed in the normalized resolution.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use crate::group::{Elem, Group};
use crate::resolution::{
    boundary_unaugmented, normalize, normalize_tensor, psi, psi_pair, swap,
    tensor_boundary_unaugmented, translate, BarTuple, Chain, TensorChain,
};

/// Memoizing evaluator for the lifted homotopies over one group.
///
/// The caches are shared between threads: readers never block each other and
/// each key is written at most once (a racing duplicate computes the same
/// value and is discarded).
pub struct Oracle<'g> {
    group: &'g Group,
    normalized: bool,
    action: RwLock<HashMap<(Elem, BarTuple), Arc<Chain>>>,
    pairs: RwLock<HashMap<(BarTuple, BarTuple), Arc<TensorChain>>>,
}

impl<'g> Oracle<'g> {
    pub fn new(group: &'g Group, normalized: bool) -> Self {
        Oracle {
            group,
            normalized,
            action: RwLock::new(HashMap::new()),
            pairs: RwLock::new(HashMap::new()),
        }
    }

    pub fn normalized(&self) -> bool {
        self.normalized
    }

    fn project(&self, c: Chain) -> Chain {
        if self.normalized {
            normalize(&c)
        } else {
            c
        }
    }

    fn project_tensor(&self, c: TensorChain) -> TensorChain {
        if self.normalized {
            normalize_tensor(&c)
        } else {
            c
        }
    }

    /// `φ̃_s` on a basis tuple of degree `≥ 0`.
    pub fn phi_s(&self, s: Elem, x: &BarTuple) -> Arc<Chain> {
        let key = (s, x.clone());
        if let Some(hit) = self.action.read().unwrap().get(&key) {
            return Arc::clone(hit);
        }
        let value = Arc::new(self.compute_phi_s(s, x));
        let mut cache = self.action.write().unwrap();
        Arc::clone(cache.entry(key).or_insert(value))
    }

    fn compute_phi_s(&self, s: Elem, x: &BarTuple) -> Chain {
        assert!(!x.is_empty(), "oracle is defined from degree 0");
        let out_degree = x.degree() + 1;
        if self.normalized && x.is_degenerate() {
            return Chain::zero(out_degree);
        }
        let g = self.group;
        let basis = Chain::basis(x.clone());
        let mut inner = translate(g, s, &basis).minus(&basis);
        if x.degree() > 0 {
            let lower = self.phi_s_chain(s, &boundary_unaugmented(&basis));
            inner = inner.minus(&lower);
        }
        let inner = self.project(inner);
        self.project(psi(x.entries()[0], &inner))
    }

    /// `φ̃_s` extended linearly.
    pub fn phi_s_chain(&self, s: Elem, c: &Chain) -> Chain {
        c.map_linear(c.degree() + 1, |t| (*self.phi_s(s, t)).clone())
    }

    /// `φ̃` on a basis pair `x ⊗ y` of total degree `≥ 0`.
    pub fn phi_pair(&self, x: &BarTuple, y: &BarTuple) -> Arc<TensorChain> {
        let key = (x.clone(), y.clone());
        if let Some(hit) = self.pairs.read().unwrap().get(&key) {
            return Arc::clone(hit);
        }
        let value = Arc::new(self.compute_phi_pair(x, y));
        let mut cache = self.pairs.write().unwrap();
        Arc::clone(cache.entry(key).or_insert(value))
    }

    fn compute_phi_pair(&self, x: &BarTuple, y: &BarTuple) -> TensorChain {
        assert!(!x.is_empty() && !y.is_empty(), "oracle is defined from degree 0");
        let degree = x.degree() + y.degree();
        if self.normalized && (x.is_degenerate() || y.is_degenerate()) {
            return TensorChain::zero(degree + 1);
        }
        let basis = TensorChain::basis(x.clone(), y.clone());
        let mut inner = swap(&basis).minus(&basis);
        if degree > 0 {
            let lower = self.phi_pair_chain(&tensor_boundary_unaugmented(&basis));
            inner = inner.minus(&lower);
        }
        let inner = self.project_tensor(inner);
        let s0 = x.entries()[0];
        self.project_tensor(psi_pair(s0, s0, &inner))
    }

    pub fn phi_pair_chain(&self, c: &TensorChain) -> TensorChain {
        c.map_linear(c.degree() + 1, |x, y| (*self.phi_pair(x, y)).clone())
    }
}

/// One-shot evaluation of `φ̃_s(x)`.
pub fn oracle_phi_s(group: &Group, s: Elem, x: &BarTuple, normalized: bool) -> Chain {
    (*Oracle::new(group, normalized).phi_s(s, x)).clone()
}

/// One-shot evaluation of `φ̃(x ⊗ y)`.
pub fn oracle_phi_pair(group: &Group, x: &BarTuple, y: &BarTuple, normalized: bool) -> TensorChain {
    (*Oracle::new(group, normalized).phi_pair(x, y)).clone()
}
