//! Adam optimizer with global gradient-norm clipping.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct AdamConfig {
    pub lr: f64,
    pub beta1: f64,
    pub beta2: f64,
    pub eps: f64,
    /// Global L2 clip applied to the gradient before the update; 0 disables.
    pub clip_norm: f64,
}

impl AdamConfig {
    pub fn with_lr(lr: f64, clip_norm: f64) -> Self {
        AdamConfig { lr, beta1: 0.9, beta2: 0.999, eps: 1e-8, clip_norm }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
struct Slot {
    m: Vec<f64>,
    v: Vec<f64>,
}

/// Optimizer state over a fixed list of parameter tensors (flattened). The
/// tensor list must keep the same order and sizes across steps.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Adam {
    cfg: AdamConfig,
    slots: Vec<Slot>,
    t: u64,
}

impl Adam {
    pub fn new(cfg: AdamConfig) -> Self {
        Adam { cfg, slots: Vec::new(), t: 0 }
    }

    pub fn config(&self) -> AdamConfig {
        self.cfg
    }

    /// Applies one update. `params` and `grads` must be parallel slices of
    /// matching lengths.
    pub fn step(&mut self, params: &mut [&mut [f64]], grads: &[&[f64]]) {
        assert_eq!(params.len(), grads.len(), "tensor count mismatch");
        if self.slots.is_empty() {
            self.slots = grads
                .iter()
                .map(|g| Slot { m: vec![0.0; g.len()], v: vec![0.0; g.len()] })
                .collect();
        }
        assert_eq!(self.slots.len(), grads.len(), "tensor count changed");

        let scale = if self.cfg.clip_norm > 0.0 {
            let sq: f64 = grads.iter().flat_map(|g| g.iter()).map(|v| v * v).sum();
            let norm = sq.sqrt();
            if norm > self.cfg.clip_norm {
                self.cfg.clip_norm / norm
            } else {
                1.0
            }
        } else {
            1.0
        };

        self.t += 1;
        let bc1 = 1.0 - self.cfg.beta1.powi(self.t as i32);
        let bc2 = 1.0 - self.cfg.beta2.powi(self.t as i32);
        for ((param, grad), slot) in params.iter_mut().zip(grads).zip(&mut self.slots) {
            assert_eq!(param.len(), grad.len(), "tensor size mismatch");
            assert_eq!(param.len(), slot.m.len(), "state size mismatch");
            for k in 0..param.len() {
                let g = grad[k] * scale;
                slot.m[k] = self.cfg.beta1 * slot.m[k] + (1.0 - self.cfg.beta1) * g;
                slot.v[k] = self.cfg.beta2 * slot.v[k] + (1.0 - self.cfg.beta2) * g * g;
                let m_hat = slot.m[k] / bc1;
                let v_hat = slot.v[k] / bc2;
                param[k] -= self.cfg.lr * m_hat / (v_hat.sqrt() + self.cfg.eps);
            }
        }
    }
}
