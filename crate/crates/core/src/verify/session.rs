use std::collections::BTreeMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::operators::{GradedMap, OperatorSpec};
use crate::par::Exec;
use crate::spaces::{
    harmonics, Cache, Coinvariants, Component, GradedSubspace, HookAmbient, Isotype, SuperIdeal,
};
use crate::structure::{lefschetz_check, WeightDecomposition};

/// Largest `n` built without `--allow-large`.
pub const DEFAULT_CAP: usize = 4;
/// Largest `n` built at all.
pub const LARGE_CAP: usize = 5;

/// Rejects `n = 0` and sizes beyond the caps.
pub fn check_size(n: usize, allow_large: bool) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    if n > LARGE_CAP {
        return Err(Error::ResourceRefusal {
            n,
            cap: LARGE_CAP,
            hint: " (a hard limit)",
        });
    }
    if n > DEFAULT_CAP && !allow_large {
        return Err(Error::ResourceRefusal {
            n,
            cap: DEFAULT_CAP,
            hint: "; pass --allow-large to raise it",
        });
    }
    Ok(())
}

type HookModel = Component<HookAmbient>;

/// Lazily built spaces and operator matrices for one `n`, shared by all
/// checks. Every getter builds at most once.
pub struct Session {
    n: usize,
    exec: Exec,
    cache: Option<Cache>,
    dr: OnceLock<Arc<Coinvariants>>,
    sign: OnceLock<Arc<Component<Coinvariants>>>,
    hook: OnceLock<Arc<HookModel>>,
    dh: OnceLock<Arc<GradedSubspace>>,
    ideal: OnceLock<Arc<SuperIdeal>>,
    hook_maps: Mutex<BTreeMap<OperatorSpec, Arc<GradedMap>>>,
    weights: OnceLock<Arc<WeightDecomposition>>,
    phi: OnceLock<Arc<GradedMap>>,
}

impl Session {
    pub fn new(n: usize, allow_large: bool, exec: Exec, cache: Option<Cache>) -> Result<Self> {
        check_size(n, allow_large)?;
        Ok(Session {
            n,
            exec,
            cache,
            dr: OnceLock::new(),
            sign: OnceLock::new(),
            hook: OnceLock::new(),
            dh: OnceLock::new(),
            ideal: OnceLock::new(),
            hook_maps: Mutex::new(BTreeMap::new()),
            weights: OnceLock::new(),
            phi: OnceLock::new(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn exec(&self) -> Exec {
        self.exec
    }

    /// `DR_n`, loaded from the cache when a valid file exists.
    pub fn coinvariants(&self) -> Result<Arc<Coinvariants>> {
        if let Some(dr) = self.dr.get() {
            return Ok(dr.clone());
        }
        let dr = match self
            .cache
            .as_ref()
            .and_then(|c| c.load_coinvariants(self.n))
        {
            Some(dr) => dr,
            None => {
                let dr = Coinvariants::build(self.n, self.exec);
                if let Some(c) = &self.cache {
                    c.store_coinvariants(&dr)?;
                }
                dr
            }
        };
        Ok(self.dr.get_or_init(|| Arc::new(dr)).clone())
    }

    pub fn sign(&self) -> Result<Arc<Component<Coinvariants>>> {
        if let Some(s) = self.sign.get() {
            return Ok(s.clone());
        }
        let s = Component::new(self.coinvariants()?, Isotype::Sign, self.exec);
        Ok(self.sign.get_or_init(|| Arc::new(s)).clone())
    }

    /// The sign component of `DR_n ⊗ ∧θ/(ω_0)`.
    pub fn hook(&self) -> Result<Arc<HookModel>> {
        if let Some(h) = self.hook.get() {
            return Ok(h.clone());
        }
        let ambient = Arc::new(HookAmbient::new(self.coinvariants()?));
        let h = Component::new(ambient, Isotype::Sign, self.exec);
        Ok(self.hook.get_or_init(|| Arc::new(h)).clone())
    }

    /// `DH_n`, loaded from the cache when a valid file exists.
    pub fn harmonics(&self) -> Result<Arc<GradedSubspace>> {
        if let Some(dh) = self.dh.get() {
            return Ok(dh.clone());
        }
        let dh = match self.cache.as_ref().and_then(|c| c.load_harmonics(self.n)) {
            Some(dh) => dh,
            None => {
                let dh = harmonics(self.n, self.exec);
                if let Some(c) = &self.cache {
                    c.store_harmonics(&dh)?;
                }
                dh
            }
        };
        Ok(self.dh.get_or_init(|| Arc::new(dh)).clone())
    }

    /// The antisymmetric ideals up to total degree `n(n-1)`.
    pub fn ideal(&self) -> Arc<SuperIdeal> {
        self.ideal
            .get_or_init(|| Arc::new(SuperIdeal::build(self.n, self.n * (self.n - 1), self.exec)))
            .clone()
    }

    /// Matrix of `spec` on the hook model.
    pub fn hook_map(&self, spec: OperatorSpec) -> Result<Arc<GradedMap>> {
        if let Some(m) = self
            .hook_maps
            .lock()
            .expect("map cache poisoned")
            .get(&spec)
        {
            return Ok(m.clone());
        }
        let m = Arc::new(GradedMap::of_operator(
            spec,
            self.hook()?.as_ref(),
            self.exec,
        )?);
        let mut maps = self.hook_maps.lock().expect("map cache poisoned");
        Ok(maps.entry(spec).or_insert(m).clone())
    }

    /// `sl_2`-strings of `F_1` on the hook model.
    pub fn weights(&self) -> Result<Arc<WeightDecomposition>> {
        if let Some(w) = self.weights.get() {
            return Ok(w.clone());
        }
        let hook = self.hook()?;
        let f1 = self.hook_map(OperatorSpec::F(1))?;
        lefschetz_check(hook.as_ref(), &f1).map_err(|e| Error::InvalidArgument(e.to_string()))?;
        let w = WeightDecomposition::new(hook.as_ref(), &f1)?;
        Ok(self.weights.get_or_init(|| Arc::new(w)).clone())
    }

    /// `Φ` on the hook model.
    pub fn phi(&self) -> Result<Arc<GradedMap>> {
        if let Some(p) = self.phi.get() {
            return Ok(p.clone());
        }
        let p = self.weights()?.phi(self.hook()?.as_ref())?;
        Ok(self.phi.get_or_init(|| Arc::new(p)).clone())
    }

    /// `Φ F_k Φ` on the hook model.
    pub fn dual_map(&self, k: u8) -> Result<GradedMap> {
        let phi = self.phi()?;
        let f = self.hook_map(OperatorSpec::F(k))?;
        Ok(phi
            .compose(&f)
            .compose(&phi)
            .with_name(format!("Phi F{k} Phi")))
    }
}
