//! On-disk memo of the basis and computed structure constants.
//!
//! One JSON document per (n, m, d): the basis in canonical diagram text and
//! sparse triples (i, j, k, coefficient) meaning basis[i] * basis[j] =
//! coefficient * basis[k].

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::context::{monomial, AlgebraContext};
use crate::arith::CycPolynomial;
use crate::diagram::DepthBound;
use crate::error::{ContourError, Result};

#[derive(Serialize, Deserialize)]
struct CacheFile {
    n: usize,
    m: u32,
    d: DepthBound,
    basis: Vec<String>,
    products: Vec<(usize, usize, usize, String)>,
}

pub fn cache_path(dir: &Path, n: usize, order: u32, d: DepthBound) -> PathBuf {
    dir.join(format!("contour_n{}_m{}_d{}.json", n, order, d))
}

fn exponents_of(p: &CycPolynomial, order: u32) -> Result<Vec<u32>> {
    let bad = || ContourError::Cache(format!("coefficient '{}' is not a loop monomial", p));
    if !p.is_monomial() {
        return Err(bad());
    }
    let (e, c) = p.terms().next().unwrap();
    if !crate::arith::Ring::is_one(c) {
        return Err(bad());
    }
    let mut e = e.clone();
    e.resize(order as usize, 0);
    Ok(e)
}

/// Builds the context, seeding the product memo from the cache file if present.
pub fn load_or_build(n: usize, order: u32, d: DepthBound, dir: Option<&Path>) -> Result<Arc<AlgebraContext>> {
    let ctx = AlgebraContext::new(n, order, d)?;
    let Some(dir) = dir else {
        return Ok(ctx);
    };
    let path = cache_path(dir, n, order, d);
    if !path.exists() {
        return Ok(ctx);
    }
    let text = fs::read_to_string(&path).map_err(|e| ContourError::Cache(e.to_string()))?;
    let file: CacheFile = serde_json::from_str(&text).map_err(|e| ContourError::Cache(e.to_string()))?;
    if (file.n, file.m, file.d) != (n, order, d) {
        return Err(ContourError::Cache(format!("{} holds other parameters", path.display())));
    }
    let basis: Vec<String> = ctx.basis().iter().map(|b| b.to_string()).collect();
    if basis != file.basis {
        return Err(ContourError::Cache(format!("{} has a different basis", path.display())));
    }
    let dim = ctx.dim();
    for (i, j, k, coeff) in file.products {
        if i >= dim || j >= dim || k >= dim {
            return Err(ContourError::Cache(format!("index out of range in {}", path.display())));
        }
        let p = CycPolynomial::parse(&coeff, order)?;
        ctx.seed_product(i, j, (exponents_of(&p, order)?, k));
    }
    Ok(ctx)
}

impl AlgebraContext {
    /// Writes the basis and every product computed so far.
    pub fn save_cache(&self, dir: &Path) -> Result<PathBuf> {
        fs::create_dir_all(dir).map_err(|e| ContourError::Cache(e.to_string()))?;
        let file = CacheFile {
            n: self.n(),
            m: self.order(),
            d: self.depth(),
            basis: self.basis().iter().map(|b| b.to_string()).collect(),
            products: self
                .memoized_products()
                .into_iter()
                .map(|(i, j, (e, k))| (i, j, k, monomial(self.order(), &e).to_string()))
                .collect(),
        };
        let path = cache_path(dir, self.n(), self.order(), self.depth());
        let text = serde_json::to_string(&file).map_err(|e| ContourError::Cache(e.to_string()))?;
        fs::write(&path, text).map_err(|e| ContourError::Cache(e.to_string()))?;
        Ok(path)
    }
}
