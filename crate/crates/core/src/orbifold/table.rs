use rayon::prelude::*;
use serde::Serialize;

use super::{Orbifold, OrbifoldLabel};
use crate::error::{Error, Result};

/// Largest `|L°/L|` for which a full table is built unless overridden.
pub const DEFAULT_MAX_DET: i64 = 64;

/// All structure constants `N(a, b; c)`, stored sparsely by `(a, b)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FusionTable {
    labels: Vec<OrbifoldLabel>,
    products: Vec<Vec<(usize, u32)>>,
}

impl FusionTable {
    pub fn labels(&self) -> &[OrbifoldLabel] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Nonzero `(c, N(a,b;c))`, sorted by `c`.
    pub fn product(&self, a: usize, b: usize) -> &[(usize, u32)] {
        &self.products[a * self.labels.len() + b]
    }

    pub fn n(&self, a: usize, b: usize, c: usize) -> u32 {
        let p = self.product(a, b);
        p.binary_search_by_key(&c, |e| e.0).map(|i| p[i].1).unwrap_or(0)
    }

    /// Dense `n × n × n` array.
    pub fn dense(&self) -> Vec<Vec<Vec<u32>>> {
        let n = self.len();
        (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| {
                        let mut row = vec![0; n];
                        for &(c, k) in self.product(a, b) {
                            row[c] = k;
                        }
                        row
                    })
                    .collect()
            })
            .collect()
    }

    /// Rows `a,b,c,N` for every nonzero entry.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["a", "b", "c", "N"]).expect("in-memory write");
        for a in 0..self.len() {
            for b in 0..self.len() {
                for &(c, k) in self.product(a, b) {
                    let row = [
                        self.labels[a].to_string(),
                        self.labels[b].to_string(),
                        self.labels[c].to_string(),
                        k.to_string(),
                    ];
                    w.write_record(&row).expect("in-memory write");
                }
            }
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Entry<'a> {
            a: &'a OrbifoldLabel,
            b: &'a OrbifoldLabel,
            product: Vec<Term<'a>>,
        }
        #[derive(Serialize)]
        struct Term<'a> {
            label: &'a OrbifoldLabel,
            multiplicity: u32,
        }
        let names: Vec<String> = self.labels.iter().map(|m| m.to_string()).collect();
        let mut entries = Vec::new();
        for a in 0..self.len() {
            for b in 0..self.len() {
                entries.push(Entry {
                    a: &self.labels[a],
                    b: &self.labels[b],
                    product: self
                        .product(a, b)
                        .iter()
                        .map(|&(c, k)| Term { label: &self.labels[c], multiplicity: k })
                        .collect(),
                });
            }
        }
        serde_json::json!({
            "modules": self.labels,
            "names": names,
            "products": entries,
        })
    }
}

impl Orbifold {
    /// Builds the full table; refuses when `|L°/L|` exceeds `max_det`.
    pub fn fusion_table(&self, max_det: i64) -> Result<FusionTable> {
        let det = self.lattice.det();
        if det > max_det {
            return Err(Error::TableTooLarge { det, max: max_det });
        }
        let labels = self.labels.clone();
        let n = labels.len();
        let products = (0..n * n)
            .into_par_iter()
            .map(|k| {
                let (a, b) = (k / n, k % n);
                let mut row: Vec<(usize, u32)> = self
                    .fuse(&labels[a], &labels[b])
                    .iter()
                    .map(|(c, m)| (self.index_of(c).expect("canonical output"), m))
                    .collect();
                row.sort_unstable();
                row
            })
            .collect();
        Ok(FusionTable { labels, products })
    }
}
