//! Reference values `N^g_{d,s}` for `d <= 5`: irreducible genus-`g` degree-`d`
//! plane curves with fixed multiple points of multiplicities `s` on a conic,
//! through the appropriate number of general points.

use rayon::prelude::*;

use crate::config::CurveConfig;
use crate::engine::Engine;
use crate::error::Result;
use crate::Count;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Table1Entry {
    pub d: u32,
    pub g: i64,
    pub s: &'static [u32],
    pub expected: u64,
}

impl Table1Entry {
    pub fn config(&self) -> CurveConfig {
        CurveConfig::plane(self.d, self.g, self.s.to_vec()).expect("|s| <= 2d")
    }

    /// `N^g_{d,(2^2)}` style label.
    pub fn label(&self) -> String {
        let mut s = format!("N^{}_{}", self.g, self.d);
        if !self.s.is_empty() {
            let mut parts: Vec<String> = Vec::new();
            let mut i = 0;
            while i < self.s.len() {
                let m = self.s[i];
                let run = self.s[i..].iter().take_while(|&&x| x == m).count();
                parts.push(if run > 1 { format!("{m}^{run}") } else { m.to_string() });
                i += run;
            }
            s.push_str(&format!(",({})", parts.join(",")));
        }
        s
    }
}

const fn e(d: u32, g: i64, s: &'static [u32], expected: u64) -> Table1Entry {
    Table1Entry { d, g, s, expected }
}

pub const TABLE1: &[Table1Entry] = &[
    e(1, 0, &[], 1),
    e(2, 0, &[], 1),
    e(3, 1, &[], 1),
    e(3, 0, &[], 12),
    e(3, 0, &[2], 1),
    e(4, 3, &[], 1),
    e(4, 2, &[], 27),
    e(4, 1, &[], 225),
    e(4, 0, &[], 620),
    e(4, 2, &[2], 1),
    e(4, 1, &[2], 20),
    e(4, 0, &[2], 96),
    e(4, 1, &[2, 2], 1),
    e(4, 0, &[2, 2], 12),
    e(4, 0, &[2, 2, 2], 1),
    e(4, 0, &[3], 1),
    e(5, 6, &[], 1),
    e(5, 5, &[], 48),
    e(5, 4, &[], 882),
    e(5, 3, &[], 7915),
    e(5, 2, &[], 36855),
    e(5, 1, &[], 87192),
    e(5, 0, &[], 87304),
    e(5, 5, &[2], 1),
    e(5, 4, &[2], 41),
    e(5, 3, &[2], 615),
    e(5, 2, &[2], 4235),
    e(5, 1, &[2], 13775),
    e(5, 0, &[2], 18132),
    e(5, 4, &[2, 2], 1),
    e(5, 3, &[2, 2], 34),
    e(5, 2, &[2, 2], 396),
    e(5, 1, &[2, 2], 1887),
    e(5, 0, &[2, 2], 3510),
    e(5, 3, &[2, 2, 2], 1),
    e(5, 2, &[2, 2, 2], 27),
    e(5, 1, &[2, 2, 2], 225),
    e(5, 0, &[2, 2, 2], 620),
    e(5, 2, &[2, 2, 2, 2], 1),
    e(5, 1, &[2, 2, 2, 2], 20),
    e(5, 0, &[2, 2, 2, 2], 96),
    e(5, 1, &[2, 2, 2, 2, 2], 1),
    e(5, 0, &[2, 2, 2, 2, 2], 12),
    e(5, 3, &[3], 1),
    e(5, 2, &[3], 28),
    e(5, 1, &[3], 240),
    e(5, 0, &[3], 640),
    e(5, 2, &[3, 2], 1),
    e(5, 1, &[3, 2], 20),
    e(5, 0, &[3, 2], 96),
    e(5, 1, &[3, 2, 2], 1),
    e(5, 0, &[3, 2, 2], 12),
    e(5, 0, &[3, 2, 2, 2], 1),
    e(5, 0, &[4], 1),
];

#[derive(Clone, Debug)]
pub struct Table1Row {
    pub entry: Table1Entry,
    pub computed: Count,
}

impl Table1Row {
    pub fn matches(&self) -> bool {
        self.computed == Count::from(self.entry.expected)
    }
}

/// Recomputes every entry, in table order. Entries are evaluated in parallel
/// on the current rayon pool against the engine's shared memo.
pub fn recompute(engine: &Engine) -> Result<Vec<Table1Row>> {
    TABLE1
        .par_iter()
        .map(|entry| {
            Ok(Table1Row {
                entry: *entry,
                computed: engine.count_irreducible(&entry.config())?,
            })
        })
        .collect()
}
