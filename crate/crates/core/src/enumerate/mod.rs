//! Homomorphisms from a branched-twist-spin group into a finite group with a
//! prescribed image of `h`.
//!
//! Two engines produce identical, canonically ordered output: an exhaustive
//! oracle over `G^l` and a pruned backtracking search driven by a [`Plan`].
//! Both run on a compiled multiplication table, so every group costs the
//! same per product.

mod plan;

use std::fmt;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::EnumerationError;
use crate::group::{CayleyTable, FiniteGroup};
use crate::presentation::{BtsPresentation, Word, H};
use plan::{Plan, Step};

/// Exhaustive search is refused when `|G|^l` exceeds this. The bound admits
/// `l ≤ 5` for `|G| = 24` and `l ≤ 6` for `|G| ≤ 16`.
pub const ORACLE_BOUND: u64 = 1 << 24;

/// Default cap on materialized witnesses; counts are always exact.
pub const DEFAULT_WITNESS_LIMIT: usize = 1024;

/// Images of `h` (index 0) and of `x_1..x_l`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Representation<E> {
    images: Vec<E>,
}

impl<E: Copy> Representation<E> {
    pub fn new(images: Vec<E>) -> Representation<E> {
        Representation { images }
    }

    pub fn h(&self) -> E {
        self.images[H]
    }

    /// Image of `x_i`, `1 ≤ i ≤ l`.
    pub fn meridian(&self, i: usize) -> E {
        self.images[i]
    }

    pub fn meridians(&self) -> &[E] {
        &self.images[1..]
    }

    /// All images, `h` first.
    pub fn images(&self) -> &[E] {
        &self.images
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    Oracle,
    Backtracking,
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::Oracle => "oracle",
            Strategy::Backtracking => "backtracking",
        })
    }
}

#[derive(Debug, Clone)]
pub struct SearchConfig<E> {
    pub h_image: E,
    pub strategy: Strategy,
    pub witness_limit: usize,
    /// Keep the canonically smallest witnesses. When false, witnesses are the
    /// first ones the search reaches (still reproducible, just not sorted).
    pub deterministic: bool,
}

impl<E> SearchConfig<E> {
    pub fn new(h_image: E) -> SearchConfig<E> {
        SearchConfig {
            h_image,
            strategy: Strategy::Backtracking,
            witness_limit: DEFAULT_WITNESS_LIMIT,
            deterministic: true,
        }
    }

    pub fn strategy(mut self, strategy: Strategy) -> SearchConfig<E> {
        self.strategy = strategy;
        self
    }

    pub fn witness_limit(mut self, limit: usize) -> SearchConfig<E> {
        self.witness_limit = limit;
        self
    }
}

/// Exact count plus up to `witness_limit` representations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome<E> {
    pub count: u64,
    pub witnesses: Vec<Representation<E>>,
    pub truncated: bool,
}

/// Evaluates `w` with generator `i` sent to `assignment[i]`.
pub fn evaluate_word<G: FiniteGroup>(
    g: &G,
    w: &Word,
    assignment: &[G::Element],
) -> Result<G::Element, EnumerationError> {
    w.letters().iter().try_fold(g.identity(), |acc, l| {
        let x = *assignment
            .get(l.generator)
            .ok_or(EnumerationError::Unassigned(l.generator))?;
        Ok(g.mul(acc, if l.inverse { g.inverse(x) } else { x }))
    })
}

/// A presentation and a group lowered to table indices.
struct Compiled<E> {
    table: CayleyTable,
    elements: Vec<E>,
    relators: Vec<Vec<(usize, i64)>>,
    h: u16,
    l: usize,
}

impl<E: Copy + Eq + fmt::Debug> Compiled<E> {
    fn new<G: FiniteGroup<Element = E>>(
        p: &BtsPresentation,
        g: &G,
        h_image: E,
    ) -> Result<Compiled<E>, EnumerationError> {
        let (table, elements) = CayleyTable::compile(g)?;
        let h = elements.iter().position(|&x| x == h_image).ok_or_else(|| {
            crate::GroupError::ForeignElement {
                element: format!("{h_image:?}"),
                group: g.descriptor(),
            }
        })? as u16;
        Ok(Compiled {
            table,
            elements,
            relators: p.relators().iter().map(Word::syllables).collect(),
            h,
            l: p.meridians(),
        })
    }

    #[inline]
    fn holds(&self, relator: usize, a: &[u16]) -> bool {
        let t = &self.table;
        let mut acc = t.identity_idx();
        for &(gen, e) in &self.relators[relator] {
            let x = a[gen];
            let y = match e {
                1 => x,
                -1 => t.inv_idx(x),
                _ => t.pow_idx(x, e),
            };
            acc = t.mul_idx(acc, y);
        }
        acc == t.identity_idx()
    }

    fn lift(&self, a: &[u16]) -> Representation<E> {
        Representation::new(a.iter().map(|&i| self.elements[i as usize]).collect())
    }
}

/// Collects an exact count and a bounded witness list.
struct Collector {
    count: u64,
    found: Vec<Vec<u16>>,
    limit: usize,
    sorted: bool,
}

impl Collector {
    fn new(limit: usize, sorted: bool) -> Collector {
        Collector {
            count: 0,
            found: Vec::new(),
            limit,
            sorted,
        }
    }

    fn push(&mut self, a: &[u16]) {
        self.count += 1;
        if self.limit == 0 {
            return;
        }
        if !self.sorted {
            if self.found.len() < self.limit {
                self.found.push(a.to_vec());
            }
            return;
        }
        self.found.push(a.to_vec());
        if self.found.len() >= self.limit.saturating_mul(2).max(64) {
            self.prune();
        }
    }

    fn prune(&mut self) {
        if self.sorted {
            self.found.sort_unstable();
        }
        self.found.truncate(self.limit);
    }

    fn finish(mut self) -> Collector {
        self.prune();
        self
    }
}

fn outcome<E: Copy + Eq + fmt::Debug>(
    c: &Compiled<E>,
    parts: Vec<Collector>,
    limit: usize,
) -> SearchOutcome<E> {
    let count: u64 = parts.iter().map(|p| p.count).sum();
    let mut witnesses = Vec::new();
    for p in parts {
        for a in p.found {
            if witnesses.len() == limit {
                break;
            }
            witnesses.push(c.lift(&a));
        }
    }
    SearchOutcome {
        count,
        truncated: (witnesses.len() as u64) < count,
        witnesses,
    }
}

fn check_oracle_guard(order: usize, l: usize) -> Result<(), EnumerationError> {
    let within = (order as u64)
        .checked_pow(l as u32)
        .is_some_and(|v| v <= ORACLE_BOUND);
    if within {
        Ok(())
    } else {
        Err(EnumerationError::OracleGuard {
            group_order: order,
            generators: l,
            bound: ORACLE_BOUND,
        })
    }
}

fn run_oracle<E: Copy + Eq + fmt::Debug + Send + Sync>(
    c: &Compiled<E>,
    limit: usize,
    sorted: bool,
) -> Vec<Collector> {
    let n = c.table.order_usize() as u16;
    let l = c.l;
    let all: Vec<usize> = (0..c.relators.len()).collect();
    let scan = |first: Option<u16>| {
        let mut col = Collector::new(limit, sorted);
        let mut a = vec![0u16; l + 1];
        a[H] = c.h;
        if let Some(x) = first {
            a[1] = x;
        }
        let fixed = usize::from(first.is_some());
        loop {
            if all.iter().all(|&r| c.holds(r, &a)) {
                col.push(&a);
            }
            // odometer over positions fixed+1..=l, last position fastest
            let mut pos = l;
            loop {
                if pos <= fixed {
                    return col.finish();
                }
                a[pos] += 1;
                if a[pos] < n {
                    break;
                }
                a[pos] = 0;
                pos -= 1;
            }
        }
    };
    if l == 0 {
        return vec![scan(None)];
    }
    (0..n).into_par_iter().map(|x| scan(Some(x))).collect()
}

fn run_backtracking<E: Copy + Eq + fmt::Debug + Send + Sync>(
    c: &Compiled<E>,
    plan: &Plan,
    limit: usize,
    sorted: bool,
) -> Vec<Collector> {
    let mut a0 = vec![0u16; c.l + 1];
    a0[H] = c.h;
    if !plan.initial_checks.iter().all(|&r| c.holds(r, &a0)) {
        return vec![Collector::new(limit, sorted)];
    }
    if plan.steps.is_empty() {
        let mut col = Collector::new(limit, sorted);
        col.push(&a0);
        return vec![col];
    }
    let n = c.table.order_usize() as u16;
    let Step::Free(first) = plan.steps[0] else {
        unreachable!("plans start with a free generator")
    };
    (0..n)
        .into_par_iter()
        .map(|x| {
            let mut col = Collector::new(limit, sorted);
            let mut a = a0.clone();
            a[first] = x;
            if plan.checks[0].iter().all(|&r| c.holds(r, &a)) {
                descend(c, plan, 1, &mut a, &mut col);
            }
            col.finish()
        })
        .collect()
}

fn descend<E: Copy + Eq + fmt::Debug>(
    c: &Compiled<E>,
    plan: &Plan,
    step: usize,
    a: &mut [u16],
    col: &mut Collector,
) {
    if step == plan.steps.len() {
        col.push(a);
        return;
    }
    let t = &c.table;
    let ok = |a: &[u16]| plan.checks[step].iter().all(|&r| c.holds(r, a));
    match plan.steps[step] {
        Step::Free(g) => {
            for x in 0..t.order_usize() as u16 {
                a[g] = x;
                if ok(a) {
                    descend(c, plan, step + 1, a, col);
                }
            }
        }
        Step::Derive {
            target,
            over,
            from,
            inverse_conj,
        } => {
            let (o, oi) = (a[over], t.inv_idx(a[over]));
            let (l, r) = if inverse_conj { (oi, o) } else { (o, oi) };
            a[target] = t.mul_idx(t.mul_idx(l, a[from]), r);
            if ok(a) {
                descend(c, plan, step + 1, a, col);
            }
        }
    }
}

/// Runs the configured engine and returns the exact count with witnesses.
pub fn search<G: FiniteGroup>(
    p: &BtsPresentation,
    g: &G,
    config: &SearchConfig<G::Element>,
) -> Result<SearchOutcome<G::Element>, EnumerationError> {
    let limit = config.witness_limit;
    let sorted = config.deterministic;
    if config.strategy == Strategy::Oracle {
        check_oracle_guard(g.size(), p.meridians())?;
    }
    let c = Compiled::new(p, g, config.h_image)?;
    let parts = match config.strategy {
        Strategy::Oracle => run_oracle(&c, limit, sorted),
        Strategy::Backtracking => run_backtracking(&c, &Plan::new(p), limit, sorted),
    };
    Ok(outcome(&c, parts, limit))
}

/// Every assignment in `G^l` with `h ↦ h_image` satisfying all relators,
/// found by exhaustive scan, in canonical order.
pub fn enumerate_oracle<G: FiniteGroup>(
    p: &BtsPresentation,
    g: &G,
    h_image: G::Element,
) -> Result<Vec<Representation<G::Element>>, EnumerationError> {
    let cfg = SearchConfig::new(h_image)
        .strategy(Strategy::Oracle)
        .witness_limit(usize::MAX);
    Ok(search(p, g, &cfg)?.witnesses)
}

/// Same output as [`enumerate_oracle`], found by propagation along crossing
/// relators with early relator checks.
pub fn enumerate_backtracking<G: FiniteGroup>(
    p: &BtsPresentation,
    g: &G,
    h_image: G::Element,
) -> Result<Vec<Representation<G::Element>>, EnumerationError> {
    let cfg = SearchConfig::new(h_image).witness_limit(usize::MAX);
    Ok(search(p, g, &cfg)?.witnesses)
}

/// Serialized result of one count.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountReport {
    pub knot: String,
    pub m: i64,
    pub n: i64,
    pub group: String,
    pub h_image: String,
    pub beta: Option<i64>,
    pub count: u64,
    /// Meridian images `x_1..x_l` of each witness, rendered.
    pub witnesses: Vec<Vec<String>>,
    pub witnesses_truncated: bool,
    pub engine: Strategy,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub runtime_us: Option<u64>,
}

/// Counts representations and packages the result with its parameters.
pub fn count_reps<G>(
    p: &BtsPresentation,
    g: &G,
    config: &SearchConfig<G::Element>,
) -> Result<CountReport, EnumerationError>
where
    G: FiniteGroup,
    G::Element: fmt::Display,
{
    let start = Instant::now();
    let out = search(p, g, config)?;
    let elapsed = start.elapsed().as_micros() as u64;
    Ok(CountReport {
        knot: p.base().name().to_string(),
        m: p.m(),
        n: p.n(),
        group: g.descriptor(),
        h_image: config.h_image.to_string(),
        beta: p.beta(),
        count: out.count,
        witnesses: out
            .witnesses
            .iter()
            .map(|r| r.meridians().iter().map(|x| x.to_string()).collect())
            .collect(),
        witnesses_truncated: out.truncated,
        engine: config.strategy,
        runtime_us: Some(elapsed),
    })
}
