//! Exhaustive small-instance verification: enumerate polygons,
//! triangulations and rigid sub-dissections, build contexts with a
//! canonical exponential map, and run the invariant suites with
//! independent brute-force oracles.

use std::collections::BTreeSet;
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::category::{hom_dim, index};
use crate::engine::{CCContext, FriezeMap};
use crate::error::{Error, Result};
use crate::gmodules::{g_module, submodules, RModule};
use crate::ktheory::{diagonalize_with_row_transform, exchange_triangles, K0Basis, SubgroupN};
use crate::laurent::{EpsilonAssignment, Monomial};
use crate::polygon::{crosses, Arc, Dissection, Triangulation};

/// Seed used when none is supplied; fixed so reruns are reproducible.
pub const DEFAULT_SEED: u64 = 0x5eed_f01d;

/// Polygons up to this rank are enumerated exhaustively; beyond it the
/// Catalan-times-subsets growth forces seeded sampling.
pub const EXHAUSTIVE_LIMIT: usize = 6;

/// One generated test case: a triangulation with a rigid sub-dissection.
#[derive(Clone, Debug)]
pub struct GeneratedConfig {
    pub n: usize,
    pub tri: Triangulation,
    pub rigid: Dissection,
}

impl GeneratedConfig {
    /// Context with the canonical exponential map for this case.
    pub fn context(&self) -> Result<CCContext> {
        let basis = K0Basis::new(&self.tri);
        let s_arcs: Vec<Arc> = self
            .tri
            .arcs()
            .iter()
            .filter(|t| !self.rigid.contains(t))
            .copied()
            .collect();
        let subgroup = SubgroupN::new(&basis, &self.tri, &s_arcs)?;
        let eps = canonical_epsilon(&basis, &subgroup);
        CCContext::new(self.tri.clone(), self.rigid.clone(), eps)
    }
}

impl fmt::Display for GeneratedConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} T=", self.n)?;
        for t in self.tri.arcs() {
            write!(f, "{t}")?;
        }
        write!(f, " R=")?;
        if self.rigid.is_empty() {
            write!(f, "∅")?;
        }
        for r in self.rigid.arcs() {
            write!(f, "{r}")?;
        }
        Ok(())
    }
}

/// The generated cases for a range of polygon ranks.
#[derive(Clone, Debug)]
pub struct ConfigEnumeration {
    pub n_max: usize,
    pub seed: u64,
    pub sample: Option<usize>,
    pub configs: Vec<GeneratedConfig>,
}

/// All triangulations of the polygon with `size` vertices (Catalan many),
/// in a deterministic order.
pub fn enumerate_triangulations(size: u16) -> Vec<Triangulation> {
    let verts: Vec<u16> = (1..=size).collect();
    chords_of(&verts, size)
        .into_iter()
        .map(|arcs| Triangulation::from_arcs(size, arcs).expect("recursion yields triangulations"))
        .collect()
}

fn chords_of(verts: &[u16], size: u16) -> Vec<Vec<Arc>> {
    let k = verts.len();
    if k < 3 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in 1..k - 1 {
        let mut chords = Vec::new();
        if i >= 2 {
            chords.push(Arc::new(size, verts[0], verts[i]));
        }
        if i + 2 < k {
            chords.push(Arc::new(size, verts[i], verts[k - 1]));
        }
        for left in chords_of(&verts[..=i], size) {
            for right in chords_of(&verts[i..], size) {
                let mut t = chords.clone();
                t.extend(left.iter().copied());
                t.extend(right.iter().copied());
                out.push(t);
            }
        }
    }
    out
}

fn random_triangulation(rng: &mut ChaCha8Rng, size: u16) -> Triangulation {
    fn rec(rng: &mut ChaCha8Rng, verts: &[u16], size: u16, acc: &mut Vec<Arc>) {
        let k = verts.len();
        if k < 3 {
            return;
        }
        let i = rng.gen_range(1..k - 1);
        if i >= 2 {
            acc.push(Arc::new(size, verts[0], verts[i]));
        }
        if i + 2 < k {
            acc.push(Arc::new(size, verts[i], verts[k - 1]));
        }
        rec(rng, &verts[..=i], size, acc);
        rec(rng, &verts[i..], size, acc);
    }
    let verts: Vec<u16> = (1..=size).collect();
    let mut acc = Vec::new();
    rec(rng, &verts, size, &mut acc);
    Triangulation::from_arcs(size, acc).expect("random recursion yields triangulations")
}

/// Enumerate `(T, R)` cases for every rank `2 ..= n_max`: exhaustively up
/// to [`EXHAUSTIVE_LIMIT`], then `sample` (default 100) seeded draws per
/// rank. Deterministic for a fixed seed.
pub fn enumerate_configs(n_max: usize, sample: Option<usize>, seed: u64) -> ConfigEnumeration {
    assert!(n_max >= 2, "polygons need rank at least 2");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut configs = Vec::new();
    for n in 2..=n_max {
        let size = (n + 3) as u16;
        if n <= EXHAUSTIVE_LIMIT {
            for tri in enumerate_triangulations(size) {
                for mask in 0u32..(1 << n) {
                    let rigid_arcs: Vec<Arc> = tri
                        .arcs()
                        .iter()
                        .enumerate()
                        .filter(|(k, _)| mask & (1 << k) != 0)
                        .map(|(_, a)| *a)
                        .collect();
                    let rigid = Dissection::new(size, rigid_arcs).expect("subset of a triangulation");
                    configs.push(GeneratedConfig { n, tri: tri.clone(), rigid });
                }
            }
        } else {
            for _ in 0..sample.unwrap_or(100) {
                let tri = random_triangulation(&mut rng, size);
                let keep: Vec<Arc> = tri
                    .arcs()
                    .iter()
                    .filter(|_| rng.gen_bool(0.5))
                    .copied()
                    .collect();
                let mut rigid_arcs = keep;
                rigid_arcs.shuffle(&mut rng);
                let rigid = Dissection::new(size, rigid_arcs).expect("subset of a triangulation");
                configs.push(GeneratedConfig { n, tri, rigid });
            }
        }
    }
    ConfigEnumeration { n_max, seed, sample, configs }
}

/// A canonical exponential map that provably factors through the quotient:
/// diagonalize the subgroup lattice with a unimodular row transform and
/// send the free coordinates to fresh variables `x1, x2, ...`; torsion
/// coordinates go to 1.
pub fn canonical_epsilon(basis: &K0Basis, subgroup: &SubgroupN) -> EpsilonAssignment {
    let gens: Vec<_> = subgroup.generators().map(|(_, g)| g.clone()).collect();
    let (u, diag) = diagonalize_with_row_transform(basis.len(), &gens);
    let free_rows: Vec<usize> = (0..basis.len()).filter(|&i| diag[i] == 0).collect();
    EpsilonAssignment::new(basis.arcs().iter().enumerate().map(|(k, arc)| {
        let mono = Monomial::from_exps(
            free_rows
                .iter()
                .enumerate()
                .map(|(j, &row)| (format!("x{}", j + 1), u[row][k])),
        );
        (*arc, mono)
    }))
}

/// Independent oracle for submodule enumeration: filter all `2^support`
/// subsets by the one-step closure predicate. Bounded at support size 12.
pub fn brute_submodule_oracle(module: &RModule) -> Result<Vec<u32>> {
    let k = module.support().len();
    if k > 12 {
        return Err(Error::SupportTooLarge { got: k, bound: 12 });
    }
    let pairs: Vec<(usize, usize)> = module.forcing_pairs().collect();
    let mut masks = Vec::new();
    for mask in 0u32..(1 << k) {
        let closed = pairs
            .iter()
            .all(|&(i, j)| mask & (1 << i) == 0 || mask & (1 << j) != 0);
        if closed {
            masks.push(mask);
        }
    }
    Ok(masks)
}

/// The named invariant suites.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Suite {
    Category,
    Ktheory,
    Friezes,
    ConditionF,
    Multiplication,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Category,
        Suite::Ktheory,
        Suite::Friezes,
        Suite::ConditionF,
        Suite::Multiplication,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Category => "category",
            Suite::Ktheory => "ktheory",
            Suite::Friezes => "friezes",
            Suite::ConditionF => "conditionF",
            Suite::Multiplication => "multiplication",
        }
    }

    pub fn parse(s: &str) -> Option<Suite> {
        match s.trim() {
            "category" => Some(Suite::Category),
            "ktheory" => Some(Suite::Ktheory),
            "friezes" => Some(Suite::Friezes),
            "conditionF" | "conditionf" | "condition-f" => Some(Suite::ConditionF),
            "multiplication" => Some(Suite::Multiplication),
            _ => None,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Count of checks performed plus failure descriptions.
pub type CheckOutcome = (u64, Vec<String>);

fn merge(into: &mut CheckOutcome, from: CheckOutcome) {
    into.0 += from.0;
    into.1.extend(from.1);
}

/// `Hom(x, Σy)` agrees with the crossing rule on every pair of diagonals
/// of the `(n+3)`-gon, and Hom dimensions are suspension-invariant.
pub fn check_hom_matches_crossing(n: usize) -> CheckOutcome {
    let diagonals = crate::polygon::all_diagonals(n);
    let mut checks = 0;
    let mut failures = Vec::new();
    for x in &diagonals {
        for y in &diagonals {
            checks += 2;
            if (hom_dim(x, &y.suspend(1)) == 1) != crosses(x, y) {
                failures.push(format!("n={n}: Hom({x}, Σ{y}) disagrees with crossing"));
            }
            if hom_dim(x, y) != hom_dim(&x.suspend(1), &y.suspend(1)) {
                failures.push(format!("n={n}: Hom({x}, {y}) is not suspension-invariant"));
            }
        }
    }
    (checks, failures)
}

/// Per-triangulation sanity: no mutual factoring between distinct arcs of
/// `T`, the index reproduces `[t]` on `T` and `-[t]` on `ΣT`, and exchange
/// middles stay inside `T`.
pub fn check_triangulation_category(tri: &Triangulation) -> CheckOutcome {
    let mut checks = 0;
    let mut failures = Vec::new();
    let basis = K0Basis::new(tri);
    let label = |detail: String| format!("T={:?}: {detail}", tri.arcs());

    for (k, t) in tri.arcs().iter().enumerate() {
        for t2 in &tri.arcs()[k + 1..] {
            checks += 1;
            if hom_dim(t, t2) == 1 && hom_dim(t2, t) == 1 {
                failures.push(label(format!("mutual factoring between {t} and {t2}")));
            }
        }
    }

    for t in tri.arcs() {
        checks += 2;
        match index(&basis, tri, t) {
            Ok(v) if v == basis.class_of(t).unwrap() => {}
            other => failures.push(label(format!("index of {t} is {other:?}, not [{t}]"))),
        }
        match index(&basis, tri, &t.suspend(1)) {
            Ok(v) if v == basis.class_of(t).unwrap().neg() => {}
            other => failures.push(label(format!("index of Σ{t} is {other:?}, not -[{t}]"))),
        }
        checks += 1;
        match exchange_triangles(tri, t) {
            Ok((first, second)) => {
                let middles_in_t = first
                    .y
                    .iter()
                    .chain(second.y.iter())
                    .all(|m| tri.contains(m) && m != t);
                if !middles_in_t {
                    failures.push(label(format!("exchange middles of {t} leave T \\ {{{t}}}")));
                }
            }
            Err(e) => failures.push(label(format!("exchange triangles of {t}: {e}"))),
        }
        checks += 1;
        match crate::polygon::flip(tri, t) {
            Ok((t_star, flipped)) => match crate::polygon::flip(&flipped, &t_star) {
                Ok((back, restored)) if back == *t && restored == *tri => {}
                _ => failures.push(label(format!("flipping {t} is not an involution"))),
            },
            Err(e) => failures.push(label(format!("flip of {t}: {e}"))),
        }
    }
    (checks, failures)
}

/// Lattice-level invariants of a context: generators of `N` reduce to
/// zero, reduction is idempotent and additive, and the `θ` square commutes
/// on simples.
pub fn check_ktheory(ctx: &CCContext) -> Result<CheckOutcome> {
    let mut checks = 0;
    let mut failures = Vec::new();
    let basis = ctx.basis();
    let n = ctx.subgroup();
    let tri = ctx.triangulation();

    for (source, gen) in n.generators() {
        checks += 1;
        if !n.contains(gen) {
            failures.push(format!("generator for {source} does not reduce to zero"));
        }
    }

    let mut index_vectors = Vec::new();
    for c in ctx.diagonals() {
        index_vectors.push(index(basis, tri, &c)?);
    }
    for v in &index_vectors {
        checks += 1;
        let rep = n.reduce(v);
        if n.reduce(rep.residue()) != rep {
            failures.push(format!("reduction of {} is not idempotent", basis.render(v)));
        }
    }
    for pair in index_vectors.windows(2) {
        checks += 1;
        let direct = n.reduce(&pair[0].add(&pair[1]));
        let stepwise = n.reduce(&n.reduce(&pair[0]).residue().add(n.reduce(&pair[1]).residue()));
        if direct != stepwise {
            failures.push("reduction is not additive".to_string());
        }
    }

    for r in ctx.rigid().arcs() {
        checks += 1;
        let via_theta = crate::ktheory::theta(basis, tri, ctx.rbasis(), n, &ctx.rbasis().simple(r)?)?;
        let direct = n.reduce(&crate::ktheory::theta_bar(basis, tri, r)?);
        if via_theta != direct {
            failures.push(format!("θ ∘ κ disagrees with Q ∘ θ̄ at the simple of {r}"));
        }
    }
    for s in ctx.s_arcs() {
        checks += 1;
        if !n.contains(&crate::ktheory::theta_bar(basis, tri, s)?) {
            failures.push(format!("θ̄ of {s} does not land in N"));
        }
    }
    Ok((checks, failures))
}

/// The generalized frieze property for both `ρ` and `π`.
pub fn check_friezes(ctx: &CCContext) -> Result<CheckOutcome> {
    let mut checks = 0;
    let mut failures = Vec::new();
    for map in [FriezeMap::Rho, FriezeMap::Pi] {
        let report = ctx.check_generalized_frieze(map)?;
        checks += report.records.len() as u64;
        if let Some(failure) = report.first_failure() {
            failures.push(format!(
                "{map:?} breaks the generalized frieze rule on {}: difference {}",
                failure.triangle, failure.difference
            ));
        }
    }
    Ok((checks, failures))
}

/// Condition F over all shift, AR and resolution triangles.
pub fn check_condition_f(ctx: &CCContext) -> Result<CheckOutcome> {
    let report = ctx.check_condition_f()?;
    let checks = report.records.len() as u64;
    let mut failures = Vec::new();
    if let Some(failure) = report.first_failure() {
        failures.push(format!(
            "Condition F fails on {}: {} vs {}",
            failure.triangle, failure.lhs, failure.rhs
        ));
    }
    Ok((checks, failures))
}

/// `ρ(r)ρ(m) = ρ(a) + ρ(b)` with both sides from the direct evaluator,
/// over every crossing pair `(m, r ∈ R)`.
pub fn check_rho_multiplication(ctx: &CCContext) -> Result<CheckOutcome> {
    let mut checks = 0;
    let mut failures = Vec::new();
    for m in ctx.diagonals() {
        for r in ctx.rigid().arcs() {
            if !crosses(&m, r) {
                continue;
            }
            checks += 1;
            let rec = ctx.multiplication_identity(&m, r)?;
            if !rec.rho_identity_holds() {
                failures.push(format!(
                    "ρ({r})ρ({m}) = {} but ρ({}) + ρ({}) = {}",
                    rec.lhs, rec.a, rec.b, rec.rhs
                ));
            }
        }
    }
    Ok((checks, failures))
}

/// `π(m) = π(a) + π(b)` over every crossing pair `(m, r ∈ R)`, computed
/// without touching the Laurent-valued machinery.
pub fn check_pi_multiplication(ctx: &CCContext) -> Result<CheckOutcome> {
    let mut checks = 0;
    let mut failures = Vec::new();
    let rigid = ctx.rigid();
    for m in ctx.diagonals() {
        for r in rigid.arcs() {
            if !crosses(&m, r) {
                continue;
            }
            checks += 1;
            let (a, b) = crate::polygon::resolve_crossing(&m, r)?;
            let lhs = crate::gmodules::pi(rigid, &m)?;
            let rhs = crate::gmodules::pi_sum(rigid, &a)? + crate::gmodules::pi_sum(rigid, &b)?;
            if lhs != rhs {
                failures.push(format!("π({m}) = {lhs} but π({a}) + π({b}) = {rhs}"));
            }
        }
    }
    Ok((checks, failures))
}

/// The two `ρ` evaluators agree on every diagonal.
pub fn check_evaluators_agree(ctx: &CCContext) -> Result<CheckOutcome> {
    let mut checks = 0;
    let mut failures = Vec::new();
    for c in ctx.diagonals() {
        checks += 1;
        let direct = ctx.rho_direct(&c)?;
        let mult = ctx.rho_multiplicative(&c)?;
        if direct != mult {
            failures.push(format!("evaluators disagree at {c}: {direct} vs {mult}"));
        }
    }
    Ok((checks, failures))
}

/// Submodule enumeration agrees with the brute-force subset filter on
/// every module of the context.
pub fn check_submodule_oracle(ctx: &CCContext) -> Result<CheckOutcome> {
    let mut checks = 0;
    let mut failures = Vec::new();
    for c in ctx.diagonals() {
        checks += 1;
        let module = g_module(ctx.rigid(), &c);
        let fast = submodules(&module)?;
        let brute = brute_submodule_oracle(&module)?;
        if fast.masks() != brute.as_slice() {
            failures.push(format!("submodule sets differ for G{c}"));
        }
    }
    Ok((checks, failures))
}

fn run_suite_on_context(suite: Suite, ctx: &CCContext) -> Result<CheckOutcome> {
    match suite {
        Suite::Category => Ok((0, Vec::new())), // handled per triangulation
        Suite::Ktheory => check_ktheory(ctx),
        Suite::Friezes => check_friezes(ctx),
        Suite::ConditionF => check_condition_f(ctx),
        Suite::Multiplication => {
            let mut out = check_rho_multiplication(ctx)?;
            merge(&mut out, check_pi_multiplication(ctx)?);
            merge(&mut out, check_evaluators_agree(ctx)?);
            merge(&mut out, check_submodule_oracle(ctx)?);
            Ok(out)
        }
    }
}

/// Aggregated result of one suite over an enumeration.
#[derive(Clone, Debug)]
pub struct SuiteOutcome {
    pub suite: Suite,
    pub configs: usize,
    pub checks: u64,
    /// First counterexample per failing config, capped.
    pub failures: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub outcomes: Vec<SuiteOutcome>,
}

impl SuiteReport {
    pub fn pass(&self) -> bool {
        self.outcomes.iter().all(|o| o.failures.is_empty())
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for o in &self.outcomes {
            let status = if o.failures.is_empty() { "PASS" } else { "FAIL" };
            out.push_str(&format!(
                "suite {:<15} {status}  ({} checks over {} configs)\n",
                o.suite.name(),
                o.checks,
                o.configs
            ));
            for f in o.failures.iter().take(5) {
                out.push_str(&format!("  counterexample: {f}\n"));
            }
            if o.failures.len() > 5 {
                out.push_str(&format!("  ... and {} more\n", o.failures.len() - 5));
            }
        }
        out
    }
}

const FAILURE_CAP: usize = 100;

/// Apply `f` to every config, fanning out over `threads` workers; results
/// come back in enumeration order.
pub fn map_configs<T: Send>(
    configs: &[GeneratedConfig],
    threads: usize,
    f: impl Fn(&GeneratedConfig) -> T + Sync,
) -> Vec<T> {
    let threads = threads.max(1).min(configs.len().max(1));
    if threads == 1 {
        return configs.iter().map(f).collect();
    }
    let mut slots: Vec<Option<T>> = Vec::new();
    slots.resize_with(configs.len(), || None);
    {
        let slot_chunks: Vec<(usize, &GeneratedConfig)> = configs.iter().enumerate().collect();
        let results = std::sync::Mutex::new(&mut slots);
        std::thread::scope(|scope| {
            for worker in 0..threads {
                let f = &f;
                let results = &results;
                let slot_chunks = &slot_chunks;
                scope.spawn(move || {
                    for (i, cfg) in slot_chunks.iter().skip(worker).step_by(threads) {
                        let value = f(cfg);
                        results.lock().unwrap()[*i] = Some(value);
                    }
                });
            }
        });
    }
    slots.into_iter().map(|v| v.expect("worker filled slot")).collect()
}

/// Run the requested suites over an enumeration, merging per-config
/// results deterministically. The `category` suite runs once per distinct
/// triangulation, the rest once per `(T, R)` case.
pub fn run_suites(enumeration: &ConfigEnumeration, suites: &[Suite], threads: usize) -> SuiteReport {
    let suites: BTreeSet<Suite> = suites.iter().copied().collect();
    let mut outcomes = Vec::new();

    if suites.contains(&Suite::Category) {
        let mut seen_n = BTreeSet::new();
        let mut units: Vec<&GeneratedConfig> = Vec::new();
        let mut last_tri: Option<&Triangulation> = None;
        for cfg in &enumeration.configs {
            if last_tri != Some(&cfg.tri) {
                units.push(cfg);
                last_tri = Some(&cfg.tri);
            }
        }
        let mut total = (0u64, Vec::new());
        for cfg in &units {
            if seen_n.insert(cfg.n) {
                merge(&mut total, check_hom_matches_crossing(cfg.n));
            }
        }
        let results = map_configs_ref(&units, threads, |cfg| check_triangulation_category(&cfg.tri));
        for r in results {
            merge(&mut total, r);
        }
        total.1.truncate(FAILURE_CAP);
        outcomes.push(SuiteOutcome {
            suite: Suite::Category,
            configs: units.len(),
            checks: total.0,
            failures: total.1,
        });
    }

    for suite in suites {
        if suite == Suite::Category {
            continue;
        }
        let results = map_configs(&enumeration.configs, threads, |cfg| {
            let outcome = cfg
                .context()
                .and_then(|ctx| run_suite_on_context(suite, &ctx));
            match outcome {
                Ok(out) => out,
                Err(e) => (1, vec![format!("error: {e}")]),
            }
        });
        let mut total = (0u64, Vec::new());
        for (cfg, (checks, failures)) in enumeration.configs.iter().zip(results) {
            total.0 += checks;
            if let Some(first) = failures.into_iter().next() {
                if total.1.len() < FAILURE_CAP {
                    total.1.push(format!("{cfg}: {first}"));
                }
            }
        }
        outcomes.push(SuiteOutcome {
            suite,
            configs: enumeration.configs.len(),
            checks: total.0,
            failures: total.1,
        });
    }

    SuiteReport { outcomes }
}

fn map_configs_ref<T: Send>(
    configs: &[&GeneratedConfig],
    threads: usize,
    f: impl Fn(&GeneratedConfig) -> T + Sync,
) -> Vec<T> {
    let owned: Vec<GeneratedConfig> = configs.iter().map(|c| (*c).clone()).collect();
    map_configs(&owned, threads, f)
}

/// Run the requested suites on a single, explicitly configured context.
pub fn run_suites_on_context(ctx: &CCContext, suites: &[Suite]) -> SuiteReport {
    let suites: BTreeSet<Suite> = suites.iter().copied().collect();
    let mut outcomes = Vec::new();
    for suite in suites {
        let mut total = if suite == Suite::Category {
            let mut t = check_hom_matches_crossing(ctx.n());
            merge(&mut t, check_triangulation_category(ctx.triangulation()));
            t
        } else {
            match run_suite_on_context(suite, ctx) {
                Ok(out) => out,
                Err(e) => (1, vec![format!("error: {e}")]),
            }
        };
        total.1.truncate(FAILURE_CAP);
        outcomes.push(SuiteOutcome { suite, configs: 1, checks: total.0, failures: total.1 });
    }
    SuiteReport { outcomes }
}

/// Worker count from the `FRIEZEFORGE_THREADS` environment variable,
/// defaulting to 1.
pub fn threads_from_env() -> usize {
    std::env::var("FRIEZEFORGE_THREADS")
        .ok()
        .and_then(|v| v.parse().ok())
        .filter(|&t| t >= 1)
        .unwrap_or(1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangulation_counts_are_catalan() {
        assert_eq!(enumerate_triangulations(5).len(), 5);
        assert_eq!(enumerate_triangulations(6).len(), 14);
        assert_eq!(enumerate_triangulations(8).len(), 132);
    }

    #[test]
    fn enumeration_is_deterministic() {
        let a = enumerate_configs(7, Some(20), 42);
        let b = enumerate_configs(7, Some(20), 42);
        assert_eq!(a.configs.len(), b.configs.len());
        for (x, y) in a.configs.iter().zip(&b.configs) {
            assert_eq!(x.tri, y.tri);
            assert_eq!(x.rigid, y.rigid);
        }
        // exhaustive part: sum over triangulations of 2^n subsets
        let exhaustive: usize = a.configs.iter().filter(|c| c.n <= EXHAUSTIVE_LIMIT).count();
        assert_eq!(exhaustive, 5 * 4 + 14 * 8 + 42 * 16 + 132 * 32 + 429 * 64);
        assert_eq!(a.configs.len() - exhaustive, 20);
    }

    #[test]
    fn canonical_epsilon_validates() {
        for cfg in enumerate_configs(4, None, 1).configs {
            let ctx = cfg.context().unwrap();
            // context construction already validates; sanity check one value
            assert!(ctx.beta(&ctx.rbasis().zero()).is_one());
        }
    }

    #[test]
    fn oracle_agrees_on_a_forced_chain() {
        // fan dissection of the 10-gon: G{3,9} is a chain of three forced
        // simples, so it has exactly four submodules
        let a = |i, j| Arc::new(10, i, j);
        let rigid = Dissection::new(10, [a(2, 4), a(2, 5), a(2, 6)]).unwrap();
        let module = g_module(&rigid, &a(3, 9));
        assert_eq!(module.support().len(), 3);
        let fast = submodules(&module).unwrap();
        assert_eq!(fast.len(), 4);
        assert_eq!(fast.masks(), brute_submodule_oracle(&module).unwrap().as_slice());
    }

    #[test]
    fn suites_pass_on_a_small_sweep() {
        let cfgs = enumerate_configs(3, None, DEFAULT_SEED);
        let report = run_suites(&cfgs, &Suite::ALL, 2);
        assert!(report.pass(), "{}", report.render());
    }
}
