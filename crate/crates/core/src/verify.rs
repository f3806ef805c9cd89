//! Exhaustive identity checks with structured reports.
//!
//! Each suite enumerates every partition up to `n_max`, compares two
//! independently computed quantities, and records every disagreement as a
//! [`Counterexample`]. At most [`COUNTEREXAMPLE_CAP`] witnesses are kept per
//! sub-check, smallest `n` first and then in enumeration order, so the first
//! one listed is always a minimal witness.

use std::collections::{BTreeMap, HashMap};
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::bijection::{phi, psi, SelectionStrategy};
use crate::counting::{
    distinct_odd_count, distinct_odd_count_direct, durfee_gf_oracle, enumerate_partitions,
    order_bound, signed_excess, table_a, table_b_durfee, table_by_length, table_c, table_d,
    table_polygon_order, CountTable,
};
use crate::partition::Partition;
use crate::statistics::{
    contains_km_polygon, durfee_polygon_order, durfee_side, k_measure, k_measure_oracle, Gap,
};

pub const COUNTEREXAMPLE_CAP: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Counterexample {
    pub check: String,
    pub inputs: Value,
    pub expected: Value,
    pub actual: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SubCheck {
    pub name: String,
    pub status: Status,
    pub checks_run: u64,
    pub failures: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Params {
    pub k_max: Option<u64>,
    pub n_max: u64,
    pub strategies: Option<Vec<SelectionStrategy>>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub params: Params,
    pub status: Status,
    pub checks_run: u64,
    pub sub_checks: Vec<SubCheck>,
    pub counterexamples: Vec<Counterexample>,
    /// Wall-clock time; `None` in comparison mode.
    pub elapsed_ms: Option<u64>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn sub_check(&self, name: &str) -> Option<&SubCheck> {
        self.sub_checks.iter().find(|s| s.name == name)
    }

    pub fn counterexamples_for<'a>(&'a self, check: &'a str) -> impl Iterator<Item = &'a Counterexample> {
        self.counterexamples.iter().filter(move |c| c.check == check)
    }

    /// Drops the timing field so reports compare byte-for-byte.
    pub fn without_timing(mut self) -> Self {
        self.elapsed_ms = None;
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }
}

/// Ascending sort key for witnesses: `n`, then the parameters, then the
/// partition in enumeration (reverse-lexicographic) order.
type OrderKey = Vec<i128>;

fn partition_key(n: u64, params: &[u64], p: &Partition) -> OrderKey {
    let mut key = vec![n as i128];
    key.extend(params.iter().map(|&v| v as i128));
    key.extend(p.parts().iter().map(|&v| -(v as i128)));
    key
}

#[derive(Debug, Default)]
struct SubState {
    checks: u64,
    failures: u64,
    witnesses: Vec<(OrderKey, Counterexample)>,
}

impl SubState {
    fn trim(&mut self) {
        self.witnesses.sort_by(|a, b| a.0.cmp(&b.0));
        self.witnesses.truncate(COUNTEREXAMPLE_CAP);
    }
}

/// Accumulates check outcomes per named sub-check.
#[derive(Debug, Default)]
struct Recorder {
    subs: BTreeMap<String, SubState>,
}

impl Recorder {
    fn pass(&mut self, check: &str) {
        self.sub(check).checks += 1;
    }

    fn fail(&mut self, check: &str, key: OrderKey, inputs: Value, expected: Value, actual: Value) {
        let state = self.sub(check);
        state.checks += 1;
        state.failures += 1;
        state.witnesses.push((key, Counterexample { check: check.to_string(), inputs, expected, actual }));
        if state.witnesses.len() > 4 * COUNTEREXAMPLE_CAP {
            state.trim();
        }
    }

    fn check(&mut self, check: &str, ok: bool, key: impl FnOnce() -> OrderKey, detail: impl FnOnce() -> (Value, Value, Value)) {
        if ok {
            self.pass(check);
        } else {
            let (inputs, expected, actual) = detail();
            self.fail(check, key(), inputs, expected, actual);
        }
    }

    fn sub(&mut self, check: &str) -> &mut SubState {
        self.subs.entry(check.to_string()).or_default()
    }

    fn absorb(&mut self, other: Recorder) {
        for (name, state) in other.subs {
            let mine = self.sub(&name);
            mine.checks += state.checks;
            mine.failures += state.failures;
            mine.witnesses.extend(state.witnesses);
            mine.trim();
        }
    }

    fn finish(self, suite: &str, params: Params, started: Instant) -> VerificationReport {
        let mut sub_checks = Vec::new();
        let mut counterexamples = Vec::new();
        let mut checks_run = 0;
        for (name, mut state) in self.subs {
            state.trim();
            checks_run += state.checks;
            sub_checks.push(SubCheck {
                name,
                status: if state.failures == 0 { Status::Pass } else { Status::Fail },
                checks_run: state.checks,
                failures: state.failures,
            });
            counterexamples.extend(state.witnesses.into_iter().map(|(_, c)| c));
        }
        VerificationReport {
            suite: suite.to_string(),
            params,
            status: if counterexamples.is_empty() { Status::Pass } else { Status::Fail },
            checks_run,
            sub_checks,
            counterexamples,
            elapsed_ms: Some(started.elapsed().as_millis() as u64),
        }
    }
}

fn gap(k: u64) -> Gap {
    Gap::new(k).expect("suite gaps start at 1")
}

/// Compares two `(n, m[, l])` tables over the union of their keys.
fn compare_tables(rec: &mut Recorder, check: &str, expected: &CountTable, actual: &CountTable, extra: Value) {
    let keys: std::collections::BTreeSet<_> =
        expected.entries().keys().chain(actual.entries().keys()).copied().collect();
    for key in keys {
        let e = expected.entries().get(&key).copied().unwrap_or(0);
        let a = actual.entries().get(&key).copied().unwrap_or(0);
        rec.check(
            check,
            e == a,
            || {
                let mut k = vec![key.n as i128, key.m as i128];
                k.extend(key.l.map(|l| l as i128));
                k
            },
            || {
                let mut inputs = json!({ "n": key.n, "m": key.m });
                if let Some(l) = key.l {
                    inputs["l"] = json!(l);
                }
                if let Value::Object(extra) = &extra {
                    for (name, v) in extra {
                        inputs[name] = v.clone();
                    }
                }
                (inputs, json!(e), json!(a))
            },
        );
    }
}

/// 2-measure exactly `m` versus Durfee side exactly `m`.
pub fn check_theorem_1(n_max: u64) -> VerificationReport {
    let started = Instant::now();
    let mut rec = Recorder::default();
    let measure = table_a(gap(2), n_max);
    let durfee = table_b_durfee(n_max);
    compare_tables(&mut rec, "measure-equals-durfee", &durfee, &measure, json!({}));
    rec.finish("theorem1", Params { k_max: None, n_max, strategies: None }, started)
}

/// Theorem 1 refined by the number of parts.
pub fn check_theorem_2(n_max: u64) -> VerificationReport {
    let started = Instant::now();
    let mut rec = Recorder::default();
    let two = gap(2);
    let shards: Vec<BTreeMap<(u64, usize, usize), (u128, u128)>> = (0..=n_max)
        .into_par_iter()
        .map(|n| {
            let mut counts: BTreeMap<(u64, usize, usize), (u128, u128)> = BTreeMap::new();
            for p in enumerate_partitions(n) {
                counts.entry((n, k_measure(&p, two), p.len())).or_default().0 += 1;
                counts.entry((n, durfee_side(&p), p.len())).or_default().1 += 1;
            }
            counts
        })
        .collect();
    for shard in shards {
        for ((n, m, l), (measure, durfee)) in shard {
            rec.check(
                "length-refined",
                measure == durfee,
                || vec![n as i128, m as i128, l as i128],
                || (json!({ "n": n, "m": m, "l": l }), json!(durfee), json!(measure)),
            );
        }
    }
    rec.finish("theorem2", Params { k_max: None, n_max, strategies: None }, started)
}

/// For every `k <= k_max`: `c_k = d_k`, k-measure versus polygon order, and
/// the same refined by number of parts.
pub fn check_theorem_general(k_max: u64, n_max: u64) -> VerificationReport {
    let started = Instant::now();
    let mut rec = Recorder::default();
    for k in Gap::up_to(k_max) {
        let extra = json!({ "k": k.get() });
        let (c, d) = (table_c(k, n_max), table_d(k, n_max));
        compare_tables(&mut rec, &format!("c-equals-d k={k}"), &d, &c, extra.clone());
        let (a, order) = (table_a(k, n_max), table_polygon_order(k, n_max));
        compare_tables(&mut rec, &format!("measure-equals-polygon-order k={k}"), &order, &a, extra.clone());
        let by_length = table_by_length(k, n_max);
        compare_tables(
            &mut rec,
            &format!("length-refined k={k}"),
            &by_length.polygon,
            &by_length.measure,
            extra,
        );
    }
    rec.finish("theorem-general", Params { k_max: Some(k_max), n_max, strategies: None }, started)
}

/// Signed excess versus distinct odd parts, by series and by enumeration.
pub fn check_theorem_3(n_max: u64) -> VerificationReport {
    let started = Instant::now();
    let mut rec = Recorder::default();
    let excess = signed_excess(n_max);
    let series = distinct_odd_count(n_max);
    let direct = distinct_odd_count_direct(n_max);
    for n in 0..=n_max as usize {
        rec.check(
            "excess-equals-series",
            excess[n] == series[n],
            || vec![n as i128],
            || (json!({ "n": n }), json!(series[n]), json!(excess[n])),
        );
        rec.check(
            "excess-equals-direct",
            excess[n] == direct[n] as i128,
            || vec![n as i128],
            || (json!({ "n": n }), json!(direct[n]), json!(excess[n])),
        );
        rec.check(
            "series-equals-direct",
            series[n] == direct[n] as i128,
            || vec![n as i128],
            || (json!({ "n": n }), json!(direct[n]), json!(series[n])),
        );
    }
    rec.finish("theorem3", Params { k_max: None, n_max, strategies: None }, started)
}

/// `k = 1`: at least `m` distinct part values versus the `D_{1,m}`
/// thresholds, plus the two worked instances spelled out with literal
/// thresholds.
pub fn check_k1_corollaries(n_max: u64) -> VerificationReport {
    let started = Instant::now();
    let mut rec = Recorder::default();
    let one = gap(1);
    // (n, m) -> (distinct side, threshold side)
    let shards: Vec<Vec<(u64, usize, u128, u128)>> = (0..=n_max)
        .into_par_iter()
        .map(|n| {
            let top = order_bound(n, one);
            let mut distinct = vec![0u128; top + 1];
            let mut thresholds = vec![0u128; top + 1];
            for p in enumerate_partitions(n) {
                let dv = p.distinct_values();
                for m in 1..=top {
                    distinct[m] += u128::from(dv >= m);
                    thresholds[m] += u128::from(contains_km_polygon(&p, one, m));
                }
            }
            (1..=top).map(|m| (n, m, distinct[m], thresholds[m])).collect()
        })
        .collect();
    for (n, m, distinct, thresholds) in shards.into_iter().flatten() {
        rec.check(
            &format!("distinct-parts m={m}"),
            distinct == thresholds,
            || vec![n as i128],
            || (json!({ "n": n, "m": m }), json!(thresholds), json!(distinct)),
        );
    }

    let worked: Vec<(u64, u128, u128, u128, u128)> = (0..=n_max)
        .into_par_iter()
        .map(|n| {
            let (mut d7, mut t7, mut d6, mut t6) = (0, 0, 0, 0);
            for p in enumerate_partitions(n) {
                let dv = p.distinct_values();
                d7 += u128::from(dv >= 7);
                t7 += u128::from(p.count_at_least(4) >= 7);
                d6 += u128::from(dv >= 6);
                t6 += u128::from(p.count_at_least(4) >= 3 && p.count_at_least(3) >= 6);
            }
            (n, d7, t7, d6, t6)
        })
        .collect();
    for (n, d7, t7, d6, t6) in worked {
        rec.check(
            "worked-example m=7 (7 parts >= 4)",
            d7 == t7,
            || vec![n as i128],
            || (json!({ "n": n, "m": 7 }), json!(t7), json!(d7)),
        );
        rec.check(
            "worked-example m=6 (3 parts >= 4, 3 more >= 3)",
            d6 == t6,
            || vec![n as i128],
            || (json!({ "n": n, "m": 6 }), json!(t6), json!(d6)),
        );
    }
    rec.finish("k1-corollaries", Params { k_max: Some(1), n_max, strategies: None }, started)
}

/// Polygon order at `k = 2` versus Durfee side, partition by partition.
pub fn check_remark_9(n_max: u64) -> VerificationReport {
    let started = Instant::now();
    let two = gap(2);
    let shards: Vec<Recorder> = (0..=n_max)
        .into_par_iter()
        .map(|n| {
            let mut rec = Recorder::default();
            for p in enumerate_partitions(n) {
                let (order, side) = (durfee_polygon_order(&p, two), durfee_side(&p));
                rec.check(
                    "polygon-order-equals-durfee-side",
                    order == side,
                    || partition_key(n, &[], &p),
                    || (json!({ "partition": p }), json!(side), json!(order)),
                );
            }
            rec
        })
        .collect();
    let mut rec = Recorder::default();
    shards.into_iter().for_each(|r| rec.absorb(r));
    rec.finish("remark9", Params { k_max: Some(2), n_max, strategies: None }, started)
}

/// Greedy k-measure versus the longest-chain dynamic program.
pub fn check_measure_oracle(k_max: u64, n_max: u64) -> VerificationReport {
    let started = Instant::now();
    let shards: Vec<Recorder> = (0..=n_max)
        .into_par_iter()
        .map(|n| {
            let mut rec = Recorder::default();
            for p in enumerate_partitions(n) {
                for k in Gap::up_to(k_max) {
                    let (greedy, dp) = (k_measure(&p, k), k_measure_oracle(&p, k));
                    rec.check(
                        &format!("greedy-equals-dp k={k}"),
                        greedy == dp,
                        || partition_key(n, &[], &p),
                        || (json!({ "partition": p, "k": k }), json!(dp), json!(greedy)),
                    );
                }
            }
            rec
        })
        .collect();
    let mut rec = Recorder::default();
    shards.into_iter().for_each(|r| rec.absorb(r));
    rec.finish("measure-oracle", Params { k_max: Some(k_max), n_max, strategies: None }, started)
}

/// Enumerated Durfee counts versus `q^{m^2} / (q;q)_m^2` for `m <= m_max`.
pub fn check_durfee_gf(m_max: usize, n_max: u64) -> VerificationReport {
    let started = Instant::now();
    let mut rec = Recorder::default();
    let table = table_b_durfee(n_max);
    for m in 0..=m_max {
        let series = durfee_gf_oracle(m, n_max);
        for n in 0..=n_max {
            let (counted, predicted) = (table.get(n, m), series[n as usize]);
            rec.check(
                &format!("durfee-gf m={m}"),
                counted as i128 == predicted,
                || vec![n as i128],
                || (json!({ "n": n, "m": m }), json!(predicted), json!(counted)),
            );
        }
    }
    rec.finish("durfee-gf", Params { k_max: Some(m_max as u64), n_max, strategies: None }, started)
}

/// Sub-property names used by [`strategy_search`].
pub mod property {
    pub const PHI_CODOMAIN: &str = "phi-codomain";
    pub const PSI_CODOMAIN: &str = "psi-codomain";
    pub const INJECTIVE: &str = "phi-injective";
    pub const PSI_AFTER_PHI: &str = "psi-phi-identity";
    pub const PHI_AFTER_PSI: &str = "phi-psi-identity";

    pub const ALL: [&str; 5] = [PHI_CODOMAIN, PSI_CODOMAIN, INJECTIVE, PSI_AFTER_PHI, PHI_AFTER_PSI];

    /// Sub-check name for one strategy, gap and order.
    pub fn sub_check(
        strategy: crate::bijection::SelectionStrategy,
        k: u64,
        m: usize,
        property: &str,
    ) -> String {
        format!("{strategy} k={k} m={m} {property}")
    }
}

fn search_one_n(n: u64, k_max: u64, strategies: &[SelectionStrategy]) -> Recorder {
    use property::*;
    let mut rec = Recorder::default();
    let all: Vec<Partition> = enumerate_partitions(n).collect();
    for k in Gap::up_to(k_max) {
        let kk = k.get();
        for m in 1..=order_bound(n, k) {
            let in_c: Vec<&Partition> = all.iter().filter(|p| k_measure(p, k) >= m).collect();
            let in_d: Vec<&Partition> = all.iter().filter(|p| contains_km_polygon(p, k, m)).collect();
            for &strategy in strategies {
                let name = |prop: &str| sub_check(strategy, kk, m, prop);
                let inputs = |p: &Partition| json!({ "k": kk, "m": m, "n": n, "strategy": strategy, "partition": p });

                let mut preimages: HashMap<Partition, Vec<&Partition>> = HashMap::new();
                for &p in &in_c {
                    let image = phi(p, k, m, strategy).expect("membership checked");
                    let ok = contains_km_polygon(&image, k, m)
                        && image.weight() == p.weight()
                        && image.len() == p.len();
                    rec.check(
                        &name(PHI_CODOMAIN),
                        ok,
                        || partition_key(n, &[], p),
                        || (inputs(p), json!("image in D with equal weight and length"), json!(image)),
                    );
                    let back = psi(&image, k, m, strategy).expect("image lies in D");
                    rec.check(
                        &name(PSI_AFTER_PHI),
                        back == *p,
                        || partition_key(n, &[], p),
                        || (inputs(p), json!(p), json!({ "phi": image, "psi_of_phi": back })),
                    );
                    preimages.entry(image).or_default().push(p);
                }
                for (image, sources) in &preimages {
                    rec.check(
                        &name(INJECTIVE),
                        sources.len() == 1,
                        || partition_key(n, &[], image),
                        || {
                            let mut sorted: Vec<&Partition> = sources.clone();
                            sorted.sort();
                            (
                                json!({ "k": kk, "m": m, "n": n, "strategy": strategy, "partitions": sorted }),
                                json!("distinct images"),
                                json!({ "common_image": image }),
                            )
                        },
                    );
                }

                for &q in &in_d {
                    let pre = psi(q, k, m, strategy).expect("membership checked");
                    let in_c_ok = k_measure(&pre, k) >= m;
                    let ok = in_c_ok && pre.weight() == q.weight() && pre.len() == q.len();
                    rec.check(
                        &name(PSI_CODOMAIN),
                        ok,
                        || partition_key(n, &[], q),
                        || (inputs(q), json!("image in C with equal weight and length"), json!(pre)),
                    );
                    let forward = if in_c_ok { Some(phi(&pre, k, m, strategy).expect("in C")) } else { None };
                    rec.check(
                        &name(PHI_AFTER_PSI),
                        forward.as_ref() == Some(q),
                        || partition_key(n, &[], q),
                        || {
                            let actual = match &forward {
                                Some(f) => json!({ "psi": pre, "phi_of_psi": f }),
                                None => json!({ "psi": pre, "phi_of_psi": "undefined: psi image not in C" }),
                            };
                            (inputs(q), json!(q), actual)
                        },
                    );
                }
            }
        }
    }
    rec
}

/// Exercises `phi`/`psi` under each strategy for every `k <= k_max`,
/// `1 <= m`, `n <= n_max`. Failures here are findings about the maps, not
/// about the counting identities.
pub fn strategy_search(k_max: u64, n_max: u64, strategies: &[SelectionStrategy]) -> VerificationReport {
    let started = Instant::now();
    let shards: Vec<Recorder> = (0..=n_max)
        .into_par_iter()
        .map(|n| search_one_n(n, k_max, strategies))
        .collect();
    let mut rec = Recorder::default();
    shards.into_iter().for_each(|r| rec.absorb(r));
    rec.finish(
        "strategy-search",
        Params { k_max: Some(k_max), n_max, strategies: Some(strategies.to_vec()) },
        started,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theorem_1_small() {
        let r = check_theorem_1(5);
        assert!(r.passed());
        assert!(r.checks_run > 0);
        let r0 = check_theorem_1(0);
        assert!(r0.passed());
        assert_eq!(r0.checks_run, 1);
    }

    #[test]
    fn theorem_2_small() {
        assert!(check_theorem_2(5).passed());
        assert!(check_theorem_2(0).passed());
    }

    #[test]
    fn theorem_3_small() {
        let r = check_theorem_3(2);
        assert!(r.passed());
        assert_eq!(r.checks_run, 9);
    }

    #[test]
    fn general_k2_passes_k1_fails() {
        let r = check_theorem_general(2, 12);
        assert_eq!(r.sub_check("c-equals-d k=2").unwrap().status, Status::Pass);
        let k1 = r.sub_check("c-equals-d k=1").unwrap();
        assert_eq!(k1.status, Status::Fail);
        // smallest witness: n=4, m=2, distinct parts 2 vs thresholds 3
        let first = r.counterexamples_for("c-equals-d k=1").next().unwrap();
        assert_eq!(first.inputs, json!({ "n": 4, "m": 2, "k": 1 }));
        assert_eq!((first.expected.clone(), first.actual.clone()), (json!(3), json!(2)));
    }

    #[test]
    fn k1_spot_values() {
        let (c, d) = (table_c(gap(1), 5), table_d(gap(1), 5));
        assert_eq!((c.get(5, 2), d.get(5, 2)), (5, 5));
        // (2,2) meets the thresholds without two distinct parts
        assert_eq!((c.get(4, 2), d.get(4, 2)), (2, 3));
    }

    #[test]
    fn report_status_matches_counterexamples() {
        for r in [check_theorem_general(3, 10), check_k1_corollaries(10), strategy_search(2, 9, &SelectionStrategy::ALL)] {
            assert_eq!(r.passed(), r.counterexamples.is_empty());
            let failing: u64 = r.sub_checks.iter().map(|s| s.failures).sum();
            assert_eq!(failing == 0, r.passed());
            for s in &r.sub_checks {
                let listed = r.counterexamples_for(&s.name).count();
                assert!(listed <= COUNTEREXAMPLE_CAP);
                assert_eq!(listed == 0, s.failures == 0, "{}", s.name);
            }
        }
    }

    #[test]
    fn reports_are_deterministic() {
        let a = strategy_search(3, 10, &SelectionStrategy::ALL).without_timing().to_json();
        let b = strategy_search(3, 10, &SelectionStrategy::ALL).without_timing().to_json();
        assert_eq!(a, b);
    }

    #[test]
    fn order_one_always_round_trips() {
        let r = strategy_search(4, 12, &SelectionStrategy::ALL);
        for s in SelectionStrategy::ALL {
            for k in 1..=4 {
                for prop in property::ALL {
                    let name = property::sub_check(s, k, 1, prop);
                    assert_eq!(r.sub_check(&name).unwrap().status, Status::Pass, "{name}");
                }
            }
        }
    }

    #[test]
    fn greedy_top_collision_recorded() {
        let r = strategy_search(2, 11, &[SelectionStrategy::GreedyTop]);
        let name = property::sub_check(SelectionStrategy::GreedyTop, 2, 2, property::INJECTIVE);
        assert_eq!(r.sub_check(&name).unwrap().status, Status::Fail);
        let first = r.counterexamples_for(&name).next().unwrap();
        assert_eq!(first.inputs["n"], 8);
        assert!(r.counterexamples_for(&name).any(|c| {
            c.inputs["partitions"] == json!([[5, 5, 1], [6, 3, 2]]) && c.actual["common_image"] == json!([5, 4, 2])
        }));
    }

    #[test]
    fn worked_examples_are_named() {
        let r = check_k1_corollaries(30);
        assert!(r.sub_check("worked-example m=7 (7 parts >= 4)").is_some());
        assert!(r.sub_check("worked-example m=6 (3 parts >= 4, 3 more >= 3)").is_some());
        assert_eq!(r.sub_check("distinct-parts m=1").unwrap().status, Status::Pass);
    }

    #[test]
    fn small_property_suites_pass() {
        assert!(check_remark_9(20).passed());
        assert!(check_measure_oracle(5, 15).passed());
        assert!(check_durfee_gf(4, 30).passed());
    }
}
