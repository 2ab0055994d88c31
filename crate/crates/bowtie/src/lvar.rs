//! Monotone shared variables over a join-semilattice.
//!
//! A variable starts at bottom and only ever climbs: a put joins its
//! argument into the current value, and a get waits for the value to
//! pass one of a set of pairwise incompatible thresholds. Because the
//! thresholds exclude each other, at most one of them can ever sit below
//! the current value, so the answer a get unblocks with does not depend
//! on how the writes were ordered. The top element is reserved for
//! conflict: incomparable writes collide there and stay there.
//!
//! Schedules run on virtual threads. An interleaving is an explicit
//! shuffle of the per-thread operation sequences, and the determinism
//! check replays a schedule under every interleaving and demands the
//! same final value, the same answer per get, and the same conflict
//! verdict each time. A thin wrapper at the end exposes the same
//! contract to real threads, with gets that block.

use std::sync::{Condvar, Mutex};

use thiserror::Error;

use crate::order::{build_lattice, FiniteLattice};
use crate::report::Report;

/// Errors from building stores and schedules.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LVarError {
    /// The bound names are added automatically and cannot be values.
    #[error("reserved identifier: {0}")]
    ReservedIdentifier(String),
    /// A name is not an element of the lattice.
    #[error("unknown element: {0}")]
    UnknownElement(String),
    /// Two thresholds in one set fail to join to top.
    #[error("incompatible thresholds: {0}")]
    IncompatibleThresholds(String),
    /// An interleaving is not a shuffle of the schedule's threads.
    #[error("invalid interleaving: {0}")]
    InvalidInterleaving(String),
}

/// A join-semilattice, carried by a full lattice but used only through
/// join, bottom, and top. The join can be overridden to something wrong
/// on purpose; the determinism check must notice.
#[derive(Debug, Clone, PartialEq)]
pub struct JoinSemilattice {
    lattice: FiniteLattice,
    join: Vec<usize>,
}

impl JoinSemilattice {
    /// Wraps a lattice, taking its join as given.
    pub fn new(lattice: FiniteLattice) -> Self {
        let n = lattice.len();
        let mut join = vec![0usize; n * n];
        for a in 0..n {
            for b in 0..n {
                join[a * n + b] = lattice.join(a, b);
            }
        }
        JoinSemilattice { lattice, join }
    }

    /// Replaces the join table pointwise. Only for sabotage in tests:
    /// nothing checks the replacement is associative, commutative, or
    /// even monotone.
    pub fn override_join(mut self, f: impl Fn(usize, usize) -> usize) -> Self {
        let n = self.lattice.len();
        for a in 0..n {
            for b in 0..n {
                let v = f(a, b);
                assert!(v < n, "join lands in the carrier");
                self.join[a * n + b] = v;
            }
        }
        self
    }

    /// The join as currently configured.
    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.lattice.len() + b]
    }

    /// Order according to the underlying lattice.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.lattice.leq(a, b)
    }

    /// Least element, where variables start.
    pub fn bottom(&self) -> usize {
        self.lattice.bottom()
    }

    /// Greatest element, reserved for conflict.
    pub fn top(&self) -> usize {
        self.lattice.top()
    }

    /// Number of elements.
    pub fn len(&self) -> usize {
        self.lattice.len()
    }

    /// Always false; carriers are non-empty.
    pub fn is_empty(&self) -> bool {
        self.lattice.is_empty()
    }

    /// Printable element name.
    pub fn element_name(&self, i: usize) -> &str {
        self.lattice.element_name(i)
    }

    /// Element index by name.
    pub fn element_index(&self, name: &str) -> Result<usize, LVarError> {
        self.lattice
            .element_index(name)
            .map_err(|_| LVarError::UnknownElement(name.to_string()))
    }
}

/// The flat semilattice over the given values: bottom below everything,
/// top above everything, and the values themselves pairwise
/// incomparable. Distinct writes always conflict.
pub fn freely_add_order(values: &[&str]) -> Result<JoinSemilattice, LVarError> {
    assert!(!values.is_empty(), "at least one value");
    for v in values {
        if *v == "bot" || *v == "top" {
            return Err(LVarError::ReservedIdentifier(v.to_string()));
        }
    }
    let mut elements = vec!["bot"];
    elements.extend_from_slice(values);
    elements.push("top");
    let mut pairs = Vec::new();
    for v in values {
        pairs.push(("bot", *v));
        pairs.push((*v, "top"));
    }
    let lattice = build_lattice("free", &elements, &pairs).map_err(|e| match e {
        crate::order::LatticeError::DuplicateElement(d) => LVarError::UnknownElement(d),
        other => LVarError::UnknownElement(other.to_string()),
    })?;
    Ok(JoinSemilattice::new(lattice))
}

/// What a put reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PutOutcome {
    /// The value climbed (or stayed) below top.
    Updated,
    /// The variable is at top; writes still land but signal conflict.
    Conflict,
}

/// What a live get reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GetOutcome {
    /// The unique threshold that the current value passed.
    Threshold(usize),
    /// The variable is at top.
    Conflict,
    /// No threshold passed yet.
    Pending,
}

/// A set of pairwise incompatible thresholds: any two distinct members
/// join to top, so at most one can ever be below the current value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThresholdSet {
    elements: Vec<usize>,
}

impl ThresholdSet {
    /// Validates pairwise incompatibility against a semilattice.
    pub fn new(lat: &JoinSemilattice, elements: &[usize]) -> Result<Self, LVarError> {
        assert!(!elements.is_empty(), "at least one threshold");
        for (i, &a) in elements.iter().enumerate() {
            assert!(a < lat.len(), "threshold in the carrier");
            for &b in &elements[i + 1..] {
                if a != b && lat.join(a, b) != lat.top() {
                    return Err(LVarError::IncompatibleThresholds(format!(
                        "{} and {} join to {}",
                        lat.element_name(a),
                        lat.element_name(b),
                        lat.element_name(lat.join(a, b))
                    )));
                }
            }
        }
        Ok(ThresholdSet {
            elements: elements.to_vec(),
        })
    }

    /// The thresholds, in declared order.
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }
}

/// A monotone variable: current value plus a sticky conflict flag.
#[derive(Debug, Clone)]
pub struct LVarStore {
    lattice: JoinSemilattice,
    current: usize,
    conflicted: bool,
}

impl LVarStore {
    /// A fresh variable at bottom.
    pub fn new(lattice: JoinSemilattice) -> Self {
        let current = lattice.bottom();
        LVarStore {
            lattice,
            current,
            conflicted: false,
        }
    }

    /// The current value.
    pub fn current(&self) -> usize {
        self.current
    }

    /// Has the variable ever hit top?
    pub fn conflicted(&self) -> bool {
        self.conflicted
    }

    /// The semilattice the variable lives in.
    pub fn lattice(&self) -> &JoinSemilattice {
        &self.lattice
    }

    /// Joins a value in. Reaching (or already sitting at) top reports a
    /// conflict; the variable stays usable and stays at top.
    pub fn put(&mut self, v: usize) -> Result<PutOutcome, LVarError> {
        if v >= self.lattice.len() {
            return Err(LVarError::UnknownElement(format!("index {v}")));
        }
        self.current = self.lattice.join(self.current, v);
        if self.current == self.lattice.top() {
            self.conflicted = true;
            Ok(PutOutcome::Conflict)
        } else {
            Ok(PutOutcome::Updated)
        }
    }

    /// Asks whether any threshold has been passed. At top the answer is
    /// conflict no matter the thresholds; otherwise at most one
    /// threshold can be below the current value, and that one is the
    /// answer.
    pub fn get(&self, thresholds: &ThresholdSet) -> GetOutcome {
        if self.current == self.lattice.top() {
            return GetOutcome::Conflict;
        }
        for &t in thresholds.elements() {
            if self.lattice.leq(t, self.current) {
                return GetOutcome::Threshold(t);
            }
        }
        GetOutcome::Pending
    }
}

/// One operation of a virtual thread.
#[derive(Debug, Clone, PartialEq)]
pub enum Op {
    /// Join a value into the variable.
    Put(usize),
    /// Wait for one of these thresholds.
    Get(ThresholdSet),
}

/// Per-thread operation sequences sharing one variable.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Schedule {
    /// One operation list per thread.
    pub threads: Vec<Vec<Op>>,
}

impl Schedule {
    /// Total operations across threads.
    pub fn op_count(&self) -> usize {
        self.threads.iter().map(Vec::len).sum()
    }

    /// Every shuffle of the threads' operations, as sequences of thread
    /// indices. The count is multinomial in the per-thread lengths.
    pub fn all_interleavings(&self) -> Vec<Vec<usize>> {
        let mut remaining: Vec<usize> = self.threads.iter().map(Vec::len).collect();
        let mut out = Vec::new();
        let mut prefix = Vec::with_capacity(self.op_count());
        fn walk(
            remaining: &mut Vec<usize>,
            prefix: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
        ) {
            if remaining.iter().all(|&r| r == 0) {
                out.push(prefix.clone());
                return;
            }
            for t in 0..remaining.len() {
                if remaining[t] > 0 {
                    remaining[t] -= 1;
                    prefix.push(t);
                    walk(remaining, prefix, out);
                    prefix.pop();
                    remaining[t] += 1;
                }
            }
        }
        walk(&mut remaining, &mut prefix, &mut out);
        out
    }
}

/// How one get ended up in a finished run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum GetRecord {
    /// Unblocked at this threshold.
    Threshold(usize),
    /// Saw the variable at top.
    Conflict,
    /// Still pending after every put had run.
    Stuck,
}

/// The observable outcome of one simulated run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trace {
    /// Where the variable ended.
    pub final_value: usize,
    /// Its printable name.
    pub final_name: String,
    /// Did any put report conflict?
    pub conflicted: bool,
    /// Per-get outcomes, keyed by thread and position within it.
    pub gets: Vec<(usize, usize, GetRecord)>,
    /// True when some get never unblocked.
    pub stuck: bool,
}

/// Replays a schedule under one interleaving.
///
/// Each entry of the interleaving gives a thread a turn. A turn runs the
/// thread's next operation, except that a get whose thresholds have not
/// been passed blocks: the turn is spent retrying it, and the thread
/// does not advance. After the last turn the run drains: every thread
/// keeps running in program order, retrying gets, until nothing moves.
/// Gets that never unblock are recorded stuck, along with any operations
/// trapped behind them.
pub fn simulate(
    lat: &JoinSemilattice,
    schedule: &Schedule,
    interleaving: &[usize],
) -> Result<Trace, LVarError> {
    let mut counts: Vec<usize> = schedule.threads.iter().map(Vec::len).collect();
    for &t in interleaving {
        if t >= counts.len() || counts[t] == 0 {
            return Err(LVarError::InvalidInterleaving(format!(
                "thread {t} has no turn left"
            )));
        }
        counts[t] -= 1;
    }
    if counts.iter().any(|&c| c > 0) {
        return Err(LVarError::InvalidInterleaving(
            "some operations never get a turn".to_string(),
        ));
    }

    let mut store = LVarStore::new(lat.clone());
    let mut pc = vec![0usize; schedule.threads.len()];
    let mut gets: Vec<(usize, usize, GetRecord)> = Vec::new();

    // One turn of thread `t`: true when the thread advanced.
    let step = |t: usize,
                pc: &mut Vec<usize>,
                store: &mut LVarStore,
                gets: &mut Vec<(usize, usize, GetRecord)>|
     -> Result<bool, LVarError> {
        match &schedule.threads[t][pc[t]] {
            Op::Put(v) => {
                store.put(*v)?;
                pc[t] += 1;
                Ok(true)
            }
            Op::Get(ts) => match store.get(ts) {
                GetOutcome::Pending => Ok(false),
                GetOutcome::Threshold(x) => {
                    gets.push((t, pc[t], GetRecord::Threshold(x)));
                    pc[t] += 1;
                    Ok(true)
                }
                GetOutcome::Conflict => {
                    gets.push((t, pc[t], GetRecord::Conflict));
                    pc[t] += 1;
                    Ok(true)
                }
            },
        }
    };

    for &t in interleaving {
        if pc[t] < schedule.threads[t].len() {
            step(t, &mut pc, &mut store, &mut gets)?;
        }
    }
    // Drain: blocked threads catch up as later puts land, until a full
    // pass moves nothing.
    loop {
        let mut progress = false;
        for t in 0..schedule.threads.len() {
            while pc[t] < schedule.threads[t].len() {
                if step(t, &mut pc, &mut store, &mut gets)? {
                    progress = true;
                } else {
                    break;
                }
            }
        }
        if !progress {
            break;
        }
    }
    // Whatever never ran is stuck behind a pending get.
    let mut stuck = false;
    for t in 0..schedule.threads.len() {
        for at in pc[t]..schedule.threads[t].len() {
            if let Op::Get(_) = schedule.threads[t][at] {
                gets.push((t, at, GetRecord::Stuck));
                stuck = true;
            }
        }
    }
    gets.sort();
    Ok(Trace {
        final_value: store.current(),
        final_name: lat.element_name(store.current()).to_string(),
        conflicted: store.conflicted(),
        gets,
        stuck,
    })
}

/// Replays a schedule under every interleaving and checks that the
/// observable outcome never changes: same final value, same answer for
/// every get, same conflict verdict.
pub fn determinism_check(lat: &JoinSemilattice, schedule: &Schedule) -> Report {
    let mut report = Report::new("lvar determinism");
    let interleavings = schedule.all_interleavings();
    report.note("operations", &schedule.op_count().to_string());
    report.note("interleavings", &interleavings.len().to_string());
    let mut first: Option<(Vec<usize>, Trace)> = None;
    let mut value_bad = None;
    let mut gets_bad = None;
    let mut conflict_bad = None;
    for order in interleavings {
        let trace = simulate(lat, schedule, &order)
            .expect("generated interleavings are valid shuffles");
        match &first {
            None => first = Some((order, trace)),
            Some((base_order, base)) => {
                let name = |o: &[usize]| {
                    o.iter()
                        .map(ToString::to_string)
                        .collect::<Vec<_>>()
                        .join("")
                };
                if value_bad.is_none() && trace.final_value != base.final_value {
                    value_bad = Some(format!(
                        "interleaving {} ends at {}, interleaving {} at {}",
                        name(base_order),
                        base.final_name,
                        name(&order),
                        trace.final_name
                    ));
                }
                if gets_bad.is_none() && trace.gets != base.gets {
                    gets_bad = Some(format!(
                        "get results differ between interleavings {} and {}",
                        name(base_order),
                        name(&order)
                    ));
                }
                if conflict_bad.is_none() && trace.conflicted != base.conflicted {
                    conflict_bad = Some(format!(
                        "conflict verdict differs between interleavings {} and {}",
                        name(base_order),
                        name(&order)
                    ));
                }
            }
        }
    }
    if let Some((_, base)) = &first {
        report.note("final-value", &base.final_name);
        if base.stuck {
            report.note("stuck-gets", "present in every interleaving");
        }
    }
    report.check(
        "final-value-agrees",
        value_bad.is_none(),
        value_bad.as_deref().unwrap_or(""),
    );
    report.check(
        "get-results-agree",
        gets_bad.is_none(),
        gets_bad.as_deref().unwrap_or(""),
    );
    report.check(
        "conflict-verdict-agrees",
        conflict_bad.is_none(),
        conflict_bad.as_deref().unwrap_or(""),
    );
    report
}

/// The same variable behind a mutex, for real threads. Puts are atomic
/// read-join-write; gets block until an answer exists.
pub struct SharedLVar {
    state: Mutex<LVarStore>,
    ready: Condvar,
}

impl SharedLVar {
    /// A fresh shared variable at bottom.
    pub fn new(lattice: JoinSemilattice) -> Self {
        SharedLVar {
            state: Mutex::new(LVarStore::new(lattice)),
            ready: Condvar::new(),
        }
    }

    /// Joins a value in and wakes every waiting get.
    pub fn put(&self, v: usize) -> Result<PutOutcome, LVarError> {
        let mut store = self.state.lock().unwrap();
        let out = store.put(v)?;
        self.ready.notify_all();
        Ok(out)
    }

    /// Blocks until a threshold is passed or the variable conflicts.
    /// Never returns [`GetOutcome::Pending`].
    pub fn get(&self, thresholds: &ThresholdSet) -> GetOutcome {
        let mut store = self.state.lock().unwrap();
        loop {
            match store.get(thresholds) {
                GetOutcome::Pending => store = self.ready.wait(store).unwrap(),
                done => return done,
            }
        }
    }

    /// A snapshot of the current value.
    pub fn current(&self) -> usize {
        self.state.lock().unwrap().current()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn digits() -> JoinSemilattice {
        let names: Vec<String> = (0..10).map(|d| d.to_string()).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        freely_add_order(&refs).unwrap()
    }

    #[test]
    fn the_free_order_is_flat() {
        let lat = digits();
        assert_eq!(lat.len(), 12);
        let three = lat.element_index("3").unwrap();
        let five = lat.element_index("5").unwrap();
        let seven = lat.element_index("7").unwrap();
        assert_eq!(lat.join(three, five), lat.top());
        assert_eq!(lat.join(three, three), three);
        assert_eq!(lat.join(lat.bottom(), seven), seven);
    }

    #[test]
    fn reserved_names_are_rejected() {
        assert_eq!(
            freely_add_order(&["a", "top"]).err(),
            Some(LVarError::ReservedIdentifier("top".to_string()))
        );
        assert!(matches!(
            freely_add_order(&["bot"]),
            Err(LVarError::ReservedIdentifier(_))
        ));
    }

    #[test]
    fn puts_climb_and_conflict_at_top() {
        let lat = digits();
        let mut store = LVarStore::new(lat.clone());
        let three = lat.element_index("3").unwrap();
        let five = lat.element_index("5").unwrap();
        assert_eq!(store.put(three).unwrap(), PutOutcome::Updated);
        assert_eq!(store.put(three).unwrap(), PutOutcome::Updated);
        assert_eq!(store.current(), three);
        assert!(!store.conflicted());
        assert_eq!(store.put(five).unwrap(), PutOutcome::Conflict);
        assert!(store.conflicted());
        // The variable stays usable and absorbed at top.
        assert_eq!(store.put(three).unwrap(), PutOutcome::Conflict);
        assert_eq!(store.current(), lat.top());
        assert!(matches!(store.put(99), Err(LVarError::UnknownElement(_))));
    }

    #[test]
    fn gets_answer_with_the_unique_passed_threshold() {
        let lat = digits();
        let three = lat.element_index("3").unwrap();
        let five = lat.element_index("5").unwrap();
        let ts = ThresholdSet::new(&lat, &[three, five]).unwrap();
        let mut store = LVarStore::new(lat.clone());
        assert_eq!(store.get(&ts), GetOutcome::Pending);
        store.put(three).unwrap();
        assert_eq!(store.get(&ts), GetOutcome::Threshold(three));
        store.put(five).unwrap();
        assert_eq!(store.get(&ts), GetOutcome::Conflict);
    }

    #[test]
    fn comparable_thresholds_are_rejected() {
        let lat = digits();
        let three = lat.element_index("3").unwrap();
        assert!(matches!(
            ThresholdSet::new(&lat, &[lat.bottom(), three]),
            Err(LVarError::IncompatibleThresholds(_))
        ));
    }

    #[test]
    fn interleavings_are_validated() {
        let lat = digits();
        let three = lat.element_index("3").unwrap();
        let schedule = Schedule {
            threads: vec![vec![Op::Put(three)], vec![Op::Put(three)]],
        };
        assert!(simulate(&lat, &schedule, &[0, 0]).is_err());
        assert!(simulate(&lat, &schedule, &[0]).is_err());
        assert!(simulate(&lat, &schedule, &[2, 0]).is_err());
        assert!(simulate(&lat, &schedule, &[1, 0]).is_ok());
    }

    #[test]
    fn three_single_put_threads_agree_everywhere() {
        // All six orders of three incomparable writes conflict at top.
        let lat = digits();
        let put = |d: &str| vec![Op::Put(lat.element_index(d).unwrap())];
        let schedule = Schedule {
            threads: vec![put("1"), put("2"), put("3")],
        };
        assert_eq!(schedule.all_interleavings().len(), 6);
        let report = determinism_check(&lat, &schedule);
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn a_blocked_get_unblocks_when_the_put_lands() {
        let lat = digits();
        let three = lat.element_index("3").unwrap();
        let ts = ThresholdSet::new(&lat, &[three]).unwrap();
        let schedule = Schedule {
            threads: vec![vec![Op::Get(ts)], vec![Op::Put(three)]],
        };
        // Get first: it blocks, spends its turn, and drains afterwards.
        let early = simulate(&lat, &schedule, &[0, 1]).unwrap();
        let late = simulate(&lat, &schedule, &[1, 0]).unwrap();
        assert_eq!(early, late);
        assert_eq!(early.gets, vec![(0, 0, GetRecord::Threshold(three))]);
        assert!(!early.stuck);
        let report = determinism_check(&lat, &schedule);
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn an_unreachable_threshold_is_stuck_in_every_interleaving() {
        let lat = digits();
        let three = lat.element_index("3").unwrap();
        let nine = lat.element_index("9").unwrap();
        let ts = ThresholdSet::new(&lat, &[nine]).unwrap();
        let schedule = Schedule {
            threads: vec![vec![Op::Get(ts)], vec![Op::Put(three)]],
        };
        let report = determinism_check(&lat, &schedule);
        assert!(report.passed(), "{report}");
        let trace = simulate(&lat, &schedule, &[0, 1]).unwrap();
        assert_eq!(trace.gets, vec![(0, 0, GetRecord::Stuck)]);
        assert!(trace.stuck);
        assert_eq!(trace.final_value, three);
    }

    #[test]
    fn a_non_associative_join_breaks_determinism_visibly() {
        // Joining anything into 1 sticks at 1: order now matters.
        let lat = digits();
        let one = lat.element_index("1").unwrap();
        let broken = lat.clone().override_join(|a, b| {
            if a == one {
                one
            } else {
                lat.join(a, b)
            }
        });
        let put = |d: &str| vec![Op::Put(broken.element_index(d).unwrap())];
        let schedule = Schedule {
            threads: vec![put("1"), put("2")],
        };
        let report = determinism_check(&broken, &schedule);
        assert!(!report.passed());
        assert_eq!(report.first_failure().unwrap().name, "final-value-agrees");
    }

    #[test]
    fn traces_climb_monotonically() {
        // Replay any prefix of an interleaving: the value never drops.
        let lat = digits();
        let idx = |d: &str| lat.element_index(d).unwrap();
        let schedule = Schedule {
            threads: vec![
                vec![Op::Put(idx("4")), Op::Put(idx("4"))],
                vec![Op::Put(idx("6"))],
            ],
        };
        for order in schedule.all_interleavings() {
            let mut store = LVarStore::new(lat.clone());
            let mut pc = vec![0usize; schedule.threads.len()];
            let mut last = store.current();
            for &t in &order {
                if let Op::Put(v) = schedule.threads[t][pc[t]] {
                    store.put(v).unwrap();
                }
                pc[t] += 1;
                assert!(lat.leq(last, store.current()));
                last = store.current();
            }
        }
    }

    #[test]
    fn replaying_a_trace_is_idempotent() {
        let lat = digits();
        let idx = |d: &str| lat.element_index(d).unwrap();
        let ts = ThresholdSet::new(&lat, &[idx("2")]).unwrap();
        let schedule = Schedule {
            threads: vec![vec![Op::Put(idx("2")), Op::Get(ts)]],
        };
        let a = simulate(&lat, &schedule, &[0, 0]).unwrap();
        let b = simulate(&lat, &schedule, &[0, 0]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn real_threads_see_the_same_contract() {
        let lat = digits();
        let three = lat.element_index("3").unwrap();
        let ts = ThresholdSet::new(&lat, &[three]).unwrap();
        let shared = std::sync::Arc::new(SharedLVar::new(lat));
        let writer = {
            let shared = shared.clone();
            std::thread::spawn(move || shared.put(three).unwrap())
        };
        assert_eq!(shared.get(&ts), GetOutcome::Threshold(three));
        writer.join().unwrap();
        assert_eq!(shared.current(), three);
    }
}
