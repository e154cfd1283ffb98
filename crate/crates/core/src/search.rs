//! Generator-polynomial search for `[n, k, <b, ell>]` codes.
//!
//! Candidates `g = (g_0, g_1, ..., g_{n-k})` with `g_0 = g_{n-k} = 1` are
//! numbered by their interior bits read as an integer with `g_1` most
//! significant, which is lexicographic order on the coefficient vector.
//! Each candidate goes through the weight test, the reversal test, the
//! `H` construction, the syndrome-set check and the Gray-coded scan; the
//! first survivor in enumeration order is returned.

use std::cmp::Ordering as CmpOrdering;
use std::ops::AddAssign;
use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::binmat::ParityColumns;
use crate::bursts::{quick_skip, SyndromeSetBuilder};
use crate::error::{arg_err, Error, Result};
use crate::gf2poly::{reverse_bits, Gf2Poly, MAX_DEGREE};
use crate::scanner::{scan_columns, Verdict};

/// Parameters of an `[n, k, <b, ell>]` burst-correcting code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CodeSpec {
    pub n: usize,
    pub k: usize,
    pub b: usize,
    pub ell: usize,
}

impl CodeSpec {
    pub fn new(n: usize, k: usize, b: usize, ell: usize) -> Result<Self> {
        if k == 0 || k >= n {
            return arg_err(format!("need 1 <= k < n, got n = {n}, k = {k}"));
        }
        if n > MAX_DEGREE + 1 {
            return arg_err(format!("block length {n} exceeds {}", MAX_DEGREE + 1));
        }
        if b == 0 || ell == 0 || ell > b {
            return arg_err(format!("need 1 <= ell <= b, got b = {b}, ell = {ell}"));
        }
        if 2 * b > n - k {
            return Err(Error::Reiger {
                twice_b: 2 * b,
                redundancy: n - k,
            });
        }
        Ok(CodeSpec { n, k, b, ell })
    }

    pub fn redundancy(&self) -> usize {
        self.n - self.k
    }

    pub fn rate(&self) -> f64 {
        self.k as f64 / self.n as f64
    }
}

/// Per-stage candidate counts.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchCounters {
    pub tested: u64,
    pub pruned_weight: u64,
    pub pruned_reversal: u64,
    pub pruned_collision: u64,
    pub scan_hit: u64,
}

impl AddAssign for SearchCounters {
    fn add_assign(&mut self, o: Self) {
        self.tested += o.tested;
        self.pruned_weight += o.pruned_weight;
        self.pruned_reversal += o.pruned_reversal;
        self.pruned_collision += o.pruned_collision;
        self.scan_hit += o.scan_hit;
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub spec: CodeSpec,
    pub generator: Option<Gf2Poly>,
    pub counters: SearchCounters,
}

/// Why a single candidate was rejected, or that it survived.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CandidateOutcome {
    WeightSkip,
    ReversalSkip,
    Collision(u128),
    ScanHit(crate::scanner::ScanHit),
    Survivor,
}

/// Scratch state for testing candidates of one code shape.
#[derive(Debug, Default)]
pub struct CandidateTester {
    columns: ParityColumns,
    set: SyndromeSetBuilder,
}

impl CandidateTester {
    pub fn new() -> Self {
        Self::default()
    }

    /// Runs the full pruning pipeline on `g`, including the reversal test.
    pub fn test(&mut self, code: &CodeSpec, g: &Gf2Poly) -> CandidateOutcome {
        let nk = code.redundancy();
        debug_assert_eq!(g.degree(), nk);
        if quick_skip(g, nk, code.b) {
            return CandidateOutcome::WeightSkip;
        }
        // Compare coefficient vectors read from g_0: the vector of g is the
        // bit-reversed word, the vector of the reversal is the word itself.
        if reverse_bits(g.bits(), nk + 1) > g.bits() {
            return CandidateOutcome::ReversalSkip;
        }
        self.test_code(code, g)
    }

    /// Builds `H` and `S` and scans, skipping the two quick tests.
    pub fn test_code(&mut self, code: &CodeSpec, g: &Gf2Poly) -> CandidateOutcome {
        let cols = self
            .columns
            .compute(g, code.n, code.k)
            .expect("candidate shape validated by CodeSpec");
        let set = match self.set.build(code, cols) {
            Ok(set) => set,
            Err(c) => return CandidateOutcome::Collision(c.value),
        };
        match scan_columns(cols, code.k, code.b, set) {
            Verdict::Clean => CandidateOutcome::Survivor,
            Verdict::Hit(hit) => CandidateOutcome::ScanHit(hit),
        }
    }
}

/// The candidate with the given enumeration index.
pub fn candidate(nk: usize, index: u128) -> Gf2Poly {
    let m = nk - 1;
    let interior = if m == 0 { 0 } else { reverse_bits(index, m) };
    Gf2Poly::from_bits(1 | (interior << 1) | (1u128 << nk)).expect("nonzero")
}

/// Enumeration index of a generator-shaped polynomial of degree `nk`.
pub fn candidate_index(g: &Gf2Poly) -> u128 {
    let nk = g.degree();
    let m = nk - 1;
    if m == 0 {
        return 0;
    }
    reverse_bits((g.bits() >> 1) & ((1u128 << m) - 1), m)
}

const CHUNK: u128 = 1 << 12;

struct ChunkOutcome {
    survivor: Option<Gf2Poly>,
    counters: SearchCounters,
}

fn run_chunk(
    code: &CodeSpec,
    range: std::ops::Range<u128>,
    chunk_id: usize,
    found: &AtomicUsize,
    tester: &mut CandidateTester,
) -> ChunkOutcome {
    let nk = code.redundancy();
    let mut counters = SearchCounters::default();
    for (i, index) in range.enumerate() {
        // A survivor in an earlier chunk makes this chunk's result irrelevant.
        if i % 256 == 0 && found.load(Ordering::Relaxed) < chunk_id {
            break;
        }
        let g = candidate(nk, index);
        counters.tested += 1;
        match tester.test(code, &g) {
            CandidateOutcome::WeightSkip => counters.pruned_weight += 1,
            CandidateOutcome::ReversalSkip => counters.pruned_reversal += 1,
            CandidateOutcome::Collision(_) => counters.pruned_collision += 1,
            CandidateOutcome::ScanHit(_) => counters.scan_hit += 1,
            CandidateOutcome::Survivor => {
                found.fetch_min(chunk_id, Ordering::Relaxed);
                return ChunkOutcome {
                    survivor: Some(g),
                    counters,
                };
            }
        }
    }
    ChunkOutcome {
        survivor: None,
        counters,
    }
}

/// Runs searches on a fixed number of workers.
///
/// Results, including counters, do not depend on the worker count: the
/// candidate range is cut into fixed-size chunks, each chunk is scanned up
/// to its own first survivor, and chunk results are folded in order.
pub struct Searcher {
    pool: Option<rayon::ThreadPool>,
    workers: usize,
}

impl Searcher {
    pub fn new(workers: usize) -> Result<Self> {
        let workers = workers.max(1);
        let pool = if workers > 1 {
            Some(
                rayon::ThreadPoolBuilder::new()
                    .num_threads(workers)
                    .build()
                    .map_err(|e| Error::Argument(format!("thread pool: {e}")))?,
            )
        } else {
            None
        };
        Ok(Searcher { pool, workers })
    }

    pub fn sequential() -> Self {
        Searcher {
            pool: None,
            workers: 1,
        }
    }

    pub fn workers(&self) -> usize {
        self.workers
    }

    /// Finds the first generator (in enumeration order) of an
    /// `[n, k, <b, ell>]` code, or proves there is none.
    pub fn exists_code(&self, code: &CodeSpec) -> SearchResult {
        let total = 1u128 << (code.redundancy() - 1);
        let chunks = total.div_ceil(CHUNK) as usize;
        let range_of = |c: usize| {
            let lo = c as u128 * CHUNK;
            lo..(lo + CHUNK).min(total)
        };
        let mut counters = SearchCounters::default();
        let found = AtomicUsize::new(usize::MAX);
        let wave = match &self.pool {
            None => 1,
            Some(_) => self.workers * 4,
        };
        let mut next = 0;
        let mut tester = CandidateTester::new();
        while next < chunks {
            let ids: Vec<usize> = (next..(next + wave).min(chunks)).collect();
            next += ids.len();
            let outcomes: Vec<ChunkOutcome> = match &self.pool {
                None => ids
                    .iter()
                    .map(|&c| run_chunk(code, range_of(c), c, &found, &mut tester))
                    .collect(),
                Some(pool) => pool.install(|| {
                    ids.par_iter()
                        .map_init(CandidateTester::new, |t, &c| {
                            run_chunk(code, range_of(c), c, &found, t)
                        })
                        .collect()
                }),
            };
            for o in outcomes {
                counters += o.counters;
                if o.survivor.is_some() {
                    return SearchResult {
                        spec: *code,
                        generator: o.survivor,
                        counters,
                    };
                }
            }
        }
        SearchResult {
            spec: *code,
            generator: None,
            counters,
        }
    }

    /// Largest `k` admitting an `[n, k, <b, ell>]` code, scanning down from
    /// the Reiger ceiling `n - 2b`.
    pub fn max_k(&self, n: usize, b: usize, ell: usize) -> Result<Option<(usize, Gf2Poly)>> {
        if b == 0 || n <= 2 * b {
            return arg_err(format!("need n > 2b, got n = {n}, b = {b}"));
        }
        for k in (1..=n - 2 * b).rev() {
            let code = CodeSpec::new(n, k, b, ell)?;
            if let Some(g) = self.exists_code(&code).generator {
                return Ok(Some((k, g)));
            }
        }
        Ok(None)
    }

    /// For each `ell` in `1..=b`, the best `[g + ell, k_ell, <b, ell>]` code,
    /// and the entry with the highest rate `k_ell / (g + ell)`.
    pub fn best_for_guard(&self, b: usize, guard: usize) -> Result<GuardResult> {
        if b == 0 || guard < 2 * b {
            return arg_err(format!(
                "need guard space g >= 2b, got g = {guard}, b = {b}"
            ));
        }
        let mut per_ell = Vec::with_capacity(b);
        for ell in 1..=b {
            let n = guard + ell;
            let found = self.max_k(n, b, ell)?;
            per_ell.push(EllEntry {
                ell,
                n,
                k: found.map_or(0, |(k, _)| k),
                generator: found.map(|(_, g)| g),
            });
        }
        let best = select_best(&per_ell);
        let cyclic = match best.and_then(|e| e.generator.map(|g| (g, e.n))) {
            Some((g, n)) => g.divides_x_n_plus_1(n)?,
            None => false,
        };
        Ok(GuardResult {
            b,
            g: guard,
            per_ell,
            best,
            cyclic,
        })
    }
}

/// One column of a table row: the best code with AA capability `ell`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EllEntry {
    pub ell: usize,
    pub n: usize,
    /// Zero when no code of any dimension exists.
    pub k: usize,
    pub generator: Option<Gf2Poly>,
}

impl EllEntry {
    pub fn rate(&self) -> f64 {
        self.k as f64 / self.n as f64
    }

    fn cmp_rate(&self, other: &EllEntry) -> CmpOrdering {
        (self.k * other.n).cmp(&(other.k * self.n))
    }
}

/// Highest rate wins; ties go to the smaller `ell`.
fn select_best(entries: &[EllEntry]) -> Option<EllEntry> {
    let mut best: Option<EllEntry> = None;
    for e in entries.iter().filter(|e| e.generator.is_some()) {
        match best {
            Some(b) if e.cmp_rate(&b) != CmpOrdering::Greater => {}
            _ => best = Some(*e),
        }
    }
    best
}

/// Outcome of the search for one `(b, g)` pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GuardResult {
    pub b: usize,
    pub g: usize,
    pub per_ell: Vec<EllEntry>,
    pub best: Option<EllEntry>,
    /// Whether the best generator divides `x^n + 1`.
    pub cyclic: bool,
}

/// Sequential [`Searcher::exists_code`].
pub fn exists_code(code: &CodeSpec) -> Option<Gf2Poly> {
    Searcher::sequential().exists_code(code).generator
}

/// Sequential [`Searcher::max_k`].
pub fn max_k(n: usize, b: usize, ell: usize) -> Result<Option<(usize, Gf2Poly)>> {
    Searcher::sequential().max_k(n, b, ell)
}

/// Sequential [`Searcher::best_for_guard`].
pub fn best_for_guard(b: usize, guard: usize) -> Result<GuardResult> {
    Searcher::sequential().best_for_guard(b, guard)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::verify_burst_correcting;

    #[test]
    fn code_spec_validation() {
        assert!(CodeSpec::new(27, 20, 3, 2).is_ok());
        assert!(matches!(
            CodeSpec::new(27, 22, 3, 2),
            Err(Error::Reiger { .. })
        ));
        assert!(CodeSpec::new(27, 20, 3, 4).is_err());
        assert!(CodeSpec::new(27, 20, 3, 0).is_err());
        assert!(CodeSpec::new(27, 0, 3, 1).is_err());
        assert!(CodeSpec::new(200, 150, 3, 1).is_err());
    }

    #[test]
    fn candidate_numbering() {
        assert_eq!(candidate(4, 0).coeffs(), vec![1, 0, 0, 0, 1]);
        assert_eq!(candidate(4, 1).coeffs(), vec![1, 0, 0, 1, 1]);
        assert_eq!(candidate(4, 4).coeffs(), vec![1, 1, 0, 0, 1]);
        assert_eq!(candidate(4, 7).coeffs(), vec![1, 1, 1, 1, 1]);
        for i in 0..64 {
            assert_eq!(candidate_index(&candidate(7, i)), i);
        }
        // Lexicographic order on coefficient vectors.
        let vecs: Vec<Vec<u8>> = (0..32).map(|i| candidate(6, i).coeffs()).collect();
        assert!(vecs.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn reversal_test_keeps_smaller_vector() {
        let mut t = CandidateTester::new();
        let code = CodeSpec::new(28, 19, 3, 3).unwrap();
        // (1 0 0 0 0 0 1 0 1 1) is smaller than its reversal.
        let g = Gf2Poly::from_exponents(&[9, 8, 6, 0]).unwrap();
        assert_ne!(t.test(&code, &g), CandidateOutcome::ReversalSkip);
        let r = g.reverse(10).unwrap();
        assert_eq!(t.test(&code, &r), CandidateOutcome::ReversalSkip);
    }

    #[test]
    fn small_existence_results() {
        let g = exists_code(&CodeSpec::new(27, 20, 3, 2).unwrap()).unwrap();
        assert!(verify_burst_correcting(&g, &CodeSpec::new(27, 20, 3, 2).unwrap()).unwrap());
        assert_eq!(exists_code(&CodeSpec::new(28, 20, 3, 3).unwrap()), None);
        assert_eq!(exists_code(&CodeSpec::new(26, 20, 3, 1).unwrap()), None);
    }

    #[test]
    fn worker_count_does_not_change_results() {
        let one = Searcher::sequential();
        let four = Searcher::new(4).unwrap();
        for code in [
            CodeSpec::new(27, 20, 3, 2).unwrap(),
            CodeSpec::new(28, 20, 3, 3).unwrap(),
            CodeSpec::new(31, 20, 5, 5).unwrap(),
            CodeSpec::new(40, 23, 6, 3).unwrap(),
        ] {
            assert_eq!(one.exists_code(&code), four.exists_code(&code));
        }
    }

    #[test]
    fn counters_add_up() {
        let r = Searcher::sequential().exists_code(&CodeSpec::new(28, 20, 3, 3).unwrap());
        let c = r.counters;
        assert_eq!(c.tested, 1 << 7);
        assert_eq!(
            c.tested,
            c.pruned_weight + c.pruned_reversal + c.pruned_collision + c.scan_hit
        );
        assert_eq!(c.pruned_weight, 1 << 4);
    }

    #[test]
    fn guard_argument_errors() {
        assert!(best_for_guard(3, 5).is_err());
        assert!(max_k(6, 3, 1).is_err());
    }

    #[test]
    fn best_selection_prefers_rate_then_small_ell() {
        let g = Some(Gf2Poly::from_bits(0b111).unwrap());
        let e = |ell, n, k| EllEntry {
            ell,
            n,
            k,
            generator: g,
        };
        let entries = [e(1, 10, 5), e(2, 11, 6), e(3, 12, 6)];
        assert_eq!(select_best(&entries).unwrap().ell, 2);
        let tied = [e(1, 10, 5), e(2, 12, 6)];
        assert_eq!(select_best(&tied).unwrap().ell, 1);
        let none = [EllEntry {
            ell: 1,
            n: 10,
            k: 0,
            generator: None,
        }];
        assert_eq!(select_best(&none), None);
    }
}
