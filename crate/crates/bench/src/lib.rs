//! Workloads shared by the benches, and a heap allocator that records its
//! high-water mark.

use std::alloc::{GlobalAlloc, Layout, System};
use std::sync::atomic::{AtomicUsize, Ordering};

use superbraid::{parse_braid, parse_gauss_document, BraidWord, EvalOptions, GaussDiagram, SuperDim};

/// Width-6, length-12 braid mixing all three letter kinds.
pub const WIDTH6: &str = "N=6 s1 v2 S3 s4 v5 s2 S1 v3 s5 v4 S2 s3";

pub const TREFOIL: &str = "N=2 v1 S1 S1";

pub fn braid(text: &str) -> BraidWord {
    parse_braid(text).expect("workload braid parses")
}

/// The 3.5 diagram from the bundled data directory.
pub fn knot_3_5() -> GaussDiagram {
    parse_gauss_document(include_str!("../../../data/knots/3.5.gauss")).expect("bundled diagram parses")
}

/// Semi-welded, deframed options at `m|n`.
pub fn closed(m: usize, n: usize) -> EvalOptions {
    EvalOptions::new(SuperDim::new(m, n).expect("valid super dimension")).semiwelded(true).deframe(true)
}

/// Bytes a dense `dim^N × dim^N` matrix of machine words would take.
pub fn dense_ceiling(dim: usize, strands: u32) -> usize {
    dim.pow(strands) * dim.pow(strands) * std::mem::size_of::<usize>()
}

/// Wraps the system allocator and tracks live and peak heap bytes.
pub struct PeakAlloc {
    current: AtomicUsize,
    peak: AtomicUsize,
}

impl PeakAlloc {
    pub const fn new() -> Self {
        PeakAlloc { current: AtomicUsize::new(0), peak: AtomicUsize::new(0) }
    }

    /// Peak bytes above the live total while `f` runs.
    pub fn measure<T>(&self, f: impl FnOnce() -> T) -> (T, usize) {
        let base = self.current.load(Ordering::Relaxed);
        self.peak.store(base, Ordering::Relaxed);
        let out = f();
        (out, self.peak.load(Ordering::Relaxed).saturating_sub(base))
    }
}

impl Default for PeakAlloc {
    fn default() -> Self {
        Self::new()
    }
}

unsafe impl GlobalAlloc for PeakAlloc {
    unsafe fn alloc(&self, layout: Layout) -> *mut u8 {
        let p = System.alloc(layout);
        if !p.is_null() {
            let now = self.current.fetch_add(layout.size(), Ordering::Relaxed) + layout.size();
            self.peak.fetch_max(now, Ordering::Relaxed);
        }
        p
    }

    unsafe fn dealloc(&self, ptr: *mut u8, layout: Layout) {
        System.dealloc(ptr, layout);
        self.current.fetch_sub(layout.size(), Ordering::Relaxed);
    }
}
