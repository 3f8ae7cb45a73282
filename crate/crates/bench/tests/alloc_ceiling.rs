use superbraid::closure_trace;
use superbraid_bench::{braid, closed, dense_ceiling, PeakAlloc, WIDTH6};

#[global_allocator]
static ALLOC: PeakAlloc = PeakAlloc::new();

#[test]
fn width6_trace_stays_below_dense_matrix() {
    let beta = braid(WIDTH6);
    let (value, peak) = ALLOC.measure(|| closure_trace(&beta, &closed(2, 2)));
    assert!(!value.unwrap().is_zero());
    let ceiling = dense_ceiling(4, 6);
    assert!(peak < ceiling, "peak {peak} B, ceiling {ceiling} B");
}
