//! Accounting for internal memory and streamed I/O.
//!
//! The pipeline bills its own working structures (rank indexes, gap
//! buffers, sort scratch, stream buffers) against a [`MemTracker`] so
//! that runs can report and bound peak internal memory. The input text
//! itself is not billed: it plays the role of the externally stored
//! input and is only ever scanned in windows or streamed.
//!
//! [`IoStats`] counts streamed external bytes per traffic class (gap
//! merging, BWT merging, gt bits, sampled ISA records) for the run
//! report and the I/O growth checks.

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

#[derive(Debug, Default)]
struct MemInner {
    current: AtomicU64,
    peak: AtomicU64,
}

/// Shared byte counter with peak tracking.
#[derive(Debug, Clone, Default)]
pub struct MemTracker {
    inner: Arc<MemInner>,
}

impl MemTracker {
    pub fn new() -> Self {
        Self::default()
    }

    /// Registers `bytes` of live allocation and returns a guard that
    /// releases them on drop.
    pub fn grant(&self, bytes: u64) -> MemGuard {
        let cur = self.inner.current.fetch_add(bytes, Ordering::Relaxed) + bytes;
        self.inner.peak.fetch_max(cur, Ordering::Relaxed);
        MemGuard {
            tracker: self.clone(),
            bytes,
        }
    }

    pub fn current(&self) -> u64 {
        self.inner.current.load(Ordering::Relaxed)
    }

    pub fn peak(&self) -> u64 {
        self.inner.peak.load(Ordering::Relaxed)
    }
}

/// RAII release of a [`MemTracker::grant`].
#[derive(Debug)]
pub struct MemGuard {
    tracker: MemTracker,
    bytes: u64,
}

impl MemGuard {
    /// A guard that tracks nothing; placeholder for untracked contexts.
    pub fn empty() -> Self {
        MemGuard {
            tracker: MemTracker::new(),
            bytes: 0,
        }
    }

    /// Grows the guarded amount in place.
    pub fn grow(&mut self, extra: u64) {
        let cur = self
            .tracker
            .inner
            .current
            .fetch_add(extra, Ordering::Relaxed)
            + extra;
        self.tracker.inner.peak.fetch_max(cur, Ordering::Relaxed);
        self.bytes += extra;
    }
}

impl Drop for MemGuard {
    fn drop(&mut self) {
        self.tracker
            .inner
            .current
            .fetch_sub(self.bytes, Ordering::Relaxed);
    }
}

/// Classes of streamed external traffic, reported separately.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IoClass {
    /// Sparse/dense gap array reads and writes during gap accumulation
    /// and doubling merges.
    GapMerge,
    /// Block BWT reads and writes during stream merging.
    BwtMerge,
    /// gt bit vector traffic.
    Gt,
    /// Sampled inverse suffix array traffic.
    Isa,
    /// Internal scratch files (per-block suffix/LCP arrays).
    Scratch,
}

#[derive(Debug, Default)]
struct IoInner {
    gap: AtomicU64,
    bwt: AtomicU64,
    gt: AtomicU64,
    isa: AtomicU64,
    scratch: AtomicU64,
}

/// Shared per-class byte counters for streamed I/O.
#[derive(Debug, Clone, Default)]
pub struct IoStats {
    inner: Arc<IoInner>,
}

impl IoStats {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&self, class: IoClass, bytes: u64) {
        self.counter(class).fetch_add(bytes, Ordering::Relaxed);
    }

    pub fn get(&self, class: IoClass) -> u64 {
        self.counter(class).load(Ordering::Relaxed)
    }

    fn counter(&self, class: IoClass) -> &AtomicU64 {
        match class {
            IoClass::GapMerge => &self.inner.gap,
            IoClass::BwtMerge => &self.inner.bwt,
            IoClass::Gt => &self.inner.gt,
            IoClass::Isa => &self.inner.isa,
            IoClass::Scratch => &self.inner.scratch,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn peak_tracks_maximum_concurrent_grant() {
        let t = MemTracker::new();
        let a = t.grant(100);
        {
            let _b = t.grant(50);
            assert_eq!(t.current(), 150);
        }
        assert_eq!(t.current(), 100);
        assert_eq!(t.peak(), 150);
        drop(a);
        assert_eq!(t.current(), 0);
        assert_eq!(t.peak(), 150);
    }

    #[test]
    fn io_stats_accumulate_per_class() {
        let s = IoStats::new();
        s.add(IoClass::Gt, 5);
        s.add(IoClass::Gt, 7);
        s.add(IoClass::BwtMerge, 3);
        assert_eq!(s.get(IoClass::Gt), 12);
        assert_eq!(s.get(IoClass::BwtMerge), 3);
        assert_eq!(s.get(IoClass::GapMerge), 0);
    }
}
