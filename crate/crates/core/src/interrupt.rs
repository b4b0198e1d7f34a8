//! Cooperative cancellation for long scans. A front end sets the flag (for
//! example from a signal handler); scans poll it between candidates and
//! return what they have so far, marked as interrupted.

use std::sync::atomic::{AtomicBool, Ordering};

static STOP: AtomicBool = AtomicBool::new(false);

pub fn request_stop() {
    STOP.store(true, Ordering::SeqCst);
}

pub fn stop_requested() -> bool {
    STOP.load(Ordering::Relaxed)
}

pub fn clear_stop() {
    STOP.store(false, Ordering::SeqCst);
}
