//! Experiment harness (placeholder during bring-up).
