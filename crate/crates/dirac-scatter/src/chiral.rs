//! Chiral-model forward solver (placeholder during bring-up).
