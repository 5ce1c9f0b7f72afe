//! Anti-chiral-model forward solver (placeholder during bring-up).
