//! Inverse Born series engines (placeholder during bring-up).
